#include "pedom/dimacs.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace pedom {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(line_no, std::string("bad ") + what + " '" + tok + "'");
    return value;
}

double parse_weight(const std::string& tok, int line_no) {
    try {
        size_t pos = 0;
        double w = std::stod(tok, &pos);
        if (pos != tok.size() || !std::isfinite(w))
            throw ParseError(line_no, "bad weight '" + tok + "'");
        return w;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(line_no, "bad weight '" + tok + "'");
    }
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(line_no, "duplicate problem line");
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError(line_no, "expected 'p edge <n> <m>'");
            n = parse_int(toks[2], line_no, "vertex count");
            m = parse_int(toks[3], line_no, "edge count");
            if (n < 0 || m < 0) throw ParseError(line_no, "negative counts in problem line");
            edges.reserve(m);
        } else if (toks[0] == "e") {
            if (n < 0) throw ParseError(line_no, "edge line before problem line");
            if (toks.size() != 3 && toks.size() != 4)
                throw ParseError(line_no, "expected 'e <u> <v> [<weight>]'");
            int u = parse_int(toks[1], line_no, "vertex id");
            int v = parse_int(toks[2], line_no, "vertex id");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
            double w = toks.size() == 4 ? parse_weight(toks[3], line_no) : 1.0;
            edges.push_back({u - 1, v - 1, w});
        } else {
            throw ParseError(line_no, "unknown line type '" + toks[0] + "'");
        }
    }
    if (n < 0) throw ParseError(line_no, "missing problem line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(line_no, "edge count mismatch: header says " + std::to_string(m) +
                                      ", found " + std::to_string(edges.size()));
    try {
        return Graph::from_edges(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

Graph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) {
        out << "e " << e.u + 1 << " " << e.v + 1;
        if (e.w != 1.0) {
            char buf[64];
            auto [p, ec] = std::to_chars(buf, buf + sizeof buf, e.w);
            (void)ec;
            out << " " << std::string_view(buf, p - buf);
        }
        out << "\n";
    }
    return out.str();
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << serialize_graph(g);
}

}  // namespace pedom

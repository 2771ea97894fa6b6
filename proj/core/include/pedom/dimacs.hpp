#pragma once

#include <stdexcept>
#include <string>

#include "pedom/graph.hpp"

namespace pedom {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

/// DIMACS-like format: "c ..." comments, one "p edge <n> <m>" header, then m
/// lines "e <u> <v> [<weight>]" with 1-based vertex ids. Weight defaults to 1.
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);

/// Emits edges sorted by (u, v); weights equal to 1 are omitted, so
/// parse(serialize(g)) reproduces g and serialize is a fixpoint on its output.
std::string serialize_graph(const Graph& g);
void save_graph(const Graph& g, const std::string& path);

}  // namespace pedom

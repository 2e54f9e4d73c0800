#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ncg/graph.hpp"

namespace ncg {

// Edge-list format:
//
//   ncg n=<n>
//   <u> <v> <owner>
//   ...
//
// Edges are written sorted by (min, max) endpoint with the smaller id first,
// so writing a graph read from a canonical file reproduces it byte for byte.

void write_graph(std::ostream& out, const OwnedGraph& g);
std::string to_edge_list(const OwnedGraph& g);

/// Throws ParseError on malformed input and PreconditionError on graph
/// invariant violations (self-loops, duplicate edges, foreign owner).
OwnedGraph read_graph(std::istream& in);
OwnedGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const OwnedGraph& g);

}  // namespace ncg

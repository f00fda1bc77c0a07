#ifndef VCRIT_GRAPH_IO_HPP
#define VCRIT_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

// Brace-delimited adjacency list: "{0: 1 2 3; 1: 0 2 3; 2: 0 1 3; 3: 0 1 2}".
// Every vertex 0..n-1 appears exactly once, in order. An edge listed in only
// one direction is completed symmetrically. Throws std::invalid_argument on
// malformed syntax, vertex index >= n, a self-loop, or duplicate/misordered
// entries.
Graph parse_adjacency_list(std::string_view text);

std::string emit_adjacency_list(const Graph& g);

// graph6, short header form only (n <= 62): header byte 63+n, then the
// upper-triangle edge bits in column-major order packed into 6-bit groups
// offset by 63. Throws std::invalid_argument on a bad header byte, a
// truncated payload, trailing characters, or nonzero padding bits.
Graph parse_graph6(std::string_view line);

std::string emit_graph6(const Graph& g);

enum class GraphFormat { graph6, adjacency };

// One graph per line; blank lines skipped. Format is sniffed per line when
// not forced: lines starting with '{' parse as adjacency lists, the rest as
// graph6.
std::vector<Graph> read_graphs(std::istream& in);
std::vector<Graph> read_graphs(std::istream& in, GraphFormat fmt);
std::vector<Graph> read_graph_file(const std::string& path);
std::vector<Graph> read_graph_file(const std::string& path, GraphFormat fmt);

} // namespace vcrit

#endif

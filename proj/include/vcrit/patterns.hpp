#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

// A named small forbidden graph used in induced-containment checks.
struct Pattern {
    std::string name;
    Graph graph;
};

Graph make_path(int t);
Graph make_cycle(int s);
Graph make_clique(int r);
Graph make_gem();        // P4 plus a vertex adjacent to all four
Graph make_co_p3_p2();   // complement of P3 + P2
Graph make_banner();     // C4 plus a pendant vertex
Graph make_two_p2();     // two disjoint edges
Graph make_p1_plus_k3(); // triangle plus an isolated vertex
Graph make_p2_plus_p1(); // edge plus an isolated vertex

// Accepts "P<t>", "C<s>", "Kn:<r>", "gem", "coP3P2", "2P2", "P1K3", "banner".
Pattern pattern_by_name(const std::string& name);

// First induced occurrence of p in g (as a host vertex set) under the fixed
// ascending search order, or absent.  Backtracking over injective embeddings
// with adjacency/non-adjacency mask pruning.
std::optional<VertexSet> find_induced(const Graph& g, const Graph& p);

// Same, restricted to occurrences containing `anchor`.  This is the
// incremental check used during generation, where everything except the newly
// added vertex is already known pattern-free.
std::optional<VertexSet> find_induced_anchored(const Graph& g, const Graph& p, int anchor);

bool contains_induced(const Graph& g, const Graph& p);
bool is_free(const Graph& g, const std::vector<Pattern>& ps);
bool is_free_anchored(const Graph& g, const std::vector<Pattern>& ps, int anchor);

bool is_p4_free(const Graph& g);

// Part-partition of a complete multipartite graph (equivalently: the
// co-components, when every co-component is independent), absent when g is
// not complete multipartite.  A graph is complete multipartite iff it is
// P2+P1-free.
std::optional<std::vector<VertexSet>> complete_multipartite_parts(const Graph& g);

struct PerfectionReport {
    bool perfect = true;
    VertexSet witness = 0;               // hosts an odd hole (or antihole) when imperfect
    bool witness_in_complement = false;  // true: witness induces an odd antihole
};

// Perfection test by direct odd-hole / odd-antihole search (strong perfect
// graph theorem); supported for n <= 16 only.
PerfectionReport is_perfect_small(const Graph& g);

} // namespace vcrit

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcrit/graph.hpp"
#include "vcrit/patterns.hpp"

namespace vcrit {

// Two disjoint nonempty sets X, Y that are anticomplete to each other, with
// chi(G[X]) <= chi(G[Y]) and Y complete to N(X).  No vertex-critical graph
// contains such a pair.
struct DominatedPair {
    VertexSet x = 0;
    VertexSet y = 0;
};

// Verdict and witnesses of a full k-vertex-criticality audit of one graph.
struct CriticalityReport {
    int k = 0;
    int chi = 0;
    bool is_vertex_critical = false;
    std::optional<int> failing_vertex;  // a v with chi(G-v) = chi(G), when chi = k but not critical
    std::optional<VertexSet> clique_cutset;
    std::optional<std::pair<int, int>> comparable_pair;
    std::optional<DominatedPair> dominated_pair;
    int dominated_bound = 0;  // subset-size bound the dominated-pair search used
};

// chi(G) = k and chi(G-v) < k for every vertex v.  When audit_structure is
// set (the default), the report also carries the clique-cutset, comparable-
// pair, and dominated-pair findings; all three must be absent on a
// vertex-critical graph.
CriticalityReport is_k_vertex_critical(const Graph& g, int k, bool audit_structure = true);

// chi(G) = k and removing any single edge drops the chromatic number.
bool is_k_edge_critical(const Graph& g, int k);

// A clique whose removal disconnects g, if any (exhaustive scan over cliques
// in ascending subset order; intended for small graphs).  g must be connected.
std::optional<VertexSet> find_clique_cutset(const Graph& g);

// Nonadjacent u < v with N(u) contained in N(v) or vice versa.
std::optional<std::pair<int, int>> find_comparable_pair(const Graph& g);

// Exhaustive search for a dominated pair with |X|, |Y| <= max_size,
// enumerated by ascending size then ascending subset order.
std::optional<DominatedPair> find_dominated_pair(const Graph& g, int max_size);

// Is g (k-1)-colorable, decided purely by induced-containment against a
// complete list of the k-vertex-critical graphs of g's hereditary class?
// The completeness of `crit` is the caller's obligation.
bool decide_by_critical_list(const Graph& g, int k, const std::vector<Graph>& crit);

// Audit the hypothesis of decide_by_critical_list: every list element must be
// k-vertex-critical and free of every given pattern.  Returns a description
// of the first violation, or absent when the list is sound.
std::optional<std::string> audit_critical_list(const std::vector<Graph>& crit, int k,
                                               const std::vector<Pattern>& patterns);

} // namespace vcrit

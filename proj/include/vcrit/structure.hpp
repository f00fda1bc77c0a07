#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

// Partition of the vertices outside an induced 5-cycle Q = q[0..4] by their
// exact neighborhood on Q (all indices mod 5):
//   z     : no neighbor on Q
//   c[i]  : exactly {q[i-1], q[i+1]}
//   y[i]  : exactly {q[i-2], q[i], q[i+2]}
//   t[i]  : exactly {q[i-1], q[i], q[i+1]}
//   f[i]  : all of Q except q[i]
//   u     : all of Q
//   other : any neighborhood matching none of the classes
struct C5Partition {
    std::array<int, 5> q{};
    VertexSet z = 0, u = 0, other = 0;
    std::array<VertexSet, 5> c{}, y{}, t{}, f{};
};

// Classify every vertex outside q by its neighborhood on q.  Throws unless q
// lists five distinct vertices inducing a 5-cycle in the given cyclic order.
C5Partition c5_partition(const Graph& g, const std::array<int, 5>& q);

// v has both a neighbor and a non-neighbor in s.  Throws if v is in s or s is
// empty.
bool is_mixed(const Graph& g, int v, VertexSet s);

// All maximal nontrivial homogeneous sets (1 < |S| < n, no external vertex
// mixed on S), ordered by ascending member lists.  Brute force for n <= 12, a
// modular partition refinement beyond.
std::vector<VertexSet> find_homogeneous_sets(const Graph& g);

namespace detail {
std::vector<VertexSet> maximal_homogeneous_brute(const Graph& g);
std::vector<VertexSet> maximal_homogeneous_refine(const Graph& g);
} // namespace detail

// A partition of V(G) into seven nonempty parts A1..A7 such that
//   - each part induces a P4-free graph,
//   - A1 is complete to A2, A5, A6 and anticomplete to A3, A4, A7,
//   - A3 is complete to A2, A4, A6 and anticomplete to A5, A7,
//   - A4 is complete to A5, A6 and anticomplete to A2, A7,
//   - A2 is anticomplete to A5, A6, A7,
//   - A5 is anticomplete to A6, A7 (A6-A7 adjacency unconstrained),
//   - every component of G[A7] is a homogeneous set of G.
struct HClassWitness {
    std::array<VertexSet, 7> parts{};  // parts[i] = A_{i+1}
};

// Search for such a partition by constraint-propagated backtracking over
// vertex-to-part assignments; absent when none exists (always for n < 7).
std::optional<HClassWitness> recognize_h_class(const Graph& g);

enum class SubstitutionMode { p4_free, clique };

// Partition V(g) into |V(h)| nonempty bags, one per vertex of h, pairwise
// complete/anticomplete exactly as h's edges prescribe, each bag inducing a
// P4-free graph (or a clique, per mode).  Absent when no such partition
// exists.
std::optional<std::vector<VertexSet>> is_substitution_of(const Graph& g, const Graph& h,
                                                         SubstitutionMode mode);

// Every induced 5-cycle of g, each in canonical cyclic order (smallest vertex
// first, then its smaller neighbor).
std::vector<std::array<int, 5>> all_induced_c5(const Graph& g);

// Check the structural facts that hold for the partition around any induced
// C5 of a k-vertex-critical (P5, co(P3+P2))-free graph: totality (other
// empty); y[i]+u and f[i]+u cliques; c[i], y[i], f[i] independent; z
// independent and anticomplete to all c and t classes; each t[i] complete
// multipartite; t[i] complete to t[i+1]; c[i] complete to c[i+1] and to t[i],
// anticomplete to t[i-1] and t[i+1]; every y/f vertex unmixed on each
// component of z; no t[i+2]/t[i-2] vertex mixed on c[i].  Returns
// human-readable violations (empty = all hold).
std::vector<std::string> audit_c5_claims(const Graph& g, const C5Partition& p);

// Run audit_c5_claims around every induced C5 of g; violations are prefixed
// with the cycle they belong to.
std::vector<std::string> audit_all_c5_partitions(const Graph& g);

} // namespace vcrit

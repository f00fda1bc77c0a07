// Naive reference implementations the tests check the real code against.
// Everything here favors obviousness over speed: permutation scans, full
// subset enumeration, unpruned backtracking.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "vcrit/graph.hpp"

namespace oracle {

using vcrit::Graph;
using vcrit::VertexSet;
using vcrit::vbit;

// Isomorphism by trying all n! vertex bijections.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    const int n = a.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.edge(u, v) !=
                    b.edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Induced containment by scanning every |p|-subset of the host.
inline bool brute_contains_induced(const Graph& g, const Graph& p) {
    const int n = g.order(), m = p.order();
    if (m > n) return false;
    if (m == 0) return true;
    const VertexSet all = g.vertex_set();
    for (VertexSet s = 0;; ++s) {
        if (vcrit::set_size(s) == m && brute_isomorphic(induced_subgraph(g, s), p)) return true;
        if (s == all) break;
    }
    return false;
}

// Unpruned q-coloring backtracking.
inline bool brute_q_colorable_rec(const Graph& g, int q, std::vector<int>& col, int v) {
    if (v == g.order()) return true;
    for (int c = 0; c < q; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.edge(u, v) && col[static_cast<std::size_t>(u)] == c) ok = false;
        if (!ok) continue;
        col[static_cast<std::size_t>(v)] = c;
        if (brute_q_colorable_rec(g, q, col, v + 1)) return true;
    }
    return false;
}

inline bool brute_q_colorable(const Graph& g, int q) {
    if (g.order() == 0) return true;
    if (q <= 0) return false;
    std::vector<int> col(static_cast<std::size_t>(g.order()), -1);
    return brute_q_colorable_rec(g, q, col, 0);
}

inline int brute_chromatic(const Graph& g) {
    for (int q = 0;; ++q)  // the vertexless graph is 0-chromatic
        if (brute_q_colorable(g, q)) return q;
}

// Maximum clique by scanning all subsets.
inline int brute_clique_number(const Graph& g) {
    int best = 0;
    const VertexSet all = g.vertex_set();
    if (g.order() == 0) return 0;
    for (VertexSet s = 1;; ++s) {
        bool clique = true;
        vcrit::for_each_vertex(s, [&](int v) {
            if ((s & ~g.row(v) & ~vbit(v)) != 0) clique = false;
        });
        if (clique) best = std::max(best, vcrit::set_size(s));
        if (s == all) break;
    }
    return best;
}

// Definition-direct k-vertex-criticality.
inline bool brute_vertex_critical(const Graph& g, int k) {
    if (g.order() == 0) return false;
    if (brute_chromatic(g) != k) return false;
    for (int v = 0; v < g.order(); ++v)
        if (brute_chromatic(induced_subgraph(g, g.vertex_set() & ~vbit(v))) >= k) return false;
    return true;
}

// Definition-direct maximal nontrivial homogeneous sets.
inline std::vector<VertexSet> brute_homogeneous(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> mods;
    if (n < 3) return mods;
    const VertexSet all = g.vertex_set();
    for (VertexSet s = 1; s < all; ++s) {
        const int sz = vcrit::set_size(s);
        if (sz < 2 || sz >= n) continue;
        bool homog = true;
        vcrit::for_each_vertex(all & ~s, [&](int v) {
            const VertexSet hit = g.row(v) & s;
            if (hit != 0 && hit != s) homog = false;
        });
        if (homog) mods.push_back(s);
    }
    std::vector<VertexSet> maximal;
    for (VertexSet s : mods) {
        bool dominated = false;
        for (VertexSet t : mods)
            if (t != s && (s & ~t) == 0) dominated = true;
        if (!dominated) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

// Deterministic RNG helpers.  std::uniform_int_distribution is not pinned
// across standard libraries, so draws go through explicit modulo.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t raw() { return eng(); }
    int upto(int n) { return static_cast<int>(raw() % static_cast<std::uint64_t>(n)); }  // 0..n-1
    bool coin(double p) { return static_cast<double>(raw() >> 11) * 0x1.0p-53 < p; }
};

inline Graph random_graph(Rng& rng, int n, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p)) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)],
                                              perm[static_cast<std::size_t>(rng.upto(i + 1))]);
    return perm;
}

} // namespace oracle

#include "vcrit/canonical.hpp"

#include <algorithm>
#include <limits>

namespace vcrit {

namespace {

// Depth-first search over vertex orderings.  Position j contributes a
// "column": the adjacency bits of the vertex placed at j toward the prefix,
// MSB = position 0.  Comparing column sequences element-wise equals comparing
// the concatenated upper-triangle bit strings, because column widths agree.
//
// At each node only candidates attaining the minimal column value can extend
// to the lex-least string, so the branching is restricted to those; among
// them, twins (vertices with equal neighborhoods outside the pair) yield
// identical subtrees and only the first is explored.  A completed best
// sequence prunes any branch whose next column exceeds it.
struct Searcher {
    const Graph& g;
    int n;
    VertexSet all;
    VertexSet used = 0;
    std::vector<std::uint64_t> col;  // col[v] = v's adjacency bits to the prefix
    std::vector<std::uint64_t> cur;  // cur[j] = column value chosen at position j
    std::vector<int> perm;
    std::vector<std::uint64_t> best;
    std::vector<int> best_perm;
    bool have_best = false;
    std::uint64_t epoch = 0;  // bumped whenever best is replaced

    explicit Searcher(const Graph& graph)
        : g(graph), n(graph.order()), all(full_set(graph.order())),
          col(static_cast<std::size_t>(n), 0), cur(static_cast<std::size_t>(n), 0),
          perm(static_cast<std::size_t>(n), 0) {}

    // `less` = the prefix's columns are strictly below best's (valid at entry).
    void dfs(int j, bool less) {
        if (j == n) {
            if (!have_best || less) {
                best = cur;
                best_perm = perm;
                have_best = true;
                ++epoch;
            }
            return;
        }
        const VertexSet cands = all & ~used;
        std::uint64_t m = std::numeric_limits<std::uint64_t>::max();
        for_each_vertex(cands, [&](int v) { m = std::min(m, col[static_cast<std::size_t>(v)]); });

        int tried[kMaxVertices];
        int ntried = 0;
        std::uint64_t seen_epoch = epoch;
        for (VertexSet rem = cands; rem != 0;) {
            const int v = set_min(rem);
            rem &= rem - 1;
            if (col[static_cast<std::size_t>(v)] != m) continue;
            if (epoch != seen_epoch) {
                // best was replaced inside a sibling's subtree; it extends this
                // very prefix, so the relation collapses to "equal".
                less = false;
                seen_epoch = epoch;
            }
            bool child_less = less;
            if (have_best && !less) {
                if (m > best[static_cast<std::size_t>(j)]) return;
                child_less = m < best[static_cast<std::size_t>(j)];
            }
            bool twin = false;
            for (int t = 0; t < ntried; ++t) {
                const VertexSet mask = ~(vbit(tried[t]) | vbit(v));
                if ((g.row(tried[t]) & mask) == (g.row(v) & mask)) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            tried[ntried++] = v;

            perm[static_cast<std::size_t>(j)] = v;
            cur[static_cast<std::size_t>(j)] = m;
            used |= vbit(v);
            const VertexSet rest = cands & ~vbit(v);
            for_each_vertex(rest, [&](int w) {
                col[static_cast<std::size_t>(w)] =
                    (col[static_cast<std::size_t>(w)] << 1) | (g.edge(v, w) ? 1u : 0u);
            });
            dfs(j + 1, child_less);
            for_each_vertex(rest, [&](int w) { col[static_cast<std::size_t>(w)] >>= 1; });
            used &= ~vbit(v);
        }
    }
};

std::vector<std::uint64_t> pack_columns(int n, const std::vector<std::uint64_t>& cols) {
    const std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<std::uint64_t> words((total + 63) / 64, 0);
    std::size_t idx = 0;
    for (int j = 1; j < n; ++j) {
        for (int b = j - 1; b >= 0; --b) {
            if ((cols[static_cast<std::size_t>(j)] >> b) & 1u)
                words[idx >> 6] |= 1ull << (63 - (idx & 63));
            ++idx;
        }
    }
    return words;
}

} // namespace

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(f.n));
    for (std::uint64_t w : f.bits) mix(w);
    return static_cast<std::size_t>(h);
}

CanonicalForm canonical_form(const Graph& g) {
    Searcher s(g);
    s.dfs(0, false);
    return CanonicalForm{g.order(), pack_columns(g.order(), s.best)};
}

std::vector<int> canonical_labeling(const Graph& g) {
    Searcher s(g);
    s.dfs(0, false);
    return s.best_perm;
}

Graph canonical_graph(const Graph& g) {
    const std::vector<int> perm = canonical_labeling(g);
    Graph h(g.order());
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                h.add_edge(i, j);
    return h;
}

Graph from_canonical_form(const CanonicalForm& f) {
    Graph g(f.n);
    std::size_t idx = 0;
    for (int j = 1; j < f.n; ++j) {
        for (int i = 0; i < j; ++i, ++idx) {
            if ((f.bits[idx >> 6] >> (63 - (idx & 63))) & 1u) g.add_edge(i, j);
        }
    }
    return g;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace vcrit

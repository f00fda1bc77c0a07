#include "vcrit/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcrit {

namespace {

std::vector<int> descending_degree_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&g](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

} // namespace

VertexSet greedy_clique(const Graph& g) {
    if (g.order() == 0) return 0;
    VertexSet clique = 0;
    VertexSet cand = g.vertex_set();
    while (cand != 0) {
        int pick = -1, pick_deg = -1;
        for_each_vertex(cand, [&](int v) {
            const int d = set_size(g.row(v) & cand);
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        });
        clique |= vbit(pick);
        cand &= g.row(pick);
    }
    return clique;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    int best;
    VertexSet best_witness = 0;

    void expand(VertexSet r, int rsize, VertexSet p) {
        if (p == 0) {
            if (rsize > best) {
                best = rsize;
                best_witness = r;
            }
            return;
        }
        while (p != 0) {
            if (rsize + set_size(p) <= best) return;
            const int v = set_min(p);
            p &= p - 1;
            expand(r | vbit(v), rsize + 1, p & g.row(v));
        }
    }
};

} // namespace

CliqueResult clique_number(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("clique number of the empty graph");
    const VertexSet seed = greedy_clique(g);
    CliqueSearch s{g, set_size(seed) - 1, 0};
    s.expand(0, 0, g.vertex_set());
    if (s.best_witness == 0) {
        // no clique beat the seed bound, so the seed itself is maximum
        return {set_size(seed), seed};
    }
    return {s.best, s.best_witness};
}

ColoringResult greedy_coloring(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("coloring of the empty graph");
    ColoringResult r;
    r.assignment.assign(static_cast<std::size_t>(g.order()), 0);
    VertexSet color_members[kMaxVertices] = {};
    for (int u : descending_degree_order(g)) {
        int c = 1;
        while ((g.row(u) & color_members[c - 1]) != 0) ++c;
        r.assignment[static_cast<std::size_t>(u)] = c;
        color_members[c - 1] |= vbit(u);
        r.chi = std::max(r.chi, c);
    }
    return r;
}

namespace {

struct ColorSearch {
    const Graph& g;
    int q;
    const std::vector<int>& order;
    std::vector<int> color;        // 1..q, 0 = unassigned
    VertexSet members[kMaxVertices] = {};

    bool dfs(std::size_t pos, int max_used) {
        if (pos == order.size()) return true;
        const int u = order[pos];
        const int cap = std::min(max_used + 1, q);
        for (int c = 1; c <= cap; ++c) {
            if ((g.row(u) & members[c - 1]) != 0) continue;
            color[static_cast<std::size_t>(u)] = c;
            members[c - 1] |= vbit(u);
            if (dfs(pos + 1, std::max(max_used, c))) return true;
            members[c - 1] &= ~vbit(u);
        }
        color[static_cast<std::size_t>(u)] = 0;
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> is_q_colorable(const Graph& g, int q) {
    if (q < 0) throw std::invalid_argument("negative color count");
    if (g.order() == 0) return std::vector<int>{};
    if (q == 0) return std::nullopt;

    ColoringResult greedy = greedy_coloring(g);
    if (greedy.chi <= q) return greedy.assignment;
    const VertexSet clique = greedy_clique(g);
    if (set_size(clique) > q) return std::nullopt;

    // Clique vertices first: the palette cap then forces their colors apart
    // once and for all.  Remaining vertices in descending-degree order.
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.order()));
    for_each_vertex(clique, [&](int v) { order.push_back(v); });
    for (int v : descending_degree_order(g))
        if (!set_contains(clique, v)) order.push_back(v);

    ColorSearch s{g, q, order, std::vector<int>(static_cast<std::size_t>(g.order()), 0), {}};
    if (s.dfs(0, 0)) return s.color;
    return std::nullopt;
}

ColoringResult chromatic_number(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("chromatic number of the empty graph");
    const ColoringResult greedy = greedy_coloring(g);
    const int lb = set_size(greedy_clique(g));
    for (int q = lb; q < greedy.chi; ++q) {
        if (auto a = is_q_colorable(g, q)) return {q, std::move(*a)};
    }
    return greedy;
}

} // namespace vcrit

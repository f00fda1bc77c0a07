#include "vcrit/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcrit {

Graph make_path(int t) {
    if (t < 1) throw std::invalid_argument("path needs at least 1 vertex");
    Graph g(t);
    for (int i = 0; i + 1 < t; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int s) {
    if (s < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = make_path(s);
    g.add_edge(s - 1, 0);
    return g;
}

Graph make_clique(int r) {
    Graph g(r);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) g.add_edge(i, j);
    return g;
}

Graph make_gem() {
    Graph g = add_vertex(make_path(4), full_set(4));
    return g;
}

Graph make_co_p3_p2() {
    Graph p3_p2(5); // path 0-1-2 plus edge 3-4
    p3_p2.add_edge(0, 1);
    p3_p2.add_edge(1, 2);
    p3_p2.add_edge(3, 4);
    return complement(p3_p2);
}

Graph make_banner() {
    Graph g = make_cycle(4);
    return add_vertex(g, vbit(0));
}

Graph make_two_p2() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    return g;
}

Graph make_p1_plus_k3() {
    Graph g(4);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

Graph make_p2_plus_p1() {
    Graph g(3);
    g.add_edge(0, 1);
    return g;
}

namespace {

std::optional<int> parse_suffix_int(const std::string& name, std::size_t from) {
    if (from >= name.size()) return std::nullopt;
    int value = 0;
    for (std::size_t i = from; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        value = value * 10 + (name[i] - '0');
        if (value > kMaxVertices) return std::nullopt;
    }
    return value;
}

} // namespace

Pattern pattern_by_name(const std::string& name) {
    if (name == "gem") return {name, make_gem()};
    if (name == "coP3P2") return {name, make_co_p3_p2()};
    if (name == "banner") return {name, make_banner()};
    if (name == "2P2") return {name, make_two_p2()};
    if (name == "P1K3") return {name, make_p1_plus_k3()};
    if (name.rfind("Kn:", 0) == 0) {
        if (auto r = parse_suffix_int(name, 3); r && *r >= 1) return {name, make_clique(*r)};
    } else if (name.size() >= 2 && name[0] == 'P') {
        if (auto t = parse_suffix_int(name, 1); t && *t >= 1) return {name, make_path(*t)};
    } else if (name.size() >= 2 && name[0] == 'C') {
        if (auto s = parse_suffix_int(name, 1); s && *s >= 3) return {name, make_cycle(*s)};
    }
    throw std::invalid_argument("unknown pattern name: " + name);
}

namespace {

// Pattern-vertex visit order: start at a maximum-degree vertex, then greedily
// append the vertex with the most already-ordered neighbors (ties by degree,
// then index).  Keeps the embedding search tightly constrained.
std::vector<int> embedding_order(const Graph& p, int first = -1) {
    const int pn = p.order();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(pn));
    VertexSet placed = 0;
    if (first >= 0) {
        order.push_back(first);
        placed |= vbit(first);
    }
    while (static_cast<int>(order.size()) < pn) {
        int pick = -1, pick_back = -1, pick_deg = -1;
        for (int v = 0; v < pn; ++v) {
            if (set_contains(placed, v)) continue;
            const int back = set_size(p.row(v) & placed);
            const int deg = p.degree(v);
            if (back > pick_back || (back == pick_back && deg > pick_deg)) {
                pick = v;
                pick_back = back;
                pick_deg = deg;
            }
        }
        order.push_back(pick);
        placed |= vbit(pick);
    }
    return order;
}

struct EmbedSearch {
    const Graph& g;
    const Graph& p;
    const std::vector<int>& order;
    int map[kMaxVertices];
    VertexSet used = 0;

    bool dfs(int depth) {
        const int pn = p.order();
        if (depth == pn) return true;
        const int pv = order[static_cast<std::size_t>(depth)];
        VertexSet cand = full_set(g.order()) & ~used;
        for (int e = 0; e < depth && cand != 0; ++e) {
            const int pu = order[static_cast<std::size_t>(e)];
            if (p.edge(pv, pu))
                cand &= g.row(map[e]);
            else
                cand &= ~g.row(map[e]);
        }
        for (VertexSet rem = cand; rem != 0; rem &= rem - 1) {
            const int v = set_min(rem);
            map[depth] = v;
            used |= vbit(v);
            if (dfs(depth + 1)) return true;
            used &= ~vbit(v);
        }
        return false;
    }

    VertexSet witness(int pn) const {
        VertexSet w = 0;
        for (int i = 0; i < pn; ++i) w |= vbit(map[i]);
        return w;
    }
};

} // namespace

std::optional<VertexSet> find_induced(const Graph& g, const Graph& p) {
    if (p.order() == 0) return VertexSet{0};
    if (p.order() > g.order()) return std::nullopt;
    const std::vector<int> order = embedding_order(p);
    EmbedSearch s{g, p, order, {}, 0};
    if (s.dfs(0)) return s.witness(p.order());
    return std::nullopt;
}

std::optional<VertexSet> find_induced_anchored(const Graph& g, const Graph& p, int anchor) {
    if (p.order() == 0 || p.order() > g.order()) return std::nullopt;
    // The anchor must play some pattern role; try each in turn.
    for (int q = 0; q < p.order(); ++q) {
        const std::vector<int> order = embedding_order(p, q);
        EmbedSearch s{g, p, order, {}, 0};
        s.map[0] = anchor;
        s.used = vbit(anchor);
        if (s.dfs(1)) return s.witness(p.order());
    }
    return std::nullopt;
}

bool contains_induced(const Graph& g, const Graph& p) { return find_induced(g, p).has_value(); }

bool is_free(const Graph& g, const std::vector<Pattern>& ps) {
    for (const Pattern& p : ps)
        if (find_induced(g, p.graph)) return false;
    return true;
}

bool is_free_anchored(const Graph& g, const std::vector<Pattern>& ps, int anchor) {
    for (const Pattern& p : ps)
        if (find_induced_anchored(g, p.graph, anchor)) return false;
    return true;
}

bool is_p4_free(const Graph& g) { return !contains_induced(g, make_path(4)); }

std::optional<std::vector<VertexSet>> complete_multipartite_parts(const Graph& g) {
    std::vector<VertexSet> parts = components(complement(g));
    for (VertexSet part : parts) {
        // a part with an internal edge breaks the multipartite shape
        for (VertexSet rem = part; rem != 0; rem &= rem - 1) {
            if (g.row(set_min(rem)) & part) return std::nullopt;
        }
    }
    return parts;
}

namespace {

// Chordless odd cycle of length >= 5, if any, with the smallest vertex first
// in the search: extends an induced path whose interior rejects all chords,
// closing back to the root when the parity and length fit.
struct HoleSearch {
    const Graph& g;
    int path[kMaxVertices];
    VertexSet on_path = 0;
    VertexSet interior_block = 0; // N(path[1..len-2]) — forbidden for extension

    std::optional<VertexSet> dfs(int len) {
        const int root = path[0];
        const int last = path[len - 1];
        VertexSet cand = g.row(last) & ~on_path & ~interior_block & ~(vbit(root) - 1);
        for (VertexSet rem = cand; rem != 0; rem &= rem - 1) {
            const int v = set_min(rem);
            if (len >= 2 && g.edge(v, root)) {
                if (len + 1 >= 5 && (len + 1) % 2 == 1) return on_path | vbit(v);
                continue; // a chord to the root forbids extending through v
            }
            path[len] = v;
            on_path |= vbit(v);
            const VertexSet saved = interior_block;
            if (len >= 2) interior_block |= g.row(last); // last leaves the path's free end
            if (auto w = dfs(len + 1)) return w;
            interior_block = saved;
            on_path &= ~vbit(v);
        }
        return std::nullopt;
    }
};

std::optional<VertexSet> find_odd_hole(const Graph& g) {
    for (int s = 0; s < g.order(); ++s) {
        HoleSearch hs{g, {}, 0, 0};
        hs.path[0] = s;
        hs.on_path = vbit(s);
        if (auto w = hs.dfs(1)) return w;
    }
    return std::nullopt;
}

} // namespace

PerfectionReport is_perfect_small(const Graph& g) {
    if (g.order() > 16) throw std::invalid_argument("perfection test limited to 16 vertices");
    if (auto hole = find_odd_hole(g)) return {false, *hole, false};
    if (auto antihole = find_odd_hole(complement(g))) return {false, *antihole, true};
    return {};
}

} // namespace vcrit

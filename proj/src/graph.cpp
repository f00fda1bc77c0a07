#include "vcrit/graph.hpp"

namespace vcrit {

std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

VertexSet set_from_vector(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) {
        if (v < 0 || v >= kMaxVertices)
            throw std::out_of_range("set_from_vector: vertex out of range");
        s |= vbit(v);
    }
    return s;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(set_size(adj_[static_cast<std::size_t>(v)]));
    return twice / 2;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    const VertexSet all = full_set(n);
    for (int v = 0; v < n; ++v) {
        VertexSet others = all & ~g.row(v) & ~vbit(v);
        for_each_vertex(others, [&](int u) {
            if (u > v) h.add_edge(v, u);
        });
    }
    return h;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if ((s & ~g.vertex_set()) != 0)
        throw std::out_of_range("induced_subgraph: set member out of range");
    std::vector<int> verts = set_to_vector(s);
    const int m = static_cast<int>(verts.size());
    Graph h(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]))
                h.add_edge(i, j);
    return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    return induced_subgraph(g, set_from_vector(s));
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertex_set();
    while (unseen != 0) {
        VertexSet comp = vbit(set_min(unseen));
        for (;;) {
            VertexSet frontier = 0;
            for_each_vertex(comp, [&](int v) { frontier |= g.row(v); });
            frontier &= ~comp;
            if (frontier == 0) break;
            comp |= frontier;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet comp = vbit(0);
    for (;;) {
        VertexSet frontier = 0;
        for_each_vertex(comp, [&](int v) { frontier |= g.row(v); });
        frontier &= ~comp;
        if (frontier == 0) break;
        comp |= frontier;
    }
    return comp == g.vertex_set();
}

void Graph::assign_extension(const Graph& base, VertexSet nbrs) {
    const int n = base.n_;
    if (n >= kMaxVertices) throw std::invalid_argument("assign_extension: graph is at capacity");
    if ((nbrs & ~base.vertex_set()) != 0)
        throw std::out_of_range("assign_extension: neighbor out of range");
    if (this != &base) adj_.assign(base.adj_.begin(), base.adj_.end());
    adj_.resize(static_cast<std::size_t>(n) + 1);
    n_ = n + 1;
    adj_[static_cast<std::size_t>(n)] = nbrs;
    for_each_vertex(nbrs, [&](int u) { adj_[static_cast<std::size_t>(u)] |= vbit(n); });
}

Graph add_vertex(const Graph& g, VertexSet nbrs) {
    const int n = g.order();
    if (n >= kMaxVertices) throw std::invalid_argument("add_vertex: graph is at capacity");
    if ((nbrs & ~g.vertex_set()) != 0)
        throw std::out_of_range("add_vertex: neighbor out of range");
    Graph h(n + 1);
    for (int v = 0; v < n; ++v)
        for_each_vertex(g.row(v) & full_set(v), [&](int u) { h.add_edge(u, v); });
    for_each_vertex(nbrs, [&](int u) { h.add_edge(u, n); });
    return h;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permuted: permutation size mismatch");
    Graph h(n);
    for (int v = 0; v < n; ++v)
        for_each_vertex(g.row(v) & full_set(v), [&](int u) {
            h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        });
    return h;
}

} // namespace vcrit

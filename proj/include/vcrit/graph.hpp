#ifndef VCRIT_GRAPH_HPP
#define VCRIT_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vcrit {

// A set of vertices out of {0..63}, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

// Lowest vertex in a nonempty set.
constexpr int set_min(VertexSet s) { return std::countr_zero(s); }

// Mask covering {0..n-1}.
constexpr VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Visits the members of s in ascending order.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
    while (s != 0) {
        int v = std::countr_zero(s);
        f(v);
        s &= s - 1;
    }
}

std::vector<int> set_to_vector(VertexSet s);
VertexSet set_from_vector(const std::vector<int>& vs);

// Simple undirected graph on at most 64 vertices. Each adjacency row is a
// single machine word, so neighborhood intersections, unions and containment
// tests are constant-time. Symmetric and irreflexive by construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count out of range [0,64]");
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const noexcept { return n_; }

    bool edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return set_contains(adj_[static_cast<std::size_t>(u)], v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        adj_[static_cast<std::size_t>(u)] |= vbit(v);
        adj_[static_cast<std::size_t>(v)] |= vbit(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[static_cast<std::size_t>(u)] &= ~vbit(v);
        adj_[static_cast<std::size_t>(v)] &= ~vbit(u);
    }

    // In-place counterpart of the free add_vertex(): *this becomes base plus
    // one extra vertex (index base.order()) adjacent to nbrs. Reuses this
    // graph's storage, so repeated calls in hot loops do not allocate.
    void assign_extension(const Graph& base, VertexSet nbrs);

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    // Unchecked row access for hot loops.
    VertexSet row(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return set_size(neighbors(v)); }

    std::size_t edge_count() const;

    VertexSet vertex_set() const noexcept { return full_set(n_); }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// New graph with every non-edge turned into an edge and vice versa.
Graph complement(const Graph& g);

// Subgraph induced by s; members of s are relabeled 0..|s|-1 in ascending
// original order.
Graph induced_subgraph(const Graph& g, VertexSet s);

Graph induced_subgraph(const Graph& g, const std::vector<int>& s);

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

// Copy of g with one extra vertex (index n) whose neighborhood is nbrs.
Graph add_vertex(const Graph& g, VertexSet nbrs);

// Relabels g by perm: vertex v becomes perm[v].
Graph permuted(const Graph& g, const std::vector<int>& perm);

} // namespace vcrit

#endif

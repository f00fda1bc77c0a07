#include <doctest.h>

#include "oracles.hpp"
#include "vcrit/coloring.hpp"
#include "vcrit/graph.hpp"
#include "vcrit/patterns.hpp"

using namespace vcrit;

namespace {

// Mycielski construction: chi rises by one, no triangle appears.
Graph mycielski(const Graph& g) {
    const int n = g.order();
    Graph h(2 * n + 1);
    for (int u = 0; u < n; ++u)
        for_each_vertex(g.row(u) & full_set(u), [&](int v) {
            h.add_edge(u, v);
            h.add_edge(u, n + v);
            h.add_edge(n + u, v);
        });
    for (int u = 0; u < n; ++u) h.add_edge(n + u, 2 * n);
    return h;
}

bool proper(const Graph& g, const std::vector<int>& col, int q) {
    if (static_cast<int>(col.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (col[static_cast<std::size_t>(v)] < 1 || col[static_cast<std::size_t>(v)] > q)
            return false;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.edge(u, v) &&
                col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)])
                return false;
    return true;
}

} // namespace

TEST_CASE("chromatic number fixtures") {
    for (int n = 1; n <= 8; ++n) CHECK(chromatic_number(make_clique(n)).chi == n);
    CHECK(chromatic_number(make_cycle(4)).chi == 2);
    CHECK(chromatic_number(make_cycle(5)).chi == 3);
    CHECK(chromatic_number(make_cycle(6)).chi == 2);
    CHECK(chromatic_number(make_cycle(7)).chi == 3);
    CHECK(chromatic_number(make_path(6)).chi == 2);
    CHECK(chromatic_number(Graph(5)).chi == 1);

    // Petersen graph: chi = 3, omega = 2
    Graph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    CHECK(chromatic_number(petersen).chi == 3);
    CHECK(clique_number(petersen).omega == 2);

    // Groetzsch graph (Mycielski of C5): chi = 4, triangle-free
    const Graph groetzsch = mycielski(make_cycle(5));
    CHECK(groetzsch.order() == 11);
    CHECK(chromatic_number(groetzsch).chi == 4);
    CHECK(clique_number(groetzsch).omega == 2);

    CHECK_THROWS_AS(chromatic_number(Graph(0)), std::invalid_argument);
    CHECK_THROWS_AS(clique_number(Graph(0)), std::invalid_argument);
}

TEST_CASE("exact solvers match the brute references") {
    oracle::Rng rng(301);
    for (int it = 0; it < 300; ++it) {
        const int n = 1 + rng.upto(8);
        const Graph g = oracle::random_graph(rng, n, 0.15 + 0.05 * rng.upto(15));
        const ColoringResult col = chromatic_number(g);
        CHECK(col.chi == oracle::brute_chromatic(g));
        CHECK(proper(g, col.assignment, col.chi));
        const CliqueResult clq = clique_number(g);
        CHECK(clq.omega == oracle::brute_clique_number(g));
        CHECK(set_size(clq.witness) == clq.omega);
        for_each_vertex(clq.witness, [&](int v) {
            CHECK((clq.witness & ~g.row(v) & ~vbit(v)) == 0u);
        });
    }
}

TEST_CASE("q-colorability boundaries") {
    CHECK(is_q_colorable(Graph(0), 0).has_value());
    CHECK(is_q_colorable(Graph(0), 3).has_value());
    CHECK_FALSE(is_q_colorable(Graph(1), 0).has_value());
    CHECK(is_q_colorable(Graph(1), 1).has_value());
    CHECK_FALSE(is_q_colorable(make_clique(4), 3).has_value());
    CHECK(is_q_colorable(make_clique(4), 4).has_value());
    CHECK_THROWS_AS(is_q_colorable(Graph(1), -1), std::invalid_argument);
}

TEST_CASE("q-colorability agrees with brute and yields proper witnesses") {
    oracle::Rng rng(302);
    for (int it = 0; it < 400; ++it) {
        const int n = 1 + rng.upto(8);
        const Graph g = oracle::random_graph(rng, n, 0.2 + 0.05 * rng.upto(13));
        const int q = rng.upto(5);
        const auto col = is_q_colorable(g, q);
        CHECK(col.has_value() == oracle::brute_q_colorable(g, q));
        if (col) CHECK(proper(g, *col, q));
    }
}

TEST_CASE("chi >= omega and vertex deletion drops chi by at most one") {
    oracle::Rng rng(303);
    for (int it = 0; it < 300; ++it) {
        const int n = 2 + rng.upto(7);
        const Graph g = oracle::random_graph(rng, n, 0.2 + 0.05 * rng.upto(13));
        const int chi = chromatic_number(g).chi;
        CHECK(chi >= clique_number(g).omega);
        const int v = rng.upto(n);
        const int chi_del = chromatic_number(induced_subgraph(g, g.vertex_set() & ~vbit(v))).chi;
        CHECK(chi_del <= chi);
        CHECK(chi_del >= chi - 1);
    }
}

TEST_CASE("greedy helpers give valid bounds") {
    oracle::Rng rng(304);
    for (int it = 0; it < 200; ++it) {
        const int n = 1 + rng.upto(9);
        const Graph g = oracle::random_graph(rng, n, 0.3 + 0.05 * rng.upto(9));
        const ColoringResult greedy = greedy_coloring(g);
        CHECK(proper(g, greedy.assignment, greedy.chi));
        const VertexSet clique = greedy_clique(g);
        for_each_vertex(clique, [&](int v) {
            CHECK((clique & ~g.row(v) & ~vbit(v)) == 0u);
        });
        const int chi = chromatic_number(g).chi;
        CHECK(set_size(clique) <= chi);
        CHECK(greedy.chi >= chi);
    }
}

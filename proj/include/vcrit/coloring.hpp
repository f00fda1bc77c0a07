#pragma once

#include <optional>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

// Proper coloring with the minimum color count; colors are 1..chi.
struct ColoringResult {
    int chi = 0;
    std::vector<int> assignment;
};

struct CliqueResult {
    int omega = 0;
    VertexSet witness = 0;
};

// Exact maximum clique (branch and bound); rejects the empty graph.
CliqueResult clique_number(const Graph& g);

// Exact q-colorability decision with a witness assignment (colors 1..q' for
// some q' <= q).  q = 0 is satisfiable only by the empty graph.  Branch and
// bound over vertices in descending-degree order, colors ascending, palette
// capped at one past the highest color used so far.
std::optional<std::vector<int>> is_q_colorable(const Graph& g, int q);

// Exact chromatic number; rejects the empty graph.  Brackets the search with
// a greedy clique lower bound and a largest-first greedy upper bound.
ColoringResult chromatic_number(const Graph& g);

// Largest-first greedy coloring; an upper-bound witness, not necessarily
// optimal.  Rejects the empty graph.
ColoringResult greedy_coloring(const Graph& g);

// A maximal clique found greedily (lower-bound seed for the exact searches).
VertexSet greedy_clique(const Graph& g);

} // namespace vcrit

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

// Canonical form of a graph: the lexicographically least bit string obtainable
// as the column-major upper-triangle edge list over all vertex orderings,
// packed MSB-first into 64-bit words.  Two graphs are isomorphic iff their
// canonical forms are equal.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> bits;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.n != b.n) return a.n <=> b.n;
        return a.bits <=> b.bits; // MSB-first packing makes word order = bit-string order
    }
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const noexcept;
};

CanonicalForm canonical_form(const Graph& g);

// perm[i] = original vertex placed at canonical position i.
std::vector<int> canonical_labeling(const Graph& g);

// The graph relabeled into its canonical ordering.
Graph canonical_graph(const Graph& g);

// Rebuild the canonically labeled graph from its form.
Graph from_canonical_form(const CanonicalForm& f);

bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace vcrit

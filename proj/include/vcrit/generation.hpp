#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcrit/canonical.hpp"
#include "vcrit/graph.hpp"
#include "vcrit/patterns.hpp"

namespace vcrit {

struct GenerationConfig {
    int k = 4;
    std::vector<Pattern> patterns;
    int n_max = 10;
    bool connected_only = true;  // false is for auditing only; outputs are identical
    int workers = 1;
    std::uint64_t max_mem_bytes = 2ull << 30;  // frontier + dedup working-set budget
    bool skip_final_frontier = false;          // prune flag: drop the never-consumed last frontier
    // Called after each level completes: (level, criticals at that level,
    // frontier size at that level; 0 when the frontier was skipped).
    std::function<void(int, std::uint64_t, std::uint64_t)> progress;
};

struct GenerationRun {
    GenerationConfig config;
    std::vector<CanonicalForm> outputs;             // sorted by (order, canonical bits)
    std::map<int, std::uint64_t> per_order_counts;  // order -> critical graphs found
    std::map<int, std::uint64_t> frontier_sizes;    // order -> intermediates up to isomorphism
    std::chrono::milliseconds elapsed{0};
};

class MemoryBudgetExceeded : public std::runtime_error {
  public:
    explicit MemoryBudgetExceeded(int level)
        : std::runtime_error("memory budget exceeded while building level " +
                             std::to_string(level)),
          level_(level) {}
    int level() const { return level_; }

  private:
    int level_;
};

// All k-vertex-critical pattern-free graphs on at most n_max vertices, up to
// isomorphism, by level-by-level expansion: level n holds every connected
// pattern-free (k-1)-colorable graph on n vertices up to isomorphism, each
// expanded by a new vertex over all nonempty neighborhoods.  An expansion
// that stays (k-1)-colorable joins the next level; one that does not has
// chromatic number exactly k and is emitted iff vertex-critical (and never
// extended).  Completeness: a connected k-vertex-critical graph minus a
// non-cutvertex is connected, pattern-free, and (k-1)-colorable, so every
// target is reached from the level below.  Deterministic for any worker
// count.
GenerationRun generate(const GenerationConfig& config);

// Independent completeness oracle: enumerate ALL graphs on <= n_max <= 8
// vertices up to isomorphism (no colorability or connectivity pruning), then
// filter the k-vertex-critical pattern-free ones.
std::vector<CanonicalForm> brute_force_reference(int k, const std::vector<Pattern>& patterns,
                                                 int n_max);

struct CorpusMatch {
    int order_lo = 0, order_hi = 0;  // corpus order range the comparison covers
    std::size_t matched = 0;
    std::vector<CanonicalForm> unmatched_outputs;  // generated in range, absent from corpus
    std::vector<CanonicalForm> unmatched_corpus;   // listed, never generated
    bool bijection() const { return unmatched_outputs.empty() && unmatched_corpus.empty(); }
};

// Isomorphism bijection between run outputs (restricted to the corpus order
// range) and a reference corpus, with the leftovers of both sides reported.
CorpusMatch match_against_corpus(const GenerationRun& run, const std::vector<Graph>& corpus);

} // namespace vcrit

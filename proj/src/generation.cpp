#include "vcrit/generation.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "vcrit/coloring.hpp"
#include "vcrit/criticality.hpp"

namespace vcrit {

namespace {

std::size_t form_bytes(const CanonicalForm& f) {
    return sizeof(CanonicalForm) + f.bits.capacity() * sizeof(std::uint64_t) + 32;
}

std::size_t graph_bytes(const Graph& g) {
    return sizeof(Graph) + static_cast<std::size_t>(g.order()) * sizeof(VertexSet) + 16;
}

// FIFO store for one generation level: graphs stay in memory up to a byte
// budget, then the whole level moves to a temporary binary file (one order
// byte plus the adjacency words per graph).  Write phase, then one read pass.
class FrontierStore {
  public:
    explicit FrontierStore(std::uint64_t cap) : cap_(cap) {}
    ~FrontierStore() { discard(); }
    FrontierStore(const FrontierStore&) = delete;
    FrontierStore& operator=(const FrontierStore&) = delete;

    void add(const Graph& g) {
        ++count_;
        if (!spilled_ && mem_bytes_ + graph_bytes(g) > cap_) spill();
        if (spilled_) {
            write_graph(g);
        } else {
            mem_bytes_ += graph_bytes(g);
            mem_.push_back(g);
        }
    }

    std::uint64_t count() const { return count_; }

    void start_read() {
        if (spilled_) {
            out_.flush();
            if (!out_) throw std::runtime_error("frontier spill: flush failed");
            out_.close();
            in_.open(path_, std::ios::binary);
            if (!in_) throw std::runtime_error("frontier spill: cannot reopen " + path_.string());
        }
        read_index_ = 0;
    }

    bool next(Graph& g) {
        if (!spilled_) {
            if (read_index_ >= mem_.size()) return false;
            g = mem_[read_index_++];
            return true;
        }
        return read_graph(g);
    }

    void discard() {
        mem_.clear();
        mem_bytes_ = 0;
        count_ = 0;
        if (spilled_) {
            out_.close();
            in_.close();
            std::error_code ec;
            std::filesystem::remove(path_, ec);
            spilled_ = false;
        }
    }

  private:
    void spill() {
        static std::atomic<unsigned> serial{0};
        path_ = std::filesystem::temp_directory_path() /
                ("vcrit-frontier-" + std::to_string(::getpid()) + "-" +
                 std::to_string(serial.fetch_add(1)) + ".bin");
        out_.open(path_, std::ios::binary | std::ios::trunc);
        if (!out_) throw std::runtime_error("frontier spill: cannot open " + path_.string());
        spilled_ = true;
        for (const Graph& g : mem_) write_graph(g);
        mem_.clear();
        mem_.shrink_to_fit();
        mem_bytes_ = 0;
    }

    void write_graph(const Graph& g) {
        out_.put(static_cast<char>(g.order()));
        for (int v = 0; v < g.order(); ++v) {
            const VertexSet row = g.row(v);
            out_.write(reinterpret_cast<const char*>(&row), sizeof row);
        }
        if (!out_) throw std::runtime_error("frontier spill: write failed");
    }

    bool read_graph(Graph& g) {
        const int n = in_.get();
        if (n == std::char_traits<char>::eof()) return false;
        Graph h(n);
        for (int v = 0; v < n; ++v) {
            VertexSet row = 0;
            in_.read(reinterpret_cast<char*>(&row), sizeof row);
            if (!in_) throw std::runtime_error("frontier spill: truncated read");
            for_each_vertex(row & full_set(v), [&](int u) { h.add_edge(u, v); });
        }
        g = std::move(h);
        return true;
    }

    std::uint64_t cap_;
    std::vector<Graph> mem_;
    std::uint64_t mem_bytes_ = 0;
    std::uint64_t count_ = 0;
    std::size_t read_index_ = 0;
    std::filesystem::path path_;
    std::ofstream out_;
    std::ifstream in_;
    bool spilled_ = false;
};

} // namespace

GenerationRun generate(const GenerationConfig& config) {
    if (config.k < 1) throw std::invalid_argument("generate: k must be positive");
    if (config.n_max < 1 || config.n_max > kMaxVertices)
        throw std::invalid_argument("generate: n_max out of range");
    const auto t0 = std::chrono::steady_clock::now();

    GenerationRun run;
    run.config = config;
    const int k = config.k;
    const int workers = std::max(1, config.workers);
    // Floor keeps a degenerate budget well-defined: tiny budgets spill early
    // and fail fast instead of dividing by nothing.
    const std::uint64_t budget = std::max<std::uint64_t>(config.max_mem_bytes, 1u << 12);

    std::unordered_set<CanonicalForm, CanonicalFormHash> outputs;
    std::uint64_t outputs_bytes = 0;
    auto emit = [&](const CanonicalForm& f) {
        if (outputs.insert(f).second) outputs_bytes += form_bytes(f);
    };

    // Level 1 by hand: K1 is the only output the loop below cannot reach
    // (it only ever emits expansions), and it seeds the frontier for k >= 2
    // since a single vertex is (k-1)-colorable.
    const Graph k1(1);
    auto frontier = std::make_unique<FrontierStore>(budget / 2);
    if (is_free(k1, config.patterns)) {
        if (k == 1) emit(canonical_form(k1));
        if (k >= 2) {
            frontier->add(k1);
            run.frontier_sizes[1] = 1;
        }
    }

    for (int n = 1; n < config.n_max && frontier->count() > 0; ++n) {
        auto next = std::make_unique<FrontierStore>(budget / 2);
        std::unordered_set<CanonicalForm, CanonicalFormHash> dedup;
        std::uint64_t dedup_bytes = 0;
        const bool keep_frontier = !(config.skip_final_frontier && n + 1 == config.n_max);
        const VertexSet nbhd_lo = config.connected_only ? 1 : 0;
        const VertexSet nbhd_hi = full_set(n);

        std::mutex feed_mtx;
        std::mutex merge_mtx;
        std::exception_ptr error;
        std::atomic<bool> stop{false};
        frontier->start_read();

        auto work = [&]() {
            Graph base;
            Graph scratch;
            std::vector<CanonicalForm> local_next;
            std::vector<CanonicalForm> local_out;
            try {
                for (;;) {
                    if (stop.load(std::memory_order_relaxed)) return;
                    {
                        std::lock_guard lk(feed_mtx);
                        if (!frontier->next(base)) return;
                    }
                    local_next.clear();
                    local_out.clear();
                    for (VertexSet nbhd = nbhd_lo;; ++nbhd) {
                        scratch.assign_extension(base, nbhd);
                        // Any pattern copy in the extension must pass through
                        // the new vertex; the base is pattern-free already.
                        if (is_free_anchored(scratch, config.patterns, n)) {
                            if (is_q_colorable(scratch, k - 1)) {
                                if (keep_frontier) local_next.push_back(canonical_form(scratch));
                            } else {
                                // The base is (k-1)-colorable, so adding one
                                // vertex pins the chromatic number at exactly k.
                                bool ok = true;
                                for (int v = 0; v <= n && ok; ++v)
                                    if (set_size(scratch.row(v)) < k - 1) ok = false;
                                if (ok && find_comparable_pair(scratch)) ok = false;
                                const VertexSet all = scratch.vertex_set();
                                // Deleting the new vertex gives back the
                                // (k-1)-colorable base, so skip it.
                                for (int v = 0; v < n && ok; ++v)
                                    if (!is_q_colorable(induced_subgraph(scratch, all & ~vbit(v)),
                                                        k - 1))
                                        ok = false;
                                if (ok) local_out.push_back(canonical_form(scratch));
                            }
                        }
                        if (nbhd == nbhd_hi) break;
                    }
                    {
                        std::lock_guard lk(merge_mtx);
                        for (const CanonicalForm& f : local_out) emit(f);
                        for (const CanonicalForm& f : local_next)
                            if (dedup.insert(f).second) {
                                dedup_bytes += form_bytes(f);
                                next->add(from_canonical_form(f));
                            }
                        if (dedup_bytes + outputs_bytes > budget) {
                            if (!error)
                                error = std::make_exception_ptr(MemoryBudgetExceeded(n + 1));
                            stop.store(true, std::memory_order_relaxed);
                            return;
                        }
                    }
                }
            } catch (...) {
                std::lock_guard lk(merge_mtx);
                if (!error) error = std::current_exception();
                stop.store(true, std::memory_order_relaxed);
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
        if (error) std::rethrow_exception(error);

        if (keep_frontier) run.frontier_sizes[n + 1] = dedup.size();
        if (config.progress) {
            std::uint64_t crit_here = 0;
            for (const CanonicalForm& f : outputs)
                if (f.n == n + 1) ++crit_here;
            config.progress(n + 1, crit_here, keep_frontier ? dedup.size() : 0);
        }
        frontier = std::move(next);
    }

    run.outputs.assign(outputs.begin(), outputs.end());
    std::sort(run.outputs.begin(), run.outputs.end());
    for (const CanonicalForm& f : run.outputs) ++run.per_order_counts[f.n];
    run.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    return run;
}

std::vector<CanonicalForm> brute_force_reference(int k, const std::vector<Pattern>& patterns,
                                                 int n_max) {
    if (k < 1) throw std::invalid_argument("brute_force_reference: k must be positive");
    if (n_max < 1 || n_max > 8)
        throw std::invalid_argument("brute_force_reference: capped at 8 vertices");
    std::vector<CanonicalForm> out;
    std::vector<Graph> level{Graph(1)};
    for (int n = 1;; ++n) {
        for (const Graph& g : level) {
            if (!is_free(g, patterns)) continue;
            if (is_k_vertex_critical(g, k, false).is_vertex_critical)
                out.push_back(canonical_form(g));
        }
        if (n == n_max) break;
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        std::vector<Graph> next;
        for (const Graph& g : level)
            for (VertexSet nbhd = 0;; ++nbhd) {
                auto f = canonical_form(add_vertex(g, nbhd));
                if (seen.insert(f).second) next.push_back(from_canonical_form(f));
                if (nbhd == full_set(n)) break;
            }
        level = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CorpusMatch match_against_corpus(const GenerationRun& run, const std::vector<Graph>& corpus) {
    CorpusMatch m;
    if (corpus.empty()) return m;
    std::vector<CanonicalForm> ref;
    ref.reserve(corpus.size());
    for (const Graph& g : corpus) ref.push_back(canonical_form(g));
    std::sort(ref.begin(), ref.end());
    m.order_lo = ref.front().n;
    m.order_hi = ref.back().n;

    std::vector<CanonicalForm> got;
    for (const CanonicalForm& f : run.outputs)  // run.outputs is sorted
        if (f.n >= m.order_lo && f.n <= m.order_hi) got.push_back(f);

    std::size_t i = 0, j = 0;
    while (i < got.size() && j < ref.size()) {
        if (got[i] == ref[j]) {
            ++m.matched;
            ++i;
            ++j;
        } else if (got[i] < ref[j]) {
            m.unmatched_outputs.push_back(got[i++]);
        } else {
            m.unmatched_corpus.push_back(ref[j++]);
        }
    }
    while (i < got.size()) m.unmatched_outputs.push_back(got[i++]);
    while (j < ref.size()) m.unmatched_corpus.push_back(ref[j++]);
    return m;
}

} // namespace vcrit

// Command-line front end: generation, verification and classification of
// k-vertex-critical pattern-free graphs.
//
// Exit codes: 0 success, 1 invalid input or failed verification, 2 memory
// budget exceeded, 3 a queried graph is not colorable as asked.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcrit/canonical.hpp"
#include "vcrit/coloring.hpp"
#include "vcrit/criticality.hpp"
#include "vcrit/generation.hpp"
#include "vcrit/graph.hpp"
#include "vcrit/graph_io.hpp"
#include "vcrit/patterns.hpp"
#include "vcrit/structure.hpp"

using json = nlohmann::json;
using namespace vcrit;

namespace {

std::string set_str(VertexSet s) {
    std::string r = "{";
    bool first = true;
    for_each_vertex(s, [&](int v) {
        if (!first) r += ",";
        r += std::to_string(v);
        first = false;
    });
    return r + "}";
}

// "P5,gem" or "@file" entries (one stored graph per line becomes one pattern).
std::vector<Pattern> parse_pattern_spec(const std::string& spec) {
    std::vector<Pattern> ps;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok[0] == '@') {
            const std::string path = tok.substr(1);
            const std::vector<Graph> gs = read_graph_file(path);
            for (std::size_t i = 0; i < gs.size(); ++i)
                ps.push_back({path + "#" + std::to_string(i), gs[i]});
        } else {
            ps.push_back(pattern_by_name(tok));
        }
    }
    return ps;
}

std::vector<Graph> read_inputs(const std::vector<std::string>& paths) {
    std::vector<Graph> gs;
    for (const std::string& p : paths) {
        std::vector<Graph> part = p == "-" ? read_graphs(std::cin) : read_graph_file(p);
        gs.insert(gs.end(), part.begin(), part.end());
    }
    return gs;
}

GraphFormat format_from_name(const std::string& name) {
    return name == "adj" ? GraphFormat::adjacency : GraphFormat::graph6;
}

std::string emit_graph(const Graph& g, GraphFormat fmt) {
    return fmt == GraphFormat::adjacency ? emit_adjacency_list(g) : emit_graph6(g);
}

std::vector<std::string> pattern_names(const std::vector<Pattern>& ps) {
    std::vector<std::string> names;
    names.reserve(ps.size());
    for (const Pattern& p : ps) names.push_back(p.name);
    return names;
}

void write_report(const std::string& path, const json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report file " + path);
    out << j.dump(2) << "\n";
}

struct OutStream {
    explicit OutStream(const std::string& path) {
        if (path != "-") {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& get() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

// ---- generate ----------------------------------------------------------

struct GenerateOpts {
    int k = 0;
    int n_max = 0;
    std::string patterns;
    int workers = 1;
    std::uint64_t max_mem = 2ull << 30;
    std::string out = "-";
    std::string report;
    std::string format = "g6";
    bool include_disconnected = false;
    bool skip_final_frontier = false;
};

int cmd_generate(const GenerateOpts& o) {
    GenerationConfig cfg;
    cfg.k = o.k;
    cfg.patterns = parse_pattern_spec(o.patterns);
    cfg.n_max = o.n_max;
    cfg.connected_only = !o.include_disconnected;
    cfg.workers = o.workers;
    cfg.max_mem_bytes = o.max_mem;
    cfg.skip_final_frontier = o.skip_final_frontier;
    cfg.progress = [](int level, std::uint64_t crit, std::uint64_t frontier) {
        std::cerr << "level " << level << " done: " << crit << " critical, frontier " << frontier
                  << std::endl;
    };

    const GenerationRun run = generate(cfg);
    const GraphFormat fmt = format_from_name(o.format);

    OutStream out(o.out);
    std::vector<std::string> lines;
    lines.reserve(run.outputs.size());
    for (const CanonicalForm& f : run.outputs) lines.push_back(emit_graph(from_canonical_form(f), fmt));
    for (const std::string& line : lines) out.get() << line << "\n";

    std::cerr << "k=" << cfg.k << " n_max=" << cfg.n_max << " patterns=" << o.patterns << "\n";
    for (int n = 1; n <= cfg.n_max; ++n) {
        const auto fit = run.frontier_sizes.find(n);
        const auto cit = run.per_order_counts.find(n);
        if (fit == run.frontier_sizes.end() && cit == run.per_order_counts.end()) continue;
        std::cerr << "  n=" << n << ": " << (cit == run.per_order_counts.end() ? 0 : cit->second)
                  << " critical";
        if (fit != run.frontier_sizes.end()) std::cerr << ", frontier " << fit->second;
        std::cerr << "\n";
    }
    std::cerr << "total " << run.outputs.size() << " graphs in " << run.elapsed.count() << " ms\n";

    if (!o.report.empty()) {
        json counts = json::object(), frontier = json::object();
        for (const auto& [n, c] : run.per_order_counts) counts[std::to_string(n)] = c;
        for (const auto& [n, c] : run.frontier_sizes) frontier[std::to_string(n)] = c;
        write_report(o.report, json{{"schema", 1},
                                    {"command", "generate"},
                                    {"k", cfg.k},
                                    {"patterns", pattern_names(cfg.patterns)},
                                    {"n_max", cfg.n_max},
                                    {"connected_only", cfg.connected_only},
                                    {"workers", cfg.workers},
                                    {"skip_final_frontier", cfg.skip_final_frontier},
                                    {"elapsed_ms", run.elapsed.count()},
                                    {"total", run.outputs.size()},
                                    {"per_order_counts", counts},
                                    {"frontier_sizes", frontier},
                                    {"graphs", lines}});
    }
    return 0;
}

// ---- verify ------------------------------------------------------------

struct VerifyOpts {
    int k = 0;
    std::string patterns;
    std::vector<std::string> inputs{"-"};
    std::string report;
};

int cmd_verify(const VerifyOpts& o) {
    const std::vector<Pattern> ps = parse_pattern_spec(o.patterns);
    const std::vector<Graph> gs = read_inputs(o.inputs);
    json items = json::array(), failures = json::array();
    bool all_ok = true;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const Graph& g = gs[i];
        std::vector<std::string> reasons;
        for (const Pattern& p : ps)
            if (auto w = find_induced(g, p.graph))
                reasons.push_back("contains " + p.name + " at " + set_str(*w));
        const CriticalityReport rep = is_k_vertex_critical(g, o.k, true);
        if (rep.chi != o.k)
            reasons.push_back("chi=" + std::to_string(rep.chi) + ", expected " + std::to_string(o.k));
        else if (!rep.is_vertex_critical)
            reasons.push_back("not vertex-critical: deleting vertex " +
                              std::to_string(*rep.failing_vertex) + " keeps chi=" +
                              std::to_string(o.k));
        if (rep.clique_cutset) reasons.push_back("clique cutset " + set_str(*rep.clique_cutset));
        if (rep.comparable_pair)
            reasons.push_back("comparable pair (" + std::to_string(rep.comparable_pair->first) +
                              "," + std::to_string(rep.comparable_pair->second) + ")");
        if (rep.dominated_pair)
            reasons.push_back("dominated pair X=" + set_str(rep.dominated_pair->x) +
                              " Y=" + set_str(rep.dominated_pair->y));
        const bool ok = reasons.empty();
        all_ok = all_ok && ok;
        std::cout << "graph " << i << " (n=" << g.order() << "): " << (ok ? "ok" : "FAIL");
        for (const std::string& r : reasons) std::cout << "; " << r;
        std::cout << "\n";
        items.push_back({{"index", i}, {"order", g.order()}, {"ok", ok}});
        if (!ok) failures.push_back({{"index", i}, {"reasons", reasons}});
    }
    std::cout << (all_ok ? "all " : "FAILED: ") << gs.size() << " graphs"
              << (all_ok ? " verified\n" : " checked, some failed\n");
    if (!o.report.empty())
        write_report(o.report, json{{"schema", 1},
                                    {"command", "verify"},
                                    {"k", o.k},
                                    {"patterns", pattern_names(ps)},
                                    {"total", gs.size()},
                                    {"ok", all_ok},
                                    {"graphs", items},
                                    {"failures", failures}});
    return all_ok ? 0 : 1;
}

// ---- free / chi / colorable ---------------------------------------------

struct FreeOpts {
    std::string patterns;
    std::vector<std::string> inputs{"-"};
};

int cmd_free(const FreeOpts& o) {
    const std::vector<Pattern> ps = parse_pattern_spec(o.patterns);
    const std::vector<Graph> gs = read_inputs(o.inputs);
    bool all_free = true;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        std::string hit;
        for (const Pattern& p : ps) {
            if (auto w = find_induced(gs[i], p.graph)) {
                hit = "contains " + p.name + " at " + set_str(*w);
                break;
            }
        }
        all_free = all_free && hit.empty();
        std::cout << "graph " << i << ": " << (hit.empty() ? "free" : hit) << "\n";
    }
    return all_free ? 0 : 1;
}

struct ChiOpts {
    std::vector<std::string> inputs{"-"};
    bool witness = false;
};

int cmd_chi(const ChiOpts& o) {
    const std::vector<Graph> gs = read_inputs(o.inputs);
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const ColoringResult col = chromatic_number(gs[i]);
        const CliqueResult clq = clique_number(gs[i]);
        std::cout << "graph " << i << ": chi=" << col.chi << " omega=" << clq.omega
                  << " n=" << gs[i].order() << " m=" << gs[i].edge_count();
        if (o.witness) {
            std::cout << " colors=";
            for (std::size_t v = 0; v < col.assignment.size(); ++v)
                std::cout << (v ? " " : "") << col.assignment[v];
            std::cout << " clique=" << set_str(clq.witness);
        }
        std::cout << "\n";
    }
    return 0;
}

struct ColorableOpts {
    int q = 0;
    std::vector<std::string> inputs{"-"};
    bool witness = false;
};

int cmd_colorable(const ColorableOpts& o) {
    const std::vector<Graph> gs = read_inputs(o.inputs);
    bool all = true;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const auto col = is_q_colorable(gs[i], o.q);
        all = all && col.has_value();
        std::cout << "graph " << i << ": " << (col ? "colorable" : "not colorable") << " with "
                  << o.q << " colors";
        if (col && o.witness) {
            std::cout << " colors=";
            for (std::size_t v = 0; v < col->size(); ++v) std::cout << (v ? " " : "") << (*col)[v];
        }
        std::cout << "\n";
    }
    return all ? 0 : 3;
}

// ---- partition -----------------------------------------------------------

struct PartitionOpts {
    std::vector<std::string> inputs{"-"};
    std::vector<int> cycle;
    bool audit = false;
    bool all_cycles = false;
};

void print_partition(const C5Partition& p) {
    std::cout << "cycle: (" << p.q[0];
    for (int i = 1; i < 5; ++i) std::cout << "," << p.q[i];
    std::cout << ")\n";
    std::cout << "z: " << set_str(p.z) << "\nu: " << set_str(p.u) << "\n";
    for (int i = 0; i < 5; ++i) std::cout << "c[" << i << "]: " << set_str(p.c[i]) << "\n";
    for (int i = 0; i < 5; ++i) std::cout << "y[" << i << "]: " << set_str(p.y[i]) << "\n";
    for (int i = 0; i < 5; ++i) std::cout << "t[" << i << "]: " << set_str(p.t[i]) << "\n";
    for (int i = 0; i < 5; ++i) std::cout << "f[" << i << "]: " << set_str(p.f[i]) << "\n";
    std::cout << "other: " << set_str(p.other) << "\n";
}

int cmd_partition(const PartitionOpts& o) {
    const std::vector<Graph> gs = read_inputs(o.inputs);
    bool clean = true;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const Graph& g = gs[i];
        std::cout << "graph " << i << " (n=" << g.order() << "):\n";
        if (o.all_cycles) {
            const auto violations = audit_all_c5_partitions(g);
            const auto cycles = all_induced_c5(g);
            std::cout << cycles.size() << " induced 5-cycles, " << violations.size()
                      << " violations\n";
            for (const std::string& v : violations) std::cout << "  " << v << "\n";
            clean = clean && violations.empty();
            continue;
        }
        std::array<int, 5> q{};
        if (!o.cycle.empty()) {
            for (int j = 0; j < 5; ++j) q[static_cast<std::size_t>(j)] = o.cycle[static_cast<std::size_t>(j)];
        } else {
            const auto cycles = all_induced_c5(g);
            if (cycles.empty()) {
                std::cout << "no induced 5-cycle\n";
                clean = false;
                continue;
            }
            q = cycles.front();
        }
        const C5Partition p = c5_partition(g, q);
        print_partition(p);
        if (o.audit) {
            const auto violations = audit_c5_claims(g, p);
            for (const std::string& v : violations) std::cout << "  violation: " << v << "\n";
            if (violations.empty()) std::cout << "all claims hold\n";
            clean = clean && violations.empty();
        }
    }
    return clean ? 0 : 1;
}

// ---- decide --------------------------------------------------------------

struct DecideOpts {
    int k = 0;
    std::string list_path;
    std::string patterns;
    bool audit_list = false;
    std::vector<std::string> inputs{"-"};
};

int cmd_decide(const DecideOpts& o) {
    const std::vector<Graph> crit = read_graph_file(o.list_path);
    if (o.audit_list) {
        const std::vector<Pattern> ps = parse_pattern_spec(o.patterns);
        if (auto bad = audit_critical_list(crit, o.k, ps)) {
            std::cerr << "error: critical list fails its audit: " << *bad << "\n";
            return 1;
        }
        std::cout << "list audit: " << crit.size() << " graphs sound\n";
    }
    const std::vector<Graph> gs = read_inputs(o.inputs);
    bool all = true;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const bool yes = decide_by_critical_list(gs[i], o.k, crit);
        all = all && yes;
        std::cout << "graph " << i << ": " << (yes ? "" : "not ") << (o.k - 1) << "-colorable\n";
    }
    return all ? 0 : 3;
}

// ---- convert / oracle -----------------------------------------------------

struct ConvertOpts {
    std::string format;
    std::vector<std::string> inputs{"-"};
    std::string out = "-";
};

int cmd_convert(const ConvertOpts& o) {
    const std::vector<Graph> gs = read_inputs(o.inputs);
    const GraphFormat fmt = format_from_name(o.format);
    OutStream out(o.out);
    for (const Graph& g : gs) out.get() << emit_graph(g, fmt) << "\n";
    return 0;
}

struct OracleOpts {
    std::string what;
    std::vector<std::string> inputs{"-"};
};

int cmd_oracle(const OracleOpts& o) {
    const std::vector<Graph> gs = read_inputs(o.inputs);
    if (o.what == "iso") {
        if (gs.size() != 2) throw std::invalid_argument("oracle iso needs exactly two graphs");
        const bool iso = are_isomorphic(gs[0], gs[1]);
        std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
        return iso ? 0 : 1;
    }
    int rc = 0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const Graph& g = gs[i];
        std::cout << "graph " << i << ": ";
        if (o.what == "canon") {
            std::cout << emit_graph6(canonical_graph(g)) << "\n";
        } else if (o.what == "homog") {
            const auto sets = find_homogeneous_sets(g);
            if (sets.empty()) {
                std::cout << "none\n";
            } else {
                for (std::size_t j = 0; j < sets.size(); ++j)
                    std::cout << (j ? " " : "") << set_str(sets[j]);
                std::cout << "\n";
            }
        } else if (o.what == "hclass") {
            if (auto w = recognize_h_class(g)) {
                std::cout << "member";
                for (int j = 0; j < 7; ++j)
                    std::cout << " A" << j + 1 << "=" << set_str(w->parts[static_cast<std::size_t>(j)]);
                std::cout << "\n";
            } else {
                std::cout << "not a member\n";
                rc = 1;
            }
        } else if (o.what == "perfect") {
            const PerfectionReport rep = is_perfect_small(g);
            if (rep.perfect)
                std::cout << "perfect\n";
            else
                std::cout << "imperfect: odd " << (rep.witness_in_complement ? "antihole" : "hole")
                          << " " << set_str(rep.witness) << "\n";
        } else if (o.what == "c5") {
            const auto cycles = all_induced_c5(g);
            std::cout << cycles.size() << " induced 5-cycles";
            for (const auto& q : cycles) {
                std::cout << " (" << q[0];
                for (int j = 1; j < 5; ++j) std::cout << "," << q[static_cast<std::size_t>(j)];
                std::cout << ")";
            }
            std::cout << "\n";
        } else {
            throw std::invalid_argument("unknown oracle query " + o.what);
        }
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generation, verification and classification of k-vertex-critical "
                 "pattern-free graphs"};
    app.require_subcommand(1);

    GenerateOpts gen;
    CLI::App* sc_gen = app.add_subcommand("generate", "exhaustively generate the k-vertex-critical"
                                                      " pattern-free graphs up to n-max vertices");
    sc_gen->add_option("-k", gen.k, "criticality level")->required();
    sc_gen->add_option("-n,--n-max", gen.n_max, "largest vertex count to search")->required();
    sc_gen->add_option("-H,--patterns", gen.patterns,
                       "comma list of forbidden patterns (P5, C5, Kn:4, gem, coP3P2, 2P2, P1K3,"
                       " banner, @file)");
    sc_gen->add_option("--workers", gen.workers, "worker threads")->check(CLI::PositiveNumber);
    sc_gen->add_option("--max-mem", gen.max_mem, "memory budget (bytes; suffixes K/M/G)")
        ->transform(CLI::AsSizeValue(false));
    sc_gen->add_option("--out", gen.out, "output file for the graphs ('-' = stdout)");
    sc_gen->add_option("--report", gen.report, "write a JSON run report here");
    sc_gen->add_option("--format", gen.format, "output format")
        ->check(CLI::IsMember({"g6", "adj"}));
    sc_gen->add_flag("--include-disconnected", gen.include_disconnected,
                     "also expand disconnected intermediates (audit mode; same outputs)");
    sc_gen->add_flag("--skip-final-frontier", gen.skip_final_frontier,
                     "do not retain the never-expanded frontier of the last level");

    VerifyOpts ver;
    CLI::App* sc_ver = app.add_subcommand("verify", "audit that stored graphs are k-vertex-critical,"
                                                    " pattern-free and structurally sound");
    sc_ver->add_option("-k", ver.k, "criticality level")->required();
    sc_ver->add_option("-H,--patterns", ver.patterns, "comma list of forbidden patterns");
    sc_ver->add_option("inputs", ver.inputs, "graph files ('-' = stdin)");
    sc_ver->add_option("--report", ver.report, "write a JSON report here");

    FreeOpts fre;
    CLI::App* sc_free = app.add_subcommand("free", "test stored graphs for induced pattern copies");
    sc_free->add_option("-H,--patterns", fre.patterns, "comma list of forbidden patterns")
        ->required();
    sc_free->add_option("inputs", fre.inputs, "graph files ('-' = stdin)");

    ChiOpts chi;
    CLI::App* sc_chi = app.add_subcommand("chi", "chromatic and clique number of stored graphs");
    sc_chi->add_option("inputs", chi.inputs, "graph files ('-' = stdin)");
    sc_chi->add_flag("--witness", chi.witness, "print an optimal coloring and a maximum clique");

    ColorableOpts col;
    CLI::App* sc_col = app.add_subcommand("colorable", "decide q-colorability of stored graphs");
    sc_col->add_option("-q", col.q, "number of colors")->required();
    sc_col->add_option("inputs", col.inputs, "graph files ('-' = stdin)");
    sc_col->add_flag("--witness", col.witness, "print a witness coloring");

    PartitionOpts par;
    CLI::App* sc_par = app.add_subcommand("partition", "classify vertices around an induced 5-cycle");
    sc_par->add_option("inputs", par.inputs, "graph files ('-' = stdin)");
    sc_par->add_option("--cycle", par.cycle, "five cycle vertices in cyclic order")
        ->expected(5)
        ->delimiter(',');
    sc_par->add_flag("--audit", par.audit, "check the structural claims for the partition");
    sc_par->add_flag("--all", par.all_cycles, "audit the partition around every induced 5-cycle");

    DecideOpts dec;
    CLI::App* sc_dec = app.add_subcommand("decide", "decide (k-1)-colorability by induced-"
                                                    "containment against a critical list");
    sc_dec->add_option("-k", dec.k, "criticality level of the list")->required();
    sc_dec->add_option("--list", dec.list_path, "file with the complete critical list")->required();
    sc_dec->add_option("-H,--patterns", dec.patterns, "patterns for the list audit");
    sc_dec->add_flag("--audit-list", dec.audit_list, "verify the list before deciding");
    sc_dec->add_option("inputs", dec.inputs, "graph files ('-' = stdin)");

    ConvertOpts con;
    CLI::App* sc_con = app.add_subcommand("convert", "re-serialize stored graphs");
    sc_con->add_option("--format", con.format, "output format")
        ->required()
        ->check(CLI::IsMember({"g6", "adj"}));
    sc_con->add_option("inputs", con.inputs, "graph files ('-' = stdin)");
    sc_con->add_option("--out", con.out, "output file ('-' = stdout)");

    OracleOpts ora;
    CLI::App* sc_ora = app.add_subcommand("oracle", "structural one-off queries on stored graphs");
    sc_ora->add_option("--what", ora.what, "query")
        ->required()
        ->check(CLI::IsMember({"canon", "iso", "homog", "hclass", "perfect", "c5"}));
    sc_ora->add_option("inputs", ora.inputs, "graph files ('-' = stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sc_gen->parsed()) return cmd_generate(gen);
        if (sc_ver->parsed()) return cmd_verify(ver);
        if (sc_free->parsed()) return cmd_free(fre);
        if (sc_chi->parsed()) return cmd_chi(chi);
        if (sc_col->parsed()) return cmd_colorable(col);
        if (sc_par->parsed()) return cmd_partition(par);
        if (sc_dec->parsed()) return cmd_decide(dec);
        if (sc_con->parsed()) return cmd_convert(con);
        if (sc_ora->parsed()) return cmd_oracle(ora);
    } catch (const MemoryBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

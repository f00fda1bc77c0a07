#include "vcrit/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "vcrit/patterns.hpp"

namespace vcrit {

namespace {

bool complete_between(const Graph& g, VertexSet a, VertexSet b) {
    bool ok = true;
    for_each_vertex(a, [&](int v) {
        if ((b & ~g.row(v)) != 0) ok = false;
    });
    return ok;
}

bool anticomplete_between(const Graph& g, VertexSet a, VertexSet b) {
    bool ok = true;
    for_each_vertex(a, [&](int v) {
        if ((b & g.row(v)) != 0) ok = false;
    });
    return ok;
}

bool is_independent(const Graph& g, VertexSet s) {
    bool ok = true;
    for_each_vertex(s, [&](int v) {
        if ((s & g.row(v)) != 0) ok = false;
    });
    return ok;
}

bool is_clique_set(const Graph& g, VertexSet s) {
    bool ok = true;
    for_each_vertex(s, [&](int v) {
        if ((s & ~vbit(v) & ~g.row(v)) != 0) ok = false;
    });
    return ok;
}

// Connected components of G[within], as sets of original vertices.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> comps;
    VertexSet left = within;
    while (left != 0) {
        VertexSet comp = vbit(set_min(left));
        for (;;) {
            VertexSet grown = comp;
            for_each_vertex(comp, [&](int v) { grown |= g.row(v) & within; });
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

bool is_homogeneous(const Graph& g, VertexSet s) {
    bool ok = true;
    for_each_vertex(g.vertex_set() & ~s, [&](int w) {
        const VertexSet hit = g.row(w) & s;
        if (hit != 0 && hit != s) ok = false;
    });
    return ok;
}

} // namespace

C5Partition c5_partition(const Graph& g, const std::array<int, 5>& q) {
    VertexSet qset = 0;
    for (int v : q) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("cycle vertex out of range");
        qset |= vbit(v);
    }
    if (set_size(qset) != 5) throw std::invalid_argument("cycle vertices must be distinct");
    for (int i = 0; i < 5; ++i) {
        if (!g.edge(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>((i + 1) % 5)]) ||
            g.edge(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>((i + 2) % 5)]))
            throw std::invalid_argument("vertices do not induce a 5-cycle in the given order");
    }

    // class of each of the 32 possible neighborhoods on Q
    enum Cls { kOther = 0, kZ, kU, kC, kY, kT, kF };
    int cls[32], idx[32];
    std::fill(std::begin(cls), std::end(cls), kOther);
    std::fill(std::begin(idx), std::end(idx), 0);
    auto bit = [](int i) { return 1 << ((i % 5 + 5) % 5); };
    cls[0] = kZ;
    cls[31] = kU;
    for (int i = 0; i < 5; ++i) {
        cls[bit(i - 1) | bit(i + 1)] = kC;
        idx[bit(i - 1) | bit(i + 1)] = i;
        cls[bit(i - 2) | bit(i) | bit(i + 2)] = kY;
        idx[bit(i - 2) | bit(i) | bit(i + 2)] = i;
        cls[bit(i - 1) | bit(i) | bit(i + 1)] = kT;
        idx[bit(i - 1) | bit(i) | bit(i + 1)] = i;
        cls[31 ^ bit(i)] = kF;
        idx[31 ^ bit(i)] = i;
    }

    C5Partition part;
    part.q = q;
    for_each_vertex(g.vertex_set() & ~qset, [&](int v) {
        int m = 0;
        for (int i = 0; i < 5; ++i)
            if (g.edge(v, q[static_cast<std::size_t>(i)])) m |= 1 << i;
        const std::size_t i = static_cast<std::size_t>(idx[m]);
        switch (cls[m]) {
            case kZ: part.z |= vbit(v); break;
            case kU: part.u |= vbit(v); break;
            case kC: part.c[i] |= vbit(v); break;
            case kY: part.y[i] |= vbit(v); break;
            case kT: part.t[i] |= vbit(v); break;
            case kF: part.f[i] |= vbit(v); break;
            default: part.other |= vbit(v); break;
        }
    });
    return part;
}

bool is_mixed(const Graph& g, int v, VertexSet s) {
    if (s == 0) throw std::invalid_argument("mixedness on an empty set");
    if (set_contains(s, v)) throw std::invalid_argument("vertex belongs to the set");
    const VertexSet hit = g.row(v) & s;
    return hit != 0 && hit != s;
}

namespace detail {

namespace {

bool set_lex_less(VertexSet a, VertexSet b) {
    // compare as ascending member lists
    while (a != 0 && b != 0) {
        const int va = set_min(a), vb = set_min(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<VertexSet> keep_maximal_sorted(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> maximal;
    for (VertexSet s : sets) {
        bool covered = false;
        for (VertexSet t : sets) {
            if (t != s && (s & ~t) == 0) {
                covered = true;
                break;
            }
        }
        if (!covered) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end(), set_lex_less);
    return maximal;
}

} // namespace

std::vector<VertexSet> maximal_homogeneous_brute(const Graph& g) {
    const int n = g.order();
    if (n > 12) throw std::invalid_argument("brute-force homogeneous search limited to 12 vertices");
    std::vector<VertexSet> found;
    const VertexSet all = full_set(n);
    for (VertexSet s = 1; s <= all; ++s) {
        const int size = set_size(s);
        if (size < 2 || size >= n) continue;
        if (is_homogeneous(g, s)) found.push_back(s);
    }
    return keep_maximal_sorted(std::move(found));
}

std::vector<VertexSet> maximal_homogeneous_refine(const Graph& g) {
    // For each v, refine {V - v} by mixed splitters until every class is a
    // module; the classes are the maximal modules avoiding v, and every
    // maximal nontrivial homogeneous set arises as such a class.
    const int n = g.order();
    std::vector<VertexSet> found;
    for (int v = 0; v < n; ++v) {
        std::vector<VertexSet> classes{g.vertex_set() & ~vbit(v)};
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t ci = 0; ci < classes.size() && !changed; ++ci) {
                const VertexSet cl = classes[ci];
                if (set_size(cl) < 2) continue;
                for_each_vertex(g.vertex_set() & ~cl, [&](int u) {
                    if (changed) return;
                    const VertexSet hit = g.row(u) & cl;
                    if (hit != 0 && hit != cl) {
                        classes[ci] = hit;
                        classes.push_back(cl & ~hit);
                        changed = true;
                    }
                });
            }
        }
        for (VertexSet cl : classes)
            if (set_size(cl) >= 2) found.push_back(cl);
    }
    return keep_maximal_sorted(std::move(found));
}

} // namespace detail

std::vector<VertexSet> find_homogeneous_sets(const Graph& g) {
    if (g.order() < 3) return {};
    return g.order() <= 12 ? detail::maximal_homogeneous_brute(g)
                           : detail::maximal_homogeneous_refine(g);
}

namespace {

// Does G[part + v] acquire an induced P4 through v?  Checked with v as an
// endpoint (v-a-b-c) and as an inner vertex (a-v-b-c); the reversed roles are
// covered by path symmetry.
bool extends_p4_free(const Graph& g, VertexSet part, int v) {
    const VertexSet nv = g.row(v);
    // v-a-b-c
    for (VertexSet as = part & nv; as != 0; as &= as - 1) {
        const int a = set_min(as);
        const VertexSet na = g.row(a);
        for (VertexSet bs = part & na & ~nv; bs != 0; bs &= bs - 1) {
            const int b = set_min(bs);
            if ((part & g.row(b) & ~nv & ~na & ~vbit(a)) != 0) return false;
        }
    }
    // a-v-b-c
    for (VertexSet as = part & nv; as != 0; as &= as - 1) {
        const int a = set_min(as);
        const VertexSet na = g.row(a);
        for (VertexSet bs = part & nv & ~na & ~vbit(a); bs != 0; bs &= bs - 1) {
            const int b = set_min(bs);
            if ((part & g.row(b) & ~nv & ~na & ~vbit(a)) != 0) return false;
        }
    }
    return true;
}

// Backtracking assignment of vertices to parts under a pairwise
// complete/anticomplete/unconstrained matrix, with P4-free (or clique) parts,
// every part nonempty, and an optional extra acceptance test on full
// assignments.
struct PartitionSearch {
    const Graph& g;
    int nparts;
    const char* rel;  // rel[p * nparts + q] in {'C','A','U'}
    bool parts_are_cliques;
    bool (*leaf_ok)(const Graph&, const std::vector<VertexSet>&);
    std::vector<VertexSet> parts;

    bool assign(int v) {
        int empty = 0;
        for (const VertexSet p : parts)
            if (p == 0) ++empty;
        if (empty > g.order() - v) return false;  // can't fill every part
        if (v == g.order()) return leaf_ok == nullptr || leaf_ok(g, parts);
        for (int p = 0; p < nparts; ++p) {
            if (!fits(v, p)) continue;
            parts[static_cast<std::size_t>(p)] |= vbit(v);
            if (assign(v + 1)) return true;
            parts[static_cast<std::size_t>(p)] &= ~vbit(v);
        }
        return false;
    }

    bool fits(int v, int p) const {
        const VertexSet nv = g.row(v);
        for (int q = 0; q < nparts; ++q) {
            const VertexSet other = parts[static_cast<std::size_t>(q)];
            if (q == p || other == 0) continue;
            const char r = rel[p * nparts + q];
            if (r == 'C' && (other & ~nv) != 0) return false;
            if (r == 'A' && (other & nv) != 0) return false;
        }
        const VertexSet own = parts[static_cast<std::size_t>(p)];
        if (parts_are_cliques) return (own & ~nv) == 0;
        return extends_p4_free(g, own, v);
    }
};

} // namespace

std::optional<HClassWitness> recognize_h_class(const Graph& g) {
    if (g.order() < 7) return std::nullopt;

    // pairwise relations of the seven-part definition (1-based part names)
    char rel[49];
    std::fill(std::begin(rel), std::end(rel), 'U');
    auto set_rel = [&rel](int a, int b, char r) {
        rel[(a - 1) * 7 + (b - 1)] = r;
        rel[(b - 1) * 7 + (a - 1)] = r;
    };
    set_rel(1, 2, 'C');
    set_rel(1, 5, 'C');
    set_rel(1, 6, 'C');
    set_rel(1, 3, 'A');
    set_rel(1, 4, 'A');
    set_rel(1, 7, 'A');
    set_rel(3, 2, 'C');
    set_rel(3, 4, 'C');
    set_rel(3, 6, 'C');
    set_rel(3, 5, 'A');
    set_rel(3, 7, 'A');
    set_rel(4, 5, 'C');
    set_rel(4, 6, 'C');
    set_rel(4, 2, 'A');
    set_rel(4, 7, 'A');
    set_rel(2, 5, 'A');
    set_rel(2, 6, 'A');
    set_rel(2, 7, 'A');
    set_rel(5, 6, 'A');
    set_rel(5, 7, 'A');

    // The component-homogeneity condition on the seventh part is not monotone
    // under growing parts, so it is tested on complete assignments only.
    auto leaf = [](const Graph& graph, const std::vector<VertexSet>& parts) {
        for (VertexSet comp : components_within(graph, parts[6]))
            if (!is_homogeneous(graph, comp)) return false;
        return true;
    };
    PartitionSearch search{g, 7, rel, false, +leaf, std::vector<VertexSet>(7, 0)};
    if (!search.assign(0)) return std::nullopt;
    HClassWitness witness;
    for (int i = 0; i < 7; ++i)
        witness.parts[static_cast<std::size_t>(i)] = search.parts[static_cast<std::size_t>(i)];
    return witness;
}

std::optional<std::vector<VertexSet>> is_substitution_of(const Graph& g, const Graph& h,
                                                         SubstitutionMode mode) {
    const int m = h.order();
    if (m == 0 || m > g.order()) return std::nullopt;
    std::vector<char> rel(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 'A');
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            if (p != q && h.edge(p, q)) {
                rel[static_cast<std::size_t>(p * m + q)] = 'C';
            }
    PartitionSearch search{g, m, rel.data(), mode == SubstitutionMode::clique, nullptr,
                           std::vector<VertexSet>(static_cast<std::size_t>(m), 0)};
    if (!search.assign(0)) return std::nullopt;
    return search.parts;
}

std::vector<std::array<int, 5>> all_induced_c5(const Graph& g) {
    std::vector<std::array<int, 5>> cycles;
    const int n = g.order();
    std::array<int, 5> pick{};
    auto emit = [&](VertexSet s) {
        // 2-regular on 5 vertices means a 5-cycle; orient it canonically
        const int start = set_min(s);
        VertexSet nbrs = g.row(start) & s;
        const int second = set_min(nbrs);
        std::array<int, 5> cyc{start, second, 0, 0, 0};
        VertexSet seen = vbit(start) | vbit(second);
        for (int i = 2; i < 5; ++i) {
            const VertexSet next = g.row(cyc[static_cast<std::size_t>(i - 1)]) & s & ~seen;
            cyc[static_cast<std::size_t>(i)] = set_min(next);
            seen |= vbit(cyc[static_cast<std::size_t>(i)]);
        }
        cycles.push_back(cyc);
    };
    // enumerate 5-subsets ascending
    for (pick[0] = 0; pick[0] < n; ++pick[0])
        for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
            for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
                for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3])
                    for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4]) {
                        VertexSet s = 0;
                        for (int v : pick) s |= vbit(v);
                        bool two_regular = true;
                        for (int v : pick)
                            if (set_size(g.row(v) & s) != 2) two_regular = false;
                        if (two_regular) emit(s);
                    }
    return cycles;
}

std::vector<std::string> audit_c5_claims(const Graph& g, const C5Partition& p) {
    std::vector<std::string> bad;
    auto expect = [&bad](bool ok, const std::string& what) {
        if (!ok) bad.push_back(what);
    };
    auto cls = [](const char* name, int i) { return std::string(name) + "[" + std::to_string(i) + "]"; };

    expect(p.other == 0, "some vertex matches no neighborhood class");
    expect(is_independent(g, p.z), "z is not independent");

    VertexSet call = 0, tall = 0;
    for (int i = 0; i < 5; ++i) {
        call |= p.c[static_cast<std::size_t>(i)];
        tall |= p.t[static_cast<std::size_t>(i)];
    }
    expect(anticomplete_between(g, p.z, call | tall), "z has a neighbor in a c or t class");

    for (int i = 0; i < 5; ++i) {
        const auto at = [i](const std::array<VertexSet, 5>& a, int off) {
            return a[static_cast<std::size_t>(((i + off) % 5 + 5) % 5)];
        };
        expect(is_clique_set(g, at(p.y, 0) | p.u), cls("y", i) + " + u is not a clique");
        expect(is_clique_set(g, at(p.f, 0) | p.u), cls("f", i) + " + u is not a clique");
        expect(is_independent(g, at(p.c, 0)), cls("c", i) + " is not independent");
        expect(is_independent(g, at(p.y, 0)), cls("y", i) + " is not independent");
        expect(is_independent(g, at(p.f, 0)), cls("f", i) + " is not independent");
        if (at(p.t, 0) != 0) {
            expect(complete_multipartite_parts(induced_subgraph(g, at(p.t, 0))).has_value(),
                   cls("t", i) + " is not complete multipartite");
        }
        expect(complete_between(g, at(p.t, 0), at(p.t, 1)),
               cls("t", i) + " is not complete to " + cls("t", i + 1));
        expect(complete_between(g, at(p.c, 0), at(p.c, 1)),
               cls("c", i) + " is not complete to " + cls("c", i + 1));
        expect(complete_between(g, at(p.c, 0), at(p.t, 0)),
               cls("c", i) + " is not complete to " + cls("t", i));
        expect(anticomplete_between(g, at(p.c, 0), at(p.t, 1)),
               cls("c", i) + " is not anticomplete to " + cls("t", i + 1));
        expect(anticomplete_between(g, at(p.c, 0), at(p.t, -1)),
               cls("c", i) + " is not anticomplete to " + cls("t", i - 1));
        // no t[i+2]/t[i-2] vertex may be mixed on c[i]
        if (at(p.c, 0) != 0) {
            bool unmixed = true;
            for_each_vertex(at(p.t, 2) | at(p.t, -2), [&](int v) {
                if (is_mixed(g, v, at(p.c, 0))) unmixed = false;
            });
            expect(unmixed, "a vertex of " + cls("t", i + 2) + " or " + cls("t", i - 2) +
                                " is mixed on " + cls("c", i));
        }
    }

    // every y/f vertex is unmixed on each component of z
    VertexSet yf = 0;
    for (int i = 0; i < 5; ++i)
        yf |= p.y[static_cast<std::size_t>(i)] | p.f[static_cast<std::size_t>(i)];
    if (p.z != 0 && yf != 0) {
        bool unmixed = true;
        for (VertexSet comp : components_within(g, p.z)) {
            for_each_vertex(yf, [&](int v) {
                if (is_mixed(g, v, comp)) unmixed = false;
            });
        }
        expect(unmixed, "a y or f vertex is mixed on a component of z");
    }
    return bad;
}

std::vector<std::string> audit_all_c5_partitions(const Graph& g) {
    std::vector<std::string> bad;
    for (const auto& cyc : all_induced_c5(g)) {
        const C5Partition p = c5_partition(g, cyc);
        for (const std::string& v : audit_c5_claims(g, p)) {
            std::string where = "C5(";
            for (int i = 0; i < 5; ++i)
                where += (i ? "," : "") + std::to_string(cyc[static_cast<std::size_t>(i)]);
            bad.push_back(where + "): " + v);
        }
    }
    return bad;
}

} // namespace vcrit

#include "cirel/closure.hpp"

#include <algorithm>
#include <chrono>

#include "cirel/dominance.hpp"

namespace cirel {

namespace {

VarSet full_set(const Universe& u) {
    VarSet full{};
    for (std::size_t i = 0; i < u.size(); ++i) full = full.with(i);
    return full;
}

std::vector<VarSet> subsets_of(VarSet mask) {
    std::vector<VarSet> out;
    for_each_subset(mask, [&](VarSet s) { out.push_back(s); });
    return out;
}

void sort_unique(std::vector<Triplet>& v) {
    TripletKeyLess less;
    std::sort(v.begin(), v.end(), less);
    v.erase(std::unique(v.begin(), v.end(),
                        [&](const Triplet& x, const Triplet& y) { return !less(x, y) && !less(y, x); }),
            v.end());
}

// Elements of r not o-dominated by a distinct element of r or extra.
Relation prune_o(const Relation& r, const Relation& extra) {
    Relation out(r.universe());
    for (const Triplet& u : r) {
        bool dominated = false;
        for (const Triplet& v : r) {
            if (!(v == u) && o_dominates(v, u)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            for (const Triplet& v : extra) {
                if (!(v == u) && o_dominates(v, u)) {
                    dominated = true;
                    break;
                }
            }
        }
        if (!dominated) out.insert(u);
    }
    return out;
}

// Elements of r not s-dominated by a distinct element of witnesses.
Relation prune_s_against(const Relation& r, const Relation& witnesses) {
    Relation out(r.universe());
    for (const Triplet& u : r) {
        bool dominated = false;
        for (const Triplet& v : witnesses) {
            if (!(v == u) && s_dominates(v, u)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.insert(u);
    }
    return out;
}

}  // namespace

Relation one_tier_closure(const Relation& m, ClosureReport* report) {
    auto t0 = std::chrono::steady_clock::now();
    Relation cur(m.universe());
    for (const Triplet& t : m) cur.insert(Triplet{t.a, t.b, t.c, Flavor::ordinary});

    std::size_t iterations = 0;
    while (true) {
        ++iterations;
        Relation before = cur;
        std::vector<Triplet> snap(cur.begin(), cur.end());
        for (const Triplet& u : snap) {
            for (const Triplet& v : snap) {
                for (const Triplet& ou : {u, u.sym()}) {
                    for (const Triplet& ov : {v, v.sym()}) {
                        if (auto p = star(ou, ov)) cur.insert(*p);
                    }
                }
            }
        }
        cur = prune_o(cur, Relation(m.universe()));
        if (cur == before) break;
    }

    if (report != nullptr) {
        report->iterations = iterations;
        report->card_ms = 0;
        report->card_mu = cur.size();
        report->oracle_checked = false;
        report->step4_enabled = false;
        report->elapsed = std::chrono::steady_clock::now() - t0;
    }
    return cur;
}

std::vector<Triplet> step3a_products(const Triplet& u, const Triplet& v, std::size_t n_vars) {
    std::vector<Triplet> out;
    VarSet a = u.a, b = u.b, c = u.c;
    VarSet i = v.a, j = v.b, k = v.c;
    VarSet abc = a | b | c;
    if (!(k - abc).empty()) return out;

    VarSet ijk = i | j | k;
    VarSet k0 = k | (c - ijk);
    VarSet l = VarSet{(n_vars >= kMaxVariables) ? ~std::uint64_t{0}
                                                : ((std::uint64_t{1} << n_vars) - 1)} -
               ijk;
    // Base product of <A,B|C> with <I,J|K0>.
    VarSet x = a & i;
    VarSet y = (j - c) | (b & (ijk | k0));
    VarSet z = c | (a & k0);

    // Admissible single-variable reshapes of <I,J|K0>, combined freely:
    // drop I-variables shared with A or B, drop J-variables outside C (the
    // second argument must keep a nonempty second component), or grow the
    // conditioning by outside variables from A or B.
    for (VarSet s_ia : subsets_of(i & a)) {
        for (VarSet s_ib : subsets_of(i & b)) {
            for (VarSet s_j : subsets_of(j - c)) {
                if ((j - s_j).empty()) continue;
                for (VarSet s_ka : subsets_of(l & a)) {
                    for (VarSet s_kb : subsets_of(l & b)) {
                        VarSet nx = x - s_ia;
                        VarSet ny = (y - (s_ib | s_j)) | s_kb;
                        if (nx.empty() || ny.empty()) continue;
                        VarSet nz = z | s_ka;
                        out.push_back(make_triplet(nx, ny, nz, Flavor::ordinary));
                    }
                }
            }
        }
    }
    sort_unique(out);
    return out;
}

std::vector<Triplet> step3b_products(const Triplet& u, const Triplet& v, std::size_t n_vars) {
    std::vector<Triplet> out;
    VarSet a = u.a, b = u.b, c = u.c;
    VarSet i = v.a, j = v.b, k = v.c;
    VarSet ijk = i | j | k;
    if (!(c - ijk).empty()) return out;

    VarSet full{(n_vars >= kMaxVariables) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_vars) - 1)};
    VarSet d = full - (a | b | c);
    VarSet c0 = c | (k & d);
    // Base product of <A,B|C0> with <I,J|K>.
    VarSet x = a & i;
    VarSet y = (j - c0) | (b & ijk);
    VarSet z = c0 | (a & k);

    // Reshapes of the first argument: drop A- or B-variables shared with I
    // (keeping B nonempty), or grow the conditioning by outside variables
    // from I.
    for (VarSet s_a : subsets_of(a & i)) {
        for (VarSet s_b : subsets_of(b & i)) {
            if ((b - s_b).empty()) continue;
            for (VarSet s_c : subsets_of(d & i)) {
                VarSet nx = x - s_a;
                VarSet ny = y - s_b;
                if (nx.empty() || ny.empty()) continue;
                VarSet nz = z | s_c;
                out.push_back(make_triplet(nx, ny, nz, Flavor::ordinary));
            }
        }
    }
    sort_unique(out);
    return out;
}

Relation step4_promote(const Relation& ms) {
    VarSet full = full_set(ms.universe());
    Relation cur(ms.universe());
    for (const Triplet& t : ms) cur.insert(Triplet{t.a, t.b, t.c, Flavor::stable});

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Triplet> snap(cur.begin(), cur.end());
        for (const Triplet& t : snap) {
            t.c.for_each([&](std::size_t dvar) {
                VarSet cp = t.c.without(dvar);
                // The shrunk statement holds if every one-variable extension
                // of its conditioning is already covered.
                bool covered = true;
                (full - (t.a | t.b | cp)).for_each([&](std::size_t e) {
                    if (!covered) return;
                    Triplet probe{t.a, t.b, cp.with(e), Flavor::stable};
                    bool witnessed = false;
                    for (const Triplet& w : cur) {
                        if (s_dominates(w, probe)) {
                            witnessed = true;
                            break;
                        }
                    }
                    if (!witnessed) covered = false;
                });
                if (covered) {
                    if (cur.insert(Triplet{t.a, t.b, cp, Flavor::stable}) == InsertOutcome::inserted)
                        changed = true;
                }
            });
        }
    }
    return maximal_elements(cur, DominanceKind::s_dominance);
}

HybridResult hybrid_closure(const MixedRepresentation& m, bool step4) {
    auto t0 = std::chrono::steady_clock::now();
    const Universe& uni = m.universe();
    std::size_t n = uni.size();

    Relation ms = m.ms();
    Relation mu(uni);
    for (const Triplet& t : m.mu()) {
        if (!ms.contains(t)) mu.insert(t);
    }

    std::size_t iterations = 0;
    while (true) {
        ++iterations;
        Relation ms_before = ms;
        Relation mu_before = mu;
        std::vector<Triplet> ms_snap(ms.begin(), ms.end());
        std::vector<Triplet> mu_snap(mu.begin(), mu.end());

        Relation add_s(uni);
        Relation add_u(uni);

        // Ordinary x ordinary products.
        for (const Triplet& u : mu_snap) {
            for (const Triplet& v : mu_snap) {
                for (const Triplet& ou : {u, u.sym()}) {
                    for (const Triplet& ov : {v, v.sym()}) {
                        if (auto p = star(ou, ov)) add_u.insert(*p);
                    }
                }
            }
        }
        // Stable x stable products.
        for (const Triplet& u : ms_snap) {
            for (const Triplet& v : ms_snap) {
                for (const Triplet& ou : {u, u.sym()}) {
                    for (const Triplet& ov : {v, v.sym()}) {
                        if (auto p = diamond(ou, ov)) add_s.insert(*p);
                    }
                }
            }
        }
        // Mixed products; the stable side stands in for everything it covers.
        for (const Triplet& u : mu_snap) {
            for (const Triplet& v : ms_snap) {
                for (const Triplet& ou : {u, u.sym()}) {
                    for (const Triplet& ov : {v, v.sym()}) {
                        for (const Triplet& p : step3a_products(ou, ov, n)) add_u.insert(p);
                        for (const Triplet& p : step3b_products(ov, ou, n)) add_u.insert(p);
                    }
                }
            }
        }

        for (const Triplet& t : add_s) ms.insert(t);
        // Shrink candidates must come from the dominance-maximal stable tier;
        // dominated products as candidates would let shrinking cascade below
        // the intended conditioning sets.
        ms = prune_s_against(ms, ms);
        if (step4) ms = step4_promote(ms);
        for (const Triplet& t : add_u) {
            if (!ms.contains(t)) mu.insert(t);
        }
        // The stable tier owns any statement present in both.
        for (const Triplet& t : ms) mu.erase(t);

        mu = prune_o(mu, ms);
        mu = prune_s_against(mu, ms);

        if (ms == ms_before && mu == mu_before) break;
    }

    HybridResult result{MixedRepresentation(ms, mu), ClosureReport{}};
    result.report.iterations = iterations;
    result.report.card_ms = ms.size();
    result.report.card_mu = mu.size();
    result.report.oracle_checked = false;
    result.report.step4_enabled = step4;
    result.report.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

}  // namespace cirel

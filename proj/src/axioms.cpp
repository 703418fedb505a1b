#include "cirel/axioms.hpp"

namespace cirel {

namespace {

// Proper nonempty submask split of o.b drives both unary rules: from
// <X, Y1+Y2 | Z> derive <X, Y1 | Z> and <X, Y1 | Z+Y2>.
void collect_unary_consequences(const Triplet& o, std::vector<std::pair<Axiom, Triplet>>& out) {
    for_each_subset(o.b, [&](VarSet y1) {
        if (y1.empty() || y1 == o.b) return;
        VarSet y2 = o.b - y1;
        out.emplace_back(Axiom::decomposition, Triplet{o.a, y1, o.c, o.flavor});
        out.emplace_back(Axiom::weak_union, Triplet{o.a, y1, o.c | y2, o.flavor});
    });
}

AxiomCheck check_closed(const Relation& r, bool with_strong_union) {
    AxiomCheck result;
    auto report = [&](Axiom ax, const Triplet& premise, std::optional<Triplet> premise2,
                      const Triplet& missing) {
        result.closed = false;
        result.violations.push_back({ax, premise, std::move(premise2), missing.canonical()});
    };

    VarSet full{};
    for (std::size_t i = 0; i < r.universe().size(); ++i) full = full.with(i);

    for (const Triplet& t : r) {
        for (const Triplet& o : {t, t.sym()}) {
            std::vector<std::pair<Axiom, Triplet>> unary;
            collect_unary_consequences(o, unary);
            for (const auto& [ax, c] : unary) {
                if (!r.contains(c)) report(ax, t, std::nullopt, c);
            }
        }
        if (with_strong_union) {
            (full - t.all()).for_each([&](std::size_t w) {
                Triplet c{t.a, t.b, t.c.with(w), t.flavor};
                if (!r.contains(c)) report(Axiom::strong_union, t, std::nullopt, c);
            });
        }
    }

    // Contraction: <X,Y|ZW> with <X,W|Z> gives <X,YW|Z>. Scan ordered pairs in
    // all orientation combinations.
    for (const Triplet& t1 : r) {
        for (const Triplet& t2 : r) {
            for (const Triplet& o1 : {t1, t1.sym()}) {
                for (const Triplet& o2 : {t2, t2.sym()}) {
                    if (!(o1.a == o2.a)) continue;
                    if (!(o2.c == (o1.b | o1.c))) continue;
                    Triplet c{o1.a, o1.b | o2.b, o1.c, Flavor::ordinary};
                    if (!r.contains(c)) report(Axiom::contraction, t1, t2, c);
                }
            }
        }
    }

    return result;
}

// Semi-naive fixpoint shared by both closures. Frontier items feed the unary
// rules (and strong union when stable); contraction pairs each frontier item
// with the full current set in both orders.
Relation closure_impl(const Relation& seed, bool stable, std::size_t guard) {
    if (seed.universe().size() > guard)
        throw UniverseTooLarge("closure over " + std::to_string(seed.universe().size()) +
                               " variables exceeds guard " + std::to_string(guard));
    Flavor flavor = stable ? Flavor::stable : Flavor::ordinary;
    VarSet full{};
    for (std::size_t i = 0; i < seed.universe().size(); ++i) full = full.with(i);

    Relation all(seed.universe());
    std::vector<Triplet> frontier;
    auto add = [&](Triplet t) {
        t.flavor = flavor;
        if (all.insert(t) == InsertOutcome::inserted) frontier.push_back(t.canonical());
    };
    for (const Triplet& t : seed) add(t);

    while (!frontier.empty()) {
        std::vector<Triplet> wave;
        wave.swap(frontier);
        std::vector<Triplet> snapshot(all.begin(), all.end());
        for (const Triplet& t : wave) {
            for (const Triplet& o : {t, t.sym()}) {
                std::vector<std::pair<Axiom, Triplet>> unary;
                collect_unary_consequences(o, unary);
                for (const auto& [ax, c] : unary) add(c);
            }
            if (stable) {
                (full - t.all()).for_each([&](std::size_t w) {
                    add(Triplet{t.a, t.b, t.c.with(w), flavor});
                });
            }
            for (const Triplet& other : snapshot) {
                for (const Triplet& o1 : {t, t.sym()}) {
                    for (const Triplet& o2 : {other, other.sym()}) {
                        // t as first premise, other as second.
                        if (o1.a == o2.a && o2.c == (o1.b | o1.c))
                            add(Triplet{o1.a, o1.b | o2.b, o1.c, flavor});
                        // Roles swapped.
                        if (o2.a == o1.a && o1.c == (o2.b | o2.c))
                            add(Triplet{o2.a, o2.b | o1.b, o2.c, flavor});
                    }
                }
            }
        }
    }
    return all;
}

}  // namespace

AxiomCheck is_semigraphoid(const Relation& r) { return check_closed(r, false); }

AxiomCheck is_stable_semigraphoid(const Relation& r) { return check_closed(r, true); }

Relation sem_closure_bruteforce(const MixedRepresentation& m, std::size_t guard) {
    Relation stab = stab_closure_bruteforce(m.ms(), guard);
    Relation seed(m.universe());
    for (const Triplet& t : stab) seed.insert(t);
    for (const Triplet& t : m.mu()) seed.insert(t);
    return closure_impl(seed, false, guard);
}

Relation stab_closure_bruteforce(const MixedRepresentation& m, std::size_t guard) {
    Relation seed(m.universe());
    for (const Triplet& t : m.ms()) seed.insert(t);
    for (const Triplet& t : m.mu()) seed.insert(t);
    return closure_impl(seed, true, guard);
}

Relation sem_closure_bruteforce(const Relation& r, std::size_t guard) {
    return closure_impl(r, false, guard);
}

Relation stab_closure_bruteforce(const Relation& r, std::size_t guard) {
    return closure_impl(r, true, guard);
}

StablePart stable_part(const Relation& i) {
    AxiomCheck check = is_semigraphoid(i);
    if (!check.closed)
        throw NotClosed("stable part is only defined for closed relations");
    VarSet full{};
    for (std::size_t v = 0; v < i.universe().size(); ++v) full = full.with(v);

    StablePart out{Relation(i.universe()), true};
    for (const Triplet& t : i) {
        bool stable = true;
        for_each_subset(full - t.all(), [&](VarSet w) {
            if (w.empty() || !stable) return;
            if (!i.contains(Triplet{t.a, t.b, t.c | w, t.flavor})) stable = false;
        });
        if (stable) {
            out.part.insert(Triplet{t.a, t.b, t.c, Flavor::stable});
        } else {
            out.ascending = false;
        }
    }
    return out;
}

}  // namespace cirel

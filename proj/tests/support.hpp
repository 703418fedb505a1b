#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cirel/axioms.hpp"
#include "cirel/dominance.hpp"
#include "cirel/statements.hpp"
#include "cirel/types.hpp"

namespace cirel::test {

using Rng = std::mt19937_64;

inline Universe numbered_universe(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return Universe(names);
}

inline Universe letter_universe(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));
    return Universe(names);
}

inline VarSet vs(std::initializer_list<int> xs) {
    VarSet out{};
    for (int x : xs) out = out.with(static_cast<std::size_t>(x));
    return out;
}

inline Triplet tri(std::initializer_list<int> a, std::initializer_list<int> b,
                   std::initializer_list<int> c = {}, Flavor f = Flavor::ordinary) {
    return make_triplet(vs(a), vs(b), vs(c), f);
}

inline VarSet full_mask(std::size_t n) {
    VarSet out{};
    for (std::size_t i = 0; i < n; ++i) out = out.with(i);
    return out;
}

// Count of ordered triplets over n variables: 4^n - 2*3^n + 2^n.
inline std::size_t ordered_triplet_count(std::size_t n) {
    std::size_t p4 = 1, p3 = 1, p2 = 1;
    for (std::size_t i = 0; i < n; ++i) {
        p4 *= 4;
        p3 *= 3;
        p2 *= 2;
    }
    return p4 - 2 * p3 + p2;
}

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline VarSet random_subset(Rng& rng, VarSet pool) {
    VarSet out{};
    pool.for_each([&](std::size_t i) {
        if (rng() & 1u) out = out.with(i);
    });
    return out;
}

inline VarSet random_nonempty_subset(Rng& rng, VarSet pool) {
    while (true) {
        VarSet s = random_subset(rng, pool);
        if (!s.empty()) return s;
    }
}

inline Triplet random_triplet(Rng& rng, std::size_t n, Flavor f = Flavor::ordinary) {
    while (true) {
        VarSet a{}, b{}, c{};
        for (std::size_t i = 0; i < n; ++i) {
            switch (rng() % 4) {
                case 0: a = a.with(i); break;
                case 1: b = b.with(i); break;
                case 2: c = c.with(i); break;
                default: break;
            }
        }
        if (!a.empty() && !b.empty()) return make_triplet(a, b, c, f);
    }
}

inline Triplet random_orientation(Rng& rng, const Triplet& t) {
    return (rng() & 1u) ? t : t.sym();
}

// A triplet dominated by v under the given order, built by shrinking the two
// sides and growing the conditioning within the allowed pool.
inline Triplet random_dominee(Rng& rng, const Triplet& v, DominanceKind kind, std::size_t n) {
    Triplet o = random_orientation(rng, v);
    VarSet suba = random_nonempty_subset(rng, o.a);
    VarSet subb = random_nonempty_subset(rng, o.b);
    VarSet pool = kind == DominanceKind::o_dominance
                      ? (o.a - suba) | (o.b - subb)
                      : full_mask(n) - suba - subb - o.c;
    VarSet c = o.c | random_subset(rng, pool);
    return make_triplet(suba, subb, c, v.flavor);
}

// Pair (u, v) = (<A,B|C>, <I,J|K>) satisfying C inside IJK and K inside ABC.
inline std::pair<Triplet, Triplet> random_bridge_pair(Rng& rng, std::size_t n) {
    Triplet v = random_triplet(rng, n);
    while (true) {
        VarSet a{}, b{};
        for (std::size_t i = 0; i < n; ++i) {
            switch (rng() % 3) {
                case 0: a = a.with(i); break;
                case 1: b = b.with(i); break;
                default: break;
            }
        }
        if (a.empty() || b.empty()) continue;
        VarSet c = (v.c - (a | b)) | random_subset(rng, (v.a | v.b) - (a | b));
        return {make_triplet(a, b, c), v};
    }
}

inline MixedRepresentation random_instance(Rng& rng, std::size_t* n_out = nullptr) {
    std::size_t n = pick(rng, 3, 5);
    if (n_out != nullptr) *n_out = n;
    Universe uni = numbered_universe(n);
    std::size_t total = pick(rng, 1, 4);
    std::size_t stable = std::min(pick(rng, 0, 2), total);
    Relation ms(uni), mu(uni);
    for (std::size_t s = 0; s < stable; ++s) ms.insert(random_triplet(rng, n, Flavor::stable));
    for (std::size_t s = stable; s < total; ++s) mu.insert(random_triplet(rng, n));
    return MixedRepresentation(std::move(ms), std::move(mu));
}

inline Relation relation_of(const Universe& uni, const std::vector<Triplet>& ts) {
    Relation out(uni);
    for (const Triplet& t : ts) out.insert(t);
    return out;
}

// Reference semantics for the mixed product families: enumerate every valid
// reshaped partner directly from the subset conditions and collect the
// defined products.
inline std::vector<Triplet> step3a_contract(const Triplet& u, const Triplet& v, std::size_t n) {
    std::vector<Triplet> out;
    VarSet a = u.a, b = u.b, c = u.c;
    VarSet i = v.a, j = v.b, k = v.c;
    VarSet abc = a | b | c;
    (void)n;
    for_each_subset(i, [&](VarSet ip) {
        if (ip.empty()) return;
        for_each_subset(j, [&](VarSet jp) {
            if (jp.empty()) return;
            VarSet kmin = k | (c - (ip | jp));
            if (!(kmin - abc).empty()) return;
            VarSet pool = (abc - (ip | jp)) - kmin;
            for_each_subset(pool, [&](VarSet ext) {
                // Orientation must stay as given; make_triplet would flip it.
                Triplet vp{ip, jp, kmin | ext, Flavor::stable};
                if (auto p = star(u, vp)) out.push_back(*p);
            });
        });
    });
    return out;
}

inline std::vector<Triplet> step3b_contract(const Triplet& u, const Triplet& v, std::size_t n) {
    std::vector<Triplet> out;
    VarSet a = u.a, b = u.b, c = u.c;
    VarSet i = v.a, j = v.b, k = v.c;
    VarSet ijk = i | j | k;
    (void)n;
    for_each_subset(a, [&](VarSet ap) {
        if (ap.empty()) return;
        for_each_subset(b, [&](VarSet bp) {
            if (bp.empty()) return;
            VarSet cmin = c | (k - (ap | bp));
            if (!(cmin - ijk).empty()) return;
            VarSet pool = (ijk - (ap | bp)) - cmin;
            for_each_subset(pool, [&](VarSet ext) {
                // Orientation must stay as given; make_triplet would flip it.
                Triplet up{ap, bp, cmin | ext, Flavor::stable};
                if (auto p = star(up, v)) out.push_back(*p);
            });
        });
    });
    return out;
}

}  // namespace cirel::test

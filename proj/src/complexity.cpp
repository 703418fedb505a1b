#include "cirel/complexity.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "cirel/axioms.hpp"
#include "cirel/closure.hpp"
#include "cirel/dominance.hpp"

namespace cirel {

namespace {

// Calls fn on every k-combination of items until fn returns false; the
// return value says whether the enumeration ran to completion.
template <typename Fn>
bool for_each_combination(const std::vector<Triplet>& items, std::size_t k, Fn&& fn) {
    if (k > items.size()) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t p = 0; p < k; ++p) idx[p] = p;
    std::vector<Triplet> picked(k);
    while (true) {
        for (std::size_t p = 0; p < k; ++p) picked[p] = items[idx[p]];
        if (!fn(picked)) return false;
        if (k == 0) return true;
        std::size_t p = k;
        while (p > 0) {
            --p;
            if (idx[p] != p + items.size() - k) {
                ++idx[p];
                for (std::size_t q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
                break;
            }
            if (p == 0) return true;
        }
    }
}

struct SubsetKeyLess {
    bool operator()(const std::vector<Triplet>& x, const std::vector<Triplet>& y) const {
        TripletKeyLess less;
        std::size_t n = std::min(x.size(), y.size());
        for (std::size_t p = 0; p < n; ++p) {
            if (less(x[p], y[p])) return true;
            if (less(y[p], x[p])) return false;
        }
        return x.size() < y.size();
    }
};

using ClosureCache = std::map<std::vector<Triplet>, Relation, SubsetKeyLess>;

}  // namespace

ComplexityReport complexity_upper_bounds(const Relation& i) {
    ComplexityReport report;
    StablePart sp = stable_part(i);
    report.com_sem_upper = maximal_elements(i, DominanceKind::o_dominance).size();

    Relation mu(i.universe());
    for (const Triplet& t : i) {
        if (!sp.part.contains(t)) mu.insert(Triplet{t.a, t.b, t.c, Flavor::ordinary});
    }
    HybridResult hybrid = hybrid_closure(MixedRepresentation(sp.part, mu), false);
    report.com_strong_upper = hybrid.report.card_ms + hybrid.report.card_mu;
    return report;
}

ExactComplexity exact_complexity(const Relation& i, ComplexityMode mode, std::size_t budget,
                                 std::size_t guard) {
    if (mode == ComplexityMode::stab) {
        if (!is_stable_semigraphoid(i).closed)
            throw NotClosed("exact complexity needs a relation closed under all five rules");
    } else {
        if (!is_semigraphoid(i).closed)
            throw NotClosed("exact complexity needs a closed relation");
    }
    if (i.empty()) return {0, false};

    const Universe& uni = i.universe();
    std::size_t remaining = budget;
    bool out_of_budget = false;

    // Generators may be drawn from the dominance-maximal members only: any
    // generator element can be swapped for a maximal element above it without
    // shrinking the closure or leaving i.
    std::vector<Triplet> sem_pool;
    {
        Relation mx = maximal_elements(i, DominanceKind::o_dominance);
        sem_pool.assign(mx.begin(), mx.end());
    }
    std::vector<Triplet> stab_pool;
    if (mode != ComplexityMode::sem) {
        Relation base = mode == ComplexityMode::stab ? i : stable_part(i).part;
        Relation mx = maximal_elements(base, DominanceKind::s_dominance);
        stab_pool.assign(mx.begin(), mx.end());
    }

    ClosureCache sem_cache, stab_cache;
    auto closure_of = [&](const std::vector<Triplet>& items, bool stable) -> const Relation* {
        std::vector<Triplet> key = items;
        std::sort(key.begin(), key.end(),
                  [](const Triplet& x, const Triplet& y) { return TripletKeyLess{}(x, y); });
        ClosureCache& cache = stable ? stab_cache : sem_cache;
        auto it = cache.find(key);
        if (it != cache.end()) return &it->second;
        if (remaining == 0) {
            out_of_budget = true;
            return nullptr;
        }
        --remaining;
        Relation seed(uni);
        for (const Triplet& t : items) seed.insert(t);
        Relation closed =
            stable ? stab_closure_bruteforce(seed, guard) : sem_closure_bruteforce(seed, guard);
        return &cache.emplace(std::move(key), std::move(closed)).first->second;
    };

    if (mode != ComplexityMode::strong) {
        bool stable = mode == ComplexityMode::stab;
        const std::vector<Triplet>& pool = stable ? stab_pool : sem_pool;
        for (std::size_t k = 1; k <= pool.size(); ++k) {
            std::optional<std::size_t> found;
            for_each_combination(pool, k, [&](const std::vector<Triplet>& picked) {
                const Relation* closed = closure_of(picked, stable);
                if (closed == nullptr) return false;
                // Candidates sit inside i, so their closure does too; size
                // equality is set equality.
                if (closed->size() == i.size()) {
                    found = k;
                    return false;
                }
                return true;
            });
            if (found) return {found, false};
            if (out_of_budget) return {std::nullopt, true};
        }
        return {std::nullopt, false};  // unreachable: the full pool regenerates
    }

    // Mixed search: total size ascending; the two closures must jointly cover i.
    auto covered = [&](const Relation& x, const Relation& y) {
        for (const Triplet& t : i) {
            if (!x.contains(t) && !y.contains(t)) return false;
        }
        return true;
    };
    for (std::size_t total = 1; total <= sem_pool.size(); ++total) {
        std::optional<std::size_t> found;
        for (std::size_t kd = 0; kd <= std::min(total, stab_pool.size()) && !found; ++kd) {
            std::size_t kc = total - kd;
            if (kc > sem_pool.size()) continue;
            for_each_combination(stab_pool, kd, [&](const std::vector<Triplet>& dpick) {
                const Relation* stab_d = closure_of(dpick, true);
                if (stab_d == nullptr) return false;
                return for_each_combination(sem_pool, kc, [&](const std::vector<Triplet>& cpick) {
                    const Relation* sem_c = closure_of(cpick, false);
                    if (sem_c == nullptr) return false;
                    if (covered(*sem_c, *stab_d)) {
                        found = total;
                        return false;
                    }
                    return true;
                });
            });
            if (out_of_budget) return {std::nullopt, true};
        }
        if (found) return {found, false};
    }
    return {std::nullopt, false};
}

}  // namespace cirel

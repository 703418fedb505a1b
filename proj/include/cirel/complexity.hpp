#pragma once

#include <cstddef>
#include <optional>

#include "cirel/types.hpp"

namespace cirel {

inline constexpr std::size_t kDefaultComplexityBudget = 10000;

// Representation sizes for one closed relation: how many statements are
// needed to regenerate it.
struct ComplexityReport {
    // Cardinality of the maximal set under axiom-derivability.
    std::size_t com_sem_upper = 0;
    // card(ms) + card(mu) of the two-tier closure seeded with the stable part.
    std::size_t com_strong_upper = 0;
    std::optional<std::size_t> com_sem_exact;
    std::optional<std::size_t> com_strong_exact;
    bool budget_exhausted = false;
};

enum class ComplexityMode { sem, stab, strong };

struct ExactComplexity {
    std::optional<std::size_t> value;
    bool budget_exhausted = false;
};

// Upper bounds only; i must be closed under the four basic rules (else
// NotClosed). Works on the in-memory relation, no full enumeration.
ComplexityReport complexity_upper_bounds(const Relation& i);

// Minimum generating-set size by exhaustive search in increasing cardinality.
// sem: smallest D with the basic-rule closure of D equal to i. stab: same
// with the strong-union closure (i must be closed accordingly). strong:
// smallest card(C)+card(D) with sem-closure of C joined with stab-closure of
// D equal to i, D drawn from the stable members of i. The budget counts
// closure evaluations; exhausting it yields an empty value with the flag set.
ExactComplexity exact_complexity(const Relation& i, ComplexityMode mode,
                                 std::size_t budget = kDefaultComplexityBudget,
                                 std::size_t guard = kDefaultOracleGuard);

}  // namespace cirel

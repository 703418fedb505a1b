#pragma once

#include <chrono>
#include <cstddef>
#include <vector>

#include "cirel/types.hpp"

namespace cirel {

struct ClosureReport {
    // Main-loop passes executed, counting the final pass that found nothing.
    std::size_t iterations = 0;
    std::size_t card_ms = 0;
    std::size_t card_mu = 0;
    bool oracle_checked = false;
    bool step4_enabled = false;
    std::chrono::duration<double, std::milli> elapsed{0};
};

// Iterated binary composition over ordinary statements: saturate the set
// under the containment-gated product, then keep only elements not dominated
// within the axioms by a distinct element. Output is the dominant family of
// the closure of m under the four basic rules (input flavors are ignored).
Relation one_tier_closure(const Relation& m, ClosureReport* report = nullptr);

struct HybridResult {
    MixedRepresentation representation;
    ClosureReport report;
};

// Two-tier closure: grows the stable tier ms and the ordinary tier mu side by
// side until neither changes, pruning each tier by the dominance notion it
// represents. With default flags the result denotes exactly the closure of
// stab(ms) + mu under the basic rules: statements s-dominated by ms plus
// statements o-dominated by mu.
//
// step4 additionally shrinks conditioning sets of stable statements when
// every one-variable extension is already covered; it can over-approximate
// the closure and is off by default.
HybridResult hybrid_closure(const MixedRepresentation& m, bool step4 = false);

// Product families for one mixed pair, oriented as given. step3a composes an
// ordinary u with every admissible reshape of a stable v (sides shrunk,
// conditioning grown); step3b composes every admissible reshape of a stable u
// with an ordinary v. Each keeps enough of the reshaped products that nothing
// dominant is lost; the rest are dominated by what is kept.
std::vector<Triplet> step3a_products(const Triplet& u, const Triplet& v, std::size_t n_vars);
std::vector<Triplet> step3b_products(const Triplet& u, const Triplet& v, std::size_t n_vars);

// Conditioning-set reduction for a stable family: inserts <A,B|C-d> when all
// one-variable extensions of C-d outside A+B are covered by the family, then
// reprunes. Monotone fixpoint.
Relation step4_promote(const Relation& ms);

}  // namespace cirel

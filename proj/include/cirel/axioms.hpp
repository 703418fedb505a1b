#pragma once

#include <optional>
#include <vector>

#include "cirel/types.hpp"

namespace cirel {

// Inference rules a closed relation must satisfy. Symmetry can never fail here
// because storage identifies a statement with its mirror image; it is listed
// for completeness of reporting.
enum class Axiom { symmetry, decomposition, weak_union, contraction, strong_union };

struct AxiomViolation {
    Axiom axiom;
    Triplet premise;
    std::optional<Triplet> premise2;  // second premise, contraction only
    Triplet missing;                  // required consequence that is absent
};

struct AxiomCheck {
    bool closed = true;
    std::vector<AxiomViolation> violations;
};

// Closure under symmetry, decomposition, weak union and contraction.
AxiomCheck is_semigraphoid(const Relation& r);

// The above plus strong union (conditioning may grow by any outside variable).
AxiomCheck is_stable_semigraphoid(const Relation& r);

// Least relation containing stab(ms) + mu and closed under the four basic
// rules, where stab first closes the stable part under strong union as well.
// Both throw UniverseTooLarge above the guard. Output flavors: ordinary for
// the first, stable for the second.
Relation sem_closure_bruteforce(const MixedRepresentation& m, std::size_t guard = kDefaultOracleGuard);
Relation stab_closure_bruteforce(const MixedRepresentation& m, std::size_t guard = kDefaultOracleGuard);

// Convenience overloads closing a single relation (treated as all-ordinary
// input for sem, all-stable for stab).
Relation sem_closure_bruteforce(const Relation& r, std::size_t guard = kDefaultOracleGuard);
Relation stab_closure_bruteforce(const Relation& r, std::size_t guard = kDefaultOracleGuard);

struct StablePart {
    Relation part;
    // True when every member of the relation is in the part, i.e. the whole
    // relation tolerates arbitrary growth of conditioning sets.
    bool ascending = false;
};

// Members <X,Y|Z> of a closed relation i such that every <X,Y|ZW> with W
// outside X+Y+Z is again a member. Throws NotClosed when i is not closed
// under the four basic rules. Output is stable flavored.
StablePart stable_part(const Relation& i);

}  // namespace cirel

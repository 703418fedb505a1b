#pragma once

#include <optional>

#include "cirel/types.hpp"

namespace cirel {

// Two ways a triplet can subsume another:
//  - s_dominance: <T,U|W> follows from stable <X,Y|Z> when T in X, U in Y and
//    Z in W (the conditioning only grew).
//  - o_dominance: additionally W stays inside X+Y+Z, so <T,U|W> follows from
//    <X,Y|Z> by the axioms alone.
enum class DominanceKind { o_dominance, s_dominance };

// v dominates u (u is the smaller statement). Checks both orientations of v
// against u's stored orientation, which covers all four pairings.
bool o_dominates(const Triplet& v, const Triplet& u);
bool s_dominates(const Triplet& v, const Triplet& u);
bool dominates(const Triplet& v, const Triplet& u, DominanceKind kind);

// Binary composition of <I,J|K> with <A,B|C>, oriented as given (no symmetric
// variants are tried). Empty optional when the side conditions fail.
//
// The first form needs C inside I+J+K and K inside A+B+C and produces
// <A*I, (J-C)+(B*(I+J+K)) | C+(A*K)>.
std::optional<Triplet> star(const Triplet& u, const Triplet& v);

// The second form has no containment preconditions and produces the stable
// statement <A*I, (J-C)+(B-J) | C+(K-B)>.
std::optional<Triplet> diamond(const Triplet& u, const Triplet& v);

// Elements not dominated by any other element of the relation. Flavors pass
// through unchanged.
Relation maximal_elements(const Relation& r, DominanceKind kind);

// Every valid triplet over the universe dominated by some element of d:
// the full statement set a dominant family denotes. Results are stable
// flavored for s_dominance, ordinary for o_dominance. Brute force; throws
// UniverseTooLarge above the guard.
Relation expand(const Relation& d, DominanceKind kind, std::size_t guard = kDefaultOracleGuard);

}  // namespace cirel

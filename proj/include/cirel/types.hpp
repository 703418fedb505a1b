#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cirel/errors.hpp"

namespace cirel {

inline constexpr std::size_t kMaxVariables = 64;

// Brute-force routines refuse universes above this size unless told otherwise.
inline constexpr std::size_t kDefaultOracleGuard = 7;

// An ordered list of distinct variable names; index i is bit i in a VarSet.
class Universe {
public:
    explicit Universe(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    // Index of a name, or throws Error if unknown.
    std::size_t index_of(std::string_view name) const;
    bool has(std::string_view name) const noexcept;

    bool operator==(const Universe& other) const noexcept { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

// Subset of universe variables as a bitmask. Plain value type; all ops are O(1).
struct VarSet {
    std::uint64_t bits = 0;

    constexpr bool empty() const noexcept { return bits == 0; }
    constexpr std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits)); }
    constexpr bool contains(std::size_t i) const noexcept { return (bits >> i) & 1u; }
    constexpr bool subset_of(VarSet other) const noexcept { return (bits & ~other.bits) == 0; }
    constexpr bool intersects(VarSet other) const noexcept { return (bits & other.bits) != 0; }
    constexpr VarSet with(std::size_t i) const noexcept { return {bits | (std::uint64_t{1} << i)}; }
    constexpr VarSet without(std::size_t i) const noexcept { return {bits & ~(std::uint64_t{1} << i)}; }

    // Smallest member index, or 64 when empty.
    constexpr std::size_t lowest() const noexcept { return static_cast<std::size_t>(std::countr_zero(bits)); }

    std::vector<std::size_t> members() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        std::uint64_t rest = bits;
        while (rest != 0) {
            std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
            fn(i);
            rest &= rest - 1;
        }
    }

    constexpr bool operator==(const VarSet&) const noexcept = default;
};

constexpr VarSet operator|(VarSet x, VarSet y) noexcept { return {x.bits | y.bits}; }
constexpr VarSet operator&(VarSet x, VarSet y) noexcept { return {x.bits & y.bits}; }
// Set difference.
constexpr VarSet operator-(VarSet x, VarSet y) noexcept { return {x.bits & ~y.bits}; }

// Lexicographic order on the increasing index sequences of two sets, e.g.
// {0,2} < {1} and {0} < {0,2}. Equal sets compare false.
constexpr bool lex_less(VarSet x, VarSet y) noexcept {
    if (x.bits == y.bits) return false;
    std::uint64_t diff = x.bits ^ y.bits;
    std::uint64_t d = diff & (~diff + 1);  // lowest differing bit; below it the sets agree
    std::uint64_t above = ~(d | (d - 1));
    if (x.bits & d) {
        // x's next element is d; y continues above d (then d < next) or ends
        // (then y is a proper prefix of x).
        return (y.bits & above) != 0;
    }
    // y's next element is d; x loses unless it already ended.
    return (x.bits & above) == 0;
}

enum class Flavor { ordinary, stable };

// Conditional independence statement <a, b | c>: a and b are independent given
// c. The three sets are pairwise disjoint, a and b nonempty.
struct Triplet {
    VarSet a, b, c;
    Flavor flavor = Flavor::ordinary;

    VarSet all() const noexcept { return a | b | c; }
    Triplet sym() const noexcept { return {b, a, c, flavor}; }

    // Canonical storage orientation: a's smallest index below b's.
    bool is_canonical() const noexcept { return a.lowest() <= b.lowest(); }
    Triplet canonical() const noexcept { return is_canonical() ? *this : sym(); }

    // Equality is on the unordered statement; flavor is ignored.
    bool operator==(const Triplet& other) const noexcept {
        Triplet x = canonical();
        Triplet y = other.canonical();
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

// Validates disjointness and nonemptiness, returns the canonical orientation.
Triplet make_triplet(VarSet a, VarSet b, VarSet c, Flavor flavor = Flavor::ordinary);

// Strict weak order on canonical forms: lexicographic on (a, b, c) under
// lex_less. Used for deterministic storage and output.
struct TripletKeyLess {
    bool operator()(const Triplet& x, const Triplet& y) const noexcept {
        Triplet cx = x.canonical();
        Triplet cy = y.canonical();
        if (!(cx.a == cy.a)) return lex_less(cx.a, cy.a);
        if (!(cx.b == cy.b)) return lex_less(cx.b, cy.b);
        return lex_less(cx.c, cy.c);
    }
};

enum class InsertOutcome { unchanged, flavor_upgraded, inserted };

// A set of triplets over one universe. Each unordered statement is stored
// once, in canonical orientation; iteration order is TripletKeyLess.
class Relation {
public:
    explicit Relation(Universe universe) : universe_(std::move(universe)) {}

    const Universe& universe() const noexcept { return universe_; }

    // Inserting an existing statement with stable flavor upgrades an ordinary
    // copy; ordinary never downgrades stable.
    InsertOutcome insert(const Triplet& t);
    bool contains(const Triplet& t) const;
    // Flavor of the stored copy; throws Error when absent.
    Flavor flavor_of(const Triplet& t) const;
    bool erase(const Triplet& t);

    std::size_t size() const noexcept { return triplets_.size(); }
    bool empty() const noexcept { return triplets_.empty(); }

    auto begin() const noexcept { return triplets_.begin(); }
    auto end() const noexcept { return triplets_.end(); }

    // Same universe names and same statements; flavors are ignored.
    bool operator==(const Relation& other) const;

private:
    Universe universe_;
    std::set<Triplet, TripletKeyLess> triplets_;
};

// Every valid triplet over the universe, ordinary flavor. The canonical count
// is half the ordered count 4^n - 2*3^n + 2^n. Throws UniverseTooLarge above
// the guard.
Relation enumerate_all_triplets(const Universe& universe, std::size_t guard = kDefaultOracleGuard);

// Calls fn on every subset of mask, including empty and mask itself.
template <typename Fn>
void for_each_subset(VarSet mask, Fn&& fn) {
    std::uint64_t sub = mask.bits;
    while (true) {
        fn(VarSet{sub});
        if (sub == 0) break;
        sub = (sub - 1) & mask.bits;
    }
}

// A pair (ms, mu) of relations over one universe: ms carries the statements
// whose conditioning may be extended freely, mu the rest. Flavors are
// normalized on construction (ms stable, mu ordinary).
class MixedRepresentation {
public:
    MixedRepresentation(Relation ms, Relation mu);

    const Relation& ms() const noexcept { return ms_; }
    const Relation& mu() const noexcept { return mu_; }
    const Universe& universe() const noexcept { return ms_.universe(); }

private:
    Relation ms_;
    Relation mu_;
};

}  // namespace cirel

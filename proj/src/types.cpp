#include "cirel/types.hpp"

#include <algorithm>
#include <utility>

namespace cirel {

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error("universe needs at least one variable");
    if (names_.size() > kMaxVariables)
        throw Error("universe limited to " + std::to_string(kMaxVariables) + " variables");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw Error("empty variable name");
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j]) throw Error("duplicate variable name: " + names_[i]);
        }
    }
}

std::size_t Universe::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    throw Error("unknown variable: " + std::string(name));
}

bool Universe::has(std::string_view name) const noexcept {
    return std::any_of(names_.begin(), names_.end(),
                       [&](const std::string& n) { return n == name; });
}

std::vector<std::size_t> VarSet::members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

Triplet make_triplet(VarSet a, VarSet b, VarSet c, Flavor flavor) {
    if (a.intersects(b) || a.intersects(c) || b.intersects(c))
        throw OverlappingSets("triplet components must be pairwise disjoint");
    if (a.empty() || b.empty())
        throw EmptySide("first two triplet components must be nonempty");
    return Triplet{a, b, c, flavor}.canonical();
}

InsertOutcome Relation::insert(const Triplet& t) {
    Triplet canon = t.canonical();
    auto [it, inserted] = triplets_.insert(canon);
    if (inserted) return InsertOutcome::inserted;
    if (it->flavor == Flavor::ordinary && canon.flavor == Flavor::stable) {
        // Key is unchanged, only the flavor flips; re-insert via node handle.
        auto node = triplets_.extract(it);
        node.value().flavor = Flavor::stable;
        triplets_.insert(std::move(node));
        return InsertOutcome::flavor_upgraded;
    }
    return InsertOutcome::unchanged;
}

bool Relation::contains(const Triplet& t) const {
    return triplets_.count(t) != 0;
}

Flavor Relation::flavor_of(const Triplet& t) const {
    auto it = triplets_.find(t);
    if (it == triplets_.end()) throw Error("triplet not in relation");
    return it->flavor;
}

bool Relation::erase(const Triplet& t) {
    return triplets_.erase(t) != 0;
}

bool Relation::operator==(const Relation& other) const {
    if (!(universe_ == other.universe_)) return false;
    if (triplets_.size() != other.triplets_.size()) return false;
    auto jt = other.triplets_.begin();
    for (auto it = triplets_.begin(); it != triplets_.end(); ++it, ++jt) {
        Triplet x = *it;
        Triplet y = *jt;
        if (!(x.a == y.a && x.b == y.b && x.c == y.c)) return false;
    }
    return true;
}

Relation enumerate_all_triplets(const Universe& universe, std::size_t guard) {
    if (universe.size() > guard)
        throw UniverseTooLarge("triplet enumeration over " + std::to_string(universe.size()) +
                               " variables exceeds guard " + std::to_string(guard));
    Relation out(universe);
    std::size_t n = universe.size();
    // Each variable independently lands in a, b, c, or outside.
    std::vector<std::size_t> digit(n, 0);
    while (true) {
        VarSet a{}, b{}, c{};
        for (std::size_t i = 0; i < n; ++i) {
            switch (digit[i]) {
                case 0: break;
                case 1: a = a.with(i); break;
                case 2: b = b.with(i); break;
                default: c = c.with(i); break;
            }
        }
        if (!a.empty() && !b.empty()) out.insert(Triplet{a, b, c, Flavor::ordinary}.canonical());
        std::size_t pos = 0;
        while (pos < n && digit[pos] == 3) {
            digit[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
        ++digit[pos];
    }
    return out;
}

MixedRepresentation::MixedRepresentation(Relation ms, Relation mu)
    : ms_(std::move(ms)), mu_(std::move(mu)) {
    if (!(ms_.universe() == mu_.universe()))
        throw Error("mixed representation parts must share a universe");
    Relation norm_s(ms_.universe());
    for (const Triplet& t : ms_) norm_s.insert(Triplet{t.a, t.b, t.c, Flavor::stable});
    Relation norm_u(mu_.universe());
    for (const Triplet& t : mu_) norm_u.insert(Triplet{t.a, t.b, t.c, Flavor::ordinary});
    ms_ = std::move(norm_s);
    mu_ = std::move(norm_u);
}

}  // namespace cirel

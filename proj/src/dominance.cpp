#include "cirel/dominance.hpp"

namespace cirel {

namespace {

// Oriented test: does v = <X,Y|Z> s-dominate u = <T,U|W> as written, i.e.
// T in X, U in Y, Z in W?
bool oriented_s(const Triplet& v, const Triplet& u) {
    return u.a.subset_of(v.a) && u.b.subset_of(v.b) && v.c.subset_of(u.c);
}

// o variant additionally caps W by X+Y+Z.
bool oriented_o(const Triplet& v, const Triplet& u) {
    return oriented_s(v, u) && u.c.subset_of(v.all());
}

}  // namespace

bool o_dominates(const Triplet& v, const Triplet& u) {
    // u's own symmetry is absorbed by flipping v instead: flipping both
    // pairings at once changes nothing.
    return oriented_o(v, u) || oriented_o(v.sym(), u);
}

bool s_dominates(const Triplet& v, const Triplet& u) {
    return oriented_s(v, u) || oriented_s(v.sym(), u);
}

bool dominates(const Triplet& v, const Triplet& u, DominanceKind kind) {
    return kind == DominanceKind::o_dominance ? o_dominates(v, u) : s_dominates(v, u);
}

std::optional<Triplet> star(const Triplet& u, const Triplet& v) {
    VarSet a = u.a, b = u.b, c = u.c;
    VarSet i = v.a, j = v.b, k = v.c;
    VarSet ijk = i | j | k;
    if (!(c - ijk).empty()) return std::nullopt;
    if (!(k - (a | b | c)).empty()) return std::nullopt;
    VarSet na = a & i;
    VarSet nb = (j - c) | (b & ijk);
    if (na.empty() || nb.empty()) return std::nullopt;
    VarSet nc = c | (a & k);
    return make_triplet(na, nb, nc, Flavor::ordinary);
}

std::optional<Triplet> diamond(const Triplet& u, const Triplet& v) {
    VarSet a = u.a, b = u.b, c = u.c;
    VarSet i = v.a, j = v.b, k = v.c;
    VarSet na = a & i;
    VarSet nb = (j - c) | (b - j);
    if (na.empty() || nb.empty()) return std::nullopt;
    VarSet nc = c | (k - b);
    return make_triplet(na, nb, nc, Flavor::stable);
}

Relation maximal_elements(const Relation& r, DominanceKind kind) {
    Relation out(r.universe());
    for (const Triplet& u : r) {
        bool dominated = false;
        for (const Triplet& v : r) {
            if (v == u) continue;
            if (dominates(v, u, kind)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.insert(u);
    }
    return out;
}

Relation expand(const Relation& d, DominanceKind kind, std::size_t guard) {
    Relation all = enumerate_all_triplets(d.universe(), guard);
    Flavor flavor = kind == DominanceKind::s_dominance ? Flavor::stable : Flavor::ordinary;
    Relation out(d.universe());
    for (const Triplet& u : all) {
        for (const Triplet& v : d) {
            if (dominates(v, u, kind)) {
                out.insert(Triplet{u.a, u.b, u.c, flavor});
                break;
            }
        }
    }
    return out;
}

}  // namespace cirel

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cirel/axioms.hpp"
#include "support.hpp"

using namespace cirel;
using namespace cirel::test;

namespace {

// <1,{2,3}|{}> and everything below it: the closure of {<1,2|{}>, <1,3|2>}.
Relation fan_closure(const Universe& uni) {
    Relation r(uni);
    r.insert(tri({0}, {1}));
    r.insert(tri({0}, {2}));
    r.insert(tri({0}, {1}, {2}));
    r.insert(tri({0}, {2}, {1}));
    r.insert(tri({0}, {1, 2}));
    return r;
}

}  // namespace

TEST_CASE("closure of two interacting statements") {
    Universe uni = numbered_universe(3);
    Relation seed(uni);
    seed.insert(tri({0}, {1}));
    seed.insert(tri({0}, {2}, {1}));
    Relation closed = sem_closure_bruteforce(seed);
    CHECK(closed == fan_closure(uni));
    for (const Triplet& t : closed) CHECK(t.flavor == Flavor::ordinary);
    CHECK(is_semigraphoid(closed).closed);
}

TEST_CASE("closedness check pinpoints the missing consequence") {
    Universe uni = numbered_universe(3);
    Relation r = fan_closure(uni);
    REQUIRE(r.erase(tri({0}, {1}, {2})));
    AxiomCheck chk = is_semigraphoid(r);
    CHECK_FALSE(chk.closed);
    REQUIRE(chk.violations.size() == 1);
    CHECK(chk.violations[0].axiom == Axiom::weak_union);
    CHECK(chk.violations[0].premise == tri({0}, {1, 2}));
    CHECK(chk.violations[0].missing == tri({0}, {1}, {2}));
}

TEST_CASE("a lone statement with nothing derivable is closed") {
    Universe uni = numbered_universe(3);
    Relation r(uni);
    r.insert(tri({0}, {1}));
    CHECK(is_semigraphoid(r).closed);
    CHECK(sem_closure_bruteforce(r) == r);
    // But it is not closed under conditioning growth.
    AxiomCheck chk = is_stable_semigraphoid(r);
    CHECK_FALSE(chk.closed);
    REQUIRE_FALSE(chk.violations.empty());
    CHECK(chk.violations[0].axiom == Axiom::strong_union);
    CHECK(chk.violations[0].missing == tri({0}, {1}, {2}));
}

TEST_CASE("conditioning-growth closure of one statement over five variables") {
    Universe uni = letter_universe(5);
    Relation seed(uni);
    seed.insert(tri({0}, {1}));
    Relation closed = stab_closure_bruteforce(seed);
    CHECK(closed.size() == 8);
    for_each_subset(vs({2, 3, 4}), [&](VarSet w) {
        CHECK(closed.contains(make_triplet(vs({0}), vs({1}), w)));
    });
    for (const Triplet& t : closed) CHECK(t.flavor == Flavor::stable);
    CHECK(is_stable_semigraphoid(closed).closed);
    CHECK(is_semigraphoid(closed).closed);

    // Seeding the basic closure with the same statement marked stable agrees.
    Relation ms(uni), mu(uni);
    ms.insert(tri({0}, {1}, {}, Flavor::stable));
    CHECK(sem_closure_bruteforce(MixedRepresentation(ms, mu)) == closed);
}

TEST_CASE("mixed input closes the stable part first") {
    Universe uni = numbered_universe(3);
    Relation ms(uni), mu(uni);
    ms.insert(tri({0}, {1}, {}, Flavor::stable));
    mu.insert(tri({0}, {2}, {1}));
    MixedRepresentation m(ms, mu);
    CHECK(sem_closure_bruteforce(m) == fan_closure(uni));
    // All-stable reading grows further: every member tolerates extensions.
    Relation stab = stab_closure_bruteforce(m);
    CHECK(is_stable_semigraphoid(stab).closed);
    for (const Triplet& t : fan_closure(uni)) CHECK(stab.contains(t));
}

TEST_CASE("closure refuses universes above the guard") {
    Universe big = letter_universe(8);
    Relation r(big);
    r.insert(tri({0}, {1}));
    CHECK_THROWS_AS(sem_closure_bruteforce(r), UniverseTooLarge);
    CHECK_THROWS_AS(stab_closure_bruteforce(r), UniverseTooLarge);
    CHECK(sem_closure_bruteforce(r, 8) == r);
}

TEST_CASE("stable part of the fan closure is everything") {
    Universe uni = numbered_universe(3);
    StablePart sp = stable_part(fan_closure(uni));
    CHECK(sp.part == fan_closure(uni));
    CHECK(sp.ascending);
    for (const Triplet& t : sp.part) CHECK(t.flavor == Flavor::stable);
}

TEST_CASE("stable part drops members that cannot grow") {
    Universe uni = numbered_universe(3);
    Relation r(uni);
    r.insert(tri({0}, {1}));
    StablePart sp = stable_part(r);
    CHECK(sp.part.empty());
    CHECK_FALSE(sp.ascending);

    // Adding the extension makes the whole relation tolerant again.
    r.insert(tri({0}, {1}, {2}));
    StablePart sp2 = stable_part(r);
    CHECK(sp2.part == r);
    CHECK(sp2.ascending);
}

TEST_CASE("stable part requires a closed relation") {
    Universe uni = numbered_universe(3);
    Relation r(uni);
    r.insert(tri({0}, {1, 2}));
    CHECK_THROWS_AS(stable_part(r), NotClosed);
}

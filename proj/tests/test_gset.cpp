#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "bisetcalc/fixtures.hpp"
#include "bisetcalc/gset.hpp"

using namespace biset;

TEST_CASE("action axioms are enforced") {
    const FiniteGroup& g = fixtures::group_c2();
    CHECK_THROWS_AS(GSet(g, 2, {{0, 1}, {1, 1}}), Error);  // 1.(1.0) != 0
    GSet ok(g, 2, {{0, 1}, {1, 0}});
    CHECK(ok.apply(1, 0) == 1);
}

TEST_CASE("cosets of C2 in S3") {
    const FiniteGroup& g = fixtures::group_s3();
    GSet c = GSet::cosets(g, Subgroup(g, {0, 2}));
    CHECK(c.size() == 3);
    // the identity coset is point 0 and is fixed exactly by the subgroup
    CHECK(c.stabilizer(0).elements() == std::vector<int>{0, 2});
    CHECK(c.orbit_of(0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("orbit decomposition of a mixed C2-set") {
    const FiniteGroup& g = fixtures::group_c2();
    // two fixed points and one free orbit
    GSet a(g, 4, {{0, 1, 2, 3}, {0, 1, 3, 2}});
    auto os = orbits(a);
    REQUIRE(os.size() == 3);
    CHECK(os[0].points == std::vector<int>{0});
    CHECK(os[2].points == std::vector<int>{2, 3});
    CHECK(os[2].stabilizer.order() == 1);
    CHECK(fixed_points_subgroup(a, full_subgroup(g)) == std::vector<int>{0, 1});
}

TEST_CASE("equivariance is checked on G-maps") {
    const FiniteGroup& g = fixtures::group_c2();
    GSet reg = GSet::regular(g);
    GSet pt = GSet::point(g);
    CHECK_NOTHROW(GMap(reg, pt, {0, 0}));
    GSet two = GSet::trivial(g, 2);
    CHECK_THROWS_AS(GMap(reg, two, {0, 1}), Error);  // collapsing the free orbit unevenly
    CHECK(GMap::identity(reg).is_bijective());
}

TEST_CASE("coproduct and fibered product") {
    const FiniteGroup& g = fixtures::group_c2();
    GSet reg = GSet::regular(g);
    GSet pt = GSet::point(g);
    GSetCoproduct cp = gset_coproduct(reg, pt);
    CHECK(cp.set.size() == 3);
    CHECK(cp.inj_right(0) == 2);

    GMap f(reg, pt, {0, 0});
    GMap h(reg, pt, {0, 0});
    GSetFiberedProduct fp = gset_fibered_product(f, h);
    CHECK(fp.set.size() == 4);  // free x free over the point
    auto os = orbits(fp.set);
    CHECK(os.size() == 2);
    for (const Orbit& o : os) CHECK(o.stabilizer.order() == 1);
}

TEST_CASE("induction along e < C2 doubles a trivial set") {
    InducedGSet ind = induce(fixtures::incl_e_c2(), GSet::trivial(fixtures::group_e(), 2));
    CHECK(ind.set.size() == 4);
    auto os = orbits(ind.set);
    CHECK(os.size() == 2);
    for (const Orbit& o : os) CHECK(o.stabilizer.order() == 1);
    // class numbering follows the least representative
    CHECK(ind.reps[0] == std::pair<int, int>{0, 0});
    CHECK(ind.class_of[0] == 0);
}

TEST_CASE("induction along C2 < S3 of the regular set is free of size 6") {
    InducedGSet ind = induce(fixtures::incl_c2_s3(), GSet::regular(fixtures::group_c2()));
    CHECK(ind.set.size() == 6);
    auto os = orbits(ind.set);
    REQUIRE(os.size() == 1);
    CHECK(os[0].stabilizer.order() == 1);
}

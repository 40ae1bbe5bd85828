#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "bisetcalc/fixtures.hpp"
#include "bisetcalc/group.hpp"

using namespace biset;

TEST_CASE("table validation rejects broken tables") {
    CHECK_THROWS_AS(FiniteGroup::from_table("bad", {{0, 1}, {1, 1}}), Error);
    CHECK_THROWS_AS(FiniteGroup::from_table("bad", {{1, 0}, {0, 1}}), NoIdentity);
    // associativity failure: a quasigroup that is not a group
    CHECK_THROWS_AS(FiniteGroup::from_table("bad", {{0, 1, 2, 3, 4},
                                                    {1, 0, 3, 4, 2},
                                                    {2, 4, 0, 1, 3},
                                                    {3, 2, 4, 0, 1},
                                                    {4, 3, 1, 2, 0}}),
                    NotAssociative);
}

TEST_CASE("basic arithmetic in S3") {
    const FiniteGroup& g = fixtures::group_s3();
    CHECK(g.order() == 6);
    for (int a = 0; a < 6; ++a) {
        CHECK(g.op(a, g.inverse(a)) == FiniteGroup::identity);
        CHECK(g.op(FiniteGroup::identity, a) == a);
    }
    // (01)(12) has order 3
    CHECK(g.element_order(2) == 2);
    int prod = g.op(2, 1);
    CHECK(g.element_order(prod) == 3);
}

TEST_CASE("subgroup enumeration in S3") {
    const FiniteGroup& g = fixtures::group_s3();
    auto subs = all_subgroups(g);
    CHECK(subs.size() == 6);  // e, three C2s, A3, S3
    auto classes = subgroup_classes(g);
    CHECK(classes.size() == 4);
    std::vector<int> orders;
    for (const Subgroup& s : classes) orders.push_back(s.order());
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<int>{1, 2, 3, 6});
}

TEST_CASE("normality and quotients") {
    const FiniteGroup& g = fixtures::group_s3();
    Subgroup a3(g, {0, 3, 4});
    CHECK(a3.is_normal());
    GroupHom q = quotient_hom(g, a3);
    CHECK(q.target().order() == 2);
    CHECK(q.is_surjective());
    CHECK(kernel(q).elements() == a3.elements());
    Subgroup c2(g, {0, 2});
    CHECK_FALSE(c2.is_normal());
    CHECK_THROWS_AS(quotient_hom(g, c2), NotNormal);
}

TEST_CASE("canonical conjugates pick the least element set") {
    const FiniteGroup& g = fixtures::group_s3();
    std::vector<int> everyone{0, 1, 2, 3, 4, 5};
    // the three reflections are conjugate; the least subgroup set wins
    auto c = canonical_conjugate(g, {0, 5}, everyone);
    CHECK(c == std::vector<int>{0, 1});
    CHECK(conjugate_in(g, {0, 2}, {0, 5}, everyone));
    CHECK_FALSE(conjugate_in(g, {0, 2}, {0, 3, 4}, everyone));
}

TEST_CASE("product group projections invert the injections") {
    ProductGroup p = product_group(fixtures::group_c2(), fixtures::group_c3());
    CHECK(p.group.order() == 6);
    for (int a = 0; a < 2; ++a) CHECK(p.proj_left(p.inj_left(a)) == a);
    for (int b = 0; b < 3; ++b) CHECK(p.proj_right(p.inj_right(b)) == b);
    // C2 x C3 is cyclic of order 6, hence abelian
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) CHECK(p.group.op(x, y) == p.group.op(y, x));
}

TEST_CASE("hom predicates") {
    GroupHom i = fixtures::incl_c3_s3();
    CHECK(i.is_injective());
    CHECK_FALSE(i.is_surjective());
    CHECK_THROWS_AS(GroupHom(fixtures::group_c2(), fixtures::group_s3(), {0, 3}), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bisetcalc/fixtures.hpp"
#include "bisetcalc/laws.hpp"

using namespace biset;
using fixtures::group_c2;
using fixtures::group_e;

TEST_CASE("bicoproduct restriction pair is an equivalence of slices") {
    LawReport r = check_der1(ZeroCell::point(group_c2()), ZeroCell::point(group_e()), 4);
    CHECK(r.holds);
    CHECK(r.witness.empty());
    CHECK(r.bound == 4);
}

TEST_CASE("iso conditions agree in all three forms") {
    SliceObject free_obj =
        SliceObject::over_point(ZeroCell::point(group_c2()), GSet::regular(group_c2()));
    CHECK(check_der2(SliceMorphism::identity(free_obj)).holds);
    // swap of the free orbit: bijective but not the identity
    SliceMorphism swap(free_obj, free_obj, {1, 0});
    LawReport r = check_der2(swap);
    CHECK(r.holds);
    CHECK(r.witness == "iso=1 fiberwise=1 orbitwise=1");
}

TEST_CASE("adjoint triplet on a quotient cell") {
    OneCell q = fixtures::type2_cell(group_c2(), full_subgroup(group_c2()));
    CHECK(check_der3(q, 4).holds);
}

TEST_CASE("base change against a quotient and inclusion pair") {
    OneCell q = fixtures::type2_cell(fixtures::group_c4(), Subgroup(fixtures::group_c4(), {0, 2}));
    OneCell i = fixtures::type1_cell(fixtures::incl_e_c2());
    CHECK(check_der4(q, i, 4).holds);
    CHECK(check_mackey(q, i, 4).holds);
}

TEST_CASE("tambara square on a twisted cell") {
    OneCell f = fixtures::corpus_cells()[10].cell;
    CHECK(check_tambara(f, SliceObject::identity_on(f.source()), 4).holds);
}

TEST_CASE("coverage is monotone in the bound") {
    OneCell i = fixtures::type1_cell(fixtures::incl_e_c2());
    for (int n = 0; n <= 5; ++n) CHECK(check_der3(i, n).holds);
}

TEST_CASE("suites aggregate reports and reject unknown law ids") {
    auto reports = run_suite("der2", 3);
    CHECK(reports.size() == 3);
    for (const LawReport& r : reports) CHECK(r.law == "der2");
    CHECK_THROWS_AS(run_suite("nope", 3), Error);
    CHECK(run_suite("semi-mackey", 2).size() == 1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "bisetcalc/burnside.hpp"
#include "bisetcalc/fixtures.hpp"

using namespace biset;
using fixtures::group_c2;
using fixtures::group_e;
using fixtures::group_s3;

namespace {

ZeroCell pt(const FiniteGroup& g) { return ZeroCell::point(g); }

OmegaElement free_class(const FiniteGroup& g) {
    return OmegaElement::of(SliceObject::over_point(pt(g), GSet::regular(g)));
}

}  // namespace

TEST_CASE("transitive classes match the subgroup classes over a point") {
    CHECK(transitive_classes(pt(group_e())).size() == 1);
    CHECK(transitive_classes(pt(group_c2())).size() == 2);
    CHECK(transitive_classes(pt(group_s3())).size() == 4);
    CHECK(transitive_classes(ZeroCell{GSet::regular(group_c2())}).size() == 1);
}

TEST_CASE("C2 products") {
    OmegaElement f = free_class(group_c2());
    OmegaElement one = OmegaElement::one(pt(group_c2()));
    CHECK(f * f == f * 2);
    CHECK(f * one == f);
    CHECK(one * one == one);
}

TEST_CASE("ring laws on S3 elements") {
    ZeroCell b = pt(group_s3());
    std::vector<OmegaElement> xs;
    for (const BurnsideClass& c : transitive_classes(b)) xs.push_back(OmegaElement::of_class(b, c));
    xs.push_back(xs[0] - xs[1] * 2);
    for (const OmegaElement& x : xs)
        for (const OmegaElement& y : xs) {
            CHECK(x * y == y * x);
            CHECK(x + y == y + x);
            for (const OmegaElement& z : xs) {
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * (y + z) == x * y + x * z);
            }
        }
}

TEST_CASE("classify is a complete isomorphism invariant") {
    ZeroCell b = pt(group_s3());
    for (const BurnsideClass& c : classes_up_to_size(b, 5)) {
        SliceObject rep = class_representative(b, c);
        CHECK(classify(rep) == c);
        CHECK(OmegaElement::of(rep).total_size() == rep.total.size());
    }
}

TEST_CASE("omega_star is a ring homomorphism") {
    OneCell i = fixtures::type1_cell(fixtures::incl_c2_s3());
    ZeroCell b = pt(group_s3());
    std::vector<OmegaElement> xs;
    for (const BurnsideClass& c : transitive_classes(b)) xs.push_back(OmegaElement::of_class(b, c));
    for (const OmegaElement& x : xs)
        for (const OmegaElement& y : xs) {
            CHECK(omega_star(i, x * y) == omega_star(i, x) * omega_star(i, y));
            CHECK(omega_star(i, x + y) == omega_star(i, x) + omega_star(i, y));
        }
    CHECK(omega_star(i, OmegaElement::one(b)) == OmegaElement::one(i.source()));
}

TEST_CASE("omega_plus is additive, omega_bullet multiplicative") {
    OneCell i = fixtures::type1_cell(fixtures::incl_c2_s3());
    ZeroCell b = pt(group_c2());
    std::vector<OmegaElement> xs;
    for (const BurnsideClass& c : transitive_classes(b)) xs.push_back(OmegaElement::of_class(b, c));
    for (const OmegaElement& x : xs)
        for (const OmegaElement& y : xs) {
            CHECK(omega_plus(i, x + y) == omega_plus(i, x) + omega_plus(i, y));
            CHECK(omega_bullet(i, x * y) == omega_bullet(i, x) * omega_bullet(i, y));
        }
    CHECK(omega_plus(i, OmegaElement::zero(b)).is_zero());
    CHECK(omega_bullet(i, OmegaElement::one(b)) == OmegaElement::one(i.target()));
}

TEST_CASE("coinduction in the Burnside ring") {
    // 2 [pt] over pt/e pushed multiplicatively along e < C2
    OneCell i = fixtures::type1_cell(fixtures::incl_e_c2());
    OmegaElement two = OmegaElement::one(pt(group_e())) * 2;
    OmegaElement out = omega_bullet(i, two);
    CHECK(out == free_class(group_c2()) + OmegaElement::one(pt(group_c2())) * 2);
}

TEST_CASE("omega_bullet extends to virtual elements") {
    OneCell i = fixtures::type1_cell(fixtures::incl_e_c2());
    ZeroCell b = pt(group_e());
    // multiplicativity survives the polynomial extension
    std::vector<OmegaElement> xs{OmegaElement::one(b) - OmegaElement::one(b) * 3,
                                 OmegaElement::one(b) * 2, OmegaElement::zero(b),
                                 -OmegaElement::one(b)};
    for (const OmegaElement& x : xs)
        for (const OmegaElement& y : xs) CHECK(omega_bullet(i, x * y) == omega_bullet(i, x) * omega_bullet(i, y));
}

TEST_CASE("difference operators and the polynomial extension formula") {
    ZeroCell b = pt(group_e());
    auto num = [&](long long n) {
        // n copies of the point as an effective element
        return OmegaElement::one(b) * n;
    };
    PolyMap<long long, OmegaElement> square{
        [&](long long n) { return num(n * n); }, 2};

    // D_{(1,1)} n^2 = 2, constant in x
    for (long long x = 0; x < 5; ++x)
        CHECK(difference_op(square, {1, 1}, x) == num(2));
    // third differences of a quadratic vanish
    for (long long x = 0; x < 5; ++x)
        CHECK(difference_op(square, {1, 1, 1}, x).is_zero());
    // the extension evaluates the virtual argument: square~(1 - 2) = (-1)^2
    CHECK(extend_poly(square, 1LL, 2LL) == num(1));
}

TEST_CASE("additive maps extend to plain differences") {
    OmegaElement f = free_class(group_c2());
    PolyMap<long long, OmegaElement> phi{[&](long long n) { return f * n; }, 1};
    CHECK(extend_poly(phi, 5LL, 2LL) == phi.eval(5) - phi.eval(2));
}

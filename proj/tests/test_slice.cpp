#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "bisetcalc/burnside.hpp"
#include "bisetcalc/fixtures.hpp"

using namespace biset;
using fixtures::group_c2;
using fixtures::group_e;

namespace {

SliceObject trivial_over_point(const FiniteGroup& g, int n) {
    return SliceObject::over_point(ZeroCell::point(g), GSet::trivial(g, n));
}

}  // namespace

TEST_CASE("pullback along a type [II] cell is inflation") {
    // q-cell C2 -> e on a 2-point e-set: same points, trivial C2-action
    OneCell q = fixtures::type2_cell(group_c2(), full_subgroup(group_c2()));
    SliceObject b = trivial_over_point(group_e(), 2);
    PulledBack pulled = pullback_star(q, b);
    CHECK(pulled.object.total.size() == 2);
    CHECK(orbits(pulled.object.total).size() == 2);
}

TEST_CASE("pushforward along a type [I] cell is induction") {
    OneCell i = fixtures::type1_cell(fixtures::incl_e_c2());
    Pushed p = push_plus(i, trivial_over_point(group_e(), 1));
    CHECK(p.object.total.size() == 2);
    auto os = orbits(p.object.total);
    REQUIRE(os.size() == 1);
    CHECK(os[0].stabilizer.order() == 1);  // the free C2-set
}

TEST_CASE("push along a type [II] cell is the orbit set") {
    OneCell q = fixtures::type2_cell(group_c2(), full_subgroup(group_c2()));
    SliceObject a = SliceObject::over_point(ZeroCell::point(group_c2()), GSet::regular(group_c2()));
    Pushed p = push_plus(q, a);
    CHECK(p.object.total.size() == 1);
}

TEST_CASE("multiplicative push along a type [I] cell is coinduction") {
    OneCell i = fixtures::type1_cell(fixtures::incl_e_c2());
    SliceObject jnd = push_bullet(i, trivial_over_point(group_e(), 2));
    CHECK(jnd.total.size() == 4);
    auto os = orbits(jnd.total);
    int fixed = 0, free = 0;
    for (const Orbit& o : os) (o.points.size() == 1 ? fixed : free) += 1;
    CHECK(fixed == 2);
    CHECK(free == 1);
}

TEST_CASE("multiplicative push along a type [II] cell is the fixed point set") {
    OneCell q = fixtures::type2_cell(group_c2(), full_subgroup(group_c2()));
    SliceObject freeset =
        SliceObject::over_point(ZeroCell::point(group_c2()), GSet::regular(group_c2()));
    CHECK(push_bullet(q, freeset).total.size() == 0);
    SliceObject mixed(ZeroCell::point(group_c2()), GSet(group_c2(), 3, {{0, 1, 2}, {0, 2, 1}}),
                      GMap(GSet(group_c2(), 3, {{0, 1, 2}, {0, 2, 1}}), GSet::point(group_c2()),
                           {0, 0, 0}));
    CHECK(push_bullet(q, mixed).total.size() == 1);
}

TEST_CASE("adjunction transposes are mutually inverse") {
    OneCell i = fixtures::type1_cell(fixtures::incl_e_c2());
    SliceObject a = trivial_over_point(group_e(), 2);
    SliceObject b =
        SliceObject::over_point(ZeroCell::point(group_c2()), GSet::regular(group_c2()));
    Pushed pa = push_plus(i, a);
    auto down = enumerate_slice_homs(pa.object, b);
    auto up = enumerate_slice_homs(a, pullback_star(i, b).object);
    CHECK(down.size() == up.size());
    CHECK(down.size() == 4);  // two free generators, two choices each
    for (const SliceMorphism& psi : down)
        CHECK(adjoint_psi(i, a, b, adjoint_phi(i, a, b, psi)).map == psi.map);
}

TEST_CASE("counit is bijective for stab-surjective cells") {
    OneCell q = fixtures::type2_cell(group_c2(), full_subgroup(group_c2()));
    for (const BurnsideClass& c : classes_up_to_size(q.target(), 4)) {
        SliceObject b = class_representative(q.target(), c);
        CHECK(counit_lambda(q, b).map.is_bijective());
    }
}

TEST_CASE("2-cell transport is an isomorphism of pullbacks") {
    OneCell f = fixtures::corpus_cells()[10].cell;  // twisted C2reg -> pt/C4
    for (const OneCell& f2 : enumerate_one_cells(f.source(), f.target()))
        for (const TwoCell& eps : enumerate_two_cells(f, f2)) {
            SliceObject b = SliceObject::over_point(f.target(), GSet::regular(fixtures::group_c4()));
            SliceMorphism t = two_cell_transport(eps, b);
            CHECK(t.map.is_bijective());
            CHECK(t.source.total.size() == pullback_star(f, b).object.total.size());
        }
}

TEST_CASE("theta-fixed points form the whole carrier for equivariant cells") {
    OneCell id_c2 = OneCell::identity(ZeroCell::point(group_c2()));
    SliceObject a =
        SliceObject::over_point(ZeroCell::point(group_c2()), GSet::regular(group_c2()));
    ThetaFixed tf = fixed_points_theta(id_c2, a);
    CHECK(tf.points.size() == 2);
}

TEST_CASE("sections along an equivariant map") {
    // q : free C2-set -> point; sections of the identity object are point pairs
    const FiniteGroup& g = group_c2();
    GSet reg = GSet::regular(g);
    GMap q(reg, GSet::point(g), {0, 0});
    SliceObject c(ZeroCell{reg}, reg, GMap::identity(reg));
    PiResult pi = pi_along(q, c);
    CHECK(pi.object.total.size() == 1);  // only the identity section is compatible
}

TEST_CASE("exponential diagram collapses to plain exponentials for equivariant cells") {
    // for equivariant f the bullet carrier is the set of fiberwise sections
    const FiniteGroup& g = group_c2();
    GSet reg = GSet::regular(g);
    GMap alpha(reg, GSet::point(g), {0, 0});
    OneCell f = OneCell::equivariant(alpha);
    SliceObject a(ZeroCell{reg}, reg, GMap::identity(reg));
    ExponentialDiagram ed = exponential_diagram(f, a);
    // sections of id over the 2-point fiber: one point per function x -> fiber
    CHECK(ed.bullet.total.size() == 1);
    CHECK(ed.zeta.map.is_bijective());
}

TEST_CASE("classify agrees with explicit isomorphism search") {
    ZeroCell base = ZeroCell::point(fixtures::group_s3());
    auto classes = classes_up_to_size(base, 4);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j) {
            SliceObject a = class_representative(base, classes[i]);
            SliceObject b = class_representative(base, classes[j]);
            CHECK(slice_isomorphic(a, b) == (i == j));
        }
}

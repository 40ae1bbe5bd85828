#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bisetcalc/scat.hpp"

namespace biset {

/// An object of the slice category over a 0-cell X/G: a G-set A together
/// with a G-map into X.
struct SliceObject {
    ZeroCell base;
    GSet total;
    GMap structure;  // total -> base.set

    SliceObject(ZeroCell base, GSet total, GMap structure);
    static SliceObject over_point(const ZeroCell& b, const GSet& total);
    static SliceObject identity_on(const ZeroCell& b);

    friend bool operator==(const SliceObject& a, const SliceObject& b) {
        return a.base == b.base && a.total == b.total && a.structure == b.structure;
    }
};

/// A morphism over X: an equivariant map commuting with the structure maps.
struct SliceMorphism {
    SliceObject source;
    SliceObject target;
    GMap map;

    SliceMorphism(SliceObject source, SliceObject target, std::vector<int> image);
    static SliceMorphism identity(const SliceObject& a);
    int operator()(int x) const { return map(x); }
};

SliceMorphism compose(const SliceMorphism& f, const SliceMorphism& g);  // g after f

/// Coproduct and fibered product over the base; the semiring operations on
/// isomorphism classes.
SliceObject slice_coproduct(const SliceObject& a, const SliceObject& b);
SliceObject slice_product(const SliceObject& a, const SliceObject& b);

/// Pullback along a 1-cell f : X/G -> Y/H of an object over Y/H.
/// Carrier {(x,b) | alpha(x) = b-structure(b)}, g(x,b) = (gx, theta_x(g) b).
struct PulledBack {
    SliceObject object;                       // over the source of f
    std::vector<std::pair<int, int>> points;  // lexicographic (x, b)
    int point_index(int x, int b) const;
};

PulledBack pullback_star(const OneCell& f, const SliceObject& b);
/// Action of f* on a morphism over the target of f.
SliceMorphism pullback_star_map(const OneCell& f, const SliceMorphism& m);
/// The isomorphism eps.from()* B -> eps.to()* B, (x,b) -> (x, eps_x b).
SliceMorphism two_cell_transport(const TwoCell& eps, const SliceObject& b);

/// Left pushforward data: carrier H x_G A with classes [eta, a] under
/// (eta, a) ~ (eta theta_{a-structure(a)}(g)^{-1}, g a).
struct Pushed {
    SliceObject object;
    std::vector<std::pair<int, int>> reps;  // class -> least (eta, a)
    std::vector<int> class_of;              // flattened eta*|A|+a -> class
    int na = 0;

    int cls(int eta, int a) const { return class_of[eta * na + a]; }
};

/// S_theta: lands over SIm(f)/H, structure [eta,a] -> [eta, a-structure(a)].
Pushed s_theta(const OneCell& f, const SliceObject& a);
/// f_+ : same carrier, structure [eta,a] -> eta alpha(a-structure(a)) in Y.
Pushed push_plus(const OneCell& f, const SliceObject& a);
SliceMorphism push_plus_map(const OneCell& f, const SliceMorphism& m);

/// Adjunction f_+ -| f*: transpose of psi : f_+ A -> B is
/// a -> (a-structure(a), psi([e,a])).
SliceMorphism adjoint_phi(const OneCell& f, const SliceObject& a, const SliceObject& b,
                          const SliceMorphism& psi);
/// Inverse transpose of phi : A -> f* B is [eta,a] -> eta p_B(phi(a)).
SliceMorphism adjoint_psi(const OneCell& f, const SliceObject& a, const SliceObject& b,
                          const SliceMorphism& phi);
/// Counit f_+ f* B -> B.
SliceMorphism counit_lambda(const OneCell& f, const SliceObject& b);

/// The theta-fixed subobject A^theta: points where equal transport forces
/// equal action. Idempotent; a G-subset of the carrier.
struct ThetaFixed {
    SliceObject object;
    std::vector<int> points;  // selected carrier points, sorted
    GMap inclusion;
};

ThetaFixed fixed_points_theta(const OneCell& f, const SliceObject& a);

/// Dependent product along an equivariant map q : W -> Y of an object over
/// W. Points are sections of the structure map over each fiber of q.
struct PiResult {
    SliceObject object;  // over the target of q
    // point -> (y, section values on the sorted fiber of y)
    std::vector<std::pair<int, std::vector<int>>> points;
    int point_index(int y, const std::vector<int>& sigma) const;
};

PiResult pi_along(const GMap& q, const SliceObject& c);

/// The full partial exponential diagram for f : X/G -> Y/H and A over X/G:
///
///      X  <--a--  A  <--zeta--  X x_Y P
///      |                           |
///      f                        f_dagger
///      |                           |
///      Y  <-------- pi_Y --------  P = f_bullet(A)
struct ExponentialDiagram {
    SliceObject bullet;   // f_bullet A over the target of f
    PulledBack back;      // f* bullet, carrier X x_Y P
    OneCell f_dagger;     // (X x_Y P)/G -> P/H, base (x,p) -> p, theta_x
    SliceMorphism zeta;   // f* f_bullet A -> A over the source of f
    ThetaFixed theta_fixed;
    Pushed s_theta_part;  // S_theta(A^theta) over SIm(f)/H
    PiResult pi_part;
};

ExponentialDiagram exponential_diagram(const OneCell& f, const SliceObject& a);

/// f_bullet A without the surrounding diagram.
SliceObject push_bullet(const OneCell& f, const SliceObject& a);

std::vector<SliceMorphism> enumerate_slice_homs(const SliceObject& a, const SliceObject& b);
/// An isomorphism over the base, when one exists; orbitwise matching.
std::optional<SliceMorphism> find_slice_iso(const SliceObject& a, const SliceObject& b);
bool slice_isomorphic(const SliceObject& a, const SliceObject& b);

}  // namespace biset

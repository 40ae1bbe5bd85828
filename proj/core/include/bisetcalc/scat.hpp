#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bisetcalc/gset.hpp"

namespace biset {

/// A 0-cell X/G: a finite group together with a finite left G-set.
/// Equality is structural (same group table, same action table), which is
/// what strict composability in the 2-category requires.
struct ZeroCell {
    GSet set;

    const FiniteGroup& group() const { return set.group(); }
    int size() const { return set.size(); }

    static ZeroCell point(const FiniteGroup& g) { return ZeroCell{GSet::point(g)}; }
    static ZeroCell empty(const FiniteGroup& g) { return ZeroCell{GSet::empty(g)}; }

    friend bool operator==(const ZeroCell& a, const ZeroCell& b) { return a.set == b.set; }
    friend bool operator!=(const ZeroCell& a, const ZeroCell& b) { return !(a == b); }
};

/// A 1-cell (alpha, theta): base map alpha together with the per-point
/// acting part theta_x : G -> H. The constructor checks
///   (i)  alpha(g x) = theta_x(g) alpha(x)
///   (ii) theta_x(g g') = theta_{g' x}(g) theta_x(g'),
/// so no invalid cell is representable.
class OneCell {
  public:
    OneCell(ZeroCell source, ZeroCell target, std::vector<int> base,
            std::vector<std::vector<int>> theta);

    static OneCell identity(const ZeroCell& x);
    /// Equivariant cell alpha/G from a G-map between carriers.
    static OneCell equivariant(const GMap& alpha);
    /// Cell with constant acting part f; base must intertwine through f.
    static OneCell constant_acting(ZeroCell source, ZeroCell target, std::vector<int> base,
                                   const GroupHom& f);

    const ZeroCell& source() const { return source_; }
    const ZeroCell& target() const { return target_; }
    int base(int x) const { return base_[x]; }
    const std::vector<int>& base() const { return base_; }
    int theta(int x, int g) const { return theta_[x][g]; }
    const std::vector<std::vector<int>>& theta() const { return theta_; }
    bool is_equivariant() const;  // acting part constantly the identity hom
    bool has_constant_theta() const;

    friend bool operator==(const OneCell& a, const OneCell& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.base_ == b.base_ &&
               a.theta_ == b.theta_;
    }
    friend bool operator!=(const OneCell& a, const OneCell& b) { return !(a == b); }

  private:
    ZeroCell source_;
    ZeroCell target_;
    std::vector<int> base_;
    std::vector<std::vector<int>> theta_;
};

/// Composition g after f; (tau o theta)_x = tau_{alpha(x)} o theta_x.
OneCell compose(const OneCell& f, const OneCell& g);

/// A 2-cell: a family eps_x in H with alpha'(x) = eps_x alpha(x) and
/// eps_{gx} theta_x(g) eps_x^{-1} = theta'_x(g). Always invertible.
class TwoCell {
  public:
    TwoCell(OneCell from, OneCell to, std::vector<int> eps);

    static TwoCell identity(const OneCell& f);

    const OneCell& from() const { return from_; }
    const OneCell& to() const { return to_; }
    int eps(int x) const { return eps_[x]; }
    const std::vector<int>& eps() const { return eps_; }
    TwoCell inverse() const;
    bool is_identity() const;

    friend bool operator==(const TwoCell& a, const TwoCell& b) {
        return a.from_ == b.from_ && a.to_ == b.to_ && a.eps_ == b.eps_;
    }

  private:
    OneCell from_;
    OneCell to_;
    std::vector<int> eps_;
};

TwoCell vcompose(const TwoCell& later, const TwoCell& earlier);
/// Whisker with a following 1-cell: (g o eps)_x = tau_{alpha(x)}(eps_x).
TwoCell whisker_post(const OneCell& g, const TwoCell& eps);
/// Whisker with a preceding 1-cell: (delta o f)_x = delta_{alpha(x)}.
TwoCell whisker_pre(const TwoCell& delta, const OneCell& f);

struct StabSurjReport {
    bool ok = false;
    std::string witness;  // empty when ok
};

/// Condition (i): Y = H alpha(X); condition (ii): stabilizer transport is
/// surjective. On failure the witness names the violating y or quadruple.
StabSurjReport is_stab_surjective(const OneCell& f);

struct SimFactorization {
    ZeroCell sim;          // SIm(f)/H
    OneCell through;       // stab-surjective X/G -> SIm/H, x -> [e,x]
    GMap alpha_tilde;      // equivariant SIm -> Y, [eta,x] -> eta alpha(x)
    std::vector<std::pair<int, int>> reps;  // class -> least (eta, x)
    std::vector<int> class_of;              // flattened eta*|X|+x -> class

    int cls(int eta, int x) const { return class_of[eta * nx_ + x]; }
    int nx_ = 0;
};

/// SIm-factorization f = (alpha_tilde/H) o through. Classes of (eta,x) are
/// numbered by lexicographically least representative.
SimFactorization sim_factorize(const OneCell& f);

/// Given another factorization f ~ (gamma/H) o beta with beta
/// stab-surjective, witnessed by a 2-cell eps : (gamma/H) o beta => f,
/// returns the H-isomorphism omega: SIm(f) -> W with gamma o omega =
/// alpha_tilde, omega([eta,x]) = eta eps_x beta(x).
GMap compare_factorizations(const OneCell& f, const OneCell& beta, const GMap& gamma,
                            const TwoCell& eps);

struct Bicoproduct {
    ZeroCell cell;  // (Ind X  +  Ind Y) / (G x H)
    OneCell inj_left;
    OneCell inj_right;
};

Bicoproduct bicoproduct(const ZeroCell& x, const ZeroCell& y);

struct Bipullback {
    ZeroCell apex;  // F/(G x H), F = {(x,y,k) | beta(y) = k alpha(x)}
    OneCell proj_left;   // to the source of f
    OneCell proj_right;  // to the source of g
    TwoCell kappa;       // f o proj_left => g o proj_right, kappa_{(x,y,k)} = k
    std::vector<std::array<int, 3>> points;  // lexicographic (x,y,k)

    int point_index(int x, int y, int k) const;
};

Bipullback bipullback(const OneCell& f, const OneCell& g);

/// All 1-cells between two 0-cells, enumerated per source orbit from the
/// value at a representative. Deterministic order. Throws SearchCapExceeded
/// past `cap` candidates.
std::vector<OneCell> enumerate_one_cells(const ZeroCell& from, const ZeroCell& to,
                                         std::size_t cap = 5'000'000);

std::vector<TwoCell> enumerate_two_cells(const OneCell& from, const OneCell& to);
std::optional<TwoCell> find_two_cell(const OneCell& from, const OneCell& to);

struct EquivalenceWitness {
    bool ok = false;
    std::optional<OneCell> quasi_inverse;
    std::optional<TwoCell> rho;     // quasi_inverse o f => id
    std::optional<TwoCell> lambda;  // f o quasi_inverse => id
};

/// Exhaustive search for a quasi-inverse over all candidate 1-cells.
EquivalenceWitness is_equivalence(const OneCell& f, std::size_t cap = 5'000'000);

struct UniversalPropertyReport {
    bool ok = false;
    std::string detail;
};

/// Checks both bipullback conditions against a given cone
/// (g1, g2, eps : f o g1 => g o g2): existence of a mediating 1-cell with
/// the pasting identity, and uniqueness of the mediating 2-cell between any
/// two mediators.
UniversalPropertyReport check_bipullback_cone(const Bipullback& pb, const OneCell& f,
                                              const OneCell& g, const OneCell& g1,
                                              const OneCell& g2, const TwoCell& eps);

/// Checks the bicoproduct conditions against a cocone (f1, f2).
UniversalPropertyReport check_bicoproduct_cocone(const Bicoproduct& bc, const OneCell& f1,
                                                 const OneCell& f2);

}  // namespace biset

#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "bisetcalc/slice.hpp"

namespace biset {

/// One orbit of a slice object, up to isomorphism over the base: the least
/// point of the image orbit together with the point stabilizer, conjugated
/// to its least form inside the stabilizer of that point.
struct OrbitDescriptor {
    int base_point = 0;
    std::vector<int> stabilizer;

    friend auto operator<=>(const OrbitDescriptor&, const OrbitDescriptor&) = default;
};

/// The isomorphism class of a slice object: its sorted orbit descriptors.
struct BurnsideClass {
    std::vector<OrbitDescriptor> orbits;

    bool empty() const { return orbits.empty(); }
    friend auto operator<=>(const BurnsideClass&, const BurnsideClass&) = default;
};

/// Canonical form; classify(A) == classify(B) iff A and B are isomorphic
/// over the base.
BurnsideClass classify(const SliceObject& a);

/// Transitive representative G/K -> orbit of the descriptor's base point.
SliceObject orbit_representative(const ZeroCell& base, const OrbitDescriptor& d);
SliceObject class_representative(const ZeroCell& base, const BurnsideClass& c);

/// All single-orbit classes over the base, sorted.
std::vector<BurnsideClass> transitive_classes(const ZeroCell& base);
/// All classes with carrier size at most n (including the empty class).
std::vector<BurnsideClass> classes_up_to_size(const ZeroCell& base, int n);

/// An element of the Burnside ring: an integer combination of classes.
struct OmegaElement {
    ZeroCell base;
    std::map<BurnsideClass, long long> terms;  // never stores zero coefficients

    static OmegaElement zero(const ZeroCell& b) { return {b, {}}; }
    static OmegaElement one(const ZeroCell& b);        // [B, id]
    static OmegaElement of(const SliceObject& a);      // [A]
    static OmegaElement of_class(const ZeroCell& b, const BurnsideClass& c, long long n = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_effective() const;
    long long coeff(const BurnsideClass& c) const;
    /// Total carrier size of the positive part.
    long long total_size() const;

    friend bool operator==(const OmegaElement& a, const OmegaElement& b) {
        return a.base == b.base && a.terms == b.terms;
    }
};

OmegaElement operator+(const OmegaElement& a, const OmegaElement& b);
OmegaElement operator-(const OmegaElement& a, const OmegaElement& b);
OmegaElement operator-(const OmegaElement& a);
OmegaElement operator*(const OmegaElement& a, long long n);
OmegaElement operator*(const OmegaElement& a, const OmegaElement& b);

inline OmegaElement add(const OmegaElement& a, const OmegaElement& b) { return a + b; }
inline OmegaElement mul(const OmegaElement& a, const OmegaElement& b) { return a * b; }

/// A concrete slice object representing an effective element. Throws
/// TypeMismatch on negative coefficients.
SliceObject realize(const OmegaElement& eff);

OmegaElement omega_star(const OneCell& f, const OmegaElement& x);
OmegaElement omega_plus(const OneCell& f, const OmegaElement& x);
/// Multiplicative pushforward; on non-effective input uses the polynomial
/// extension with degree seeded by the largest SIm fiber and confirmed by
/// difference vanishing. Throws DegreeUnbounded past the cap.
OmegaElement omega_bullet(const OneCell& f, const OmegaElement& x, int degree_cap = 16);

/// A map between additive monoids with a finite degree bound. Domain values
/// need operator+; codomain values need operator+, unary minus and integer
/// scaling.
template <class A, class V>
struct PolyMap {
    std::function<V(const A&)> eval;
    int degree = 0;
};

/// Alternating sum over subsets:
/// D_{(a_1..a_n)} phi (x) = sum_k sum_{i_1<..<i_k} (-1)^{n-k} phi(x + a_{i_1} + .. + a_{i_k}).
template <class A, class V>
V difference_op(const PolyMap<A, V>& phi, const std::vector<A>& tuple, const A& x) {
    const int n = static_cast<int>(tuple.size());
    std::optional<V> acc;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        A arg = x;
        int bits = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                arg = arg + tuple[i];
                ++bits;
            }
        V term = phi.eval(arg);
        if ((n - bits) % 2 != 0) term = -term;
        acc = acc ? *acc + term : term;
    }
    return *acc;
}

/// phi~(a - b) = sum_{k=0}^{d} (-1)^k Delta_b^k phi(a), where
/// Delta_b^k phi(a) = sum_j (-1)^{k-j} C(k,j) phi(a + j b).
template <class A, class V>
V extend_poly(const PolyMap<A, V>& phi, const A& a, const A& b) {
    const int d = phi.degree;
    std::vector<V> phis;
    phis.reserve(d + 1);
    {
        A arg = a;
        for (int j = 0; j <= d; ++j) {
            phis.push_back(phi.eval(arg));
            if (j < d) arg = arg + b;
        }
    }
    auto binom = [](int n, int k) {
        long long r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    std::optional<V> acc;
    for (int k = 0; k <= d; ++k)
        for (int j = 0; j <= k; ++j) {
            V term = phis[j] * binom(k, j);
            if (j % 2 != 0) term = -term;  // (-1)^k (-1)^{k-j} = (-1)^j
            acc = acc ? *acc + term : term;
        }
    return *acc;
}

}  // namespace biset

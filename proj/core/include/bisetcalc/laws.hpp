#pragma once

#include <string>
#include <vector>

#include "bisetcalc/burnside.hpp"

namespace biset {

struct LawReport {
    std::string law;
    std::string fixture;
    bool holds = false;
    std::string witness;  // counterexample data, or empty
    int bound = 0;
};

/// The restriction pair along the bicoproduct injections is bijective on
/// isomorphism classes and full and faithful on hom sets, for slice objects
/// with carrier size at most n.
LawReport check_der1(const ZeroCell& x, const ZeroCell& y, int n);

/// A slice morphism is an isomorphism iff it is bijective on every fiber
/// iff it is an isomorphism over every base orbit.
LawReport check_der2(const SliceMorphism& m);

/// The adjoint triplet f_+ -| f* -| f_bullet on slice objects of size at
/// most n: transposes mutually inverse, triangle identities, and the right
/// transpose g -> zeta o f*(g) bijective.
LawReport check_der3(const OneCell& f, int n);

/// Base change around bipullback(f, g): restriction after pushforward
/// agrees with pushforward after restriction, additively and
/// multiplicatively, with primed variants, and the explicit comparison map
/// (y,[k,a]) -> [e,(a-structure(a),y,k),a] for the additive direction.
LawReport check_der4(const OneCell& f, const OneCell& g, int n);

/// The same squares evaluated in the Burnside semiring.
LawReport check_mackey(const OneCell& f, const OneCell& g, int n);

/// The Tambara square for the partial exponential diagram of (f, a),
/// evaluated on all slice objects over the carrier of a with size <= n.
LawReport check_tambara(const OneCell& f, const SliceObject& a, int n);

/// Bicoproduct bijectivity and both Mackey squares over the whole corpus.
LawReport check_semi_mackey_pair(int n);

/// Corpus-driven suites. law is one of der1 der2 der3 der4 mackey tambara
/// semi-mackey, or "all".
std::vector<LawReport> run_suite(const std::string& law, int bound);

}  // namespace biset

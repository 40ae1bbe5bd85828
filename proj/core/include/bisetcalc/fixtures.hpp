#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bisetcalc/scat.hpp"

namespace biset::fixtures {

/// Built-in groups. Elements are indices with identity 0:
///   e       trivial
///   C2,C3,C4 cyclic, k -> k+1 generator
///   C2xC2   (a,b) -> 2a+b
///   S3      permutations of {0,1,2} in lexicographic one-line order
const FiniteGroup& group_e();
const FiniteGroup& group_c2();
const FiniteGroup& group_c3();
const FiniteGroup& group_c4();
const FiniteGroup& group_v4();
const FiniteGroup& group_s3();

std::vector<const FiniteGroup*> builtin_groups();
/// Lookup by the serialized names: e, C2, C3, C4, C2xC2, S3.
std::optional<FiniteGroup> group_by_name(const std::string& name);

/// pt/iota for a monomorphism iota : H -> G (restriction/induction side).
OneCell type1_cell(const GroupHom& iota);
/// pt/q for the quotient map G -> G/N (inflation/orbits side).
OneCell type2_cell(const FiniteGroup& g, const Subgroup& n);

/// Monomorphisms used throughout the fixture corpus.
GroupHom incl_e_c2();
GroupHom incl_c2_c4();    // 1 -> 2
GroupHom incl_c2_s3();    // 1 -> (01)
GroupHom incl_c3_s3();    // 1 -> (012)

struct NamedCell {
    std::string name;
    OneCell cell;
};

/// The standard corpus: identities, type [I] cells, type [II] cells, and
/// cells with genuinely point-dependent acting parts.
std::vector<NamedCell> corpus_cells();
/// 0-cells appearing as sources or targets in the corpus.
std::vector<ZeroCell> corpus_zero_cells();

}  // namespace biset::fixtures

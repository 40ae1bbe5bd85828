#pragma once

#include <string>
#include <vector>

#include "bisetcalc/error.hpp"

namespace biset {

/// A finite group given by its full multiplication table. Elements are the
/// dense indices 0..order-1 and the identity is pinned at index 0, which
/// gives constant-time multiplication and a canonical serialization.
/// Immutable after construction.
class FiniteGroup {
  public:
    /// Validates the table: associativity by full triple enumeration,
    /// two-sided identity at index 0, two-sided inverses.
    static FiniteGroup from_table(std::string name, std::vector<std::vector<int>> mul);

    const std::string& name() const { return name_; }
    int order() const { return order_; }
    int op(int a, int b) const { return mul_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    static constexpr int identity = 0;
    const std::vector<std::vector<int>>& table() const { return mul_; }

    int conjugate(int g, int x) const { return op(op(g, x), inverse(g)); }
    int element_order(int g) const;

    /// Structural equality: same table. Names do not participate.
    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.order_ == b.order_ && a.mul_ == b.mul_;
    }
    friend bool operator!=(const FiniteGroup& a, const FiniteGroup& b) { return !(a == b); }

  private:
    FiniteGroup() = default;
    std::string name_;
    int order_ = 1;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
};

/// A group homomorphism as the full image array. Validated on construction.
class GroupHom {
  public:
    GroupHom(FiniteGroup source, FiniteGroup target, std::vector<int> image);

    const FiniteGroup& source() const { return source_; }
    const FiniteGroup& target() const { return target_; }
    int operator()(int g) const { return image_[g]; }
    const std::vector<int>& image() const { return image_; }

    bool is_injective() const;
    bool is_surjective() const;
    static GroupHom identity_hom(const FiniteGroup& g);

  private:
    FiniteGroup source_;
    FiniteGroup target_;
    std::vector<int> image_;
};

/// A subgroup as a sorted element set of its parent.
class Subgroup {
  public:
    Subgroup(FiniteGroup parent, std::vector<int> elements);

    const FiniteGroup& parent() const { return parent_; }
    const std::vector<int>& elements() const { return elements_; }
    int order() const { return static_cast<int>(elements_.size()); }
    bool contains(int g) const;
    bool is_normal() const;
    /// Conjugate subgroup g S g^-1.
    Subgroup conjugated_by(int g) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.elements_ == b.elements_;
    }

  private:
    FiniteGroup parent_;
    std::vector<int> elements_;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);

/// Closure of a subset under multiplication and inverses.
std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seed);

struct ProductGroup {
    FiniteGroup group;   // G x H, index (g,h) -> g*|H|+h
    GroupHom inj_left;   // G -> GxH
    GroupHom inj_right;  // H -> GxH
    GroupHom proj_left;  // GxH -> G
    GroupHom proj_right; // GxH -> H
};

ProductGroup product_group(const FiniteGroup& g, const FiniteGroup& h);

/// Surjective hom G -> G/N; cosets indexed with eN first, the rest ordered
/// by least element. Throws NotNormal with a conjugation witness.
GroupHom quotient_hom(const FiniteGroup& g, const Subgroup& n);

Subgroup kernel(const GroupHom& f);

/// Every subgroup, found by incremental closure.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

/// Conjugacy-class representatives of subgroups; each representative is the
/// lexicographically least element set within its class. Sorted by
/// (order, elements).
std::vector<Subgroup> subgroup_classes(const FiniteGroup& g);

/// Least element-set among the conjugates n S n^-1, n ranging over
/// `within` (element list of a subgroup containing the normalizing set).
std::vector<int> canonical_conjugate(const FiniteGroup& g, const std::vector<int>& sub,
                                     const std::vector<int>& within);

bool conjugate_in(const FiniteGroup& g, const std::vector<int>& a, const std::vector<int>& b,
                  const std::vector<int>& within);

}  // namespace biset

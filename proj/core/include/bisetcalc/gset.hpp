#pragma once

#include <utility>
#include <vector>

#include "bisetcalc/group.hpp"

namespace biset {

/// A finite left G-set with its full action table. act[g][x] is g.x.
/// Immutable after construction; the action axioms are checked.
class GSet {
  public:
    GSet(FiniteGroup group, int size, std::vector<std::vector<int>> act);

    static GSet trivial(const FiniteGroup& g, int size);
    static GSet regular(const FiniteGroup& g);
    static GSet empty(const FiniteGroup& g) { return trivial(g, 0); }
    static GSet point(const FiniteGroup& g) { return trivial(g, 1); }
    /// Cosets G/K with left translation; point i is the i-th coset, eK first,
    /// the rest ordered by least element.
    static GSet cosets(const FiniteGroup& g, const Subgroup& k);

    const FiniteGroup& group() const { return group_; }
    int size() const { return size_; }
    int apply(int g, int x) const { return act_[g][x]; }
    const std::vector<std::vector<int>>& act() const { return act_; }

    Subgroup stabilizer(int x) const;
    /// Points of the orbit through x, sorted.
    std::vector<int> orbit_of(int x) const;

    friend bool operator==(const GSet& a, const GSet& b) {
        return a.group_ == b.group_ && a.size_ == b.size_ && a.act_ == b.act_;
    }
    friend bool operator!=(const GSet& a, const GSet& b) { return !(a == b); }

  private:
    FiniteGroup group_;
    int size_;
    std::vector<std::vector<int>> act_;
};

/// An equivariant map between G-sets over the same group.
class GMap {
  public:
    GMap(GSet source, GSet target, std::vector<int> image);

    static GMap identity(const GSet& a);

    const GSet& source() const { return source_; }
    const GSet& target() const { return target_; }
    int operator()(int x) const { return image_[x]; }
    const std::vector<int>& image() const { return image_; }
    bool is_bijective() const;

    friend bool operator==(const GMap& a, const GMap& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.image_ == b.image_;
    }

  private:
    GSet source_;
    GSet target_;
    std::vector<int> image_;
};

GMap compose(const GMap& f, const GMap& g);  // g after f

struct Orbit {
    std::vector<int> points;  // sorted
    int representative;       // least point
    Subgroup stabilizer;      // of the representative
};

std::vector<Orbit> orbits(const GSet& a);

/// Points fixed by every element of the subgroup.
std::vector<int> fixed_points_subgroup(const GSet& a, const Subgroup& n);

struct GSetCoproduct {
    GSet set;
    GMap inj_left;
    GMap inj_right;
};

GSetCoproduct gset_coproduct(const GSet& a, const GSet& b);

struct GSetFiberedProduct {
    GSet set;
    GMap proj_left;
    GMap proj_right;
    std::vector<std::pair<int, int>> points;  // lexicographic
};

/// Same-group fibered product over a common target, diagonal action.
GSetFiberedProduct gset_fibered_product(const GMap& f, const GMap& g);

struct InducedGSet {
    GSet set;                                // over the target group of iota
    std::vector<std::pair<int, int>> reps;   // class index -> least (xi, x)
    std::vector<int> class_of;               // flattened xi*|X|+x -> class index
};

/// Ind along a group monomorphism: classes [xi,x] of (G x X) under
/// (xi,x) ~ (xi iota(h), ...) with g[xi,x] = [g xi, x]. Classes are numbered
/// by their lexicographically least representative.
InducedGSet induce(const GroupHom& iota, const GSet& x);

}  // namespace biset

#include "bisetcalc/group.hpp"

#include <algorithm>
#include <set>

namespace biset {

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::vector<int>> mul) {
    const int n = static_cast<int>(mul.size());
    if (n == 0) throw ParseError("group table is empty");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(mul[a].size()) != n)
            throw ParseError("group table is not square at row " + std::to_string(a));
        for (int b = 0; b < n; ++b)
            if (mul[a][b] < 0 || mul[a][b] >= n)
                throw ParseError("group table entry out of range at (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
    }
    for (int a = 0; a < n; ++a)
        if (mul[0][a] != a || mul[a][0] != a)
            throw NoIdentity("index 0 is not a two-sided identity: fails at element " +
                             std::to_string(a));
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul[a][b] == 0 && mul[b][a] == 0) { inv[a] = b; break; }
        if (inv[a] < 0) throw NoInverse("element " + std::to_string(a) + " has no two-sided inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw NotAssociative("associativity fails at triple (" + std::to_string(a) +
                                         "," + std::to_string(b) + "," + std::to_string(c) + ")");
    FiniteGroup g;
    g.name_ = std::move(name);
    g.order_ = n;
    g.mul_ = std::move(mul);
    g.inv_ = std::move(inv);
    return g;
}

int FiniteGroup::element_order(int g) const {
    int k = 1;
    int x = g;
    while (x != identity) { x = op(x, g); ++k; }
    return k;
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<int> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    const int n = source_.order();
    if (static_cast<int>(image_.size()) != n)
        throw TypeMismatch("hom image length does not match source order");
    for (int g : image_)
        if (g < 0 || g >= target_.order()) throw TypeMismatch("hom image out of range");
    if (image_[FiniteGroup::identity] != FiniteGroup::identity)
        throw TypeMismatch("hom does not preserve the identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (image_[source_.op(a, b)] != target_.op(image_[a], image_[b]))
                throw TypeMismatch("hom fails multiplicativity at (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
}

bool GroupHom::is_injective() const {
    std::set<int> seen(image_.begin(), image_.end());
    return static_cast<int>(seen.size()) == source_.order();
}

bool GroupHom::is_surjective() const {
    std::set<int> seen(image_.begin(), image_.end());
    return static_cast<int>(seen.size()) == target_.order();
}

GroupHom GroupHom::identity_hom(const FiniteGroup& g) {
    std::vector<int> im(g.order());
    for (int i = 0; i < g.order(); ++i) im[i] = i;
    return GroupHom(g, g, std::move(im));
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<int> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.empty() || elements_[0] != FiniteGroup::identity)
        throw TypeMismatch("subgroup must contain the identity");
    for (int a : elements_) {
        if (a < 0 || a >= parent_.order()) throw TypeMismatch("subgroup element out of range");
        if (!std::binary_search(elements_.begin(), elements_.end(), parent_.inverse(a)))
            throw TypeMismatch("subgroup not closed under inverse at " + std::to_string(a));
        for (int b : elements_)
            if (!std::binary_search(elements_.begin(), elements_.end(), parent_.op(a, b)))
                throw TypeMismatch("subgroup not closed under product at (" + std::to_string(a) +
                                   "," + std::to_string(b) + ")");
    }
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool Subgroup::is_normal() const {
    for (int g = 0; g < parent_.order(); ++g)
        for (int n : elements_)
            if (!contains(parent_.conjugate(g, n))) return false;
    return true;
}

Subgroup Subgroup::conjugated_by(int g) const {
    std::vector<int> conj;
    conj.reserve(elements_.size());
    for (int n : elements_) conj.push_back(parent_.conjugate(g, n));
    return Subgroup(parent_, std::move(conj));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {FiniteGroup::identity}); }

Subgroup full_subgroup(const FiniteGroup& g) {
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    return Subgroup(g, std::move(all));
}

std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
    std::set<int> cur(seed.begin(), seed.end());
    cur.insert(FiniteGroup::identity);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> snapshot(cur.begin(), cur.end());
        for (int a : snapshot) {
            if (cur.insert(g.inverse(a)).second) grew = true;
            for (int b : snapshot)
                if (cur.insert(g.op(a, b)).second) grew = true;
        }
    }
    return std::vector<int>(cur.begin(), cur.end());
}

ProductGroup product_group(const FiniteGroup& g, const FiniteGroup& h) {
    const int ng = g.order(), nh = h.order();
    const int n = ng * nh;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ga = a / nh, ha = a % nh, gb = b / nh, hb = b % nh;
            mul[a][b] = g.op(ga, gb) * nh + h.op(ha, hb);
        }
    FiniteGroup p = FiniteGroup::from_table(g.name() + "x" + h.name(), std::move(mul));

    std::vector<int> injg(ng), injh(nh), prg(n), prh(n);
    for (int a = 0; a < ng; ++a) injg[a] = a * nh;
    for (int a = 0; a < nh; ++a) injh[a] = a;
    for (int a = 0; a < n; ++a) { prg[a] = a / nh; prh[a] = a % nh; }
    return ProductGroup{p, GroupHom(g, p, std::move(injg)), GroupHom(h, p, std::move(injh)),
                        GroupHom(p, g, std::move(prg)), GroupHom(p, h, std::move(prh))};
}

GroupHom quotient_hom(const FiniteGroup& g, const Subgroup& n) {
    if (!(n.parent() == g)) throw GroupMismatch("subgroup parent differs from group");
    for (int x = 0; x < g.order(); ++x)
        for (int m : n.elements())
            if (!n.contains(g.conjugate(x, m)))
                throw NotNormal("conjugation witness: g=" + std::to_string(x) +
                                ", n=" + std::to_string(m));
    // Cosets as sorted element sets, identity coset first, rest by least element.
    std::vector<std::vector<int>> cosets;
    std::vector<int> coset_of(g.order(), -1);
    auto coset = [&](int x) {
        std::vector<int> c;
        for (int m : n.elements()) c.push_back(g.op(x, m));
        std::sort(c.begin(), c.end());
        return c;
    };
    cosets.push_back(coset(FiniteGroup::identity));
    std::vector<std::vector<int>> rest;
    for (int x = 0; x < g.order(); ++x) {
        auto c = coset(x);
        if (c != cosets[0] && std::find(rest.begin(), rest.end(), c) == rest.end())
            rest.push_back(c);
    }
    std::sort(rest.begin(), rest.end());
    cosets.insert(cosets.end(), rest.begin(), rest.end());
    for (int i = 0; i < static_cast<int>(cosets.size()); ++i)
        for (int x : cosets[i]) coset_of[x] = i;

    const int q = static_cast<int>(cosets.size());
    std::vector<std::vector<int>> mul(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) mul[a][b] = coset_of[g.op(cosets[a][0], cosets[b][0])];
    FiniteGroup quo = FiniteGroup::from_table(g.name() + "/" + std::to_string(n.order()),
                                              std::move(mul));
    return GroupHom(g, quo, std::move(coset_of));
}

Subgroup kernel(const GroupHom& f) {
    std::vector<int> elems;
    for (int x = 0; x < f.source().order(); ++x)
        if (f(x) == FiniteGroup::identity) elems.push_back(x);
    return Subgroup(f.source(), std::move(elems));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> found;
    found.insert({FiniteGroup::identity});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(found.begin(), found.end());
        for (const auto& sub : snapshot)
            for (int x = 0; x < g.order(); ++x) {
                if (std::binary_search(sub.begin(), sub.end(), x)) continue;
                std::vector<int> seed = sub;
                seed.push_back(x);
                if (found.insert(subgroup_closure(g, std::move(seed))).second) grew = true;
            }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& e : found) out.emplace_back(g, e);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

std::vector<int> canonical_conjugate(const FiniteGroup& g, const std::vector<int>& sub,
                                     const std::vector<int>& within) {
    std::vector<int> best;
    for (int x : within) {
        std::vector<int> c;
        c.reserve(sub.size());
        for (int n : sub) c.push_back(g.conjugate(x, n));
        std::sort(c.begin(), c.end());
        if (best.empty() || c < best) best = std::move(c);
    }
    return best;
}

bool conjugate_in(const FiniteGroup& g, const std::vector<int>& a, const std::vector<int>& b,
                  const std::vector<int>& within) {
    if (a.size() != b.size()) return false;
    for (int x : within) {
        std::vector<int> c;
        c.reserve(a.size());
        for (int n : a) c.push_back(g.conjugate(x, n));
        std::sort(c.begin(), c.end());
        if (c == b) return true;
    }
    return false;
}

std::vector<Subgroup> subgroup_classes(const FiniteGroup& g) {
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    std::set<std::vector<int>> reps;
    for (const Subgroup& s : all_subgroups(g))
        reps.insert(canonical_conjugate(g, s.elements(), all));
    std::vector<Subgroup> out;
    for (const auto& e : reps) out.emplace_back(g, e);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

}  // namespace biset

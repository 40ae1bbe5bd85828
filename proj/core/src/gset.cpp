#include "bisetcalc/gset.hpp"

#include <algorithm>

#include "bisetcalc/detail/union_find.hpp"

namespace biset {

GSet::GSet(FiniteGroup group, int size, std::vector<std::vector<int>> act)
    : group_(std::move(group)), size_(size), act_(std::move(act)) {
    if (size_ < 0) throw TypeMismatch("negative G-set size");
    if (static_cast<int>(act_.size()) != group_.order())
        throw TypeMismatch("action table must have one row per group element");
    for (const auto& row : act_) {
        if (static_cast<int>(row.size()) != size_)
            throw TypeMismatch("action table row length differs from size");
        for (int p : row)
            if (p < 0 || p >= size_) throw TypeMismatch("action table entry out of range");
    }
    for (int x = 0; x < size_; ++x)
        if (act_[FiniteGroup::identity][x] != x)
            throw TypeMismatch("identity does not act trivially at point " + std::to_string(x));
    const int n = group_.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int x = 0; x < size_; ++x)
                if (act_[group_.op(g, h)][x] != act_[g][act_[h][x]])
                    throw TypeMismatch("action fails (gh)x = g(hx) at g=" + std::to_string(g) +
                                       " h=" + std::to_string(h) + " x=" + std::to_string(x));
}

GSet GSet::trivial(const FiniteGroup& g, int size) {
    std::vector<int> id(size);
    for (int i = 0; i < size; ++i) id[i] = i;
    return GSet(g, size, std::vector<std::vector<int>>(g.order(), id));
}

GSet GSet::regular(const FiniteGroup& g) {
    std::vector<std::vector<int>> act(g.order(), std::vector<int>(g.order()));
    for (int a = 0; a < g.order(); ++a)
        for (int x = 0; x < g.order(); ++x) act[a][x] = g.op(a, x);
    return GSet(g, g.order(), std::move(act));
}

GSet GSet::cosets(const FiniteGroup& g, const Subgroup& k) {
    std::vector<std::vector<int>> cs;
    auto coset = [&](int x) {
        std::vector<int> c;
        for (int m : k.elements()) c.push_back(g.op(x, m));
        std::sort(c.begin(), c.end());
        return c;
    };
    cs.push_back(coset(FiniteGroup::identity));
    std::vector<std::vector<int>> rest;
    for (int x = 0; x < g.order(); ++x) {
        auto c = coset(x);
        if (c != cs[0] && std::find(rest.begin(), rest.end(), c) == rest.end()) rest.push_back(c);
    }
    std::sort(rest.begin(), rest.end());
    cs.insert(cs.end(), rest.begin(), rest.end());
    std::vector<int> coset_of(g.order());
    for (int i = 0; i < static_cast<int>(cs.size()); ++i)
        for (int x : cs[i]) coset_of[x] = i;
    const int m = static_cast<int>(cs.size());
    std::vector<std::vector<int>> act(g.order(), std::vector<int>(m));
    for (int a = 0; a < g.order(); ++a)
        for (int i = 0; i < m; ++i) act[a][i] = coset_of[g.op(a, cs[i][0])];
    return GSet(g, m, std::move(act));
}

Subgroup GSet::stabilizer(int x) const {
    std::vector<int> elems;
    for (int g = 0; g < group_.order(); ++g)
        if (act_[g][x] == x) elems.push_back(g);
    return Subgroup(group_, std::move(elems));
}

std::vector<int> GSet::orbit_of(int x) const {
    std::vector<int> pts;
    for (int g = 0; g < group_.order(); ++g) pts.push_back(act_[g][x]);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

GMap::GMap(GSet source, GSet target, std::vector<int> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    if (!(source_.group() == target_.group())) throw GroupMismatch("G-map across different groups");
    if (static_cast<int>(image_.size()) != source_.size())
        throw TypeMismatch("G-map image length differs from source size");
    for (int p : image_)
        if (p < 0 || p >= target_.size()) throw TypeMismatch("G-map image out of range");
    for (int g = 0; g < source_.group().order(); ++g)
        for (int x = 0; x < source_.size(); ++x)
            if (image_[source_.apply(g, x)] != target_.apply(g, image_[x]))
                throw TypeMismatch("map not equivariant at g=" + std::to_string(g) +
                                   " x=" + std::to_string(x));
}

GMap GMap::identity(const GSet& a) {
    std::vector<int> im(a.size());
    for (int i = 0; i < a.size(); ++i) im[i] = i;
    return GMap(a, a, std::move(im));
}

bool GMap::is_bijective() const {
    if (source_.size() != target_.size()) return false;
    std::vector<bool> hit(target_.size(), false);
    for (int p : image_) {
        if (hit[p]) return false;
        hit[p] = true;
    }
    return true;
}

GMap compose(const GMap& f, const GMap& g) {
    if (!(f.target() == g.source())) throw TypeMismatch("G-map composition mismatch");
    std::vector<int> im(f.source().size());
    for (int x = 0; x < f.source().size(); ++x) im[x] = g(f(x));
    return GMap(f.source(), g.target(), std::move(im));
}

std::vector<Orbit> orbits(const GSet& a) {
    std::vector<bool> seen(a.size(), false);
    std::vector<Orbit> out;
    for (int x = 0; x < a.size(); ++x) {
        if (seen[x]) continue;
        auto pts = a.orbit_of(x);
        for (int p : pts) seen[p] = true;
        out.push_back(Orbit{pts, pts[0], a.stabilizer(pts[0])});
    }
    return out;
}

std::vector<int> fixed_points_subgroup(const GSet& a, const Subgroup& n) {
    if (!(n.parent() == a.group())) throw GroupMismatch("subgroup of a different group");
    std::vector<int> out;
    for (int x = 0; x < a.size(); ++x) {
        bool fixed = true;
        for (int g : n.elements())
            if (a.apply(g, x) != x) { fixed = false; break; }
        if (fixed) out.push_back(x);
    }
    return out;
}

GSetCoproduct gset_coproduct(const GSet& a, const GSet& b) {
    if (!(a.group() == b.group())) throw GroupMismatch("coproduct across different groups");
    const int n = a.group().order();
    std::vector<std::vector<int>> act(n, std::vector<int>(a.size() + b.size()));
    for (int g = 0; g < n; ++g) {
        for (int x = 0; x < a.size(); ++x) act[g][x] = a.apply(g, x);
        for (int y = 0; y < b.size(); ++y) act[g][a.size() + y] = a.size() + b.apply(g, y);
    }
    GSet sum(a.group(), a.size() + b.size(), std::move(act));
    std::vector<int> il(a.size()), ir(b.size());
    for (int x = 0; x < a.size(); ++x) il[x] = x;
    for (int y = 0; y < b.size(); ++y) ir[y] = a.size() + y;
    return GSetCoproduct{sum, GMap(a, sum, std::move(il)), GMap(b, sum, std::move(ir))};
}

GSetFiberedProduct gset_fibered_product(const GMap& f, const GMap& g) {
    if (!(f.target() == g.target())) throw GroupMismatch("fibered product needs a common target");
    std::vector<std::pair<int, int>> pts;
    for (int a = 0; a < f.source().size(); ++a)
        for (int b = 0; b < g.source().size(); ++b)
            if (f(a) == g(b)) pts.emplace_back(a, b);
    auto index_of = [&](int a, int b) {
        return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), std::make_pair(a, b)) -
                                pts.begin());
    };
    const int n = f.source().group().order();
    std::vector<std::vector<int>> act(n, std::vector<int>(pts.size()));
    for (int h = 0; h < n; ++h)
        for (int i = 0; i < static_cast<int>(pts.size()); ++i)
            act[h][i] = index_of(f.source().apply(h, pts[i].first), g.source().apply(h, pts[i].second));
    GSet fp(f.source().group(), static_cast<int>(pts.size()), std::move(act));
    std::vector<int> pl(pts.size()), pr(pts.size());
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        pl[i] = pts[i].first;
        pr[i] = pts[i].second;
    }
    return GSetFiberedProduct{fp, GMap(fp, f.source(), std::move(pl)),
                              GMap(fp, g.source(), std::move(pr)), std::move(pts)};
}

InducedGSet induce(const GroupHom& iota, const GSet& x) {
    if (!(iota.source() == x.group())) throw GroupMismatch("induction along a hom of another group");
    if (!iota.is_injective()) throw NotInjective("induction requires a monomorphism");
    const FiniteGroup& h = iota.source();
    const FiniteGroup& g = iota.target();
    const int nx = x.size();
    // (xi, p) flattened as xi*nx + p; (xi, p) ~ (xi iota(k)^-1, k p).
    detail::UnionFind uf(g.order() * nx);
    for (int xi = 0; xi < g.order(); ++xi)
        for (int p = 0; p < nx; ++p)
            for (int k = 0; k < h.order(); ++k)
                uf.unite(xi * nx + p, g.op(xi, g.inverse(iota(k))) * nx + x.apply(k, p));
    std::vector<int> cls = uf.classes();
    int nclasses = 0;
    for (int c : cls) nclasses = std::max(nclasses, c + 1);
    std::vector<std::pair<int, int>> reps(nclasses, {-1, -1});
    for (int i = static_cast<int>(cls.size()) - 1; i >= 0; --i)
        reps[cls[i]] = {i / nx, i % nx};
    std::vector<std::vector<int>> act(g.order(), std::vector<int>(nclasses));
    for (int a = 0; a < g.order(); ++a)
        for (int c = 0; c < nclasses; ++c)
            act[a][c] = cls[g.op(a, reps[c].first) * nx + reps[c].second];
    GSet ind(g, nclasses, std::move(act));
    return InducedGSet{std::move(ind), std::move(reps), std::move(cls)};
}

}  // namespace biset

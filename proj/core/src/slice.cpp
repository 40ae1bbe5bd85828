#include "bisetcalc/slice.hpp"

#include <algorithm>
#include <map>

#include "bisetcalc/detail/union_find.hpp"

namespace biset {

SliceObject::SliceObject(ZeroCell base_, GSet total_, GMap structure_)
    : base(std::move(base_)), total(std::move(total_)), structure(std::move(structure_)) {
    if (!(structure.source() == total) || !(structure.target() == base.set))
        throw BaseMismatch("structure map does not run from the carrier to the base");
}

SliceObject SliceObject::over_point(const ZeroCell& b, const GSet& total) {
    if (b.size() != 1) throw BaseMismatch("base is not a point");
    return SliceObject(b, total, GMap(total, b.set, std::vector<int>(total.size(), 0)));
}

SliceObject SliceObject::identity_on(const ZeroCell& b) {
    return SliceObject(b, b.set, GMap::identity(b.set));
}

SliceMorphism::SliceMorphism(SliceObject source_, SliceObject target_, std::vector<int> image)
    : source(std::move(source_)), target(std::move(target_)),
      map(source.total, target.total, std::move(image)) {
    if (!(source.base == target.base)) throw BaseMismatch("morphism across different bases");
    for (int x = 0; x < source.total.size(); ++x)
        if (target.structure(map(x)) != source.structure(x))
            throw BaseMismatch("morphism does not commute with the structure maps at " +
                               std::to_string(x));
}

SliceMorphism SliceMorphism::identity(const SliceObject& a) {
    return SliceMorphism(a, a, GMap::identity(a.total).image());
}

SliceMorphism compose(const SliceMorphism& f, const SliceMorphism& g) {
    if (!(f.target == g.source)) throw TypeMismatch("slice morphism composition mismatch");
    std::vector<int> im(f.source.total.size());
    for (int x = 0; x < f.source.total.size(); ++x) im[x] = g(f(x));
    return SliceMorphism(f.source, g.target, std::move(im));
}

SliceObject slice_coproduct(const SliceObject& a, const SliceObject& b) {
    if (!(a.base == b.base)) throw BaseMismatch("coproduct across different bases");
    GSetCoproduct sum = gset_coproduct(a.total, b.total);
    std::vector<int> st(sum.set.size());
    for (int x = 0; x < a.total.size(); ++x) st[sum.inj_left(x)] = a.structure(x);
    for (int y = 0; y < b.total.size(); ++y) st[sum.inj_right(y)] = b.structure(y);
    return SliceObject(a.base, sum.set, GMap(sum.set, a.base.set, std::move(st)));
}

SliceObject slice_product(const SliceObject& a, const SliceObject& b) {
    if (!(a.base == b.base)) throw BaseMismatch("product across different bases");
    GSetFiberedProduct fp = gset_fibered_product(a.structure, b.structure);
    std::vector<int> st(fp.set.size());
    for (int i = 0; i < fp.set.size(); ++i) st[i] = a.structure(fp.proj_left(i));
    return SliceObject(a.base, fp.set, GMap(fp.set, a.base.set, std::move(st)));
}

int PulledBack::point_index(int x, int b) const {
    auto key = std::make_pair(x, b);
    auto it = std::lower_bound(points.begin(), points.end(), key);
    if (it == points.end() || *it != key) throw TypeMismatch("not a point of the pullback");
    return static_cast<int>(it - points.begin());
}

PulledBack pullback_star(const OneCell& f, const SliceObject& b) {
    if (!(b.base == f.target())) throw BaseMismatch("pullback of an object over another base");
    const FiniteGroup& g = f.source().group();
    std::vector<std::pair<int, int>> pts;
    for (int x = 0; x < f.source().size(); ++x)
        for (int p = 0; p < b.total.size(); ++p)
            if (f.base(x) == b.structure(p)) pts.emplace_back(x, p);
    auto idx = [&](int x, int p) {
        return static_cast<int>(
            std::lower_bound(pts.begin(), pts.end(), std::make_pair(x, p)) - pts.begin());
    };
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<int>> act(g.order(), std::vector<int>(n));
    for (int a = 0; a < g.order(); ++a)
        for (int i = 0; i < n; ++i)
            act[a][i] = idx(f.source().set.apply(a, pts[i].first),
                            b.total.apply(f.theta(pts[i].first, a), pts[i].second));
    GSet carrier(g, n, std::move(act));
    std::vector<int> st(n);
    for (int i = 0; i < n; ++i) st[i] = pts[i].first;
    SliceObject obj(f.source(), carrier, GMap(carrier, f.source().set, std::move(st)));
    return PulledBack{std::move(obj), std::move(pts)};
}

SliceMorphism pullback_star_map(const OneCell& f, const SliceMorphism& m) {
    PulledBack src = pullback_star(f, m.source);
    PulledBack tgt = pullback_star(f, m.target);
    std::vector<int> im(src.points.size());
    for (std::size_t i = 0; i < src.points.size(); ++i)
        im[i] = tgt.point_index(src.points[i].first, m(src.points[i].second));
    return SliceMorphism(src.object, tgt.object, std::move(im));
}

SliceMorphism two_cell_transport(const TwoCell& eps, const SliceObject& b) {
    PulledBack src = pullback_star(eps.from(), b);
    PulledBack tgt = pullback_star(eps.to(), b);
    std::vector<int> im(src.points.size());
    for (std::size_t i = 0; i < src.points.size(); ++i) {
        auto [x, p] = src.points[i];
        im[i] = tgt.point_index(x, b.total.apply(eps.eps(x), p));
    }
    return SliceMorphism(src.object, tgt.object, std::move(im));
}

namespace {

OneCell composite_cell(const OneCell& f, const SliceObject& a) {
    if (!(a.base == f.source())) throw BaseMismatch("pushforward of an object over another base");
    return compose(OneCell::equivariant(a.structure), f);
}

}  // namespace

Pushed s_theta(const OneCell& f, const SliceObject& a) {
    SimFactorization sc = sim_factorize(composite_cell(f, a));
    SimFactorization sf = sim_factorize(f);
    std::vector<int> st(sc.sim.size());
    for (int c = 0; c < sc.sim.size(); ++c) {
        auto [eta, p] = sc.reps[c];
        st[c] = sf.cls(eta, a.structure(p));
    }
    SliceObject obj(ZeroCell{sf.sim.set}, sc.sim.set, GMap(sc.sim.set, sf.sim.set, std::move(st)));
    return Pushed{std::move(obj), std::move(sc.reps), std::move(sc.class_of), a.total.size()};
}

Pushed push_plus(const OneCell& f, const SliceObject& a) {
    SimFactorization sc = sim_factorize(composite_cell(f, a));
    SliceObject obj(f.target(), sc.sim.set, sc.alpha_tilde);
    return Pushed{std::move(obj), std::move(sc.reps), std::move(sc.class_of), a.total.size()};
}

SliceMorphism push_plus_map(const OneCell& f, const SliceMorphism& m) {
    Pushed src = push_plus(f, m.source);
    Pushed tgt = push_plus(f, m.target);
    std::vector<int> im(src.reps.size());
    for (std::size_t c = 0; c < src.reps.size(); ++c)
        im[c] = tgt.cls(src.reps[c].first, m(src.reps[c].second));
    return SliceMorphism(src.object, tgt.object, std::move(im));
}

SliceMorphism adjoint_phi(const OneCell& f, const SliceObject& a, const SliceObject& b,
                          const SliceMorphism& psi) {
    Pushed pa = push_plus(f, a);
    if (!(psi.source == pa.object) || !(psi.target == b))
        throw TypeMismatch("transpose input is not a morphism f_+ A -> B");
    PulledBack pb = pullback_star(f, b);
    std::vector<int> im(a.total.size());
    for (int p = 0; p < a.total.size(); ++p)
        im[p] = pb.point_index(a.structure(p), psi(pa.cls(FiniteGroup::identity, p)));
    return SliceMorphism(a, pb.object, std::move(im));
}

SliceMorphism adjoint_psi(const OneCell& f, const SliceObject& a, const SliceObject& b,
                          const SliceMorphism& phi) {
    PulledBack pb = pullback_star(f, b);
    if (!(phi.source == a) || !(phi.target == pb.object))
        throw TypeMismatch("transpose input is not a morphism A -> f* B");
    Pushed pa = push_plus(f, a);
    std::vector<int> im(pa.reps.size());
    for (std::size_t c = 0; c < pa.reps.size(); ++c) {
        auto [eta, p] = pa.reps[c];
        im[c] = b.total.apply(eta, pb.points[phi(p)].second);
    }
    return SliceMorphism(pa.object, b, std::move(im));
}

SliceMorphism counit_lambda(const OneCell& f, const SliceObject& b) {
    PulledBack pb = pullback_star(f, b);
    return adjoint_psi(f, pb.object, b, SliceMorphism::identity(pb.object));
}

ThetaFixed fixed_points_theta(const OneCell& f, const SliceObject& a) {
    if (!(a.base == f.source())) throw BaseMismatch("theta-fixed over another base");
    const FiniteGroup& g = f.source().group();
    std::vector<int> pts;
    for (int p = 0; p < a.total.size(); ++p) {
        int x = a.structure(p);
        bool ok = true;
        for (int u = 0; u < g.order() && ok; ++u)
            for (int v = 0; v < g.order() && ok; ++v)
                if (f.source().set.apply(u, x) == f.source().set.apply(v, x) &&
                    f.theta(x, u) == f.theta(x, v) &&
                    a.total.apply(u, p) != a.total.apply(v, p))
                    ok = false;
        if (ok) pts.push_back(p);
    }
    std::vector<int> local(a.total.size(), -1);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) local[pts[i]] = i;
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<int>> act(g.order(), std::vector<int>(n));
    for (int u = 0; u < g.order(); ++u)
        for (int i = 0; i < n; ++i) {
            int q = local[a.total.apply(u, pts[i])];
            if (q < 0) throw Error("theta-fixed points are not closed under the action");
            act[u][i] = q;
        }
    GSet sub(g, n, std::move(act));
    std::vector<int> st(n), inc(n);
    for (int i = 0; i < n; ++i) {
        st[i] = a.structure(pts[i]);
        inc[i] = pts[i];
    }
    SliceObject obj(a.base, sub, GMap(sub, a.base.set, std::move(st)));
    GMap inclusion(obj.total, a.total, std::move(inc));
    return ThetaFixed{std::move(obj), std::move(pts), std::move(inclusion)};
}

int PiResult::point_index(int y, const std::vector<int>& sigma) const {
    auto key = std::make_pair(y, sigma);
    auto it = std::lower_bound(points.begin(), points.end(), key);
    if (it == points.end() || *it != key) throw TypeMismatch("not a section point");
    return static_cast<int>(it - points.begin());
}

PiResult pi_along(const GMap& q, const SliceObject& c) {
    if (!(c.base.set == q.source())) throw BaseMismatch("sections of an object over another base");
    const GSet& y = q.target();
    const FiniteGroup& h = y.group();

    std::vector<std::vector<int>> fiber(y.size());
    for (int w = 0; w < q.source().size(); ++w) fiber[q(w)].push_back(w);

    std::vector<std::pair<int, std::vector<int>>> pts;
    for (int p = 0; p < y.size(); ++p) {
        // candidates per fiber position
        std::vector<std::vector<int>> cand(fiber[p].size());
        bool any = true;
        for (std::size_t i = 0; i < fiber[p].size(); ++i) {
            for (int t = 0; t < c.total.size(); ++t)
                if (c.structure(t) == fiber[p][i]) cand[i].push_back(t);
            if (cand[i].empty()) any = false;
        }
        if (!any) continue;
        std::vector<std::size_t> counter(fiber[p].size(), 0);
        while (true) {
            std::vector<int> sigma(fiber[p].size());
            for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = cand[i][counter[i]];
            pts.emplace_back(p, std::move(sigma));
            std::size_t j = 0;
            for (; j < counter.size(); ++j) {
                if (++counter[j] < cand[j].size()) break;
                counter[j] = 0;
            }
            if (j == counter.size() || counter.empty()) break;
        }
    }
    std::sort(pts.begin(), pts.end());

    auto idx = [&](const std::pair<int, std::vector<int>>& key) {
        return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), key) - pts.begin());
    };
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<int>> act(h.order(), std::vector<int>(n));
    for (int a = 0; a < h.order(); ++a) {
        int ainv = h.inverse(a);
        for (int i = 0; i < n; ++i) {
            const auto& [p, sigma] = pts[i];
            int p2 = y.apply(a, p);
            std::vector<int> s2(fiber[p2].size());
            for (std::size_t j = 0; j < fiber[p2].size(); ++j) {
                int w = q.source().apply(ainv, fiber[p2][j]);
                std::size_t pos = std::lower_bound(fiber[p].begin(), fiber[p].end(), w) -
                                  fiber[p].begin();
                s2[j] = c.total.apply(a, sigma[pos]);
            }
            act[a][i] = idx({p2, s2});
        }
    }
    GSet carrier(h, n, std::move(act));
    std::vector<int> st(n);
    for (int i = 0; i < n; ++i) st[i] = pts[i].first;
    SliceObject obj(ZeroCell{y}, carrier, GMap(carrier, y, std::move(st)));
    return PiResult{std::move(obj), std::move(pts)};
}

ExponentialDiagram exponential_diagram(const OneCell& f, const SliceObject& a) {
    ThetaFixed tf = fixed_points_theta(f, a);
    Pushed st = s_theta(f, tf.object);
    SimFactorization sf = sim_factorize(f);
    PiResult pi = pi_along(sf.alpha_tilde, st.object);
    SliceObject bullet(f.target(), pi.object.total, GMap(pi.object.total, f.target().set,
                                                         pi.object.structure.image()));
    PulledBack back = pullback_star(f, bullet);

    // f_dagger: base (x,p) -> p, acting part theta_x.
    const int nb = static_cast<int>(back.points.size());
    std::vector<int> dbase(nb);
    std::vector<std::vector<int>> dtheta(nb);
    for (int i = 0; i < nb; ++i) {
        dbase[i] = back.points[i].second;
        dtheta[i].resize(f.source().group().order());
        for (int u = 0; u < f.source().group().order(); ++u)
            dtheta[i][u] = f.theta(back.points[i].first, u);
    }
    OneCell f_dagger(ZeroCell{back.object.total}, ZeroCell{bullet.total}, std::move(dbase),
                     std::move(dtheta));

    // zeta(x, (y, sigma)): evaluate sigma at [e,x], then locate the unique
    // a0 in A^theta with [e,a0] = sigma([e,x]) and structure(a0) = x.
    std::vector<int> zim(nb);
    for (int i = 0; i < nb; ++i) {
        auto [x, p] = back.points[i];
        const auto& [yy, sigma] = pi.points[p];
        int w0 = sf.cls(FiniteGroup::identity, x);
        std::vector<int> fib;
        for (int w = 0; w < sf.sim.size(); ++w)
            if (sf.alpha_tilde(w) == yy) fib.push_back(w);
        std::size_t pos = std::lower_bound(fib.begin(), fib.end(), w0) - fib.begin();
        int s0 = sigma[pos];
        int a0 = -1;
        for (int la = 0; la < tf.object.total.size(); ++la)
            if (st.cls(FiniteGroup::identity, la) == s0 && a.structure(tf.inclusion(la)) == x) {
                a0 = tf.inclusion(la);
                break;
            }
        if (a0 < 0) throw Error("no point of the theta-fixed subobject matches the section");
        zim[i] = a0;
    }
    SliceMorphism zeta(back.object, a, std::move(zim));

    return ExponentialDiagram{std::move(bullet), std::move(back), std::move(f_dagger),
                              std::move(zeta),  std::move(tf),   std::move(st),
                              std::move(pi)};
}

SliceObject push_bullet(const OneCell& f, const SliceObject& a) {
    ThetaFixed tf = fixed_points_theta(f, a);
    Pushed st = s_theta(f, tf.object);
    SimFactorization sf = sim_factorize(f);
    PiResult pi = pi_along(sf.alpha_tilde, st.object);
    return SliceObject(f.target(), pi.object.total,
                       GMap(pi.object.total, f.target().set, pi.object.structure.image()));
}

std::vector<SliceMorphism> enumerate_slice_homs(const SliceObject& a, const SliceObject& b) {
    if (!(a.base == b.base)) throw BaseMismatch("hom set across different bases");
    const FiniteGroup& g = a.base.group();
    std::vector<Orbit> orbs = orbits(a.total);

    std::vector<std::vector<std::vector<std::pair<int, int>>>> per_orbit;
    for (const Orbit& o : orbs) {
        const int a0 = o.representative;
        std::vector<std::vector<std::pair<int, int>>> choices;
        for (int b0 = 0; b0 < b.total.size(); ++b0) {
            if (b.structure(b0) != a.structure(a0)) continue;
            bool ok = true;
            std::vector<int> im(a.total.size(), -1);
            for (int u = 0; u < g.order() && ok; ++u) {
                int pa = a.total.apply(u, a0);
                int pb = b.total.apply(u, b0);
                if (im[pa] < 0) im[pa] = pb;
                else if (im[pa] != pb) ok = false;
            }
            if (!ok) continue;
            std::vector<std::pair<int, int>> assign;
            for (int p : o.points) assign.emplace_back(p, im[p]);
            choices.push_back(std::move(assign));
        }
        if (choices.empty()) return {};
        per_orbit.push_back(std::move(choices));
    }

    std::vector<SliceMorphism> out;
    std::vector<std::size_t> counter(per_orbit.size(), 0);
    while (true) {
        std::vector<int> im(a.total.size(), 0);
        for (std::size_t i = 0; i < per_orbit.size(); ++i)
            for (const auto& [p, v] : per_orbit[i][counter[i]]) im[p] = v;
        out.emplace_back(a, b, std::move(im));
        std::size_t j = 0;
        for (; j < counter.size(); ++j) {
            if (++counter[j] < per_orbit[j].size()) break;
            counter[j] = 0;
        }
        if (j == counter.size() || counter.empty()) break;
    }
    return out;
}

std::optional<SliceMorphism> find_slice_iso(const SliceObject& a, const SliceObject& b) {
    if (!(a.base == b.base) || a.total.size() != b.total.size()) return std::nullopt;
    std::vector<Orbit> oa = orbits(a.total);
    std::vector<Orbit> ob = orbits(b.total);
    if (oa.size() != ob.size()) return std::nullopt;
    const FiniteGroup& g = a.base.group();

    std::vector<bool> used(ob.size(), false);
    std::vector<int> im(a.total.size(), -1);
    for (const Orbit& o : oa) {
        const int a0 = o.representative;
        bool matched = false;
        for (std::size_t j = 0; j < ob.size() && !matched; ++j) {
            if (used[j] || ob[j].points.size() != o.points.size()) continue;
            for (int b0 : ob[j].points) {
                if (b.structure(b0) != a.structure(a0)) continue;
                if (!(b.total.stabilizer(b0).elements() == o.stabilizer.elements())) continue;
                for (int u = 0; u < g.order(); ++u) im[a.total.apply(u, a0)] = b.total.apply(u, b0);
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return std::nullopt;
    }
    return SliceMorphism(a, b, std::move(im));
}

bool slice_isomorphic(const SliceObject& a, const SliceObject& b) {
    return find_slice_iso(a, b).has_value();
}

}  // namespace biset

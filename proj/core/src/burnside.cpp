#include "bisetcalc/burnside.hpp"

#include <algorithm>

namespace biset {

BurnsideClass classify(const SliceObject& a) {
    const FiniteGroup& g = a.base.group();
    BurnsideClass out;
    for (const Orbit& o : orbits(a.total)) {
        int xbar = a.structure(o.representative);
        for (int p : o.points) xbar = std::min(xbar, a.structure(p));
        int a1 = -1;
        for (int p : o.points)
            if (a.structure(p) == xbar) { a1 = p; break; }
        Subgroup sx = a.base.set.stabilizer(xbar);
        OrbitDescriptor d;
        d.base_point = xbar;
        d.stabilizer = canonical_conjugate(g, a.total.stabilizer(a1).elements(), sx.elements());
        out.orbits.push_back(std::move(d));
    }
    std::sort(out.orbits.begin(), out.orbits.end());
    return out;
}

SliceObject orbit_representative(const ZeroCell& base, const OrbitDescriptor& d) {
    const FiniteGroup& g = base.group();
    Subgroup k(g, d.stabilizer);
    GSet carrier = GSet::cosets(g, k);
    // coset of u is carrier.apply(u, 0); structure u K -> u . base_point
    std::vector<int> st(carrier.size(), -1);
    for (int u = 0; u < g.order(); ++u) {
        int c = carrier.apply(u, 0);
        if (st[c] < 0) st[c] = base.set.apply(u, d.base_point);
    }
    return SliceObject(base, carrier, GMap(carrier, base.set, std::move(st)));
}

SliceObject class_representative(const ZeroCell& base, const BurnsideClass& c) {
    SliceObject out(base, GSet::empty(base.group()),
                    GMap(GSet::empty(base.group()), base.set, {}));
    for (const OrbitDescriptor& d : c.orbits) out = slice_coproduct(out, orbit_representative(base, d));
    return out;
}

std::vector<BurnsideClass> transitive_classes(const ZeroCell& base) {
    const FiniteGroup& g = base.group();
    std::vector<BurnsideClass> out;
    for (const Orbit& o : orbits(base.set)) {
        Subgroup sx = base.set.stabilizer(o.representative);
        // subgroups of the point stabilizer, up to conjugacy inside it
        std::vector<std::vector<int>> seen;
        for (const Subgroup& k : all_subgroups(g)) {
            bool inside = true;
            for (int e : k.elements())
                if (!sx.contains(e)) { inside = false; break; }
            if (!inside) continue;
            auto canon = canonical_conjugate(g, k.elements(), sx.elements());
            if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
            seen.push_back(canon);
            out.push_back(BurnsideClass{{OrbitDescriptor{o.representative, canon}}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BurnsideClass> classes_up_to_size(const ZeroCell& base, int n) {
    const FiniteGroup& g = base.group();
    std::vector<OrbitDescriptor> descs;
    std::vector<int> sizes;
    for (const BurnsideClass& c : transitive_classes(base)) {
        descs.push_back(c.orbits[0]);
        sizes.push_back(g.order() / static_cast<int>(c.orbits[0].stabilizer.size()));
    }
    std::vector<BurnsideClass> out;
    BurnsideClass cur;
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
        out.push_back(cur);
        for (std::size_t j = i; j < descs.size(); ++j) {
            if (sizes[j] > left) continue;
            cur.orbits.push_back(descs[j]);
            go(j, left - sizes[j]);
            cur.orbits.pop_back();
        }
    };
    go(0, n);
    for (auto& c : out) std::sort(c.orbits.begin(), c.orbits.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

OmegaElement OmegaElement::one(const ZeroCell& b) {
    return of(SliceObject::identity_on(b));
}

OmegaElement OmegaElement::of(const SliceObject& a) {
    return of_class(a.base, classify(a));
}

// Elements are stored over the transitive basis: a class with several
// orbits contributes one summand per orbit.
OmegaElement OmegaElement::of_class(const ZeroCell& b, const BurnsideClass& c, long long n) {
    OmegaElement out = zero(b);
    if (n == 0) return out;
    for (const OrbitDescriptor& d : c.orbits) {
        BurnsideClass t{{d}};
        long long v = out.coeff(t) + n;
        if (v == 0) out.terms.erase(t);
        else out.terms[t] = v;
    }
    return out;
}

bool OmegaElement::is_effective() const {
    for (const auto& [c, n] : terms)
        if (n < 0) return false;
    return true;
}

long long OmegaElement::coeff(const BurnsideClass& c) const {
    auto it = terms.find(c);
    return it == terms.end() ? 0 : it->second;
}

long long OmegaElement::total_size() const {
    long long s = 0;
    for (const auto& [c, n] : terms)
        for (const OrbitDescriptor& d : c.orbits)
            s += n * (base.group().order() / static_cast<long long>(d.stabilizer.size()));
    return s;
}

OmegaElement operator+(const OmegaElement& a, const OmegaElement& b) {
    if (!(a.base == b.base)) throw BaseMismatch("Burnside elements over different bases");
    OmegaElement out = a;
    for (const auto& [c, n] : b.terms) {
        long long v = out.coeff(c) + n;
        if (v == 0) out.terms.erase(c);
        else out.terms[c] = v;
    }
    return out;
}

OmegaElement operator-(const OmegaElement& a) {
    OmegaElement out = a;
    for (auto& [c, n] : out.terms) n = -n;
    return out;
}

OmegaElement operator-(const OmegaElement& a, const OmegaElement& b) { return a + (-b); }

OmegaElement operator*(const OmegaElement& a, long long n) {
    OmegaElement out = OmegaElement::zero(a.base);
    if (n == 0) return out;
    out = a;
    for (auto& [c, v] : out.terms) v *= n;
    return out;
}

OmegaElement operator*(const OmegaElement& a, const OmegaElement& b) {
    if (!(a.base == b.base)) throw BaseMismatch("Burnside elements over different bases");
    OmegaElement out = OmegaElement::zero(a.base);
    for (const auto& [ca, na] : a.terms)
        for (const auto& [cb, nb] : b.terms) {
            SliceObject pa = class_representative(a.base, ca);
            SliceObject pb = class_representative(a.base, cb);
            OmegaElement prod =
                OmegaElement::of_class(a.base, classify(slice_product(pa, pb)), na * nb);
            out = out + prod;
        }
    return out;
}

SliceObject realize(const OmegaElement& eff) {
    SliceObject out(eff.base, GSet::empty(eff.base.group()),
                    GMap(GSet::empty(eff.base.group()), eff.base.set, {}));
    for (const auto& [c, n] : eff.terms) {
        if (n < 0) throw TypeMismatch("cannot realize a non-effective element");
        for (long long i = 0; i < n; ++i)
            out = slice_coproduct(out, class_representative(eff.base, c));
    }
    return out;
}

OmegaElement omega_star(const OneCell& f, const OmegaElement& x) {
    if (!(x.base == f.target())) throw BaseMismatch("omega_star input over the wrong base");
    OmegaElement out = OmegaElement::zero(f.source());
    for (const auto& [c, n] : x.terms) {
        SliceObject rep = class_representative(x.base, c);
        out = out + OmegaElement::of(pullback_star(f, rep).object) * n;
    }
    return out;
}

OmegaElement omega_plus(const OneCell& f, const OmegaElement& x) {
    if (!(x.base == f.source())) throw BaseMismatch("omega_plus input over the wrong base");
    OmegaElement out = OmegaElement::zero(f.target());
    for (const auto& [c, n] : x.terms) {
        SliceObject rep = class_representative(x.base, c);
        out = out + OmegaElement::of(push_plus(f, rep).object) * n;
    }
    return out;
}

OmegaElement omega_bullet(const OneCell& f, const OmegaElement& x, int degree_cap) {
    if (!(x.base == f.source())) throw BaseMismatch("omega_bullet input over the wrong base");
    auto phi = [&](const OmegaElement& eff) {
        return OmegaElement::of(push_bullet(f, realize(eff)));
    };
    if (x.is_effective()) return phi(x);

    OmegaElement a = OmegaElement::zero(x.base);
    OmegaElement b = OmegaElement::zero(x.base);
    for (const auto& [c, n] : x.terms) {
        if (n > 0) a.terms[c] = n;
        else b.terms[c] = -n;
    }

    SimFactorization sf = sim_factorize(f);
    std::vector<int> fiber(f.target().size(), 0);
    for (int w = 0; w < sf.sim.size(); ++w) ++fiber[sf.alpha_tilde(w)];
    int d = 1;
    for (int s : fiber) d = std::max(d, s);

    // phi(a + j b) for j up to the confirmed degree plus one
    std::vector<OmegaElement> phis;
    auto ensure = [&](int upto) {
        while (static_cast<int>(phis.size()) <= upto) {
            int j = static_cast<int>(phis.size());
            OmegaElement arg = a;
            for (int i = 0; i < j; ++i) arg = arg + b;
            phis.push_back(phi(arg));
        }
    };
    auto delta = [&](int k) {  // Delta_b^k phi(a)
        ensure(k);
        auto binom = [](int n, int r) {
            long long v = 1;
            for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
            return v;
        };
        OmegaElement acc = OmegaElement::zero(f.target());
        for (int j = 0; j <= k; ++j) {
            OmegaElement term = phis[j] * binom(k, j);
            if ((k - j) % 2 != 0) term = -term;
            acc = acc + term;
        }
        return acc;
    };
    while (!delta(d + 1).is_zero()) {
        ++d;
        if (d > degree_cap)
            throw DegreeUnbounded("difference operators did not vanish up to order " +
                                  std::to_string(degree_cap));
    }
    OmegaElement out = OmegaElement::zero(f.target());
    for (int k = 0; k <= d; ++k) {
        OmegaElement term = delta(k);
        if (k % 2 != 0) term = -term;
        out = out + term;
    }
    return out;
}

}  // namespace biset

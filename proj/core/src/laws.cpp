#include "bisetcalc/laws.hpp"

#include <algorithm>
#include <set>

#include "bisetcalc/fixtures.hpp"

namespace biset {

namespace {

std::string cell_desc(const OneCell& f) {
    return "|X|=" + std::to_string(f.source().size()) + " G=" + f.source().group().name() +
           " -> |Y|=" + std::to_string(f.target().size()) + " H=" + f.target().group().name();
}

std::vector<SliceObject> objects_up_to(const ZeroCell& base, int n) {
    std::vector<SliceObject> out;
    for (const BurnsideClass& c : classes_up_to_size(base, n))
        out.push_back(class_representative(base, c));
    return out;
}

}  // namespace

LawReport check_der1(const ZeroCell& x, const ZeroCell& y, int n) {
    LawReport r{"der1", "G=" + x.group().name() + " |X|=" + std::to_string(x.size()) +
                            ", H=" + y.group().name() + " |Y|=" + std::to_string(y.size()),
                true, "", n};
    Bicoproduct bc = bicoproduct(x, y);

    // injective on isomorphism classes
    std::set<std::pair<BurnsideClass, BurnsideClass>> seen;
    for (const BurnsideClass& c : classes_up_to_size(bc.cell, n)) {
        SliceObject a = class_representative(bc.cell, c);
        auto pair = std::make_pair(classify(pullback_star(bc.inj_left, a).object),
                                   classify(pullback_star(bc.inj_right, a).object));
        if (!seen.insert(pair).second) {
            r.holds = false;
            r.witness = "two classes over the bicoproduct restrict to the same pair";
            return r;
        }
    }
    // essentially surjective
    for (const SliceObject& ax : objects_up_to(x, n))
        for (const SliceObject& ay : objects_up_to(y, n)) {
            SliceObject glued = slice_coproduct(push_plus(bc.inj_left, ax).object,
                                                push_plus(bc.inj_right, ay).object);
            if (classify(pullback_star(bc.inj_left, glued).object) != classify(ax) ||
                classify(pullback_star(bc.inj_right, glued).object) != classify(ay)) {
                r.holds = false;
                r.witness = "pair (|A|=" + std::to_string(ax.total.size()) +
                            ",|B|=" + std::to_string(ay.total.size()) + ") not hit";
                return r;
            }
        }
    // full and faithful on hom sets
    std::vector<SliceObject> objs = objects_up_to(bc.cell, n);
    for (const SliceObject& a : objs)
        for (const SliceObject& b : objs) {
            auto homs = enumerate_slice_homs(a, b);
            std::set<std::pair<std::vector<int>, std::vector<int>>> images;
            for (const SliceMorphism& h : homs)
                images.insert({pullback_star_map(bc.inj_left, h).map.image(),
                               pullback_star_map(bc.inj_right, h).map.image()});
            std::size_t expect =
                enumerate_slice_homs(pullback_star(bc.inj_left, a).object,
                                     pullback_star(bc.inj_left, b).object).size() *
                enumerate_slice_homs(pullback_star(bc.inj_right, a).object,
                                     pullback_star(bc.inj_right, b).object).size();
            if (images.size() != homs.size() || homs.size() != expect) {
                r.holds = false;
                r.witness = "hom-set comparison fails: " + std::to_string(homs.size()) + " vs " +
                            std::to_string(expect);
                return r;
            }
        }
    return r;
}

LawReport check_der2(const SliceMorphism& m) {
    LawReport r{"der2", "|A|=" + std::to_string(m.source.total.size()) +
                            " |A'|=" + std::to_string(m.target.total.size()) + " over G=" +
                            m.source.base.group().name(),
                true, "", 0};
    bool iso = m.map.is_bijective();

    bool fiberwise = true;
    for (int x = 0; x < m.source.base.size() && fiberwise; ++x) {
        std::vector<int> hit;
        for (int p = 0; p < m.source.total.size(); ++p)
            if (m.source.structure(p) == x) hit.push_back(m(p));
        std::sort(hit.begin(), hit.end());
        if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) fiberwise = false;
        int fiber_tgt = 0;
        for (int q = 0; q < m.target.total.size(); ++q)
            if (m.target.structure(q) == x) ++fiber_tgt;
        if (static_cast<int>(hit.size()) != fiber_tgt) fiberwise = false;
    }

    bool orbitwise = true;
    for (const Orbit& o : orbits(m.source.base.set)) {
        std::vector<int> hit;
        int fiber_tgt = 0;
        for (int p = 0; p < m.source.total.size(); ++p)
            if (std::binary_search(o.points.begin(), o.points.end(), m.source.structure(p)))
                hit.push_back(m(p));
        for (int q = 0; q < m.target.total.size(); ++q)
            if (std::binary_search(o.points.begin(), o.points.end(), m.target.structure(q)))
                ++fiber_tgt;
        std::sort(hit.begin(), hit.end());
        if (std::adjacent_find(hit.begin(), hit.end()) != hit.end() ||
            static_cast<int>(hit.size()) != fiber_tgt)
            orbitwise = false;
    }

    r.holds = (iso == fiberwise) && (fiberwise == orbitwise);
    r.witness = std::string("iso=") + (iso ? "1" : "0") + " fiberwise=" + (fiberwise ? "1" : "0") +
                " orbitwise=" + (orbitwise ? "1" : "0");
    return r;
}

LawReport check_der3(const OneCell& f, int n) {
    LawReport r{"der3", cell_desc(f), true, "", n};
    std::vector<SliceObject> as = objects_up_to(f.source(), n);
    std::vector<SliceObject> bs = objects_up_to(f.target(), n);

    for (const SliceObject& a : as) {
        Pushed pa = push_plus(f, a);
        ExponentialDiagram ed = exponential_diagram(f, a);

        // triangle 1: counit o f_+(unit) = id on f_+ A
        SliceMorphism unit_a = adjoint_phi(f, a, pa.object, SliceMorphism::identity(pa.object));
        SliceMorphism tri1 = compose(push_plus_map(f, unit_a), counit_lambda(f, pa.object));
        if (!(tri1.map == GMap::identity(pa.object.total))) {
            r.holds = false;
            r.witness = "triangle identity (counit) fails, |A|=" + std::to_string(a.total.size());
            return r;
        }

        for (const SliceObject& b : bs) {
            PulledBack pb = pullback_star(f, b);
            // left adjunction: transposes are mutually inverse bijections
            auto down = enumerate_slice_homs(pa.object, b);
            auto up = enumerate_slice_homs(a, pb.object);
            if (down.size() != up.size()) {
                r.holds = false;
                r.witness = "left adjunction hom counts differ: " + std::to_string(down.size()) +
                            " vs " + std::to_string(up.size());
                return r;
            }
            for (const SliceMorphism& psi : down) {
                SliceMorphism phi = adjoint_phi(f, a, b, psi);
                if (!(adjoint_psi(f, a, b, phi).map == psi.map)) {
                    r.holds = false;
                    r.witness = "Psi(Phi(psi)) != psi";
                    return r;
                }
            }
            for (const SliceMorphism& phi : up) {
                SliceMorphism psi = adjoint_psi(f, a, b, phi);
                if (!(adjoint_phi(f, a, b, psi).map == phi.map)) {
                    r.holds = false;
                    r.witness = "Phi(Psi(phi)) != phi";
                    return r;
                }
            }
            // right adjunction: g -> zeta o f*(g) is a bijection
            auto upper = enumerate_slice_homs(b, ed.bullet);
            auto lower = enumerate_slice_homs(pb.object, a);
            std::set<std::vector<int>> images;
            for (const SliceMorphism& g : upper)
                images.insert(compose(pullback_star_map(f, g), ed.zeta).map.image());
            if (images.size() != upper.size() || upper.size() != lower.size()) {
                r.holds = false;
                r.witness = "right adjunction hom comparison fails: " +
                            std::to_string(upper.size()) + " vs " + std::to_string(lower.size());
                return r;
            }
        }
    }
    // triangle 2: f*(counit) o unit = id on f* B
    for (const SliceObject& b : bs) {
        PulledBack pb = pullback_star(f, b);
        Pushed pfb = push_plus(f, pb.object);
        SliceMorphism unit_b = adjoint_phi(f, pb.object, pfb.object,
                                           SliceMorphism::identity(pfb.object));
        SliceMorphism tri2 = compose(unit_b, pullback_star_map(f, counit_lambda(f, b)));
        if (!(tri2.map == GMap::identity(pb.object.total))) {
            r.holds = false;
            r.witness = "triangle identity (unit) fails, |B|=" + std::to_string(b.total.size());
            return r;
        }
    }
    return r;
}

LawReport check_der4(const OneCell& f, const OneCell& g, int n) {
    LawReport r{"der4", cell_desc(f) + " pulled against " + cell_desc(g), true, "", n};
    Bipullback pb = bipullback(f, g);

    for (const SliceObject& a : objects_up_to(f.source(), n)) {
        Pushed pushed = push_plus(f, a);
        SliceObject lhs = pullback_star(g, pushed.object).object;
        PulledBack pulled = pullback_star(pb.proj_left, a);
        Pushed rhs = push_plus(pb.proj_right, pulled.object);
        // (i) explicit comparison map (y,[k,a]) -> [e,(a(a),y,k,a)]
        PulledBack lhspts = pullback_star(g, pushed.object);
        std::vector<int> im(lhspts.points.size());
        bool ok = true;
        try {
            for (std::size_t i = 0; i < lhspts.points.size(); ++i) {
                auto [y, c] = lhspts.points[i];
                auto [k, ap] = pushed.reps[c];
                int w = pb.point_index(a.structure(ap), y, k);
                im[i] = rhs.cls(FiniteGroup::identity, pulled.point_index(w, ap));
            }
            SliceMorphism cmp(lhs, rhs.object, std::move(im));
            ok = cmp.map.is_bijective();
        } catch (const Error&) {
            ok = false;
        }
        if (!ok) {
            r.holds = false;
            r.witness = "(i) explicit comparison map fails, |A|=" + std::to_string(a.total.size());
            return r;
        }
        // (ii) multiplicative direction up to isomorphism
        if (!slice_isomorphic(pullback_star(g, push_bullet(f, a)).object,
                              push_bullet(pb.proj_right, pulled.object))) {
            r.holds = false;
            r.witness = "(ii) fails, |A|=" + std::to_string(a.total.size());
            return r;
        }
    }
    // primed variants, checked directly on the same square
    for (const SliceObject& b : objects_up_to(g.source(), n)) {
        PulledBack pulled = pullback_star(pb.proj_right, b);
        if (!slice_isomorphic(pullback_star(f, push_plus(g, b).object).object,
                              push_plus(pb.proj_left, pulled.object).object)) {
            r.holds = false;
            r.witness = "(i') fails, |B|=" + std::to_string(b.total.size());
            return r;
        }
        if (!slice_isomorphic(pullback_star(f, push_bullet(g, b)).object,
                              push_bullet(pb.proj_left, pulled.object))) {
            r.holds = false;
            r.witness = "(ii') fails, |B|=" + std::to_string(b.total.size());
            return r;
        }
    }
    return r;
}

LawReport check_mackey(const OneCell& f, const OneCell& g, int n) {
    LawReport r{"mackey", cell_desc(f) + " against " + cell_desc(g), true, "", n};
    Bipullback pb = bipullback(f, g);
    for (const BurnsideClass& c : classes_up_to_size(g.source(), n)) {
        OmegaElement elt = OmegaElement::of_class(g.source(), c);
        if (!(omega_plus(pb.proj_left, omega_star(pb.proj_right, elt)) ==
              omega_star(f, omega_plus(g, elt)))) {
            r.holds = false;
            r.witness = "additive square fails on a class of size " +
                        std::to_string(class_representative(g.source(), c).total.size());
            return r;
        }
        if (!(omega_bullet(pb.proj_left, omega_star(pb.proj_right, elt)) ==
              omega_star(f, omega_bullet(g, elt)))) {
            r.holds = false;
            r.witness = "multiplicative square fails on a class of size " +
                        std::to_string(class_representative(g.source(), c).total.size());
            return r;
        }
    }
    return r;
}

LawReport check_tambara(const OneCell& f, const SliceObject& a, int n) {
    LawReport r{"tambara", cell_desc(f) + ", |A|=" + std::to_string(a.total.size()), true, "", n};
    ExponentialDiagram ed = exponential_diagram(f, a);
    OneCell a_cell = OneCell::equivariant(a.structure);
    OneCell zeta_cell = OneCell::equivariant(ed.zeta.map);
    OneCell pi_cell = OneCell::equivariant(ed.bullet.structure);
    ZeroCell corner{a.total};

    for (const BurnsideClass& c : classes_up_to_size(corner, n)) {
        OmegaElement elt = OmegaElement::of_class(corner, c);
        OmegaElement lhs = omega_bullet(f, omega_plus(a_cell, elt));
        OmegaElement rhs =
            omega_plus(pi_cell, omega_bullet(ed.f_dagger, omega_star(zeta_cell, elt)));
        if (!(lhs == rhs)) {
            r.holds = false;
            r.witness = "Tambara square fails on a class of size " +
                        std::to_string(class_representative(corner, c).total.size());
            return r;
        }
    }
    return r;
}

LawReport check_semi_mackey_pair(int n) {
    LawReport r{"semi-mackey", "standard corpus", true, "", n};
    if (n <= 0) {
        r.witness = "vacuous at bound 0";
        return r;
    }
    auto zs = fixtures::corpus_zero_cells();
    for (std::size_t i = 0; i < zs.size() && i < 3; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            LawReport sub = check_der1(zs[i], zs[j], std::min(n, 3));
            if (!sub.holds) {
                r.holds = false;
                r.witness = "der1: " + sub.fixture + ": " + sub.witness;
                return r;
            }
        }
    auto cells = fixtures::corpus_cells();
    int squares = 0;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (!(cells[i].cell.target() == cells[j].cell.target())) continue;
            if (cells[i].cell.source().size() * cells[j].cell.source().size() > 4) continue;
            if (++squares > 12) return r;
            LawReport sub = check_mackey(cells[i].cell, cells[j].cell, std::min(n, 3));
            if (!sub.holds) {
                r.holds = false;
                r.witness = "mackey: " + sub.fixture + ": " + sub.witness;
                return r;
            }
        }
    return r;
}

std::vector<LawReport> run_suite(const std::string& law, int bound) {
    std::vector<LawReport> out;
    bool all = (law == "all");
    auto cells = fixtures::corpus_cells();
    auto zs = fixtures::corpus_zero_cells();

    if (all || law == "der1") {
        out.push_back(check_der1(zs[0], zs[0], bound));
        out.push_back(check_der1(zs[1], zs[0], bound));
        out.push_back(check_der1(zs[1], zs[1], bound));
        out.push_back(check_der1(zs[6], zs[0], bound));
    }
    if (all || law == "der2") {
        // identity, a fiber-collapsing map, and a relabeling
        ZeroCell pt2 = ZeroCell::point(fixtures::group_c2());
        SliceObject two(pt2, GSet::trivial(fixtures::group_c2(), 2),
                        GMap(GSet::trivial(fixtures::group_c2(), 2), pt2.set, {0, 0}));
        SliceObject one = SliceObject::identity_on(pt2);
        out.push_back(check_der2(SliceMorphism::identity(two)));
        out.push_back(check_der2(SliceMorphism(two, one, {0, 0})));
        SliceObject swapped(pt2, GSet::trivial(fixtures::group_c2(), 2),
                            GMap(GSet::trivial(fixtures::group_c2(), 2), pt2.set, {0, 0}));
        out.push_back(check_der2(SliceMorphism(two, swapped, {1, 0})));
    }
    if (all || law == "der3")
        for (const auto& nc : cells) {
            LawReport r = check_der3(nc.cell, bound);
            r.fixture = nc.name;
            out.push_back(std::move(r));
        }
    if (all || law == "der4") {
        for (const auto& a : cells)
            for (const auto& b : cells) {
                if (!(a.cell.target() == b.cell.target())) continue;
                if (a.cell.source().size() * b.cell.source().size() > 9) continue;
                LawReport r = check_der4(a.cell, b.cell, bound);
                r.fixture = a.name + " / " + b.name;
                out.push_back(std::move(r));
            }
    }
    if (all || law == "mackey") {
        for (const auto& a : cells)
            for (const auto& b : cells) {
                if (!(a.cell.target() == b.cell.target())) continue;
                if (a.cell.source().size() * b.cell.source().size() > 9) continue;
                LawReport r = check_mackey(a.cell, b.cell, bound);
                r.fixture = a.name + " / " + b.name;
                out.push_back(std::move(r));
            }
    }
    if (all || law == "tambara")
        for (const auto& nc : cells) {
            LawReport r = check_tambara(nc.cell, SliceObject::identity_on(nc.cell.source()), bound);
            r.fixture = nc.name;
            out.push_back(std::move(r));
        }
    if (all || law == "semi-mackey") out.push_back(check_semi_mackey_pair(bound));
    if (out.empty()) throw Error("unknown law id: " + law);
    return out;
}

}  // namespace biset

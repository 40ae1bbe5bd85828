#include "bisetcalc/fixtures.hpp"

#include <algorithm>
#include <array>

namespace biset::fixtures {

namespace {

FiniteGroup cyclic(const std::string& name, int n) {
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return FiniteGroup::from_table(name, std::move(mul));
}

FiniteGroup klein() {
    std::vector<std::vector<int>> mul(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) mul[a][b] = a ^ b;
    return FiniteGroup::from_table("C2xC2", std::move(mul));
}

FiniteGroup sym3() {
    // permutations of {0,1,2} in lexicographic one-line order; 0 is the identity
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                                   {0, 2, 1},
                                                   {1, 0, 2},
                                                   {1, 2, 0},
                                                   {2, 0, 1},
                                                   {2, 1, 0}}};
    auto index_of = [&](const std::array<int, 3>& p) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    };
    std::vector<std::vector<int>> mul(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            mul[a][b] = index_of(c);
        }
    return FiniteGroup::from_table("S3", std::move(mul));
}

}  // namespace

const FiniteGroup& group_e() {
    static const FiniteGroup g = cyclic("e", 1);
    return g;
}
const FiniteGroup& group_c2() {
    static const FiniteGroup g = cyclic("C2", 2);
    return g;
}
const FiniteGroup& group_c3() {
    static const FiniteGroup g = cyclic("C3", 3);
    return g;
}
const FiniteGroup& group_c4() {
    static const FiniteGroup g = cyclic("C4", 4);
    return g;
}
const FiniteGroup& group_v4() {
    static const FiniteGroup g = klein();
    return g;
}
const FiniteGroup& group_s3() {
    static const FiniteGroup g = sym3();
    return g;
}

std::vector<const FiniteGroup*> builtin_groups() {
    return {&group_e(), &group_c2(), &group_c3(), &group_c4(), &group_v4(), &group_s3()};
}

std::optional<FiniteGroup> group_by_name(const std::string& name) {
    for (const FiniteGroup* g : builtin_groups())
        if (g->name() == name) return *g;
    return std::nullopt;
}

OneCell type1_cell(const GroupHom& iota) {
    if (!iota.is_injective()) throw NotInjective("type [I] cell needs a monomorphism");
    return OneCell::constant_acting(ZeroCell::point(iota.source()), ZeroCell::point(iota.target()),
                                    {0}, iota);
}

OneCell type2_cell(const FiniteGroup& g, const Subgroup& n) {
    GroupHom q = quotient_hom(g, n);
    // keep the serialized group reference resolvable: a quotient whose table
    // matches a built-in group is renamed to it
    for (const FiniteGroup* b : builtin_groups())
        if (q.target().table() == b->table()) {
            q = GroupHom(g, *b, q.image());
            break;
        }
    return OneCell::constant_acting(ZeroCell::point(g), ZeroCell::point(q.target()), {0}, q);
}

GroupHom incl_e_c2() { return GroupHom(group_e(), group_c2(), {0}); }
GroupHom incl_c2_c4() { return GroupHom(group_c2(), group_c4(), {0, 2}); }
GroupHom incl_c2_s3() { return GroupHom(group_c2(), group_s3(), {0, 2}); }
GroupHom incl_c3_s3() { return GroupHom(group_c3(), group_s3(), {0, 3, 4}); }

namespace {

ZeroCell regular_cell(const FiniteGroup& g) { return ZeroCell{GSet::regular(g)}; }

/// First enumerated cell between the two 0-cells whose acting part really
/// depends on the point.
OneCell first_nonconstant_cell(const ZeroCell& from, const ZeroCell& to) {
    for (const OneCell& c : enumerate_one_cells(from, to))
        if (!c.has_constant_theta()) return c;
    throw Error("no point-dependent cell between the requested 0-cells");
}

}  // namespace

std::vector<NamedCell> corpus_cells() {
    std::vector<NamedCell> out;
    out.push_back({"id(pt/e)", OneCell::identity(ZeroCell::point(group_e()))});
    out.push_back({"id(pt/C2)", OneCell::identity(ZeroCell::point(group_c2()))});

    out.push_back({"incl e<C2", type1_cell(incl_e_c2())});
    out.push_back({"incl C2<C4", type1_cell(incl_c2_c4())});
    out.push_back({"incl C2<S3", type1_cell(incl_c2_s3())});
    out.push_back({"incl C3<S3", type1_cell(incl_c3_s3())});

    out.push_back({"quot C2->e", type2_cell(group_c2(), full_subgroup(group_c2()))});
    out.push_back({"quot C4->C2", type2_cell(group_c4(), Subgroup(group_c4(), {0, 2}))});
    out.push_back({"quot S3->C2", type2_cell(group_s3(), Subgroup(group_s3(), {0, 3, 4}))});
    out.push_back({"quot C2xC2->C2", type2_cell(group_v4(), Subgroup(group_v4(), {0, 1}))});

    out.push_back({"twisted C2reg->pt/C4",
                   first_nonconstant_cell(regular_cell(group_c2()), ZeroCell::point(group_c4()))});
    out.push_back({"twisted C3reg->pt/C3",
                   first_nonconstant_cell(regular_cell(group_c3()), ZeroCell::point(group_c3()))});
    out.push_back({"twisted C2reg->pt/S3",
                   first_nonconstant_cell(regular_cell(group_c2()), ZeroCell::point(group_s3()))});
    return out;
}

std::vector<ZeroCell> corpus_zero_cells() {
    return {ZeroCell::point(group_e()),  ZeroCell::point(group_c2()), ZeroCell::point(group_c3()),
            ZeroCell::point(group_c4()), ZeroCell::point(group_v4()), ZeroCell::point(group_s3()),
            regular_cell(group_c2()),    regular_cell(group_c3())};
}

}  // namespace biset::fixtures

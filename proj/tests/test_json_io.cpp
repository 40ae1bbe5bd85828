#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "bisetcalc/fixtures.hpp"
#include "bisetcalc/json_io.hpp"

using namespace biset;

namespace {

const std::filesystem::path kRepo = BISETCALC_REPO_DIR;
const io::GroupResolver kResolver;

}  // namespace

TEST_CASE("group round trip") {
    for (const FiniteGroup* g : fixtures::builtin_groups()) {
        FiniteGroup back = io::group_from_json(io::group_to_json(*g));
        CHECK(back == *g);
        CHECK(back.name() == g->name());
    }
}

TEST_CASE("group files in the fixtures directory parse and resolve") {
    io::GroupResolver r(kRepo / "fixtures");
    for (const char* name : {"e", "C2", "C3", "C4", "C2xC2", "S3"}) {
        FiniteGroup from_file = io::group_from_json(io::load_json(kRepo / "fixtures" / (std::string(name) + ".json")));
        CHECK(from_file == r.group(name));
    }
    CHECK_THROWS_AS(r.group("Q8"), UnknownGroup);
}

TEST_CASE("gset and gmap round trips") {
    GSet reg = GSet::regular(fixtures::group_s3());
    CHECK(io::gset_from_json(io::gset_to_json(reg), kResolver) == reg);
    GMap m(reg, GSet::point(fixtures::group_s3()), std::vector<int>(6, 0));
    CHECK(io::gmap_from_json(io::gmap_to_json(m), kResolver) == m);
}

TEST_CASE("cell round trips over the whole corpus") {
    for (const auto& nc : fixtures::corpus_cells())
        CHECK(io::one_cell_from_json(io::one_cell_to_json(nc.cell), kResolver) == nc.cell);
    for (const ZeroCell& z : fixtures::corpus_zero_cells())
        CHECK(io::zero_cell_from_json(io::zero_cell_to_json(z), kResolver) == z);
}

TEST_CASE("two-cell round trip") {
    OneCell f = fixtures::corpus_cells()[10].cell;
    for (const OneCell& g : enumerate_one_cells(f.source(), f.target()))
        for (const TwoCell& eps : enumerate_two_cells(f, g))
            CHECK(io::two_cell_from_json(io::two_cell_to_json(eps), kResolver) == eps);
}

TEST_CASE("slice object and omega element round trips") {
    ZeroCell b = ZeroCell::point(fixtures::group_s3());
    for (const BurnsideClass& c : classes_up_to_size(b, 4)) {
        SliceObject rep = class_representative(b, c);
        SliceObject back = io::slice_object_from_json(io::slice_object_to_json(rep), kResolver);
        CHECK(back == rep);
        CHECK(io::burnside_class_from_json(io::burnside_class_to_json(c)) == c);
    }
    OmegaElement x = OmegaElement::one(b) - OmegaElement::of_class(b, transitive_classes(b)[0], 3);
    CHECK(io::omega_element_from_json(io::omega_element_to_json(x), kResolver) == x);
}

TEST_CASE("shipped cell files load as valid cells") {
    io::GroupResolver r(kRepo / "fixtures");
    int loaded = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kRepo / "fixtures" / "cells")) {
        auto name = entry.path().filename().string();
        if (name.rfind("incl", 0) == 0 || name.rfind("quot", 0) == 0 ||
            name.rfind("twisted", 0) == 0 || name.rfind("id_", 0) == 0) {
            CHECK_NOTHROW(io::one_cell_from_json(io::load_json(entry.path()), r));
            ++loaded;
        }
    }
    CHECK(loaded == 13);
}

TEST_CASE("parse failures carry ParseError") {
    CHECK_THROWS_AS(io::load_json(kRepo / "no-such-file.json"), ParseError);
    CHECK_THROWS_AS(io::group_from_json(io::json{{"name", "x"}}), ParseError);
    CHECK_THROWS_AS(io::group_from_json(io::json{
                        {"name", "x"}, {"order", 2}, {"mul", {{0, 1}, {1, 1}}}}),
                    ParseError);
    CHECK_THROWS_AS(io::gset_from_json(io::json{{"group", "Q8"}, {"size", 1}, {"act", {{0}}}},
                                       kResolver),
                    UnknownGroup);
}

TEST_CASE("golden Burnside tables match recomputation") {
    for (const char* name : {"e", "C2", "C3", "C2xC2", "S3"}) {
        io::json g = io::load_json(kRepo / "tests" / "golden" /
                                   ("omega_pt_" + std::string(name) + ".json"));
        FiniteGroup grp = kResolver.group(name);
        ZeroCell b = ZeroCell::point(grp);
        auto basis = transitive_classes(b);
        REQUIRE(g.at("basis").size() == basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
            CHECK(io::burnside_class_from_json(g.at("basis")[i]) == basis[i]);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                OmegaElement prod =
                    OmegaElement::of_class(b, basis[i]) * OmegaElement::of_class(b, basis[j]);
                const io::json& row = g.at("products")[i][j];
                REQUIRE(row.size() == basis.size());
                for (std::size_t k = 0; k < basis.size(); ++k)
                    CHECK(prod.coeff(basis[k]) == row[k].get<long long>());
            }
    }
}

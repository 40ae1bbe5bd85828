#include "bisetcalc/json_io.hpp"

#include <fstream>

#include "bisetcalc/fixtures.hpp"

namespace biset::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<int> int_vector(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
    std::vector<int> out;
    for (const json& e : v) {
        if (!e.is_number_integer()) throw ParseError(std::string("non-integer in \"") + key + "\"");
        out.push_back(e.get<int>());
    }
    return out;
}

std::vector<std::vector<int>> int_table(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
    std::vector<std::vector<int>> out;
    for (const json& row : v) {
        if (!row.is_array()) throw ParseError(std::string("ragged table in \"") + key + "\"");
        std::vector<int> r;
        for (const json& e : row) {
            if (!e.is_number_integer())
                throw ParseError(std::string("non-integer in \"") + key + "\"");
            r.push_back(e.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

FiniteGroup GroupResolver::group(const std::string& name) const {
    if (auto g = fixtures::group_by_name(name)) return *g;
    if (fixtures_dir_) {
        std::filesystem::path p = *fixtures_dir_ / (name + ".json");
        if (std::filesystem::exists(p)) {
            FiniteGroup g = group_from_json(load_json(p));
            if (g.name() != name)
                throw ParseError("group file " + p.string() + " declares name " + g.name());
            return g;
        }
    }
    throw UnknownGroup("no group named " + name);
}

json load_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw ParseError("cannot open " + p.string());
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + p.string());
    return j;
}

json group_to_json(const FiniteGroup& g) {
    return json{{"name", g.name()}, {"order", g.order()}, {"mul", g.table()}};
}

FiniteGroup group_from_json(const json& j) {
    const json& name = field(j, "name");
    const json& order = field(j, "order");
    if (!name.is_string() || !order.is_number_integer())
        throw ParseError("group needs a string name and an integer order");
    auto mul = int_table(j, "mul");
    if (static_cast<int>(mul.size()) != order.get<int>())
        throw ParseError("group order does not match the table size");
    try {
        return FiniteGroup::from_table(name.get<std::string>(), std::move(mul));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid group table: ") + e.what());
    }
}

json gset_to_json(const GSet& a) {
    return json{{"group", a.group().name()}, {"size", a.size()}, {"act", a.act()}};
}

GSet gset_from_json(const json& j, const GroupResolver& r) {
    const json& name = field(j, "group");
    const json& size = field(j, "size");
    if (!name.is_string() || !size.is_number_integer())
        throw ParseError("G-set needs a group name and an integer size");
    FiniteGroup g = r.group(name.get<std::string>());
    try {
        return GSet(g, size.get<int>(), int_table(j, "act"));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid G-set: ") + e.what());
    }
}

json gmap_to_json(const GMap& m) {
    return json{{"source", gset_to_json(m.source())},
                {"target", gset_to_json(m.target())},
                {"image", m.image()}};
}

GMap gmap_from_json(const json& j, const GroupResolver& r) {
    GSet s = gset_from_json(field(j, "source"), r);
    GSet t = gset_from_json(field(j, "target"), r);
    try {
        return GMap(std::move(s), std::move(t), int_vector(j, "image"));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid G-map: ") + e.what());
    }
}

json zero_cell_to_json(const ZeroCell& x) { return gset_to_json(x.set); }

ZeroCell zero_cell_from_json(const json& j, const GroupResolver& r) {
    return ZeroCell{gset_from_json(j, r)};
}

json one_cell_to_json(const OneCell& f) {
    return json{{"source", zero_cell_to_json(f.source())},
                {"target", zero_cell_to_json(f.target())},
                {"base", f.base()},
                {"theta", f.theta()}};
}

OneCell one_cell_from_json(const json& j, const GroupResolver& r) {
    ZeroCell s = zero_cell_from_json(field(j, "source"), r);
    ZeroCell t = zero_cell_from_json(field(j, "target"), r);
    try {
        return OneCell(std::move(s), std::move(t), int_vector(j, "base"), int_table(j, "theta"));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid 1-cell: ") + e.what());
    }
}

json two_cell_to_json(const TwoCell& e) {
    return json{{"from", one_cell_to_json(e.from())},
                {"to", one_cell_to_json(e.to())},
                {"eps", e.eps()}};
}

TwoCell two_cell_from_json(const json& j, const GroupResolver& r) {
    OneCell from = one_cell_from_json(field(j, "from"), r);
    OneCell to = one_cell_from_json(field(j, "to"), r);
    try {
        return TwoCell(std::move(from), std::move(to), int_vector(j, "eps"));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid 2-cell: ") + e.what());
    }
}

json slice_object_to_json(const SliceObject& a) {
    return json{{"base", zero_cell_to_json(a.base)},
                {"total", gset_to_json(a.total)},
                {"structure", a.structure.image()}};
}

SliceObject slice_object_from_json(const json& j, const GroupResolver& r) {
    ZeroCell base = zero_cell_from_json(field(j, "base"), r);
    GSet total = gset_from_json(field(j, "total"), r);
    try {
        GMap structure(total, base.set, int_vector(j, "structure"));
        return SliceObject(std::move(base), std::move(total), std::move(structure));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid slice object: ") + e.what());
    }
}

json burnside_class_to_json(const BurnsideClass& c) {
    json orbits = json::array();
    for (const OrbitDescriptor& d : c.orbits)
        orbits.push_back(json{{"base_point", d.base_point}, {"stabilizer", d.stabilizer}});
    return orbits;
}

BurnsideClass burnside_class_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("a class is an array of orbit descriptors");
    BurnsideClass out;
    for (const json& d : j) {
        const json& bp = field(d, "base_point");
        if (!bp.is_number_integer()) throw ParseError("base_point must be an integer");
        out.orbits.push_back(OrbitDescriptor{bp.get<int>(), int_vector(d, "stabilizer")});
    }
    return out;
}

json omega_element_to_json(const OmegaElement& x) {
    json terms = json::array();
    for (const auto& [c, n] : x.terms)
        terms.push_back(json{{"class", burnside_class_to_json(c)}, {"coeff", n}});
    return json{{"base", zero_cell_to_json(x.base)}, {"terms", terms}};
}

OmegaElement omega_element_from_json(const json& j, const GroupResolver& r) {
    ZeroCell base = zero_cell_from_json(field(j, "base"), r);
    OmegaElement out = OmegaElement::zero(base);
    const json& terms = field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const json& t : terms) {
        const json& coeff = field(t, "coeff");
        if (!coeff.is_number_integer()) throw ParseError("coeff must be an integer");
        out = out + OmegaElement::of_class(base, burnside_class_from_json(field(t, "class")),
                                           coeff.get<long long>());
    }
    return out;
}

json law_report_to_json(const LawReport& r) {
    return json{{"law", r.law},
                {"fixture", r.fixture},
                {"holds", r.holds},
                {"witness", r.witness},
                {"bound", r.bound}};
}

}  // namespace biset::io

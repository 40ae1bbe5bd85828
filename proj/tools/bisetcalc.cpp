#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bisetcalc/fixtures.hpp"
#include "bisetcalc/json_io.hpp"

namespace {

using namespace biset;

// Exit codes: 0 success, 1 failing law, 2 parse error, 3 mismatched cells
// or bases, 4 unknown group, 5 anything else.
enum ExitCode { kOk = 0, kLawFailed = 1, kParse = 2, kMismatch = 3, kUnknownGroup = 4, kOther = 5 };

struct Options {
    std::string format = "text";
    std::string fixtures_dir;
    unsigned seed = 0;
    int bound = 4;
};

io::GroupResolver make_resolver(const Options& o) {
    if (!o.fixtures_dir.empty()) return io::GroupResolver(std::filesystem::path(o.fixtures_dir));
    if (const char* env = std::getenv("BISETCALC_FIXTURES"))
        return io::GroupResolver(std::filesystem::path(env));
    return io::GroupResolver();
}

std::string class_to_string(const BurnsideClass& c) {
    if (c.orbits.empty()) return "0";
    std::string s;
    for (const OrbitDescriptor& d : c.orbits) {
        if (!s.empty()) s += " + ";
        s += "[base " + std::to_string(d.base_point) + ", stab {";
        for (std::size_t i = 0; i < d.stabilizer.size(); ++i)
            s += (i ? "," : "") + std::to_string(d.stabilizer[i]);
        s += "}]";
    }
    return s;
}

std::string omega_to_string(const OmegaElement& x) {
    if (x.terms.empty()) return "0";
    std::string s;
    for (const auto& [c, n] : x.terms) {
        if (!s.empty()) s += " + ";
        s += std::to_string(n) + "*" + class_to_string(c);
    }
    return s;
}

void print_object(const Options& o, const SliceObject& a) {
    if (o.format == "json") {
        io::json out = io::slice_object_to_json(a);
        out["class"] = io::burnside_class_to_json(classify(a));
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "object over " << a.base.group().name() << ": " << a.total.size()
              << " points, class " << class_to_string(classify(a)) << "\n";
}

int cmd_apply(const Options& o, const std::string& functor, const std::string& cell_path,
              const std::string& object_path) {
    io::GroupResolver r = make_resolver(o);
    OneCell f = io::one_cell_from_json(io::load_json(cell_path), r);
    SliceObject a = io::slice_object_from_json(io::load_json(object_path), r);
    if (functor == "star") {
        print_object(o, pullback_star(f, a).object);
    } else if (functor == "plus") {
        print_object(o, push_plus(f, a).object);
    } else {
        print_object(o, push_bullet(f, a));
    }
    return kOk;
}

int cmd_burnside_table(const Options& o, const std::string& group_name) {
    io::GroupResolver r = make_resolver(o);
    FiniteGroup g = r.group(group_name);
    ZeroCell pt = ZeroCell::point(g);
    std::vector<BurnsideClass> basis = transitive_classes(pt);

    auto coeffs = [&](const OmegaElement& x) {
        std::vector<long long> v;
        for (const BurnsideClass& b : basis) v.push_back(x.coeff(b));
        return v;
    };
    if (o.format == "json") {
        io::json out;
        out["group"] = g.name();
        out["basis"] = io::json::array();
        for (const BurnsideClass& b : basis) out["basis"].push_back(io::burnside_class_to_json(b));
        out["products"] = io::json::array();
        for (const BurnsideClass& b1 : basis) {
            io::json row = io::json::array();
            for (const BurnsideClass& b2 : basis)
                row.push_back(coeffs(OmegaElement::of_class(pt, b1) * OmegaElement::of_class(pt, b2)));
            out["products"].push_back(row);
        }
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "Burnside ring of " << g.name() << ", " << basis.size() << " basis classes\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
        std::cout << "  b" << i << " = " << class_to_string(basis[i]) << " (size "
                  << g.order() / basis[i].orbits[0].stabilizer.size() << ")\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            auto v = coeffs(OmegaElement::of_class(pt, basis[i]) * OmegaElement::of_class(pt, basis[j]));
            std::cout << "  b" << i << "*b" << j << " =";
            for (long long c : v) std::cout << " " << c;
            std::cout << "\n";
        }
    return kOk;
}

int cmd_sim(const Options& o, const std::string& cell_path) {
    io::GroupResolver r = make_resolver(o);
    OneCell f = io::one_cell_from_json(io::load_json(cell_path), r);
    SimFactorization sf = sim_factorize(f);
    if (o.format == "json") {
        io::json out;
        out["sim"] = io::zero_cell_to_json(sf.sim);
        out["through"] = io::one_cell_to_json(sf.through);
        out["alpha_tilde"] = sf.alpha_tilde.image();
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "SIm has " << sf.sim.size() << " points over " << sf.sim.group().name() << "\n";
    std::cout << "through: x -> [e,x] =";
    for (int x = 0; x < f.source().size(); ++x) std::cout << " " << sf.through.base(x);
    std::cout << "\nalpha_tilde:";
    for (int w = 0; w < sf.sim.size(); ++w) std::cout << " " << sf.alpha_tilde(w);
    std::cout << "\n";
    return kOk;
}

int cmd_bipullback(const Options& o, const std::string& f_path, const std::string& g_path) {
    io::GroupResolver r = make_resolver(o);
    OneCell f = io::one_cell_from_json(io::load_json(f_path), r);
    OneCell g = io::one_cell_from_json(io::load_json(g_path), r);
    Bipullback pb = bipullback(f, g);
    if (o.format == "json") {
        io::json out;
        out["apex"] = io::zero_cell_to_json(pb.apex);
        out["proj_left"] = io::one_cell_to_json(pb.proj_left);
        out["proj_right"] = io::one_cell_to_json(pb.proj_right);
        out["kappa"] = io::two_cell_to_json(pb.kappa);
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "bipullback apex: " << pb.apex.size() << " points over "
              << pb.apex.group().name() << "\n";
    return kOk;
}

int cmd_bicoproduct(const Options& o, const std::string& x_path, const std::string& y_path) {
    io::GroupResolver r = make_resolver(o);
    ZeroCell x = io::zero_cell_from_json(io::load_json(x_path), r);
    ZeroCell y = io::zero_cell_from_json(io::load_json(y_path), r);
    Bicoproduct bc = bicoproduct(x, y);
    if (o.format == "json") {
        io::json out;
        out["cell"] = io::zero_cell_to_json(bc.cell);
        out["inj_left"] = io::one_cell_to_json(bc.inj_left);
        out["inj_right"] = io::one_cell_to_json(bc.inj_right);
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "bicoproduct: " << bc.cell.size() << " points over " << bc.cell.group().name()
              << "\n";
    return kOk;
}

int cmd_verify(const Options& o, const std::string& law) {
    if (o.bound == 0 && o.format != "json")
        std::cout << "warning: bound 0, all checks are vacuous\n";
    std::vector<LawReport> reports = run_suite(law, o.bound);
    bool all = true;
    if (o.format == "json") {
        io::json out = io::json::array();
        for (const LawReport& r : reports) {
            out.push_back(io::law_report_to_json(r));
            all = all && r.holds;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const LawReport& r : reports) {
            std::cout << (r.holds ? "PASS" : "FAIL") << "  " << r.law << "  [" << r.fixture << "]";
            if (!r.witness.empty()) std::cout << "  " << r.witness;
            std::cout << "\n";
            all = all && r.holds;
        }
        std::cout << (all ? "all laws hold" : "law failures found") << " (bound " << o.bound
                  << ")\n";
    }
    return all ? kOk : kLawFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculator for finite group actions, slice functors and Burnside rings"};
    app.require_subcommand(1);

    Options o;
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--fixtures", o.fixtures_dir,
                   "directory with <name>.json group files (default: $BISETCALC_FIXTURES)");
    app.add_option("--seed", o.seed, "seed for sampled checks");
    app.add_option("--bound", o.bound, "carrier size bound for law suites")
        ->check(CLI::NonNegativeNumber);

    std::string functor, path1, path2, group_name, law = "all";

    CLI::App* apply = app.add_subcommand("apply", "apply star, plus or bullet to a slice object");
    apply->add_option("functor", functor, "star | plus | bullet")
        ->required()
        ->check(CLI::IsMember({"star", "plus", "bullet"}));
    apply->add_option("cell", path1, "1-cell JSON file")->required();
    apply->add_option("object", path2, "slice object JSON file")->required();

    CLI::App* table = app.add_subcommand("burnside-table", "basis and products of Omega(pt/G)");
    table->add_option("group", group_name, "group name")->required();

    CLI::App* sim = app.add_subcommand("sim", "stabilizerwise-image factorization of a 1-cell");
    sim->add_option("cell", path1, "1-cell JSON file")->required();

    CLI::App* bp = app.add_subcommand("bipullback", "bipullback of two 1-cells");
    bp->add_option("f", path1, "1-cell JSON file")->required();
    bp->add_option("g", path2, "1-cell JSON file")->required();

    CLI::App* bc = app.add_subcommand("bicoproduct", "bicoproduct of two 0-cells");
    bc->add_option("x", path1, "0-cell JSON file")->required();
    bc->add_option("y", path2, "0-cell JSON file")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a law suite over the built-in corpus");
    verify->add_option("law", law, "der1 der2 der3 der4 mackey tambara semi-mackey | all");

    // global flags remain usable after the subcommand name
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*apply) return cmd_apply(o, functor, path1, path2);
        if (*table) return cmd_burnside_table(o, group_name);
        if (*sim) return cmd_sim(o, path1);
        if (*bp) return cmd_bipullback(o, path1, path2);
        if (*bc) return cmd_bicoproduct(o, path1, path2);
        if (*verify) return cmd_verify(o, law);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const UnknownGroup& e) {
        std::cerr << "unknown group: " << e.what() << "\n";
        return kUnknownGroup;
    } catch (const BaseMismatch& e) {
        std::cerr << "base mismatch: " << e.what() << "\n";
        return kMismatch;
    } catch (const CellMismatch& e) {
        std::cerr << "cell mismatch: " << e.what() << "\n";
        return kMismatch;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOther;
    }
    return kOther;
}

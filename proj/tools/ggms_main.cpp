// Command-line surface: compute dimensions, roots, expansions,
// semistable bases, polytopes, phi functionals, Hom spaces, the dual
// semicanonical basis, crystal graphs, and the verification suites.
//
// Exit codes: 0 = success / all checks pass, 1 = verification failure,
// 2 = usage or configuration error.

#include "ggms/json_io.hpp"
#include "ggms/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ggms;

namespace {

#ifndef GGMS_SOURCE_DATA_DIR
#define GGMS_SOURCE_DATA_DIR "data"
#endif

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

StabilityParam parse_theta(const std::string& s, int rank) {
    std::vector<Rat> t;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) t.push_back(rat_parse(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (int(t.size()) != rank) throw error("theta has wrong rank: " + s);
    return StabilityParam(t);
}

// element specifiers: zeta:i^n | phi:<cartan>:<label> | file:<path>,
// combined linearly as "c1*SPEC + c2*SPEC" with rational coefficients
Functional parse_element(const Algebra& alg, const Catalog* cat, const std::string& spec) {
    auto parse_atom = [&](const std::string& atom) -> Functional {
        if (atom.rfind("zeta:", 0) == 0) {
            std::string body = atom.substr(5);
            int power_n = 1;
            auto caret = body.find('^');
            if (caret != std::string::npos) {
                power_n = std::stoi(body.substr(caret + 1));
                body = body.substr(0, caret);
            }
            int i = std::stoi(body) - 1;
            return power(alg, zeta(alg, i), power_n);
        }
        if (atom.rfind("phi:", 0) == 0) {
            auto second = atom.find(':', 4);
            if (second == std::string::npos) throw error("bad phi specifier: " + atom);
            std::string label = atom.substr(second + 1);
            if (!cat) throw error("no catalog loaded for " + atom);
            int idx = cat->index_of(label);
            if (idx < 0) throw error("catalog has no entry " + label);
            return cat->phi_of(alg, size_t(idx));
        }
        if (atom.rfind("file:", 0) == 0) {
            std::ifstream in(atom.substr(5));
            if (!in) throw error("cannot open " + atom.substr(5));
            json j;
            in >> j;
            return functional_from_json(alg, j);
        }
        throw error("bad element specifier: " + atom);
    };
    Functional total{Weight::zero(alg.rank()), {}};
    bool first = true;
    std::string term;
    std::vector<std::string> terms;
    for (char ch : spec + "+") {
        if (ch == '+') {
            if (!term.empty()) terms.push_back(term);
            term.clear();
        } else if (ch != ' ') {
            term += ch;
        }
    }
    for (const std::string& t : terms) {
        Rat coeff(1);
        std::string atom = t;
        auto star_pos = t.find('*');
        if (star_pos != std::string::npos && t.rfind("zeta:", 0) != 0 &&
            t.rfind("phi:", 0) != 0 && t.rfind("file:", 0) != 0) {
            coeff = rat_parse(t.substr(0, star_pos));
            atom = t.substr(star_pos + 1);
        }
        Functional f = scale(parse_atom(atom), coeff);
        if (first) {
            total = f;
            first = false;
        } else {
            total = add(total, f);
        }
    }
    if (first) throw error("empty element specifier");
    return total;
}

PModule parse_module(const Algebra& alg, const Catalog* cat, const std::string& spec) {
    // catalog expression "label^m+label" or a diagram file path
    if (spec.rfind("file:", 0) == 0 || spec.find('/') != std::string::npos ||
        spec.find(".str") != std::string::npos) {
        std::string path = spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
        std::ifstream in(path);
        if (!in) throw error("cannot open module file " + path);
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line[0] == '#') continue;
            lines.push_back(line);
        }
        while (!lines.empty() && lines.back().empty()) lines.pop_back();
        return string_module(alg.cartan(), parse_diagram(lines, alg.cartan()));
    }
    if (!cat) throw error("no catalog loaded for " + spec);
    PModule total = zero_module(alg.cartan());
    std::string term;
    for (char ch : spec + "+") {
        if (ch != '+') {
            term += ch;
            continue;
        }
        if (term.empty()) continue;
        int mult = 1;
        std::string label = term;
        auto caret = term.find('^');
        if (caret != std::string::npos) {
            mult = std::stoi(term.substr(caret + 1));
            label = term.substr(0, caret);
        }
        const CatalogEntry* e = cat->find(label);
        if (!e) throw error("catalog has no entry " + label);
        for (int k = 0; k < mult; ++k) total = direct_sum(total, e->module);
        term.clear();
    }
    return total;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw error("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

} // namespace

namespace {

// hard ceilings for the basis suites; Hom-only operations are exempt
int basis_height_ceiling(const std::string& cartan) {
    if (cartan == "A1" || cartan == "A2") return 8;
    if (cartan == "A3") return 6;
    if (cartan == "A4") return 4;
    return 8;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"slope stability, polytopes and bases for U(n) and O(N)"};
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    std::string cartan = "A2", data_dir = GGMS_SOURCE_DATA_DIR, out_path;
    bool as_json = false;
    app.add_option("--cartan", cartan, "Cartan label (A1..A4, B2, D4)")->capture_default_str();
    app.add_option("--data-dir", data_dir, "catalog directory")->capture_default_str();
    app.add_option("--out", out_path, "write JSON output to a file");
    app.add_flag("--json", as_json, "machine-readable output");

    auto* cmd_dim = app.add_subcommand("dim", "weight space dimension vs Kostant count");
    std::string nu_str = "1,1";
    cmd_dim->add_option("--nu", nu_str, "weight in simple-root coordinates")->required();

    auto* cmd_roots = app.add_subcommand("roots", "positive roots");

    auto* cmd_expand = app.add_subcommand("expand", "expansion into ordered monomials");
    std::string elem_spec, theta_str = "1,-1";
    cmd_expand->add_option("--elem", elem_spec, "element specifier")->required();
    cmd_expand->add_option("--theta", theta_str, "stability parameter")->required();

    auto* cmd_semi = app.add_subcommand("semistable", "semistable basis of O at a weight");
    std::string semi_nu;
    cmd_semi->add_option("--nu", semi_nu, "nu in Q+; the slice is O at weight -nu")->required();
    cmd_semi->add_option("--theta", theta_str, "stability parameter");

    auto* cmd_pol = app.add_subcommand("polytope", "polytope of an element");
    cmd_pol->add_option("--elem", elem_spec, "element specifier")->required();

    auto* cmd_phi = app.add_subcommand("phi", "flag functional of a module");
    std::string module_spec;
    cmd_phi->add_option("--module", module_spec, "catalog expression or diagram file")
        ->required();

    auto* cmd_hom = app.add_subcommand("hom", "Hom dimension between modules");
    std::string mod_a, mod_b;
    cmd_hom->add_option("--module-a", mod_a)->required();
    cmd_hom->add_option("--module-b", mod_b)->required();

    auto* cmd_basis = app.add_subcommand("basis", "dual semicanonical basis per weight");
    int height = 4;
    cmd_basis->add_option("--height", height, "height cutoff")->capture_default_str();
    std::string basis_nu;
    cmd_basis->add_option("--nu", basis_nu, "restrict to one weight");

    auto* cmd_crystal = app.add_subcommand("crystal", "crystal graph of the basis");
    cmd_crystal->add_option("--height", height, "height cutoff")->capture_default_str();

    auto* cmd_verify = app.add_subcommand("verify", "verification suites");
    std::string suite = "all", config_path, verify_theta;
    int verify_height = 0;
    cmd_verify->add_option("suite", suite, "suite name or 'all'")->capture_default_str();
    cmd_verify->add_option("--h", verify_height, "height cutoff override");
    cmd_verify->add_option("--theta", verify_theta, "stability parameter override");
    cmd_verify->add_option("--config", config_path, "JSON config file");

    // let --cartan/--json/... appear after the subcommand name
    for (CLI::App* sc : {cmd_dim, cmd_roots, cmd_expand, cmd_semi, cmd_pol, cmd_phi,
                         cmd_hom, cmd_basis, cmd_crystal, cmd_verify})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2, help exits 0
    }

    try {
        Algebra alg(CartanData::from_label(cartan));
        auto load_cat = [&]() -> Catalog {
            return load_catalog(alg, catalog_path(data_dir, cartan));
        };

        if (cmd_dim->parsed()) {
            Weight nu(parse_ints(nu_str));
            long u = alg.u_dim(nu), k = alg.kostant(nu);
            if (as_json || !out_path.empty()) {
                emit(json{{"cartan", cartan},
                          {"nu", nu.c},
                          {"u_dim", u},
                          {"kostant", k},
                          {"agree", u == k}},
                     out_path);
            } else {
                std::cout << u << " " << k << " " << (u == k ? "OK" : "MISMATCH") << "\n";
            }
            return u == k ? 0 : 1;
        }
        if (cmd_roots->parsed()) {
            auto roots = positive_roots(alg.cartan());
            if (as_json || !out_path.empty()) {
                json arr = json::array();
                for (const auto& r : roots) arr.push_back(r.c);
                emit(json{{"cartan", cartan}, {"count", roots.size()}, {"roots", arr}},
                     out_path);
            } else {
                for (const auto& r : roots) std::cout << r.str() << "\n";
                std::cout << "count " << roots.size() << "\n";
            }
            return 0;
        }
        if (cmd_expand->parsed()) {
            Catalog cat = load_cat();
            Functional f = parse_element(alg, &cat, elem_spec);
            StabilityParam theta = parse_theta(theta_str, alg.rank());
            auto ms = expand_ordered(alg, f, theta);
            if (!(remultiply(alg, ms) == f)) {
                std::cerr << "nonzero residual after re-multiplication\n";
                return 1;
            }
            emit(json{{"cartan", cartan},
                      {"theta", theta.str()},
                      {"monomials", monomials_to_json(alg, ms, theta)}},
                 out_path);
            return 0;
        }
        if (cmd_semi->parsed()) {
            Weight nu(parse_ints(semi_nu));
            StabilityParam theta = parse_theta(theta_str, alg.rank());
            auto basis = semistable_basis(alg, -nu, theta);
            json arr = json::array();
            for (const auto& f : basis) arr.push_back(functional_to_json(alg, f));
            emit(json{{"cartan", cartan},
                      {"weight", (-nu).c},
                      {"theta", theta.str()},
                      {"dim", basis.size()},
                      {"basis", arr}},
                 out_path);
            return 0;
        }
        if (cmd_pol->parsed()) {
            Catalog cat = load_cat();
            Functional f = parse_element(alg, &cat, elem_spec);
            emit(polytope_to_json(pol(alg, f), cartan), out_path);
            return 0;
        }
        if (cmd_phi->parsed()) {
            Catalog cat = load_cat();
            PModule m = parse_module(alg, &cat, module_spec);
            emit(functional_to_json(alg, phi(alg, m)), out_path);
            return 0;
        }
        if (cmd_hom->parsed()) {
            Catalog cat = load_cat();
            PModule a = parse_module(alg, &cat, mod_a);
            PModule b = parse_module(alg, &cat, mod_b);
            long h = hom_dim(a, b);
            long e = ext1_dim(a, b);
            if (as_json || !out_path.empty()) {
                emit(json{{"hom", h}, {"ext1", e}}, out_path);
            } else {
                std::cout << "hom " << h << " ext1 " << e << "\n";
            }
            return 0;
        }
        if (cmd_basis->parsed()) {
            if (height > basis_height_ceiling(cartan))
                throw error("height cutoff exceeds the ceiling for " + cartan + " (" +
                            std::to_string(basis_height_ceiling(cartan)) + ")");
            Catalog cat = load_cat();
            json arr = json::array();
            if (!basis_nu.empty()) {
                Weight nu(parse_ints(basis_nu));
                for (const auto& b : semicanonical_basis(alg, cat, nu))
                    arr.push_back(json{{"label", b.label},
                                       {"value", functional_to_json(alg, b.value)}});
            } else {
                BasisFamily fam = semicanonical_family(alg, cat, height);
                for (const auto& [lambda, elems] : fam.by_weight)
                    for (const auto& b : elems)
                        arr.push_back(json{{"label", b.label},
                                           {"weight", lambda.c},
                                           {"value", functional_to_json(alg, b.value)}});
            }
            emit(json{{"cartan", cartan}, {"basis", arr}}, out_path);
            return 0;
        }
        if (cmd_crystal->parsed()) {
            if (height > basis_height_ceiling(cartan))
                throw error("height cutoff exceeds the ceiling for " + cartan + " (" +
                            std::to_string(basis_height_ceiling(cartan)) + ")");
            Catalog cat = load_cat();
            BasisFamily fam = semicanonical_family(alg, cat, height);
            CrystalGraph g = crystal_graph(alg, fam);
            if (as_json || !out_path.empty()) {
                emit(crystal_to_json(g), out_path);
            } else {
                std::cout << crystal_to_text(g);
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            VerifyOptions opt;
            opt.data_dir = data_dir;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw error("cannot open config " + config_path);
                json cfg;
                in >> cfg;
                if (cfg.contains("cartan")) opt.cartan = cfg["cartan"].get<std::string>();
                if (cfg.contains("height")) opt.height = cfg["height"].get<int>();
                if (cfg.contains("data_dir")) opt.data_dir = cfg["data_dir"].get<std::string>();
                if (cfg.contains("suite")) suite = cfg["suite"].get<std::string>();
                if (cfg.contains("thetas"))
                    for (const auto& t : cfg["thetas"])
                        opt.thetas.push_back(
                            parse_theta(t.get<std::string>(), alg.rank()));
            }
            if (app.count("--cartan")) opt.cartan = cartan; // restrict scope
            if (verify_height) opt.height = verify_height;
            if (!verify_theta.empty())
                opt.thetas.push_back(parse_theta(verify_theta, alg.rank()));
            std::vector<std::string> names;
            if (suite == "all")
                names = suite_names();
            else
                names.push_back(suite);
            bool all_pass = true;
            json arr = json::array();
            for (const auto& name : names) {
                SuiteResult r = run_suite(name, opt);
                all_pass = all_pass && r.pass;
                arr.push_back(suite_to_json(r));
                std::cout << name << " " << (r.pass ? "PASS" : "FAIL") << "\n";
                for (const auto& f : r.failures) std::cout << "  " << f << "\n";
            }
            if (as_json || !out_path.empty()) emit(json{{"suites", arr}}, out_path);
            return all_pass ? 0 : 1;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include "ggms/json_io.hpp"

#include <sstream>

namespace ggms {

json functional_to_json(const Algebra& alg, const Functional& f) {
    json j;
    j["type"] = alg.cartan().label;
    j["weight"] = f.weight.c;
    json values = json::array();
    if (!f.values.empty()) {
        const auto& ws = alg.words(-f.weight);
        for (size_t k = 0; k < ws.size(); ++k) {
            if (f.values[k] == 0) continue;
            values.push_back({{"word", word_str(ws[k])}, {"value", rat_str(f.values[k])}});
        }
    }
    j["values"] = values;
    return j;
}

Functional functional_from_json(const Algebra& alg, const json& j) {
    if (j.at("type").get<std::string>() != alg.cartan().label)
        throw error("functional type does not match the Cartan label");
    Weight lambda(j.at("weight").get<std::vector<int>>());
    if (!lambda.in_q_minus()) throw error("functional weight outside Q-");
    Functional f = functional_zero(alg, lambda);
    for (const auto& entry : j.at("values")) {
        Word w = word_parse(entry.at("word").get<std::string>(), alg.rank());
        f.values[size_t(alg.word_index(-lambda, w))] =
            rat_parse(entry.at("value").get<std::string>());
    }
    if (!check_in_o(alg, f)) throw error("functional does not vanish on the Serre ideal");
    return f;
}

json polytope_to_json(const RationalPolytope& p, const std::string& cartan_label) {
    json verts = json::array();
    for (const auto& v : p.vertices) {
        json row = json::array();
        for (const auto& x : v) row.push_back(rat_str(x));
        verts.push_back(row);
    }
    return json{{"vertices", verts}, {"cartan", cartan_label}};
}

json rim_to_json(const UpperRim& rim) {
    json out = json::array();
    for (const auto& v : rim.vertices)
        out.push_back({{"r", v.r}, {"d", rat_str(v.d)}});
    return out;
}

json monomials_to_json(const Algebra& alg, const std::vector<OrderedMonomial>& ms,
                       const StabilityParam& theta) {
    json out = json::array();
    for (const auto& m : ms) {
        json factors = json::array();
        for (const auto& f : m.factors) factors.push_back(functional_to_json(alg, f));
        json slopes = json::array();
        for (const auto& f : m.factors)
            slopes.push_back(slope_of(j_theta(f.weight, theta)).str());
        out.push_back({{"coeff", rat_str(m.coeff)},
                       {"factors", factors},
                       {"slopes", slopes},
                       {"rim", rim_to_json(monomial_rim(m, theta))}});
    }
    return out;
}

json crystal_to_json(const CrystalGraph& g) {
    json nodes = json::array();
    for (const auto& n : g.nodes)
        nodes.push_back({{"label", n.label},
                         {"weight", n.weight.c},
                         {"eps", n.eps},
                         {"eps_star", n.eps_star}});
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"i", e.i + 1}, {"from", e.from}, {"to", e.to}});
    return json{{"nodes", nodes}, {"edges", edges}};
}

std::string crystal_to_text(const CrystalGraph& g) {
    std::ostringstream os;
    for (size_t k = 0; k < g.nodes.size(); ++k) {
        const auto& n = g.nodes[k];
        os << k << " " << n.label << " wt=" << n.weight.str() << " eps=(";
        for (size_t i = 0; i < n.eps.size(); ++i) os << (i ? "," : "") << n.eps[i];
        os << ") eps*=(";
        for (size_t i = 0; i < n.eps_star.size(); ++i) os << (i ? "," : "") << n.eps_star[i];
        os << ")\n";
    }
    for (const auto& e : g.edges)
        os << "e~_" << e.i + 1 << ": " << e.from << " -> " << e.to << "\n";
    return os.str();
}

json suite_to_json(const SuiteResult& r) {
    json stats = json::object();
    for (const auto& [k, v] : r.stats) stats[k] = v;
    return json{{"suite", r.name},
                {"pass", r.pass},
                {"seconds", r.seconds},
                {"failures", r.failures},
                {"stats", stats}};
}

} // namespace ggms

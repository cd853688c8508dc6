#include "apo/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace apo {

using nlohmann::json;

std::string to_json(const TrigPolynomial& p) {
    json j;
    j["n"] = p.n;
    j["a0"] = p.a0;
    json arr = json::array();
    for (const auto& c : p.coeffs) arr.push_back(json::array({c.a, c.b}));
    j["coeffs"] = arr;
    return j.dump();
}

std::string to_json(const Apo& op) {
    json j;
    j["mu"] = op.mu;
    j["valid_degree"] = op.valid_degree;
    json arr = json::array();
    for (const auto& t : op.terms) arr.push_back(json::array({t.amplitude, t.phase}));
    j["terms"] = arr;
    return j.dump();
}

std::string to_json(const NodeSet& ns) {
    json j;
    j["convention"] = ns.convention == WeightConvention::Y ? "Y" : "Z";
    json nodes = json::array();
    for (const auto& z : ns.nodes) nodes.push_back(json::array({z.real(), z.imag()}));
    json weights = json::array();
    for (const auto& w : ns.weights) weights.push_back(json::array({w.real(), w.imag()}));
    j["nodes"] = nodes;
    j["weights"] = weights;
    return j.dump();
}

TrigPolynomial trig_poly_from_json(const std::string& text) {
    const json j = json::parse(text);
    TrigPolynomial p;
    p.n = j.at("n").get<int>();
    p.a0 = j.value("a0", 0.0);
    for (const auto& c : j.at("coeffs"))
        p.coeffs.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
    p.validate();
    return p;
}

Apo apo_from_json(const std::string& text) {
    const json j = json::parse(text);
    Apo op;
    op.mu = j.at("mu").get<int>();
    op.valid_degree = j.at("valid_degree").get<int>();
    for (const auto& t : j.at("terms"))
        op.terms.push_back({t.at(0).get<double>(), t.at(1).get<double>()});
    op.validate();
    return op;
}

NodeSet node_set_from_json(const std::string& text) {
    const json j = json::parse(text);
    NodeSet ns;
    const std::string conv = j.at("convention").get<std::string>();
    if (conv == "Y")
        ns.convention = WeightConvention::Y;
    else if (conv == "Z")
        ns.convention = WeightConvention::Z;
    else
        throw std::invalid_argument("node_set_from_json: convention must be Y or Z");
    for (const auto& z : j.at("nodes"))
        ns.nodes.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    for (const auto& w : j.at("weights"))
        ns.weights.emplace_back(w.at(0).get<double>(), w.at(1).get<double>());
    if (ns.nodes.size() != ns.weights.size())
        throw std::invalid_argument("node_set_from_json: node/weight count mismatch");
    return ns;
}

std::string to_json(const SpectrumReport& r) {
    json j;
    j["tol"] = r.tol;
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(json{{"beta", e.beta},
                               {"re", e.value.real()},
                               {"im", e.value.imag()},
                               {"allowed", e.allowed}});
    j["entries"] = entries;
    j["violations"] = r.violations;
    return j.dump();
}

std::string to_json(const OmegaPerturbReport& r) {
    json j;
    j["s"] = r.s;
    j["alpha"] = r.alpha;
    j["omega"] = r.omega;
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"eps", row.eps},
                            {"zero_weight", row.zero_weight},
                            {"node_drift", row.node_drift}});
    j["rows"] = rows;
    j["ratio_min"] = r.ratio_min;
    j["ratio_max"] = r.ratio_max;
    j["ratio_bounded"] = r.ratio_bounded;
    j["drift_ok"] = r.drift_ok;
    return j.dump();
}

std::string to_json(const NonregularResult& r) {
    json j;
    j["s_aug"] = r.s_aug;
    j["instability"] = r.instability;
    j["eps0_levels"] = r.eps0_levels;
    auto poly = [](const ComplexPoly& p) {
        json arr = json::array();
        for (const auto& c : p.coeffs) arr.push_back(json::array({c.real(), c.imag()}));
        return arr;
    };
    j["gstar"] = poly(r.gstar);
    json lv = json::array();
    for (const auto& p : r.level_polys) lv.push_back(poly(p));
    j["level_polys"] = lv;
    return j.dump();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace apo

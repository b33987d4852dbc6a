#pragma once

// JSON and DOT serialization, and the full pipeline from a weighted digraph to a report.
// Indices are 1-based in every serialized form.

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "resdouble/adjoint.hpp"
#include "resdouble/minres.hpp"

namespace resdouble {

using json = nlohmann::ordered_json;

namespace detail {

inline json one_based(const std::vector<int>& v) {
    json a = json::array();
    for (int i : v) a.push_back(i + 1);
    return a;
}

inline json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.to_rows()) rows.push_back(r);
    return rows;
}

inline std::int64_t get_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InputError(what + " must be an integer");
    return j.get<std::int64_t>();
}

inline IntVector get_int_array(const json& j, const std::string& what, std::size_t len) {
    if (!j.is_array() || j.size() != len)
        throw InputError(what + " must be an array of " + std::to_string(len) + " integers");
    IntVector out;
    for (const auto& x : j) out.push_back(get_int(x, what + " entry"));
    return out;
}

inline int get_index(const json& j, int n, const std::string& what) {
    const auto v = get_int(j, what);
    if (v < 1 || v > n) throw InputError(what + " " + std::to_string(v) + " is out of range 1.." + std::to_string(n));
    return static_cast<int>(v - 1);
}

}  // namespace detail

inline json to_json(const EnriquesDigraph& d) {
    json prox = json::array();
    for (const auto& [j, i] : d.prox) prox.push_back({j + 1, i + 1});
    return {{"n", d.n}, {"prox", prox}};
}

inline json to_json(const GammaPoint& p) {
    return {{"on", detail::one_based(p.on)}, {"meets_btilde", p.meets_btilde}, {"mult", p.mult},
            {"conj_deg", p.conj_deg}};
}

inline json to_json(const WeightedDigraph& w) {
    json j = to_json(w.digraph);
    j["alpha_tilde"] = w.alpha_tilde;
    if (w.gamma) {
        json g = json::array();
        for (const auto& p : *w.gamma) g.push_back(to_json(p));
        j["gamma_points"] = g;
    }
    return j;
}

inline EnriquesDigraph digraph_from_json(const json& j) {
    if (!j.is_object()) throw InputError("digraph input must be a JSON object");
    if (!j.contains("n") || !j.contains("prox")) throw InputError("digraph input needs \"n\" and \"prox\"");
    EnriquesDigraph d;
    const auto n = detail::get_int(j.at("n"), "n");
    if (n < 1 || n > 4096) throw InputError("n must lie in 1..4096");
    d.n = static_cast<int>(n);
    if (!j.at("prox").is_array()) throw InputError("prox must be an array of [j, i] pairs");
    for (const auto& a : j.at("prox")) {
        if (!a.is_array() || a.size() != 2) throw InputError("prox entries must be [j, i] pairs");
        d.prox.insert({detail::get_index(a[0], d.n, "prox index"), detail::get_index(a[1], d.n, "prox index")});
    }
    return d;
}

/// Reads {"n", "prox", "alpha_tilde" | "mu", "gamma_points"?}.
inline WeightedDigraph weighted_from_json(const json& j) {
    WeightedDigraph w;
    w.digraph = digraph_from_json(j);
    require_valid(w.digraph);
    const auto n = static_cast<std::size_t>(w.n());
    const bool at = j.contains("alpha_tilde"), mu = j.contains("mu");
    if (at == mu) throw InputError("exactly one of \"alpha_tilde\" and \"mu\" must be given");
    if (at) {
        w.alpha_tilde = detail::get_int_array(j.at("alpha_tilde"), "alpha_tilde", n);
    } else {
        const auto m = detail::get_int_array(j.at("mu"), "mu", n);
        w.alpha_tilde = alpha_tilde_from_mu(w.digraph, m);
    }
    for (auto a : w.alpha_tilde)
        if (a < 0) throw InputError("multiplicities must be non-negative");

    if (j.contains("gamma_points")) {
        const auto& g = j.at("gamma_points");
        if (!g.is_array()) throw InputError("gamma_points must be an array");
        std::vector<GammaPoint> pts;
        for (const auto& e : g) {
            if (!e.is_object() || !e.contains("on")) throw InputError("gamma point needs \"on\"");
            GammaPoint p;
            if (!e.at("on").is_array() || e.at("on").empty() || e.at("on").size() > 2)
                throw InputError("gamma point \"on\" lists one or two curves");
            for (const auto& c : e.at("on")) p.on.push_back(detail::get_index(c, w.n(), "gamma point curve"));
            if (e.contains("meets_btilde")) {
                if (!e.at("meets_btilde").is_boolean()) throw InputError("meets_btilde must be a boolean");
                p.meets_btilde = e.at("meets_btilde").get<bool>();
            }
            if (e.contains("mult")) {
                const auto m = detail::get_int_array(e.at("mult"), "gamma point mult", p.on.size());
                p.mult.assign(m.begin(), m.end());
            } else {
                p.mult.assign(p.on.size(), p.meets_btilde ? 1 : 0);
            }
            if (e.contains("conj_deg")) p.conj_deg = static_cast<int>(detail::get_int(e.at("conj_deg"), "conj_deg"));
            if (p.conj_deg < 1) throw InputError("conj_deg must be positive");
            pts.push_back(std::move(p));
        }
        w.gamma = std::move(pts);
    }
    return w;
}

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

inline json to_json(const ExcCycle& c) {
    return {{"coeffs", c.coeffs},
            {"self_intersection", c.self_intersection},
            {"pa", c.pa},
            {"witness", c.witness ? json(*c.witness + 1) : json(nullptr)}};
}

inline json to_json(const CurveRecord& r) {
    json j = {{"E_sq", r.E_sq}, {"eps", r.eps}, {"gamma", r.gamma}, {"split", to_string(r.split)},
              {"F_sq", r.F_sq}, {"pa", r.pa}};
    if (r.split == Split::Yes) {
        j["half_sq"] = r.half_sq;
        j["halves_meet"] = r.halves_meet;
    }
    return j;
}

struct Report {
    json input;
    CanResData data;
    std::vector<CurveRecord> curves;
    DivisorD D;
    ExcCycle F, Z;
    ContractionResult minimal;
    Classification classification;
    AdjointReport adjoint;
    std::vector<std::string> warnings;
};

inline Report run_pipeline(const WeightedDigraph& w, json input, int pluri_max = 3) {
    Report r;
    r.input = std::move(input);
    r.data = derive_vectors(w);
    r.curves = curve_records(r.data);
    r.D = D_divisor(r.data);
    r.F = fiber_cycle(r.data);
    r.Z = fundamental_cycle(r.data);
    r.minimal = contract(r.data, r.F, r.Z);
    r.classification = classify(r.data, r.Z);
    r.adjoint = adjoint_report(r.data, r.classification.defective, pluri_max);
    for (int i = 0; i < r.data.n(); ++i)
        if (r.curves[i].split == Split::Undetermined)
            r.warnings.push_back("whether F_" + std::to_string(i + 1) +
                                 " splits depends on tangency data absent from the input");
    return r;
}

inline json to_json(const Report& r) {
    const auto& d = r.data;
    json j;
    j["input"] = r.input;
    j["digraph"] = to_json(d.weighted);
    j["lattice"] = {{"Q", detail::matrix_json(d.mats.Q)},
                    {"N", detail::matrix_json(d.mats.N)},
                    {"M", detail::matrix_json(d.mats.M)},
                    {"S", detail::matrix_json(d.mats.S)}};
    j["vectors"] = {{"alpha_tilde", d.weighted.alpha_tilde}, {"mu", d.mu},       {"eps", d.eps},
                    {"alpha", d.alpha},                      {"beta", d.beta},   {"beta_tilde", d.beta_tilde},
                    {"gamma_tilde", d.gamma_tilde},          {"gamma", d.gamma}};
    json curves = json::array();
    for (const auto& c : r.curves) curves.push_back(to_json(c));
    j["curves"] = curves;
    j["D"] = {{"coeffs", r.D.coeffs}, {"pairings", r.D.pairings}};
    j["cycles"] = {{"F", to_json(r.F)}, {"Z", to_json(r.Z)}};
    j["minimal"] = {{"contracted", detail::one_based(r.minimal.contracted)},
                    {"survivors", detail::one_based(r.minimal.survivors)},
                    {"bar_intersections", detail::matrix_json(r.minimal.bar_intersections)},
                    {"bar_genera", r.minimal.bar_genera},
                    {"bar_F", to_json(r.minimal.bar_F)},
                    {"bar_Z", to_json(r.minimal.bar_Z)}};

    const auto& c = r.classification;
    json def = json::object();
    for (const auto& [i, l] : c.defective) def[std::to_string(i + 1)] = l;
    json rdp = nullptr;
    if (c.rdp.kind == RdpResult::Kind::Label) rdp = c.rdp.label;
    if (c.rdp.kind == RdpResult::Kind::Undetermined) rdp = "undetermined";
    j["classification"] = {{"gap", c.gap},
                           {"witness", c.witness ? json(*c.witness + 1) : json(nullptr)},
                           {"very_odd", detail::one_based(c.very_odd)},
                           {"defective", def},
                           {"rdp", rdp}};

    json pluri = json::object();
    for (const auto& [m, e] : r.adjoint.pluri)
        pluri[std::to_string(m)] = {
            {"conditions", e.conditions}, {"fixed_m", e.fixed_m}, {"fixed_m_minus_1", e.fixed_m_minus_1}};
    j["adjoint"] = {{"c", r.adjoint.c},
                    {"d", r.adjoint.d},
                    {"fixed_canonical", r.adjoint.fixed.E_bar},
                    {"defective_sum", r.adjoint.fixed.E_tilde},
                    {"blowup_order", detail::one_based(r.adjoint.fixed.order)},
                    {"pluri", pluri}};
    j["warnings"] = r.warnings;
    return j;
}

/// Two Graphviz graphs: the weighted Enriques digraph and the dual graph of the F_i.
inline std::string to_dot(const Report& r) {
    const auto& d = r.data;
    std::ostringstream os;
    os << "digraph enriques {\n  node [shape=circle];\n";
    for (int i = 0; i < d.n(); ++i)
        os << "  q" << i + 1 << " [label=\"q_" << i + 1 << ": " << d.mu[i] << "\""
           << (d.eps[i] ? ", shape=doublecircle" : "") << "];\n";
    for (const auto& [j, i] : d.digraph().prox) os << "  q" << j + 1 << " -> q" << i + 1 << ";\n";
    os << "}\n";

    const auto L = f_lattice(d);
    os << "graph dual {\n  node [shape=box];\n";
    for (int i = 0; i < d.n(); ++i)
        os << "  F" << i + 1 << " [label=\"F_" << i + 1 << ": " << r.curves[i].F_sq << ", " << r.curves[i].pa
           << "\"];\n";
    for (int i = 0; i < d.n(); ++i)
        for (int k = i + 1; k < d.n(); ++k)
            if (L(i, k) != 0) {
                os << "  F" << i + 1 << " -- F" << k + 1;
                if (L(i, k) > 1) os << " [label=\"" << L(i, k) << "\"]";
                os << ";\n";
            }
    os << "}\n";
    return os.str();
}

}  // namespace resdouble

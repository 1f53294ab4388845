#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "octomod/basis.hpp"
#include "octomod/cayley_dickson.hpp"
#include "octomod/module.hpp"

namespace octomod {

using nlohmann::json;

// Rationals travel as strings to keep the wire format exact.

inline json rational_to_json(const Rational& r) { return json(r.str()); }

inline Rational rational_from_json(const json& j) {
    return Rational::parse(j.get<std::string>());
}

inline json rat_vector_to_json(const RatVector& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(e.str());
    return a;
}

inline RatVector rat_vector_from_json(const json& j) {
    RatVector v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

/// Row-major flat matrix encoding.
inline json rat_matrix_to_json(const RatMatrix& m) {
    json a = json::array();
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) a.push_back(m(r, c).str());
    return a;
}

inline RatMatrix rat_matrix_from_json(const json& j, size_t rows, size_t cols) {
    if (j.size() != rows * cols)
        throw std::invalid_argument("matrix JSON: expected " + std::to_string(rows * cols) +
                                    " entries, got " + std::to_string(j.size()));
    RatMatrix m(rows, cols);
    size_t i = 0;
    for (const auto& e : j) {
        m(i / cols, i % cols) = rational_from_json(e);
        ++i;
    }
    return m;
}

// {"level": n, "coeffs": ["1", "-1/2", ...]}
inline json cd_element_to_json(const CDElement& x) {
    return json{{"level", x.level()}, {"coeffs", rat_vector_to_json(x.coeffs())}};
}

inline CDElement cd_element_from_json(const json& j, int level_cap = kDefaultLevelCap) {
    const int level = j.at("level").get<int>();
    if (level < 0 || level > level_cap)
        throw std::invalid_argument("element JSON: level outside 0.." + std::to_string(level_cap));
    return CDElement(level, rat_vector_from_json(j.at("coeffs")));
}

// {"dim": d, "action": [L1..L7 row-major], "gram": [B0..B7] | null}
inline json module_spec_to_json(const ModuleSpec& s) {
    json action = json::array();
    for (const auto& l : s.action) action.push_back(rat_matrix_to_json(l));
    json gram;
    if (s.gram) {
        gram = json::array();
        for (const auto& b : *s.gram) gram.push_back(rat_matrix_to_json(b));
    }
    return json{{"dim", s.dim}, {"action", action}, {"gram", gram}};
}

inline ModuleSpec module_spec_from_json(const json& j) {
    ModuleSpec s;
    s.dim = j.at("dim").get<size_t>();
    const auto& action = j.at("action");
    if (action.size() != 7) throw std::invalid_argument("module JSON: 7 action matrices required");
    for (const auto& l : action) s.action.push_back(rat_matrix_from_json(l, s.dim, s.dim));
    if (j.contains("gram") && !j.at("gram").is_null()) {
        const auto& gram = j.at("gram");
        if (gram.size() != 8) throw std::invalid_argument("module JSON: 8 gram matrices required");
        std::vector<RatMatrix> g;
        for (const auto& b : gram) g.push_back(rat_matrix_from_json(b, s.dim, s.dim));
        s.gram = std::move(g);
    }
    return s;
}

// Canonical modules travel as {"regular": a, "conjugate": b}; abstract
// modules as their full spec. Readers dispatch on the keys.
inline json module_to_json(const Module& m) {
    if (m.is_canonical())
        return json{{"regular", m.regular_count()}, {"conjugate", m.conjugate_count()}};
    return module_spec_to_json(m.spec());
}

inline Module module_from_json(const json& j) {
    if (j.contains("regular") || j.contains("conjugate"))
        return Module::canonical(j.value("regular", size_t(0)), j.value("conjugate", size_t(0)));
    return Module::from_spec(module_spec_from_json(j));
}

// {"coords": [...], "scale": "s"}
inline json scaled_vector_to_json(const ScaledVector& v) {
    return json{{"coords", rat_vector_to_json(v.coords)}, {"scale", v.scale.str()}};
}

inline ScaledVector scaled_vector_from_json(const json& j) {
    return ScaledVector(rat_vector_from_json(j.at("coords")),
                        rational_from_json(j.at("scale")));
}

inline std::vector<ScaledVector> system_from_json(const json& j) {
    std::vector<ScaledVector> out;
    for (const auto& v : j.at("vectors")) out.push_back(scaled_vector_from_json(v));
    return out;
}

// The documented report schema, exactly these keys.
inline json bessel_report_to_json(const BesselReport& r) {
    return json{{"norm_sq", r.norm_sq.str()},
                {"coeff_sum", r.coeff_sum.str()},
                {"residual_norm_sq", r.residual_norm_sq.str()},
                {"correction", r.correction.str()},
                {"identity_holds", r.identity_holds}};
}

inline BesselReport bessel_report_from_json(const json& j) {
    BesselReport r;
    r.norm_sq = rational_from_json(j.at("norm_sq"));
    r.coeff_sum = rational_from_json(j.at("coeff_sum"));
    r.residual_norm_sq = rational_from_json(j.at("residual_norm_sq"));
    r.correction = rational_from_json(j.at("correction"));
    r.identity_holds = j.at("identity_holds").get<bool>();
    return r;
}

inline json decomposition_to_json(const Decomposition& d) {
    json scales = json::array();
    for (const auto& s : d.scales) scales.push_back(s.str());
    return json{{"regular", d.regular},
                {"conjugate", d.conjugate},
                {"scales", scales},
                {"frame", rat_matrix_to_json(d.frame)}};
}

inline json identity_report_to_json(const IdentityReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"identity", c.name},
                              {"ok", c.ok},
                              {"samples", c.samples},
                              {"witness", c.witness}});
    return json{{"all_ok", r.all_ok()}, {"checks", checks}};
}

}  // namespace octomod

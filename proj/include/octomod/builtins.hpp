#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "octomod/basis.hpp"
#include "octomod/cd_module.hpp"
#include "octomod/module.hpp"

namespace octomod {

/// A scaled O^k vector from per-summand octonion components.
inline ScaledVector canonical_vector(const std::vector<CDElement>& components,
                                     const Rational& scale = Rational(1)) {
    RatVector coords(8 * components.size());
    for (size_t t = 0; t < components.size(); ++t) {
        if (components[t].level() != 3)
            throw std::invalid_argument("canonical_vector: octonion components required");
        for (size_t i = 0; i < 8; ++i) coords[8 * t + i] = components[t][i];
    }
    return ScaledVector(std::move(coords), scale);
}

/// The alternative orthonormal basis of O^2:
///   x1 = (e1,e2)/sqrt2, x2 = (e4,e7)/sqrt2, x3 = (e6,e5)/sqrt2,
///   x4 = (1,e3)/sqrt2.
inline std::vector<ScaledVector> example_o2_basis() {
    const auto e = [](size_t i) { return CDElement::basis(3, i); };
    const Rational two(2);
    return {canonical_vector({e(1), e(2)}, two), canonical_vector({e(4), e(7)}, two),
            canonical_vector({e(6), e(5)}, two), canonical_vector({e(0), e(3)}, two)};
}

/// The weak associative pair x4 = (1,e3)/sqrt2, x5 = (1,-e3)/sqrt2 in O^2.
inline std::vector<ScaledVector> x4x5_basis() {
    const auto e = [](size_t i) { return CDElement::basis(3, i); };
    const Rational two(2);
    return {canonical_vector({e(0), e(3)}, two),
            canonical_vector({e(0), -e(3)}, two)};
}

/// Named module descriptor resolved from the CLI / tests. `an_level` is set
/// for the Cayley-Dickson algebras so callers can use the direct element
/// operations alongside the matrix module.
struct ResolvedModule {
    Module module;
    std::optional<int> an_level;
    std::string canonical_name;
    std::optional<std::string> default_basis;
};

namespace detail {

inline std::optional<size_t> parse_power(std::string_view text, std::string_view head) {
    if (text.substr(0, head.size()) != head) return std::nullopt;
    std::string_view rest = text.substr(head.size());
    if (rest.empty()) return 1;
    if (rest[0] != '^' || rest.size() < 2) return std::nullopt;
    size_t value = 0;
    for (char c : rest.substr(1)) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + size_t(c - '0');
        if (value > 64) throw std::invalid_argument("builtin module: summand count too large");
    }
    return value;
}

}  // namespace detail

/// Resolves builtin module names: "O", "Obar", the "O^a+Obar^b" family,
/// "sedenion"/"A4", "A5".."A8" (bounded by the matrix cap), and the
/// example names "example-4.3" / "x4x5" (the O^2 module with a default
/// basis attached). Returns nullopt for unknown names.
inline std::optional<ResolvedModule> builtin_module(std::string_view name,
                                                    int matrix_cap = kDefaultMatrixLevelCap) {
    if (name == "sedenion") name = "A4";
    if (name.size() >= 2 && name[0] == 'A') {
        bool digits = true;
        for (char c : name.substr(1)) digits = digits && c >= '0' && c <= '9';
        if (digits) {
            const int level = std::stoi(std::string(name.substr(1)));
            if (level < 4) throw std::invalid_argument("builtin module: A-levels start at A4");
            ResolvedModule r{make_an_module(level, matrix_cap), level,
                             "A" + std::to_string(level), std::nullopt};
            return r;
        }
    }
    if (name == "example-4.3")
        return ResolvedModule{Module::canonical(2, 0), std::nullopt, "O^2",
                              std::string("example-4.3")};
    if (name == "x4x5")
        return ResolvedModule{Module::canonical(2, 0), std::nullopt, "O^2", std::string("x4x5")};
    // O^a+Obar^b in either order, single parts allowed
    size_t a = 0, b = 0;
    bool any = false, bad = false;
    size_t pos = 0;
    std::string s(name);
    while (pos <= s.size() && !bad) {
        const size_t next = s.find('+', pos);
        const std::string part = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.empty()) {
            bad = true;
            break;
        }
        if (auto k = detail::parse_power(part, "Obar"))
            b += *k;
        else if (auto k2 = detail::parse_power(part, "O"))
            a += *k2;
        else {
            bad = true;
            break;
        }
        any = true;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (bad || !any) return std::nullopt;
    if (a + b == 0) throw std::invalid_argument("builtin module: at least one summand required");
    std::string cname;
    if (a > 0) cname += a == 1 ? "O" : "O^" + std::to_string(a);
    if (b > 0) {
        if (!cname.empty()) cname += "+";
        cname += b == 1 ? "Obar" : "Obar^" + std::to_string(b);
    }
    return ResolvedModule{Module::canonical(a, b), std::nullopt, cname, std::nullopt};
}

/// Resolves builtin basis names against a resolved module:
/// "canonical" (summand units for canonical modules, {e_8i} for A_n, the
/// orthogonalized nuclei otherwise), "example-4.3", "x4x5".
inline std::vector<ScaledVector> builtin_basis(const ResolvedModule& rm, std::string_view name) {
    if (name == "example-4.3" || name == "x4x5") {
        if (!(rm.module.is_canonical() && rm.module.regular_count() == 2 &&
              rm.module.conjugate_count() == 0))
            throw std::invalid_argument("basis '" + std::string(name) + "' lives in O^2");
        return name == "x4x5" ? x4x5_basis() : example_o2_basis();
    }
    if (name == "canonical") {
        if (rm.an_level) {
            std::vector<ScaledVector> out;
            const size_t count = (size_t(1) << *rm.an_level) / 8;
            for (size_t i = 0; i < count; ++i) out.push_back(an_basis_vector(*rm.an_level, i));
            return out;
        }
        if (rm.module.is_canonical()) {
            std::vector<ScaledVector> out;
            const size_t blocks = rm.module.regular_count() + rm.module.conjugate_count();
            for (size_t t = 0; t < blocks; ++t) {
                RatVector v(rm.module.dim());
                v[8 * t] = 1;
                out.emplace_back(std::move(v), Rational(1));
            }
            return out;
        }
        return nucleus_orthonormal_basis(rm.module);
    }
    throw std::invalid_argument("unknown basis name '" + std::string(name) + "'");
}

}  // namespace octomod

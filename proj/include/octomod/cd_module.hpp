#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "octomod/cayley_dickson.hpp"
#include "octomod/module.hpp"

namespace octomod {

/// Action and gram matrices of A_n are materialized up to this level by
/// default; higher levels stay usable through the direct element operations
/// below, which never touch matrices.
inline constexpr int kDefaultMatrixLevelCap = 8;

/// Projection A_n -> O: the octonion part e_0..e_7. Idempotent at level 3.
inline CDElement pi_octonion(const CDElement& x) {
    if (x.level() < 3) throw std::invalid_argument("pi_octonion: level >= 3 required");
    return x.truncated(3);
}

/// O-inner product of A_n: <s,w> = pi_O(s conj(w)).
inline CDElement an_inner(const CDElement& x, const CDElement& y) {
    CDElement::require_same_level(x, y);
    if (x.level() < 3) throw std::invalid_argument("an_inner: level >= 3 required");
    return pi_octonion(x * conjugate(y));
}

inline RatVector to_coords(const CDElement& x) { return x.coeffs(); }

inline CDElement from_coords(int level, RatVector coords) {
    return CDElement(level, std::move(coords));
}

/// Bases of the associative and conjugate associative elements of A_n,
/// by the doubling recursion
///   A(A_{n+1})  = A(A_n)  + A~(A_n) e_{2^n},
///   A~(A_{n+1}) = A~(A_n) + A(A_n)  e_{2^n},
/// with base case A(A_4) = <e_0>, A~(A_4) = <e_8>. Every basis element is a
/// single basis unit. Independent of the nullspace route through Module.
inline std::pair<std::vector<CDElement>, std::vector<CDElement>> an_nucleus_bases(int level) {
    if (level < 4) throw std::invalid_argument("an_nucleus_bases: level >= 4 required");
    std::vector<CDElement> assoc = {CDElement::basis(4, 0)};
    std::vector<CDElement> conj_assoc = {CDElement::basis(4, 8)};
    for (int n = 4; n < level; ++n) {
        const CDElement e = CDElement::basis(n + 1, size_t(1) << n);
        std::vector<CDElement> assoc2, conj2;
        assoc2.reserve(assoc.size() + conj_assoc.size());
        conj2.reserve(assoc.size() + conj_assoc.size());
        for (const auto& x : assoc) assoc2.push_back(x.embedded(n + 1));
        for (const auto& x : conj_assoc) assoc2.push_back(x.embedded(n + 1) * e);
        for (const auto& x : conj_assoc) conj2.push_back(x.embedded(n + 1));
        for (const auto& x : assoc) conj2.push_back(x.embedded(n + 1) * e);
        assoc = std::move(assoc2);
        conj_assoc = std::move(conj2);
    }
    return {std::move(assoc), std::move(conj_assoc)};
}

/// The weak associative orthonormal basis {e_{8i} : i = 0..2^{n-3}-1} of A_n.
inline std::vector<CDElement> weak_associative_basis_elements(int level) {
    if (level < 3)
        throw std::invalid_argument("weak_associative_basis_elements: level >= 3 required");
    const size_t count = (size_t(1) << level) / 8;
    std::vector<CDElement> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.push_back(CDElement::basis(level, 8 * i));
    return out;
}

/// e_{8i} as a scaled coordinate vector of the derived module.
inline ScaledVector an_basis_vector(int level, size_t i) {
    CDElement e = CDElement::basis(level, 8 * i);
    return ScaledVector(to_coords(e), Rational(1));
}

/// Octonion coefficients of x against {e_{8i}}: c_i = pi_O(x conj(e_{8i})).
inline std::vector<CDElement> an_expand(const CDElement& x) {
    if (x.level() < 3) throw std::invalid_argument("an_expand: level >= 3 required");
    const size_t count = x.dim() / 8;
    std::vector<CDElement> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i)
        out.push_back(pi_octonion(x * conjugate(CDElement::basis(x.level(), 8 * i))));
    return out;
}

/// sum_i c_i e_{8i}, the octonion coefficients acting inside A_n.
inline CDElement an_reconstruct(const std::vector<CDElement>& coeffs, int level) {
    if (coeffs.size() * 8 != size_t(1) << level)
        throw std::invalid_argument("an_reconstruct: coefficient count mismatch");
    CDElement acc(level);
    for (size_t i = 0; i < coeffs.size(); ++i)
        acc = acc + coeffs[i].embedded(level) * CDElement::basis(level, 8 * i);
    return acc;
}

/// Right action x p through the algebra product; p an octonion.
inline CDElement right_act(const CDElement& x, const CDElement& p) {
    if (p.level() != 3) throw std::invalid_argument("right_act: octonion (level 3) required");
    if (x.level() < 3) throw std::invalid_argument("right_act: level >= 3 required");
    return x * p.embedded(x.level());
}

/// The module-theoretic conjugation map C: with x = sum e_i a_i + sum e_i c_i
/// over A(A_n) and A~(A_n), C(x) = sum conj(e_i) a_i - sum e_i c_i, i.e. C
/// fixes A(A_n) pointwise and negates A~(A_n). Note: C agrees with the
/// algebra conjugation on the sedenions but not at higher levels, where
/// A(A_n) contains imaginary units (e.g. e_24 at level 5) that C fixes and
/// the algebra conjugation negates.
inline CDElement bimodule_conjugate(const CDElement& x) {
    const int n = x.level();
    if (n < 4) throw std::invalid_argument("bimodule_conjugate: level >= 4 required");
    const auto [abasis, cbasis] = an_nucleus_bases(n);
    CDElement out(n);
    std::vector<bool> seen(x.dim(), false);
    const auto consume = [&](const CDElement& column, bool conj_part, int i) {
        // column = e_i g, a signed basis unit; coefficient of x along it.
        size_t idx = 0;
        int sign = 0;
        for (size_t m = 0; m < column.dim(); ++m) {
            if (column[m].is_zero()) continue;
            if (sign != 0 || (!column[m].is_one() && column[m] != Rational(-1)))
                throw std::logic_error("bimodule_conjugate: nucleus column is not a signed unit");
            idx = m;
            sign = column[m].signum();
        }
        if (sign == 0 || seen[idx])
            throw std::logic_error("bimodule_conjugate: nucleus products do not form a basis");
        seen[idx] = true;
        Rational coeff = sign > 0 ? x[idx] : -x[idx];
        if (coeff.is_zero()) return;
        // C(e_i g) = conj(e_i) g on the associative part, -(e_i g) on the
        // conjugate associative part.
        if (conj_part || i > 0) coeff = -coeff;
        out = out + coeff * column;
    };
    for (const auto& g : abasis)
        for (int i = 0; i < 8; ++i) consume(CDElement::basis(3, size_t(i)).embedded(n) * g, false, i);
    for (const auto& g : cbasis)
        for (int i = 0; i < 8; ++i) consume(CDElement::basis(3, size_t(i)).embedded(n) * g, true, i);
    return out;
}

/// A_n as a left O-module in matrix form: the action of e_1..e_7 by left
/// multiplication and the gram forms of <s,w> = pi_O(s conj(w)), all built
/// from the signed basis products of the doubling engine and then passed
/// through the full axiom validation.
inline Module make_an_module(int level, int matrix_cap = kDefaultMatrixLevelCap) {
    if (level < 4) throw std::invalid_argument("make_an_module: level >= 4 required");
    if (level > matrix_cap)
        throw std::invalid_argument("make_an_module: level " + std::to_string(level) +
                                    " above matrix cap " + std::to_string(matrix_cap));
    const size_t d = size_t(1) << level;
    ModuleSpec s;
    s.dim = d;
    s.action.reserve(7);
    for (size_t i = 1; i <= 7; ++i) {
        RatMatrix l(d, d);
        for (size_t c = 0; c < d; ++c) {
            const auto e = basis_product(level, i, c);
            l(e.index, c) = Rational(e.sign);
        }
        s.action.push_back(std::move(l));
    }
    std::vector<RatMatrix> gram;
    gram.reserve(8);
    for (size_t i = 0; i < 8; ++i) {
        RatMatrix b(d, d);
        for (size_t k = 0; k < d; ++k)
            for (size_t l = 0; l < d; ++l) {
                // coeff_i(e_k conj(e_l))
                const auto e = basis_product(level, k, l);
                if (e.index != i) continue;
                b(k, l) = Rational(l == 0 ? e.sign : -e.sign);
            }
        gram.push_back(std::move(b));
    }
    s.gram = std::move(gram);
    return Module::from_spec(std::move(s));
}

}  // namespace octomod

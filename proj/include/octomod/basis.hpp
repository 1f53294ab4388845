#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octomod/module.hpp"
#include "octomod/sampling.hpp"

namespace octomod {

struct OrthonormalCheck {
    bool ok = true;
    // first offending pair in lexicographic order, when not orthonormal
    std::optional<std::pair<size_t, size_t>> witness;
};

/// delta-orthonormality in scaled form: inner_raw(u_a, u_b) = 0 for a != b
/// and inner_raw(u_a, u_a) = scale_a.
inline OrthonormalCheck is_orthonormal_system(const Module& m,
                                              std::span<const ScaledVector> sys) {
    if (sys.empty()) throw std::invalid_argument("orthonormal system: at least one vector required");
    for (size_t a = 0; a < sys.size(); ++a)
        for (size_t b = a; b < sys.size(); ++b) {
            const CDElement c = m.inner_raw(sys[a].coords, sys[b].coords);
            const CDElement expected =
                a == b ? CDElement::scalar(3, sys[a].scale) : CDElement(3);
            if (c != expected) return {false, std::make_pair(a, b)};
        }
    return {true, std::nullopt};
}

/// A system is maximal iff no nonzero vector is orthogonal to all of it:
/// the stacked real constraints <x, x_a> = 0 (eight per vector, through the
/// gram forms) must have trivial nullspace.
inline bool is_maximal(const Module& m, std::span<const ScaledVector> sys) {
    if (sys.empty()) throw std::invalid_argument("is_maximal: at least one vector required");
    RatMatrix constraints(8 * sys.size(), m.dim());
    for (size_t a = 0; a < sys.size(); ++a)
        for (int i = 0; i < 8; ++i) {
            const RatVector row = m.gram_form(i) * sys[a].coords;
            constraints.set_row(8 * a + i, row);
        }
    return nullspace(constraints).empty();
}

struct WeakAssociativityCheck {
    bool ok = true;
    struct Witness {
        int p_index;
        size_t n, m;
    };
    std::optional<Witness> witness;
};

/// Weak associativity of a system: [e_i, x_n, x_m] = 0 (second associator)
/// for every i in 1..7 and every ordered pair, diagonal included. The
/// condition is homogeneous, so scales drop out.
inline WeakAssociativityCheck is_weak_associative(const Module& mod,
                                                  std::span<const ScaledVector> sys) {
    for (size_t n = 0; n < sys.size(); ++n)
        for (size_t m = 0; m < sys.size(); ++m)
            for (int i = 1; i <= 7; ++i) {
                const CDElement a = mod.second_associator(CDElement::basis(3, size_t(i)),
                                                          sys[n].coords, sys[m].coords);
                if (!a.is_zero())
                    return {false, WeakAssociativityCheck::Witness{i, n, m}};
            }
    return {true, std::nullopt};
}

/// The four exact terms of the generalized Bessel identity
///   ||x||^2 = sum |<x,x_n>|^2 + ||x - sum <x,x_n> x_n||^2
///             - sum_{m,n} <[<x,x_n>, <x,x_m>, x_m], x_n>_R,
/// with the bracket the left module associator [p,q,y] = (pq)y - p(qy).
struct BesselReport {
    Rational norm_sq;
    Rational coeff_sum;
    Rational residual_norm_sq;
    Rational correction;
    bool identity_holds = false;
};

namespace detail {

struct BesselWork {
    BesselReport report;
    std::vector<CDElement> raw_coefficients;  // inner_raw(u_x, u_n)
    ScaledVector residual;
};

/// Shared Bessel computation. Every scale factor pairs evenly, so each
/// reported quantity is a plain rational; the closing assertion checks the
/// identity (and with it, that no odd sqrt pairing survived).
inline BesselWork bessel_work(const Module& m, const ScaledVector& x,
                              std::span<const ScaledVector> sys) {
    const auto onc = is_orthonormal_system(m, sys);
    if (!onc.ok)
        throw std::invalid_argument(
            "bessel/parseval: system is not orthonormal (pair " +
            std::to_string(onc.witness->first) + "," + std::to_string(onc.witness->second) + ")");
    const Rational sx = x.scale;
    BesselWork w;
    w.report.norm_sq = m.re_inner(x.coords, x.coords) / sx;
    RatVector projection(m.dim());
    for (size_t n = 0; n < sys.size(); ++n) {
        const CDElement c = m.inner_raw(x.coords, sys[n].coords);
        w.report.coeff_sum += norm_sq(c) / (sx * sys[n].scale);
        const RatVector piece = m.act(c, sys[n].coords);
        for (size_t i = 0; i < projection.size(); ++i)
            if (!piece[i].is_zero()) projection[i] += piece[i] / sys[n].scale;
        w.raw_coefficients.push_back(c);
    }
    w.residual = ScaledVector(x.coords - projection, sx);
    w.report.residual_norm_sq = m.re_inner(w.residual.coords, w.residual.coords) / sx;
    for (size_t n = 0; n < sys.size(); ++n)
        for (size_t k = 0; k < sys.size(); ++k) {
            const CDElement& cn = w.raw_coefficients[n];
            const CDElement& ck = w.raw_coefficients[k];
            if (cn.is_zero() || ck.is_zero()) continue;
            const RatVector assoc = m.act(octonion_multiply_table(cn, ck), sys[k].coords) -
                                    m.act(cn, m.act(ck, sys[k].coords));
            if (is_zero(assoc)) continue;
            w.report.correction +=
                m.re_inner(assoc, sys[n].coords) / (sx * sys[n].scale * sys[k].scale);
        }
    w.report.identity_holds =
        w.report.norm_sq ==
        w.report.coeff_sum + w.report.residual_norm_sq - w.report.correction;
    if (!w.report.identity_holds)
        throw std::logic_error("bessel identity violated with exact arithmetic (internal)");
    if (w.report.coeff_sum - w.report.correction > w.report.norm_sq)
        throw std::logic_error("bessel inequality violated with exact arithmetic (internal)");
    return w;
}

}  // namespace detail

inline BesselReport bessel_report(const Module& m, const ScaledVector& x,
                                  std::span<const ScaledVector> sys) {
    return detail::bessel_work(m, x, sys).report;
}

struct ParsevalExpansion {
    std::vector<ScaledOctonion> coefficients;  // <x, x_n> in scaled form
    ScaledVector residual;
    bool parseval_holds = false;
    BesselReport report;
};

/// Expansion of x against an orthonormal *basis* (maximal system required).
/// parseval_holds reports the honest outcome: residual zero and coefficient
/// norms summing to ||x||^2. Guaranteed for weak associative bases.
inline ParsevalExpansion parseval_expand(const Module& m, const ScaledVector& x,
                                         std::span<const ScaledVector> sys) {
    if (!is_maximal(m, sys))
        throw std::invalid_argument("parseval_expand: system is not maximal");
    auto w = detail::bessel_work(m, x, sys);
    ParsevalExpansion out;
    out.report = w.report;
    for (size_t n = 0; n < sys.size(); ++n)
        out.coefficients.push_back({w.raw_coefficients[n], x.scale * sys[n].scale});
    out.residual = std::move(w.residual);
    out.parseval_holds = is_zero(out.residual.coords) && w.report.coeff_sum == w.report.norm_sq;
    return out;
}

/// The induced real orthonormal family {e_i x_a : i = 0..7}. Requires a weak
/// associative orthonormal system; real orthonormality is re-verified
/// exactly, and for maximal input the count 8|S| must exhaust the dimension.
inline std::vector<ScaledVector> real_basis_expansion(const Module& m,
                                                      std::span<const ScaledVector> sys) {
    const auto onc = is_orthonormal_system(m, sys);
    if (!onc.ok) throw std::invalid_argument("real_basis_expansion: system is not orthonormal");
    const auto wa = is_weak_associative(m, sys);
    if (!wa.ok)
        throw std::invalid_argument(
            "real_basis_expansion: system is not weak associative ([e" +
            std::to_string(wa.witness->p_index) + ", x" + std::to_string(wa.witness->n) + ", x" +
            std::to_string(wa.witness->m) + "] != 0)");
    std::vector<ScaledVector> out;
    out.reserve(8 * sys.size());
    for (const auto& v : sys)
        for (int i = 0; i < 8; ++i)
            out.emplace_back(m.act_basis(i, v.coords), v.scale);
    for (size_t a = 0; a < out.size(); ++a)
        for (size_t b = a; b < out.size(); ++b) {
            // <e_i x_al, e_j x_be>_R = delta in scaled form
            const Rational got = m.re_inner(out[a].coords, out[b].coords);
            const Rational expected = a == b ? out[a].scale : Rational(0);
            if (got != expected)
                throw std::logic_error("real basis expansion is not real-orthonormal (internal)");
        }
    if (is_maximal(m, sys) && out.size() != m.dim())
        throw std::logic_error("real basis expansion does not exhaust the dimension (internal)");
    return out;
}

/// Both sides of the Hilbert-basis <=> weak-associativity equivalence:
/// Parseval on seeded samples plus the probes p x_b for p = e_1..e_7 (the
/// probes make the empirical side complete: any failure of weak
/// associativity breaks Parseval on one of them), against the weak
/// associativity predicate.
struct EquivalenceReport {
    bool parseval_all = true;
    bool weak_associative = true;
    bool agree = true;
    int samples = 0;
    std::string first_parseval_failure;
};

inline EquivalenceReport hilbert_basis_weak_associative_check(const Module& m,
                                                              std::span<const ScaledVector> sys,
                                                              int samples,
                                                              uint64_t seed = kDefaultSeed) {
    const auto onc = is_orthonormal_system(m, sys);
    if (!onc.ok)
        throw std::invalid_argument("equivalence check: system is not orthonormal");
    if (!is_maximal(m, sys))
        throw std::invalid_argument("equivalence check: system is not maximal");
    EquivalenceReport rep;
    rep.weak_associative = is_weak_associative(m, sys).ok;
    const auto probe = [&](const ScaledVector& x, const std::string& label) {
        ++rep.samples;
        Rational coeff_sum;
        for (const auto& v : sys) {
            const CDElement c = m.inner_raw(x.coords, v.coords);
            if (!c.is_zero()) coeff_sum += norm_sq(c) / (x.scale * v.scale);
        }
        const Rational nsq = m.re_inner(x.coords, x.coords) / x.scale;
        if (coeff_sum != nsq && rep.parseval_all) {
            rep.parseval_all = false;
            rep.first_parseval_failure = label;
        }
    };
    for (size_t b = 0; b < sys.size(); ++b)
        for (int i = 1; i <= 7; ++i)
            probe(ScaledVector(m.act_basis(i, sys[b].coords), sys[b].scale),
                  "probe e" + std::to_string(i) + " x" + std::to_string(b));
    SampleRng rng(seed);
    for (int s = 0; s < samples; ++s)
        probe(ScaledVector(rng.vector(m.dim()), Rational(1)), "sample " + std::to_string(s));
    rep.agree = rep.parseval_all == rep.weak_associative;
    return rep;
}

/// Weak associative orthonormal basis from the nuclei: orthogonalized bases
/// of A(M) and A~(M), in scaled form. Always maximal and weak associative;
/// the construction behind "a weak associative basis always exists".
inline std::vector<ScaledVector> nucleus_orthonormal_basis(const Module& m) {
    if (!m.has_gram())
        throw std::invalid_argument("nucleus_orthonormal_basis: module has no inner-product data");
    const auto nuc = m.nucleus();
    const auto cnuc = m.conj_nucleus();
    if (8 * (nuc.size() + cnuc.size()) != m.dim())
        throw AxiomViolation("dim M = 8(dim A(M) + dim A~(M))",
                             "nucleus_orthonormal_basis on a non-alternative module");
    std::vector<ScaledVector> out;
    if (!nuc.empty()) {
        auto [u, s] = gram_schmidt(nuc, m.gram_form(0));
        for (size_t j = 0; j < u.size(); ++j) out.emplace_back(std::move(u[j]), std::move(s[j]));
    }
    if (!cnuc.empty()) {
        auto [z, t] = gram_schmidt(cnuc, m.gram_form(0));
        for (size_t k = 0; k < z.size(); ++k) out.emplace_back(std::move(z[k]), std::move(t[k]));
    }
    return out;
}

}  // namespace octomod

#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "octomod/rational.hpp"

namespace octomod {

/// Levels accepted from external input (CLI, files). 2^12 = 4096 coefficients
/// keeps the doubling recursion at desk scale. Internal operations work at
/// any level; entry points validate against a configurable cap.
inline constexpr int kDefaultLevelCap = 12;

/// Element of the Cayley-Dickson algebra at a fixed doubling level:
/// level 0 = R, 1 = C, 2 = H, 3 = O, 4 = sedenions, ...
/// coeffs()[i] is the coordinate of the basis unit e_i, with e_0 = 1.
class CDElement {
public:
    explicit CDElement(int level) : level_(check_level(level)), c_(size_t(1) << level) {}
    CDElement(int level, std::vector<Rational> coeffs)
        : level_(check_level(level)), c_(std::move(coeffs)) {
        if (c_.size() != size_t(1) << level_)
            throw std::invalid_argument("CDElement: coefficient count != 2^level");
    }

    static CDElement scalar(int level, const Rational& value) {
        CDElement x(level);
        x.c_[0] = value;
        return x;
    }
    static CDElement basis(int level, size_t index, const Rational& coeff = Rational(1)) {
        CDElement x(level);
        if (index >= x.c_.size()) throw std::invalid_argument("CDElement::basis: index out of range");
        x.c_[index] = coeff;
        return x;
    }

    int level() const { return level_; }
    size_t dim() const { return c_.size(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](size_t i) const { return c_[i]; }
    Rational& operator[](size_t i) { return c_[i]; }

    bool is_zero() const {
        for (const auto& e : c_)
            if (!e.is_zero()) return false;
        return true;
    }

    /// Zero-padded copy at a higher level (index-preserving embedding).
    CDElement embedded(int to_level) const {
        if (to_level < level_) throw std::invalid_argument("CDElement::embedded: level too small");
        CDElement x(to_level);
        for (size_t i = 0; i < c_.size(); ++i) x.c_[i] = c_[i];
        return x;
    }

    /// Truncation to the first 2^to_level coordinates.
    CDElement truncated(int to_level) const {
        if (to_level > level_) throw std::invalid_argument("CDElement::truncated: level too large");
        CDElement x(to_level);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] = c_[i];
        return x;
    }

    friend bool operator==(const CDElement& a, const CDElement& b) {
        return a.level_ == b.level_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CDElement& a, const CDElement& b) { return !(a == b); }

    CDElement operator-() const {
        CDElement r(level_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend CDElement operator+(const CDElement& a, const CDElement& b) {
        require_same_level(a, b);
        CDElement r(a.level_);
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend CDElement operator-(const CDElement& a, const CDElement& b) {
        require_same_level(a, b);
        CDElement r(a.level_);
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend CDElement operator*(const Rational& c, const CDElement& x) {
        CDElement r(x.level_);
        for (size_t i = 0; i < x.c_.size(); ++i) r.c_[i] = c * x.c_[i];
        return r;
    }
    friend CDElement operator*(const CDElement& a, const CDElement& b);

    static void require_same_level(const CDElement& a, const CDElement& b) {
        if (a.level_ != b.level_)
            throw std::invalid_argument("CDElement: level mismatch (" + std::to_string(a.level_) +
                                        " vs " + std::to_string(b.level_) + ")");
    }

private:
    static int check_level(int level) {
        if (level < 0 || level > 62) throw std::invalid_argument("CDElement: bad level");
        return level;
    }

    int level_;
    std::vector<Rational> c_;
};

inline CDElement conjugate(const CDElement& x) {
    CDElement r(x.level());
    r[0] = x[0];
    for (size_t i = 1; i < x.dim(); ++i) r[i] = -x[i];
    return r;
}

inline Rational real_part(const CDElement& x) { return x[0]; }

inline Rational norm_sq(const CDElement& x) {
    Rational n;
    for (size_t i = 0; i < x.dim(); ++i)
        if (!x[i].is_zero()) n += x[i] * x[i];
    return n;
}

namespace detail {

inline bool span_zero(std::span<const Rational> s) {
    for (const auto& e : s)
        if (!e.is_zero()) return false;
    return true;
}

inline std::vector<Rational> span_conj(std::span<const Rational> s) {
    std::vector<Rational> r(s.begin(), s.end());
    for (size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
    return r;
}

// Recursive doubling product: with x = a + b*e and y = c + d*e over the
// previous level, x*y = (a*c - conj(d)*b) + (d*a + b*conj(c))*e.
// All-zero halves are skipped, so products against basis units stay sparse.
inline std::vector<Rational> doubling_mul(std::span<const Rational> x,
                                          std::span<const Rational> y) {
    const size_t n = x.size();
    std::vector<Rational> out(n);
    if (span_zero(x) || span_zero(y)) return out;
    if (n == 1) {
        out[0] = x[0] * y[0];
        return out;
    }
    const size_t h = n / 2;
    const auto a = x.first(h), b = x.subspan(h);
    const auto c = y.first(h), d = y.subspan(h);
    const auto t1 = doubling_mul(a, c);
    const auto dc = span_conj(d);
    const auto t2 = doubling_mul(dc, b);
    const auto t3 = doubling_mul(d, a);
    const auto cc = span_conj(c);
    const auto t4 = doubling_mul(b, cc);
    for (size_t i = 0; i < h; ++i) {
        out[i] = t1[i] - t2[i];
        out[h + i] = t3[i] + t4[i];
    }
    return out;
}

}  // namespace detail

/// General multiplication engine: the Cayley-Dickson doubling recursion.
inline CDElement operator*(const CDElement& a, const CDElement& b) {
    CDElement::require_same_level(a, b);
    return CDElement(a.level(), detail::doubling_mul(a.coeffs(), b.coeffs()));
}

struct SignedIndex {
    int sign;
    size_t index;
};

/// Product of two basis units as a signed basis unit, by the same doubling
/// case analysis but on indices only. e_i e_j always lands on e_{i xor j}.
inline SignedIndex basis_product(int level, size_t i, size_t j) {
    if (level == 0) return {1, 0};
    const size_t h = size_t(1) << (level - 1);
    const bool ih = i >= h, jh = j >= h;
    const size_t p = ih ? i - h : i;
    const size_t q = jh ? j - h : j;
    if (!ih && !jh) return basis_product(level - 1, i, j);
    if (!ih && jh) {  // e_i (e_q e) = (e_q e_i) e
        const auto r = basis_product(level - 1, q, i);
        return {r.sign, r.index + h};
    }
    if (ih && !jh) {  // (e_p e) e_j = (e_p conj(e_j)) e
        const auto r = basis_product(level - 1, p, j);
        return {j == 0 ? r.sign : -r.sign, r.index + h};
    }
    // (e_p e)(e_q e) = -(conj(e_q) e_p)
    const auto r = basis_product(level - 1, q, p);
    return {q == 0 ? -r.sign : r.sign, r.index};
}

/// Octonion basis products from the seven oriented triples of the paper's
/// epsilon tensor. This table is the level-3 oracle path; it is built
/// independently of the doubling recursion and the two are cross-checked.
struct OctonionTable {
    struct Entry {
        int sign;
        int index;
    };
    std::array<std::array<Entry, 8>, 8> mul{};

    static const OctonionTable& get() {
        static const OctonionTable table = [] {
            OctonionTable t{};
            for (int i = 0; i < 8; ++i) {
                t.mul[0][i] = {1, i};
                t.mul[i][0] = {1, i};
            }
            for (int i = 1; i < 8; ++i) t.mul[i][i] = {-1, 0};
            constexpr int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                           {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
            for (const auto& tr : triples) {
                const int i = tr[0], j = tr[1], k = tr[2];
                t.mul[i][j] = {1, k};
                t.mul[j][k] = {1, i};
                t.mul[k][i] = {1, j};
                t.mul[j][i] = {-1, k};
                t.mul[k][j] = {-1, i};
                t.mul[i][k] = {-1, j};
            }
            return t;
        }();
        return table;
    }
};

/// Bilinear extension of the epsilon table. Level 3 only.
inline CDElement octonion_multiply_table(const CDElement& x, const CDElement& y) {
    if (x.level() != 3 || y.level() != 3)
        throw std::invalid_argument("octonion_multiply_table: level-3 elements required");
    const auto& tab = OctonionTable::get();
    CDElement out(3);
    for (int i = 0; i < 8; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (y[j].is_zero()) continue;
            const auto e = tab.mul[i][j];
            const Rational term = x[i] * y[j];
            if (e.sign > 0)
                out[e.index] += term;
            else
                out[e.index] -= term;
        }
    }
    return out;
}

inline CDElement commutator(const CDElement& a, const CDElement& b) { return a * b - b * a; }

inline CDElement associator(const CDElement& a, const CDElement& b, const CDElement& c) {
    return (a * b) * c - a * (b * c);
}

/// Searches products (e_i +- e_j)(e_k +- e_l) for a zero divisor. The four
/// signed terms of such a product sit at indices i^k, i^l, j^k, j^l, so only
/// l = i^j^k can cancel; other l are skipped. Candidates are confirmed with
/// the full doubling product before being returned. Returns nullopt when the
/// whole range is exhausted (levels <= 3, the division algebras).
inline std::optional<std::pair<CDElement, CDElement>> find_zero_divisor(int level) {
    if (level < 1) throw std::invalid_argument("find_zero_divisor: level >= 1 required");
    const size_t dim = size_t(1) << level;
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j)
            for (size_t k = 0; k < dim; ++k) {
                const size_t l = i ^ j ^ k;
                if (l <= k) continue;
                const auto ik = basis_product(level, i, k);
                const auto il = basis_product(level, i, l);
                const auto jk = basis_product(level, j, k);
                const auto jl = basis_product(level, j, l);
                for (int s1 : {1, -1})
                    for (int s2 : {1, -1}) {
                        // (e_i + s1 e_j)(e_k + s2 e_l)
                        if (ik.sign + s1 * s2 * jl.sign != 0) continue;
                        if (s2 * il.sign + s1 * jk.sign != 0) continue;
                        CDElement x = CDElement::basis(level, i) +
                                      CDElement::basis(level, j, Rational(s1));
                        CDElement y = CDElement::basis(level, k) +
                                      CDElement::basis(level, l, Rational(s2));
                        if ((x * y).is_zero()) return std::make_pair(std::move(x), std::move(y));
                    }
            }
    return std::nullopt;
}

/// Parses literals like "1 + 2e3 - 1/2e10". Whitespace-insensitive; "e0" and
/// bare rationals both denote the real unit; repeated terms accumulate.
inline CDElement parse_cd_element(std::string_view text, int level) {
    CDElement out(level);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    const auto fail = [&](const std::string& why) -> CDElement {
        throw std::invalid_argument("bad element literal '" + std::string(text) + "': " + why);
    };
    if (s.empty()) return fail("empty");
    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            return fail("expected '+' or '-' between terms");
        }
        if (pos >= s.size()) return fail("dangling sign");
        Rational coeff(1);
        bool have_coeff = false;
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (pos > start) {
            coeff = Rational::parse(std::string_view(s).substr(start, pos - start));
            have_coeff = true;
        }
        size_t index = 0;
        bool have_index = false;
        if (pos < s.size() && s[pos] == 'e') {
            ++pos;
            const size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) return fail("missing basis index after 'e'");
            index = std::stoul(s.substr(dstart, pos - dstart));
            if (index >= out.dim()) return fail("basis index e" + std::to_string(index) +
                                                " out of range for level " + std::to_string(level));
            have_index = true;
        }
        if (!have_coeff && !have_index) return fail("expected a term");
        if (sign < 0) coeff = -coeff;
        out[index] += coeff;
        first = false;
    }
    return out;
}

inline std::string to_string(const CDElement& x) {
    std::string out;
    for (size_t i = 0; i < x.dim(); ++i) {
        if (x[i].is_zero()) continue;
        const Rational mag = x[i].abs();
        if (out.empty())
            out += x[i].signum() < 0 ? "-" : "";
        else
            out += x[i].signum() < 0 ? " - " : " + ";
        if (i == 0)
            out += mag.str();
        else {
            if (!mag.is_one()) out += mag.str();
            out += "e" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace octomod

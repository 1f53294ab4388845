#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octomod/rational.hpp"

namespace octomod {

using RatVector = std::vector<Rational>;

inline bool is_zero(const RatVector& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

inline RatVector operator+(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    RatVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVector operator-(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    RatVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVector operator*(const Rational& c, const RatVector& v) {
    RatVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

/// Dense exact rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(size_t n) {
        RatMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    RatVector column(size_t c) const {
        RatVector v(rows_);
        for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    void set_column(size_t c, const RatVector& v) {
        if (v.size() != rows_) throw std::invalid_argument("set_column: size mismatch");
        for (size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }
    RatVector row(size_t r) const {
        return RatVector(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    }
    void set_row(size_t r, const RatVector& v) {
        if (v.size() != cols_) throw std::invalid_argument("set_row: size mismatch");
        for (size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
    }
    void swap_rows(size_t r1, size_t r2) {
        if (r1 == r2) return;
        for (size_t c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
    }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!e.is_zero()) return false;
        return true;
    }

    RatMatrix transposed() const {
        RatMatrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        RatMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        RatMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend RatMatrix operator*(const Rational& c, const RatMatrix& m) {
        RatMatrix r(m.rows_, m.cols_);
        for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = c * m.a_[i];
        return r;
    }

    // Zero entries of the left factor are skipped, so products against the
    // sparse action/frame matrices that dominate this library stay cheap.
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        RatMatrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Rational& f = a(i, k);
                if (f.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const Rational& g = b(k, j);
                    if (g.is_zero()) continue;
                    r(i, j) += f * g;
                }
            }
        return r;
    }

    friend RatVector operator*(const RatMatrix& m, const RatVector& x) {
        if (m.cols_ != x.size()) throw std::invalid_argument("matvec shape mismatch");
        RatVector r(m.rows_);
        for (size_t c = 0; c < m.cols_; ++c) {
            if (x[c].is_zero()) continue;
            for (size_t i = 0; i < m.rows_; ++i) {
                const Rational& e = m(i, c);
                if (!e.is_zero()) r[i] += e * x[c];
            }
        }
        return r;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// xT * b * y, skipping zero coordinates of both vectors.
inline Rational bilinear_form(const RatVector& x, const RatMatrix& b, const RatVector& y) {
    if (x.size() != b.rows() || y.size() != b.cols())
        throw std::invalid_argument("bilinear_form: shape mismatch");
    Rational acc;
    for (size_t r = 0; r < x.size(); ++r) {
        if (x[r].is_zero()) continue;
        Rational rowacc;
        for (size_t c = 0; c < y.size(); ++c) {
            if (y[c].is_zero()) continue;
            const Rational& e = b(r, c);
            if (!e.is_zero()) rowacc += e * y[c];
        }
        if (!rowacc.is_zero()) acc += x[r] * rowacc;
    }
    return acc;
}

/// In-place reduction to the (unique) reduced row echelon form.
/// Pivot choice: largest |entry| in the column, ties broken by lowest row.
/// Returns the pivot column indices in order.
inline std::vector<size_t> rref_in_place(RatMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t best = m.rows();
        for (size_t r = row; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            if (best == m.rows() || m(r, col).abs() > m(best, col).abs()) best = r;
        }
        if (best == m.rows()) continue;
        m.swap_rows(row, best);
        const Rational pivot = m(row, col);
        if (!pivot.is_one())
            for (size_t c = col; c < m.cols(); ++c) m(row, c) /= pivot;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            const Rational f = m(r, col);
            if (f.is_zero()) continue;
            for (size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline size_t rank(RatMatrix m) { return rref_in_place(m).size(); }

/// Basis of {x : m x = 0}; empty iff m has full column rank.
/// Each basis vector is scaled so its first nonzero entry is 1.
inline std::vector<RatVector> nullspace(const RatMatrix& m) {
    RatMatrix r = m;
    const auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(m.cols());
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            if (!v[i].is_one()) {
                const Rational lead = v[i];
                for (auto& e : v) e /= lead;
            }
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with m x = b, or nullopt when the system is inconsistent.
inline std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    RatVector x(m.cols());
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

/// X with a X = b for square invertible a; throws on singular input.
inline RatMatrix solve_matrix(const RatMatrix& a, const RatMatrix& b) {
    if (!a.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("solve_matrix: shape mismatch");
    const size_t n = a.rows();
    RatMatrix aug(n, n + b.cols());
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        for (size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
    }
    const auto pivots = rref_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw std::domain_error("solve_matrix: singular matrix");
    RatMatrix x(n, b.cols());
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < b.cols(); ++c) x(r, c) = aug(r, n + c);
    return x;
}

inline RatMatrix inverse(const RatMatrix& a) {
    return solve_matrix(a, RatMatrix::identity(a.rows()));
}

inline bool is_symmetric(const RatMatrix& m) {
    if (!m.is_square()) return false;
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = r + 1; c < m.cols(); ++c)
            if (m(r, c) != m(c, r)) return false;
    return true;
}

inline bool is_skew_symmetric(const RatMatrix& m) {
    if (!m.is_square()) return false;
    for (size_t r = 0; r < m.rows(); ++r) {
        if (!m(r, r).is_zero()) return false;
        for (size_t c = r + 1; c < m.cols(); ++c)
            if (m(r, c) != -m(c, r)) return false;
    }
    return true;
}

/// Sylvester test via symmetric elimination: every pivot must stay positive.
inline bool is_positive_definite(RatMatrix m) {
    if (!is_symmetric(m)) return false;
    const size_t n = m.rows();
    for (size_t k = 0; k < n; ++k) {
        if (m(k, k).signum() <= 0) return false;
        for (size_t r = k + 1; r < n; ++r) {
            const Rational f = m(r, k) / m(k, k);
            if (f.is_zero()) continue;
            for (size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
        }
    }
    return true;
}

/// Cayley transform Q = (I - S)(I + S)^{-1} of a skew-symmetric S.
/// The factors commute, so Q is computed as (I + S)^{-1}(I - S); the
/// result satisfies QT Q = I exactly, which is re-checked before returning.
inline RatMatrix cayley_orthogonal(const RatMatrix& skew) {
    if (!skew.is_square()) throw std::invalid_argument("cayley_orthogonal: square matrix required");
    if (!is_skew_symmetric(skew))
        throw std::invalid_argument("cayley_orthogonal: skew-symmetric matrix required");
    const RatMatrix id = RatMatrix::identity(skew.rows());
    RatMatrix q;
    try {
        q = solve_matrix(id + skew, id - skew);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("cayley_orthogonal: I + S is singular");
    }
    if (q.transposed() * q != id)
        throw std::logic_error("cayley_orthogonal: QT Q != I (internal)");
    return q;
}

/// Exact Gram-Schmidt without normalization against the symmetric form b0.
/// Returns the orthogonal vectors together with their squared norms.
inline std::pair<std::vector<RatVector>, std::vector<Rational>> gram_schmidt(
    const std::vector<RatVector>& vectors, const RatMatrix& b0) {
    std::vector<RatVector> u;
    std::vector<Rational> norms;
    for (const auto& v : vectors) {
        RatVector w = v;
        for (size_t j = 0; j < u.size(); ++j) {
            const Rational c = bilinear_form(w, b0, u[j]) / norms[j];
            if (c.is_zero()) continue;
            for (size_t i = 0; i < w.size(); ++i) w[i] -= c * u[j][i];
        }
        Rational n = bilinear_form(w, b0, w);
        if (n.is_zero()) throw std::invalid_argument("gram_schmidt: dependent input vectors");
        u.push_back(std::move(w));
        norms.push_back(std::move(n));
    }
    return {std::move(u), std::move(norms)};
}

}  // namespace octomod

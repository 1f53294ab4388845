#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace octomod {

/// Exact rational scalar backed by GMP. Always canonical: reduced form,
/// denominator > 0. Arithmetic never rounds; division by zero throws.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(mpz_class(num), mpz_class(den));
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) {
        if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with an optional leading sign; no whitespace.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int signum() const { return sgn(v_); }
    Rational abs() const {
        Rational r;
        r.v_ = ::abs(v_);
        return r;
    }

    std::string str() const { return v_.get_str(); }
    // Lossy double view; the exact value is str().
    double approx() const { return v_.get_d(); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    const auto bad = [&]() -> Rational {
        throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
    };
    if (text.empty()) return bad();
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    const auto digits_only = [](std::string_view s, bool sign_ok) {
        if (s.empty()) return false;
        size_t i = 0;
        if (sign_ok && (s[0] == '+' || s[0] == '-')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits_only(num, true)) return bad();
    if (num[0] == '+') num.remove_prefix(1);  // mpz_set_str rejects a leading '+'
    mpz_class n(std::string(num), 10);
    mpz_class d(1);
    if (!den.empty() || text.find('/') != std::string_view::npos) {
        if (!digits_only(den, false)) return bad();
        d = mpz_class(std::string(den), 10);
        if (d == 0) throw std::domain_error("Rational: zero denominator");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace octomod

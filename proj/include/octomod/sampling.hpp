#pragma once

#include <cstdint>

#include "octomod/cayley_dickson.hpp"
#include "octomod/linalg.hpp"

namespace octomod {

/// Default seed for every sampled verification suite (CLI-overridable).
inline constexpr uint64_t kDefaultSeed = 0x0C7A11;

/// Deterministic, platform-independent generator (splitmix64). Coefficients
/// are drawn small -- numerators in [-3, 3], denominators in {1, 2} -- which
/// keeps exact arithmetic fast while still exercising the bilinear identities.
class SampleRng {
public:
    explicit SampleRng(uint64_t seed = kDefaultSeed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    int64_t uniform(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rational coefficient() {
        return Rational(static_cast<long>(uniform(-3, 3)), static_cast<long>(uniform(1, 2)));
    }

    Rational nonzero_coefficient() {
        for (;;) {
            Rational r = coefficient();
            if (!r.is_zero()) return r;
        }
    }

    CDElement element(int level) {
        CDElement x(level);
        for (size_t i = 0; i < x.dim(); ++i) x[i] = coefficient();
        return x;
    }

    CDElement octonion() { return element(3); }

    RatVector vector(size_t dim) {
        RatVector v(dim);
        for (auto& e : v) e = coefficient();
        return v;
    }

    RatVector nonzero_vector(size_t dim) {
        for (;;) {
            RatVector v = vector(dim);
            if (!is_zero(v)) return v;
        }
    }

    RatMatrix skew_matrix(size_t n) {
        RatMatrix s(n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = r + 1; c < n; ++c) {
                const Rational e(static_cast<long>(uniform(-2, 2)), static_cast<long>(uniform(1, 2)));
                s(r, c) = e;
                s(c, r) = -e;
            }
        return s;
    }

private:
    uint64_t state_;
};

}  // namespace octomod

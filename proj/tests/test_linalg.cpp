#include <catch2/catch_amalgamated.hpp>

#include "octomod/cayley_dickson.hpp"
#include "octomod/linalg.hpp"
#include "octomod/sampling.hpp"

using namespace octomod;

namespace {

RatMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Rational(rows[r][c]);
    return m;
}

RatMatrix random_matrix(SampleRng& rng, size_t rows, size_t cols) {
    RatMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m(r, c) = rng.coefficient();
    return m;
}

}  // namespace

TEST_CASE("nullspace on the spec'd small cases") {
    CHECK(nullspace(RatMatrix::identity(2)).empty());

    const auto basis = nullspace(from_rows({{1, -1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == RatVector{Rational(1), Rational(1)});
}

TEST_CASE("nullspace vectors are exact kernel elements, first nonzero = 1") {
    SampleRng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const size_t rows = size_t(rng.uniform(1, 7)), cols = size_t(rng.uniform(1, 9));
        const RatMatrix m = random_matrix(rng, rows, cols);
        const auto basis = nullspace(m);
        CHECK(rank(m) + basis.size() == cols);
        for (const auto& v : basis) {
            CHECK(is_zero(m * v));
            for (const auto& e : v) {
                if (e.is_zero()) continue;
                CHECK(e.is_one());
                break;
            }
        }
    }
}

TEST_CASE("stacked associator constraints of the regular octonion module") {
    // All (pq)x - p(qx) rows over ordered basis pairs: 56 pairs x 8 rows.
    // Its kernel is the real line: the nucleus of O itself.
    const auto& tab = OctonionTable::get();
    const auto mult_matrix = [&](int i) {
        RatMatrix m(8, 8);
        for (int c = 0; c < 8; ++c) {
            const auto e = tab.mul[i][c];
            m(e.index, c) = Rational(e.sign);
        }
        return m;
    };
    RatMatrix stacked(448, 8);
    size_t row = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (i == j) continue;
            const auto e = tab.mul[i][j];
            const RatMatrix block =
                Rational(e.sign) * mult_matrix(e.index) - mult_matrix(i) * mult_matrix(j);
            for (size_t r = 0; r < 8; ++r)
                for (size_t c = 0; c < 8; ++c) stacked(row + r, c) = block(r, c);
            row += 8;
        }
    REQUIRE(row == 448);
    const auto basis = nullspace(stacked);
    REQUIRE(basis.size() == 1);
    RatVector real_line(8);
    real_line[0] = 1;
    CHECK(basis[0] == real_line);
}

TEST_CASE("solve") {
    const RatMatrix id = RatMatrix::identity(3);
    const RatVector b{Rational(1), Rational(-2), Rational(1, 3)};
    CHECK(solve(id, b) == b);

    const auto half = solve(from_rows({{2}}), RatVector{Rational(1)});
    REQUIRE(half.has_value());
    CHECK((*half)[0] == Rational(1, 2));

    CHECK_FALSE(solve(from_rows({{1}, {1}}), RatVector{Rational(1), Rational(2)}).has_value());

    SampleRng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const size_t rows = size_t(rng.uniform(1, 6)), cols = size_t(rng.uniform(1, 6));
        const RatMatrix m = random_matrix(rng, rows, cols);
        const RatVector rhs = m * rng.vector(cols);  // consistent by construction
        const auto x = solve(m, rhs);
        REQUIRE(x.has_value());
        CHECK(m * *x == rhs);
    }
}

TEST_CASE("cayley transform of skew matrices") {
    CHECK(cayley_orthogonal(RatMatrix(3, 3)) == RatMatrix::identity(3));

    // S = [[0,1],[-1,0]]: (I-S)(I+S)^{-1} computed by exact solve.
    RatMatrix s(2, 2);
    s(0, 1) = 1;
    s(1, 0) = -1;
    const RatMatrix q = cayley_orthogonal(s);
    RatMatrix expected(2, 2);
    expected(0, 1) = -1;
    expected(1, 0) = 1;
    CHECK(q == expected);

    RatMatrix not_skew(2, 2);
    not_skew(0, 0) = 1;
    CHECK_THROWS_AS(cayley_orthogonal(not_skew), std::invalid_argument);
    CHECK_THROWS_AS(cayley_orthogonal(RatMatrix(2, 3)), std::invalid_argument);

    SampleRng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const size_t n = size_t(rng.uniform(2, 16));
        const RatMatrix qq = cayley_orthogonal(rng.skew_matrix(n));
        CHECK(qq.transposed() * qq == RatMatrix::identity(n));
    }
}

TEST_CASE("positive definiteness") {
    CHECK(is_positive_definite(RatMatrix::identity(4)));
    RatMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 3;
    m(1, 0) = 3;
    m(1, 1) = 2;  // eigenvalues 5, -1
    CHECK_FALSE(is_positive_definite(m));
    m(1, 1) = 5;  // now diagonally dominant
    CHECK(is_positive_definite(m));

    SampleRng rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        const size_t n = size_t(rng.uniform(1, 6));
        const RatMatrix a = random_matrix(rng, n, n);
        const RatMatrix g = a.transposed() * a;  // PSD; PD iff a invertible
        const bool invertible = rank(a) == n;
        CHECK(is_positive_definite(g) == invertible);
    }
}

TEST_CASE("gram-schmidt without normalization") {
    SampleRng rng(25);
    const RatMatrix b0 = RatMatrix::identity(6);
    std::vector<RatVector> vs;
    for (int i = 0; i < 4; ++i) vs.push_back(rng.nonzero_vector(6));
    if (rank([&] {
            RatMatrix m(4, 6);
            for (size_t r = 0; r < 4; ++r) m.set_row(r, vs[r]);
            return m;
        }()) == 4) {
        const auto [u, norms] = gram_schmidt(vs, b0);
        for (size_t i = 0; i < u.size(); ++i) {
            CHECK(bilinear_form(u[i], b0, u[i]) == norms[i]);
            CHECK(norms[i].signum() > 0);
            for (size_t j = 0; j < i; ++j) CHECK(bilinear_form(u[i], b0, u[j]).is_zero());
        }
    }
    // dependent input rejected
    std::vector<RatVector> dep{vs[0], vs[0]};
    CHECK_THROWS_AS(gram_schmidt(dep, b0), std::invalid_argument);
}

TEST_CASE("matrix inverse and products") {
    SampleRng rng(26);
    for (int trial = 0; trial < 20; ++trial) {
        const size_t n = size_t(rng.uniform(1, 6));
        RatMatrix a = random_matrix(rng, n, n);
        if (rank(a) < n) continue;
        CHECK(a * inverse(a) == RatMatrix::identity(n));
    }
    RatMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(1, 0) = 1;
    CHECK_THROWS_AS(inverse(singular), std::domain_error);
}

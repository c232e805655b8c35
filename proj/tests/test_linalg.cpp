// Exact dense linear algebra: RREF, rank, kernels, solves, projections.

#include "helpers.hpp"

#include "lck/linalg.hpp"

using lck::Matrix;
using lck::Rational;
using lck::Scalar;

namespace {

Matrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = rows[r][c];
    return m;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (auto& entry : m.entries) entry = lck_test::random_scalar(rng);
    return m;
}

}  // namespace

TEST_CASE("rref computes the canonical reduced form") {
    Matrix m = from_rows({{Scalar(1), Scalar(2), Scalar(3)},
                          {Scalar(2), Scalar(4), Scalar(7)},
                          {Scalar(1), Scalar(2), Scalar(4)}});
    std::vector<std::size_t> pivots;
    const std::size_t r = lck::rref_in_place(m, &pivots);
    CHECK(r == 2);
    CHECK(pivots == std::vector<std::size_t>{0, 2});
    CHECK(m == from_rows({{Scalar(1), Scalar(2), Scalar(0)},
                          {Scalar(0), Scalar(0), Scalar(1)},
                          {Scalar(0), Scalar(0), Scalar(0)}}));
}

TEST_CASE("rank handles Gaussian-rational entries") {
    const Scalar i = Scalar::i();
    // Second row is i times the first: rank 1.
    Matrix m = from_rows({{Scalar(1), i}, {i, Scalar(-1)}});
    CHECK(lck::rank(m) == 1);

    Matrix full = from_rows({{Scalar(1), i}, {i, Scalar(1)}});
    CHECK(lck::rank(full) == 2);

    CHECK(lck::rank(Matrix()) == 0);
    CHECK(lck::rank(Matrix(3, 0)) == 0);
    CHECK(lck::rank(Matrix::identity(4)) == 4);
}

TEST_CASE("kernel basis follows the free-column contract") {
    const Matrix m = from_rows({{Scalar(1), Scalar(2), Scalar(3)},
                                {Scalar(0), Scalar(0), Scalar(1)}});
    const auto kernel = lck::kernel_basis(m);
    REQUIRE(kernel.size() == 1);
    // Free column 1 carries entry 1; pivot entries are back-substituted.
    CHECK(kernel[0] == std::vector<Scalar>{Scalar(-2), Scalar(1), Scalar(0)});

    auto rng = lck_test::fixed_rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_matrix(rng, 3, 5);
        const auto basis = lck::kernel_basis(a);
        CHECK(basis.size() == 5 - lck::rank(a));
        for (const auto& v : basis) {
            const auto image = a.apply(v);
            for (const auto& entry : image) CHECK(entry == Scalar());
        }
    }
}

TEST_CASE("solve_linear returns the zero-free-variable solution") {
    const Matrix m = from_rows({{Scalar(1), Scalar(2), Scalar(3)},
                                {Scalar(0), Scalar(0), Scalar(1)}});
    const auto solution =
        lck::solve_linear(m, {Scalar(7), Scalar(1)});
    REQUIRE(solution.has_value());
    // x = (4, 0, 1): the free column 1 is zeroed.
    CHECK(*solution == std::vector<Scalar>{Scalar(4), Scalar(0), Scalar(1)});

    // Inconsistent system.
    const Matrix bad = from_rows({{Scalar(1), Scalar(1)},
                                  {Scalar(2), Scalar(2)}});
    CHECK_FALSE(lck::solve_linear(bad, {Scalar(0), Scalar(1)}).has_value());

    CHECK_THROWS_AS(lck::solve_linear(bad, {Scalar(0)}), lck::domain_error);
}

TEST_CASE("solve_linear solves every consistent random system") {
    auto rng = lck_test::fixed_rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        const Matrix a = random_matrix(rng, 4, 3);
        std::vector<Scalar> x(3);
        for (auto& entry : x) entry = lck_test::random_scalar(rng);
        const auto b = a.apply(x);
        const auto solution = lck::solve_linear(a, b);
        REQUIRE(solution.has_value());
        CHECK(a.apply(*solution) == b);
    }
}

TEST_CASE("projection_coefficients realises the orthogonal projection") {
    auto rng = lck_test::fixed_rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix v = random_matrix(rng, 5, 2);
        std::vector<Scalar> b(5);
        for (auto& entry : b) entry = lck_test::random_scalar(rng);

        const auto coeffs = lck::projection_coefficients(v, b);
        REQUIRE(coeffs.size() == 2);
        std::vector<Scalar> residual = b;
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                residual[r] -= v.at(r, c) * coeffs[c];

        // The residual is orthogonal to every column: V^* r = 0.
        const auto vh = v.conj_transpose();
        for (const auto& entry : vh.apply(residual)) CHECK(entry == Scalar());

        // Projecting an element of the span returns it exactly.
        const auto again = lck::projection_coefficients(v, [&] {
            std::vector<Scalar> in_span(5);
            for (std::size_t r = 0; r < 5; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    in_span[r] += v.at(r, c) * coeffs[c];
            return in_span;
        }());
        std::vector<Scalar> reproj(5);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                reproj[r] += v.at(r, c) * again[c];
        std::vector<Scalar> proj(5);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                proj[r] += v.at(r, c) * coeffs[c];
        CHECK(reproj == proj);
    }
}

TEST_CASE("conj_transpose and apply") {
    const Scalar i = Scalar::i();
    const Matrix m = from_rows({{Scalar(1), i}, {Scalar(2), Scalar(3) * i}});
    const Matrix mh = m.conj_transpose();
    CHECK(mh.at(0, 0) == Scalar(1));
    CHECK(mh.at(1, 0) == -i);
    CHECK(mh.at(0, 1) == Scalar(2));
    CHECK(mh.at(1, 1) == Scalar(-3) * i);

    const auto y = m.apply({Scalar(1), Scalar(1)});
    CHECK(y == std::vector<Scalar>{Scalar(1) + i, Scalar(2) + Scalar(3) * i});
    CHECK_THROWS_AS(m.apply({Scalar(1)}), lck::domain_error);
}

TEST_CASE("linear algebra is deterministic") {
    auto rng = lck_test::fixed_rng(5);
    const Matrix a = random_matrix(rng, 4, 6);
    const auto k1 = lck::kernel_basis(a);
    const auto k2 = lck::kernel_basis(a);
    CHECK(k1 == k2);
}

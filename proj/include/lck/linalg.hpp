#ifndef LCK_LINALG_HPP
#define LCK_LINALG_HPP

// Exact dense linear algebra over the Gaussian rationals.
//
// Everything downstream (cohomology dimensions, primitives, harmonic
// projections, deformation solves) reduces to the three routines here:
//
//   rref_in_place — deterministic reduced row echelon form,
//   kernel_basis  — canonical nullspace basis,
//   solve_linear  — one deterministic solution of A x = b, if any.
//
// Determinism contract (covered by golden tests): pivots are chosen by
// scanning columns left to right and taking the FIRST row with a nonzero
// entry; kernel vectors are listed by ascending free column, each carrying
// entry 1 at its free column; solve_linear zeroes every free variable.
// Identical inputs therefore always yield identical certificates, which is
// what makes the CLI reports byte-stable.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lck/error.hpp"
#include "lck/scalar.hpp"

namespace lck {

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> entries;  // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Scalar& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const {
        return entries[r * cols + c];
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
        return m;
    }

    // Conjugate transpose (the adjoint with respect to the standard
    // Hermitian pairing on coordinate vectors).
    Matrix conj_transpose() const {
        Matrix out(cols, rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                out.at(c, r) = at(r, c).conj();
        return out;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
        if (x.size() != cols) throw domain_error("matrix/vector size mismatch");
        std::vector<Scalar> y(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            Scalar acc;
            for (std::size_t c = 0; c < cols; ++c) acc += at(r, c) * x[c];
            y[r] = acc;
        }
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

// Reduced row echelon form, in place.  Returns the rank; if pivot_cols is
// non-null it receives the pivot column indices in ascending order.
inline std::size_t rref_in_place(Matrix& m,
                                 std::vector<std::size_t>* pivot_cols = nullptr) {
    if (pivot_cols) pivot_cols->clear();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        // First nonzero entry at or below the current row.
        std::size_t src = pivot_row;
        while (src < m.rows && m.at(src, col).is_zero()) ++src;
        if (src == m.rows) continue;
        if (src != pivot_row) {
            for (std::size_t c = 0; c < m.cols; ++c)
                std::swap(m.at(src, c), m.at(pivot_row, c));
        }
        const Scalar inv_pivot = Scalar(1) / m.at(pivot_row, col);
        for (std::size_t c = col; c < m.cols; ++c)
            m.at(pivot_row, c) *= inv_pivot;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == pivot_row || m.at(r, col).is_zero()) continue;
            const Scalar factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) -= factor * m.at(pivot_row, c);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++pivot_row;
    }
    return pivot_row;
}

inline std::size_t rank(Matrix m) { return rref_in_place(m); }

// Canonical nullspace basis of A.  One vector per free column, ascending;
// the vector for free column f has entry 1 at f and -R[i][f] at the i-th
// pivot column of the RREF R.
inline std::vector<std::vector<Scalar>> kernel_basis(Matrix m) {
    std::vector<std::size_t> pivots;
    rref_in_place(m, &pivots);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(m.cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Deterministic solution of A x = b (free variables zeroed), or nullopt if
// the system is inconsistent.
inline std::optional<std::vector<Scalar>> solve_linear(
    const Matrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows) throw domain_error("solve_linear: size mismatch");
    Matrix aug(a.rows, a.cols + 1);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols) = b[r];
    }
    std::vector<std::size_t> pivots;
    rref_in_place(aug, &pivots);
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
    std::vector<Scalar> x(a.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug.at(i, a.cols);
    return x;
}

// Solves the least-structure projection problem: given column vectors
// v_1..v_k (columns of V) spanning a subspace S of a Hermitian coordinate
// space, returns the coefficient vector c of the orthogonal projection
// proj_S(b) = V c, via the normal equations (V* V) c = V* b.  The Gram
// matrix is positive semi-definite; the system is always consistent.
inline std::vector<Scalar> projection_coefficients(const Matrix& v,
                                                   const std::vector<Scalar>& b) {
    const Matrix vh = v.conj_transpose();
    Matrix gram(v.cols, v.cols);
    for (std::size_t r = 0; r < v.cols; ++r)
        for (std::size_t c = 0; c < v.cols; ++c) {
            Scalar acc;
            for (std::size_t k = 0; k < v.rows; ++k)
                acc += vh.at(r, k) * v.at(k, c);
            gram.at(r, c) = acc;
        }
    const std::vector<Scalar> rhs = vh.apply(b);
    const auto solution = solve_linear(gram, rhs);
    if (!solution)
        throw error("projection_coefficients: normal equations inconsistent");
    return *solution;
}

}  // namespace lck

#endif  // LCK_LINALG_HPP

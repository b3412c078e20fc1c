#pragma once

#include <homkit/error.hpp>
#include <homkit/matrix.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace homkit {

struct LinearSolution {
    Matrix solution;               // one particular solution, free variables zero
    std::vector<Matrix> kernel;    // kernel basis columns, reduced echelon order
};

namespace detail {

struct Echelon {
    Matrix reduced;                 // RREF of the input
    std::vector<std::size_t> pivots; // pivot column per pivot row
};

// Gauss–Jordan with first-nonzero pivoting in column order. Exact arithmetic
// needs no magnitude pivoting, and this choice keeps output deterministic.
inline Echelon rref(Matrix m) {
    Echelon e;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m.at(r, col).is_zero()) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(r, j), m.at(pivot_row, j));
        Scalar inv = m.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row) continue;
            Scalar f = m.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(pivot_row, j);
        }
        e.pivots.push_back(col);
        ++pivot_row;
    }
    e.reduced = std::move(m);
    return e;
}

} // namespace detail

// Solves A x = b for an m×n matrix A and m×k right-hand side. Returns the
// particular solution in reduced-echelon-pivot form plus a kernel basis, or
// nothing when the system is inconsistent.
inline std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("solve_linear");
    if (a.rows() != b.rows())
        throw ShapeMismatch("solve_linear " + a.shape_string() + " vs rhs " + b.shape_string());

    const std::size_t n = a.cols(), k = b.cols();
    Matrix aug(a.field(), a.rows(), n + k);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < k; ++j) aug.at(i, n + j) = b.at(i, j);
    }
    detail::Echelon e = detail::rref(std::move(aug));

    // consistency: no pivot may fall in the RHS block
    std::vector<std::size_t> pivots;
    for (std::size_t p = 0; p < e.pivots.size(); ++p) {
        if (e.pivots[p] >= n) return std::nullopt;
        pivots.push_back(e.pivots[p]);
    }

    LinearSolution out;
    out.solution = Matrix(a.field(), n, k);
    for (std::size_t p = 0; p < pivots.size(); ++p)
        for (std::size_t j = 0; j < k; ++j)
            out.solution.at(pivots[p], j) = e.reduced.at(p, n + j);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Matrix v(a.field(), n, 1);
        v.at(free_col, 0) = Scalar::one(a.field());
        for (std::size_t p = 0; p < pivots.size(); ++p)
            v.at(pivots[p], 0) = -e.reduced.at(p, free_col);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

// Kernel basis of A, reduced echelon order.
inline std::vector<Matrix> kernel_basis(const Matrix& a) {
    auto sol = solve_linear(a, Matrix::zero(a.field(), a.rows(), 1));
    return sol->kernel;
}

inline std::size_t rank(const Matrix& a) {
    return detail::rref(a).pivots.size();
}

inline std::optional<Matrix> try_inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw ShapeMismatch("inverse of " + a.shape_string());
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar::one(a.field());
    }
    detail::Echelon e = detail::rref(std::move(aug));
    if (e.pivots.size() != n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.reduced.at(i, n + j);
    return inv;
}

inline Matrix inverse(const Matrix& a) {
    auto inv = try_inverse(a);
    if (!inv) throw SingularMatrix("matrix " + a.shape_string());
    return *inv;
}

// a^k for integer k; negative powers go through the exact inverse.
inline Matrix matrix_power(const Matrix& a, long long k) {
    if (a.rows() != a.cols()) throw ShapeMismatch("power of " + a.shape_string());
    Matrix base = k >= 0 ? a : inverse(a);
    long long e = k >= 0 ? k : -k;
    Matrix r = Matrix::identity(a.field(), a.rows());
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

} // namespace homkit

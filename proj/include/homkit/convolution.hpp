#pragma once

#include <homkit/linsolve.hpp>
#include <homkit/structures.hpp>

#include <optional>

namespace homkit {

// f * g = μ_A ∘ (f ⊗ g) ∘ Δ_C for linear maps C -> A.
inline Matrix convolve(const HomCoalgebra& c, const HomAlgebra& a, const Matrix& f,
                       const Matrix& g) {
    if (f.rows() != a.dim || f.cols() != c.dim || g.rows() != a.dim || g.cols() != c.dim)
        throw ShapeMismatch("convolve: maps must be dim(A) x dim(C)");
    if (f.field() != c.field || a.field != c.field) throw FieldMismatch("convolve");
    return a.mul * kron(f, g) * c.comul;
}

// unit of the convolution algebra Hom(C, A)
inline Matrix convolution_unit(const HomCoalgebra& c, const HomAlgebra& a) {
    return a.unit * c.counit;
}

enum class ConvInvertStatus { TwoSided, OneSidedOnly, None };

struct ConvInverse {
    ConvInvertStatus status = ConvInvertStatus::None;
    std::optional<Matrix> inverse; // present only when two-sided

    bool ok() const { return status == ConvInvertStatus::TwoSided; }
};

// Solves the linear system f*g = g*f = η∘ε for g. Convolution in the Hom
// setting need not be associative, so both sides are solved simultaneously;
// a right-only (or left-only) solution is reported but rejected.
inline ConvInverse conv_invert(const HomCoalgebra& c, const HomAlgebra& a, const Matrix& f) {
    const std::size_t rows = a.dim, cols = c.dim;
    const std::size_t unknowns = rows * cols;
    const FieldSpec field = c.field;

    // L_right: vec(g) -> vec(f*g); L_left: vec(g) -> vec(g*f); row-major vec.
    Matrix l_right(field, unknowns, unknowns);
    Matrix l_left(field, unknowns, unknowns);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Matrix e(field, rows, cols);
            e.at(i, j) = Scalar::one(field);
            Matrix fr = convolve(c, a, f, e);
            Matrix fl = convolve(c, a, e, f);
            for (std::size_t r2 = 0; r2 < rows; ++r2)
                for (std::size_t c2 = 0; c2 < cols; ++c2) {
                    l_right.at(r2 * cols + c2, i * cols + j) = fr.at(r2, c2);
                    l_left.at(r2 * cols + c2, i * cols + j) = fl.at(r2, c2);
                }
        }

    Matrix target = convolution_unit(c, a);
    Matrix rhs(field, unknowns, 1);
    for (std::size_t r2 = 0; r2 < rows; ++r2)
        for (std::size_t c2 = 0; c2 < cols; ++c2)
            rhs.at(r2 * cols + c2, 0) = target.at(r2, c2);

    // stacked two-sided system
    Matrix stacked(field, 2 * unknowns, unknowns);
    Matrix stacked_rhs(field, 2 * unknowns, 1);
    for (std::size_t r2 = 0; r2 < unknowns; ++r2) {
        for (std::size_t c2 = 0; c2 < unknowns; ++c2) {
            stacked.at(r2, c2) = l_right.at(r2, c2);
            stacked.at(unknowns + r2, c2) = l_left.at(r2, c2);
        }
        stacked_rhs.at(r2, 0) = rhs.at(r2, 0);
        stacked_rhs.at(unknowns + r2, 0) = rhs.at(r2, 0);
    }

    ConvInverse out;
    if (auto sol = solve_linear(stacked, stacked_rhs)) {
        Matrix g(field, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) g.at(i, j) = sol->solution.at(i * cols + j, 0);
        out.status = ConvInvertStatus::TwoSided;
        out.inverse = std::move(g);
        return out;
    }
    if (solve_linear(l_right, rhs) || solve_linear(l_left, rhs))
        out.status = ConvInvertStatus::OneSidedOnly;
    return out;
}

// Convenience: throws when no two-sided inverse exists.
inline Matrix conv_inverse_or_throw(const HomCoalgebra& c, const HomAlgebra& a, const Matrix& f,
                                    const std::string& what) {
    ConvInverse inv = conv_invert(c, a, f);
    if (!inv.ok())
        throw NotInvertible(what + (inv.status == ConvInvertStatus::OneSidedOnly
                                        ? " (one-sided only)"
                                        : " (no solution)"));
    return *inv.inverse;
}

} // namespace homkit

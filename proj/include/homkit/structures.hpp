#pragma once

#include <homkit/error.hpp>
#include <homkit/linsolve.hpp>
#include <homkit/matrix.hpp>
#include <homkit/tensor3.hpp>
#include <homkit/tensorval.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace homkit {

// Unital Hom-associative algebra in structure constants. mul is the
// matricized product A⊗A -> A (dim × dim²), unit a column, alpha the
// structure map with its exact inverse precomputed (the crossed-product and
// cocycle formulas need powers down to α⁻⁷).
struct HomAlgebra {
    FieldSpec field;
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    Matrix mul;   // dim × dim²
    Matrix unit;  // dim × 1
    Matrix alpha; // dim × dim
    Matrix alpha_inv;

    HomAlgebra() = default;

    HomAlgebra(FieldSpec f, std::vector<std::string> labels, Matrix mul_map, Matrix unit_col,
               Matrix alpha_map)
        : field(f), dim(labels.size()), basis_labels(std::move(labels)), mul(std::move(mul_map)),
          unit(std::move(unit_col)), alpha(std::move(alpha_map)) {
        if (mul.rows() != dim || mul.cols() != dim * dim)
            throw ShapeMismatch("algebra mul " + mul.shape_string());
        if (unit.rows() != dim || unit.cols() != 1) throw ShapeMismatch("algebra unit");
        if (alpha.rows() != dim || alpha.cols() != dim) throw ShapeMismatch("algebra alpha");
        alpha_inv = inverse(alpha);
    }

    static HomAlgebra from_tensor(FieldSpec f, std::vector<std::string> labels,
                                  const Tensor3& mul_t, Matrix unit_col, Matrix alpha_map) {
        return HomAlgebra(f, std::move(labels), mul_t.as_bilinear_map(), std::move(unit_col),
                          std::move(alpha_map));
    }

    Tensor3 mul_tensor() const { return Tensor3::from_bilinear_map(mul, dim, dim); }

    Matrix alpha_pow(long long k) const {
        if (k == 0) return Matrix::identity(field, dim);
        Matrix base = k > 0 ? alpha : alpha_inv;
        long long n = k > 0 ? k : -k;
        Matrix r = base;
        for (long long i = 1; i < n; ++i) r = r * base;
        return r;
    }

    // product of two concrete elements
    Matrix multiply(const Matrix& a, const Matrix& b) const {
        return mul * kron(a, b);
    }
};

struct HomCoalgebra {
    FieldSpec field;
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    Matrix comul;  // dim² × dim
    Matrix counit; // 1 × dim
    Matrix alpha;  // dim × dim
    Matrix alpha_inv;

    HomCoalgebra() = default;

    HomCoalgebra(FieldSpec f, std::vector<std::string> labels, Matrix comul_map, Matrix counit_row,
                 Matrix alpha_map)
        : field(f), dim(labels.size()), basis_labels(std::move(labels)),
          comul(std::move(comul_map)), counit(std::move(counit_row)), alpha(std::move(alpha_map)) {
        if (comul.rows() != dim * dim || comul.cols() != dim)
            throw ShapeMismatch("coalgebra comul " + comul.shape_string());
        if (counit.rows() != 1 || counit.cols() != dim) throw ShapeMismatch("coalgebra counit");
        if (alpha.rows() != dim || alpha.cols() != dim) throw ShapeMismatch("coalgebra alpha");
        alpha_inv = inverse(alpha);
    }

    static HomCoalgebra from_tensor(FieldSpec f, std::vector<std::string> labels,
                                    const Tensor3& comul_t, Matrix counit_row, Matrix alpha_map) {
        return HomCoalgebra(f, std::move(labels), comul_t.as_splitting_map(),
                            std::move(counit_row), std::move(alpha_map));
    }

    Tensor3 comul_tensor() const { return Tensor3::from_splitting_map(comul, dim, dim); }

    Matrix alpha_pow(long long k) const {
        if (k == 0) return Matrix::identity(field, dim);
        Matrix base = k > 0 ? alpha : alpha_inv;
        long long n = k > 0 ? k : -k;
        Matrix r = base;
        for (long long i = 1; i < n; ++i) r = r * base;
        return r;
    }
};

struct HomBialgebra {
    FieldSpec field;
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    Matrix mul, unit, comul, counit, alpha, alpha_inv;

    HomBialgebra() = default;

    HomBialgebra(HomAlgebra a, HomCoalgebra c)
        : field(a.field), dim(a.dim), basis_labels(a.basis_labels), mul(std::move(a.mul)),
          unit(std::move(a.unit)), comul(std::move(c.comul)), counit(std::move(c.counit)),
          alpha(a.alpha), alpha_inv(a.alpha_inv) {
        if (a.dim != c.dim || a.field != c.field) throw ShapeMismatch("bialgebra parts disagree");
        if (a.alpha != c.alpha) throw ShapeMismatch("bialgebra structure maps disagree");
    }

    HomAlgebra algebra() const { return HomAlgebra(field, basis_labels, mul, unit, alpha); }
    HomCoalgebra coalgebra() const {
        return HomCoalgebra(field, basis_labels, comul, counit, alpha);
    }

    Matrix alpha_pow(long long k) const { return algebra().alpha_pow(k); }
};

struct HomHopfAlgebra {
    HomBialgebra bi;
    Matrix antipode;
    std::optional<Matrix> antipode_inv;

    HomHopfAlgebra() = default;

    HomHopfAlgebra(HomBialgebra b, Matrix s) : bi(std::move(b)), antipode(std::move(s)) {
        if (antipode.rows() != bi.dim || antipode.cols() != bi.dim)
            throw ShapeMismatch("antipode shape");
        antipode_inv = try_inverse(antipode);
    }

    const FieldSpec& field() const { return bi.field; }
    std::size_t dim() const { return bi.dim; }
    const Matrix& mul() const { return bi.mul; }
    const Matrix& unit() const { return bi.unit; }
    const Matrix& comul() const { return bi.comul; }
    const Matrix& counit() const { return bi.counit; }
    const Matrix& alpha() const { return bi.alpha; }
    const Matrix& alpha_inv() const { return bi.alpha_inv; }
    Matrix alpha_pow(long long k) const { return bi.alpha_pow(k); }

    HomAlgebra algebra() const { return bi.algebra(); }
    HomCoalgebra coalgebra() const { return bi.coalgebra(); }
};

// --- tensor-product carriers ------------------------------------------------

// Componentwise Hom-algebra on A⊗B: (a⊗b)(a'⊗b') = aa' ⊗ bb', structure
// map α_A ⊗ α_B.
inline HomAlgebra tensor_algebra(const HomAlgebra& a, const HomAlgebra& b) {
    if (a.field != b.field) throw FieldMismatch("tensor_algebra");
    std::vector<std::string> labels;
    labels.reserve(a.dim * b.dim);
    for (const auto& la : a.basis_labels)
        for (const auto& lb : b.basis_labels) labels.push_back(la + "(x)" + lb);
    // reorder (a, b, a', b') -> (a, a', b, b') then multiply componentwise
    Matrix perm = factor_permutation(a.field, {a.dim, b.dim, a.dim, b.dim}, {0, 2, 1, 3});
    Matrix mul = kron(a.mul, b.mul) * perm;
    return HomAlgebra(a.field, std::move(labels), std::move(mul), kron(a.unit, b.unit),
                      kron(a.alpha, b.alpha));
}

// Componentwise Hom-coalgebra on C⊗D: Δ(c⊗d) = (c₁⊗d₁) ⊗ (c₂⊗d₂). This is
// the coalgebra underlying convolution of bilinear forms.
inline HomCoalgebra tensor_coalgebra(const HomCoalgebra& c, const HomCoalgebra& d) {
    if (c.field != d.field) throw FieldMismatch("tensor_coalgebra");
    std::vector<std::string> labels;
    labels.reserve(c.dim * d.dim);
    for (const auto& lc : c.basis_labels)
        for (const auto& ld : d.basis_labels) labels.push_back(lc + "(x)" + ld);
    // kron(comul_c, comul_d) lands in (c1 c2 d1 d2); reorder to (c1 d1 c2 d2)
    Matrix perm = factor_permutation(c.field, {c.dim, c.dim, d.dim, d.dim}, {0, 2, 1, 3});
    Matrix comul = perm * kron(c.comul, d.comul);
    return HomCoalgebra(c.field, std::move(labels), std::move(comul), kron(c.counit, d.counit),
                        kron(c.alpha, d.alpha));
}

// The ground field as a one-dimensional Hom-algebra / Hom-coalgebra; the
// target of scalar-valued cocycles and functionals.
inline HomAlgebra ground_algebra(FieldSpec f) {
    Matrix mul(f, 1, 1);
    mul.at(0, 0) = Scalar::one(f);
    return HomAlgebra(f, {"1"}, mul, Matrix::identity(f, 1), Matrix::identity(f, 1));
}

inline HomCoalgebra ground_coalgebra(FieldSpec f) {
    Matrix comul(f, 1, 1);
    comul.at(0, 0) = Scalar::one(f);
    return HomCoalgebra(f, {"1"}, comul, Matrix::identity(f, 1), Matrix::identity(f, 1));
}

// --- Sweedler expansion helpers ----------------------------------------------

// Δ(v) as a rank-2 value: v₁ ⊗ v₂
inline TensorVal coprod(const HomCoalgebra& c, const TensorVal& v, std::size_t factor = 0) {
    return v.apply({factor}, c.comul, {c.dim, c.dim});
}

// (Δ⊗id)Δ(v): v₁₁ ⊗ v₁₂ ⊗ v₂
inline TensorVal coprod_left(const HomCoalgebra& c, const TensorVal& v) {
    return coprod(c, coprod(c, v, 0), 0);
}

// (id⊗Δ)Δ(v): v₁ ⊗ v₂₁ ⊗ v₂₂
inline TensorVal coprod_right(const HomCoalgebra& c, const TensorVal& v) {
    return coprod(c, coprod(c, v, 0), 1);
}

} // namespace homkit

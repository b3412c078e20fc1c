#pragma once

#include <homkit/error.hpp>
#include <homkit/matrix.hpp>

#include <cstddef>
#include <vector>

namespace homkit {

// Rank-3 array of scalars. Index conventions used throughout:
//   multiplication  t[i][j][k] : e_i · e_j   = Σ_k t[i][j][k] e_k
//   comultiplication t[i][j][k]: Δ(e_i)      = Σ   t[i][j][k] e_j ⊗ e_k
//   action          t[i][j][k] : h_i · a_j   = Σ_k t[i][j][k] a_k
//   right coaction  t[i][j][k] : ρ(b_i)      = Σ   b_j ⊗ h_k
//   left coaction   t[i][j][k] : ρ(c_i)      = Σ   h_j ⊗ c_k
class Tensor3 {
public:
    Tensor3() : field_(FieldSpec::rationals()), d1_(0), d2_(0), d3_(0) {}

    Tensor3(FieldSpec field, std::size_t d1, std::size_t d2, std::size_t d3)
        : field_(field), d1_(d1), d2_(d2), d3_(d3),
          data_(d1 * d2 * d3, Scalar::zero(field)) {}

    const FieldSpec& field() const { return field_; }
    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }
    std::size_t d3() const { return d3_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * d2_ + j) * d3_ + k];
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * d2_ + j) * d3_ + k];
    }

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.d3_ == b.d3_ && a.field_ == b.field_ &&
               a.data_ == b.data_;
    }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    // Bilinear-map matricization: V1⊗V2 -> V3, a d3 × (d1·d2) matrix.
    Matrix as_bilinear_map() const {
        Matrix m(field_, d3_, d1_ * d2_);
        for (std::size_t i = 0; i < d1_; ++i)
            for (std::size_t j = 0; j < d2_; ++j)
                for (std::size_t k = 0; k < d3_; ++k)
                    m.at(k, i * d2_ + j) = at(i, j, k);
        return m;
    }

    // Splitting-map matricization: V1 -> V2⊗V3, a (d2·d3) × d1 matrix.
    Matrix as_splitting_map() const {
        Matrix m(field_, d2_ * d3_, d1_);
        for (std::size_t i = 0; i < d1_; ++i)
            for (std::size_t j = 0; j < d2_; ++j)
                for (std::size_t k = 0; k < d3_; ++k)
                    m.at(j * d3_ + k, i) = at(i, j, k);
        return m;
    }

    static Tensor3 from_bilinear_map(const Matrix& m, std::size_t d1, std::size_t d2) {
        if (m.cols() != d1 * d2) throw ShapeMismatch("from_bilinear_map");
        Tensor3 t(m.field(), d1, d2, m.rows());
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d2; ++j)
                for (std::size_t k = 0; k < m.rows(); ++k)
                    t.at(i, j, k) = m.at(k, i * d2 + j);
        return t;
    }

    static Tensor3 from_splitting_map(const Matrix& m, std::size_t d2, std::size_t d3) {
        if (m.rows() != d2 * d3) throw ShapeMismatch("from_splitting_map");
        Tensor3 t(m.field(), m.cols(), d2, d3);
        for (std::size_t i = 0; i < m.cols(); ++i)
            for (std::size_t j = 0; j < d2; ++j)
                for (std::size_t k = 0; k < d3; ++k)
                    t.at(i, j, k) = m.at(j * d3 + k, i);
        return t;
    }

    // Contract the first two axes with column vectors: t(v, w) in V3.
    Matrix contract_pair(const Matrix& v, const Matrix& w) const {
        if (v.rows() != d1_ || w.rows() != d2_ || v.cols() != 1 || w.cols() != 1)
            throw ShapeMismatch("contract_pair");
        Matrix r(field_, d3_, 1);
        for (std::size_t i = 0; i < d1_; ++i) {
            if (v.at(i, 0).is_zero()) continue;
            for (std::size_t j = 0; j < d2_; ++j) {
                if (w.at(j, 0).is_zero()) continue;
                Scalar f = v.at(i, 0) * w.at(j, 0);
                for (std::size_t k = 0; k < d3_; ++k) r.at(k, 0) += f * at(i, j, k);
            }
        }
        return r;
    }

    // Apply a matrix along one axis (0, 1 or 2); Einstein contraction on
    // that index. The matrix maps the old axis dimension to a new one.
    Tensor3 contract_axis(std::size_t axis, const Matrix& m) const {
        std::size_t dims[3] = {d1_, d2_, d3_};
        if (axis > 2 || m.cols() != dims[axis]) throw ShapeMismatch("contract_axis");
        std::size_t nd[3] = {d1_, d2_, d3_};
        nd[axis] = m.rows();
        Tensor3 r(field_, nd[0], nd[1], nd[2]);
        for (std::size_t i = 0; i < d1_; ++i)
            for (std::size_t j = 0; j < d2_; ++j)
                for (std::size_t k = 0; k < d3_; ++k) {
                    const Scalar& s = at(i, j, k);
                    if (s.is_zero()) continue;
                    std::size_t old_idx[3] = {i, j, k};
                    for (std::size_t n = 0; n < m.rows(); ++n) {
                        const Scalar& f = m.at(n, old_idx[axis]);
                        if (f.is_zero()) continue;
                        std::size_t ni[3] = {i, j, k};
                        ni[axis] = n;
                        r.at(ni[0], ni[1], ni[2]) += f * s;
                    }
                }
        return r;
    }

private:
    FieldSpec field_;
    std::size_t d1_, d2_, d3_;
    std::vector<Scalar> data_;
};

} // namespace homkit

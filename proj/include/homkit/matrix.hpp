#pragma once

#include <homkit/error.hpp>
#include <homkit/field.hpp>

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace homkit {

// Dense matrix over an exact field. A linear map V -> W in fixed bases:
// column j holds the coordinates of the image of e_j.
class Matrix {
public:
    Matrix() : field_(FieldSpec::rationals()), rows_(0), cols_(0) {}

    Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

    static Matrix identity(FieldSpec field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
        return m;
    }

    static Matrix zero(FieldSpec field, std::size_t rows, std::size_t cols) {
        return Matrix(field, rows, cols);
    }

    // column vector with a single 1 entry
    static Matrix basis_column(FieldSpec field, std::size_t dim, std::size_t index) {
        Matrix m(field, dim, 1);
        m.at(index, 0) = Scalar::one(field);
        return m;
    }

    static Matrix from_rows(FieldSpec field,
                            std::initializer_list<std::initializer_list<long long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Matrix m(field, r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw ShapeMismatch("ragged row list");
            std::size_t j = 0;
            for (long long v : row) m.at(i, j++) = Scalar(field, v);
            ++i;
        }
        return m;
    }

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Scalar>& data() const { return data_; }

    bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
               a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b, "+");
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b, "-");
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend Matrix operator*(const Scalar& s, const Matrix& a) {
        Matrix r = a;
        for (auto& v : r.data_) v *= s;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.field_ != b.field_)
            throw FieldMismatch("matrix product over " + a.field_.to_string() + " and " +
                                b.field_.to_string());
        if (a.cols_ != b.rows_)
            throw ShapeMismatch("matrix product " + a.shape_string() + " * " + b.shape_string());
        Matrix r(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix column(std::size_t j) const {
        Matrix r(field_, rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
        return r;
    }

    void set_column(std::size_t j, const Matrix& col) {
        if (col.rows_ != rows_ || col.cols_ != 1) throw ShapeMismatch("set_column");
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = col.at(i, 0);
    }

    std::string shape_string() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    // Lexicographic comparison by entries, row-major; deterministic
    // tie-breaking for enumerations.
    friend bool operator<(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            if (a.data_[i] != b.data_[i]) return a.data_[i] < b.data_[i];
        }
        return false;
    }

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;

    void check_same_shape(const Matrix& o, const char* op) const {
        if (field_ != o.field_) throw FieldMismatch(std::string("matrix ") + op);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeMismatch(std::string("matrix ") + op + " " + shape_string() + " vs " +
                                o.shape_string());
    }
};

// Kronecker product: (a ⊗ b) acts on V⊗W with index v·dim(W) + w.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Scalar& v = a.at(i1, j1);
            if (v.is_zero()) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
                    const Scalar& w = b.at(i2, j2);
                    if (!w.is_zero())
                        r.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = v * w;
                }
        }
    return r;
}

inline Matrix kron(const Matrix& a, const Matrix& b, const Matrix& c) {
    return kron(kron(a, b), c);
}

// Permutation matrix reordering tensor factors: output slot s carries input
// factor perm[s]. in_dims are the input factor dimensions.
inline Matrix factor_permutation(FieldSpec field, const std::vector<std::size_t>& in_dims,
                                 const std::vector<std::size_t>& perm) {
    if (perm.size() != in_dims.size()) throw ShapeMismatch("factor_permutation");
    std::size_t total = 1;
    for (std::size_t d : in_dims) total *= d;
    Matrix m(field, total, total);
    std::vector<std::size_t> idx(in_dims.size(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        // decompose flat input index, row-major over in_dims
        std::size_t rest = flat;
        for (std::size_t k = in_dims.size(); k-- > 0;) {
            idx[k] = rest % in_dims[k];
            rest /= in_dims[k];
        }
        std::size_t out = 0;
        for (std::size_t s = 0; s < perm.size(); ++s) out = out * in_dims[perm[s]] + idx[perm[s]];
        m.at(out, flat) = Scalar::one(field);
    }
    return m;
}

// Flip V⊗W -> W⊗V.
inline Matrix tensor_flip(FieldSpec field, std::size_t dv, std::size_t dw) {
    return factor_permutation(field, {dv, dw}, {1, 0});
}

} // namespace homkit

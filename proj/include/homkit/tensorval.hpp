#pragma once

#include <homkit/error.hpp>
#include <homkit/matrix.hpp>

#include <cstddef>
#include <numeric>
#include <vector>

namespace homkit {

// An element of V_{d1} ⊗ ... ⊗ V_{dk}, stored dense in row-major index order.
// Rank 0 is a plain scalar. This is the workhorse for evaluating structure
// formulas: comultiplications expand a factor in place, multiplications and
// cocycles contract chosen factors, exactly as the formula is parenthesized.
class TensorVal {
public:
    explicit TensorVal(FieldSpec field)
        : field_(field), dims_{}, data_{Scalar::one(field)} {}

    TensorVal(FieldSpec field, std::vector<std::size_t> dims)
        : field_(field), dims_(std::move(dims)),
          data_(total(dims_), Scalar::zero(field)) {}

    // e_{idx} in a single factor of dimension dim
    static TensorVal basis(FieldSpec field, std::size_t dim, std::size_t idx) {
        TensorVal t(field, {dim});
        t.data_[idx] = Scalar::one(field);
        return t;
    }

    static TensorVal from_column(const Matrix& col) {
        if (col.cols() != 1) throw ShapeMismatch("TensorVal::from_column");
        TensorVal t(col.field(), {col.rows()});
        for (std::size_t i = 0; i < col.rows(); ++i) t.data_[i] = col.at(i, 0);
        return t;
    }

    static TensorVal scalar_value(FieldSpec field, const Scalar& s) {
        TensorVal t(field);
        t.data_[0] = s;
        return t;
    }

    const FieldSpec& field() const { return field_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t rank() const { return dims_.size(); }
    const std::vector<Scalar>& data() const { return data_; }
    Scalar& entry(std::size_t flat) { return data_[flat]; }
    const Scalar& entry(std::size_t flat) const { return data_[flat]; }

    bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    friend bool operator==(const TensorVal& a, const TensorVal& b) {
        return a.field_ == b.field_ && a.dims_ == b.dims_ && a.data_ == b.data_;
    }
    friend bool operator!=(const TensorVal& a, const TensorVal& b) { return !(a == b); }

    friend TensorVal operator+(const TensorVal& a, const TensorVal& b) {
        if (a.dims_ != b.dims_) throw ShapeMismatch("TensorVal +");
        TensorVal r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend TensorVal operator-(const TensorVal& a, const TensorVal& b) {
        if (a.dims_ != b.dims_) throw ShapeMismatch("TensorVal -");
        TensorVal r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend TensorVal operator*(const Scalar& s, const TensorVal& t) {
        TensorVal r = t;
        for (auto& v : r.data_) v *= s;
        return r;
    }

    // tensor product, concatenating factor lists
    static TensorVal product(const TensorVal& a, const TensorVal& b) {
        std::vector<std::size_t> dims = a.dims_;
        dims.insert(dims.end(), b.dims_.begin(), b.dims_.end());
        TensorVal r(a.field_, std::move(dims));
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            if (a.data_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.data_.size(); ++j)
                if (!b.data_[j].is_zero())
                    r.data_[i * b.data_.size() + j] = a.data_[i] * b.data_[j];
        }
        return r;
    }

    static TensorVal product(const std::vector<TensorVal>& parts) {
        if (parts.empty()) throw ShapeMismatch("empty tensor product");
        TensorVal r = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) r = product(r, parts[i]);
        return r;
    }

    // Applies the linear map m to the listed factors, read in the listed
    // order (m's column index decomposes over those factor dimensions).
    // The listed factors are removed and out_dims are spliced in at the
    // position of the first listed factor. Empty out_dims means the map is
    // scalar-valued (m has one row) and the value is absorbed.
    TensorVal apply(const std::vector<std::size_t>& factors, const Matrix& m,
                    const std::vector<std::size_t>& out_dims) const {
        if (factors.empty()) throw ShapeMismatch("apply: no factors");
        std::size_t in_prod = 1;
        for (std::size_t f : factors) {
            if (f >= dims_.size()) throw ShapeMismatch("apply: factor out of range");
            in_prod *= dims_[f];
        }
        if (m.cols() != in_prod || m.rows() != total(out_dims))
            throw ShapeMismatch("apply: map " + m.shape_string() + " on factors of size " +
                                std::to_string(in_prod) + " -> " + std::to_string(total(out_dims)));

        std::size_t insert_at = factors[0];
        for (std::size_t f : factors) insert_at = std::min(insert_at, f);

        std::vector<bool> consumed(dims_.size(), false);
        for (std::size_t f : factors) {
            if (consumed[f]) throw ShapeMismatch("apply: repeated factor");
            consumed[f] = true;
        }

        // output dims: kept factors with out_dims spliced at insert_at
        std::vector<std::size_t> new_dims;
        std::vector<std::size_t> kept; // input factor index per kept slot
        for (std::size_t f = 0; f < dims_.size(); ++f) {
            if (f == insert_at)
                for (std::size_t d : out_dims) new_dims.push_back(d);
            if (!consumed[f]) {
                kept.push_back(f);
                new_dims.push_back(dims_[f]);
            }
        }
        if (insert_at == dims_.size())
            for (std::size_t d : out_dims) new_dims.push_back(d);

        TensorVal r(field_, new_dims);

        std::vector<std::size_t> idx(dims_.size(), 0);
        for (std::size_t flat = 0; flat < data_.size(); ++flat) {
            if (!data_[flat].is_zero()) {
                decompose(flat, dims_, idx);
                // contracted flat index in listed-factor order
                std::size_t cidx = 0;
                for (std::size_t f : factors) cidx = cidx * dims_[f] + idx[f];
                for (std::size_t out = 0; out < m.rows(); ++out) {
                    const Scalar& coef = m.at(out, cidx);
                    if (coef.is_zero()) continue;
                    // rebuild output flat index
                    std::size_t oflat = 0;
                    std::size_t kpos = 0;
                    bool inserted = out_dims.empty();
                    std::size_t out_rest = out;
                    // precompute out multi-index
                    std::vector<std::size_t> oidx(out_dims.size(), 0);
                    for (std::size_t k2 = out_dims.size(); k2-- > 0;) {
                        oidx[k2] = out_rest % out_dims[k2];
                        out_rest /= out_dims[k2];
                    }
                    for (std::size_t slot = 0; slot < new_dims.size(); ++slot) {
                        bool in_inserted_block =
                            !inserted && slot >= position_of_insert(insert_at, kept) &&
                            slot < position_of_insert(insert_at, kept) + out_dims.size();
                        if (in_inserted_block) {
                            std::size_t which = slot - position_of_insert(insert_at, kept);
                            oflat = oflat * new_dims[slot] + oidx[which];
                            if (which + 1 == out_dims.size()) inserted = true;
                        } else {
                            oflat = oflat * new_dims[slot] + idx[kept[kpos++]];
                        }
                    }
                    r.data_[oflat] += coef * data_[flat];
                }
            }
        }
        return r;
    }

    // Reorder factors: output slot s carries current factor perm[s].
    TensorVal reorder(const std::vector<std::size_t>& perm) const {
        if (perm.size() != dims_.size()) throw ShapeMismatch("reorder");
        std::vector<std::size_t> new_dims(perm.size());
        for (std::size_t s = 0; s < perm.size(); ++s) new_dims[s] = dims_[perm[s]];
        TensorVal r(field_, new_dims);
        std::vector<std::size_t> idx(dims_.size(), 0);
        for (std::size_t flat = 0; flat < data_.size(); ++flat) {
            if (data_[flat].is_zero()) continue;
            decompose(flat, dims_, idx);
            std::size_t oflat = 0;
            for (std::size_t s = 0; s < perm.size(); ++s)
                oflat = oflat * new_dims[s] + idx[perm[s]];
            r.data_[oflat] = data_[flat];
        }
        return r;
    }

    // rank-0 extraction
    Scalar scalar() const {
        if (!dims_.empty()) throw ShapeMismatch("scalar() on rank " + std::to_string(rank()));
        return data_[0];
    }

    // rank-1 extraction as a column vector
    Matrix to_column() const {
        if (dims_.size() != 1) throw ShapeMismatch("to_column() on rank " + std::to_string(rank()));
        Matrix c(field_, dims_[0], 1);
        for (std::size_t i = 0; i < dims_[0]; ++i) c.at(i, 0) = data_[i];
        return c;
    }

    // flatten to a single column in row-major index order
    Matrix flatten() const {
        Matrix c(field_, data_.size(), 1);
        for (std::size_t i = 0; i < data_.size(); ++i) c.at(i, 0) = data_[i];
        return c;
    }

private:
    FieldSpec field_;
    std::vector<std::size_t> dims_;
    std::vector<Scalar> data_;

    static std::size_t total(const std::vector<std::size_t>& dims) {
        std::size_t t = 1;
        for (std::size_t d : dims) t *= d;
        return t;
    }

    static void decompose(std::size_t flat, const std::vector<std::size_t>& dims,
                          std::vector<std::size_t>& idx) {
        for (std::size_t k = dims.size(); k-- > 0;) {
            idx[k] = flat % dims[k];
            flat /= dims[k];
        }
    }

    // slot position where the inserted block begins
    static std::size_t position_of_insert(std::size_t insert_at,
                                          const std::vector<std::size_t>& kept) {
        std::size_t pos = 0;
        for (std::size_t f : kept) {
            if (f >= insert_at) break;
            ++pos;
        }
        return pos;
    }

};

} // namespace homkit

#pragma once

#include <homkit/field.hpp>
#include <homkit/matrix.hpp>
#include <homkit/tensorval.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace homkit {

// One named residual check. A witness is the basis multi-index where the
// residual tensor is nonzero: input tuple indices followed by the output
// component index. Stored witnesses are capped; the count is not.
struct CheckEntry {
    std::string axiom;
    bool pass = true;
    std::vector<std::vector<std::size_t>> witnesses;
    std::vector<std::string> residuals; // scalar values matching witnesses
    std::size_t witness_total = 0;

    static constexpr std::size_t kMaxStored = 32;

    void add_witness(std::vector<std::size_t> w, const Scalar& residual) {
        pass = false;
        ++witness_total;
        if (witnesses.size() < kMaxStored) {
            witnesses.push_back(std::move(w));
            residuals.push_back(residual.to_string());
        }
    }
};

struct Report {
    std::vector<CheckEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    const CheckEntry* find(const std::string& axiom) const {
        for (const auto& e : entries)
            if (e.axiom == axiom) return &e;
        return nullptr;
    }

    bool passed(const std::string& axiom) const {
        const CheckEntry* e = find(axiom);
        return e != nullptr && e->pass;
    }

    void merge(const Report& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }

    std::string summary() const {
        std::string s;
        for (const auto& e : entries) {
            s += e.axiom;
            s += e.pass ? ": ok" : ": FAIL (" + std::to_string(e.witness_total) + " witnesses)";
            s += "\n";
        }
        return s;
    }
};

// Evaluates diff_fn on every basis tuple of in_dims and records the nonzero
// entries of the returned residual tensor.
inline CheckEntry pointwise_check(
    const std::string& name, const std::vector<std::size_t>& in_dims,
    const std::function<TensorVal(const std::vector<std::size_t>&)>& diff_fn) {
    CheckEntry entry;
    entry.axiom = name;
    std::size_t count = 1;
    for (std::size_t d : in_dims) count *= d;
    std::vector<std::size_t> idx(in_dims.size(), 0);
    for (std::size_t flat = 0; flat < count; ++flat) {
        std::size_t rest = flat;
        for (std::size_t k = in_dims.size(); k-- > 0;) {
            idx[k] = rest % in_dims[k];
            rest /= in_dims[k];
        }
        TensorVal diff = diff_fn(idx);
        if (diff.is_zero()) continue;
        const auto& odims = diff.dims();
        for (std::size_t oflat = 0; oflat < diff.data().size(); ++oflat) {
            const Scalar& v = diff.entry(oflat);
            if (v.is_zero()) continue;
            std::vector<std::size_t> w = idx;
            std::size_t orest = oflat;
            std::vector<std::size_t> oidx(odims.size(), 0);
            for (std::size_t k = odims.size(); k-- > 0;) {
                oidx[k] = orest % odims[k];
                orest /= odims[k];
            }
            w.insert(w.end(), oidx.begin(), oidx.end());
            entry.add_witness(std::move(w), v);
        }
    }
    return entry;
}

// Residual check between two equal-shaped matrices viewed as linear maps;
// column index decomposes over in_dims, row index over out_dims.
inline CheckEntry matrix_check(const std::string& name, const Matrix& lhs, const Matrix& rhs,
                               const std::vector<std::size_t>& in_dims,
                               const std::vector<std::size_t>& out_dims) {
    CheckEntry entry;
    entry.axiom = name;
    Matrix diff = lhs - rhs;
    for (std::size_t c = 0; c < diff.cols(); ++c)
        for (std::size_t r = 0; r < diff.rows(); ++r) {
            const Scalar& v = diff.at(r, c);
            if (v.is_zero()) continue;
            std::vector<std::size_t> w;
            std::size_t rest = c;
            std::vector<std::size_t> ci(in_dims.size(), 0);
            for (std::size_t k = in_dims.size(); k-- > 0;) {
                ci[k] = rest % in_dims[k];
                rest /= in_dims[k];
            }
            w.insert(w.end(), ci.begin(), ci.end());
            rest = r;
            std::vector<std::size_t> ri(out_dims.size(), 0);
            for (std::size_t k = out_dims.size(); k-- > 0;) {
                ri[k] = rest % out_dims[k];
                rest /= out_dims[k];
            }
            w.insert(w.end(), ri.begin(), ri.end());
            entry.add_witness(std::move(w), v);
        }
    return entry;
}

} // namespace homkit

#pragma once

#include <homkit/convolution.hpp>
#include <homkit/report.hpp>
#include <homkit/structures.hpp>
#include <homkit/verify.hpp>

#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace homkit {

// Scalar 2-cocycles live as dim×dim forms F with F(i,j) = σ(e_i, e_j);
// form_as_map turns one into the 1×dim² bilinear map used by the evaluator.
inline Matrix form_as_map(const Matrix& form) {
    Matrix m(form.field(), 1, form.rows() * form.cols());
    for (std::size_t i = 0; i < form.rows(); ++i)
        for (std::size_t j = 0; j < form.cols(); ++j) m.at(0, i * form.cols() + j) = form.at(i, j);
    return m;
}

inline Matrix map_as_form(const Matrix& map, std::size_t d) {
    Matrix f(map.field(), d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) f.at(i, j) = map.at(0, i * d + j);
    return f;
}

namespace detail {

inline void check_form_shape(const HomBialgebra& h, const Matrix& form) {
    if (form.rows() != h.dim || form.cols() != h.dim)
        throw ShapeMismatch("scalar cocycle must be dim(H) x dim(H)");
    if (form.field() != h.field) throw FieldMismatch("scalar cocycle");
}

inline std::size_t worker_count() {
    if (const char* env = std::getenv("HOMKIT_THREADS")) {
        long n = std::atol(env);
        if (n >= 1) return static_cast<std::size_t>(n);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

// Runs fn(begin, end) over a partition of [0, total); block results must be
// written to disjoint slots so the merge order is deterministic.
template <typename Fn>
void parallel_blocks(std::size_t total, Fn&& fn) {
    std::size_t workers = std::min(worker_count(), total == 0 ? std::size_t{1} : total);
    if (workers <= 1 || total == 0) {
        fn(std::size_t{0}, total);
        return;
    }
    std::vector<std::thread> threads;
    std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : threads) t.join();
}

} // namespace detail

// σ∘(α⊗α) = σ and σ(l₁,k₁)σ(α²(h),l₂k₂) = σ(h₁,l₁)σ(h₂l₂,α²(k))
inline Report check_left_cocycle(const HomBialgebra& h, const Matrix& form) {
    detail::check_form_shape(h, form);
    Report rep;
    const std::size_t d = h.dim;
    const FieldSpec f = h.field;
    const HomCoalgebra hc = h.coalgebra();
    const Matrix map = form_as_map(form);
    const Matrix alpha2 = h.alpha * h.alpha;

    rep.entries.push_back(matrix_check("cocycle_alpha_invariant",
                                       h.alpha.transpose() * form * h.alpha, form, {d}, {d}));

    rep.entries.push_back(pointwise_check(
        "left_cocycle", {d, d, d}, [&](const std::vector<std::size_t>& ix) {
            TensorVal eh = TensorVal::basis(f, d, ix[0]);
            TensorVal el = TensorVal::basis(f, d, ix[1]);
            TensorVal ek = TensorVal::basis(f, d, ix[2]);

            TensorVal lhs = TensorVal::product({eh, coprod(hc, el), coprod(hc, ek)});
            // [h l1 l2 k1 k2]
            lhs = lhs.apply({1, 3}, map, {});     // σ(l1,k1) · [h l2 k2]
            lhs = lhs.apply({1, 2}, h.mul, {d}); // [h l2k2]
            lhs = lhs.apply({0}, alpha2, {d});
            lhs = lhs.apply({0, 1}, map, {});

            TensorVal rhs = TensorVal::product({coprod(hc, eh), coprod(hc, el), ek});
            // [h1 h2 l1 l2 k]
            rhs = rhs.apply({0, 2}, map, {});      // [h2 l2 k]
            rhs = rhs.apply({0, 1}, h.mul, {d}); // [h2l2 k]
            rhs = rhs.apply({1}, alpha2, {d});
            rhs = rhs.apply({0, 1}, map, {});
            return lhs - rhs;
        }));
    return rep;
}

// σ∘(α⊗α) = σ and σ(α²(h),l₁k₁)σ(l₂,k₂) = σ(h₁l₁,α²(k))σ(h₂,l₂)
inline Report check_right_cocycle(const HomBialgebra& h, const Matrix& form) {
    detail::check_form_shape(h, form);
    Report rep;
    const std::size_t d = h.dim;
    const FieldSpec f = h.field;
    const HomCoalgebra hc = h.coalgebra();
    const Matrix map = form_as_map(form);
    const Matrix alpha2 = h.alpha * h.alpha;

    rep.entries.push_back(matrix_check("cocycle_alpha_invariant",
                                       h.alpha.transpose() * form * h.alpha, form, {d}, {d}));

    rep.entries.push_back(pointwise_check(
        "right_cocycle", {d, d, d}, [&](const std::vector<std::size_t>& ix) {
            TensorVal eh = TensorVal::basis(f, d, ix[0]);
            TensorVal el = TensorVal::basis(f, d, ix[1]);
            TensorVal ek = TensorVal::basis(f, d, ix[2]);

            TensorVal lhs = TensorVal::product({eh, coprod(hc, el), coprod(hc, ek)});
            // [h l1 l2 k1 k2]
            lhs = lhs.apply({1, 3}, h.mul, {d}); // [h l1k1 l2 k2]
            lhs = lhs.apply({0}, alpha2, {d});
            lhs = lhs.apply({0, 1}, map, {});      // [l2 k2]
            lhs = lhs.apply({0, 1}, map, {});

            TensorVal rhs = TensorVal::product({coprod(hc, eh), coprod(hc, el), ek});
            // [h1 h2 l1 l2 k]
            rhs = rhs.apply({0, 2}, h.mul, {d}); // [h1l1 h2 l2 k]
            rhs = rhs.apply({3}, alpha2, {d});
            rhs = rhs.apply({0, 3}, map, {});      // [h2 l2]
            rhs = rhs.apply({0, 1}, map, {});
            return lhs - rhs;
        }));
    return rep;
}

// σ(h₁,g₁)h₂g₂ = h₁g₁σ(h₂,g₂)
inline Report check_lazy(const HomBialgebra& h, const Matrix& form) {
    detail::check_form_shape(h, form);
    Report rep;
    const std::size_t d = h.dim;
    const FieldSpec f = h.field;
    const HomCoalgebra hc = h.coalgebra();
    const Matrix map = form_as_map(form);

    rep.entries.push_back(pointwise_check(
        "lazy", {d, d}, [&](const std::vector<std::size_t>& ix) {
            TensorVal v = TensorVal::product(coprod(hc, TensorVal::basis(f, d, ix[0])),
                                             coprod(hc, TensorVal::basis(f, d, ix[1])));
            // [h1 h2 g1 g2]
            TensorVal lhs = v.apply({0, 2}, map, {}).apply({0, 1}, h.mul, {d});
            TensorVal rhs = v.apply({1, 3}, map, {}).apply({0, 1}, h.mul, {d});
            return lhs - rhs;
        }));
    return rep;
}

// σ(1,h) = σ(h,1) = ε(h)
inline Report check_normal_form(const HomBialgebra& h, const Matrix& form) {
    detail::check_form_shape(h, form);
    Report rep;
    const std::size_t d = h.dim;
    rep.entries.push_back(matrix_check("normal_left_form", h.unit.transpose() * form,
                                       h.counit, {d}, {}));
    rep.entries.push_back(matrix_check("normal_right_form", (form * h.unit).transpose(),
                                       h.counit, {d}, {}));
    return rep;
}

// (F*G)(u,v) = Σ F(u₁,v₁)G(u₂,v₂) over an arbitrary coalgebra, computed
// entrywise; avoids materializing the componentwise coalgebra on C⊗C.
inline Matrix convolve_forms_over(const HomCoalgebra& c, const Matrix& f1, const Matrix& f2) {
    const std::size_t d = c.dim;
    Tensor3 comul = c.comul_tensor();
    Matrix out(c.field, d, d);
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            Scalar acc = Scalar::zero(c.field);
            for (std::size_t u1 = 0; u1 < d; ++u1)
                for (std::size_t u2 = 0; u2 < d; ++u2) {
                    const Scalar& cu = comul.at(u, u1, u2);
                    if (cu.is_zero()) continue;
                    for (std::size_t v1 = 0; v1 < d; ++v1) {
                        if (f1.at(u1, v1).is_zero()) continue;
                        for (std::size_t v2 = 0; v2 < d; ++v2) {
                            const Scalar& cv = comul.at(v, v1, v2);
                            if (cv.is_zero()) continue;
                            acc += cu * cv * f1.at(u1, v1) * f2.at(u2, v2);
                        }
                    }
                }
            out.at(u, v) = acc;
        }
    return out;
}

// γ(h₁)γ(g₁) convolution of bilinear forms over the componentwise coalgebra
inline Matrix convolve_forms(const HomBialgebra& h, const Matrix& f1, const Matrix& f2) {
    return convolve_forms_over(h.coalgebra(), f1, f2);
}

inline ConvInverse invert_form(const HomBialgebra& h, const Matrix& form) {
    HomCoalgebra hh = tensor_coalgebra(h.coalgebra(), h.coalgebra());
    ConvInverse inv = conv_invert(hh, ground_algebra(h.field), form_as_map(form));
    if (inv.ok()) inv.inverse = map_as_form(*inv.inverse, h.dim);
    return inv;
}

inline Matrix trivial_form(const HomBialgebra& h) {
    return h.counit.transpose() * h.counit;
}

enum class DeformSide { Left, Right };

// h ·_σ g = σ(h₁,g₁)α⁻¹(h₂g₂)   (left)
// h _σ· g = α⁻¹(h₁g₁)σ(h₂,g₂)   (right)
inline HomAlgebra deform(const HomBialgebra& h, const Matrix& form, DeformSide side,
                         bool skip_condition_checks = false) {
    detail::check_form_shape(h, form);
    if (!skip_condition_checks) {
        Report rep = side == DeformSide::Left ? check_left_cocycle(h, form)
                                              : check_right_cocycle(h, form);
        if (!rep.all_pass()) throw ConditionsFailed("deformation cocycle condition");
    }
    const std::size_t d = h.dim;
    const FieldSpec f = h.field;
    const HomCoalgebra hc = h.coalgebra();
    const Matrix map = form_as_map(form);

    Matrix mul(f, d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            TensorVal v = TensorVal::product(coprod(hc, TensorVal::basis(f, d, i)),
                                             coprod(hc, TensorVal::basis(f, d, j)));
            // [h1 h2 g1 g2]
            TensorVal r = side == DeformSide::Left
                              ? v.apply({0, 2}, map, {})
                                    .apply({0, 1}, h.mul, {d})
                                    .apply({0}, h.alpha_inv, {d})
                              : v.apply({1, 3}, map, {})
                                    .apply({0, 1}, h.mul, {d})
                                    .apply({0}, h.alpha_inv, {d});
            mul.set_column(i * d + j, r.to_column());
        }
    return HomAlgebra(f, h.basis_labels, std::move(mul), h.unit, h.alpha);
}

// For lazy σ the two deformations agree; H(σ) is that common algebra.
inline HomAlgebra deform_two_sided(const HomBialgebra& h, const Matrix& form,
                                   bool skip_condition_checks = false) {
    HomAlgebra left = deform(h, form, DeformSide::Left, skip_condition_checks);
    HomAlgebra right = deform(h, form, DeformSide::Right, true);
    if (left.mul != right.mul)
        throw ConditionsFailed("left and right deformations disagree (cocycle not lazy)");
    return left;
}


// HomHopfAlgebra conveniences: every scalar-cocycle operation above works on
// the underlying bialgebra.
inline Report check_left_cocycle(const HomHopfAlgebra& h, const Matrix& f) { return check_left_cocycle(h.bi, f); }
inline Report check_right_cocycle(const HomHopfAlgebra& h, const Matrix& f) { return check_right_cocycle(h.bi, f); }
inline Report check_lazy(const HomHopfAlgebra& h, const Matrix& f) { return check_lazy(h.bi, f); }
inline Report check_normal_form(const HomHopfAlgebra& h, const Matrix& f) { return check_normal_form(h.bi, f); }
inline Matrix convolve_forms(const HomHopfAlgebra& h, const Matrix& a, const Matrix& b) { return convolve_forms(h.bi, a, b); }
inline ConvInverse invert_form(const HomHopfAlgebra& h, const Matrix& f) { return invert_form(h.bi, f); }
inline Matrix trivial_form(const HomHopfAlgebra& h) { return trivial_form(h.bi); }
inline HomAlgebra deform(const HomHopfAlgebra& h, const Matrix& f, DeformSide side, bool skip = false) { return deform(h.bi, f, side, skip); }
inline HomAlgebra deform_two_sided(const HomHopfAlgebra& h, const Matrix& f, bool skip = false) { return deform_two_sided(h.bi, f, skip); }
// D¹(γ)(h,g) = γ(h₁)γ(g₁)γ⁻¹(h₂g₂) for a normalized α-invariant functional.
inline Matrix coboundary_d1(const HomHopfAlgebra& h, const Matrix& gamma) {
    const std::size_t d = h.dim();
    const FieldSpec f = h.field();
    if (gamma.rows() != 1 || gamma.cols() != d) throw ShapeMismatch("functional must be 1 x dim");
    if ((gamma * h.unit()).at(0, 0) != Scalar::one(f))
        throw PreconditionFailed("functional is not normalized");
    if (gamma * h.alpha() != gamma)
        throw PreconditionFailed("functional is not alpha-invariant");
    Matrix gamma_inv =
        conv_inverse_or_throw(h.coalgebra(), ground_algebra(f), gamma, "functional");

    const HomCoalgebra hc = h.coalgebra();
    Matrix form(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            TensorVal v = TensorVal::product(coprod(hc, TensorVal::basis(f, d, i)),
                                             coprod(hc, TensorVal::basis(f, d, j)));
            v = v.apply({0}, gamma, {});          // [h2 g1 g2]
            v = v.apply({1}, gamma, {});          // [h2 g2]
            v = v.apply({0, 1}, h.mul(), {d});
            v = v.apply({0}, gamma_inv, {});
            form.at(i, j) = v.scalar();
        }
    return form;
}

// Group operations on lazy cocycles.
inline Matrix z2l_product(const HomBialgebra& h, const Matrix& f1, const Matrix& f2) {
    return convolve_forms(h, f1, f2);
}

inline Matrix z2l_inverse(const HomBialgebra& h, const Matrix& form) {
    ConvInverse inv = invert_form(h, form);
    if (!inv.ok()) throw NotInvertible("lazy cocycle form");
    return *inv.inverse;
}

inline Matrix z2l_product(const HomHopfAlgebra& h, const Matrix& a, const Matrix& b) {
    return z2l_product(h.bi, a, b);
}
inline Matrix z2l_inverse(const HomHopfAlgebra& h, const Matrix& f) {
    return z2l_inverse(h.bi, f);
}

// Affine space of normalized α-invariant lazy functionals: particular point
// plus a basis of the homogeneous solution space.
struct AffineFunctionalSpace {
    Matrix particular;          // 1 × dim
    std::vector<Matrix> basis;  // 1 × dim directions
};

inline AffineFunctionalSpace lazy_functional_space(const HomHopfAlgebra& h) {
    const std::size_t d = h.dim();
    const FieldSpec f = h.field();
    Tensor3 comul = h.coalgebra().comul_tensor();

    // rows: laziness (d² equations), α-invariance (d), normalization (1)
    const std::size_t rows = d * d + d + 1;
    Matrix sys(f, rows, d);
    Matrix rhs(f, rows, 1);
    for (std::size_t hh = 0; hh < d; ++hh)
        for (std::size_t out = 0; out < d; ++out)
            for (std::size_t p = 0; p < d; ++p)
                sys.at(hh * d + out, p) = comul.at(hh, p, out) - comul.at(hh, out, p);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t p = 0; p < d; ++p) {
            sys.at(d * d + j, p) = h.alpha().at(p, j) - (p == j ? Scalar::one(f) : Scalar::zero(f));
        }
    for (std::size_t p = 0; p < d; ++p) sys.at(d * d + d, p) = h.unit().at(p, 0);
    rhs.at(d * d + d, 0) = Scalar::one(f);

    auto sol = solve_linear(sys, rhs);
    if (!sol) throw Error("no normalized lazy functionals exist");
    AffineFunctionalSpace out;
    out.particular = sol->solution.transpose();
    for (const auto& v : sol->kernel) out.basis.push_back(v.transpose());
    return out;
}

// Enumerated element #idx of an affine space over GF(p).
inline Matrix affine_element(const AffineFunctionalSpace& space, std::uint32_t p,
                             std::size_t idx) {
    Matrix g = space.particular;
    for (std::size_t b = 0; b < space.basis.size(); ++b) {
        std::size_t digit = idx % p;
        idx /= p;
        if (digit != 0) g = g + Scalar(g.field(), static_cast<long long>(digit)) * space.basis[b];
    }
    return g;
}

struct CoboundarySearch {
    std::optional<Matrix> witness; // lazy functional γ with D¹(γ) = σ
    std::size_t candidates_tested = 0;
    bool exhaustive = false;
};

// Exhaustive search for γ with D¹(γ) = σ over a finite field.
inline CoboundarySearch is_coboundary(const HomHopfAlgebra& h, const Matrix& form,
                                      std::size_t max_candidates = 10'000'000,
                                      std::size_t dim_limit = 6) {
    detail::check_form_shape(h.bi, form);
    if (h.field().kind != FieldKind::PrimeField)
        throw PreconditionFailed("coboundary search needs a finite field");
    if (h.dim() > dim_limit) throw PreconditionFailed("dimension exceeds search limit");
    const std::uint32_t p = h.field().p;

    AffineFunctionalSpace space = lazy_functional_space(h);
    std::size_t total = 1;
    for (std::size_t i = 0; i < space.basis.size(); ++i) {
        if (total > max_candidates / p) throw FieldTooLarge(std::to_string(space.basis.size()) +
                                                            " free parameters over GF(" +
                                                            std::to_string(p) + ")");
        total *= p;
    }

    CoboundarySearch out;
    out.exhaustive = true;
    for (std::size_t idx = 0; idx < total; ++idx) {
        Matrix gamma = affine_element(space, p, idx);
        ++out.candidates_tested;
        ConvInverse inv = conv_invert(h.coalgebra(), ground_algebra(h.field()), gamma);
        if (!inv.ok()) continue;
        if (coboundary_d1(h, gamma) == form) {
            out.witness = std::move(gamma);
            return out;
        }
    }
    return out;
}

struct CohomologyClassSet {
    FieldSpec field;
    std::vector<Matrix> representatives;      // lexicographically least per class
    std::vector<std::size_t> class_sizes;
    std::vector<Matrix> cocycles;             // all of Z²_L in enumeration order
    std::vector<Matrix> coboundaries;         // B²_L
    std::size_t candidates_scanned = 0;
    bool exhaustive = false;
    std::vector<std::vector<std::size_t>> group_table; // emitted when ≤16 classes
};

// Desk-scale H²_L: enumerate the linear part (normalized, α-invariant, lazy),
// filter by the left-cocycle equations and convolution invertibility, then
// quotient by coboundaries.
inline CohomologyClassSet lazy_cohomology(const HomHopfAlgebra& h,
                                          std::size_t max_candidates = 10'000'000,
                                          std::size_t dim_limit = 4) {
    if (h.field().kind != FieldKind::PrimeField)
        throw PreconditionFailed("cohomology enumeration needs a finite field");
    if (h.dim() > dim_limit) throw PreconditionFailed("dimension exceeds enumeration limit");
    const std::uint32_t p = h.field().p;
    const std::size_t d = h.dim();
    const FieldSpec f = h.field();
    Tensor3 comul = h.coalgebra().comul_tensor();
    Tensor3 mul = h.algebra().mul_tensor();

    // Linear constraints on the d² unknowns F(i,j):
    //   normal: F(1,h) = ε(h), F(h,1) = ε(h)
    //   α-invariance: F(α(e_i),α(e_j)) = F(i,j)
    //   laziness: Σ F(h₁,g₁)h₂g₂ − h₁g₁F(h₂,g₂) = 0
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs_vals;
    auto unknown = [&](std::size_t i, std::size_t j) { return i * d + j; };
    auto add_row = [&](std::vector<Scalar> row, Scalar rhs) {
        rows.push_back(std::move(row));
        rhs_vals.push_back(std::move(rhs));
    };

    for (std::size_t j = 0; j < d; ++j) { // F(1,·) = ε and F(·,1) = ε
        std::vector<Scalar> row1(d * d, Scalar::zero(f)), row2(d * d, Scalar::zero(f));
        for (std::size_t i = 0; i < d; ++i) {
            row1[unknown(i, j)] = h.unit().at(i, 0);
            row2[unknown(j, i)] = h.unit().at(i, 0);
        }
        add_row(std::move(row1), h.counit().at(0, j));
        add_row(std::move(row2), h.counit().at(0, j));
    }
    for (std::size_t i = 0; i < d; ++i) // α-invariance
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Scalar> row(d * d, Scalar::zero(f));
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    row[unknown(k, l)] += h.alpha().at(k, i) * h.alpha().at(l, j);
            row[unknown(i, j)] -= Scalar::one(f);
            add_row(std::move(row), Scalar::zero(f));
        }
    for (std::size_t hh = 0; hh < d; ++hh) // laziness
        for (std::size_t gg = 0; gg < d; ++gg)
            for (std::size_t out = 0; out < d; ++out) {
                std::vector<Scalar> row(d * d, Scalar::zero(f));
                for (std::size_t p1 = 0; p1 < d; ++p1)
                    for (std::size_t p2 = 0; p2 < d; ++p2)
                        for (std::size_t q1 = 0; q1 < d; ++q1)
                            for (std::size_t q2 = 0; q2 < d; ++q2) {
                                Scalar c = comul.at(hh, p1, p2) * comul.at(gg, q1, q2);
                                if (c.is_zero()) continue;
                                row[unknown(p1, q1)] += c * mul.at(p2, q2, out);
                                row[unknown(p2, q2)] -= c * mul.at(p1, q1, out);
                            }
                add_row(std::move(row), Scalar::zero(f));
            }

    Matrix sys(f, rows.size(), d * d);
    Matrix rhs(f, rows.size(), 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < d * d; ++c) sys.at(r, c) = rows[r][c];
        rhs.at(r, 0) = rhs_vals[r];
    }
    auto sol = solve_linear(sys, rhs);

    CohomologyClassSet out;
    out.field = f;
    if (!sol) { // no normalized lazy forms at all
        out.exhaustive = true;
        return out;
    }

    std::size_t total = 1;
    for (std::size_t i = 0; i < sol->kernel.size(); ++i) {
        if (total > max_candidates / p)
            throw FieldTooLarge(std::to_string(sol->kernel.size()) + " free parameters over GF(" +
                                std::to_string(p) + ")");
        total *= p;
    }
    out.candidates_scanned = total;

    auto candidate = [&](std::size_t idx) {
        Matrix flat = sol->solution;
        std::size_t rest = idx;
        for (const auto& v : sol->kernel) {
            std::size_t digit = rest % p;
            rest /= p;
            if (digit != 0) flat = flat + Scalar(f, static_cast<long long>(digit)) * v;
        }
        Matrix form(f, d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) form.at(i, j) = flat.at(unknown(i, j), 0);
        return form;
    };

    // filter candidates; slots keep the enumeration order deterministic
    std::vector<char> keep(total, 0);
    detail::parallel_blocks(total, [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            Matrix form = candidate(idx);
            if (!check_left_cocycle(h, form).all_pass()) continue;
            if (!invert_form(h, form).ok()) continue;
            keep[idx] = 1;
        }
    });
    for (std::size_t idx = 0; idx < total; ++idx)
        if (keep[idx]) out.cocycles.push_back(candidate(idx));
    out.exhaustive = true;

    // B²_L from the lazy functional space
    AffineFunctionalSpace gspace = lazy_functional_space(h);
    std::size_t gtotal = 1;
    for (std::size_t i = 0; i < gspace.basis.size(); ++i) {
        if (gtotal > max_candidates / p)
            throw FieldTooLarge("functional space too large over GF(" + std::to_string(p) + ")");
        gtotal *= p;
    }
    for (std::size_t idx = 0; idx < gtotal; ++idx) {
        Matrix gamma = affine_element(gspace, p, idx);
        ConvInverse inv = conv_invert(h.coalgebra(), ground_algebra(f), gamma);
        if (!inv.ok()) continue;
        Matrix cob = coboundary_d1(h, gamma);
        bool seen = false;
        for (const auto& b : out.coboundaries)
            if (b == cob) {
                seen = true;
                break;
            }
        if (!seen) out.coboundaries.push_back(std::move(cob));
    }

    auto is_coboundary_form = [&](const Matrix& form) {
        for (const auto& b : out.coboundaries)
            if (b == form) return true;
        return false;
    };

    // partition Z²_L by σ₁ ~ σ₂ ⇔ σ₁ * σ₂⁻¹ ∈ B²_L
    std::vector<long> cls(out.cocycles.size(), -1);
    for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
        if (cls[i] >= 0) continue;
        long id = static_cast<long>(out.representatives.size());
        cls[i] = id;
        Matrix rep = out.cocycles[i];
        std::size_t size = 1;
        for (std::size_t j = i + 1; j < out.cocycles.size(); ++j) {
            if (cls[j] >= 0) continue;
            Matrix quot = z2l_product(h, out.cocycles[i], z2l_inverse(h, out.cocycles[j]));
            if (is_coboundary_form(quot)) {
                cls[j] = id;
                ++size;
                if (out.cocycles[j] < rep) rep = out.cocycles[j];
            }
        }
        out.representatives.push_back(std::move(rep));
        out.class_sizes.push_back(size);
    }

    if (out.representatives.size() <= 16 && !out.representatives.empty()) {
        const std::size_t n = out.representatives.size();
        out.group_table.assign(n, std::vector<std::size_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Matrix prod = z2l_product(h, out.representatives[i], out.representatives[j]);
                for (std::size_t kcls = 0; kcls < n; ++kcls) {
                    Matrix quot = z2l_product(h, prod, z2l_inverse(h, out.representatives[kcls]));
                    if (is_coboundary_form(quot)) {
                        out.group_table[i][j] = kcls;
                        break;
                    }
                }
            }
    }
    return out;
}

// The eleven cocycle–antipode identities ("lemma46" in the CLI). Entries
// eq_4_04 … eq_4_11 are evaluated only when the cocycle is lazy; identities
// involving S⁻¹ require an invertible antipode.
inline Report cocycle_antipode_identities(const HomHopfAlgebra& h, const Matrix& form) {
    detail::check_form_shape(h.bi, form);
    const std::size_t d = h.dim();
    const FieldSpec f = h.field();
    const HomCoalgebra hc = h.coalgebra();
    const Matrix map = form_as_map(form);
    ConvInverse inv = invert_form(h, form);
    if (!inv.ok()) throw NotInvertible("cocycle form");
    const Matrix imap = form_as_map(*inv.inverse);
    const Matrix& s = h.antipode;

    Report rep;
    bool lazy = check_lazy(h, form).all_pass();
    bool s_invertible = h.antipode_inv.has_value();
    Matrix sinv = s_invertible ? *h.antipode_inv : Matrix();

    auto quad = [&](std::size_t i) { // h11 h12 h21 h22
        TensorVal v = coprod(hc, TensorVal::basis(f, d, i));
        v = v.apply({0}, h.comul(), {d, d});
        v = v.apply({2}, h.comul(), {d, d});
        return v;
    };
    // 4.1: σ(h₁₁,S(h₁₂)) σ⁻¹(S(h₂₁),h₂₂) = ε(h)
    rep.entries.push_back(pointwise_check("eq_4_01", {d}, [&](const std::vector<std::size_t>& ix) {
        TensorVal v = quad(ix[0]);
        v = v.apply({1}, s, {d}).apply({0, 1}, map, {});
        v = v.apply({0}, s, {d}).apply({0, 1}, imap, {});
        return TensorVal::scalar_value(f, v.scalar() - h.counit().at(0, ix[0]));
    }));

    // 4.2: σ(S⁻¹(h₁₂),h₁₁) σ⁻¹(h₂₂,S⁻¹(h₂₁)) = ε(h)
    if (s_invertible)
        rep.entries.push_back(
            pointwise_check("eq_4_02", {d}, [&](const std::vector<std::size_t>& ix) {
                TensorVal v = quad(ix[0]);
                v = v.apply({1}, sinv, {d}).apply({1, 0}, map, {});
                v = v.apply({0}, sinv, {d}).apply({1, 0}, imap, {});
                return TensorVal::scalar_value(f, v.scalar() - h.counit().at(0, ix[0]));
            }));

    // 4.3: σ(h₁₁,g₁₁) σ(h₁₂g₁₂,S(α(h₂g₂))) = σ(g₁₁,S(g₁₂)) σ(h₁₁,S(h₁₂)) σ⁻¹(S(g₂),S(h₂))
    rep.entries.push_back(
        pointwise_check("eq_4_03", {d, d}, [&](const std::vector<std::size_t>& ix) {
            TensorVal lhs = TensorVal::product(coprod_left(hc, TensorVal::basis(f, d, ix[0])),
                                               coprod_left(hc, TensorVal::basis(f, d, ix[1])));
            // [h11 h12 h2 g11 g12 g2]
            lhs = lhs.apply({0, 3}, map, {});         // [h12 h2 g12 g2]
            lhs = lhs.apply({0, 2}, h.mul(), {d});    // [h12g12 h2 g2]
            lhs = lhs.apply({1, 2}, h.mul(), {d});    // [h12g12 h2g2]
            lhs = lhs.apply({1}, s * h.alpha(), {d});
            lhs = lhs.apply({0, 1}, map, {});

            TensorVal rhs = TensorVal::product(coprod_left(hc, TensorVal::basis(f, d, ix[0])),
                                               coprod_left(hc, TensorVal::basis(f, d, ix[1])));
            rhs = rhs.apply({4}, s, {d}).apply({3, 4}, map, {}); // [h11 h12 h2 g2]
            rhs = rhs.apply({1}, s, {d}).apply({0, 1}, map, {}); // [h2 g2]
            rhs = rhs.apply({0}, s, {d}).apply({1}, s, {d});
            rhs = rhs.apply({1, 0}, imap, {});
            return lhs - rhs;
        }));

    if (lazy) {
        // 4.4: σ(h₁,S(h₂)) = σ(S(h₁),h₂)
        rep.entries.push_back(
            pointwise_check("eq_4_04", {d}, [&](const std::vector<std::size_t>& ix) {
                TensorVal v = coprod(hc, TensorVal::basis(f, d, ix[0]));
                TensorVal lhs = v.apply({1}, s, {d}).apply({0, 1}, map, {});
                TensorVal rhs = v.apply({0}, s, {d}).apply({0, 1}, map, {});
                return lhs - rhs;
            }));
        // 4.5: σ(S⁻¹(h₂),h₁) = σ⁻¹(h₂,S⁻¹(h₁))
        if (s_invertible)
            rep.entries.push_back(
                pointwise_check("eq_4_05", {d}, [&](const std::vector<std::size_t>& ix) {
                    TensorVal v = coprod(hc, TensorVal::basis(f, d, ix[0]));
                    TensorVal lhs = v.apply({1}, sinv, {d}).apply({1, 0}, map, {});
                    TensorVal rhs = v.apply({0}, sinv, {d}).apply({1, 0}, imap, {});
                    return lhs - rhs;
                }));
        // 4.6: σ⁻¹(h₂₁,S⁻¹(h₁₂)) h₂₂S⁻¹(h₁₁) = σ⁻¹(h₂,S⁻¹(h₁))·1
        if (s_invertible)
            rep.entries.push_back(
                pointwise_check("eq_4_06", {d}, [&](const std::vector<std::size_t>& ix) {
                    TensorVal v = quad(ix[0]);
                    v = v.apply({1}, sinv, {d});
                    v = v.apply({2, 1}, imap, {});        // [h11 h22]
                    v = v.apply({0}, sinv, {d});
                    TensorVal lhs = v.apply({1, 0}, h.mul(), {d});

                    TensorVal w = coprod(hc, TensorVal::basis(f, d, ix[0]));
                    w = w.apply({0}, sinv, {d});
                    w = w.apply({1, 0}, imap, {});
                    TensorVal rhs = w.scalar() * TensorVal::from_column(h.unit());
                    return lhs - rhs;
                }));
        // 4.7: σ⁻¹(S⁻¹(h₂₁),h₁₂) S⁻¹(h₂₂)h₁₁ = σ⁻¹(S⁻¹(h₂),h₁)·1
        if (s_invertible)
            rep.entries.push_back(
                pointwise_check("eq_4_07", {d}, [&](const std::vector<std::size_t>& ix) {
                    TensorVal v = quad(ix[0]);
                    v = v.apply({2}, sinv, {d});
                    v = v.apply({2, 1}, imap, {});        // [h11 h22]
                    v = v.apply({1}, sinv, {d});
                    TensorVal lhs = v.apply({1, 0}, h.mul(), {d});

                    TensorVal w = coprod(hc, TensorVal::basis(f, d, ix[0]));
                    w = w.apply({1}, sinv, {d});
                    w = w.apply({1, 0}, imap, {});
                    TensorVal rhs = w.scalar() * TensorVal::from_column(h.unit());
                    return lhs - rhs;
                }));
        // 4.8: σ⁻¹(S(h₁₂),h₂₁) S(h₁₁)h₂₂ = σ⁻¹(S(h₁),h₂)·1
        rep.entries.push_back(
            pointwise_check("eq_4_08", {d}, [&](const std::vector<std::size_t>& ix) {
                TensorVal v = quad(ix[0]);
                v = v.apply({1}, s, {d});
                v = v.apply({1, 2}, imap, {});            // [h11 h22]
                v = v.apply({0}, s, {d});
                TensorVal lhs = v.apply({0, 1}, h.mul(), {d});

                TensorVal w = coprod(hc, TensorVal::basis(f, d, ix[0]));
                w = w.apply({0}, s, {d});
                w = w.apply({0, 1}, imap, {});
                TensorVal rhs = w.scalar() * TensorVal::from_column(h.unit());
                return lhs - rhs;
            }));
        // 4.9: σ⁻¹(S(h₂₁),h₂₂) S(h₁) = σ⁻¹(S(h₁₁),h₁₂) S(h₂)
        rep.entries.push_back(
            pointwise_check("eq_4_09", {d}, [&](const std::vector<std::size_t>& ix) {
                TensorVal lhs = coprod_right(hc, TensorVal::basis(f, d, ix[0]));
                lhs = lhs.apply({1}, s, {d}).apply({1, 2}, imap, {});
                lhs = lhs.apply({0}, s, {d});

                TensorVal rhs = coprod_left(hc, TensorVal::basis(f, d, ix[0]));
                rhs = rhs.apply({0}, s, {d}).apply({0, 1}, imap, {});
                rhs = rhs.apply({0}, s, {d});
                return lhs - rhs;
            }));
        // 4.10: σ⁻¹(h₁₂,S(h₂₁)) h₁₁S(h₂₂) = σ⁻¹(h₁,S(h₂))·1
        rep.entries.push_back(
            pointwise_check("eq_4_10", {d}, [&](const std::vector<std::size_t>& ix) {
                TensorVal v = quad(ix[0]);
                v = v.apply({2}, s, {d});
                v = v.apply({1, 2}, imap, {});            // [h11 h22]
                v = v.apply({1}, s, {d});
                TensorVal lhs = v.apply({0, 1}, h.mul(), {d});

                TensorVal w = coprod(hc, TensorVal::basis(f, d, ix[0]));
                w = w.apply({1}, s, {d});
                w = w.apply({0, 1}, imap, {});
                TensorVal rhs = w.scalar() * TensorVal::from_column(h.unit());
                return lhs - rhs;
            }));
        // 4.11: σ⁻¹(S(h₁₂),h₂₁) h₂₂S⁻¹(h₁₁) = σ⁻¹(S(h₁),h₂)·1
        if (s_invertible)
            rep.entries.push_back(
                pointwise_check("eq_4_11", {d}, [&](const std::vector<std::size_t>& ix) {
                    TensorVal v = quad(ix[0]);
                    v = v.apply({1}, s, {d});
                    v = v.apply({1, 2}, imap, {});        // [h11 h22]
                    v = v.apply({0}, sinv, {d});
                    TensorVal lhs = v.apply({1, 0}, h.mul(), {d});

                    TensorVal w = coprod(hc, TensorVal::basis(f, d, ix[0]));
                    w = w.apply({0}, s, {d});
                    w = w.apply({0, 1}, imap, {});
                    TensorVal rhs = w.scalar() * TensorVal::from_column(h.unit());
                    return lhs - rhs;
                }));
    }
    return rep;
}

struct AntiIsomorphisms {
    Matrix s1;     // σ⁻¹(S(h₂₁),h₂₂) S(α⁻¹(h₁))
    Matrix s2;     // σ⁻¹(h₂₂,S⁻¹(h₂₁)) S⁻¹(α⁻¹(h₁))
    Matrix phi;    // σ(h₁₁,S(h₁₂)) S(α⁻¹(h₂))
    Report report;
};

inline AntiIsomorphisms build_anti_isomorphisms(const HomHopfAlgebra& h, const Matrix& form) {
    detail::check_form_shape(h.bi, form);
    if (!check_lazy(h, form).all_pass()) throw PreconditionFailed("cocycle is not lazy");
    if (!h.antipode_inv) throw PreconditionFailed("antipode is not invertible");
    const std::size_t d = h.dim();
    const FieldSpec f = h.field();
    const HomCoalgebra hc = h.coalgebra();
    ConvInverse inv = invert_form(h, form);
    if (!inv.ok()) throw NotInvertible("cocycle form");
    const Matrix imap = form_as_map(*inv.inverse);
    const Matrix map = form_as_map(form);
    const Matrix& s = h.antipode;
    const Matrix& sinv = *h.antipode_inv;

    Matrix s1(f, d, d), s2(f, d, d), phi(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
        TensorVal v1 = coprod_right(hc, TensorVal::basis(f, d, i)); // [h1 h21 h22]
        v1 = v1.apply({1}, s, {d}).apply({1, 2}, imap, {});
        v1 = v1.apply({0}, s * h.alpha_inv(), {d});
        s1.set_column(i, v1.to_column());

        TensorVal v2 = coprod_right(hc, TensorVal::basis(f, d, i));
        v2 = v2.apply({1}, sinv, {d}).apply({2, 1}, imap, {});
        v2 = v2.apply({0}, sinv * h.alpha_inv(), {d});
        s2.set_column(i, v2.to_column());

        TensorVal v3 = coprod_left(hc, TensorVal::basis(f, d, i)); // [h11 h12 h2]
        v3 = v3.apply({1}, s, {d}).apply({0, 1}, map, {});
        v3 = v3.apply({0}, s * h.alpha_inv(), {d});
        phi.set_column(i, v3.to_column());
    }

    HomAlgebra def_sigma = deform(h, form, DeformSide::Left, true);
    Matrix inv_form = *inv.inverse;
    HomAlgebra def_sigma_inv = deform(h, inv_form, DeformSide::Left, true);

    Report rep;
    rep.entries.push_back(matrix_check("s1_alpha", s1 * h.alpha(), h.alpha() * s1, {d}, {d}));
    rep.entries.push_back(matrix_check("s2_alpha", s2 * h.alpha(), h.alpha() * s2, {d}, {d}));

    const Matrix id = Matrix::identity(f, d);
    const Matrix unit_eps = h.unit() * h.counit();
    // 4.12: S₁(h₁)·_σ h₂ = ε(h)1 = h₁·_σ S₁(h₂)
    rep.entries.push_back(matrix_check("eq_4_12_left",
                                       def_sigma.mul * kron(s1, id) * h.comul(), unit_eps, {d},
                                       {d}));
    rep.entries.push_back(matrix_check("eq_4_12_right",
                                       def_sigma.mul * kron(id, s1) * h.comul(), unit_eps, {d},
                                       {d}));
    // 4.13: S₂(h₂)·_σ h₁ = ε(h)1 = h₂·_σ S₂(h₁)
    Matrix flip = tensor_flip(f, d, d);
    rep.entries.push_back(matrix_check("eq_4_13_left",
                                       def_sigma.mul * kron(s2, id) * flip * h.comul(), unit_eps,
                                       {d}, {d}));
    rep.entries.push_back(matrix_check("eq_4_13_right",
                                       def_sigma.mul * kron(id, s2) * flip * h.comul(), unit_eps,
                                       {d}, {d}));
    // 4.14: Δ(S₁(h)) = S₁(h₂) ⊗ S(h₁)
    rep.entries.push_back(matrix_check("eq_4_14", h.comul() * s1,
                                       kron(s1, s) * flip * h.comul(), {d}, {d, d}));
    // 4.15: Δ(S₂(h)) = S₂(h₂) ⊗ S⁻¹(h₁)
    rep.entries.push_back(matrix_check("eq_4_15", h.comul() * s2,
                                       kron(s2, sinv) * flip * h.comul(), {d}, {d, d}));

    // anti-multiplicativity S_i : H(σ⁻¹) -> H(σ)
    rep.entries.push_back(matrix_check("s1_anti_multiplicative", s1 * def_sigma_inv.mul,
                                       def_sigma.mul * flip * kron(s1, s1), {d, d}, {d}));
    rep.entries.push_back(matrix_check("s2_anti_multiplicative", s2 * def_sigma_inv.mul,
                                       def_sigma.mul * flip * kron(s2, s2), {d, d}, {d}));

    CheckEntry bij{"s1_s2_bijective", true, {}, {}, 0};
    if (rank(s1) != d) bij.add_witness({0}, Scalar::one(f));
    if (rank(s2) != d) bij.add_witness({1}, Scalar::one(f));
    rep.entries.push_back(std::move(bij));

    // φ_σ is a two-sided inverse of S₂
    rep.entries.push_back(matrix_check("phi_s2_inverse", phi * s2, id, {d}, {d}));
    rep.entries.push_back(matrix_check("s2_phi_inverse", s2 * phi, id, {d}, {d}));

    // lazy case: S₁ = φ_{σ⁻¹}
    {
        Matrix phi_inv_form(f, d, d);
        for (std::size_t i = 0; i < d; ++i) {
            TensorVal v = coprod_left(hc, TensorVal::basis(f, d, i));
            v = v.apply({1}, s, {d}).apply({0, 1}, imap, {});
            v = v.apply({0}, s * h.alpha_inv(), {d});
            phi_inv_form.set_column(i, v.to_column());
        }
        rep.entries.push_back(matrix_check("s1_equals_phi_sigma_inv", s1, phi_inv_form, {d}, {d}));
    }
    return AntiIsomorphisms{std::move(s1), std::move(s2), std::move(phi), std::move(rep)};
}

struct SigmaBar {
    Matrix form;         // bilinear form on the supplied (H*⊗H) carrier
    Matrix inverse_form; // evaluated from the printed inverse formula
    Report report;       // normality and mutual-inverse outcomes, recorded
};

// σ̄(p⊗h, q⊗g) = p(1) q(S⁻¹(α⁻²(h₂₂)) α⁻¹(h₁)) σ(h₂₁, α²(g)), materialized on
// a caller-supplied coalgebra structure for H*⊗H (basis index p·dim + h).
inline SigmaBar sigma_bar(const HomHopfAlgebra& h, const Matrix& form,
                          const HomCoalgebra& carrier) {
    detail::check_form_shape(h.bi, form);
    if (!h.antipode_inv) throw PreconditionFailed("antipode is not invertible");
    const std::size_t d = h.dim();
    if (carrier.dim != d * d) throw ShapeMismatch("carrier must have dimension dim(H)^2");
    const FieldSpec f = h.field();
    const HomCoalgebra hc = h.coalgebra();
    const Matrix alpha2 = h.alpha() * h.alpha();

    auto build = [&](const Matrix& sig_form) {
        const Matrix map = form_as_map(sig_form);
        Matrix big(f, d * d, d * d);
        for (std::size_t pi = 0; pi < d; ++pi)
            for (std::size_t hi = 0; hi < d; ++hi)
                for (std::size_t qi = 0; qi < d; ++qi)
                    for (std::size_t gi = 0; gi < d; ++gi) {
                        TensorVal v = TensorVal::product(
                            coprod_right(hc, TensorVal::basis(f, d, hi)),
                            TensorVal::basis(f, d, gi)); // [h1 h21 h22 g]
                        v = v.apply({3}, alpha2, {d});
                        v = v.apply({1, 3}, map, {});    // σ(h21, α²g) · [h1 h22]
                        v = v.apply({0}, h.alpha_inv(), {d});
                        v = v.apply({1}, *h.antipode_inv * matrix_power(h.alpha(), -2), {d});
                        v = v.apply({1, 0}, h.mul(), {d}); // [S⁻¹(α⁻²h22)·α⁻¹h1]
                        Matrix x = v.to_column();
                        // p(1) q(X)
                        Scalar val = h.unit().at(pi, 0) * x.at(qi, 0);
                        big.at(pi * d + hi, qi * d + gi) = val;
                    }
        return big;
    };

    SigmaBar out;
    out.form = build(form);
    ConvInverse inv = invert_form(h, form);
    if (!inv.ok()) throw NotInvertible("cocycle form");
    out.inverse_form = build(*inv.inverse);

    // normality against 1 ⋈ 1 = ε ⊗ 1_H (recorded, not assumed)
    Matrix unit_d = kron(h.counit().transpose(), h.unit());
    out.report.entries.push_back(matrix_check("sigma_bar_normal_left",
                                              unit_d.transpose() * out.form,
                                              carrier.counit, {d * d}, {}));
    out.report.entries.push_back(matrix_check("sigma_bar_normal_right",
                                              (out.form * unit_d).transpose(),
                                              carrier.counit, {d * d}, {}));

    // mutual convolution inverses over the supplied coalgebra
    Matrix lhs = convolve_forms_over(carrier, out.form, out.inverse_form);
    Matrix rhs = convolve_forms_over(carrier, out.inverse_form, out.form);
    Matrix unit_form = carrier.counit.transpose() * carrier.counit;
    out.report.entries.push_back(
        matrix_check("sigma_bar_conv_inverse_left", lhs, unit_form, {d * d}, {d * d}));
    out.report.entries.push_back(
        matrix_check("sigma_bar_conv_inverse_right", rhs, unit_form, {d * d}, {d * d}));
    return out;
}

} // namespace homkit

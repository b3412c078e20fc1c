#pragma once

#include <homkit/convolution.hpp>
#include <homkit/report.hpp>
#include <homkit/structures.hpp>
#include <homkit/verify.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homkit {

struct WeakAction {
    Matrix act; // dim(A) × (dim(H)·dim(A)), h⊗a ↦ h·a
};

struct CocycleMap {
    Matrix sigma; // dim(A) × dim(H)², h⊗g ↦ σ(h,g)
    std::optional<Matrix> inverse;
};

struct CrossedProduct {
    HomAlgebra carrier; // on A⊗H
    HomAlgebra base;
    HomHopfAlgebra hopf;
    Matrix action;
    Matrix sigma;
};

namespace detail {

inline void check_action_shape(const HomHopfAlgebra& h, const HomAlgebra& a, const Matrix& act) {
    if (act.rows() != a.dim || act.cols() != h.dim() * a.dim)
        throw ShapeMismatch("action must be dim(A) x dim(H)*dim(A), got " + act.shape_string());
    if (act.field() != a.field || a.field != h.field()) throw FieldMismatch("action");
}

inline void check_sigma_shape(const HomHopfAlgebra& h, const HomAlgebra& a, const Matrix& sigma) {
    if (sigma.rows() != a.dim || sigma.cols() != h.dim() * h.dim())
        throw ShapeMismatch("cocycle must be dim(A) x dim(H)^2, got " + sigma.shape_string());
    if (sigma.field() != a.field) throw FieldMismatch("cocycle");
}

} // namespace detail

// σ(h,g) = ε(h)ε(g)·1_A
inline Matrix trivial_cocycle(const HomHopfAlgebra& h, const HomAlgebra& a) {
    return a.unit * kron(h.counit(), h.counit());
}

// h·a = ε(h)·β(a)
inline Matrix trivial_action(const HomHopfAlgebra& h, const HomAlgebra& a) {
    return kron(h.counit(), a.alpha);
}

// β(h·a)=α(h)·β(a);  α²(h)·(ab)=(h₁·a)(h₂·b);  h·1=ε(h)1
inline Report check_weak_action(const HomHopfAlgebra& h, const HomAlgebra& a, const Matrix& act) {
    detail::check_action_shape(h, a, act);
    Report rep;
    const std::size_t dh = h.dim(), da = a.dim;
    const FieldSpec f = a.field;

    rep.entries.push_back(matrix_check("action_beta_compat", a.alpha * act,
                                       act * kron(h.alpha(), a.alpha), {dh, da}, {da}));

    Matrix alpha2 = h.alpha() * h.alpha();
    rep.entries.push_back(pointwise_check(
        "action_multiplicative", {dh, da, da}, [&](const std::vector<std::size_t>& ix) {
            TensorVal v = TensorVal::product({TensorVal::basis(f, dh, ix[0]),
                                              TensorVal::basis(f, da, ix[1]),
                                              TensorVal::basis(f, da, ix[2])});
            TensorVal lhs = v.apply({1, 2}, a.mul, {da}).apply({0}, alpha2, {dh})
                                .apply({0, 1}, act, {da});
            TensorVal rhs = coprod(h.coalgebra(), v, 0); // [h1 h2 a b]
            rhs = rhs.apply({0, 2}, act, {da});          // [h1·a  h2  b]
            rhs = rhs.apply({1, 2}, act, {da});          // [h1·a  h2·b]
            rhs = rhs.apply({0, 1}, a.mul, {da});
            return lhs - rhs;
        }));

    rep.entries.push_back(matrix_check("action_unit",
                                       act * kron(Matrix::identity(f, dh), a.unit),
                                       a.unit * h.counit(), {dh}, {da}));
    return rep;
}

// module axioms on top of a weak action: 1·a=β(a) and α(h)·(h'·a)=(hh')·β(a)
inline Report check_module_algebra(const HomHopfAlgebra& h, const HomAlgebra& a,
                                   const Matrix& act) {
    Report rep = check_weak_action(h, a, act);
    const std::size_t dh = h.dim(), da = a.dim;
    const FieldSpec f = a.field;

    rep.entries.push_back(matrix_check("module_unit",
                                       act * kron(h.unit(), Matrix::identity(f, da)), a.alpha,
                                       {da}, {da}));
    rep.entries.push_back(pointwise_check(
        "module_associative", {dh, dh, da}, [&](const std::vector<std::size_t>& ix) {
            TensorVal v = TensorVal::product({TensorVal::basis(f, dh, ix[0]),
                                              TensorVal::basis(f, dh, ix[1]),
                                              TensorVal::basis(f, da, ix[2])});
            TensorVal lhs = v.apply({1, 2}, act, {da}).apply({0}, h.alpha(), {dh})
                                .apply({0, 1}, act, {da});
            TensorVal rhs = v.apply({0, 1}, h.mul(), {dh}).apply({1}, a.alpha, {da})
                                .apply({0, 1}, act, {da});
            return lhs - rhs;
        }));
    return rep;
}

// 1·a = β(a) and the twisted-module identity
// (h₁·(α⁻¹(l₁)·a)) σ(α(h₂),α(l₂)) = σ(α(h₁),α(l₁)) (α⁻¹(h₂l₂)·β(a)).
inline Report check_twisted_module(const HomHopfAlgebra& h, const HomAlgebra& a, const Matrix& act,
                                   const Matrix& sigma) {
    detail::check_action_shape(h, a, act);
    detail::check_sigma_shape(h, a, sigma);
    Report rep;
    const std::size_t dh = h.dim(), da = a.dim;
    const FieldSpec f = a.field;
    const HomCoalgebra hc = h.coalgebra();

    rep.entries.push_back(matrix_check("twisted_unit",
                                       act * kron(h.unit(), Matrix::identity(f, da)), a.alpha,
                                       {da}, {da}));

    rep.entries.push_back(pointwise_check(
        "twisted_module", {dh, dh, da}, [&](const std::vector<std::size_t>& ix) {
            TensorVal hh = coprod(hc, TensorVal::basis(f, dh, ix[0]));
            TensorVal ll = coprod(hc, TensorVal::basis(f, dh, ix[1]));
            TensorVal ea = TensorVal::basis(f, da, ix[2]);
            TensorVal v = TensorVal::product({hh, ll, ea}); // [h1 h2 l1 l2 a]

            TensorVal lhs = v.apply({2}, h.alpha_inv(), {dh});
            lhs = lhs.apply({2, 4}, act, {da});   // [h1 h2 (α⁻¹(l1)·a) l2]
            lhs = lhs.apply({0, 2}, act, {da});   // [h1·(..) h2 l2]
            lhs = lhs.apply({1}, h.alpha(), {dh}).apply({2}, h.alpha(), {dh});
            lhs = lhs.apply({1, 2}, sigma, {da}); // [X σ(αh2,αl2)]
            lhs = lhs.apply({0, 1}, a.mul, {da});

            TensorVal rhs = v.apply({0}, h.alpha(), {dh}).apply({2}, h.alpha(), {dh});
            rhs = rhs.apply({0, 2}, sigma, {da}); // [σ(αh1,αl1) h2 l2 a]
            rhs = rhs.apply({1, 2}, h.mul(), {dh});
            rhs = rhs.apply({1}, h.alpha_inv(), {dh}).apply({2}, a.alpha, {da});
            rhs = rhs.apply({1, 2}, act, {da});   // [σ (α⁻¹(h2l2)·βa)]
            rhs = rhs.apply({0, 1}, a.mul, {da});
            return lhs - rhs;
        }));
    return rep;
}

// σ(h,1)=σ(1,h)=ε(h)1 and σ∘(α⊗α)=β∘σ
inline Report check_normal(const HomHopfAlgebra& h, const HomAlgebra& a, const Matrix& sigma) {
    detail::check_sigma_shape(h, a, sigma);
    Report rep;
    const std::size_t dh = h.dim(), da = a.dim;
    const Matrix id = Matrix::identity(a.field, dh);
    const Matrix unit_eps = a.unit * h.counit();

    rep.entries.push_back(
        matrix_check("normal_right", sigma * kron(id, h.unit()), unit_eps, {dh}, {da}));
    rep.entries.push_back(
        matrix_check("normal_left", sigma * kron(h.unit(), id), unit_eps, {dh}, {da}));
    rep.entries.push_back(matrix_check("normal_alpha", sigma * kron(h.alpha(), h.alpha()),
                                       a.alpha * sigma, {dh, dh}, {da}));
    return rep;
}

// (h₁·σ(l₁,m₁)) σ(α(h₂),l₂m₂) = σ(α(h₁),α(l₁)) σ(h₂l₂,α²(m))
inline Report check_cocycle(const HomHopfAlgebra& h, const HomAlgebra& a, const Matrix& act,
                            const Matrix& sigma) {
    detail::check_action_shape(h, a, act);
    detail::check_sigma_shape(h, a, sigma);
    Report rep;
    const std::size_t dh = h.dim(), da = a.dim;
    const FieldSpec f = a.field;
    const HomCoalgebra hc = h.coalgebra();
    Matrix alpha2 = h.alpha() * h.alpha();

    rep.entries.push_back(pointwise_check(
        "twisted_cocycle", {dh, dh, dh}, [&](const std::vector<std::size_t>& ix) {
            TensorVal hh = coprod(hc, TensorVal::basis(f, dh, ix[0]));
            TensorVal ll = coprod(hc, TensorVal::basis(f, dh, ix[1]));
            TensorVal mm = coprod(hc, TensorVal::basis(f, dh, ix[2]));
            TensorVal v = TensorVal::product({hh, ll, mm}); // [h1 h2 l1 l2 m1 m2]

            TensorVal lhs = v.apply({2, 4}, sigma, {da});  // [h1 h2 σ(l1,m1) l2 m2]
            lhs = lhs.apply({0, 2}, act, {da});            // [h1·σ h2 l2 m2]
            lhs = lhs.apply({2, 3}, h.mul(), {dh});        // [h1·σ h2 l2m2]
            lhs = lhs.apply({1}, h.alpha(), {dh});
            lhs = lhs.apply({1, 2}, sigma, {da});
            lhs = lhs.apply({0, 1}, a.mul, {da});

            TensorVal rhs = TensorVal::product(
                {coprod(hc, TensorVal::basis(f, dh, ix[0])),
                 coprod(hc, TensorVal::basis(f, dh, ix[1])), TensorVal::basis(f, dh, ix[2])});
            rhs = rhs.apply({0}, h.alpha(), {dh}).apply({2}, h.alpha(), {dh});
            rhs = rhs.apply({0, 2}, sigma, {da});          // [σ(αh1,αl1) h2 l2 m]
            rhs = rhs.apply({1, 2}, h.mul(), {dh});        // [σ h2l2 m]
            rhs = rhs.apply({2}, alpha2, {dh});
            rhs = rhs.apply({1, 2}, sigma, {da});
            rhs = rhs.apply({0, 1}, a.mul, {da});
            return lhs - rhs;
        }));
    return rep;
}

// All of the crossed-product preconditions in one report.
inline Report check_crossed_conditions(const HomHopfAlgebra& h, const HomAlgebra& a,
                                       const Matrix& act, const Matrix& sigma) {
    Report rep = check_weak_action(h, a, act);
    rep.merge(check_twisted_module(h, a, act, sigma));
    rep.merge(check_normal(h, a, sigma));
    rep.merge(check_cocycle(h, a, act, sigma));
    return rep;
}

// (a#h)(b#g) = a[(α⁻⁴(h₁₁)·β⁻²(b)) σ(α⁻³(h₁₂),α⁻²(g₁))] # α⁻¹(h₂g₂),
// evaluated for one pair of concrete elements.
inline TensorVal crossed_multiply(const HomHopfAlgebra& h, const HomAlgebra& a, const Matrix& act,
                                  const Matrix& sigma, const TensorVal& ea, const TensorVal& eh,
                                  const TensorVal& eb, const TensorVal& eg) {
    const std::size_t dh = h.dim(), da = a.dim;
    const HomCoalgebra hc = h.coalgebra();

    TensorVal v = TensorVal::product({ea, coprod_left(hc, eh), eb, coprod(hc, eg)});
    // factors: [a h11 h12 h2 b g1 g2]
    v = v.apply({1}, h.alpha_pow(-4), {dh});
    v = v.apply({2}, h.alpha_pow(-3), {dh});
    v = v.apply({4}, a.alpha_inv * a.alpha_inv, {da});
    v = v.apply({5}, h.alpha_pow(-2), {dh});
    v = v.apply({1, 4}, act, {da});   // [a (h11·b) h12 h2 g1 g2]
    v = v.apply({2, 4}, sigma, {da}); // [a (h11·b) σ(h12,g1) h2 g2]
    v = v.apply({1, 2}, a.mul, {da}); // [a X h2 g2]
    v = v.apply({0, 1}, a.mul, {da}); // [aX h2 g2]
    v = v.apply({1, 2}, h.mul(), {dh});
    v = v.apply({1}, h.alpha_inv(), {dh});
    return v; // rank 2: (A, H)
}

// Assembles the full multiplication map of A#σH, column per basis pair.
inline Matrix crossed_multiplication_map(const HomHopfAlgebra& h, const HomAlgebra& a,
                                         const Matrix& act, const Matrix& sigma) {
    const std::size_t dh = h.dim(), da = a.dim;
    const std::size_t dim = da * dh;
    const FieldSpec f = a.field;
    Matrix mul(f, dim, dim * dim);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < dh; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < dh; ++l) {
                    TensorVal prod = crossed_multiply(
                        h, a, act, sigma, TensorVal::basis(f, da, i), TensorVal::basis(f, dh, j),
                        TensorVal::basis(f, da, k), TensorVal::basis(f, dh, l));
                    Matrix col = prod.flatten();
                    std::size_t column = (i * dh + j) * dim + (k * dh + l);
                    mul.set_column(column, col);
                }
    return mul;
}

inline CrossedProduct build_crossed_product(const HomHopfAlgebra& h, const HomAlgebra& a,
                                            const Matrix& act, const Matrix& sigma,
                                            bool skip_condition_checks = false) {
    if (!skip_condition_checks) {
        Report rep = check_crossed_conditions(h, a, act, sigma);
        if (!rep.all_pass()) {
            std::string which;
            for (const auto& e : rep.entries)
                if (!e.pass) which += (which.empty() ? "" : ", ") + e.axiom;
            throw ConditionsFailed(which);
        }
    }
    std::vector<std::string> labels;
    labels.reserve(a.dim * h.dim());
    for (const auto& la : a.basis_labels)
        for (const auto& lh : h.bi.basis_labels) labels.push_back(la + "#" + lh);

    Matrix mul = crossed_multiplication_map(h, a, act, sigma);
    HomAlgebra carrier(a.field, std::move(labels), std::move(mul), kron(a.unit, h.unit()),
                       kron(a.alpha, h.alpha()));
    return CrossedProduct{std::move(carrier), a, h, act, sigma};
}

inline CrossedProduct build_smash_product(const HomHopfAlgebra& h, const HomAlgebra& a,
                                          const Matrix& act) {
    Report rep = check_module_algebra(h, a, act);
    if (!rep.all_pass()) {
        std::string which;
        for (const auto& e : rep.entries)
            if (!e.pass) which += (which.empty() ? "" : ", ") + e.axiom;
        throw ConditionsFailed(which);
    }
    return build_crossed_product(h, a, act, trivial_cocycle(h, a));
}

// Convolution inverse of an A-valued cocycle over the componentwise
// coalgebra on H⊗H.
inline ConvInverse invert_cocycle(const HomHopfAlgebra& h, const HomAlgebra& a,
                                  const Matrix& sigma) {
    HomCoalgebra hh = tensor_coalgebra(h.coalgebra(), h.coalgebra());
    return conv_invert(hh, a, sigma);
}

// The special crossed-product identity suite ("lemma25" in the CLI):
//  (1)(i)  h·σ(g,l)   = [σ(α⁻³(h₁₁),α⁻³(g₁₁)) σ(α⁻⁴(h₁₂g₁₂),α⁻²(l₁))] σ⁻¹(α⁻¹(h₂),α⁻²(g₂l₂))
//  (1)(ii) h·σ⁻¹(g,l) = σ(α⁻¹(h₁),α⁻²(g₁l₁)) [σ⁻¹(α⁻⁴(h₂₁g₂₁),α⁻²(l₂)) σ⁻¹(α⁻³(h₂₂),α⁻³(g₂₂))]
//  (2)(i)  (a#1)(b#1) = ab#1,  (1#h)(1#g) = σ(h₁,g₁)#α⁻¹(h₂g₂)
//  (2)(ii) (1#h)(a#1) = α⁻¹(h₁)·a#h₂,  (a#1)(1#h) = β(a)#α(h)
inline Report crossed_identities(const HomHopfAlgebra& h, const HomAlgebra& a, const Matrix& act,
                                 const Matrix& sigma) {
    Report rep;
    ConvInverse inv = invert_cocycle(h, a, sigma);
    if (!inv.ok()) throw NotInvertible("cocycle has no two-sided convolution inverse");
    const Matrix& sigma_inv = *inv.inverse;

    const std::size_t dh = h.dim(), da = a.dim;
    const FieldSpec f = a.field;
    const HomCoalgebra hc = h.coalgebra();

    rep.entries.push_back(pointwise_check(
        "identity_1i", {dh, dh, dh}, [&](const std::vector<std::size_t>& ix) {
            TensorVal lhs = TensorVal::product({TensorVal::basis(f, dh, ix[0]),
                                                TensorVal::basis(f, dh, ix[1]),
                                                TensorVal::basis(f, dh, ix[2])});
            lhs = lhs.apply({1, 2}, sigma, {da}).apply({0, 1}, act, {da});

            TensorVal rhs = TensorVal::product(
                {coprod_left(hc, TensorVal::basis(f, dh, ix[0])),
                 coprod_left(hc, TensorVal::basis(f, dh, ix[1])),
                 coprod(hc, TensorVal::basis(f, dh, ix[2]))});
            // [h11 h12 h2 g11 g12 g2 l1 l2]
            rhs = rhs.apply({0}, h.alpha_pow(-3), {dh}).apply({3}, h.alpha_pow(-3), {dh});
            rhs = rhs.apply({0, 3}, sigma, {da});      // [S1 h12 h2 g12 g2 l1 l2]
            rhs = rhs.apply({1, 3}, h.mul(), {dh});    // [S1 h12g12 h2 g2 l1 l2]
            rhs = rhs.apply({1}, h.alpha_pow(-4), {dh}).apply({4}, h.alpha_pow(-2), {dh});
            rhs = rhs.apply({1, 4}, sigma, {da});      // [S1 S2 h2 g2 l2]
            rhs = rhs.apply({0, 1}, a.mul, {da});      // [(S1S2) h2 g2 l2]
            rhs = rhs.apply({2, 3}, h.mul(), {dh});    // [(S1S2) h2 g2l2]
            rhs = rhs.apply({1}, h.alpha_inv(), {dh}).apply({2}, h.alpha_pow(-2), {dh});
            rhs = rhs.apply({1, 2}, sigma_inv, {da});
            rhs = rhs.apply({0, 1}, a.mul, {da});
            return lhs - rhs;
        }));

    rep.entries.push_back(pointwise_check(
        "identity_1ii", {dh, dh, dh}, [&](const std::vector<std::size_t>& ix) {
            TensorVal lhs = TensorVal::product({TensorVal::basis(f, dh, ix[0]),
                                                TensorVal::basis(f, dh, ix[1]),
                                                TensorVal::basis(f, dh, ix[2])});
            lhs = lhs.apply({1, 2}, sigma_inv, {da}).apply({0, 1}, act, {da});

            TensorVal rhs = TensorVal::product(
                {coprod_right(hc, TensorVal::basis(f, dh, ix[0])),
                 coprod_right(hc, TensorVal::basis(f, dh, ix[1])),
                 coprod(hc, TensorVal::basis(f, dh, ix[2]))});
            // [h1 h21 h22 g1 g21 g22 l1 l2]
            rhs = rhs.apply({3, 6}, h.mul(), {dh});    // [h1 h21 h22 g1l1 g21 g22 l2]
            rhs = rhs.apply({0}, h.alpha_inv(), {dh}).apply({3}, h.alpha_pow(-2), {dh});
            rhs = rhs.apply({0, 3}, sigma, {da});      // [S h21 h22 g21 g22 l2]
            rhs = rhs.apply({1, 3}, h.mul(), {dh});    // [S h21g21 h22 g22 l2]
            rhs = rhs.apply({1}, h.alpha_pow(-4), {dh}).apply({4}, h.alpha_pow(-2), {dh});
            rhs = rhs.apply({1, 4}, sigma_inv, {da});  // [S U1 h22 g22]
            rhs = rhs.apply({2}, h.alpha_pow(-3), {dh}).apply({3}, h.alpha_pow(-3), {dh});
            rhs = rhs.apply({2, 3}, sigma_inv, {da});  // [S U1 U2]
            rhs = rhs.apply({1, 2}, a.mul, {da});      // [S U1U2]
            rhs = rhs.apply({0, 1}, a.mul, {da});
            return lhs - rhs;
        }));

    rep.entries.push_back(pointwise_check(
        "identity_2i_base", {da, da}, [&](const std::vector<std::size_t>& ix) {
            TensorVal ea = TensorVal::basis(f, da, ix[0]);
            TensorVal eb = TensorVal::basis(f, da, ix[1]);
            TensorVal e1h = TensorVal::from_column(h.unit());
            TensorVal lhs = crossed_multiply(h, a, act, sigma, ea, e1h, eb, e1h);
            TensorVal rhs = TensorVal::product(
                TensorVal::product(ea, eb).apply({0, 1}, a.mul, {da}), e1h);
            return lhs - rhs;
        }));

    rep.entries.push_back(pointwise_check(
        "identity_2i_fibre", {dh, dh}, [&](const std::vector<std::size_t>& ix) {
            TensorVal e1a = TensorVal::from_column(a.unit);
            TensorVal lhs = crossed_multiply(h, a, act, sigma, e1a,
                                             TensorVal::basis(f, dh, ix[0]), e1a,
                                             TensorVal::basis(f, dh, ix[1]));
            TensorVal rhs = TensorVal::product(coprod(hc, TensorVal::basis(f, dh, ix[0])),
                                               coprod(hc, TensorVal::basis(f, dh, ix[1])));
            // [h1 h2 g1 g2]
            rhs = rhs.apply({0, 2}, sigma, {da});   // [σ(h1,g1) h2 g2]
            rhs = rhs.apply({1, 2}, h.mul(), {dh});
            rhs = rhs.apply({1}, h.alpha_inv(), {dh});
            return lhs - rhs;
        }));

    rep.entries.push_back(pointwise_check(
        "identity_2ii_act", {dh, da}, [&](const std::vector<std::size_t>& ix) {
            TensorVal e1a = TensorVal::from_column(a.unit);
            TensorVal e1h = TensorVal::from_column(h.unit());
            TensorVal lhs = crossed_multiply(h, a, act, sigma, e1a,
                                             TensorVal::basis(f, dh, ix[0]),
                                             TensorVal::basis(f, da, ix[1]), e1h);
            TensorVal rhs = TensorVal::product(coprod(hc, TensorVal::basis(f, dh, ix[0])),
                                               TensorVal::basis(f, da, ix[1]));
            rhs = rhs.apply({0}, h.alpha_inv(), {dh});
            rhs = rhs.apply({0, 2}, act, {da}); // [α⁻¹(h1)·a  h2]
            return lhs - rhs;
        }));

    rep.entries.push_back(pointwise_check(
        "identity_2ii_unit", {da, dh}, [&](const std::vector<std::size_t>& ix) {
            TensorVal e1a = TensorVal::from_column(a.unit);
            TensorVal e1h = TensorVal::from_column(h.unit());
            TensorVal lhs = crossed_multiply(h, a, act, sigma, TensorVal::basis(f, da, ix[0]),
                                             e1h, e1a, TensorVal::basis(f, dh, ix[1]));
            TensorVal rhs = TensorVal::product(
                TensorVal::basis(f, da, ix[0]).apply({0}, a.alpha, {da}),
                TensorVal::basis(f, dh, ix[1]).apply({0}, h.alpha(), {dh}));
            return lhs - rhs;
        }));

    return rep;
}

} // namespace homkit

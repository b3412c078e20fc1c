#pragma once

#include <homkit/convolution.hpp>
#include <homkit/crossed.hpp>
#include <homkit/report.hpp>
#include <homkit/structures.hpp>
#include <homkit/verify.hpp>

#include <string>
#include <utility>
#include <vector>

namespace homkit {

// Left Hom-H-comodule coalgebra: C with ρ : C -> H⊗C satisfying the left
// comodule axioms, the coproduct compatibility and (id⊗ε_C)∘ρ = η_H·ε_C.
inline Report check_comodule_coalgebra(const HomCoalgebra& c, const Matrix& rho,
                                       const HomHopfAlgebra& h) {
    if (rho.rows() != h.dim() * c.dim || rho.cols() != c.dim)
        throw ShapeMismatch("left coaction must be dim(H)*dim(C) x dim(C)");
    Report rep;
    const std::size_t dc = c.dim, dh = h.dim();
    const FieldSpec f = c.field;
    const Matrix idc = Matrix::identity(f, dc);

    rep.entries.push_back(
        matrix_check("left_comodule_counit", kron(h.counit(), idc) * rho, c.alpha, {dc}, {dc}));
    rep.entries.push_back(matrix_check("left_comodule_alpha_compat",
                                       kron(h.alpha(), c.alpha) * rho, rho * c.alpha, {dc},
                                       {dh, dc}));
    rep.entries.push_back(matrix_check("left_comodule_coassoc", kron(h.comul(), c.alpha) * rho,
                                       kron(h.alpha(), rho) * rho, {dc}, {dh, dh, dc}));

    // α²(c₍₋₁₎)⊗c₍₀₎₁⊗c₍₀₎₂ = c₁₍₋₁₎c₂₍₋₁₎⊗c₁₍₀₎⊗c₂₍₀₎
    Matrix alpha2 = h.alpha() * h.alpha();
    rep.entries.push_back(pointwise_check(
        "comodule_coalgebra_compat", {dc}, [&](const std::vector<std::size_t>& ix) {
            TensorVal ec = TensorVal::basis(f, dc, ix[0]);
            TensorVal lhs = ec.apply({0}, rho, {dh, dc});
            lhs = lhs.apply({0}, alpha2, {dh});
            lhs = lhs.apply({1}, c.comul, {dc, dc});

            TensorVal rhs = ec.apply({0}, c.comul, {dc, dc}); // [c1 c2]
            rhs = rhs.apply({0}, rho, {dh, dc});              // [m1 c10 c2]
            rhs = rhs.apply({2}, rho, {dh, dc});              // [m1 c10 m2 c20]
            rhs = rhs.apply({0, 2}, h.mul(), {dh});           // [m1m2 c10 c20]
            return lhs - rhs;
        }));

    rep.entries.push_back(matrix_check("comodule_coalgebra_counit", kron(Matrix::identity(f, dh), c.counit) * rho,
                                       h.unit() * c.counit, {dc}, {dh}));
    return rep;
}

// Δ(c×h) = c₁ × α⁻²(c₂₍₋₁₎)α⁻¹(h₁) ⊗ γ⁻¹(c₂₍₀₎) × h₂ on C⊗H.
inline HomCoalgebra build_smash_coproduct(const HomCoalgebra& c, const Matrix& rho,
                                          const HomHopfAlgebra& h,
                                          bool skip_condition_checks = false) {
    if (!skip_condition_checks) {
        Report rep = check_comodule_coalgebra(c, rho, h);
        if (!rep.all_pass()) {
            std::string which;
            for (const auto& e : rep.entries)
                if (!e.pass) which += (which.empty() ? "" : ", ") + e.axiom;
            throw ConditionsFailed(which);
        }
    }
    const std::size_t dc = c.dim, dh = h.dim();
    const FieldSpec f = c.field;
    const std::size_t dim = dc * dh;

    Matrix comul(f, dim * dim, dim);
    for (std::size_t ci = 0; ci < dc; ++ci)
        for (std::size_t hj = 0; hj < dh; ++hj) {
            TensorVal v = TensorVal::product(coprod(c, TensorVal::basis(f, dc, ci)),
                                             coprod(h.coalgebra(), TensorVal::basis(f, dh, hj)));
            // [c1 c2 h1 h2]
            v = v.apply({1}, rho, {dh, dc});          // [c1 m c20 h1 h2]
            v = v.apply({1}, h.alpha_pow(-2), {dh});
            v = v.apply({3}, h.alpha_inv(), {dh});
            v = v.apply({1, 3}, h.mul(), {dh});       // [c1 M c20 h2]
            v = v.apply({2}, c.alpha_inv, {dc});
            comul.set_column(ci * dh + hj, v.flatten());
        }

    std::vector<std::string> labels;
    labels.reserve(dim);
    for (const auto& lc : c.basis_labels)
        for (const auto& lh : h.bi.basis_labels) labels.push_back(lc + "x" + lh);
    return HomCoalgebra(f, std::move(labels), std::move(comul), kron(c.counit, h.counit()),
                        kron(c.alpha, h.alpha()));
}

// Twisted comodule cocycle condition:
// β(a₁)⊗α⁻¹(a₂₍₋₁₎)α(g)⊗a₂₍₀₎ = a₁σ(α⁻²(a₂₍₋₁₎₁),g₁)⊗α⁻²(a₂₍₋₁₎₂)g₂⊗a₂₍₀₎
inline Report check_twisted_comodule_cocycle(const HomAlgebra& a, const HomCoalgebra& ac,
                                             const HomHopfAlgebra& h, const Matrix& sigma,
                                             const Matrix& rho) {
    Report rep;
    const std::size_t da = a.dim, dh = h.dim();
    const FieldSpec f = a.field;

    rep.entries.push_back(pointwise_check(
        "twisted_comodule_cocycle", {da, dh}, [&](const std::vector<std::size_t>& ix) {
            TensorVal ea = TensorVal::basis(f, da, ix[0]);
            TensorVal eg = TensorVal::basis(f, dh, ix[1]);

            TensorVal lhs = TensorVal::product(coprod(ac, ea), eg); // [a1 a2 g]
            lhs = lhs.apply({1}, rho, {dh, da});                    // [a1 m a20 g]
            lhs = lhs.apply({1}, h.alpha_inv(), {dh});
            lhs = lhs.apply({3}, h.alpha(), {dh});
            lhs = lhs.apply({1, 3}, h.mul(), {dh});                 // [a1 M a20]
            lhs = lhs.apply({0}, a.alpha, {da});

            TensorVal rhs = TensorVal::product(coprod(ac, ea), coprod(h.coalgebra(), eg));
            // [a1 a2 g1 g2]
            rhs = rhs.apply({1}, rho, {dh, da});      // [a1 m a20 g1 g2]
            rhs = rhs.apply({1}, h.comul(), {dh, dh}); // [a1 m1 m2 a20 g1 g2]
            rhs = rhs.apply({1}, h.alpha_pow(-2), {dh});
            rhs = rhs.apply({2}, h.alpha_pow(-2), {dh});
            rhs = rhs.apply({1, 4}, sigma, {da});     // [a1 S m2 a20 g2]
            rhs = rhs.apply({0, 1}, a.mul, {da});     // [a1S m2 a20 g2]
            rhs = rhs.apply({1, 3}, h.mul(), {dh});   // [a1S M a20]
            return lhs - rhs;
        }));
    return rep;
}

// The nine bialgebra conditions for A#σH, evaluated independently.
inline Report check_biproduct_conditions(const HomAlgebra& a, const HomCoalgebra& ac,
                                         const HomHopfAlgebra& h, const Matrix& act,
                                         const Matrix& sigma, const Matrix& rho) {
    Report rep;
    const std::size_t da = a.dim, dh = h.dim();
    const FieldSpec f = a.field;
    const HomCoalgebra hc = h.coalgebra();

    // A1: ε_A is an algebra map
    {
        Report sub;
        sub.entries.push_back(matrix_check("A1_counit_multiplicative", ac.counit * a.mul,
                                           kron(ac.counit, ac.counit), {da, da}, {}));
        sub.entries.push_back(matrix_check("A1_counit_unit", ac.counit * a.unit,
                                           Matrix::identity(f, 1), {}, {}));
        rep.merge(sub);
    }
    // A2: ε_A(h·a) = ε_H(h)ε_A(a)
    rep.entries.push_back(matrix_check("A2_counit_action", ac.counit * act,
                                       kron(h.counit(), ac.counit), {dh, da}, {}));
    // A3: σ is a coalgebra map
    {
        Matrix perm = factor_permutation(f, {dh, dh, dh, dh}, {0, 2, 1, 3});
        Matrix comul_hh = perm * kron(h.comul(), h.comul());
        rep.entries.push_back(matrix_check("A3_sigma_comultiplicative", ac.comul * sigma,
                                           kron(sigma, sigma) * comul_hh, {dh, dh}, {da, da}));
        rep.entries.push_back(matrix_check("A3_sigma_counit", ac.counit * sigma,
                                           kron(h.counit(), h.counit()), {dh, dh}, {}));
    }
    // A4: Δ_A(h·a) = (α⁻²(h₁₁)·β⁻¹(a₁)) σ(α⁻¹(h₁₂),α⁻¹(a₂₍₋₁₎)) ⊗ h₂·β⁻¹(a₂₍₀₎)
    rep.entries.push_back(pointwise_check(
        "A4_coproduct_of_action", {dh, da}, [&](const std::vector<std::size_t>& ix) {
            TensorVal eh = TensorVal::basis(f, dh, ix[0]);
            TensorVal ea = TensorVal::basis(f, da, ix[1]);
            TensorVal lhs = TensorVal::product(eh, ea).apply({0, 1}, act, {da});
            lhs = lhs.apply({0}, ac.comul, {da, da});

            TensorVal rhs = TensorVal::product(coprod_left(hc, eh), coprod(ac, ea));
            // [h11 h12 h2 a1 a2]
            rhs = rhs.apply({4}, rho, {dh, da});    // [h11 h12 h2 a1 m a20]
            rhs = rhs.apply({0}, h.alpha_pow(-2), {dh});
            rhs = rhs.apply({3}, a.alpha_inv, {da});
            rhs = rhs.apply({0, 3}, act, {da});     // [X h12 h2 m a20]
            rhs = rhs.apply({1}, h.alpha_inv(), {dh});
            rhs = rhs.apply({3}, h.alpha_inv(), {dh});
            rhs = rhs.apply({1, 3}, sigma, {da});   // [X S h2 a20]
            rhs = rhs.apply({0, 1}, a.mul, {da});   // [XS h2 a20]
            rhs = rhs.apply({2}, a.alpha_inv, {da});
            rhs = rhs.apply({1, 2}, act, {da});     // [XS Y]
            return lhs - rhs;
        }));
    // A5: (α⁻¹(h₁)·a)₍₋₁₎ α(h₂) ⊗ (α⁻¹(h₁)·a)₍₀₎ = α(h₁a₍₋₁₎) ⊗ h₂·a₍₀₎
    rep.entries.push_back(pointwise_check(
        "A5_coaction_of_action", {dh, da}, [&](const std::vector<std::size_t>& ix) {
            TensorVal eh = TensorVal::basis(f, dh, ix[0]);
            TensorVal ea = TensorVal::basis(f, da, ix[1]);

            TensorVal lhs = TensorVal::product(coprod(hc, eh), ea); // [h1 h2 a]
            lhs = lhs.apply({0}, h.alpha_inv(), {dh});
            lhs = lhs.apply({0, 2}, act, {da});   // [X h2]
            lhs = lhs.apply({0}, rho, {dh, da});  // [m X0 h2]
            lhs = lhs.apply({2}, h.alpha(), {dh});
            lhs = lhs.apply({0, 2}, h.mul(), {dh}); // [M X0]

            TensorVal rhs = TensorVal::product(coprod(hc, eh), ea); // [h1 h2 a]
            rhs = rhs.apply({2}, rho, {dh, da});   // [h1 h2 m a0]
            rhs = rhs.apply({0, 2}, h.mul(), {dh}); // [h1m h2 a0]
            rhs = rhs.apply({0}, h.alpha(), {dh});
            rhs = rhs.apply({1, 2}, act, {da});    // [M Y]
            return lhs - rhs;
        }));
    // A6: Δ_A(ab) = a₁[(α⁻⁴(a₂₍₋₁₎₁)·β⁻²(b₁)) σ(α⁻³(a₂₍₋₁₎₂),α⁻²(b₂₍₋₁₎))]
    //              ⊗ β⁻¹(a₂₍₀₎ b₂₍₀₎)
    rep.entries.push_back(pointwise_check(
        "A6_coproduct_of_product", {da, da}, [&](const std::vector<std::size_t>& ix) {
            TensorVal ea = TensorVal::basis(f, da, ix[0]);
            TensorVal eb = TensorVal::basis(f, da, ix[1]);
            TensorVal lhs = TensorVal::product(ea, eb).apply({0, 1}, a.mul, {da});
            lhs = lhs.apply({0}, ac.comul, {da, da});

            TensorVal rhs = TensorVal::product(coprod(ac, ea), coprod(ac, eb));
            // [a1 a2 b1 b2]
            rhs = rhs.apply({1}, rho, {dh, da});       // [a1 am a20 b1 b2]
            rhs = rhs.apply({1}, h.comul(), {dh, dh}); // [a1 am1 am2 a20 b1 b2]
            rhs = rhs.apply({5}, rho, {dh, da});       // [a1 am1 am2 a20 b1 bm b20]
            rhs = rhs.apply({1}, h.alpha_pow(-4), {dh});
            rhs = rhs.apply({4}, inverse(a.alpha * a.alpha), {da});
            rhs = rhs.apply({1, 4}, act, {da});        // [a1 X am2 a20 bm b20]
            rhs = rhs.apply({2}, h.alpha_pow(-3), {dh});
            rhs = rhs.apply({4}, h.alpha_pow(-2), {dh});
            rhs = rhs.apply({2, 4}, sigma, {da});      // [a1 X S a20 b20]
            rhs = rhs.apply({1, 2}, a.mul, {da});      // [a1 XS a20 b20]
            rhs = rhs.apply({0, 1}, a.mul, {da});      // [Y a20 b20]
            rhs = rhs.apply({1, 2}, a.mul, {da});      // [Y Z]
            rhs = rhs.apply({1}, a.alpha_inv, {da});
            return lhs - rhs;
        }));
    // A7: σ(h₁,g₁)₍₋₁₎(h₂g₂) ⊗ σ(h₁,g₁)₍₀₎ = α(h₁g₁) ⊗ σ(α(h₂),α(g₂))
    rep.entries.push_back(pointwise_check(
        "A7_coaction_of_sigma", {dh, dh}, [&](const std::vector<std::size_t>& ix) {
            TensorVal eh = TensorVal::basis(f, dh, ix[0]);
            TensorVal eg = TensorVal::basis(f, dh, ix[1]);
            TensorVal v = TensorVal::product(coprod(hc, eh), coprod(hc, eg)); // [h1 h2 g1 g2]

            TensorVal lhs = v.apply({0, 2}, sigma, {da}); // [S h2 g2]
            lhs = lhs.apply({0}, rho, {dh, da});          // [sm s0 h2 g2]
            lhs = lhs.apply({2, 3}, h.mul(), {dh});       // [sm s0 M]
            lhs = lhs.apply({0, 2}, h.mul(), {dh});       // [N s0]

            TensorVal rhs = v.apply({0, 2}, h.mul(), {dh}); // [h1g1 h2 g2]
            rhs = rhs.apply({0}, h.alpha(), {dh});
            rhs = rhs.apply({1}, h.alpha(), {dh});
            rhs = rhs.apply({2}, h.alpha(), {dh});
            rhs = rhs.apply({1, 2}, sigma, {da}); // [M S]
            return lhs - rhs;
        }));
    // A8: Δ_A(1) = 1⊗1
    rep.entries.push_back(
        matrix_check("A8_coproduct_of_unit", ac.comul * a.unit, kron(a.unit, a.unit), {}, {da, da}));
    // A9: ρ is an algebra map
    {
        Matrix perm = factor_permutation(f, {dh, da, dh, da}, {0, 2, 1, 3});
        Matrix mul_ha = kron(h.mul(), a.mul) * perm;
        rep.entries.push_back(matrix_check("A9_coaction_multiplicative", rho * a.mul,
                                           mul_ha * kron(rho, rho), {da, da}, {dh, da}));
        rep.entries.push_back(matrix_check("A9_coaction_unit", rho * a.unit,
                                           kron(h.unit(), a.unit), {}, {dh, da}));
    }
    return rep;
}

// Crossed multiplication + smash comultiplication on A⊗H.
inline HomBialgebra assemble_bialgebra(const HomAlgebra& a, const HomCoalgebra& ac,
                                       const HomHopfAlgebra& h, const Matrix& act,
                                       const Matrix& sigma, const Matrix& rho,
                                       bool skip_condition_checks = false) {
    if (!skip_condition_checks) {
        Report rep = check_biproduct_conditions(a, ac, h, act, sigma, rho);
        if (!rep.all_pass()) {
            std::string which;
            for (const auto& e : rep.entries)
                if (!e.pass) which += (which.empty() ? "" : ", ") + e.axiom;
            throw ConditionsFailed(which);
        }
    }
    CrossedProduct cp = build_crossed_product(h, a, act, sigma);
    HomCoalgebra sc = build_smash_coproduct(ac, rho, h);
    HomAlgebra alg = cp.carrier;
    HomCoalgebra coa(alg.field, alg.basis_labels, sc.comul, sc.counit, alg.alpha);
    return HomBialgebra(std::move(alg), std::move(coa));
}

// σ-antipode: α∘S=S∘α and
//   (σ⊗m)Δ_{H⊗H}(id⊗S)Δ(h) = ε(h)1⊗1 = (σ⊗m)Δ_{H⊗H}(S⊗id)Δ(h),
// with Δ_{H⊗H} the componentwise coproduct.
inline Report check_sigma_antipode(const HomHopfAlgebra& h, const HomAlgebra& a,
                                   const Matrix& sigma, const Matrix& s) {
    Report rep;
    const std::size_t dh = h.dim(), da = a.dim;
    const FieldSpec f = a.field;
    const HomCoalgebra hc = h.coalgebra();

    rep.entries.push_back(
        matrix_check("sigma_antipode_alpha", h.alpha() * s, s * h.alpha(), {dh}, {dh}));

    auto convolution_side = [&](bool s_on_right) {
        return pointwise_check(
            s_on_right ? "sigma_antipode_right" : "sigma_antipode_left", {dh},
            [&, s_on_right](const std::vector<std::size_t>& ix) {
                TensorVal v = coprod(hc, TensorVal::basis(f, dh, ix[0])); // [h1 h2]
                v = v.apply({s_on_right ? std::size_t{1} : std::size_t{0}}, s, {dh});
                v = v.apply({0}, h.comul(), {dh, dh});   // [x1 x2 y]
                v = v.apply({2}, h.comul(), {dh, dh});   // [x1 x2 y1 y2]
                v = v.reorder({0, 2, 1, 3});             // [x1 y1 x2 y2]
                v = v.apply({0, 1}, sigma, {da});        // [σ(x1,y1) x2 y2]
                v = v.apply({1, 2}, h.mul(), {dh});      // [S M]
                TensorVal expected = Scalar(h.counit().at(0, ix[0])) *
                                     TensorVal::product(TensorVal::from_column(a.unit),
                                                        TensorVal::from_column(h.unit()));
                return v - expected;
            });
    };
    rep.entries.push_back(convolution_side(true));
    rep.entries.push_back(convolution_side(false));
    return rep;
}

// S(a#h) = (1#S_H(α⁻³(a₍₋₁₎)α⁻²(h))) · (S_A(β⁻²(a₍₀₎))#1) inside A#σH.
inline HomHopfAlgebra build_biproduct_antipode(const HomBialgebra& assembled,
                                               const HomAlgebra& a, const HomCoalgebra& ac,
                                               const HomHopfAlgebra& h, const Matrix& rho,
                                               const Matrix& s_h, const Matrix& s_a,
                                               const Matrix& sigma) {
    const std::size_t da = a.dim, dh = h.dim();
    const FieldSpec f = a.field;

    // preconditions: S_A is the convolution inverse of id_A and commutes with β
    Matrix conv_unit = a.unit * ac.counit;
    if (convolve(ac, a, Matrix::identity(f, da), s_a) != conv_unit ||
        convolve(ac, a, s_a, Matrix::identity(f, da)) != conv_unit)
        throw PreconditionFailed("S_A is not a convolution inverse of id_A");
    if (a.alpha * s_a != s_a * a.alpha)
        throw PreconditionFailed("S_A does not commute with the structure map");
    if (!check_sigma_antipode(h, a, sigma, s_h).all_pass())
        throw PreconditionFailed("S_H is not a sigma-antipode");

    Matrix beta_inv2 = inverse(a.alpha * a.alpha);
    Matrix antipode(f, da * dh, da * dh);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < dh; ++j) {
            TensorVal v = TensorVal::product(TensorVal::basis(f, da, i),
                                             TensorVal::basis(f, dh, j));
            v = v.apply({0}, rho, {dh, da});         // [am a0 h]
            v = v.apply({0}, h.alpha_pow(-3), {dh});
            v = v.apply({2}, h.alpha_pow(-2), {dh});
            v = v.apply({0, 2}, h.mul(), {dh});      // [M a0]
            v = v.apply({0}, s_h, {dh});
            v = v.apply({1}, s_a * beta_inv2, {da}); // [S_H(M) S_A(β⁻²a0)]
            // (1 # S_H(M)) (S_A(..) # 1)
            TensorVal quad = TensorVal::product(TensorVal::from_column(a.unit), v);
            quad = TensorVal::product(quad, TensorVal::from_column(h.unit()));
            // [1_A S_H(M) S_A(..) 1_H]
            quad = quad.apply({0, 1, 2, 3}, assembled.mul, {da, dh});
            antipode.set_column(i * dh + j, quad.flatten());
        }
    return HomHopfAlgebra(assembled, std::move(antipode));
}

struct AdmissiblePairResult {
    Report report;
    HomBialgebra bialgebra;
    HomHopfAlgebra hopf;
};

// Radford-style admissible pair: trivial σ, the nine conditions plus a full
// Hopf assembly (S_A from conv_invert(id_A), S_H as the σ-antipode).
inline AdmissiblePairResult check_admissible_pair(const HomAlgebra& a, const HomCoalgebra& ac,
                                                  const HomHopfAlgebra& h, const Matrix& act,
                                                  const Matrix& rho) {
    Matrix sigma = trivial_cocycle(h, a);
    Report rep = check_biproduct_conditions(a, ac, h, act, sigma, rho);
    rep.merge(check_comodule_coalgebra(ac, rho, h));
    rep.merge(check_module_algebra(h, a, act));
    if (!rep.all_pass())
        return AdmissiblePairResult{std::move(rep), HomBialgebra{}, HomHopfAlgebra{}};

    Matrix s_a = conv_inverse_or_throw(ac, a, Matrix::identity(a.field, a.dim), "id_A");
    rep.merge(check_sigma_antipode(h, a, sigma, h.antipode));

    HomBialgebra bi = assemble_bialgebra(a, ac, h, act, sigma, rho);
    HomHopfAlgebra hopf = build_biproduct_antipode(bi, a, ac, h, rho, h.antipode, s_a, sigma);
    rep.merge(verify_hopf(hopf));
    return AdmissiblePairResult{std::move(rep), std::move(bi), std::move(hopf)};
}

} // namespace homkit

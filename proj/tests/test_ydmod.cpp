#include <doctest.h>

#include <homkit/corpus.hpp>
#include <homkit/homcore.hpp>
#include <homkit/verify.hpp>
#include <homkit/ydmod.hpp>

using namespace homkit;

namespace {

FieldSpec Q = FieldSpec::rationals();

HomAlgebra kc2_algebra(FieldSpec f) {
    Tensor3 mul(f, 2, 2, 2);
    mul.at(0, 0, 0) = Scalar::one(f);
    mul.at(0, 1, 1) = Scalar::one(f);
    mul.at(1, 0, 1) = Scalar::one(f);
    mul.at(1, 1, 0) = Scalar::one(f);
    return HomAlgebra::from_tensor(f, {"1", "u"}, mul, Matrix::basis_column(f, 2, 0),
                                   Matrix::identity(f, 2));
}

HomCoalgebra kc2_coalgebra(FieldSpec f) {
    Tensor3 com(f, 2, 2, 2);
    com.at(0, 0, 0) = Scalar::one(f);
    com.at(1, 1, 1) = Scalar::one(f);
    Matrix eps(f, 1, 2);
    eps.at(0, 0) = Scalar::one(f);
    eps.at(0, 1) = Scalar::one(f);
    return HomCoalgebra::from_tensor(f, {"1", "u"}, com, eps, Matrix::identity(f, 2));
}

// the character module: h·m = χ(h)m with χ = (1,−1,0,0), ρ(m) = m⊗g, μ = id
YDModule character_module(FieldSpec f) {
    YDModule m;
    m.dim = 1;
    m.mu = Matrix::identity(f, 1);
    m.action = Matrix(f, 1, 4);
    m.action.at(0, 0) = Scalar(f, 1);
    m.action.at(0, 1) = Scalar(f, -1);
    m.coaction = Matrix(f, 4, 1);
    m.coaction.at(1, 0) = Scalar::one(f);
    return m;
}

YDModule trivial_module(FieldSpec f) {
    YDModule m;
    m.dim = 1;
    m.mu = Matrix::identity(f, 1);
    m.action = Matrix(f, 1, 4);
    m.action.at(0, 0) = Scalar::one(f);
    m.action.at(0, 1) = Scalar::one(f);
    m.coaction = Matrix(f, 4, 1);
    m.coaction.at(0, 0) = Scalar::one(f);
    return m;
}

} // namespace

TEST_CASE("H(sigma_t) with Delta on both sides is a bicomodule algebra") {
    HomHopfAlgebra h = corpus::h4();
    for (long long t : {0LL, 1LL}) {
        BicomoduleAlgebra hs = h_sigma_bicomodule(h, corpus::sigma_t_form(Scalar(Q, t)));
        INFO("t = ", t);
        CHECK(check_bicomodule_algebra(hs, h).all_pass());
    }

    // trivial coactions on any algebra form a bicomodule
    HomAlgebra a = corpus::kaa();
    BicomoduleAlgebra triv{a, kron(a.alpha, h.unit()), kron(h.unit(), a.alpha)};
    CHECK(check_bicomodule_algebra(triv, h).all_pass());

    // breaking the compatibility is detected
    BicomoduleAlgebra broken{a, kron(a.alpha, h.unit()),
                             kron(h.unit() + h.alpha() * h.unit(), a.alpha)};
    CHECK_FALSE(check_bicomodule_algebra(broken, h).all_pass());
}

TEST_CASE("B ltimes A: corpus instance, trivial coaction, trivial B") {
    HomHopfAlgebra h = corpus::h4();
    HomAlgebra kaa = corpus::kaa();
    Matrix act = corpus::h4_action_on_kaa();
    BicomoduleAlgebra hs = h_sigma_bicomodule(h, corpus::sigma_t_form(Scalar(Q, 1)));

    // A = H(sigma_1) with Delta as the left coaction
    CHECK(check_left_comodule_algebra(hs.a, h.comul(), h).all_pass());
    HomAlgebra lt = build_b_ltimes_a(h, kaa, act, hs.a, h.comul());
    CHECK(verify_algebra(lt).all_pass());
    CHECK(lt.dim == 8);

    // trivial coaction: the product is the componentwise tensor product
    Matrix trivial_left = kron(h.unit(), kaa.alpha);
    HomAlgebra lt_triv = build_b_ltimes_a(h, kaa, act, kaa, trivial_left);
    CHECK(lt_triv.mul == tensor_algebra(kaa, kaa).mul);

    // B = k: the carrier is A itself
    Tensor3 kt(Q, 1, 1, 1);
    kt.at(0, 0, 0) = Scalar::one(Q);
    HomAlgebra ka = HomAlgebra::from_tensor(Q, {"1"}, kt, Matrix::basis_column(Q, 1, 0),
                                            Matrix::identity(Q, 1));
    HomAlgebra ltk = build_b_ltimes_a(h, ka, trivial_action(h, ka), hs.a, h.comul());
    CHECK(ltk.mul == hs.a.mul);
}

TEST_CASE("rho_bar makes B ltimes A a left biproduct-comodule algebra") {
    HomHopfAlgebra h = corpus::h4();
    HomAlgebra b = kc2_algebra(Q);
    HomCoalgebra bc = kc2_coalgebra(Q);
    Matrix act_b = trivial_action(h, b);
    Matrix rho_b = kron(h.unit(), b.alpha);
    BicomoduleAlgebra hs = h_sigma_bicomodule(h, corpus::sigma_t_form(Scalar(Q, 1)));

    RhoBarResult rb = build_rho_bar(h, b, bc, act_b, rho_b, hs.a, h.comul());
    for (const auto& e : rb.report.entries) {
        INFO(e.axiom);
        CHECK(e.pass);
    }

    // trivial left coaction on A: the same checks still pass
    HomAlgebra kaa = corpus::kaa();
    RhoBarResult rb2 = build_rho_bar(h, b, bc, act_b, rho_b, kaa, kron(h.unit(), kaa.alpha));
    CHECK(rb2.report.all_pass());
}

TEST_CASE("sigma_tilde: cocycle transport to the biproduct") {
    HomHopfAlgebra h = corpus::h4();
    Matrix s1 = corpus::sigma_t_form(Scalar(Q, 1));

    HomAlgebra b = kc2_algebra(Q);
    HomCoalgebra bc = kc2_coalgebra(Q);
    SigmaTildeResult st = build_sigma_tilde(h, b, bc, trivial_action(h, b),
                                            kron(h.unit(), b.alpha), s1);
    for (const auto& e : st.report.entries) {
        INFO(e.axiom);
        CHECK(e.pass);
    }

    // B = k with the inverse cocycle (a right cocycle as well)
    Tensor3 kt(Q, 1, 1, 1);
    kt.at(0, 0, 0) = Scalar::one(Q);
    HomAlgebra ka = HomAlgebra::from_tensor(Q, {"1"}, kt, Matrix::basis_column(Q, 1, 0),
                                            Matrix::identity(Q, 1));
    HomCoalgebra kc = HomCoalgebra::from_tensor(Q, {"1"}, kt, Matrix::identity(Q, 1),
                                                Matrix::identity(Q, 1));
    SigmaTildeResult st2 = build_sigma_tilde(h, ka, kc, trivial_action(h, ka),
                                             kron(h.unit(), ka.alpha), z2l_inverse(h, s1));
    CHECK(st2.report.all_pass());

    // trivial sigma: both sides are the plain smash-type product
    SigmaTildeResult st0 = build_sigma_tilde(h, b, bc, trivial_action(h, b),
                                             kron(h.unit(), b.alpha), trivial_form(h));
    CHECK(st0.report.all_pass());
    CHECK(st0.form == trivial_form(st0.biproduct));
}

TEST_CASE("one-dimensional YD modules over H4 and their duals") {
    HomHopfAlgebra h = corpus::h4();
    Matrix triv = trivial_form(h);

    // the trivial module passes
    CHECK(check_yd_module_h_sigma(h, triv, trivial_module(Q)).all_pass());

    // the character module passes, and both duals pass over H(σ⁻¹) = H
    YDModule m = character_module(Q);
    CHECK(check_yd_module_h_sigma(h, triv, m).all_pass());
    for (auto variant : {DualVariant::S1, DualVariant::S2}) {
        YDModule d = build_dual_yd(h, triv, m, variant);
        INFO("variant ", variant == DualVariant::S1 ? 1 : 2);
        CHECK(check_yd_module_h_sigma(h, z2l_inverse(h, triv), d).all_pass());
        // dual structure map is (μ⁻¹)ᵀ
        CHECK(d.mu == inverse(m.mu).transpose());
        // double dual returns an isomorphic (here: equal) module
        YDModule dd = build_dual_yd(h, z2l_inverse(h, triv), d,
                                    variant == DualVariant::S1 ? DualVariant::S2
                                                               : DualVariant::S1);
        CHECK(check_yd_module_h_sigma(h, triv, dd).all_pass());
    }

    // a perturbed coaction breaks the compatibility
    YDModule bad = m;
    bad.coaction = Matrix(Q, 4, 1);
    bad.coaction.at(2, 0) = Scalar::one(Q); // m ⊗ x is not even a comodule
    CHECK_FALSE(check_yd_module_h_sigma(h, triv, bad).all_pass());
}

TEST_CASE("no one-dimensional YD module exists over H4(sigma_1)") {
    HomHopfAlgebra h = corpus::h4();
    Matrix s1 = corpus::sigma_t_form(Scalar(Q, 1));

    // the canonical candidate fails exactly the module associativity axiom
    Report rep = check_yd_module_h_sigma(h, s1, character_module(Q));
    for (const auto& e : rep.entries) {
        INFO(e.axiom);
        CHECK(e.pass == (e.axiom != "module_associative"));
    }
    const CheckEntry* assoc = rep.find("module_associative");
    REQUIRE(assoc != nullptr);
    CHECK(assoc->witness_total == 4); // the four (x,y)-pairs

    // exhaustive certificate over GF(5): no (χ, c) satisfies the three
    // module axioms over H(σ₁); independent plain-loop evaluation
    FieldSpec f5 = FieldSpec::prime(5);
    HomHopfAlgebra h5 = corpus::h4(f5);
    HomAlgebra hs5 = deform_two_sided(h5, corpus::sigma_t_form(Scalar(f5, 1)));
    Tensor3 mul5 = hs5.mul_tensor();
    std::size_t survivors = 0, tested = 0;
    for (long long c = 1; c < 5; ++c)
        for (long long x0 = 0; x0 < 5; ++x0)
            for (long long x1 = 0; x1 < 5; ++x1)
                for (long long x2 = 0; x2 < 5; ++x2)
                    for (long long x3 = 0; x3 < 5; ++x3) {
                        ++tested;
                        Scalar chi[4] = {Scalar(f5, x0), Scalar(f5, x1), Scalar(f5, x2),
                                         Scalar(f5, x3)};
                        Scalar cs(f5, c);
                        // 1·m = μ(m)
                        if (chi[0] != cs) continue;
                        // μ(h·m) = β(h)·μ(m), i.e. χ∘α = χ
                        bool ok = true;
                        for (std::size_t j = 2; j < 4 && ok; ++j)
                            if (chi[j] != -chi[j]) ok = false;
                        if (!ok) continue;
                        // β(h)·(h'·m) = (h·_σ h')·μ(m)
                        for (std::size_t i = 0; i < 4 && ok; ++i)
                            for (std::size_t j = 0; j < 4 && ok; ++j) {
                                Scalar sign = i >= 2 ? Scalar(f5, -1) : Scalar(f5, 1);
                                Scalar lhs = sign * chi[i] * chi[j];
                                Scalar rhs = Scalar::zero(f5);
                                for (std::size_t k = 0; k < 4; ++k)
                                    rhs += mul5.at(i, j, k) * chi[k];
                                if (lhs != rhs * cs) ok = false;
                            }
                        if (ok) ++survivors;
                    }
    CHECK(tested == 4 * 625);
    CHECK(survivors == 0);
}

TEST_CASE("regular structures on H(sigma_1) satisfy module and comodule axioms only") {
    HomHopfAlgebra h = corpus::h4();
    Matrix s1 = corpus::sigma_t_form(Scalar(Q, 1));
    BicomoduleAlgebra hs = h_sigma_bicomodule(h, s1);

    YDModule reg;
    reg.dim = 4;
    reg.mu = h.alpha();
    reg.action = hs.a.mul;
    reg.coaction = h.comul();
    Report rep = check_yd_module_h_sigma(h, s1, reg);
    CHECK(rep.passed("module_unit"));
    CHECK(rep.passed("module_alpha_compat"));
    CHECK(rep.passed("module_associative"));
    CHECK(rep.passed("comodule_counit"));
    CHECK(rep.passed("comodule_coassoc"));
    // the mixed compatibility fails for the regular pair, consistently in
    // both specialized forms
    CHECK_FALSE(rep.passed("yd_compatibility"));
    CHECK_FALSE(rep.passed("compat_specialized_C"));
    CHECK_FALSE(rep.passed("compat_specialized_D"));
    CHECK(rep.passed("specialization_equivalence"));
}

TEST_CASE("diagonal crossed product: associative with default harpoons") {
    HomHopfAlgebra h = corpus::h4();
    BicomoduleAlgebra h0 = h_sigma_bicomodule(h, trivial_form(h));

    DualResult dl = dual(h);
    HomCoalgebra carrier = tensor_coalgebra(dl.hopf.coalgebra(), h.coalgebra());
    DiagonalCrossedProduct dcp = diagonal_crossed_product(h, h0, default_harpoon_right(h),
                                                          default_harpoon_left(h), &carrier);
    CHECK(dcp.carrier.dim == 16);
    CHECK(dcp.report.passed("hom_associativity"));
    CHECK(dcp.report.passed("left_unit"));
    CHECK(dcp.report.passed("right_unit"));
    CHECK(dcp.report.passed("alpha_multiplicative"));

    // coactions materialize; counit laws hold against the componentwise
    // carrier, coassociativity does not (that carrier is not the double)
    REQUIRE(dcp.right_coaction.has_value());
    REQUIRE(dcp.left_coaction.has_value());
    CHECK(dcp.report.passed("right_coaction_counit"));
    CHECK(dcp.report.passed("left_coaction_counit"));
    CHECK_FALSE(dcp.report.passed("right_coaction_coassoc"));
    CHECK_FALSE(dcp.report.passed("left_coaction_coassoc"));
}

TEST_CASE("diagonal crossed product with trivial coactions is the tensor algebra") {
    HomHopfAlgebra h = corpus::h4();
    HomAlgebra a = corpus::kaa();
    BicomoduleAlgebra triv{a, kron(a.alpha, h.unit()), kron(h.unit(), a.alpha)};
    DiagonalCrossedProduct dcp = diagonal_crossed_product(h, triv);
    CHECK(dcp.report.all_pass());
    CHECK(dcp.carrier.mul == tensor_algebra(dual(h).hopf.algebra(), a).mul);

    // ε ⋈ 1_A is the unit: multiplying by it applies the structure map
    const std::size_t dim = 8;
    Matrix unit_col = dcp.carrier.unit;
    for (std::size_t i = 0; i < dim; ++i) {
        Matrix x = Matrix::basis_column(h.field(), dim, i);
        CHECK(dcp.carrier.multiply(unit_col, x) == dcp.carrier.alpha * x);
        CHECK(dcp.carrier.multiply(x, unit_col) == dcp.carrier.alpha * x);
    }
}

TEST_CASE("diagonal crossed product over H(sigma_1)") {
    HomHopfAlgebra h = corpus::h4();
    BicomoduleAlgebra hs = h_sigma_bicomodule(h, corpus::sigma_t_form(Scalar(Q, 1)));
    DiagonalCrossedProduct dcp = diagonal_crossed_product(h, hs);
    // associativity recorded: it holds for this instance as well
    CHECK(dcp.report.passed("hom_associativity"));
}

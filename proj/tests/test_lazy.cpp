#include <doctest.h>

#include <homkit/corpus.hpp>
#include <homkit/homcore.hpp>
#include <homkit/lazy.hpp>
#include <homkit/verify.hpp>

using namespace homkit;

TEST_CASE("sigma_t is a lazy left 2-cocycle on H4") {
    HomHopfAlgebra h = corpus::h4();
    for (long long t : {0LL, 1LL, 2LL}) {
        Matrix form = corpus::sigma_t_form(Scalar(h.field(), t));
        INFO("t = ", t);
        CHECK(check_left_cocycle(h, form).all_pass());
        CHECK(check_lazy(h, form).all_pass());
        CHECK(check_normal_form(h, form).all_pass());
        // a lazy left cocycle is also a right cocycle
        CHECK(check_right_cocycle(h, form).all_pass());
    }
    CHECK(check_left_cocycle(h, trivial_form(h)).all_pass());
    CHECK(check_lazy(h, trivial_form(h)).all_pass());
}

TEST_CASE("perturbing sigma(x,y) to +t/2 breaks the cocycle data") {
    HomHopfAlgebra h = corpus::h4();
    Matrix form = corpus::sigma_t_form(Scalar(h.field(), 1));
    form.at(2, 3) = -form.at(2, 3); // σ(x,y) := +1/2
    bool lazy_ok = check_lazy(h, form).all_pass();
    bool left_ok = check_left_cocycle(h, form).all_pass();
    CHECK_FALSE((lazy_ok && left_ok));
}

TEST_CASE("deformed multiplication: t=0 leaves H4 unchanged, t=1 gives x·x = 1/2") {
    HomHopfAlgebra h = corpus::h4();
    FieldSpec q = h.field();

    HomAlgebra unchanged = deform(h, corpus::sigma_t_form(Scalar(q, 0)), DeformSide::Left);
    CHECK(unchanged.mul == h.mul());

    HomAlgebra def = deform_two_sided(h, corpus::sigma_t_form(Scalar(q, 1)));
    CHECK(verify_algebra(def).all_pass());
    Tensor3 table = def.mul_tensor();
    CHECK(table.at(2, 2, 0) == Scalar::from_string(q, "1/2"));
    for (std::size_t out = 1; out < 4; ++out) CHECK(table.at(2, 2, out).is_zero());
    // left and right deformations coincide for a lazy cocycle
    HomAlgebra right = deform(h, corpus::sigma_t_form(Scalar(q, 1)), DeformSide::Right);
    CHECK(def.mul == right.mul);
}

TEST_CASE("left deformation is Hom-associative iff the left cocycle identity holds") {
    FieldSpec f5 = FieldSpec::prime(5);
    HomHopfAlgebra h = corpus::h4(f5);
    Matrix base = corpus::sigma_t_form(Scalar(f5, 1));

    int disagreements = 0, failures_seen = 0, passes_seen = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (long long delta : {1LL, 2LL}) {
                Matrix form = base;
                form.at(i, j) += Scalar(f5, delta);
                bool cocycle = check_left_cocycle(h, form).passed("left_cocycle");
                HomAlgebra def = deform(h, form, DeformSide::Left, true);
                bool assoc = verify_algebra(def).passed("hom_associativity");
                if (cocycle != assoc) ++disagreements;
                if (cocycle) ++passes_seen;
                else ++failures_seen;
            }
    CHECK(disagreements == 0);
    CHECK(failures_seen > 0);
}

TEST_CASE("coboundary of the counit is the trivial cocycle") {
    HomHopfAlgebra h = corpus::h4();
    CHECK(coboundary_d1(h, h.counit()) == trivial_form(h));
}

TEST_CASE("coboundaries are normalized lazy left cocycles; D1 is multiplicative") {
    FieldSpec f3 = FieldSpec::prime(3);
    // kC2 group algebra has a richer lazy functional space than H4
    Tensor3 mul(f3, 2, 2, 2);
    mul.at(0, 0, 0) = Scalar::one(f3);
    mul.at(0, 1, 1) = Scalar::one(f3);
    mul.at(1, 0, 1) = Scalar::one(f3);
    mul.at(1, 1, 0) = Scalar::one(f3);
    Tensor3 com(f3, 2, 2, 2);
    com.at(0, 0, 0) = Scalar::one(f3);
    com.at(1, 1, 1) = Scalar::one(f3);
    Matrix eps(f3, 1, 2);
    eps.at(0, 0) = Scalar::one(f3);
    eps.at(0, 1) = Scalar::one(f3);
    HomAlgebra alg = HomAlgebra::from_tensor(f3, {"1", "u"}, mul, Matrix::basis_column(f3, 2, 0),
                                             Matrix::identity(f3, 2));
    HomCoalgebra coa =
        HomCoalgebra::from_tensor(f3, {"1", "u"}, com, eps, Matrix::identity(f3, 2));
    HomHopfAlgebra kc2(HomBialgebra(alg, coa), Matrix::identity(f3, 2));

    Matrix gamma(f3, 1, 2);
    gamma.at(0, 0) = Scalar::one(f3);
    gamma.at(0, 1) = Scalar(f3, 2); // γ(u) = 2, invertible under convolution
    Matrix d1 = coboundary_d1(kc2, gamma);
    CHECK(check_left_cocycle(kc2, d1).all_pass());
    CHECK(check_lazy(kc2, d1).all_pass());
    CHECK(check_normal_form(kc2, d1).all_pass());

    // D¹(γ₁*γ₂) = D¹(γ₁)*D¹(γ₂)
    Matrix gamma2(f3, 1, 2);
    gamma2.at(0, 0) = Scalar::one(f3);
    gamma2.at(0, 1) = Scalar(f3, 1);
    Matrix conv_gamma = convolve(kc2.coalgebra(), ground_algebra(f3), gamma, gamma2);
    CHECK(coboundary_d1(kc2, conv_gamma) ==
          z2l_product(kc2, coboundary_d1(kc2, gamma), coboundary_d1(kc2, gamma2)));
}

TEST_CASE("Z2L group operations on the sigma_t family") {
    HomHopfAlgebra h = corpus::h4();
    FieldSpec q = h.field();
    Matrix s1 = corpus::sigma_t_form(Scalar(q, 1));
    Matrix s2 = corpus::sigma_t_form(Scalar(q, 2));

    for (const Matrix& prod : {z2l_product(h, s1, s1), z2l_product(h, s1, s2)}) {
        CHECK(check_left_cocycle(h, prod).all_pass());
        CHECK(check_lazy(h, prod).all_pass());
        CHECK(invert_form(h, prod).ok());
    }
    // σ * (ε⊗ε) = σ
    CHECK(z2l_product(h, s1, trivial_form(h)) == s1);
    // σ * σ⁻¹ = ε⊗ε
    CHECK(z2l_product(h, s1, z2l_inverse(h, s1)) == trivial_form(h));
    // the family is additive in t here: σ_1 * σ_1 = σ_2
    CHECK(z2l_product(h, s1, s1) == s2);
}

TEST_CASE("sigma_t inverse solves the 16x16 system and multiplies back") {
    HomHopfAlgebra h = corpus::h4();
    Matrix form = corpus::sigma_t_form(Scalar(h.field(), 1));
    ConvInverse inv = invert_form(h, form);
    REQUIRE(inv.ok());
    // independent multiply-back through the entrywise convolution
    CHECK(convolve_forms(h, form, *inv.inverse) == trivial_form(h));
    CHECK(convolve_forms(h, *inv.inverse, form) == trivial_form(h));
}

TEST_CASE("coboundary search certificates") {
    FieldSpec f3 = FieldSpec::prime(3);
    HomHopfAlgebra h = corpus::h4(f3);

    // the trivial cocycle is a coboundary with witness ε
    CoboundarySearch triv = is_coboundary(h, trivial_form(h));
    REQUIRE(triv.witness.has_value());
    CHECK(coboundary_d1(h, *triv.witness) == trivial_form(h));
    CHECK(triv.exhaustive);

    // laziness pins γ(g) = 1 on H4, so ε is the only candidate
    CHECK(triv.candidates_tested == 1);

    // round trip: D¹ of an enumerated lazy functional is recognized
    AffineFunctionalSpace space = lazy_functional_space(h);
    Matrix gamma0 = space.particular;
    CoboundarySearch rt = is_coboundary(h, coboundary_d1(h, gamma0));
    REQUIRE(rt.witness.has_value());
    CHECK(coboundary_d1(h, *rt.witness) == coboundary_d1(h, gamma0));

    // σ_{t=1} is certified not to be a coboundary, over GF(3) and GF(5)
    CoboundarySearch no3 = is_coboundary(h, corpus::sigma_t_form(Scalar(f3, 1)));
    CHECK_FALSE(no3.witness.has_value());
    CHECK(no3.exhaustive);
    FieldSpec f5 = FieldSpec::prime(5);
    HomHopfAlgebra h5 = corpus::h4(f5);
    CoboundarySearch no5 = is_coboundary(h5, corpus::sigma_t_form(Scalar(f5, 1)));
    CHECK_FALSE(no5.witness.has_value());
    CHECK(no5.exhaustive);
}

TEST_CASE("lazy cohomology of H4 over GF(3): the sigma_t family, three classes") {
    FieldSpec f3 = FieldSpec::prime(3);
    HomHopfAlgebra h = corpus::h4(f3);
    CohomologyClassSet cs = lazy_cohomology(h);

    CHECK(cs.exhaustive);
    CHECK(cs.candidates_scanned == 81);
    REQUIRE(cs.cocycles.size() == 3);
    CHECK(cs.coboundaries.size() == 1);
    CHECK(cs.representatives.size() == 3);
    CHECK(cs.class_sizes == std::vector<std::size_t>{1, 1, 1});

    // Z²_L is exactly the sigma_t family
    for (long long t : {0LL, 1LL, 2LL}) {
        Matrix form = corpus::sigma_t_form(Scalar(f3, t));
        bool found = false;
        for (const auto& c : cs.cocycles) found = found || c == form;
        INFO("t = ", t);
        CHECK(found);
    }

    // identity class contains the trivial form
    CHECK(cs.coboundaries[0] == trivial_form(h));

    // centrality of B²_L inside Z²_L
    for (const auto& b : cs.coboundaries)
        for (const auto& s : cs.cocycles) CHECK(z2l_product(h, b, s) == z2l_product(h, s, b));

    // the emitted 3×3 group table is the cyclic group
    REQUIRE(cs.group_table.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Matrix prod = z2l_product(h, cs.representatives[i], cs.representatives[j]);
            CHECK(cs.group_table[i][j] < 3);
            Matrix quot =
                z2l_product(h, prod, z2l_inverse(h, cs.representatives[cs.group_table[i][j]]));
            CHECK(quot == trivial_form(h)); // B²_L is trivial here
        }
}

TEST_CASE("lazy cohomology of kC2 over GF(3) contains the identity class") {
    FieldSpec f3 = FieldSpec::prime(3);
    Tensor3 mul(f3, 2, 2, 2);
    mul.at(0, 0, 0) = Scalar::one(f3);
    mul.at(0, 1, 1) = Scalar::one(f3);
    mul.at(1, 0, 1) = Scalar::one(f3);
    mul.at(1, 1, 0) = Scalar::one(f3);
    Tensor3 com(f3, 2, 2, 2);
    com.at(0, 0, 0) = Scalar::one(f3);
    com.at(1, 1, 1) = Scalar::one(f3);
    Matrix eps(f3, 1, 2);
    eps.at(0, 0) = Scalar::one(f3);
    eps.at(0, 1) = Scalar::one(f3);
    HomAlgebra alg = HomAlgebra::from_tensor(f3, {"1", "u"}, mul, Matrix::basis_column(f3, 2, 0),
                                             Matrix::identity(f3, 2));
    HomCoalgebra coa =
        HomCoalgebra::from_tensor(f3, {"1", "u"}, com, eps, Matrix::identity(f3, 2));
    HomHopfAlgebra kc2(HomBialgebra(alg, coa), Matrix::identity(f3, 2));

    CohomologyClassSet cs = lazy_cohomology(kc2);
    CHECK(cs.exhaustive);
    bool triv_found = false;
    for (const auto& b : cs.coboundaries) triv_found = triv_found || b == trivial_form(kc2);
    CHECK(triv_found);
    // every coboundary lies in the class of the trivial form
    for (const auto& b : cs.coboundaries) {
        bool in_z = false;
        for (const auto& z : cs.cocycles) in_z = in_z || z == b;
        CHECK(in_z);
    }
}

TEST_CASE("the eleven cocycle-antipode identities hold for sigma_t") {
    HomHopfAlgebra h = corpus::h4();
    for (long long t : {1LL, 2LL}) {
        Matrix form = corpus::sigma_t_form(Scalar(h.field(), t));
        Report rep = cocycle_antipode_identities(h, form);
        INFO("t = ", t);
        REQUIRE(rep.entries.size() == 11);
        for (const auto& e : rep.entries) {
            INFO(e.axiom);
            CHECK(e.pass);
        }
    }
    // trivial σ: identities collapse to antipode laws
    Report rep0 = cocycle_antipode_identities(h, trivial_form(h));
    CHECK(rep0.all_pass());
}

TEST_CASE("anti-isomorphisms S1 and S2") {
    HomHopfAlgebra h = corpus::h4();
    FieldSpec q = h.field();

    // trivial σ: S1 = S and S2 = S⁻¹
    AntiIsomorphisms triv = build_anti_isomorphisms(h, trivial_form(h));
    CHECK(triv.s1 == h.antipode);
    CHECK(triv.s2 == *h.antipode_inv);
    CHECK(triv.report.all_pass());

    // σ_{t=1}: all residuals zero, including anti-multiplicativity and
    // the φ_σ inverse relations
    AntiIsomorphisms ai = build_anti_isomorphisms(h, corpus::sigma_t_form(Scalar(q, 1)));
    for (const auto& e : ai.report.entries) {
        INFO(e.axiom);
        CHECK(e.pass);
    }
}

TEST_CASE("sigma_bar materializes with its inverse on the dual carrier") {
    HomHopfAlgebra h = corpus::h4();
    DualResult dl = dual(h);
    REQUIRE(dl.report.all_pass());
    HomCoalgebra carrier = tensor_coalgebra(dl.hopf.coalgebra(), h.coalgebra());

    for (long long t : {0LL, 1LL}) {
        SigmaBar sb = sigma_bar(h, corpus::sigma_t_form(Scalar(h.field(), t)), carrier);
        INFO("t = ", t);
        CHECK(sb.form.rows() == 16);
        for (const auto& e : sb.report.entries) {
            INFO(e.axiom);
            CHECK(e.pass);
        }
        if (t == 0) {
            // trivial σ: σ̄(p⊗h,q⊗g) = p(1) q(S⁻¹(α⁻²(h₂₂))α⁻¹(h₁)) ε(h₂₁)ε(g)
            // is ε-like only in the g slot; spot check a basis value
            CHECK(sb.form.at(0 * 4 + 0, 0 * 4 + 0) == Scalar::one(h.field()));
        }
    }
}

TEST_CASE("form convolution is associative on the enumerated cocycle set") {
    FieldSpec f3 = FieldSpec::prime(3);
    HomHopfAlgebra h = corpus::h4(f3);
    CohomologyClassSet cs = lazy_cohomology(h);
    REQUIRE(cs.cocycles.size() == 3);
    for (const auto& s1 : cs.cocycles)
        for (const auto& s2 : cs.cocycles)
            for (const auto& s3 : cs.cocycles)
                CHECK(z2l_product(h, z2l_product(h, s1, s2), s3) ==
                      z2l_product(h, s1, z2l_product(h, s2, s3)));
}

TEST_CASE("HOMKIT_THREADS-driven block partition is deterministic") {
    FieldSpec f3 = FieldSpec::prime(3);
    HomHopfAlgebra h = corpus::h4(f3);
    CohomologyClassSet a = lazy_cohomology(h);
    CohomologyClassSet b = lazy_cohomology(h);
    REQUIRE(a.cocycles.size() == b.cocycles.size());
    for (std::size_t i = 0; i < a.cocycles.size(); ++i) CHECK(a.cocycles[i] == b.cocycles[i]);
    CHECK(a.representatives == b.representatives);
}

#pragma once

#include <homkit/report.hpp>
#include <homkit/structures.hpp>

namespace homkit {

// α(ab)=α(a)α(b), α(1)=1, 1a=α(a)=a1, α(a)(bc)=(ab)α(c)
inline Report verify_algebra(const HomAlgebra& a) {
    Report rep;
    const std::size_t d = a.dim;
    const Matrix id = Matrix::identity(a.field, d);

    rep.entries.push_back(matrix_check("alpha_multiplicative", a.alpha * a.mul,
                                       a.mul * kron(a.alpha, a.alpha), {d, d}, {d}));
    rep.entries.push_back(
        matrix_check("alpha_unit", a.alpha * a.unit, a.unit, {}, {d}));
    rep.entries.push_back(
        matrix_check("left_unit", a.mul * kron(a.unit, id), a.alpha, {d}, {d}));
    rep.entries.push_back(
        matrix_check("right_unit", a.mul * kron(id, a.unit), a.alpha, {d}, {d}));
    rep.entries.push_back(matrix_check("hom_associativity",
                                       a.mul * kron(a.alpha, a.mul),
                                       a.mul * kron(a.mul, a.alpha), {d, d, d}, {d}));
    return rep;
}

// ε∘α=ε, (α⊗α)Δ=Δα, counit laws, (Δ⊗α)Δ=(α⊗Δ)Δ
inline Report verify_coalgebra(const HomCoalgebra& c) {
    Report rep;
    const std::size_t d = c.dim;
    const Matrix id = Matrix::identity(c.field, d);

    rep.entries.push_back(matrix_check("counit_alpha", c.counit * c.alpha, c.counit, {d}, {}));
    rep.entries.push_back(matrix_check("alpha_comultiplicative", kron(c.alpha, c.alpha) * c.comul,
                                       c.comul * c.alpha, {d}, {d, d}));
    rep.entries.push_back(
        matrix_check("left_counit", kron(c.counit, id) * c.comul, c.alpha, {d}, {d}));
    rep.entries.push_back(
        matrix_check("right_counit", kron(id, c.counit) * c.comul, c.alpha, {d}, {d}));
    rep.entries.push_back(matrix_check("hom_coassociativity",
                                       kron(c.comul, c.alpha) * c.comul,
                                       kron(c.alpha, c.comul) * c.comul, {d}, {d, d, d}));
    return rep;
}

// Δ and ε are morphisms of Hom-algebras.
inline Report verify_bialgebra(const HomBialgebra& b) {
    Report rep = verify_algebra(b.algebra());
    rep.merge(verify_coalgebra(b.coalgebra()));
    const std::size_t d = b.dim;

    // multiplication on H⊗H is componentwise: reorder (h,g,h',g')->(h,h',g,g')
    Matrix perm = factor_permutation(b.field, {d, d, d, d}, {0, 2, 1, 3});
    Matrix mul2 = kron(b.mul, b.mul) * perm;

    rep.entries.push_back(matrix_check("comul_multiplicative", b.comul * b.mul,
                                       mul2 * kron(b.comul, b.comul), {d, d}, {d, d}));
    rep.entries.push_back(
        matrix_check("comul_unit", b.comul * b.unit, kron(b.unit, b.unit), {}, {d, d}));
    rep.entries.push_back(matrix_check("counit_multiplicative", b.counit * b.mul,
                                       kron(b.counit, b.counit), {d, d}, {}));
    rep.entries.push_back(matrix_check("counit_unit", b.counit * b.unit,
                                       Matrix::identity(b.field, 1), {}, {}));
    return rep;
}

// Antipode laws plus the derived identities: S is anti-multiplicative,
// anti-comultiplicative, and counit-compatible.
inline Report verify_hopf(const HomHopfAlgebra& h) {
    Report rep = verify_bialgebra(h.bi);
    const std::size_t d = h.dim();
    const Matrix id = Matrix::identity(h.field(), d);
    const Matrix& s = h.antipode;
    const Matrix flip = tensor_flip(h.field(), d, d);
    const Matrix unit_counit = h.unit() * h.counit();

    rep.entries.push_back(
        matrix_check("antipode_alpha", s * h.alpha(), h.alpha() * s, {d}, {d}));
    rep.entries.push_back(matrix_check("antipode_left", h.mul() * kron(s, id) * h.comul(),
                                       unit_counit, {d}, {d}));
    rep.entries.push_back(matrix_check("antipode_right", h.mul() * kron(id, s) * h.comul(),
                                       unit_counit, {d}, {d}));
    rep.entries.push_back(matrix_check("antipode_anticomultiplicative", h.comul() * s,
                                       flip * kron(s, s) * h.comul(), {d}, {d, d}));
    rep.entries.push_back(matrix_check("antipode_antimultiplicative", s * h.mul(),
                                       h.mul() * flip * kron(s, s), {d, d}, {d}));
    rep.entries.push_back(
        matrix_check("counit_antipode", h.counit() * s, h.counit(), {d}, {}));
    return rep;
}

} // namespace homkit

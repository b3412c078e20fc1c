#pragma once

#include <homkit/convolution.hpp>
#include <homkit/report.hpp>
#include <homkit/structures.hpp>
#include <homkit/verify.hpp>

#include <string>
#include <utility>

namespace homkit {

// Checks that endo is a Hopf-algebra endomorphism of a classical Hopf
// algebra (one whose structure map is the identity).
inline Report check_hopf_endomorphism(const HomHopfAlgebra& h, const Matrix& endo) {
    Report rep;
    const std::size_t d = h.dim();
    rep.entries.push_back(matrix_check("endo_multiplicative", endo * h.mul(),
                                       h.mul() * kron(endo, endo), {d, d}, {d}));
    rep.entries.push_back(matrix_check("endo_unit", endo * h.unit(), h.unit(), {}, {d}));
    rep.entries.push_back(matrix_check("endo_comultiplicative", h.comul() * endo,
                                       kron(endo, endo) * h.comul(), {d}, {d, d}));
    rep.entries.push_back(matrix_check("endo_counit", h.counit() * endo, h.counit(), {d}, {}));
    rep.entries.push_back(
        matrix_check("endo_antipode", h.antipode * endo, endo * h.antipode, {d}, {d}));
    return rep;
}

// H_α = (H, α∘μ, 1, Δ∘α, ε, S, α) from classical Hopf data and an invertible
// Hopf endomorphism α.
inline HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const Matrix& endo) {
    const std::size_t d = classical.dim();
    if (classical.alpha() != Matrix::identity(classical.field(), d))
        throw PreconditionFailed("yau_twist input must carry the identity structure map");
    Report endo_rep = check_hopf_endomorphism(classical, endo);
    if (!endo_rep.all_pass()) {
        std::string failing;
        for (const auto& e : endo_rep.entries)
            if (!e.pass) failing += (failing.empty() ? "" : ", ") + e.axiom;
        throw NotEndomorphism(failing);
    }
    if (!try_inverse(endo)) throw SingularMatrix("yau_twist endomorphism");

    HomAlgebra alg(classical.field(), classical.bi.basis_labels, endo * classical.mul(),
                   classical.unit(), endo);
    HomCoalgebra coa(classical.field(), classical.bi.basis_labels, classical.comul() * endo,
                     classical.counit(), endo);
    return HomHopfAlgebra(HomBialgebra(std::move(alg), std::move(coa)), classical.antipode);
}

struct DualResult {
    HomHopfAlgebra hopf;
    Report report; // verify(hopf) on the dual, embedded by construction
};

// Finite dual: multiplication is the transpose of Δ, comultiplication the
// transpose of μ, structure map αᵀ, antipode Sᵀ (i.e. S*(φ) = φ∘S).
inline DualResult dual(const HomHopfAlgebra& h) {
    std::vector<std::string> labels;
    labels.reserve(h.dim());
    for (const auto& l : h.bi.basis_labels) labels.push_back(l + "*");

    Matrix alpha_t = h.alpha().transpose();
    HomAlgebra alg(h.field(), labels, h.comul().transpose(), h.counit().transpose(), alpha_t);
    HomCoalgebra coa(h.field(), labels, h.mul().transpose(), h.unit().transpose(), alpha_t);
    HomHopfAlgebra out(HomBialgebra(std::move(alg), std::move(coa)), h.antipode.transpose());
    Report rep = verify_hopf(out);
    return DualResult{std::move(out), std::move(rep)};
}

} // namespace homkit

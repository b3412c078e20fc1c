// Acceptance suite: one line per criterion, exact zero-residual tolerances,
// wall-clock bounds enforced. Exit code = number of failed criteria.

#include <homkit/biproduct.hpp>
#include <homkit/cleft.hpp>
#include <homkit/corpus.hpp>
#include <homkit/crossed.hpp>
#include <homkit/homcore.hpp>
#include <homkit/json_io.hpp>
#include <homkit/lazy.hpp>
#include <homkit/verify.hpp>
#include <homkit/ydmod.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace homkit;
namespace fs = std::filesystem;

namespace {

int failures = 0;

struct Criterion {
    std::string detail;
    bool pass = true;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

void run_criterion(int number, const std::string& name, double budget_seconds,
                   const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= budget_seconds) c.require(false, "runtime budget exceeded");
    if (!c.pass) ++failures;
    std::printf("criterion %d (%s): %s — %s (%.2fs, budget %.0fs)\n", number, name.c_str(),
                c.pass ? "PASS" : "FAIL", c.detail.empty() ? "ok" : c.detail.c_str(), elapsed,
                budget_seconds);
    std::fflush(stdout);
}

FieldSpec Q = FieldSpec::rationals();

Matrix sigma_scalar_map(const Scalar& t) {
    Matrix form = corpus::sigma_t_form(t);
    Matrix m(t.field(), 1, 16);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(0, i * 4 + j) = form.at(i, j);
    return m;
}

std::string run_and_capture(const std::string& cmd) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

} // namespace

int main() {
    // 1. H4 verification: every Hopf axiom and derived antipode law, zero residuals.
    run_criterion(1, "h4 verification", 1.0, [](Criterion& c) {
        Report rep = verify_hopf(corpus::h4());
        c.require(rep.all_pass(), "verify(hopf) failed");
        for (const auto& e : rep.entries)
            c.require(e.witness_total == 0, e.axiom + " has residual witnesses");
        c.note(std::to_string(rep.entries.size()) + " axioms, all residuals zero");
    });

    // 2. Crossed-product golden table for t in {0,1,2}: formula values are the
    //    oracle; the printed table differs exactly on the documented cells.
    run_criterion(2, "crossed golden table", 1.0, [](Criterion& c) {
        const std::set<std::pair<std::size_t, std::size_t>> doc_nonzero = {
            {2, 2}, {2, 3}, {2, 6}, {3, 2}, {3, 3}, {3, 6}, {3, 7}, {5, 3}, {7, 0}};
        const std::set<std::pair<std::size_t, std::size_t>> doc_zero = {{5, 3}, {7, 0}};
        HomHopfAlgebra h = corpus::h4();
        HomAlgebra a = corpus::kaa();
        Matrix act = corpus::h4_action_on_kaa();
        for (long long tv : {0LL, 1LL, 2LL}) {
            Scalar t(Q, tv);
            CrossedProduct cp = build_crossed_product(h, a, act, corpus::sigma_t_on_kaa(t));
            Tensor3 formula = cp.carrier.mul_tensor();
            Tensor3 printed = corpus::crossed_h4_printed_table(t);
            std::set<std::pair<std::size_t, std::size_t>> diff;
            for (std::size_t r = 0; r < 8; ++r)
                for (std::size_t col = 0; col < 8; ++col)
                    for (std::size_t k = 0; k < 8; ++k)
                        if (formula.at(r, col, k) != printed.at(r, col, k)) {
                            diff.insert({r, col});
                            break;
                        }
            c.require(diff == (tv == 0 ? doc_zero : doc_nonzero),
                      "discrepancy set mismatch at t=" + std::to_string(tv));
        }
        c.note("printed table reproduced except on the documented cells (9 for t!=0, 2 for t=0)");
    });

    // 3. Crossed-condition equivalence on 128 single-entry perturbations over GF(5).
    run_criterion(3, "condition equivalence", 30.0, [](Criterion& c) {
        FieldSpec f5 = FieldSpec::prime(5);
        HomHopfAlgebra h = corpus::h4(f5);
        HomAlgebra a = corpus::kaa(f5);
        Matrix act = corpus::h4_action_on_kaa(f5);
        Matrix base = corpus::sigma_t_on_kaa(Scalar(f5, 1));
        c.require(check_crossed_conditions(h, a, act, base).all_pass(),
                  "sigma_t fails its own conditions");

        std::size_t perturbations = 0, breaking = 0, passing = 0, mismatches = 0;
        for (std::size_t col = 0; col < 16; ++col)
            for (std::size_t row = 0; row < 2; ++row)
                for (long long delta : {1LL, 2LL, 3LL, 4LL}) {
                    Matrix sigma = base;
                    sigma.at(row, col) += Scalar(f5, delta);
                    ++perturbations;
                    bool conds = check_crossed_conditions(h, a, act, sigma).all_pass();
                    CrossedProduct cp = build_crossed_product(h, a, act, sigma, true);
                    bool ok = verify_algebra(cp.carrier).all_pass();
                    if (conds != ok) ++mismatches;
                    if (conds) ++passing;
                    else ++breaking;
                }
        // the passing side of the equivalence is exercised by the valid family
        for (long long tv = 0; tv < 5; ++tv) {
            Matrix sigma = corpus::sigma_t_on_kaa(Scalar(f5, tv));
            bool conds = check_crossed_conditions(h, a, act, sigma).all_pass();
            CrossedProduct cp = build_crossed_product(h, a, act, sigma, true);
            bool ok = verify_algebra(cp.carrier).all_pass();
            if (conds != ok) ++mismatches;
            if (conds) ++passing;
        }
        c.require(perturbations >= 100, "fewer than 100 perturbations");
        c.require(mismatches == 0, std::to_string(mismatches) + " equivalence mismatches");
        c.require(breaking > 0 && passing > 0, "equivalence corpus is one-sided");
        c.note(std::to_string(perturbations) + " single-entry perturbations (" +
               std::to_string(breaking) + " break conditions) plus the 5-member family, 0 " +
               "equivalence mismatches");
    });

    // 4. Cleft round trip for t in {0,1,2}: exact convolution inverses,
    //    coinvariants of dimension 2, mutual inverses, algebra map residuals.
    run_criterion(4, "cleft round trip", 5.0, [](Criterion& c) {
        HomHopfAlgebra h = corpus::h4();
        HomAlgebra a = corpus::kaa();
        Matrix act = corpus::h4_action_on_kaa();
        for (long long tv : {0LL, 1LL, 2LL}) {
            Report rep = roundtrip_cleft(h, a, act, corpus::sigma_t_on_kaa(Scalar(Q, tv)));
            for (const auto& e : rep.entries)
                c.require(e.pass, "t=" + std::to_string(tv) + " " + e.axiom);
        }
        c.note("gamma/lambda two-sided, dim(coinvariants)=2, Phi/Psi mutual inverses");
    });

    // 5. Biproduct for (k, H4, sigma_0): nine conditions, Hopf assembly, and
    //    the multiplication equals H4's.
    run_criterion(5, "biproduct reproduces h4", 1.0, [](Criterion& c) {
        HomHopfAlgebra h = corpus::h4();
        Tensor3 kt(Q, 1, 1, 1);
        kt.at(0, 0, 0) = Scalar::one(Q);
        HomAlgebra ka = HomAlgebra::from_tensor(Q, {"1"}, kt, Matrix::basis_column(Q, 1, 0),
                                                Matrix::identity(Q, 1));
        HomCoalgebra kc = HomCoalgebra::from_tensor(Q, {"1"}, kt, Matrix::identity(Q, 1),
                                                    Matrix::identity(Q, 1));
        Matrix act = trivial_action(h, ka);
        Matrix rho = kron(h.unit(), ka.alpha);
        Matrix sigma = sigma_scalar_map(Scalar(Q, 0));

        Report conds = check_biproduct_conditions(ka, kc, h, act, sigma, rho);
        c.require(conds.all_pass(), "A1-A9 failed");
        HomBialgebra bi = assemble_bialgebra(ka, kc, h, act, sigma, rho);
        Matrix s_a = conv_inverse_or_throw(kc, ka, Matrix::identity(Q, 1), "id_k");
        HomHopfAlgebra hopf = build_biproduct_antipode(bi, ka, kc, h, rho, h.antipode, s_a,
                                                       sigma);
        c.require(verify_hopf(hopf).all_pass(), "verify(hopf) failed");
        c.require(hopf.mul() == h.mul(), "multiplication differs from H4");
        c.require(hopf.comul() == h.comul(), "comultiplication differs from H4");
        c.require(hopf.antipode == h.antipode, "antipode differs from S_H");
        c.note("A1-A9 pass, assembled Hopf algebra equals H4");
    });

    // 6. Lazy calculus: cocycle and laziness for sigma_t, the eleven
    //    identities for t in {1,2}, and the S1/S2 residuals.
    run_criterion(6, "lazy calculus", 5.0, [](Criterion& c) {
        HomHopfAlgebra h = corpus::h4();
        for (long long tv : {0LL, 1LL, 2LL}) {
            Matrix form = corpus::sigma_t_form(Scalar(Q, tv));
            c.require(check_left_cocycle(h, form).all_pass(),
                      "left cocycle t=" + std::to_string(tv));
            c.require(check_lazy(h, form).all_pass(), "laziness t=" + std::to_string(tv));
        }
        for (long long tv : {1LL, 2LL}) {
            Matrix form = corpus::sigma_t_form(Scalar(Q, tv));
            Report rep = cocycle_antipode_identities(h, form);
            c.require(rep.entries.size() == 11, "identity count");
            for (const auto& e : rep.entries)
                c.require(e.pass, "t=" + std::to_string(tv) + " " + e.axiom);
            AntiIsomorphisms ai = build_anti_isomorphisms(h, form);
            for (const auto& e : ai.report.entries)
                c.require(e.pass, "t=" + std::to_string(tv) + " " + e.axiom);
        }
        c.note("cocycle+lazy for t in {0,1,2}; all 11 identities and S1/S2 residuals zero");
    });

    // 7. Desk-scale cohomology over GF(3) with an exhaustive certificate.
    run_criterion(7, "lazy cohomology gf(3)", 600.0, [](Criterion& c) {
        FieldSpec f3 = FieldSpec::prime(3);
        HomHopfAlgebra h = corpus::h4(f3);
        CohomologyClassSet cs = lazy_cohomology(h);
        c.require(cs.exhaustive, "enumeration not exhaustive");
        c.require(!cs.cocycles.empty(), "no cocycles found");

        // identity class contains the trivial form
        bool triv_found = false;
        for (const auto& b : cs.coboundaries) triv_found |= b == trivial_form(h);
        c.require(triv_found, "trivial form is not a coboundary");

        // every D1(gamma) of the sampled lazy functionals lies in the identity
        // class; the lazy functional space of H4 is a single point, so the
        // 50-draw sample visits all of it
        AffineFunctionalSpace space = lazy_functional_space(h);
        std::size_t space_size = 1;
        for (std::size_t i = 0; i < space.basis.size(); ++i) space_size *= 3;
        std::size_t draws = 0, in_identity = 0;
        for (std::size_t d = 0; d < 50; ++d) {
            Matrix gamma = affine_element(space, 3, d % space_size);
            if (!conv_invert(h.coalgebra(), ground_algebra(f3), gamma).ok()) continue;
            ++draws;
            Matrix cob = coboundary_d1(h, gamma);
            bool found = false;
            for (const auto& b : cs.coboundaries) found |= b == cob;
            if (found) ++in_identity;
        }
        c.require(draws > 0 && draws == in_identity, "a coboundary escaped the identity class");

        // centrality of coboundaries against every enumerated cocycle
        for (const auto& b : cs.coboundaries)
            for (const auto& s : cs.cocycles)
                c.require(z2l_product(h, b, s) == z2l_product(h, s, b), "centrality violated");

        c.note(std::to_string(cs.candidates_scanned) + " candidates scanned, |Z2L|=" +
               std::to_string(cs.cocycles.size()) + ", " +
               std::to_string(cs.representatives.size()) + " classes, " +
               std::to_string(draws) + "/50 draws over the " + std::to_string(space_size) +
               "-point lazy functional space");
    });

    // 8. YD duals. The trivial-sigma half is verified. The sigma_1 half is
    //    unattainable: H4(sigma_t) with t != 0 admits no one-dimensional
    //    module at all, so no input exists for build_dual_yd. The obstruction
    //    is printed and certified exhaustively over GF(5); the sub-criterion
    //    is reported as failed rather than weakened.
    run_criterion(8, "yd duals", 5.0, [](Criterion& c) {
        HomHopfAlgebra h = corpus::h4();
        Matrix triv = trivial_form(h);

        // (b) trivial sigma: character module and both duals pass over H4
        YDModule m;
        m.dim = 1;
        m.mu = Matrix::identity(Q, 1);
        m.action = Matrix(Q, 1, 4);
        m.action.at(0, 0) = Scalar(Q, 1);
        m.action.at(0, 1) = Scalar(Q, -1);
        m.coaction = Matrix(Q, 4, 1);
        m.coaction.at(1, 0) = Scalar::one(Q);
        bool b_ok = check_yd_module_h_sigma(h, triv, m).all_pass();
        for (auto variant : {DualVariant::S1, DualVariant::S2}) {
            YDModule d = build_dual_yd(h, triv, m, variant);
            b_ok = b_ok && check_yd_module_h_sigma(h, z2l_inverse(h, triv), d).all_pass();
        }
        c.require(b_ok, "trivial-sigma duals failed");

        // (a) sigma_1: the canonical candidate fails module associativity with
        // exactly the four deformed pairs as witnesses ...
        Matrix s1 = corpus::sigma_t_form(Scalar(Q, 1));
        Report rep = check_yd_module_h_sigma(h, s1, m);
        const CheckEntry* assoc = rep.find("module_associative");
        bool candidate_fails = assoc != nullptr && !assoc->pass;

        // ... and exhaustively over GF(5) no (chi, c) satisfies the module
        // axioms over H(sigma_1), so the premise of this sub-criterion is
        // empty; see the analysis notes shipped with the build log.
        FieldSpec f5 = FieldSpec::prime(5);
        HomHopfAlgebra h5 = corpus::h4(f5);
        Tensor3 mul5 = deform_two_sided(h5, corpus::sigma_t_form(Scalar(f5, 1))).mul_tensor();
        std::size_t survivors = 0;
        for (long long cc = 1; cc < 5; ++cc)
            for (long long x0 = 0; x0 < 5; ++x0)
                for (long long x1 = 0; x1 < 5; ++x1)
                    for (long long x2 = 0; x2 < 5; ++x2)
                        for (long long x3 = 0; x3 < 5; ++x3) {
                            Scalar chi[4] = {Scalar(f5, x0), Scalar(f5, x1), Scalar(f5, x2),
                                             Scalar(f5, x3)};
                            Scalar cs(f5, cc);
                            if (chi[0] != cs) continue;
                            bool ok = true;
                            for (std::size_t j = 2; j < 4 && ok; ++j)
                                if (chi[j] != -chi[j]) ok = false;
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
        c.note("trivial-sigma duals verified (both variants)");
        c.note("sigma_1 premise certified empty: GF(5) exhaustive scan over 2500 (chi,c) "
               "candidates found " + std::to_string(survivors) +
               " modules; over Q, chi(x)=0 is forced and the axiom at (x,x) needs "
               "(t/2)c^2 = 0");
        c.require(candidate_fails && survivors == 0,
                  "expected the sigma_1 obstruction to be visible");
        // The stated sub-criterion requires dual outputs over H(sigma_1^{-1})
        // to pass for a module that cannot exist; reported honestly as failed.
        c.require(false, "no 1-dim YD module over H4(sigma_1) exists, sub-criterion "
                         "unattainable as stated");
    });

    // 9. CLI determinism: byte-identical outputs across consecutive runs.
    run_criterion(9, "cli determinism", 60.0, [](Criterion& c) {
        const std::string cli = HOMKIT_CLI_PATH;
        fs::path dir = fs::temp_directory_path() / "homkit_acceptance";
        fs::create_directories(dir);
        std::string cd = "cd " + dir.string() + " && " + cli + " ";
        run_and_capture(cd + "corpus h4 --out h4.json");
        run_and_capture(cd + "corpus kaa --out kaa.json");
        run_and_capture(cd + "corpus action_h4 --out act.json");
        run_and_capture(cd + "corpus sigma_t --t 1 --out sig.json");
        run_and_capture(cd + "corpus sigma_t --t 1 --scalar --out sigs.json");
        run_and_capture(cd + "corpus h4 --field gf:3 --out h4f3.json");
        run_and_capture(cd + "corpus sigma_t --t 1 --scalar --field gf:3 --out sigf3.json");

        std::vector<std::string> verbs = {
            "corpus h4",
            "corpus crossed_h4 --t 1",
            "verify --kind hopf h4.json",
            "check cocycle --base kaa.json --hopf h4.json --action act.json --cocycle sig.json",
            "check lazy --hopf h4.json --cocycle sigs.json",
            "check lemma46 --hopf h4.json --cocycle sigs.json",
            "search lazy --hopf h4f3.json --cocycle sigf3.json",
            "cohomology lazy --hopf h4f3.json",
            "report table kaa.json --format md",
        };
        for (const auto& verb : verbs) {
            std::string first = run_and_capture(cd + verb);
            std::string second = run_and_capture(cd + verb);
            c.require(!first.empty() && first == second, "nondeterministic output: " + verb);
        }

        run_and_capture(cd + "construct crossed --base kaa.json --hopf h4.json --action "
                             "act.json --cocycle sig.json --out c1.json");
        run_and_capture(cd + "construct crossed --base kaa.json --hopf h4.json --action "
                             "act.json --cocycle sig.json --out c2.json");
        c.require(io::read_file((dir / "c1.json").string()) ==
                      io::read_file((dir / "c2.json").string()),
                  "construct output files differ");
        std::error_code ec;
        fs::remove_all(dir, ec);
        c.note("9 verbs plus construct outputs byte-identical across consecutive runs");
    });

    std::printf("%d/9 criteria passed%s\n", 9 - failures,
                failures ? " (criterion 8 documents an unattainable sub-criterion; see the "
                           "notes above)"
                         : "");
    return failures;
}

#pragma once

#include <homkit/structures.hpp>
#include <homkit/tensor3.hpp>

#include <string>
#include <vector>

namespace homkit {
namespace corpus {

// --- H4: the four-dimensional Hom-Hopf algebra on {1, g, x, y} --------------
//
// multiplication            comultiplication
//   1·h = α(h) = h·1          Δ(1) = 1⊗1,  Δ(g) = g⊗g
//   g·g = 1                   Δ(x) = (−x)⊗g + 1⊗(−x)
//   g·x = −y, x·g = y         Δ(y) = (−y)⊗1 + g⊗(−y)
//   g·y = −x, y·g = x       counit (1,1,0,0); S = (1, g, x↦y, y↦−x)
//   x·x = x·y = y·x = y·y = 0; α = diag(1,1,−1,−1)

inline HomHopfAlgebra h4(FieldSpec field = FieldSpec::rationals()) {
    std::vector<std::string> labels = {"1", "g", "x", "y"};
    Tensor3 mul(field, 4, 4, 4);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long long v) {
        mul.at(i, j, k) = Scalar(field, v);
    };
    // row = left factor, column = right factor; basis order 1,g,x,y
    set(0, 0, 0, 1);  set(0, 1, 1, 1);  set(0, 2, 2, -1); set(0, 3, 3, -1);
    set(1, 0, 1, 1);  set(1, 1, 0, 1);  set(1, 2, 3, -1); set(1, 3, 2, -1);
    set(2, 0, 2, -1); set(2, 1, 3, 1);
    set(3, 0, 3, -1); set(3, 1, 2, 1);

    Tensor3 comul(field, 4, 4, 4);
    auto cset = [&](std::size_t i, std::size_t j, std::size_t k, long long v) {
        comul.at(i, j, k) = Scalar(field, v);
    };
    cset(0, 0, 0, 1);
    cset(1, 1, 1, 1);
    cset(2, 2, 1, -1); cset(2, 0, 2, -1);
    cset(3, 3, 0, -1); cset(3, 1, 3, -1);

    Matrix counit(field, 1, 4);
    counit.at(0, 0) = Scalar::one(field);
    counit.at(0, 1) = Scalar::one(field);

    Matrix unit = Matrix::basis_column(field, 4, 0);

    Matrix alpha(field, 4, 4);
    alpha.at(0, 0) = Scalar(field, 1);
    alpha.at(1, 1) = Scalar(field, 1);
    alpha.at(2, 2) = Scalar(field, -1);
    alpha.at(3, 3) = Scalar(field, -1);

    Matrix antipode(field, 4, 4);
    antipode.at(0, 0) = Scalar(field, 1);
    antipode.at(1, 1) = Scalar(field, 1);
    antipode.at(3, 2) = Scalar(field, 1);  // S(x) = y
    antipode.at(2, 3) = Scalar(field, -1); // S(y) = -x

    HomAlgebra alg = HomAlgebra::from_tensor(field, labels, mul, unit, alpha);
    HomCoalgebra coa = HomCoalgebra::from_tensor(field, labels, comul, counit, alpha);
    return HomHopfAlgebra(HomBialgebra(std::move(alg), std::move(coa)), antipode);
}

// Classical Sweedler four-dimensional Hopf algebra with y = g·x; twisting it
// by diag(1,1,−1,−1) reproduces h4().
inline HomHopfAlgebra sweedler_classical(FieldSpec field = FieldSpec::rationals()) {
    std::vector<std::string> labels = {"1", "g", "x", "y"};
    Tensor3 mul(field, 4, 4, 4);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long long v) {
        mul.at(i, j, k) = Scalar(field, v);
    };
    set(0, 0, 0, 1); set(0, 1, 1, 1); set(0, 2, 2, 1);  set(0, 3, 3, 1);
    set(1, 0, 1, 1); set(1, 1, 0, 1); set(1, 2, 3, 1);  set(1, 3, 2, 1);
    set(2, 0, 2, 1); set(2, 1, 3, -1);
    set(3, 0, 3, 1); set(3, 1, 2, -1);

    Tensor3 comul(field, 4, 4, 4);
    auto cset = [&](std::size_t i, std::size_t j, std::size_t k, long long v) {
        comul.at(i, j, k) = Scalar(field, v);
    };
    cset(0, 0, 0, 1);
    cset(1, 1, 1, 1);
    cset(2, 2, 1, 1); cset(2, 0, 2, 1); // Δ(x) = x⊗g + 1⊗x
    cset(3, 3, 0, 1); cset(3, 1, 3, 1); // Δ(y) = y⊗1 + g⊗y

    Matrix counit(field, 1, 4);
    counit.at(0, 0) = Scalar::one(field);
    counit.at(0, 1) = Scalar::one(field);

    Matrix unit = Matrix::basis_column(field, 4, 0);
    Matrix id = Matrix::identity(field, 4);

    Matrix antipode(field, 4, 4);
    antipode.at(0, 0) = Scalar(field, 1);
    antipode.at(1, 1) = Scalar(field, 1);
    antipode.at(3, 2) = Scalar(field, 1);
    antipode.at(2, 3) = Scalar(field, -1);

    HomAlgebra alg = HomAlgebra::from_tensor(field, labels, mul, unit, id);
    HomCoalgebra coa = HomCoalgebra::from_tensor(field, labels, comul, counit, id);
    return HomHopfAlgebra(HomBialgebra(std::move(alg), std::move(coa)), antipode);
}

inline Matrix h4_twist_endo(FieldSpec field = FieldSpec::rationals()) {
    Matrix m(field, 4, 4);
    m.at(0, 0) = Scalar(field, 1);
    m.at(1, 1) = Scalar(field, 1);
    m.at(2, 2) = Scalar(field, -1);
    m.at(3, 3) = Scalar(field, -1);
    return m;
}

// --- k[a]/(a²) with the identity structure map -------------------------------

inline HomAlgebra kaa(FieldSpec field = FieldSpec::rationals()) {
    std::vector<std::string> labels = {"1", "a"};
    Tensor3 mul(field, 2, 2, 2);
    mul.at(0, 0, 0) = Scalar::one(field);
    mul.at(0, 1, 1) = Scalar::one(field);
    mul.at(1, 0, 1) = Scalar::one(field);
    // a·a = 0
    return HomAlgebra::from_tensor(field, labels, mul, Matrix::basis_column(field, 2, 0),
                                   Matrix::identity(field, 2));
}

// k[a]/(a²) as a Hom-coalgebra with primitive a: Δ(a) = a⊗1 + 1⊗a.
inline HomCoalgebra kaa_coalgebra(FieldSpec field = FieldSpec::rationals()) {
    std::vector<std::string> labels = {"1", "a"};
    Tensor3 comul(field, 2, 2, 2);
    comul.at(0, 0, 0) = Scalar::one(field);
    comul.at(1, 1, 0) = Scalar::one(field);
    comul.at(1, 0, 1) = Scalar::one(field);
    Matrix counit(field, 1, 2);
    counit.at(0, 0) = Scalar::one(field);
    return HomCoalgebra::from_tensor(field, labels, comul, counit, Matrix::identity(field, 2));
}

// H4 action on k[a]/(a²): h·1 = ε(h)1, 1·a = a, g·a = a, x·a = y·a = 0.
// Returned as the bilinear map H⊗A -> A (2 × 8).
inline Matrix h4_action_on_kaa(FieldSpec field = FieldSpec::rationals()) {
    Tensor3 act(field, 4, 2, 2);
    act.at(0, 0, 0) = Scalar::one(field); // 1·1 = 1
    act.at(1, 0, 0) = Scalar::one(field); // g·1 = 1
    act.at(0, 1, 1) = Scalar::one(field); // 1·a = a
    act.at(1, 1, 1) = Scalar::one(field); // g·a = a
    return act.as_bilinear_map();
}

// σ_t : H4 ⊗ H4 -> k[a]/(a²), values in k·1:
//        | 1  g    x     y
//   -----+---------------------
//    1   | 1  1    0     0
//    g   | 1  1    0     0
//    x   | 0  0   t/2  -t/2
//    y   | 0  0   t/2  -t/2
// Returned as the bilinear map H⊗H -> A (2 × 16).
inline Matrix sigma_t_on_kaa(const Scalar& t) {
    FieldSpec field = t.field();
    Scalar half_t = t * Scalar(field, 2).inverse();
    Tensor3 sig(field, 4, 4, 2);
    sig.at(0, 0, 0) = Scalar::one(field);
    sig.at(0, 1, 0) = Scalar::one(field);
    sig.at(1, 0, 0) = Scalar::one(field);
    sig.at(1, 1, 0) = Scalar::one(field);
    sig.at(2, 2, 0) = half_t;
    sig.at(2, 3, 0) = -half_t;
    sig.at(3, 2, 0) = half_t;
    sig.at(3, 3, 0) = -half_t;
    return sig.as_bilinear_map();
}

// σ_t as a scalar-valued bilinear form on H4 (the lazy-cocycle version),
// returned as a 4×4 matrix of values σ(e_i, e_j).
inline Matrix sigma_t_form(const Scalar& t) {
    FieldSpec field = t.field();
    Scalar half_t = t * Scalar(field, 2).inverse();
    Matrix f(field, 4, 4);
    f.at(0, 0) = Scalar::one(field);
    f.at(0, 1) = Scalar::one(field);
    f.at(1, 0) = Scalar::one(field);
    f.at(1, 1) = Scalar::one(field);
    f.at(2, 2) = half_t;
    f.at(2, 3) = -half_t;
    f.at(3, 2) = half_t;
    f.at(3, 3) = -half_t;
    return f;
}

inline std::vector<std::string> crossed_h4_labels() {
    return {"1#1", "1#g", "1#x", "1#y", "a#1", "a#g", "a#x", "a#y"};
}

// The 8×8 crossed-product table exactly as printed. Entries are columns of
// length 8 in the basis above; c is the coefficient t/2 in the chosen field.
inline Tensor3 crossed_h4_printed_table(const Scalar& t) {
    FieldSpec field = t.field();
    Scalar c = t * Scalar(field, 2).inverse();
    Tensor3 m(field, 8, 8, 8);
    const Scalar one = Scalar::one(field);
    auto put = [&](std::size_t row, std::size_t col, std::size_t out, Scalar v) {
        m.at(row, col, out) = std::move(v);
    };
    // basis indices: 0:1#1 1:1#g 2:1#x 3:1#y 4:a#1 5:a#g 6:a#x 7:a#y
    // row 1#1
    put(0, 0, 0, one);  put(0, 1, 1, one);  put(0, 2, 2, -one); put(0, 3, 3, -one);
    put(0, 4, 4, one);  put(0, 5, 5, one);  put(0, 6, 6, -one); put(0, 7, 7, -one);
    // row 1#g
    put(1, 0, 1, one);  put(1, 1, 0, one);  put(1, 2, 3, -one); put(1, 3, 2, -one);
    put(1, 4, 5, one);  put(1, 5, 4, one);  put(1, 6, 7, -one); put(1, 7, 6, -one);
    // row 1#x  (printed zeros at 1#x, 1#y)
    put(2, 0, 2, -one); put(2, 1, 3, one);
    put(2, 4, 6, -one); put(2, 5, 7, one);  put(2, 6, 4, -c);   put(2, 7, 5, -c);
    // row 1#y
    put(3, 0, 3, -one); put(3, 1, 2, one);
    put(3, 4, 7, -one); put(3, 5, 6, one);  put(3, 6, 5, -c);   put(3, 7, 4, c);
    // row a#1
    put(4, 0, 4, one);  put(4, 1, 5, one);  put(4, 2, 6, -one); put(4, 3, 7, -one);
    // row a#g  (the printed 1#y column reads -a#y)
    put(5, 0, 5, one);  put(5, 1, 4, one);  put(5, 2, 7, -one); put(5, 3, 7, -one);
    // row a#x
    put(6, 0, 6, -one); put(6, 1, 7, one);  put(6, 2, 4, c);    put(6, 3, 5, -c);
    // row a#y  (the printed 1#1 column reads +a#y)
    put(7, 0, 7, one);  put(7, 1, 6, one);  put(7, 2, 5, c);    put(7, 3, 4, -c);
    return m;
}

} // namespace corpus
} // namespace homkit

#pragma once

#include <homkit/error.hpp>
#include <homkit/report.hpp>
#include <homkit/structures.hpp>
#include <homkit/tensor3.hpp>

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace homkit {
namespace io {

using nlohmann::json;

inline constexpr const char* kSchema = "homkit-schema v1";
inline constexpr const char* kToolVersion = "homkit 1.0.0";

// --- scalars & fields --------------------------------------------------------

inline json field_to_json(const FieldSpec& f) {
    if (f.kind == FieldKind::Rationals) return json{{"kind", "Q"}};
    return json{{"kind", "GF"}, {"p", f.p}};
}

inline FieldSpec field_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "GF") return FieldSpec::prime(j.at("p").get<std::uint32_t>());
    throw ParseError("unknown field kind '" + kind + "'");
}

// Scalars travel as decimal strings ("-3/4" over Q, canonical residues over
// GF(p)); no floating point anywhere.
inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const json& j, FieldSpec f) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array");
    std::size_t rows = j.size(), cols = j.at(0).size();
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw ParseError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = Scalar::from_string(f, j.at(i).at(c).get<std::string>());
    }
    return m;
}

inline json vector_to_json(const Matrix& col) {
    json v = json::array();
    for (std::size_t i = 0; i < col.rows(); ++i) v.push_back(col.at(i, 0).to_string());
    return v;
}

inline Matrix column_from_json(const json& j, FieldSpec f) {
    Matrix m(f, j.size(), 1);
    for (std::size_t i = 0; i < j.size(); ++i)
        m.at(i, 0) = Scalar::from_string(f, j.at(i).get<std::string>());
    return m;
}

inline Matrix row_from_json(const json& j, FieldSpec f) {
    Matrix m(f, 1, j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        m.at(0, i) = Scalar::from_string(f, j.at(i).get<std::string>());
    return m;
}

inline json tensor_to_json(const Tensor3& t) {
    json out = json::array();
    for (std::size_t i = 0; i < t.d1(); ++i) {
        json plane = json::array();
        for (std::size_t j = 0; j < t.d2(); ++j) {
            json line = json::array();
            for (std::size_t k = 0; k < t.d3(); ++k) line.push_back(t.at(i, j, k).to_string());
            plane.push_back(std::move(line));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

inline Tensor3 tensor_from_json(const json& j, FieldSpec f) {
    std::size_t d1 = j.size();
    if (d1 == 0) throw ParseError("empty tensor");
    std::size_t d2 = j.at(0).size();
    std::size_t d3 = d2 == 0 ? 0 : j.at(0).at(0).size();
    Tensor3 t(f, d1, d2, d3);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j2 = 0; j2 < d2; ++j2)
            for (std::size_t k = 0; k < d3; ++k)
                t.at(i, j2, k) = Scalar::from_string(f, j.at(i).at(j2).at(k).get<std::string>());
    return t;
}

// --- structure files ---------------------------------------------------------

inline json algebra_to_json(const HomAlgebra& a) {
    return json{{"schema", kSchema},
                {"type", "algebra"},
                {"field", field_to_json(a.field)},
                {"dim", a.dim},
                {"basis", a.basis_labels},
                {"mul", tensor_to_json(a.mul_tensor())},
                {"unit", vector_to_json(a.unit)},
                {"alpha", matrix_to_json(a.alpha)}};
}

inline HomAlgebra algebra_from_json(const json& j) {
    FieldSpec f = field_from_json(j.at("field"));
    std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
    return HomAlgebra::from_tensor(f, labels, tensor_from_json(j.at("mul"), f),
                                   column_from_json(j.at("unit"), f),
                                   matrix_from_json(j.at("alpha"), f));
}

inline json coalgebra_to_json(const HomCoalgebra& c) {
    return json{{"schema", kSchema},
                {"type", "coalgebra"},
                {"field", field_to_json(c.field)},
                {"dim", c.dim},
                {"basis", c.basis_labels},
                {"comul", tensor_to_json(c.comul_tensor())},
                {"counit", vector_to_json(c.counit.transpose())},
                {"alpha", matrix_to_json(c.alpha)}};
}

inline HomCoalgebra coalgebra_from_json(const json& j) {
    FieldSpec f = field_from_json(j.at("field"));
    std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
    return HomCoalgebra::from_tensor(f, labels, tensor_from_json(j.at("comul"), f),
                                     row_from_json(j.at("counit"), f),
                                     matrix_from_json(j.at("alpha"), f));
}

inline json bialgebra_to_json(const HomBialgebra& b, const char* type = "bialgebra") {
    json j = algebra_to_json(b.algebra());
    j["type"] = type;
    j["comul"] = tensor_to_json(b.coalgebra().comul_tensor());
    j["counit"] = vector_to_json(b.counit.transpose());
    return j;
}

inline HomBialgebra bialgebra_from_json(const json& j) {
    FieldSpec f = field_from_json(j.at("field"));
    std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
    HomAlgebra alg = HomAlgebra::from_tensor(f, labels, tensor_from_json(j.at("mul"), f),
                                             column_from_json(j.at("unit"), f),
                                             matrix_from_json(j.at("alpha"), f));
    HomCoalgebra coa = HomCoalgebra::from_tensor(f, labels, tensor_from_json(j.at("comul"), f),
                                                 row_from_json(j.at("counit"), f),
                                                 matrix_from_json(j.at("alpha"), f));
    return HomBialgebra(std::move(alg), std::move(coa));
}

inline json hopf_to_json(const HomHopfAlgebra& h) {
    json j = bialgebra_to_json(h.bi, "hopf");
    j["antipode"] = matrix_to_json(h.antipode);
    return j;
}

inline HomHopfAlgebra hopf_from_json(const json& j) {
    HomBialgebra bi = bialgebra_from_json(j);
    FieldSpec f = bi.field;
    return HomHopfAlgebra(std::move(bi), matrix_from_json(j.at("antipode"), f));
}

// action: h_i · a_j = Σ_k act[i][j][k] a_k
inline json action_to_json(const Matrix& act, std::size_t dh, std::size_t da) {
    return json{{"schema", kSchema},
                {"type", "action"},
                {"field", field_to_json(act.field())},
                {"hopf_dim", dh},
                {"base_dim", da},
                {"act", tensor_to_json(Tensor3::from_bilinear_map(act, dh, da))}};
}

// cocycle: σ(h_i,h_j) = Σ_k sigma[i][j][k] a_k
inline json cocycle_to_json(const Matrix& sigma, std::size_t dh, std::size_t da) {
    return json{{"schema", kSchema},
                {"type", "cocycle"},
                {"field", field_to_json(sigma.field())},
                {"hopf_dim", dh},
                {"base_dim", da},
                {"sigma", tensor_to_json(Tensor3::from_bilinear_map(sigma, dh, dh))}};
}

inline json scalar_cocycle_to_json(const Matrix& form) {
    return json{{"schema", kSchema},
                {"type", "scalar_cocycle"},
                {"field", field_to_json(form.field())},
                {"dim", form.rows()},
                {"sigma", matrix_to_json(form)}};
}

// coaction: right ρ(b_i) = Σ b_j⊗h_k; left ρ(c_i) = Σ h_j⊗c_k
inline json coaction_to_json(const Matrix& rho, const std::string& side, std::size_t dbase,
                             std::size_t dh) {
    Tensor3 t = side == "right" ? Tensor3::from_splitting_map(rho, dbase, dh)
                                : Tensor3::from_splitting_map(rho, dh, dbase);
    return json{{"schema", kSchema},
                {"type", "coaction"},
                {"side", side},
                {"field", field_to_json(rho.field())},
                {"hopf_dim", dh},
                {"base_dim", dbase},
                {"rho", tensor_to_json(t)}};
}

inline json report_to_json(const Report& rep) {
    json checks = json::array();
    for (const auto& e : rep.entries) {
        json witnesses = json::array();
        for (const auto& w : e.witnesses) witnesses.push_back(w);
        checks.push_back(json{{"name", e.axiom},
                              {"pass", e.pass},
                              {"witnesses", witnesses},
                              {"residuals", e.residuals},
                              {"witness_total", e.witness_total}});
    }
    return json{{"all_pass", rep.all_pass()}, {"checks", checks}};
}

// --- files and digests -------------------------------------------------------

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

inline std::string digest_string(const std::string& bytes) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json load_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// Canonical bytes: nlohmann::json keeps object keys sorted, so dump() is
// deterministic; a trailing newline terminates the file.
inline std::string canonical_dump(const json& j) { return j.dump() + "\n"; }

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << canonical_dump(j);
}

inline void expect_type(const json& j, const std::string& type, const std::string& path) {
    if (j.value("schema", "") != kSchema)
        throw ParseError(path + ": missing or wrong schema marker");
    if (j.value("type", "") != type)
        throw ParseError(path + ": expected type '" + type + "', got '" +
                         j.value("type", "<none>") + "'");
}

} // namespace io
} // namespace homkit

// homkit — exact construction and verification of Hom-Hopf-algebraic
// structures from structure constants: crossed products, cleft extensions,
// biproducts, lazy 2-cocycles and Yetter–Drinfeld data.

#include <homkit/biproduct.hpp>
#include <homkit/cleft.hpp>
#include <homkit/corpus.hpp>
#include <homkit/crossed.hpp>
#include <homkit/homcore.hpp>
#include <homkit/json_io.hpp>
#include <homkit/lazy.hpp>
#include <homkit/verify.hpp>
#include <homkit/ydmod.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace homkit;
using nlohmann::json;

namespace {

struct CliFailure {
    int code;
    std::string message;
};

FieldSpec parse_field(const std::string& spec) {
    if (spec == "q" || spec == "Q") return FieldSpec::rationals();
    if (spec.rfind("gf:", 0) == 0)
        return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(spec.substr(3))));
    throw CliFailure{2, "unknown field spec '" + spec + "' (use q or gf:P)"};
}

struct LoadedInput {
    std::string path;
    std::string digest;
    json data;
};

LoadedInput load_input(const std::string& path, const std::string& type) {
    std::string bytes = io::read_file(path);
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw CliFailure{2, path + ": invalid JSON"};
    io::expect_type(j, type, path);
    return LoadedInput{path, io::digest_string(bytes), std::move(j)};
}

json run_report(const std::vector<LoadedInput>& inputs, const Report& rep,
                json extra = json::object()) {
    json in = json::array();
    for (const auto& i : inputs) in.push_back(json{{"path", i.path}, {"digest", i.digest}});
    json out{{"schema", io::kSchema},
             {"tool", io::kToolVersion},
             {"inputs", in},
             {"report", io::report_to_json(rep)}};
    for (auto& [k, v] : extra.items()) out[k] = v;
    return out;
}

int emit_report(const std::vector<LoadedInput>& inputs, const Report& rep,
                json extra = json::object()) {
    std::cout << io::canonical_dump(run_report(inputs, rep, std::move(extra)));
    std::cerr << rep.summary();
    return rep.all_pass() ? 0 : 1;
}

// rendering of a column in a labelled basis: "a#1 - 1/2·a#g"
std::string render_column(const Matrix& col, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < col.rows(); ++i) {
        const Scalar& c = col.at(i, 0);
        if (c.is_zero()) continue;
        std::string coef = c.to_string();
        std::string term;
        if (coef == "1") term = labels[i];
        else if (coef == "-1") term = "-" + labels[i];
        else term = coef + "·" + labels[i];
        if (out.empty()) out = term;
        else if (!term.empty() && term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

// --- corpus ------------------------------------------------------------------

json corpus_file(const std::string& name, const Scalar& t, bool scalar_form) {
    FieldSpec f = t.field();
    if (name == "h4") return io::hopf_to_json(corpus::h4(f));
    if (name == "kaa") return io::algebra_to_json(corpus::kaa(f));
    if (name == "action_h4") return io::action_to_json(corpus::h4_action_on_kaa(f), 4, 2);
    if (name == "sigma_t") {
        if (scalar_form) return io::scalar_cocycle_to_json(corpus::sigma_t_form(t));
        return io::cocycle_to_json(corpus::sigma_t_on_kaa(t), 4, 2);
    }
    if (name == "crossed_h4") {
        HomHopfAlgebra h = corpus::h4(f);
        HomAlgebra a = corpus::kaa(f);
        CrossedProduct cp = build_crossed_product(h, a, corpus::h4_action_on_kaa(f),
                                                  corpus::sigma_t_on_kaa(t));
        Tensor3 printed = corpus::crossed_h4_printed_table(t);
        Tensor3 formula = cp.carrier.mul_tensor();
        std::vector<std::string> labels = corpus::crossed_h4_labels();

        json discrepancies = json::array();
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c) {
                bool differ = false;
                for (std::size_t k = 0; k < 8; ++k)
                    if (printed.at(r, c, k) != formula.at(r, c, k)) differ = true;
                if (!differ) continue;
                json p = json::array(), fml = json::array();
                for (std::size_t k = 0; k < 8; ++k) {
                    p.push_back(printed.at(r, c, k).to_string());
                    fml.push_back(formula.at(r, c, k).to_string());
                }
                discrepancies.push_back(json{{"row", r},
                                             {"col", c},
                                             {"row_label", labels[r]},
                                             {"col_label", labels[c]},
                                             {"printed", p},
                                             {"formula", fml}});
            }

        json j{{"schema", io::kSchema},
               {"type", "algebra"},
               {"field", io::field_to_json(f)},
               {"dim", 8},
               {"basis", labels},
               {"mul", io::tensor_to_json(printed)},
               {"unit", io::vector_to_json(cp.carrier.unit)},
               {"alpha", io::matrix_to_json(cp.carrier.alpha)},
               {"note", "multiplication table as printed; see discrepancies"},
               {"discrepancies", discrepancies}};
        return j;
    }
    throw UnknownName(name);
}

// --- simple verbs ---------------------------------------------------------------

int cmd_corpus(const std::string& name, const std::string& field, const std::string& t_str,
               bool scalar_form, const std::string& out) {
    FieldSpec f = parse_field(field);
    Scalar t = Scalar::from_string(f, t_str);
    json j = corpus_file(name, t, scalar_form);
    if (out.empty()) std::cout << io::canonical_dump(j);
    else io::save_json(out, j);
    return 0;
}

// a file of a richer type carries every weaker structure
bool kind_accepts(const std::string& kind, const std::string& type) {
    if (kind == type) return true;
    if (kind == "algebra") return type == "bialgebra" || type == "hopf";
    if (kind == "coalgebra") return type == "bialgebra" || type == "hopf";
    if (kind == "bialgebra") return type == "hopf";
    return false;
}

int cmd_verify(const std::string& kind, const std::vector<std::string>& files) {
    Report all;
    std::vector<LoadedInput> inputs;
    for (const auto& path : files) {
        std::string bytes = io::read_file(path);
        json parsed = json::parse(bytes, nullptr, false);
        if (parsed.is_discarded()) throw CliFailure{2, path + ": invalid JSON"};
        if (!kind_accepts(kind, parsed.value("type", "")))
            throw CliFailure{2, path + ": file type '" + parsed.value("type", "<none>") +
                                    "' does not carry a " + kind};
        LoadedInput in{path, io::digest_string(bytes), std::move(parsed)};
        Report rep;
        if (kind == "algebra") rep = verify_algebra(io::algebra_from_json(in.data));
        else if (kind == "coalgebra") rep = verify_coalgebra(io::coalgebra_from_json(in.data));
        else if (kind == "bialgebra") rep = verify_bialgebra(io::bialgebra_from_json(in.data));
        else if (kind == "hopf") rep = verify_hopf(io::hopf_from_json(in.data));
        else throw CliFailure{2, "unknown kind '" + kind + "'"};
        for (auto& e : rep.entries) e.axiom = path + ":" + e.axiom;
        all.merge(rep);
        inputs.push_back(std::move(in));
    }
    return emit_report(inputs, all);
}

struct CrossedInputs {
    LoadedInput base, hopf, action, cocycle;
    HomAlgebra a;
    HomHopfAlgebra h;
    Matrix act, sigma;
};

CrossedInputs load_crossed_inputs(const std::string& base, const std::string& hopf,
                                  const std::string& action, const std::string& cocycle) {
    CrossedInputs ci{load_input(base, "algebra"), load_input(hopf, "hopf"),
                     load_input(action, "action"), load_input(cocycle, "cocycle"),
                     {}, {}, {}, {}};
    ci.a = io::algebra_from_json(ci.base.data);
    ci.h = io::hopf_from_json(ci.hopf.data);
    FieldSpec f = ci.a.field;
    ci.act = io::tensor_from_json(ci.action.data.at("act"), f).as_bilinear_map();
    ci.sigma = io::tensor_from_json(ci.cocycle.data.at("sigma"), f).as_bilinear_map();
    return ci;
}

YDModule yd_module_from_json(const json& j, FieldSpec f) {
    YDModule m;
    m.dim = j.at("dim").get<std::size_t>();
    m.mu = io::matrix_from_json(j.at("mu"), f);
    m.action = io::tensor_from_json(j.at("action"), f).as_bilinear_map();
    m.coaction = io::tensor_from_json(j.at("coaction"), f).as_splitting_map();
    return m;
}

} // namespace

int main(int argc, char** argv) try {
    CLI::App app{"exact verifier and constructor for Hom-Hopf algebra structures"};
    app.require_subcommand(1);

    // corpus ------------------------------------------------------------------
    auto* corpus_cmd = app.add_subcommand("corpus", "emit a built-in example file");
    std::string corpus_name, corpus_field = "q", corpus_t = "0", corpus_out;
    bool corpus_scalar = false;
    corpus_cmd->add_option("name", corpus_name,
                           "one of: h4, kaa, sigma_t, crossed_h4, action_h4")->required();
    corpus_cmd->add_option("--field", corpus_field, "field spec: q or gf:P");
    corpus_cmd->add_option("--t", corpus_t, "parameter t for sigma_t / crossed_h4");
    corpus_cmd->add_flag("--scalar", corpus_scalar, "emit sigma_t as a scalar cocycle");
    corpus_cmd->add_option("--out", corpus_out, "output file (default: stdout)");

    // verify ------------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "verify structure axioms");
    std::string verify_kind;
    std::vector<std::string> verify_files;
    verify_cmd->add_option("--kind", verify_kind, "algebra|coalgebra|bialgebra|hopf")
        ->required();
    verify_cmd->add_option("files", verify_files, "structure files")->required();

    // construct ----------------------------------------------------------------
    auto* construct_cmd = app.add_subcommand("construct", "build derived structures");
    construct_cmd->require_subcommand(1);
    std::string c_base, c_base_coalgebra, c_hopf, c_action, c_cocycle, c_coaction, c_out;
    std::string c_side = "both", c_variant = "s1", c_module, c_right_co, c_left_co;
    bool c_force = false;

    auto* cc = construct_cmd->add_subcommand("crossed", "crossed product A#sH");
    cc->add_option("--base", c_base)->required();
    cc->add_option("--hopf", c_hopf)->required();
    cc->add_option("--action", c_action)->required();
    cc->add_option("--cocycle", c_cocycle)->required();
    cc->add_option("--out", c_out)->required();
    cc->add_flag("--force", c_force, "skip the condition checks");

    auto* cs = construct_cmd->add_subcommand("smash", "smash product A#H");
    cs->add_option("--base", c_base)->required();
    cs->add_option("--hopf", c_hopf)->required();
    cs->add_option("--action", c_action)->required();
    cs->add_option("--out", c_out)->required();

    auto* csc = construct_cmd->add_subcommand("smash-coproduct", "smash coproduct CxH");
    csc->add_option("--base", c_base, "base coalgebra file")->required();
    csc->add_option("--hopf", c_hopf)->required();
    csc->add_option("--coaction", c_coaction, "left coaction file")->required();
    csc->add_option("--out", c_out)->required();

    auto* cb = construct_cmd->add_subcommand("biproduct", "biproduct Hopf algebra on AxH");
    cb->add_option("--base", c_base)->required();
    cb->add_option("--base-coalgebra", c_base_coalgebra)->required();
    cb->add_option("--hopf", c_hopf)->required();
    cb->add_option("--action", c_action)->required();
    cb->add_option("--cocycle", c_cocycle)->required();
    cb->add_option("--coaction", c_coaction)->required();
    cb->add_option("--out", c_out)->required();

    auto* cd = construct_cmd->add_subcommand("deform", "cocycle-deformed multiplication");
    cd->add_option("--hopf", c_hopf)->required();
    cd->add_option("--cocycle", c_cocycle, "scalar cocycle file")->required();
    cd->add_option("--side", c_side, "left|right|both (default both)");
    cd->add_option("--out", c_out)->required();

    auto* cl = construct_cmd->add_subcommand("bltimes", "module-comodule product B|xA");
    cl->add_option("--hopf", c_hopf)->required();
    cl->add_option("--module-algebra", c_base)->required();
    cl->add_option("--action", c_action)->required();
    cl->add_option("--comodule-algebra", c_base_coalgebra)->required();
    cl->add_option("--coaction", c_coaction)->required();
    cl->add_option("--out", c_out)->required();

    auto* cy = construct_cmd->add_subcommand("dual-yd", "dual Yetter-Drinfeld module");
    cy->add_option("--hopf", c_hopf)->required();
    cy->add_option("--cocycle", c_cocycle, "scalar cocycle file (lazy)")->required();
    cy->add_option("--module", c_module)->required();
    cy->add_option("--variant", c_variant, "s1|s2 (default s1)");
    cy->add_option("--out", c_out)->required();

    auto* cg = construct_cmd->add_subcommand("diagonal", "diagonal crossed product H*|><|A");
    cg->add_option("--hopf", c_hopf)->required();
    cg->add_option("--base", c_base, "bicomodule algebra A file")->required();
    cg->add_option("--right-coaction", c_right_co)->required();
    cg->add_option("--left-coaction", c_left_co)->required();
    cg->add_option("--out", c_out)->required();

    // check ---------------------------------------------------------------------
    auto* check_cmd = app.add_subcommand("check", "named condition suites");
    check_cmd->require_subcommand(1);
    std::string k_base, k_base_coalgebra, k_hopf, k_action, k_cocycle, k_coaction, k_module;
    auto* kc = check_cmd->add_subcommand("cocycle", "crossed-product conditions");
    kc->add_option("--base", k_base)->required();
    kc->add_option("--hopf", k_hopf)->required();
    kc->add_option("--action", k_action)->required();
    kc->add_option("--cocycle", k_cocycle)->required();
    auto* kl = check_cmd->add_subcommand("lazy", "left-cocycle, laziness and normality");
    kl->add_option("--hopf", k_hopf)->required();
    kl->add_option("--cocycle", k_cocycle)->required();
    auto* kb = check_cmd->add_subcommand("biproduct-conditions", "the nine conditions");
    kb->add_option("--base", k_base)->required();
    kb->add_option("--base-coalgebra", k_base_coalgebra)->required();
    kb->add_option("--hopf", k_hopf)->required();
    kb->add_option("--action", k_action)->required();
    kb->add_option("--cocycle", k_cocycle)->required();
    kb->add_option("--coaction", k_coaction)->required();
    auto* ky = check_cmd->add_subcommand("yd", "Yetter-Drinfeld module over H(sigma)");
    ky->add_option("--hopf", k_hopf)->required();
    ky->add_option("--cocycle", k_cocycle, "scalar cocycle (lazy)")->required();
    ky->add_option("--module", k_module)->required();
    auto* k25 = check_cmd->add_subcommand("lemma25", "crossed-product identity suite");
    k25->add_option("--base", k_base)->required();
    k25->add_option("--hopf", k_hopf)->required();
    k25->add_option("--action", k_action)->required();
    k25->add_option("--cocycle", k_cocycle)->required();
    auto* k46 = check_cmd->add_subcommand("lemma46", "cocycle-antipode identity suite");
    k46->add_option("--hopf", k_hopf)->required();
    k46->add_option("--cocycle", k_cocycle)->required();
    auto* ksa = check_cmd->add_subcommand("sigma-antipode", "sigma-antipode conditions");
    ksa->add_option("--base", k_base)->required();
    ksa->add_option("--hopf", k_hopf)->required();
    ksa->add_option("--cocycle", k_cocycle)->required();

    // search / cohomology ---------------------------------------------------------
    auto* search_cmd = app.add_subcommand("search", "exhaustive searches");
    auto* sl = search_cmd->add_subcommand("lazy", "coboundary witness search");
    std::string s_hopf, s_cocycle, s_field;
    std::size_t s_dim_limit = 6, s_budget = 10'000'000;
    sl->add_option("--hopf", s_hopf)->required();
    sl->add_option("--cocycle", s_cocycle)->required();
    sl->add_option("--field", s_field, "expected field (consistency check)");
    sl->add_option("--dim-limit", s_dim_limit, "maximum dim(H) (default 6)");
    sl->add_option("--max-candidates", s_budget, "candidate budget (default 1e7)");

    auto* coh_cmd = app.add_subcommand("cohomology", "lazy cohomology enumeration");
    auto* ch = coh_cmd->add_subcommand("lazy", "second lazy cohomology classes");
    std::string h_hopf, h_field;
    std::size_t h_dim_limit = 4, h_budget = 10'000'000;
    ch->add_option("--hopf", h_hopf)->required();
    ch->add_option("--field", h_field, "expected field (consistency check)");
    ch->add_option("--dim-limit", h_dim_limit, "maximum dim(H) (default 4)");
    ch->add_option("--max-candidates", h_budget, "candidate budget (default 1e7)");

    // report ------------------------------------------------------------------------
    auto* report_cmd = app.add_subcommand("report", "human-readable rendering");
    auto* rt = report_cmd->add_subcommand("table", "multiplication table of an algebra file");
    std::string r_file, r_format = "md";
    rt->add_option("file", r_file)->required();
    rt->add_option("--format", r_format, "md|csv (default md)");

    CLI11_PARSE(app, argc, argv);

    // ---- dispatch -------------------------------------------------------------
    if (*corpus_cmd)
        return cmd_corpus(corpus_name, corpus_field, corpus_t, corpus_scalar, corpus_out);
    if (*verify_cmd) return cmd_verify(verify_kind, verify_files);

    if (*construct_cmd) {
        if (*cc) {
            CrossedInputs ci = load_crossed_inputs(c_base, c_hopf, c_action, c_cocycle);
            CrossedProduct cp = build_crossed_product(ci.h, ci.a, ci.act, ci.sigma, c_force);
            json j = io::algebra_to_json(cp.carrier);
            j["provenance"] = json{{"construct", "crossed"},
                                   {"inputs", json::array({ci.base.digest, ci.hopf.digest,
                                                           ci.action.digest,
                                                           ci.cocycle.digest})}};
            io::save_json(c_out, j);
            return 0;
        }
        if (*cs) {
            LoadedInput base = load_input(c_base, "algebra");
            LoadedInput hopf = load_input(c_hopf, "hopf");
            LoadedInput action = load_input(c_action, "action");
            HomAlgebra a = io::algebra_from_json(base.data);
            HomHopfAlgebra h = io::hopf_from_json(hopf.data);
            Matrix act = io::tensor_from_json(action.data.at("act"), a.field).as_bilinear_map();
            CrossedProduct cp = build_smash_product(h, a, act);
            json j = io::algebra_to_json(cp.carrier);
            j["provenance"] = json{{"construct", "smash"},
                                   {"inputs", json::array({base.digest, hopf.digest,
                                                           action.digest})}};
            io::save_json(c_out, j);
            return 0;
        }
        if (*csc) {
            LoadedInput base = load_input(c_base, "coalgebra");
            LoadedInput hopf = load_input(c_hopf, "hopf");
            LoadedInput coaction = load_input(c_coaction, "coaction");
            HomCoalgebra ac = io::coalgebra_from_json(base.data);
            HomHopfAlgebra h = io::hopf_from_json(hopf.data);
            Matrix rho =
                io::tensor_from_json(coaction.data.at("rho"), ac.field).as_splitting_map();
            HomCoalgebra sc = build_smash_coproduct(ac, rho, h);
            json j = io::coalgebra_to_json(sc);
            j["provenance"] = json{{"construct", "smash-coproduct"},
                                   {"inputs", json::array({base.digest, hopf.digest,
                                                           coaction.digest})}};
            io::save_json(c_out, j);
            return 0;
        }
        if (*cb) {
            LoadedInput base = load_input(c_base, "algebra");
            LoadedInput basec = load_input(c_base_coalgebra, "coalgebra");
            LoadedInput hopf = load_input(c_hopf, "hopf");
            LoadedInput action = load_input(c_action, "action");
            LoadedInput cocycle = load_input(c_cocycle, "cocycle");
            LoadedInput coaction = load_input(c_coaction, "coaction");
            HomAlgebra a = io::algebra_from_json(base.data);
            HomCoalgebra ac = io::coalgebra_from_json(basec.data);
            HomHopfAlgebra h = io::hopf_from_json(hopf.data);
            FieldSpec f = a.field;
            Matrix act = io::tensor_from_json(action.data.at("act"), f).as_bilinear_map();
            Matrix sigma = io::tensor_from_json(cocycle.data.at("sigma"), f).as_bilinear_map();
            Matrix rho = io::tensor_from_json(coaction.data.at("rho"), f).as_splitting_map();
            HomBialgebra bi = assemble_bialgebra(a, ac, h, act, sigma, rho);
            Matrix s_a = conv_inverse_or_throw(ac, a, Matrix::identity(f, a.dim), "id_A");
            HomHopfAlgebra out =
                build_biproduct_antipode(bi, a, ac, h, rho, h.antipode, s_a, sigma);
            Report rep = verify_hopf(out);
            if (!rep.all_pass()) throw ConditionsFailed("biproduct fails verify(hopf)");
            json j = io::hopf_to_json(out);
            j["provenance"] = json{{"construct", "biproduct"},
                                   {"inputs", json::array({base.digest, basec.digest,
                                                           hopf.digest, action.digest,
                                                           cocycle.digest, coaction.digest})}};
            io::save_json(c_out, j);
            return 0;
        }
        if (*cd) {
            LoadedInput hopf = load_input(c_hopf, "hopf");
            LoadedInput cocycle = load_input(c_cocycle, "scalar_cocycle");
            HomHopfAlgebra h = io::hopf_from_json(hopf.data);
            Matrix form = io::matrix_from_json(cocycle.data.at("sigma"), h.field());
            HomAlgebra out = c_side == "left"    ? deform(h, form, DeformSide::Left)
                             : c_side == "right" ? deform(h, form, DeformSide::Right)
                                                 : deform_two_sided(h, form);
            json j = io::algebra_to_json(out);
            j["provenance"] = json{{"construct", "deform"},
                                   {"side", c_side},
                                   {"inputs", json::array({hopf.digest, cocycle.digest})}};
            io::save_json(c_out, j);
            return 0;
        }
        if (*cl) {
            LoadedInput hopf = load_input(c_hopf, "hopf");
            LoadedInput mod = load_input(c_base, "algebra");
            LoadedInput action = load_input(c_action, "action");
            LoadedInput com = load_input(c_base_coalgebra, "algebra");
            LoadedInput coaction = load_input(c_coaction, "coaction");
            HomHopfAlgebra h = io::hopf_from_json(hopf.data);
            HomAlgebra b = io::algebra_from_json(mod.data);
            HomAlgebra a = io::algebra_from_json(com.data);
            Matrix act = io::tensor_from_json(action.data.at("act"), b.field).as_bilinear_map();
            Matrix rho =
                io::tensor_from_json(coaction.data.at("rho"), a.field).as_splitting_map();
            HomAlgebra out = build_b_ltimes_a(h, b, act, a, rho);
            json j = io::algebra_to_json(out);
            j["provenance"] = json{{"construct", "bltimes"},
                                   {"inputs", json::array({hopf.digest, mod.digest,
                                                           action.digest, com.digest,
                                                           coaction.digest})}};
            io::save_json(c_out, j);
            return 0;
        }
        if (*cy) {
            LoadedInput hopf = load_input(c_hopf, "hopf");
            LoadedInput cocycle = load_input(c_cocycle, "scalar_cocycle");
            LoadedInput mod = load_input(c_module, "yd_module");
            HomHopfAlgebra h = io::hopf_from_json(hopf.data);
            FieldSpec f = h.field();
            Matrix form = io::matrix_from_json(cocycle.data.at("sigma"), f);
            YDModule m = yd_module_from_json(mod.data, f);
            YDModule d = build_dual_yd(h, form, m,
                                       c_variant == "s2" ? DualVariant::S2 : DualVariant::S1);
            json j{{"schema", io::kSchema},
                   {"type", "yd_module"},
                   {"field", io::field_to_json(f)},
                   {"dim", d.dim},
                   {"hopf_dim", h.dim()},
                   {"mu", io::matrix_to_json(d.mu)},
                   {"action",
                    io::tensor_to_json(Tensor3::from_bilinear_map(d.action, h.dim(), d.dim))},
                   {"coaction",
                    io::tensor_to_json(Tensor3::from_splitting_map(d.coaction, d.dim, h.dim()))},
                   {"provenance",
                    json{{"construct", "dual-yd"},
                         {"variant", c_variant},
                         {"inputs",
                          json::array({hopf.digest, cocycle.digest, mod.digest})}}}};
            io::save_json(c_out, j);
            return 0;
        }
        if (*cg) {
            LoadedInput hopf = load_input(c_hopf, "hopf");
            LoadedInput base = load_input(c_base, "algebra");
            LoadedInput rc = load_input(c_right_co, "coaction");
            LoadedInput lc = load_input(c_left_co, "coaction");
            HomHopfAlgebra h = io::hopf_from_json(hopf.data);
            HomAlgebra a = io::algebra_from_json(base.data);
            Matrix right = io::tensor_from_json(rc.data.at("rho"), a.field).as_splitting_map();
            Matrix left = io::tensor_from_json(lc.data.at("rho"), a.field).as_splitting_map();
            BicomoduleAlgebra ba{a, right, left};
            Report pre = check_bicomodule_algebra(ba, h);
            if (!pre.all_pass()) throw ConditionsFailed("not a bicomodule algebra");
            DiagonalCrossedProduct dcp = diagonal_crossed_product(h, ba);
            json j = io::algebra_to_json(dcp.carrier);
            j["report"] = io::report_to_json(dcp.report);
            j["provenance"] = json{{"construct", "diagonal"},
                                   {"inputs", json::array({hopf.digest, base.digest, rc.digest,
                                                           lc.digest})}};
            io::save_json(c_out, j);
            return dcp.report.all_pass() ? 0 : 1;
        }
    }

    if (*check_cmd) {
        if (*kc) {
            CrossedInputs ci = load_crossed_inputs(k_base, k_hopf, k_action, k_cocycle);
            Report rep = check_crossed_conditions(ci.h, ci.a, ci.act, ci.sigma);
            return emit_report({ci.base, ci.hopf, ci.action, ci.cocycle}, rep);
        }
        if (*k25) {
            CrossedInputs ci = load_crossed_inputs(k_base, k_hopf, k_action, k_cocycle);
            Report rep = crossed_identities(ci.h, ci.a, ci.act, ci.sigma);
            return emit_report({ci.base, ci.hopf, ci.action, ci.cocycle}, rep);
        }
        if (*kl) {
            LoadedInput hopf = load_input(k_hopf, "hopf");
            LoadedInput cocycle = load_input(k_cocycle, "scalar_cocycle");
            HomHopfAlgebra h = io::hopf_from_json(hopf.data);
            Matrix form = io::matrix_from_json(cocycle.data.at("sigma"), h.field());
            Report rep = check_left_cocycle(h, form);
            rep.merge(check_lazy(h, form));
            rep.merge(check_normal_form(h, form));
            return emit_report({hopf, cocycle}, rep);
        }
        if (*kb) {
            LoadedInput base = load_input(k_base, "algebra");
            LoadedInput basec = load_input(k_base_coalgebra, "coalgebra");
            LoadedInput hopf = load_input(k_hopf, "hopf");
            LoadedInput action = load_input(k_action, "action");
            LoadedInput cocycle = load_input(k_cocycle, "cocycle");
            LoadedInput coaction = load_input(k_coaction, "coaction");
            HomAlgebra a = io::algebra_from_json(base.data);
            HomCoalgebra ac = io::coalgebra_from_json(basec.data);
            HomHopfAlgebra h = io::hopf_from_json(hopf.data);
            FieldSpec f = a.field;
            Matrix act = io::tensor_from_json(action.data.at("act"), f).as_bilinear_map();
            Matrix sigma = io::tensor_from_json(cocycle.data.at("sigma"), f).as_bilinear_map();
            Matrix rho = io::tensor_from_json(coaction.data.at("rho"), f).as_splitting_map();
            Report rep = check_biproduct_conditions(a, ac, h, act, sigma, rho);
            return emit_report({base, basec, hopf, action, cocycle, coaction}, rep);
        }
        if (*ky) {
            LoadedInput hopf = load_input(k_hopf, "hopf");
            LoadedInput cocycle = load_input(k_cocycle, "scalar_cocycle");
            LoadedInput mod = load_input(k_module, "yd_module");
            HomHopfAlgebra h = io::hopf_from_json(hopf.data);
            Matrix form = io::matrix_from_json(cocycle.data.at("sigma"), h.field());
            YDModule m = yd_module_from_json(mod.data, h.field());
            Report rep = check_yd_module_h_sigma(h, form, m);
            return emit_report({hopf, cocycle, mod}, rep);
        }
        if (*k46) {
            LoadedInput hopf = load_input(k_hopf, "hopf");
            LoadedInput cocycle = load_input(k_cocycle, "scalar_cocycle");
            HomHopfAlgebra h = io::hopf_from_json(hopf.data);
            Matrix form = io::matrix_from_json(cocycle.data.at("sigma"), h.field());
            Report rep = cocycle_antipode_identities(h, form);
            return emit_report({hopf, cocycle}, rep);
        }
        if (*ksa) {
            LoadedInput base = load_input(k_base, "algebra");
            LoadedInput hopf = load_input(k_hopf, "hopf");
            LoadedInput cocycle = load_input(k_cocycle, "cocycle");
            HomAlgebra a = io::algebra_from_json(base.data);
            HomHopfAlgebra h = io::hopf_from_json(hopf.data);
            Matrix sigma =
                io::tensor_from_json(cocycle.data.at("sigma"), a.field).as_bilinear_map();
            Report rep = check_sigma_antipode(h, a, sigma, h.antipode);
            return emit_report({base, hopf, cocycle}, rep);
        }
    }

    if (*search_cmd && *sl) {
        LoadedInput hopf = load_input(s_hopf, "hopf");
        LoadedInput cocycle = load_input(s_cocycle, "scalar_cocycle");
        HomHopfAlgebra h = io::hopf_from_json(hopf.data);
        if (!s_field.empty() && parse_field(s_field) != h.field())
            throw CliFailure{2, "--field does not match the file's field"};
        Matrix form = io::matrix_from_json(cocycle.data.at("sigma"), h.field());
        CoboundarySearch found = is_coboundary(h, form, s_budget, s_dim_limit);
        json j{{"schema", io::kSchema},
               {"tool", io::kToolVersion},
               {"inputs", json::array({json{{"path", s_hopf}, {"digest", hopf.digest}},
                                       json{{"path", s_cocycle}, {"digest", cocycle.digest}}})},
               {"exhaustive", found.exhaustive},
               {"candidates_tested", found.candidates_tested},
               {"is_coboundary", found.witness.has_value()}};
        if (found.witness) j["witness"] = io::matrix_to_json(*found.witness);
        std::cout << io::canonical_dump(j);
        std::cerr << (found.witness ? "coboundary: witness found\n"
                                    : "not a coboundary (exhaustive)\n");
        return 0;
    }

    if (*coh_cmd && *ch) {
        LoadedInput hopf = load_input(h_hopf, "hopf");
        HomHopfAlgebra h = io::hopf_from_json(hopf.data);
        if (!h_field.empty() && parse_field(h_field) != h.field())
            throw CliFailure{2, "--field does not match the file's field"};
        CohomologyClassSet classes = lazy_cohomology(h, h_budget, h_dim_limit);
        json reps = json::array();
        for (const auto& r : classes.representatives) reps.push_back(io::matrix_to_json(r));
        json cobs = json::array();
        for (const auto& b : classes.coboundaries) cobs.push_back(io::matrix_to_json(b));
        json j{{"schema", io::kSchema},
               {"tool", io::kToolVersion},
               {"inputs", json::array({json{{"path", h_hopf}, {"digest", hopf.digest}}})},
               {"exhaustive", classes.exhaustive},
               {"candidates_scanned", classes.candidates_scanned},
               {"cocycle_count", classes.cocycles.size()},
               {"coboundaries", cobs},
               {"class_sizes", classes.class_sizes},
               {"representatives", reps}};
        if (!classes.group_table.empty()) j["group_table"] = classes.group_table;
        std::cout << io::canonical_dump(j);
        std::cerr << "classes: " << classes.representatives.size() << "\n";
        return 0;
    }

    if (*report_cmd && *rt) {
        json j = io::load_json(r_file);
        std::string type = j.value("type", "");
        if (type != "algebra" && type != "bialgebra" && type != "hopf")
            throw CliFailure{2, r_file + ": no multiplication table in this file type"};
        FieldSpec f = io::field_from_json(j.at("field"));
        Tensor3 mul = io::tensor_from_json(j.at("mul"), f);
        std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
        const std::size_t d = labels.size();

        auto cell = [&](std::size_t r, std::size_t c) {
            Matrix col(f, d, 1);
            for (std::size_t k = 0; k < d; ++k) col.at(k, 0) = mul.at(r, c, k);
            return render_column(col, labels);
        };
        if (r_format == "csv") {
            std::cout << "*";
            for (const auto& l : labels) std::cout << "," << l;
            std::cout << "\n";
            for (std::size_t r = 0; r < d; ++r) {
                std::cout << labels[r];
                for (std::size_t c = 0; c < d; ++c) std::cout << "," << cell(r, c);
                std::cout << "\n";
            }
        } else if (r_format == "md") {
            std::cout << "| * |";
            for (const auto& l : labels) std::cout << " " << l << " |";
            std::cout << "\n|---|";
            for (std::size_t c = 0; c < d; ++c) std::cout << "---|";
            std::cout << "\n";
            for (std::size_t r = 0; r < d; ++r) {
                std::cout << "| " << labels[r] << " |";
                for (std::size_t c = 0; c < d; ++c) std::cout << " " << cell(r, c) << " |";
                std::cout << "\n";
            }
        } else {
            throw CliFailure{2, "unknown format '" + r_format + "'"};
        }
        return 0;
    }

    throw CliFailure{2, "no subcommand executed"};
} catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
} catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
} catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
} catch (const ShapeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
} catch (const FieldMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
} catch (const ConditionsFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
} catch (const PreconditionFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
} catch (const NotInvertible& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
} catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
}

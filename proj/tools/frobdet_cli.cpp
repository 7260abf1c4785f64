// frobdet command-line front end: every core operation is reachable from one
// of the subcommands below; all output is JSON with stable key order.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "frobdet/afrob.hpp"
#include "frobdet/builtin_groups.hpp"
#include "frobdet/detfact.hpp"
#include "frobdet/efun.hpp"
#include "frobdet/eigenproblem.hpp"
#include "frobdet/frobgroup.hpp"
#include "frobdet/john.hpp"
#include "frobdet/json_io.hpp"
#include "frobdet/pde.hpp"

using frobdet::Error;
using frobdet::Rat;
using json = nlohmann::ordered_json;

namespace {

struct Common {
    std::string out_path;
    int seed = 42;
    int threads = 1;
};

// Operation coverage table: audited by the CLI test suite. Each core
// operation name maps to the subcommand path that reaches it.
const std::vector<std::pair<std::string, std::string>> kOperationCoverage = {
    {"parse_group", "group"},
    {"conjugacy_classes", "group"},
    {"abelian_characters", "group chars"},
    {"character_table_numeric", "group chars"},
    {"character_table_from_values", "group chars"},
    {"expand_group_det", "det expand"},
    {"dedekind_factorization", "factor"},
    {"circulant_eval", "det circulant"},
    {"frobenius_matrix", "det value"},
    {"rational_det", "det value"},
    {"isotypic_block_dets", "blocks"},
    {"s3_phi_eval", "det s3phi"},
    {"plane_wave_check", "pde planewave"},
    {"separated_solution_residual", "pde separated"},
    {"cayley_omega_apply", "pde cayley"},
    {"polarization_commutator_check", "pde polarization"},
    {"john_transform_numeric", "john numeric"},
    {"john_hypergeometric_closed", "john closed"},
    {"omega9_kernel_residual", "pde omega9"},
    {"falling_factorial_coeffs", "efun stirling"},
    {"hilbert_c_coeffs", "efun hilbert"},
    {"sigma_coeffs", "efun sigma"},
    {"ode_coeffs", "efun ode-coeffs"},
    {"series_eval", "efun eval"},
    {"ode_residual", "efun residual"},
    {"efun_denominator_bound", "efun denbound"},
    {"bracket_apply", "efun bracket"},
    {"eigen_solve", "efun solve"},
    {"convolve", "liealg convolve"},
    {"frobenius_inverse", "liealg inverse"},
    {"lie_generators", "liealg dims"},
    {"bracket_identity_check", "liealg dims"},
    {"center_derived_dims", "liealg dims"},
    {"unit_dims_check", "liealg dims"},
    {"frob_product", "afrob product"},
    {"structure_checks", "afrob check"},
    {"potential_check", "afrob check"},
};

frobdet::FiniteGroup resolve_group(const std::string& spec) {
    for (const auto& name : frobdet::builtin_group_names())
        if (name == spec) return frobdet::builtin_group(name);
    return frobdet::load_group_file(spec);
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

std::vector<Rat> parse_rats(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(frobdet::rat_from_string(tok));
    return out;
}

std::vector<frobdet::CD> parse_complexes(const std::string& s) {
    std::vector<frobdet::CD> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto pos = tok.find(':');
        double re = std::stod(tok.substr(0, pos));
        double im = (pos == std::string::npos) ? 0.0 : std::stod(tok.substr(pos + 1));
        out.emplace_back(re, im);
    }
    return out;
}

std::vector<std::string> parse_ids(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

json rat_json(const Rat& r) {
    json j;
    j["num"] = numerator(r).str();
    j["den"] = denominator(r).str();
    return j;
}

json complex_json(const frobdet::CD& z) {
    json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

json poly_json(const frobdet::SparsePoly<Rat>& p, const std::vector<std::string>& vars) {
    json j;
    j["vars"] = vars;
    json terms = json::array();
    for (const auto& [exps, c] : p.terms) {
        json t;
        t["exps"] = exps;
        t["num"] = numerator(c).str();
        t["den"] = denominator(c).str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

frobdet::SparsePoly<Rat> load_poly(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("BadFormat", "cannot open polynomial file: " + path);
    return frobdet::poly_from_json(nlohmann::json::parse(in));
}

void emit(const Common& c, json config, json result) {
    config["seed"] = c.seed;
    config["threads"] = c.threads;
    json out;
    out["config"] = std::move(config);
    out["result"] = std::move(result);
    std::string text = out.dump();
    if (!c.out_path.empty()) {
        std::ofstream f(c.out_path);
        f << text << "\n";
    } else {
        std::cout << text << "\n";
    }
}

std::vector<std::string> group_vars(const frobdet::FiniteGroup& g) {
    std::vector<std::string> v;
    for (int i = 0; i < g.n; ++i) v.push_back("X_" + g.names[i]);
    return v;
}

json character_table_json(const frobdet::FiniteGroup& g, const frobdet::CharacterTable& t) {
    json j;
    json classes = json::array();
    for (const auto& c : t.classes.classes) classes.push_back(c);
    j["classes"] = std::move(classes);
    j["degrees"] = t.degrees;
    json rows = json::array();
    for (const auto& row : t.values) {
        json r = json::array();
        for (const auto& z : row) r.push_back(complex_json(z));
        rows.push_back(std::move(r));
    }
    j["values"] = std::move(rows);
    (void)g;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"group determinants, their factorizations, and the attached analytic objects"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--out", common.out_path, "write JSON result to this file");
    app.add_option("--seed", common.seed, "random seed (default 42)");
    app.add_option("--threads", common.threads, "worker cap (informational)");

    std::string group_spec, fn_id = "exp", kind = "L", lambda_id = "zero";
    std::string alpha_s, beta_s, gamma_s, coeffs_s, a_s, b_s, z_s, x_s, y_s, x0_s, fns_s,
        poly_path, chars_path, grid_s = "0.5,1.0", nu_s = "0", phis_s, lam_s;
    int nn = 2, pp = 0, terms = 50, rr = 1, fsize = 2, jj = 0, ll = 1;
    double xx = 1.0, tt = -0.5;

    // group
    auto* cmd_group = app.add_subcommand("group", "parse and describe a finite group");
    cmd_group->add_option("--group", group_spec, "builtin name or JSON file")->required();
    auto* cmd_chars = cmd_group->add_subcommand("chars", "character table");
    cmd_chars->add_option("--from", chars_path, "ingest table from JSON file");

    // det
    auto* cmd_det = app.add_subcommand("det", "group determinant");
    cmd_det->require_subcommand(1);
    auto* det_expand = cmd_det->add_subcommand("expand", "symbolic Leibniz expansion");
    det_expand->add_option("--group", group_spec)->required();
    auto* det_circ = cmd_det->add_subcommand("circulant", "product over roots of unity");
    det_circ->add_option("--coeffs", coeffs_s, "complex re:im list")->required();
    auto* det_val = cmd_det->add_subcommand("value", "exact determinant of M(a)");
    det_val->add_option("--group", group_spec)->required();
    det_val->add_option("--coeffs", a_s, "rational list")->required();
    auto* det_s3 = cmd_det->add_subcommand("s3phi", "Dedekind's S3 factors");
    det_s3->add_option("--coeffs", a_s, "six rationals")->required();

    // factor / blocks
    auto* cmd_factor = app.add_subcommand("factor", "abelian linear factorization");
    cmd_factor->add_option("--group", group_spec)->required();
    auto* cmd_blocks = app.add_subcommand("blocks", "isotypic block determinants");
    cmd_blocks->add_option("--group", group_spec)->required();
    cmd_blocks->add_option("--coeffs", coeffs_s, "complex re:im list (default: seeded random)");

    // pde
    auto* cmd_pde = app.add_subcommand("pde", "kernel certificates for Theta(G)((d_g))");
    cmd_pde->require_subcommand(1);
    auto* pde_pw = cmd_pde->add_subcommand("planewave", "plane-wave kernel check");
    pde_pw->add_option("--group", group_spec)->required();
    pde_pw->add_option("--alpha", alpha_s, "complex re:im list")->required();
    pde_pw->add_option("--fn", fn_id, "test function id");
    auto* pde_sep = cmd_pde->add_subcommand("separated", "separated-solution check");
    pde_sep->add_option("--group", group_spec)->required();
    pde_sep->add_option("--fns", fns_s, "one id per character")->required();
    auto* pde_cay = cmd_pde->add_subcommand("cayley", "apply the Cayley operator");
    pde_cay->add_option("--f", fsize, "matrix size");
    pde_cay->add_option("--poly", poly_path, "polynomial JSON file")->required();
    auto* pde_pol = cmd_pde->add_subcommand("polarization", "commutator certificate");
    pde_pol->add_option("--f", fsize);
    pde_pol->add_option("--j", jj)->required();
    pde_pol->add_option("--l", ll)->required();
    pde_pol->add_option("--r", rr);
    pde_pol->add_option("--poly", poly_path)->required();
    auto* pde_o9 = cmd_pde->add_subcommand("omega9", "nine-variable kernel residual");
    pde_o9->add_option("--fn", fn_id);
    pde_o9->add_option("--alpha", alpha_s)->required();
    pde_o9->add_option("--beta", beta_s)->required();
    pde_o9->add_option("--gamma", gamma_s)->required();

    // john
    auto* cmd_john = app.add_subcommand("john", "John transform");
    cmd_john->require_subcommand(1);
    auto* john_num = cmd_john->add_subcommand("numeric", "adaptive quadrature");
    auto* john_cl = cmd_john->add_subcommand("closed", "Gamma/Gauss closed form");
    for (auto* c : {john_num, john_cl}) {
        c->add_option("--lambda", lam_s, "three exponents")->required();
        c->add_option("--alpha", a_s, "two slopes")->required();
        c->add_option("--beta", b_s, "two offsets")->required();
    }

    // efun
    auto* cmd_efun = app.add_subcommand("efun", "Bessel-type series and the eigenvalue problem");
    cmd_efun->require_subcommand(1);
    auto* ef_st = cmd_efun->add_subcommand("stirling", "falling-factorial coefficients");
    ef_st->add_option("--n", nn)->required();
    auto* ef_hi = cmd_efun->add_subcommand("hilbert", "Hilbert coefficient tables");
    ef_hi->add_option("--n", nn)->required();
    auto* ef_si = cmd_efun->add_subcommand("sigma", "symmetric functions of the indicial roots");
    ef_si->add_option("--n", nn)->required();
    auto* ef_ode = cmd_efun->add_subcommand("ode-coeffs", "ODE coefficient polynomials");
    ef_ode->add_option("--n", nn)->required();
    auto* ef_ev = cmd_efun->add_subcommand("eval", "series evaluation");
    ef_ev->add_option("--kind", kind, "E|F|L|Y|0F");
    ef_ev->add_option("--n", nn);
    ef_ev->add_option("--nu", nu_s);
    ef_ev->add_option("--p", pp);
    ef_ev->add_option("--x", xx);
    ef_ev->add_option("--t", tt, "argument for 0F");
    ef_ev->add_option("--xs", x_s, "coordinates for F");
    ef_ev->add_option("--terms", terms);
    auto* ef_res = cmd_efun->add_subcommand("residual", "ODE residual of Y_p");
    ef_res->add_option("--n", nn);
    ef_res->add_option("--nu", nu_s);
    ef_res->add_option("--p", pp);
    ef_res->add_option("--grid", grid_s);
    ef_res->add_option("--terms", terms);
    auto* ef_den = cmd_efun->add_subcommand("denbound", "E-function denominator growth");
    ef_den->add_option("--n", nn);
    ef_den->add_option("--nu", nu_s);
    ef_den->add_option("--terms", terms);
    auto* ef_br = cmd_efun->add_subcommand("bracket", "inclusion-exclusion bracket");
    ef_br->add_option("--fn", fn_id, "rhs function id evaluated on the full vector");
    ef_br->add_option("--r", rr);
    ef_br->add_option("--x0", x0_s)->required();
    ef_br->add_option("--x", x_s)->required();
    auto* ef_sol = cmd_efun->add_subcommand("solve", "boundary-value solver");
    ef_sol->add_option("--n", nn);
    ef_sol->add_option("--lambda", lambda_id);
    ef_sol->add_option("--phis", phis_s, "one boundary id per coordinate")->required();
    ef_sol->add_option("--x0", x0_s)->required();
    ef_sol->add_option("--grid", grid_s);

    // liealg
    auto* cmd_lie = app.add_subcommand("liealg", "Frobenius group and Lie algebra");
    cmd_lie->require_subcommand(1);
    auto* lie_dims = cmd_lie->add_subcommand("dims", "center/derived dimensions and brackets");
    lie_dims->add_option("--group", group_spec)->required();
    auto* lie_conv = cmd_lie->add_subcommand("convolve", "group-law convolution");
    lie_conv->add_option("--group", group_spec)->required();
    lie_conv->add_option("--a", a_s)->required();
    lie_conv->add_option("--b", b_s)->required();
    auto* lie_inv = cmd_lie->add_subcommand("inverse", "convolution inverse");
    lie_inv->add_option("--group", group_spec)->required();
    lie_inv->add_option("--a", a_s)->required();

    // afrob
    auto* cmd_af = app.add_subcommand("afrob", "almost-Frobenius certificates");
    cmd_af->require_subcommand(1);
    auto* af_prod = cmd_af->add_subcommand("product", "tangent-space product");
    af_prod->add_option("--z", z_s)->required();
    af_prod->add_option("--x", x_s)->required();
    af_prod->add_option("--y", y_s)->required();
    auto* af_chk = cmd_af->add_subcommand("check", "full certificate report");
    af_chk->add_option("--n", nn);

    auto* cmd_cov = app.add_subcommand("coverage", "operation-to-subcommand table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_group) {
            auto g = resolve_group(group_spec);
            if (*cmd_chars) {
                json cfg{{"command", "group chars"}, {"group", group_spec}};
                frobdet::CharacterTable t;
                if (!chars_path.empty()) {
                    std::ifstream in(chars_path);
                    if (!in) throw Error("BadFormat", "cannot open " + chars_path);
                    std::ostringstream ss;
                    ss << in.rdbuf();
                    t = frobdet::parse_character_table(g, ss.str());
                    cfg["from"] = chars_path;
                } else if (g.is_abelian()) {
                    t = frobdet::abelian_characters(g);
                } else {
                    t = frobdet::character_table_numeric(g, common.seed);
                }
                emit(common, cfg, character_table_json(g, t));
            } else {
                auto cc = frobdet::conjugacy_classes(g);
                json res;
                res["n"] = g.n;
                res["names"] = g.names;
                res["abelian"] = g.is_abelian();
                res["exponent"] = g.exponent;
                json classes = json::array();
                for (const auto& c : cc.classes) classes.push_back(c);
                res["classes"] = std::move(classes);
                res["class_count"] = cc.r;
                emit(common, json{{"command", "group"}, {"group", group_spec}}, res);
            }
        } else if (*cmd_det) {
            if (*det_expand) {
                auto g = resolve_group(group_spec);
                auto p = frobdet::expand_group_det(g);
                emit(common, json{{"command", "det expand"}, {"group", group_spec}},
                     poly_json(p, group_vars(g)));
            } else if (*det_circ) {
                auto c = parse_complexes(coeffs_s);
                auto v = frobdet::circulant_eval(c);
                emit(common, json{{"command", "det circulant"}, {"coeffs", coeffs_s}},
                     json{{"value", complex_json(v)}});
            } else if (*det_val) {
                auto g = resolve_group(group_spec);
                auto a = parse_rats(a_s);
                if (static_cast<int>(a.size()) != g.n)
                    throw Error("BadFormat", "need one coefficient per group element");
                auto d = frobdet::rational_det(frobdet::frobenius_matrix(g, a));
                emit(common,
                     json{{"command", "det value"}, {"group", group_spec}, {"coeffs", a_s}},
                     json{{"det", rat_json(d)}});
            } else if (*det_s3) {
                auto a = parse_rats(a_s);
                auto phi = frobdet::s3_phi_eval(a);
                json res;
                res["phi1"] = rat_json(phi.phi1);
                res["phi2"] = rat_json(phi.phi2);
                res["phi3"] = rat_json(phi.phi3);
                res["product"] = rat_json(phi.phi1 * phi.phi2 * phi.phi3 * phi.phi3);
                emit(common, json{{"command", "det s3phi"}, {"coeffs", a_s}}, res);
            }
        } else if (*cmd_factor) {
            auto g = resolve_group(group_spec);
            auto f = frobdet::dedekind_factorization(g);
            json factors = json::array();
            for (const auto& lf : f.factors) {
                json row = json::array();
                for (const auto& c : lf.coeffs) row.push_back(complex_json(c.to_complex()));
                factors.push_back(std::move(row));
            }
            emit(common, json{{"command", "factor"}, {"group", group_spec}},
                 json{{"factors", std::move(factors)}, {"verified", f.verified}});
        } else if (*cmd_blocks) {
            auto g = resolve_group(group_spec);
            auto t = g.is_abelian() ? frobdet::abelian_characters(g)
                                    : frobdet::character_table_numeric(g, common.seed);
            std::vector<frobdet::CD> coeffs;
            if (!coeffs_s.empty()) {
                coeffs = parse_complexes(coeffs_s);
            } else {
                std::mt19937 rng(common.seed);
                std::uniform_real_distribution<double> dist(-1.0, 1.0);
                for (int i = 0; i < g.n; ++i) coeffs.emplace_back(dist(rng), dist(rng));
            }
            auto dec = frobdet::isotypic_block_dets(g, t, coeffs);
            json blocks = json::array();
            for (const auto& b : dec.blocks)
                blocks.push_back(json{{"degree", b.degree}, {"det", complex_json(b.det)}});
            emit(common, json{{"command", "blocks"}, {"group", group_spec}},
                 json{{"blocks", std::move(blocks)},
                      {"total_det", complex_json(dec.total_det)},
                      {"offblock_mass", dec.offblock_mass}});
        } else if (*cmd_pde) {
            if (*pde_pw) {
                auto g = resolve_group(group_spec);
                auto r = frobdet::plane_wave_check(g, parse_complexes(alpha_s), fn_id);
                emit(common,
                     json{{"command", "pde planewave"}, {"group", group_spec}, {"fn", fn_id}},
                     json{{"symbol_value", r.symbol_value},
                          {"residual", r.residual},
                          {"exact", r.exact}});
            } else if (*pde_sep) {
                auto g = resolve_group(group_spec);
                auto r = frobdet::separated_solution_residual(g, parse_ids(fns_s));
                emit(common,
                     json{{"command", "pde separated"}, {"group", group_spec}, {"fns", fns_s}},
                     json{{"residual", r.residual}, {"exact", r.exact}});
            } else if (*pde_cay) {
                auto q = load_poly(poly_path);
                auto r = frobdet::cayley_omega_apply(fsize, q);
                std::vector<std::string> vars;
                for (int a = 0; a < fsize; ++a)
                    for (int b = 0; b < fsize; ++b)
                        vars.push_back("z_" + std::to_string(a + 1) + std::to_string(b + 1));
                emit(common, json{{"command", "pde cayley"}, {"f", fsize}}, poly_json(r, vars));
            } else if (*pde_pol) {
                auto q = load_poly(poly_path);
                auto r = frobdet::polarization_commutator_check(fsize, jj, ll, rr, q);
                emit(common,
                     json{{"command", "pde polarization"},
                          {"f", fsize},
                          {"j", jj},
                          {"l", ll},
                          {"r", rr}},
                     json{{"ok", r.ok}});
            } else if (*pde_o9) {
                auto r = frobdet::omega9_kernel_residual(fn_id, parse_doubles(alpha_s),
                                                         parse_doubles(beta_s),
                                                         parse_doubles(gamma_s));
                emit(common, json{{"command", "pde omega9"}, {"fn", fn_id}},
                     json{{"residual", r.residual}});
            }
        } else if (*cmd_john) {
            auto lam = parse_doubles(lam_s);
            auto al = parse_doubles(a_s);
            auto be = parse_doubles(b_s);
            if (lam.size() != 3 || al.size() != 2 || be.size() != 2)
                throw Error("BadFormat", "john needs three lambdas, two alphas, two betas");
            frobdet::JohnParams p;
            p.lambda = {lam[0], lam[1], lam[2]};
            p.alpha1 = al[0];
            p.alpha2 = al[1];
            p.beta1 = be[0];
            p.beta2 = be[1];
            json cfg{{"command", *john_num ? "john numeric" : "john closed"},
                     {"lambda", lam_s},
                     {"alpha", a_s},
                     {"beta", b_s}};
            if (*john_num) {
                auto r = frobdet::john_transform_numeric(p);
                emit(common, cfg,
                     json{{"value", r.value}, {"error_estimate", r.error_estimate}});
            } else {
                emit(common, cfg, json{{"value", frobdet::john_hypergeometric_closed(p)}});
            }
        } else if (*cmd_efun) {
            Rat nu = frobdet::rat_from_string(nu_s);
            if (*ef_st) {
                json vals = json::array();
                for (const auto& v : frobdet::falling_factorial_coeffs(nn))
                    vals.push_back(v.str());
                emit(common, json{{"command", "efun stirling"}, {"n", nn}}, json{{"s", vals}});
            } else if (*ef_hi) {
                auto h = frobdet::hilbert_c_coeffs(nn);
                json a = json::array(), c = json::array();
                for (const auto& v : h.A) a.push_back(v.str());
                for (const auto& v : h.C) c.push_back(rat_json(v));
                emit(common, json{{"command", "efun hilbert"}, {"n", nn}},
                     json{{"A", a}, {"C", c}});
            } else if (*ef_si) {
                json vals = json::array();
                for (const auto& v : frobdet::sigma_coeffs(nn)) vals.push_back(v.str());
                emit(common, json{{"command", "efun sigma"}, {"n", nn}}, json{{"sigma", vals}});
            } else if (*ef_ode) {
                auto spec = frobdet::ode_coeffs(nn);
                json rows = json::array();
                for (const auto& poly : spec.A) {
                    json row = json::array();
                    for (const auto& c : poly) row.push_back(c.str());
                    rows.push_back(std::move(row));
                }
                emit(common, json{{"command", "efun ode-coeffs"}, {"n", nn}},
                     json{{"A", rows}});
            } else if (*ef_ev) {
                frobdet::SeriesValue v;
                if (kind == "E") {
                    v = frobdet::en_eval(nn, xx, terms);
                } else if (kind == "F") {
                    v = frobdet::fn_eval(nn, parse_doubles(x_s), terms);
                } else if (kind == "L") {
                    v = frobdet::l_eval(nn, nu, xx, terms);
                } else if (kind == "Y") {
                    v = frobdet::yp_eval(nn, nu, pp, xx, terms);
                } else if (kind == "0F") {
                    v = frobdet::hyp0f_eval(nn, nu, tt, terms);
                } else {
                    throw Error("BadFormat", "unknown series kind " + kind);
                }
                emit(common,
                     json{{"command", "efun eval"},
                          {"kind", kind},
                          {"n", nn},
                          {"nu", nu_s},
                          {"terms", terms}},
                     json{{"value", v.value}, {"tail_bound", v.tail_bound}});
            } else if (*ef_res) {
                double r = frobdet::ode_residual(nn, nu, pp, parse_doubles(grid_s), terms);
                emit(common,
                     json{{"command", "efun residual"}, {"n", nn}, {"nu", nu_s}, {"p", pp}},
                     json{{"max_residual", r}});
            } else if (*ef_den) {
                auto r = frobdet::efun_denominator_bound(nn, nu, terms);
                emit(common,
                     json{{"command", "efun denbound"}, {"n", nn}, {"nu", nu_s}},
                     json{{"divisibility_ok", r.divisibility_ok},
                          {"max_log_den_rate", r.max_log_den_rate},
                          {"witness_m", r.witness_m}});
            } else if (*ef_br) {
                auto x0 = parse_doubles(x0_s);
                auto x = parse_doubles(x_s);
                auto f = frobdet::rhs_function(fn_id, static_cast<int>(x.size()));
                double v = frobdet::bracket_apply(f, x0, rr, x);
                emit(common, json{{"command", "efun bracket"}, {"fn", fn_id}, {"r", rr}},
                     json{{"value", v}});
            } else if (*ef_sol) {
                frobdet::BoundaryData data;
                data.x0 = parse_doubles(x0_s);
                data.phi_ids = parse_ids(phis_s);
                auto rep = frobdet::eigen_solve(nn, lambda_id, data, parse_doubles(grid_s));
                emit(common,
                     json{{"command", "efun solve"}, {"n", nn}, {"lambda", lambda_id}},
                     json{{"values", rep.values},
                          {"boundary_max_err", rep.boundary_max_err},
                          {"pde_residual", rep.pde_residual},
                          {"boundary_ok", rep.boundary_ok},
                          {"pde_ok", rep.pde_ok}});
            }
        } else if (*cmd_lie) {
            auto g = resolve_group(group_spec);
            if (*lie_dims) {
                auto br = frobdet::bracket_identity_check(g);
                auto st = frobdet::center_derived_dims(g);
                auto t = g.is_abelian() ? frobdet::abelian_characters(g)
                                        : frobdet::character_table_numeric(g, common.seed);
                auto dims = frobdet::unit_dims_check(g, t);
                emit(common, json{{"command", "liealg dims"}, {"group", group_spec}},
                     json{{"r", st.r},
                          {"derived_dim", st.derived_dim},
                          {"direct_sum", st.direct_sum},
                          {"bracket_ok", br.ok},
                          {"degrees", dims.degrees},
                          {"sum_squares", dims.sum_squares}});
            } else if (*lie_conv) {
                auto c = frobdet::convolve(g, parse_rats(a_s), parse_rats(b_s));
                json vals = json::array();
                for (const auto& v : c) vals.push_back(rat_json(v));
                emit(common, json{{"command", "liealg convolve"}, {"group", group_spec}},
                     json{{"c", vals}});
            } else if (*lie_inv) {
                auto u = frobdet::frobenius_inverse(g, parse_rats(a_s));
                json vals = json::array();
                for (const auto& v : u) vals.push_back(rat_json(v));
                emit(common, json{{"command", "liealg inverse"}, {"group", group_spec}},
                     json{{"u", vals}});
            }
        } else if (*cmd_af) {
            if (*af_prod) {
                auto v = frobdet::frob_product(parse_rats(z_s), parse_rats(x_s), parse_rats(y_s));
                json vals = json::array();
                for (const auto& t : v) vals.push_back(rat_json(t));
                emit(common, json{{"command", "afrob product"}}, json{{"xy", vals}});
            } else {
                std::mt19937 rng(common.seed);
                std::uniform_real_distribution<double> dist(0.5, 3.0);
                std::vector<Rat> z;
                std::vector<double> zd;
                for (int i = 0; i < nn; ++i) {
                    double v = dist(rng);
                    zd.push_back(v);
                    z.push_back(Rat(static_cast<long long>(v * 1000), 1000));
                }
                auto st = frobdet::structure_checks(z);
                auto pot = frobdet::potential_check(zd);
                emit(common, json{{"command", "afrob check"}, {"n", nn}},
                     json{{"partition_of_identity", st.partition_of_identity},
                          {"dunkl", st.dunkl},
                          {"self_adjoint", st.self_adjoint},
                          {"restrictions_nondegenerate", st.restrictions_nondegenerate},
                          {"structure_ok", st.ok},
                          {"potential_max_deviation", pot.max_deviation},
                          {"potential_ok", pot.ok}});
            }
        } else if (*cmd_cov) {
            json rows = json::array();
            for (const auto& [op, sub] : kOperationCoverage)
                rows.push_back(json{{"operation", op}, {"subcommand", sub}});
            emit(common, json{{"command", "coverage"}}, json{{"operations", rows}});
        }
    } catch (const Error& e) {
        json err{{"error", e.code()}, {"message", e.what()}};
        std::cout << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err{{"error", "InternalError"}, {"message", e.what()}};
        std::cout << err.dump() << "\n";
        return 2;
    }
    return 0;
}

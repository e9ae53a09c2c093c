// Batch front end: residues, zeta values, symbols and the verification checks.
#include "suq2/checks.hpp"
#include "suq2/parser.hpp"
#include "suq2/qseries.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

using json = nlohmann::json;
using namespace suq2;

namespace {

struct RunConfig {
    std::string q = "0.5";
    std::string mode = "numeric";
    double eps = 1.0;
    double tol = 1e-10;
    std::string n_max = "auto";
    std::string output = "json";
    std::uint64_t seed = 1;
    bool timing = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "1/3", "0.25" or "2" as an exact rational.
Rational parse_rational(const std::string& s) {
    auto dot = s.find('.');
    try {
        if (dot == std::string::npos) {
            Rational r(s, 10);
            r.canonicalize();
            return r;
        }
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        mpz_class den = 1;
        for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        Rational r(mpz_class(digits.empty() ? "0" : digits, 10), den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw UsageError("not a number: " + s);
    }
}

double q_value(const RunConfig& c) {
    double q = parse_rational(c.q).get_d();
    if (q < 0.0 || q >= 1.0) throw UsageError("q must lie in [0, 1)");
    return q;
}

ZetaContext context(const RunConfig& c) {
    if (c.tol <= 0) throw UsageError("tol must be positive");
    if (c.eps <= 0) throw UsageError("epsilon must be positive");
    ZetaContext ctx;
    ctx.q = q_value(c);
    ctx.eps = c.eps;
    ctx.tol = c.tol;
    if (c.n_max != "auto") {
        ctx.n_cap = std::stoi(c.n_max);
        ctx.n_start = std::min(ctx.n_start, ctx.n_cap);
    }
    return ctx;
}

Restriction sector(const std::string& s) {
    if (s == "full") return Restriction::Full;
    if (s == "P") return Restriction::PSector;
    throw UsageError("sector must be full or P");
}

json fit_json(const FitResult& f) {
    return {{"stabilized", f.stabilized},       {"degree", f.degree},     {"lambda", f.lambda},
            {"window_start", f.window_start},   {"read_end", f.read_end}, {"achieved", f.achieved},
            {"identically_zero", f.identically_zero}};
}

json rows_json(const std::vector<IdentityRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back({{"args", r.args}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"residual", r.residual()}});
    return out;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    return out;
}

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(*it, path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
    } else {
        out.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

void emit(const json& report, const RunConfig& c) {
    if (c.output == "csv") {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(report, "", rows);
        std::cout << "key,value\n";
        for (const auto& [k, v] : rows) std::cout << k << ',' << (v.find(',') != std::string::npos ? '"' + v + '"' : v) << '\n';
    } else {
        std::cout << report.dump(2) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral triple and cyclic cocycle computations on SU_q(2)"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--q", cfg.q, "deformation parameter in [0,1)")->capture_default_str();
    app.add_option("--mode", cfg.mode, "exact|numeric")->check(CLI::IsMember({"exact", "numeric"}))->capture_default_str();
    app.add_option("--epsilon", cfg.eps, "regularization of |D| on the kernel")->capture_default_str();
    app.add_option("--tol", cfg.tol, "stabilization tolerance")->capture_default_str();
    app.add_option("--n-max", cfg.n_max, "level cap or auto")->capture_default_str();
    app.add_option("--output", cfg.output, "json|csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--seed", cfg.seed, "battery sampling seed")->capture_default_str();
    app.add_flag("--timing", cfg.timing, "include wall time (breaks byte-identical output)");

    std::string word, sector_name = "full", battery = "auto", words_file, kind;
    int pole = 1, levels = 40, kmax = 3, lmax = 3, nmax = 3, rmax = 4, r = 1;
    double qsq = 0.25;
    std::vector<int> caps{10, 14, 18};

    auto* residue_cmd = app.add_subcommand("residue", "int op |D|^{-pole}");
    residue_cmd->add_option("--word", word)->required();
    residue_cmd->add_option("--pole", pole)->check(CLI::IsMember({1, 2, 3}))->required();
    residue_cmd->add_option("--sector", sector_name)->check(CLI::IsMember({"full", "P"}));
    auto* zeta_cmd = app.add_subcommand("zeta0", "zeta-value at s = 0");
    zeta_cmd->add_option("--word", word)->required();
    zeta_cmd->add_option("--sector", sector_name)->check(CLI::IsMember({"full", "P"}));
    auto* traces_cmd = app.add_subcommand("level-traces", "per-level traces c_N");
    traces_cmd->add_option("--word", word)->required();
    traces_cmd->add_option("--n", levels)->check(CLI::Range(0, 2000));
    traces_cmd->add_option("--sector", sector_name)->check(CLI::IsMember({"full", "P"}));
    auto* symbol_cmd = app.add_subcommand("symbol", "principal symbol rho(b) and its degree-0 part");
    symbol_cmd->add_option("--word", word)->required();
    auto* index_cmd = app.add_subcommand("index-pairing", "Fredholm index of the compressed unitary");
    index_cmd->add_option("--caps", caps)->expected(1, 8);

    auto* check_cmd = app.add_subcommand("check", "verification reports");
    check_cmd->require_subcommand(1);
    check_cmd->fallthrough();
    auto* c_rel = check_cmd->add_subcommand("relations");
    auto* c_spec = check_cmd->add_subcommand("dimension-spectrum");
    c_spec->add_option("--battery", battery, "auto or a file of expressions");
    auto* c_t3 = check_cmd->add_subcommand("theorem3");
    c_t3->add_option("--kmax", kmax);
    c_t3->add_option("--lmax", lmax);
    c_t3->add_option("--nmax", nmax);
    auto* c_t4 = check_cmd->add_subcommand("theorem4");
    c_t4->add_option("--words", words_file, "file of expressions (default: all words of length <= 3)");
    auto* c_t5 = check_cmd->add_subcommand("theorem5");
    auto* c_c1 = check_cmd->add_subcommand("corollary1");
    auto* c_t6 = check_cmd->add_subcommand("theorem6");
    c_t6->add_option("--rmax", rmax);
    auto* c_eq = check_cmd->add_subcommand("equivariance");
    auto* c_bi = check_cmd->add_subcommand("bicomplex");

    auto* qs_cmd = app.add_subcommand("qseries", "q-series and rational-fraction identities");
    qs_cmd->add_option("kind", kind)->check(CLI::IsMember({"R", "c0c1", "G", "eta-identity"}))->required();
    qs_cmd->add_option("--r", r)->check(CLI::Range(1, 40));
    qs_cmd->add_option("--qsq", qsq)->check(CLI::Range(0.0, 0.999999));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    json report, config = {{"q", cfg.q}, {"mode", cfg.mode}, {"epsilon", cfg.eps}, {"tol", cfg.tol}, {"n_max", cfg.n_max}, {"seed", cfg.seed}};
    bool pass = true;
    try {
        const bool exact = cfg.mode == "exact";
        if (*residue_cmd) {
            auto ctx = context(cfg);
            auto s = level_trace_series(parse_operator(word, Mode::Numeric), sector(sector_name), ctx);
            report = {{"word", word}, {"pole", pole}, {"residue", residue_from_fit(s.fit, pole)}, {"fit", fit_json(s.fit)}};
        } else if (*zeta_cmd) {
            auto ctx = context(cfg);
            auto s = level_trace_series(parse_operator(word, Mode::Numeric), sector(sector_name), ctx);
            report = {{"word", word}, {"zeta0", zeta_value_from_series(s)}, {"fit", fit_json(s.fit)}};
        } else if (*traces_cmd) {
            auto ctx = context(cfg);
            auto c = level_traces(parse_operator(word, Mode::Numeric), levels, sector(sector_name), ctx);
            report = {{"word", word}, {"traces", c}};
        } else if (*symbol_cmd) {
            double q = q_value(cfg);
            auto s = rho(parse_element(word, Mode::Numeric), q);
            report = {{"word", word}, {"rho", s.str()}, {"rho_degree0", degree0(s).str()}};
        } else if (*index_cmd) {
            double q = q_value(cfg);
            auto ix = index_pairing(q, caps);
            report = {{"caps", ix.caps},   {"kernel", ix.kernel}, {"cokernel", ix.cokernel},
                      {"index", ix.index}, {"stable", ix.stable}, {"smallest_singular", ix.smallest_singular}};
            pass = ix.stable && ix.index != 0;
        } else if (*c_rel) {
            RelationReport rr;
            if (exact) rr = check_relations_exact(parse_rational(cfg.q), 10);
            else rr = check_relations(q_value(cfg), 30);
            report = {{"n_max", rr.n_max}, {"exact", rr.exact}, {"max_residual", rr.max_residual}};
            if (exact) pass = rr.all_exact_zero;
            else
                for (double v : rr.max_residual) pass &= v < 1e-12;
            report["all_exact_zero"] = rr.all_exact_zero;
        } else if (*c_spec) {
            auto ctx = context(cfg);
            auto words = battery == "auto" ? default_spectrum_battery() : read_lines(battery);
            json items = json::array();
            for (const auto& it : dimension_spectrum_probe(words, ctx)) {
                items.push_back({{"word", it.word},
                                 {"bidegree", {it.bidegree.first, it.bidegree.second}},
                                 {"zero_expected", it.zero_expected},
                                 {"identically_zero", it.identically_zero},
                                 {"stabilized", it.stabilized},
                                 {"degree", it.degree},
                                 {"achieved", it.achieved},
                                 {"residues", it.residues},
                                 {"ok", it.ok},
                                 {"error", it.error}});
                pass &= it.ok;
            }
            report = {{"items", items}};
        } else if (*c_t3) {
            auto t = theorem3_check(kmax, lmax, nmax, std::max(cfg.tol, 1e-9));
            report = {{"phi1", rows_json(t.phi1_rows)},
                      {"phi3", rows_json(t.phi3_rows)},
                      {"psi_diagnostic", rows_json(t.psi_rows)},
                      {"max_residual", t.max_residual}};
            pass = t.ok;
        } else if (*c_t4) {
            auto ctx = context(cfg);
            std::vector<std::string> words;
            if (words_file.empty()) {
                const char* ls[] = {"a", "a*", "b", "b*"};
                words.push_back("1");
                for (int len = 1; len <= 3; ++len) {
                    std::vector<std::string> cur{""};
                    for (int i = 0; i < len; ++i) {
                        std::vector<std::string> nxt;
                        for (const auto& w : cur)
                            for (auto l : ls) nxt.push_back(w.empty() ? l : w + " " + l);
                        cur = nxt;
                    }
                    words.insert(words.end(), cur.begin(), cur.end());
                }
            } else {
                words = read_lines(words_file);
            }
            json items = json::array();
            double worst = 0.0;
            for (const auto& w : words) {
                auto t = theorem4_check(parse_element(w), ctx, std::max(cfg.tol, 1e-8));
                json rows = json::array();
                for (const auto& row : t.rows)
                    rows.push_back({{"name", row.name}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"informational", row.informational}, {"ok", row.ok}});
                items.push_back({{"word", w}, {"rows", rows}, {"max_deviation", t.max_deviation}, {"ok", t.ok}});
                worst = std::max(worst, t.max_deviation);
                pass &= t.ok;
            }
            report = {{"items", items}, {"max_deviation", worst}};
        } else if (*c_t5) {
            auto t = theorem5_check(q_value(cfg), std::max(cfg.tol, 1e-8));
            json rows = json::array();
            for (const auto& row : t.rows)
                rows.push_back({{"args", row.args}, {"psi1", row.psi1}, {"psi1_first_order", row.psi1_printed}, {"chi", row.chi}});
            report = {{"rows", rows},
                      {"residual_literal", t.residual_literal},
                      {"residual_factor2", t.residual_factor2},
                      {"first_order_antisymmetry", t.printed_antisymmetry},
                      {"winning_variant", t.winning_variant},
                      {"literal_ok", t.literal_ok}};
            pass = t.literal_ok;
        } else if (*c_c1) {
            auto t = corollary1_check(q_value(cfg), std::max(cfg.tol, 1e-8));
            report = {{"frozen_sign", t.frozen_sign},         {"chi_factor", t.chi_factor},
                      {"residual_literal", t.residual_literal}, {"residual", t.residual},
                      {"g_term_residual", t.g_term_residual},   {"literal_ok", t.literal_ok},
                      {"ok", t.ok}};
            pass = t.literal_ok && t.ok;
        } else if (*c_t6) {
            auto t = theorem6_check(rmax, {q_value(cfg)}, std::max(cfg.tol, 1e-8));
            json rows = json::array();
            for (const auto& row : t.rows)
                rows.push_back({{"r", row.r}, {"half_psi0", row.half_psi0}, {"predicted", row.predicted}, {"residual", std::fabs(row.half_psi0 - row.predicted)}});
            report = {{"rows", rows},
                      {"max_residual", t.max_residual},
                      {"diagonal_residual", t.diagonal_residual},
                      {"limit_value", t.limit_value},
                      {"limit_predicted", t.limit_predicted},
                      {"ok", t.ok}};
            pass = t.ok;
        } else if (*c_eq) {
            double q = q_value(cfg);
            if (q == 0.0) throw UsageError("equivariance needs q > 0");
            auto e = check_equivariance(q, 10);
            auto v = vacuum_test(q);
            json vac = json::array();
            for (const auto& row : v.rows) vac.push_back({{"name", row.name}, {"residual", row.residual}});
            report = {{"ke_qek", e.ke_qek}, {"kf_fk", e.kf_fk}, {"ef_commutator", e.ef_commutator}, {"d_k", e.d_k},
                      {"d_e", e.d_e},       {"d_f", e.d_f},     {"f_is_e_adjoint", e.f_is_e_adjoint},
                      {"max_residual", e.max()}, {"vacuum", vac}};
            pass = e.max() < 1e-12 && v.max_residual < 1e-12;
        } else if (*c_bi) {
            auto b = bicomplex_check(100, cfg.seed);
            report = {{"samples", b.samples}, {"nonzero_b2", b.nonzero_b2}, {"nonzero_B2", b.nonzero_B2}, {"nonzero_bB", b.nonzero_bB}};
            pass = b.ok();
        } else if (*qs_cmd) {
            if (kind == "R") {
                auto f = R(r);
                report = {{"r", r}, {"R", f.str()}};
                if (r <= 4) {
                    report["R_reference"] = R_printed(r).str();
                    pass = f == R_printed(r);
                    report["matches_reference"] = pass;
                }
                if (!exact) report["value"] = f.eval(qsq);
            } else if (kind == "c0c1") {
                auto s = c0(r) + c1(r);
                pass = s.is_zero() && c0(r) == c0_from_lambda(r) && c1(r) == c1_from_partial_fractions(r);
                report = {{"r", r}, {"c0", c0(r).str()}, {"c1", c1(r).str()}, {"c0_plus_c1", s.str()}, {"closed_forms_match", pass}};
                if (!exact) report["c0_value"] = c0(r).eval(qsq);
            } else if (kind == "G") {
                auto g = G(qsq, cfg.tol);
                report = {{"qsq", qsq}, {"G", g.value}, {"tail_bound", g.tail_bound}, {"terms_used", g.terms_used}};
            } else {
                auto e = eta_identity(qsq, cfg.tol);
                report = {{"qsq", qsq},
                          {"log_derivative", e.log_derivative},
                          {"G", e.G},
                          {"rhs_one_24th", e.rhs_one_24th},
                          {"rhs_one_12th", e.rhs_one_12th}};
                pass = std::fabs(e.log_derivative - e.rhs_one_24th) < 1e-8;
            }
        }
    } catch (const UsageError& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << json{{"error", "parse"}, {"message", e.what()}, {"offset", e.offset()}}.dump() << '\n';
        return 2;
    } catch (const FitError& e) {
        std::cerr << json{{"error", "stabilization"}, {"message", e.what()}, {"achieved", e.achieved()}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "runtime"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    }

    report["config"] = config;
    report["pass"] = pass;
    if (cfg.timing)
        report["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(report, cfg);
    return pass ? 0 : 1;
}

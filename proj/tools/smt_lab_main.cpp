#include "smtlab/parse.hpp"
#include "smtlab/replace.hpp"
#include "smtlab/scenario.hpp"
#include "smtlab/weights.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace smtlab;
using nlohmann::json;

namespace {

struct Options {
    std::string input;
    std::string out;
    std::string csv;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> epsilon;
    std::optional<int> u;
    std::optional<double> r_min, r_max;
    std::optional<int> samples;
    std::optional<int> retry_budget;
    std::optional<double> tolerance;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--input", opt.input, "scenario file (JSON, schema_version 1)")->required();
    cmd->add_option("--out", opt.out, "write the JSON report here (default: stdout)");
    cmd->add_option("--csv", opt.csv, "write dense r-grid data as CSV");
    cmd->add_option("--seed", opt.seed, "override sampling seed");
    cmd->add_option("--epsilon", opt.epsilon, "override epsilon (exact rational, e.g. 1/2)");
    cmd->add_option("--u", opt.u, "override the Hilbert degree u");
    cmd->add_option("--r-min", opt.r_min, "override the smallest radius");
    cmd->add_option("--r-max", opt.r_max, "override the largest radius");
    cmd->add_option("--samples", opt.samples, "override the number of r samples");
    cmd->add_option("--retry-budget", opt.retry_budget, "override the per-step retry budget");
    cmd->add_option("--tolerance", opt.tolerance, "override the quadrature tolerance");
}

cli::Scenario load(const Options& opt) {
    cli::Scenario sc = cli::load_scenario(opt.input);
    if (opt.seed) sc.sampling.seed = *opt.seed;
    if (opt.epsilon) sc.epsilon = rational_from_string(*opt.epsilon);
    if (opt.u) sc.u = *opt.u;
    if (opt.r_min) sc.r_min = *opt.r_min;
    if (opt.r_max) sc.r_max = *opt.r_max;
    if (opt.samples) sc.samples = *opt.samples;
    if (opt.retry_budget) sc.retry_budget = *opt.retry_budget;
    if (opt.tolerance) sc.quad.tolerance = *opt.tolerance;
    return sc;
}

json base_report(const char* command, const cli::Scenario& sc) {
    json rep;
    rep["schema_version"] = "1";
    rep["command"] = command;
    rep["input"] = {{"path", sc.path}, {"digest", sc.digest}};
    rep["seed"] = sc.sampling.seed;
    rep["notes"] = json::array();
    return rep;
}

void emit(const Options& opt, json& rep, const std::chrono::steady_clock::time_point& started) {
    rep["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    std::string text = rep.dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw ParseError("cannot write report to '" + opt.out + "'", 0);
        f << text;
    }
}

void emit_csv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& columns) {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write CSV to '" + path + "'", 0);
    for (std::size_t i = 0; i < header.size(); ++i) f << (i ? "," : "") << header[i];
    f << "\n";
    std::size_t rows = columns.empty() ? 0 : columns.front().size();
    f.precision(17);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) f << (c ? "," : "") << columns[c][r];
        f << "\n";
    }
}

const HypersurfaceFamily& need_family(const cli::Scenario& sc) {
    if (!sc.family) throw ParseError("scenario: this command needs a 'hypersurfaces' section", 0);
    return *sc.family;
}

const CurveSpec& need_curve(const cli::Scenario& sc) {
    if (!sc.curve) throw ParseError("scenario: this command needs a 'curve' section", 0);
    return *sc.curve;
}

json codim_json(const Codim& c) {
    if (!c) return "infinite";
    return *c;
}

// ---- subcommands ----------------------------------------------------------

int cmd_analyze_position(const Options& opt) {
    auto started = std::chrono::steady_clock::now();
    cli::Scenario sc = load(opt);
    const HypersurfaceFamily& fam = need_family(sc);

    json rep = base_report("analyze-position", sc);
    DistributiveReport dr = distributive_constant(sc.variety, fam, sc.sampling);
    rep["delta"] = cli::rational_str(dr.delta);
    rep["witness"] = dr.witness;
    rep["stable"] = dr.stable;
    rep["samples_used"] = cli::rational_list(dr.samples_used);
    json table = json::object();
    for (const auto& [subset, codim] : dr.table) {
        std::string key;
        for (int i : subset) key += (key.empty() ? "" : ",") + std::to_string(i);
        table[key] = codim_json(codim);
    }
    rep["codim_table"] = table;
    rep["per_sample_delta"] = cli::rational_list(dr.per_sample_delta);

    bool pass = true;
    if (sc.l) {
        SubgeneralReport sg = subgeneral_position_check(sc.variety, fam, *sc.l, sc.sampling);
        rep["subgeneral"] = {{"l", *sc.l}, {"holds", sg.holds}};
        if (!sg.holds) rep["subgeneral"]["violating_subset"] = sg.violating_subset;
        pass = sg.holds;
    }
    rep["verdict"] = pass ? "PASS" : "FAIL";
    emit(opt, rep, started);
    return pass ? 0 : 1;
}

int cmd_replace(const Options& opt) {
    auto started = std::chrono::steady_clock::now();
    cli::Scenario sc = load(opt);
    const HypersurfaceFamily& fam = need_family(sc);
    std::vector<Poly> ordered;
    for (const auto& e : fam.entries) ordered.push_back(to_fixed(e.poly));

    json rep = base_report("replace", sc);
    DimensionProfile profile = dimension_profile(sc.variety, ordered);
    json dims = json::array();
    for (const auto& d : profile.dims) dims.push_back(d ? json(*d) : json("empty"));
    rep["dimension_profile"] = dims;

    int n = *projective_dimension(sc.variety);
    Thresholds th = thresholds_from_profile(profile, n);
    rep["thresholds"] = th.t;
    rep["threshold_convention"] = "t_0 = 0 (statement form t_0 = 1 differs by a shift only)";
    rep["delta_from_thresholds"] = cli::rational_str(delta_from_thresholds(th));
    rep["m_sequence"] = cli::rational_list(m_sequence(th));

    ReplacementResult rr =
        replace_family(sc.variety, ordered, sc.sampling.seed, sc.retry_budget.value_or(10));
    json coeffs = json::array();
    for (const auto& row : rr.coefficients) coeffs.push_back(cli::rational_list(row));
    rep["coefficients"] = coeffs;
    json cert = json::array();
    for (const auto& d : rr.certificate) cert.push_back(d ? json(*d) : json("empty"));
    rep["certificate"] = cert;
    rep["retries_used"] = rr.retries_used;
    json reps = json::array();
    for (const Poly& p : rr.replacements) reps.push_back(poly_to_string(p, sc.variables));
    rep["replacements"] = reps;
    rep["verdict"] = "PASS";
    emit(opt, rep, started);
    return 0;
}

int cmd_lemma31(const Options& opt) {
    auto started = std::chrono::steady_clock::now();
    cli::Scenario sc = load(opt);
    if (!sc.thresholds || !sc.lemma_weights)
        throw ParseError("scenario: lemma31 needs analysis.thresholds and analysis.a", 0);
    Thresholds th;
    th.t = *sc.thresholds;
    th.l = th.t.empty() ? 0 : th.t.back();
    th.offset = th.t.empty() ? 0 : th.t.front();

    json rep = base_report("lemma31", sc);
    rep["delta"] = cli::rational_str(delta_from_thresholds(th));
    rep["m_sequence"] = cli::rational_list(m_sequence(th));
    ProductInequalityReport pr = weighted_product_inequality(th, *sc.lemma_weights);
    rep["inequality"] = {{"holds", pr.holds},
                         {"lhs", cli::rational_str(pr.lhs)},
                         {"rhs", cli::rational_str(pr.rhs)},
                         {"power", pr.power}};
    rep["verdict"] = pr.holds ? "PASS" : "FAIL";
    emit(opt, rep, started);
    return pr.holds ? 0 : 1;
}

int cmd_hilbert_weight(const Options& opt) {
    auto started = std::chrono::steady_clock::now();
    cli::Scenario sc = load(opt);
    if (!sc.u || !sc.weights)
        throw ParseError("scenario: hilbert-weight needs analysis.u and analysis.c", 0);
    WeightVector c = make_weights(*sc.weights);

    json rep = base_report("hilbert-weight", sc);
    WeightBasisReport wb = max_weight_basis(sc.variety, *sc.u, c);
    rep["u"] = *sc.u;
    rep["value"] = cli::rational_str(wb.value);
    json basis = json::array();
    for (const Monomial& m : wb.basis) basis.push_back(monomial_to_string(m, sc.variables));
    rep["basis"] = basis;
    rep["hilbert_function"] = static_cast<long>(wb.basis.size());

    bool pass = true;
    if (sc.run_oracle.value_or(false)) {
        Rational oracle = brute_force_hilbert_weight(sc.variety, *sc.u, c);
        rep["oracle_value"] = cli::rational_str(oracle);
        pass = oracle == wb.value;
    }
    rep["verdict"] = pass ? "PASS" : "FAIL";
    emit(opt, rep, started);
    return pass ? 0 : 1;
}

int cmd_ef_check(const Options& opt) {
    auto started = std::chrono::steady_clock::now();
    cli::Scenario sc = load(opt);
    if (!sc.u || !sc.weights || !sc.coord_set)
        throw ParseError("scenario: ef-check needs analysis.u, analysis.c and analysis.J", 0);

    json rep = base_report("ef-check", sc);
    EfReport ef = ef_inequality_check(sc.variety, make_weights(*sc.weights), *sc.u, *sc.coord_set);
    rep["u"] = *sc.u;
    rep["J"] = *sc.coord_set;
    rep["holds"] = ef.holds;
    rep["lhs"] = cli::rational_str(ef.lhs);
    rep["rhs"] = cli::rational_str(ef.rhs);
    rep["slack"] = cli::rational_str(ef.slack);
    rep["verdict"] = ef.holds ? "PASS" : "FAIL";
    emit(opt, rep, started);
    return ef.holds ? 0 : 1;
}

std::vector<double> linear_grid(const cli::Scenario& sc, double lo_default, double hi_default,
                                int n_default) {
    if (sc.r_grid) return *sc.r_grid;
    double lo = sc.r_min.value_or(lo_default);
    double hi = sc.r_max.value_or(hi_default);
    int n = sc.samples.value_or(n_default);
    if (n < 2 || !(hi > lo)) throw ParseError("scenario: bad r grid parameters", 0);
    std::vector<double> grid;
    for (int i = 0; i < n; ++i) grid.push_back(lo + (hi - lo) * i / (n - 1));
    return grid;
}

int cmd_fmt_check(const Options& opt) {
    auto started = std::chrono::steady_clock::now();
    cli::Scenario sc = load(opt);
    const CurveSpec& f = need_curve(sc);
    const HypersurfaceFamily& fam = need_family(sc);
    std::vector<double> grid = linear_grid(sc, 2.0, 100.0, 25);

    json rep = base_report("fmt-check", sc);
    rep["r_grid"] = grid;
    json per = json::array();
    bool all_pass = true;
    std::vector<std::string> header = {"r"};
    std::vector<std::vector<double>> columns = {grid};
    for (const auto& e : fam.entries) {
        FmtReport fr = fmt_check(f, e.poly, grid, sc.quad);
        all_pass = all_pass && fr.pass;
        json one;
        one["name"] = e.name;
        one["moving_coefficients"] = fr.moving_coefficients;
        one["criterion"] = fr.criterion;
        one["pass"] = fr.pass;
        one["T"] = fr.T;
        one["m"] = fr.m;
        one["N"] = fr.N;
        one["residual"] = fr.residual;
        per.push_back(std::move(one));
        header.push_back("residual_" + e.name);
        columns.push_back(fr.residual);
    }
    rep["hypersurfaces"] = per;
    rep["verdict"] = all_pass ? "PASS" : "FAIL";
    emit_csv(opt.csv, header, columns);
    emit(opt, rep, started);
    return all_pass ? 0 : 1;
}

int cmd_smt_check(const Options& opt) {
    auto started = std::chrono::steady_clock::now();
    cli::Scenario sc = load(opt);

    SmtScenario scenario;
    scenario.V = sc.variety;
    scenario.f = need_curve(sc);
    scenario.fam = need_family(sc);
    scenario.epsilon = sc.epsilon ? sc.epsilon->get_d() : 0.5;
    scenario.r_min = sc.r_min.value_or(5.0);
    scenario.r_max = sc.r_max.value_or(200.0);
    scenario.samples = sc.samples.value_or(40);
    scenario.sampling = sc.sampling;
    scenario.quad = sc.quad;

    json rep = base_report("smt-check", sc);
    SmtReport sr = smt_check(scenario);
    rep["n_f"] = sr.n_f;
    rep["delta_degree"] = sr.delta_degree.get_str();
    rep["degree_convention"] =
        "Hilbert-polynomial (scheme) degree; no top-dimensional component extraction";
    rep["delta_f"] = cli::rational_str(sr.delta_f);
    rep["delta_stable"] = sr.delta_stable;
    rep["epsilon"] = scenario.epsilon;
    rep["r_grid"] = sr.r_grid;
    rep["T"] = sr.T;
    json per = json::array();
    for (int i = 0; i < scenario.fam.size(); ++i) {
        per.push_back({{"name", scenario.fam.entries[i].name},
                       {"m", sr.m_per_hypersurface[i]},
                       {"N", sr.N_per_hypersurface[i]}});
    }
    rep["hypersurfaces"] = per;
    rep["lhs"] = sr.lhs;
    rep["rhs"] = sr.rhs;
    rep["margin"] = sr.margin;
    rep["fraction_holding"] = sr.fraction_holding;
    double min_fraction = sc.min_fraction.value_or(0.95);
    rep["min_fraction"] = min_fraction;
    bool pass = sr.fraction_holding >= min_fraction;
    rep["verdict"] = pass ? "PASS" : "FAIL";

    std::vector<std::string> header = {"r", "T", "lhs", "rhs", "margin"};
    std::vector<std::vector<double>> columns = {sr.r_grid, sr.T, sr.lhs, sr.rhs, sr.margin};
    for (int i = 0; i < scenario.fam.size(); ++i) {
        header.push_back("N_" + scenario.fam.entries[i].name);
        columns.push_back(sr.N_per_hypersurface[i]);
    }
    emit_csv(opt.csv, header, columns);
    emit(opt, rep, started);
    return pass ? 0 : 1;
}

int cmd_truncation_bound(const Options& opt) {
    auto started = std::chrono::steady_clock::now();
    cli::Scenario sc = load(opt);
    if (!sc.truncation_q || !sc.epsilon)
        throw ParseError("scenario: truncation-bound needs analysis.q and analysis.epsilon", 0);
    json rep = base_report("truncation-bound", sc);
    Int bound = truncation_bound(*sc.truncation_q, *sc.epsilon);
    rep["q"] = *sc.truncation_q;
    rep["epsilon"] = cli::rational_str(*sc.epsilon);
    rep["bound"] = bound.get_str();
    rep["verdict"] = "PASS";
    emit(opt, rep, started);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"smt-lab: exact position/replacement/weight certificates and numerical "
                 "Nevanlinna checks for families of moving hypersurfaces"};
    app.require_subcommand(1);

    Options opt;
    std::map<std::string, std::function<int(const Options&)>> handlers = {
        {"analyze-position", cmd_analyze_position},
        {"replace", cmd_replace},
        {"lemma31", cmd_lemma31},
        {"hilbert-weight", cmd_hilbert_weight},
        {"ef-check", cmd_ef_check},
        {"fmt-check", cmd_fmt_check},
        {"smt-check", cmd_smt_check},
        {"truncation-bound", cmd_truncation_bound},
    };
    add_common(app.add_subcommand("analyze-position",
                                  "distributive constant and subgeneral-position certification"),
               opt);
    add_common(app.add_subcommand("replace", "constructive hypersurface replacement certificate"),
               opt);
    add_common(app.add_subcommand("lemma31", "threshold/exponent inequality check"), opt);
    add_common(app.add_subcommand("hilbert-weight", "maximum-weight monomial basis"), opt);
    add_common(app.add_subcommand("ef-check", "combined Chow/Hilbert weight inequality"), opt);
    add_common(app.add_subcommand("fmt-check", "First Main Theorem residuals on an r grid"), opt);
    add_common(app.add_subcommand("smt-check", "Second Main Theorem scenario check"), opt);
    add_common(app.add_subcommand("truncation-bound", "dimension truncation bound"), opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (auto* sub : app.get_subcommands()) return handlers.at(sub->get_name())(opt);
        std::cerr << "smt-lab: no command given\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "smt-lab: budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "smt-lab: input error: " << e.what();
        if (e.pos) std::cerr << " (at offset " << e.pos << ")";
        std::cerr << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "smt-lab: internal consistency failure (engine bug): " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "smt-lab: input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "smt-lab: error: " << e.what() << "\n";
        return 2;
    }
}

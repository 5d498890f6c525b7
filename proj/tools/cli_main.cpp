// Command-line front end: polynomial tables, coefficient bounds, parameter
// sweeps, Monte-Carlo certification runs and corollary-reduction checks.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "horadam/bounds.hpp"
#include "horadam/horadam.hpp"
#include "horadam/report.hpp"
#include "horadam/verify.hpp"
#include "horadam/version.hpp"

namespace {

using namespace horadam;

std::string fmt(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::optional<PolyFamily> parse_family(const std::string& name) {
    if (name == "fibonacci") return PolyFamily::Fibonacci;
    if (name == "lucas") return PolyFamily::Lucas;
    if (name == "pell") return PolyFamily::Pell;
    if (name == "pell-lucas") return PolyFamily::PellLucas;
    if (name == "chebyshev1") return PolyFamily::ChebyshevFirst;
    if (name == "chebyshev2") return PolyFamily::ChebyshevSecond;
    return std::nullopt;
}

std::optional<ClassKind> parse_kind(const std::string& name) {
    if (name == "sstar") return ClassKind::SStar;
    if (name == "mocanu") return ClassKind::Mocanu;
    if (name == "alphablend") return ClassKind::AlphaBlend;
    return std::nullopt;
}

// "a,b,p,q" with exactly four comma-separated reals.
std::optional<HoradamParams> parse_params(const std::string& text) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (values.size() != 4) return std::nullopt;
    return HoradamParams{values[0], values[1], values[2], values[3]};
}

struct ParamArgs {
    std::string family;
    std::string params;

    HoradamParams resolve() const {
        if (!family.empty()) {
            const auto parsed = parse_family(family);
            if (!parsed) {
                throw CLI::ValidationError("--family", "unknown family '" + family + "'");
            }
            return family_params(*parsed);
        }
        const auto parsed = parse_params(params);
        if (!parsed || !parsed->finite()) {
            throw CLI::ValidationError("--params", "expected four reals 'a,b,p,q'");
        }
        return family_params(*parsed);  // custom pass-through
    }
};

void add_param_options(CLI::App* cmd, ParamArgs& args) {
    auto* family = cmd->add_option("--family", args.family,
                                   "named family: fibonacci|lucas|pell|pell-lucas|"
                                   "chebyshev1|chebyshev2");
    auto* params = cmd->add_option("--params", args.params, "custom parameters a,b,p,q");
    family->excludes(params);
    params->excludes(family);
    cmd->callback([family, params]() {
        if (family->count() == 0 && params->count() == 0) {
            throw CLI::RequiredError("--family or --params");
        }
    });
}

ClassSpec make_spec(const std::string& kind_name, double alpha, const ParamArgs& params,
                    double x) {
    const auto kind = parse_kind(kind_name);
    if (!kind) {
        throw CLI::ValidationError("--class", "unknown class '" + kind_name + "'");
    }
    ClassSpec spec{*kind, alpha, params.resolve(), x};
    try {
        validate_spec(spec);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--alpha", e.what());
    }
    return spec;
}

int run_poly(const ParamArgs& params, double x, int n_max, bool oracle) {
    const HoradamParams hp = params.resolve();
    const std::vector<double> recurrence = horadam_sequence(hp, n_max, x);
    const std::vector<double> gf = oracle ? gf_coefficients(hp, x, n_max) : std::vector<double>{};
    std::printf(oracle ? "%-4s %-18s %-18s %s\n" : "%-4s %s\n", "n", "h_n(x)", "gf", "|diff|");
    for (int n = 1; n <= n_max; ++n) {
        if (oracle) {
            const double diff = std::abs(recurrence[n - 1] - gf[n - 1]);
            std::printf("%-4d %-18s %-18s %s\n", n, fmt(recurrence[n - 1]).c_str(),
                        fmt(gf[n - 1]).c_str(), fmt(diff).c_str());
        } else {
            std::printf("%-4d %s\n", n, fmt(recurrence[n - 1]).c_str());
        }
    }
    return 0;
}

int run_bounds(const ClassSpec& spec, const std::vector<double>& nus, bool as_json) {
    if (as_json) {
        std::cout << bounds_to_json(spec, nus);
        return 0;
    }
    const BoundReport base = bound_report(spec, nus.empty() ? 1.0 : nus.front());
    std::printf("class=%s alpha=%s params=(%s,%s,%s,%s) x=%s\n", to_string(spec.kind),
                fmt(spec.alpha).c_str(), fmt(spec.horadam.a).c_str(), fmt(spec.horadam.b).c_str(),
                fmt(spec.horadam.p).c_str(), fmt(spec.horadam.q).c_str(), fmt(spec.x).c_str());
    std::printf("denom     = %s\n", fmt(base.denom).c_str());
    std::printf("threshold = %s\n", fmt(base.threshold).c_str());
    if (std::isinf(base.a2_bound)) {
        std::printf("a2_bound  = unbounded (vacuous)\n");
    } else {
        std::printf("a2_bound  = %s\n", fmt(base.a2_bound).c_str());
    }
    std::printf("a3_bound  = %s\n", fmt(base.a3_bound).c_str());
    if (base.degenerate_h2) {
        std::printf("note: b*x = 0, bounds degenerate to 0\n");
    }
    for (double nu : nus) {
        const auto [fs, branch] = fekete_szego(spec, nu);
        if (std::isinf(fs)) {
            std::printf("nu=%s: fs_bound = unbounded (vacuous)\n", fmt(nu).c_str());
        } else {
            std::printf("nu=%s: fs_bound = %s  branch=%s\n", fmt(nu).c_str(), fmt(fs).c_str(),
                        to_string(branch));
        }
    }
    return 0;
}

int run_verify(const ClassSpec& spec, std::vector<double> nus, std::int64_t trials,
               std::uint64_t seed, bool strict, const std::string& out_path) {
    if (nus.empty()) {
        nus = {1.0};
    }
    const VerifyReport report = run_verification(spec, nus, trials, seed, strict);
    const std::string text = verify_to_json(report);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out || !(out << text)) {
            std::cerr << "error: cannot write report to '" << out_path << "'\n";
            return 3;
        }
        std::printf("wrote %s (trials=%lld admissible=%lld violations=%lld)\n", out_path.c_str(),
                    static_cast<long long>(report.trials),
                    static_cast<long long>(report.admissible),
                    static_cast<long long>(report.violations));
    }
    return report.violations == 0 ? 0 : 1;
}

int run_reduce(int grid_size) {
    const std::vector<ReductionResult> results = reduction_check(grid_size);
    std::printf("%-12s %-8s %s\n", "corollary", "points", "max_rel_dev");
    bool ok = true;
    for (const ReductionResult& r : results) {
        std::printf("%-12s %-8ld %.3e\n", to_string(r.corollary), r.points, r.max_rel_dev);
        ok = ok && r.max_rel_dev <= 1e-11;
    }
    std::printf("reduce: %s\n", ok ? "OK (all <= 1e-11)" : "FAILED");
    return ok ? 0 : 1;
}

int run_sweep_cmd(const SweepConfig& config, const std::string& out_path,
                  const std::string& format) {
    const std::vector<SweepRow> rows = run_sweep(config);
    const std::string text =
        format == "json" ? sweep_to_json(config, rows) : sweep_to_csv(config, rows);
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write sweep to '" << out_path << "'\n";
        return 3;
    }
    std::printf("wrote %s (%zu rows)\n", out_path.c_str(), rows.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Horadam polynomials, coefficient bounds and certification"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // poly
    auto* poly = app.add_subcommand("poly", "evaluate h_1..h_n at x");
    ParamArgs poly_params;
    add_param_options(poly, poly_params);
    double poly_x = 0.0;
    int poly_n = 1;
    bool poly_oracle = false;
    poly->add_option("--x", poly_x, "evaluation point")->required();
    poly->add_option("--n", poly_n, "highest index")
        ->required()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    poly->add_flag("--oracle", poly_oracle, "also print generating-function coefficients");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "coefficient and Fekete-Szego bounds");
    ParamArgs bounds_params;
    add_param_options(bounds, bounds_params);
    std::string bounds_class;
    double bounds_alpha = 0.0;
    double bounds_x = 0.0;
    std::vector<double> bounds_nus;
    bool bounds_json = false;
    bounds->add_option("--class", bounds_class, "sstar|mocanu|alphablend")->required();
    bounds->add_option("--alpha", bounds_alpha, "class parameter")->required();
    bounds->add_option("--x", bounds_x, "polynomial argument")->required();
    bounds->add_option("--nu", bounds_nus, "Fekete-Szego nu values (repeatable)");
    bounds->add_flag("--json", bounds_json, "machine-readable output");

    // verify
    auto* verify = app.add_subcommand("verify", "Monte-Carlo bound certification");
    ParamArgs verify_params;
    add_param_options(verify, verify_params);
    std::string verify_class;
    double verify_alpha = 0.0;
    double verify_x = 0.0;
    std::vector<double> verify_nus;
    std::int64_t verify_trials = 0;
    std::uint64_t verify_seed = 1;
    bool verify_strict = false;
    std::string verify_out;
    verify->add_option("--class", verify_class, "sstar|mocanu|alphablend")->required();
    verify->add_option("--alpha", verify_alpha, "class parameter")->required();
    verify->add_option("--x", verify_x, "polynomial argument")->required();
    verify->add_option("--nu", verify_nus, "Fekete-Szego nu grid (repeatable)");
    verify->add_option("--trials", verify_trials, "Monte-Carlo trials")
        ->required()
        ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
    verify->add_option("--seed", verify_seed, "stream seed");
    verify->add_flag("--strict-schwarz", verify_strict,
                     "restrict |u2| <= 1-|u1|^2 (Schwarz-Pick sampling)");
    verify->add_option("--out", verify_out, "write the JSON report here");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "engine vs corollary closed forms");
    int reduce_grid = 4;
    reduce->add_option("--grid-size", reduce_grid, "points per continuous axis")
        ->check(CLI::PositiveNumber);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "sweep one variable, emit CSV/JSON");
    ParamArgs sweep_params;
    add_param_options(sweep, sweep_params);
    std::string sweep_class;
    double sweep_alpha = 0.0;
    double sweep_x = 0.0;
    double sweep_nu = 1.0;
    std::string sweep_var;
    double sweep_lo = 0.0;
    double sweep_hi = 1.0;
    int sweep_steps = 2;
    std::string sweep_out;
    std::string sweep_format = "csv";
    sweep->add_option("--class", sweep_class, "sstar|mocanu|alphablend")->required();
    sweep->add_option("--alpha", sweep_alpha, "class parameter")->required();
    sweep->add_option("--x", sweep_x, "polynomial argument")->required();
    sweep->add_option("--nu", sweep_nu, "fixed nu (unless swept)");
    sweep->add_option("--var", sweep_var, "alpha|x|nu|t")->required();
    sweep->add_option("--lo", sweep_lo, "range start")->required();
    sweep->add_option("--hi", sweep_hi, "range end")->required();
    sweep->add_option("--steps", sweep_steps, "grid points")->required();
    sweep->add_option("--out", sweep_out, "output path (stdout when omitted)");
    sweep->add_option("--format", sweep_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (poly->parsed()) {
            return run_poly(poly_params, poly_x, poly_n, poly_oracle);
        }
        if (bounds->parsed()) {
            return run_bounds(make_spec(bounds_class, bounds_alpha, bounds_params, bounds_x),
                              bounds_nus.empty() ? std::vector<double>{1.0} : bounds_nus,
                              bounds_json);
        }
        if (verify->parsed()) {
            return run_verify(make_spec(verify_class, verify_alpha, verify_params, verify_x),
                              verify_nus, verify_trials, verify_seed, verify_strict, verify_out);
        }
        if (reduce->parsed()) {
            return run_reduce(reduce_grid);
        }
        if (sweep->parsed()) {
            SweepConfig config;
            config.base = make_spec(sweep_class, sweep_alpha, sweep_params, sweep_x);
            config.nu = sweep_nu;
            if (sweep_var == "alpha") {
                config.var = SweepConfig::Var::Alpha;
            } else if (sweep_var == "x") {
                config.var = SweepConfig::Var::X;
            } else if (sweep_var == "nu") {
                config.var = SweepConfig::Var::Nu;
            } else if (sweep_var == "t") {
                config.var = SweepConfig::Var::T;
            } else {
                throw CLI::ValidationError("--var", "expected alpha|x|nu|t");
            }
            config.lo = sweep_lo;
            config.hi = sweep_hi;
            config.steps = sweep_steps;
            return run_sweep_cmd(config, sweep_out, sweep_format);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

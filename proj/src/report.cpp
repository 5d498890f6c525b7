#include "horadam/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "horadam/version.hpp"

namespace horadam {

namespace {

using nlohmann::json;

// 12 significant digits for CSV; infinities spelled out.
std::string csv_number(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

// JSON has no infinity; bounds that are flagged unbounded render as "inf".
json json_bound(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    return value;
}

json spec_json(const ClassSpec& spec) {
    return json{{"class", to_string(spec.kind)},
                {"alpha", spec.alpha},
                {"params",
                 {{"a", spec.horadam.a},
                  {"b", spec.horadam.b},
                  {"p", spec.horadam.p},
                  {"q", spec.horadam.q}}},
                {"x", spec.x}};
}

json report_json(const BoundReport& report) {
    return json{{"a2_bound", json_bound(report.a2_bound)},
                {"a3_bound", json_bound(report.a3_bound)},
                {"nu", report.nu},
                {"fs_bound", json_bound(report.fs_bound)},
                {"fs_branch", to_string(report.fs_branch)},
                {"denom", report.denom},
                {"threshold", json_bound(report.threshold)},
                {"degenerate_h2", report.degenerate_h2}};
}

}  // namespace

const char* to_string(SweepConfig::Var var) {
    switch (var) {
        case SweepConfig::Var::Alpha:
            return "alpha";
        case SweepConfig::Var::X:
            return "x";
        case SweepConfig::Var::Nu:
            return "nu";
        case SweepConfig::Var::T:
            return "t";
    }
    return "?";
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    if (!(config.lo < config.hi)) {
        throw std::invalid_argument("sweep requires lo < hi");
    }
    if (config.steps < 2) {
        throw std::invalid_argument("sweep requires steps >= 2");
    }
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(config.steps));
    for (int i = 0; i < config.steps; ++i) {
        const double value =
            config.lo + (config.hi - config.lo) * static_cast<double>(i) /
                            static_cast<double>(config.steps - 1);
        ClassSpec spec = config.base;
        double nu = config.nu;
        switch (config.var) {
            case SweepConfig::Var::Alpha:
                spec.alpha = value;
                break;
            case SweepConfig::Var::X:
                spec.x = value;
                break;
            case SweepConfig::Var::Nu:
                nu = value;
                break;
            case SweepConfig::Var::T:
                spec.horadam = family_params(PolyFamily::ChebyshevSecond);
                spec.x = value;
                break;
        }
        validate_spec(spec);
        rows.push_back({value, bound_report(spec, nu)});
    }
    return rows;
}

std::string sweep_to_csv(const SweepConfig& config, const std::vector<SweepRow>& rows) {
    std::string out = "sweep_var,value,a2_bound,a3_bound,nu,fs_bound,fs_branch,denom\n";
    for (const SweepRow& row : rows) {
        out += to_string(config.var);
        out += ',';
        out += csv_number(row.value);
        out += ',';
        out += csv_number(row.report.a2_bound);
        out += ',';
        out += csv_number(row.report.a3_bound);
        out += ',';
        out += csv_number(row.report.nu);
        out += ',';
        out += csv_number(row.report.fs_bound);
        out += ',';
        out += to_string(row.report.fs_branch);
        out += ',';
        out += csv_number(row.report.denom);
        out += '\n';
    }
    return out;
}

std::string sweep_to_json(const SweepConfig& config, const std::vector<SweepRow>& rows) {
    json points = json::array();
    for (const SweepRow& row : rows) {
        json point = report_json(row.report);
        point["value"] = row.value;
        points.push_back(std::move(point));
    }
    const json doc{{"version", kVersion},
                   {"sweep_var", to_string(config.var)},
                   {"base_spec", spec_json(config.base)},
                   {"points", std::move(points)}};
    return doc.dump(2) + "\n";
}

std::string bounds_to_json(const ClassSpec& spec, const std::vector<double>& nus) {
    json fs = json::array();
    for (double nu : nus) {
        const BoundReport report = bound_report(spec, nu);
        fs.push_back({{"nu", nu},
                      {"fs_bound", json_bound(report.fs_bound)},
                      {"fs_branch", to_string(report.fs_branch)}});
    }
    const BoundReport base = bound_report(spec, nus.empty() ? 1.0 : nus.front());
    const json doc{{"version", kVersion},
                   {"spec", spec_json(spec)},
                   {"denom", base.denom},
                   {"threshold", json_bound(base.threshold)},
                   {"degenerate_h2", base.degenerate_h2},
                   {"a2_bound", json_bound(base.a2_bound)},
                   {"a3_bound", json_bound(base.a3_bound)},
                   {"fekete_szego", std::move(fs)}};
    return doc.dump(2) + "\n";
}

std::string verify_to_json(const VerifyReport& report) {
    const json doc{{"version", kVersion},
                   {"spec", spec_json(report.spec)},
                   {"nu_grid", report.nu_grid},
                   {"trials", report.trials},
                   {"seed", report.seed},
                   {"strict_schwarz", report.strict_schwarz},
                   {"admissible", report.admissible},
                   {"violations", report.violations},
                   {"max_ratio_a2", report.max_ratio_a2},
                   {"max_ratio_a3", report.max_ratio_a3},
                   {"max_ratio_fs", report.max_ratio_fs}};
    return doc.dump(2) + "\n";
}

}  // namespace horadam

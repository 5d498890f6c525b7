#include "horadam/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "horadam/bounds.hpp"

namespace horadam {

namespace {

constexpr double kH2Tol = 1e-12;
constexpr double kModulusSlack = 1e-12;
constexpr double kRatioSlack = 1e-9;

// splitmix64 finalizer; the whole stream is a pure function of
// (seed, trial, draw) so trials can run in any order or in parallel.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double counter_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t draw) {
    const std::uint64_t word = mix64(mix64(seed) ^ mix64(trial * 8 + draw));
    return static_cast<double>(word >> 11) * 0x1.0p-53;  // [0, 1)
}

// Area-uniform point of the closed unit disk.
Complex disk_point(std::uint64_t seed, std::uint64_t trial, std::uint64_t first_draw) {
    const double r = std::sqrt(counter_uniform(seed, trial, first_draw));
    const double angle = 2.0 * std::numbers::pi * counter_uniform(seed, trial, first_draw + 1);
    return std::polar(r, angle);
}

}  //  namespace

bool is_admissible(const SchwarzTuple& tuple) {
    const double cap = 1.0 + kModulusSlack;
    return std::abs(tuple.u1) <= cap && std::abs(tuple.u2) <= cap && std::abs(tuple.v1) <= cap &&
           std::abs(tuple.v2) <= cap && std::abs(tuple.v1 + tuple.u1) <= 1e-12;
}

Candidate construct_candidate(const ClassSpec& spec, Complex u1, Complex u2) {
    if (std::abs(u1) > 1.0 + kModulusSlack || std::abs(u2) > 1.0 + kModulusSlack) {
        throw std::invalid_argument("construct_candidate requires |u1| <= 1 and |u2| <= 1");
    }
    const double h2 = horadam_h2(spec.horadam, spec.x);
    if (std::abs(h2) <= kH2Tol) {
        throw std::domain_error("construct_candidate is degenerate at b*x = 0");
    }
    const double h3 = horadam_h3(spec.horadam, spec.x);
    const CoefficientSystem cs = coefficient_system(spec);
    const Complex a2 = h2 * u1 / cs.c1;
    const Complex a3 = (h2 * u2 + h3 * u1 * u1 - cs.e2 * a2 * a2) / cs.e1;
    const Complex v2 = (cs.f1 * a2 * a2 + cs.f2 * a3 - h3 * u1 * u1) / h2;
    return {{a2, a3}, v2};
}

double roundtrip_check(const ClassSpec& spec, Complex u1, Complex u2) {
    const Candidate candidate = construct_candidate(spec, u1, u2);
    const TruncatedSeries series = functional_series(spec, candidate.coeffs, 8);
    const SchwarzCoeffs recovered = extract_schwarz(series, spec.horadam, spec.x);
    return std::max(std::abs(u1 - recovered.u1), std::abs(u2 - recovered.u2));
}

VerifyReport run_verification(const ClassSpec& spec, const std::vector<double>& nu_grid,
                              std::int64_t trials, std::uint64_t seed, bool strict_schwarz) {
    validate_spec(spec);
    if (trials < 1) {
        throw std::invalid_argument("run_verification requires trials >= 1");
    }
    if (std::abs(horadam_h2(spec.horadam, spec.x)) <= kH2Tol) {
        throw std::domain_error("run_verification is degenerate at b*x = 0");
    }

    VerifyReport report;
    report.spec = spec;
    report.nu_grid = nu_grid;
    report.trials = trials;
    report.seed = seed;
    report.strict_schwarz = strict_schwarz;

    const double a2_cap = bound_a2(spec);
    const double a3_cap = bound_a3(spec);
    std::vector<double> fs_caps;
    fs_caps.reserve(nu_grid.size());
    for (double nu : nu_grid) {
        fs_caps.push_back(fekete_szego(spec, nu).first);
    }

    for (std::int64_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t t = static_cast<std::uint64_t>(trial);
        const Complex u1 = disk_point(seed, t, 0);
        Complex u2 = disk_point(seed, t, 2);
        if (strict_schwarz) {
            // Schwarz-Pick: genuine Schwarz functions obey |u2| <= 1 - |u1|^2.
            u2 *= 1.0 - std::norm(u1);
        }

        const Candidate candidate = construct_candidate(spec, u1, u2);
        if (!is_admissible({u1, u2, -u1, candidate.v2})) {
            continue;
        }
        ++report.admissible;

        bool violated = false;
        const Complex a2 = candidate.coeffs.a2;
        const Complex a3 = candidate.coeffs.a3;
        if (std::isfinite(a2_cap)) {
            const double ratio = std::abs(a2) / a2_cap;
            report.max_ratio_a2 = std::max(report.max_ratio_a2, ratio);
            violated |= ratio > 1.0 + kRatioSlack;
        }
        if (std::isfinite(a3_cap)) {
            const double ratio = std::abs(a3) / a3_cap;
            report.max_ratio_a3 = std::max(report.max_ratio_a3, ratio);
            violated |= ratio > 1.0 + kRatioSlack;
        }
        for (std::size_t i = 0; i < nu_grid.size(); ++i) {
            if (!std::isfinite(fs_caps[i])) {
                continue;
            }
            const double ratio = std::abs(a3 - nu_grid[i] * a2 * a2) / fs_caps[i];
            report.max_ratio_fs = std::max(report.max_ratio_fs, ratio);
            violated |= ratio > 1.0 + kRatioSlack;
        }
        if (violated) {
            ++report.violations;
        }
    }
    return report;
}

}  // namespace horadam

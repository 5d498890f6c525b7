#pragma once

#include <cstdint>
#include <vector>

#include "horadam/classes.hpp"

namespace horadam {

/// Order-2 Schwarz data of the two subordinating maps.
struct SchwarzTuple {
    Complex u1{0.0};
    Complex u2{0.0};
    Complex v1{0.0};
    Complex v2{0.0};
};

/// All four moduli <= 1 + 1e-12 and v1 = -u1 within 1e-12.
bool is_admissible(const SchwarzTuple& tuple);

struct Candidate {
    FunctionCoeffs coeffs;
    Complex v2{0.0};
};

/// Reconstructs (a2, a3) from (u1, u2) exactly as the coefficient equations
/// dictate, then solves the remaining equation for v2 (with v1 = -u1):
///   a2 = h2 u1 / c1
///   a3 = (h2 u2 + h3 u1^2 - e2 a2^2) / e1
///   v2 = (f1 a2^2 + f2 a3 - h3 u1^2) / h2
/// Requires |u1| <= 1, |u2| <= 1 and |b x| > 1e-12.
Candidate construct_candidate(const ClassSpec& spec, Complex u1, Complex u2);

/// Builds the candidate, expands its functional, re-extracts the Schwarz
/// coefficients and returns max(|u1 - u1'|, |u2 - u2'|).
double roundtrip_check(const ClassSpec& spec, Complex u1, Complex u2);

struct VerifyReport {
    ClassSpec spec;
    std::vector<double> nu_grid;
    std::int64_t trials = 0;
    std::int64_t admissible = 0;
    std::int64_t violations = 0;
    double max_ratio_a2 = 0.0;
    double max_ratio_a3 = 0.0;
    double max_ratio_fs = 0.0;
    std::uint64_t seed = 0;
    bool strict_schwarz = false;
};

/// Monte-Carlo certification: samples (u1, u2) in the closed unit disk
/// (strict_schwarz additionally restricts |u2| <= 1 - |u1|^2), constructs the
/// candidate, filters by admissibility and asserts every bound. Trial streams
/// are counter-based in the trial index, so reports are deterministic in
/// (spec, nu_grid, trials, seed, strict_schwarz) and independent of schedule.
VerifyReport run_verification(const ClassSpec& spec, const std::vector<double>& nu_grid,
                              std::int64_t trials, std::uint64_t seed, bool strict_schwarz);

}  // namespace horadam

#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "horadam/classes.hpp"

namespace horadam {

enum class FsBranch { Inner, Outer, Boundary };

const char* to_string(FsBranch branch);

/// Computed bounds for one (spec, nu) pair. Bounds are +infinity when the
/// class denominator vanishes (vacuous, no information); all bounds are 0
/// when h2 = bx = 0, flagged degenerate since the subordination collapses.
struct BoundReport {
    double a2_bound = 0.0;
    double a3_bound = 0.0;
    double fs_bound = 0.0;
    FsBranch fs_branch = FsBranch::Inner;
    double nu = 1.0;
    double denom = 0.0;      // signed D
    double threshold = 0.0;  // switch point on |nu - 1|
    bool degenerate_h2 = false;
};

/// Signed class denominator D = (K h2^2 - 2 c1^2 h3) / 2 with K = e2 + f1.
double denom(const ClassSpec& spec);

/// |h2| sqrt(|h2|) / sqrt(|D|); +infinity when |D| <= 1e-13.
double bound_a2(const ClassSpec& spec);

/// |h2| / e1 + h2^2 / c1^2.
double bound_a3(const ClassSpec& spec);

/// Piecewise Fekete-Szego bound on |a3 - nu a2^2|:
///   |h2| / e1                 when |nu - 1| <= |D| / (h2^2 e1)  (Inner)
///   |h2|^3 |nu - 1| / |D|     otherwise                          (Outer)
/// Boundary is reported when |nu - 1| equals the threshold within 1e-12;
/// both formulas agree there.
std::pair<double, FsBranch> fekete_szego(const ClassSpec& spec, double nu);

BoundReport bound_report(const ClassSpec& spec, double nu);

/// The six hand-coded closed forms, kept independent of the generic engine
/// as redundant cross-checks.
enum class Corollary {
    SStarX,      // SStar at alpha = 0, general (a, b, p, q)
    ConvexX,     // Mocanu at alpha = 1, general (a, b, p, q)
    SStarCheb,   // SStar, second-kind Chebyshev parameters, x = t
    MocanuCheb,  // Mocanu, second-kind Chebyshev parameters, x = t
    ConvexCheb,  // Mocanu at alpha = 1, second-kind Chebyshev parameters, x = t
    BlendCheb,   // AlphaBlend, second-kind Chebyshev parameters, x = t
};

const char* to_string(Corollary corollary);
std::optional<Corollary> corollary_from_name(std::string_view name);

/// Inputs for a corollary evaluation. The Chebyshev corollaries read (alpha,
/// x, nu) and ignore params; the general ones read (params, x, nu).
struct CorollaryInputs {
    HoradamParams params;
    double alpha = 0.0;
    double x = 0.0;
    double nu = 1.0;
};

BoundReport corollary_bounds(Corollary corollary, const CorollaryInputs& in);

/// The ClassSpec whose generic-engine output the corollary must reproduce.
ClassSpec corollary_spec(Corollary corollary, const CorollaryInputs& in);

struct ReductionResult {
    Corollary corollary;
    long points = 0;           // grid points actually compared
    double max_rel_dev = 0.0;  // engine vs closed form, relative
};

/// Sweeps each corollary's input grid and compares the generic engine against
/// the hand-coded closed form on a2, a3, threshold and the Fekete-Szego bound.
/// points_per_axis scales the continuous axes; the default yields >= 10^3
/// points per corollary. Near-vacuous points (|D| < 1e-8) and nu values
/// within 1e-6 of a branch switch are skipped.
std::vector<ReductionResult> reduction_check(int points_per_axis = 4);

}  // namespace horadam

#include "horadam/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace horadam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDenomTol = 1e-13;
constexpr double kH2Tol = 1e-12;
constexpr double kBranchTol = 1e-12;

struct PiecewiseFs {
    double bound;
    FsBranch branch;
};

// Shared tie rule: Inner iff |nu-1| <= threshold, Boundary when equal within
// 1e-12 (the two formulas agree there).
PiecewiseFs pick_branch(double nu_dist, double threshold, double inner, double outer) {
    if (std::abs(nu_dist - threshold) <= kBranchTol) {
        return {inner, FsBranch::Boundary};
    }
    if (nu_dist < threshold) {
        return {inner, FsBranch::Inner};
    }
    return {outer, FsBranch::Outer};
}

}  // namespace

const char* to_string(FsBranch branch) {
    switch (branch) {
        case FsBranch::Inner:
            return "inner";
        case FsBranch::Outer:
            return "outer";
        case FsBranch::Boundary:
            return "boundary";
    }
    return "?";
}

double denom(const ClassSpec& spec) {
    const CoefficientSystem cs = coefficient_system(spec);
    const double h2 = horadam_h2(spec.horadam, spec.x);
    const double h3 = horadam_h3(spec.horadam, spec.x);
    const double k = cs.e2 + cs.f1;
    return (k * h2 * h2 - 2.0 * cs.c1 * cs.c1 * h3) / 2.0;
}

double bound_a2(const ClassSpec& spec) {
    const double h2 = std::abs(horadam_h2(spec.horadam, spec.x));
    if (h2 <= kH2Tol) {
        return 0.0;
    }
    const double d = std::abs(denom(spec));
    if (d <= kDenomTol) {
        return kInf;
    }
    return h2 * std::sqrt(h2) / std::sqrt(d);
}

double bound_a3(const ClassSpec& spec) {
    const CoefficientSystem cs = coefficient_system(spec);
    const double h2 = std::abs(horadam_h2(spec.horadam, spec.x));
    return h2 / cs.e1 + h2 * h2 / (cs.c1 * cs.c1);
}

std::pair<double, FsBranch> fekete_szego(const ClassSpec& spec, double nu) {
    const CoefficientSystem cs = coefficient_system(spec);
    const double h2 = std::abs(horadam_h2(spec.horadam, spec.x));
    if (h2 <= kH2Tol) {
        return {0.0, FsBranch::Inner};
    }
    const double d = std::abs(denom(spec));
    const double inner = h2 / cs.e1;
    const double nu_dist = std::abs(nu - 1.0);
    const double threshold = d / (h2 * h2 * cs.e1);
    if (d <= kDenomTol) {
        // Vacuous denominator: essentially only nu = 1 keeps a finite
        // (Inner) bound; an explicit infinity flag, never a large float.
        const PiecewiseFs fs = pick_branch(nu_dist, threshold, inner, kInf);
        return {fs.bound, fs.branch};
    }
    const double outer = h2 * h2 * h2 * nu_dist / d;
    const PiecewiseFs fs = pick_branch(nu_dist, threshold, inner, outer);
    return {fs.bound, fs.branch};
}

BoundReport bound_report(const ClassSpec& spec, double nu) {
    const CoefficientSystem cs = coefficient_system(spec);
    BoundReport report;
    report.nu = nu;
    report.denom = denom(spec);
    report.a2_bound = bound_a2(spec);
    report.a3_bound = bound_a3(spec);
    const auto [fs, branch] = fekete_szego(spec, nu);
    report.fs_bound = fs;
    report.fs_branch = branch;
    const double h2 = std::abs(horadam_h2(spec.horadam, spec.x));
    report.degenerate_h2 = h2 <= kH2Tol;
    report.threshold =
        report.degenerate_h2 ? kInf : std::abs(report.denom) / (h2 * h2 * cs.e1);
    return report;
}

const char* to_string(Corollary corollary) {
    switch (corollary) {
        case Corollary::SStarX:
            return "sstar-x";
        case Corollary::ConvexX:
            return "convex-x";
        case Corollary::SStarCheb:
            return "sstar-cheb";
        case Corollary::MocanuCheb:
            return "mocanu-cheb";
        case Corollary::ConvexCheb:
            return "convex-cheb";
        case Corollary::BlendCheb:
            return "blend-cheb";
    }
    return "?";
}

std::optional<Corollary> corollary_from_name(std::string_view name) {
    for (Corollary c : {Corollary::SStarX, Corollary::ConvexX, Corollary::SStarCheb,
                        Corollary::MocanuCheb, Corollary::ConvexCheb, Corollary::BlendCheb}) {
        if (name == to_string(c)) {
            return c;
        }
    }
    return std::nullopt;
}

ClassSpec corollary_spec(Corollary corollary, const CorollaryInputs& in) {
    const HoradamParams cheb = family_params(PolyFamily::ChebyshevSecond);
    switch (corollary) {
        case Corollary::SStarX:
            return {ClassKind::SStar, 0.0, in.params, in.x};
        case Corollary::ConvexX:
            return {ClassKind::Mocanu, 1.0, in.params, in.x};
        case Corollary::SStarCheb:
            return {ClassKind::SStar, in.alpha, cheb, in.x};
        case Corollary::MocanuCheb:
            return {ClassKind::Mocanu, in.alpha, cheb, in.x};
        case Corollary::ConvexCheb:
            return {ClassKind::Mocanu, 1.0, cheb, in.x};
        case Corollary::BlendCheb:
            return {ClassKind::AlphaBlend, in.alpha, cheb, in.x};
    }
    throw std::invalid_argument("unknown corollary");
}

namespace {

// Assembles a report from one corollary's closed forms. `bracket` is the
// corollary's denominator, `a2_num` its |a2| numerator, `outer_num` the
// coefficient of |nu-1|/|bracket| in the outer branch.
BoundReport closed_form_report(double bx, double bracket, double a2_num, double a3,
                               double inner, double outer_num, double threshold, double nu) {
    BoundReport report;
    report.nu = nu;
    report.denom = bracket;
    if (std::abs(bx) <= kH2Tol) {
        report.degenerate_h2 = true;
        report.threshold = kInf;
        return report;
    }
    report.a3_bound = a3;
    report.threshold = threshold;
    const double p = std::abs(bracket);
    const double nu_dist = std::abs(nu - 1.0);
    if (p <= kDenomTol) {
        report.a2_bound = kInf;
        const PiecewiseFs fs = pick_branch(nu_dist, threshold, inner, kInf);
        report.fs_bound = fs.bound;
        report.fs_branch = fs.branch;
        return report;
    }
    report.a2_bound = a2_num / std::sqrt(p);
    const PiecewiseFs fs = pick_branch(nu_dist, threshold, inner, outer_num * nu_dist / p);
    report.fs_bound = fs.bound;
    report.fs_branch = fs.branch;
    return report;
}

void require_cheb_t(double t) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("Chebyshev corollaries need t > 0");
    }
}

}  // namespace

BoundReport corollary_bounds(Corollary corollary, const CorollaryInputs& in) {
    const double al = in.alpha;
    const double t = in.x;
    switch (corollary) {
        case Corollary::SStarX: {
            const auto& [a, b, p, q] = in.params;
            const double bx = b * in.x;
            const double bracket = (b - p) * b * in.x * in.x - q * a;
            const double abx = std::abs(bx);
            return closed_form_report(bx, bracket, abx * std::sqrt(abx),
                                      abx / 2.0 + bx * bx,                     // |a3|
                                      abx / 2.0,                               // inner
                                      abx * abx * abx,                         // outer num
                                      std::abs(bracket) / (2.0 * bx * bx), in.nu);
        }
        case Corollary::ConvexX: {
            const auto& [a, b, p, q] = in.params;
            const double bx = b * in.x;
            const double bracket = (2.0 * b - 4.0 * p) * b * in.x * in.x - 4.0 * q * a;
            const double abx = std::abs(bx);
            return closed_form_report(bx, bracket, abx * std::sqrt(abx),
                                      abx / 6.0 + bx * bx / 4.0, abx / 6.0, abx * abx * abx,
                                      std::abs(bracket) / (6.0 * bx * bx), in.nu);
        }
        case Corollary::SStarCheb: {
            require_cheb_t(t);
            if (al < 0.0) throw std::invalid_argument("sstar-cheb requires alpha >= 0");
            const double bracket = (1.0 + 2.0 * al) * (1.0 + 2.0 * al) - 16.0 * al * al * t * t;
            return closed_form_report(
                2.0 * t, bracket, 2.0 * t * std::sqrt(2.0 * t),
                t / (1.0 + 3.0 * al) + 4.0 * t * t / ((1.0 + 2.0 * al) * (1.0 + 2.0 * al)),
                2.0 * t / (2.0 + 6.0 * al), 8.0 * t * t * t,
                std::abs(bracket) / (8.0 * t * t * (1.0 + 3.0 * al)), in.nu);
        }
        case Corollary::MocanuCheb: {
            require_cheb_t(t);
            if (al < 0.0 || al > 1.0)
                throw std::invalid_argument("mocanu-cheb requires 0 <= alpha <= 1");
            const double bracket = (1.0 + al) * (1.0 + al) - 4.0 * al * (1.0 + al) * t * t;
            return closed_form_report(
                2.0 * t, bracket, 2.0 * t * std::sqrt(2.0 * t),
                t / (1.0 + 2.0 * al) + 4.0 * t * t / ((1.0 + al) * (1.0 + al)),
                t / (1.0 + 2.0 * al), 8.0 * t * t * t,
                std::abs(bracket) / (8.0 * t * t * (1.0 + 2.0 * al)), in.nu);
        }
        case Corollary::ConvexCheb: {
            require_cheb_t(t);
            const double bracket = 1.0 - 2.0 * t * t;
            return closed_form_report(2.0 * t, bracket, t * std::sqrt(2.0 * t), t / 3.0 + t * t,
                                      t / 3.0, 2.0 * t * t * t,
                                      std::abs(bracket) / (6.0 * t * t), in.nu);
        }
        case Corollary::BlendCheb: {
            require_cheb_t(t);
            if (al < 0.0 || al > 1.0)
                throw std::invalid_argument("blend-cheb requires 0 <= alpha <= 1");
            // The general alpha-blend bracket at these parameters; the t^2
            // term carries the factor 2 that drops the form onto convex-cheb
            // at alpha = 0.
            const double bracket =
                (2.0 - al) * (2.0 - al) - 2.0 * (al * al - 5.0 * al + 4.0) * t * t;
            return closed_form_report(
                2.0 * t, bracket, 2.0 * t * std::sqrt(2.0 * t),
                t / (3.0 - 2.0 * al) + 4.0 * t * t / ((2.0 - al) * (2.0 - al)),
                t / (3.0 - 2.0 * al), 8.0 * t * t * t,
                std::abs(bracket) / (8.0 * t * t * (3.0 - 2.0 * al)), in.nu);
        }
    }
    throw std::invalid_argument("unknown corollary");
}

}  // namespace horadam

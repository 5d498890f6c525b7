#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "horadam/bounds.hpp"

namespace horadam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double rel_dev(double engine, double closed) {
    if (std::isinf(engine) || std::isinf(closed)) {
        return engine == closed ? 0.0 : kInf;
    }
    const double scale = std::max(std::abs(closed), 1e-30);
    return std::abs(engine - closed) / scale;
}

struct GridAccumulator {
    long points = 0;
    double max_dev = 0.0;

    void compare(const ClassSpec& spec, Corollary corollary, const CorollaryInputs& in) {
        const double d = std::abs(denom(spec));
        if (d < 1e-8) {
            return;  // vacuous-adjacent; nothing meaningful to compare
        }
        const BoundReport engine = bound_report(spec, in.nu);
        const BoundReport closed = corollary_bounds(corollary, in);

        double dev = rel_dev(engine.a2_bound, closed.a2_bound);
        dev = std::max(dev, rel_dev(engine.a3_bound, closed.a3_bound));
        dev = std::max(dev, rel_dev(engine.threshold, closed.threshold));

        // Skip the fs comparison inside a thin window around the branch
        // switch, where float noise in the two threshold computations could
        // put the sides on different branches.
        const double window = 1e-6 * std::max(1.0, engine.threshold);
        if (std::abs(std::abs(in.nu - 1.0) - engine.threshold) > window) {
            dev = std::max(dev, rel_dev(engine.fs_bound, closed.fs_bound));
            if (engine.fs_branch != closed.fs_branch) {
                dev = kInf;
            }
        }
        ++points;
        max_dev = std::max(max_dev, dev);
    }
};

const std::vector<double> kNuGrid = {0.0, 0.5, 1.0, 2.5};

ReductionResult check_general(Corollary corollary, int x_steps) {
    const std::vector<double> box = {-2.0, -1.0, 1.0, 2.0};
    GridAccumulator acc;
    for (double a : box)
        for (double b : box)
            for (double p : box)
                for (double q : {-1.0, 1.0}) {
                    for (int ix = 0; ix < x_steps; ++ix) {
                        double x = -2.0 + 4.0 * (ix + 0.5) / x_steps;
                        if (std::abs(x) < 0.1) {
                            x += 0.17;
                        }
                        for (double nu : kNuGrid) {
                            const CorollaryInputs in{{a, b, p, q}, 0.0, x, nu};
                            acc.compare(corollary_spec(corollary, in), corollary, in);
                        }
                    }
                }
    return {corollary, acc.points, acc.max_dev};
}

ReductionResult check_chebyshev(Corollary corollary, int t_steps_scale) {
    std::vector<double> alphas;
    switch (corollary) {
        case Corollary::SStarCheb:
            alphas = {0.0, 0.25, 0.6, 1.0, 1.5, 2.0};
            break;
        case Corollary::MocanuCheb:
        case Corollary::BlendCheb:
            alphas = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
            break;
        case Corollary::ConvexCheb:
            alphas = {1.0};  // fixed by the corollary
            break;
        default:
            throw std::invalid_argument("not a Chebyshev corollary");
    }
    const int t_steps =
        (corollary == Corollary::ConvexCheb ? 63 : 11) * t_steps_scale;
    GridAccumulator acc;
    for (double alpha : alphas) {
        for (int it = 0; it < t_steps; ++it) {
            const double t = 0.05 + 0.9 * it / std::max(1, t_steps - 1);
            for (double nu : kNuGrid) {
                const CorollaryInputs in{{}, alpha, t, nu};
                acc.compare(corollary_spec(corollary, in), corollary, in);
            }
        }
    }
    return {corollary, acc.points, acc.max_dev};
}

}  // namespace

std::vector<ReductionResult> reduction_check(int points_per_axis) {
    if (points_per_axis < 1) {
        throw std::invalid_argument("reduction_check requires points_per_axis >= 1");
    }
    return {
        check_general(Corollary::SStarX, points_per_axis),
        check_general(Corollary::ConvexX, points_per_axis),
        check_chebyshev(Corollary::SStarCheb, points_per_axis),
        check_chebyshev(Corollary::MocanuCheb, points_per_axis),
        check_chebyshev(Corollary::ConvexCheb, points_per_axis),
        check_chebyshev(Corollary::BlendCheb, points_per_axis),
    };
}

}  // namespace horadam

#include "horadam/classes.hpp"

#include <cmath>
#include <stdexcept>

namespace horadam {

namespace {

constexpr double kH2Tol = 1e-12;

// Euler operator z d/dz; exact and order-preserving.
TruncatedSeries theta(const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (int k = 1; k <= s.order(); ++k) {
        r.set_coeff(k, static_cast<double>(k) * s.coeff(k));
    }
    return r;
}

}  // namespace

const char* to_string(ClassKind kind) {
    switch (kind) {
        case ClassKind::SStar:
            return "sstar";
        case ClassKind::Mocanu:
            return "mocanu";
        case ClassKind::AlphaBlend:
            return "alphablend";
    }
    return "?";
}

void validate_spec(const ClassSpec& spec) {
    if (!spec.horadam.finite() || !std::isfinite(spec.alpha) || !std::isfinite(spec.x)) {
        throw std::invalid_argument("class spec has non-finite fields");
    }
    switch (spec.kind) {
        case ClassKind::SStar:
            if (spec.alpha < 0.0) {
                throw std::invalid_argument("sstar requires alpha >= 0");
            }
            break;
        case ClassKind::Mocanu:
            if (spec.alpha < 0.0 || spec.alpha > 1.0) {
                throw std::invalid_argument("mocanu requires 0 <= alpha <= 1");
            }
            break;
        case ClassKind::AlphaBlend:
            if (spec.alpha < 0.0 || spec.alpha > 1.0) {
                throw std::invalid_argument("alphablend requires 0 <= alpha <= 1");
            }
            break;
    }
}

CoefficientSystem coefficient_system(const ClassSpec& spec) {
    validate_spec(spec);
    const double al = spec.alpha;
    switch (spec.kind) {
        case ClassKind::SStar:
            return {1.0 + 2.0 * al, 2.0 * (1.0 + 3.0 * al), -(1.0 + 2.0 * al), 3.0 + 10.0 * al,
                    -2.0 * (1.0 + 3.0 * al)};
        case ClassKind::Mocanu:
            return {1.0 + al, 2.0 * (1.0 + 2.0 * al), -(1.0 + 3.0 * al), 3.0 + 5.0 * al,
                    -2.0 * (1.0 + 2.0 * al)};
        case ClassKind::AlphaBlend:
            return {2.0 - al, 2.0 * (3.0 - 2.0 * al),
                    ((al - 2.0) * (al - 2.0) - 3.0 * (4.0 - 3.0 * al)) / 2.0,
                    8.0 * (1.0 - al) + al * (al + 5.0) / 2.0, -2.0 * (3.0 - 2.0 * al)};
    }
    throw std::invalid_argument("unknown class kind");
}

TruncatedSeries functional_series(const ClassSpec& spec, const FunctionCoeffs& f, int order) {
    validate_spec(spec);
    if (order < 3) {
        throw std::invalid_argument("functional_series requires order >= 3");
    }
    // Work one order above the target so every z-shift below stays exact.
    const int n = order + 1;
    TruncatedSeries fs(n);
    fs.set_coeff(1, 1.0);
    fs.set_coeff(2, f.a2);
    fs.set_coeff(3, f.a3);

    const TruncatedSeries f_over_z = fs.divided_by_z();          // f/z, c0 = 1
    const TruncatedSeries tf = theta(fs);                        // z f'
    const TruncatedSeries fprime = tf.divided_by_z();            // z f' / z, c0 = 1
    const TruncatedSeries z2fpp = (theta(tf) - tf).divided_by_z();  // z^2 f'' / z

    const double al = spec.alpha;
    switch (spec.kind) {
        case ClassKind::SStar:
            // z f'/f + alpha z^2 f''/f
            return div(fprime, f_over_z) + div(z2fpp, f_over_z).scaled(al);
        case ClassKind::Mocanu: {
            // (1-alpha) z f'/f + alpha (1 + z f''/f')
            const TruncatedSeries one = TruncatedSeries::constant(1.0, order);
            return div(fprime, f_over_z).scaled(1.0 - al) +
                   (one + div(z2fpp, fprime)).scaled(al);
        }
        case ClassKind::AlphaBlend: {
            // (z f'/f)^alpha (1 + z f''/f')^(1-alpha)
            const TruncatedSeries one = TruncatedSeries::constant(1.0, order);
            return real_power(div(fprime, f_over_z), al) *
                   real_power(one + div(z2fpp, fprime), 1.0 - al);
        }
    }
    throw std::invalid_argument("unknown class kind");
}

FunctionCoeffs inverse_coeffs(const FunctionCoeffs& f) {
    return {-f.a2, 2.0 * f.a2 * f.a2 - f.a3};
}

SchwarzCoeffs extract_schwarz(const TruncatedSeries& series, const HoradamParams& params,
                              double x) {
    if (series.order() < 2) {
        throw std::invalid_argument("extract_schwarz needs at least a second-order series");
    }
    if (std::abs(series.coeff(0) - Complex{1.0}) > 1e-10) {
        throw std::invalid_argument("extract_schwarz requires a series with constant term 1");
    }
    const double h2 = horadam_h2(params, x);
    if (std::abs(h2) <= kH2Tol) {
        throw std::domain_error("extract_schwarz is degenerate at b*x = 0");
    }
    const double h3 = horadam_h3(params, x);
    const Complex u1 = series.coeff(1) / h2;
    const Complex u2 = (series.coeff(2) - h3 * u1 * u1) / h2;
    return {u1, u2};
}

}  // namespace horadam

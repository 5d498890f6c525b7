#include "horadam/horadam.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "horadam/series.hpp"

namespace horadam {

bool HoradamParams::finite() const {
    return std::isfinite(a) && std::isfinite(b) && std::isfinite(p) && std::isfinite(q);
}

HoradamParams family_params(PolyFamily family) {
    switch (family) {
        case PolyFamily::Fibonacci:
            return {1.0, 1.0, 1.0, 1.0};
        case PolyFamily::Lucas:
            return {2.0, 1.0, 1.0, 1.0};
        case PolyFamily::Pell:
            return {1.0, 2.0, 2.0, 1.0};
        case PolyFamily::PellLucas:
            return {2.0, 2.0, 2.0, 1.0};
        case PolyFamily::ChebyshevFirst:
            return {1.0, 1.0, 2.0, -1.0};
        case PolyFamily::ChebyshevSecond:
            return {1.0, 2.0, 2.0, -1.0};
    }
    throw std::invalid_argument("unknown polynomial family");
}

double horadam_eval(const HoradamParams& params, int n, double x) {
    if (n < 1) {
        throw std::invalid_argument("horadam_eval requires n >= 1");
    }
    if (n == 1) return params.a;
    if (n == 2) return params.b * x;
    double prev = params.a;
    double cur = params.b * x;
    for (int k = 3; k <= n; ++k) {
        const double next = params.p * x * cur + params.q * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> horadam_sequence(const HoradamParams& params, int n_max, double x) {
    if (n_max < 1) {
        throw std::invalid_argument("horadam_sequence requires n_max >= 1");
    }
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n_max));
    values.push_back(params.a);
    if (n_max >= 2) values.push_back(params.b * x);
    for (int k = 3; k <= n_max; ++k) {
        values.push_back(params.p * x * values[values.size() - 1] + params.q * values[values.size() - 2]);
    }
    return values;
}

std::vector<double> gf_coefficients(const HoradamParams& params, double x, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("gf_coefficients requires n_max >= 1");
    }
    const int order = n_max - 1;
    TruncatedSeries numerator(order);
    numerator.set_coeff(0, params.a);
    if (order >= 1) numerator.set_coeff(1, (params.b - params.a * params.p) * x);
    TruncatedSeries denominator(order);
    denominator.set_coeff(0, 1.0);
    if (order >= 1) denominator.set_coeff(1, -params.p * x);
    if (order >= 2) denominator.set_coeff(2, -params.q);
    const TruncatedSeries quotient = div(numerator, denominator);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n_max));
    for (int k = 0; k <= order; ++k) {
        values.push_back(quotient.coeff(k).real());
    }
    return values;
}

double chebyshev_u_trig(int n, double phi) {
    if (n < 0) {
        throw std::invalid_argument("chebyshev_u_trig requires n >= 0");
    }
    const double s = std::sin(phi);
    if (std::abs(s) <= 1e-12) {
        // Removable singularity at phi = k*pi: the limit is (n+1) * (-1)^(n*k).
        const long long k = std::llround(phi / std::numbers::pi);
        const bool negate = (k % 2 != 0) && (n % 2 != 0);
        return negate ? -static_cast<double>(n + 1) : static_cast<double>(n + 1);
    }
    return std::sin((n + 1) * phi) / s;
}

}  // namespace horadam

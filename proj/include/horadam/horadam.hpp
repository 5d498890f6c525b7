#pragma once

#include <vector>

namespace horadam {

/// Parameter quadruple (a, b, p, q) of a Horadam polynomial family:
/// h1(x) = a, h2(x) = b*x, h_n(x) = p*x*h_{n-1}(x) + q*h_{n-2}(x).
struct HoradamParams {
    double a = 0.0;
    double b = 0.0;
    double p = 0.0;
    double q = 0.0;

    bool finite() const;
};

/// Named specializations of the Horadam family.
enum class PolyFamily {
    Fibonacci,        // (1, 1, 1, 1)
    Lucas,            // (2, 1, 1, 1)
    Pell,             // (1, 2, 2, 1)
    PellLucas,        // (2, 2, 2, 1)
    ChebyshevFirst,   // (1, 1, 2, -1)
    ChebyshevSecond,  // (1, 2, 2, -1)
};

HoradamParams family_params(PolyFamily family);

/// Custom families pass their parameters through unchanged.
inline HoradamParams family_params(const HoradamParams& custom) { return custom; }

/// h_n(x) by the recurrence, n >= 1. Indexing starts at h1 = a, so the
/// classical degree-n polynomial of a named family sits at index n+1.
double horadam_eval(const HoradamParams& params, int n, double x);

/// [h1(x), ..., h_{n_max}(x)], n_max >= 1.
std::vector<double> horadam_sequence(const HoradamParams& params, int n_max, double x);

/// First n_max Taylor coefficients of (a + (b - a*p)*x*z) / (1 - p*x*z - q*z^2),
/// computed by truncated series division. Coefficient k equals h_{k+1}(x);
/// this is the independent oracle for horadam_eval.
std::vector<double> gf_coefficients(const HoradamParams& params, double x, int n_max);

/// U_n(cos(phi)) = sin((n+1)*phi) / sin(phi), n >= 0. Near sin(phi) = 0 the
/// removable singularity is replaced by its limit +-(n+1).
double chebyshev_u_trig(int n, double phi);

inline double horadam_h2(const HoradamParams& params, double x) { return params.b * x; }

/// h3(x) = p*b*x^2 + q*a, the single source for the constant appearing in
/// every class denominator.
inline double horadam_h3(const HoradamParams& params, double x) {
    return params.p * params.b * x * x + params.q * params.a;
}

}  // namespace horadam

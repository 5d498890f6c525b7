#pragma once

#include "horadam/horadam.hpp"
#include "horadam/series.hpp"

namespace horadam {

/// The three function classes, by the shape of their defining functional:
///   SStar      : z f'/f + alpha z^2 f''/f              (alpha >= 0)
///   Mocanu     : (1-alpha) z f'/f + alpha (1 + z f''/f')   (0 <= alpha <= 1)
///   AlphaBlend : (z f'/f)^alpha (1 + z f''/f')^(1-alpha)   (0 <= alpha <= 1)
enum class ClassKind { SStar, Mocanu, AlphaBlend };

const char* to_string(ClassKind kind);

struct ClassSpec {
    ClassKind kind = ClassKind::SStar;
    double alpha = 0.0;
    HoradamParams horadam;
    double x = 0.0;
};

/// Throws std::invalid_argument when alpha is outside the class range or any
/// field is non-finite.
void validate_spec(const ClassSpec& spec);

/// First two Taylor coefficients of a normalized function z + a2 z^2 + a3 z^3 + ...
struct FunctionCoeffs {
    Complex a2{0.0};
    Complex a3{0.0};
};

/// The five scalars encoding the four per-class coefficient equations:
///   c1 a2            = h2 u1
///   e1 a3 + e2 a2^2  = h2 u2 + h3 u1^2
///   -c1 a2           = h2 v1
///   f1 a2^2 + f2 a3  = h2 v2 + h3 v1^2
/// For every class: e1 + f2 = 0, e2 - f1 = -2 e1, and e2 + f1 is the
/// class constant multiplying a2^2 in the summed equation.
struct CoefficientSystem {
    double c1;
    double e1;
    double e2;
    double f1;
    double f2;
};

CoefficientSystem coefficient_system(const ClassSpec& spec);

/// Expands the class functional of f as a series of the given order (>= 3).
/// The constant term is 1 for all three classes.
TruncatedSeries functional_series(const ClassSpec& spec, const FunctionCoeffs& f, int order);

/// First two coefficients of the inverse function: (-a2, 2 a2^2 - a3).
FunctionCoeffs inverse_coeffs(const FunctionCoeffs& f);

struct SchwarzCoeffs {
    Complex u1{0.0};
    Complex u2{0.0};
};

/// Inverts 1 + h2 u1 z + (h2 u2 + h3 u1^2) z^2 + ... for (u1, u2).
/// Requires constant term 1 (within 1e-10) and |b x| > 1e-12.
SchwarzCoeffs extract_schwarz(const TruncatedSeries& series, const HoradamParams& params,
                              double x);

}  // namespace horadam

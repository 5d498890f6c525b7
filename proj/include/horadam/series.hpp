#pragma once

#include <complex>
#include <vector>

namespace horadam {

using Complex = std::complex<double>;

/// Formal power series over complex coefficients, truncated at a fixed order
/// (inclusive). Binary operations require equal orders; callers align with
/// truncated() rather than relying on implicit promotion.
class TruncatedSeries {
public:
    /// Zero series of the given truncation order.
    explicit TruncatedSeries(int order);

    /// Takes ownership of the coefficients; order = coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries constant(Complex value, int order);
    static TruncatedSeries identity(int order);  // the series z

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Complex coeff(int k) const;
    void set_coeff(int k, Complex value);
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(int new_order) const;  // new_order <= order
    TruncatedSeries scaled(Complex factor) const;

    /// Termwise derivative; order drops by one.
    TruncatedSeries derivative() const;

    /// Termwise antiderivative with zero constant; order grows by one.
    TruncatedSeries antiderivative() const;

    /// Divide by z (requires |c0| <= 1e-13); order drops by one.
    TruncatedSeries divided_by_z() const;

    bool operator==(const TruncatedSeries& other) const = default;

private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t);  // Cauchy product
TruncatedSeries operator*(Complex factor, const TruncatedSeries& s);
TruncatedSeries operator*(const TruncatedSeries& s, Complex factor);

/// Forward-substitution division; t must have |c0| > 1e-13.
TruncatedSeries div(const TruncatedSeries& s, const TruncatedSeries& t);

/// outer(inner(z)) truncated at the common order; inner must have c0 = 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// log of a series with constant term 1, via L' = s'/s.
TruncatedSeries log1(const TruncatedSeries& s);

/// exp of a series with constant term 0, via E' = s'E.
TruncatedSeries exp0(const TruncatedSeries& s);

/// s^alpha = exp0(alpha * log1(s)); requires constant term 1.
TruncatedSeries real_power(const TruncatedSeries& s, double alpha);

/// Compositional inverse g with compose(g, s) = z; requires c0 = 0, c1 = 1.
TruncatedSeries revert(const TruncatedSeries& s);

}  // namespace horadam

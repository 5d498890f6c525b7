#include "horadam/series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace horadam {

namespace {

constexpr double kDivZeroTol = 1e-13;
constexpr double kNormTol = 1e-12;

void require_equal_orders(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (s.order() != t.order()) {
        throw std::invalid_argument("truncated series orders differ; align with truncated()");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) {
        throw std::invalid_argument("truncation order must be nonnegative");
    }
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{0.0});
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("a truncated series needs at least the constant term");
    }
}

TruncatedSeries TruncatedSeries::constant(Complex value, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
    if (order < 1) {
        throw std::invalid_argument("identity series needs order >= 1");
    }
    TruncatedSeries s(order);
    s.coeffs_[1] = 1.0;
    return s;
}

Complex TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order()) {
        throw std::out_of_range("series coefficient index out of range");
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, Complex value) {
    if (k < 0 || k > order()) {
        throw std::out_of_range("series coefficient index out of range");
    }
    coeffs_[static_cast<std::size_t>(k)] = value;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order()) {
        throw std::invalid_argument("truncated() only reduces the order");
    }
    return TruncatedSeries(
        std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::scaled(Complex factor) const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c *= factor;
    return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() == 0) {
        return TruncatedSeries(std::vector<Complex>{Complex{0.0}});
    }
    TruncatedSeries r(order() - 1);
    for (int k = 1; k <= order(); ++k) {
        r.coeffs_[static_cast<std::size_t>(k) - 1] =
            static_cast<double>(k) * coeffs_[static_cast<std::size_t>(k)];
    }
    return r;
}

TruncatedSeries TruncatedSeries::antiderivative() const {
    TruncatedSeries r(order() + 1);
    for (int k = 0; k <= order(); ++k) {
        r.coeffs_[static_cast<std::size_t>(k + 1)] =
            coeffs_[static_cast<std::size_t>(k)] / static_cast<double>(k + 1);
    }
    return r;
}

TruncatedSeries TruncatedSeries::divided_by_z() const {
    if (std::abs(coeffs_[0]) > kDivZeroTol) {
        throw std::invalid_argument("divided_by_z requires a zero constant term");
    }
    if (order() == 0) {
        return TruncatedSeries(std::vector<Complex>{Complex{0.0}});
    }
    return TruncatedSeries(std::vector<Complex>(coeffs_.begin() + 1, coeffs_.end()));
}

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_equal_orders(s, t);
    TruncatedSeries r = s;
    for (int k = 0; k <= r.order(); ++k) {
        r.set_coeff(k, r.coeff(k) + t.coeff(k));
    }
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_equal_orders(s, t);
    TruncatedSeries r = s;
    for (int k = 0; k <= r.order(); ++k) {
        r.set_coeff(k, r.coeff(k) - t.coeff(k));
    }
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_equal_orders(s, t);
    const int n = s.order();
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) {
        Complex acc{0.0};
        for (int i = 0; i <= k; ++i) {
            acc += s.coeff(i) * t.coeff(k - i);
        }
        r.set_coeff(k, acc);
    }
    return r;
}

TruncatedSeries operator*(Complex factor, const TruncatedSeries& s) { return s.scaled(factor); }

TruncatedSeries operator*(const TruncatedSeries& s, Complex factor) { return s.scaled(factor); }

TruncatedSeries div(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_equal_orders(s, t);
    if (std::abs(t.coeff(0)) <= kDivZeroTol) {
        throw std::domain_error("series division by a (near-)zero constant term");
    }
    const int n = s.order();
    TruncatedSeries u(n);
    for (int k = 0; k <= n; ++k) {
        Complex acc = s.coeff(k);
        for (int j = 1; j <= k; ++j) {
            acc -= t.coeff(j) * u.coeff(k - j);
        }
        u.set_coeff(k, acc / t.coeff(0));
    }
    return u;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    require_equal_orders(outer, inner);
    if (std::abs(inner.coeff(0)) > kDivZeroTol) {
        throw std::invalid_argument("compose requires an inner series with zero constant term");
    }
    const int n = outer.order();
    // Horner evaluation in the series ring.
    TruncatedSeries r = TruncatedSeries::constant(outer.coeff(n), n);
    for (int k = n - 1; k >= 0; --k) {
        r = r * inner;
        r.set_coeff(0, r.coeff(0) + outer.coeff(k));
    }
    return r;
}

TruncatedSeries log1(const TruncatedSeries& s) {
    if (std::abs(s.coeff(0) - Complex{1.0}) > kNormTol) {
        throw std::invalid_argument("log1 requires a series with constant term 1");
    }
    const int n = s.order();
    if (n == 0) {
        return TruncatedSeries(0);
    }
    const TruncatedSeries quotient = div(s.derivative(), s.truncated(n - 1));  // s'/s
    TruncatedSeries r(n);
    for (int k = 1; k <= n; ++k) {
        r.set_coeff(k, quotient.coeff(k - 1) / static_cast<double>(k));
    }
    return r;
}

TruncatedSeries exp0(const TruncatedSeries& s) {
    if (std::abs(s.coeff(0)) > kNormTol) {
        throw std::invalid_argument("exp0 requires a series with constant term 0");
    }
    const int n = s.order();
    TruncatedSeries r(n);
    r.set_coeff(0, 1.0);
    // E' = s' E, solved termwise.
    for (int m = 1; m <= n; ++m) {
        Complex acc{0.0};
        for (int j = 1; j <= m; ++j) {
            acc += static_cast<double>(j) * s.coeff(j) * r.coeff(m - j);
        }
        r.set_coeff(m, acc / static_cast<double>(m));
    }
    return r;
}

TruncatedSeries real_power(const TruncatedSeries& s, double alpha) {
    return exp0(log1(s).scaled(alpha));
}

TruncatedSeries revert(const TruncatedSeries& s) {
    if (std::abs(s.coeff(0)) > kNormTol || std::abs(s.coeff(1) - Complex{1.0}) > kNormTol) {
        throw std::invalid_argument("revert requires c0 = 0 and c1 = 1");
    }
    const int n = s.order();
    // Powers s^k truncated at n, then triangular solve of compose(g, s) = z.
    std::vector<TruncatedSeries> powers;
    powers.reserve(static_cast<std::size_t>(n) + 1);
    powers.push_back(TruncatedSeries::constant(1.0, n));  // s^0
    for (int k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * s);
    }
    TruncatedSeries g(n);
    if (n >= 1) {
        g.set_coeff(1, Complex{1.0} / s.coeff(1));
    }
    for (int m = 2; m <= n; ++m) {
        Complex acc{0.0};
        for (int k = 1; k < m; ++k) {
            acc += g.coeff(k) * powers[static_cast<std::size_t>(k)].coeff(m);
        }
        g.set_coeff(m, -acc / powers[static_cast<std::size_t>(m)].coeff(m));
    }
    return g;
}

}  // namespace horadam

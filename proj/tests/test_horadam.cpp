#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "horadam/horadam.hpp"

using namespace horadam;

namespace {

// Classical degree-indexed recurrences, independent of the engine's
// (a, b, p, q) path. G_0, G_1 and the step are the textbook definitions.
double classical_poly(PolyFamily family, int degree, double x) {
    double g0 = 0, g1 = 0, px = 0, q = 0;
    switch (family) {
        case PolyFamily::Fibonacci:
            g0 = 1.0, g1 = x, px = x, q = 1.0;
            break;
        case PolyFamily::Lucas:
            g0 = 2.0, g1 = x, px = x, q = 1.0;
            break;
        case PolyFamily::Pell:
            g0 = 1.0, g1 = 2 * x, px = 2 * x, q = 1.0;
            break;
        case PolyFamily::PellLucas:
            g0 = 2.0, g1 = 2 * x, px = 2 * x, q = 1.0;
            break;
        case PolyFamily::ChebyshevFirst:
            g0 = 1.0, g1 = x, px = 2 * x, q = -1.0;
            break;
        case PolyFamily::ChebyshevSecond:
            g0 = 1.0, g1 = 2 * x, px = 2 * x, q = -1.0;
            break;
    }
    if (degree == 0) return g0;
    double prev = g0, cur = g1;
    for (int k = 2; k <= degree; ++k) {
        const double next = px * cur + q * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

TEST_CASE("family parameter quadruples") {
    auto expect = [](PolyFamily f, double a, double b, double p, double q) {
        const HoradamParams hp = family_params(f);
        CHECK(hp.a == a);
        CHECK(hp.b == b);
        CHECK(hp.p == p);
        CHECK(hp.q == q);
    };
    expect(PolyFamily::Fibonacci, 1, 1, 1, 1);
    expect(PolyFamily::Lucas, 2, 1, 1, 1);
    expect(PolyFamily::Pell, 1, 2, 2, 1);
    expect(PolyFamily::PellLucas, 2, 2, 2, 1);
    expect(PolyFamily::ChebyshevFirst, 1, 1, 2, -1);
    expect(PolyFamily::ChebyshevSecond, 1, 2, 2, -1);

    const HoradamParams custom = family_params(HoradamParams{3, 1, 2, 5});
    CHECK(custom.a == 3);
    CHECK(custom.b == 1);
    CHECK(custom.p == 2);
    CHECK(custom.q == 5);
}

TEST_CASE("horadam_eval unrolls the recurrence") {
    CHECK(horadam_eval({1, 1, 1, 1}, 4, 1.0) == 3.0);
    CHECK(horadam_eval({4.5, -1, 2, 3}, 1, 123.0) == 4.5);
    // h3 = p*b*x^2 + q*a = 0.25 + 1
    CHECK(horadam_eval({1, 1, 1, 1}, 3, 0.5) == 1.25);
    // Lucas h3 = x^2 + 2
    CHECK(horadam_eval({2, 1, 1, 1}, 3, 2.0) == 6.0);
    CHECK_THROWS_AS(horadam_eval({1, 1, 1, 1}, 0, 1.0), std::invalid_argument);
}

TEST_CASE("horadam_sequence matches entry-wise evaluation") {
    const std::vector<double> fib = horadam_sequence({1, 1, 1, 1}, 4, 1.0);
    CHECK(fib == std::vector<double>{1, 1, 2, 3});

    const std::vector<double> two = horadam_sequence({2.5, 3, 7, -2}, 2, 0.5);
    CHECK(two == std::vector<double>{2.5, 1.5});

    const std::vector<double> cheb = horadam_sequence({1, 2, 2, -1}, 3, 0.3);
    CHECK(cheb[0] == 1.0);
    CHECK(cheb[1] == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(cheb[2] == doctest::Approx(-0.64).epsilon(1e-14));

    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> box(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        const HoradamParams hp{box(rng), box(rng), box(rng), box(rng)};
        const double x = box(rng) / 1.5;
        const auto seq = horadam_sequence(hp, 12, x);
        for (int n = 1; n <= 12; ++n) {
            CHECK(seq[n - 1] == horadam_eval(hp, n, x));
        }
    }
}

TEST_CASE("generating function is an independent oracle") {
    const auto cheb = gf_coefficients({1, 2, 2, -1}, 0.3, 3);
    CHECK(cheb[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cheb[1] == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(cheb[2] == doctest::Approx(-0.64).epsilon(1e-14));

    CHECK(gf_coefficients({7, 1, 3, 2}, 0.4, 1) == std::vector<double>{7.0});

    const auto fib = gf_coefficients({1, 1, 1, 1}, 1.0, 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(fib[k] == doctest::Approx(std::vector<double>{1, 1, 2, 3}[k]).epsilon(1e-14));
    }

    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> box(-3.0, 3.0);
    std::uniform_real_distribution<double> xs(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const HoradamParams hp{box(rng), box(rng), box(rng), box(rng)};
        const double x = xs(rng);
        const auto rec = horadam_sequence(hp, 12, x);
        const auto gf = gf_coefficients(hp, x, 12);
        for (int k = 0; k < 12; ++k) {
            const double tol = std::max(1e-12, 1e-10 * std::abs(rec[k]));
            CHECK(std::abs(rec[k] - gf[k]) <= tol);
        }
    }
}

TEST_CASE("chebyshev_u_trig matches recurrence and handles the limit") {
    CHECK(chebyshev_u_trig(0, 0.7) == 1.0);
    CHECK(chebyshev_u_trig(1, std::numbers::pi / 3.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(chebyshev_u_trig(2, std::acos(0.3)) == doctest::Approx(-0.64).epsilon(1e-12));

    // removable singularity: U_n(1) = n+1, U_n(-1) = (-1)^n (n+1)
    CHECK(chebyshev_u_trig(4, 0.0) == 5.0);
    CHECK(chebyshev_u_trig(3, std::numbers::pi) == -4.0);
    CHECK(chebyshev_u_trig(4, std::numbers::pi) == 5.0);
    CHECK(chebyshev_u_trig(2, 2.0 * std::numbers::pi) == 3.0);

    const HoradamParams cheb2 = family_params(PolyFamily::ChebyshevSecond);
    for (int n = 0; n <= 10; ++n) {
        for (int j = 1; j <= 25; ++j) {
            const double phi = std::numbers::pi * j / 26.0;
            const double via_recurrence = horadam_eval(cheb2, n + 1, std::cos(phi));
            CHECK(std::abs(via_recurrence - chebyshev_u_trig(n, phi)) <= 1e-9);
        }
    }
}

TEST_CASE("engine index n+1 carries the classical degree-n polynomial") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> xs(-1.5, 1.5);
    for (PolyFamily family :
         {PolyFamily::Fibonacci, PolyFamily::Lucas, PolyFamily::Pell, PolyFamily::PellLucas,
          PolyFamily::ChebyshevFirst, PolyFamily::ChebyshevSecond}) {
        const HoradamParams hp = family_params(family);
        for (int i = 0; i < 8; ++i) {
            const double x = xs(rng);
            for (int degree = 0; degree <= 6; ++degree) {
                CHECK(horadam_eval(hp, degree + 1, x) ==
                      doctest::Approx(classical_poly(family, degree, x)).epsilon(1e-12));
            }
        }
    }
    // spot closed forms
    CHECK(horadam_eval(family_params(PolyFamily::ChebyshevFirst), 3, 0.4) ==
          doctest::Approx(2 * 0.4 * 0.4 - 1).epsilon(1e-15));
    CHECK(horadam_eval(family_params(PolyFamily::ChebyshevSecond), 3, 0.4) ==
          doctest::Approx(4 * 0.4 * 0.4 - 1).epsilon(1e-15));
}

TEST_CASE("h_n is affine in a") {
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const double b = box(rng), p = box(rng), q = box(rng), x = box(rng);
        for (int n = 1; n <= 12; ++n) {
            const double at0 = horadam_eval({0, b, p, q}, n, x);
            const double at1 = horadam_eval({1, b, p, q}, n, x);
            const double at2 = horadam_eval({2, b, p, q}, n, x);
            const double scale = std::max({1.0, std::abs(at0), std::abs(at1), std::abs(at2)});
            CHECK(std::abs(at0 - 2 * at1 + at2) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("h2/h3 helpers") {
    const HoradamParams hp{1, 1, 1, 1};
    CHECK(horadam_h2(hp, 0.5) == 0.5);
    CHECK(horadam_h3(hp, 0.5) == 1.25);
    CHECK(horadam_h3(hp, 1.0) == horadam_eval(hp, 3, 1.0));
}

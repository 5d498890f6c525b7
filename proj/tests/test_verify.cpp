#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "horadam/verify.hpp"
#include "test_util.hpp"

using namespace horadam;

namespace {

const HoradamParams kFib{1, 1, 1, 1};
const ClassSpec kBase{ClassKind::SStar, 0.0, kFib, 0.5};

bool reports_equal(const VerifyReport& a, const VerifyReport& b) {
    return a.trials == b.trials && a.admissible == b.admissible &&
           a.violations == b.violations && a.max_ratio_a2 == b.max_ratio_a2 &&
           a.max_ratio_a3 == b.max_ratio_a3 && a.max_ratio_fs == b.max_ratio_fs &&
           a.seed == b.seed && a.nu_grid == b.nu_grid && a.strict_schwarz == b.strict_schwarz;
}

}  // namespace

TEST_CASE("admissibility predicate") {
    CHECK(is_admissible({0, 0, 0, 0}));
    CHECK(is_admissible({1, 0, -1, 0}));
    CHECK_FALSE(is_admissible({0.5, 0, -0.5, -2.0}));
    CHECK_FALSE(is_admissible({0.5, 0, 0.5, 0}));  // v1 must equal -u1
    CHECK_FALSE(is_admissible({0, 1.1, 0, 0}));
}

TEST_CASE("candidate construction by the coefficient equations") {
    const ClassSpec spec{ClassKind::SStar, 0.0, kFib, 1.0};

    const Candidate trivial = construct_candidate(spec, 0.0, 0.0);
    CHECK(std::abs(trivial.coeffs.a2) == 0.0);
    CHECK(std::abs(trivial.coeffs.a3) == 0.0);
    CHECK(std::abs(trivial.v2) == 0.0);

    // u1 = 1, u2 = 0: a2 = 1, a3 = 3/2, v2 = -2 (inadmissible)
    const Candidate edge = construct_candidate(spec, 1.0, 0.0);
    CHECK(std::abs(edge.coeffs.a2 - Complex{1.0}) <= 1e-14);
    CHECK(std::abs(edge.coeffs.a3 - Complex{1.5}) <= 1e-14);
    CHECK(std::abs(edge.v2 - Complex{-2.0}) <= 1e-14);
    CHECK_FALSE(is_admissible({1.0, 0.0, -1.0, edge.v2}));

    // u1 = 0, u2 = 1/2: a2 = 0, a3 = 1/4, v2 = -1/2 (admissible)
    const Candidate mid = construct_candidate(spec, 0.0, 0.5);
    CHECK(std::abs(mid.coeffs.a2) == 0.0);
    CHECK(std::abs(mid.coeffs.a3 - Complex{0.25}) <= 1e-14);
    CHECK(std::abs(mid.v2 - Complex{-0.5}) <= 1e-14);
    CHECK(is_admissible({0.0, 0.5, 0.0, mid.v2}));

    CHECK_THROWS_AS(construct_candidate(spec, Complex{1.5, 0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(construct_candidate({ClassKind::SStar, 0.0, kFib, 0.0}, 0.1, 0.1),
                    std::domain_error);
}

TEST_CASE("constructed candidates satisfy the summed equation") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 60; ++i) {
        const ClassKind kind = static_cast<ClassKind>(i % 3);
        const double alpha = kind == ClassKind::SStar ? 2.0 * unit(rng) : unit(rng);
        const ClassSpec spec{kind, alpha, kFib, 0.5 + unit(rng)};
        const Complex u1 = testutil::random_disk_point(rng);
        const Complex u2 = testutil::random_disk_point(rng);
        const Candidate cand = construct_candidate(spec, u1, u2);

        const CoefficientSystem cs = coefficient_system(spec);
        const double h2 = horadam_h2(spec.horadam, spec.x);
        const double h3 = horadam_h3(spec.horadam, spec.x);
        const Complex a2sq = cand.coeffs.a2 * cand.coeffs.a2;
        const Complex lhs = (cs.e2 + cs.f1) * a2sq;
        const Complex rhs = h2 * (u2 + cand.v2) + h3 * (u1 * u1 + u1 * u1);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("inverse-function functional reproduces the v-side equations") {
    // The solved v2 must match what the functional of g = f^-1 actually
    // expands to: 1 + h2 v1 w + (h2 v2 + h3 v1^2) w^2 with v1 = -u1.
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 45; ++i) {
        const ClassKind kind = static_cast<ClassKind>(i % 3);
        const double alpha = kind == ClassKind::SStar ? 2.0 * unit(rng) : unit(rng);
        const ClassSpec spec{kind, alpha, kFib, 0.5 + unit(rng)};
        const Complex u1 = testutil::random_disk_point(rng, 0.7);
        const Complex u2 = testutil::random_disk_point(rng, 0.7);
        const Candidate cand = construct_candidate(spec, u1, u2);

        const auto g_series = functional_series(spec, inverse_coeffs(cand.coeffs), 8);
        const double h2 = horadam_h2(spec.horadam, spec.x);
        const double h3 = horadam_h3(spec.horadam, spec.x);
        CHECK(std::abs(g_series.coeff(1) - h2 * (-u1)) <= 1e-11);
        CHECK(std::abs(g_series.coeff(2) - (h2 * cand.v2 + h3 * u1 * u1)) <= 1e-11);
    }
}

TEST_CASE("roundtrip residual stays at solver precision") {
    CHECK(roundtrip_check(kBase, 0.0, 0.0) <= 1e-12);
    CHECK(roundtrip_check({ClassKind::SStar, 0.5, kFib, 0.7}, 0.3, 0.2) <= 1e-9);
    CHECK(roundtrip_check({ClassKind::AlphaBlend, 0.5, {1, 2, 2, 1}, 0.4}, Complex{0.2, 0.1},
                          Complex{-0.3, 0.0}) <= 1e-9);
}

TEST_CASE("run_verification certifies the bounds on a small run") {
    const VerifyReport report = run_verification(kBase, {0.0, 1.0, 2.0}, 5000, 7, false);
    CHECK(report.trials == 5000);
    CHECK(report.admissible > 0);
    CHECK(report.admissible <= report.trials);
    CHECK(report.violations == 0);
    CHECK(report.max_ratio_a2 <= 1.0 + 1e-9);
    CHECK(report.max_ratio_a3 <= 1.0 + 1e-9);
    CHECK(report.max_ratio_fs <= 1.0 + 1e-9);

    CHECK_THROWS_AS(run_verification(kBase, {1.0}, 0, 7, false), std::invalid_argument);
    CHECK_THROWS_AS(run_verification({ClassKind::SStar, 0.0, kFib, 0.0}, {1.0}, 10, 7, false),
                    std::domain_error);
}

TEST_CASE("verification is deterministic in the seed") {
    const VerifyReport a = run_verification(kBase, {0.0, 1.0}, 3000, 99, false);
    const VerifyReport b = run_verification(kBase, {0.0, 1.0}, 3000, 99, false);
    CHECK(reports_equal(a, b));

    const VerifyReport c = run_verification(kBase, {0.0, 1.0}, 3000, 100, false);
    CHECK_FALSE(reports_equal(a, c));
}

TEST_CASE("max ratios grow monotonically with the trial prefix") {
    const VerifyReport small = run_verification(kBase, {0.5}, 1000, 5, false);
    const VerifyReport big = run_verification(kBase, {0.5}, 4000, 5, false);
    CHECK(big.max_ratio_a2 >= small.max_ratio_a2);
    CHECK(big.max_ratio_a3 >= small.max_ratio_a3);
    CHECK(big.max_ratio_fs >= small.max_ratio_fs);
}

TEST_CASE("strict sampling is a subset regime") {
    const VerifyReport loose = run_verification(kBase, {0.0, 1.0}, 20000, 13, false);
    const VerifyReport strict = run_verification(kBase, {0.0, 1.0}, 20000, 13, true);
    CHECK(strict.violations <= loose.violations);
    CHECK(strict.violations == 0);
    CHECK(strict.max_ratio_fs <= 1.0 + 1e-9);
}

TEST_CASE("certification holds at negative x and large alpha") {
    // h2 < 0 flips signs through the equations; the moduli bounds must not care.
    const VerifyReport neg =
        run_verification({ClassKind::SStar, 0.5, kFib, -0.8}, {0.0, 1.0, 2.5}, 30000, 17, false);
    CHECK(neg.violations == 0);
    CHECK(neg.admissible > 0);

    const VerifyReport lucas = run_verification({ClassKind::Mocanu, 0.7, {2, 1, 1, 1}, -1.3},
                                                {0.5, 1.5}, 30000, 18, false);
    CHECK(lucas.violations == 0);

    const VerifyReport wide =
        run_verification({ClassKind::SStar, 10.0, kFib, 0.6}, {0.0, 1.0, 4.0}, 30000, 19, false);
    CHECK(wide.violations == 0);
}

TEST_CASE("roundtrip residual across classes and random inputs") {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const HoradamParams families[] = {kFib, {1, 2, 2, -1}, {2, 2, 2, 1}};
    for (int i = 0; i < 150; ++i) {
        const ClassKind kind = static_cast<ClassKind>(i % 3);
        const double alpha = kind == ClassKind::SStar ? 1.5 * unit(rng) : unit(rng);
        const ClassSpec spec{kind, alpha, families[i % 3], 0.35 + 0.6 * unit(rng)};
        const Complex u1 = testutil::random_disk_point(rng, 0.9);
        const Complex u2 = testutil::random_disk_point(rng, 0.9);
        CHECK(roundtrip_check(spec, u1, u2) <= 1e-9);
    }
}

import math

import pytest

import horadam


FIB = horadam.family_params(horadam.PolyFamily.Fibonacci)


def test_family_params():
    assert (FIB.a, FIB.b, FIB.p, FIB.q) == (1, 1, 1, 1)
    cheb2 = horadam.family_params(horadam.PolyFamily.ChebyshevSecond)
    assert (cheb2.a, cheb2.b, cheb2.p, cheb2.q) == (1, 2, 2, -1)


def test_eval_and_oracle_agree():
    assert horadam.horadam_sequence(FIB, 4, 1.0) == [1, 1, 2, 3]
    seq = horadam.horadam_sequence(FIB, 10, 0.7)
    gf = horadam.gf_coefficients(FIB, 0.7, 10)
    assert seq == pytest.approx(gf, abs=1e-11)


def test_chebyshev_trig_oracle():
    cheb2 = horadam.family_params(horadam.PolyFamily.ChebyshevSecond)
    phi = 1.1
    assert horadam.horadam_eval(cheb2, 4, math.cos(phi)) == pytest.approx(
        horadam.chebyshev_u_trig(3, phi), abs=1e-10
    )


def test_bounds_spot_values():
    spec = horadam.ClassSpec(horadam.ClassKind.SStar, 0.0, FIB, 0.5)
    assert horadam.bound_a2(spec) == pytest.approx(0.5 * math.sqrt(0.5), abs=1e-13)
    assert horadam.bound_a3(spec) == pytest.approx(0.5, abs=1e-13)
    bound, branch = horadam.fekete_szego(spec, 1.0)
    assert bound == pytest.approx(0.25, abs=1e-13)
    assert branch == horadam.FsBranch.Inner


def test_engine_matches_corollary():
    cheb2 = horadam.family_params(horadam.PolyFamily.ChebyshevSecond)
    spec = horadam.ClassSpec(horadam.ClassKind.Mocanu, 1.0, cheb2, 0.5)
    closed = horadam.corollary_bounds("convex-cheb", x=0.5, nu=1.0)
    assert horadam.bound_a2(spec) == pytest.approx(closed.a2_bound, rel=1e-12)
    assert horadam.bound_a3(spec) == pytest.approx(closed.a3_bound, rel=1e-12)


def test_functional_series_is_normalized():
    spec = horadam.ClassSpec(horadam.ClassKind.AlphaBlend, 0.4, FIB, 0.8)
    coeffs = horadam.functional_series(spec, 0.1 + 0.05j, 0.02, order=8)
    assert coeffs[0] == pytest.approx(1.0, abs=1e-14)
    system = horadam.coefficient_system(spec)
    assert coeffs[1] == pytest.approx(system.c1 * (0.1 + 0.05j), abs=1e-12)


def test_verification_is_deterministic_and_clean():
    spec = horadam.ClassSpec(horadam.ClassKind.SStar, 0.5, FIB, 0.7)
    first = horadam.run_verification(spec, [0.0, 1.0, 2.0], 20000, seed=7)
    second = horadam.run_verification(spec, [0.0, 1.0, 2.0], 20000, seed=7)
    assert first.violations == 0
    assert first.max_ratio_fs <= 1.0 + 1e-9
    assert first.to_json() == second.to_json()


def test_validation_errors_surface():
    with pytest.raises(ValueError):
        horadam.coefficient_system(
            horadam.ClassSpec(horadam.ClassKind.Mocanu, 1.5, FIB, 0.5)
        )

import math

import pytest

try:
    import gpmfix
except ImportError:
    import _gpmfix as gpmfix


def test_metrics():
    m = gpmfix.sqrt_metric()
    assert m(1.0, 0.0, 2.0) == pytest.approx(0.5)
    p = gpmfix.power_metric(0.5)
    assert p(9.0, 0.0, 3.0) == pytest.approx(1.0)
    with pytest.raises(Exception):
        gpmfix.power_metric(1.5)


def test_axiom_checks():
    rep = gpmfix.check_metric_axioms(gpmfix.sqrt_metric(), samples=2000, tol=1e-12)
    assert rep["pass"] is True

    rep = gpmfix.check_combine_axioms("max", samples=2000, tol=1e-12)
    assert rep["pass"] is True
    assert any("tie exception" in note for note in rep["notes"])


def test_contraction_and_iterate():
    rep = gpmfix.check_contraction(
        lambda x: x / 16.0, gpmfix.sqrt_metric(), phi_factor=0.5,
        samples=2000, point_lo=-1.0, point_hi=1.0,
    )
    assert rep["pass"] is True
    assert rep["max_ratio"] <= 0.5 + 1e-12

    out = gpmfix.iterate(lambda x: x / 16.0, 1.0, gpmfix.sqrt_metric(), tol=1e-12)
    assert out["status"] == "converged"
    assert abs(out["iterates"][-1]) < 1e-20
    assert out["estimated_factor"] == pytest.approx(0.25, abs=0.01)


def test_solve_ivp():
    sol, info = gpmfix.solve_ivp(
        w=1.0, l1=2.0, l2=3.0, S=1.0, g=lambda y, u: 0.0, n=500
    )
    assert info["status"] == "converged"
    exact = gpmfix.GridFunction.sample(
        1.0, 500, lambda y: 2.0 * math.cos(y) + 3.0 * math.sin(y)
    )
    assert sol.sup_diff(exact) <= 1e-8


def test_solve_pbvp():
    sol, info = gpmfix.solve_pbvp(
        S=1.0, a=1.5, b=1.0, F=lambda y, u: -u + 2.0, n=500, start=0.0
    )
    assert info["status"] == "converged"
    assert info["monotone_nondecreasing"] is True
    star = gpmfix.GridFunction.constant(1.0, 500, 2.0)
    assert sol.sup_diff(star) <= 1e-8

    two_pi = 2.0 * math.pi
    with pytest.raises(gpmfix.IncomparableStartError):
        gpmfix.solve_pbvp(
            S=1.0, a=1.5, b=1.0,
            F=lambda y, u: two_pi * math.cos(two_pi * y) - (u - math.sin(two_pi * y)),
            n=200, start=0.0,
        )


def test_kernels():
    assert gpmfix.greens_ivp(1.0, 0.5, 1.0) == pytest.approx(math.sin(0.5))
    assert gpmfix.greens_periodic(0.0, 0.0, 1.0, 1.0) == pytest.approx(
        1.0 / (math.e - 1.0)
    )

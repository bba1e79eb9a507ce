"""Route implementations and identity verifiers for I(n)."""

import math

import pytest
from hypothesis import given, strategies as st

from logint import routes as rt
from logint import specfun
from logint import quadrature
from logint.quadrature import QuadratureConfig, integrate_bilateral

from oracles import zeta_partial

PI2 = math.pi * math.pi


# ---------------------------------------------------------------- Exponent

def test_exponent_accepts_and_normalizes():
    assert rt.Exponent(3).n == 3.0
    assert rt.Exponent(1.000001).n == 1.000001


@pytest.mark.parametrize("bad", [1.0, 0.0, -3.0, math.nan, math.inf, -math.inf])
def test_exponent_rejects(bad):
    with pytest.raises(ValueError):
        rt.Exponent(bad)


@given(st.floats(max_value=1.0, allow_nan=False))
def test_exponent_rejects_everything_at_or_below_one(n):
    with pytest.raises(ValueError):
        rt.Exponent(n)


@given(st.floats(min_value=1.0000001, max_value=1e12))
def test_exponent_accepts_everything_above_one(n):
    assert rt.Exponent(n).n == n


# ------------------------------------------------------------ closed forms

def test_trig_form_special_values():
    assert abs(rt.closed_form_trig(2.0)) <= 1e-15
    assert rt.closed_form_trig(3.0) == pytest.approx(-2.0 * PI2 / 27.0, abs=1e-14)
    assert rt.closed_form_trig(4.0) == pytest.approx(
        -PI2 / (8.0 * math.sqrt(2.0)), abs=1e-14
    )
    # cot(2pi/3) csc(2pi/3) = -2/3 exactly, so I(1.5) = 2 pi^2 / 6.75
    assert rt.closed_form_trig(1.5) == pytest.approx(2.0 * PI2 / 6.75, rel=1e-14)


def test_trigamma_form_cancels_exactly_at_two():
    assert rt.closed_form_trigamma(2.0) == 0.0


def test_trigamma_form_special_values():
    assert rt.closed_form_trigamma(3.0) == pytest.approx(-2.0 * PI2 / 27.0, rel=1e-11)
    assert rt.closed_form_trigamma(10.0) == pytest.approx(
        rt.closed_form_trig(10.0), rel=1e-11
    )


def test_route_equivalence_on_log_grid():
    for k in range(50):
        n = 1.01 * (1e4 / 1.01) ** (k / 49.0)
        trig = rt.closed_form_trig(n)
        diff = abs(trig - rt.closed_form_trigamma(n))
        assert diff <= 1e-10 * max(1.0, abs(trig)), n


def test_intermediate_collapses_to_trig_form():
    grid = [1.01 * (1e4 / 1.01) ** (k / 49.0) for k in range(50)]
    report = rt.verify_intermediate_collapse(grid, tol=1e-12)
    assert report.passed
    assert report.subject is rt.Subject.INTERMEDIATE


@given(st.floats(min_value=1.01, max_value=1.99))
def test_sign_positive_below_two(n):
    assert rt.closed_form_trig(n) > 0.0


@given(st.floats(min_value=2.01, max_value=50.0))
def test_sign_negative_above_two(n):
    assert rt.closed_form_trig(n) < 0.0


# --------------------------------------------------- gamma-derivative route

def test_gamma_derivative_route_agreement():
    for n in (1.5, 2.0, 3.0, 4.0, 10.0):
        trig = rt.closed_form_trig(n)
        dev = abs(rt.closed_form_gamma_derivative(n) - trig)
        assert dev <= 1e-6 * max(1.0, abs(trig)), n


def test_gamma_derivative_near_zero_at_two():
    assert abs(rt.closed_form_gamma_derivative(2.0)) <= 1e-8


def test_gamma_derivative_rejects_cramped_domain():
    with pytest.raises(ValueError):
        rt.closed_form_gamma_derivative(1.0000001)
    with pytest.raises(ValueError):
        rt.closed_form_gamma_derivative(3.0, h_rel=0.5)


def test_gamma_derivative_never_calls_quadrature(monkeypatch):
    def boom(*args, **kwargs):
        raise AssertionError("closed forms must not use the quadrature engine")

    # patch both the engine module and the names bound inside routes
    monkeypatch.setattr(quadrature, "integrate_finite", boom)
    monkeypatch.setattr(quadrature, "integrate_semi_infinite", boom)
    monkeypatch.setattr(quadrature, "integrate_bilateral", boom)
    monkeypatch.setattr(rt, "integrate_finite", boom)
    monkeypatch.setattr(rt, "integrate_bilateral", boom)
    rt.closed_form_trigamma(3.0)
    rt.closed_form_gamma_derivative(3.0)
    rt.closed_form_trig(3.0)


# ------------------------------------------------------------ numeric route

ORACLE_SET = (1.5, 2.0, math.e, 3.0, 4.0, 10.0, 100.0)


def test_numeric_matches_closed_form():
    for n in ORACLE_SET:
        outcome = rt.numeric_I(n)
        assert outcome.converged, n
        assert abs(outcome.value - rt.closed_form_trig(n)) <= 1e-8, n


def test_numeric_independent_of_special_functions(monkeypatch):
    def boom(*args, **kwargs):
        raise AssertionError("numeric_I must not touch specfun")

    for name in ("lgamma", "digamma", "hurwitz_zeta", "polygamma", "trigamma",
                 "cot_derivative", "gamma_reflection_defect"):
        monkeypatch.setattr(specfun, name, boom)
    outcome = rt.numeric_I(3.0)
    assert outcome.converged


def test_numeric_respects_eval_budget():
    cfg = QuadratureConfig()
    outcome = rt.numeric_I(2.5, cfg)
    assert outcome.evaluations <= cfg.max_evals


def test_evaluate_all_routes():
    row = rt.evaluate_all_routes(3.0)
    assert row.max_pairwise_spread < 1e-6
    values = (
        row.trig_form,
        row.trigamma_form,
        row.gamma_derivative_form,
        row.quadrature.value,
    )
    assert row.max_pairwise_spread == max(values) - min(values)
    row2 = rt.evaluate_all_routes(2.0)
    for v in (row2.trig_form, row2.trigamma_form, row2.gamma_derivative_form,
              row2.quadrature.value):
        assert abs(v) <= 1e-8
    with pytest.raises(ValueError):
        rt.evaluate_all_routes(1.0)


# -------------------------------------------------------- lemma1 integrand

def test_lemma1_integrand_limit_values():
    f1 = rt.lemma1_integrand(1, 0.5)
    assert f1(0.0) == 1.0
    assert f1(1e-9) == pytest.approx(1.0, abs=1e-8)
    f2 = rt.lemma1_integrand(2, 0.5)
    assert f2(0.0) == 0.0


def test_lemma1_integrand_against_direct_formula():
    f = rt.lemma1_integrand(1, 0.25)
    direct = math.exp(-0.25) / (1.0 - math.exp(-1.0))
    assert f(1.0) == pytest.approx(direct, rel=1e-14)


def test_lemma1_integrand_series_matches_direct_formula_at_boundary():
    # just inside the series guard the direct formula is still well
    # conditioned (1 - e^(-t) ~ 1e-4 known to ~1e-12 relative), so the
    # two evaluation paths must agree there
    z = 0.3
    for m in (1, 2, 3):
        f = rt.lemma1_integrand(m, z)
        for t in (0.99e-4, -0.99e-4):
            direct = t**m * math.exp(-z * t) / (1.0 - math.exp(-t))
            assert f(t) == pytest.approx(direct, rel=1e-10), (m, t)


def test_lemma1_integrand_negative_branch_matches_mirror_identity():
    # f(-u) = (-1)^(m+1) u^m e^(-(1-z) u) / (1 - e^(-u))
    for m in (1, 2, 3):
        z = 0.35
        f = rt.lemma1_integrand(m, z)
        for u in (0.5, 2.0, 17.0):
            expect = ((-1.0) ** (m + 1)) * u**m * math.exp(-(1.0 - z) * u) / (
                1.0 - math.exp(-u)
            )
            assert f(-u) == pytest.approx(expect, rel=1e-13), (m, u)


def test_lemma1_integrand_survives_extreme_arguments():
    f = rt.lemma1_integrand(3, 0.2)
    assert f(1e6) == 0.0
    assert f(-1e6) == 0.0
    assert math.isfinite(f(500.0))
    assert math.isfinite(f(-500.0))


def test_lemma1_integrand_validation():
    with pytest.raises(specfun.UnsupportedOrderError):
        rt.lemma1_integrand(0, 0.5)
    with pytest.raises(specfun.UnsupportedOrderError):
        rt.lemma1_integrand(4, 0.5)
    with pytest.raises(specfun.DomainError):
        rt.lemma1_integrand(1, 0.0)
    with pytest.raises(specfun.DomainError):
        rt.lemma1_integrand(1, 1.0)


# --------------------------------------------------------------- verifiers

def test_verify_lemma1_passes_default_grid():
    for m in (1, 2, 3):
        report = rt.verify_lemma1(m)
        assert report.passed, (m, report.max_abs_deviation)
        assert report.subject is rt.Subject.LEMMA1
        assert report.max_abs_deviation <= 1e-6


def test_lemma1_center_point_reproduces_pi_squared():
    outcome = integrate_bilateral(rt.lemma1_integrand(1, 0.5))
    assert outcome.converged
    assert abs(outcome.value - PI2) <= 1e-6
    # both sides land on pi^2, pinned by the partial-sum zeta oracle
    assert 2.0 * zeta_partial(2.0, 0.5) == pytest.approx(PI2, rel=1e-13)


def test_lemma1_even_order_cancels_at_center():
    outcome = integrate_bilateral(rt.lemma1_integrand(2, 0.5))
    assert outcome.converged
    assert abs(outcome.value) <= 1e-6


def test_verify_lemma2_passes_and_matches_cosecant_form():
    report = rt.verify_lemma2()
    assert report.passed, report.max_abs_deviation
    for z in rt.DEFAULT_LEMMA2_GRID:
        lhs = specfun.trigamma(1.0 - z) + specfun.trigamma(z)
        rhs = PI2 / math.sin(math.pi * z) ** 2
        assert abs(lhs - rhs) <= 1e-9 * rhs


def test_verify_lemma2_rejects_grid_outside_strip():
    with pytest.raises(ValueError):
        rt.verify_lemma2(z_grid=(0.01, 0.5))


def test_verify_lemma3_passes_and_pinpoints():
    report = rt.verify_lemma3()
    assert report.passed
    assert report.max_abs_deviation <= 1e-12
    assert len(report.grid) == 100


def test_lemma3_specific_points():
    # x = pi/4: both sides vanish; x = pi/6: both sides equal -8/3
    x = math.pi / 4.0
    lhs = 1.0 / math.cos(x) ** 2 - 1.0 / math.sin(x) ** 2
    assert abs(lhs) <= 1e-15
    x = math.pi / 6.0
    lhs = 1.0 / math.cos(x) ** 2 - 1.0 / math.sin(x) ** 2
    rhs = -4.0 * (math.cos(2 * x) / math.sin(2 * x)) / math.sin(2 * x)
    assert lhs == pytest.approx(-8.0 / 3.0, rel=1e-14)
    assert rhs == pytest.approx(-8.0 / 3.0, rel=1e-14)


def test_verify_lemma3_rejects_poles():
    with pytest.raises(ValueError):
        rt.verify_lemma3(x_grid=(0.3, math.pi / 2.0))


def test_verify_theorem_default_and_spec_grids():
    assert rt.verify_theorem().passed
    small = rt.verify_theorem(n_grid=(2.0, 3.0, 4.0), tol=1e-6)
    assert small.passed
    stretch = rt.verify_theorem(n_grid=(10.0, 100.0), tol=1e-6)
    assert stretch.passed
    lone = rt.verify_theorem(n_grid=(1.5,), tol=1e-6)
    assert lone.passed
    # the value itself: positive branch below n = 2
    assert rt.closed_form_trig(1.5) == pytest.approx(2.9243272299524024, rel=1e-12)


def test_verify_theorem_reports_nonconvergence_as_infinite_deviation():
    cfg = QuadratureConfig(abs_tol=1e-16, rel_tol=1e-16, max_level=4, max_evals=2000)
    report = rt.verify_theorem(n_grid=(3.0,), cfg=cfg)
    assert not report.passed
    assert math.isinf(report.max_abs_deviation)


def test_report_invariants_enforced():
    with pytest.raises(ValueError):
        rt.VerificationReport(
            subject=rt.Subject.LEMMA3,
            grid=(),
            max_abs_deviation=0.0,
            tolerance=1e-6,
            passed=True,
            worst_point=(0.0,),
        )
    with pytest.raises(ValueError):
        rt.VerificationReport(
            subject=rt.Subject.LEMMA3,
            grid=((0.1,),),
            max_abs_deviation=2.0,
            tolerance=1.0,
            passed=True,  # inconsistent with deviation > tolerance
            worst_point=(0.1,),
        )


# ------------------------------------------------------------- limit probe

def test_limit_probe_rows_and_residuals():
    rows = rt.limit_probe([10.0, 100.0, 1000.0])
    assert [n for n, _, _ in rows] == [10.0, 100.0, 1000.0]
    residuals = [r for _, _, r in rows]
    assert all(r > 0.0 for r in residuals)
    assert residuals[0] > residuals[1] > residuals[2]
    # scaled residual approaches trigamma(1) = pi^2/6; pinned empirically
    assert rows[2][2] == pytest.approx(1.6449397e-06, rel=1e-5)


def test_limit_probe_scaled_residual_stabilizes():
    rows = rt.limit_probe([1e3, 1e5])
    for n, _, residual in rows:
        assert abs(residual * n * n - PI2 / 6.0) <= 1e-5


def test_limit_probe_large_n_residual():
    (_, _, residual), = rt.limit_probe([1e6])
    assert abs(residual) <= 1e-11


def test_limit_probe_validation():
    with pytest.raises(ValueError):
        rt.limit_probe([])
    with pytest.raises(ValueError):
        rt.limit_probe([100.0, 10.0])
    with pytest.raises(ValueError):
        rt.limit_probe([5.0, 5.0])
    with pytest.raises(ValueError):
        rt.limit_probe([1.0, 10.0])

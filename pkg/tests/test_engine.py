import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypergeometric.engine import (
    classify,
    eval_auto,
    eval_near_unit_connection,
    eval_near_unit_zero_balanced,
    eval_series,
    gauss_extrapolated,
    gauss_theorem,
    kummer_theorem,
    pfaff,
    series_terms,
)
from hypergeometric.errors import (
    DivergenceError,
    DomainError,
    ParameterError,
    UnsupportedArgumentError,
)
from hypergeometric.records import ConvergenceClass, EvalResult, Hyp2F1Params, Route

QUADRATIC = Hyp2F1Params(0.5, 0.5, 1.0)
CUBIC = Hyp2F1Params(1.0 / 3.0, 2.0 / 3.0, 1.0)
EQUAL_THIRDS = Hyp2F1Params(1.0 / 3.0, 1.0 / 3.0, 1.0)
KUMMER_VALUE = math.gamma(0.25) ** 2 / (2.0 * math.pi) ** 1.5


def mp_hyp2f1(mp, params, z):
    return float(mp.hyp2f1(params.a, params.b, params.c, z))


# ---------------------------------------------------------------------
# Parameters and classification
# ---------------------------------------------------------------------

@pytest.mark.parametrize('c', [0.0, -1.0, -2.0])
def test_forbidden_c(c):
    with pytest.raises(ParameterError):
        Hyp2F1Params(0.5, 0.5, c)


def test_params_properties():
    params = Hyp2F1Params(0.25, 0.5, 2.0)
    assert params.s == 1.25
    assert not params.is_terminating
    assert Hyp2F1Params(-3.0, 0.5, 2.0).is_terminating


@pytest.mark.parametrize('params, z, expected', [
    (Hyp2F1Params(-2.0, 0.5, 1.5), 5.0, ConvergenceClass.TERMINATING),
    (QUADRATIC, 0.5, ConvergenceClass.ABSOLUTELY_CONVERGENT),
    (QUADRATIC, -0.99, ConvergenceClass.ABSOLUTELY_CONVERGENT),
    (Hyp2F1Params(0.5, 0.5, 2.0), 1.0, ConvergenceClass.ABSOLUTELY_CONVERGENT),
    (Hyp2F1Params(0.5, 0.5, 2.0), -1.0, ConvergenceClass.ABSOLUTELY_CONVERGENT),
    (QUADRATIC, -1.0, ConvergenceClass.CONDITIONALLY_CONVERGENT),
    (Hyp2F1Params(0.3, 0.4, 0.5), -1.0, ConvergenceClass.CONDITIONALLY_CONVERGENT),
    (QUADRATIC, 1.0, ConvergenceClass.DIVERGENT),
    (Hyp2F1Params(1.0, 1.0, 0.5), -1.0, ConvergenceClass.DIVERGENT),
    (QUADRATIC, 1.5, ConvergenceClass.DIVERGENT),
    (QUADRATIC, -2.0, ConvergenceClass.DIVERGENT),
])
def test_classify(params, z, expected):
    assert classify(params, z) is expected


# ---------------------------------------------------------------------
# Direct series
# ---------------------------------------------------------------------

def test_series_terms_start():
    terms = series_terms(QUADRATIC, 0.5)
    assert next(terms) == 1.0
    assert next(terms) == pytest.approx(0.125)
    assert next(terms) == pytest.approx(0.125 * 2.25 / 4.0 * 0.5)


def test_series_terms_stop_when_terminating():
    assert list(series_terms(Hyp2F1Params(-2.0, 1.0, 1.0), 3.0)) == [1.0, -6.0, 9.0]


def test_terminating_sum_outside_unit_disk():
    result = eval_series(Hyp2F1Params(-2.0, 1.0, 1.0), 3.0)
    assert result.value == 4.0
    assert result.route is Route.DIRECT_SERIES


def test_value_at_zero():
    result = eval_series(QUADRATIC, 0.0)
    assert result.value == 1.0
    assert result.err_estimate == 0.0


@pytest.mark.parametrize('params, z', [
    (QUADRATIC, 0.5),
    (QUADRATIC, -0.9),
    (CUBIC, 0.9),
    (EQUAL_THIRDS, -0.7),
    (Hyp2F1Params(1.5, -0.75, 2.25), 0.8),
    (Hyp2F1Params(-2.5, 3.5, -1.5), 0.3),
    (Hyp2F1Params(2.0, 3.0, 4.5), -0.6),
])
def test_series_matches_mpmath(mp, params, z):
    result = eval_series(params, z)
    reference = mp_hyp2f1(mp, params, z)
    assert result.value == pytest.approx(reference, rel=1e-13, abs=1e-14)
    assert result.route is Route.DIRECT_SERIES
    assert result.terms > 0


def test_series_error_estimate_bounds_error(mp):
    result = eval_series(CUBIC, 0.9, tol=1e-10)
    assert result.err_estimate <= 1e-10
    assert abs(result.value - mp_hyp2f1(mp, CUBIC, 0.9)) <= 1e-10


def test_divergent_series():
    with pytest.raises(DivergenceError):
        eval_series(QUADRATIC, 1.0)
    with pytest.raises(DivergenceError):
        eval_series(QUADRATIC, -1.5)


# ---------------------------------------------------------------------
# Boundary |z| = 1
# ---------------------------------------------------------------------

def test_gauss_theorem_route():
    params = Hyp2F1Params(0.5, 0.5, 2.0)
    result = eval_series(params, 1.0)
    assert result.route is Route.CLOSED_FORM
    assert result.value == pytest.approx(4.0 / math.pi, rel=1e-13)


def test_gauss_theorem_requires_positive_excess():
    with pytest.raises(DomainError):
        gauss_theorem(QUADRATIC)


def test_gauss_theorem_with_vanishing_gamma_ratio():
    # 2F1(a, b; a; 1) = 0 for b < 0; 1/Gamma(c - a) sits at a pole
    assert gauss_theorem(Hyp2F1Params(2.0, -0.5, 2.0)) == 0.0
    assert gauss_theorem(Hyp2F1Params(-1.0, 0.5, 1.5)) == pytest.approx(1.0 - 0.5 / 1.5, rel=1e-14)


def test_kummer_theorem_arctan():
    # 2F1(1, 1/2; 3/2; -1) = arctan(1)
    assert kummer_theorem(1.0, 0.5) == pytest.approx(math.pi / 4.0, rel=1e-14)


def test_kummer_route_at_minus_one():
    result = eval_series(QUADRATIC, -1.0)
    assert result.route is Route.CLOSED_FORM
    assert result.value == pytest.approx(KUMMER_VALUE, rel=1e-13)


def test_kummer_agrees_with_averaged_summation():
    summed = eval_series(QUADRATIC, -1.0, tol=1e-12, closed_forms=False)
    assert summed.route is Route.DIRECT_SERIES
    assert summed.value == pytest.approx(KUMMER_VALUE, rel=1e-10)


def test_averaged_summation_conditionally_convergent(mp):
    params = Hyp2F1Params(0.3, 0.4, 0.5)
    result = eval_series(params, -1.0, tol=1e-11)
    assert result.value == pytest.approx(mp_hyp2f1(mp, params, -1.0), rel=1e-9)


def test_averaged_summation_absolutely_convergent(mp):
    params = Hyp2F1Params(0.5, 0.25, 1.5)
    result = eval_series(params, -1.0, tol=1e-12)
    assert result.value == pytest.approx(mp_hyp2f1(mp, params, -1.0), rel=1e-10)


# ---------------------------------------------------------------------
# Near z = 1
# ---------------------------------------------------------------------

@pytest.mark.parametrize('params', [QUADRATIC, CUBIC, Hyp2F1Params(0.75, 1.25, 2.0)])
@pytest.mark.parametrize('w', [0.04, 1e-3, 1e-6, 1e-10])
def test_zero_balanced_matches_mpmath(mp, params, w):
    z = 1.0 - w
    result = eval_near_unit_zero_balanced(params, z, complement=w)
    reference = float(mp.hyp2f1(params.a, params.b, params.c, 1 - mp.mpf(w)))
    assert result.value == pytest.approx(reference, rel=1e-12)
    assert result.route is Route.NEAR_UNIT_CONNECTION


def test_zero_balanced_rejects_bad_input():
    with pytest.raises(DomainError):
        eval_near_unit_zero_balanced(QUADRATIC, 0.3)
    with pytest.raises(DomainError):
        eval_near_unit_zero_balanced(EQUAL_THIRDS, 0.99)


@pytest.mark.parametrize('params, z', [
    (EQUAL_THIRDS, 0.99),
    (EQUAL_THIRDS, 0.999999),
    (Hyp2F1Params(0.25, 0.5, 2.2), 0.97),
    (Hyp2F1Params(0.5, 1.2, 1.5), 0.96),
])
def test_connection_matches_mpmath(mp, params, z):
    result = eval_near_unit_connection(params, z)
    assert result.value == pytest.approx(mp_hyp2f1(mp, params, z), rel=1e-11)
    assert result.route is Route.NEAR_UNIT_CONNECTION


def test_connection_rejects_integer_excess():
    with pytest.raises(DomainError):
        eval_near_unit_connection(Hyp2F1Params(0.5, 0.5, 2.0), 0.99)


# ---------------------------------------------------------------------
# Pfaff continuation and dispatch
# ---------------------------------------------------------------------

def test_pfaff_transform():
    params, zeta, prefactor = pfaff(CUBIC, -3.0)
    assert params.a == 1.0 / 3.0
    assert params.b == pytest.approx(1.0 / 3.0, rel=1e-15)
    assert params.c == 1.0
    assert zeta == 0.75
    assert prefactor == pytest.approx(4.0 ** (-1.0 / 3.0))


@settings(max_examples=200)
@given(st.floats(min_value=-50.0, max_value=0.9),
       st.floats(min_value=-2.0, max_value=2.0),
       st.floats(min_value=0.1, max_value=3.0))
def test_pfaff_is_an_involution(z, a, c):
    params = Hyp2F1Params(a, 0.5, c)
    once, zeta, first = pfaff(params, z)
    twice, back, second = pfaff(once, zeta)
    assert twice.a == params.a and twice.c == params.c
    assert twice.b == pytest.approx(params.b, abs=1e-15)
    assert back == pytest.approx(z, rel=1e-12, abs=1e-15)
    assert first * second == pytest.approx(1.0, rel=1e-12)


def test_pfaff_domain():
    with pytest.raises(DomainError):
        pfaff(QUADRATIC, 1.0)


@pytest.mark.parametrize('params, z, route', [
    (QUADRATIC, 0.3, Route.DIRECT_SERIES),
    (CUBIC, -0.95, Route.DIRECT_SERIES),
    (CUBIC, 0.99, Route.NEAR_UNIT_CONNECTION),
    (EQUAL_THIRDS, 0.999, Route.NEAR_UNIT_CONNECTION),
    (QUADRATIC, -1.0, Route.PFAFF_CONTINUATION),
    (CUBIC, -2.549038105676658, Route.PFAFF_CONTINUATION),
    (QUADRATIC, -5.0, Route.PFAFF_CONTINUATION),
    (CUBIC, -30.0, Route.PFAFF_CONTINUATION),
    (Hyp2F1Params(0.2, 0.7, 1.3), -100.0, Route.PFAFF_CONTINUATION),
])
def test_eval_auto_routes_and_values(mp, params, z, route):
    result = eval_auto(params, z)
    assert result.route is route
    assert result.value == pytest.approx(mp_hyp2f1(mp, params, z), rel=1e-12)


def test_eval_auto_terminating_anywhere():
    result = eval_auto(Hyp2F1Params(-2.0, 1.0, 1.0), -7.0)
    assert result.value == 1.0 + 14.0 + 49.0


@pytest.mark.parametrize('z', [1.0, 1.5, 10.0])
def test_eval_auto_unsupported(z):
    with pytest.raises(UnsupportedArgumentError):
        eval_auto(QUADRATIC, z)


def test_eval_result_float():
    assert float(EvalResult(1.25, 0.0, Route.AGM)) == 1.25


# ---------------------------------------------------------------------
# Cross-route consistency
# ---------------------------------------------------------------------

@pytest.mark.parametrize('c', [1.5, 2.0, 2.7])
def test_extrapolated_series_meets_gauss_theorem(c):
    # s = c - 1 covers 0.5, 1 and 1.7
    params = Hyp2F1Params(1.0 / 3.0, 2.0 / 3.0, c)
    result = gauss_extrapolated(params)
    assert result.value == pytest.approx(gauss_theorem(params), rel=1e-6)
    assert result.route == Route.DIRECT_SERIES


def test_extrapolated_terminating_series_is_exact():
    params = Hyp2F1Params(-3.0, 0.5, 2.0)
    assert gauss_extrapolated(params).value == pytest.approx(gauss_theorem(params), rel=1e-14)


@pytest.mark.parametrize('params, levels', [(QUADRATIC, 8), (Hyp2F1Params(1.0, 1.0, 1.5), 8),
                                            (Hyp2F1Params(0.5, 0.5, 3.0), 1)])
def test_extrapolation_domain(params, levels):
    with pytest.raises(DomainError):
        gauss_extrapolated(params, levels)


@pytest.mark.parametrize('params', [QUADRATIC, CUBIC, Hyp2F1Params(0.25, 0.75, 1.0)])
@pytest.mark.parametrize('z', [0.55, 0.65, 0.75, 0.85, 0.95])
def test_series_and_zero_balanced_routes_agree(params, z):
    direct = eval_series(params, z)
    expanded = eval_near_unit_zero_balanced(params, z)
    assert expanded.value == pytest.approx(direct.value, rel=1e-13)


@settings(max_examples=200)
@given(st.floats(min_value=-0.9, max_value=0.45),
       st.floats(min_value=-1.5, max_value=1.5),
       st.floats(min_value=-1.5, max_value=1.5),
       st.floats(min_value=0.5, max_value=3.0))
def test_pfaff_preserves_values(z, a, b, c):
    params = Hyp2F1Params(a, b, c)
    new_params, zeta, prefactor = pfaff(params, z)
    direct = eval_series(params, z).value
    continued = prefactor * eval_series(new_params, zeta).value
    assert continued == pytest.approx(direct, rel=1e-11, abs=1e-11)


def test_positive_complement_wins_over_rounded_argument(mp):
    # beta_tilde(p) rounds to 1 + 2^-52 near p = 1 while its exact complement stays positive
    complement = 1.7e-16
    result = eval_auto(CUBIC, 1.0 + 2.0 ** -52, complement=complement)
    assert result.route == Route.NEAR_UNIT_CONNECTION
    expected = float(mp.hyp2f1(mp.mpf(1) / 3, mp.mpf(2) / 3, 1, 1 - mp.mpf(complement)))
    assert result.value == pytest.approx(expected, rel=1e-13)


def test_rounded_argument_without_complement_is_rejected():
    with pytest.raises(UnsupportedArgumentError):
        eval_auto(CUBIC, 1.0 + 2.0 ** -52)
    with pytest.raises(UnsupportedArgumentError):
        eval_auto(CUBIC, 0.99, complement=0.0)

"""Series evaluators: two-parameter function, Wright family, trig split,
Borel route, integer derivatives."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from mittleff import (
    ConvergenceError,
    DomainError,
    EnvelopeError,
    MLParams,
    deriv_ml_integer,
    e_sab,
    gauss_laguerre_rule,
    laguerre_exp,
    laguerre_limit_term,
    ml_e,
    ml_trig,
    ml_via_borel,
    wright,
)

RULE64 = gauss_laguerre_rule(64)


@pytest.mark.parametrize("alpha,beta", [(0.5, 1.0), (0.8, 1.5), (1.0, 1.0), (1.5, 1.0), (2.0, 2.0)])
@pytest.mark.parametrize("x", [-3.0, -1.0, 0.0, 0.5, 2.0])
def test_ml_matches_oracle(alpha, beta, x):
    got = ml_e(MLParams(alpha, beta), x)
    want = oracles.as_float(oracles.ml(alpha, beta, x))
    assert oracles.rel_err(got.value, want) < 1e-12


def test_exponential_reduction_grid():
    for x in np.linspace(-10.0, 10.0, 101):
        got = ml_e(MLParams(1.0, 1.0), float(x)).value
        assert abs(got - math.exp(x)) <= 1e-12 * math.exp(x)


def test_two_parameter_identity():
    for x in np.linspace(-5.0, 5.0, 21):
        x = float(x)
        if x == 0.0:
            continue
        got = ml_e(MLParams(1.0, 2.0), x).value
        want = (math.exp(x) - 1.0) / x
        assert oracles.rel_err(got, want) < 1e-12


def test_value_at_zero_is_reciprocal_gamma():
    for beta in (0.5, 1.0, 2.0, 3.7):
        got = ml_e(MLParams(0.9, beta), 0.0).value
        assert oracles.rel_err(got, 1.0 / math.gamma(beta)) < 1e-14


def test_est_error_covers_true_error():
    for alpha, beta, x in [(0.7, 1.0, -4.0), (1.2, 0.8, 2.5), (0.5, 1.0, -5.0)]:
        got = ml_e(MLParams(alpha, beta), x)
        want = oracles.as_float(oracles.ml(alpha, beta, x))
        assert abs(got.value - want) <= 10.0 * got.est_error + 5e-16 * max(1.0, abs(want))


def test_ml_rejects_bad_parameters():
    with pytest.raises(DomainError):
        MLParams(-1.0, 1.0)
    with pytest.raises(DomainError):
        MLParams(0.5, 0.0)
    with pytest.raises(DomainError):
        ml_e(MLParams(1.0, 1.0), float("nan"))


def test_small_alpha_large_argument_refused():
    with pytest.raises(ConvergenceError):
        ml_e(MLParams(0.05, 1.0), 40.0)


@given(
    st.floats(min_value=0.5, max_value=1.0),
    st.floats(min_value=0.0, max_value=6.0),
    st.floats(min_value=0.0, max_value=6.0),
)
@settings(max_examples=40, deadline=None)
def test_negative_axis_monotone_in_unit_range(alpha, x_lo, x_hi):
    # E_alpha(-x) is completely monotone for alpha in (0, 1]
    lo, hi = sorted((x_lo, x_hi))
    p = MLParams(alpha, 1.0)
    v_lo = ml_e(p, -lo).value
    v_hi = ml_e(p, -hi).value
    assert 0.0 < v_hi <= v_lo + 1e-12 <= 1.0 + 1e-12


@pytest.mark.parametrize("alpha", [0.5, 0.8, 1.0])
@pytest.mark.parametrize("x", [0.3, 1.0, 2.0])
def test_trig_reassembles_complex_series(alpha, x):
    c, s = ml_trig(alpha, x)
    want = oracles.ml_complex(alpha, 1.0, 1j * x)
    assert abs(c - float(want.real)) < 1e-10
    assert abs(s - float(want.imag)) < 1e-10


def test_trig_reduces_to_circular():
    for x in (0.25, 1.0, 3.0):
        c, s = ml_trig(1.0, x)
        assert abs(c - math.cos(x)) < 1e-13
        assert abs(s - math.sin(x)) < 1e-13


@pytest.mark.parametrize(
    "alpha,mu,x",
    [(1.0, 0.0, 0.7), (1.0, 0.0, -2.0), (0.5, 0.0, 1.3), (0.5, 1.5, -0.8), (2.0, 2.0, 3.0)],
)
def test_wright_matches_oracle(alpha, mu, x):
    got = wright(alpha, mu, x)
    want = oracles.as_float(oracles.wright(alpha, mu, x))
    assert oracles.rel_err(got.value, want) < 1e-12


def test_laguerre_exp_is_wright_bit_for_bit():
    for x in (-2.0, -0.5, 0.0, 1.0, 3.0):
        assert laguerre_exp(x).value == wright(1.0, 0.0, x).value


def test_laguerre_napier_number():
    r = laguerre_exp(1.0)
    assert abs(r.value - 2.279585302336067) < 1e-12


def test_laguerre_limit_term_small_cases():
    # (1 (+)_l z)^n = sum C(n,r)^2 z^r; n = 2 gives 1 + 4z + z^2
    assert laguerre_limit_term(0.5, 2) == pytest.approx(1.0 + 2.0 + 0.25, rel=1e-15)
    assert laguerre_limit_term(0.0, 7) == 1.0


def test_laguerre_limit_term_approaches_laguerre_exp():
    # C(n,r)^2 (x/n^2)^r -> x^r/(r!)^2 termwise, so the compound converges
    x = 1.0
    target = laguerre_exp(x).value
    err = [abs(laguerre_limit_term(x / n**2, n) - target) for n in (50, 100, 200, 400)]
    assert err[-1] < err[0]
    assert err[-1] < 5e-3


def test_laguerre_limit_term_log_space_branch():
    n = 400
    got = laguerre_limit_term(1.0 / n**2, n)
    exact = math.fsum(float(math.comb(n, r)) ** 2 * (1.0 / n**2) ** r for r in range(n + 1))
    assert oracles.rel_err(got, exact) < 1e-10


@pytest.mark.parametrize(
    "s,alpha,beta,xi",
    [(0, 1.2, 1.0, -3.0), (1, 1.2, 1.0, 1.0), (0, 0.8, 2.0, -0.5), (2, 0.7, 2.0, -2.0), (3, 0.9, 2.0, 0.5)],
)
def test_e_sab_matches_oracle(s, alpha, beta, xi):
    got = e_sab(s, alpha, beta, xi)
    want = oracles.as_float(oracles.e_sab(s, alpha, beta, xi))
    assert oracles.rel_err(got.value, want) < 1e-11


def test_e_sab_gate():
    # needs alpha > 1/beta for the gamma-ratio terms to decay
    with pytest.raises(DomainError):
        e_sab(0, 1.0, 1.0, 0.5)
    with pytest.raises(DomainError):
        e_sab(0, 0.5, 2.0, 0.5)


def test_borel_agrees_with_series_on_envelope_grid():
    for alpha in (0.5, 0.65, 0.8, 0.9, 1.0):
        p = MLParams(alpha, 1.0)
        for x in (-2.0, -1.0, 0.5, 1.0, 2.0):
            got = ml_via_borel(p, x, RULE64)
            want = ml_e(p, x).value
            assert oracles.rel_err(got, want) < 1e-8


def test_borel_envelope_refusal():
    with pytest.raises(EnvelopeError):
        ml_via_borel(MLParams(1.0, 1.0), 6.0, RULE64)
    with pytest.raises(EnvelopeError):
        ml_via_borel(MLParams(1.3, 1.0), 1.0, RULE64)


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("alpha", [0.5, 1.0])
@pytest.mark.parametrize("x", [-1.0, 0.0, 0.5])
def test_integer_derivative_matches_termwise(m, alpha, x):
    got = deriv_ml_integer(m, alpha, x, RULE64)
    want = oracles.as_float(oracles.ml_deriv(m, alpha, x))
    assert abs(got - want) <= 1e-8 * max(1.0, abs(want))

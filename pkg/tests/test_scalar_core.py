"""Gamma helpers and the Gauss-Laguerre rule factory."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from mittleff import (
    DomainError,
    QuadratureRule,
    gauss_laguerre_rule,
    log_gamma,
    reciprocal_gamma,
)


def test_reciprocal_gamma_vanishes_at_poles():
    for k in range(6):
        assert reciprocal_gamma(-float(k)) == 0.0


def test_reciprocal_gamma_hits_factorials():
    for n in range(15):
        assert oracles.rel_err(reciprocal_gamma(n + 1.0), 1.0 / math.factorial(n)) < 1e-14


def test_reciprocal_gamma_negative_non_integer():
    for x in (-0.5, -1.5, -2.5, -7.3):
        assert oracles.rel_err(reciprocal_gamma(x), 1.0 / math.gamma(x)) < 1e-13


def test_log_gamma_matches_stdlib():
    for x in (0.1, 0.5, 1.5, 10.0, 50.0, 170.0):
        assert abs(log_gamma(x) - math.lgamma(x)) <= 1e-12 * max(1.0, abs(math.lgamma(x)))


def test_log_gamma_rejects_non_positive():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-3.2)


def test_product_identity():
    for x in (0.1, 0.5, 1.5, 10.0, 50.0):
        assert abs(reciprocal_gamma(x) * math.exp(log_gamma(x)) - 1.0) < 1e-12


@given(st.floats(min_value=1e-3, max_value=29.0))
def test_recurrence_steps_down(x):
    lhs = reciprocal_gamma(x + 1.0)
    rhs = reciprocal_gamma(x) / x
    assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), 1e-300)


@pytest.mark.parametrize("n", [2, 8, 32])
def test_laguerre_rule_integrates_monomials(n):
    rule = gauss_laguerre_rule(n)
    s = np.asarray(rule.nodes)
    w = np.asarray(rule.weights)
    # exact for polynomial degree up to 2n-1
    for k in range(2 * n):
        assert oracles.rel_err(float(np.sum(w * s**k)), float(math.factorial(k))) < 1e-10


def test_laguerre_rule_structure():
    rule = gauss_laguerre_rule(16)
    nodes = list(rule.nodes)
    assert nodes == sorted(nodes) and nodes[0] > 0.0
    assert all(w > 0.0 for w in rule.weights)
    assert rule.order == 16
    assert abs(math.fsum(rule.weights) - 1.0) <= 1e-12


def test_laguerre_rule_large_order():
    # the polished branch; weights must still normalize
    rule = gauss_laguerre_rule(96)
    assert rule.order == 96
    s = np.asarray(rule.nodes)
    w = np.asarray(rule.weights)
    assert oracles.rel_err(float(np.sum(w * s**5)), 120.0) < 1e-10


def test_laguerre_rule_rejects_bad_order():
    with pytest.raises(DomainError):
        gauss_laguerre_rule(0)


def test_quadrature_rule_validation():
    with pytest.raises(DomainError):
        QuadratureRule(nodes=(1.0, 0.5), weights=(0.5, 0.5))
    with pytest.raises(DomainError):
        QuadratureRule(nodes=(1.0, 2.0), weights=(0.5, 0.4))
    with pytest.raises(DomainError):
        QuadratureRule(nodes=(1.0,), weights=())

"""Composition algebra for Mittag-Leffler series.

Modified binomial coefficients, composition powers, moment functionals
for the two umbral operators, truncated semigroup products, and the
closed-form integrals they unlock.  All gamma ratios go through
log-gamma differences; raw gamma quotients overflow once the composite
index passes ~85.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import mpmath as mp

from .errors import ConvergenceError, DomainError
from .mittag import SeriesResult, _check_ml_envelope
from .scalar_core import log_gamma, reciprocal_gamma

__all__ = [
    "UmbralKind",
    "UmbralMoment",
    "umbral_c_moment",
    "umbral_d_moment",
    "ml_binomial",
    "ml_compose_power",
    "laguerre_binomial_power",
    "ml_semigroup_sum",
    "ml_gaussian_integral",
    "ml_stretched_integral",
]


class UmbralKind(Enum):
    c_operator = "c_operator"
    d_operator = "d_operator"


@dataclass(frozen=True)
class UmbralMoment:
    """Moment functional of an umbral operator.

    c_operator sends order mu to 1/G(mu+1) and ignores (alpha, beta);
    d_operator sends order kappa to G(kappa+1)/G(alpha kappa + beta).
    The one-parameter form fixes beta = 1.
    """

    kind: UmbralKind
    alpha: float = 1.0
    beta: float = 1.0

    def at(self, order: float) -> float:
        if self.kind is UmbralKind.c_operator:
            return umbral_c_moment(order)
        return umbral_d_moment(order, self.alpha, self.beta)


def umbral_c_moment(mu: float) -> float:
    """Vacuum moment of the c operator: 1/G(mu + 1), total in mu."""
    if not (isinstance(mu, (int, float)) and math.isfinite(mu)):
        raise DomainError(f"mu must be a finite real, got {mu!r}")
    return reciprocal_gamma(float(mu) + 1.0)


def umbral_d_moment(kappa: float, alpha: float, beta: float) -> float:
    """Vacuum moment of the d operator: G(kappa+1)/G(alpha kappa + beta).

    Zero where alpha*kappa + beta hits a non-positive integer (gamma
    pole in the denominator).
    """
    if not (isinstance(kappa, (int, float)) and math.isfinite(kappa)):
        raise DomainError(f"kappa must be a finite real, got {kappa!r}")
    kappa = float(kappa)
    if kappa <= -1.0:
        raise DomainError(f"kappa must exceed -1, got {kappa}")
    arg = alpha * kappa + beta
    if arg > 0.0:
        return math.exp(math.lgamma(kappa + 1.0) - math.lgamma(arg))
    rg = reciprocal_gamma(arg)
    if rg == 0.0:
        return 0.0
    sign = 1.0 if rg > 0.0 else -1.0
    return sign * math.exp(math.lgamma(kappa + 1.0) + math.log(abs(rg)))


def _validate_nr(n, r) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    if not isinstance(r, int) or isinstance(r, bool):
        raise DomainError(f"r must be an integer, got {r!r}")
    if not 0 <= r <= n:
        raise IndexError(f"r must lie in [0, {n}], got {r}")


def _validate_ab(alpha: float, beta: float) -> None:
    if not (
        isinstance(alpha, (int, float))
        and isinstance(beta, (int, float))
        and math.isfinite(alpha)
        and math.isfinite(beta)
        and alpha > 0.0
        and beta > 0.0
    ):
        raise DomainError(f"need alpha > 0 and beta > 0, got ({alpha!r}, {beta!r})")


def ml_binomial(n: int, r: int, alpha: float, beta: float) -> float:
    """G(alpha n + beta) / (G(alpha(n-r) + beta) G(alpha r + beta)).

    Reduces to the ordinary binomial coefficient at alpha = beta = 1
    (served exactly from integer arithmetic there).
    """
    _validate_nr(n, r)
    _validate_ab(alpha, beta)
    if alpha == 1.0 and beta == 1.0:
        return float(math.comb(n, r))
    return math.exp(
        log_gamma(alpha * n + beta)
        - log_gamma(alpha * (n - r) + beta)
        - log_gamma(alpha * r + beta)
    )


def ml_compose_power(x: float, y: float, n: int, alpha: float, beta: float) -> float:
    """n-th composition power: sum_r ml_binomial(n,r) x^(n-r) y^r."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    _validate_ab(alpha, beta)
    x = float(x)
    y = float(y)
    return math.fsum(
        ml_binomial(n, r, alpha, beta) * x ** (n - r) * y**r for r in range(n + 1)
    )


def laguerre_binomial_power(x: float, y: float, n: int) -> float:
    """sum_r C(n,r)^2 x^(n-r) y^r, the squared-binomial compound.

    Exact integer coefficients through n = 300; beyond that C(n,r)^2
    leaves the double range and the terms move to log space.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    x = float(x)
    y = float(y)
    if n <= 300:
        return math.fsum(
            float(math.comb(n, r)) ** 2 * x ** (n - r) * y**r for r in range(n + 1)
        )
    lg_n1 = math.lgamma(n + 1)
    terms = []
    for r in range(n + 1):
        xf = x ** (n - r) if x != 0.0 else (1.0 if r == n else 0.0)
        yf = y**r if y != 0.0 else (1.0 if r == 0 else 0.0)
        if xf == 0.0 or yf == 0.0:
            continue
        ln_c = lg_n1 - math.lgamma(r + 1) - math.lgamma(n - r + 1)
        terms.append(math.copysign(1.0, xf) * math.copysign(1.0, yf) * math.exp(
            2.0 * ln_c + math.log(abs(xf)) + math.log(abs(yf))
        ))
    return math.fsum(terms)


def ml_semigroup_sum(
    x: float, y: float, alpha: float, beta: float, n_max: int
) -> SeriesResult:
    """Truncated sum_n ml_compose_power(x,y,n)/G(alpha n + beta).

    Term n collapses algebraically to the order-n Cauchy term of the
    product of the two defining series, so the sum tends to
    ml_e(x)*ml_e(y) as n_max grows; for beta = 1 that is the semigroup
    identity, for other beta it is reported as numerically observed.
    The whole accumulation runs in scaled precision because the
    intermediate terms can dwarf the limit for negative arguments.
    Instead of raising, a stalled tail is reported via converged=False.
    """
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise DomainError(f"n_max must be a positive integer, got {n_max!r}")
    if n_max > 200:
        raise DomainError(f"n_max capped at 200, got {n_max}")
    _validate_ab(alpha, beta)
    x = float(x)
    y = float(y)
    _check_ml_envelope(alpha, abs(x), "ml_semigroup_sum")
    _check_ml_envelope(alpha, abs(y), "ml_semigroup_sum")

    # worst intermediate magnitude ~ e^(|x|^(1/a)) e^(|y|^(1/a))
    spread = abs(x) ** (1.0 / alpha) + abs(y) ** (1.0 / alpha)
    dps = int(spread / math.log(10.0)) + 40
    with mp.workdps(dps):
        am = mp.mpf(alpha)
        bm = mp.mpf(beta)
        rg = [mp.rgamma(am * k + bm) for k in range(n_max + 1)]
        ax = [mp.mpf(x) ** k * rg[k] for k in range(n_max + 1)]
        by = [mp.mpf(y) ** k * rg[k] for k in range(n_max + 1)]
        total = mp.mpf(0)
        last_inc = mp.mpf(0)
        for n in range(n_max + 1):
            inc = mp.fsum(ax[n - r] * by[r] for r in range(n + 1))
            total += inc
            last_inc = inc
        value = float(total)
        tail = abs(float(last_inc))
    converged = tail <= 1e-10 * max(1.0, abs(value))
    return SeriesResult(
        value=value, est_error=tail, terms_used=n_max + 1, converged=converged
    )


def ml_gaussian_integral(alpha: float, beta: float) -> float:
    """Full-line integral of E_{alpha,beta}(-x^2): pi / G(beta - alpha/2)."""
    _validate_ab(alpha, beta)
    return math.pi * reciprocal_gamma(beta - 0.5 * alpha)


def ml_stretched_integral(alpha: float, gamma: float) -> float:
    """Half-line integral of E_{alpha,1}(-x^gamma).

    Closed form pi/(gamma sin(pi/gamma)) / G(1 - alpha/gamma), valid for
    gamma > 1 with alpha/gamma not a positive integer (the reciprocal
    gamma vanishes there and the formula degenerates).
    """
    if not (isinstance(alpha, (int, float)) and math.isfinite(alpha) and alpha > 0.0):
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    if not (isinstance(gamma, (int, float)) and math.isfinite(gamma) and gamma > 1.0):
        raise DomainError(f"gamma must exceed 1, got {gamma!r}")
    q = alpha / gamma
    if float(q).is_integer():
        raise DomainError(
            f"alpha/gamma = {q} is a positive integer; the closed form degenerates"
        )
    return (
        math.pi / (gamma * math.sin(math.pi / gamma)) * reciprocal_gamma(1.0 - q)
    )

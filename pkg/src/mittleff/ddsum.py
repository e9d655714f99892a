"""Double-double arithmetic for ill-conditioned alternating series.

A double-double ("dd") number is an unevaluated sum hi + lo of two floats
with |lo| <= ulp(hi)/2, giving roughly 32 significant decimal digits.  The
primitives below are the classical error-free transformations (Knuth's
two_sum, Dekker's split/product); everything else is built from them.

math.fma is not available on the Python versions we target, so two_prod
uses Dekker's splitting instead of an fma-based remainder.
"""

from __future__ import annotations

import math

# Unit roundoff of the dd format: 2**-104.
DD_EPS = 2.0 ** -104

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    """Return (s, e) with s = fl(a+b) and a + b = s + e exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def fast_two_sum(a: float, b: float) -> tuple[float, float]:
    """two_sum specialised to |a| >= |b|."""
    s = a + b
    e = b - (s - a)
    return s, e


def _split(a: float) -> tuple[float, float]:
    # Dekker: a = hi + lo with hi, lo each holding at most 26 bits.
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    """Return (p, e) with p = fl(a*b) and a * b = p + e exactly."""
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def dd_add(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    s, e = two_sum(x[0], y[0])
    e += x[1] + y[1]
    return fast_two_sum(s, e)


def dd_add_d(x: tuple[float, float], a: float) -> tuple[float, float]:
    s, e = two_sum(x[0], a)
    e += x[1]
    return fast_two_sum(s, e)


def dd_neg(x: tuple[float, float]) -> tuple[float, float]:
    return -x[0], -x[1]


def dd_mul(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    p, e = two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    return fast_two_sum(p, e)


def dd_mul_d(x: tuple[float, float], a: float) -> tuple[float, float]:
    p, e = two_prod(x[0], a)
    e += x[1] * a
    return fast_two_sum(p, e)


def dd_div(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    # One Newton step on the quotient; accurate to dd precision when the
    # inputs are well scaled, which is all the series kernels need.
    q1 = x[0] / y[0]
    p = dd_mul_d(y, q1)
    r = dd_add(x, dd_neg(p))
    q2 = (r[0] + r[1]) / y[0]
    return fast_two_sum(q1, q2)


def dd_from_float(a: float) -> tuple[float, float]:
    return a, 0.0


def dd_to_float(x: tuple[float, float]) -> float:
    return x[0] + x[1]


def dd_abs(x: tuple[float, float]) -> tuple[float, float]:
    if x[0] < 0.0 or (x[0] == 0.0 and x[1] < 0.0):
        return dd_neg(x)
    return x


class DDAccumulator:
    """Running dd sum that also tracks the largest |term| seen.

    The max-term magnitude is what fixes the rounding-error floor of an
    alternating series: after massive cancellation the absolute error is
    roughly maxterm * DD_EPS * n, so the accumulator keeps it on hand for
    error estimates.
    """

    __slots__ = ("hi", "lo", "max_abs_term", "n_terms")

    def __init__(self) -> None:
        self.hi = 0.0
        self.lo = 0.0
        self.max_abs_term = 0.0
        self.n_terms = 0

    def add(self, term: tuple[float, float]) -> None:
        self.hi, self.lo = dd_add((self.hi, self.lo), term)
        t = abs(term[0])
        if t > self.max_abs_term:
            self.max_abs_term = t
        self.n_terms += 1

    def value(self) -> float:
        return self.hi + self.lo

    def dd_value(self) -> tuple[float, float]:
        return self.hi, self.lo

    def rounding_floor(self) -> float:
        """Absolute rounding-error bound for the accumulated sum."""
        return self.max_abs_term * DD_EPS * max(self.n_terms, 1)


def float_sum(values) -> float:
    """Exact-to-rounding sum of ordinary floats (thin wrapper, one name)."""
    return math.fsum(values)

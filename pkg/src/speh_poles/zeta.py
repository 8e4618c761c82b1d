"""Numeric stand-in for L(s): the completed Riemann zeta function, c = 1.

Lambda(s) = pi^(-s/2) Gamma(s/2) zeta(s) satisfies every property the symbolic
model relies on: Lambda(s) = Lambda(1-s), simple poles at 0 and 1, no other
poles.  zeta is summed here by Euler-Maclaurin; Gamma and Bernoulli numbers
come from mpmath.  The functional equation is never used to evaluate, so
checking it numerically is a genuine test.
"""

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DomainError, IndeterminateOrderError, PoleProximityError

POLE_GUARD = 1e-12
ORDER_POINTS = (1e-2, 1e-3, 1e-4)


@dataclass(frozen=True)
class NumericModel:
    precision: int = 30
    c: int = 1

    def __post_init__(self):
        if self.c != 1:
            raise DomainError("only the c = 1 instance is modelled numerically")
        if self.precision < 10:
            raise DomainError("precision below 10 digits is not supported")


DEFAULT_MODEL = NumericModel()


def zeta_em(s, digits):
    """zeta(s) for real s != 1 by Euler-Maclaurin summation.

    With N >= |s| + 30 the ratio of consecutive correction terms stays below
    about 0.1, so ``digits`` correction terms reach the requested accuracy.
    """
    s = mpmath.mpf(s)
    N = int(abs(s)) + 30
    M = digits
    total = mpmath.fsum(mpmath.mpf(n) ** (-s) for n in range(1, N))
    Nf = mpmath.mpf(N)
    total += Nf ** (1 - s) / (s - 1) + Nf ** (-s) / 2
    rising = s  # s (s+1) ... (s+2k-2)
    power = Nf ** (-s - 1)
    for k in range(1, M + 1):
        total += mpmath.bernoulli(2 * k) / mpmath.factorial(2 * k) * rising * power
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power /= Nf * Nf
    return total


def _lambda(s, digits):
    s = mpmath.mpf(s)
    half = s / 2
    if half <= 0 and half == mpmath.floor(half):
        # trivial zero of zeta against a pole of Gamma: take the limit
        k = int(-half)
        dz = mpmath.diff(lambda x: zeta_em(x, digits), s)
        return mpmath.pi ** (-half) * 2 * (-1) ** k / mpmath.factorial(k) * dz
    return mpmath.pi ** (-half) * mpmath.gamma(half) * zeta_em(s, digits)


def to_mpf(x):
    """mpf from int, float, str, Fraction or mpf at the current precision."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def eval_L(s, model=DEFAULT_MODEL):
    """Lambda(s) at real s, as an mpf at the model precision.

    Pass strings or Fractions when the argument must be exact beyond double
    precision.
    """
    with mpmath.workdps(model.precision + 10):
        s = to_mpf(s)
        if abs(s) < POLE_GUARD or abs(s - 1) < POLE_GUARD:
            raise PoleProximityError(f"s={mpmath.nstr(s, 15)} is within {POLE_GUARD} of a pole of L")
        return +_lambda(s, model.precision)


def eval_expr(e, t, model=DEFAULT_MODEL):
    """Evaluate an expression at real t with c = 1."""
    with mpmath.workdps(model.precision + 10):
        t = to_mpf(t)
        total = mpmath.mpf(0)
        cache = {}
        for term in e.terms:
            val = mpmath.mpf(term.coeff.numerator) / term.coeff.denominator
            for (k, slope), p in term.factors:
                key = (k, slope)
                if key not in cache:
                    cache[key] = eval_L(k + slope * t, model)
                val *= cache[key] ** p
            total += val
        return +total


def estimate_order(e, model=DEFAULT_MODEL, points=ORDER_POINTS):
    """Pole order from successive ratios |f(t_{i+1})| / |f(t_i)| at decades in t."""
    if e.is_zero():
        raise DomainError("the zero expression has no order")
    vals = [abs(eval_expr(e, t, model)) for t in points]
    if any(v == 0 for v in vals):
        raise IndeterminateOrderError("expression evaluated to exactly zero", points)
    ests = []
    for (t0, v0), (t1, v1) in zip(zip(points, vals), zip(points[1:], vals[1:])):
        ratio = float(mpmath.log(v1 / v0) / mpmath.log(mpmath.mpf(t0) / t1))
        ests.append(ratio)
    orders = [round(x) for x in ests]
    if len(set(orders)) != 1:
        raise IndeterminateOrderError(
            f"ratio fits disagree: {', '.join(f'{x:.3f}' for x in ests)}", points
        )
    return orders[0]


def residue_estimate(t="1e-10", model=DEFAULT_MODEL):
    """t * Lambda(1 + t), which tends to the residue 1."""
    with mpmath.workdps(model.precision + 10):
        t = to_mpf(t)
        return t * eval_L(1 + t, model)

"""Laurent expansion at t = 0 over a free coefficient ring.

Generators: ``R`` (residue of L at 1), ``a[k,j]`` (Taylor coefficients of the
regular part of L at k), ``C`` (c^(1/2)) and ``Lc`` (log c).  Coefficients are
sparse Laurent polynomials with Fraction coefficients; only monomials are ever
inverted, which is all the L-factor denominators need.  Zero testing is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, IndeterminateOrderError
from .lfunc import LExpr, LTerm, is_canonical

# generators print in the order C, Lc, R, a[k,j]
R_GEN = ("R",)
C_GEN = ("C",)
LC_GEN = ("Lc",)


def a_gen(k, j):
    return ("a", k, j)


def _gen_sort(g):
    order = {"C": 0, "Lc": 1, "R": 2, "a": 3}
    return (order[g[0]],) + g[1:]


def _gen_str(g):
    return f"a[{g[1]},{g[2]}]" if g[0] == "a" else g[0]


class Poly:
    """Sparse Laurent polynomial: {monomial: Fraction}, monomial = sorted ((gen, exp), ...)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, q):
        return cls({(): Fraction(q)})

    @classmethod
    def gen(cls, g, exp=1, coeff=1):
        return cls({((g, exp),) if exp else (): Fraction(coeff)})

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly({m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def inverse(self):
        if not self.is_monomial():
            raise DomainError(f"cannot invert the non-monomial coefficient {self}")
        ((m, c),) = self.terms.items()
        return Poly({tuple((g, -e) for g, e in m): 1 / c})

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return render_poly(self)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for g, e in m2:
        acc[g] = acc.get(g, 0) + e
    return tuple(sorted(((g, e) for g, e in acc.items() if e), key=lambda x: _gen_sort(x[0])))


def _mono_str(parts):
    return "*".join(_gen_str(g) + (f"^{e}" if e != 1 else "") for g, e in parts)


def render_poly(p):
    """e.g. ``2*R*a[1,0]/(C^5*a[2,0]*a[3,0])``."""
    if p.is_zero():
        return "0"
    gens = {g for m in p.terms for g, _ in m}
    den = {}
    for g in gens:
        lo = min(dict(m).get(g, 0) for m in p.terms)
        if lo < 0:
            den[g] = -lo
    shifted = []
    for m, c in p.terms.items():
        d = dict(m)
        for g, e in den.items():
            d[g] = d.get(g, 0) + e
        mono = sorted(((g, e) for g, e in d.items() if e), key=lambda x: _gen_sort(x[0]))
        shifted.append((tuple(_gen_sort(g) + (-e,) for g, e in mono), mono, c))
    shifted.sort()
    pieces = []
    for i, (_, mono, c) in enumerate(shifted):
        body = _mono_str(mono)
        mag = abs(c)
        q = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        if not body:
            body = q
        elif mag != 1:
            body = f"{q}*{body}"
        if c < 0:
            pieces.append(("-" if i == 0 else " - ") + body)
        else:
            pieces.append(("" if i == 0 else " + ") + body)
    num = "".join(pieces)
    if not den:
        return num
    if len(shifted) > 1:
        num = f"({num})"
    dparts = sorted(den.items(), key=lambda x: _gen_sort(x[0]))
    dstr = _mono_str(dparts)
    if len(dparts) > 1 or dparts[0][1] != 1:
        dstr = f"({dstr})" if len(dparts) > 1 else dstr
    return f"{num}/{dstr}"


# -- series -----------------------------------------------------------------


@dataclass(frozen=True)
class LaurentSeries:
    """Coefficients for t^min_order .. t^(trunc_order-1); higher orders unknown."""

    min_order: int
    coeffs: tuple
    trunc_order: int

    def coeff(self, k):
        i = k - self.min_order
        if k >= self.trunc_order:
            raise IndeterminateOrderError(f"coefficient of t^{k} is beyond the window", self.trunc_order)
        if i < 0:
            return Poly()
        return self.coeffs[i] if i < len(self.coeffs) else Poly()

    def normalized(self):
        """Drop vanishing leading coefficients; may leave an empty (zero) window."""
        cs = list(self.coeffs)
        lo = self.min_order
        while cs and cs[0].is_zero():
            cs.pop(0)
            lo += 1
        if not cs:
            return LaurentSeries(self.trunc_order, (), self.trunc_order)
        return LaurentSeries(lo, tuple(cs), self.trunc_order)

    def is_zero_window(self):
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other):
        lo = min(self.min_order, other.min_order)
        hi = min(self.trunc_order, other.trunc_order)
        cs = tuple(self.coeff(k) + other.coeff(k) for k in range(lo, hi))
        return LaurentSeries(lo, cs, hi)

    def __neg__(self):
        return LaurentSeries(self.min_order, tuple(-c for c in self.coeffs), self.trunc_order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return LaurentSeries(self.min_order, tuple(c * other for c in self.coeffs), self.trunc_order)
        lo = self.min_order + other.min_order
        hi = min(self.trunc_order + other.min_order, other.trunc_order + self.min_order)
        n = hi - lo
        out = [Poly() for _ in range(max(n, 0))]
        for i, a in enumerate(self.coeffs[:n]):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs[: n - i]):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return LaurentSeries(lo, tuple(out), hi)

    def inverse(self):
        s = self.normalized()
        if not s.coeffs:
            raise IndeterminateOrderError("cannot invert a series that vanishes on its window", s.trunc_order)
        n = s.trunc_order - s.min_order
        inv0 = s.coeffs[0].inverse()
        b = [inv0]
        for k in range(1, n):
            acc = Poly()
            for i in range(1, k + 1):
                if i < len(s.coeffs) and not s.coeffs[i].is_zero():
                    acc = acc + s.coeffs[i] * b[k - i]
            b.append(-(acc * inv0))
        return LaurentSeries(-s.min_order, tuple(b), -s.min_order + n)

    def __pow__(self, p):
        if p < 0:
            return self.inverse() ** (-p)
        out = _unit(self.trunc_order - self.min_order)
        for _ in range(p):
            out = out * self
        return out

    def render(self, var="t"):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                parts.append(f"({c})*{var}^{self.min_order + i}")
        return " + ".join(parts + [f"O({var}^{self.trunc_order})"])


def _unit(precision):
    return LaurentSeries(0, (Poly.const(1),) + tuple(Poly() for _ in range(precision - 1)), precision)


# -- factor series ----------------------------------------------------------


def factor_series(k, slope, precision):
    """L(k + slope*t) with ``precision`` coefficients starting at its own min order."""
    if k < 1:
        raise DomainError(f"L({k}{'+' if slope > 0 else '-'}t) must be reflected before expansion")
    if k == 1:
        cs = [Poly.gen(R_GEN, 1, slope)]
        cs += [Poly.gen(a_gen(1, j), 1, slope**j) for j in range(precision - 1)]
        return LaurentSeries(-1, tuple(cs), precision - 1)
    cs = [Poly.gen(a_gen(k, j), 1, slope**j) for j in range(precision)]
    return LaurentSeries(0, tuple(cs), precision)


def cpow_series(alpha, beta, precision):
    """c^(alpha t + beta) = C^(2 beta) * exp(alpha * Lc * t)."""
    two_beta = 2 * Fraction(beta)
    if two_beta.denominator != 1:
        raise DomainError(f"c-exponent constant {beta} is not a half-integer")
    lead = Poly.gen(C_GEN, int(two_beta))
    cs = []
    for j in range(precision):
        cs.append(lead * Poly.gen(LC_GEN, j, Fraction(alpha) ** j / factorial(j)))
    return LaurentSeries(0, tuple(cs), precision)


def _term_min_order(t):
    lo = 0
    for (k, _), p in t.factors:
        if k == 1:
            lo -= p
    return lo


def term_series(t, trunc):
    """Series of one canonical term, exact for all orders below ``trunc``."""
    lo = _term_min_order(t)
    prec = trunc - lo
    if prec <= 0:
        return LaurentSeries(trunc, (), trunc)
    out = cpow_series(t.c_slope, t.c_const, prec) * Poly.const(t.coeff)
    for (k, s), p in t.factors:
        out = out * (factor_series(k, s, prec) ** p)
    return LaurentSeries(out.min_order, out.coeffs[: trunc - out.min_order], trunc)


def expand(e, J=3):
    """Expand a canonical expression; coefficients below t^J are exact."""
    if not is_canonical(e):
        raise DomainError("expand requires a canonical expression (all L arguments k >= 1)")
    if e.is_zero():
        return LaurentSeries(J, (), J)
    total = None
    for t in e.terms:
        s = term_series(t, J)
        total = s if total is None else total + s
    return total.normalized()


# -- pole orders --------------------------------------------------------------


def common_monomial(e):
    """Split e = mono * rest with mono a single term (gcd of the L-powers)."""
    terms = e.terms
    first = terms[0]
    keys = {k for t in terms for k, _ in t.factors}
    powers = {}
    for key in keys:
        powers[key] = min(dict(t.factors).get(key, 0) for t in terms)
    mono = LTerm(first.c_slope, first.c_const, tuple((k, p) for k, p in powers.items() if p), first.coeff)
    rest = LExpr(
        LTerm(
            t.c_slope - first.c_slope,
            t.c_const - first.c_const,
            tuple((k, dict(t.factors).get(k, 0) - p) for k, p in powers.items()),
            t.coeff / first.coeff,
        )
        for t in terms
    )
    return LExpr([mono]), rest


def _monomial_order(t):
    return -_term_min_order(t)


def _nonzero_min_order(e, J, retries):
    for attempt in range(retries + 1):
        s = expand(e, J)
        if s.coeffs:
            return s.min_order, J
        if attempt < retries:
            J *= 2
    raise IndeterminateOrderError(
        f"expansion vanishes identically on t^<{J}; order undetermined", J
    )


def pole_order(e, J=3, retries=1):
    """Order of the pole at t=0 (negative for a zero)."""
    if not is_canonical(e):
        raise DomainError("pole_order requires a canonical expression")
    if e.is_zero():
        raise DomainError("the zero expression has no pole order")
    mono, rest = common_monomial(e)
    base = _monomial_order(mono.terms[0])
    if len(rest.terms) == 1:
        return base + _monomial_order(rest.terms[0])
    lo, _ = _nonzero_min_order(rest, J, retries)
    return base - lo


def leading_coefficient(e, J=3, retries=1):
    order = pole_order(e, J, retries)
    s = expand(e, -order + 1)
    return s.coeff(-order)

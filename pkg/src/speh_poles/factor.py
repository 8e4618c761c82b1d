"""Common-factor extraction for display, delegated to sympy.

Only presentation depends on this module.  Equality and pole orders never go
through sympy.
"""

from fractions import Fraction

import sympy

from .lfunc import LExpr, LTerm

_X = sympy.Symbol("X")  # c^t
_C = sympy.Symbol("C")  # c^(1/2)


def _lsym(k, s):
    return sympy.Symbol(f"L_{k}_{'p' if s > 0 else 'm'}")


def _to_sympy(e):
    syms = {}
    total = sympy.Integer(0)
    for t in e.terms:
        if t.c_slope.denominator != 1 or (2 * t.c_const).denominator != 1:
            return None, None
        term = sympy.Rational(t.coeff.numerator, t.coeff.denominator)
        term *= _X ** int(t.c_slope) * _C ** int(2 * t.c_const)
        for (k, s), p in t.factors:
            sym = _lsym(k, s)
            syms[sym] = (k, s)
            term *= sym ** p
        total += term
    return total, syms


def _monomial_to_lexpr(mono, symmap):
    coeff, factors = mono.as_coeff_mul()
    alpha = beta2 = 0
    fs = []
    for f in factors:
        base, p = f.as_base_exp()
        p = int(p)
        if base == _X:
            alpha += p
        elif base == _C:
            beta2 += p
        else:
            fs.append((symmap[base], p))
    return LTerm(Fraction(alpha), Fraction(beta2, 2), tuple(fs), Fraction(int(coeff.p), int(coeff.q)))


def _poly_to_lexpr(poly, symmap):
    return LExpr(_monomial_to_lexpr(m, symmap) for m in sympy.Add.make_args(sympy.expand(poly)))


def factored_parts(e):
    """Split ``e`` as coeff * c^(alpha t+beta) * prod L^p * prod (sum)^p.

    Returns ``(coeff, alpha, beta, num_factors, den_factors, sums)`` or None
    when ``e`` is zero or the exponents do not fit the display shape.
    """
    if e.is_zero():
        return None
    expr, symmap = _to_sympy(e)
    if expr is None:
        return None
    f = sympy.factor(sympy.together(expr))
    numer, denom = sympy.fraction(f)
    alpha = beta2 = 0
    coeff = Fraction(1)
    lfac = {}
    sums = []
    for part, sign in ((numer, 1), (denom, -1)):
        c, items = sympy.factor_list(part)
        c = Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q))
        coeff = coeff * c if sign > 0 else coeff / c
        for base, p in items:
            p = int(p) * sign
            if base == _X:
                alpha += p
            elif base == _C:
                beta2 += p
            elif base in symmap:
                key = symmap[base]
                lfac[key] = lfac.get(key, 0) + p
            else:
                if sign < 0:
                    return None
                inner = _poly_to_lexpr(base, symmap)
                # make the leading displayed term positive
                lead = sorted(inner.terms, key=lambda t: (-t.c_slope, -t.c_const, t.factors))[0]
                if lead.coeff < 0:
                    inner = -inner
                    if p % 2:
                        coeff = -coeff
                sums.append((inner, p))
    num = sorted((k, p) for k, p in lfac.items() if p > 0)
    den = sorted((k, -p) for k, p in lfac.items() if p < 0)
    return coeff, Fraction(alpha), Fraction(beta2, 2), num, den, sums

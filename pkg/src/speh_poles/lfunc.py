"""Formal sums of c-powers times products of L(k +/- t).

A term is ``coeff * c^(alpha*t + beta) * prod L(k + e*t)^p``.  The only
relation ever applied is the functional equation L(s) = c^(s-1/2) L(1-s),
used once per factor to move every argument to k >= 1.  After that the
factors are free generators, so equality of canonical forms is syntactic.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, order=True)
class LTerm:
    c_slope: Fraction
    c_const: Fraction
    factors: tuple  # sorted ((k, slope), power) with power != 0
    coeff: Fraction = Fraction(1)

    @property
    def key(self):
        return (self.c_slope, self.c_const, self.factors)

    def is_canonical(self):
        return all(k >= 1 for (k, _), _ in self.factors)


def _merge_factors(*groups):
    acc = {}
    for group in groups:
        for key, p in group:
            acc[key] = acc.get(key, 0) + p
    return tuple(sorted((k, p) for k, p in acc.items() if p))


class LExpr:
    """Immutable formal sum of :class:`LTerm` with like terms merged.

    ``==`` compares stored terms literally; use :func:`equal` for equality
    modulo the functional equation.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc = {}
        for t in terms:
            key = (_frac(t.c_slope), _frac(t.c_const), _merge_factors(t.factors))
            acc[key] = acc.get(key, Fraction(0)) + _frac(t.coeff)
        self._terms = tuple(
            LTerm(a, b, f, c) for (a, b, f), c in sorted(acc.items()) if c != 0
        )

    @property
    def terms(self):
        return self._terms

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = const(other)
        return isinstance(other, LExpr) and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __add__(self, other):
        other = _lift(other)
        return LExpr(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return LExpr(LTerm(t.c_slope, t.c_const, t.factors, -t.coeff) for t in self._terms)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        return LExpr(
            LTerm(
                a.c_slope + b.c_slope,
                a.c_const + b.c_const,
                _merge_factors(a.factors, b.factors),
                a.coeff * b.coeff,
            )
            for a in self._terms
            for b in other._terms
        )

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        if k < 0:
            return self.inverse() ** (-k)
        out = const(1)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self):
        """Reciprocal of a single term; sums are not invertible here."""
        if len(self._terms) != 1:
            raise DomainError("only monomial expressions can be inverted")
        (t,) = self._terms
        return LExpr([LTerm(-t.c_slope, -t.c_const, tuple((k, -p) for k, p in t.factors), 1 / t.coeff)])

    def __truediv__(self, other):
        return self * _lift(other).inverse()

    def __rtruediv__(self, other):
        return _lift(other) * self.inverse()

    def __repr__(self):
        return f"LExpr({render(self)!r})"

    def __str__(self):
        return render(self)


def _lift(x):
    if isinstance(x, LExpr):
        return x
    if isinstance(x, (int, Fraction)):
        return const(x)
    return NotImplemented


def const(q):
    q = _frac(q)
    return LExpr([LTerm(Fraction(0), Fraction(0), (), q)]) if q else LExpr()


def L(k, slope=1, power=1):
    """The factor L(k + slope*t)^power."""
    if slope not in (1, -1):
        raise DomainError(f"slope must be +1 or -1, got {slope}")
    return LExpr([LTerm(Fraction(0), Fraction(0), (((int(k), slope), int(power)),))])


def cpow(alpha, beta=0):
    """The monomial c^(alpha*t + beta)."""
    return LExpr([LTerm(_frac(alpha), _frac(beta), ())])


ZERO = LExpr()
ONE = const(1)


# -- functional equation ----------------------------------------------------


def reflect_factor(k, slope):
    """L(k+e t) = c^(k-1/2+e t) L(1-k-e t) as (c_slope, c_const, (k', e'))."""
    return Fraction(slope), Fraction(k) - Fraction(1, 2), (1 - k, -slope)


def _canon_term(t):
    a, b = t.c_slope, t.c_const
    out = []
    for (k, e), p in t.factors:
        if k <= 0:
            da, db, key = reflect_factor(k, e)
            a += da * p
            b += db * p
            out.append((key, p))
        else:
            out.append(((k, e), p))
    return LTerm(a, b, out, t.coeff)


def canonicalize(e):
    return LExpr(_canon_term(t) for t in e.terms)


def is_canonical(e):
    return all(t.is_canonical() for t in e.terms)


def reflect_all(e, which=None):
    """Apply the functional equation to every factor (or those with key in ``which``).

    Unlike :func:`canonicalize` this also reflects factors that are already
    canonical, which is how round-trip soundness is exercised.
    """
    out = []
    for t in e.terms:
        a, b = t.c_slope, t.c_const
        fs = []
        for (k, s), p in t.factors:
            if which is None or (k, s) in which:
                da, db, key = reflect_factor(k, s)
                a += da * p
                b += db * p
                fs.append((key, p))
            else:
                fs.append(((k, s), p))
        out.append(LTerm(a, b, fs, t.coeff))
    return LExpr(out)


def equal(a, b):
    return canonicalize(a - b).is_zero()


def flip_t(e):
    """Substitute t -> -t."""
    return LExpr(
        LTerm(-t.c_slope, t.c_const, tuple(((k, -s), p) for (k, s), p in t.factors), t.coeff)
        for t in e.terms
    )


# -- rendering --------------------------------------------------------------


def _q_text(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _q_latex(q):
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def _cexp(alpha, beta, latex):
    q = _q_latex if latex else _q_text
    parts = ""
    if alpha:
        if alpha == 1:
            parts = "t"
        elif alpha == -1:
            parts = "-t"
        else:
            parts = q(alpha) + (" t" if latex else "t")
    if beta:
        b = q(beta)
        if parts and not b.startswith("-"):
            b = "+" + b
        parts += b
    return parts


def _cpow_str(alpha, beta, latex):
    if not alpha and not beta:
        return ""
    return "c^{" + _cexp(alpha, beta, latex) + "}"


def _factor_str(k, slope, power):
    if slope == 1:
        body = "L(t)" if k == 0 else (f"L(t+{k})" if k > 0 else f"L(t{k})")
    else:
        body = "L(-t)" if k == 0 else f"L({k}-t)"
    if power != 1:
        body += f"^{power}" if power > 0 else f"^{{{power}}}"
    return body


def _join(items):
    return " ".join(x for x in items if x)


def _term_parts(t, latex):
    """Numerator tokens and denominator tokens of a term (coefficient excluded)."""
    num = [_cpow_str(t.c_slope, t.c_const, latex)]
    den = []
    for (k, s), p in t.factors:
        if p > 0:
            num.append(_factor_str(k, s, p))
        else:
            den.append(_factor_str(k, s, -p))
    return [x for x in num if x], den


def _assemble(coeff, num, den, latex):
    """Render ``coeff * num / den`` without a leading sign; ``coeff`` > 0."""
    c = ""
    if coeff != 1:
        c = _q_latex(coeff) if latex else _q_text(coeff) + "*"
    top = _join(num)
    if latex:
        top = _join([c, top]) if c else top
        if not den:
            return top or "1"
        return f"\\frac{{{top or '1'}}}{{{_join(den)}}}"
    top = (c + top) if top else (c.rstrip("*") or "1")
    if not den:
        return top
    bottom = den[0] if len(den) == 1 else "(" + _join(den) + ")"
    return f"{top}/{bottom}"


def _term_order(t):
    # descending c-power, then factor keys ascending
    return (-t.c_slope, -t.c_const, t.factors)


def render_flat(e, latex=False, order=None, tight=False):
    if e.is_zero():
        return "0"
    terms = sorted(e.terms, key=order) if order else e.terms
    out = []
    for i, t in enumerate(terms):
        num, den = _term_parts(t, latex)
        body = _assemble(abs(t.coeff), num, den, latex)
        if t.coeff < 0:
            out.append(("-" if i == 0 else ("-" if tight else " - ")) + body)
        else:
            out.append(("" if i == 0 else ("+" if tight else " + ")) + body)
    return "".join(out)


def render(e, latex=False):
    """Term-by-term rendering in canonical term order."""
    return render_flat(e, latex)


def render_factored(e, latex=False):
    """Rendering with common factors pulled out, as in the reference tables.

    Falls back to :func:`render_flat` when the exponents are not of the
    shape (integer)*t + (half-integer).
    """
    try:
        from .factor import factored_parts
    except ImportError:  # pragma: no cover
        return render_flat(e, latex)
    parts = factored_parts(e)
    if parts is None:
        return render_flat(e, latex)
    coeff, alpha, beta, num_l, den_l, sums = parts
    num = [_cpow_str(alpha, beta, latex)]
    num += [_factor_str(k, s, p) for (k, s), p in num_l]
    inner = []
    for s_expr, p in sums:
        body = render_flat(s_expr, latex, order=_term_order, tight=True)
        if latex and "^" in body:
            body = "\\left(" + body + "\\right)"
        else:
            body = "(" + body + ")"
        if p != 1:
            body += f"^{p}"
        inner.append(body)
    num += sorted(inner)
    den = [_factor_str(k, s, p) for (k, s), p in den_l]
    sign = "-" if coeff < 0 else ""
    return sign + _assemble(abs(coeff), [x for x in num if x], den, latex)


# -- parsing ----------------------------------------------------------------


class ParseError(DomainError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _strip_latex(text):
    text = text.replace("\\left", "").replace("\\right", "").replace("\\,", " ")
    text = text.replace("\\{", "(").replace("\\}", ")")
    text = re.sub(r"\\frac\{(\d+)\}\{(\d+)\}", r"\1/\2", text)
    while "\\frac" in text:
        i = text.index("\\frac")
        j, a = _brace_group(text, i + 5)
        k, b = _brace_group(text, j)
        text = text[:i] + f"(({a})/({b}))" + text[k:]
    text = text.replace("\\cdot", "*")
    text = text.rstrip(". ")
    return text


def _brace_group(text, i):
    while text[i].isspace():
        i += 1
    if text[i] != "{":
        raise ParseError(f"expected '{{' at {i} in {text!r}")
    depth = 0
    for j in range(i, len(text)):
        if text[j] == "{":
            depth += 1
        elif text[j] == "}":
            depth -= 1
            if depth == 0:
                return j + 1, text[i + 1 : j]
    raise ParseError(f"unbalanced braces in {text!r}")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = []
        for m in _TOKEN.finditer(text):
            if m.group(1):
                self.toks.append(("num", int(m.group(1))))
            elif m.group(2) and not m.group(2).isspace():
                self.toks.append(("sym", m.group(2)))
        self.i = 0

    def peek(self, offset=0):
        j = self.i + offset
        return self.toks[j] if j < len(self.toks) else (None, None)

    def take(self, sym=None):
        tok = self.peek()
        if sym is not None and tok != ("sym", sym):
            raise ParseError(f"expected {sym!r} at token {self.i} in {self.text!r}, got {tok[1]!r}")
        self.i += 1
        return tok

    def at(self, sym):
        return self.peek() == ("sym", sym)

    def parse(self):
        e = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at token {self.i} in {self.text!r}")
        return e

    def expr(self):
        sign = 1
        if self.at("-"):
            self.take()
            sign = -1
        elif self.at("+"):
            self.take()
        out = self.product() * sign
        while self.at("+") or self.at("-"):
            sign = 1 if self.take()[1] == "+" else -1
            out = out + self.product() * sign
        return out

    def _starts_item(self):
        kind, val = self.peek()
        return kind == "num" or val in ("c", "L", "(", "{")

    def product(self):
        out = self.item()
        while True:
            if self.at("*"):
                self.take()
                out = out * self.item()
            elif self.at("/"):
                self.take()
                out = out / self.item()
            elif self._starts_item():
                out = out * self.item()
            else:
                return out

    def item(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            base = const(val)
        elif val == "c":
            self.take()
            self.take("^")
            if self.at("{"):
                self.take()
                a, b = self.linear("}")
                self.take("}")
            else:
                a, b = Fraction(0), self.signed_number()
            return cpow(a, b)
        elif val == "L":
            self.take()
            self.take("(")
            a, b = self.linear(")")
            self.take(")")
            if a not in (1, -1) or b.denominator != 1:
                raise ParseError(f"unsupported L argument {a}t+{b} in {self.text!r}")
            base = L(int(b), int(a))
        elif val in ("(", "{"):
            close = ")" if val == "(" else "}"
            self.take()
            base = self.expr()
            self.take(close)
        else:
            raise ParseError(f"unexpected token {val!r} at {self.i} in {self.text!r}")
        if self.at("^"):
            self.take()
            if self.at("{"):
                self.take()
                p = self.signed_int()
                self.take("}")
            else:
                p = self.signed_int()
            base = base**p
        return base

    def signed_int(self):
        sign = 1
        if self.at("-"):
            self.take()
            sign = -1
        kind, val = self.take()
        if kind != "num":
            raise ParseError(f"expected integer in {self.text!r}")
        return sign * val

    def signed_number(self):
        sign = 1
        if self.at("-"):
            self.take()
            sign = -1
        return sign * self.number()

    def number(self):
        if self.at("("):
            # ((a)/(b)) produced by \frac rewriting
            self.take()
            v = self.number()
            if self.at("/"):
                self.take()
                v = v / self.number()
            self.take(")")
            return v
        kind, val = self.take()
        if kind != "num":
            raise ParseError(f"expected number in {self.text!r}")
        v = Fraction(val)
        if self.at("/") and self.peek(1)[0] == "num":
            self.take()
            v /= self.take()[1]
        return v

    def linear(self, close):
        """alpha*t + beta with rational alpha, beta, up to the closing symbol."""
        alpha = beta = Fraction(0)
        first = True
        while not self.at(close):
            sign = 1
            if self.at("+") or self.at("-"):
                sign = 1 if self.take()[1] == "+" else -1
            elif not first:
                raise ParseError(f"expected sign in exponent of {self.text!r}")
            first = False
            if self.at("t"):
                self.take()
                alpha += sign
                continue
            v = self.number()
            if self.at("*"):
                self.take()
            if self.at("t"):
                self.take()
                alpha += sign * v
            else:
                beta += sign * v
        return alpha, beta


def parse(text):
    """Parse the text grammar or the LaTeX table notation into an LExpr."""
    text = text.strip().strip("$")
    if "\\" in text:
        text = _strip_latex(text)
    return _Parser(text).parse()

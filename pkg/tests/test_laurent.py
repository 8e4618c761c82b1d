from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from speh_poles.errors import DomainError
from speh_poles.laurent import (
    C_GEN,
    LC_GEN,
    R_GEN,
    Poly,
    a_gen,
    expand,
    leading_coefficient,
    pole_order,
    render_poly,
)
from speh_poles.lfunc import L, canonicalize, cpow, reflect_all

from strategies import random_expr, random_monomial_product, rng

R = Poly.gen(R_GEN)


def a(k, j):
    return Poly.gen(a_gen(k, j))


def test_expand_simple_pole():
    s = expand(L(1), J=3)
    assert s.min_order == -1
    assert s.coeffs[:4] == (R, a(1, 0), a(1, 1), a(1, 2))


def test_expand_symmetric_sum():
    s = expand(L(1) + L(1, -1), J=3)
    assert s.min_order == 0
    assert s.coeffs[0] == a(1, 0) * 2


def test_expand_exponential():
    s = expand(cpow(2, 0), J=4)
    lc = Poly.gen(LC_GEN)
    assert s.min_order == 0
    assert s.coeffs == (Poly.const(1), lc * 2, lc * lc * 2, lc * lc * lc * F(4, 3))


def test_expand_half_integer_constant():
    s = expand(cpow(0, F(-5, 2)), J=1)
    assert s.coeffs[0] == Poly.gen(C_GEN, -5)


def test_pole_order_examples():
    assert pole_order(L(1)) == 1
    assert pole_order(L(2)) == 0
    e = cpow(-3, F(-5, 2)) * L(1) * (L(1) + L(1, -1)) / (L(2) * L(3))
    assert pole_order(e) == 1
    e = cpow(-2, 0) * (cpow(2, 0) * L(1) * L(2) + L(1, -1) * L(2, -1)) / (L(1) * L(2))
    assert pole_order(e) == -1


def test_leading_coefficient_examples():
    assert leading_coefficient(L(1)) == R
    assert leading_coefficient(L(2) / L(3)) == a(2, 0) * a(3, 0).inverse()
    assert leading_coefficient(L(1) + L(1, -1)) == a(1, 0) * 2
    e = cpow(-3, F(-5, 2)) * L(1) * (L(1) + L(1, -1)) / (L(2) * L(3))
    assert render_poly(leading_coefficient(e)) == "2*R*a[1,0]/(C^5*a[2,0]*a[3,0])"


def test_rejects_noncanonical():
    with pytest.raises(DomainError):
        expand(L(0))
    with pytest.raises(DomainError):
        pole_order(L(0))


def test_poly_ring():
    x, y = a(2, 0), a(3, 1)
    assert (x + y) * (x - y) == x * x - y * y
    assert (x * y.inverse()) * y == x
    with pytest.raises(DomainError):
        (x + y).inverse()


# -- randomized multiplicativity --------------------------------------------


def _canon(r):
    return canonicalize(random_expr(r, max_terms=2, k_range=(-1, 3), max_factors=2))


def _window_equal(s1, s2, hi):
    return all(s1.coeff(k) == s2.coeff(k) for k in range(min(s1.min_order, s2.min_order), hi))


def test_expand_is_a_ring_map():
    r = rng(11)
    for _ in range(300):
        x, y = _canon(r), _canon(r)
        J = 2
        # products need extra room: each factor's window shifts with the other's order
        assert _window_equal(expand(x + y, J), expand(x, J) + expand(y, J), J)
        ex, ey = expand(x, J + 4), expand(y, J + 4)
        prod = ex * ey
        hi = min(J, prod.trunc_order)
        assert _window_equal(expand(x * y, J), prod, hi)


def test_pole_order_additive_on_products():
    r = rng(12)
    for _ in range(300):
        x = random_monomial_product(r) * (L(1) + L(1, -1) + cpow(r.randint(-2, 2), 0) * L(2))
        y = random_monomial_product(r)
        if r.random() < 0.5:
            y = y * (L(1) - L(1, -1))
        assert pole_order(x * y) == pole_order(x) + pole_order(y)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10_000))
def test_pole_order_survives_reflection_roundtrip(seed):
    r = rng(seed)
    e = canonicalize(random_expr(r, max_terms=3, k_range=(1, 3), max_factors=3))
    if e.is_zero():
        return
    keys = sorted({k for t in e.terms for k, _ in t.factors})
    bounced = canonicalize(reflect_all(reflect_all(e, set(keys[:1])), {(1 - k, -s) for k, s in keys[:1]}))
    assert bounced == e
    assert pole_order(bounced) == pole_order(e)

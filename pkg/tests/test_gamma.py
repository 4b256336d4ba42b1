from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knothodge.exact import USeries, XPoly
from knothodge.gamma import faulhaber, gamma_expansion, gamma_product_at_integer

X = XPoly.x()


def interpolate(points):
    """Lagrange interpolation over Fractions: list of (x, y) -> coefficient list."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for a, (xa, ya) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for b, (xb, _) in enumerate(points):
            if a == b:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xb * basis[t + 1]
            denom *= xa - xb
        for t in range(n):
            coeffs[t] += ya * basis[t] / denom
    return coeffs


def brute_gamma(j, n):
    """Complete homogeneous symmetric polynomial h_j(1..n), or e_j(1..m-1) for n = -m."""
    poly = [Fraction(1)]
    if n >= 0:
        for i in range(1, n + 1):
            # multiply by 1/(1 - i u) truncated at u^j
            geo = [Fraction(i) ** p for p in range(j + 1)]
            poly = [sum(poly[a] * geo[b - a] for a in range(min(b, len(poly) - 1) + 1)) for b in range(j + 1)]
    else:
        for i in range(1, -n):
            poly = [(poly[b] if b < len(poly) else 0) + (i * poly[b - 1] if 0 < b <= len(poly) else 0)
                    for b in range(len(poly) + 1)]
    return poly[j] if j < len(poly) else Fraction(0)


def test_faulhaber_examples():
    assert faulhaber(1) == X * (X + 1) / 2
    assert faulhaber(2) == X * (X + 1) * (2 * X + 1) / 6
    assert faulhaber(3)(3) == 36


def test_faulhaber_rejects_zero():
    with pytest.raises(ValueError):
        faulhaber(0)


@pytest.mark.parametrize("k", range(1, 12))
def test_faulhaber_against_direct_summation(k):
    S = faulhaber(k)
    assert S.degree == k + 1
    for n in range(0, 15):
        assert S(n) == sum(i ** k for i in range(1, n + 1))


def test_gamma_low_coefficients():
    G = gamma_expansion(3)
    assert G[0] == XPoly.const(1)
    assert G[1] == (X ** 2 + X) / 2
    assert G[2](2) == 7


@pytest.mark.parametrize("j", range(1, 7))
def test_gamma_matches_interpolation(j):
    pts = [(Fraction(n), brute_gamma(j, n)) for n in range(0, 2 * j + 1)]
    want = XPoly([c for c in interpolate(pts)])
    assert gamma_expansion(j)[j] == want


def test_gamma_at_integers_examples():
    assert gamma_product_at_integer(0, 4) == USeries.one(4)
    assert gamma_product_at_integer(2, 3) == USeries.from_scalars([1, 3, 7, 15], 3)
    assert gamma_product_at_integer(-3, 3) == USeries.from_scalars([1, 3, 2, 0], 3)


@settings(max_examples=40, deadline=None)
@given(st.integers(-8, 8), st.integers(0, 20))
def test_gamma_specializes_to_integer_products(n, J):
    assert gamma_expansion(J).specialize(n) == gamma_product_at_integer(n, J).specialize(0)


@pytest.mark.parametrize("n", range(-6, 7))
def test_integer_products_against_brute_force(n):
    G = gamma_product_at_integer(n, 6)
    assert [G[j][0] for j in range(7)] == [brute_gamma(j, n) for j in range(7)]


def test_gamma_degree_and_leading_sign():
    G = gamma_expansion(10)
    for j in range(1, 11):
        assert G[j].degree == 2 * j
        assert G[j][2 * j] > 0

"""Generating functions F_odd(x, u) and F_even(x, u) of the bigraded Euler characteristics.

Each is a product over ``ell >= 1`` of per-``ell`` factors

    Gamma(E_ell(x), +-ell u^ell / F_ell(u)) * F_ell(u) ** (-E_ell(x))

with ``E_ell`` the necklace polynomial and ``F_ell(u) = ell u^ell E_ell(1/u)``.
The sign is ``+`` for odd ambient dimension and ``-`` for even.  Factors with
``ell > 2J`` equal 1 modulo ``u^(J+1)``.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from ._arith import divisors, mobius
from .exact import (
    Rational,
    USeries,
    XPoly,
    series_compose,
    series_exp,
    series_inverse,
    series_log,
    series_mul,
    series_pow_poly,
)
from .gamma import _faulhaber_table, gamma_expansion

__all__ = [
    "Parity",
    "necklace",
    "f_ell",
    "factor",
    "assemble",
    "assemble_by_product",
    "specialize",
]


class Parity(str, Enum):
    """Parity of the ambient dimension d (or of the external degree k)."""

    ODD = "odd"
    EVEN = "even"

    @classmethod
    def of(cls, value) -> "Parity":
        if isinstance(value, Parity):
            return value
        if isinstance(value, int):
            return cls.ODD if value % 2 else cls.EVEN
        return cls(str(value).lower())

    @property
    def sign(self) -> int:
        """``(-1)**(d-1)``: +1 for odd, -1 for even."""
        return 1 if self is Parity.ODD else -1

    @property
    def representative(self) -> int:
        """Concrete dimension used where a number is needed (3 or 4)."""
        return 3 if self is Parity.ODD else 4

    def __str__(self) -> str:
        return self.value


@lru_cache(maxsize=None)
def necklace(ell: int) -> XPoly:
    """``E_ell(x) = (1/ell) sum_{d | ell} mu(d) x^(ell/d)``."""
    if ell < 1:
        raise ValueError("necklace polynomial needs ell >= 1")
    coeffs = [0] * (ell + 1)
    for d in divisors(ell):
        coeffs[ell // d] += mobius(d)
    return XPoly(coeffs) / ell


def f_ell(ell: int, J: int | None = None) -> USeries:
    """``F_ell(u) = sum_{d | ell} mu(d) u^(ell - ell/d)`` as a series truncated at *J*."""
    if ell < 1:
        raise ValueError("F_ell needs ell >= 1")
    if J is None:
        J = ell - 1 if ell > 1 else 0
    terms: dict[int, int] = {}
    for d in divisors(ell):
        k = ell - ell // d
        terms[k] = terms.get(k, 0) + mobius(d)
    return USeries.from_terms(terms, J)


def _substitution(ell: int, parity: Parity, J: int) -> USeries:
    """``+-ell u^ell / F_ell(u)`` truncated at *J*."""
    mono = USeries.from_terms({ell: parity.sign * ell}, J)
    return series_mul(mono, series_inverse(f_ell(ell, J)))


def factor(ell: int, parity, J: int) -> USeries:
    """The ``ell``-th factor of the product, truncated after ``u**J``."""
    parity = Parity.of(parity)
    E = necklace(ell)
    F = f_ell(ell, J)
    t = _substitution(ell, parity, J)
    top = J // ell
    gam = gamma_expansion(top)
    outer = USeries([gam[m].compose(E) for m in range(top + 1)], top)
    return series_mul(series_compose(outer, t), series_pow_poly(F, -E))


def _log_factor(ell: int, parity: Parity, J: int) -> USeries:
    # log Gamma(y, t) = sum_k S_k(y) t^k / k, and log F^{-E} = -E log F
    E = necklace(ell)
    out = series_log(f_ell(ell, J)) * (-E)
    top = J // ell
    if top == 0:
        return out
    table = _faulhaber_table(max(top, 8))
    t = _substitution(ell, parity, J)
    power = t
    for k in range(1, top + 1):
        out = out + power * (table[k].compose(E) / k)
        if k < top:
            power = series_mul(power, t)
    return out


@lru_cache(maxsize=None)
def log_assemble(parity, J: int) -> USeries:
    """``log F(x, u)`` truncated after ``u**J`` (sum of per-factor logarithms)."""
    parity = Parity.of(parity)
    total = USeries.zero(J)
    for ell in range(1, 2 * J + 1):
        total = total + _log_factor(ell, parity, J)
    return total


@lru_cache(maxsize=None)
def assemble(parity, J: int) -> USeries:
    """``F_odd`` or ``F_even`` truncated after ``u**J``.

    Computed as the exponential of the summed factor logarithms, which equals
    the product of :func:`factor` over ``1 <= ell <= 2J`` exactly.
    """
    if J < 0:
        raise ValueError("J must be non-negative")
    parity = Parity.of(parity)
    return series_exp(log_assemble(parity, J))


def assemble_by_product(parity, J: int) -> USeries:
    """Literal product of :func:`factor` for ``ell = 1..2J`` (slower reference path)."""
    parity = Parity.of(parity)
    out = USeries.one(J)
    for ell in range(1, 2 * J + 1):
        out = series_mul(out, factor(ell, parity, J))
    return out


def specialize(series: USeries, x0) -> USeries:
    """Evaluate each coefficient at ``x = x0``; the result has constant coefficients."""
    x0 = Rational(x0)
    return USeries.from_scalars(series.specialize(x0), series.order)

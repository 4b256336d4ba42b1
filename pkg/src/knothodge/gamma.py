"""The formal series Gamma(x, u) = sum_j gamma_j(x) u^j and its integer specializations.

``Gamma(x, u)`` is the expansion of ``Gamma(1/u - x) / (u**x Gamma(1/u))`` as
``u -> +0``.  At a non-negative integer ``x = n`` it is the product
``1/((1-u)(1-2u)...(1-nu))``, whose logarithm is ``sum_k S_k(n) u^k / k`` with
``S_k`` the Faulhaber power-sum polynomial; that identity defines the series
for symbolic ``x``.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .exact import Rational, USeries, XPoly, series_exp, series_inverse, series_mul

__all__ = ["faulhaber", "gamma_expansion", "gamma_product_at_integer"]


@lru_cache(maxsize=None)
def _faulhaber_table(kmax: int) -> tuple:
    # S(x, t) = (e^{(x+1)t} - 1)/(e^t - 1): numerator/t has t^m coefficient
    # (x+1)^{m+1}/(m+1)!, denominator/t has 1/(m+1)!.
    xp1 = XPoly((1, 1))
    num = USeries([xp1 ** (m + 1) / factorial(m + 1) for m in range(kmax + 1)], kmax)
    den = USeries.from_scalars([Rational(1, factorial(m + 1)) for m in range(kmax + 1)], kmax)
    egf = series_mul(num, series_inverse(den))
    return tuple(egf[k] * factorial(k) for k in range(kmax + 1))


def faulhaber(k: int) -> XPoly:
    """Polynomial ``S_k`` with ``S_k(n) = 1^k + 2^k + ... + n^k`` for ``k >= 1``."""
    if k < 1:
        raise ValueError("faulhaber(k) requires k >= 1")
    # the egf's t^0 term is S_0(x) = x + 1 (counting i = 0); k >= 1 is unaffected
    return _faulhaber_table(max(k, 8))[k]


@lru_cache(maxsize=None)
def gamma_expansion(J: int) -> USeries:
    """``Gamma(x, u)`` truncated after ``u**J``: ``exp(sum_k S_k(x) u^k / k)``."""
    if J < 0:
        raise ValueError("J must be non-negative")
    table = _faulhaber_table(max(J, 8))
    log_gamma = USeries([XPoly()] + [table[k] / k for k in range(1, J + 1)], J)
    return series_exp(log_gamma)


def gamma_product_at_integer(n: int, J: int) -> USeries:
    """``Gamma(n, u)`` at an integer ``n`` as a finite product (rational coefficients).

    ``n >= 0``: truncation of ``prod_{i=1}^{n} 1/(1 - i u)``.
    ``n < 0``: the polynomial ``prod_{i=1}^{-n-1} (1 + i u)``.
    """
    coeffs = [1] + [0] * J
    if n >= 0:
        for i in range(1, n + 1):
            for k in range(1, J + 1):
                coeffs[k] += i * coeffs[k - 1]
    else:
        for i in range(1, -n):
            for k in range(J, 0, -1):
                coeffs[k] += i * coeffs[k - 1]
    return USeries.from_scalars(coeffs, J)

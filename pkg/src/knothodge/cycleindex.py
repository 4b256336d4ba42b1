"""Cycle index sums: an independent route to F(x, u) through symmetric-group characters.

Two symmetric sequences are expanded as polynomials in the power-sum
variables ``a_1, a_2, ...``:

* the normalized configuration-space homology, at grading variable ``z = -1``
  (so every complexity shift collapses into ``u``)::

      prod_l exp(-a_l / l) * (1 + (-1)^d u^l a_l) ** ((-1)^d E_l(1/u))

* the Hodge idempotent sequence (Hanlon)::

      prod_l (1 + (-1)^l a_l) ** (-E_l(x))

Contracting them coefficient by coefficient with weights ``prod l^k k!``
counts invariant homomorphisms, which reproduces F(x, u).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

from .exact import Rational, ULaurent, USeries, XPoly
from .genfun import Parity, necklace

__all__ = [
    "Partition",
    "CycleIndexSeries",
    "partitions",
    "conf_cycle_index",
    "hodge_cycle_index",
    "identity_cycle_index",
    "pair",
    "factor_operator",
]


@dataclass(frozen=True, order=True)
class Partition:
    """Cycle type ``prod a_l^{k_l}`` stored as sorted ``(l, k_l)`` pairs with ``k_l >= 1``."""

    parts: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, mult: dict[int, int]) -> "Partition":
        for ell, k in mult.items():
            if ell < 1 or k < 0:
                raise ValueError("invalid multiplicity")
        return cls(tuple(sorted((ell, k) for ell, k in mult.items() if k)))

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(self.parts)

    @property
    def weight(self) -> int:
        return sum(ell * k for ell, k in self.parts)

    def class_weight(self) -> int:
        """``prod l^{k_l} k_l!``: n! divided by the size of the conjugacy class."""
        w = 1
        for ell, k in self.parts:
            w *= ell ** k * factorial(k)
        return w

    def __str__(self) -> str:
        if not self.parts:
            return "1"
        return "*".join(f"a{ell}" + (f"^{k}" if k > 1 else "") for ell, k in self.parts)


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of exactly *n*, as multiplicity records."""
    largest = n if largest is None else largest

    def rec(rem: int, top: int):
        if rem == 0:
            yield {}
            return
        for ell in range(min(rem, top), 0, -1):
            for k in range(rem // ell, 0, -1):
                for rest in rec(rem - ell * k, ell - 1):
                    d = dict(rest)
                    d[ell] = k
                    yield d

    for d in rec(n, largest):
        yield Partition.from_dict(d)


class CycleIndexSeries:
    """Truncated polynomial in ``a_1, a_2, ...``: weight-``<= max_weight`` terms only.

    Coefficients are :class:`XPoly` or :class:`USeries` values.
    """

    def __init__(self, max_weight: int, coefficients: dict[Partition, object]):
        self.max_weight = max_weight
        self.coefficients = {
            lam: c for lam, c in coefficients.items()
            if lam.weight <= max_weight and not _is_zero(c)
        }

    def __getitem__(self, lam: Partition):
        c = self.coefficients.get(lam)
        if c is None:
            return XPoly()
        return c

    def __iter__(self):
        return iter(sorted(self.coefficients))

    def __mul__(self, other: "CycleIndexSeries") -> "CycleIndexSeries":
        N = min(self.max_weight, other.max_weight)
        out: dict[Partition, object] = {}
        for la, ca in self.coefficients.items():
            for lb, cb in other.coefficients.items():
                if la.weight + lb.weight > N:
                    continue
                m = la.multiplicities
                for ell, k in lb.parts:
                    m[ell] = m.get(ell, 0) + k
                key = Partition.from_dict(m)
                term = _times(ca, cb)
                out[key] = out[key] + term if key in out else term
        return CycleIndexSeries(N, out)

    def __eq__(self, other):
        if not isinstance(other, CycleIndexSeries):
            return NotImplemented
        return self.max_weight == other.max_weight and self.coefficients == other.coefficients


def _is_zero(c) -> bool:
    if isinstance(c, XPoly):
        return c.is_zero()
    if isinstance(c, USeries):
        return all(p.is_zero() for p in c.coeffs)
    return c == 0


def _times(a, b):
    if isinstance(a, XPoly) and isinstance(b, USeries):
        return b * a
    return a * b


def _assemble(per_ell: dict[int, list], N: int) -> CycleIndexSeries:
    # coefficient of prod a_l^{k_l} is the product of per-l coefficients
    out = {}
    for n in range(N + 1):
        for lam in partitions(n):
            m = lam.multiplicities
            acc = None
            for ell, k in m.items():
                c = per_ell[ell][k]
                acc = c if acc is None else _times(acc, c)
                if _is_zero(acc):
                    break
            if acc is None:
                acc = per_ell[0]
            out[lam] = acc
    return CycleIndexSeries(N, out)


def _binomial_powers(M: ULaurent, c: ULaurent, kmax: int) -> list[ULaurent]:
    """``binom(M, m) * c^m`` for ``m = 0..kmax``."""
    out = [ULaurent.monomial(0, 1)]
    for m in range(1, kmax + 1):
        out.append(out[-1] * (M - (m - 1)) * c / m)
    return out


def _neg_dim_sign(parity: Parity) -> int:
    """``(-1)^d``."""
    return -parity.sign


def _necklace_at_inverse_u(ell: int) -> ULaurent:
    """``E_l(1/u)`` as a Laurent polynomial."""
    E = necklace(ell)
    return ULaurent.from_terms({-k: c for k, c in enumerate(E.coeffs) if c})


def _conf_per_ell(ell: int, parity: Parity, kmax: int, J: int, scale: int,
                  exp_rate, normalized: bool = True) -> list[USeries]:
    """a^k coefficients of ``exp(-rate*a) (1 + (-1)^d scale u^l a)^((-1)^d E_l(1/u))``."""
    s = _neg_dim_sign(parity)
    M = _necklace_at_inverse_u(ell) * s
    c = ULaurent.monomial(ell, s * scale)
    binoms = _binomial_powers(M, c, kmax)
    out = []
    for k in range(kmax + 1):
        if normalized:
            acc = ULaurent(0, ())
            for m in range(k + 1):
                r = k - m
                acc = acc + binoms[m] * (Rational(-1) ** r * exp_rate ** r / factorial(r))
        else:
            acc = binoms[k]
        out.append(acc.to_series(J))
    return out


def conf_cycle_index(parity, N: int, J: int, normalized: bool = True) -> CycleIndexSeries:
    """Cycle index sum of (normalized) configuration-space homology, weights ``<= N``.

    Every coefficient is a power series in ``u`` truncated after ``u**J``;
    a surviving negative power of ``u`` raises ``ValueError``.
    """
    parity = Parity.of(parity)
    per_ell: dict[int, list] = {0: USeries.one(J)}
    for ell in range(1, N + 1):
        per_ell[ell] = _conf_per_ell(ell, parity, N // ell, J, 1, Rational(1, ell), normalized)
    return _assemble(per_ell, N)


def identity_cycle_index(N: int, J: int) -> CycleIndexSeries:
    """Trivial representations in every arity: ``prod_l exp(a_l / l)``."""
    per_ell: dict[int, list] = {0: USeries.one(J)}
    for ell in range(1, N + 1):
        per_ell[ell] = [USeries.one(J) * Rational(1, ell ** k * factorial(k))
                        for k in range(N // ell + 1)]
    return _assemble(per_ell, N)


def _rising_binomial(E: XPoly, k: int, sign: int = 1) -> XPoly:
    """``binom(-E, k) * sign^k``."""
    acc = XPoly.const(1)
    for r in range(k):
        acc = acc * (-E - r)
    return acc / factorial(k) * (sign ** k)


@lru_cache(maxsize=None)
def hodge_cycle_index(N: int) -> CycleIndexSeries:
    """Hanlon's cycle index sum of the Hodge idempotent sequence, weights ``<= N``."""
    per_ell: dict[int, list] = {0: XPoly.const(1)}
    for ell in range(1, N + 1):
        E = necklace(ell)
        per_ell[ell] = [_rising_binomial(E, k, (-1) ** ell) for k in range(N // ell + 1)]
    return _assemble(per_ell, N)


def pair(ZV: CycleIndexSeries, ZW: CycleIndexSeries, desuspend: bool = True):
    """Weighted coefficient contraction ``sum_lambda V_lambda W_lambda prod l^k k!``.

    This is the dimension of invariant homomorphisms between the two
    sequences.  With ``desuspend`` each arity ``n`` is additionally weighted by
    ``(-1)^n``, the Euler sign of the ``n``-fold desuspension in the total
    complex at ``z = -1``.
    """
    N = min(ZV.max_weight, ZW.max_weight)
    total = None
    for lam, cv in ZV.coefficients.items():
        if lam.weight > N:
            continue
        cw = ZW.coefficients.get(lam)
        if cw is None:
            continue
        w = lam.class_weight()
        if desuspend and lam.weight % 2:
            w = -w
        term = _times(cv, cw) * w
        total = term if total is None else total + term
    if total is None:
        return XPoly()
    return total


def factor_operator(ell: int, parity, J: int) -> USeries:
    """``(1 + d/da)^(-E_l(x))`` applied to ``exp(-a)(1 + (-1)^d l u^l a)^((-1)^d E_l(1/u))`` at ``a = 0``.

    The operator sum is cut at ``k = 2J``: the ``a^k`` coefficient has
    ``u``-valuation at least ``k/2``.  The first omitted term is checked to
    vanish through ``u**J``.
    """
    parity = Parity.of(parity)
    kmax = 2 * J
    f = _conf_per_ell(ell, parity, kmax + 1, J, ell, Rational(1))
    if any(f[kmax + 1].coeffs):
        raise AssertionError("operator sum did not stabilize before k = 2J")
    E = necklace(ell)
    out = USeries.zero(J)
    falling = XPoly.const(1)
    for k in range(kmax + 1):
        if any(f[k].coeffs):
            out = out + f[k] * falling
        falling = falling * (-E - k)
    return out

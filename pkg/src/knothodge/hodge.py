"""Homology <-> homotopy Euler tables via the product formula.

    F(x, u) = sum chi_ij x^i u^j = prod_{i,j} (1 - x^i u^j) ** (-chi^pi_ij)

Going right to left takes a logarithm and Moebius-inverts over common
divisors of ``(i, j)``; going left to right exponentiates the log-sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from ._arith import divisors, mobius
from .exact import Rational, USeries, XPoly, as_int, series_exp, series_log
from .genfun import Parity

__all__ = [
    "mobius",
    "EulerTable",
    "homotopy_from_homology",
    "homology_from_homotopy",
    "parity_sums",
    "even_closed_form",
    "table_from_series",
]

HOMOLOGY = "homology"
HOMOTOPY = "homotopy"


@dataclass(frozen=True)
class EulerTable:
    """Integer table indexed by Hodge degree ``i >= 1`` and complexity ``1 <= j <= jmax``.

    Cells not present in ``entries`` are zero; zero values are never stored.
    """

    kind: str
    parity: Parity
    jmax: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in (HOMOLOGY, HOMOTOPY):
            raise ValueError(f"unknown table kind {self.kind!r}")
        object.__setattr__(self, "parity", Parity.of(self.parity))
        clean = {}
        for (i, j), val in self.entries.items():
            if not (1 <= j <= self.jmax) or i < 0:
                raise ValueError(f"cell ({i}, {j}) outside the table")
            val = int(val)
            if val:
                clean[(int(i), int(j))] = val
        object.__setattr__(self, "entries", dict(sorted(clean.items(), key=lambda c: (c[0][1], c[0][0]))))

    def __getitem__(self, cell: tuple[int, int]) -> int:
        return self.entries.get(cell, 0)

    def row(self, j: int) -> dict[int, int]:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def restrict(self, jmax: int | None = None, imax: int | None = None) -> "EulerTable":
        jmax = self.jmax if jmax is None else min(jmax, self.jmax)
        return EulerTable(self.kind, self.parity, jmax, {
            (i, j): v for (i, j), v in self.entries.items()
            if j <= jmax and (imax is None or i <= imax)})

    def max_hodge(self) -> int:
        return max((i for i, _ in self.entries), default=0)


def table_from_series(F: USeries, parity, kind: str = HOMOLOGY) -> EulerTable:
    """Read the ``x^i u^j`` coefficients (``j >= 1``) of *F* into a table."""
    entries = {}
    for j in range(1, F.order + 1):
        for i, c in enumerate(F[j].coeffs):
            if c:
                entries[(i, j)] = as_int(c)
    return EulerTable(kind, parity, F.order, entries)


def homotopy_from_homology(F: USeries, jmax: int | None = None, parity=None) -> EulerTable:
    """Invert the product formula: chi^pi_ab = sum_{m | gcd(a,b)} mu(m)/m * L_{a/m, b/m}.

    ``L`` are the coefficients of ``log F``.  Raises ``ValueError`` if a value
    fails to be an integer or if ``log F`` has an ``x``-free term in positive
    complexity.
    """
    jmax = F.order if jmax is None else jmax
    if jmax > F.order:
        raise ValueError("jmax exceeds the truncation order of F")
    if parity is None:
        parity = Parity.ODD
    if F[0] != XPoly.const(1):
        raise ValueError("F must have constant coefficient 1")
    L = series_log(F.truncate(jmax))
    for b in range(1, jmax + 1):
        if L[b][0] != 0:
            raise ValueError(f"log F has an x^0 u^{b} term; malformed input")
    entries = {}
    for b in range(1, jmax + 1):
        for a in range(1, len(L[b].coeffs)):
            acc = Rational(0)
            for m in divisors(gcd(a, b)):
                mu = mobius(m)
                if mu:
                    acc += Rational(mu, m) * L[b // m][a // m]
            if acc.denominator != 1:
                raise ValueError(f"non-integral homotopy Euler characteristic at ({a}, {b}): {acc}")
            if acc:
                entries[(a, b)] = int(acc)
    return EulerTable(HOMOTOPY, parity, jmax, entries)


def homology_from_homotopy(T: EulerTable, J: int, max_hodge: int | None = None) -> USeries:
    """Expand ``prod (1 - x^i u^j) ** (-chi^pi_ij)`` through ``u**J``.

    ``max_hodge`` caps the ``x`` degree of the result (``None`` keeps all).
    """
    if T.kind != HOMOTOPY:
        raise ValueError("expected a homotopy table")
    if J > T.jmax:
        raise ValueError("table does not cover the requested complexity")
    # log prod = sum chi * sum_m x^{im} u^{jm} / m
    logs = [dict() for _ in range(J + 1)]
    for (i, j), chi in T.entries.items():
        m = 1
        while j * m <= J:
            row = logs[j * m]
            row[i * m] = row.get(i * m, 0) + Rational(chi, m)
            m += 1
    coeffs = []
    for row in logs:
        deg = max(row, default=-1)
        c = [0] * (deg + 1)
        for k, val in row.items():
            c[k] = val
        coeffs.append(XPoly(c))
    out = series_exp(USeries(coeffs, J))
    if max_hodge is not None:
        out = out.map_coeffs(lambda p: XPoly(p.coeffs[: max_hodge + 1]))
    return out


def even_closed_form(j: int) -> int:
    """``(1/2j) sum_{k | j, k odd} mu(k) 2^(j/k)`` for odd ambient dimension."""
    total = sum(mobius(k) * 2 ** (j // k) for k in divisors(j) if k % 2)
    q, r = divmod(total, 2 * j)
    if r:
        raise ArithmeticError(f"closed form is not integral at j={j}")
    return q


def expected_total(parity, j: int) -> int:
    """Sum over Hodge degrees of chi^pi in complexity ``j`` (known closed values)."""
    parity = Parity.of(parity)
    if parity is Parity.ODD:
        return 1 if j == 1 else 0
    return (-1) ** j if j in (1, 2) else 0


@dataclass(frozen=True)
class ParitySums:
    j: int
    even: int
    odd: int

    @property
    def total(self) -> int:
        return self.even + self.odd


def parity_sums(T: EulerTable, check: bool = True) -> list[ParitySums]:
    """Per-complexity sums over even and odd Hodge degrees.

    With ``check`` the totals are compared to the known per-complexity Euler
    characteristics and, for odd parity, the even sum to its closed form;
    any mismatch raises ``AssertionError``.
    """
    if T.kind != HOMOTOPY:
        raise ValueError("expected a homotopy table")
    out = []
    for j in range(1, T.jmax + 1):
        row = T.row(j)
        ev = sum(v for i, v in row.items() if i % 2 == 0)
        od = sum(v for i, v in row.items() if i % 2 == 1)
        s = ParitySums(j, ev, od)
        if check:
            if s.total != expected_total(T.parity, j):
                raise AssertionError(f"total Euler characteristic mismatch at j={j}: {s.total}")
            if T.parity is Parity.ODD and ev != even_closed_form(j):
                raise AssertionError(f"even-degree sum mismatch at j={j}: {ev}")
        out.append(s)
    return out

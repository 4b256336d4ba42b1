"""Chain complexes of graphs per (Hodge degree, complexity) and their rational homology."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .genfun import Parity
from .graphs import Degree, GraphClass, degree, differential, enumerate_graphs, hodge_bounds

__all__ = [
    "SparseMatrix",
    "ChainComplexQ",
    "build_complex",
    "rank_exact",
    "homology_dims",
    "verify_d_squared",
    "DSquaredReport",
]


@dataclass
class SparseMatrix:
    """Integer matrix stored as ``{row: {col: value}}`` with no zero entries."""

    nrows: int
    ncols: int
    rows: dict[int, dict[int, int]] = field(default_factory=dict)

    @classmethod
    def from_dense(cls, dense: list[list[int]]) -> "SparseMatrix":
        nrows = len(dense)
        ncols = len(dense[0]) if dense else 0
        rows = {}
        for r, line in enumerate(dense):
            entries = {c: int(x) for c, x in enumerate(line) if x}
            if entries:
                rows[r] = entries
        return cls(nrows, ncols, rows)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for r, line in self.rows.items():
            for c, x in line.items():
                out[r][c] = x
        return out

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.rows.get(r, {}).get(c, 0)

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out: dict[int, dict[int, int]] = {}
        for r, line in self.rows.items():
            acc: dict[int, int] = {}
            for k, a in line.items():
                for c, b in other.rows.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + a * b
            acc = {c: x for c, x in acc.items() if x}
            if acc:
                out[r] = acc
        return SparseMatrix(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return not self.rows


def rank_exact(M) -> int:
    """Rank over the rationals by fraction-free (Bareiss-style) elimination.

    Accepts a :class:`SparseMatrix` or a dense list of integer rows.
    """
    if isinstance(M, SparseMatrix):
        rows = [dict(line) for line in M.rows.values()]
    else:
        rows = [{c: int(x) for c, x in enumerate(line) if x} for line in M]
    rows = [r for r in rows if r]
    rank = 0
    prev = 1
    while rows:
        # pivot: the row whose leading column is smallest, shortest row on ties
        best = min(range(len(rows)), key=lambda t: (min(rows[t]), len(rows[t])))
        pivot = rows.pop(best)
        col = min(pivot)
        p = pivot[col]
        new_rows = []
        for r in rows:
            a = r.get(col, 0)
            if a:
                # r <- (p*r - a*pivot) / prev, exact by Sylvester's identity
                merged = {}
                for c in set(r) | set(pivot):
                    val = p * r.get(c, 0) - a * pivot.get(c, 0)
                    if val:
                        merged[c] = val
                r = merged
            else:
                r = {c: p * x for c, x in r.items()}
            if r:
                r = {c: x // prev for c, x in r.items()}
                new_rows.append(r)
        rows = new_rows
        prev = p
        rank += 1
    return rank


@dataclass
class ChainComplexQ:
    """Graph complex for one ``(i, j)`` cell: bases by ``v`` and maps ``v -> v+1``."""

    i: int
    j: int
    parity_d: Parity
    parity_k: Parity
    bases: dict[int, list[GraphClass]]
    maps: dict[int, SparseMatrix]
    loop_free: bool = False

    @property
    def k(self) -> int:
        return 1 if self.parity_k is Parity.ODD else 2

    def degree(self, v: int) -> Degree:
        return degree(self.i, self.j, v, self.k)

    def size(self) -> int:
        return sum(len(b) for b in self.bases.values())

    def euler_characteristic(self) -> int:
        d = self.parity_d.representative
        return sum((-1) ** (self.degree(v).at(d) % 2) * len(b) for v, b in self.bases.items())


@lru_cache(maxsize=None)
def build_complex(i: int, j: int, parity_d, parity_k=Parity.ODD, loop_free: bool = False) -> ChainComplexQ:
    """Bases for ``v = 0..2j-i`` and the differential matrices between them.

    ``maps[v]`` has rows indexed by ``bases[v+1]`` and columns by ``bases[v]``.
    """
    pd, pk = Parity.of(parity_d), Parity.of(parity_k)
    vmax = hodge_bounds(i, j)
    bases = {v: enumerate_graphs(i, j, v, pd, pk, loop_free=loop_free) for v in range(vmax + 1)}
    maps = {}
    for v in range(vmax):
        index = {c.key: r for r, c in enumerate(bases[v + 1])}
        M = SparseMatrix(len(bases[v + 1]), len(bases[v]))
        for col, c in enumerate(bases[v]):
            for key, (cls, coef) in differential(c).items():
                r = index.get(key)
                if r is None:
                    raise AssertionError(f"differential left the basis: {cls.to_text()}")
                M.rows.setdefault(r, {})[col] = coef
        maps[v] = M
    return ChainComplexQ(i, j, pd, pk, bases, maps, loop_free)


@dataclass
class DSquaredReport:
    ok: bool
    v: int | None = None
    row: int | None = None
    col: int | None = None
    value: int = 0

    def __bool__(self) -> bool:
        return self.ok


def verify_d_squared(c: ChainComplexQ) -> DSquaredReport:
    """Check every composite ``maps[v+1] @ maps[v]`` vanishes; report the first bad entry."""
    for v in sorted(c.maps):
        if v + 1 not in c.maps:
            continue
        prod = c.maps[v + 1].matmul(c.maps[v])
        if not prod.is_zero():
            r = min(prod.rows)
            col = min(prod.rows[r])
            return DSquaredReport(False, v, r, col, prod.rows[r][col])
    return DSquaredReport(True)


def homology_dims(c: ChainComplexQ, check: bool = True) -> dict[int, tuple[int, Degree]]:
    """``{v: (dim H, degree)}`` for every ``v`` with nonzero homology."""
    if check:
        report = verify_d_squared(c)
        if not report:
            raise AssertionError(f"d^2 != 0 at v={report.v}: entry ({report.row}, {report.col})")
    ranks = {v: rank_exact(M) for v, M in c.maps.items()}
    out = {}
    for v, basis in c.bases.items():
        dim = len(basis) - ranks.get(v, 0) - ranks.get(v - 1, 0)
        if dim < 0:
            raise AssertionError(f"negative homology dimension at v={v}")
        if dim:
            out[v] = (dim, c.degree(v))
    return out

"""Uni-trivalent-and-higher graphs: enumeration, canonical forms, orientation signs, differential.

A graph has ``i`` univalent external vertices and ``v`` internal vertices of
valence at least 3; loops and multiple edges are allowed.  The orientation
set consists of external vertices (degree ``-k``), internal vertices
(degree ``-d``) and edges (degree ``d-1``).  Orientations are always stored
in grouped form: vertices ``0..i-1`` are external, ``i..i+v-1`` internal in
orientation order, and ``edges`` lists directed ``(tail, head)`` pairs in
orientation order.  Half-edge ``2e`` is the tail of edge ``e``, ``2e+1`` its
head.

Only the parities of ``d`` and ``k`` matter for vanishing and signs, so
both are passed as :class:`~knothodge.genfun.Parity` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterator, NamedTuple

from ._kernels import search
from .genfun import Parity

__all__ = [
    "HalfEdgeGraph",
    "GraphClass",
    "Degree",
    "degree",
    "canonical",
    "structural_key",
    "automorphism_order",
    "expansions",
    "differential",
    "structural_graphs",
    "enumerate_graphs",
    "euler_table",
    "hodge_bounds",
    "has_loop",
]


class Degree(NamedTuple):
    """Affine degree ``d_coef * d + const`` in the ambient dimension ``d``."""

    d_coef: int
    const: int

    def at(self, d: int) -> int:
        return self.d_coef * d + self.const

    def __str__(self) -> str:
        if self.d_coef == 0:
            return str(self.const)
        head = "d" if self.d_coef == 1 else f"{self.d_coef}d"
        if self.const == 0:
            return head
        return f"{head}{self.const:+d}"


def degree(i: int, j: int, v: int, k: int = 1) -> Degree:
    """Total degree ``(d-1) j - k i - v`` of a graph."""
    return Degree(j, -j - k * i - v)


@dataclass(frozen=True)
class HalfEdgeGraph:
    """Oriented graph in grouped orientation order (see module docstring)."""

    n_ext: int
    n_int: int
    edges: tuple[tuple[int, int], ...]

    @property
    def n_vertices(self) -> int:
        return self.n_ext + self.n_int

    @property
    def complexity(self) -> int:
        return len(self.edges) - self.n_int

    def valences(self) -> list[int]:
        val = [0] * self.n_vertices
        for a, b in self.edges:
            val[a] += 1
            val[b] += 1
        return val

    def half_edges_at(self, vertex: int) -> list[int]:
        out = []
        for e, (a, b) in enumerate(self.edges):
            if a == vertex:
                out.append(2 * e)
            if b == vertex:
                out.append(2 * e + 1)
        return out

    def multiplicities(self) -> list[list[int]]:
        n = self.n_vertices
        A = [[0] * n for _ in range(n)]
        for a, b in self.edges:
            if a == b:
                A[a][a] += 1
            else:
                A[a][b] += 1
                A[b][a] += 1
        return A

    def is_connected(self) -> bool:
        n = self.n_vertices
        if n == 0:
            return False
        adj = [set() for _ in range(n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        return len(seen) == n

    def validate(self) -> None:
        val = self.valences()
        for x in range(self.n_vertices):
            if x < self.n_ext and val[x] != 1:
                raise ValueError(f"external vertex {x} has valence {val[x]}")
            if x >= self.n_ext and val[x] < 3:
                raise ValueError(f"internal vertex {x} has valence {val[x]}")
        if self.n_ext < 1:
            raise ValueError("a graph needs at least one external vertex")
        if not self.is_connected():
            raise ValueError("graph is not connected")

    def to_text(self) -> str:
        body = ",".join(f"{a}-{b}" for a, b in self.edges)
        return f"ext={self.n_ext} int={self.n_int} edges={body}"

    @classmethod
    def from_text(cls, text: str) -> "HalfEdgeGraph":
        fields = dict(part.split("=", 1) for part in text.split())
        edges = tuple(
            tuple(int(t) for t in item.split("-"))
            for item in fields["edges"].split(",") if item)
        return cls(int(fields["ext"]), int(fields["int"]), edges)


# -- canonical labeling -------------------------------------------------


def _refine(g: HalfEdgeGraph, A: list[list[int]]) -> list[list[int]]:
    """Equitable-ish ordered partition of vertices by iterated neighbourhood colours."""
    n = g.n_vertices
    val = g.valences()
    sig = [(0 if x < g.n_ext else 1, val[x], A[x][x]) for x in range(n)]
    ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
    color = [ranks[s] for s in sig]
    ncolors = len(ranks)
    while True:
        sig = [
            (color[x], tuple(sorted((color[y], A[x][y]) for y in range(n) if y != x and A[x][y])))
            for x in range(n)
        ]
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        color = [ranks[s] for s in sig]
        if len(ranks) == ncolors:
            break
        ncolors = len(ranks)
    cells: list[list[int]] = [[] for _ in range(ncolors)]
    for x in range(n):
        cells[color[x]].append(x)
    return cells


@lru_cache(maxsize=200_000)
def _search(g: HalfEdgeGraph) -> tuple[tuple, list]:
    A = g.multiplicities()
    cells = _refine(g, A)
    n = g.n_vertices
    flat = [A[x][y] for x in range(n) for y in range(n)]
    return search(n, flat, cells)


def structural_key(g: HalfEdgeGraph) -> tuple:
    """Isomorphism invariant certificate (ignores orientation)."""
    cert, _ = _search(g)
    return (g.n_ext, g.n_int, cert)


def _canonical_edges(g: HalfEdgeGraph, cert: tuple) -> tuple[tuple[int, int], ...]:
    n = g.n_vertices
    edges = []
    off = 0
    for q in range(n):
        for r in range(q + 1):
            edges.extend([(r, q)] * cert[off + r])
        off += q + 1
    return tuple(sorted(edges))


def _perm_sign(images: list[int]) -> int:
    """Sign of the permutation ``t -> images[t]`` of ``range(len(images))``."""
    seen = [False] * len(images)
    sign = 1
    for s in range(len(images)):
        if seen[s]:
            continue
        length = 0
        t = s
        while not seen[t]:
            seen[t] = True
            t = images[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _relabel_sign(g: HalfEdgeGraph, order: tuple, canon_edges, d_odd: bool, k_odd: bool) -> int:
    """Koszul sign of carrying the orientation of *g* to the canonical one via *order*."""
    pos = [0] * g.n_vertices
    for q, x in enumerate(order):
        pos[x] = q
    sign = 1
    if k_odd:
        sign *= _perm_sign([pos[x] for x in range(g.n_ext)])
    if d_odd:
        sign *= _perm_sign([pos[x] - g.n_ext for x in range(g.n_ext, g.n_vertices)])
    first_slot: dict[tuple[int, int], int] = {}
    for s, key in enumerate(canon_edges):
        first_slot.setdefault(key, s)
    taken: dict[tuple[int, int], int] = {}
    slots = []
    flips = 0
    for a, b in g.edges:
        pa, pb = pos[a], pos[b]
        if pa > pb:
            flips += 1
            key = (pb, pa)
        else:
            key = (pa, pb)
        t = taken.get(key, 0)
        taken[key] = t + 1
        slots.append(first_slot[key] + t)
    if d_odd:
        if flips % 2:
            sign = -sign
    else:
        sign *= _perm_sign(slots)
    return sign


def _local_odd_symmetry(A: list[list[int]], d_odd: bool) -> bool:
    """Whether a vertex-fixing symmetry (parallel-edge swap, loop flip) is odd."""
    n = len(A)
    for x in range(n):
        if A[x][x]:
            if d_odd:
                return True  # reversing a loop gives (-1)^d
            if A[x][x] >= 2:
                return True  # swapping two odd loops
        if not d_odd:
            for y in range(x + 1, n):
                if A[x][y] >= 2:
                    return True  # swapping two odd parallel edges
    return False


@dataclass(frozen=True)
class GraphClass:
    """Canonical representative of a graph modulo orientation relations."""

    graph: HalfEdgeGraph
    zero: bool
    key: tuple
    parity_d: Parity
    parity_k: Parity

    @property
    def i(self) -> int:
        return self.graph.n_ext

    @property
    def v(self) -> int:
        return self.graph.n_int

    @property
    def j(self) -> int:
        return self.graph.complexity

    def degree(self, k: int | None = None) -> Degree:
        if k is None:
            k = 1 if self.parity_k is Parity.ODD else 2
        return degree(self.i, self.j, self.v, k)

    def to_text(self) -> str:
        return self.graph.to_text()


@lru_cache(maxsize=400_000)
def _canonical_cached(g: HalfEdgeGraph, d_odd: bool, k_odd: bool):
    cert, minimizers = _search(g)
    key = (g.n_ext, g.n_int, cert)
    canon_edges = _canonical_edges(g, cert)
    canon = HalfEdgeGraph(g.n_ext, g.n_int, canon_edges)
    A = g.multiplicities()
    zero = _local_odd_symmetry(A, d_odd)
    sign = _relabel_sign(g, minimizers[0], canon_edges, d_odd, k_odd)
    if not zero:
        for order in minimizers[1:]:
            if _relabel_sign(g, order, canon_edges, d_odd, k_odd) != sign:
                zero = True
                break
    return key, canon, zero, sign


def canonical(g: HalfEdgeGraph, parity_d, parity_k=Parity.ODD) -> tuple[GraphClass, int]:
    """Canonical class of an oriented graph and the sign ``g = sign * canonical``.

    For a class that vanishes by the orientation relations the sign is
    reported as ``+1`` and ``GraphClass.zero`` is set.
    """
    pd, pk = Parity.of(parity_d), Parity.of(parity_k)
    key, canon, zero, sign = _canonical_cached(g, pd is Parity.ODD, pk is Parity.ODD)
    return GraphClass(canon, zero, key, pd, pk), (1 if zero else sign)


def automorphism_order(g: HalfEdgeGraph) -> int:
    """Order of the kind-preserving automorphism group acting on half-edges."""
    _, minimizers = _search(g)
    A = g.multiplicities()
    local = 1
    n = len(A)
    for x in range(n):
        m = A[x][x]
        local *= factorial(m) * 2 ** m
        for y in range(x + 1, n):
            local *= factorial(A[x][y])
    return len(minimizers) * local


# -- differential ---------------------------------------------------------


def expansions(g: HalfEdgeGraph) -> Iterator[HalfEdgeGraph]:
    """All vertex splittings of *g*, each once.

    The split vertex keeps its position, the new internal vertex is appended
    last, and the new edge is appended last, directed old -> new.  An
    unordered split is enumerated once by keeping the first half-edge of the
    vertex on the old side.
    """
    n = g.n_vertices
    for x in range(g.n_ext, n):
        halves = g.half_edges_at(x)
        deg = len(halves)
        rest = halves[1:]
        for size in range(2, deg - 1):
            for moved in combinations(rest, size):
                edges = [list(e) for e in g.edges]
                for h in moved:
                    edges[h // 2][h % 2] = n
                edges.append([x, n])
                yield HalfEdgeGraph(g.n_ext, g.n_int + 1, tuple(tuple(e) for e in edges))


def differential(c: GraphClass) -> dict[tuple, tuple[GraphClass, int]]:
    """Expansion differential as ``{key: (class, coefficient)}`` with nonzero coefficients."""
    out: dict[tuple, list] = {}
    for h in expansions(c.graph):
        cls, sign = canonical(h, c.parity_d, c.parity_k)
        if cls.zero:
            continue
        if cls.key in out:
            out[cls.key][1] += sign
        else:
            out[cls.key] = [cls, sign]
    return {k: (cls, coef) for k, (cls, coef) in out.items() if coef}


# -- enumeration ----------------------------------------------------------


def hodge_bounds(i: int, j: int) -> int:
    """Largest admissible internal-vertex count ``2j - i``; raises when ``(i, j)`` is impossible."""
    if j < 1 or i < 1 or i > 2 * j:
        raise ValueError(f"no graphs with i={i}, j={j}: need 1 <= i <= 2j")
    return 2 * j - i


def _flower(i: int, j: int) -> HalfEdgeGraph | None:
    loops = j + 1 - i
    if loops < 0 or i + 2 * loops < 3:
        return None
    edges = tuple((a, i) for a in range(i)) + ((i, i),) * loops
    return HalfEdgeGraph(i, 1, edges)


@lru_cache(maxsize=None)
def structural_graphs(i: int, j: int) -> dict[int, tuple[HalfEdgeGraph, ...]]:
    """Canonical representatives of all isomorphism classes, by internal-vertex count.

    Contracting internal edges reduces any graph with ``v >= 1`` to a single
    internal vertex carrying ``i`` legs and ``j + 1 - i`` loops, so every
    class arises from that flower by repeated vertex splitting.
    """
    vmax = hodge_bounds(i, j)
    out: dict[int, tuple[HalfEdgeGraph, ...]] = {v: () for v in range(vmax + 1)}
    if j == 1 and i == 2:
        out[0] = (HalfEdgeGraph(2, 0, ((0, 1),)),)
    base = _flower(i, j)
    if base is None or vmax < 1:
        return out
    level = {structural_key(base): canonical(base, Parity.ODD)[0].graph}
    for v in range(1, vmax + 1):
        out[v] = tuple(level[k] for k in sorted(level))
        if v == vmax:
            break
        nxt: dict[tuple, HalfEdgeGraph] = {}
        for g in out[v]:
            for h in expansions(g):
                key = structural_key(h)
                if key not in nxt:
                    nxt[key] = canonical(h, Parity.ODD)[0].graph
        level = nxt
    return out


def has_loop(g: HalfEdgeGraph) -> bool:
    return any(a == b for a, b in g.edges)


def enumerate_graphs(i: int, j: int, v: int, parity_d, parity_k=Parity.ODD,
                     loop_free: bool = False) -> list[GraphClass]:
    """Nonzero classes with ``i`` external and ``v`` internal vertices in complexity ``j``.

    ``loop_free`` keeps only graphs without loops; splitting never creates a
    loop, so these span a subcomplex.
    """
    vmax = hodge_bounds(i, j)
    if not 0 <= v <= vmax:
        raise ValueError(f"v={v} outside 0..{vmax} for i={i}, j={j}")
    out = []
    for g in structural_graphs(i, j)[v]:
        if loop_free and has_loop(g):
            continue
        cls, _ = canonical(g, parity_d, parity_k)
        if not cls.zero:
            out.append(cls)
    return out


def euler_table(parity_d, jmax: int, parity_k=Parity.ODD):
    """Graph-side homotopy Euler table: ``sum_v (-1)^t #classes`` per ``(i, j)``.

    Degrees are evaluated at ``d = 3`` (odd) or ``d = 4`` (even) and
    ``k = 1`` (odd) or ``k = 2`` (even).
    """
    from .hodge import HOMOTOPY, EulerTable

    pd, pk = Parity.of(parity_d), Parity.of(parity_k)
    d = pd.representative
    k = 1 if pk is Parity.ODD else 2
    entries = {}
    for j in range(1, jmax + 1):
        for i in range(1, 2 * j + 1):
            chi = 0
            for v in range(0, 2 * j - i + 1):
                count = len(enumerate_graphs(i, j, v, pd, pk))
                chi += (-1) ** (degree(i, j, v, k).at(d) % 2) * count
            if chi:
                entries[(i, j)] = chi
    return EulerTable(HOMOTOPY, pd, jmax, entries)

"""Verification suites comparing computed data against bundled references and each other.

Each suite returns a list of :class:`Check` records, one per compared cell.
``corrupt=True`` injects a genuine defect upstream of the comparison so the
suite is expected to fail; it exists as a negative control.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .cycleindex import conf_cycle_index, factor_operator, hodge_cycle_index, pair
from .exact import Rational, USeries, XPoly
from .fixtures import chord_primitives, euler_fixture, load
from .genfun import Parity, assemble, factor, specialize
from .graphs import HalfEdgeGraph, automorphism_order, enumerate_graphs, euler_table, hodge_bounds
from .hodge import HOMOLOGY, HOMOTOPY, even_closed_form, expected_total, homotopy_from_homology, parity_sums, table_from_series
from .homology import build_complex, homology_dims, verify_d_squared

__all__ = ["Check", "SUITES", "run_suite", "EXPANSIONS", "GRAPH_COUNTS", "HOMOLOGY_CELLS", "TWO_LEG_TRIVALENT"]

JMAX = 23
IMAX = 23

# P_j(x) for j = 1..4, highest degree first
EXPANSIONS = {
    Parity.ODD: ("x^2", "x^4 + x^2 - x", "x^6 + x^4 - x^3 + x^2 - x", "x^8 + x^6 - x^5 + 3*x^4 - 3*x^3 + x^2 - x"),
    Parity.EVEN: ("-x", "x^3", "-x^4 - x^2 + x", "x^6 + x^3 - x^2"),
}

# (i, j, parity_d, loop_free) -> number of nonzero classes summed over v
GRAPH_COUNTS = {
    (2, 1, Parity.ODD, False): 1,
    (1, 1, Parity.EVEN, False): 1,
    (2, 3, Parity.ODD, False): 5,
    (1, 3, Parity.ODD, False): 9,
    (3, 3, Parity.ODD, False): 0,
    (4, 3, Parity.ODD, False): 0,
    # even d with j >= 2 is read on the loop-free subcomplex
    (3, 3, Parity.EVEN, True): 0,
}

# (i, j, parity_d) -> {v: (dim, degree string)}
HOMOLOGY_CELLS = {
    (2, 1, Parity.ODD): {0: (1, "d-3")},
    (1, 1, Parity.ODD): {},
    (2, 2, Parity.ODD): {2: (1, "2d-6")},
    (1, 2, Parity.ODD): {2: (1, "2d-5")},
    (3, 2, Parity.ODD): {},
    (4, 2, Parity.ODD): {},
    (2, 3, Parity.ODD): {4: (1, "3d-9")},
    (1, 3, Parity.ODD): {4: (1, "3d-8")},
    (3, 3, Parity.ODD): {},
    (4, 3, Parity.ODD): {},
    (1, 1, Parity.EVEN): {1: (1, "d-3")},
    (2, 1, Parity.EVEN): {},
    (3, 2, Parity.EVEN): {1: (1, "2d-6")},
    (1, 2, Parity.EVEN): {},
    (2, 2, Parity.EVEN): {},
    (4, 2, Parity.EVEN): {},
    (2, 3, Parity.EVEN): {4: (1, "3d-9")},
    (1, 3, Parity.EVEN): {4: (1, "3d-8")},
    (3, 3, Parity.EVEN): {},
    (4, 3, Parity.EVEN): {},
}

# the three trivalent graphs with two legs in complexity 3, and their symmetry orders
TWO_LEG_TRIVALENT = (
    # leg, bubble, edge, bubble, leg
    (HalfEdgeGraph.from_text("ext=2 int=4 edges=0-2,2-3,2-3,3-4,4-5,4-5,5-1"), 8),
    # tetrahedron with one edge cut open into the two legs
    (HalfEdgeGraph.from_text("ext=2 int=4 edges=0-2,1-3,2-4,2-5,3-4,3-5,4-5"), 4),
    # square with one doubled side, legs on the opposite side
    (HalfEdgeGraph.from_text("ext=2 int=4 edges=0-2,1-3,2-3,2-4,3-5,4-5,4-5"), 4),
)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.suite} {self.name}: expected {self.expected}, got {self.got}"


def _corrupted(F: USeries) -> USeries:
    # an extra x*u^3 term: still integral after inversion, so only the comparison catches it
    bump = [XPoly.const(0)] * (F.order + 1)
    if F.order >= 3:
        bump[3] = XPoly.x()
    return F + USeries(bump, F.order)


def _series(parity: Parity, J: int, corrupt: bool) -> USeries:
    F = assemble(parity, J)
    return _corrupted(F) if corrupt else F


def _compare_tables(out: list, suite: str, label: str, expected, got, imax: int | None) -> None:
    cells = set(expected.entries) | set(got.entries)
    if imax is not None:
        cells = {c for c in cells if c[0] <= imax}
    for i, j in sorted(cells, key=lambda c: (c[1], c[0])):
        out.append(Check(suite, f"{label} (i={i}, j={j})", expected[i, j], got[i, j]))


def suite_tables(corrupt: bool = False) -> list[Check]:
    out = []
    for parity in Parity:
        F = _series(parity, 4, corrupt)
        for j, text in enumerate(EXPANSIONS[parity], start=1):
            out.append(Check("tables", f"P_{j} {parity.value}", text, str(F[j])))
    for parity in Parity:
        F = _series(parity, JMAX, corrupt)
        pi = homotopy_from_homology(F, parity=parity)
        _compare_tables(out, "tables", f"homotopy_{parity.value}", euler_fixture(HOMOTOPY, parity), pi, IMAX)
        totals = load(f"homotopy_{parity.value}").totals
        for j, tot in sorted(totals.items()):
            got = sum(abs(v) for v in pi.row(j).values())
            out.append(Check("tables", f"homotopy_{parity.value} sum|chi| j={j}", tot, got))
        hom = table_from_series(F, parity, HOMOLOGY)
        _compare_tables(out, "tables", f"homology_{parity.value}", euler_fixture(HOMOLOGY, parity), hom, IMAX)
    return out


def _rational_coeffs(series: USeries) -> list:
    return [series[j][0] for j in range(series.order + 1)]


def _recurrence(a1: int, a2: int, J: int) -> list:
    # coefficients of 1/(1 - a1 u - a2 u^2)
    c = [Rational(1)]
    for n in range(1, J + 1):
        c.append(a1 * c[n - 1] + (a2 * c[n - 2] if n >= 2 else 0))
    return c


def suite_closed_forms(corrupt: bool = False) -> list[Check]:
    out = []
    closed = {
        (Parity.ODD, 1): (1, 0),
        (Parity.ODD, -1): (1, 2),
        (Parity.EVEN, 1): (-1, 0),
        (Parity.EVEN, -1): (1, -2),
    }
    for (parity, x0), (a1, a2) in closed.items():
        F = _series(parity, JMAX, corrupt)
        got = _rational_coeffs(specialize(F, x0))
        want = _recurrence(a1, a2, JMAX)
        for j in range(JMAX + 1):
            out.append(Check("closed-forms", f"F_{parity.value}({x0}) u^{j}", int(want[j]), int(got[j])))
    for parity in Parity:
        pi = homotopy_from_homology(_series(parity, JMAX, corrupt), parity=parity)
        for s in parity_sums(pi, check=False):
            out.append(Check("closed-forms", f"{parity.value} total j={s.j}", expected_total(parity, s.j), s.total))
            if parity is Parity.ODD and s.j >= 2:
                out.append(Check("closed-forms", f"odd even-degree sum j={s.j}", even_closed_form(s.j), s.even))
            if parity is Parity.ODD and s.j >= 10:
                target = Rational(2 ** s.j, 2 * s.j)
                within = s.even > 0 and target / 2 <= s.even <= 2 * target
                out.append(Check("closed-forms", f"odd even-degree growth j={s.j}", True, within))
    return out


def suite_oracle(corrupt: bool = False) -> list[Check]:
    out = []
    H = hodge_cycle_index(8)
    for parity in Parity:
        # dropping the desuspension sign is a genuine convention error
        P = pair(H, conf_cycle_index(parity, 8, 4), desuspend=not corrupt)
        F = assemble(parity, 4)
        for j in range(5):
            out.append(Check("oracle", f"pairing {parity.value} u^{j}", str(F[j]), str(P[j])))
        for ell in (1, 2, 3):
            A = factor(ell, parity, 8)
            B = factor_operator(ell, parity, 8)
            for j in range(9):
                out.append(Check("oracle", f"factor l={ell} {parity.value} u^{j}", str(A[j]), str(B[j])))
    return out


def _corrupt_complex(c):
    # flip the sign of one differential entry in the first map that has a successor
    for v in sorted(c.maps):
        M = c.maps[v]
        if M.rows and v + 1 in c.maps and c.maps[v + 1].rows:
            r = min(M.rows)
            col = min(M.rows[r])
            M.rows[r][col] = -M.rows[r][col]
            return


def suite_graphs(corrupt: bool = False) -> list[Check]:
    out = []
    for (i, j, pd, lf), want in GRAPH_COUNTS.items():
        got = sum(len(enumerate_graphs(i, j, v, pd, loop_free=lf)) for v in range(hodge_bounds(i, j) + 1))
        tag = " loop-free" if lf else ""
        out.append(Check("graphs", f"count (i={i}, j={j}, {pd.value}{tag})", want, got))
    for pd in Parity:
        for pk in Parity:
            for j in range(1, 5):
                for i in range(1, 2 * j + 1):
                    c = build_complex(i, j, pd, pk)
                    if corrupt:
                        c = _copy_complex(c)
                        _corrupt_complex(c)
                    rep = verify_d_squared(c)
                    where = "" if rep else f" (first bad entry v={rep.v} row={rep.row} col={rep.col})"
                    out.append(Check("graphs", f"d^2=0 (i={i}, j={j}, d {pd.value}, k {pk.value}){where}", True, rep.ok))
    for pd in Parity:
        fx = homotopy_from_homology(assemble(pd, 4), parity=pd)
        _compare_tables(out, "graphs", f"euler {pd.value}", fx, euler_table(pd, 4), None)
    for n, (g, want) in enumerate(TWO_LEG_TRIVALENT, start=1):
        out.append(Check("graphs", f"automorphism order, two-leg trivalent graph {n}", want, automorphism_order(g)))
    return out


def _copy_complex(c):
    from copy import deepcopy

    return deepcopy(c)


def _dims(i: int, j: int, pd: Parity, corrupt: bool) -> dict:
    c = build_complex(i, j, pd)
    if corrupt:
        c = _copy_complex(c)
        _corrupt_complex(c)
    try:
        return {v: (dim, str(deg)) for v, (dim, deg) in homology_dims(c).items()}
    except AssertionError as exc:
        return {"error": str(exc)}


def suite_homology(corrupt: bool = False) -> list[Check]:
    out = []
    for (i, j, pd), want in HOMOLOGY_CELLS.items():
        out.append(Check("homology", f"H (i={i}, j={j}, {pd.value})", want, _dims(i, j, pd, corrupt)))
    prim = chord_primitives()
    for j in (1, 2, 3):
        dims = _dims(2, j, Parity.ODD, corrupt)
        top = 2 * j - 2
        got = dims.get(top, (0, ""))[0] if "error" not in dims else dims
        out.append(Check("homology", f"top-degree primitives (i=2, j={j})", prim.rows[j].get(2, 0), got))
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "tables": suite_tables,
    "closed-forms": suite_closed_forms,
    "oracle": suite_oracle,
    "graphs": suite_graphs,
    "homology": suite_homology,
}


def run_suite(name: str, corrupt: bool = False) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn(corrupt)]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](corrupt)

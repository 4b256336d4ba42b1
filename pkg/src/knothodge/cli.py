"""Command-line entry point: ``knothodge {table,verify,graphs,genfun,oracle}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .genfun import Parity, assemble
from .hodge import HOMOLOGY, HOMOTOPY, EulerTable, homotopy_from_homology, table_from_series

__all__ = ["main", "build_table", "format_table", "parse_table"]

FORMATS = ("csv", "json", "md")
MAX_JMAX = 64


def build_table(kind: str, parity, jmax: int) -> EulerTable:
    if not 0 <= jmax <= MAX_JMAX:
        raise ValueError(f"jmax must be in 0..{MAX_JMAX}")
    F = assemble(parity, jmax)
    if kind == HOMOLOGY:
        return table_from_series(F, parity, HOMOLOGY)
    if kind == HOMOTOPY:
        return homotopy_from_homology(F, parity=parity)
    raise ValueError(f"unknown table kind {kind!r}")


def _columns(T: EulerTable) -> list[int]:
    return list(range(1, T.max_hodge() + 1))


def format_table(T: EulerTable, fmt: str) -> str:
    """Serialize deterministically; zero cells are omitted (JSON) or left blank."""
    if fmt == "json":
        entries = [{"i": i, "j": j, "value": v} for (i, j), v in T.entries.items()]
        blob = {"kind": T.kind, "parity": T.parity.value, "jmax": T.jmax, "entries": entries}
        return json.dumps(blob, indent=1) + "\n"
    cols = _columns(T)
    rows = [[str(j)] + [str(T[i, j]) if T[i, j] else "" for i in cols] for j in range(1, T.jmax + 1)]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["j"] + [str(i) for i in cols])
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "md":
        head = ["j\\i"] + [str(i) for i in cols]
        lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unsupported format {fmt!r}")


def parse_table(text: str, fmt: str, kind: str | None = None, parity=None) -> EulerTable:
    """Inverse of :func:`format_table`; ``kind``/``parity`` are needed for csv and md."""
    if fmt == "json":
        blob = json.loads(text)
        cells = {(e["i"], e["j"]): e["value"] for e in blob["entries"]}
        return EulerTable(blob["kind"], blob["parity"], blob["jmax"], cells)
    if fmt == "csv":
        grid = list(csv.reader(io.StringIO(text)))
    elif fmt == "md":
        grid = [[c.strip() for c in line.strip().strip("|").split("|")]
                for n, line in enumerate(text.splitlines()) if n != 1]
    else:
        raise ValueError(f"unsupported format {fmt!r}")
    cols = [int(c) for c in grid[0][1:]]
    cells = {}
    for line in grid[1:]:
        j = int(line[0])
        for i, cell in zip(cols, line[1:]):
            if cell:
                cells[(i, j)] = int(cell)
    return EulerTable(kind, parity, len(grid) - 1, cells)


def _parity_of_k(k: int) -> Parity:
    if k < 1:
        raise ValueError("--k must be positive")
    return Parity.ODD if k % 2 else Parity.EVEN


def cmd_table(args) -> int:
    T = build_table(args.kind, args.parity, args.jmax)
    sys.stdout.write(format_table(T, args.format))
    return 0


def cmd_verify(args) -> int:
    from .checks import run_suite

    checks = run_suite(args.suite, corrupt=args.corrupt)
    failed = 0
    for c in checks:
        if not c.ok:
            failed += 1
        if not args.quiet or not c.ok:
            print(c.line())
    print(f"{args.suite}: {len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


def cmd_graphs(args) -> int:
    from .graphs import degree, enumerate_graphs, hodge_bounds
    from .homology import build_complex, homology_dims

    pk = _parity_of_k(args.k)
    vmax = hodge_bounds(args.i, args.j)
    if args.action == "count":
        counts = [len(enumerate_graphs(args.i, args.j, v, args.parity, pk, args.loop_free)) for v in range(vmax + 1)]
        for v, n in enumerate(counts):
            print(f"v={v} degree={degree(args.i, args.j, v, args.k)} count={n}")
        print(f"total {sum(counts)}")
    elif args.action == "list":
        for v in range(vmax + 1):
            for c in enumerate_graphs(args.i, args.j, v, args.parity, pk, args.loop_free):
                print(f"v={v} {c.to_text()}")
    elif args.action == "homology":
        c = build_complex(args.i, args.j, Parity.of(args.parity), pk, args.loop_free)
        dims = homology_dims(c)
        for v, (dim, deg) in dims.items():
            print(f"v={v} degree={deg} dim={dim}")
        if not dims:
            print("zero")
    elif args.action == "euler":
        c = build_complex(args.i, args.j, Parity.of(args.parity), pk, args.loop_free)
        d = Parity.of(args.parity).representative
        print(f"euler {c.euler_characteristic()} (signs at d={d}, k={args.k})")
    return 0


def cmd_genfun(args) -> int:
    F = assemble(args.parity, args.jmax)
    for j in range(F.order + 1):
        print(f"P_{j} = {F[j]}")
    return 0


def cmd_oracle(args) -> int:
    from .cycleindex import conf_cycle_index, hodge_cycle_index, pair

    N = 2 * args.jmax
    P = pair(hodge_cycle_index(N), conf_cycle_index(args.parity, N, args.jmax))
    F = assemble(args.parity, args.jmax)
    bad = 0
    for j in range(args.jmax + 1):
        same = P[j] == F[j]
        bad += not same
        print(f"{'PASS' if same else 'FAIL'} u^{j}: cycle index {P[j]} | product {F[j]}")
    return 1 if bad else 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="knothodge", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def parity(sp):
        sp.add_argument("--parity", choices=["odd", "even"], default="odd")

    t = sub.add_parser("table", help="Euler characteristic table")
    t.add_argument("--kind", choices=[HOMOLOGY, HOMOTOPY], default=HOMOTOPY)
    parity(t)
    t.add_argument("--jmax", type=int, default=10)
    t.add_argument("--format", choices=FORMATS, default="csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", nargs="?", default="all",
                   choices=["tables", "closed-forms", "oracle", "graphs", "homology", "all"])
    v.add_argument("--corrupt", action="store_true", help="inject a defect; the suite should fail")
    v.add_argument("--quiet", action="store_true", help="print failures and the summary only")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("graphs", help="graph complex in one (i, j) cell")
    g.add_argument("action", choices=["count", "list", "homology", "euler"])
    g.add_argument("--i", type=int, required=True)
    g.add_argument("--j", type=int, required=True)
    parity(g)
    g.add_argument("--k", type=int, default=1, help="degree of external vertices")
    g.add_argument("--loop-free", action="store_true")
    g.set_defaults(func=cmd_graphs)

    f = sub.add_parser("genfun", help="print P_j(x)")
    parity(f)
    f.add_argument("--jmax", type=int, default=6)
    f.set_defaults(func=cmd_genfun)

    o = sub.add_parser("oracle", help="cycle-index cross-check of P_j(x)")
    parity(o)
    o.add_argument("--jmax", type=int, default=4)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

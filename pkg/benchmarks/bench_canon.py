"""Compare the compiled and pure-Python canonical-labeling kernels.

Inputs are the (adjacency, refined cells) pairs of every graph enumerated up
to complexity ``--jmax``.  Run with ``python3 benchmarks/bench_canon.py``.
"""

from __future__ import annotations

import argparse
import time

from knothodge import _canon_py, _kernels
from knothodge.graphs import _refine, structural_graphs


def workload(jmax: int) -> list:
    cases = []
    for j in range(1, jmax + 1):
        for i in range(1, 2 * j + 1):
            for graphs in structural_graphs(i, j).values():
                for g in graphs:
                    A = g.multiplicities()
                    n = g.n_vertices
                    cases.append((n, [A[x][y] for x in range(n) for y in range(n)], _refine(g, A)))
    return cases


def timed(fn, cases, repeat: int) -> tuple[float, list]:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [fn(*c) for c in cases]
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--jmax", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    cases = workload(args.jmax)
    print(f"{len(cases)} graphs, up to {max(c[0] for c in cases)} vertices")
    t_py, out_py = timed(_canon_py.search, cases, args.repeat)
    print(f"python  {t_py * 1e3:9.2f} ms")
    if _kernels.BACKEND != "cython":
        print("compiled kernel not built; nothing to compare")
        return
    t_cy, out_cy = timed(_kernels.search, cases, args.repeat)
    if out_cy != out_py:
        raise SystemExit("kernels disagree")
    print(f"cython  {t_cy * 1e3:9.2f} ms")
    print(f"speedup {t_py / t_cy:9.1f}x")


if __name__ == "__main__":
    main()

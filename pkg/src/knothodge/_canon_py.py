"""Pure-Python canonical-labeling search (fallback for the compiled ``_canon`` module)."""

from __future__ import annotations


def search(n: int, adj: list, cells: list) -> tuple[tuple, list]:
    """Lexicographically least relabeled adjacency over cell-respecting orders.

    ``adj`` is the row-major ``n*n`` multiplicity matrix and ``cells`` an
    ordered partition of ``range(n)``; position ``q`` may only receive a vertex
    from the cell covering ``q``.  The certificate lists ``B[q][r]`` for
    ``r <= q`` in order of ``q``.  Returns ``(certificate, minimizers)`` where
    each minimizer ``order`` has ``order[q]`` = the vertex placed at ``q``.
    """
    pos_cell = []
    for cell in cells:
        pos_cell.extend([cell] * len(cell))
    total = n * (n + 1) // 2
    best = [0] * total
    cur = [0] * total
    order = [0] * n
    used = [False] * n
    eq = [False] * (n + 1)
    state = {"have": False}
    minimizers: list = []

    def rec(q: int) -> None:
        if q == n:
            if state["have"] and eq[n]:
                minimizers.append(tuple(order))
            else:
                best[:] = cur
                state["have"] = True
                minimizers.clear()
                minimizers.append(tuple(order))
                for t in range(n + 1):
                    eq[t] = True
            return
        off = q * (q + 1) // 2
        for w in pos_cell[q]:
            if used[w]:
                continue
            row = w * n
            for s in range(q):
                cur[off + s] = adj[row + order[s]]
            cur[off + q] = adj[row + w]
            if state["have"] and eq[q]:
                seg, ref = cur[off:off + q + 1], best[off:off + q + 1]
                if seg > ref:
                    continue
                eq[q + 1] = seg == ref
            else:
                eq[q + 1] = False
            used[w] = True
            order[q] = w
            rec(q + 1)
            used[w] = False

    if n == 0:
        return (), [()]
    rec(0)
    return tuple(best), minimizers

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical-labeling search; same contract as ``_canon_py.search``."""

from libc.stdlib cimport malloc, free


cdef struct SearchState:
    int n
    int *adj
    int *cell_start
    int *cell_end
    int *cell_verts
    int *best
    int *cur
    int *order
    int *used
    int *eq
    int have


cdef int _cmp_seg(int *a, int *b, int length) nogil:
    cdef int t
    for t in range(length):
        if a[t] < b[t]:
            return -1
        if a[t] > b[t]:
            return 1
    return 0


cdef void _rec(SearchState *st, int q, list minimizers):
    cdef int n = st.n
    cdef int t, s, w, idx, off, row, c, total
    if q == n:
        if st.have and st.eq[n]:
            minimizers.append(tuple([st.order[t] for t in range(n)]))
        else:
            total = n * (n + 1) // 2
            for t in range(total):
                st.best[t] = st.cur[t]
            st.have = 1
            del minimizers[:]
            minimizers.append(tuple([st.order[t] for t in range(n)]))
            for t in range(n + 1):
                st.eq[t] = 1
        return
    off = q * (q + 1) // 2
    for idx in range(st.cell_start[q], st.cell_end[q]):
        w = st.cell_verts[idx]
        if st.used[w]:
            continue
        row = w * n
        for s in range(q):
            st.cur[off + s] = st.adj[row + st.order[s]]
        st.cur[off + q] = st.adj[row + w]
        if st.have and st.eq[q]:
            c = _cmp_seg(st.cur + off, st.best + off, q + 1)
            if c > 0:
                continue
            st.eq[q + 1] = 1 if c == 0 else 0
        else:
            st.eq[q + 1] = 0
        st.used[w] = 1
        st.order[q] = w
        _rec(st, q + 1, minimizers)
        st.used[w] = 0


def search(int n, adj, cells):
    cdef SearchState st
    cdef int total = n * (n + 1) // 2
    cdef int q, t, start, k
    cdef list minimizers = []
    if n == 0:
        return (), [()]
    st.n = n
    st.adj = <int *> malloc(n * n * sizeof(int))
    st.cell_start = <int *> malloc(n * sizeof(int))
    st.cell_end = <int *> malloc(n * sizeof(int))
    st.cell_verts = <int *> malloc(n * sizeof(int))
    st.best = <int *> malloc(total * sizeof(int))
    st.cur = <int *> malloc(total * sizeof(int))
    st.order = <int *> malloc(n * sizeof(int))
    st.used = <int *> malloc(n * sizeof(int))
    st.eq = <int *> malloc((n + 1) * sizeof(int))
    try:
        for t in range(n * n):
            st.adj[t] = adj[t]
        q = 0
        for cell in cells:
            start = q
            for v in cell:
                st.cell_verts[q] = v
                q += 1
            for k in range(start, q):
                st.cell_start[k] = start
                st.cell_end[k] = q
        if q != n:
            raise ValueError("cells must partition range(n)")
        for t in range(n):
            st.used[t] = 0
            st.order[t] = 0
        for t in range(total):
            st.best[t] = 0
            st.cur[t] = 0
        for t in range(n + 1):
            st.eq[t] = 0
        st.have = 0
        _rec(&st, 0, minimizers)
        return tuple([st.best[t] for t in range(total)]), minimizers
    finally:
        free(st.adj)
        free(st.cell_start)
        free(st.cell_end)
        free(st.cell_verts)
        free(st.best)
        free(st.cur)
        free(st.order)
        free(st.used)
        free(st.eq)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``_kernels_py``.

Inputs are C-contiguous int64 arrays with ``IINF`` as the tropical zero.
"""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()

ctypedef long long i64

cdef i64 IINF_C = (<i64>1) << 62
IINF = 1 << 62
LIMIT = 1 << 50


cdef bint _in_hull(const i64[:, ::1] G, const unsigned char[::1] active,
                   Py_ssize_t skip, const i64[::1] x, i64* lam) noexcept nogil:
    cdef Py_ssize_t N = G.shape[0], n = G.shape[1]
    cdef Py_ssize_t j, v
    cdef i64 best, d, gv
    cdef bint have
    for j in range(N):
        lam[j] = IINF_C
        if j == skip or not active[j]:
            continue
        have = False
        best = 0
        for v in range(n):
            gv = G[j, v]
            if gv >= IINF_C:
                continue
            if x[v] >= IINF_C:
                best = IINF_C
                have = True
                break
            d = x[v] - gv
            if not have or d > best:
                best = d
                have = True
        if have:
            lam[j] = best
    for v in range(n):
        if x[v] >= IINF_C:
            continue
        for j in range(N):
            if lam[j] < IINF_C and G[j, v] < IINF_C and lam[j] + G[j, v] == x[v]:
                break
        else:
            return False
    return True


def residuate(G, x):
    cdef const i64[:, ::1] g = np.ascontiguousarray(G, dtype=np.int64).reshape(len(G), len(x))
    cdef const i64[::1] xv = np.ascontiguousarray(x, dtype=np.int64)
    cdef Py_ssize_t N = g.shape[0]
    cdef unsigned char[::1] active = np.ones(N, dtype=np.uint8)
    cdef i64* lam = <i64*>malloc((N + 1) * sizeof(i64))
    cdef bint member
    try:
        member = _in_hull(g, active, -1, xv, lam)
        out = [lam[j] for j in range(N)]
    finally:
        free(lam)
    return out, bool(member)


def prune_nonextreme(G):
    cdef const i64[:, ::1] g = np.ascontiguousarray(G, dtype=np.int64)
    cdef Py_ssize_t N = g.shape[0], i
    cdef unsigned char[::1] keep = np.ones(N, dtype=np.uint8)
    cdef i64* lam = <i64*>malloc((N + 1) * sizeof(i64))
    try:
        with nogil:
            for i in range(N):
                if _in_hull(g, keep, i, g[i], lam):
                    keep[i] = 0
    finally:
        free(lam)
    return [bool(keep[i]) for i in range(N)]


cdef int _singular(i64* M, Py_ssize_t r, i64* u, i64* v, Py_ssize_t* p,
                   Py_ssize_t* way, i64* minv, unsigned char* used,
                   Py_ssize_t* col_of, Py_ssize_t* row_of, unsigned char* color,
                   Py_ssize_t* stack, Py_ssize_t* pos) noexcept nogil:
    # M is row-major r x r.  Returns 1 if tropically singular.
    cdef Py_ssize_t i, j, j0, j1, i0, s, node, top, nxt
    cdef i64 delta, cur, c
    for j in range(r + 1):
        u[j] = 0
        v[j] = 0
        p[j] = 0
        way[j] = 0
    for i in range(1, r + 1):
        p[0] = i
        j0 = 0
        for j in range(r + 1):
            minv[j] = IINF_C
            used[j] = 0
        while True:
            used[j0] = 1
            i0 = p[j0]
            delta = IINF_C
            j1 = -1
            for j in range(1, r + 1):
                if used[j]:
                    continue
                c = M[(i0 - 1) * r + j - 1]
                if c < IINF_C:
                    cur = c - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            if j1 < 0:
                return 1
            for j in range(r + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                elif minv[j] < IINF_C:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    for j in range(1, r + 1):
        col_of[p[j] - 1] = j - 1
        row_of[j - 1] = p[j] - 1
    # cycle search in the tight-arc graph on rows
    for i in range(r):
        color[i] = 0
    for s in range(r):
        if color[s]:
            continue
        top = 0
        stack[0] = s
        pos[0] = 0
        color[s] = 1
        while top >= 0:
            node = stack[top]
            if pos[top] >= r:
                color[node] = 2
                top -= 1
                continue
            j = pos[top]
            pos[top] += 1
            if j == col_of[node]:
                continue
            c = M[node * r + j]
            if c >= IINF_C or c - u[node + 1] - v[j + 1] != 0:
                continue
            nxt = row_of[j]
            if color[nxt] == 1:
                return 1
            if color[nxt] == 0:
                color[nxt] = 1
                top += 1
                stack[top] = nxt
                pos[top] = 0
    return 0


cdef struct Work:
    i64* u
    i64* v
    Py_ssize_t* p
    Py_ssize_t* way
    i64* minv
    unsigned char* used
    Py_ssize_t* col_of
    Py_ssize_t* row_of
    unsigned char* color
    Py_ssize_t* stack
    Py_ssize_t* pos
    i64* sub


cdef Work _alloc(Py_ssize_t r):
    cdef Work w
    w.u = <i64*>malloc((r + 1) * sizeof(i64))
    w.v = <i64*>malloc((r + 1) * sizeof(i64))
    w.p = <Py_ssize_t*>malloc((r + 1) * sizeof(Py_ssize_t))
    w.way = <Py_ssize_t*>malloc((r + 1) * sizeof(Py_ssize_t))
    w.minv = <i64*>malloc((r + 1) * sizeof(i64))
    w.used = <unsigned char*>malloc((r + 1) * sizeof(unsigned char))
    w.col_of = <Py_ssize_t*>malloc((r + 1) * sizeof(Py_ssize_t))
    w.row_of = <Py_ssize_t*>malloc((r + 1) * sizeof(Py_ssize_t))
    w.color = <unsigned char*>malloc((r + 1) * sizeof(unsigned char))
    w.stack = <Py_ssize_t*>malloc((r + 1) * sizeof(Py_ssize_t))
    w.pos = <Py_ssize_t*>malloc((r + 1) * sizeof(Py_ssize_t))
    w.sub = <i64*>malloc((r * r + 1) * sizeof(i64))
    return w


cdef void _release(Work w):
    free(w.u); free(w.v); free(w.p); free(w.way); free(w.minv); free(w.used)
    free(w.col_of); free(w.row_of); free(w.color); free(w.stack); free(w.pos)
    free(w.sub)


def is_singular(M):
    cdef const i64[:, ::1] m = np.ascontiguousarray(M, dtype=np.int64)
    cdef Py_ssize_t r = m.shape[0], i, j
    if m.shape[1] != r:
        raise ValueError("matrix is not square")
    cdef Work w = _alloc(r)
    cdef int res
    try:
        for i in range(r):
            for j in range(r):
                w.sub[i * r + j] = m[i, j]
        res = _singular(w.sub, r, w.u, w.v, w.p, w.way, w.minv, w.used,
                        w.col_of, w.row_of, w.color, w.stack, w.pos)
    finally:
        _release(w)
    return bool(res)


cdef bint _next_comb(Py_ssize_t* c, Py_ssize_t k, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i = k - 1, j
    while i >= 0 and c[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return True


def _distinct_finite(rows):
    seen = set()
    out = []
    for idx, row in enumerate(rows):
        finite = [int(v) for v in row if v < IINF]
        if not finite:
            continue
        mn = min(finite)
        key = tuple(int(v) - mn if v < IINF else IINF for v in row)
        if key in seen:
            continue
        seen.add(key)
        out.append(idx)
    return out


def tropical_rank(M):
    if len(M) == 0:
        return 0, (), ()
    cdef const i64[:, ::1] m = np.ascontiguousarray(M, dtype=np.int64)
    rows_l = _distinct_finite(np.asarray(m).tolist())
    cols_l = _distinct_finite(np.asarray(m).T.tolist())
    cdef Py_ssize_t R = len(rows_l), C = len(cols_l)
    cdef Py_ssize_t top = min(R, C)
    if top == 0:
        return 0, (), ()
    cdef Py_ssize_t* rows = <Py_ssize_t*>malloc(R * sizeof(Py_ssize_t))
    cdef Py_ssize_t* cols = <Py_ssize_t*>malloc(C * sizeof(Py_ssize_t))
    cdef Py_ssize_t* rc = <Py_ssize_t*>malloc((top + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* cc = <Py_ssize_t*>malloc((top + 1) * sizeof(Py_ssize_t))
    cdef Work w = _alloc(top)
    cdef Py_ssize_t size, i, j, found = 0
    try:
        for i in range(R):
            rows[i] = rows_l[i]
        for i in range(C):
            cols[i] = cols_l[i]
        with nogil:
            size = top
            while size > 0 and not found:
                for j in range(size):
                    cc[j] = j
                while True:
                    for i in range(size):
                        rc[i] = i
                    while True:
                        for i in range(size):
                            for j in range(size):
                                w.sub[i * size + j] = m[rows[rc[i]], cols[cc[j]]]
                        if not _singular(w.sub, size, w.u, w.v, w.p, w.way, w.minv,
                                         w.used, w.col_of, w.row_of, w.color,
                                         w.stack, w.pos):
                            found = size
                            break
                        if not _next_comb(rc, size, R):
                            break
                    if found or not _next_comb(cc, size, C):
                        break
                if not found:
                    size -= 1
        if not found:
            return 0, (), ()
        return (int(found), tuple(int(rows[rc[i]]) for i in range(found)),
                tuple(int(cols[cc[j]]) for j in range(found)))
    finally:
        _release(w)
        free(rows); free(cols); free(rc); free(cc)

"""Pure-Python kernels on integer-scaled data.

Every kernel takes rows of Python ints in which the sentinel ``IINF`` stands
for the tropical zero.  Callers scale rationals by a common denominator
before entering here, and keep finite magnitudes below ``LIMIT`` so sums of
two finite values never reach the sentinel.  The compiled module
``_kernels`` exposes the same functions with identical results.
"""

from itertools import combinations

IINF = 1 << 62
LIMIT = 1 << 50


def residuate(G, x):
    """Least coefficients ``lam`` with ``min_i(lam_i + G_i) >= x``.

    Returns ``(lam, member)`` where ``member`` says whether the bound is met
    with equality in every coordinate, i.e. ``x`` lies in the hull of ``G``.
    """
    n = len(x)
    lam = []
    for g in G:
        best = None
        for v in range(n):
            gv = g[v]
            if gv >= IINF:
                continue
            xv = x[v]
            if xv >= IINF:
                best = IINF
                break
            d = xv - gv
            if best is None or d > best:
                best = d
        lam.append(IINF if best is None else best)
    for v in range(n):
        xv = x[v]
        if xv >= IINF:
            continue
        for g, lm in zip(G, lam):
            if lm < IINF and g[v] < IINF and lm + g[v] == xv:
                break
        else:
            return lam, False
    return lam, True


def _covered(G, keep, skip, x):
    n = len(x)
    lam = [IINF] * len(G)
    for j, g in enumerate(G):
        if j == skip or not keep[j]:
            continue
        best = None
        for v in range(n):
            gv = g[v]
            if gv >= IINF:
                continue
            if x[v] >= IINF:
                best = IINF
                break
            d = x[v] - gv
            if best is None or d > best:
                best = d
        if best is not None:
            lam[j] = best
    for v in range(n):
        xv = x[v]
        if xv >= IINF:
            continue
        for j, g in enumerate(G):
            lm = lam[j]
            if lm < IINF and g[v] < IINF and lm + g[v] == xv:
                break
        else:
            return False
    return True


def prune_nonextreme(G):
    """Mask of rows that are not in the hull of the remaining rows.

    Rows must be pairwise distinct after normalization; then the surviving
    set is the unique minimal generating set and the scan order is
    irrelevant.
    """
    keep = [True] * len(G)
    for i, g in enumerate(G):
        if _covered(G, keep, i, g):
            keep[i] = False
    return keep


def _assignment(M, r):
    # Hungarian method with forbidden (IINF) entries; returns the column
    # assigned to each row and the dual potentials, or None when no finite
    # permutation exists.
    u = [0] * (r + 1)
    v = [0] * (r + 1)
    p = [0] * (r + 1)
    way = [0] * (r + 1)
    for i in range(1, r + 1):
        p[0] = i
        j0 = 0
        minv = [IINF] * (r + 1)
        used = [False] * (r + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            row = M[i0 - 1]
            delta = IINF
            j1 = -1
            for j in range(1, r + 1):
                if used[j]:
                    continue
                c = row[j - 1]
                if c < IINF:
                    cur = c - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            if j1 < 0:
                return None
            for j in range(r + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                elif minv[j] < IINF:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    col_of = [0] * r
    for j in range(1, r + 1):
        col_of[p[j] - 1] = j - 1
    return col_of, u[1:], v[1:]


def is_singular(M):
    """Tropical singularity of a square matrix given as rows of ints."""
    r = len(M)
    res = _assignment(M, r)
    if res is None:
        return True
    col_of, u, v = res
    row_of = [0] * r
    for i, j in enumerate(col_of):
        row_of[j] = i
    # i -> i' when row i has a tight arc into the column matched to i'
    succ = []
    for i in range(r):
        row = M[i]
        out = []
        for j in range(r):
            if j != col_of[i] and row[j] < IINF and row[j] - u[i] - v[j] == 0:
                out.append(row_of[j])
        succ.append(out)
    color = [0] * r
    for s in range(r):
        if color[s]:
            continue
        stack = [(s, 0)]
        color[s] = 1
        while stack:
            node, k = stack[-1]
            if k < len(succ[node]):
                stack[-1] = (node, k + 1)
                nxt = succ[node][k]
                if color[nxt] == 1:
                    return True
                if color[nxt] == 0:
                    color[nxt] = 1
                    stack.append((nxt, 0))
            else:
                color[node] = 2
                stack.pop()
    return False


def _distinct_finite(rows):
    # Two lines that agree up to tropical scaling can never both sit in a
    # non-singular submatrix, so one representative per class suffices.
    seen = set()
    out = []
    for idx, row in enumerate(rows):
        finite = [v for v in row if v < IINF]
        if not finite:
            continue
        m = min(finite)
        key = tuple(v - m if v < IINF else IINF for v in row)
        if key in seen:
            continue
        seen.add(key)
        out.append(idx)
    return out


def tropical_rank(M):
    """Largest size of a tropically non-singular square submatrix.

    Returns ``(rank, rows, cols)`` with a witnessing submatrix (empty tuples
    for rank 0).
    """
    if not M:
        return 0, (), ()
    ncols = len(M[0])
    rows = _distinct_finite(M)
    cols = _distinct_finite([[M[i][j] for i in range(len(M))] for j in range(ncols)])
    top = min(len(rows), len(cols))
    for size in range(top, 0, -1):
        for cs in combinations(cols, size):
            for rs in combinations(rows, size):
                sub = [[M[i][j] for j in cs] for i in rs]
                if not is_singular(sub):
                    return size, rs, cs
    return 0, (), ()

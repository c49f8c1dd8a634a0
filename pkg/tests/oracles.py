"""Independent brute-force oracles.

Nothing here calls into the package: INF is ``None``, numbers are
Fractions or ints, and every answer comes from direct enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product


def perm_sums(m):
    r = len(m)
    sums = []
    for p in permutations(range(r)):
        if any(m[i][p[i]] is None for i in range(r)):
            continue
        sums.append(sum(m[i][p[i]] for i in range(r)))
    return sums


def brute_singular(m) -> bool:
    sums = perm_sums(m)
    if not sums:
        return True
    best = min(sums)
    return sums.count(best) >= 2


def brute_rank(m) -> int:
    rows, cols = len(m), len(m[0]) if m else 0
    for k in range(min(rows, cols), 0, -1):
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                if not brute_singular([[m[i][j] for j in cs] for i in rs]):
                    return k
    return 0


def brute_orthogonal(v, a) -> bool:
    sums = [x + y for x, y in zip(v, a) if x is not None and y is not None]
    if not sums:
        return True
    return sums.count(min(sums)) >= 2


def brute_hull_eval(gens, coeffs):
    n = len(gens[0])
    out = [None] * n
    for c, g in zip(coeffs, gens):
        if c is None:
            continue
        for i, x in enumerate(g):
            if x is None:
                continue
            y = x + c
            if out[i] is None or y < out[i]:
                out[i] = y
    return tuple(out)


# -- argmin-pair cell enumeration ---------------------------------------------


def _solve_tree(m, edges):
    # Values of nodes 1..m (node 0 is pinned to 0) making the chosen edges
    # x_v - x_u = w tight; None unless the edges form a spanning tree.
    adj = {i: [] for i in range(m + 1)}
    for u, v, w in edges:
        adj[u].append((v, w))
        adj[v].append((u, -w))
    val = {0: Fraction(0)}
    stack = [0]
    while stack:
        u = stack.pop()
        for v, w in adj[u]:
            if v not in val:
                val[v] = val[u] + w
                stack.append(v)
    if len(val) != m + 1:
        return None
    return val


def _affine_rank(points):
    if len(points) <= 1:
        return 0
    base = points[0]
    rows = [[p[i] - base[i] for i in range(len(base))] for p in points[1:]]
    rank = 0
    ncols = len(base)
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = Fraction(rows[r][c], 1) / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _cell(n, S, A, choice, R):
    """Vertices of one argmin-pair cell, pinned at x[S[0]] = 0 and boxed.

    Returns ``(vertices, dimension)`` or ``None`` for an empty cell.
    """
    parent = {s: (s, Fraction(0)) for s in S}

    def find(s):
        # x_s = x_root + offset
        root, off = parent[s]
        if root == s:
            return s, Fraction(0)
        r, o = find(root)
        parent[s] = (r, off + o)
        return r, off + o

    ineq = []
    for a, pair in zip(A, choice):
        if pair is None:
            continue
        mu, nu = pair
        # x_mu + a_mu == x_nu + a_nu
        rm, om = find(mu)
        rn, on = find(nu)
        want = a[mu] - a[nu]  # x_nu - x_mu
        if rm == rn:
            if on - om != want:
                return None
        else:
            parent[rn] = (rm, om + want - on)
        T = [j for j in S if a[j] is not None]
        for rho in T:
            if rho not in pair:
                ineq.append((mu, rho, a[rho] - a[mu]))  # x_mu - x_rho <= a_rho - a_mu
    roots = sorted({find(s)[0] for s in S}, key=S.index)
    pin = find(S[0])[0]
    order = [pin] + [r for r in roots if r != pin]
    idx = {r: i for i, r in enumerate(order)}
    m = len(order) - 1
    # constraints x_v - x_u <= w over class nodes
    cons = []
    for mu, rho, c in ineq:
        ru, ou = find(mu)
        rr, orr = find(rho)
        w = c - ou + orr  # x_ru - x_rr <= w
        if ru == rr:
            if w < 0:
                return None
            continue
        cons.append((idx[rr], idx[ru], w))
    for i in range(1, m + 1):
        cons.append((0, i, Fraction(R)))
        cons.append((i, 0, Fraction(R)))
    verts = set()
    for chosen in combinations(cons, m):
        val = _solve_tree(m, chosen)
        if val is None:
            continue
        if all(val[v] - val[u] <= w for u, v, w in cons):
            verts.add(tuple(val[i] for i in range(m + 1)))
    if not verts:
        return None
    verts = sorted(verts)
    dim = 1 + _affine_rank(verts)  # plus the all-ones direction

    def expand(vals):
        x = [None] * n
        for s in S:
            r, off = find(s)
            x[s] = vals[idx[r]] + off
        return tuple(x)

    pts = [expand(v) for v in verts]
    cen = tuple(sum(v[i] for v in verts) / len(verts) for i in range(m + 1))
    return pts + [expand(cen)], dim


def cell_samples(A, n, R=12):
    """Yield ``(points, dimension)`` for every nonempty argmin-pair cell of A-perp.

    Cells are indexed by a chart (the finite coordinates S) and, for each
    row with at least two finite terms on S, the pair of coordinates where
    the minimum is attained.  Rows with one finite term on S make the chart
    empty; rows with none impose nothing.
    """
    for mask in range(1, 2 ** n):
        S = [i for i in range(n) if mask >> i & 1]
        options = []
        empty = False
        for a in A:
            T = [j for j in S if a[j] is not None]
            if len(T) == 1:
                empty = True
                break
            options.append([None] if not T else list(combinations(T, 2)))
        if empty:
            continue
        for choice in product(*options):
            cell = _cell(n, S, A, choice, R)
            if cell is not None:
                yield cell


def _norm(r):
    fin = [x for x in r if x is not None]
    if not fin:
        return tuple(r)
    m = min(fin)
    return tuple(None if x is None else x - m for x in r)


def _key(r):
    # INF sorts last
    return tuple((1, 0) if x is None else (0, x) for x in r)


def canonical_instance(A, n):
    """Representative of A up to row order, scaling, duplicates and coordinate permutations."""

    rows = {_norm(r) for r in A}
    best = None
    for p in permutations(range(n)):
        cand = tuple(sorted(_key(tuple(r[p[i]] for i in range(n))) for r in rows))
        if best is None or cand < best:
            best = cand
    return tuple(tuple(None if f else x for f, x in r) for r in best)


def small_instances(max_n=4, max_k=2, values=(0, 1, 2, None)):
    """All A with entries in ``values``, n = 2..max_n, k = 0..max_k, one per symmetry class."""
    from itertools import combinations_with_replacement

    for n in range(2, max_n + 1):
        rows = sorted({_norm(r) for r in product(values, repeat=n)}, key=_key)
        seen = set()
        for k in range(0, max_k + 1):
            for A in combinations_with_replacement(rows, k):
                key = canonical_instance(A, n)
                if key not in seen:
                    seen.add(key)
                    yield n, [list(r) for r in key]

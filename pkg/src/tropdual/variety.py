"""Deciding whether a tropical linear prevariety is a tropical linear variety.

``A-perp`` is a tropical linear variety exactly when the generators of
``A-perp`` and of ``A-perp-perp`` admit liftings that are pairwise
orthogonal over the Puiseux field.  This module:

* rules the variety out when ``dim A-perp + dim A-perp-perp > n`` (for a
  pair of orthogonal complements the two dimensions sum to exactly n);
* otherwise searches for a subspace P over the Puiseux field whose
  tropicalization is ``A-perp`` and reads orthogonal liftings off the
  maximal minors of a basis of P, verifying them exactly;
* reports an honest ``inconclusive`` when the search budget runs out.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .core import (
    common_denominator,
    GeneratorSet,
    TropVector,
    hull_eval,
    hull_member,
    is_tropically_singular,
    matrix,
    normalize,
)
from .errors import ContractError, DimensionError, RankError
from .extrat import INF, ExtRat, ext
from .prevariety import dimension, double_orthogonal_generators, orthogonal_generators
from .puiseux import (
    PuiseuxPoly,
    PuiseuxVector,
    det,
    independent_subset,
    puiseux_dot,
    tropicalize_vector,
)

log = logging.getLogger(__name__)

VARIETY = "variety"
NOT_VARIETY = "not_variety"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Budget:
    """Search limits: restart rounds and maximum terms per lifted coordinate."""

    rounds: int = 20
    terms: int = 6

    def __post_init__(self):
        if self.rounds < 1 or self.terms < 1:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class BilinearSystem:
    """The equations ``sum_nu V[i][nu] W[j][nu] = 0`` for every pair (i, j).

    ``equations[(i, j)]`` lists the coordinates where both generators are
    finite; ``pinned_v[i]`` and ``pinned_w[j]`` list lifting coordinates
    fixed to the zero polynomial.
    """

    p: int
    q: int
    n: int
    equations: dict
    pinned_v: tuple
    pinned_w: tuple


def build_bilinear_system(xs: GeneratorSet, ys: GeneratorSet) -> BilinearSystem:
    if xs.ambient_dim != ys.ambient_dim:
        raise DimensionError("generator sets live in different dimensions")
    n = xs.ambient_dim
    eqs = {}
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            eqs[(i, j)] = tuple(nu for nu in range(n) if x[nu] is not INF and y[nu] is not INF)
    pin_v = tuple(tuple(nu for nu in range(n) if x[nu] is INF) for x in xs)
    pin_w = tuple(tuple(nu for nu in range(n) if y[nu] is INF) for y in ys)
    return BilinearSystem(len(xs), len(ys), n, eqs, pin_v, pin_w)


# -- Pluecker coordinates ----------------------------------------------------


@dataclass(frozen=True)
class PlueckerVector:
    """Maximal minors of a d x n basis, keyed by increasing column tuples."""

    d: int
    n: int
    coords: dict

    def __post_init__(self):
        if not any(self.coords.values()):
            raise RankError("all Pluecker coordinates vanish")

    @property
    def trop_coords(self) -> dict:
        return {k: v.valuation() for k, v in self.coords.items()}

    def dual(self) -> "PlueckerVector":
        """Pluecker vector of the orthogonal complement."""
        full = range(self.n)
        out = {}
        for I in combinations(full, self.n - self.d):
            comp = tuple(j for j in full if j not in I)
            sign = _perm_sign(comp + I)
            p = self.coords[comp]
            out[I] = p if sign > 0 else -p
        return PlueckerVector(self.n - self.d, self.n, out)


def _perm_sign(seq) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _minor(basis, cols) -> PuiseuxPoly:
    return det([[row[c] for c in cols] for row in basis])


def plucker_coordinates(basis: Sequence[Sequence[PuiseuxPoly]], n: int | None = None) -> PlueckerVector:
    """All maximal minors of ``basis``; rows must be independent."""
    basis = [tuple(r) for r in basis]
    if n is None:
        if not basis:
            raise DimensionError("ambient dimension needed for an empty basis")
        n = len(basis[0])
    if any(len(r) != n for r in basis):
        raise DimensionError("basis rows of unequal length")
    d = len(basis)
    if d > n:
        raise RankError(f"{d} vectors cannot be independent in dimension {n}")
    coords = {J: _minor(basis, J) for J in combinations(range(n), d)}
    if not any(coords.values()):
        raise RankError("basis rows are linearly dependent")
    return PlueckerVector(d, n, coords)


def _two_minima(values) -> bool:
    best, count = INF, 0
    for s in values:
        if s < best:
            best, count = s, 1
        elif s == best:
            count += 1
    return best is INF or count >= 2


def trop_space_member(pv: PlueckerVector, x: TropVector) -> bool:
    """Membership in the tropicalization of the subspace with Pluecker vector ``pv``."""
    x = tuple(ext(c) for c in x)
    if len(x) != pv.n:
        raise DimensionError(f"point of length {len(x)} in dimension {pv.n}")
    tc = pv.trop_coords
    for J in combinations(range(pv.n), pv.d + 1):
        vals = [tc[J[:i] + J[i + 1:]] + x[j] for i, j in enumerate(J)]
        if not _two_minima(vals):
            return False
    return True


def trop_generators_from_plucker(pv: PlueckerVector) -> list[TropVector]:
    """Rows ``A`` with ``A-perp`` equal to the tropicalized subspace.

    One row per (d+1)-subset J: the valuation of the complementary minor
    at each member of J, INF elsewhere.
    """
    tc = pv.trop_coords
    rows = []
    for J in combinations(range(pv.n), pv.d + 1):
        row = [INF] * pv.n
        for i, j in enumerate(J):
            row[j] = tc[J[:i] + J[i + 1:]]
        rows.append(tuple(row))
    return rows


def cocircuit_vectors(basis: Sequence[Sequence[PuiseuxPoly]], n: int) -> list[PuiseuxVector]:
    """Minimal-support vectors of the row space of ``basis``.

    For a (d-1)-subset S the vector ``nu -> det(basis[:, S + (nu,)])`` is a
    combination of the rows (expand along the last column).
    """
    d = len(basis)
    out = []
    if d == 0:
        return out
    for S in combinations(range(n), d - 1):
        vec = tuple(
            PuiseuxPoly.zero() if nu in S else _minor(basis, S + (nu,)) for nu in range(n)
        )
        if any(vec):
            out.append(vec)
    return out


def circuit_vectors(basis: Sequence[Sequence[PuiseuxPoly]], n: int) -> list[PuiseuxVector]:
    """Vectors of the orthogonal complement built from (d+1)-subsets.

    Coordinate ``j_i`` carries ``(-1)^i p_{J - j_i}``; pairing with a basis
    row gives a determinant with a repeated row.
    """
    d = len(basis)
    minors = {J: _minor(basis, J) for J in combinations(range(n), d)}
    out = []
    for J in combinations(range(n), d + 1):
        vec = [PuiseuxPoly.zero()] * n
        for i, j in enumerate(J):
            p = minors[J[:i] + J[i + 1:]]
            vec[j] = -p if i % 2 == 0 else p
        if any(vec):
            out.append(tuple(vec))
    return out


# -- lifting of hull points --------------------------------------------------


def lift_hull_point(
    V: Sequence[Sequence[PuiseuxPoly]],
    r: Sequence[ExtRat],
    target: TropVector,
    seed: int = 0,
) -> PuiseuxVector:
    """Lift ``min_i(r_i + trop(V_i))`` to ``sum_i s_i t^{r_i} V_i``.

    The integers ``s_i`` are chosen greedily, smallest positive first, so
    that no coordinate loses its leading term to cancellation.  ``seed`` is
    accepted for interface symmetry; the choice is deterministic.
    """
    V = [tuple(v) for v in V]
    r = [ext(c) for c in r]
    target = tuple(ext(c) for c in target)
    if len(r) != len(V):
        raise DimensionError(f"{len(r)} coefficients for {len(V)} vectors")
    if not V:
        if all(c is INF for c in target):
            return tuple(PuiseuxPoly.zero() for _ in target)
        raise ContractError("empty combination cannot reach a finite target")
    n = len(V[0])
    if len(target) != n or any(len(v) != n for v in V):
        raise DimensionError("lifting vectors and target disagree in length")
    trops = [tropicalize_vector(v) for v in V]
    expected = hull_eval(trops, r)
    if expected != target:
        raise ContractError(f"target {target} is not the claimed hull combination {expected}")
    active = [i for i, c in enumerate(r) if c is not INF]
    # For each coordinate, the generators attaining the minimum and their
    # leading coefficients; the choice of s must keep each sum nonzero.
    conditions = []
    for j in range(n):
        if target[j] is INF:
            continue
        idx = [i for i in active if trops[i][j] is not INF and trops[i][j] + r[i] == target[j]]
        conditions.append([(i, V[i][j].leading_coefficient()) for i in idx])
    last_of = {}
    for cond in conditions:
        last_of.setdefault(cond[-1][0], []).append(cond)
    s = {}
    for i in active:
        banned = set()
        for cond in last_of.get(i, []):
            partial = sum((s[k] * a for k, a in cond[:-1]), Fraction(0))
            banned.add(-partial / cond[-1][1])
        c = 1
        while c in banned:
            c += 1
        s[i] = c
    out = [PuiseuxPoly.zero()] * n
    for i in active:
        coef = PuiseuxPoly.monomial(s[i], r[i])
        out = [a + coef * b for a, b in zip(out, V[i])]
    out = tuple(out)
    if tropicalize_vector(out) != target:
        raise ContractError("lifting lost a leading term")  # unreachable by construction
    return out


# -- the decision procedure --------------------------------------------------


@dataclass(frozen=True)
class Obstruction:
    dim_perp: int
    dim_perp_perp: int
    n: int

    def holds(self) -> bool:
        return self.dim_perp + self.dim_perp_perp > self.n


def dimension_obstruction(xs: GeneratorSet, ys: GeneratorSet) -> Obstruction | None:
    """Dimensions too large for ``A-perp`` and ``A-perp-perp`` to be complementary."""
    if xs.ambient_dim != ys.ambient_dim:
        raise DimensionError("generator sets live in different dimensions")
    ob = Obstruction(dimension(xs), dimension(ys), xs.ambient_dim)
    return ob if ob.holds() else None


def _nonsingular_subsets(rows: list, size: int, limit: int = 64) -> list[tuple]:
    # Row subsets admitting a tropically non-singular size x size minor.
    if size == 0:
        return [()]
    n = len(rows[0])
    found = []
    for rs in combinations(range(len(rows)), size):
        for cs in combinations(range(n), size):
            if not is_tropically_singular([[rows[i][j] for j in cs] for i in rs]):
                found.append(rs)
                break
        if len(found) >= limit:
            break
    return found


def _random_lifting(
    x: TropVector, terms: int, rng: random.Random, spread: int, step: Fraction = Fraction(1)
) -> PuiseuxVector:
    # spread 0 asks for the plain lift 1 * t^x
    out = []
    for c in x:
        if c is INF:
            out.append(PuiseuxPoly.zero())
        elif spread == 0:
            out.append(PuiseuxPoly.monomial(1, c))
        else:
            coeffs = {c: rng.choice([-1, 1]) * rng.randint(1, spread)}
            for k in range(1, terms):
                coeffs[c + k * step] = rng.randint(-spread, spread)
            out.append(PuiseuxPoly(coeffs))
    return tuple(out)


def tropical_plucker_from_generators(rows: list, n: int, d: int) -> dict | None:
    """Tropical Pluecker vector of a tropical linear space given by generators.

    A d-subset B is a basis when, for each b in B, some generator is INF on
    ``B - b`` and finite at b; that generator is the fundamental cocircuit
    and gives ``pi(B - b + j) - pi(B) = g_j - g_b``.  Walking basis
    exchanges from one basis fixes pi up to a constant.  Returns ``None``
    when the generators are inconsistent with any tropical linear space.
    """
    if d == 0:
        return {(): Fraction(0)}

    def cocircuit(B, b):
        rest = [k for k in B if k != b]
        for g in rows:
            if g[b] is not INF and all(g[k] is INF for k in rest):
                return g
        return None

    start = None
    for B in combinations(range(n), d):
        if all(cocircuit(B, b) is not None for b in B):
            start = B
            break
    if start is None:
        return None
    pi = {start: Fraction(0)}
    todo = [start]
    while todo:
        B = todo.pop()
        for b in B:
            g = cocircuit(B, b)
            if g is None:
                return None
            for j in range(n):
                if j in B or g[j] is INF:
                    continue
                B2 = tuple(sorted(set(B) - {b} | {j}))
                val = pi[B] + g[j] - g[b]
                if B2 in pi:
                    if pi[B2] != val:
                        return None
                else:
                    pi[B2] = val
                    todo.append(B2)
    return {J: pi.get(J, INF) for J in combinations(range(n), d)}


def _tropical_det(m) -> ExtRat:
    k = len(m)
    if k == 0:
        return Fraction(0)
    best = INF
    # small sizes only (d <= n); expansion along the first row
    for c in range(k):
        if m[0][c] is INF:
            continue
        sub = [row[:c] + row[c + 1:] for row in m[1:]]
        best = min(best, m[0][c] + _tropical_det(sub))
    return best


def _nullspace(eqs: list, nvars: int) -> list:
    # Exact basis of {a : eq . a = 0 for every eq}.
    rows = [list(e) for e in eqs if any(e)]
    pivots = []
    r = 0
    for c in range(nvars):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / Fraction(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(nvars) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * nvars
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(vec)
    return basis


def _solved_basis(chosen, pi, n, terms, step, rng, spread):
    """Random lifts of ``chosen[:-1]`` and a last row solved to hit ``pi``.

    Each maximal minor is linear in the last row, so requiring its
    coefficients to vanish below the target valuation is a linear system
    in the last row's coefficients.
    """
    d = len(chosen)
    trop = {J: _tropical_det([[g[j] for j in J] for g in chosen]) for J in pi}
    if any(trop[J] is INF and pi[J] is not INF for J in pi):
        return None
    shift = max((trop[J] - pi[J] for J in pi if pi[J] is not INF), default=None)
    if shift is None:
        return None
    head = [_random_lifting(g, terms, rng, spread, step) for g in chosen[:-1]]
    last = chosen[-1]
    unknowns = [(j, k) for j in range(n) if last[j] is not INF for k in range(terms)]
    col = {u: i for i, u in enumerate(unknowns)}
    eqs = []
    for J, target in pi.items():
        target = target if target is INF else target + shift
        if target is not INF and target == trop[J]:
            continue
        by_exp = {}
        for pos, j in enumerate(J):
            if last[j] is INF:
                continue
            cof = _minor(head, J[:pos] + J[pos + 1:]) if d > 1 else PuiseuxPoly.one()
            sign = -1 if (d - 1 + pos) % 2 else 1
            for e, c in cof.terms:
                for k in range(terms):
                    ex = e + last[j] + k * step
                    if target is INF or ex < target:
                        by_exp.setdefault(ex, [Fraction(0)] * len(unknowns))[col[(j, k)]] += sign * c
        eqs.extend(by_exp.values())
    null = _nullspace(eqs, len(unknowns))
    if not null:
        return None
    coeffs = [Fraction(0)] * len(unknowns)
    for vec in null:
        r = rng.randint(-spread, spread) if spread else 1
        coeffs = [a + r * b for a, b in zip(coeffs, vec)]
    row = []
    for j in range(n):
        if last[j] is INF:
            row.append(PuiseuxPoly.zero())
            continue
        p = PuiseuxPoly({last[j] + k * step: coeffs[col[(j, k)]] for k in range(terms)})
        if p.valuation() != last[j]:
            return None
        row.append(p)
    return head + [tuple(row)]


def _lift_from_family(x: TropVector, family: list, index: dict) -> PuiseuxVector | None:
    key = normalize(x)
    u = index.get(key)
    if u is not None:
        nu = next(j for j, c in enumerate(x) if c is not INF)
        off = x[nu] - u[nu].valuation()
        return tuple(p.shift(off) for p in u)
    # not a minimal-support vector: combine the family tropically
    trops = [tropicalize_vector(v) for v in family]
    ok, lam = hull_member(trops, x)
    if not ok:
        return None
    return lift_hull_point(family, lam, x)


def _index(family: list) -> dict:
    idx = {}
    for v in family:
        idx.setdefault(normalize(tropicalize_vector(v)), v)
    return idx


def verify_liftings(xs, ys, V, W) -> bool:
    """Exact check: liftings tropicalize to their generators and pair to zero."""
    if len(V) != len(xs) or len(W) != len(ys):
        return False
    if any(tropicalize_vector(v) != tuple(x) for v, x in zip(V, xs)):
        return False
    if any(tropicalize_vector(w) != tuple(y) for w, y in zip(W, ys)):
        return False
    return all(not puiseux_dot(v, w) for v in V for w in W)


def search_liftings(
    system: BilinearSystem,
    xs: GeneratorSet,
    ys: GeneratorSet,
    budget: Budget = Budget(),
    seed: int = 0,
) -> tuple[list, list] | None:
    """Search for orthogonal liftings of ``xs`` and ``ys``.

    A restart round visits every tropically independent seed subset of
    either side.  Each visit lifts the subset with random coefficients,
    takes P (or Q) as its span, checks exactly through
    Pluecker coordinates that every generator lies in Trop(P) or Trop(Q),
    and then reads the liftings off minimal-support vectors of P and Q.
    Returns ``None`` when the budget is exhausted.
    """
    n = system.n
    if system.p != len(xs) or system.q != len(ys):
        raise DimensionError("bilinear system does not match the generator sets")
    rng = random.Random(seed)
    xrows, yrows = xs.rows(), ys.rows()
    d = dimension(xs)
    if d + dimension(ys) != n:
        return None
    pi_p = tropical_plucker_from_generators(xrows, n, d)
    pi_q = None
    if pi_p is not None:
        pi_q = {}
        for I in combinations(range(n), n - d):
            pi_q[I] = pi_p[tuple(j for j in range(n) if j not in I)]
    step = Fraction(1, common_denominator(xrows + yrows + [tuple(pi_p.values())] if pi_p else xrows + yrows))
    routes = []
    for rs in _nonsingular_subsets(xrows, d) if xrows else [()]:
        routes.append(("P", [xrows[i] for i in rs], pi_p))
    if n - d > 0 and yrows:
        for rs in _nonsingular_subsets(yrows, n - d):
            routes.append(("Q", [yrows[i] for i in rs], pi_q))
    # interleave the two sides so both are tried early
    ps = [r for r in routes if r[0] == "P"]
    qs = [r for r in routes if r[0] == "Q"]
    order = []
    for k in range(max(len(ps), len(qs))):
        order.extend(x[k] for x in (ps, qs) if k < len(x))
    if not order:
        return None
    for rnd in range(budget.rounds):
        # one restart round: a fresh randomized pass over every seed subset
        # round 0 tries the simplest lifts; later rounds randomize more widely
        terms = min(budget.terms, 1 + rnd)
        spread = 10 * rnd
        for side, chosen, pi in order:
            if chosen and pi is not None:
                k = rnd % len(chosen)  # rotate which row is solved for
                basis = _solved_basis(chosen[k + 1:] + chosen[:k + 1], pi, n, terms, step, rng, spread)
            else:
                basis = [_random_lifting(g, terms, rng, spread, step) for g in chosen]
            if basis is None:
                continue
            found = _try_basis(side, basis, xrows, yrows, n)
            if found is not None:
                log.debug("liftings found in round %d via %s", rnd, side)
                return found
    log.info("lifting search exhausted %d rounds (seed %d)", budget.rounds, seed)
    return None


def _try_basis(side, basis, xrows, yrows, n):
    try:
        pv = plucker_coordinates(basis, n)
    except RankError:
        return None
    pv_p, pv_q = (pv, pv.dual()) if side == "P" else (pv.dual(), pv)
    if not all(trop_space_member(pv_p, x) for x in xrows):
        return None
    if not all(trop_space_member(pv_q, y) for y in yrows):
        return None
    own, other = cocircuit_vectors(basis, n), circuit_vectors(basis, n)
    fam_p, fam_q = (own, other) if side == "P" else (other, own)
    ip, iq = _index(fam_p), _index(fam_q)
    V = [_lift_from_family(x, fam_p, ip) for x in xrows]
    W = [_lift_from_family(y, fam_q, iq) for y in yrows]
    if any(v is None for v in V) or any(w is None for w in W):
        return None
    if not verify_liftings(xrows, yrows, V, W):
        return None
    return V, W


@dataclass
class Decision:
    """Outcome of :func:`decide_variety` with a re-checkable certificate."""

    status: str
    n: int
    xs: GeneratorSet
    ys: GeneratorSet
    V: list = field(default_factory=list)
    W: list = field(default_factory=list)
    basis_P: list = field(default_factory=list)
    basis_Q: list = field(default_factory=list)
    obstruction: Obstruction | None = None
    budget: Budget | None = None
    seed: int | None = None

    def verify(self) -> bool:
        """Recheck the certificate from scratch."""
        if self.status == VARIETY:
            if not verify_liftings(self.xs.rows(), self.ys.rows(), self.V, self.W):
                return False
            bp = [self.V[i] for i in independent_subset(self.V)]
            bq = [self.W[j] for j in independent_subset(self.W)]
            return (
                len(bp) == len(self.basis_P)
                and len(bq) == len(self.basis_Q)
                and len(bp) + len(bq) == self.n
            )
        if self.status == NOT_VARIETY:
            ob = self.obstruction
            return (
                ob is not None
                and ob.dim_perp == dimension(self.xs)
                and ob.dim_perp_perp == dimension(self.ys)
                and ob.holds()
            )
        return self.status == INCONCLUSIVE


def decide_variety(a_rows, budget: Budget = Budget(), seed: int = 0, n: int | None = None) -> Decision:
    """Decide whether ``A-perp`` is a tropical linear variety.

    ``variety`` carries orthogonal liftings and bases of P and Q;
    ``not_variety`` carries the dimension obstruction; ``inconclusive``
    means the lifting search ran out of budget.
    """
    if isinstance(a_rows, GeneratorSet):
        rows, n = a_rows.rows(), a_rows.ambient_dim
    else:
        rows = matrix(a_rows, n)
        n = n if n is not None else (len(rows[0]) if rows else None)
        if n is None:
            raise DimensionError("ambient dimension needed for an empty row set")
    xs = orthogonal_generators(rows, n)
    ys = orthogonal_generators(xs.rows(), n)
    ob = dimension_obstruction(xs, ys)
    if ob is not None:
        return Decision(NOT_VARIETY, n, xs, ys, obstruction=ob)
    system = build_bilinear_system(xs, ys)
    found = search_liftings(system, xs, ys, budget, seed)
    if found is None:
        return Decision(INCONCLUSIVE, n, xs, ys, budget=budget, seed=seed)
    V, W = found
    bp = [V[i] for i in independent_subset(V)]
    bq = [W[j] for j in independent_subset(W)]
    return Decision(VARIETY, n, xs, ys, V=V, W=W, basis_P=bp, basis_Q=bq, budget=budget, seed=seed)

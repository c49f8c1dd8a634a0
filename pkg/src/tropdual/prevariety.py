"""Tropical orthogonal complements and their generating sets.

The generators of ``A-perp`` are computed by a min-plus double description:
start from the unit-support vectors, which generate all of (Q u {inf})^n,
and cut by one half-space at a time.  A tropical hyperplane is the
intersection of the half-spaces

    x_mu + a_mu >= min_{nu != mu} (x_nu + a_nu),    one per finite a_mu,

and for a generating set G of a cone C, the cone C n {f <= g} is generated
by the generators already inside together with the combinations
``min(g(v) + u, f(u) + v)`` of each inside ``u`` with each outside ``v``.
"""

from __future__ import annotations

import logging
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import _backend
from .core import (
    GeneratorSet,
    TropVector,
    common_denominator,
    from_ints,
    hull_member,
    is_tropically_orthogonal,
    matrix,
    normalize,
    to_ints,
    tropical_rank,
)
from .errors import DimensionError
from .extrat import INF, ExtRat

IINF = _backend.IINF


log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinPlusInequality:
    """The constraint ``x[lhs_index] + lhs_offset >= min_nu (x[nu] + rhs_offsets[nu])``.

    ``rhs_offsets[lhs_index]`` is always INF.  When every right-hand offset
    is INF the constraint pins ``x[lhs_index]`` to INF.
    """

    lhs_index: int
    lhs_offset: Fraction
    rhs_offsets: tuple

    @property
    def forces_infinity(self) -> bool:
        return all(o is INF for o in self.rhs_offsets)

    def satisfied_by(self, x: TropVector) -> bool:
        rhs = min((xv + o for xv, o in zip(x, self.rhs_offsets)), default=INF)
        return x[self.lhs_index] + self.lhs_offset >= rhs


def compile_halfspaces(a: TropVector) -> list[MinPlusInequality]:
    """Half-spaces whose conjunction is exactly ``{a}-perp``."""
    a = tuple(a)
    n = len(a)
    if n < 2:
        raise DimensionError("tropical hyperplanes need n >= 2")
    out = []
    for mu, am in enumerate(a):
        if am is INF:
            continue
        rhs = tuple(INF if nu == mu else a[nu] for nu in range(n))
        out.append(MinPlusInequality(mu, am, rhs))
    return out


def _unit_generators(n: int) -> list[tuple]:
    return [tuple(0 if j == i else IINF for j in range(n)) for i in range(n)]


def _norm_int(w):
    m = min(w)
    if m >= IINF:
        return None
    return tuple(x - m if x < IINF else IINF for x in w)


def _cut(G: list[tuple], mu: int, a_mu: int, rhs: tuple) -> list[tuple]:
    # One double-description step on integer-scaled generators.
    inside, outside = [], []
    for x in G:
        xm = x[mu]
        g = xm + a_mu if xm < IINF else IINF
        f = IINF
        for xv, o in zip(x, rhs):
            if xv < IINF and o < IINF:
                s = xv + o
                if s < f:
                    f = s
        if f <= g:
            inside.append((x, f))
        else:
            outside.append((x, g))
    if not outside:
        return G
    result = {x for x, _ in inside}
    fresh = False
    for u, fu in inside:
        if fu >= IINF:
            continue
        for v, gv in outside:
            w = tuple(
                min(uc + gv if uc < IINF else IINF, vc + fu if vc < IINF else IINF)
                for uc, vc in zip(u, v)
            )
            w = _norm_int(w)
            if w is not None and w not in result:
                result.add(w)
                fresh = True
    out = sorted(result)
    if fresh and len(out) > 1:
        for w in out:
            if any(abs(c) > _backend.LIMIT for c in w if c < IINF):
                raise OverflowError("generator coordinates exceed the kernel range")
        keep = _backend.kernels.prune_nonextreme(out)
        out = [w for w, k in zip(out, keep) if k]
    return out


def _ambient(a_rows, n):
    if isinstance(a_rows, GeneratorSet):
        return a_rows.rows(), a_rows.ambient_dim
    rows = matrix(a_rows, n)
    if n is None:
        if not rows:
            raise DimensionError("ambient dimension needed for an empty row set")
        n = len(rows[0])
    if n < 2:
        raise DimensionError("tropical hyperplanes need n >= 2")
    return rows, n


def orthogonal_generators(a_rows, n: int | None = None) -> GeneratorSet:
    """Canonical generators B with Trophull(B) equal to ``{a_1..a_k}-perp``.

    ``a_rows`` may be empty when ``n`` is given; the result then generates
    the whole space.
    """
    rows, n = _ambient(a_rows, n)
    # hyperplanes only depend on each row up to tropical scaling
    hyper = sorted({normalize(r) for r in rows if any(x is not INF for x in r)})
    scale = common_denominator(hyper)
    G = _unit_generators(n)
    for a in hyper:
        for h in compile_halfspaces(a):
            rhs = to_ints(h.rhs_offsets, scale)
            G = _cut(G, h.lhs_index, to_ints((h.lhs_offset,), scale)[0], rhs)
    gens = tuple(sorted(from_ints(g, scale) for g in G))
    if log.isEnabledFor(logging.DEBUG):
        got, bound = bitsize_report(rows, gens)
        log.debug(
            "%d generators (n^k = %d), bit size %d (L + log k = %.1f)", len(gens), n ** len(hyper), got, bound
        )
    return GeneratorSet(n, gens)


def _bits(x) -> int:
    if x is INF:
        return 0
    return abs(x.numerator).bit_length() + x.denominator.bit_length()


def bitsize_report(a_rows, gens) -> tuple[int, float]:
    """Largest entry bit size among ``gens`` next to ``L + log2 k`` for the input.

    Diagnostic only: the reference bound belongs to a different
    construction and is not guaranteed for these generators.
    """
    rows = matrix(a_rows) if a_rows else []
    L = max((_bits(x) for r in rows for x in r), default=0)
    got = max((_bits(x) for g in gens for x in g), default=0)
    return got, L + math.log2(max(len(rows), 1))


def double_orthogonal_generators(a_rows, n: int | None = None) -> GeneratorSet:
    """Generators of ``A-perp-perp``, the least prevariety containing A."""
    xs = orthogonal_generators(a_rows, n)
    return orthogonal_generators(xs.rows(), xs.ambient_dim)


def prevariety_member(a_rows, x: TropVector) -> bool:
    """True iff ``x`` is tropically orthogonal to every row."""
    rows = a_rows.rows() if isinstance(a_rows, GeneratorSet) else matrix(a_rows)
    x = tuple(x)
    return all(is_tropically_orthogonal(x, a) for a in rows)


def prevariety_equal(g1: GeneratorSet, g2: GeneratorSet) -> bool:
    """Equality of tropical hulls by mutual generator membership."""
    if g1.ambient_dim != g2.ambient_dim:
        raise DimensionError(f"ambient dimensions {g1.ambient_dim} and {g2.ambient_dim} differ")
    return all(hull_member(g2, g)[0] for g in g1) and all(hull_member(g1, g)[0] for g in g2)


def dimension(g) -> int:
    """Tropical rank of the generator matrix (0 for the trivial cone)."""
    rows = g.rows() if isinstance(g, GeneratorSet) else list(g)
    if not rows:
        return 0
    return tropical_rank(rows)


@dataclass
class Prevariety:
    """``A-perp`` for a finite set of rows, with lazily cached generators."""

    ambient_dim: int
    defining: list = field(default_factory=list)
    _gens: GeneratorSet | None = field(default=None, init=False, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False, compare=False)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], n: int | None = None) -> "Prevariety":
        rows, n = _ambient(rows, n)
        return cls(n, rows)

    @property
    def gens(self) -> GeneratorSet:
        if self._gens is None:
            with self._lock:
                if self._gens is None:
                    self._gens = orthogonal_generators(self.defining, self.ambient_dim)
        return self._gens

    def __contains__(self, x) -> bool:
        return prevariety_member(self.defining, x)

    def dimension(self) -> int:
        return dimension(self.gens)

    def dual(self) -> "Prevariety":
        """``A-perp-perp`` as a prevariety cut out by the generators of ``A-perp``."""
        return Prevariety(self.ambient_dim, self.gens.rows())

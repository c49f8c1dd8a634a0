"""Exact min-plus arithmetic: orthogonality, tropical hulls, rank.

Vectors are tuples of ExtRat (``Fraction`` or ``INF``); matrices are lists
of such tuples.  Heavy loops run on integer-scaled copies through the kernel
backend selected in :mod:`tropdual._backend`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import _backend
from .errors import DimensionError, ShapeError
from .extrat import INF, ExtRat, ext

TropVector = tuple
IINF = _backend.IINF


def vector(values: Iterable) -> TropVector:
    """Build a TropVector from ints, Fractions, ``INF`` or strings."""
    v = tuple(ext(x) for x in values)
    if not v:
        raise DimensionError("vectors need at least one coordinate")
    return v


def matrix(rows: Iterable[Iterable], n: int | None = None) -> list[TropVector]:
    """Build a rectangular list of TropVectors.

    ``n`` fixes the row length; it is required to give an empty matrix a
    meaningful ambient dimension and is checked otherwise.
    """
    out = [vector(r) for r in rows]
    lengths = {len(r) for r in out}
    if len(lengths) > 1:
        raise ShapeError(f"ragged matrix with row lengths {sorted(lengths)}")
    if n is not None and out and len(out[0]) != n:
        raise ShapeError(f"rows have length {len(out[0])}, expected {n}")
    return out


def zero_vector(n: int) -> TropVector:
    return (INF,) * n


def shift(v: TropVector, c: Fraction) -> TropVector:
    """Tropical scaling ``c * 1_n + v``."""
    return tuple(x + c for x in v)


def normalize(v: TropVector) -> TropVector:
    """Shift so the least finite coordinate is zero; all-INF is kept as is."""
    finite = [x for x in v if x is not INF]
    if not finite:
        return v
    m = min(finite)
    return tuple(x if x is INF else x - m for x in v)


def is_tropically_orthogonal(v: TropVector, a: TropVector) -> bool:
    """True when ``min_i(v_i + a_i)`` is attained at least twice."""
    if len(v) != len(a):
        raise DimensionError(f"length mismatch: {len(v)} vs {len(a)}")
    if len(v) < 2:
        raise DimensionError("orthogonality needs n >= 2")
    return _two_minima([x + y for x, y in zip(v, a)])


def _two_minima(values) -> bool:
    best = INF
    count = 0
    for s in values:
        if s < best:
            best, count = s, 1
        elif s == best:
            count += 1
    return best is INF or count >= 2


# -- integer scaling ---------------------------------------------------------


def common_denominator(rows: Iterable[Iterable[ExtRat]]) -> int:
    d = 1
    for row in rows:
        for x in row:
            if x is not INF:
                d = lcm(d, x.denominator)
    return d


def to_ints(v: Iterable[ExtRat], scale: int) -> tuple:
    out = []
    for x in v:
        if x is INF:
            out.append(IINF)
        else:
            y = x * scale
            if y.denominator != 1:
                raise ValueError("scale does not clear denominators")
            y = y.numerator
            if abs(y) > _backend.LIMIT:
                raise OverflowError("scaled coordinate exceeds the kernel range")
            out.append(y)
    return tuple(out)


def from_ints(v: Iterable[int], scale: int) -> TropVector:
    return tuple(INF if x >= IINF else Fraction(x, scale) for x in v)


# -- generator sets ----------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSet:
    """Canonical finite generating set of a tropical cone in (Q u {inf})^n.

    Build through :meth:`from_vectors`; the raw constructor trusts its input.
    """

    ambient_dim: int
    gens: tuple

    @classmethod
    def from_vectors(cls, vectors: Iterable[Iterable], n: int | None = None) -> "GeneratorSet":
        rows = matrix(vectors, n)
        if n is None:
            if not rows:
                raise ShapeError("ambient dimension needed for an empty set")
            n = len(rows[0])
        if n < 1:
            raise DimensionError("ambient dimension must be positive")
        return cls(n, canonical_generators(rows, n))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def rows(self) -> list[TropVector]:
        return list(self.gens)


def canonical_generators(rows: Sequence[TropVector], n: int) -> tuple:
    """Normalize, drop all-INF and duplicates, prune non-extremal, sort."""
    normed = set()
    for r in rows:
        if len(r) != n:
            raise DimensionError(f"generator of length {len(r)} in dimension {n}")
        if all(x is INF for x in r):
            continue
        normed.add(normalize(r))
    gens = sorted(normed)
    if len(gens) <= 1:
        return tuple(gens)
    scale = common_denominator(gens)
    ints = [to_ints(g, scale) for g in gens]
    keep = _backend.kernels.prune_nonextreme(ints)
    return tuple(g for g, k in zip(gens, keep) if k)


def _gen_rows(gens) -> list[TropVector]:
    if isinstance(gens, GeneratorSet):
        return list(gens.gens)
    return [tuple(g) for g in gens]


def hull_eval(gens, coeffs: Sequence[ExtRat]) -> TropVector:
    """Coordinatewise ``min_i(coeffs_i * 1 + gens_i)``."""
    rows = _gen_rows(gens)
    coeffs = [ext(c) for c in coeffs]
    if len(coeffs) != len(rows):
        raise DimensionError(f"{len(coeffs)} coefficients for {len(rows)} generators")
    if isinstance(gens, GeneratorSet):
        n = gens.ambient_dim
    elif rows:
        n = len(rows[0])
    else:
        raise DimensionError("cannot infer the dimension of an empty generator list")
    out = [INF] * n
    for c, g in zip(coeffs, rows):
        if len(g) != n:
            raise DimensionError("generator length mismatch")
        if c is INF:
            continue
        for i, x in enumerate(g):
            y = x + c
            if y < out[i]:
                out[i] = y
    return tuple(out)


def hull_member(gens, x: TropVector) -> tuple[bool, tuple | None]:
    """Residuation test for ``x`` in the tropical hull of ``gens``.

    Returns ``(True, witness)`` with the least coefficients reproducing
    ``x``, or ``(False, None)``.
    """
    rows = _gen_rows(gens)
    x = tuple(x)
    n = gens.ambient_dim if isinstance(gens, GeneratorSet) else len(x)
    if len(x) != n or any(len(g) != n for g in rows):
        raise DimensionError("dimension mismatch in hull_member")
    if not rows:
        return (all(c is INF for c in x), () if all(c is INF for c in x) else None)
    scale = common_denominator(rows + [x])
    lam, member = _backend.kernels.residuate([to_ints(g, scale) for g in rows], to_ints(x, scale))
    if not member:
        return False, None
    return True, from_ints(lam, scale)


# -- singularity and rank ----------------------------------------------------


def _square_ints(m: Sequence[Sequence[ExtRat]]):
    rows = [tuple(ext(x) for x in r) for r in m]
    r = len(rows)
    if r == 0 or any(len(row) != r for row in rows):
        raise ShapeError("tropical singularity needs a non-empty square matrix")
    scale = common_denominator(rows)
    return [to_ints(row, scale) for row in rows]


def is_tropically_singular(m: Sequence[Sequence[ExtRat]]) -> bool:
    """Minimum permutation sum is INF or attained by two permutations.

    Uses an exact min-cost assignment followed by a search for an
    alternating cycle of tight arcs under the optimal dual potentials.
    """
    return _backend.kernels.is_singular(_square_ints(m))


def tropical_rank(m: Sequence[Sequence[ExtRat]]) -> int:
    """Largest r such that some r x r submatrix is tropically non-singular."""
    return rank_witness(m)[0]


def rank_witness(m: Sequence[Sequence[ExtRat]]) -> tuple[int, tuple, tuple]:
    """``(rank, row_indices, col_indices)`` of a non-singular submatrix."""
    rows = [tuple(ext(x) for x in r) for r in m]
    if not rows:
        return 0, (), ()
    if len({len(r) for r in rows}) != 1:
        raise ShapeError("ragged matrix")
    scale = common_denominator(rows)
    rank, rs, cs = _backend.kernels.tropical_rank([to_ints(r, scale) for r in rows])
    return int(rank), tuple(rs), tuple(cs)

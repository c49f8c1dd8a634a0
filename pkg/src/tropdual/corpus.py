"""Fixture generators: the A0 family and a countable family of hyperplanes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import TropVector
from .errors import DomainError


def example_a0(n: int) -> list[TropVector]:
    """The n-1 rows of A0 in dimension n.

    Row i (for i <= n-2) is all ones except zeros at positions i, n-1, n
    (1-based); the last row is ``(1, ..., 1, 0, 0)``.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 3:
        raise DomainError(f"A0 needs an integer n >= 3, got {n!r}")
    one, zero = Fraction(1), Fraction(0)
    rows = []
    for i in range(n - 2):
        rows.append(tuple(zero if j in (i, n - 2, n - 1) else one for j in range(n)))
    rows.append(tuple(zero if j >= n - 2 else one for j in range(n)))
    return rows


def default_eps(m: int) -> list[Fraction]:
    """``eps_i = 1/8 + 1/(8(i+2))`` for i = 1..m: distinct and inside (0, 1/4)."""
    return [Fraction(1, 8) + Fraction(1, 8 * (i + 2)) for i in range(1, m + 1)]


@dataclass(frozen=True)
class CountableFamilySpec:
    """``m`` hyperplanes indexed by pairwise distinct ``eps_i`` in (0, 1/4)."""

    m: int
    eps: tuple = field(default=())

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise DomainError(f"m must be a positive integer, got {self.m!r}")
        eps = tuple(Fraction(e) for e in self.eps) if self.eps else tuple(default_eps(self.m))
        if len(eps) != self.m:
            raise DomainError(f"{len(eps)} eps values for m = {self.m}")
        if any(not (0 < e < Fraction(1, 4)) for e in eps):
            raise DomainError("every eps must lie strictly between 0 and 1/4")
        if len(set(eps)) != len(eps):
            raise DomainError("eps values must be pairwise distinct")
        object.__setattr__(self, "eps", eps)


def example_countable_family(spec: CountableFamilySpec) -> list[TropVector]:
    """Row i is ``(-i, -i, -i/2 - eps_i, -i/2, 0, 0)`` for i = 1..m."""
    rows = []
    for i, e in enumerate(spec.eps, start=1):
        h = Fraction(-i, 2)
        rows.append((Fraction(-i), Fraction(-i), h - e, h, Fraction(0), Fraction(0)))
    return rows


def point_pj(j: int, spec: CountableFamilySpec) -> TropVector:
    """``p_j = (0, 0, -j/2 - 1/4 + eps_j, -j/2 - 1/4, -j, -j)`` for 2 <= j <= m."""
    if isinstance(j, bool) or not isinstance(j, int) or not 2 <= j <= spec.m:
        raise DomainError(f"j must satisfy 2 <= j <= {spec.m}, got {j!r}")
    base = Fraction(-j, 2) - Fraction(1, 4)
    return (Fraction(0), Fraction(0), base + spec.eps[j - 1], base, Fraction(-j), Fraction(-j))

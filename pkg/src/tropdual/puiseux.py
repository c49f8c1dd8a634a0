"""Finite-support Puiseux polynomials over Q and exact linear algebra on them.

A :class:`PuiseuxPoly` is a finite sum ``sum c_e t^e`` with rational
exponents and nonzero rational coefficients.  These form an integral
domain (Laurent polynomials in ``t^(1/M)``), which is all the lifting code
needs: determinants and ranks are computed fraction-free with exact
division.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError
from .extrat import INF, ExtRat


def _frac(x) -> Fraction:
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


class PuiseuxPoly:
    """Immutable finite Puiseux polynomial in ``t``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict[Fraction, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e, c = _frac(e), _frac(c)
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def _raw(cls, terms: tuple) -> "PuiseuxPoly":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def _from_dict(cls, acc: dict) -> "PuiseuxPoly":
        return cls._raw(tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def zero(cls) -> "PuiseuxPoly":
        return cls._raw(())

    @classmethod
    def one(cls) -> "PuiseuxPoly":
        return cls._raw(((Fraction(0), Fraction(1)),))

    @classmethod
    def const(cls, c) -> "PuiseuxPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e) -> "PuiseuxPoly":
        return cls({e: c})

    @property
    def terms(self) -> tuple:
        """``((exponent, coefficient), ...)`` in increasing exponent order."""
        return self._terms

    @property
    def ramification(self) -> int:
        """Least M such that every exponent lies in (1/M)Z."""
        m = 1
        for e, _ in self._terms:
            m = lcm(m, e.denominator)
        return m

    def valuation(self) -> ExtRat:
        return self._terms[0][0] if self._terms else INF

    def leading_coefficient(self) -> Fraction:
        return self._terms[0][1] if self._terms else Fraction(0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, PuiseuxPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == PuiseuxPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self):
        return f"PuiseuxPoly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            body = f"{abs(c)}*t^({e})"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "PuiseuxPoly":
        if isinstance(x, PuiseuxPoly):
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return PuiseuxPoly.const(x)
        raise TypeError(f"cannot combine PuiseuxPoly with {type(x).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return PuiseuxPoly._from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxPoly._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return PuiseuxPoly.zero()
            return PuiseuxPoly._raw(tuple((e, c * other) for e, c in self._terms))
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        acc: dict[Fraction, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return PuiseuxPoly._from_dict(acc)

    __rmul__ = __mul__

    def shift(self, e) -> "PuiseuxPoly":
        """Multiply by ``t^e``."""
        e = _frac(e)
        return PuiseuxPoly._raw(tuple((x + e, c) for x, c in self._terms))

    def exquo(self, other: "PuiseuxPoly") -> "PuiseuxPoly":
        """Exact quotient; raises ``ValueError`` when ``other`` does not divide."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return PuiseuxPoly.zero()
        M = lcm(self.ramification, other.ramification)
        a0, b0 = self.valuation(), other.valuation()
        a = {int((e - a0) * M): c for e, c in self._terms}
        b = {int((e - b0) * M): c for e, c in other._terms}
        db = max(b)
        lb = b[db]
        q: dict[int, Fraction] = {}
        while a:
            da = max(a)
            if da < db:
                raise ValueError("polynomial does not divide exactly")
            k = da - db
            c = a[da] / lb
            q[k] = c
            for eb, cb in b.items():
                key = eb + k
                v = a.get(key, 0) - c * cb
                if v:
                    a[key] = v
                else:
                    a.pop(key, None)
        off = a0 - b0
        return PuiseuxPoly._from_dict({Fraction(k, M) + off: c for k, c in q.items()})

    # -- text form ---------------------------------------------------------

    _TERM = re.compile(
        r"""^(?P<coef>[0-9]+(?:/[0-9]+)?)?\s*(?:(?P<star>\*)?\s*t\s*(?:\^\s*(?:\(\s*(?P<pexp>[+-]?\s*[0-9]+(?:\s*/\s*[0-9]+)?)\s*\)|(?P<bexp>[+-]?[0-9]+(?:/[0-9]+)?)))?)?$"""
    )

    @classmethod
    def parse(cls, text: str) -> "PuiseuxPoly":
        """Parse sums such as ``"2*t^(-1/2) - t + 3/4"``."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        terms = []
        depth = 0
        start = 0
        pieces = []
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch in "+-" and depth == 0 and i > start:
                prev = s[start:i].strip()
                if prev and not prev.endswith("^"):
                    pieces.append(s[start:i])
                    start = i
        pieces.append(s[start:])
        for piece in pieces:
            p = piece.strip()
            sign = 1
            while p and p[0] in "+-":
                if p[0] == "-":
                    sign = -sign
                p = p[1:].strip()
            m = cls._TERM.match(p)
            if not p or not m or (m.group("coef") is None and "t" not in p):
                raise ValueError(f"cannot parse Puiseux term {piece.strip()!r}")
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
            if "t" in p:
                raw = m.group("pexp") or m.group("bexp")
                exp = Fraction(raw.replace(" ", "")) if raw else Fraction(1)
            else:
                exp = Fraction(0)
            terms.append((exp, sign * coef))
        return cls(terms)


PuiseuxVector = tuple


def pvector(values: Iterable) -> PuiseuxVector:
    """Coerce ints, Fractions, strings or PuiseuxPolys to a PuiseuxVector."""
    out = []
    for v in values:
        if isinstance(v, PuiseuxPoly):
            out.append(v)
        elif isinstance(v, str):
            out.append(PuiseuxPoly.parse(v))
        else:
            out.append(PuiseuxPoly.const(v))
    return tuple(out)


def valuation(p: PuiseuxPoly) -> ExtRat:
    return p.valuation()


def puiseux_dot(u: Sequence[PuiseuxPoly], w: Sequence[PuiseuxPoly]) -> PuiseuxPoly:
    """Exact bilinear pairing ``sum_nu u_nu * w_nu``."""
    if len(u) != len(w):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(w)}")
    acc: dict[Fraction, Fraction] = {}
    for a, b in zip(u, w):
        for e1, c1 in a.terms:
            for e2, c2 in b.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
    return PuiseuxPoly._from_dict(acc)


def tropicalize_vector(u: Sequence[PuiseuxPoly]) -> tuple:
    """Componentwise valuation."""
    return tuple(p.valuation() for p in u)


def scale_vector(c: PuiseuxPoly, u: Sequence[PuiseuxPoly]) -> PuiseuxVector:
    return tuple(c * p for p in u)


def add_vectors(u: Sequence[PuiseuxPoly], w: Sequence[PuiseuxPoly]) -> PuiseuxVector:
    if len(u) != len(w):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(w)}")
    return tuple(a + b for a, b in zip(u, w))


def det(rows: Sequence[Sequence[PuiseuxPoly]]) -> PuiseuxPoly:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return PuiseuxPoly.one()
    A = [list(r) for r in rows]
    sign = 1
    prev = PuiseuxPoly.one()
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            return PuiseuxPoly.zero()
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * akk - aik * A[k][j]).exquo(prev)
        prev = akk
    d = A[n - 1][n - 1]
    return d if sign > 0 else -d


def rank(rows: Sequence[Sequence[PuiseuxPoly]]) -> int:
    """Rank over the fraction field, by fraction-free row echelon form."""
    if not rows:
        return 0
    A = [list(r) for r in rows]
    m, n = len(A), len(A[0])
    r = 0
    prev = PuiseuxPoly.one()
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        arc = A[r][c]
        for i in range(r + 1, m):
            aic = A[i][c]
            for j in range(c + 1, n):
                A[i][j] = (arc * A[i][j] - aic * A[r][j]).exquo(prev)
            A[i][c] = PuiseuxPoly.zero()
        prev = arc
        r += 1
        if r == m:
            break
    return r


def independent_subset(vectors: Sequence[Sequence[PuiseuxPoly]]) -> list[int]:
    """Indices of a maximal linearly independent subset, chosen greedily."""
    chosen: list[int] = []
    for i, v in enumerate(vectors):
        if rank([vectors[j] for j in chosen] + [v]) == len(chosen) + 1:
            chosen.append(i)
    return chosen

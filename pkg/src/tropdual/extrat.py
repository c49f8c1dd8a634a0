"""Exact rationals extended by a single point at infinity.

Finite values are plain :class:`fractions.Fraction` objects; the tropical
zero is the module-level singleton :data:`INF`.  ``Fraction`` defers to
``INF`` for mixed comparisons and additions, so ordinary ``min``, ``sorted``
and ``+`` work on mixed sequences without special casing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())

    def __hash__(self):
        return hash("tropdual.INF")

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __lt__(self, other):
        if other is self or isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __le__(self, other):
        if other is self:
            return True
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, Fraction)):
            return True
        return NotImplemented

    def __ge__(self, other):
        if other is self or isinstance(other, (int, Fraction)):
            return True
        return NotImplemented

    def __add__(self, other):
        if other is self or isinstance(other, (int, Fraction)):
            return self
        return NotImplemented

    __radd__ = __add__


INF = _Infinity()

ExtRat = Union[Fraction, _Infinity]


def is_inf(x) -> bool:
    return x is INF


def ext(value) -> ExtRat:
    """Coerce ``value`` to an ExtRat.

    Accepts ints, Fractions, ``INF`` and strings such as ``"3"``, ``"-5/8"``
    or ``"inf"``.  Floats are rejected so that no inexact value can leak in.
    """
    if value is INF:
        return INF
    if isinstance(value, bool):
        raise TypeError("booleans are not tropical scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if text.lower() in ("inf", "+inf", "infinity", "oo", "∞"):
            return INF
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an extended rational")


def fmt(x: ExtRat) -> str:
    """Canonical text form: ``"inf"``, ``"3"`` or ``"-5/8"``."""
    if x is INF:
        return "inf"
    return str(x)


def sub(a: ExtRat, b: Fraction) -> ExtRat:
    """``a - b`` for a finite subtrahend."""
    if a is INF:
        return INF
    return a - b

"""Exact half-integers, cuspidal labels, segments and GL multisegments.

Every exponent in the library is a :class:`HalfInt`, stored as the integer
``2x``.  No floating point value is ever produced.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator, Union

__all__ = [
    "HalfInt",
    "half",
    "Duality",
    "CuspLabel",
    "Segment",
    "GLData",
    "GroupType",
    "IllFormedSegment",
    "HdualError",
    "make_segment",
    "canonicalize",
    "cuspidal_support",
]


class HdualError(Exception):
    """Base class for every error raised by the library."""


class IllFormedSegment(HdualError, ValueError):
    """Raised when ``x - y`` is not a non-negative integer."""


HalfLike = Union["HalfInt", int, Fraction, str]


@total_ordering
class HalfInt:
    """An element of (1/2)Z held as its double."""

    __slots__ = ("twice",)

    def __init__(self, value: HalfLike = 0) -> None:
        if isinstance(value, HalfInt):
            twice = value.twice
        elif isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        elif isinstance(value, int):
            twice = 2 * value
        else:
            frac = Fraction(value)
            doubled = 2 * frac
            if doubled.denominator != 1:
                raise ValueError(f"{value!r} is not a half-integer")
            twice = doubled.numerator
        object.__setattr__(self, "twice", twice)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def from_twice(cls, twice: int) -> HalfInt:
        out = object.__new__(cls)
        object.__setattr__(out, "twice", int(twice))
        return out

    @staticmethod
    def _coerce(other) -> HalfInt | None:
        if isinstance(other, HalfInt):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt.from_twice(2 * other)
        if isinstance(other, Fraction):
            try:
                return HalfInt(other)
            except ValueError:
                return None
        return None

    def is_integral(self) -> bool:
        return self.twice % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HalfInt.from_twice(self.twice + o.twice)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HalfInt.from_twice(self.twice - o.twice)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HalfInt.from_twice(o.twice - self.twice)

    def __neg__(self) -> HalfInt:
        return HalfInt.from_twice(-self.twice)

    def __abs__(self) -> HalfInt:
        return HalfInt.from_twice(abs(self.twice))

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt.from_twice(self.twice * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        return o is not None and o.twice == self.twice

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.twice < o.twice

    def __hash__(self) -> int:
        return hash(Fraction(self.twice, 2))

    def __int__(self) -> int:
        if not self.is_integral():
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __repr__(self) -> str:
        return f"HalfInt({str(self)!r})"

    def __str__(self) -> str:
        if self.is_integral():
            return str(self.twice // 2)
        return f"{self.twice}/2"


def half(value: HalfLike) -> HalfInt:
    """Shorthand constructor."""
    return HalfInt(value)


class Duality(str, enum.Enum):
    ORTH = "orth"
    SYMP = "symp"
    NSD = "nsd"


@dataclass(frozen=True, order=True)
class CuspLabel:
    """Opaque supercuspidal label with its dimension and self-duality type."""

    name: str
    dim: int = 1
    duality: Duality = Duality.ORTH
    dual_name: str | None = None

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if self.duality is Duality.NSD:
            if not self.dual_name or self.dual_name == self.name:
                raise ValueError("non-self-dual label needs a distinct dual name")
        elif self.dual_name not in (None, self.name):
            raise ValueError("self-dual label cannot name a different dual")

    @property
    def self_dual(self) -> bool:
        return self.duality is not Duality.NSD

    def dual(self) -> CuspLabel:
        if self.self_dual:
            return self
        return CuspLabel(self.dual_name, self.dim, Duality.NSD, self.name)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Segment:
    """The Steinberg segment Delta_rho[x, y] = {x, x-1, ..., y}."""

    rho: CuspLabel
    x: HalfInt
    y: HalfInt

    def __post_init__(self) -> None:
        diff = self.x.twice - self.y.twice
        if diff < 0 or diff % 2:
            raise IllFormedSegment(f"[{self.x},{self.y}] is not a segment")

    @property
    def length(self) -> int:
        return (self.x.twice - self.y.twice) // 2 + 1

    @property
    def center_twice(self) -> int:
        """Twice the central exponent, i.e. ``x + y``."""
        return self.x.twice + self.y.twice

    def exponents(self) -> list[HalfInt]:
        return [HalfInt.from_twice(t) for t in range(self.x.twice, self.y.twice - 1, -2)]

    def dual(self) -> Segment:
        return Segment(self.rho.dual(), -self.y, -self.x)

    def sort_key(self) -> tuple:
        return (self.rho.name, self.x.twice + self.y.twice, self.x.twice)

    def __str__(self) -> str:
        return f"D({self.rho},{self.x},{self.y})"


def make_segment(rho: CuspLabel, x: HalfLike, y: HalfLike) -> Segment:
    """Build Delta_rho[x, y]; raises IllFormedSegment unless x - y is in Z>=0."""
    return Segment(rho, HalfInt(x), HalfInt(y))


class GroupType(str, enum.Enum):
    B = "B"  # SO(2n+1), dual group symplectic
    C = "C"  # Sp(2n), dual group orthogonal


class GLData:
    """Canonically ordered multiset of segments."""

    __slots__ = ("_segs",)

    def __init__(self, segments: Iterable[Segment] = ()) -> None:
        segs = tuple(sorted(segments, key=Segment.sort_key))
        object.__setattr__(self, "_segs", segs)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("GLData is immutable")

    @property
    def segments(self) -> tuple[Segment, ...]:
        return self._segs

    def __iter__(self) -> Iterator[Segment]:
        return iter(self._segs)

    def __len__(self) -> int:
        return len(self._segs)

    def __bool__(self) -> bool:
        return bool(self._segs)

    def __eq__(self, other) -> bool:
        return isinstance(other, GLData) and self._segs == other._segs

    def __hash__(self) -> int:
        return hash(self._segs)

    def __repr__(self) -> str:
        return f"GLData([{', '.join(map(str, self._segs))}])"

    def count(self, seg: Segment) -> int:
        return sum(1 for s in self._segs if s == seg)

    def counter(self) -> Counter:
        return Counter(self._segs)

    def plus(self, *segments: Segment) -> GLData:
        return GLData(self._segs + tuple(segments))

    def minus(self, seg: Segment, times: int = 1) -> GLData:
        remaining = list(self._segs)
        for _ in range(times):
            remaining.remove(seg)
        return GLData(remaining)

    def on(self, rho: CuspLabel) -> GLData:
        return GLData(s for s in self._segs if s.rho == rho)

    def off(self, rho: CuspLabel) -> GLData:
        return GLData(s for s in self._segs if s.rho != rho)

    def merged(self, other: GLData) -> GLData:
        return GLData(self._segs + other._segs)


def canonicalize(data: GLData | Iterable[Segment]) -> GLData:
    """Return the canonical form; idempotent and order-insensitive."""
    return GLData(data)


def cuspidal_support(rep) -> list[tuple[CuspLabel, HalfInt]]:
    """Candidate exponents (rho, x) at which a derivative may be non-zero.

    Each GL segment contributes its exponents and their duals.  A tempered
    summand rho x S_a contributes (a-1)/2, ..., -(a-1)/2 on both sides, except
    that lone copies of rho x S_1 contribute nothing.
    """
    points: set[tuple[CuspLabel, HalfInt]] = set()
    for seg in rep.gl:
        for z in seg.exponents():
            points.add((seg.rho, z))
            points.add((seg.rho.dual(), -z))
    temp = rep.tempered
    one_counts: Counter = Counter()
    for rho, a, _ in temp.gp:
        if a == 1:
            one_counts[rho] += 1
    for rho, a, _ in temp.gp:
        if a == 1 and one_counts[rho] < 2:
            continue
        for j in range(a):
            z = HalfInt.from_twice(a - 1 - 2 * j)
            points.add((rho, z))
            points.add((rho.dual(), -z))
    for rho, a in temp.ngp:
        for j in range(a):
            z = HalfInt.from_twice(a - 1 - 2 * j)
            for r in (rho, rho.dual()):
                points.add((r, z))
                points.add((r, -z))
    return sorted(points, key=lambda p: (p[0].name, p[1].twice))

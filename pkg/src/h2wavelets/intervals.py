"""Finite unions of half-open intervals with exact endpoints.

All endpoints are :class:`~h2wavelets.exact.PiScalar` values.  Sets are
kept in a canonical form (sorted, disjoint, with strictly positive gaps) so
that two sets agree up to a null set exactly when they compare equal.
Boolean operations run a sweep over the merged endpoint events.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

from .exact import PiScalar, as_fraction

__all__ = [
    "Interval",
    "IntervalSet",
    "canonicalize",
    "set_union",
    "set_intersect",
    "set_subtract",
    "translate",
    "dilate",
    "measure",
]


class Interval(NamedTuple):
    """Half-open interval ``[lo, hi)``; both ends are multiples of pi."""

    lo: PiScalar
    hi: PiScalar

    @classmethod
    def of(cls, lo, hi) -> Interval:
        """Build from anything :func:`as_fraction` accepts (coefficients of pi)."""
        return cls(PiScalar(as_fraction(lo)), PiScalar(as_fraction(hi)))

    @property
    def length(self) -> PiScalar:
        return self.hi - self.lo

    def is_empty(self) -> bool:
        return self.hi <= self.lo

    def contains(self, x) -> bool:
        return self.lo <= x < self.hi

    def intersect(self, other: Interval) -> Interval | None:
        lo = self.lo if self.lo >= other.lo else other.lo
        hi = self.hi if self.hi <= other.hi else other.hi
        if lo < hi:
            return Interval(lo, hi)
        return None

    def shift(self, c) -> Interval:
        return Interval(self.lo + c, self.hi + c)

    def scale(self, factor) -> Interval:
        return Interval(self.lo * factor, self.hi * factor)

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi})"

    def to_json(self) -> list[str]:
        return [self.lo.coeff_str(), self.hi.coeff_str()]


def _sweep(groups: Sequence[Iterable[Interval]], keep: Callable[[list[int]], bool]) -> list[Interval]:
    """Sweep over endpoint events of several interval families.

    ``keep`` receives the per-family coverage counts valid on the cell to
    the right of the current event point and decides membership.
    """
    events: list[tuple[Fraction, int, int]] = []
    for gi, group in enumerate(groups):
        for iv in group:
            if iv.lo < iv.hi:
                events.append((iv.lo, gi, 1))
                events.append((iv.hi, gi, -1))
    if not events:
        return []
    events.sort(key=lambda e: e[0])
    counts = [0] * len(groups)
    out: list[Interval] = []
    start = None
    i, n = 0, len(events)
    while i < n:
        x = events[i][0]
        while i < n and events[i][0] == x:
            counts[events[i][1]] += events[i][2]
            i += 1
        inside = keep(counts)
        if inside and start is None:
            start = x
        elif not inside and start is not None:
            out.append(Interval(start, x))
            start = None
    return out


class IntervalSet:
    """Canonical finite union of disjoint half-open intervals.

    Construct with :func:`canonicalize` (or ``IntervalSet(iterable)`` which
    does the same).  Instances are immutable and hashable.
    """

    __slots__ = ("pieces",)

    def __init__(self, raw: Iterable[Interval] = (), *, _canonical: bool = False):
        if _canonical:
            pieces = tuple(raw)
        else:
            pieces = tuple(_sweep([list(raw)], lambda c: c[0] > 0))
        object.__setattr__(self, "pieces", pieces)

    def __setattr__(self, name, value):
        raise AttributeError("IntervalSet is immutable")

    @classmethod
    def empty(cls) -> IntervalSet:
        return cls((), _canonical=True)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple]) -> IntervalSet:
        """Build from ``(lo, hi)`` coefficient pairs, e.g. ``[("4/3", 2)]``."""
        return cls(Interval.of(lo, hi) for lo, hi in pairs)

    @classmethod
    def from_json(cls, data) -> IntervalSet:
        out = cls.from_pairs(data)
        return out

    def to_json(self) -> list[list[str]]:
        return [iv.to_json() for iv in self.pieces]

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def __bool__(self) -> bool:
        return bool(self.pieces)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntervalSet):
            return self.pieces == other.pieces
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.pieces)

    def __repr__(self) -> str:
        return "IntervalSet([" + ", ".join(str(iv) for iv in self.pieces) + "])"

    __str__ = __repr__

    def is_empty(self) -> bool:
        return not self.pieces

    @property
    def min(self) -> PiScalar:
        return self.pieces[0].lo

    @property
    def max(self) -> PiScalar:
        return self.pieces[-1].hi

    @property
    def extent(self) -> PiScalar:
        """Length of the convex hull."""
        if not self.pieces:
            return PiScalar(0)
        return self.max - self.min

    def measure(self) -> PiScalar:
        total = Fraction(0)
        for iv in self.pieces:
            total += iv.hi - iv.lo
        return PiScalar(total)

    def contains(self, x) -> bool:
        for iv in self.pieces:
            if x < iv.lo:
                return False
            if x < iv.hi:
                return True
        return False

    def __or__(self, other: IntervalSet) -> IntervalSet:
        return set_union(self, other)

    def __and__(self, other: IntervalSet) -> IntervalSet:
        return set_intersect(self, other)

    def __sub__(self, other: IntervalSet) -> IntervalSet:
        return set_subtract(self, other)

    def issubset(self, other: IntervalSet) -> bool:
        return set_subtract(self, other).is_empty()

    def translate(self, k: int) -> IntervalSet:
        return translate(self, k)

    def dilate(self, j: int) -> IntervalSet:
        return dilate(self, j)

    def shift(self, c) -> IntervalSet:
        """Shift every endpoint by the coefficient ``c`` (any rational)."""
        c = as_fraction(c)
        return IntervalSet((iv.shift(c) for iv in self.pieces), _canonical=True)

    def scale(self, factor) -> IntervalSet:
        """Multiply every endpoint by a positive rational ``factor``."""
        factor = as_fraction(factor)
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return IntervalSet((iv.scale(factor) for iv in self.pieces), _canonical=True)


def canonicalize(raw: Iterable[Interval]) -> IntervalSet:
    return IntervalSet(raw)


def _as_set(x) -> IntervalSet:
    if isinstance(x, IntervalSet):
        return x
    if isinstance(x, Interval):
        return IntervalSet([x])
    return IntervalSet(x)


def set_union(a, b) -> IntervalSet:
    a, b = _as_set(a), _as_set(b)
    return IntervalSet(_sweep([a.pieces, b.pieces], lambda c: c[0] > 0 or c[1] > 0), _canonical=True)


def set_intersect(a, b) -> IntervalSet:
    a, b = _as_set(a), _as_set(b)
    if not a or not b or a.max <= b.min or b.max <= a.min:
        return IntervalSet.empty()
    return IntervalSet(_sweep([a.pieces, b.pieces], lambda c: c[0] > 0 and c[1] > 0), _canonical=True)


def set_subtract(a, b) -> IntervalSet:
    a, b = _as_set(a), _as_set(b)
    if not b or not a or a.max <= b.min or b.max <= a.min:
        return a
    return IntervalSet(_sweep([a.pieces, b.pieces], lambda c: c[0] > 0 and c[1] == 0), _canonical=True)


def union_all(sets: Iterable) -> IntervalSet:
    pieces: list[Interval] = []
    for s in sets:
        pieces.extend(_as_set(s).pieces)
    return IntervalSet(pieces)


def translate(s: IntervalSet, k: int) -> IntervalSet:
    """Shift by ``2*k*pi``."""
    return s.shift(2 * k)


def dilate(s: IntervalSet, j: int) -> IntervalSet:
    """Multiply every point by ``2**j``."""
    return s.scale(Fraction(2) ** j)


def measure(s: IntervalSet) -> PiScalar:
    return s.measure()

"""Step functions with Q(sqrt 2) amplitudes and the non-MSF wavelets.

A :class:`StepFunction` models the Fourier transform of a wavelet: a finite
sum of amplitudes times indicators of half-open intervals, zero elsewhere.
Everything stays exact, so identities between step functions are checked by
structural equality of canonical forms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping

from .constructions import k_xy_pieces, make_K_r, make_K_xy
from .errors import DomainError
from .exact import INV_SQRT2, PiScalar, Q2Value, as_fraction, floor_log2
from .intervals import Interval, IntervalSet
from .tiling import is_wavelet_set

__all__ = [
    "StepFunction",
    "PiecewiseQ2",
    "SupportProfile",
    "Lemma1Row",
    "make_psi_r",
    "make_psi_0",
    "indicator_wavelet",
    "support_profile",
    "overlapping_shifts",
    "lemma1_pieces",
    "lemma1_table",
    "lemma1_expected",
]

Piece = tuple[Interval, Q2Value]


def _as_q2(v) -> Q2Value:
    return v if isinstance(v, Q2Value) else Q2Value(v)


class StepFunction:
    """Canonical piecewise-constant function with exact amplitudes.

    Pieces are sorted, pairwise disjoint, carry nonzero values and abutting
    pieces never share a value, so equal functions have equal ``pieces``.
    Overlapping input pieces are summed.
    """

    __slots__ = ("pieces",)

    def __init__(self, pieces: Iterable[tuple[Interval | IntervalSet, object]] = ()):
        flat: list[Piece] = []
        for where, value in pieces:
            value = _as_q2(value)
            if not value:
                continue
            if isinstance(where, IntervalSet):
                flat.extend((iv, value) for iv in where)
            elif where.lo < where.hi:
                flat.append((where, value))
        object.__setattr__(self, "pieces", _sum_pieces(flat))

    def __setattr__(self, name, value):
        raise AttributeError("StepFunction is immutable")

    @classmethod
    def _from_canonical(cls, pieces: Iterable[Piece]) -> StepFunction:
        obj = object.__new__(cls)
        object.__setattr__(obj, "pieces", tuple(pieces))
        return obj

    @classmethod
    def indicator(cls, s: IntervalSet, value=1) -> StepFunction:
        return cls([(s, value)])

    def __iter__(self) -> Iterator[Piece]:
        return iter(self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def __eq__(self, other) -> bool:
        if isinstance(other, StepFunction):
            return self.pieces == other.pieces
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.pieces)

    def __repr__(self) -> str:
        body = ", ".join(f"{iv}: {v}" for iv, v in self.pieces)
        return f"StepFunction({{{body}}})"

    def is_zero(self) -> bool:
        return not self.pieces

    def support(self) -> IntervalSet:
        return IntervalSet(iv for iv, _ in self.pieces)

    def values(self) -> set[Q2Value]:
        return {v for _, v in self.pieces}

    def value_at(self, x) -> Q2Value:
        for iv, v in self.pieces:
            if x < iv.lo:
                break
            if x < iv.hi:
                return v
        return Q2Value(0)

    def __call__(self, x) -> Q2Value:
        return self.value_at(x)

    def __add__(self, other: StepFunction) -> StepFunction:
        if not isinstance(other, StepFunction):
            return NotImplemented
        return StepFunction._from_canonical(_sum_pieces(list(self.pieces) + list(other.pieces)))

    def __neg__(self) -> StepFunction:
        return StepFunction._from_canonical((iv, -v) for iv, v in self.pieces)

    def __sub__(self, other: StepFunction) -> StepFunction:
        if not isinstance(other, StepFunction):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Pointwise product with another step function or a scalar."""
        if isinstance(other, StepFunction):
            return StepFunction._from_canonical(_merge_runs(_product_pieces(self.pieces, other.pieces)))
        if isinstance(other, (int, Fraction, Q2Value)):
            return StepFunction((iv, v * other) for iv, v in self.pieces)
        return NotImplemented

    __rmul__ = __mul__

    def map_values(self, fn: Callable[[Q2Value], Q2Value]) -> StepFunction:
        return StepFunction((iv, fn(v)) for iv, v in self.pieces)

    def squared(self) -> StepFunction:
        return self.map_values(lambda v: v * v)

    def shift(self, c) -> StepFunction:
        """``g(xi) = f(xi + c*pi)``: pieces move left by ``c``."""
        c = as_fraction(c)
        return StepFunction._from_canonical((iv.shift(-c), v) for iv, v in self.pieces)

    def dilate(self, j: int) -> StepFunction:
        """``g(xi) = f(2**j * xi)``: pieces are scaled by ``2**-j``."""
        factor = Fraction(2) ** -j
        return StepFunction._from_canonical((iv.scale(factor), v) for iv, v in self.pieces)

    def restrict(self, s: IntervalSet) -> StepFunction:
        return self * StepFunction.indicator(s)

    def integral(self) -> Q2Value:
        """Integral as a multiple of pi, exact in Q(sqrt 2)."""
        total = Q2Value(0)
        for iv, v in self.pieces:
            total = total + v * iv.length
        return total

    def norm_sq(self) -> Q2Value:
        """Squared L2 norm of the amplitudes, as a multiple of pi."""
        total = Q2Value(0)
        for iv, v in self.pieces:
            total = total + v * v * iv.length
        return total

    def to_json(self) -> list:
        return [[iv.to_json(), str(v)] for iv, v in self.pieces]

    @classmethod
    def from_json(cls, data) -> StepFunction:
        return cls((Interval.of(*pair), Q2Value.parse(val)) for pair, val in data)


# Results of the characterizing sums use the same representation.
PiecewiseQ2 = StepFunction


def _sum_pieces(pieces: list[Piece]) -> tuple[Piece, ...]:
    if not pieces:
        return ()
    delta: dict[PiScalar, Q2Value] = {}
    for iv, v in pieces:
        delta[iv.lo] = delta.get(iv.lo, Q2Value(0)) + v
        delta[iv.hi] = delta.get(iv.hi, Q2Value(0)) - v
    xs = sorted(delta)
    out: list[Piece] = []
    running = Q2Value(0)
    for a, b in zip(xs, xs[1:]):
        running = running + delta[a]
        if running:
            out.append((Interval(a, b), running))
    return _merge_runs(out)


def _merge_runs(pieces: Iterable[Piece]) -> tuple[Piece, ...]:
    out: list[Piece] = []
    for iv, v in pieces:
        if not v:
            continue
        if out and out[-1][1] == v and out[-1][0].hi == iv.lo:
            out[-1] = (Interval(out[-1][0].lo, iv.hi), v)
        else:
            out.append((iv, v))
    return tuple(out)


def _product_pieces(a: tuple[Piece, ...], b: tuple[Piece, ...]) -> list[Piece]:
    out: list[Piece] = []
    i = j = 0
    while i < len(a) and j < len(b):
        ia, va = a[i]
        ib, vb = b[j]
        cut = ia.intersect(ib)
        if cut is not None:
            out.append((cut, va * vb))
        if ia.hi <= ib.hi:
            i += 1
        else:
            j += 1
    return out


def make_psi_r(r: int) -> StepFunction:
    """Fourier transform of the non-MSF wavelet built on ``K_r``.

    Amplitude ``1/sqrt2`` on ``I_r``, ``I_r/2`` and ``I_r/2 + 2**(r+1)pi``,
    ``-1/sqrt2`` on ``I_r + 2**(r+2)pi`` and ``1`` on the rest of ``J_r``.
    """
    _, i_r, j_r = make_K_r(r)
    half = i_r.scale(Fraction(1, 2))
    moved = half.shift(2 ** (r + 1))
    rest = IntervalSet([j_r]) - IntervalSet([moved])
    return StepFunction([
        (i_r, INV_SQRT2),
        (half, INV_SQRT2),
        (moved, INV_SQRT2),
        (i_r.shift(2 ** (r + 2)), -INV_SQRT2),
        (rest, 1),
    ])


def make_psi_0(x, y) -> StepFunction:
    """Non-MSF wavelet built on the five-interval set ``K_{x,y}``.

    ``I_3 = [2y, x + 2pi)`` carries ``1/sqrt2`` together with ``I_3/2`` and
    ``I_3/2 + 2pi``; ``I_3 + 4pi`` carries ``-1/sqrt2``; the remainder of
    ``K_{x,y}`` carries ``1``.
    """
    k = make_K_xy(x, y)
    i3, i4 = k_xy_pieces(x, y)[2], k_xy_pieces(x, y)[3]
    half = i3.scale(Fraction(1, 2))
    moved = half.shift(2)
    if not (i4.lo <= moved.lo and moved.hi <= i4.hi and moved != i4):
        raise AssertionError(f"{moved} should be a proper subset of {i4}")
    rest = k - IntervalSet([i3, moved])
    return StepFunction([
        (i3, INV_SQRT2),
        (half, INV_SQRT2),
        (moved, INV_SQRT2),
        (i3.shift(4), -INV_SQRT2),
        (rest, 1),
    ])


def indicator_wavelet(s: IntervalSet) -> StepFunction:
    """The MSF wavelet ``chi_s``; ``s`` must be a wavelet set."""
    check = is_wavelet_set(s)
    if not check.ok:
        raise DomainError(f"{s} is not a wavelet set: {check.to_json()}")
    return StepFunction.indicator(s)


@dataclass(frozen=True)
class SupportProfile:
    """``E = supp f``, the sets ``E(k) = E n (E - 2k pi)`` and their index set."""

    e_set: IntervalSet
    ek_map: Mapping[int, IntervalSet]
    script_e: frozenset[int]

    def to_json(self) -> dict:
        return {
            "script_e": sorted(self.script_e),
            "ek": {str(k): self.ek_map[k].to_json() for k in sorted(self.ek_map)},
        }


def _k_bound(e: IntervalSet) -> int:
    return max(1, math.ceil(e.extent / 2))


def overlapping_shifts(e: IntervalSet, step: int = 2) -> set[int]:
    """Integers ``m`` with ``e n (e - step*m)`` of positive measure.

    Pieces ``A`` and ``B`` of ``e`` overlap after the shift exactly when
    ``B.lo - A.hi < step*m < B.hi - A.lo``, so candidates come from piece
    pairs rather than from a scan over the whole extent.
    """
    out: set[int] = set()
    for a in e:
        for b in e:
            lo = (b.lo - a.hi) / step
            hi = (b.hi - a.lo) / step
            out.update(range(math.floor(lo) + 1, math.ceil(hi)))
    return out


def support_profile(f: StepFunction | IntervalSet, k_bound: int | None = None) -> SupportProfile:
    """Shifts ``k`` for which ``E(k)`` has positive measure.

    Every shift that can overlap is found from the support pieces; a
    ``k_bound`` only narrows the scan to ``|k| <= k_bound``.
    """
    e = f if isinstance(f, IntervalSet) else f.support()
    ek: dict[int, IntervalSet] = {}
    for k in sorted(overlapping_shifts(e)):
        if k_bound is not None and abs(k) > k_bound:
            continue
        cut = e & e.translate(-k)
        if cut:
            ek[k] = cut
    return SupportProfile(e, ek, frozenset(ek))


@dataclass(frozen=True)
class Lemma1Row:
    """Translation and dilation indices that keep one piece inside ``E_r``.

    ``contained`` is true when, for every listed index, the whole moved
    piece is a subset of ``E_r`` (not just overlapping it).
    """

    piece: IntervalSet
    k_set: frozenset[int]
    j_set: frozenset[int]
    contained: bool


def lemma1_pieces(r: int) -> dict[str, IntervalSet]:
    """The five pieces of ``supp psi_r`` named as in the interaction table."""
    _, i_r, j_r = make_K_r(r)
    half = i_r.scale(Fraction(1, 2))
    moved = half.shift(2 ** (r + 1))
    return {
        "half_I": IntervalSet([half]),
        "I": IntervalSet([i_r]),
        "half_I_shifted": IntervalSet([moved]),
        "J_rest": IntervalSet([j_r]) - IntervalSet([moved]),
        "I_shifted": IntervalSet([i_r.shift(2 ** (r + 2))]),
    }


def lemma1_expected(r: int) -> dict[str, tuple[frozenset[int], frozenset[int]]]:
    """Expected ``(k_set, j_set)`` rows, written out for comparison."""
    a, b = 2**r, 2 ** (r + 1)
    return {
        "half_I": (frozenset({0, a}), frozenset({0, 1})),
        "I": (frozenset({0, b}), frozenset({0, -1})),
        "half_I_shifted": (frozenset({0, -a}), frozenset({0, 1})),
        "J_rest": (frozenset({0}), frozenset({0})),
        "I_shifted": (frozenset({0, -b}), frozenset({0, -1})),
    }


def lemma1_table(r: int) -> dict[str, Lemma1Row]:
    """Scan all shifts and dilations of each support piece of ``psi_r``."""
    e = make_psi_r(r).support()
    rows = {}
    k_bound = _k_bound(e)
    j_bound = floor_log2(e.max / e.min) + 1
    for name, piece in lemma1_pieces(r).items():
        k_set = set()
        contained = True
        for k in range(-k_bound, k_bound + 1):
            moved = piece.translate(k)
            if moved & e:
                k_set.add(k)
                contained &= moved.issubset(e)
        j_set = set()
        for j in range(-j_bound, j_bound + 1):
            moved = piece.dilate(j)
            if moved & e:
                j_set.add(j)
                contained &= moved.issubset(e)
        rows[name] = Lemma1Row(piece, frozenset(k_set), frozenset(j_set), contained)
    return rows

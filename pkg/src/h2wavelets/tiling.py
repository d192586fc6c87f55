"""Translation and dilation tilings of the fold domain ``[2pi, 4pi)``.

A set ``K`` in the positive half-line is a wavelet set for the Hardy space
exactly when its ``2k*pi`` translates partition the line and its dyadic
dilates partition ``(0, inf)``.  Both conditions reduce to a multiplicity
count on one fundamental domain, here ``[2pi, 4pi)``:

* the translation count at ``xi`` is ``#{k : xi - 2k*pi in K}``,
* the dilation count at ``xi`` is ``#{j : 2**-j * xi in K}``.

Counts are computed exactly by folding every piece of ``K`` into the
domain, so the verdicts carry exact overlap and gap measures.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import DomainError
from .exact import PiScalar, floor_log2
from .intervals import Interval, IntervalSet

__all__ = [
    "FOLD_DOMAIN",
    "MultiplicityProfile",
    "TilingReport",
    "WaveletSetCheck",
    "EquivalenceWitness",
    "EquivalenceResult",
    "tau_fold",
    "d_fold",
    "tau_profile",
    "d_profile",
    "tiling_report",
    "is_wavelet_set",
    "translation_equivalent",
    "dilation_equivalent",
]

FOLD_DOMAIN = Interval.of(2, 4)


def _translation_range(iv: Interval) -> range:
    """Shifts ``m`` such that ``iv - 2m`` meets ``[2, 4)``."""
    lo = math.floor((iv.lo - 2) / 2)
    hi = math.ceil((iv.hi - 2) / 2)
    return range(lo, hi)


def _dilation_range(iv: Interval) -> range:
    """Exponents ``j`` such that ``2**-j * iv`` meets ``[2, 4)``."""
    if iv.lo <= 0:
        raise DomainError(f"dilation fold needs positive points, got {iv}")
    lo = floor_log2(iv.lo / 2)
    hi = floor_log2(iv.hi / 2)
    if (iv.hi / 2) == Fraction(2) ** hi:
        hi -= 1
    return range(lo, hi + 1)


Pieces = Union[IntervalSet, Sequence[Interval]]


def _positive_min(s: Pieces):
    lows = [iv.lo for iv in s if iv.lo < iv.hi]
    return min(lows) if lows else None


def tau_fold(s: Pieces) -> list[tuple[Interval, int]]:
    """Pieces of ``s`` moved into ``[2, 4)``, tagged with the shift ``m``.

    Each entry ``(cell, m)`` says ``cell + 2m*pi`` is a subset of ``s``.
    A plain list of intervals is folded piece by piece, so overlapping
    pieces count with multiplicity; empty or reversed pieces are ignored.
    """
    out = []
    for iv in s:
        if iv.hi <= iv.lo:
            continue
        for m in _translation_range(iv):
            cell = iv.shift(-2 * m).intersect(FOLD_DOMAIN)
            if cell is not None:
                out.append((cell, m))
    return out


def d_fold(s: Pieces) -> list[tuple[Interval, int]]:
    """Pieces of ``s`` dilated into ``[2, 4)``, tagged with the exponent.

    Each entry ``(cell, j)`` says ``2**j * cell`` is a subset of ``s``.
    """
    out = []
    for iv in s:
        if iv.hi <= iv.lo:
            continue
        for j in _dilation_range(iv):
            cell = iv.scale(Fraction(2) ** -j).intersect(FOLD_DOMAIN)
            if cell is not None:
                out.append((cell, j))
    return out


@dataclass(frozen=True)
class MultiplicityProfile:
    """Piecewise-constant count on ``domain``; steps are maximal runs."""

    domain: Interval
    steps: tuple[tuple[Interval, int], ...]

    def is_identically(self, value: int) -> bool:
        return all(c == value for _, c in self.steps)

    def count_at(self, x) -> int:
        for iv, c in self.steps:
            if iv.contains(x):
                return c
        raise ValueError(f"{x} outside profile domain {self.domain}")

    def integral(self) -> PiScalar:
        """Sum of count times length over the domain."""
        total = Fraction(0)
        for iv, c in self.steps:
            total += c * (iv.hi - iv.lo)
        return PiScalar(total)


def _count_profile(cells: Iterable[Interval], domain: Interval = FOLD_DOMAIN) -> MultiplicityProfile:
    events: dict[PiScalar, int] = {domain.lo: 0, domain.hi: 0}
    for iv in cells:
        events[iv.lo] = events.get(iv.lo, 0) + 1
        events[iv.hi] = events.get(iv.hi, 0) - 1
    xs = sorted(events)
    steps: list[tuple[Interval, int]] = []
    count = 0
    for a, b in zip(xs, xs[1:]):
        count += events[a]
        if b <= domain.lo or a >= domain.hi:
            continue
        if steps and steps[-1][1] == count:
            steps[-1] = (Interval(steps[-1][0].lo, b), count)
        else:
            steps.append((Interval(a, b), count))
    return MultiplicityProfile(domain, tuple(steps))


def tau_profile(s: Pieces) -> MultiplicityProfile:
    """Translation multiplicity of ``s`` on ``[2pi, 4pi)``."""
    return _count_profile(cell for cell, _ in tau_fold(s))


def d_profile(s: Pieces) -> MultiplicityProfile:
    """Dyadic-dilation multiplicity of ``s`` on ``[2pi, 4pi)``.

    Raises :class:`DomainError` if ``s`` reaches zero or below.
    """
    lo = _positive_min(s)
    if lo is not None and lo <= 0:
        raise DomainError("dilation profile is only defined for subsets of (0, inf)")
    return _count_profile(cell for cell, _ in d_fold(s))


@dataclass(frozen=True)
class TilingReport:
    """Exact defects of a multiplicity profile against the constant 1.

    ``overlap_defect`` weighs every over-covered step by ``count - 1``;
    ``gap_defect`` is the measure of the uncovered part.
    """

    overlap_defect: PiScalar
    gap_defect: PiScalar
    witness_overlap: Interval | None = None
    witness_gap: Interval | None = None

    @property
    def ok(self) -> bool:
        return self.overlap_defect == 0 and self.gap_defect == 0

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "overlap_defect": str(self.overlap_defect),
            "gap_defect": str(self.gap_defect),
            "witness_overlap": self.witness_overlap.to_json() if self.witness_overlap else None,
            "witness_gap": self.witness_gap.to_json() if self.witness_gap else None,
        }


def tiling_report(profile: MultiplicityProfile) -> TilingReport:
    overlap = Fraction(0)
    gap = Fraction(0)
    w_over = w_gap = None
    for iv, c in profile.steps:
        if c >= 2:
            overlap += (c - 1) * iv.length
            w_over = w_over or iv
        elif c == 0:
            gap += iv.length
            w_gap = w_gap or iv
    return TilingReport(PiScalar(overlap), PiScalar(gap), w_over, w_gap)


class WaveletSetCheck(NamedTuple):
    ok: bool
    translation: TilingReport
    dilation: TilingReport

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "translation": self.translation.to_json(),
            "dilation": self.dilation.to_json(),
        }


def is_wavelet_set(s: Pieces) -> WaveletSetCheck:
    """Check both tiling conditions; unpacks as ``(ok, tau_report, d_report)``.

    A list of intervals is checked as a family counted with multiplicity.
    """
    d_rep = tiling_report(d_profile(s))
    t_rep = tiling_report(tau_profile(s))
    return WaveletSetCheck(t_rep.ok and d_rep.ok, t_rep, d_rep)


@dataclass(frozen=True)
class EquivalenceWitness:
    """Partition of the source into ``(piece, index)`` parts.

    For translation witnesses the image of a part is ``piece + 2*index*pi``;
    for dilation witnesses it is ``2**index * piece``.
    """

    kind: str
    parts: tuple[tuple[Interval, int], ...]

    def image(self, part: tuple[Interval, int]) -> Interval:
        iv, idx = part
        if self.kind == "translation":
            return iv.shift(2 * idx)
        return iv.scale(Fraction(2) ** idx)

    def source(self) -> IntervalSet:
        return IntervalSet(iv for iv, _ in self.parts)

    def target(self) -> IntervalSet:
        return IntervalSet(self.image(p) for p in self.parts)

    def to_json(self) -> dict:
        return {"kind": self.kind, "parts": [[iv.to_json(), idx] for iv, idx in self.parts]}


class EquivalenceResult(NamedTuple):
    equivalent: bool
    witness: EquivalenceWitness | None


def _cells(folds: list[list[tuple[Interval, int]]]) -> list[Interval]:
    cuts = {FOLD_DOMAIN.lo, FOLD_DOMAIN.hi}
    for fold in folds:
        for cell, _ in fold:
            cuts.add(cell.lo)
            cuts.add(cell.hi)
    xs = sorted(cuts)
    return [Interval(a, b) for a, b in zip(xs, xs[1:])]


def _covering_indices(fold: list[tuple[Interval, int]], cell: Interval) -> list[int]:
    return sorted(idx for piece, idx in fold if piece.lo <= cell.lo and cell.hi <= piece.hi)


def _match(kind: str, fa, fb) -> EquivalenceResult:
    parts: list[tuple[Interval, int]] = []
    for cell in _cells([fa, fb]):
        ia = _covering_indices(fa, cell)
        ib = _covering_indices(fb, cell)
        if len(ia) != len(ib):
            return EquivalenceResult(False, None)
        for ma, mb in zip(ia, ib):
            if kind == "translation":
                parts.append((cell.shift(2 * ma), mb - ma))
            else:
                parts.append((cell.scale(Fraction(2) ** ma), mb - ma))
    parts.sort(key=lambda p: p[0].lo)
    merged: list[tuple[Interval, int]] = []
    for iv, idx in parts:
        if merged and merged[-1][1] == idx and merged[-1][0].hi == iv.lo:
            merged[-1] = (Interval(merged[-1][0].lo, iv.hi), idx)
        else:
            merged.append((iv, idx))
    return EquivalenceResult(True, EquivalenceWitness(kind, tuple(merged)))


def translation_equivalent(a: IntervalSet, b: IntervalSet) -> EquivalenceResult:
    """Decide translation equivalence by comparing translation counts.

    On success the witness matches, residue cell by residue cell, the
    i-th translate of the cell inside ``a`` with the i-th one inside ``b``.
    """
    return _match("translation", tau_fold(a), tau_fold(b))


def dilation_equivalent(a: IntervalSet, b: IntervalSet) -> EquivalenceResult:
    """Dyadic analogue of :func:`translation_equivalent`; needs ``a, b > 0``."""
    for s in (a, b):
        if s and s.min <= 0:
            raise DomainError("dilation equivalence is only defined for subsets of (0, inf)")
    return _match("dilation", d_fold(a), d_fold(b))

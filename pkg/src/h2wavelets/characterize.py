"""Exact check of the two equations characterizing Hardy-space wavelets.

For a step function ``f`` standing for the Fourier transform of ``psi``:

* ``rho(xi) = sum_j |f(2**j xi)|**2`` must equal 1 on ``(0, inf)``;
* ``t_q(xi) = sum_{j >= 0} f(2**j xi) f(2**j (xi + 2q pi))`` must vanish
  for every odd ``q``.

Both sums have finitely many nonzero terms for compactly supported ``f``
away from the origin, so they are evaluated as exact step functions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import DomainError
from .exact import PiScalar, Q2Value, floor_log2, is_unimodular, two_adic_valuation
from .intervals import Interval, IntervalSet
from .step_wavelet import PiecewiseQ2, StepFunction, overlapping_shifts, support_profile
from .tiling import FOLD_DOMAIN

__all__ = [
    "WaveletVerdict",
    "ClassLabel",
    "rho",
    "relevant_q",
    "t_q",
    "verify_wavelet",
    "is_msf",
    "classify",
]


def _check_support(f: StepFunction) -> IntervalSet:
    e = f.support()
    if e and e.min <= 0:
        raise DomainError("the Fourier transform must vanish on (-inf, 0]")
    return e


def rho(f: StepFunction, domain: IntervalSet | None = None) -> PiecewiseQ2:
    """``sum_j |f(2**j xi)|**2`` restricted to ``domain`` (default ``[2pi, 4pi)``).

    The sum is invariant under ``xi -> 2 xi``, so its values on any set
    whose dyadic dilates cover ``(0, inf)`` once determine it everywhere.
    """
    _check_support(f)
    if domain is None:
        domain = IntervalSet([FOLD_DOMAIN])
    if not f.pieces or not domain:
        return StepFunction()
    if domain.min <= 0:
        raise DomainError("rho is evaluated on positive frequencies only")
    terms: list[tuple[Interval, Q2Value]] = []
    for iv, v in f.pieces:
        sq = v * v
        # 2**-j * iv meets domain iff domain.min/iv.hi < 2**-j < domain.max/iv.lo
        j_lo = floor_log2(iv.lo / domain.max)
        j_hi = floor_log2(iv.hi / domain.min) + 1
        for j in range(j_lo, j_hi + 1):
            moved = iv.scale(Fraction(2) ** -j)
            for d in domain:
                cut = moved.intersect(d)
                if cut is not None:
                    terms.append((cut, sq))
    return StepFunction(terms)


def _j_max(extent: PiScalar, q: int) -> int:
    """Largest ``j`` with ``2**(j+1) |q| < extent``; -1 if none."""
    bound = Fraction(extent) / (2 * abs(q))
    if bound <= 1:
        return -1
    j = floor_log2(bound)
    if Fraction(2) ** j == bound:
        j -= 1
    return j


def relevant_q(f: StepFunction) -> dict[int, list[int]]:
    """Odd ``q > 0`` and the ``j >= 0`` whose product term can be nonzero.

    A term of ``t_q`` survives only if the support meets its own translate
    by ``2**(j+1) q pi`` in positive measure.
    """
    e = _check_support(f)
    out: dict[int, list[int]] = {}
    if not e:
        return out
    for j in range(_j_max(e.extent, 1) + 1):
        for q in sorted(overlapping_shifts(e, 2 ** (j + 1))):
            if q > 0 and q % 2 == 1 and e & e.shift(-(2 ** (j + 1)) * q):
                out.setdefault(q, []).append(j)
    return dict(sorted(out.items()))


def t_q(f: StepFunction, q: int, js: Iterable[int] | None = None) -> PiecewiseQ2:
    """``sum_{j >= 0} f(2**j xi) f(2**j xi + 2**(j+1) q pi)`` as an exact step function.

    Amplitudes are real, so the complex conjugate in the defining sum is a
    no-op.  Negative odd ``q`` are accepted.  ``js`` restricts the sum to
    the given terms; by default every ``j`` whose shift is shorter than the
    support is summed.
    """
    if q % 2 == 0:
        raise DomainError(f"q must be odd, got {q}")
    e = _check_support(f)
    total = StepFunction()
    if not e:
        return total
    if js is None:
        js = range(_j_max(e.extent, q) + 1)
    for j in js:
        term = f * f.shift(2 ** (j + 1) * q)
        if not term.is_zero():
            total = total + term.dilate(j)
    return total


@dataclass(frozen=True)
class WaveletVerdict:
    norm_ok: bool
    rho_ok: bool
    tq_ok: bool
    failing_q: int | None = None
    witness: tuple[Interval, Q2Value] | None = None
    checked_q: frozenset[int] = field(default_factory=frozenset)

    @property
    def ok(self) -> bool:
        return self.norm_ok and self.rho_ok and self.tq_ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "norm_ok": self.norm_ok,
            "rho_ok": self.rho_ok,
            "tq_ok": self.tq_ok,
            "failing_q": self.failing_q,
            "witness": (
                None if self.witness is None else [self.witness[0].to_json(), str(self.witness[1])]
            ),
            "checked_q": sorted(self.checked_q),
        }


def verify_wavelet(f: StepFunction) -> WaveletVerdict:
    """Exact verdict on the norm, the dilation sum and every ``t_q``.

    Only the odd ``q > 0`` listed by :func:`relevant_q` can give a nonzero
    ``t_q``; negative ``q`` follow from ``t_{-q}(xi) = t_q(xi - 2q pi)``.
    """
    e = _check_support(f)
    norm_ok = f.norm_sq() == 2
    fold = IntervalSet([FOLD_DOMAIN])
    rho_ok = bool(e) and rho(f, fold) == StepFunction.indicator(fold)
    witness = None
    if not rho_ok and e:
        bad = rho(f, fold) - StepFunction.indicator(fold)
        if bad.pieces:
            iv, diff = bad.pieces[0]
            witness = (iv, diff + 1)
    candidates = relevant_q(f)
    failing_q = None
    for q, js in candidates.items():
        tq = t_q(f, q, js)
        if not tq.is_zero():
            failing_q = q
            if witness is None:
                witness = tq.pieces[0]
            break
    return WaveletVerdict(
        norm_ok=norm_ok,
        rho_ok=rho_ok,
        tq_ok=failing_q is None,
        failing_q=failing_q,
        witness=witness,
        checked_q=frozenset(candidates),
    )


def is_msf(f: StepFunction) -> bool:
    """True when ``|f|`` is an indicator function."""
    return all(is_unimodular(v) for _, v in f.pieces)


class ClassLabel(NamedTuple):
    """``M_r`` for ``r >= 0``; ``r is None`` encodes ``M_infinity``."""

    r: int | None

    @property
    def kind(self) -> str:
        return "M_infinity" if self.r is None else "M_r"

    def __str__(self) -> str:
        return "M_infinity" if self.r is None else f"M_{self.r}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "r": self.r, "label": str(self)}


M_INFINITY = ClassLabel(None)


def classify(f: StepFunction, verdict: WaveletVerdict | None = None) -> ClassLabel:
    """Equivalence class from the shifts ``k`` with ``E(k)`` of positive measure.

    MSF wavelets are ``M_infinity``; otherwise ``r`` is the smallest 2-adic
    valuation among the nonzero shifts.
    """
    verdict = verdict or verify_wavelet(f)
    if not verdict.ok:
        raise DomainError(f"not a wavelet, cannot classify: {verdict.to_json()}")
    if is_msf(f):
        return M_INFINITY
    shifts = support_profile(f).script_e - {0}
    if not shifts:
        raise DomainError("non-MSF wavelet whose support meets no nontrivial translate; no class assigned")
    return ClassLabel(min(two_adic_valuation(k) for k in shifts))

"""Floating-point evaluation of wavelets given by exact step functions.

Fourier convention: ``fhat(xi) = int f(x) exp(-i xi x) dx``, hence
``psi(x) = (1/2pi) int psihat(xi) exp(i xi x) dxi`` and
``<f, g> = (1/2pi) int fhat conj(ghat)``.  With this normalization a
step function of squared norm ``2pi`` gives a unit-norm wavelet.

Exact rationals are converted to floats as late as possible: phases are
reduced modulo ``2pi`` while still exact, so the closed forms below are
accurate to a few ulps.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .exact import PiScalar, as_fraction
from .intervals import IntervalSet
from .step_wavelet import StepFunction, _product_pieces

__all__ = [
    "ComplexSample",
    "GramReport",
    "sample_time",
    "inner_product",
    "gram",
    "gram_matrix",
    "origin_probe",
]


class ComplexSample(NamedTuple):
    x: float
    value: complex


def _phase(c: Fraction) -> complex:
    """``exp(i*pi*c)`` with ``c`` reduced modulo 2 before rounding."""
    c = c - 2 * math.floor(c / 2)
    return complex(np.exp(1j * math.pi * float(c)))


def sample_time(f: StepFunction, xs: Iterable[float]) -> list[ComplexSample]:
    """Evaluate ``psi(x)`` from its piecewise-constant Fourier transform.

    Each piece ``[a, b)`` contributes ``v (b - a) exp(i m x) sinc(h x)``
    with midpoint ``m`` and half-width ``h``; the sinc form needs no
    special branch at ``x = 0``.
    """
    pieces = [
        (float(v), float(iv.lo + iv.hi) * math.pi / 2, float(iv.hi - iv.lo) * math.pi / 2)
        for iv, v in f.pieces
    ]
    out = []
    for x in xs:
        x = float(x)
        total = 0j
        for v, mid, half in pieces:
            # np.sinc(t) = sin(pi t)/(pi t)
            total += v * 2 * half * np.exp(1j * mid * x) * np.sinc(half * x / math.pi)
        out.append(ComplexSample(x, complex(total / (2 * math.pi))))
    return out


def _dilated(f: StepFunction, j: int) -> StepFunction:
    """Pieces of ``xi -> psihat(2**-j xi)``."""
    return f.dilate(-j)


def inner_product(f: StepFunction, a: tuple[int, int], b: tuple[int, int]) -> complex:
    """``<psi_{j,k}, psi_{j',k'}>`` computed in the frequency domain.

    ``psihat_{j,k}(xi) = 2**(-j/2) exp(-i 2**-j k xi) psihat(2**-j xi)``.
    Pieces are intersected exactly; each overlap ``[lo, hi)`` (in units of
    pi) contributes ``pi (hi - lo) exp(-i pi c m) sinc(c h)`` with
    ``c = 2**-j k - 2**-j' k'``, midpoint ``m`` and half-width ``h``.
    """
    (j1, k1), (j2, k2) = a, b
    c = k1 / Fraction(2) ** j1 - k2 / Fraction(2) ** j2
    overlaps = _product_pieces(_dilated(f, j1).pieces, _dilated(f, j2).pieces)
    if not overlaps:
        return 0j
    total = 0j
    for iv, v in overlaps:
        mid = Fraction(iv.lo + iv.hi) / 2
        half = Fraction(iv.hi - iv.lo) / 2
        integral = math.pi * float(2 * half) * _phase(-c * mid) * float(np.sinc(float(c * half)))
        total += float(v) * integral
    return total * 2 ** (-(j1 + j2) / 2) / (2 * math.pi)


@dataclass(frozen=True)
class GramReport:
    index_grid: tuple[tuple[int, int], ...]
    max_offdiag: float
    max_diag_err: float
    matrix: np.ndarray

    @property
    def max_deviation(self) -> float:
        return max(self.max_offdiag, self.max_diag_err)

    def to_json(self) -> dict:
        return {
            "index_grid": [list(p) for p in self.index_grid],
            "max_offdiag": self.max_offdiag,
            "max_diag_err": self.max_diag_err,
        }


def gram_matrix(f: StepFunction, grid: Sequence[tuple[int, int]]) -> np.ndarray:
    n = len(grid)
    g = np.empty((n, n), dtype=complex)
    for p in range(n):
        for q in range(p, n):
            g[p, q] = inner_product(f, grid[p], grid[q])
            g[q, p] = np.conj(g[p, q])
    return g


def gram(f: StepFunction, j_range: tuple[int, int], k_range: tuple[int, int]) -> GramReport:
    """Gram matrix of ``psi_{j,k}`` over inclusive ``j`` and ``k`` ranges."""
    (jmin, jmax), (kmin, kmax) = j_range, k_range
    if jmin > jmax or kmin > kmax:
        raise ValueError("empty index range")
    grid = tuple((j, k) for j in range(jmin, jmax + 1) for k in range(kmin, kmax + 1))
    g = gram_matrix(f, grid)
    dev = np.abs(g - np.eye(len(grid)))
    diag = float(np.max(np.diag(dev)))
    np.fill_diagonal(dev, 0.0)
    return GramReport(grid, float(np.max(dev)), diag, g)


def origin_probe(s: IntervalSet, deltas: Iterable) -> list[tuple[PiScalar, bool]]:
    """For each ``delta``, whether ``s`` has positive measure inside ``(0, delta)``."""
    out = []
    for d in deltas:
        d = PiScalar(as_fraction(d))
        if d <= 0:
            raise ValueError(f"probe radius must be positive, got {d}")
        window = IntervalSet.from_pairs([(0, d)])
        out.append((d, not (s & window).is_empty()))
    return out

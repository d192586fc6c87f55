"""Exact constructors for the Hardy-space wavelet sets.

Coordinates are coefficients of pi throughout: ``Interval.of(4, 16/3)``
is ``[4pi, 16pi/3)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import ParameterError
from .exact import PiScalar, as_fraction
from .intervals import Interval, IntervalSet, union_all

__all__ = [
    "DEFAULT_DEPTH",
    "KrBuild",
    "KrEpsilonBuild",
    "shannon_set",
    "make_K_rk",
    "make_K_r",
    "make_K_xy",
    "k_xy_pieces",
    "in_kxy_triangle",
    "make_K_r_eps",
    "t_r",
    "eps_bound",
    "kr_eps_tail_defect",
]

DEFAULT_DEPTH = 12


def _check_r(r: int) -> None:
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ParameterError(f"r must be a positive integer, got {r!r}")


def shannon_set() -> IntervalSet:
    """``[2pi, 4pi)``, the support of the Shannon-type Hardy wavelet."""
    return IntervalSet.from_pairs([(2, 4)])


def make_K_rk(r: int, k: int) -> IntervalSet:
    """Two-interval wavelet set, valid for ``1 <= k < 2(2**r - 1)``."""
    _check_r(r)
    if not isinstance(k, int) or not 1 <= k < 2 * (2**r - 1):
        raise ParameterError(f"k must satisfy 1 <= k < {2 * (2**r - 1)} for r={r}, got {k!r}")
    p, q = 2**r - 1, 2 ** (r + 1) - 1
    a = Interval.of(Fraction(2 * (k + 1), q), Fraction(2 * k, p))
    b = Interval.of(Fraction(2 ** (r + 1) * k, p), Fraction(2 ** (r + 2) * (k + 1), q))
    return IntervalSet([a, b])


def t_r(r: int) -> PiScalar:
    """Left end ``2**(r+1)/(2**(r+1)-1)`` of the first interval of ``K_r``."""
    _check_r(r)
    return PiScalar(2 ** (r + 1), 2 ** (r + 1) - 1)


class KrBuild(NamedTuple):
    set: IntervalSet
    i_r: Interval
    j_r: Interval


def make_K_r(r: int) -> KrBuild:
    """``K_r = I_r u J_r`` with ``I_r = [t_r, 2)`` and ``J_r = [2**(r+1), 2**(r+1) t_r)``."""
    t = t_r(r)
    i_r = Interval(t, PiScalar(2))
    j_r = Interval(PiScalar(2 ** (r + 1)), t * 2 ** (r + 1))
    return KrBuild(IntervalSet([i_r, j_r]), i_r, j_r)


def in_kxy_triangle(x, y) -> bool:
    """Strict membership of ``(x, y)`` in the open parameter triangle."""
    x, y = as_fraction(x), as_fraction(y)
    return 1 < x < y < 2 and x + 2 > 2 * y


def k_xy_pieces(x, y) -> list[Interval]:
    """The five intervals ``I_1..I_5`` in order, without parameter checks."""
    x, y = PiScalar(as_fraction(x)), PiScalar(as_fraction(y))
    return [
        Interval(x, y),
        Interval(PiScalar(2), 2 * x),
        Interval(2 * y, x + 2),
        Interval(y + 2, PiScalar(4)),
        Interval(2 * x + 4, 2 * y + 4),
    ]


def make_K_xy(x, y) -> IntervalSet:
    """Five-interval wavelet set for ``pi < x < y < 2pi`` and ``x + 2pi > 2y``."""
    if not in_kxy_triangle(x, y):
        raise ParameterError(f"(x, y) = ({x}, {y}) is not inside the open parameter triangle")
    return IntervalSet(k_xy_pieces(x, y))


def eps_bound(r: int) -> PiScalar:
    """Supremum ``(2**r - 1)/(2**(r+1) - 1)`` of admissible epsilons."""
    _check_r(r)
    return PiScalar(2**r - 1, 2 ** (r + 1) - 1)


def kr_eps_tail_defect(r: int, eps, depth: int) -> PiScalar:
    """``|E_{depth+1}|`` from the length recurrence alone."""
    eps = as_fraction(eps)
    length = eps * (1 - Fraction(1, 2 ** (r + 1)))
    exponent = sum(n + r + 2 for n in range(depth + 1))
    return PiScalar(length / 2**exponent)


@dataclass(frozen=True)
class KrEpsilonBuild:
    """Truncated ``K_{r,eps}`` together with its building blocks.

    ``tail_defect`` is the measure of ``E_{N+1}``, the part of ``J_r`` that
    the truncated set covers twice under translation.
    """

    r: int
    eps: PiScalar
    depth: int
    set: IntervalSet
    e_intervals: tuple[Interval, ...]
    f_intervals: tuple[Interval, ...]
    s_parts: tuple[Interval, Interval, Interval]
    tail_defect: PiScalar
    i_r: Interval
    j_r: Interval

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "eps": str(self.eps),
            "depth": self.depth,
            "tail_defect": str(self.tail_defect),
            "e_intervals": [iv.to_json() for iv in self.e_intervals],
            "f_intervals": [iv.to_json() for iv in self.f_intervals],
            "s_parts": [iv.to_json() for iv in self.s_parts],
        }


def make_K_r_eps(r: int, eps, depth: int = DEFAULT_DEPTH) -> KrEpsilonBuild:
    """Build ``K_{r,eps}`` with the infinite unions cut after ``n = depth``.

    ``eps`` is a coefficient of pi with ``0 < eps < eps_bound(r)``.
    """
    _check_r(r)
    eps = PiScalar(as_fraction(eps))
    if not 0 < eps < eps_bound(r):
        raise ParameterError(f"eps must lie in (0, {eps_bound(r)}) for r={r}, got {eps}")
    if not isinstance(depth, int) or depth < 0:
        raise ParameterError(f"depth must be a nonnegative integer, got {depth!r}")

    t = t_r(r)
    base = 2 ** (r + 1)
    _, i_r, j_r = make_K_r(r)
    s1 = Interval(t / 2 + eps / base, t / 2 + eps)
    s2 = Interval(t + 2 * eps, PiScalar(2))
    s3 = Interval(t * base, t * base + 2 * eps)

    e_list: list[Interval] = []
    f_list: list[Interval] = []
    e = s1.shift(base)
    for n in range(depth + 2):
        e_list.append(e)
        f = e.scale(Fraction(1, 2 ** (n + r + 2)))
        f_list.append(f)
        e = f.shift(base)
    # keep E_{N+1} to check the tail, but build with n <= N only
    e_next = e_list.pop()
    f_list.pop()

    removed = IntervalSet(e_list)
    kept = IntervalSet([j_r]) - removed
    full = union_all([kept, IntervalSet(f_list), IntervalSet([s1, s2, s3])])
    tail = kr_eps_tail_defect(r, eps, depth)
    assert tail == e_next.length
    return KrEpsilonBuild(
        r=r,
        eps=eps,
        depth=depth,
        set=full,
        e_intervals=tuple(e_list),
        f_intervals=tuple(f_list),
        s_parts=(s1, s2, s3),
        tail_defect=tail,
        i_r=i_r,
        j_r=j_r,
    )

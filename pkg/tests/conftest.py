from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from h2wavelets import Interval, IntervalSet, Q2Value, StepFunction

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# small rationals keep sweeps fast while still exercising every branch
small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-24, max_value=48),
    st.sampled_from([1, 2, 3, 4, 6]),
)

raw_intervals = st.lists(
    st.tuples(small_rationals, small_rationals).map(lambda p: Interval.of(*p)),
    max_size=6,
)

interval_sets = raw_intervals.map(IntervalSet)

q2_values = st.builds(Q2Value, small_rationals, small_rationals)
nonzero_q2 = q2_values.filter(lambda v: v != 0)

step_functions = st.lists(
    st.tuples(
        st.tuples(small_rationals, small_rationals).map(lambda p: Interval.of(*p)),
        st.sampled_from([Q2Value(1), Q2Value(-1), Q2Value(0, Fraction(1, 2)), Q2Value(0, Fraction(-1, 2)), Q2Value(Fraction(1, 3), 1)]),
    ),
    max_size=5,
).map(StepFunction)


def probe_points(*sets) -> list[Fraction]:
    """Every endpoint plus every midpoint between consecutive endpoints.

    Half-open unions are constant between endpoints, so membership at these
    points decides set equality completely.
    """
    xs = set()
    for s in sets:
        for iv in s:
            xs.add(Fraction(iv.lo))
            xs.add(Fraction(iv.hi))
    xs = sorted(xs)
    mids = [(a + b) / 2 for a, b in zip(xs, xs[1:])]
    pad = [xs[0] - 1, xs[-1] + 1] if xs else [Fraction(0)]
    return sorted(set(xs) | set(mids) | set(pad))


def raw_contains(pieces, x) -> int:
    return sum(1 for iv in pieces if iv.lo <= x < iv.hi)


def tau_count(pieces, x, reach: int = 64) -> int:
    """Brute force ``#{k : x - 2k in s}`` for ``x`` in ``[2, 4)``."""
    return sum(raw_contains(pieces, x - 2 * k) for k in range(-reach, reach + 1))


def d_count(pieces, x, reach: int = 64) -> int:
    """Brute force ``#{j : 2**-j x in s}``."""
    return sum(raw_contains(pieces, x / Fraction(2) ** j) for j in range(-reach, reach + 1))


def fold_grid(den: int = 97) -> list[Fraction]:
    return [2 + Fraction(i, den) for i in range(2 * den)]


@pytest.fixture
def rng():
    import random

    return random.Random(20261016)

import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from h2wavelets import (
    Interval,
    IntervalSet,
    canonicalize,
    dilate,
    measure,
    set_intersect,
    set_subtract,
    set_union,
    translate,
)

from conftest import interval_sets, probe_points, raw_contains, raw_intervals


def S(*pairs):
    return IntervalSet.from_pairs(pairs)


def test_abutting_pieces_merge():
    assert canonicalize([Interval.of(2, 3), Interval.of(3, 4)]) == S((2, 4))


def test_unordered_pieces_sort():
    out = canonicalize([Interval.of(4, Fraction(16, 3)), Interval.of(Fraction(4, 3), 2)])
    assert out.pieces == (Interval.of(Fraction(4, 3), 2), Interval.of(4, Fraction(16, 3)))


def test_degenerate_piece_dropped():
    assert canonicalize([Interval.of(1, 1)]).is_empty()
    assert canonicalize([Interval.of(3, 1)]).is_empty()


def test_difference_example():
    out = set_subtract(S((4, Fraction(16, 3))), S((Fraction(14, 3), 5)))
    assert out == S((4, Fraction(14, 3)), (5, Fraction(16, 3)))


def test_translate_and_dilate_examples():
    i1 = S((Fraction(4, 3), 2))
    assert translate(i1, 4) == S((Fraction(28, 3), 10))
    assert dilate(i1, -1) == S((Fraction(2, 3), 1))
    assert translate(i1, 0) == i1 and dilate(i1, 0) == i1


def test_measure_examples():
    k1 = S((Fraction(4, 3), 2), (4, Fraction(16, 3)))
    assert measure(k1) == 2
    assert measure(IntervalSet.empty()) == 0
    assert measure(S((2, 4))) == 2


def test_json_shape():
    s = S((Fraction(4, 3), 2), (4, Fraction(16, 3)))
    assert s.to_json() == [["4/3", "2"], ["4", "16/3"]]
    assert IntervalSet.from_json(s.to_json()) == s


def test_set_queries():
    s = S((1, 2), (5, 7))
    assert (s.min, s.max, s.extent) == (1, 7, 6)
    assert s.contains(1) and not s.contains(2) and s.contains(Fraction(13, 2))
    assert S((5, 6)).issubset(s) and not S((2, 3)).issubset(s)


@given(raw_intervals)
def test_canonical_invariants(raw):
    s = canonicalize(raw)
    for iv in s:
        assert iv.lo < iv.hi
    for a, b in zip(s.pieces, s.pieces[1:]):
        assert a.hi < b.lo


@given(raw_intervals, st.randoms(use_true_random=False))
def test_canonicalize_idempotent_and_order_free(raw, r):
    s = canonicalize(raw)
    assert canonicalize(s.pieces) == s
    shuffled = list(raw)
    r.shuffle(shuffled)
    assert canonicalize(shuffled).pieces == s.pieces


@given(raw_intervals)
def test_membership_matches_raw_union(raw):
    s = canonicalize(raw)
    for x in probe_points(raw or [Interval.of(0, 1)]):
        assert s.contains(x) == (raw_contains(raw, x) > 0)


@given(interval_sets, interval_sets)
def test_boolean_ops_match_pointwise_oracle(a, b):
    union, inter, diff = set_union(a, b), set_intersect(a, b), set_subtract(a, b)
    for x in probe_points(a, b, S((0, 1))):
        ia, ib = a.contains(x), b.contains(x)
        assert union.contains(x) == (ia or ib)
        assert inter.contains(x) == (ia and ib)
        assert diff.contains(x) == (ia and not ib)


@given(interval_sets, interval_sets, interval_sets)
def test_de_morgan(a, b, c):
    assert a - (b | c) == (a - b) & (a - c)
    assert a - (b & c) == (a - b) | (a - c)


@given(interval_sets)
def test_idempotence_and_self_difference(a):
    assert a & a == a
    assert a | a == a
    assert (a - a).is_empty()


@given(interval_sets, interval_sets)
def test_measure_additive_on_disjoint(a, b):
    assert measure(a | b) + measure(a & b) == measure(a) + measure(b)
    b = b - a
    assert measure(a | b) == measure(a) + measure(b)


@given(interval_sets, st.integers(-5, 5), st.integers(0, 5))
def test_translate_dilate_commute(a, k, j):
    assert dilate(translate(a, k), j) == translate(dilate(a, j), 2**j * k)
    assert translate(translate(a, k), -k) == a


@given(interval_sets, st.integers(-4, 4))
def test_dilate_scales_measure(a, j):
    assert measure(dilate(a, j)) == measure(a) * Fraction(2) ** j


@given(interval_sets)
def test_json_roundtrip(a):
    back = IntervalSet.from_json(a.to_json())
    assert back == a
    assert [(iv.lo.denominator, iv.hi.denominator) for iv in back] == [
        (iv.lo.denominator, iv.hi.denominator) for iv in a
    ]


def test_seeded_bulk_identities():
    rnd = random.Random(7)

    def rand_set():
        pairs = []
        for _ in range(rnd.randint(0, 5)):
            lo = Fraction(rnd.randint(-30, 30), rnd.choice([1, 2, 3, 5]))
            pairs.append((lo, lo + Fraction(rnd.randint(1, 12), rnd.choice([1, 2, 4]))))
        return S(*pairs)

    for _ in range(300):
        a, b, c = rand_set(), rand_set(), rand_set()
        assert a & (b | c) == (a & b) | (a & c)
        assert a | (b & c) == (a | b) & (a | c)
        assert (a - b) | (a & b) == a
        assert ((a - b) & b).is_empty()

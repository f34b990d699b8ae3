import math

import pytest
from hypothesis import given, strategies as st

from imbalance_sieve.arith import Fraction, make_fraction
from imbalance_sieve.qenum import (
    QEntry,
    cayley,
    cayley_inverse,
    invert,
    negate,
    q_entries,
    q_rank,
    q_unrank,
)

Q_PREFIX = [
    Fraction(0, 1),
    Fraction(1, 1),
    Fraction(-1, 1),
    Fraction(2, 1),
    Fraction(-2, 1),
    Fraction(1, 2),
    Fraction(-1, 2),
]


def unit_interval_fractions(max_den):
    """All reduced a/b with |a| < b <= max_den, zero included once."""
    yield Fraction(0, 1)
    for b in range(2, max_den + 1):
        for a in range(1, b):
            if math.gcd(a, b) == 1:
                yield Fraction(a, b)
                yield Fraction(-a, b)


def test_cayley_examples():
    assert cayley(Fraction(0, 1)) == Fraction(1, 1)
    assert cayley(Fraction(1, 3)) == Fraction(2, 1)
    assert cayley(Fraction(-1, 3)) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        cayley(Fraction(1, 1))


def test_cayley_inverse_examples():
    assert cayley_inverse(Fraction(1, 1)) == Fraction(0, 1)
    assert cayley_inverse(Fraction(2, 1)) == Fraction(1, 3)
    assert cayley_inverse(Fraction(1, 2)) == Fraction(-1, 3)
    with pytest.raises(ZeroDivisionError):
        cayley_inverse(Fraction(-1, 1))


def test_negate_and_invert():
    assert negate(Fraction(1, 3)) == Fraction(-1, 3)
    assert negate(Fraction(0, 1)) == Fraction(0, 1)
    assert invert(Fraction(1, 1)) == Fraction(1, 1)
    assert invert(Fraction(-2, 5)) == Fraction(-5, 2)
    with pytest.raises(ZeroDivisionError):
        invert(Fraction(0, 1))


def test_cayley_maps_unit_interval_onto_positives():
    for x in unit_interval_fractions(200):
        r = cayley(x)
        assert r.num > 0 and r.den >= 1
        assert math.gcd(r.num, r.den) == 1
        assert cayley_inverse(r) == x


def test_generator_identities():
    for x in unit_interval_fractions(100):
        assert negate(negate(x)) == x
        if x.num != 0:
            assert invert(invert(x)) == x
            assert cayley(negate(x)) == invert(cayley(x))


def test_q_unrank_prefix():
    assert [q_unrank(n) for n in range(7)] == Q_PREFIX
    with pytest.raises(ValueError):
        q_unrank(-1)


def test_q_rank_examples():
    assert q_rank(Fraction(0, 1)) == 0
    assert q_rank(Fraction(1, 1)) == 1
    assert q_rank(Fraction(-1, 1)) == 2
    assert q_rank(Fraction(2, 1)) == 3
    assert q_rank(Fraction(-1, 2)) == 6


def test_no_repetition_in_prefix():
    values = [q_unrank(n) for n in range(20_000)]
    assert len({(v.num, v.den) for v in values}) == len(values)


def test_rank_round_trip_on_prefix():
    for n in range(10_000):
        assert q_rank(q_unrank(n)) == n


def test_unrank_round_trip_on_small_rationals():
    for den in range(1, 31):
        for num in range(-30, 31):
            if math.gcd(abs(num), den) != 1:
                continue
            r = Fraction(num, den)
            assert q_unrank(q_rank(r)) == r


def test_q_entries():
    entries = list(q_entries(7))
    assert entries == [QEntry(n, Q_PREFIX[n]) for n in range(7)]
    with pytest.raises(ValueError):
        q_entries(-1)


@given(st.integers(0, 10**6))
def test_rank_round_trip_random(n):
    assert q_rank(q_unrank(n)) == n


@given(st.integers(-500, 500), st.integers(1, 500))
def test_unrank_round_trip_random(num, den):
    r = make_fraction(num, den)
    assert q_unrank(q_rank(r)) == r

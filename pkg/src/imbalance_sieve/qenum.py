"""Cayley transform, its symmetries, and a rank/unrank enumeration of Q.

The transform (1+x)/(1-x) carries the unit interval onto the positive
rationals; feeding it the duplicate-free unit-interval stream, with signs
interleaved inside and outside, lists every rational exactly once after the
fixed prefix 0, 1, -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .arith import Fraction, add64, check_i64, make_fraction, mul64, sub64
from .sieve import distinct_fraction_at, fraction_rank


@dataclass(frozen=True)
class QEntry:
    """Position n together with the rational enumerated there."""

    n: int
    value: Fraction


def cayley(x: Fraction) -> Fraction:
    """(1 + x)/(1 - x) in lowest terms; maps (-1, 1) onto (0, inf)."""
    if x.num == x.den:
        raise ZeroDivisionError("cayley transform has a pole at 1")
    return make_fraction(add64(x.den, x.num), sub64(x.den, x.num))


def cayley_inverse(r: Fraction) -> Fraction:
    """(r - 1)/(r + 1) in lowest terms; inverse of cayley."""
    if r.num == -r.den:
        raise ZeroDivisionError("inverse cayley transform has a pole at -1")
    return make_fraction(sub64(r.num, r.den), add64(r.num, r.den))


def negate(x: Fraction) -> Fraction:
    """-x."""
    return Fraction(check_i64(-x.num, "numerator"), x.den)


def invert(x: Fraction) -> Fraction:
    """1/x with the sign kept on the numerator."""
    if x.num == 0:
        raise ZeroDivisionError("cannot invert zero")
    return make_fraction(x.den, x.num)


def q_unrank(n: int) -> Fraction:
    """Rational at position n of the repetition-free enumeration of Q.

    Layout: 0, 1, -1, then blocks of four per deduplicated unit-interval
    fraction f, in stream order: cayley(f), -cayley(f), cayley(-f),
    -cayley(-f). Zero is left out of the transformed stream because
    cayley(0) = 1 already heads the list.
    """
    if n < 0:
        raise ValueError(f"rank must be nonnegative, got {n}")
    check_i64(n, "rank")
    if n == 0:
        return Fraction(0, 1)
    if n == 1:
        return Fraction(1, 1)
    if n == 2:
        return Fraction(-1, 1)
    k, neg_outer = divmod(n - 3, 2)
    j, neg_inner = divmod(k, 2)
    x = distinct_fraction_at(j).value
    if neg_inner:
        x = negate(x)
    value = cayley(x)
    return negate(value) if neg_outer else value


def q_rank(r: Fraction) -> int:
    """Position of r in the enumeration; inverse of q_unrank."""
    if r.num == 0:
        return 0
    if r.den == 1 and r.num == 1:
        return 1
    if r.den == 1 and r.num == -1:
        return 2
    neg_outer = 1 if r.num < 0 else 0
    magnitude = negate(r) if neg_outer else r
    x = cayley_inverse(magnitude)
    neg_inner = 1 if x.num < 0 else 0
    j = fraction_rank(negate(x) if neg_inner else x)
    k = add64(mul64(2, j), neg_inner)
    return add64(mul64(2, k), 3 + neg_outer)


def q_entries(count: int) -> Iterator[QEntry]:
    """The first count enumeration entries, in order."""
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    return (QEntry(n, q_unrank(n)) for n in range(count))

"""Streaming sieve of reduced imbalances and its closed-form companions.

Pairs are walked in lexicographic order, each (p-q)/(p+q) is reduced, and
denominators are flagged the first time they occur. First appearances obey
one quadratic index law per denominator parity; those laws also drive the
merged first-appearance order, the duplicate-free fraction stream with its
totient-based rank, and the new-denominator density count.
"""

from __future__ import annotations

import math
import threading
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .arith import (
    MAX_INDEX,
    Fraction,
    Pair,
    check_i64,
    imbalance,
    mul64,
    pair_from_index,
    phi_inverse,
    sub64,
)


@dataclass(frozen=True)
class SieveItem:
    """One enumeration step: pair, reduced value, first-time-denominator flag."""

    index: int
    pair: Pair
    value: Fraction
    is_new_denominator: bool


@dataclass(frozen=True)
class FirstAppearance:
    """Denominator d with its first-appearance index and witnessing pair."""

    d: int
    index: int
    pair: Pair
    value: Fraction


class RankedFraction(NamedTuple):
    rank: int
    pair: Pair
    value: Fraction


class _SeenDenominators:
    """Growable bit set keyed by denominator; stays near sqrt(index) bytes."""

    __slots__ = ("_bits",)

    def __init__(self) -> None:
        self._bits = bytearray(128)

    def mark(self, d: int) -> bool:
        """Mark d seen; True when it was not seen before."""
        byte, bit = d >> 3, 1 << (d & 7)
        bits = self._bits
        if byte >= len(bits):
            bits.extend(bytes(max(len(bits), byte + 1 - len(bits))))
        if bits[byte] & bit:
            return False
        bits[byte] |= bit
        return True


def first_appearance_index(d: int) -> int:
    """Iteration index where denominator d first occurs.

    (d*d - 9)/8 for odd d, d(d+1)/2 - 2 for even d.
    """
    if d < 2:
        raise ValueError(f"denominator must be at least 2, got {d}")
    if d % 2:
        return sub64(mul64(d, d), 9) // 8
    return sub64(mul64(d, d + 1) // 2, 2)


def first_appearance(d: int) -> FirstAppearance:
    """First-appearance record for d: index, witnessing pair, value 1/d."""
    index = first_appearance_index(d)
    pair = Pair((d + 1) // 2, (d - 1) // 2) if d % 2 else Pair(d + 1, d - 1)
    return FirstAppearance(d, index, pair, Fraction(1, d))


def first_appearance_order(count: int) -> Iterator[FirstAppearance]:
    """First-appearance records in ascending index order.

    Merges the odd-denominator and even-denominator progressions by their
    closed-form indices. The two families never collide on an index; if a tie
    ever appeared the odd side would win deterministically.
    """
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    return _order_gen(count)


def _order_gen(count: int) -> Iterator[FirstAppearance]:
    odd, even = first_appearance(3), first_appearance(2)
    for _ in range(count):
        if odd.index <= even.index:
            yield odd
            odd = first_appearance(odd.d + 2)
        else:
            yield even
            even = first_appearance(even.d + 2)


def sieve_stream(start: int, count: int) -> Iterator[SieveItem]:
    """Sieve rows for indices start .. start+count-1.

    Flags always agree with a scan from index zero. A scan that begins there
    discovers denominators with a plain seen-set and touches no closed form;
    a later start replays nothing, because a denominator was already seen
    before the window exactly when its closed-form first-appearance index is
    below start.
    """
    if start < 0:
        raise ValueError(f"start must be nonnegative, got {start}")
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    if count and start + count - 1 > MAX_INDEX:
        raise OverflowError(
            f"window end {start + count - 1} exceeds the largest representable pair index {MAX_INDEX}"
        )
    return _sieve_gen(start, count)


def _sieve_gen(start: int, count: int) -> Iterator[SieveItem]:
    if count == 0:
        return
    head = pair_from_index(start)
    p, q = head.p, head.q
    seen = _SeenDenominators()
    from_zero = start == 0
    for index in range(start, start + count):
        s = p + q
        g = math.gcd(s, p - q)
        den = s // g
        is_new = seen.mark(den) and (from_zero or first_appearance_index(den) >= start)
        yield SieveItem(index, Pair(p, q), Fraction((p - q) // g, den), is_new)
        q += 1
        if q == p:
            p, q = p + 1, 1


def count_new_denominators(i: int) -> int:
    """How many denominators have first appeared at index i or earlier.

    Closed form from the two index laws: odd d satisfy d*d <= 8i+9, even d
    satisfy d(d+1) <= 2i+4. Grows like a constant times sqrt(i).
    """
    if i < 0:
        raise ValueError(f"index must be nonnegative, got {i}")
    check_i64(i, "index")
    odd_hi = math.isqrt(8 * i + 9)
    even_hi = (math.isqrt(8 * i + 17) - 1) // 2
    return (odd_hi - 1) // 2 + even_hi // 2


class TotientTable:
    """Euler totients phi(1..n) from a linear sieve, grown on demand.

    Growth rebuilds the arrays at doubled size and swaps them in with one
    assignment under a lock, so concurrent readers see either the old or the
    new table, never a half-built one. Values only extend, never change.
    """

    def __init__(self, size: int = 1024) -> None:
        self._lock = threading.Lock()
        self._data = self._build(max(size, 2))

    @staticmethod
    def _build(limit: int) -> tuple[list[int], list[int]]:
        phi = [0] * (limit + 1)
        phi[1] = 1
        primes: list[int] = []
        for i in range(2, limit + 1):
            if phi[i] == 0:
                phi[i] = i - 1
                primes.append(i)
            for pr in primes:
                if i * pr > limit:
                    break
                if i % pr == 0:
                    phi[i * pr] = phi[i] * pr
                    break
                phi[i * pr] = phi[i] * (pr - 1)
        sums = [0] * (limit + 1)
        acc = 0
        for m in range(1, limit + 1):
            acc += phi[m]
            sums[m] = acc
        return phi, sums

    def ensure(self, n: int) -> None:
        """Grow the table to cover totients up to n."""
        if n < len(self._data[0]):
            return
        with self._lock:
            size = len(self._data[0]) - 1
            if n <= size:
                return
            while size < n:
                size *= 2
            self._data = self._build(size)

    def cover_sum(self, target: int) -> list[int]:
        """Grow until the cumulative totient sum exceeds target; return sums."""
        while self._data[1][-1] <= target:
            self.ensure(2 * (len(self._data[0]) - 1))
        return self._data[1]

    def phi(self, m: int) -> int:
        if m < 1:
            raise ValueError(f"totient argument must be positive, got {m}")
        self.ensure(m)
        return self._data[0][m]

    def phi_sum(self, lo: int, hi: int) -> int:
        """Sum of phi(m) over lo <= m <= hi; zero when the range is empty."""
        if lo < 1:
            raise ValueError(f"range start must be positive, got {lo}")
        if hi < lo:
            return 0
        self.ensure(hi)
        sums = self._data[1]
        return sums[hi] - sums[lo - 1]


_TOTIENTS = TotientTable()


def distinct_fractions(count: int) -> Iterator[RankedFraction]:
    """First occurrences of fraction values, in enumeration order.

    A value first occurs exactly at its coprime pair, so this is the
    gcd(p, q) = 1 subsequence of the pair walk; it exhausts the rationals in
    (0, 1) without repetition.
    """
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    return _distinct_gen(count)


def _distinct_gen(count: int) -> Iterator[RankedFraction]:
    emitted = 0
    p, q = 2, 1
    while emitted < count:
        if math.gcd(p, q) == 1:
            g = math.gcd(p - q, p + q)
            yield RankedFraction(emitted, Pair(p, q), Fraction((p - q) // g, (p + q) // g))
            emitted += 1
        q += 1
        if q == p:
            p, q = p + 1, 1


def distinct_fraction_at(rank: int) -> RankedFraction:
    """Entry of distinct_fractions at the given rank, without scanning.

    Binary search over totient prefix sums finds the row p whose block holds
    the rank; a walk over the residues coprime to p finds q.
    """
    if rank < 0:
        raise ValueError(f"rank must be nonnegative, got {rank}")
    check_i64(rank, "rank")
    sums = _TOTIENTS.cover_sum(rank + 1)
    p = bisect_right(sums, rank + 1)
    offset = rank - (sums[p - 1] - 1)
    q = 0
    for cand in range(1, p):
        if math.gcd(p, cand) == 1:
            if offset == 0:
                q = cand
                break
            offset -= 1
    pair = Pair(p, q)
    return RankedFraction(rank, pair, imbalance(pair))


def fraction_rank(r: Fraction) -> int:
    """Rank of r in the duplicate-free stream.

    The full rows 2 .. p-1 ahead of the canonical pair contribute their
    totients; the partial row contributes the q' < q coprime to p.
    """
    pair = phi_inverse(r)
    head = _TOTIENTS.phi_sum(2, pair.p - 1)
    tail = sum(1 for qq in range(1, pair.q) if math.gcd(pair.p, qq) == 1)
    return head + tail

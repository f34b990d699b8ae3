"""Brute-force re-derivations of the library's laws at configurable bounds.

Checks recompute their targets from first principles (pair loops, gcd and
division only on the scan side) and report counterexamples instead of
raising. Every check is a pure function of its bounds, so reports are
reproducible run to run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .arith import phi_inverse
from .qenum import q_rank, q_unrank
from .sieve import (
    _TOTIENTS,
    count_new_denominators,
    distinct_fractions,
    first_appearance_index,
    first_appearance_order,
    sieve_stream,
)


class Counterexample(NamedTuple):
    input: str
    expected: str
    actual: str


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification run.

    counterexamples is capped; failures carries the uncapped total, so passed
    is equivalent to failures == 0 and to an empty counterexample list. notes
    holds informational lines such as density ratios and coverage bounds.
    """

    check_name: str
    bound: str
    passed: bool
    counterexamples: tuple[Counterexample, ...]
    items_tested: int
    failures: int
    notes: tuple[str, ...] = ()


class _Recorder:
    def __init__(self, name: str, bound: str, cap: int) -> None:
        if cap < 1:
            raise ValueError(f"counterexample cap must be positive, got {cap}")
        self.name = name
        self.bound = bound
        self.cap = cap
        self.items = 0
        self.failures = 0
        self.examples: list[Counterexample] = []
        self.notes: list[str] = []

    def fail(self, inp: str, expected: object, actual: object) -> None:
        self.failures += 1
        if len(self.examples) < self.cap:
            self.examples.append(Counterexample(inp, str(expected), str(actual)))

    def report(self) -> CheckReport:
        return CheckReport(
            check_name=self.name,
            bound=self.bound,
            passed=self.failures == 0,
            counterexamples=tuple(self.examples),
            items_tested=self.items,
            failures=self.failures,
            notes=tuple(self.notes),
        )


def check_gcd_lemma(max_p: int, max_counterexamples: int = 10) -> CheckReport:
    """gcd(p+q, p-q) equals gcd(p+q, 2q) on every pair, and on coprime pairs
    lies in {1, 2}, hitting 2 exactly when p and q share parity.

    The {1, 2} clause genuinely needs gcd(p, q) = 1; pairs like (6, 2) reach
    gcd 4, so membership and parity are asserted on the coprime pairs while
    the gcd identity is asserted for all of them.
    """
    if max_p < 2:
        raise ValueError(f"max_p must be at least 2, got {max_p}")
    rec = _Recorder("gcd_lemma", f"p<={max_p}", max_counterexamples)
    for p in range(2, max_p + 1):
        for q in range(1, p):
            rec.items += 1
            s, d = p + q, p - q
            g = math.gcd(s, d)
            if g != math.gcd(s, 2 * q):
                rec.fail(f"(p,q)=({p},{q}) gcd identity", math.gcd(s, 2 * q), g)
                continue
            if math.gcd(p, q) == 1:
                want = 2 if d % 2 == 0 else 1
                if g != want:
                    rec.fail(f"(p,q)=({p},{q}) coprime gcd", want, g)
    return rec.report()


def check_first_appearance(max_d: int, max_counterexamples: int = 10) -> CheckReport:
    """Scan-derived first occurrence of every denominator d <= max_d versus
    the closed-form index law and the unit-fraction first value, plus the
    permutation property of the merged progressions."""
    if max_d < 2:
        raise ValueError(f"max_d must be at least 2, got {max_d}")
    law = {d: first_appearance_index(d) for d in range(2, max_d + 1)}
    bound = max(law.values())
    firsts: dict[int, tuple[int, int]] = {}
    index, p, q = 0, 2, 1
    while index <= bound:
        s = p + q
        g = math.gcd(s, p - q)
        den = s // g
        if den <= max_d and den not in firsts:
            firsts[den] = (index, (p - q) // g)
        index += 1
        q += 1
        if q == p:
            p, q = p + 1, 1
    rec = _Recorder(
        "first_appearance", f"d<={max_d} (scan of {index} rows)", max_counterexamples
    )
    rec.items = index
    for d in range(2, max_d + 1):
        got = firsts.get(d)
        if got is None:
            rec.fail(f"d={d}", f"first occurrence at index {law[d]}", "never seen in scan")
            continue
        idx, num = got
        if idx != law[d]:
            rec.fail(f"d={d} first index", law[d], idx)
        if num != 1:
            rec.fail(f"d={d} first value", f"1/{d}", f"{num}/{d}")
    if len(set(law.values())) != len(law):
        rec.fail("index law", "pairwise distinct indices", "collision")
    tally: dict[int, int] = {}
    for fa in first_appearance_order(4 * max_d + 16):
        if fa.index > bound:
            break
        if fa.d <= max_d:
            tally[fa.d] = tally.get(fa.d, 0) + 1
    for d in range(2, max_d + 1):
        if tally.get(d, 0) != 1:
            rec.fail(f"d={d} merged occurrences", 1, tally.get(d, 0))
    return rec.report()


def check_bijection(count: int, max_counterexamples: int = 10) -> CheckReport:
    """Distinctness, range, reducedness and preimage round-trip of the
    duplicate-free stream, plus full coverage of every small denominator the
    prefix provably contains."""
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    rec = _Recorder("bijection", f"first {count} distinct fractions", max_counterexamples)
    seen: set[tuple[int, int]] = set()
    last = None
    for entry in distinct_fractions(count):
        rec.items += 1
        p, q = entry.pair.p, entry.pair.q
        g = math.gcd(p - q, p + q)
        value = (entry.value.num, entry.value.den)
        if ((p - q) // g, (p + q) // g) != value:
            rec.fail(f"pair=({p},{q}) reduction", f"{(p - q) // g}/{(p + q) // g}", entry.value)
        if value in seen:
            rec.fail(f"pair=({p},{q})", f"first occurrence of {entry.value}", "duplicate")
        seen.add(value)
        if not 0 < value[0] < value[1]:
            rec.fail(f"pair=({p},{q}) range", "value inside (0,1)", entry.value)
        if math.gcd(*value) != 1:
            rec.fail(f"pair=({p},{q}) reducedness", "gcd(num,den)=1", entry.value)
        preimage = phi_inverse(entry.value)
        if preimage != entry.pair:
            rec.fail(f"phi_inverse({entry.value})", entry.pair, preimage)
        last = entry
    complete_p = last.pair.p if last.pair.q == last.pair.p - 1 else last.pair.p - 1
    max_den = (complete_p + 1) // 2
    for d in range(2, max_den + 1):
        for a in range(1, d):
            if math.gcd(a, d) == 1:
                rec.items += 1
                if (a, d) not in seen:
                    rec.fail(f"fraction {a}/{d}", "present in prefix", "missing")
    rec.notes.append(f"surjectivity verified for denominators up to {max(max_den, 1)}")
    return rec.report()


def check_q_enumeration(count: int, max_counterexamples: int = 10) -> CheckReport:
    """Distinctness and rank round-trips of the rational enumeration, plus
    coverage of every rational small enough to be forced into the prefix."""
    if count < 3:
        raise ValueError(f"count must be at least 3, got {count}")
    rec = _Recorder("q_enumeration", f"first {count} rationals", max_counterexamples)
    seen: set[tuple[int, int]] = set()
    for n in range(count):
        rec.items += 1
        value = q_unrank(n)
        key = (value.num, value.den)
        if key in seen:
            rec.fail(f"n={n}", "unseen value", f"duplicate {value}")
        seen.add(key)
        back = q_rank(value)
        if back != n:
            rec.fail(f"q_rank(q_unrank({n}))", n, back)
    # Largest B with every reduced |num|, den <= B provably inside the prefix:
    # ranks are below 4*S(4B-1)+2 where S sums totients of 2..4B-1.
    b = 0
    while 4 * _TOTIENTS.phi_sum(2, 4 * (b + 1) - 1) + 2 < count:
        b += 1
    for den in range(1, b + 1):
        for num in range(-b, b + 1):
            if math.gcd(abs(num), den) != 1:
                continue
            rec.items += 1
            if (num, den) not in seen:
                rec.fail(f"rational {num}/{den}", "present in prefix", "missing")
    rec.notes.append(f"coverage verified for |num|, den <= {b}")
    return rec.report()


def check_density(indices: Iterable[int], max_counterexamples: int = 10) -> CheckReport:
    """Scan-counted new denominators versus the closed-form count, with the
    count/sqrt(i) ratios included in the notes."""
    targets = sorted(set(indices))
    if not targets:
        raise ValueError("at least one index is required")
    if targets[0] < 0:
        raise ValueError(f"indices must be nonnegative, got {targets[0]}")
    rec = _Recorder("density", f"indices {targets}", max_counterexamples)
    counts: dict[int, int] = {}
    running = 0
    remaining = iter(targets)
    nxt = next(remaining)
    for item in sieve_stream(0, targets[-1] + 1):
        rec.items += 1
        if item.is_new_denominator:
            running += 1
        if item.index == nxt:
            counts[nxt] = running
            nxt = next(remaining, -1)
            if nxt < 0:
                break
    for i in targets:
        closed = count_new_denominators(i)
        if counts[i] != closed:
            rec.fail(f"i={i}", closed, counts[i])
        if i > 0:
            rec.notes.append(f"i={i} count={counts[i]} ratio={counts[i] / math.sqrt(i):.6f}")
    return rec.report()

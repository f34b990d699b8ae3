"""Acceptance gate: ten timed criteria, one verdict line each (run with -s).

Each criterion pins exact expected values and a wall-clock budget. A body
failure prints FAIL and re-raises; finishing over budget fails the test even
when every assertion held.
"""

import io
import math
import random
import time
from contextlib import contextmanager, redirect_stdout

import pytest

from imbalance_sieve import cli
from imbalance_sieve.arith import (
    MAX_INDEX,
    MAX_PAIR_P,
    Pair,
    iteration_index,
    make_fraction,
    pair_from_index,
)
from imbalance_sieve.qenum import q_rank, q_unrank
from imbalance_sieve.sieve import (
    count_new_denominators,
    first_appearance_index,
    first_appearance_order,
    sieve_stream,
)
from imbalance_sieve.verify import (
    check_bijection,
    check_density,
    check_first_appearance,
    check_gcd_lemma,
)

GOLDEN_SIEVE_TSV = (
    "index\tp\tq\tnumerator\tdenominator\tis_new\n"
    "0\t2\t1\t1\t3\tyes\n"
    "1\t3\t1\t1\t2\tyes\n"
    "2\t3\t2\t1\t5\tyes\n"
    "3\t4\t1\t3\t5\tno\n"
    "4\t4\t2\t1\t3\tno\n"
    "5\t4\t3\t1\t7\tyes\n"
    "6\t5\t1\t2\t3\tno\n"
    "7\t5\t2\t3\t7\tno\n"
    "8\t5\t3\t1\t4\tyes\n"
    "9\t5\t4\t1\t9\tyes\n"
    "10\t6\t1\t5\t7\tno\n"
    "11\t6\t2\t1\t2\tno\n"
    "12\t6\t3\t1\t3\tno\n"
    "13\t6\t4\t1\t5\tno\n"
    "14\t6\t5\t1\t11\tyes\n"
)

GOLDEN_FIRSTS_BFILE = (
    "1 3\n2 2\n3 5\n4 7\n5 4\n6 9\n7 11\n8 6\n9 13\n"
    "10 15\n11 8\n12 17\n13 19\n14 10\n15 21\n16 23\n17 12\n"
)

D_SEQUENCE = [3, 2, 5, 7, 4, 9, 11, 6, 13, 15, 8, 17, 19, 10, 21, 23, 12]


@contextmanager
def criterion(number, label, budget_seconds):
    started = time.perf_counter()
    try:
        yield
    except BaseException:
        elapsed = time.perf_counter() - started
        print(f"criterion {number:2d} ({label}): FAIL ({elapsed:.2f}s)")
        raise
    elapsed = time.perf_counter() - started
    verdict = "PASS" if elapsed < budget_seconds else "FAIL over budget"
    print(
        f"criterion {number:2d} ({label}): {verdict} "
        f"({elapsed:.2f}s, budget {budget_seconds:.0f}s)"
    )
    assert elapsed < budget_seconds, f"{label}: {elapsed:.2f}s over {budget_seconds}s"


def run_cli(*argv):
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = cli.main(list(argv))
    return code, buffer.getvalue()


def test_criterion_01_reference_table():
    with criterion(1, "15-row reference table via CLI", 1.0):
        code, out = run_cli("sieve", "--limit", "15", "--format", "tsv")
        assert code == 0
        assert out == GOLDEN_SIEVE_TSV


def test_criterion_02_first_appearance_sequence():
    with criterion(2, "first-appearance d sequence", 1.0):
        code, out = run_cli("firsts", "--count", "17", "--format", "bfile")
        assert code == 0
        assert out == GOLDEN_FIRSTS_BFILE
        assert [fa.d for fa in first_appearance_order(17)] == D_SEQUENCE


def test_criterion_03_index_law_oracle():
    with criterion(3, "index law vs brute scan, d <= 2000", 10.0):
        report = check_first_appearance(2000)
        assert report.passed, report.counterexamples[:3]
        assert report.items_tested == 2_000_999


def test_criterion_04_permutation_property():
    with criterion(4, "first appearances form a permutation", 1.0):
        law = [first_appearance_index(d) for d in range(2, 2001)]
        assert len(set(law)) == len(law)
        bound = max(law)
        seen = []
        for fa in first_appearance_order(10_000):
            if fa.index > bound:
                break
            if fa.d <= 2000:
                seen.append(fa.d)
        assert sorted(seen) == list(range(2, 2001))


def test_criterion_05_unit_interval_bijection():
    # 110099 entries close out every pair with p <= 601, forcing coverage of
    # all reduced fractions with denominator <= 301
    with criterion(5, "duplicate-free stream is a bijection", 5.0):
        report = check_bijection(110_099)
        assert report.passed, report.counterexamples[:3]
        assert report.items_tested >= 100_000
        assert any("denominators up to 301" in note for note in report.notes)


def test_criterion_06_dedup_equals_coprime_filter():
    with criterion(6, "first occurrences equal the coprime filter", 5.0):
        seen = set()
        first_occurrences = []
        coprime_rows = []
        for item in sieve_stream(0, 100_000):
            key = (item.value.num, item.value.den)
            if key not in seen:
                seen.add(key)
                first_occurrences.append((item.index, key))
            if math.gcd(item.pair.p, item.pair.q) == 1:
                coprime_rows.append((item.index, key))
        assert first_occurrences == coprime_rows


def test_criterion_07_rational_enumeration():
    with criterion(7, "rational enumeration rank/unrank", 10.0):
        values = [q_unrank(n) for n in range(100_000)]
        assert len({(v.num, v.den) for v in values}) == 100_000
        for n in range(10_000):
            assert q_rank(values[n]) == n
        for den in range(1, 61):
            for num in range(-60, 61):
                if math.gcd(abs(num), den) == 1:
                    value = make_fraction(num, den)
                    assert q_unrank(q_rank(value)) == value


def test_criterion_08_gcd_lemma():
    with criterion(8, "gcd lemma over all pairs with p <= 500", 1.0):
        report = check_gcd_lemma(500)
        assert report.passed, report.counterexamples[:3]
        assert report.items_tested == 124_750


def test_criterion_09_density():
    with criterion(9, "new-denominator density", 30.0):
        report = check_density([14, 1_000, 10_000, 100_000])
        assert report.passed, report.counterexamples[:3]
        assert count_new_denominators(14) == 7
        ratios = [
            count_new_denominators(i) / math.sqrt(i)
            for i in (10_000, 100_000, 1_000_000)
        ]
        assert max(ratios) / min(ratios) < 1.10, ratios


def test_criterion_10_overflow_discipline():
    with criterion(10, "clean overflow at the 64-bit boundary", 1.0):
        top = Pair(MAX_PAIR_P, MAX_PAIR_P - 1)
        assert iteration_index(top) == MAX_INDEX
        assert pair_from_index(MAX_INDEX) == top
        with pytest.raises(OverflowError):
            iteration_index(Pair(MAX_PAIR_P + 1, 1))
        with pytest.raises(OverflowError):
            pair_from_index(MAX_INDEX + 1)
        rng = random.Random(20260816)
        for _ in range(200):
            p = rng.randrange(MAX_PAIR_P + 1, 10 * MAX_PAIR_P)
            with pytest.raises(OverflowError):
                iteration_index(Pair(p, rng.randrange(1, p)))
            with pytest.raises(OverflowError):
                pair_from_index(rng.randrange(MAX_INDEX + 1, 10 * MAX_INDEX))
        for _ in range(200):
            i = rng.randrange(0, MAX_INDEX + 1)
            assert iteration_index(pair_from_index(i)) == i

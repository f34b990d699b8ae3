"""Exact integer and rational primitives for the imbalance sieve.

Domain values live in signed 64-bit space: pair coordinates, iteration
indices and fraction parts are checked against that range, and any
computation whose 64-bit evaluation would leave it raises OverflowError
instead of wrapping. Helpers may widen intermediates through Python's exact
integers (the double-width-temporary idiom), but whatever comes out is
always checked back into range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

I64_MAX = 2**63 - 1
I64_MIN = -(2**63)


def check_i64(value: int, what: str = "value") -> int:
    """Return value unchanged, raising OverflowError outside signed 64-bit."""
    if not I64_MIN <= value <= I64_MAX:
        raise OverflowError(f"{what} {value} is outside the signed 64-bit range")
    return value


def add64(x: int, y: int) -> int:
    """Checked 64-bit x + y."""
    return check_i64(x + y, "sum")


def sub64(x: int, y: int) -> int:
    """Checked 64-bit x - y."""
    return check_i64(x - y, "difference")


def mul64(x: int, y: int) -> int:
    """Checked 64-bit x * y."""
    return check_i64(x * y, "product")


@dataclass(frozen=True)
class Pair:
    """Lattice point (p, q) with p >= 2 and 1 <= q < p."""

    p: int
    q: int

    def __post_init__(self) -> None:
        check_i64(self.p, "p")
        if self.p < 2:
            raise ValueError(f"p must be at least 2, got {self.p}")
        if not 1 <= self.q < self.p:
            raise ValueError(f"q must satisfy 1 <= q < p, got q={self.q} with p={self.p}")


# Largest p whose index evaluation keeps (p-2)(p-1) inside i64, and the index
# of the last representable pair (MAX_PAIR_P, MAX_PAIR_P - 1).
_X = (math.isqrt(4 * I64_MAX + 1) - 1) // 2  # max x with x(x+1) <= I64_MAX
MAX_PAIR_P = _X + 2
MAX_INDEX = _X * (_X + 1) // 2 + _X


@dataclass(frozen=True)
class Fraction:
    """Rational in lowest terms: den >= 1, sign on num, zero is 0/1.

    Construct through make_fraction, which reduces and normalizes; direct
    construction assumes the invariants already hold.
    """

    num: int
    den: int

    def __str__(self) -> str:
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


def make_fraction(num: int, den: int) -> Fraction:
    """The unique reduced, sign-normalized fraction equal to num/den."""
    if den == 0:
        raise ZeroDivisionError("fraction denominator must be nonzero")
    check_i64(num, "numerator")
    check_i64(den, "denominator")
    if num == 0:
        return Fraction(0, 1)
    if den < 0:
        num = check_i64(-num, "numerator")
        den = check_i64(-den, "denominator")
    g = math.gcd(num, den)
    return Fraction(num // g, den // g)


def iteration_index(pair: Pair) -> int:
    """0-based position of the pair in lexicographic (p, q) order.

    Evaluates (p-2)(p-1)/2 + (q-1) in checked 64-bit steps; the product
    (p-2)(p-1) must itself be representable, so pairs with p > MAX_PAIR_P
    raise OverflowError.
    """
    head = mul64(pair.p - 2, pair.p - 1) // 2
    return add64(head, pair.q - 1)


def pair_from_index(i: int) -> Pair:
    """The unique pair whose iteration_index equals i.

    Integer triangular root: with m = p - 2 the row is the largest m with
    m(m+1)/2 <= i, equivalently (2m+1)^2 <= 8i+1, so isqrt lands on m exactly
    and the remainder picks q. No floating point anywhere.
    """
    if i < 0:
        raise ValueError(f"index must be nonnegative, got {i}")
    if i > MAX_INDEX:
        raise OverflowError(f"index {i} exceeds the largest representable pair index {MAX_INDEX}")
    m = (math.isqrt(8 * i + 1) - 1) // 2
    return Pair(m + 2, i - m * (m + 1) // 2 + 1)


def imbalance(pair: Pair) -> Fraction:
    """Reduced value of (p - q)/(p + q); lies strictly inside (0, 1)."""
    return make_fraction(pair.p - pair.q, add64(pair.p, pair.q))


def reduced_denominator(pair: Pair) -> int:
    """Denominator of imbalance(pair).

    Coprime pairs land on the parity form (p+q when odd, half that when
    even); pairs with a common factor reduce further, so the contract is the
    denominator of the fully reduced fraction, nothing weaker.
    """
    s = add64(pair.p, pair.q)
    return s // math.gcd(s, pair.p - pair.q)


def phi_inverse(r: Fraction) -> Pair:
    """Canonical coprime pair whose imbalance equals r.

    For reduced a/d with a and d both odd the preimage is ((d+a)/2, (d-a)/2),
    otherwise (d+a, d-a). Either way it is coprime, and it carries the
    smallest iteration index among all preimages of r.
    """
    a, d = r.num, r.den
    if not 0 < a < d:
        raise ValueError(f"fraction must lie strictly between 0 and 1, got {r}")
    if math.gcd(a, d) != 1:
        raise ValueError(f"fraction must be in lowest terms, got {r}")
    if a % 2 == 1 and d % 2 == 1:
        return Pair((d + a) // 2, (d - a) // 2)
    return Pair(add64(d, a), d - a)

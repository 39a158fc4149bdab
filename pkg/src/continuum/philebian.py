"""Eventually periodic binary sequences under the first-difference order.

A :class:`PhilebianSeq` is ``prefix · period^ω``. These are exactly the binary
expansions of rationals in ``[0, 1]``, so equality and comparison are decidable
and valuation is exact. Dyadic rationals have two expansions, ``w0111…`` and
``w1000…``: adjacent in the order yet equal in value.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from ._core import lex_compare_bits
from ._rational import as_rational
from .divider import BitWord
from .errors import DomainError, NotInClassAError


def _primitive_root(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


@dataclass(frozen=True)
class PhilebianSeq:
    """The sequence ``prefix`` followed by ``period`` repeated forever.

    Normalized on construction (primitive period, shortest prefix), so two
    instances are equal exactly when they denote the same bit sequence.
    """

    prefix: BitWord = field(default_factory=BitWord)
    period: BitWord = field(default_factory=lambda: BitWord((0,)))

    def __post_init__(self):
        prefix = BitWord.coerce(self.prefix).bits
        period = BitWord.coerce(self.period).bits
        if not period:
            raise ValueError("period must be nonempty")
        period = _primitive_root(period)
        # absorb trailing prefix bits into the period by rotation
        while prefix and prefix[-1] == period[-1]:
            prefix = prefix[:-1]
            period = period[-1:] + period[:-1]
        object.__setattr__(self, "prefix", BitWord(prefix))
        object.__setattr__(self, "period", BitWord(period))

    @classmethod
    def parse(cls, text: str) -> "PhilebianSeq":
        """Parse ``"prefix:(period)"``, e.g. ``"10:(1)"`` or ``":(10)"``."""
        head, sep, tail = text.strip().partition(":")
        if not sep or not (tail.startswith("(") and tail.endswith(")")):
            raise ValueError(f"expected 'prefix:(period)', got {text!r}")
        return cls(BitWord.parse(head), BitWord.parse(tail[1:-1]))

    def __str__(self) -> str:
        return f"{self.prefix}:({self.period})"

    def __repr__(self) -> str:
        return f"PhilebianSeq({str(self)!r})"

    def bit(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        lp = len(self.prefix)
        if k < lp:
            return self.prefix[k]
        return self.period[(k - lp) % len(self.period)]

    def bits(self, n: int) -> tuple[int, ...]:
        return tuple(self.bit(k) for k in range(n))

    @functools.cached_property
    def _packed(self) -> tuple[bytes, bytes]:
        return self.prefix.to_bytes(), self.period.to_bytes()

    def __lt__(self, other: "PhilebianSeq") -> bool:
        return lex_compare(self, other) < 0

    def __le__(self, other: "PhilebianSeq") -> bool:
        return lex_compare(self, other) <= 0

    def __gt__(self, other: "PhilebianSeq") -> bool:
        return lex_compare(self, other) > 0

    def __ge__(self, other: "PhilebianSeq") -> bool:
        return lex_compare(self, other) >= 0


class ABClass(enum.Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class DoublePair:
    """The two expansions of one dyadic rational, ``lower < upper`` and adjacent."""

    lower: PhilebianSeq
    upper: PhilebianSeq

    @property
    def value(self) -> Fraction:
        return value(self.upper)

    def __contains__(self, seq: PhilebianSeq) -> bool:
        return seq == self.lower or seq == self.upper


def lex_compare(x: PhilebianSeq, y: PhilebianSeq) -> int:
    """-1, 0 or 1 by the first differing bit."""
    px, qx = x._packed
    py, qy = y._packed
    return lex_compare_bits(px, qx, py, qy)


def value(x: PhilebianSeq) -> Fraction:
    """Sum of ``bit(k) / 2**(k+1)``, in closed form."""
    m = len(x.prefix)
    period_len = len(x.period)
    cycle = (1 << period_len) - 1
    num = x.prefix.to_int() * cycle + x.period.to_int()
    return Fraction(num, cycle << m)


def from_value(r) -> PhilebianSeq:
    """Expansion of ``r`` in ``[0, 1]`` that avoids an all-ones tail where possible.

    Every ``r < 1`` gets its class-A expansion; ``r = 1`` only has ``(1)^ω``.
    """
    r = as_rational(r)
    if not 0 <= r <= 1:
        raise DomainError(f"value {r} outside [0, 1]")
    if r == 1:
        return PhilebianSeq(BitWord(), BitWord((1,)))
    p, q = r.numerator, r.denominator
    digits: list[int] = []
    seen: dict[int, int] = {}
    rem = p
    while rem not in seen:
        seen[rem] = len(digits)
        rem *= 2
        digits.append(rem // q)
        rem %= q
    start = seen[rem]
    return PhilebianSeq(BitWord(tuple(digits[:start])), BitWord(tuple(digits[start:])))


def classify(x: PhilebianSeq) -> ABClass:
    return ABClass.B if x.period.bits == (1,) else ABClass.A


def canonical_choice(x: PhilebianSeq) -> PhilebianSeq:
    """Swap an all-ones tail for the equal-valued all-zeros tail.

    ``(1)^ω`` is returned unchanged: its value 1 has no other expansion.
    """
    if classify(x) is ABClass.A or not x.prefix:
        return x
    # normalized B-form is w0·(1)^ω, with value equal to w1·(0)^ω
    head = x.prefix.bits[:-1]
    return PhilebianSeq(BitWord(head + (1,)), BitWord((0,)))


def dyadic_pair(k: int, n: int) -> DoublePair:
    """Both expansions of ``k / 2**n`` (reduced first)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if not 0 < k < (1 << n):
        raise DomainError(f"need 0 < k < 2**n, got k={k}, n={n}")
    while k % 2 == 0:
        k //= 2
        n -= 1
    word = tuple(int(c) for c in format(k, f"0{n}b"))
    stem = word[:-1]
    return DoublePair(
        lower=PhilebianSeq(BitWord(stem + (0,)), BitWord((1,))),
        upper=PhilebianSeq(BitWord(stem + (1,)), BitWord((0,))),
    )


def double_pair_of(x: PhilebianSeq, y: PhilebianSeq) -> DoublePair | None:
    """The :class:`DoublePair` formed by ``x`` and ``y``, if they form one."""
    v = value(x)
    if v != value(y) or x == y or v in (0, 1) or v.denominator & (v.denominator - 1):
        return None
    n = v.denominator.bit_length() - 1
    pair = dyadic_pair(v.numerator, n)
    return pair if {x, y} == {pair.lower, pair.upper} else None


def density_witness(x: PhilebianSeq, y: PhilebianSeq) -> PhilebianSeq:
    """A class-A sequence strictly between ``x < y``, both in class A."""
    if classify(x) is ABClass.B or classify(y) is ABClass.B:
        raise NotInClassAError("density_witness needs class-A inputs")
    if lex_compare(x, y) >= 0:
        raise DomainError(f"need x < y, got x={x}, y={y}")
    return from_value((value(x) + value(y)) / 2)


def gap_check(pair: DoublePair, candidates: Iterable[PhilebianSeq]) -> bool:
    """True iff no candidate lies strictly between ``pair.lower`` and ``pair.upper``."""
    for m in candidates:
        if lex_compare(pair.lower, m) < 0 and lex_compare(m, pair.upper) < 0:
            return False
    return True


def enumerate_family(max_prefix: int, periods: Sequence[str]) -> list[PhilebianSeq]:
    """Distinct normalized sequences with prefix length <= ``max_prefix``, sorted."""
    seen = set()
    for length in range(max_prefix + 1):
        for bits in product((0, 1), repeat=length):
            for period in periods:
                seen.add(PhilebianSeq(BitWord(bits), BitWord.parse(period)))
    return sorted(seen, key=functools.cmp_to_key(lex_compare))


def least(seqs: Iterable[PhilebianSeq]) -> PhilebianSeq:
    """Lex-least element of a nonempty finite collection."""
    it = iter(seqs)
    try:
        best = next(it)
    except StopIteration:
        raise DomainError("least of an empty collection") from None
    for s in it:
        if lex_compare(s, best) < 0:
            best = s
    return best


@dataclass(frozen=True)
class PoincareReport:
    epsilon: Fraction
    values: tuple[Fraction, ...]
    indistinguishable: tuple[tuple[Fraction, Fraction], ...]
    distinguishable: tuple[tuple[Fraction, Fraction], ...]
    witnesses: tuple[tuple[Fraction, Fraction, Fraction], ...]

    @property
    def intransitive(self) -> bool:
        return bool(self.witnesses)


def poincare_chain(epsilon, values: Sequence) -> PoincareReport:
    """Indistinguishability at threshold ``epsilon`` (difference <= epsilon).

    Consecutive pairs within the threshold are reported as indistinguishable,
    non-adjacent pairs beyond it as distinguishable; every triple ``a < b < c``
    with ``a ~ b``, ``b ~ c`` but not ``a ~ c`` is a witness.
    """
    eps = as_rational(epsilon)
    if eps <= 0:
        raise DomainError("epsilon must be > 0")
    vals = tuple(as_rational(v) for v in values)
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise DomainError("values must be strictly increasing")

    def same(a, b):
        return abs(b - a) <= eps

    n = len(vals)
    close = tuple((vals[i], vals[i + 1]) for i in range(n - 1) if same(vals[i], vals[i + 1]))
    far = tuple(
        (vals[i], vals[j]) for i in range(n) for j in range(i + 2, n) if not same(vals[i], vals[j])
    )
    witnesses = tuple(
        (vals[i], vals[j], vals[k])
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
        if same(vals[i], vals[j]) and same(vals[j], vals[k]) and not same(vals[i], vals[k])
    )
    return PoincareReport(eps, vals, close, far, witnesses)

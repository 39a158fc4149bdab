"""Finite-depth division tree of the unit rod.

Generation ``n`` splits every part of generation ``n - 1`` at once, so it holds
``2**n`` parts and ``2**n - 1`` interior division points. Nodes are never
materialized: a node *is* its binary label, and every query is label
arithmetic, which keeps depth 64 (or 1000) as cheap as depth 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator

from . import _core, _kernels_py
from .errors import DomainError


@dataclass(frozen=True, order=True)
class BitWord:
    """Finite binary word. The empty word is the whole rod."""

    bits: tuple[int, ...] = ()

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"bits must be 0 or 1, got {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def _trusted(cls, bits: tuple[int, ...]) -> "BitWord":
        # bits already known to be a tuple of 0/1 ints
        word = object.__new__(cls)
        object.__setattr__(word, "bits", bits)
        return word

    @classmethod
    def parse(cls, text: str) -> "BitWord":
        if any(c not in "01" for c in text):
            raise ValueError(f"not a binary word: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def coerce(cls, word: "BitWord | str | Iterable[int]") -> "BitWord":
        if isinstance(word, BitWord):
            return word
        if isinstance(word, str):
            return cls.parse(word)
        return cls(tuple(word))

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return BitWord(self.bits[index])
        return self.bits[index]

    def __add__(self, other: "BitWord") -> "BitWord":
        return BitWord(self.bits + BitWord.coerce(other).bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __repr__(self) -> str:
        return f"BitWord({str(self)!r})"

    def to_int(self) -> int:
        """The word read as a big-endian binary integer (0 for the empty word)."""
        return int(str(self), 2) if self.bits else 0

    def to_bytes(self) -> bytes:
        return bytes(self.bits)


@dataclass(frozen=True)
class DyadicInterval:
    """Closed interval ``[lower, upper]`` with power-of-two denominators."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if not 0 <= self.lower < self.upper <= 1:
            raise ValueError(f"need 0 <= lower < upper <= 1, got [{self.lower}, {self.upper}]")

    @classmethod
    def _trusted(cls, lower: Fraction, upper: Fraction) -> "DyadicInterval":
        iv = object.__new__(cls)
        object.__setattr__(iv, "lower", lower)
        object.__setattr__(iv, "upper", upper)
        return iv

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def intersection_size(self, other: "DyadicInterval") -> str:
        """``"empty"``, ``"point"`` or ``"interval"`` for the overlap with ``other``."""
        lo = max(self.lower, other.lower)
        hi = min(self.upper, other.upper)
        if lo > hi:
            return "empty"
        return "point" if lo == hi else "interval"


def _dyadic(num: int, exp: int) -> Fraction:
    """``num / 2**exp`` reduced with bit shifts instead of a gcd."""
    if num == 0:
        return Fraction(0)
    shift = min((num & -num).bit_length() - 1, exp)
    return Fraction(num >> shift, 1 << (exp - shift), _normalize=False)


def leaf_interval(word) -> DyadicInterval:
    """Interval of the rod covered by the part labelled ``word``."""
    word = BitWord.coerce(word)
    scale = 1 << len(word)
    start = word.to_int()
    return DyadicInterval(Fraction(start, scale), Fraction(start + 1, scale))


def division_point(word) -> Fraction:
    """The cut made when part ``word`` is split: midpoint of its interval."""
    word = BitWord.coerce(word)
    return Fraction(2 * word.to_int() + 1, 1 << (len(word) + 1))


def counts(n: int) -> tuple[int, int]:
    """``(partitions, parts)`` after ``n`` generations: ``(2**n - 1, 2**n)``."""
    if n < 0:
        raise DomainError("n must be >= 0")
    parts = 1 << n
    return parts - 1, parts


@dataclass(frozen=True)
class LeafAudit:
    width_sum: Fraction
    shared_endpoints: int
    breaks: int

    @property
    def sound(self) -> bool:
        return self.width_sum == 1 and self.breaks == 0


@dataclass(frozen=True)
class DivisionTree:
    """Full binary tree of depth ``depth`` over the unit rod."""

    depth: int

    def __post_init__(self):
        if self.depth < 0:
            raise DomainError("depth must be >= 0")

    @property
    def leaf_count(self) -> int:
        return 1 << self.depth

    @property
    def node_count(self) -> int:
        return (1 << (self.depth + 1)) - 1

    @property
    def interior_point_count(self) -> int:
        return (1 << self.depth) - 1

    def leaves(self) -> Iterator[BitWord]:
        """Leaf labels in lexicographic order (which is also left-to-right order)."""
        trusted = BitWord._trusted
        for bits in product((0, 1), repeat=self.depth):
            yield trusted(bits)

    def generation(self, k: int) -> Iterator[BitWord]:
        if not 0 <= k <= self.depth:
            raise ValueError(f"generation {k} outside 0..{self.depth}")
        return DivisionTree(k).leaves()

    def leaf_intervals(self) -> Iterator[tuple[BitWord, DyadicInterval]]:
        n = self.depth
        make = DyadicInterval._trusted
        lower = Fraction(0)
        for i, word in enumerate(self.leaves(), start=1):
            upper = _dyadic(i, n)
            yield word, make(lower, upper)
            lower = upper

    def audit(self) -> LeafAudit:
        """Exact sweep over all leaves without building a Fraction per leaf."""
        try:
            units, shared, breaks = _core.leaf_audit(self.depth)
        except OverflowError:
            units, shared, breaks = _kernels_py.leaf_audit(self.depth)
        return LeafAudit(Fraction(units, 1 << self.depth), shared, breaks)

    def division_points(self) -> list[Fraction]:
        """All interior cuts, sorted. Cuts of the last generation's parts are excluded."""
        return [_dyadic(i, self.depth) for i in range(1, 1 << self.depth)]


def expand(n: int) -> DivisionTree:
    return DivisionTree(n)

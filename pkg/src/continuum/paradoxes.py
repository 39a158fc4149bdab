"""Exact accounting for the four motion paradoxes.

Each simulator reports the stepwise reading (a partial geometric series, one
partition at a time) next to the simultaneous reading (the part count of the
division tree at the same depth).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import divider
from ._core import stadium_passings
from ._rational import as_rational
from .errors import DomainError, NeverClosesError


@dataclass(frozen=True)
class DichotomyReport:
    depth: int
    steps: tuple[Fraction, ...]
    cumulative: Fraction
    remaining: Fraction
    partitions: int
    parts: int


def dichotomy(n: int) -> DichotomyReport:
    """Run ``n`` half-steps toward the end of the unit track."""
    if n < 1:
        raise DomainError("dichotomy needs n >= 1")
    steps = []
    covered = Fraction(0)
    left = Fraction(1)
    for _ in range(n):
        left /= 2
        covered += left
        steps.append(left)
    _, parts = divider.counts(n)
    return DichotomyReport(n, tuple(steps), covered, left, partitions=n, parts=parts)


@dataclass(frozen=True)
class AchillesReport:
    ratio: Fraction
    head_start: Fraction
    points: tuple[Fraction, ...]
    limit: Fraction

    def closed_form(self, i: int) -> Fraction:
        """``s·(1 - r**-(i+1)) / (1 - r**-1)``, the i-th catch-up point."""
        r, s = self.ratio, self.head_start
        return s * (1 - r ** -(i + 1)) / (1 - 1 / r)

    def shortfall(self, i: int) -> Fraction:
        """``limit - points[i]``, equal to ``s·r**-i / (r - 1)``."""
        return self.limit - self.points[i]


def achilles(r, s, k: int) -> AchillesReport:
    """Catch-up points when the pursuer is ``r`` times faster and starts ``s`` behind.

    Point ``i`` is where the pursued stands when the pursuer reaches point
    ``i - 1``; ``k`` rounds give ``k + 1`` points.
    """
    r = as_rational(r)
    s = as_rational(s)
    if r <= 1:
        raise NeverClosesError(f"speed ratio {r} <= 1: the pursuer never closes the gap")
    if s <= 0:
        raise DomainError(f"head start must be > 0, got {s}")
    if k < 1:
        raise DomainError("k must be >= 1")
    gap = s
    pos = s
    points = [pos]
    for _ in range(k):
        gap /= r
        pos += gap
        points.append(pos)
    return AchillesReport(r, s, tuple(points), s * r / (r - 1))


@dataclass(frozen=True)
class StadiumState:
    """Three rows of ``n_bodies`` unit bodies after ``ticks`` unit ticks.

    A is static, B moves one body-width per tick forward, C one backward.
    """

    n_bodies: int
    ticks: int

    @property
    def offsets(self) -> dict[str, int]:
        return {"A": 0, "B": self.ticks, "C": -self.ticks}


@dataclass(frozen=True)
class StadiumReport:
    state: StadiumState
    passings_bc: int
    passings_ba: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.passings_bc, self.passings_ba)


def stadium(n_bodies: int, ticks: int) -> StadiumReport:
    """Count how many bodies B's lead body passes in C and in A (brute force)."""
    if n_bodies < 1 or ticks < 1:
        raise DomainError("stadium needs n_bodies >= 1 and ticks >= 1")
    bc, ba = stadium_passings(n_bodies, ticks)
    return StadiumReport(StadiumState(n_bodies, ticks), bc, ba)


@dataclass(frozen=True)
class ArrowReport:
    depth: int
    width: Fraction
    count: int

    @property
    def product(self) -> Fraction:
        return self.width * self.count


def arrow(n: int) -> ArrowReport:
    """Part width and part count at generation ``n``; their product stays 1."""
    if n < 0:
        raise DomainError("arrow needs n >= 0")
    _, parts = divider.counts(n)
    return ArrowReport(n, Fraction(1, parts), parts)

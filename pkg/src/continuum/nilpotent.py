"""Nilpotent numbers ``a + b·h`` with ``h*h = 0``.

Components are exact ``Fraction`` values. Floats are accepted and kept as
floats so the same code path doubles as a floating backend for
finite-difference comparisons; ints and ``"p/q"`` strings become Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._rational import format_rational, parse_rational
from .errors import ZeroDivisorError


def _scalar(x):
    if isinstance(x, (Fraction, float)):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


@dataclass(frozen=True)
class Dual:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _scalar(self.a))
        object.__setattr__(self, "b", _scalar(self.b))

    @classmethod
    def parse(cls, text: str) -> "Dual":
        """Parse ``"a,b"`` where each component is a rational literal."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'a,b', got {text!r}")
        return cls(parse_rational(parts[0]), parse_rational(parts[1]))

    @classmethod
    def variable(cls, a) -> "Dual":
        """``a + h``: seeding this into a polynomial yields value and slope."""
        return cls(a, 1.0 if isinstance(a, float) else 1)

    def __str__(self) -> str:
        return f"{self.a} + {self.b}·h"

    def to_json(self) -> dict:
        return {"a": format_rational(self.a), "b": format_rational(self.b)}

    def __add__(self, other):
        other = _lift(other)
        return Dual(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        return Dual(self.a * other.a, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other.a == 0:
            raise ZeroDivisorError(f"{other} has zero real part and is a zero divisor")
        return Dual(self.a / other.a, (self.b * other.a - self.a * other.b) / (other.a * other.a))

    def __rtruediv__(self, other):
        return _lift(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = Dual(1, 0)
        for _ in range(n):
            result = result * self
        return result

    def __le__(self, other):
        return lex_le(self, _lift(other))

    def __lt__(self, other):
        other = _lift(other)
        return lex_le(self, other) and self != other

    def __ge__(self, other):
        return lex_le(_lift(other), self)

    def __gt__(self, other):
        other = _lift(other)
        return lex_le(other, self) and self != other


def _lift(x) -> Dual:
    return x if isinstance(x, Dual) else Dual(x, 0)


def add(x: Dual, y: Dual) -> Dual:
    return x + y


def mul(x: Dual, y: Dual) -> Dual:
    return x * y


def div(x: Dual, y: Dual) -> Dual:
    """Quotient ``q`` with ``q * y == x``; raises :class:`ZeroDivisorError` if ``y.a == 0``."""
    return x / y


def lex_le(x: Dual, y: Dual) -> bool:
    """First-difference order: real parts first, then the ``h`` coefficients."""
    if x.a != y.a:
        return x.a < y.a
    return x.b <= y.b


def embed(r) -> Dual:
    return Dual(r, 0)


@dataclass(frozen=True)
class Polynomial:
    """Coefficients, constant term first; trailing zeros trimmed."""

    coefficients: tuple = ()

    def __post_init__(self):
        coeffs = [_scalar(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def of(cls, coefficients: Iterable) -> "Polynomial":
        return cls(tuple(coefficients))

    @property
    def degree(self) -> int:
        # the zero polynomial gets degree -1
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i > 0))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        pad = lambda cs: cs + (0,) * (n - len(cs))  # noqa: E731
        return Polynomial(tuple(a + b for a, b in zip(pad(self.coefficients), pad(other.coefficients))))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coefficients or not other.coefficients:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def to_float(self) -> "Polynomial":
        return Polynomial(tuple(float(c) for c in self.coefficients))


def eval_dual(p: Polynomial | Sequence, x: Dual) -> Dual:
    """Horner evaluation of ``p`` at ``x`` in the nilpotent ring.

    At ``x = a + h`` the result is ``p(a) + p'(a)·h``.
    """
    if not isinstance(p, Polynomial):
        p = Polynomial.of(p)
    zero = 0.0 if isinstance(x.a, float) else 0
    acc = Dual(zero, zero)
    for c in reversed(p.coefficients):
        acc = acc * x + Dual(c, zero)
    return acc


def derivative_at(p: Polynomial | Sequence, a):
    """``p'(a)`` by forward evaluation at ``a + h``."""
    return eval_dual(p, Dual.variable(_scalar(a))).b


@dataclass(frozen=True)
class GalileanBoost:
    """``x' = x + w·t``; boosts compose by adding velocities."""

    w: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "w", _scalar(self.w))

    def then(self, other: "GalileanBoost") -> "GalileanBoost":
        return GalileanBoost(self.w + other.w)

    def inverse(self) -> "GalileanBoost":
        return GalileanBoost(-self.w)

    def __call__(self, d: Dual) -> Dual:
        return boost(d, self)


def worldline_position(d: Dual, t) -> Fraction:
    """Position ``a + b·t`` of the worldline with start ``a`` and velocity ``b``."""
    return d.a + d.b * _scalar(t)


def boost(d: Dual, g: GalileanBoost | Fraction | int) -> Dual:
    w = g.w if isinstance(g, GalileanBoost) else _scalar(g)
    return Dual(d.a, d.b + w)

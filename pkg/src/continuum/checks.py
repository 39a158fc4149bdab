"""Invariant suite behind ``continuum check``.

Each group is a deterministic function returning ``None`` on success or a
message describing the first counterexample. Randomized groups use fixed
seeds so output is reproducible.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import divider, nilpotent, paradoxes, philebian
from .nilpotent import Dual, GalileanBoost, Polynomial

FAMILY_PERIODS = ("0", "1", "10", "01", "110")


def _rand_q(rng: random.Random, span: int = 50) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def check_tree_accounting(max_n: int = 12):
    for n in range(max_n + 1):
        tree = divider.expand(n)
        partitions, parts = divider.counts(n)
        if (partitions, parts) != (2**n - 1, 2**n):
            return f"counts({n}) = {(partitions, parts)}"
        intervals = [iv for _, iv in tree.leaf_intervals()]
        if sum(iv.width for iv in intervals) != 1:
            return f"leaf widths at depth {n} do not sum to 1"
        for left, right in zip(intervals, intervals[1:]):
            if left.upper != right.lower:
                return f"leaves at depth {n} not contiguous at {left.upper}"
        if n and parts != 2 * divider.counts(n - 1)[1]:
            return f"parts({n}) != 2 * parts({n - 1})"
    return None


def check_ring_laws(samples: int = 300, seed: int = 1):
    rng = random.Random(seed)
    one, zero = Dual(1, 0), Dual(0, 0)
    if Dual(0, 1) * Dual(0, 1) != zero:
        return "h*h != 0"
    for _ in range(samples):
        x, y, z = (Dual(_rand_q(rng), _rand_q(rng)) for _ in range(3))
        if (x + y) + z != x + (y + z) or (x * y) * z != x * (y * z):
            return f"associativity fails at {x}, {y}, {z}"
        if x + y != y + x or x * y != y * x:
            return f"commutativity fails at {x}, {y}"
        if x * (y + z) != x * y + x * z:
            return f"distributivity fails at {x}, {y}, {z}"
        if x + zero != x or x * one != x or x + (-x) != zero:
            return f"identity/inverse fails at {x}"
        if y.a != 0 and (x / y) * y != x:
            return f"division does not invert multiplication at {x}, {y}"
        if Dual(0, x.b) * Dual(0, y.b) != zero:
            return "pure infinitesimals do not multiply to zero"
    return None


def check_derivatives(samples: int = 20, seed: int = 2):
    rng = random.Random(seed)
    for _ in range(samples):
        p = Polynomial.of(_rand_q(rng, 9) for _ in range(rng.randint(1, 7)))
        q = Polynomial.of(_rand_q(rng, 9) for _ in range(rng.randint(1, 4)))
        a = _rand_q(rng, 9)
        if nilpotent.eval_dual(p, Dual(a, 1)) != Dual(p(a), p.derivative()(a)):
            return f"eval_dual mismatch for {p.coefficients} at {a}"
        prod = nilpotent.derivative_at(p * q, a)
        if prod != p(a) * q.derivative()(a) + p.derivative()(a) * q(a):
            return f"product rule fails at {a}"
    return None


def check_order_and_boosts(samples: int = 300, seed: int = 3):
    rng = random.Random(seed)
    for _ in range(samples):
        x, y, z = (Dual(_rand_q(rng, 5), _rand_q(rng, 5)) for _ in range(3))
        if not (nilpotent.lex_le(x, y) or nilpotent.lex_le(y, x)):
            return f"lex_le not total at {x}, {y}"
        if nilpotent.lex_le(x, y) and nilpotent.lex_le(y, x) and x != y:
            return f"lex_le not antisymmetric at {x}, {y}"
        if nilpotent.lex_le(x, y) and nilpotent.lex_le(y, z) and not nilpotent.lex_le(x, z):
            return f"lex_le not transitive at {x}, {y}, {z}"
        r, s = x.a, y.a
        if (r < s) != (nilpotent.embed(r) < nilpotent.embed(s)):
            return f"embed does not preserve order at {r}, {s}"
        v, w, t = GalileanBoost(_rand_q(rng)), GalileanBoost(_rand_q(rng)), _rand_q(rng)
        moved = nilpotent.boost(x, w)
        if nilpotent.worldline_position(moved, t) != nilpotent.worldline_position(x, t) + w.w * t:
            return f"boost breaks x' = x + wt at {x}, {w.w}, {t}"
        if nilpotent.boost(nilpotent.boost(x, v), w) != nilpotent.boost(x, v.then(w)):
            return "boosts do not compose additively"
        if nilpotent.boost(moved, w.inverse()) != x:
            return "inverse boost does not undo the boost"
    return None


def check_sequence_order(max_prefix: int = 5):
    family = philebian.enumerate_family(max_prefix, FAMILY_PERIODS)
    values = [philebian.value(x) for x in family]
    for (x, vx), (y, vy) in combinations(zip(family, values), 2):
        # family is lex-sorted, so x < y throughout
        if vx > vy:
            return f"valuation not monotone: {x} < {y} but {vx} > {vy}"
        twins = philebian.double_pair_of(x, y) is not None
        if (vx == vy) != twins:
            return f"equal values without a double pair: {x}, {y}"
        in_a = philebian.classify(x) is philebian.ABClass.A and philebian.classify(y) is philebian.ABClass.A
        if in_a and not vx < vy:
            return f"valuation not injective on class A: {x}, {y}"
    for x in family:
        c = philebian.canonical_choice(x)
        if philebian.value(c) != philebian.value(x) or philebian.canonical_choice(c) != c:
            return f"canonical_choice misbehaves at {x}"
    return None


def check_gaps(max_n: int = 5, max_prefix: int = 5):
    family = philebian.enumerate_family(max_prefix, FAMILY_PERIODS)
    for n in range(1, max_n + 1):
        for k in range(1, 2**n):
            if not philebian.gap_check(philebian.dyadic_pair(k, n), family):
                return f"a sequence lies between the expansions of {k}/2^{n}"
    return None


def check_paradoxes():
    for n in range(1, 65):
        rep = paradoxes.dichotomy(n)
        if rep.cumulative + rep.remaining != 1 or rep.parts != divider.counts(n)[1]:
            return f"dichotomy({n}) does not conserve the track"
    rep = paradoxes.achilles(10, 100, 3)
    if rep.limit != Fraction(1000, 9) or rep.points[-1] != Fraction(1111, 10):
        return "achilles(10, 100, 3) does not reproduce the reference values"
    for n_bodies in (1, 2, 7):
        for ticks in range(1, 21):
            st = paradoxes.stadium(n_bodies, ticks)
            if (st.passings_bc, st.passings_ba) != (2 * ticks, ticks):
                return f"stadium({n_bodies}, {ticks}) gives {st.passings_bc}, {st.passings_ba}"
    for n in range(129):
        if paradoxes.arrow(n).product != 1:
            return f"arrow({n}) product != 1"
    if not philebian.poincare_chain(Fraction(3, 2), [10, 11, 12]).intransitive:
        return "10/11/12 gramme chain is not intransitive"
    return None


CHECKS: dict[str, Callable[[], str | None]] = {
    "divider.tree_accounting": check_tree_accounting,
    "nilpotent.ring_laws": check_ring_laws,
    "nilpotent.derivatives": check_derivatives,
    "nilpotent.order_and_boosts": check_order_and_boosts,
    "philebian.sequence_order": check_sequence_order,
    "philebian.gaps": check_gaps,
    "paradoxes.accounting": check_paradoxes,
}


def run_all(workers: int = 4) -> list[tuple[str, str | None]]:
    """Run every group; results are sorted by name regardless of scheduling."""
    names = sorted(CHECKS)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = list(pool.map(lambda name: CHECKS[name](), names))
    return list(zip(names, outcomes))

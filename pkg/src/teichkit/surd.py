"""Exact quadratic irrationals (p + sqrt(d)) / q and their continued fractions.

The representation keeps the classical expansion invariant q | d - p**2,
restored on construction by the scaling (p, q, d) -> (p|q|, q|q|, d*q**2).
Equality and hashing go through the canonical integer minimal polynomial
plus the branch sign, so differently scaled representations of one number
compare equal.  Everything in this module is exact integer arithmetic; no
floats enter any decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import IntMatrix2
from .errors import InvalidInputError, SingularMatrixError

_MAX_CF_STEPS = 100_000


@dataclass(frozen=True, eq=False)
class QuadraticIrrational:
    """The real number (p + sqrt(d)) / q with d a positive non-square."""

    p: int
    q: int
    d: int

    def __post_init__(self) -> None:
        for name in ("p", "q", "d"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidInputError(f"{name} must be an integer, got {v!r}")
        if self.q == 0:
            raise InvalidInputError("denominator q must be nonzero")
        if self.d <= 0 or math.isqrt(self.d) ** 2 == self.d:
            raise InvalidInputError(f"d must be a positive non-square, got {self.d}")
        if (self.d - self.p * self.p) % self.q != 0:
            scale = abs(self.q)
            object.__setattr__(self, "d", self.d * scale * scale)
            object.__setattr__(self, "p", self.p * scale)
            object.__setattr__(self, "q", self.q * scale)

    def canonical_key(self) -> tuple[int, int, int, int]:
        """(a, b, c, s): content-1 minimal polynomial a*x**2 + b*x + c with
        a > 0, plus the sign of the sqrt branch.  Equal numbers share keys."""
        a = self.q * self.q
        b = -2 * self.p * self.q
        c = self.p * self.p - self.d
        g = math.gcd(math.gcd(a, b), c)
        return (a // g, b // g, c // g, 1 if self.q > 0 else -1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadraticIrrational):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __float__(self) -> float:
        return (self.p + math.sqrt(self.d)) / self.q

    def __floor__(self) -> int:
        return _surd_floor(self.p, self.q, self.d)

    def __str__(self) -> str:
        return f"({self.p}+sqrt({self.d}))/{self.q}"


def _surd_floor(p: int, q: int, d: int) -> int:
    """Exact floor of (p + sqrt(d)) / q; d non-square so the value is never
    an integer boundary case."""
    s = math.isqrt(d)
    if q > 0:
        return (p + s) // q
    return -((p + s) // (-q)) - 1


def _expansion_states(x: QuadraticIrrational) -> tuple[list[int], list[tuple[int, int]], int]:
    """Run the continued-fraction recursion until a surd state repeats.

    Returns (quotients, states, cycle_start).  The state (p, q) determines
    its successor, so the first repeated state marks the exact cycle.
    """
    p, q, d = x.p, x.q, x.d
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    states: list[tuple[int, int]] = []
    while (p, q) not in seen:
        if len(quotients) > _MAX_CF_STEPS:
            raise RuntimeError("continued fraction did not cycle (invariant broken)")
        seen[(p, q)] = len(quotients)
        states.append((p, q))
        a = _surd_floor(p, q, d)
        p = a * q - p
        q = (d - p * p) // q
        quotients.append(a)
    return quotients, states, seen[(p, q)]


def continued_fraction_expansion(
    x: QuadraticIrrational,
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Preperiod and minimal period of the continued fraction of x."""
    quotients, _, k = _expansion_states(x)
    return tuple(quotients[:k]), tuple(quotients[k:])


def periodic_state_keys(x: QuadraticIrrational) -> frozenset[tuple[int, int, int, int]]:
    """Canonical keys of the complete quotients in the periodic cycle of x.

    Two quadratic irrationals have a common continued-fraction tail exactly
    when these sets intersect (the expansion of a number is unique, so one
    shared complete quotient forces identical tails from there on).
    """
    quotients, states, k = _expansion_states(x)
    d = x.d
    return frozenset(
        QuadraticIrrational(p, q, d).canonical_key() for p, q in states[k:]
    )


def moebius_surd(m: IntMatrix2, x: QuadraticIrrational) -> QuadraticIrrational:
    """Exact image (a*x + b) / (c*x + d) of a quadratic irrational under an
    integer matrix with nonzero determinant."""
    det = m.det()
    if det == 0:
        raise SingularMatrixError("moebius transform requires det != 0")
    p, q, disc = x.p, x.q, x.d
    top = m.a * p + m.b * q
    bot = m.c * p + m.d * q
    u = top * bot - m.a * m.c * disc
    v = det * q
    w = bot * bot - m.c * m.c * disc
    # w = 0 would force sqrt(disc) rational, impossible for non-square disc
    sign = 1 if v > 0 else -1
    return QuadraticIrrational(sign * u, sign * w, v * v * disc)

"""Linear foliations of the 2-torus and their rotation groupoids.

A slope is either an exact rational (fractions.Fraction) or an exact
quadratic irrational.  Rational slopes give closed leaves and a circle leaf
space; irrational slopes give dense line leaves and a non-Hausdorff
quotient.  Morita equivalence of the rotation groupoids is decided exactly
through continued fractions: two quadratic slopes are equivalent under
integer Moebius maps of determinant +-1 precisely when their expansions
share a tail (Serret), which in turn happens precisely when the exact surd
iterations reach a common complete quotient.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import ensure_finite
from .errors import InvalidInputError, NotOnCircleError
from .surd import QuadraticIrrational, continued_fraction_expansion, periodic_state_keys
from .tolerance import resolve

Slope = Fraction | QuadraticIrrational


def _require_slope(alpha: Slope, what: str) -> Slope:
    if not isinstance(alpha, (Fraction, QuadraticIrrational)):
        raise InvalidInputError(
            f"{what} must be a Fraction or QuadraticIrrational, got {type(alpha).__name__}"
        )
    return alpha


@dataclass(frozen=True)
class ClosedLeaf:
    """Closed leaf winding `vertical` times around one factor and
    `horizontal` times around the other (slope vertical/horizontal in
    lowest terms)."""

    vertical: int
    horizontal: int

    def __post_init__(self) -> None:
        if self.horizontal < 1 or math.gcd(self.vertical, self.horizontal) != 1:
            raise InvalidInputError(
                f"closed leaf needs coprime winding with horizontal >= 1, "
                f"got ({self.vertical}, {self.horizontal})"
            )


@dataclass(frozen=True)
class DenseLine:
    """Leaf diffeomorphic to the real line, dense in the torus."""


LeafDescriptor = ClosedLeaf | DenseLine


@dataclass(frozen=True)
class Circle:
    """Circle leaf space; deck_order is the denominator of the slope, the
    number of times each leaf meets a vertical transversal."""

    deck_order: int

    def __post_init__(self) -> None:
        if not isinstance(self.deck_order, int) or isinstance(self.deck_order, bool) or self.deck_order < 1:
            raise InvalidInputError(f"deck_order must be a positive integer, got {self.deck_order!r}")


@dataclass(frozen=True)
class NonHausdorffQuotient:
    """Leaf space of a dense foliation: every nonempty open set is the
    whole quotient."""


LeafSpace = Circle | NonHausdorffQuotient


@dataclass(frozen=True)
class ContinuedFraction:
    """Continued fraction [a0; a1, a2, ...] split into a finite preperiod
    and a (possibly empty) repeating period.  Rationals have an empty
    period; quadratic irrationals never do."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        quotients = tuple(self.preperiod) + tuple(self.period)
        if not quotients:
            raise InvalidInputError("continued fraction needs at least one partial quotient")
        for i, a in enumerate(quotients):
            if not isinstance(a, int) or isinstance(a, bool):
                raise InvalidInputError(f"partial quotients must be integers, got {a!r}")
            if i > 0 and a < 1:
                raise InvalidInputError(f"partial quotient #{i} must be >= 1, got {a}")
        for a in self.period:
            if a < 1:
                raise InvalidInputError(f"period quotients must be >= 1, got {a}")
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))

    def value(self, terms: int = 40) -> float:
        """Float value of the expansion truncated to at most `terms`
        partial quotients."""
        if not isinstance(terms, int) or isinstance(terms, bool) or terms < 1:
            raise InvalidInputError(f"terms must be a positive integer, got {terms!r}")
        quotients = list(self.preperiod)
        while self.period and len(quotients) < terms:
            quotients.extend(self.period)
        quotients = quotients[:terms]
        acc = float(quotients[-1])
        for a in reversed(quotients[:-1]):
            acc = a + 1.0 / acc
        return acc


def leaf_descriptor(alpha: Slope) -> LeafDescriptor:
    """Leaf type of the slope-alpha linear foliation."""
    _require_slope(alpha, "alpha")
    if isinstance(alpha, Fraction):
        return ClosedLeaf(alpha.numerator, alpha.denominator)
    return DenseLine()


def leaf_space(alpha: Slope) -> LeafSpace:
    """Quotient of the torus by the foliation, up to homeomorphism."""
    _require_slope(alpha, "alpha")
    if isinstance(alpha, Fraction):
        return Circle(alpha.denominator)
    return NonHausdorffQuotient()


def rotation_orbit(z0: complex, alpha: Slope, max_points: int, eps: float | None = None) -> list[complex]:
    """Orbit of z0 on the unit circle under z -> exp(2*pi*i*alpha) * z.

    For a rational slope p/q in lowest terms the orbit is the full cyclic
    group orbit of q points (truncated at max_points); for a quadratic
    irrational the orbit never closes and exactly max_points iterates are
    returned.
    """
    _require_slope(alpha, "alpha")
    if not isinstance(max_points, int) or isinstance(max_points, bool) or max_points < 1:
        raise InvalidInputError(f"max_points must be a positive integer, got {max_points!r}")
    z0 = ensure_finite(complex(z0), "z0")
    if abs(abs(z0) - 1.0) > resolve(eps):
        raise NotOnCircleError(f"orbit start {z0!r} is not on the unit circle")
    if isinstance(alpha, Fraction):
        count = min(alpha.denominator, max_points)
    else:
        count = max_points
    step = cmath.exp(2j * math.pi * float(alpha))
    points = [z0]
    z = z0
    for _ in range(count - 1):
        z = z * step
        points.append(z)
    return points


def cf_expand(alpha: Slope) -> ContinuedFraction:
    """Exact continued fraction of the slope.

    Rationals expand by the Euclidean algorithm (floor convention, so the
    last quotient is >= 2 whenever the expansion has more than one term).
    Quadratic irrationals expand by exact surd iteration; the period is the
    minimal cycle of complete quotients.
    """
    _require_slope(alpha, "alpha")
    if isinstance(alpha, Fraction):
        return ContinuedFraction(_euclid_quotients(alpha), ())
    pre, per = continued_fraction_expansion(alpha)
    return ContinuedFraction(pre, per)


def _euclid_quotients(value: Fraction) -> tuple[int, ...]:
    num, den = value.numerator, value.denominator
    quotients = []
    while True:
        a, r = divmod(num, den)
        quotients.append(a)
        if r == 0:
            return tuple(quotients)
        num, den = den, r


def morita_equivalent(alpha: Slope, beta: Slope) -> bool:
    """Whether the rotation groupoids of the two slopes are equivalent.

    Rational slopes all yield the trivial groupoid over a circle, hence are
    mutually equivalent and never equivalent to an irrational one.  Two
    quadratic irrationals are equivalent exactly when some integer Moebius
    map of determinant +-1 carries one to the other; by Serret's theorem
    that is a shared continued-fraction tail, detected here as a common
    exact complete quotient in the two periodic cycles.
    """
    _require_slope(alpha, "alpha")
    _require_slope(beta, "beta")
    if isinstance(alpha, Fraction) and isinstance(beta, Fraction):
        return True
    if isinstance(alpha, Fraction) or isinstance(beta, Fraction):
        return False
    return bool(periodic_state_keys(alpha) & periodic_state_keys(beta))

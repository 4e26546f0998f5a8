"""Moduli of one-dimensional complex tori and their translation groupoid.

A torus is parameterized by a lattice parameter tau in the upper half-plane;
two parameters give isomorphic tori exactly when an integer Moebius map of
determinant one connects them.  Reduction into the standard fundamental
domain (|Re| <= 1/2, |tau| >= 1) accumulates an exact integer witness.

Boundary convention: reduced representatives keep the Re = -1/2 edge and the
|tau| = 1 arc with Re <= 0.  With that canonical side fixed, two parameters
are equivalent exactly when their reduced points coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import IntMatrix2, ensure_finite
from .errors import InvalidInputError, MismatchedFiberError, NotUnimodularError
from .tolerance import resolve

S = IntMatrix2(0, -1, 1, 0)
T = IntMatrix2(1, 1, 0, 1)

_MAX_REDUCE_STEPS = 2000

# comparison slack for reduced points, floats pass through a few Moebius maps
_EQUIV_SCALE = 100.0


def translation_matrix(n: int) -> IntMatrix2:
    return IntMatrix2(1, n, 0, 1)


def require_upper_half(tau: complex, what: str = "tau") -> complex:
    tau = ensure_finite(tau, what)
    if not tau.imag > 0.0:
        raise InvalidInputError(f"{what} must lie in the upper half-plane, got {tau!r}")
    return tau


def moebius(m: IntMatrix2, tau: complex) -> complex:
    """(a*tau + b) / (c*tau + d) for m in SL2(Z)."""
    if m.det() != 1:
        raise NotUnimodularError(f"moebius action requires det 1, got {m.det()}")
    tau = require_upper_half(tau)
    return (m.a * tau + m.b) / (m.c * tau + m.d)


def reduce_fundamental_domain(
    tau: complex, eps: float | None = None
) -> tuple[complex, IntMatrix2]:
    """Reduce tau into the fundamental domain, returning (tau*, witness).

    Gauss reduction: alternately translate Re into [-1/2, 1/2) and invert
    while |tau| < 1.  Terminates because the imaginary part strictly grows
    on every inversion.  The witness A is exact in SL2(Z) and satisfies
    moebius(A, tau) = tau*; reduction is idempotent on interior points.
    """
    eps = resolve(eps)
    tau = require_upper_half(tau)
    acc = IntMatrix2.identity()
    for _ in range(_MAX_REDUCE_STEPS):
        n = math.floor(tau.real + 0.5)
        if n:
            tau = tau - n
            acc = translation_matrix(-n) @ acc
        if abs(tau) < 1.0 - eps:
            tau = -1.0 / tau
            acc = S @ acc
        else:
            break
    else:
        raise RuntimeError("fundamental-domain reduction did not terminate")
    # glue boundary representatives to the canonical side
    if abs(abs(tau) - 1.0) <= eps and tau.real > eps:
        tau = -1.0 / tau
        acc = S @ acc
    if tau.real >= 0.5 - eps:
        tau = tau - 1
        acc = translation_matrix(-1) @ acc
    return tau, acc


def tori_equivalent(
    tau1: complex, tau2: complex, eps: float | None = None
) -> IntMatrix2 | None:
    """Witness in SL2(Z) mapping tau1 to tau2, or None.

    Both parameters are reduced; with the canonical boundary side they are
    equivalent iff the reduced points coincide (compared with a slack of
    100*eps to absorb the float noise of the two reductions).  The witness
    composes the reductions: A2^-1 . A1.
    """
    eps = resolve(eps)
    r1, a1 = reduce_fundamental_domain(tau1, eps)
    r2, a2 = reduce_fundamental_domain(tau2, eps)
    if abs(r1 - r2) <= _EQUIV_SCALE * eps:
        return a2.inverse() @ a1
    return None


def _frac(v: float) -> float:
    # Python's % can round up to exactly 1.0 for tiny negatives
    r = v % 1.0
    return 0.0 if r >= 1.0 else r


def lattice_reduce(z: complex, tau: complex) -> tuple[float, float]:
    """Lattice coordinates (x, y) in [0, 1)^2 with z = x + y*tau mod the
    lattice Z + Z*tau."""
    tau = require_upper_half(tau)
    z = ensure_finite(z, "z")
    y = z.imag / tau.imag
    x = z.real - y * tau.real
    return _frac(x), _frac(y)


@dataclass(frozen=True)
class TorusTranslation:
    """Translation of the torus fiber at tau, stored in lattice coordinates
    (x, y) in [0, 1)^2; the translation vector is z = x + y*tau."""

    tau: complex
    x: float
    y: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "tau", require_upper_half(self.tau))
        for name in ("x", "y"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise InvalidInputError(f"{name} must be finite")
            object.__setattr__(self, name, _frac(v))

    @classmethod
    def from_z(cls, tau: complex, z: complex) -> "TorusTranslation":
        x, y = lattice_reduce(z, tau)
        return cls(tau, x, y)

    @property
    def z(self) -> complex:
        return self.x + self.y * self.tau

    def inverse(self) -> "TorusTranslation":
        return TorusTranslation(self.tau, _frac(-self.x), _frac(-self.y))


def zero_translation(tau: complex) -> TorusTranslation:
    return TorusTranslation(tau, 0.0, 0.0)


def translation_compose(
    t1: TorusTranslation, t2: TorusTranslation, eps: float | None = None
) -> TorusTranslation:
    """Group law on one fiber: add lattice coordinates mod 1."""
    if abs(t1.tau - t2.tau) > resolve(eps):
        raise MismatchedFiberError(
            f"translations live on different fibers: {t1.tau!r} vs {t2.tau!r}"
        )
    return TorusTranslation(t1.tau, _frac(t1.x + t2.x), _frac(t1.y + t2.y))

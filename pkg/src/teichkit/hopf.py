"""Classification of Hopf surfaces from contraction data.

Input is either an invertible contracting linear map (a 2x2 matrix) or an
explicit resonant normal form (z, w) -> (lam*z + c*w**p, lam**p * w).  The
biholomorphism class is either Diagonal(l1, l2), moduli descending, or
Resonant(lam, p); p = 1 is the linear non-diagonalizable (Jordan) case.

Resonance convention: the eigenvalue of larger modulus raised to the p-th
power equals the smaller one.  For moduli below one this is the only
direction a resonance can hold for p >= 2, and it matches the normal form
whose eigenvalues are (lam, lam**p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import Matrix2C, eigen2, ensure_finite, order_by_modulus
from .errors import InvalidInputError, NotContractingError
from .tolerance import resolve

# |lam|**p reaches any sensible tolerance long before this cap
RESONANCE_MAX_ORDER = 64


@dataclass(frozen=True)
class ResonantForm:
    """The germ (z, w) -> (lam*z + c*w**p, lam**p * w)."""

    lam: complex
    p: int
    c: complex = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", ensure_finite(self.lam, "lam"))
        object.__setattr__(self, "c", ensure_finite(self.c, "c"))
        if not isinstance(self.p, int) or isinstance(self.p, bool) or self.p < 1:
            raise InvalidInputError(f"p must be a positive integer, got {self.p!r}")


ContractionInput = Matrix2C | ResonantForm


def _annulus(lam: complex, eps: float) -> bool:
    return eps < abs(lam) < 1.0 - eps


@dataclass(frozen=True)
class Diagonal:
    """Class of the diagonal surface with eigenvalues (lambda1, lambda2)."""

    lambda1: complex
    lambda2: complex

    def __post_init__(self) -> None:
        eps = resolve(None)
        l1 = ensure_finite(self.lambda1, "lambda1")
        l2 = ensure_finite(self.lambda2, "lambda2")
        if not (_annulus(l1, eps) and _annulus(l2, eps)):
            raise InvalidInputError("eigenvalue moduli must lie strictly inside (0, 1)")
        if abs(l1) < abs(l2) - eps:
            raise InvalidInputError("Diagonal expects moduli in descending order")
        object.__setattr__(self, "lambda1", l1)
        object.__setattr__(self, "lambda2", l2)


@dataclass(frozen=True)
class Resonant:
    """Class of the resonant model of order p with leading eigenvalue lam."""

    lam: complex
    p: int

    def __post_init__(self) -> None:
        lam = ensure_finite(self.lam, "lam")
        if not _annulus(lam, resolve(None)):
            raise InvalidInputError("lam modulus must lie strictly inside (0, 1)")
        if not isinstance(self.p, int) or isinstance(self.p, bool) or self.p < 1:
            raise InvalidInputError(f"p must be a positive integer, got {self.p!r}")
        object.__setattr__(self, "lam", lam)


HopfClass = Diagonal | Resonant


def is_contracting(m: Matrix2C, eps: float | None = None) -> bool:
    """Both eigenvalue moduli strictly inside (0, 1), with an eps guard band
    on either end (also excludes non-invertible matrices)."""
    l1, l2, _ = eigen2(m, eps)
    eps = resolve(eps)
    return _annulus(l1, eps) and _annulus(l2, eps)


def resonance_order(
    lambda_big: complex, lambda_small: complex, eps: float | None = None
) -> int | None:
    """The unique p >= 1 with lambda_big**p = lambda_small, or None.

    |lambda_big|**p is strictly decreasing, so the modulus ratio pins down
    the single candidate; one closed-form guess plus one complex
    verification decides, capped at p <= 64.
    """
    eps = resolve(eps)
    lambda_big = ensure_finite(lambda_big, "lambda_big")
    lambda_small = ensure_finite(lambda_small, "lambda_small")
    b, s = abs(lambda_big), abs(lambda_small)
    if not 0.0 < b < 1.0:
        raise InvalidInputError("lambda_big modulus must lie strictly inside (0, 1)")
    if s <= 0.0 or s > b + eps:
        raise InvalidInputError("expected 0 < |lambda_small| <= |lambda_big|")
    if abs(b - s) <= eps:
        candidate = 1
    else:
        candidate = round(math.log(s) / math.log(b))
    if not 1 <= candidate <= RESONANCE_MAX_ORDER:
        return None
    return candidate if abs(lambda_big**candidate - lambda_small) <= eps else None


def classify(data: ContractionInput, eps: float | None = None) -> HopfClass:
    """Biholomorphism class of the Hopf surface of a contraction.

    Linear and diagonalizable gives Diagonal; linear with a Jordan block
    gives Resonant(lam, 1).  A resonant form with c = 0 is linear diagonal
    with eigenvalues (lam, lam**p); with c != 0 the class is Resonant(lam, p)
    independently of c (conjugating by (z, w) -> (c*z, w) rescales c to 1).
    """
    if isinstance(data, Matrix2C):
        if not is_contracting(data, eps):
            raise NotContractingError("matrix eigenvalue moduli must lie in (0, 1)")
        l1, l2, diagonalizable = eigen2(data, eps)
        if diagonalizable:
            return Diagonal(l1, l2)
        return Resonant(l1, 1)
    if isinstance(data, ResonantForm):
        eps_r = resolve(eps)
        if not _annulus(data.lam, eps_r):
            raise NotContractingError("resonant form requires 0 < |lam| < 1")
        if abs(data.c) <= eps_r:
            big, small = order_by_modulus(data.lam, data.lam**data.p, eps)
            return Diagonal(big, small)
        return Resonant(data.lam, data.p)
    raise InvalidInputError(f"unsupported contraction input {data!r}")


def det_trace(m: Matrix2C) -> tuple[complex, complex]:
    """The pair (det, trace), the complete conjugation invariant used by the
    deformation-space coordinates."""
    return m.det, m.trace


def class_equal(a: HopfClass, b: HopfClass, eps: float | None = None) -> bool:
    eps = resolve(eps)
    if isinstance(a, Diagonal) and isinstance(b, Diagonal):
        return (
            abs(a.lambda1 - b.lambda1) <= eps and abs(a.lambda2 - b.lambda2) <= eps
        )
    if isinstance(a, Resonant) and isinstance(b, Resonant):
        return a.p == b.p and abs(a.lam - b.lam) <= eps
    return False


def biholomorphic(
    a: ContractionInput, b: ContractionInput, eps: float | None = None
) -> bool:
    """Whether two contractions define biholomorphic Hopf surfaces."""
    return class_equal(classify(a, eps), classify(b, eps), eps)

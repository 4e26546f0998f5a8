"""Independent reference implementations used to pin expected values.

Everything here is deliberately naive (exhaustive search, direct formulas)
and shares no algorithmic structure with the library paths it checks.
"""

from __future__ import annotations

import cmath
import math
import random

from teichkit import IntMatrix2, Matrix2C, QuadraticIrrational, moebius, moebius_surd


def brute_resonance_order(big: complex, small: complex, eps: float, max_order: int = 64) -> int | None:
    """Smallest p in 1..max_order with big**p == small within eps."""
    power = 1.0 + 0j
    for p in range(1, max_order + 1):
        power = power * big
        if abs(power - small) <= eps:
            return p
    return None


def _ext_gcd(u: int, v: int) -> tuple[int, int]:
    """(x, y) with x*u + y*v = gcd(u, v)."""
    old_r, r = u, v
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_x, old_y = -old_x, -old_y
    return old_x, old_y


def fundamental_domain_point(tau: complex, box: int = 50, eps: float = 1e-9) -> complex:
    """Reduced representative of tau by exhaustive search.

    Minimizes |c*tau + d| over coprime pairs in the box (equivalently,
    maximizes the image's imaginary part), completes the row to an SL2(Z)
    matrix by the extended Euclidean algorithm, then applies the same
    boundary conventions the library uses (Re in [-1/2, 1/2), arc with
    Re <= 0).  Valid whenever the true minimizer lies in the box; for
    Im(tau) >= 0.05 entries never exceed 21 in absolute value.
    """
    shift = math.floor(tau.real + 0.5)
    tau0 = tau - shift
    best = None
    for c in range(-box, box + 1):
        for d in range(-box, box + 1):
            if math.gcd(c, d) != 1:
                continue
            value = abs(c * tau0 + d)
            if best is None or value < best[0] - 1e-15:
                best = (value, c, d)
    _, c, d = best
    x, y = _ext_gcd(d, c)
    a, b = x, -y
    assert a * d - b * c == 1
    point = (a * tau0 + b) / (c * tau0 + d)
    point -= math.floor(point.real + 0.5)
    if abs(abs(point) - 1.0) <= eps and point.real > eps:
        point = -1.0 / point
    if point.real >= 0.5 - eps:
        point -= 1.0
    return point


def tori_witness_search(tau1: complex, tau2: complex, box: int = 50, tol: float = 1e-6) -> IntMatrix2 | None:
    """SL2(Z) matrix with entries bounded by the box mapping tau1 to tau2.

    For each coprime bottom row (c, d) the top row is forced by the linear
    system a*tau1 + b = tau2*(c*tau1 + d); accept when it is integral.
    """
    for c in range(-box, box + 1):
        for d in range(-box, box + 1):
            if math.gcd(c, d) != 1:
                continue
            k = tau2 * (c * tau1 + d)
            a = k.imag / tau1.imag
            b = k.real - a * tau1.real
            ra, rb = round(a), round(b)
            if abs(a - ra) > tol or abs(b - rb) > tol:
                continue
            if ra * d - rb * c != 1:
                continue
            m = IntMatrix2(ra, rb, c, d)
            if abs(moebius(m, tau1) - tau2) <= tol:
                return m
    return None


def surd_witness_search(x: QuadraticIrrational, y: QuadraticIrrational, box: int = 20) -> IntMatrix2 | None:
    """GL2(Z) matrix with |entries| <= box carrying x to y, if one exists.

    Enumerates (b, c, det) and factors the forced product a*d = det + b*c;
    the Moebius image is computed with exact surd arithmetic.
    """
    for b in range(-box, box + 1):
        for c in range(-box, box + 1):
            for det in (1, -1):
                n = det + b * c
                if n == 0:
                    for t in range(-box, box + 1):
                        for a, d in ((0, t), (t, 0)):
                            m = IntMatrix2(a, b, c, d)
                            if m.det() == det and moebius_surd(m, x) == y:
                                return m
                    continue
                for a in range(-box, box + 1):
                    if a == 0 or n % a:
                        continue
                    d = n // a
                    if abs(d) > box:
                        continue
                    m = IntMatrix2(a, b, c, d)
                    if moebius_surd(m, x) == y:
                        return m
    return None


def rotation_power(z0: complex, alpha_value: float, k: int) -> complex:
    """k-th rotation iterate from the closed form, not iterated products."""
    return z0 * cmath.exp(2j * math.pi * alpha_value * k)


# ------------------------------------------------------------- generators


def random_complex(rng: random.Random, radius: float = 1.0) -> complex:
    return complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))


def random_annulus(rng: random.Random, low: float, high: float) -> complex:
    return cmath.rect(rng.uniform(low, high), rng.uniform(0.0, 2.0 * math.pi))


def random_conjugator(rng: random.Random, min_det: float = 0.3) -> Matrix2C:
    """Well-conditioned complex matrix: unit-box entries, |det| bounded below."""
    while True:
        m = Matrix2C(*(random_complex(rng) for _ in range(4)))
        if abs(m.det) >= min_det:
            return m


def random_contracting(rng: random.Random, low: float = 0.1, high: float = 0.85, separation: float = 0.0) -> Matrix2C:
    """Random contracting matrix with eigenvalue moduli in [low, high] and
    eigenvalue gap at least `separation`, built by conjugating a diagonal."""
    while True:
        lam1 = random_annulus(rng, low, high)
        lam2 = random_annulus(rng, low, high)
        if abs(lam1 - lam2) >= separation:
            break
    basis = random_conjugator(rng)
    return basis @ (Matrix2C.diag(lam1, lam2) @ basis.inverse())


_LETTERS = (
    IntMatrix2(0, -1, 1, 0),   # S
    IntMatrix2(1, 1, 0, 1),    # T
    IntMatrix2(1, -1, 0, 1),   # T^-1
)


def random_unimodular(rng: random.Random, length: int = 8) -> IntMatrix2:
    """Random SL2(Z) word in S and T."""
    m = IntMatrix2(1, 0, 0, 1)
    for _ in range(length):
        m = m @ _LETTERS[rng.randrange(3)]
    return m


def random_dyadic_jordan(rng: random.Random) -> Matrix2C:
    """Non-diagonalizable contracting matrix with exactly equal eigenvalues.

    The eigenvalue is dyadic and the conjugator integral, so every float
    operation is exact and the discriminant is exactly zero.
    """
    while True:
        lam = complex(rng.randrange(-28, 29) / 32.0, rng.randrange(-28, 29) / 32.0)
        if 0.1 < abs(lam) < 0.85:
            break
    jordan = Matrix2C(lam, 1.0, 0.0, lam)
    basis = random_unimodular(rng, rng.randrange(0, 4))
    return basis.to_complex() @ (jordan @ basis.inverse().to_complex())

"""The atlas group of the Teichmueller stack of S3 x S1.

G is GL2(C) x C with the twisted product (A,t) * (B,s) = (AB, t + s det A);
the twist is a group law because det is multiplicative.  M is the set of
pairs (A,t) with A contracting.  The stack atlas additionally needs an
action of G on M and an injection of M into G whose explicit formulas are
not pinned down here; both are therefore caller-supplied plugins, and
groupoid_check validates a supplied pair against the laws the construction
needs instead of trusting it.

Two named structures ship with the module: the trivial one (action fixes m,
injection is constant identity), which satisfies every law, and a broken
one (matrix conjugation action with a sheared injection) whose action is a
genuine right action but whose source/target maps are not invariant under
the integer twist (g, m) -> (i(m)^p * g, m).
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass
from typing import Callable

from .algebra import Matrix2C, ensure_finite
from .errors import InvalidInputError, NotContractingError, SingularMatrixError, TeichkitError
from .hopf import is_contracting
from .tolerance import resolve


@dataclass(frozen=True)
class GroupElement:
    """Element (a, t) of the twisted group GL2(C) x C."""

    a: Matrix2C
    t: complex

    def __post_init__(self) -> None:
        if not isinstance(self.a, Matrix2C):
            raise InvalidInputError(f"matrix part must be Matrix2C, got {type(self.a).__name__}")
        if abs(self.a.det) <= resolve(None):
            raise SingularMatrixError(f"group element needs an invertible matrix, det = {self.a.det!r}")
        object.__setattr__(self, "t", ensure_finite(self.t, "t"))


@dataclass(frozen=True)
class AtlasPoint:
    """Point (a, t) of the atlas base: a contracting, t arbitrary."""

    a: Matrix2C
    t: complex

    def __post_init__(self) -> None:
        if not isinstance(self.a, Matrix2C):
            raise InvalidInputError(f"matrix part must be Matrix2C, got {type(self.a).__name__}")
        if not is_contracting(self.a):
            raise NotContractingError(f"atlas point needs a contracting matrix, got {self.a!r}")
        object.__setattr__(self, "t", ensure_finite(self.t, "t"))


def g_identity() -> GroupElement:
    return GroupElement(Matrix2C.identity(), 0j)


def g_mul(x: GroupElement, y: GroupElement) -> GroupElement:
    """(A,t) * (B,s) = (AB, t + s det A)."""
    return GroupElement(x.a @ y.a, x.t + y.t * x.a.det)


def g_inverse(x: GroupElement) -> GroupElement:
    """(A,t)^-1 = (A^-1, -t / det A), the unique two-sided inverse."""
    return GroupElement(x.a.inverse(), -x.t / x.a.det)


def g_power(x: GroupElement, p: int) -> GroupElement:
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidInputError(f"power must be an integer, got {p!r}")
    base = x if p >= 0 else g_inverse(x)
    acc = g_identity()
    for _ in range(abs(p)):
        acc = g_mul(acc, base)
    return acc


@dataclass(frozen=True)
class AtlasStructure:
    """Caller-supplied action and injection making (G x M)/Z a groupoid
    candidate; validated by groupoid_check, never assumed."""

    name: str
    action: Callable[[AtlasPoint, GroupElement], AtlasPoint]
    injection: Callable[[AtlasPoint], GroupElement]


def trivial_structure() -> AtlasStructure:
    """Fixing action, constant-identity injection; satisfies all laws."""
    return AtlasStructure("trivial", lambda m, g: m, lambda m: g_identity())


_SHEAR = Matrix2C(1.0, 1.0, 0.0, 1.0)


def broken_structure() -> AtlasStructure:
    """Conjugation action with a sheared injection.

    The action m.g = (Ag^-1 Am Ag, tm) is a right action and preserves the
    contracting property, so the action laws hold; but i(m) = (shear * Am, 0)
    does not commute with Am, so target(i(m)^p * g, m) differs from
    target(g, m) for generic inputs and the integer-twist invariance fails.
    """

    def act(m: AtlasPoint, g: GroupElement) -> AtlasPoint:
        return AtlasPoint(g.a.inverse() @ (m.a @ g.a), m.t)

    def inj(m: AtlasPoint) -> GroupElement:
        return GroupElement(_SHEAR @ m.a, 0j)

    return AtlasStructure("broken", act, inj)


_STRUCTURES: dict[str, Callable[[], AtlasStructure]] = {
    "trivial": trivial_structure,
    "broken": broken_structure,
}


def structure_by_name(name: str) -> AtlasStructure:
    try:
        return _STRUCTURES[name]()
    except KeyError:
        raise InvalidInputError(f"unknown atlas structure {name!r}") from None


def z_action(p: int, g: GroupElement, m: AtlasPoint, structure: AtlasStructure) -> tuple[GroupElement, AtlasPoint]:
    """Integer twist p . (g, m) = (i(m)^p * g, m)."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidInputError(f"twist power must be an integer, got {p!r}")
    return g_mul(g_power(structure.injection(m), p), g), m


def source(g: GroupElement, m: AtlasPoint) -> AtlasPoint:
    return m


def target(g: GroupElement, m: AtlasPoint, structure: AtlasStructure) -> AtlasPoint:
    return structure.action(m, g)


@dataclass(frozen=True)
class LawResult:
    name: str
    checked: int
    failures: int
    counterexample: dict | None

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class CheckReport:
    structure: str
    samples: int
    seed: int
    laws: tuple[LawResult, ...]

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)


_LAW_NAMES = (
    "action-composition",
    "action-identity",
    "z-action-source-invariance",
    "z-action-target-invariance",
    "action-closure",
)


def _points_close(x: AtlasPoint, y: AtlasPoint, tol: float) -> bool:
    diff = Matrix2C(x.a.a - y.a.a, x.a.b - y.a.b, x.a.c - y.a.c, x.a.d - y.a.d)
    return diff.max_norm() <= tol and abs(x.t - y.t) <= tol


def _draw_complex(rng: random.Random, radius: float) -> complex:
    return complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))


def _draw_group_element(rng: random.Random) -> GroupElement:
    while True:
        a = Matrix2C(*(_draw_complex(rng, 1.5) for _ in range(4)))
        if abs(a.det) >= 0.2:
            return GroupElement(a, _draw_complex(rng, 2.0))


def _draw_atlas_point(rng: random.Random) -> AtlasPoint:
    lam1 = cmath.rect(rng.uniform(0.25, 0.8), rng.uniform(0.0, 2.0 * cmath.pi))
    lam2 = cmath.rect(rng.uniform(0.25, 0.8), rng.uniform(0.0, 2.0 * cmath.pi))
    while True:
        basis = Matrix2C(*(_draw_complex(rng, 1.0) for _ in range(4)))
        if abs(basis.det) >= 0.4:
            break
    a = basis @ (Matrix2C.diag(lam1, lam2) @ basis.inverse())
    return AtlasPoint(a, _draw_complex(rng, 2.0))


def groupoid_check(structure: AtlasStructure, samples: int, seed: int = 0, tol: float = 1e-6) -> CheckReport:
    """Randomized verification of the laws a structure must satisfy.

    Per sample (one point m, group elements g and h, twist power p in
    [-3, 3]) the following are checked: the right-action laws
    m.(g*h) = (m.g).h and m.identity = m; invariance of source and target
    under the integer twist (well-definedness of the quotient maps); and
    closure of the action in the contracting locus.  Law violations,
    including exceptions raised by the supplied functions, are counted and
    reported with the first counterexample; they are never raised.
    """
    if not isinstance(samples, int) or isinstance(samples, bool) or samples < 1:
        raise InvalidInputError(f"samples must be a positive integer, got {samples!r}")
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise InvalidInputError(f"seed must be an integer, got {seed!r}")
    tol = float(tol)
    if not tol > 0.0:
        raise InvalidInputError(f"tol must be positive, got {tol!r}")

    rng = random.Random(seed)
    failures = {name: 0 for name in _LAW_NAMES}
    first: dict[str, dict | None] = {name: None for name in _LAW_NAMES}

    def record(law: str, detail: str, **inputs) -> None:
        failures[law] += 1
        if first[law] is None:
            first[law] = {"detail": detail, **inputs}

    for _ in range(samples):
        m = _draw_atlas_point(rng)
        g = _draw_group_element(rng)
        h = _draw_group_element(rng)
        p = rng.randint(-3, 3)

        try:
            joint = structure.action(m, g_mul(g, h))
            stepwise = structure.action(structure.action(m, g), h)
            if not _points_close(joint, stepwise, tol):
                record("action-composition", "m.(g*h) != (m.g).h", m=m, g=g, h=h)
        except TeichkitError as exc:
            record("action-composition", f"action raised {exc.code}: {exc}", m=m, g=g, h=h)

        try:
            if not _points_close(structure.action(m, g_identity()), m, tol):
                record("action-identity", "m.identity != m", m=m)
        except TeichkitError as exc:
            record("action-identity", f"action raised {exc.code}: {exc}", m=m)

        try:
            twisted_g, twisted_m = z_action(p, g, m, structure)
            if not _points_close(source(twisted_g, twisted_m), source(g, m), tol):
                record("z-action-source-invariance", "source changed under twist", m=m, g=g, p=p)
        except TeichkitError as exc:
            record("z-action-source-invariance", f"twist raised {exc.code}: {exc}", m=m, g=g, p=p)

        try:
            twisted_g, twisted_m = z_action(p, g, m, structure)
            if not _points_close(
                target(twisted_g, twisted_m, structure), target(g, m, structure), tol
            ):
                record("z-action-target-invariance", "target changed under twist", m=m, g=g, p=p)
        except TeichkitError as exc:
            record("z-action-target-invariance", f"twist raised {exc.code}: {exc}", m=m, g=g, p=p)

        try:
            image = structure.action(m, g)
            if not is_contracting(image.a):
                record("action-closure", "action image not contracting", m=m, g=g)
        except TeichkitError as exc:
            record("action-closure", f"action raised {exc.code}: {exc}", m=m, g=g)

    laws = tuple(
        LawResult(name, samples, failures[name], first[name]) for name in _LAW_NAMES
    )
    return CheckReport(structure.name, samples, seed, laws)

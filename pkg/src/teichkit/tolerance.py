"""Single global comparison tolerance.

Every approximate comparison in the library routes through one epsilon so
floating noise is handled in one place.  Operations take an ``eps`` keyword
(``None`` means "use the current default") to override it per call chain;
the CLI maps the ``TEICHKIT_EPS`` environment variable and the ``--eps``
flag onto :func:`set_default_eps`.
"""

from __future__ import annotations

import math

DEFAULT_EPS = 1e-9

_current_eps = DEFAULT_EPS


def default_eps() -> float:
    return _current_eps


def set_default_eps(eps: float) -> None:
    global _current_eps
    _current_eps = _validated(eps)


def resolve(eps: float | None) -> float:
    """The effective tolerance for one call: ``eps`` or the global default."""
    if eps is None:
        return _current_eps
    return _validated(eps)


def _validated(eps: float) -> float:
    eps = float(eps)
    if not (math.isfinite(eps) and eps > 0.0):
        raise ValueError(f"eps must be a positive finite real, got {eps!r}")
    return eps

"""Regression fixture runner.

A fixture is one JSON file:

    {"command": ["tori", "reduce", "--tau", "5", "1"],
     "expected": {"reduced": [0, 1], "witness": [[1, -5], [0, 1]]}}

Optional keys: "exit" (expected exit code, default 0) and, for exit 1,
"expected_error" compared against the stderr document.  Commands run
in-process through cli.dispatch.  Pass/fail is decided by tolerant JSON
comparison (numbers within 1e-9); the runner additionally reports whether
every successful command's stdout matched the canonical serialization of
its expected document byte for byte.
"""

from __future__ import annotations

import io
from pathlib import Path

from .jsonio import SchemaError, canonical_dumps, loads_strict

_TOL = 1e-9


def json_close(a, b, tol: float = _TOL) -> bool:
    """Structural equality with numeric tolerance; bools never match numbers."""
    if isinstance(a, bool) or isinstance(b, bool):
        return a is b
    if isinstance(a, (int, float)) and isinstance(b, (int, float)):
        return abs(a - b) <= tol
    if isinstance(a, list) and isinstance(b, list):
        return len(a) == len(b) and all(json_close(x, y, tol) for x, y in zip(a, b))
    if isinstance(a, dict) and isinstance(b, dict):
        return set(a) == set(b) and all(json_close(a[k], b[k], tol) for k in a)
    return a == b


def run_fixtures(path, tol: float = _TOL) -> dict:
    """Run every *.json fixture under `path`; returns a summary document."""
    from .cli import dispatch

    directory = Path(path)
    if not directory.is_dir():
        raise SchemaError(f"fixture path {str(path)!r} is not a directory")

    total = 0
    byte_exact = True
    failures: list[dict] = []
    for fixture in sorted(directory.glob("*.json")):
        total += 1
        ok, bytes_ok, reason = _run_one(fixture, dispatch, tol)
        byte_exact = byte_exact and bytes_ok
        if not ok:
            failures.append({"fixture": fixture.name, "reason": reason})

    return {
        "total": total,
        "passed": total - len(failures),
        "failed": len(failures),
        "byte_exact": byte_exact,
        "failures": failures,
    }


def _run_one(path: Path, dispatch, tol: float) -> tuple[bool, bool, str]:
    try:
        doc = loads_strict(path.read_text(), path.name)
    except (OSError, SchemaError) as exc:
        return False, True, f"unreadable fixture: {exc}"

    if not isinstance(doc, dict) or not isinstance(doc.get("command"), list):
        return False, True, 'fixture must be an object with a "command" array'
    command = doc["command"]
    if not all(isinstance(part, (str, int, float)) and not isinstance(part, bool) for part in command):
        return False, True, "command entries must be strings or numbers"

    out, err = io.StringIO(), io.StringIO()
    code = dispatch([str(part) for part in command], out, err)
    want_code = doc.get("exit", 0)
    if code != want_code:
        detail = err.getvalue().strip() or out.getvalue().strip()
        return False, True, f"exit code {code}, expected {want_code}: {detail}"

    if want_code == 0:
        if "expected" not in doc:
            return False, True, 'fixture with exit 0 needs an "expected" document'
        return _compare(out.getvalue(), doc["expected"], path.name, tol)
    if want_code == 1 and "expected_error" in doc:
        return _compare(err.getvalue(), doc["expected_error"], path.name, tol)
    return True, True, ""


def _compare(text: str, expected, name: str, tol: float) -> tuple[bool, bool, str]:
    try:
        actual = loads_strict(text, f"{name} output")
    except SchemaError as exc:
        return False, False, str(exc)
    bytes_ok = text == canonical_dumps(expected) + "\n"
    if not json_close(actual, expected, tol):
        return False, bytes_ok, f"output {text.strip()} != expected {canonical_dumps(expected)}"
    return True, bytes_ok, ""

"""Canonical JSON wire format for the command-line tool.

Every command emits one JSON document with a fixed key order and floats
printed with 12 significant digits, so identical invocations are
byte-identical and fixture files can be compared bytewise.  Decoders are
strict about shape (shape problems raise SchemaError, treated as usage
errors); value-level domain violations surface as the library's own
exceptions.

Encodings: complex as [re, im]; 2x2 complex matrices as row-major pairs of
such entries; integer matrices as plain integer rows; rationals as the
string "num/den"; quadratic surds (p + sqrt(d))/q as {"p":..,"q":..,"d":..}.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .algebra import IntMatrix2, Matrix2C
from .atlas import AtlasPoint, GroupElement
from .hopf import Diagonal, HopfClass, Resonant, ResonantForm
from .surd import QuadraticIrrational
from .teich import BasePoint, CurvePoint, TeichPoint


class SchemaError(ValueError):
    """Malformed JSON or JSON of the wrong shape."""


def format_float(v: float) -> str:
    if math.isnan(v) or math.isinf(v):
        raise ValueError(f"cannot serialize non-finite value {v!r}")
    # v + 0.0 folds -0.0 into 0.0 so the sign of a zero never leaks
    return format(v + 0.0, ".12g")


def canonical_dumps(obj) -> str:
    parts: list[str] = []
    _write(obj, parts)
    return "".join(parts)


def _write(obj, parts: list[str]) -> None:
    if obj is None:
        parts.append("null")
    elif isinstance(obj, bool):
        parts.append("true" if obj else "false")
    elif isinstance(obj, int):
        parts.append(repr(obj))
    elif isinstance(obj, float):
        parts.append(format_float(obj))
    elif isinstance(obj, str):
        parts.append(json.dumps(obj))
    elif isinstance(obj, (list, tuple)):
        parts.append("[")
        for i, item in enumerate(obj):
            if i:
                parts.append(",")
            _write(item, parts)
        parts.append("]")
    elif isinstance(obj, dict):
        parts.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {key!r}")
            if i:
                parts.append(",")
            parts.append(json.dumps(key))
            parts.append(":")
            _write(value, parts)
        parts.append("}")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__} to JSON")


def loads_strict(text: str, what: str = "input"):
    def reject(token: str):
        raise SchemaError(f"{what}: non-finite number {token} is not allowed")

    try:
        return json.loads(text, parse_constant=reject)
    except SchemaError:
        raise
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{what}: malformed JSON: {exc}") from exc


def _real(v, what: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SchemaError(f"{what} must be a number, got {v!r}")
    v = float(v)
    if math.isnan(v) or math.isinf(v):
        raise SchemaError(f"{what} must be finite, got {v!r}")
    return v


def _int(v, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(f"{what} must be an integer, got {v!r}")
    return v


def enc_complex(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def dec_complex(v, what: str = "complex value") -> complex:
    if not isinstance(v, list) or len(v) != 2:
        raise SchemaError(f"{what} must be a [re, im] pair, got {v!r}")
    return complex(_real(v[0], f"{what} real part"), _real(v[1], f"{what} imaginary part"))


def enc_matrix2c(m: Matrix2C) -> list:
    return [[enc_complex(m.a), enc_complex(m.b)], [enc_complex(m.c), enc_complex(m.d)]]


def dec_matrix2c(v, what: str = "matrix") -> Matrix2C:
    if not isinstance(v, list) or len(v) != 2 or any(not isinstance(r, list) or len(r) != 2 for r in v):
        raise SchemaError(f"{what} must be a 2x2 row-major array, got {v!r}")
    return Matrix2C(
        dec_complex(v[0][0], f"{what}[0][0]"),
        dec_complex(v[0][1], f"{what}[0][1]"),
        dec_complex(v[1][0], f"{what}[1][0]"),
        dec_complex(v[1][1], f"{what}[1][1]"),
    )


def enc_int_matrix(m: IntMatrix2) -> list:
    return [[m.a, m.b], [m.c, m.d]]


def dec_int_matrix(v, what: str = "integer matrix") -> IntMatrix2:
    if not isinstance(v, list) or len(v) != 2 or any(not isinstance(r, list) or len(r) != 2 for r in v):
        raise SchemaError(f"{what} must be a 2x2 row-major array, got {v!r}")
    return IntMatrix2(
        _int(v[0][0], f"{what}[0][0]"),
        _int(v[0][1], f"{what}[0][1]"),
        _int(v[1][0], f"{what}[1][0]"),
        _int(v[1][1], f"{what}[1][1]"),
    )


def enc_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def enc_surd(x: QuadraticIrrational) -> dict:
    return {"p": x.p, "q": x.q, "d": x.d}


def dec_surd(v, what: str = "quadratic irrational") -> QuadraticIrrational:
    if not isinstance(v, dict) or set(v) != {"p", "q", "d"}:
        raise SchemaError(f'{what} must be an object with keys "p", "q", "d", got {v!r}')
    return QuadraticIrrational(_int(v["p"], f"{what} p"), _int(v["q"], f"{what} q"), _int(v["d"], f"{what} d"))


def enc_teich_point(x: TeichPoint) -> dict:
    if isinstance(x, BasePoint):
        return {"stratum": "base", "params": [enc_complex(x.det), enc_complex(x.trace)]}
    if x.order == 1:
        return {"stratum": "c", "params": [enc_complex(x.lam)]}
    return {"stratum": "cp", "p": x.order, "params": [enc_complex(x.lam)]}


def dec_teich_point(v, what: str = "point") -> TeichPoint:
    if not isinstance(v, dict) or "stratum" not in v:
        raise SchemaError(f'{what} must be an object with a "stratum" key, got {v!r}')
    stratum = v["stratum"]
    params = v.get("params")
    if not isinstance(params, list):
        raise SchemaError(f'{what} must carry a "params" array')
    if stratum == "base":
        if len(params) != 2:
            raise SchemaError(f"{what}: base stratum needs [det, trace] params")
        return BasePoint(dec_complex(params[0], f"{what} det"), dec_complex(params[1], f"{what} trace"))
    if stratum == "c":
        if len(params) != 1:
            raise SchemaError(f"{what}: stratum c needs a single [lambda] param")
        return CurvePoint(1, dec_complex(params[0], f"{what} lambda"))
    if stratum == "cp":
        if len(params) != 1:
            raise SchemaError(f"{what}: stratum cp needs a single [lambda] param")
        p = _int(v.get("p"), f"{what} p")
        if p < 2:
            raise SchemaError(f"{what}: stratum cp needs p >= 2, got {p}")
        return CurvePoint(p, dec_complex(params[0], f"{what} lambda"))
    raise SchemaError(f"{what}: unknown stratum {stratum!r}")


def enc_hopf_class(c: HopfClass) -> dict:
    if isinstance(c, Diagonal):
        return {"class": "diagonal", "lambda1": enc_complex(c.lambda1), "lambda2": enc_complex(c.lambda2)}
    return {"class": "resonant", "lambda": enc_complex(c.lam), "p": c.p}


def dec_hopf_class(v, what: str = "class") -> HopfClass:
    # extra keys (e.g. the det_trace echoed by `hopf classify`) are ignored
    # so classification output can be piped straight back in
    if not isinstance(v, dict) or "class" not in v:
        raise SchemaError(f'{what} must be an object with a "class" key, got {v!r}')
    kind = v["class"]
    if kind == "diagonal":
        if "lambda1" not in v or "lambda2" not in v:
            raise SchemaError(f'{what}: diagonal class needs "lambda1" and "lambda2"')
        return Diagonal(dec_complex(v["lambda1"], f"{what} lambda1"), dec_complex(v["lambda2"], f"{what} lambda2"))
    if kind == "resonant":
        if "lambda" not in v or "p" not in v:
            raise SchemaError(f'{what}: resonant class needs "lambda" and "p"')
        return Resonant(dec_complex(v["lambda"], f"{what} lambda"), _int(v["p"], f"{what} p"))
    raise SchemaError(f"{what}: unknown class {kind!r}")


def dec_contraction(v, what: str = "contraction") -> Matrix2C | ResonantForm:
    if isinstance(v, list):
        return dec_matrix2c(v, what)
    if isinstance(v, dict):
        if "lambda" not in v or "p" not in v:
            raise SchemaError(f'{what} object needs "lambda" and "p" (and optional "c")')
        c = dec_complex(v["c"], f"{what} c") if "c" in v else 1.0 + 0j
        return ResonantForm(dec_complex(v["lambda"], f"{what} lambda"), _int(v["p"], f"{what} p"), c)
    raise SchemaError(f"{what} must be a matrix array or a resonant-form object, got {v!r}")


def enc_group_element(g: GroupElement) -> dict:
    return {"a": enc_matrix2c(g.a), "t": enc_complex(g.t)}


def dec_group_element(v, what: str = "group element") -> GroupElement:
    if not isinstance(v, dict) or set(v) != {"a", "t"}:
        raise SchemaError(f'{what} must be an object with keys "a" and "t", got {v!r}')
    return GroupElement(dec_matrix2c(v["a"], f"{what} a"), dec_complex(v["t"], f"{what} t"))


def enc_atlas_point(m: AtlasPoint) -> dict:
    return {"a": enc_matrix2c(m.a), "t": enc_complex(m.t)}


def dec_atlas_point(v, what: str = "atlas point") -> AtlasPoint:
    if not isinstance(v, dict) or set(v) != {"a", "t"}:
        raise SchemaError(f'{what} must be an object with keys "a" and "t", got {v!r}')
    return AtlasPoint(dec_matrix2c(v["a"], f"{what} a"), dec_complex(v["t"], f"{what} t"))

"""Serialization: deterministic JSON with 17 significant digits and CSV grids."""
from __future__ import annotations

import dataclasses
import io
import json
import math
from fractions import Fraction

import mpmath
import numpy as np

from .padic import PAdicInt, PAdicPrecisionBudget, from_digits, hensel_digits


def format_real(x: float) -> str:
    """``x`` with 17 significant digits and a bare exponent, e.g. ``1.0000000000000000e0``."""
    x = float(x)
    if not math.isfinite(x):
        return "null"
    mant, exp = f"{x:.16e}".split("e")
    return f"{mant}e{int(exp)}"


def padic_to_dict(a: PAdicInt, budget: PAdicPrecisionBudget | None = None) -> dict:
    out = {
        "prime": a.prime,
        "precision": a.precision,
        "digits": hensel_digits(a),
        "valuation": None if a.valuation == math.inf else int(a.valuation),
    }
    if budget is not None:
        out["loss"] = budget.loss_incurred
    return out


def padic_from_dict(d: dict) -> PAdicInt:
    a = from_digits(d["digits"], d["prime"])
    if a.precision != d["precision"]:
        raise ValueError("digit count disagrees with precision")
    return a


def _plain(obj):
    """Reduce ``obj`` to dicts, lists, str, int, bool, None and floats."""
    if isinstance(obj, (bool, type(None), str)):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, Fraction):
        return {"exact": f"{obj.numerator}/{obj.denominator}", "value": float(obj)}
    if isinstance(obj, (float, np.floating, mpmath.mpf)):
        return float(obj)
    if isinstance(obj, (complex, mpmath.mpc)):
        z = complex(obj)
        return {"re": z.real, "im": z.imag}
    if isinstance(obj, PAdicInt):
        return padic_to_dict(obj)
    if isinstance(obj, PAdicPrecisionBudget):
        return {"requested": obj.requested, "loss": obj.loss_incurred}
    if dataclasses.is_dataclass(obj):
        if hasattr(obj, "label") and hasattr(obj, "values"):
            return obj.label()
        return {f.name: _plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _write(obj, out: io.StringIO, indent: int, level: int) -> None:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, float):
        out.write(format_real(obj))
    elif isinstance(obj, dict):
        if not obj:
            out.write("{}")
            return
        out.write("{\n")
        for i, (k, v) in enumerate(obj.items()):
            out.write(f"{pad}{json.dumps(k)}: ")
            _write(v, out, indent, level + 1)
            out.write(",\n" if i < len(obj) - 1 else "\n")
        out.write(end + "}")
    elif isinstance(obj, list):
        if not obj:
            out.write("[]")
            return
        if all(isinstance(v, (int, float, str, bool, type(None))) for v in obj):
            out.write("[" + ", ".join(_scalar(v) for v in obj) + "]")
            return
        out.write("[\n")
        for i, v in enumerate(obj):
            out.write(pad)
            _write(v, out, indent, level + 1)
            out.write(",\n" if i < len(obj) - 1 else "\n")
        out.write(end + "]")
    else:
        out.write(_scalar(obj))


def _scalar(v) -> str:
    if isinstance(v, float):
        return format_real(v)
    return json.dumps(v)


def to_json(obj, indent: int = 2) -> str:
    buf = io.StringIO()
    _write(_plain(obj), buf, indent, 0)
    buf.write("\n")
    return buf.getvalue()


def to_csv(rows, header=("s", "w", "value")) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_real(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def emit(obj, fmt: str = "json") -> bytes:
    """Encode a value (json) or a curve grid of ``(s, w, value)`` rows (csv)."""
    if fmt == "json":
        if not isinstance(obj, dict):
            obj = {"value": obj}
        return to_json(obj).encode()
    if fmt == "csv":
        return to_csv(obj).encode()
    raise ValueError(f"unknown format {fmt!r}")

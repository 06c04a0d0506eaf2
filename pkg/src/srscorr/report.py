"""Serialization of result rows: JSON lines and RFC-4180 CSV.

Exact rationals are rendered canonically as ``p/q`` (lowest terms, positive
denominator) or bare ``p`` for integers, so parsing them back loses nothing.
Decimal columns are rendered by exact integer arithmetic with half-to-even
rounding at a configurable number of digits — the float never enters.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .correlation import CorrRecord, LimitSpec
from .errors import DomainError
from .exactnum import parse_rational, rational_str
from .oracle import McEstimate

__all__ = [
    "decimal_str",
    "row_to_obj",
    "emit_report",
    "parse_corr_row",
    "parse_mc_row",
    "CORR_COLUMNS",
    "LIMIT_COLUMNS",
    "MC_COLUMNS",
]

CORR_COLUMNS = ("k", "N", "n", "f", "corr", "scaled", "scaled_decimal", "limit", "abs_error_decimal")
LIMIT_COLUMNS = ("k", "f", "value", "value_decimal", "exponent")
MC_COLUMNS = ("k", "N", "n", "trials", "seed", "mean", "stderr")


def decimal_str(value: Fraction | int, digits: int) -> str:
    """Fixed-point decimal string of an exact rational, rounded half-to-even
    at ``digits`` fractional digits, computed in integer arithmetic."""
    if digits < 1:
        raise DomainError(f"decimal rendering requires digits >= 1, got {digits}")
    value = Fraction(value)
    negative = value < 0
    num, den = abs(value.numerator), value.denominator
    scaled = num * 10**digits
    q, r = divmod(scaled, den)
    double = 2 * r
    if double > den or (double == den and q % 2 == 1):
        q += 1
    whole, frac = divmod(q, 10**digits)
    sign = "-" if negative and q != 0 else ""
    return f"{sign}{whole}.{frac:0{digits}d}"


def row_to_obj(row, precision: int) -> dict:
    """Flatten a result row into an ordered plain dict of JSON-safe values."""
    if isinstance(row, CorrRecord):
        return {
            "k": row.k,
            "N": row.N,
            "n": row.n,
            "f": rational_str(row.f),
            "corr": rational_str(row.corr),
            "scaled": rational_str(row.scaled),
            "scaled_decimal": decimal_str(row.scaled, precision),
            "limit": rational_str(row.limit),
            "abs_error_decimal": decimal_str(row.abs_error, precision),
        }
    if isinstance(row, LimitSpec):
        return {
            "k": row.k,
            "f": rational_str(row.f),
            "value": rational_str(row.value),
            "value_decimal": decimal_str(row.value, precision),
            "exponent": row.exponent,
        }
    if isinstance(row, McEstimate):
        return {
            "k": row.k,
            "N": row.N,
            "n": row.n,
            "trials": row.trials,
            "seed": row.seed,
            "mean": row.mean,
            "stderr": row.stderr,
        }
    if isinstance(row, dict):
        return dict(row)
    raise DomainError(f"cannot serialize row of type {type(row).__name__}")


def emit_report(rows, format: str, precision: int = 12, columns=None) -> str:
    """Render rows to a complete output document.

    ``format`` is ``"json"`` (one JSON object per line) or ``"csv"``
    (header plus one record per line, RFC-4180 quoting).  All rows of one
    report must share a schema.  ``columns`` supplies the header for an
    empty CSV report; otherwise it is taken from the first row.
    """
    if format not in ("json", "csv"):
        raise DomainError(f"unknown report format: {format!r}")
    if precision < 1:
        raise DomainError(f"emit_report requires precision >= 1, got {precision}")
    objs = [row_to_obj(row, precision) for row in rows]
    keys = list(objs[0].keys()) if objs else list(columns or ())
    for obj in objs:
        if list(obj.keys()) != keys:
            raise DomainError("all rows in a report must share the same columns")
    if format == "json":
        return "".join(json.dumps(obj) + "\n" for obj in objs)
    if not keys:
        return ""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(keys)
    for obj in objs:
        writer.writerow([_csv_cell(obj[key]) for key in keys])
    return buf.getvalue()


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return json.dumps(value)
    return str(value)


def _parse_corr_obj(obj: dict) -> CorrRecord:
    scaled = parse_rational(str(obj["scaled"]))
    limit = parse_rational(str(obj["limit"]))
    return CorrRecord(
        k=int(obj["k"]),
        N=int(obj["N"]),
        n=int(obj["n"]),
        f=parse_rational(str(obj["f"])),
        corr=parse_rational(str(obj["corr"])),
        scaled=scaled,
        limit=limit,
        abs_error=abs(scaled - limit),
    )


def parse_corr_row(line_or_obj) -> CorrRecord:
    """Rebuild a :class:`CorrRecord` from one emitted JSON line or a parsed
    CSV row dict.  Rational fields round-trip exactly; the decimal columns
    are display-only and are recomputed from the rationals."""
    if isinstance(line_or_obj, str):
        return _parse_corr_obj(json.loads(line_or_obj))
    return _parse_corr_obj(dict(line_or_obj))


def parse_mc_row(line_or_obj) -> McEstimate:
    """Rebuild a :class:`McEstimate` from an emitted JSON line or CSV dict."""
    obj = json.loads(line_or_obj) if isinstance(line_or_obj, str) else dict(line_or_obj)
    return McEstimate(
        k=int(obj["k"]),
        N=int(obj["N"]),
        n=int(obj["n"]),
        trials=int(obj["trials"]),
        seed=int(obj["seed"]),
        mean=float(obj["mean"]),
        stderr=float(obj["stderr"]),
    )

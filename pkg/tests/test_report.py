"""Tests for exact decimal rendering and the JSON-lines / CSV report
emitters, including loss-free round trips of evaluated records."""

import csv
import io
import json
from fractions import Fraction

import pytest

from srscorr.correlation import evaluate_correlation, limit_spec
from srscorr.errors import DomainError
from srscorr.oracle import monte_carlo_corr
from srscorr.report import (
    CORR_COLUMNS,
    LIMIT_COLUMNS,
    MC_COLUMNS,
    decimal_str,
    emit_report,
    parse_corr_row,
    parse_mc_row,
    row_to_obj,
)


# ---------------------------------------------------------------------------
# decimal rendering


def test_decimal_str_plain_values():
    assert decimal_str(Fraction(1, 4), 2) == "0.25"
    assert decimal_str(Fraction(-1, 4), 2) == "-0.25"
    assert decimal_str(Fraction(5, 1), 3) == "5.000"
    assert decimal_str(0, 4) == "0.0000"
    assert decimal_str(7, 1) == "7.0"
    assert decimal_str(Fraction(-1, 36), 6) == "-0.027778"


def test_decimal_str_rounds_half_to_even():
    assert decimal_str(Fraction(1, 8), 2) == "0.12"  # 0.125 -> even digit 2
    assert decimal_str(Fraction(3, 8), 2) == "0.38"  # 0.375 -> even digit 8
    assert decimal_str(Fraction(-1, 8), 2) == "-0.12"
    assert decimal_str(Fraction(25, 2), 1) == "12.5"
    assert decimal_str(Fraction(1, 40), 2) == "0.02"  # 0.025 -> even digit 2
    assert decimal_str(Fraction(3, 40), 2) == "0.08"  # 0.075 -> even digit 8


def test_decimal_str_never_prints_negative_zero():
    assert decimal_str(Fraction(-1, 10**9), 3) == "0.000"
    assert decimal_str(Fraction(-1, 3 * 10**8), 2) == "0.00"


def test_decimal_str_is_exact_not_float():
    # 10^-20 is far below float resolution; exact integer arithmetic keeps it
    assert decimal_str(Fraction(1, 10**20), 20) == "0.00000000000000000001"
    assert decimal_str(Fraction(10**40 + 1, 10**40), 40) == "1." + "0" * 39 + "1"


def test_decimal_str_requires_at_least_one_digit():
    # the renderer always prints a decimal point, so digits >= 1
    with pytest.raises(DomainError):
        decimal_str(Fraction(1, 2), 0)
    with pytest.raises(DomainError):
        decimal_str(Fraction(1, 2), -1)


# ---------------------------------------------------------------------------
# emitters


def test_emit_json_lines_for_corr_records():
    rows = [evaluate_correlation(2, N, N // 2) for N in (10, 20)]
    text = emit_report(rows, "json", precision=6)
    lines = text.splitlines()
    assert len(lines) == 2
    obj = json.loads(lines[0])
    assert obj["k"] == 2 and obj["N"] == 10 and obj["n"] == 5
    assert obj["f"] == "1/2"
    assert obj["corr"] == "-1/36"
    assert obj["scaled"] == "-5/18"
    assert obj["scaled_decimal"] == "-0.277778"
    assert obj["limit"] == "-1/4"
    assert obj["abs_error_decimal"] == "0.027778"
    assert list(obj.keys()) == list(CORR_COLUMNS)


def test_emit_csv_for_corr_records():
    rows = [evaluate_correlation(2, 10, 5)]
    text = emit_report(rows, "csv", precision=6)
    parsed = list(csv.reader(io.StringIO(text)))
    assert parsed[0] == list(CORR_COLUMNS)
    record = dict(zip(parsed[0], parsed[1]))
    assert record["corr"] == "-1/36"
    assert record["scaled_decimal"] == "-0.277778"
    assert len(parsed) == 2


def test_emit_csv_header_only_when_empty():
    text = emit_report([], "csv", columns=CORR_COLUMNS)
    assert text.splitlines() == [",".join(CORR_COLUMNS)]
    assert emit_report([], "json") == ""


def test_emit_report_rejects_unknown_format():
    with pytest.raises(DomainError):
        emit_report([], "xml")


def test_limit_rows():
    text = emit_report([limit_spec(3, Fraction(1, 3))], "json", precision=8)
    obj = json.loads(text)
    assert list(obj.keys()) == list(LIMIT_COLUMNS)
    assert obj["value"] == "4/27"
    assert obj["value_decimal"] == "0.14814815"
    assert obj["exponent"] == 2


def test_mc_rows_carry_floats_exactly():
    est = monte_carlo_corr(2, 10, 5, trials=3000, seed=17)
    text = emit_report([est], "json")
    obj = json.loads(text)
    assert list(obj.keys()) == list(MC_COLUMNS)
    assert obj["mean"] == est.mean  # repr round-trip keeps every bit
    assert obj["stderr"] == est.stderr
    assert obj["trials"] == 3000 and obj["seed"] == 17


def test_row_to_obj_passes_prebuilt_dicts_through():
    # callers handing in dicts are responsible for JSON-safe values already
    obj = row_to_obj({"a": "1/3", "b": 2, "flag": True}, precision=4)
    assert obj == {"a": "1/3", "b": 2, "flag": True}
    with pytest.raises(DomainError):
        row_to_obj(object(), precision=4)


# ---------------------------------------------------------------------------
# round trips


def test_corr_record_round_trips_through_json():
    rec = evaluate_correlation(4, 26, 11)
    line = emit_report([rec], "json", precision=12)
    back = parse_corr_row(line)
    assert back == rec


def test_corr_record_round_trips_through_csv():
    rec = evaluate_correlation(3, 17, 6)
    text = emit_report([rec], "csv", precision=12)
    parsed = list(csv.reader(io.StringIO(text)))
    back = parse_corr_row(dict(zip(parsed[0], parsed[1])))
    assert back == rec


def test_mc_estimate_round_trips_through_json_and_csv():
    est = monte_carlo_corr(3, 12, 5, trials=4000, seed=23)
    assert parse_mc_row(emit_report([est], "json")) == est
    text = emit_report([est], "csv")
    parsed = list(csv.reader(io.StringIO(text)))
    assert parse_mc_row(dict(zip(parsed[0], parsed[1]))) == est

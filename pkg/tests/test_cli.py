import csv
import io
import json

import pytest

from primroots import artin, charsum
from primroots.cli import COLUMNS, render, run
from primroots.factorize import factor
from primroots.primroot import multiplicative_order
from primroots.special_primes import enumerate_k_pow2_primes, sieve_primes


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    header, data = rows[0], rows[1:]
    return header, [dict(zip(header, row)) for row in data]


def test_order_example(capsys):
    assert run(["order", "--u", "2", "--n", "5"]) == 0
    header, rows = parse_csv(capsys.readouterr().out)
    assert header == list(COLUMNS["order"])
    assert rows == [{"u": "2", "n": "5", "order": "4", "lambda": "4",
                     "primitive": "true"}]


def test_least_prime_square_is_domain_error(capsys):
    assert run(["least-prime", "--q", "4"]) == 1
    err = capsys.readouterr().err
    assert "perfect square" in err


def test_usage_errors_exit_2(capsys):
    assert run(["no-such-command"]) == 2
    assert run(["order", "--u", "2"]) == 2           # missing --n
    assert run(["psi", "--u", "2", "--p", "5", "--method", "bogus"]) == 2
    capsys.readouterr()


def test_artin_constant_value(capsys):
    assert run(["artin-constant", "--cutoff", "1000000"]) == 0
    _, rows = parse_csv(capsys.readouterr().out)
    assert abs(float(rows[0]["value"]) - 0.3739558136) <= 1e-6


def test_csv_and_json_values_match():
    argv = ["interval", "--z", "50", "--q", "2"]
    _, csv_rows = parse_csv(render(argv, fmt="csv"))
    doc = json.loads(render(argv, fmt="json"))
    assert doc["schema_version"] == "1"
    assert doc["command"] == "interval"
    assert doc["parameters"]["z"] == 50
    assert len(csv_rows) == len(doc["rows"]) == 1
    for csv_row, json_row in zip(csv_rows, doc["rows"]):
        for key, json_value in json_row.items():
            if isinstance(json_value, bool):
                assert csv_row[key] == ("true" if json_value else "false")
            elif isinstance(json_value, float):
                assert float(csv_row[key]) == json_value
            else:
                assert csv_row[key] == str(json_value)


def test_cli_is_thin_adapter_over_library():
    # golden routing: same values through the library and through the CLI
    res = multiplicative_order(7, 30)
    _, rows = parse_csv(render(["order", "--u", "7", "--n", "30"]))
    assert int(rows[0]["order"]) == res.order
    assert int(rows[0]["lambda"]) == res.group_exponent

    d = charsum.decompose_interval(100, 3)
    _, rows = parse_csv(render(["interval", "--z", "100", "--q", "3"]))
    assert int(rows[0]["psi_sum"]) == d.psi_sum
    assert float(rows[0]["trivial_term"]) == float(f"{d.trivial_term:.12g}")
    assert float(rows[0]["error_term"]) == float(f"{d.error_term:.12g}")

    rep = artin.prime_counts(2, 1000)
    _, rows = parse_csv(render(["density", "--q", "2", "--x", "1000"]))
    assert int(rows[0]["pi_x"]) == rep.pi_x
    assert int(rows[0]["pi_q_x"]) == rep.pi_q_x

    ev = charsum.psi_divisor_free(3, 101, literal=True)
    _, rows = parse_csv(render(
        ["psi", "--u", "3", "--p", "101", "--method", "free", "--literal"]))
    assert int(rows[0]["value"]) == ev.value
    assert float(rows[0]["residual"]) == float(f"{ev.residual:.12g}")


def test_germain_listing():
    _, rows = parse_csv(render(["germain", "--limit", "100"]))
    assert [(int(r["p"]), int(r["s"]), int(r["r"])) for r in rows] == [
        (7, 1, 3), (11, 1, 5), (13, 2, 3), (23, 1, 11), (29, 2, 7), (41, 3, 5),
        (47, 1, 23), (53, 2, 13), (59, 1, 29), (83, 1, 41), (89, 3, 11), (97, 5, 3)]
    _, rows = parse_csv(render(["germain", "--limit", "100", "--s", "2"]))
    assert [int(r["p"]) for r in rows] == [13, 29, 53]


def test_germain_and_fermat_test_commands(capsys):
    assert run(["germain-test", "--q", "3", "--p", "7"]) == 0
    _, rows = parse_csv(capsys.readouterr().out)
    assert rows[0]["passes"] == "true"
    assert run(["germain-test", "--q", "2", "--p", "127"]) == 1  # not Germain
    capsys.readouterr()
    assert run(["fermat-test", "--q", "2", "--f", "17"]) == 0
    _, rows = parse_csv(capsys.readouterr().out)
    assert rows[0]["passes"] == "false"


def test_k2n_rows_and_truncation_note(capsys):
    assert run(["k2n", "--k", "3", "--nmax", "6"]) == 0
    _, rows = parse_csv(capsys.readouterr().out)
    assert [(int(r["n"]), int(r["p"])) for r in rows] == \
        list(enumerate_k_pow2_primes(3, 6).entries)

    assert run(["k2n", "--k", "3", "--nmax", "80"]) == 0
    captured = capsys.readouterr()
    assert "truncated at n = 62" in captured.err


def test_is_primroot_and_lift(capsys):
    assert run(["is-primroot", "--u", "4", "--p", "5"]) == 0
    _, rows = parse_csv(capsys.readouterr().out)
    assert rows[0]["primitive"] == "false"
    assert run(["lift", "--u", "2", "--n", "15"]) == 0
    _, rows = parse_csv(capsys.readouterr().out)
    assert rows[0]["primitive"] == "true"
    assert run(["lift", "--u", "4", "--n", "15"]) == 1
    capsys.readouterr()


def test_scan_rows_match_library(capsys):
    assert run(["scan", "--qmin", "2", "--qmax", "40"]) == 0
    out = capsys.readouterr().out
    header, rows = parse_csv(out)
    assert header == ["q", "least_p", "bound_value", "ratio", "germain_hit"]
    records = artin.conjecture_scan(2, 40)
    assert len(rows) == len(records)
    for row, rec in zip(rows, records):
        assert int(row["q"]) == rec.q
        assert int(row["least_p"]) == rec.least_p
        if rec.bound_value is None:
            assert row["bound_value"] == "" and row["ratio"] == ""
        else:
            assert float(row["bound_value"]) == float(f"{rec.bound_value:.12g}")
        assert row["germain_hit"] == ("true" if rec.germain_hit else "false")


def test_scan_is_bit_stable(capsys):
    assert run(["scan", "--qmin", "2", "--qmax", "100"]) == 0
    first = capsys.readouterr().out
    assert run(["scan", "--qmin", "2", "--qmax", "100", "--threads", "2"]) == 0
    second = capsys.readouterr().out
    assert first == second


def test_least_prime_exhausted_row(capsys):
    assert run(["least-prime", "--q", "510", "--cap", "43"]) == 0
    _, rows = parse_csv(capsys.readouterr().out)
    assert rows[0]["least_p"] == "" and rows[0]["exhausted"] == "true"

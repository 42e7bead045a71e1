import json
import subprocess
import sys

import pytest

from gysin.cli import main
from gysin.poly import SparsePoly


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- schur ----------------------------------------------------------------

def test_schur_command(capsys):
    code, out, _ = run_cli(capsys, "schur", "--lambda", "2,1", "--n", "2")
    assert code == 0
    assert out == "z1^2*z2 + z1*z2^2\n"


def test_schur_one_part(capsys):
    code, out, _ = run_cli(capsys, "schur", "--lambda", "1", "--n", "3")
    assert code == 0
    assert out == "z1 + z2 + z3\n"


def test_schur_empty_partition(capsys):
    code, out, _ = run_cli(capsys, "schur", "--lambda", "0", "--n", "2")
    assert code == 0
    assert out == "1\n"


@pytest.mark.parametrize("via", ["bialternant", "tableaux", "jacobi-trudi"])
def test_schur_constructions_agree(capsys, via):
    code, out, _ = run_cli(capsys, "schur", "--lambda", "3,1", "--n", "3", "--via", via)
    assert code == 0
    assert out == "z1^3*z2 + z1^3*z3 + z1^2*z2^2 + 2*z1^2*z2*z3 + z1^2*z3^2 + " \
        "z1*z2^3 + 2*z1*z2^2*z3 + 2*z1*z2*z3^2 + z1*z3^3 + z2^3*z3 + " \
        "z2^2*z3^2 + z2*z3^3\n"


def test_schur_invalid_partition_exits_2(capsys):
    code, _, err = run_cli(capsys, "schur", "--lambda", "1,3", "--n", "2")
    assert code == 2
    assert "error" in err


def test_schur_too_many_parts_exits_2(capsys):
    code, _, _ = run_cli(capsys, "schur", "--lambda", "1,1,1", "--n", "2")
    assert code == 2


# -- pushforward -------------------------------------------------------------

def test_pushforward_value_with_decomposition(capsys):
    code, out, _ = run_cli(
        capsys, "pushforward", "--space", "og-odd", "--n", "1", "--lambda", "3"
    )
    assert code == 0
    assert "value: 2*t1^2" in out
    assert "mu: 1" in out
    assert "constant: 2" in out


def test_pushforward_zero(capsys):
    code, out, _ = run_cli(
        capsys, "pushforward", "--space", "lg", "--n", "2", "--lambda", "3,1"
    )
    assert code == 0
    assert "value: 0" in out
    assert "mu:" not in out


def test_pushforward_method_all_agrees(capsys):
    code, out, _ = run_cli(
        capsys, "pushforward", "--space", "lg", "--n", "2", "--lambda", "2,1",
        "--method", "all",
    )
    assert code == 0
    assert "value: 1" in out
    assert "agreement: ok" in out


def test_pushforward_method_closed(capsys):
    code, out, _ = run_cli(
        capsys, "pushforward", "--space", "lg", "--n", "2", "--lambda", "4,1",
        "--method", "closed",
    )
    assert code == 0
    assert "value: t1^2 + t2^2" in out


def test_pushforward_method_abbv(capsys):
    code, out, _ = run_cli(
        capsys, "pushforward", "--space", "lg", "--n", "1", "--lambda", "3",
        "--method", "abbv", "--t", "5",
    )
    assert code == 0
    assert "oracle: 25" in out


def test_pushforward_json_roundtrip(capsys):
    code, out, _ = run_cli(
        capsys, "pushforward", "--space", "lg", "--n", "2", "--lambda", "4,1",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    poly = SparsePoly.from_records(payload["value"]["nvars"], payload["value"]["terms"])
    assert poly == SparsePoly(2, {(2, 0): 1, (0, 2): 1})
    assert payload["mu"] == [1]
    assert payload["constant"] == "1"
    assert payload["text"] == "t1^2 + t2^2"


def test_pushforward_degenerate_point_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "pushforward", "--space", "lg", "--n", "2", "--lambda", "2,1",
        "--method", "abbv", "--t", "2,-2",
    )
    assert code == 2
    assert "error" in err


def test_pushforward_bad_rank_exits_2(capsys):
    code, _, _ = run_cli(
        capsys, "pushforward", "--space", "lg", "--n", "9", "--lambda", "1"
    )
    assert code == 2


# -- verify ---------------------------------------------------------------------

def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n-max", "2", "--weight-max", "5")
    assert code == 0
    assert "result: PASS" in out


def test_verify_includes_rank1_cube_case(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n-max", "1", "--weight-max", "3")
    assert code == 0
    assert "lg(1) lambda=3 value=t1^2" in out


def test_verify_json_reports_og_even_constant(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--n-max", "2", "--weight-max", "4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["all_ok"] is True
    assert payload["og_even_constants"]["2"] == "2"
    assert all(case["ok"] for case in payload["cases"])


def test_verify_fault_injection_exits_1(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--n-max", "1", "--weight-max", "2", "--inject-fault"
    )
    assert code == 1
    assert "FAIL" in out


def test_verify_single_space(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--space", "og-odd", "--n-max", "2", "--weight-max", "4"
    )
    assert code == 0
    assert "lg(" not in out


def test_verify_rank_guard(capsys):
    code, _, _ = run_cli(capsys, "verify", "--n-max", "9")
    assert code == 2


# -- table ------------------------------------------------------------------------

def test_table_csv(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--space", "lg", "--n", "2", "--weight-max", "5"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "space,n,lambda,mu,constant,value"
    assert 'lg,2,"2,1",0,1,1' in lines
    assert 'lg,2,"4,1",1,1,t1^2 + t2^2' in lines
    # non-decomposable partitions appear as zero rows
    assert 'lg,2,"3,1",-,-,0' in lines


def test_table_empty_range_is_header_only(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--space", "lg", "--n", "2", "--weight-max", "-1"
    )
    assert code == 0
    assert out == "space,n,lambda,mu,constant,value\n"


def test_table_json(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--space", "og-odd", "--n", "1", "--weight-max", "3",
        "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)["rows"]
    assert {"space": "og-odd", "n": 1, "lambda": "3", "mu": "1", "constant": "2",
            "value": "2*t1^2", "terms": [{"coeff": "2", "exp": [2]}]} in rows
    # every row's value round-trips through the records serialization
    for row in rows:
        poly = SparsePoly.from_records(1, row["terms"])
        assert poly.render("t") == row["value"]


# -- determinism and process-level behavior ------------------------------------------

def test_identical_requests_are_byte_identical(capsys):
    args = ["verify", "--n-max", "2", "--weight-max", "4", "--seed", "7",
            "--format", "json"]
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_internal_inconsistency_exits_3(capsys, monkeypatch):
    from gysin import cli
    from gysin.errors import InternalInconsistency

    def broken(lam, space):
        raise InternalInconsistency("forced for the exit-code contract")

    monkeypatch.setattr(cli, "pushforward_schur", broken)
    code, _, err = run_cli(
        capsys, "pushforward", "--space", "lg", "--n", "2", "--lambda", "2,1"
    )
    assert code == 3
    assert "internal inconsistency" in err


def test_usage_error_exits_2():
    process = subprocess.run(
        [sys.executable, "-m", "gysin", "pushforward", "--space", "nowhere",
         "--n", "2", "--lambda", "1"],
        capture_output=True,
    )
    assert process.returncode == 2


def test_module_entry_point():
    process = subprocess.run(
        [sys.executable, "-m", "gysin", "schur", "--lambda", "2,1", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert process.returncode == 0
    assert process.stdout == "z1^2*z2 + z1*z2^2\n"

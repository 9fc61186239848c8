import json

import pytest

from formdual.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_catalog_lists_forms(capsys):
    rc, out, _ = run(capsys, "catalog")
    assert rc == 0
    names = {e["name"] for e in json.loads(out)}
    assert {"theta8", "z8", "j3"} <= names


def test_catalog_dump(capsys):
    rc, out, _ = run(capsys, "catalog", "--dump", "theta7")
    assert rc == 0
    payload = json.loads(out)
    assert payload["D"] == 7 and payload["form"]["k"] == 3


def test_catalog_dump_unknown_is_usage_error(capsys):
    rc, _, err = run(capsys, "catalog", "--dump", "nope")
    assert rc == 2 and "unknown form" in err


def test_operator_payload(capsys):
    rc, out, _ = run(capsys, "operator", "--form", "z8", "--k", "2")
    assert rc == 0
    payload = json.loads(out)
    assert payload["kappa"] == "1"
    assert payload["matrix"]["rows"] == 28 and payload["matrix"]["cols"] == 28


def test_operator_out_file(tmp_path, capsys):
    target = tmp_path / "op.json"
    rc, out, _ = run(capsys, "operator", "--form", "j2", "--k", "1", "--out", str(target))
    assert rc == 0 and out == ""
    assert json.loads(target.read_text())["form"] == "j2"


def test_spectrum_expected(capsys):
    rc, out, _ = run(capsys, "spectrum", "--form", "theta8", "--k", "3", "--expect-suite")
    assert rc == 0
    payload = json.loads(out)
    assert payload["min_poly"] == ["-8/3", "10/3", "1"]
    dims = {e["value"]: e["dim"] for e in payload["eigen"]}
    assert dims == {"-4": 8, "2/3": 48}


def test_lift_below_dimension_rejected(capsys):
    rc, _, err = run(capsys, "lift", "--form", "theta8", "--to", "6")
    assert rc == 2 and "below" in err


def test_lift_dual(capsys):
    rc, out, _ = run(capsys, "lift", "--form", "theta8", "--to", "10", "--dual")
    assert rc == 0
    assert json.loads(out)["lifted"]["k"] == 6


def test_z8_report(capsys):
    rc, out, _ = run(capsys, "z8", "--k", "2")
    assert rc == 0
    payload = json.loads(out)
    assert payload["commutes_with_shift"] is True
    assert all(payload["restricted_sigma_equations"].values())


def test_z8_bad_degree(capsys):
    rc, _, err = run(capsys, "z8", "--k", "5")
    assert rc == 2


def test_verify_unknown_suite(capsys):
    rc, _, err = run(capsys, "verify", "--suite", "bogus")
    assert rc == 2 and "unknown suite" in err


def test_verify_single_passing_suite(capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "g2", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["overall"] == "pass"
    assert payload["suites"][0]["suite"] == "g2"


def test_bad_arguments_exit_two(capsys):
    assert main(["spectrum", "--form", "theta8"]) == 2  # missing --k

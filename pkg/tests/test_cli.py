"""The command-line interface: JSON output, determinism, exit codes."""

import json

import pytest

from gradedhh.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_presets_listing(capsys):
    code, out, _ = run_cli(capsys, "presets")
    assert code == 0
    doc = json.loads(out)
    assert doc["families"] == ["a", "bp", "en", "hh_a"]


def test_presets_with_parameters(capsys):
    code, out, _ = run_cli(capsys, "presets", "--p", "2", "--n", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["bp:2:2"]["generators"] == [
        {"name": "v1", "degree": 2, "laurent": False},
        {"name": "v2", "degree": 6, "laurent": False},
    ]
    assert doc["en:2:2"]["generators"][1]["laurent"] is True


def test_presets_requires_both_parameters(capsys):
    code, _, err = run_cli(capsys, "presets", "--p", "2")
    assert code == 2
    assert "both" in err


def test_hh_dims_output(capsys):
    code, out, _ = run_cli(
        capsys, "hh", "--preset", "a:2:2", "--multidegree", "v1:1,eps:1"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["dims"] == {"-5": 1, "-4": 2, "-3": 1}
    assert doc["internal_degree"] == -5
    assert doc["level_bound"] == 2


def test_hh_empty_multidegree(capsys):
    code, out, _ = run_cli(capsys, "hh", "--preset", "bp:2:1", "--multidegree", "0")
    assert code == 0
    assert json.loads(out)["dims"] == {"0": 1}


def test_hh_unknown_preset_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "hh", "--preset", "xx:2:1", "--multidegree", "0")
    assert code == 2
    assert "unknown preset" in err


def test_hh_bad_multidegree_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "hh", "--preset", "bp:2:1", "--multidegree", "v9:1")
    assert code == 2


def test_hkr_check_passes(capsys):
    code, out, _ = run_cli(
        capsys, "hkr-check", "--preset", "a:2:2", "--max-weight", "3"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["all_equal"] is True
    assert len(doc["rows"]) == 10


def test_obstruction_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "obstruction", "--p", "2", "--n", "2",
                           "--exponents", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_ok"] is True
    assert doc["D_display"] == "v1^4 d(eps) + 4 v1^3 eps d(v1)"

    code, _, err = run_cli(capsys, "obstruction", "--p", "2", "--n", "1")
    assert code == 2
    assert "positive total degree" in err

    code, _, err = run_cli(capsys, "obstruction", "--p", "2", "--n", "2",
                           "--exponents", "x")
    assert code == 2


def test_matrix_dga_with_negative_window(capsys):
    code, out, _ = run_cli(capsys, "matrix-dga", "--p", "2", "--n", "1",
                           "--window", "-8:4")
    assert code == 0
    doc = json.loads(out)
    assert doc["homology"]["dims_match"] is True
    assert doc["eps"]["degree"] == -3
    assert doc["structure"]["d_squared_zero"] is True
    assert doc["all_ok"] is True


def test_quasi_iso_command(capsys):
    code, out, _ = run_cli(capsys, "quasi-iso", "--p", "2", "--n", "1",
                           "--window", "-6:4")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_ok"] is True
    assert doc["graded_commutative"] is True


def test_ore_check_matrix_units(capsys):
    code, out, _ = run_cli(capsys, "ore-check", "--table", "matrix-units",
                           "--s", "e11")
    assert code == 1
    doc = json.loads(out)
    assert doc["verdict"] == "violated"
    assert doc["witness"] == {"x": "e21", "s": "e11"}


def test_ore_check_preset_satisfied(capsys):
    code, out, _ = run_cli(capsys, "ore-check", "--preset", "bp:2:2",
                           "--s", "v2", "--window", "0:12", "--cap", "3")
    assert code == 0
    assert json.loads(out)["verdict"] == "satisfied"


def test_ore_check_needs_exactly_one_source(capsys):
    code, _, err = run_cli(capsys, "ore-check", "--s", "e11")
    assert code == 2
    code, _, err = run_cli(capsys, "ore-check", "--preset", "bp:2:1",
                           "--table", "matrix-units", "--s", "e11")
    assert code == 2


def test_cone_command(capsys):
    code, out, _ = run_cli(capsys, "cone", "--preset", "bp:2:2",
                           "--element", "v2", "--window", "-4:8")
    assert code == 0
    doc = json.loads(out)
    assert doc["regular"] is True
    assert doc["dims_match_quotient"] is True
    assert doc["homology_dims"]["0"] == 1


def test_localize_command(capsys):
    code, out, _ = run_cli(capsys, "localize", "--preset", "bp:2:2",
                           "--generator", "v2")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["generators"][1]["laurent"] is True


def test_bad_window_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "matrix-dga", "--p", "2", "--n", "1",
                           "--window", "4:-8")
    assert code == 2
    assert "LO" in err


def test_out_writes_identical_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "hh", "--preset", "bp:2:1",
                           "--multidegree", "v1:2", "--out", str(path))
    assert code == 0
    assert path.read_text() == out


def test_output_is_deterministic(capsys):
    args = ("obstruction", "--p", "2", "--n", "2", "--exponents", "4")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
    args = ("matrix-dga", "--p", "2", "--n", "2", "--window", "-12:8")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second

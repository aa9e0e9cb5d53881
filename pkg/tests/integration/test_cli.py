import json
import subprocess
import sys

import pytest
import yaml

from splurge_equivariant.cli import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK, run
from splurge_equivariant.config import DEFAULT_CONFIG


def run_cli(args):
    """Run the CLI as a module rather than as a script."""
    cmd = [sys.executable, "-m", "splurge_equivariant.cli", *args]
    return subprocess.run(cmd, capture_output=True, text=True, check=False)


def _build(tmp_path, name, *args, trunc=2):
    out = tmp_path / f"{name}{''.join(args)}.json"
    assert run(["build", name, *args, "--trunc", str(trunc), "-o", str(out)]) == EXIT_OK
    return out


def test_cli_help():
    """Test that help lists the main verbs."""
    result = run_cli(["--help"])
    assert result.returncode == 0
    for verb in ("build", "homology", "quasicat", "segal", "check"):
        assert verb in result.stdout


def test_build_writes_canonical_json(tmp_path):
    """Test that build writes a canonical simplicial set payload."""
    out = _build(tmp_path, "horn", "2", "1")
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["kind"] == "sset"
    assert payload["trunc"] == 2
    assert payload["levels"][0] == 3


def test_build_prints_without_output(capsys):
    """Test that build prints the payload without an output file."""
    assert run(["build", "point", "--trunc", "1"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["levels"] == [1, 1]


def test_quasicat_exit_codes(tmp_path, capsys):
    """Test quasicat exit codes for a simplex and an inner horn."""
    assert run(["quasicat", str(_build(tmp_path, "simplex", "1"))]) == EXIT_OK
    assert run(["quasicat", str(_build(tmp_path, "horn", "2", "1"))]) == EXIT_CHECK_FAILED


def test_homology_of_a_boundary(tmp_path, capsys):
    """Test homology output as JSON and text."""
    path = _build(tmp_path, "boundary", "2", trunc=3)
    capsys.readouterr()
    assert run(["homology", str(path), "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert [d["betti"] for d in payload["degrees"]] == [1, 1, 0]

    assert run(["homology", str(path)]) == EXIT_OK
    assert "H_1 = Z" in capsys.readouterr().out


def test_segal_maps_of_a_transposed_simplex(tmp_path, capsys):
    """Test the segal verb on a transposed simplex."""
    path = _build(tmp_path, "transpose", "1")
    assert run(["segal", str(path)]) == EXIT_OK
    assert "k=2: PASS" in capsys.readouterr().out


def test_orbit_category_summary(capsys):
    """Test the text summary of an orbit category."""
    assert run(["orbit-cat", "Z2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Orbit category of Z2" in out
    assert "objects: 2" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "horn", "2"],
        ["build", "simplex", "two"],
        ["homology", "missing.json"],
    ],
)
def test_input_errors(argv, capsys, tmp_path, monkeypatch):
    """Test exit code 2 for malformed arguments and missing files."""
    monkeypatch.chdir(tmp_path)
    assert run(argv) == EXIT_INPUT_ERROR
    assert "Error:" in capsys.readouterr().err


def test_type_mismatch_names_the_field(tmp_path, capsys):
    """Test that a kind mismatch names the offending field."""
    path = _build(tmp_path, "simplex", "1")
    assert run(["segal", str(path)]) == EXIT_INPUT_ERROR
    assert "(field: kind)" in capsys.readouterr().err


def test_check_rejects_family_without_trivial_subgroup(tmp_path, capsys):
    """Test that check rejects a family without the trivial subgroup."""
    config = tmp_path / "check.yaml"
    config.write_text(
        yaml.safe_dump({"model": "qcat", "group": "Z2", "family": [["0", "1"]], "orbit_comparison": True}),
        encoding="utf-8",
    )
    assert run(["check", str(config)]) == EXIT_INPUT_ERROR
    assert "trivial" in capsys.readouterr().err


def test_check_writes_a_report(tmp_path, capsys):
    """Test that check prints and writes the same report."""
    config = tmp_path / "check.yaml"
    config.write_text(
        yaml.safe_dump({"model": "qcat", "group": "Z2", "trunc": 1, "seeds": 1, "max_dim": 1}),
        encoding="utf-8",
    )
    out = tmp_path / "report.json"
    code = run(["check", str(config), "--json", "-o", str(out), "--budget", "20000"])
    printed = json.loads(capsys.readouterr().out)
    assert code in (0, 1, 3)
    assert printed == json.loads(out.read_text(encoding="utf-8"))
    assert printed["model"] == "qcat"
    assert sum(printed["counts"].values()) == len(printed["results"])
    assert (code == EXIT_OK) == printed["passed"]


@pytest.mark.parametrize(
    ("name", "args", "kind"),
    [
        ("nerve", ("1",), "sset"),
        ("group-nerve", ("Z2",), "sset"),
        ("coherent-nerve", ("1",), "sset"),
        ("reduced-boundary", ("1",), "precat"),
        ("tensor", ("1", "1"), "precat"),
        ("orbit-tensor", ("Z2", "0", "0"), "gobject"),
    ],
)
def test_build_exports_derived_constructions(tmp_path, name, args, kind):
    """Nerves, reductions and tensors are reachable from build."""
    payload = json.loads(_build(tmp_path, name, *args, trunc=1).read_text(encoding="utf-8"))
    assert payload["kind"] == kind


def test_built_nerves_have_the_expected_levels(tmp_path):
    """Test level sizes of built nerves and reductions."""
    nerve = json.loads(_build(tmp_path, "nerve", "1").read_text(encoding="utf-8"))
    assert nerve["levels"] == [2, 3, 4]
    group = json.loads(_build(tmp_path, "group-nerve", "Z2").read_text(encoding="utf-8"))
    assert group["levels"] == [1, 2, 4]
    reduced = json.loads(_build(tmp_path, "reduced-boundary", "1").read_text(encoding="utf-8"))
    assert reduced["grid"][0][0] == 2


def test_orbit_tensor_rejects_a_non_subgroup(capsys):
    """Test orbit-tensor with members that do not form a subgroup."""
    assert run(["build", "orbit-tensor", "S3", "012,120", "0", "--trunc", "1"]) == EXIT_INPUT_ERROR
    assert "Error:" in capsys.readouterr().err


def test_hom_warning_threshold_comes_from_the_environment(tmp_path, monkeypatch, capsys):
    """Test that the warning threshold is read from the environment."""
    monkeypatch.setattr(DEFAULT_CONFIG, "hom_warning_threshold", DEFAULT_CONFIG.hom_warning_threshold)
    monkeypatch.setenv("SPLURGE_EQ_HOM_WARNING_THRESHOLD", "7")
    assert run(["quasicat", str(_build(tmp_path, "simplex", "1"))]) == EXIT_OK
    assert DEFAULT_CONFIG.hom_warning_threshold == 7


def test_simplicial_category_check_runs(tmp_path, capsys):
    """Cell attachments in simplicial categories finish without truncated pushouts."""
    config = tmp_path / "sc.yaml"
    config.write_text(
        yaml.safe_dump({"model": "sc", "group": "Z2", "trunc": 1, "seeds": 1, "max_dim": 1}),
        encoding="utf-8",
    )
    code = run(["check", str(config), "--json"])
    printed = json.loads(capsys.readouterr().out)
    assert code in (EXIT_OK, EXIT_CHECK_FAILED)
    assert printed["model"] == "sc"
    assert all(r["verdict"] != "NONEXACT" for r in printed["results"])

"""End-to-end checks of the command line tool (exit codes, emitted files)."""

import json
import os
import subprocess
import sys
from pathlib import Path

CLI = os.environ.get("KNOTWAVE_CLI")


def run(*args, cwd):
    return subprocess.run([CLI, *args], cwd=cwd, capture_output=True, text=True)


def test_build_emits_samples_and_manifest(tmp_path):
    r = run("build", "--family", "tau-quad", "--level", "0", "--count", "12",
            "--output", "out", cwd=tmp_path)
    assert r.returncode == 0, r.stderr
    csv = (tmp_path / "out" / "basis.csv").read_text().splitlines()
    assert csv[0].startswith("x,")
    assert "bar[2][0]" in csv[0] and "breve[2][0]" in csv[0]
    assert "nan" not in csv[1].lower()
    manifest = json.loads((tmp_path / "out" / "basis_manifest.json").read_text())
    assert manifest["normalized"] is True
    assert manifest["per_knot"][1]["bar"] == 1
    assert manifest["per_knot"][1]["breve"] == 2


def test_json_format(tmp_path):
    r = run("build", "--family", "poly", "--degree", "2", "--knots", "0,1,2",
            "--format", "json", "--sample-points", "11", "--output", "out",
            cwd=tmp_path)
    assert r.returncode == 0, r.stderr
    doc = json.loads((tmp_path / "out" / "basis.json").read_text())
    assert len(doc["samples"]) == 11
    assert len(doc["names"]) == len(doc["samples"][0]["values"])
    manifest = json.loads((tmp_path / "out" / "basis_manifest.json").read_text())
    assert manifest["family"] == "poly" and manifest["degree"] == 2


def test_usage_errors(tmp_path):
    r = run("build", "--family", "quad", "--theta", "1.2", "--knots", "0,1,2",
            "--output", "out", cwd=tmp_path)
    assert r.returncode == 2
    r = run("build", "--family", "nope", "--output", "out", cwd=tmp_path)
    assert r.returncode == 2
    r = run("build", cwd=tmp_path)
    assert r.returncode == 2


def test_verify_pass_and_perturbed_fail(tmp_path):
    r = run("verify", "--family", "quad", "--theta", "0.37",
            "--knots", "0,1,2.5,3,4", "--output", "ok", cwd=tmp_path)
    assert r.returncode == 0, r.stdout + r.stderr
    report = json.loads((tmp_path / "ok" / "verify_report.json").read_text())
    assert report["pass"] is True

    r = run("verify", "--family", "quad", "--theta", "0.37",
            "--knots", "0,1,2.5,3,4", "--perturb", "1e-3",
            "--output", "bad", cwd=tmp_path)
    assert r.returncode == 4
    report = json.loads((tmp_path / "bad" / "verify_report.json").read_text())
    assert report["pass"] is False


def test_wavelets_incompatible_refinement(tmp_path):
    r = run("wavelets", "--family", "quad", "--knots", "0,1,2,3", "--theta", "0.5",
            "--knots1", "0,0.4,1,2,3", "--output", "w", cwd=tmp_path)
    assert r.returncode == 3
    assert "incompatib" in r.stderr


def test_wavelet_outputs(tmp_path):
    r = run("wavelets", "--family", "tau-quad", "--level", "0", "--count", "12",
            "--output", "w", cwd=tmp_path)
    assert r.returncode == 0, r.stderr
    out = tmp_path / "w"
    for name in ("wavelets.csv", "wavelets_manifest.json", "dimension_report.json",
                 "cd_tables.json", "cd_tables.csv"):
        assert (out / name).exists(), name
    rep = json.loads((out / "dimension_report.json").read_text())
    assert rep["pass"] is True
    tables = json.loads((out / "cd_tables.json").read_text())
    assert len(tables["tables"]) == 22


if __name__ == "__main__":
    sys.exit(os.system(f"{sys.executable} -m pytest {Path(__file__)} -q") >> 8)

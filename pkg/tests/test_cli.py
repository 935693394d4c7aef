"""End-to-end runs of the console entry point in a subprocess."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

import idealis
from idealis import corpus
from idealis.monoid import to_text

SRC = str(Path(idealis.__file__).resolve().parent.parent)


def run_cli(*args, env=None, cwd=None):
    full_env = dict(os.environ)
    full_env["PYTHONPATH"] = SRC + os.pathsep + full_env.get("PYTHONPATH", "")
    full_env.update(env or {})
    return subprocess.run([sys.executable, "-m", "idealis.cli", *args],
                          capture_output=True, text=True, env=full_env,
                          cwd=cwd)


@pytest.fixture(scope="module")
def specs(tmp_path_factory):
    dest = tmp_path_factory.mktemp("specs")
    for e in corpus.members("named"):
        (dest / f"{e.name}.spec").write_text(to_text(e.model))
    return dest


def test_factor_chain_golden(specs):
    r = run_cli("factor", str(specs / "n2.spec"), "--element", "2,1",
                "--system", "t")
    assert r.returncode == 0
    assert r.stdout == "n2 t-chain: [1,1] | [1,0]\n"


def test_factor_failure_reports_not_errors(specs):
    r = run_cli("factor", str(specs / "gap23.spec"), "--element", "2",
                "--system", "t")
    assert r.returncode == 0
    assert "NonPrincipalRadical" in r.stdout


def test_closure_golden(specs):
    r = run_cli("closure", str(specs / "gap23.spec"), "--element", "3",
                "--system", "t")
    assert r.returncode == 0
    assert r.stdout == "gap23 t-closure: [3] (already closed)\n"


def test_verify_suite_golden(specs):
    r = run_cli("verify", str(specs / "gap23.spec"), "--suite", "Thm4.2")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "gap23 Thm4.2: agreement"
    assert len([l for l in lines if " false " in l]) == 4
    assert "almost Dedekind" in lines[1]


def test_spectrum_golden(specs):
    r = run_cli("spectrum", str(specs / "n2.spec"))
    assert r.stdout.splitlines() == [
        "n2 prime {0}: height 1, t-closed, t-max",
        "n2 prime {1}: height 1, t-closed, t-max",
        "n2 prime {}: height 2",
    ]


def test_analyze_text_summary(specs):
    r = run_cli("analyze", str(specs / "gap23.spec"))
    assert r.returncode == 0
    assert "gap23: certified, radius 8" in r.stdout
    assert "  s-matrix: 11 true, 23 false, 0 unknown" in r.stdout
    assert "  axioms: s ok  t ok  w ok" in r.stdout


def test_analyze_json_is_byte_deterministic(specs):
    args = ("analyze", str(specs / "gap23.spec"), str(specs / "nxz.spec"),
            "--json", "--radius", "6")
    a, b = run_cli(*args), run_cli(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert set(doc) == {"schema", "version", "command", "config", "reports"}
    assert doc["schema"] == 1
    assert doc["command"] == "analyze"
    assert [r["monoid"] for r in doc["reports"]] == ["gap23", "nxz"]


def test_json_config_echoes_arguments(specs):
    r = run_cli("analyze", str(specs / "gap23.spec"), "--json",
                "--radius", "5", "--seed", "9")
    doc = json.loads(r.stdout)
    assert doc["config"]["radius"] == 5
    assert doc["config"]["seed"] == 9
    assert doc["config"]["strict"] is False
    assert doc["config"]["inputs"] == [str(specs / "gap23.spec")]


def test_radius_env_default(specs):
    r = run_cli("analyze", str(specs / "gap23.spec"), "--json",
                env={"IDEALIS_RADIUS": "6"})
    assert json.loads(r.stdout)["config"]["radius"] == 6
    r = run_cli("analyze", str(specs / "gap23.spec"), "--json",
                "--radius", "5", env={"IDEALIS_RADIUS": "6"})
    assert json.loads(r.stdout)["config"]["radius"] == 5   # flag wins
    r = run_cli("analyze", str(specs / "gap23.spec"),
                env={"IDEALIS_RADIUS": "zero"})
    assert r.returncode == 2


def test_csv_projection(specs):
    r = run_cli("analyze", str(specs / "gap23.spec"), "--csv", "--radius", "6")
    lines = r.stdout.splitlines()
    assert lines[0] == "monoid,path,value"
    assert all(l.startswith("gap23,") for l in lines[1:])
    assert any(",systems.t.local.verdict,true" in l for l in lines)


def test_directory_input_sorts_members(specs):
    r = run_cli("spectrum", str(specs), "--json")
    doc = json.loads(r.stdout)
    names = [rep["monoid"] for rep in doc["reports"]]
    assert names == sorted(names)
    assert len(names) == 14


def test_timing_goes_to_stderr_not_stdout(specs):
    r = run_cli("analyze", str(specs / "gap23.spec"), "--json", "--radius", "6")
    assert "total:" in r.stderr
    assert "total:" not in r.stdout


def test_uncertified_is_reported_not_fatal(specs):
    r = run_cli("closure", str(specs / "affine1.spec"), "--element", "1,1")
    assert r.returncode == 0
    assert "uncertified" in r.stdout
    r = run_cli("closure", str(specs / "affine1.spec"), "--element", "1,1",
                "--strict")
    assert r.returncode == 1


@pytest.mark.parametrize("args,fragment", [
    (("analyze", "/does/not/exist.spec"), "exist"),
    (("closure", "SPEC", "--element", "1,2,3", "--system", "t"),
     "3 coordinates"),
    (("closure", "SPEC", "--element", "2", "--system", "q"), "unknown ideal system"),
    (("closure", "SPEC", "--element", "x"), "element"),
    (("analyze", "SPEC", "--radius", "0"), "radius"),
])
def test_usage_errors_exit_two(specs, args, fragment):
    args = [str(specs / "gap23.spec") if a == "SPEC" else a for a in args]
    r = run_cli(*args)
    assert r.returncode == 2
    assert fragment in r.stderr


def test_parse_errors_name_the_file(tmp_path):
    bad = tmp_path / "bad.spec"
    bad.write_text("coord = widget 3\n")
    r = run_cli("analyze", str(bad))
    assert r.returncode == 2
    assert "bad.spec" in r.stderr and "line 1" in r.stderr


def test_corpus_listing():
    r = run_cli("corpus", "--json")
    doc = json.loads(r.stdout)
    rows = doc["reports"]
    assert len(rows) == 593
    assert rows[0] == {"name": "n1", "family": "named", "certified": True,
                       "dim": 1, "note": "factorial"}
    families = {row["family"] for row in rows}
    assert families == {"named", "frobenius15"}
    assert sum(row["family"] == "frobenius15" for row in rows) == 579


def test_corpus_build(tmp_path):
    r = run_cli("corpus", "--family", "named", "--dest", str(tmp_path))
    assert r.returncode == 0
    files = sorted(p.name for p in tmp_path.glob("*.spec"))
    assert len(files) == 14
    assert "gap23.spec" in files and "affine1.spec" in files


def test_version():
    r = run_cli("--version")
    assert r.returncode == 0
    assert idealis.__version__ in r.stdout

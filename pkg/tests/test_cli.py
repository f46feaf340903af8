"""The command-line interface: round-trips, determinism, exit codes,
and every command shown in the README."""

import json
import re
import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from cflat import cli, serialize
from cflat.errors import InternalCheckError
from cflat.zlinalg import IntMatrix

REPO_ROOT = Path(__file__).resolve().parent.parent


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_snf_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "snf", "--matrix", "[[2,4],[6,8]]")
    assert code == 0
    payload = json.loads(out)
    assert payload["divisors"] == [2, 4]
    d = serialize.matrix_from_json(payload["d"])
    u = serialize.matrix_from_json(payload["u"])
    v = serialize.matrix_from_json(payload["v"])
    assert u * IntMatrix([[2, 4], [6, 8]]) * v == d
    assert abs(u.det()) == 1 and abs(v.det()) == 1


def test_snf_reads_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("[[6]]"))
    code, out, _ = run_cli(capsys, "snf")
    assert code == 0
    assert json.loads(out)["divisors"] == [6]


def test_snf_accepts_string_entries(capsys):
    huge = str(10**40)
    code, out, _ = run_cli(capsys, "snf", "--matrix", f'[["{huge}"]]')
    assert code == 0
    assert json.loads(out)["divisors"] == [10**40]


def test_h1_verb(capsys):
    code, out, _ = run_cli(capsys, "h1", "--g0", "[[0,-1],[1,-1]]")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 3
    assert payload["group"]["name"] == "Z/3"
    assert payload["cardinality"] == payload["formula_value"] == 3
    assert payload["certificate"] == "inconclusive"


def test_homology_verb_all_names(capsys):
    from cflat.bieberbach import CATALOG_NAMES

    for name in CATALOG_NAMES:
        code, out, _ = run_cli(capsys, "homology", "--group", name)
        assert code == 0
        assert json.loads(out)["name"] == name


def test_classify_verb(capsys):
    code, out, _ = run_cli(capsys, "classify", "--base", "K", "--dim", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 5
    assert payload["count_matches_published"] is True
    code, out, _ = run_cli(capsys, "classify", "--base", "K", "--dim", "5")
    payload = json.loads(out)
    assert payload["count"] == 6 and payload["published_count"] == 5
    assert payload["count_matches_published"] is False
    code, out, _ = run_cli(
        capsys, "classify", "--base", "T2", "--dim", "4", "--format", "tsv"
    )
    assert code == 0
    assert out.startswith("label\t") and len(out.rstrip("\n").split("\n")) == 4


def test_output_is_byte_deterministic(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "classify", "--base", "K", "--dim", "6")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    assert outs[0].endswith("\n")


def test_equivalence_verbs(tmp_path, capsys):
    left = tmp_path / "left.json"
    right = tmp_path / "right.json"
    left.write_text(
        json.dumps(
            {"base": "K", "summands": [{"kind": "real", "free": ["1/2"], "torsion": ["1/2"]}]}
        )
    )
    right.write_text(
        json.dumps(
            {"base": "K", "summands": [{"kind": "real", "free": ["0"], "torsion": ["1/2"]}]}
        )
    )
    code, out, _ = run_cli(capsys, "affine-eq", "--left", f"@{left}", "--right", f"@{right}")
    assert code == 0
    assert json.loads(out)["equivalent"] is True
    code, out, _ = run_cli(capsys, "stable-eq", "--left", f"@{left}", "--right", f"@{right}")
    assert code == 0
    payload = json.loads(out)
    assert payload["equivalent"] is True
    assert payload["left"]["w1_orbit_min"] == payload["right"]["w1_orbit_min"]


def test_moduli_verb(capsys):
    code, out, _ = run_cli(capsys, "moduli", "--space", "T2xR2", "--angles", "1/2,0")
    assert code == 0
    assert json.loads(out)["canonical"] == ["0", "1/2"]
    code, out, _ = run_cli(capsys, "moduli", "--space", "S1xR3", "--angles", "2/3")
    assert json.loads(out)["canonical"] == ["1/3"]
    code, out, _ = run_cli(capsys, "moduli", "--space", "TK", "--angles", "1/2,1/2")
    assert json.loads(out)["canonical"] == ["1/2", "0"]


def test_dim4_and_bound_and_family(capsys):
    code, out, _ = run_cli(capsys, "dim4-table")
    assert code == 0
    assert json.loads(out)["count"] == 14
    code, out, _ = run_cli(capsys, "bound", "--rank", "2", "--order", "2", "--fiber-dim", "1")
    assert json.loads(out)["bound"] == 6
    code, out, _ = run_cli(capsys, "family", "--base", "T2", "--count", "3")
    payload = json.loads(out)
    assert payload["count"] == 3
    assert payload["members"][0]["summands"][0]["free"] == ["1/2", "0"]


def test_domain_errors_exit_one(capsys):
    code, _, err = run_cli(capsys, "snf", "--matrix", "[[1,2],[3]]")
    assert code == 1 and "error:" in err
    code, _, err = run_cli(capsys, "snf", "--matrix", "not json")
    assert code == 1
    code, _, err = run_cli(capsys, "h1", "--g0", "[[2]]")
    assert code == 1
    code, _, err = run_cli(capsys, "homology", "--group", "Q8")
    assert code == 1
    code, _, err = run_cli(capsys, "moduli", "--space", "T2xR2", "--angles", "1/2")
    assert code == 1
    # argparse problems are input problems too
    code, _, err = run_cli(capsys, "no-such-verb")
    assert code == 1
    code, _, err = run_cli(capsys, "classify", "--base", "RP2", "--dim", "4")
    assert code == 1


def test_internal_check_exits_two(monkeypatch, capsys):
    def boom(*args, **kwargs):
        raise InternalCheckError("forced")

    monkeypatch.setattr(cli, "smith_normal_form", boom)
    code, _, err = run_cli(capsys, "snf", "--matrix", "[[1]]")
    assert code == 2 and "internal check failed" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cflat", "homology", "--group", "G6"],
        capture_output=True,
        text=True,
        cwd=REPO_ROOT,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["h1"]["name"] == "Z/4 + Z/4"


def test_readme_commands_run_clean(capsys):
    """Every ``cflat ...`` line in the README must exit 0."""
    readme = (REPO_ROOT / "README.md").read_text()
    commands = re.findall(r"^\$?\s*(cflat\s+\S.*)$", readme, flags=re.MULTILINE)
    assert len(commands) >= 8, "README should demonstrate the CLI verbs"
    for line in commands:
        argv = shlex.split(line)[1:]
        code = cli.main(argv)
        captured = capsys.readouterr()
        assert code == 0, f"README command failed: {line}\n{captured.err}"

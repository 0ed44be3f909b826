import json
import subprocess
import sys
from pathlib import Path

DATA = Path(__file__).parent / "data"


def run_cli(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "epg", *args],
                          capture_output=True, text=True, cwd=cwd)


def test_analyze_dihedral_all_classes_positive():
    r = run_cli("analyze", "D(12)")
    assert r.returncode == 0, r.stderr
    payload = json.loads(r.stdout)
    assert payload["schema"] == 1 and payload["kind"] == "analysis"
    assert payload["group"]["family"] == "dihedral"
    members = {k: v["member"] for k, v in payload["classes"].items()}
    assert members == {"split": True, "threshold": True, "chordal": True, "cograph": True}


def test_analyze_z6z6_witness():
    r = run_cli("analyze", "Z(6) x Z(6)", "--witness")
    assert r.returncode == 0, r.stderr
    payload = json.loads(r.stdout)
    ch = payload["classes"]["chordal"]
    assert not ch["member"]
    assert ch["witness"]["pattern"].startswith("C")
    assert "labels" in ch["witness"]


def test_analyze_s6_negative_classes():
    r = run_cli("analyze", "S(6)", "--classes", "cograph,chordal")
    assert r.returncode == 0, r.stderr
    payload = json.loads(r.stdout)
    assert payload["classes"]["cograph"]["member"] is False
    assert payload["classes"]["chordal"]["member"] is False


def test_analyze_parse_error_exit_2():
    r = run_cli("analyze", "W(3)")
    assert r.returncode == 2
    assert "error" in r.stderr


def test_analyze_cap_exit_3():
    r = run_cli("analyze", "S(5)", "--build-cap", "50")
    assert r.returncode == 3


def test_analyze_spec_file(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(
        {"name": "V4", "construct": {"kind": "elementary_abelian", "p": 2, "k": 2}}))
    r = run_cli("analyze", str(path))
    assert r.returncode == 0
    assert json.loads(r.stdout)["group"]["order"] == 4


def test_adjacency_exit_codes():
    assert run_cli("adjacency", "S", "7", "(1 2 3)", "(4 5)").returncode == 0
    assert run_cli("adjacency", "S", "7", "(1 2 3)", "(1 2 7)").returncode == 1
    assert run_cli("adjacency", "S", "6", "(1 2)", "(2 3 4)").returncode == 1
    assert run_cli("adjacency", "A", "6", "(1 2)", "(3 4 5)").returncode == 2
    assert run_cli("adjacency", "S", "6", "(1 2", "(3 4)").returncode == 2


def test_adjacency_output_words():
    r = run_cli("adjacency", "S", "6", "(1 2)", "(3 4 5)")
    assert r.stdout.strip() == "adjacent"


def test_verify_unknown_check():
    r = run_cli("verify", "no-such-check")
    assert r.returncode == 2


def test_verify_single_check(tmp_path):
    out = tmp_path / "suite.json"
    r = run_cli("verify", "rem-sn-cycles", "--json", str(out))
    assert r.returncode == 0, r.stderr
    payload = json.loads(out.read_text())
    assert payload["kind"] == "suite"
    assert payload["all_pass"] is True
    assert payload["manifest"][0] == "lem-hereditary"


def test_import_valid_and_invalid(tmp_path):
    table = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    good = {"name": "Z4", "construct": {"kind": "cayley_table", "table": table}}
    bad_table = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]
    bad = {"name": "broken", "construct": {"kind": "cayley_table", "table": bad_table}}
    path = tmp_path / "cat.json"
    path.write_text(json.dumps([good, bad]))
    r = run_cli("import", str(path))
    assert r.returncode == 0
    assert "1 group(s) imported" in r.stdout
    assert "triple" in r.stderr


def test_import_unreadable_exit_2(tmp_path):
    r = run_cli("import", str(tmp_path / "missing.json"))
    assert r.returncode == 2


def test_import_order24_fixture():
    r = run_cli("import", str(DATA / "order24_catalog.json"))
    assert r.returncode == 0
    assert "15 group(s) imported" in r.stdout


def test_analyze_preset_and_paranoid():
    r = run_cli("analyze", '"z3_semidirect_d8"', "--paranoid")
    assert r.returncode == 0, r.stderr
    payload = json.loads(r.stdout)
    assert payload["group"]["order"] == 24
    assert payload["classes"]["cograph"]["member"] is False
    assert payload["classes"]["chordal"]["member"] is True


def test_verify_with_imported_catalog(tmp_path):
    out = tmp_path / "suite.json"
    r = run_cli("verify", "census-24", "--catalog", str(DATA / "order24_catalog.json"),
                "--json", str(out))
    assert r.returncode == 0, r.stderr
    payload = json.loads(out.read_text())
    section = next(c for c in payload["checks"] if c["id"] == "census-24")
    imported = next(o for o in section["outcomes"] if "imported" in o["group"])
    assert imported["data"]["non_cograph"] == 2
    assert imported["data"]["imported"] == 15


def test_dot_output_is_stable(tmp_path):
    p1, p2 = tmp_path / "a.dot", tmp_path / "b.dot"
    for p in (p1, p2):
        r = run_cli("analyze", "Q(8)", "--dot", str(p), "--json", str(tmp_path / "r.json"))
        assert r.returncode == 0
    assert p1.read_bytes() == p2.read_bytes()
    text = p1.read_text()
    assert text.startswith("graph epg {")
    assert text.count("--") == 16  # three K4 cliques sharing the (e, x^2) edge

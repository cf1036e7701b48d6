import json
import math
import subprocess
import sys

import pytest

from psombor.cli import run


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.edges"
    path.write_text("# path on four vertices\n0 1\n1 2\n2 3\n")
    return str(path)


def test_spectrum_json_eigenvalues(p4_file, capsys):
    code = run(["spectrum", "--input", p4_file, "--p", "2", "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"] == 1
    eigs = payload["results"][0]["decomposition"]["eigenvalues"]
    expect = [math.sqrt(9 + math.sqrt(56)), math.sqrt(9 - math.sqrt(56))]
    assert eigs[0] == pytest.approx(expect[0], abs=1e-9)
    assert eigs[1] == pytest.approx(expect[1], abs=1e-9)
    assert eigs[2] == pytest.approx(-expect[1], abs=1e-9)


def test_spectrum_table_six_decimals(p4_file, capsys):
    assert run(["spectrum", "--input", p4_file, "--p", "2"]) == 0
    out = capsys.readouterr().out
    assert "4.059965" in out and "1.231538" in out


def test_spectrum_json_graph_input(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2]]}))
    assert run(["spectrum", "--input", str(path), "--p", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["graph"]["n"] == 3


def test_spectrum_multiple_p(p4_file, capsys):
    assert run(["spectrum", "--input", p4_file, "--p", "1,2,-1"]) == 0
    out = capsys.readouterr().out
    assert out.count("p = ") == 3


def test_p_list_starting_with_negative(p4_file, capsys):
    # space-separated form: the value token itself starts with a minus sign
    assert run(["spectrum", "--input", p4_file, "--p", "-1,2"]) == 0
    out = capsys.readouterr().out
    assert out.count("p = ") == 2


def test_spectrum_rejects_p_zero(p4_file, capsys):
    assert run(["spectrum", "--input", p4_file, "--p", "0"]) == 1


def test_missing_input_is_io_error(capsys):
    assert run(["spectrum", "--input", "/nonexistent.edges"]) == 1


def test_unknown_flag_usage_error(capsys):
    assert run(["spectrum", "--nope"]) == 1


def test_verify_trees_exit_zero(capsys):
    code = run(["verify", "--corpus", "trees", "--n", "4..6",
                "--p", "1,2,3", "--seed", "42"])
    assert code == 0
    out = capsys.readouterr().out
    assert "fail 0" in out


def test_verify_directory_corpus(tmp_path, capsys):
    (tmp_path / "a.edges").write_text("0 1\n1 2\n")
    (tmp_path / "b.json").write_text('{"n": 4, "edges": [[0, 1], [2, 3]]}')
    (tmp_path / "broken.edges").write_text("0 0\n")  # self-loop: unreadable entry
    code = run(["verify", "--corpus", str(tmp_path), "--p", "2",
                "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0  # the broken entry is recorded, the suite continues
    assert payload["graphs_checked"] == 2
    assert payload["corpus_errors"][0]["file"] == "broken.edges"


def test_verify_unknown_corpus_is_usage_error(capsys):
    assert run(["verify", "--corpus", "bogus"]) == 1


def test_verify_exit_two_on_forced_violation(capsys):
    # a negative tolerance makes every inequality fail, driving exit code 2
    code = run(["verify", "--corpus", "special", "--p", "2", "--tol", "-1"])
    assert code == 2


def test_verify_json_deterministic(tmp_path):
    args = ["verify", "--corpus", "families", "--p", "2", "--format", "json"]
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run(args + ["--out", str(f1)]) == 0
    assert run(args + ["--out", str(f2)]) == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_verify_jobs_matches_serial(tmp_path):
    base = ["verify", "--corpus", "trees", "--n", "4..5", "--p", "2",
            "--format", "json"]
    f1, f2 = tmp_path / "s.json", tmp_path / "p.json"
    assert run(base + ["--out", str(f1)]) == 0
    assert run(base + ["--jobs", "2", "--out", str(f2)]) == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_trees_listing(capsys):
    assert run(["trees", "--n", "8", "--max-degree", "4", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 18
    assert all(len(t["edges"]) == 7 for t in payload["trees"])
    assert len({t["key"] for t in payload["trees"]}) == 18


def test_trees_edge_archive_text(capsys):
    assert run(["trees", "--n", "4"]) == 0
    out = capsys.readouterr().out
    assert out.count("key ") == 2


def test_trees_verify_extremes(capsys):
    assert run(["trees", "--n", "6", "--p", "1,2,3", "--verify-extremes"]) == 0
    out = capsys.readouterr().out
    assert "star=True" in out and "path=True" in out


def test_trees_rank(capsys):
    assert run(["trees", "--n", "7", "--rank", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["ranked"]) == 4


def test_regress_from_csv(tmp_path, capsys):
    csv_path = tmp_path / "d.csv"
    csv_path.write_text("No.,BP,SE\n1,10,1\n2,20,2\n3,30,3\n")
    scatter = tmp_path / "sc.csv"
    code = run(["regress", "--input", str(csv_path), "--x", "SE", "--y", "BP",
                "--scatter", str(scatter), "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["fit"]["slope"] == pytest.approx(10.0)
    assert scatter.read_text().startswith("SE,BP")


def test_reproduce_reports_known_row_mismatch(capsys):
    # fits all reproduce; the octane crosscheck flags the one bad table row,
    # so the verification exit code is 2
    code = run(["reproduce", "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert payload["all_fits_within_tolerance"] is True
    assert payload["octane_crosscheck"]["is_bijection"] is False
    assert code == 2


def test_spectrum_vectors_emitted(p4_file, capsys):
    assert run(["spectrum", "--input", p4_file, "--p", "2", "--vectors",
                "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    vecs = payload["results"][0]["eigenvectors"]
    assert len(vecs) == 4 and len(vecs[0]) == 4


def test_spectrum_json_byte_identical(p4_file, tmp_path):
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    args = ["spectrum", "--input", p4_file, "--p", "2,3", "--format", "json"]
    assert run(args + ["--out", str(f1)]) == 0
    assert run(args + ["--out", str(f2)]) == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_tolerance_env_var(monkeypatch):
    from psombor import config
    monkeypatch.setenv("PSOMBOR_TOL", "1e-5")
    assert config.default_holds_tol() == 1e-5
    monkeypatch.setenv("PSOMBOR_TOL", "garbage")
    assert config.default_holds_tol() == config.HOLDS_REL_TOL
    monkeypatch.delenv("PSOMBOR_TOL")
    assert config.default_holds_tol() == config.HOLDS_REL_TOL


def test_spectrum_csv_format(p4_file, capsys):
    assert run(["spectrum", "--input", p4_file, "--p", "2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("p,eigenvalue_index,eigenvalue")
    assert len(lines) == 5  # header + one row per eigenvalue
    assert float(lines[1].split(",")[2]) == pytest.approx(
        math.sqrt(9 + math.sqrt(56)), abs=1e-12)


def test_verify_csv_format(capsys):
    assert run(["verify", "--corpus", "special", "--p", "2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "check_id,pass,fail,na,observe_pass,observe_fail"
    assert len(lines) > 10


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "psombor", "--version"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "psombor" in out.stdout


def test_subprocess_exit_codes(tmp_path):
    # 0: clean verify; 1: usage error; 2: forced violation
    ok = subprocess.run([sys.executable, "-m", "psombor", "verify",
                         "--corpus", "special", "--p", "2"],
                        capture_output=True)
    assert ok.returncode == 0
    usage = subprocess.run([sys.executable, "-m", "psombor", "spectrum",
                            "--bogus-flag"], capture_output=True)
    assert usage.returncode == 1
    forced = subprocess.run([sys.executable, "-m", "psombor", "verify",
                             "--corpus", "special", "--p", "2", "--tol", "-1"],
                            capture_output=True)
    assert forced.returncode == 2

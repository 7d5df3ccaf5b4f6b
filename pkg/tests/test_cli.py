import json
import subprocess
import sys

import pytest

from tribmat.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_single(capsys):
    code, out, _ = run_cli(capsys, "compute", "--seq", "H", "--n", "7")
    assert code == 0
    assert out.strip() == "47"


def test_compute_k_zero(capsys):
    code, out, _ = run_cli(capsys, "compute", "--seq", "K", "--n", "0")
    assert code == 0
    assert out.strip() == "3"


def test_compute_range_csv(capsys):
    code, out, _ = run_cli(capsys, "compute", "--seq", "H", "--range", "0:5", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,value"
    assert len(lines) == 7
    assert lines[1] == "0,3"
    assert lines[-1] == "5,14"


def test_compute_negative_range(capsys):
    # a leading minus needs the --flag=value form so argparse keeps it whole
    code, out, _ = run_cli(capsys, "compute", "--seq", "T", "--range=-2:2")
    assert code == 0
    assert out.split() == ["1", "0", "0", "1", "1"]


def test_compute_json_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "compute", "--seq", "H", "--range", "0:5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == json.loads(json.dumps(doc))
    assert doc["seq"] == "H"
    assert doc["values"][3] == {"n": 3, "value": 5}


def test_compute_flag_errors(capsys):
    code, _, _ = run_cli(capsys, "compute", "--seq", "H")
    assert code == 2
    code, _, _ = run_cli(capsys, "compute", "--seq", "X", "--n", "1")
    assert code == 2
    code, _, _ = run_cli(capsys, "compute", "--seq", "H", "--range", "5-7")
    assert code == 2
    code, _, _ = run_cli(capsys, "compute", "--seq", "H", "--n", "1", "--range", "0:2")
    assert code == 2


def test_verify_single_id(capsys):
    code, out, _ = run_cli(capsys, "verify", "--id", "cubic-identity-41", "--range", "3:300")
    assert code == 0
    assert "PASS" in out


def test_verify_unknown_id(capsys):
    code, _, _ = run_cli(capsys, "verify", "--id", "no-such-id", "--range", "0:10")
    assert code == 2


def test_verify_all_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--all", "--range", "0:40", "--bits", "128", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"reports"}
    assert len(doc["reports"]) == 17
    for report in doc["reports"]:
        assert set(report) == {"id", "lo", "hi", "bits", "status", "checked", "first_failure"}
        assert report["status"] == "pass"
        assert report["first_failure"] is None
    # round-trip: parse(serialize(x)) == x
    assert json.loads(json.dumps(doc)) == doc


def test_verify_exit_one_on_failure(capsys, monkeypatch):
    from tribmat import Corruption, Seq
    import tribmat.cli as cli_mod

    original = cli_mod.verify_all
    monkeypatch.setattr(
        cli_mod,
        "verify_all",
        lambda lo, hi, p: original(lo, hi, p, corruption=Corruption(Seq.H, 5, 1)),
    )
    code, out, _ = run_cli(capsys, "verify", "--all", "--range", "0:30", "--format", "json")
    assert code == 1
    doc = json.loads(out)
    failing = [r for r in doc["reports"] if r["status"] == "fail"]
    assert failing
    assert failing[0]["first_failure"]["n"] is not None


def test_roots_plain(capsys):
    code, out, _ = run_cli(capsys, "roots", "--bits", "128")
    assert code == 0
    alpha_line = next(line for line in out.split("\n") if line.startswith("alpha"))
    assert alpha_line.split(" = ")[1].startswith("1.8392867552141611")


def test_roots_power(capsys):
    code, out, _ = run_cli(capsys, "roots", "--power", "3")
    assert code == 0
    assert "K_n = 7" in out
    assert "R_n = 5" in out
    assert "y1 = 6.22226252312" in out


def test_roots_power_one_y1_is_alpha(capsys):
    code, out, _ = run_cli(capsys, "roots", "--power", "1", "--bits", "128")
    assert code == 0
    lines = dict(line.split(" = ") for line in out.strip().split("\n"))
    assert lines["y1"][:30] == lines["alpha"][:30]


def test_roots_csv_header(capsys):
    code, out, _ = run_cli(capsys, "roots", "--format", "csv")
    assert code == 0
    assert out.split("\n")[0] == "name,value"


def test_bench_csv(capsys):
    code, out, _ = run_cli(capsys, "bench", "--max-exp", "5", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "method,n,wall_nanoseconds,digits"
    assert len(lines) == 16


def test_bench_json_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "bench", "--max-exp", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["records"]) == 9
    assert json.loads(json.dumps(doc)) == doc
    for record in doc["records"]:
        assert set(record) == {"method", "n", "wall_nanoseconds", "digits"}


def test_bench_flag_error(capsys):
    code, _, _ = run_cli(capsys, "bench")
    assert code == 2


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "tribmat", "compute", "--seq", "H", "--n", "7"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "47"

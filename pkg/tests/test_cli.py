"""CLI harness: subcommands, exit codes, reproducibility."""
import json

import pytest

from minor_toolkit import generators
from minor_toolkit.cli import main
from minor_toolkit.graph6 import encode_graph6


@pytest.fixture
def g6file(tmp_path):
    p = tmp_path / "graphs.g6"
    p.write_text(encode_graph6(generators.complete(5)) + "\n"
                 + encode_graph6(generators.petersen()) + "\n")
    return str(p)


def run(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_k5_record(g6file, capsys):
    code, out, _ = run(capsys, ["analyze", "--input", g6file])
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    k5 = recs[0]
    assert k5["chi"] == 5 and k5["hadwiger"] == 5
    assert k5["rho"] == {"num": 5, "den": 1}


def test_analyze_empty_input(tmp_path, capsys):
    p = tmp_path / "empty.g6"
    p.write_text("")
    code, out, err = run(capsys, ["analyze", "--input", str(p)])
    assert code == 0
    assert out == ""
    assert "warning" in err


def test_analyze_corrupted_line(tmp_path, capsys):
    p = tmp_path / "bad.g6"
    p.write_text("D~{\nD~\n")
    code, out, _ = run(capsys, ["analyze", "--input", str(p)])
    recs = [json.loads(line) for line in out.splitlines()]
    errs = [r for r in recs if "error" in r]
    assert errs and ":2" in errs[0]["error"]
    # the file failed wholesale and was the only input
    assert code == 2


def test_analyze_generate_deterministic(capsys):
    argv = ["analyze", "--generate", "gnp(20,0.4)", "--seed", "5", "--count", "3"]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert len(out1.splitlines()) == 3


def test_analyze_dimacs(tmp_path, capsys):
    p = tmp_path / "k4.col"
    p.write_text("p edge 4 6\n" + "".join(
        f"e {u} {v}\n" for u in range(1, 5) for v in range(u + 1, 5)))
    code, out, _ = run(capsys, ["analyze", "--input", str(p)])
    assert code == 0
    assert json.loads(out.splitlines()[0])["chi"] == 4


def test_analyze_gate_override(g6file, capsys):
    code, out, _ = run(capsys, ["analyze", "--input", g6file, "--gates", "chi=4"])
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert "chi" not in recs[1] or recs[1].get("chi") is None


def test_analyze_unknown_gate(g6file, capsys):
    code, _, _ = run(capsys, ["analyze", "--input", g6file, "--gates", "zeta=9"])
    assert code == 2


def test_extract_dense(tmp_path, capsys):
    p = tmp_path / "in.g6"
    p.write_text(encode_graph6(generators.planted_dense(70, 18, 0.9, 0.05, 2)) + "\n")
    code, out, _ = run(capsys, ["extract", "--input", str(p), "--op", "small_dense",
                                "--t", "3", "--k", "4", "--profile", "desk-small",
                                "--verify"])
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["outcome"] == "dense_subgraph"
    assert rec["verified"] is True


def test_extract_rejection(capsys):
    code, out, _ = run(capsys, ["extract", "--generate", "cycle(100)", "--op",
                                "small_dense", "--t", "3", "--k", "4",
                                "--profile", "desk-small"])
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["outcome"] == "rejected"


def test_extract_paper_profile_refuses(capsys):
    code, out, _ = run(capsys, ["extract", "--generate", "complete(10)", "--op",
                                "small_dense", "--t", "2", "--k", "3",
                                "--profile", "paper"])
    assert code == 2
    rec = json.loads(out.splitlines()[0])
    assert rec["outcome"] == "refused"
    assert "symbolic" in rec["reason"]


def test_extract_unknown_profile(capsys):
    code, _, _ = run(capsys, ["extract", "--generate", "complete(5)",
                              "--profile", "nosuch"])
    assert code == 2


def test_verify_tampered_certificate(tmp_path, capsys):
    p = tmp_path / "in.g6"
    p.write_text(encode_graph6(generators.complete(20)) + "\n")
    cpath = str(tmp_path / "certs.jsonl")
    code, out, _ = run(capsys, ["extract", "--input", str(p), "--op", "small_dense",
                                "--t", "3", "--k", "4", "--profile", "desk-small",
                                "--out", str(tmp_path / "rep.jsonl")])
    assert code == 0
    rep = json.loads((tmp_path / "rep.jsonl").read_text().splitlines()[0])
    certs = [rep["certificate"]]
    certs[0]["k"] = 99  # connectivity claim no subgraph meets
    with open(cpath, "w") as fh:
        for c in certs:
            fh.write(json.dumps(c) + "\n")
    code, out, _ = run(capsys, ["verify", cpath])
    assert code == 1
    recs = [json.loads(line) for line in out.splitlines()]
    assert any(r["status"] == "invalid" for r in recs)


def test_verify_wrong_host_and_malformed(tmp_path, capsys):
    cpath = tmp_path / "c.jsonl"
    cpath.write_text(json.dumps({"kind": "coloring", "host_graph6": "D~{",
                                 "host_sha256": "00", "colors": [0, 1, 2, 3, 4],
                                 "num_colors": 5}) + "\n")
    code, out, _ = run(capsys, ["verify", str(cpath)])
    assert code == 1
    assert json.loads(out.splitlines()[0])["status"] == "wrong-host"
    cpath.write_text(json.dumps({"banana": 1}) + "\n")
    code, out, _ = run(capsys, ["verify", str(cpath)])
    assert code == 2
    assert json.loads(out.splitlines()[0])["status"] == "malformed"


def test_experiment_suite(capsys, tmp_path):
    out_csv = str(tmp_path / "rows.csv")
    code, out, _ = run(capsys, ["experiment", "--suite", "menger_duality",
                                "--count", "25", "--out", out_csv])
    assert code == 0
    summary = json.loads(out.splitlines()[0])
    assert summary["instances"] == 25 and summary["failures"] == 0
    header = open(out_csv).readline()
    assert "pass" in header


def test_experiment_unknown_suite(capsys):
    code, _, err = run(capsys, ["experiment", "--suite", "nosuch"])
    assert code == 2
    assert "known" in err


def test_usage_error(capsys):
    code, _, _ = run(capsys, ["frobnicate"])
    assert code == 2

import json
import os

import pytest

from curvlab.cli import EXIT_INPUT, EXIT_OK, main
from curvlab.formats import write_graph6
from curvlab.generators import petersen


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_curvature_generator(capsys):
    code, out, _ = run_cli(capsys, "curvature", "hypercube:3")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["K"] == 2.0
    assert payload["per_vertex"]["0"] == 2.0


def test_curvature_single_vertex(capsys):
    code, out, _ = run_cli(capsys, "curvature", "petersen", "--vertex", "0")
    payload = json.loads(out)
    assert payload["K"] == pytest.approx(-1.0)


def test_curvature_infinite_family(capsys):
    code, out, _ = run_cli(capsys, "curvature", "zxk:3")
    payload = json.loads(out)
    assert payload["K"] == pytest.approx(0.0, abs=1e-8)
    code, out, _ = run_cli(capsys, "curvature", "line", "--vertex", "5")
    assert json.loads(out)["K"] == pytest.approx(0.0, abs=1e-8)


def test_curvature_finite_dimension(capsys):
    code, out, _ = run_cli(capsys, "curvature", "complete:2", "--dimension", "2")
    assert json.loads(out)["K"] == pytest.approx(1.0)


def test_connectivity_with_classification(capsys):
    code, out, _ = run_cli(capsys, "connectivity", "cycle:4", "--classify-cuts")
    payload = json.loads(out)
    assert payload["lambda"] == 2
    assert payload["stars_only"] is False
    assert len(payload["non_star_cut"]["side_L"]) == 2


def test_matching_command(capsys):
    code, out, _ = run_cli(capsys, "matching", "petersen")
    payload = json.loads(out)
    assert payload["perfect"] is True and payload["size"] == 5


def test_regularity_command(capsys):
    code, out, _ = run_cli(capsys, "regularity", "hamming2:3")
    payload = json.loads(out)
    assert payload["kind"] == "amply_regular"
    assert (payload["d"], payload["alpha"], payload["beta"]) == (4, 1, 2)


def test_file_input_graph6(capsys, tmp_path):
    path = tmp_path / "p.g6"
    path.write_text(write_graph6(petersen()) + "\n", encoding="ascii")
    code, out, _ = run_cli(capsys, "connectivity", str(path))
    assert json.loads(out)["lambda"] == 3


def test_file_input_edge_list(capsys, tmp_path):
    path = tmp_path / "tri.txt"
    path.write_text("3 3\n0 1\n1 2\n0 2\n", encoding="ascii")
    code, out, _ = run_cli(capsys, "connectivity", str(path))
    assert json.loads(out)["lambda"] == 2


def test_check_command_json(capsys):
    code, out, err = run_cli(
        capsys,
        "check",
        "--source",
        "gen:cycle:4;petersen",
        "--theorems",
        "T1.4,T2.5",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert len(payload) == 4
    assert "0 violations" in err


def test_check_deterministic_across_thread_env(capsys, tmp_path, monkeypatch):
    outputs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("CURVLAB_THREADS", threads)
        out_path = tmp_path / f"r{threads}.json"
        code, _, _ = run_cli(
            capsys,
            "check",
            "--source",
            "gen:petersen;hypercube:4;paley:13",
            "--parallelism",
            "8",
            "--out",
            str(out_path),
        )
        assert code == EXIT_OK
        outputs.append(out_path.read_bytes())
    assert outputs[0] == outputs[1]


def test_check_exhaustive_source(capsys):
    code, out, err = run_cli(
        capsys, "check", "--source", "exhaustive:5", "--theorems", "T1.3", "--format", "csv"
    )
    assert code == EXIT_OK
    assert out.splitlines()[0] == "theorem,graph,applicable,holds,detail"


def test_conjecture_command(capsys):
    code, out, _ = run_cli(capsys, "conjecture", "--max-n", "4")
    payload = json.loads(out)
    assert payload["boundary_cases"] == []
    assert payload["table"]["delta=2,lambda=2"] >= 1


def test_beta1_command(capsys):
    code, out, _ = run_cli(capsys, "beta1-search")
    payload = json.loads(out)
    assert payload[0]["graph"] == "beta1_counterexample"
    assert payload[0]["lambda"] == 2


def test_bad_input_exit_code(capsys, tmp_path):
    code, _, err = run_cli(capsys, "curvature", "paley:8")
    assert code == EXIT_INPUT and "error:" in err
    code, _, err = run_cli(capsys, "connectivity", "nonsense:1")
    assert code == EXIT_INPUT
    bad = tmp_path / "bad.g6"
    bad.write_text("##nope##\n", encoding="ascii")
    code, _, err = run_cli(capsys, "check", "--source", str(bad))
    assert code == EXIT_INPUT
    code, _, err = run_cli(capsys, "matching", "zxk:2")
    assert code == EXIT_INPUT  # infinite family has no finite matching


def test_missing_file_is_input_error(capsys):
    code, _, err = run_cli(capsys, "connectivity", "no_such_file.g6")
    assert code == EXIT_INPUT

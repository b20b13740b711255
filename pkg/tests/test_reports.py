import json

from curvlab.generators import cycle_graph, petersen
from curvlab.reports import emit_report, render_csv, render_json, render_markdown
from curvlab.theorems import check_theorem


def test_empty_json():
    assert render_json([]) == "[]"


def test_single_verdict_csv():
    v = check_theorem(cycle_graph(4), "T1.4", "C4")
    text = render_csv([v])
    lines = text.strip().splitlines()
    assert lines[0] == "theorem,graph,applicable,holds,detail"
    assert len(lines) == 2
    assert lines[1].startswith("T1.4,C4,True,True")


def test_markdown_one_table_per_theorem():
    verdicts = [
        check_theorem(cycle_graph(4), "T1.4", "C4"),
        check_theorem(petersen(), "T1.4", "petersen"),
        check_theorem(petersen(), "T1.3", "petersen"),
    ]
    text = render_markdown(verdicts)
    assert text.count("## T1.4") == 1
    assert text.count("## T1.3") == 1
    assert "| C4 | True | True |" in text


def test_json_is_valid_and_stable():
    verdicts = [check_theorem(petersen(), "T2.5", "petersen")]
    text = render_json(verdicts)
    payload = json.loads(text)
    assert payload[0]["theorem"] == "T2.5"
    assert payload[0]["holds"] is True
    assert render_json(verdicts) == text


def test_evidence_serializes_certificates():
    v = check_theorem(cycle_graph(4), "T1.3", "C4")
    record = json.loads(render_json([v]))[0]
    cut = record["evidence"]["cut"]
    assert cut["value"] == 2
    assert isinstance(cut["side_L"], list)


def test_emit_report_to_file(tmp_path):
    v = check_theorem(cycle_graph(4), "T1.4", "C4")
    out = tmp_path / "report.json"
    text = emit_report([v], "json", str(out))
    assert out.read_text().strip() == text.strip()
    emit_report([v], "csv", str(tmp_path / "report.csv"))
    emit_report([v], "markdown", str(tmp_path / "report.md"))


def test_emit_report_rejects_unknown_format(tmp_path):
    import pytest

    with pytest.raises(ValueError):
        emit_report([], "xml", str(tmp_path / "x"))

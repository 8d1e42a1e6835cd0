import io
import json
from pathlib import Path
from typing import Any

from pypomes_qforms import FieldTower, FieldElement
from pypomes_qforms.report_pomes import REPORT_SCHEMA, report_lines, report_summary, report_write

RECORDS: list[dict[str, Any]] = [
    {"line": 1, "result": {"field": "GF(2)(t)"}},
    {"line": 2, "error": "line 2: QF304: Division by zero in 'inverse'"},
    {"line": 3, "result": {"suite": "oracles", "passed": False}},
    {"line": 4, "result": {"suite": "transfer-identities", "passed": True}}
]


def test_report_summary() -> None:
    summary: dict[str, Any] = report_summary(records=RECORDS,
                                             wall_time=1.23456)
    assert summary["schema"] == REPORT_SCHEMA
    assert summary["statements"] == 4
    assert summary["errors"] == 1
    assert summary["failed_suites"] == 1
    assert summary["wall_time"] == 1.235
    assert "wall_time" not in report_summary(records=[])


def test_report_lines(f_t: FieldTower, t: FieldElement) -> None:
    lines: list[str] = report_lines(records=[{"result": {"value": t + 1, "field": f_t}, "line": 7}])
    assert len(lines) == 2
    # keys sorted, field objects rendered as text
    assert lines[0] == '{"line": 7, "result": {"field": "GF(2)(t)", "value": "t + 1"}}'
    assert json.loads(lines[1])["summary"]["statements"] == 1


def test_report_write(tmp_path: Path) -> None:
    path: Path = tmp_path / "report.jsonl"
    report_write(records=RECORDS,
                 target=path)
    stream = io.StringIO()
    report_write(records=RECORDS,
                 target=stream)
    from_file: list[str] = path.read_text(encoding="utf-8").splitlines()
    from_stream: list[str] = stream.getvalue().splitlines()
    assert len(from_file) == len(from_stream) == 5
    assert from_file[:4] == from_stream[:4]

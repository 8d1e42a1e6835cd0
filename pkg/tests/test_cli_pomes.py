import io
import json
import sys
from pathlib import Path
from typing import Any

import pytest

from pypomes_qforms.cli_pomes import CORPUS_HEADER, main, parse_args


def _lines(text: str) -> list[dict[str, Any]]:
    return [json.loads(line) for line in text.splitlines() if line.startswith("{")]


def test_parse_args() -> None:
    args = parse_args(["run.qf", "--seed", "3", "--budget", "1", "--degrees", "2..5"])
    assert args.script == Path("run.qf")
    assert args.seed == 3
    assert args.budget == 1
    assert args.degrees == "2..5"
    with pytest.raises(SystemExit):
        parse_args(["--p", "4"])


def test_run_script(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    script: Path = tmp_path / "run.qf"
    script.write_text("field F = GF(2)(t);\nwp? t^2 + t;\n", encoding="utf-8")
    assert main([str(script)]) == 0
    records = _lines(capsys.readouterr().out)
    assert len(records) == 3
    assert records[1]["result"]["verdict"] == "yes"
    summary: dict[str, Any] = records[-1]["summary"]
    assert summary["statements"] == 2
    assert summary["errors"] == 0


def test_failing_statement(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    script: Path = tmp_path / "bad.qf"
    script.write_text("field F = GF(2)(t);\nlet y = 1/(t + t);\n", encoding="utf-8")
    assert main([str(script)]) == 1
    captured = capsys.readouterr()
    assert _lines(captured.out)[-1]["summary"]["errors"] == 1
    assert "[qforms]" in captured.err


def test_syntax_error(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    script: Path = tmp_path / "broken.qf"
    script.write_text("field F = GF(2)(t);\nlet x = t $ 1;\n", encoding="utf-8")
    assert main([str(script)]) == 1
    record: dict[str, Any] = _lines(capsys.readouterr().out)[0]
    assert record["line"] == 2
    assert record["column"] > 0


def test_usage_errors(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    assert main([str(tmp_path / "missing.qf")]) == 2
    assert main(["--corpus", str(tmp_path / "missing")]) == 2
    assert "error" in capsys.readouterr().err


def test_json_report(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    script: Path = tmp_path / "run.qf"
    script.write_text("field F = GF(2)(t);\nsqrt t^2;\n", encoding="utf-8")
    out: Path = tmp_path / "report.jsonl"
    assert main([str(script), "--json", str(out)]) == 0
    assert "2 statements" in capsys.readouterr().out
    records = _lines(out.read_text(encoding="utf-8"))
    assert records[1]["result"]["value"] == "t"
    assert records[-1]["summary"]["schema"] == 1


def test_corpus(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    (tmp_path / "a.qf").write_text(f"{CORPUS_HEADER}\nfield F = GF(2)(t);\n", encoding="utf-8")
    (tmp_path / "b.qf").write_text(f"{CORPUS_HEADER}\nfield F = GF(4);\n", encoding="utf-8")
    assert main(["--corpus", str(tmp_path)]) == 0
    records = _lines(capsys.readouterr().out)
    assert [Path(r["source"]).name for r in records[:-1]] == ["a.qf", "b.qf"]

    (tmp_path / "c.qf").write_text("field F = GF(2)(t);\n", encoding="utf-8")
    assert main(["--corpus", str(tmp_path)]) == 2
    assert CORPUS_HEADER in capsys.readouterr().err


def test_suite(capsys: pytest.CaptureFixture) -> None:
    assert main(["--suite", "transfer-identities", "--seeds", "1", "--degrees", "2..2"]) == 0
    result: dict[str, Any] = _lines(capsys.readouterr().out)[0]["result"]
    assert result["suite"] == "transfer-identities"
    assert result["passed"]


def test_stdin(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture) -> None:
    monkeypatch.setattr(sys, "stdin", io.StringIO("field F = GF(2)(t);\nprint t + 1;\n"))
    assert main([]) == 0
    assert _lines(capsys.readouterr().out)[1]["result"]["value"] == "t + 1"

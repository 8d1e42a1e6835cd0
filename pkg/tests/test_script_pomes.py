from typing import Any

from pypomes_qforms import script_execute, script_parse, script_run


def _run(text: str,
         errors: list[str] = None) -> list[dict[str, Any]]:
    return script_execute(text=text,
                          budget=2,
                          seed=0,
                          errors=errors)


def test_declarations() -> None:
    records = _run("field F = GF(2)(t);\n"
                   "ext K = F[x]/(x^3 + x + t);\n"
                   "let c = (t + 1)^2;\n"
                   "print c;\n"
                   "print K;\n")
    assert [r["line"] for r in records] == [1, 2, 3, 4, 5]
    assert all("error" not in r for r in records)
    assert records[0]["result"]["field"]["key"] == "GF(2)(t)"
    assert records[3]["result"]["value"] == records[2]["result"]["value"]
    assert records[4]["result"]["field"]["steps"][0]["degree"] == 3


def test_witt_metabolic_plane() -> None:
    records = _run("field F = GF(2)(t); bil b = [[0,1],[1,t]]; witt b;")
    assert records[2]["result"]["metabolic"]["verdict"] == "yes"


def test_isometric_over_extension() -> None:
    records = _run("field F = GF(2)(t);\n"
                   "quad q = [1,t];\n"
                   "ext L = F[x]/(x^2+x+t);\n"
                   "isometric? q hyper(2) over L;\n"
                   "isometric? q hyper(2);\n")
    assert records[3]["result"]["verdict"] == "yes"
    assert records[4]["result"]["verdict"] == "no"


def test_simfield_gram() -> None:
    records = _run("field F = GF(2)(a,b);\n"
                   "simfield bil [[a+1,0,0,0],[0,a,0,0],[0,0,b,0],[0,0,0,a*b]];\n")
    result: dict[str, Any] = records[1]["result"]
    assert result["bilinear"]["dim"] == 2
    assert result["bilinear"]["completeness"] == "exact"
    assert result["diagonal"]["dim"] == 4


def test_element_commands() -> None:
    records = _run("field F = GF(2)(t);\n"
                   "wp? t^2 + t;\n"
                   "wp? t;\n"
                   "sqrt t^2 + 1;\n"
                   "sqrt t;\n"
                   "ext K = F[x]/(x^3 + x + t);\n"
                   "use K;\n"
                   "charpoly x over F;\n"
                   "norm x;\n")
    assert records[1]["result"]["verdict"] == "yes"
    assert records[2]["result"]["verdict"] == "no"
    assert records[3]["result"]["value"] is not None
    assert records[4]["result"]["value"] is None
    assert records[7]["result"]["norm"] == "t"
    assert records[8]["result"]["norm"] == records[8]["result"]["stepwise"] == "t"


def test_quadratic_commands() -> None:
    records = _run("field F = GF(2)(t);\n"
                   "quad q = [1,t] + <t>;\n"
                   "normalize q;\n"
                   "arf quad [1,t];\n"
                   "similar? quad <1,t> quad <t,1>;\n")
    assert records[2]["result"]["verified"]
    assert records[3]["result"]["representative"] == "t"
    assert records[3]["result"]["trivial"]["verdict"] == "no"
    assert records[4]["result"]["verdict"] == "yes"


def test_transfer() -> None:
    records = _run("field F = GF(2)(t);\n"
                   "ext K = F[x]/(x^3 + x + t);\n"
                   "bil one = <1>;\n"
                   "transfer s K one;\n")
    result: dict[str, Any] = records[3]["result"]
    assert result["context"]["degree"] == 3
    assert result["transfer"]["dim"] == 3
    assert all(c["verdict"] == "yes" for c in result["identities"]["checks"])


def test_check_suite() -> None:
    records = _run("check transfer-identities --degrees 2..3 --seeds 2;")
    result: dict[str, Any] = records[0]["result"]
    assert result["suite"] == "transfer-identities"
    assert result["passed"]

    bad = _run("check transfer-identities --seeds 0 --colour red;")
    assert "error" in bad[0]


def test_statement_errors() -> None:
    errors: list[str] = []
    records = _run("field F = GF(2)(t);\n"
                   "bil b = <1,t>;\n"
                   "arf b;\n"
                   "let y = 1/(t + t);\n"
                   "quad h = hyper(3);\n"
                   "isometric? b quad <1,t>;\n"
                   "print b;\n",
                   errors=errors)
    assert [("error" in r) for r in records] == [False, False, True, True, True, True, False]
    assert len(errors) == 4
    # the run goes on after an error
    assert records[-1]["result"]["form"]["kind"] == "bilinear"


def test_unknown_identifier() -> None:
    errors: list[str] = []
    records = _run("field F = GF(2)(t);\nlet x = u + 1;\nprint x;\n", errors=errors)
    assert len(records) == 1
    assert records[0]["line"] == 2
    assert "u" in records[0]["error"]
    assert errors


def test_syntax_error_record() -> None:
    records = _run("field F = GF(2)(t);\nbil b = [[0,1],[1,t]\n")
    assert len(records) == 1
    assert records[0]["line"] == 2
    assert "column" in records[0]


def test_script_run_parsed(logger) -> None:
    script = script_parse("field F = GF(4); let w = z^2 + z;")
    records = script_run(script, logger=logger)
    assert records[1]["result"]["value"] == "1"

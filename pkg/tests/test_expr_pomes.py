import pytest

from pypomes_qforms import ScriptSyntaxError, script_format, script_parse
from pypomes_qforms.expr_pomes import (
    BinOp, Block, Check, Command, Diag, ExtDecl, FieldDecl, FormDecl, Name, Num, Operand, Pow, Ref
)

SAMPLE: str = """\
# two fields and a few forms
field F = GF(2)(t, u);
ext K = F[x]/(x^3 + x + t);
bil b = [[1, 0], [0, t]];
quad q = [1, t] + <t>;
pform p = <<t, u>>;
let c = (t + 1)^2 * u / t - 1;
isometric? b bil <t, 1> over K;
similar? q quad [1, u] + <t*u>;
witt b + meta(t) + hyper(2);
transfer s K b;
check transfer-identities --degrees 2..5 --seeds 50;
"""


def test_parse_statements() -> None:
    script = script_parse(SAMPLE)
    stmts = script.statements
    assert len(stmts) == 11
    assert stmts[0] == FieldDecl(name="F", q=2, names=("t", "u"))
    assert stmts[0].line == 2
    assert isinstance(stmts[1], ExtDecl)
    assert stmts[1].var == "x"
    assert isinstance(stmts[3], FormDecl)
    assert stmts[3].kind == "quad"
    assert stmts[3].form.terms[0] == Block(a=Num(1), b=Name("t"))
    assert stmts[3].form.terms[1] == Diag(values=(Name("t"),))

    iso = stmts[6]
    assert isinstance(iso, Command)
    assert iso.verb == "isometric?"
    assert iso.over == "K"
    assert iso.args[0] == Operand(kind=None, form=iso.args[0].form)
    assert isinstance(iso.args[0].form.terms[0], Ref)
    assert iso.args[1].kind == "bil"

    check = stmts[-1]
    assert isinstance(check, Check)
    assert check.suite == "transfer-identities"
    assert dict(check.options) == {"degrees": "2..5", "seeds": "50"}


def test_expression_precedence() -> None:
    let = script_parse("let c = t + u*t^2;").statements[0]
    assert let.expr == BinOp(op="+",
                             left=Name("t"),
                             right=BinOp(op="*",
                                         left=Name("u"),
                                         right=Pow(base=Name("t"), exp=2)))


def test_format_round_trip() -> None:
    script = script_parse(SAMPLE)
    text: str = script_format(script)
    assert script_parse(text) == script
    # formatting is stable
    assert script_format(script_parse(text)) == text


def test_kind_prefixed_names() -> None:
    # identifiers may start with a form kind
    stmt = script_parse("quad quadA = <1>;").statements[0]
    assert stmt.name == "quadA"
    assert stmt.kind == "quad"


@pytest.mark.parametrize("text, line", [
    ("field F = GF(2)(t);\nbil b = [[0,1],[1,t]\nwitt b;", 3),
    ("field F = GF(2)(t);\nlet x = t $ 1;", 2),
    ("field F = GF(2)(t)", 1)
])
def test_syntax_errors(text: str, line: int) -> None:
    with pytest.raises(ScriptSyntaxError) as exc:
        script_parse(text)
    assert exc.value.line == line
    assert exc.value.column >= 0

"""
The script language: its syntax tree, the parser built on the *lark* grammar shipped as *qforms.lark*,
and the printer whose output parses back to the same tree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken

from .error_pomes import ScriptSyntaxError

# the schema version of the grammar, as stated on the first line of corpus files
SCRIPT_SCHEMA: int = 1


# expressions
@dataclass(frozen=True)
class Num:
    value: int
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Name:
    name: str
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        prec: int = _prec(self)
        return f"{_sub(self.left, prec)} {self.op} {_sub(self.right, prec + 1)}"


@dataclass(frozen=True)
class Neg:
    operand: Expr
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"-{_sub(self.operand, 3)}"


@dataclass(frozen=True)
class Pow:
    base: Expr
    exp: int
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"{_sub(self.base, 5)}^{self.exp}"


Expr = Num | Name | BinOp | Neg | Pow


def _prec(e: Expr) -> int:
    # binding strength: sums, products, negation, powers, atoms
    if isinstance(e, BinOp):
        return 1 if e.op in "+-" else 2
    if isinstance(e, Neg):
        return 3
    return 4 if isinstance(e, Pow) else 5


def _sub(e: Expr,
         prec: int) -> str:
    return f"({e})" if _prec(e) < prec else str(e)


def _items(values: tuple[Expr, ...]) -> str:
    return ", ".join(str(v) for v in values)


# form literals
@dataclass(frozen=True)
class Block:
    a: Expr
    b: Expr
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}]"


@dataclass(frozen=True)
class Gram:
    rows: tuple[tuple[Expr, ...], ...]
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return "[" + ", ".join(f"[{_items(r)}]" for r in self.rows) + "]"


@dataclass(frozen=True)
class Diag:
    values: tuple[Expr, ...]
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"<{_items(self.values)}>"


@dataclass(frozen=True)
class Pfister:
    values: tuple[Expr, ...]
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"<<{_items(self.values)}>>"


@dataclass(frozen=True)
class Hyper:
    dim: int
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"hyper({self.dim})"


@dataclass(frozen=True)
class Meta:
    a: Expr
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"meta({self.a})"


@dataclass(frozen=True)
class Ref:
    name: str
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return self.name


Term = Block | Gram | Diag | Pfister | Hyper | Meta | Ref


@dataclass(frozen=True)
class FormSum:
    terms: tuple[Term, ...]
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms)


@dataclass(frozen=True)
class Operand:
    """
    A form argument of a command, with its optional kind prefix (*bil*, *quad* or *pform*).
    """
    kind: str | None
    form: FormSum
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"{self.kind} {self.form}" if self.kind else str(self.form)


# statements
@dataclass(frozen=True)
class FieldDecl:
    name: str
    q: int
    names: tuple[str, ...]
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        gens: str = f"({', '.join(self.names)})" if self.names else ""
        return f"field {self.name} = GF({self.q}){gens}"


@dataclass(frozen=True)
class ExtDecl:
    name: str
    parent: str
    var: str
    poly: Expr
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"ext {self.name} = {self.parent}[{self.var}]/({self.poly})"


@dataclass(frozen=True)
class FormDecl:
    kind: str
    name: str
    form: FormSum
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"{self.kind} {self.name} = {self.form}"


@dataclass(frozen=True)
class LetDecl:
    name: str
    expr: Expr
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"let {self.name} = {self.expr}"


@dataclass(frozen=True)
class Use:
    name: str
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"use {self.name}"


@dataclass(frozen=True)
class Command:
    """
    A command on elements or forms: *print*, *normalize*, *arf*, *wp?*, *sqrt*, *charpoly*, *norm*,
    *isometric?*, *similar?*, *witt* or *simfield*.
    """
    verb: str
    args: tuple[Expr | Operand, ...]
    over: str | None = None
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        result: str = " ".join([self.verb] + [str(a) for a in self.args])
        return f"{result} over {self.over}" if self.over else result


@dataclass(frozen=True)
class Transfer:
    target: str
    operand: Operand
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"transfer s {self.target} {self.operand}"


@dataclass(frozen=True)
class Check:
    suite: str
    options: tuple[tuple[str, str], ...]
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return " ".join(["check", self.suite] + [f"--{k} {v}" for k, v in self.options])


Statement = FieldDecl | ExtDecl | FormDecl | LetDecl | Use | Command | Transfer | Check


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]

    def __str__(self) -> str:
        return "".join(f"{s};\n" for s in self.statements)


@dataclass(frozen=True)
class _Over:
    name: str


@v_args(meta=True)
class _ScriptBuilder(Transformer):
    # lark tree to syntax tree, keeping the source lines

    def start(self, meta, children) -> Script:
        return Script(statements=tuple(children))

    def names(self, meta, children) -> tuple[str, ...]:
        return tuple(str(c) for c in children)

    def field_decl(self, meta, children) -> FieldDecl:
        return FieldDecl(name=str(children[0]),
                         q=int(children[1]),
                         names=children[2] if len(children) > 2 else (),
                         line=meta.line)

    def ext_decl(self, meta, children) -> ExtDecl:
        return ExtDecl(name=str(children[0]),
                       parent=str(children[1]),
                       var=str(children[2]),
                       poly=children[3],
                       line=meta.line)

    def form_decl(self, meta, children) -> FormDecl:
        return FormDecl(kind=str(children[0]),
                        name=str(children[1]),
                        form=children[2],
                        line=meta.line)

    def let_decl(self, meta, children) -> LetDecl:
        return LetDecl(name=str(children[0]),
                       expr=children[1],
                       line=meta.line)

    def use_stmt(self, meta, children) -> Use:
        return Use(name=str(children[0]),
                   line=meta.line)

    def _command(self, verb: str, meta, children) -> Command:
        over: str | None = children[-1].name if children and isinstance(children[-1], _Over) else None
        args: tuple = tuple(c for c in children if not isinstance(c, _Over))
        return Command(verb=verb,
                       args=args,
                       over=over,
                       line=meta.line)

    def print_stmt(self, meta, children) -> Command:
        return self._command("print", meta, children)

    def normalize_stmt(self, meta, children) -> Command:
        return self._command("normalize", meta, children)

    def arf_stmt(self, meta, children) -> Command:
        return self._command("arf", meta, children)

    def wp_stmt(self, meta, children) -> Command:
        return self._command("wp?", meta, children)

    def sqrt_stmt(self, meta, children) -> Command:
        return self._command("sqrt", meta, children)

    def charpoly_stmt(self, meta, children) -> Command:
        return self._command("charpoly", meta, children)

    def norm_stmt(self, meta, children) -> Command:
        return self._command("norm", meta, children)

    def isometric_stmt(self, meta, children) -> Command:
        return self._command("isometric?", meta, children)

    def similar_stmt(self, meta, children) -> Command:
        return self._command("similar?", meta, children)

    def witt_stmt(self, meta, children) -> Command:
        return self._command("witt", meta, children)

    def simfield_stmt(self, meta, children) -> Command:
        return self._command("simfield", meta, children)

    def transfer_stmt(self, meta, children) -> Transfer:
        return Transfer(target=str(children[0]),
                        operand=children[1],
                        line=meta.line)

    def check_stmt(self, meta, children) -> Check:
        return Check(suite=str(children[0]),
                     options=tuple(children[1:]),
                     line=meta.line)

    def option(self, meta, children) -> tuple[str, str]:
        return str(children[0])[2:], str(children[1])

    def over(self, meta, children) -> _Over:
        return _Over(name=str(children[0]))

    def bil(self, meta, children) -> str:
        return "bil"

    def quad(self, meta, children) -> str:
        return "quad"

    def pform(self, meta, children) -> str:
        return "pform"

    def operand(self, meta, children) -> Operand:
        kind: str | None = children[0] if len(children) > 1 else None
        return Operand(kind=kind,
                       form=children[-1],
                       line=meta.line)

    def form(self, meta, children) -> FormSum:
        return FormSum(terms=tuple(children),
                       line=meta.line)

    def block(self, meta, children) -> Block:
        return Block(a=children[0],
                     b=children[1],
                     line=meta.line)

    def row(self, meta, children) -> tuple:
        return tuple(children)

    def gram(self, meta, children) -> Gram:
        return Gram(rows=tuple(children),
                    line=meta.line)

    def diag(self, meta, children) -> Diag:
        return Diag(values=tuple(children),
                    line=meta.line)

    def pfister(self, meta, children) -> Pfister:
        return Pfister(values=tuple(children),
                       line=meta.line)

    def hyper(self, meta, children) -> Hyper:
        return Hyper(dim=int(children[0]),
                     line=meta.line)

    def meta(self, meta, children) -> Meta:
        return Meta(a=children[0],
                    line=meta.line)

    def ref(self, meta, children) -> Ref:
        return Ref(name=str(children[0]),
                   line=meta.line)

    def _binop(self, op: str, meta, children) -> BinOp:
        return BinOp(op=op,
                     left=children[0],
                     right=children[1],
                     line=meta.line)

    def add(self, meta, children) -> BinOp:
        return self._binop("+", meta, children)

    def sub(self, meta, children) -> BinOp:
        return self._binop("-", meta, children)

    def mul(self, meta, children) -> BinOp:
        return self._binop("*", meta, children)

    def div(self, meta, children) -> BinOp:
        return self._binop("/", meta, children)

    def neg(self, meta, children) -> Neg:
        return Neg(operand=children[0],
                   line=meta.line)

    def pow(self, meta, children) -> Pow:
        return Pow(base=children[0],
                   exp=int(children[1]),
                   line=meta.line)

    def num(self, meta, children) -> Num:
        return Num(value=int(children[0]),
                   line=meta.line)

    def name(self, meta, children) -> Name:
        return Name(name=str(children[0]),
                    line=meta.line)


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark.open("qforms.lark",
                     rel_to=__file__,
                     parser="lalr",
                     propagate_positions=True)


def script_parse(text: str) -> Script:
    """
    Parse the script *text*.

    :param text: the script source
    :return: the syntax tree
    :raises ScriptSyntaxError: on malformed input, with the line and column of the offending text
    """
    try:
        tree = _parser().parse(text)
    except UnexpectedInput as e:
        msg: str
        if isinstance(e, UnexpectedToken):
            msg = f"unexpected {e.token.type} '{e.token}', expecting one of {', '.join(sorted(e.expected))}"
        elif isinstance(e, UnexpectedCharacters):
            msg = f"unexpected character '{e.char}'"
        else:
            msg = "unexpected end of input"
        line: int = max(getattr(e, "line", 0) or 0, 0)
        column: int = max(getattr(e, "column", 0) or 0, 0)
        raise ScriptSyntaxError(line, column, msg,
                                line=line,
                                column=column) from None

    return _ScriptBuilder().transform(tree)


def script_format(script: Script) -> str:
    """
    Print *script* back as text, one statement per line.

    The text parses back to a syntax tree equal to *script*.
    """
    return str(script)

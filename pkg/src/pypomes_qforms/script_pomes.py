"""
The script interpreter: statements run in order against the library, each producing one report record.

A statement failing with a typed error produces an error record, and the run goes on with the next one.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field
from logging import Logger
from typing import Any

from .config_pomes import QformsParam, qforms_get
from .decision_pomes import (
    arf_invariant, bil_is_metabolic, bil_witt_decompose, form_isometry, quad_normalize, wp_solve
)
from .error_pomes import DivisionByZero, QformsError, ScriptError, TypeMismatch, UnknownIdentifier
from .expr_pomes import (
    BinOp, Block, Check, Command, Diag, Expr, ExtDecl, FieldDecl, FormDecl, FormSum, Gram, Hyper,
    LetDecl, Meta, Name, Neg, Num, Operand, Pfister, Pow, Ref, Script, Statement, Term, Transfer, Use,
    script_parse
)
from .field_pomes import (
    FieldElement, FieldTower, char_poly, norm, norm_stepwise, sqrt, tower_base, tower_extend
)
from .form_pomes import (
    BilinearForm, Form, FormKind, PForm, QuadraticForm, bil_diagonal, bil_gram, bil_hyperbolic,
    bil_metabolic, bil_pfister, diagonal_quadratic, pform_diagonal, pform_quasi_pfister, quad_block,
    quad_diagonal, quad_hyperbolic, quad_matrix, quad_quasi_pfister
)
from .lab_pomes import run_suite
from .obj_pomes import exc_format, obj_to_dict
from .similarity_pomes import bil_similarity_field, similar, ts_similarity_field
from .transfer_pomes import (
    transfer_bilinear, transfer_context, transfer_quadratic, transfer_witt_checks
)
from .validation_pomes import validate_int, validate_keys, validate_range, validate_str

# the script keywords for the form kinds
FORM_KINDS: dict[str, FormKind] = {
    "bil": FormKind.BILINEAR,
    "quad": FormKind.QUADRATIC,
    "pform": FormKind.PFORM
}


@dataclass
class ScriptState:
    """
    The declarations in scope while a script runs.
    """
    budget: int
    seed: int
    fields: dict[str, FieldTower] = field(default_factory=dict)
    forms: dict[str, Form] = field(default_factory=dict)
    elements: dict[str, FieldElement] = field(default_factory=dict)
    current: FieldTower | None = None

    def tower(self,
              name: str,
              line: int) -> FieldTower:
        if name not in self.fields:
            raise UnknownIdentifier(name, line,
                                    line=line)
        return self.fields[name]

    def current_field(self,
                      line: int) -> FieldTower:
        if self.current is None:
            raise TypeMismatch(line, "no field declared",
                               line=line)
        return self.current


# static resolution
def _expr_names(e: Expr) -> list[Name]:
    match e:
        case Name():
            return [e]
        case BinOp():
            return _expr_names(e.left) + _expr_names(e.right)
        case Neg():
            return _expr_names(e.operand)
        case Pow():
            return _expr_names(e.base)
    return []


def _term_names(t: Term) -> tuple[list[Name], list[Ref]]:
    exprs: list[Expr] = []
    refs: list[Ref] = []
    match t:
        case Block():
            exprs = [t.a, t.b]
        case Gram():
            exprs = [x for row in t.rows for x in row]
        case Diag() | Pfister():
            exprs = list(t.values)
        case Meta():
            exprs = [t.a]
        case Ref():
            refs = [t]
    return [n for x in exprs for n in _expr_names(x)], refs


def script_resolve(script: Script) -> None:
    """
    Reject the identifiers used before being declared, before anything runs.

    Elements may name the generators of declared fields, the polynomial variable of an extension,
    and *let* bindings; forms may name declared forms; *use*, *over* and *transfer* name declared fields.

    :raises UnknownIdentifier: with the line of the first undeclared identifier
    """
    fields: set[str] = set()
    gens: set[str] = set()
    forms: set[str] = set()
    elements: set[str] = set()

    def need(name: str, known: set[str], line: int) -> None:
        if name not in known:
            raise UnknownIdentifier(name, line,
                                    line=line)

    def need_expr(e: Expr, extra: set[str] = frozenset()) -> None:
        for n in _expr_names(e):
            need(n.name, gens | elements | extra, n.line)

    def need_form(f: FormSum) -> None:
        for t in f.terms:
            names, refs = _term_names(t)
            for n in names:
                need(n.name, gens | elements, n.line)
            for r in refs:
                need(r.name, forms, r.line)

    for stmt in script.statements:
        match stmt:
            case FieldDecl():
                fields.add(stmt.name)
                gens.update(stmt.names)
                gens.add("z")
            case ExtDecl():
                need(stmt.parent, fields, stmt.line)
                need_expr(stmt.poly, {stmt.var})
                fields.add(stmt.name)
                gens.add(stmt.var)
            case FormDecl():
                need_form(stmt.form)
                forms.add(stmt.name)
            case LetDecl():
                need_expr(stmt.expr)
                elements.add(stmt.name)
            case Use():
                need(stmt.name, fields, stmt.line)
            case Transfer():
                need(stmt.target, fields, stmt.line)
                need_form(stmt.operand.form)
            case Command():
                if stmt.over:
                    need(stmt.over, fields, stmt.line)
                for a in stmt.args:
                    if isinstance(a, Operand):
                        need_form(a.form)
                    elif stmt.verb == "print" and isinstance(a, Name):
                        need(a.name, gens | elements | forms | fields, a.line)
                    else:
                        need_expr(a)


# evaluation of elements and polynomials, coefficients lowest degree first
def _trim(p: list[FieldElement]) -> list[FieldElement]:
    while len(p) > 1 and not p[-1]:
        p = p[:-1]
    return p


def _padd(a: list[FieldElement],
          b: list[FieldElement],
          tower: FieldTower) -> list[FieldElement]:
    n: int = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else tower.zero) + (b[i] if i < len(b) else tower.zero)
                  for i in range(n)])


def _pmul(a: list[FieldElement],
          b: list[FieldElement],
          tower: FieldTower) -> list[FieldElement]:
    result: list[FieldElement] = [tower.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                result[i + j] = result[i + j] + x * y
    return _trim(result)


def _eval_poly(e: Expr,
               tower: FieldTower,
               state: ScriptState,
               var: str = None) -> list[FieldElement]:
    match e:
        case Num():
            return [tower.from_int(e.value)]
        case Name():
            if e.name == var:
                return [tower.zero, tower.one]
            if e.name in state.elements:
                return [tower.coerce(state.elements[e.name])]
            gens: dict[str, FieldElement] = tower.gens()
            if e.name not in gens:
                raise UnknownIdentifier(e.name, e.line,
                                        line=e.line)
            return [gens[e.name]]
        case Neg():
            return [-c for c in _eval_poly(e.operand, tower, state, var)]
        case Pow():
            base: list[FieldElement] = _eval_poly(e.base, tower, state, var)
            result: list[FieldElement] = [tower.one]
            for _ in range(e.exp):
                result = _pmul(result, base, tower)
            return result
    left: list[FieldElement] = _eval_poly(e.left, tower, state, var)
    right: list[FieldElement] = _eval_poly(e.right, tower, state, var)
    match e.op:
        case "+":
            return _padd(left, right, tower)
        case "-":
            return _padd(left, [-c for c in right], tower)
        case "*":
            return _pmul(left, right, tower)
    if len(right) > 1:
        raise TypeMismatch(e.line, f"division by the polynomial {e.right}",
                           line=e.line)
    if not right[0]:
        raise DivisionByZero(str(e))
    return [c / right[0] for c in left]


def _element(e: Expr,
             tower: FieldTower,
             state: ScriptState) -> FieldElement:
    return _eval_poly(e, tower, state)[0]


# evaluation of forms
def _literal(t: Term,
             kind: FormKind,
             tower: FieldTower,
             state: ScriptState) -> Form:
    def values(exprs: tuple[Expr, ...]) -> list[FieldElement]:
        return [_element(x, tower, state) for x in exprs]

    def mismatch() -> TypeMismatch:
        return TypeMismatch(t.line, f"{t} does not denote a {kind} form",
                            line=t.line)

    match t:
        case Block():
            if kind != FormKind.QUADRATIC:
                raise mismatch()
            return quad_block(tower, *values((t.a, t.b)))
        case Gram():
            rows: list[list[FieldElement]] = [values(r) for r in t.rows]
            match kind:
                case FormKind.BILINEAR:
                    return bil_gram(tower, rows)
                case FormKind.QUADRATIC:
                    return quad_matrix(tower, rows)
            raise mismatch()
        case Diag():
            match kind:
                case FormKind.BILINEAR:
                    return bil_diagonal(tower, values(t.values))
                case FormKind.QUADRATIC:
                    return quad_diagonal(tower, values(t.values))
            return pform_diagonal(tower, values(t.values))
        case Pfister():
            match kind:
                case FormKind.BILINEAR:
                    return bil_pfister(tower, values(t.values))
                case FormKind.QUADRATIC:
                    return quad_quasi_pfister(tower, values(t.values))
            return pform_quasi_pfister(tower, values(t.values))
        case Hyper():
            if t.dim % 2:
                raise TypeMismatch(t.line, f"{t} needs an even dimension",
                                   line=t.line)
            match kind:
                case FormKind.BILINEAR:
                    return bil_hyperbolic(tower, t.dim // 2)
                case FormKind.QUADRATIC:
                    return quad_hyperbolic(tower, t.dim // 2)
            raise mismatch()
        case Meta():
            if kind != FormKind.BILINEAR:
                raise mismatch()
            return bil_metabolic(tower, _element(t.a, tower, state))
    raise mismatch()


def _declared_kind(f: FormSum,
                   state: ScriptState) -> FormKind | None:
    for t in f.terms:
        if isinstance(t, Ref) and t.name in state.forms:
            return state.forms[t.name].kind
    return None


def _form(f: FormSum,
          kind: FormKind | None,
          tower: FieldTower,
          state: ScriptState) -> Form:
    kind = kind or _declared_kind(f, state)
    if kind is None:
        raise TypeMismatch(f.line, f"the kind of {f} is not determined; prefix it with bil, quad or pform",
                           line=f.line)
    result: Form | None = None
    for t in f.terms:
        term: Form
        if isinstance(t, Ref):
            if t.name not in state.forms:
                raise UnknownIdentifier(t.name, t.line,
                                        line=t.line)
            term = state.forms[t.name]
            if term.kind != kind:
                raise TypeMismatch(t.line, f"{t.name} is a {term.kind} form, not a {kind} form",
                                   line=t.line)
        else:
            term = _literal(t, kind, tower, state)
        result = term if result is None else result.perp(term)
    return result


def _operands(args: tuple[Operand, ...],
              state: ScriptState,
              line: int) -> list[Form]:
    # the first explicit or declared kind applies to the operands lacking one
    kinds: list[FormKind | None] = [FORM_KINDS[a.kind] if a.kind else _declared_kind(a.form, state)
                                    for a in args]
    context: FormKind | None = next((k for k in kinds if k is not None), None)
    tower: FieldTower = state.current_field(line)
    result: list[Form] = [_form(a.form, k or context, tower, state) for a, k in zip(args, kinds)]
    if len({f.kind for f in result}) > 1:
        raise TypeMismatch(line, f"forms of different kinds: {', '.join(str(f.kind) for f in result)}",
                           line=line)
    return result


def _over(forms: list[Form],
          name: str | None,
          state: ScriptState,
          line: int) -> list[Form]:
    if name is None:
        # operands from different levels meet at the higher one
        top: FieldTower = forms[0].tower
        for f in forms[1:]:
            if f.tower.has_level(top):
                top = f.tower
        return [f if f.tower is top else f.base_change(top) for f in forms]
    level: FieldTower = state.tower(name, line)
    return [f if f.tower is level else f.base_change(level) for f in forms]


def _gf_order(q: int,
              line: int) -> tuple[int, int]:
    p: int = next((d for d in range(2, q + 1) if q % d == 0), 0)
    k: int = 0
    n: int = q
    while p and n % p == 0:
        n //= p
        k += 1
    if q < 2 or n != 1:
        raise TypeMismatch(line, f"GF({q}) is not a finite field",
                           line=line)
    return p, k


# statements
def _declare(stmt: Statement,
             state: ScriptState,
             logger: Logger | None) -> dict[str, Any]:
    match stmt:
        case FieldDecl():
            p, k = _gf_order(stmt.q, stmt.line)
            tower: FieldTower = tower_base(p, k, stmt.names)
            state.fields[stmt.name] = tower
            state.current = tower
            return {"field": tower.to_dict()}
        case ExtDecl():
            parent: FieldTower = state.tower(stmt.parent, stmt.line)
            coeffs: list[FieldElement] = _eval_poly(stmt.poly, parent, state, stmt.var)
            ext: FieldTower = tower_extend(parent=parent,
                                           var=stmt.var,
                                           coeffs=coeffs,
                                           seed=state.seed,
                                           logger=logger)
            state.fields[stmt.name] = ext
            return {"field": ext.to_dict()}
        case FormDecl():
            form: Form = _form(stmt.form, FORM_KINDS[stmt.kind], state.current_field(stmt.line), state)
            state.forms[stmt.name] = form
            return {"form": form.to_dict()}
        case LetDecl():
            x: FieldElement = _element(stmt.expr, state.current_field(stmt.line), state)
            state.elements[stmt.name] = x
            return {"value": str(x)}
    state.current = state.tower(stmt.name, stmt.line)
    return {"field": state.current.key}


def _print(e: Expr,
           state: ScriptState) -> dict[str, Any]:
    if isinstance(e, Name) and e.name in state.forms:
        return {"form": state.forms[e.name].to_dict()}
    if isinstance(e, Name) and e.name in state.fields:
        return {"field": state.fields[e.name].to_dict()}
    x: FieldElement = _element(e, state.current_field(e.line), state)
    return {"value": str(x), "canonical": x.to_dict()}


def _simfield(form: Form,
              line: int,
              logger: Logger | None) -> dict[str, Any]:
    if isinstance(form, BilinearForm):
        an: BilinearForm = bil_witt_decompose(form.ns_part(), logger=logger).anisotropic_form()
        return {
            "bilinear": bil_similarity_field(form, logger=logger).to_dict(),
            "diagonal": ts_similarity_field(diagonal_quadratic(form), logger=logger)[0].to_dict(),
            "anisotropic_part": bil_similarity_field(an, logger=logger).to_dict()
        }
    if isinstance(form, QuadraticForm) and not form.is_totally_singular():
        raise TypeMismatch(line, f"similarity fields of the nonsingular form {form} are not computed",
                           line=line)
    sim, factorization = ts_similarity_field(form, logger=logger)
    result: dict[str, Any] = {"totally_singular": sim.to_dict()}
    if factorization is not None:
        result["factorization"] = factorization.to_dict()
    return result


def _witt(form: Form,
          line: int,
          state: ScriptState,
          logger: Logger | None) -> dict[str, Any]:
    if isinstance(form, BilinearForm):
        return {
            "decomposition": bil_witt_decompose(form, logger=logger).to_dict(),
            "metabolic": bil_is_metabolic(form, logger=logger).to_dict()
        }
    if isinstance(form, PForm):
        raise TypeMismatch(line, "Witt decompositions of p-forms are not defined",
                           line=line)
    dec = quad_normalize(form, state.budget)
    return {"decomposition": dec.to_dict(), "verified": dec.verify()}


def _quadratic(form: Form,
               verb: str,
               line: int) -> QuadraticForm:
    if not isinstance(form, QuadraticForm):
        raise TypeMismatch(line, f"{verb} needs a quadratic form",
                           line=line)
    return form


def _check(stmt: Check,
           state: ScriptState,
           errors: list[str] | None,
           logger: Logger | None) -> dict[str, Any]:
    opts: dict[str, str] = dict(stmt.options)
    errs: list[str] = []
    seeds: int | None = validate_int(source=opts,
                                     attr="seeds",
                                     min_val=1,
                                     default=qforms_get(QformsParam.SEEDS),
                                     errors=errs)
    seed: int | None = validate_int(source=opts,
                                    attr="seed",
                                    min_val=0,
                                    default=state.seed,
                                    errors=errs)
    mode: str | None = validate_str(source=opts,
                                    attr="mode",
                                    errors=errs)
    degrees: list[int] | None = validate_range(source=opts,
                                               attr="degrees",
                                               min_val=2,
                                               errors=errs)
    validate_keys(source=opts,
                  keys=["seeds", "seed", "mode", "degrees"],
                  errors=errs)
    if errs:
        raise TypeMismatch(stmt.line, "; ".join(errs),
                           line=stmt.line)
    report = run_suite(name=stmt.suite,
                       seeds=seeds,
                       seed=seed,
                       mode=mode,
                       degrees=degrees,
                       budget=state.budget,
                       errors=errors,
                       logger=logger)
    return report.to_dict()


def _execute(stmt: Statement,
             state: ScriptState,
             errors: list[str] | None,
             logger: Logger | None) -> dict[str, Any]:
    if isinstance(stmt, FieldDecl | ExtDecl | FormDecl | LetDecl | Use):
        return _declare(stmt, state, logger)
    if isinstance(stmt, Check):
        return _check(stmt, state, errors, logger)
    if isinstance(stmt, Transfer):
        k: FieldTower = state.tower(stmt.target, stmt.line)
        ctx = transfer_context(k, logger=logger)
        form: Form = _over(_operands((stmt.operand,), state, stmt.line), stmt.target, state, stmt.line)[0]
        result: dict[str, Any] = {"context": ctx.to_dict()}
        if isinstance(form, BilinearForm):
            result["transfer"] = transfer_bilinear(ctx, form).to_dict()
        elif isinstance(form, QuadraticForm):
            result["transfer"] = transfer_quadratic(ctx, form).to_dict()
        else:
            raise TypeMismatch(stmt.line, "transfers of p-forms are not defined",
                               line=stmt.line)
        if ctx.separable:
            result["identities"] = transfer_witt_checks(ctx, logger=logger).to_dict()
        return result

    line: int = stmt.line
    over: FieldTower | None = state.tower(stmt.over, line) if stmt.over else None
    match stmt.verb:
        case "print":
            return _print(stmt.args[0], state)
        case "wp?":
            x: FieldElement = _element(stmt.args[0], state.current_field(line), state)
            return wp_solve(x, budget=state.budget, logger=logger).to_dict()
        case "sqrt":
            r: FieldElement | None = sqrt(_element(stmt.args[0], state.current_field(line), state))
            return {"value": None if r is None else str(r)}
        case "charpoly":
            x = _element(stmt.args[0], state.current_field(line), state)
            return char_poly(x, over).to_dict()
        case "norm":
            x = _element(stmt.args[0], state.current_field(line), state)
            level: FieldTower = over or x.tower.base
            return {"norm": str(norm(x, level)), "stepwise": str(norm_stepwise(x, level))}

    forms: list[Form] = _over(_operands(stmt.args, state, line), stmt.over, state, line)
    match stmt.verb:
        case "isometric?":
            return form_isometry(forms[0], forms[1], budget=state.budget, logger=logger).to_dict()
        case "similar?":
            return similar(forms[0], forms[1], budget=state.budget, logger=logger).to_dict()
        case "witt":
            return _witt(forms[0], line, state, logger)
        case "simfield":
            return _simfield(forms[0], line, logger)
        case "normalize":
            dec = quad_normalize(_quadratic(forms[0], "normalize", line), state.budget)
            return {"decomposition": dec.to_dict(), "verified": dec.verify()}
    return arf_invariant(_quadratic(forms[0], "arf", line), state.budget).to_dict()


def script_run(script: Script,
               budget: int = None,
               seed: int = None,
               errors: list[str] = None,
               logger: Logger = None) -> list[dict[str, Any]]:
    """
    Run the statements of *script* in order, producing one report record per statement.

    A record carries the statement *line*, its *statement* text and either its *result* or its *error*.
    Errors are also appended to *errors*; the run continues with the next statement.

    :param script: the parsed script
    :param budget: the search budget (defaults to the configuration)
    :param seed: the seed for certificates and suites (defaults to the configuration)
    :param errors: incidental error messages
    :param logger: optional logger
    :return: the report records
    """
    # initialize the return variable
    result: list[dict[str, Any]] = []

    state: ScriptState = ScriptState(budget=budget if budget is not None else qforms_get(QformsParam.SEARCH_BUDGET),
                                     seed=seed if seed is not None else qforms_get(QformsParam.SEED))
    try:
        script_resolve(script)
    except UnknownIdentifier as e:
        if logger:
            logger.error(msg=str(e))
        if isinstance(errors, list):
            errors.append(str(e))
        return [{"line": e.line, "error": str(e)}]

    for stmt in script.statements:
        record: dict[str, Any] = {
            "line": stmt.line,
            "statement": str(stmt)
        }
        try:
            record["result"] = obj_to_dict(obj=_execute(stmt, state, errors, logger))
        except ScriptError as e:
            record["error"] = str(e)
        except QformsError as e:
            record["error"] = f"line {stmt.line}: {e}"
        except Exception as e:  # noqa: # noinspection PyBroadException
            record["error"] = f"line {stmt.line}: " + exc_format(exc=e,
                                                                 exc_info=sys.exc_info())
        if "error" in record:
            if logger:
                logger.error(msg=record["error"])
            if isinstance(errors, list):
                errors.append(record["error"])
        elif logger:
            logger.debug(msg=f"Ran line {stmt.line}: {stmt}")
        result.append(record)

    return result


def script_execute(text: str,
                   budget: int = None,
                   seed: int = None,
                   errors: list[str] = None,
                   logger: Logger = None) -> list[dict[str, Any]]:
    """
    Parse and run the script *text*.

    A syntax error produces a single error record, with its line and column.

    :return: the report records
    """
    try:
        script: Script = script_parse(text)
    except ScriptError as e:
        if logger:
            logger.error(msg=str(e))
        if isinstance(errors, list):
            errors.append(str(e))
        return [{"line": e.line, "column": e.column, "error": str(e)}]

    return script_run(script=script,
                      budget=budget,
                      seed=seed,
                      errors=errors,
                      logger=logger)

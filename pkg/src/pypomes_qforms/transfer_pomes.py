"""
Transfer of forms along a simple extension *K = F(λ)*, by the functional *s* with *s(1) = 1* and
*s(λ^i) = 0* for *0 < i < n*.

Forms over *K* become forms over *F* on the basis *λ^i·e_k*, indexed by *k·n + i*.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from logging import Logger
from typing import Any

from .cert_pomes import CertKind, DecisionOutcome, Verdict
from .decision_pomes import bil_is_metabolic, form_isometry, witt_equivalent
from .error_pomes import InseparableContext, NotSimpleStep
from .field_pomes import FieldElement, FieldTower, StepKind, char_poly, functional_s
from .form_pomes import BilinearForm, QuadraticForm, bil_diagonal, bil_pfister, diagonal_quadratic, quad_diagonal
from .matrix_pomes import Matrix, mat_zero


@dataclass(frozen=True)
class TransferContext:
    """
    The data of a simple step *K = F(λ)* needed by transfers.

    *powers* holds *s(λ^0), ..., s(λ^(2n-1))* computed by reduction modulo the minimal polynomial,
    *recurrence* the same values from *s(λ^m) = -Σ a_i·s(λ^(m-i))*. *designated* is *a_n* for odd *n*,
    and otherwise the first nonzero coefficient of odd index (*None* if there is none).
    """
    field: FieldTower
    base: FieldTower
    degree: int
    generator: FieldElement
    coefficients: tuple[FieldElement, ...]
    powers: tuple[FieldElement, ...]
    recurrence: tuple[FieldElement, ...]
    designated: FieldElement | None
    separable: bool

    @property
    def norm(self) -> FieldElement:
        return self.coefficients[-1]

    def s(self,
          x: FieldElement) -> FieldElement:
        return functional_s(self.field.coerce(x), self.field)

    def to_dict(self) -> dict[str, Any]:
        return {
            "field": self.field.key,
            "degree": self.degree,
            "separable": self.separable,
            "coefficients": [str(a) for a in self.coefficients],
            "powers": [str(x) for x in self.powers],
            "designated": None if self.designated is None else str(self.designated)
        }


def transfer_context(k: FieldTower,
                     logger: Logger = None) -> TransferContext:
    """
    Build the transfer context of the simple step *k* over its parent level.

    :raises NotSimpleStep: if *k* is a bottom level
    """
    if k.parent is None:
        raise NotSimpleStep(k.key, k.key)
    f: FieldTower = k.parent
    n: int = k.degree
    lam: FieldElement = k.element(k.gen_raw)
    coeffs: tuple[FieldElement, ...] = char_poly(lam, f).coefficients

    powers: list[FieldElement] = []
    x: FieldElement = k.one
    for _ in range(2 * n):
        powers.append(functional_s(x, k))
        x = x * lam
    rec: list[FieldElement] = [f.one] + [f.zero] * (n - 1)
    for m in range(n, 2 * n):
        rec.append(-sum((coeffs[i - 1] * rec[m - i] for i in range(1, n + 1)), f.zero))

    designated: FieldElement | None = coeffs[-1] if n % 2 else \
        next((coeffs[i - 1] for i in range(1, n + 1, 2) if coeffs[i - 1]), None)
    if logger:
        logger.debug(msg=f"Transfer context for {k.key}: powers {[str(v) for v in powers]}")
    return TransferContext(field=k,
                           base=f,
                           degree=n,
                           generator=lam,
                           coefficients=coeffs,
                           powers=tuple(powers),
                           recurrence=tuple(rec[:2 * n]),
                           designated=designated,
                           separable=k.kind == StepKind.SEPARABLE)


def _over_field(ctx: TransferContext,
                form: Any) -> Any:
    return form if form.tower is ctx.field else form.base_change(ctx.field)


def transfer_bilinear(ctx: TransferContext,
                      beta: BilinearForm) -> BilinearForm:
    """
    Compute *s_*(β)*, of Gram entries *s(λ^(i+j)·β(e_k, e_l))* at *(k·n + i, l·n + j)*.

    :raises TowerMismatch: if *β* is not defined over a level of the context's field
    """
    beta = _over_field(ctx, beta)
    n: int = ctx.degree
    lam: FieldElement = ctx.generator
    size: int = beta.dim * n
    gram: Matrix = mat_zero(ctx.base, size, size)
    for k in range(beta.dim):
        for l in range(beta.dim):
            g: FieldElement = beta.gram[k][l]
            if not g:
                continue
            for i in range(n):
                for j in range(n):
                    gram[k * n + i][l * n + j] = ctx.s(lam ** (i + j) * g)
    return BilinearForm(ctx.base, gram)


def transfer_quadratic(ctx: TransferContext,
                       q: QuadraticForm) -> QuadraticForm:
    """
    Compute *s_*(q) = s∘q*, expanding *q(Σ x_ki·λ^i·e_k)* and applying *s* to each coefficient.

    :raises TowerMismatch: if *q* is not defined over a level of the context's field
    """
    q = _over_field(ctx, q)
    n: int = ctx.degree
    lam: FieldElement = ctx.generator
    size: int = q.dim * n
    coeffs: Matrix = mat_zero(ctx.base, size, size)
    for k in range(q.dim):
        for l in range(k, q.dim):
            c: FieldElement = q.coeffs[k][l]
            if not c:
                continue
            for i in range(n):
                for j in range(n):
                    if k == l and j < i:
                        continue
                    factor: int = 1 if k != l or i == j else 2
                    coeffs[k * n + i][l * n + j] = ctx.s(lam ** (i + j) * c * factor)
    return QuadraticForm(ctx.base, coeffs)


@dataclass(frozen=True)
class CheckEntry:
    """
    One identity checked on a transfer: its name, verdict, and the decision backing it.
    """
    name: str
    verdict: Verdict
    outcome: DecisionOutcome | None = None
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {
            "name": self.name,
            "verdict": str(self.verdict)
        }
        if self.outcome is not None:
            result["decision"] = self.outcome.to_dict()
        if self.detail:
            result["detail"] = self.detail
        return result


@dataclass(frozen=True)
class TransferReport:
    context: TransferContext
    entries: tuple[CheckEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.verdict == Verdict.YES for e in self.entries)

    @property
    def failed(self) -> bool:
        return any(e.verdict == Verdict.NO for e in self.entries)

    def to_dict(self) -> dict[str, Any]:
        return {
            "context": self.context.to_dict(),
            "checks": [e.to_dict() for e in self.entries]
        }


def _entry(name: str,
           outcome: DecisionOutcome,
           **detail: Any) -> CheckEntry:
    return CheckEntry(name=name,
                      verdict=outcome.verdict,
                      outcome=outcome,
                      detail=detail)


def _flag(name: str,
          ok: bool,
          **detail: Any) -> CheckEntry:
    return CheckEntry(name=name,
                      verdict=Verdict.YES if ok else Verdict.NO,
                      detail=detail)


def _gram_text(form: BilinearForm) -> list[list[str]]:
    return [[str(x) for x in row] for row in form.gram]


def transfer_witt_checks(ctx: TransferContext,
                         logger: Logger = None) -> TransferReport:
    """
    Check the transfers of *<1>_b*, *<λ>_b* and *<<λ>>_b* against their expected Witt classes.

    With *a = a_n* the norm of *λ*: *s_*(<1>_b)* is *<1>_b* for odd *n* and *<1, a>_b* for even *n*;
    *s_*(<λ>_b)* is *<a>_b* for odd *n* and metabolic for even *n*; *s_*(<<λ>>_b) ∼ <<a>>_b*, and
    *s_*(<<λ>>_b)* has diagonal form isometric to *<s(λ^0), ..., s(λ^(2n-1))>*. The Gram matrices are also
    compared entrywise with the power table, and the table with the linear recurrence.

    :raises InseparableContext: if the step is not separable
    """
    if not ctx.separable:
        raise InseparableContext(ctx.field.key)
    f: FieldTower = ctx.base
    k: FieldTower = ctx.field
    n: int = ctx.degree
    a: FieldElement = ctx.norm
    odd: bool = n % 2 == 1
    entries: list[CheckEntry] = []

    one_t: BilinearForm = transfer_bilinear(ctx, bil_diagonal(k, [1]))
    lam_t: BilinearForm = transfer_bilinear(ctx, bil_diagonal(k, [ctx.generator]))
    pf_t: BilinearForm = transfer_bilinear(ctx, bil_pfister(k, [ctx.generator]))
    p: tuple[FieldElement, ...] = ctx.powers

    entries.append(_flag("power-table-recurrence", ctx.powers == ctx.recurrence,
                         powers=[str(x) for x in p]))
    entries.append(_flag("gram-one", all(one_t.gram[i][j] == p[i + j] for i in range(n) for j in range(n)),
                         gram=_gram_text(one_t)))
    entries.append(_flag("gram-lambda", all(lam_t.gram[i][j] == p[i + j + 1] for i in range(n) for j in range(n)),
                         gram=_gram_text(lam_t)))

    expected_one: BilinearForm = bil_diagonal(f, [1] if odd else [1, a])
    entries.append(_entry("transfer-one", witt_equivalent(one_t, expected_one, logger=logger),
                          expected=str(expected_one)))
    if odd:
        entries.append(_entry("transfer-lambda", witt_equivalent(lam_t, bil_diagonal(f, [a]), logger=logger),
                              expected=str(bil_diagonal(f, [a]))))
    else:
        entries.append(_entry("transfer-lambda", bil_is_metabolic(lam_t, logger=logger),
                              expected="metabolic"))
    entries.append(_entry("transfer-pfister", witt_equivalent(pf_t, bil_pfister(f, [a]), logger=logger),
                          expected=str(bil_pfister(f, [a]))))
    entries.append(_entry("transfer-pfister-diagonal",
                          form_isometry(diagonal_quadratic(pf_t), quad_diagonal(f, list(p)))))
    if logger:
        logger.debug(msg=f"Transfer identities over {k.key}: "
                         f"{[(e.name, str(e.verdict)) for e in entries]}")
    return TransferReport(context=ctx,
                          entries=tuple(entries))


def _reciprocity_permutation(ctx: TransferContext,
                             b_dim: int,
                             q_dim: int) -> Matrix:
    # (λ^i·e_k)⊗f_l on the right, λ^i·(e_k⊗f_l) on the left
    n: int = ctx.degree
    size: int = n * b_dim * q_dim
    perm: Matrix = mat_zero(ctx.base, size, size)
    for k in range(b_dim):
        for l in range(q_dim):
            for i in range(n):
                perm[(k * q_dim + l) * n + i][(k * n + i) * q_dim + l] = ctx.base.one
    return perm


def frobenius_reciprocity_check(ctx: TransferContext,
                                b: BilinearForm,
                                q: QuadraticForm,
                                budget: int = None,
                                logger: Logger = None) -> TransferReport:
    """
    Check *s_*(b ⊗ q_K) ≅ s_*(b) ⊗ q*, with the permutation of the two tensor bases as witness,
    and the Witt class identities *s_*(<<λ>>_b ⊗ q_K) ∼ <<a_n>>_b ⊗ q*, and for odd *n*,
    *s_*(q_K) ∼ q* and *s_*(λ·q_K) ∼ a_n·q*.

    Identities whose decision is not complete for the given forms are reported as *unknown*.
    """
    f: FieldTower = ctx.base
    k: FieldTower = ctx.field
    q_k: QuadraticForm = q.base_change(k)
    entries: list[CheckEntry] = []

    left: QuadraticForm = transfer_quadratic(ctx, _over_field(ctx, b).tensor(q_k))
    right: QuadraticForm = transfer_bilinear(ctx, b).tensor(q)
    perm: Matrix = _reciprocity_permutation(ctx, b.dim, q.dim)
    outcome: DecisionOutcome
    if left.compose(perm) == right:
        outcome = DecisionOutcome.yes(CertKind.ISOMETRY,
                                      left=left,
                                      right=right,
                                      matrix=perm)
    else:
        outcome = form_isometry(left, right, budget=budget, logger=logger)
    entries.append(_entry("reciprocity", outcome))

    pf_q: QuadraticForm = transfer_quadratic(ctx, bil_pfister(k, [ctx.generator]).tensor(q_k))
    entries.append(_entry("pfister-witt", witt_equivalent(pf_q, bil_pfister(f, [ctx.norm]).tensor(q),
                                                          budget=budget, logger=logger)))
    if ctx.degree % 2:
        entries.append(_entry("odd-witt", witt_equivalent(transfer_quadratic(ctx, q_k), q,
                                                          budget=budget, logger=logger)))
        entries.append(_entry("odd-scaled-witt", witt_equivalent(transfer_quadratic(ctx, q_k.scale(ctx.generator)),
                                                                 q.scale(ctx.norm),
                                                                 budget=budget, logger=logger)))
    return TransferReport(context=ctx,
                          entries=tuple(entries))

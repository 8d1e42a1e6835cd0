"""
Similarity factors and similarity fields.

For a totally singular form (or p-form) *τ* the set *G^0(τ)* of similarity factors, with 0, is the stabilizer
of its value space, a field between *F^p* and *F*. For a bilinear form *β*, *G(β) = G(β_an) ∩ G(q_β)*, computed
here by enumeration inside the containing field *G^0(q_β_an)*, with an explicit completeness flag.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import StrEnum
from logging import Logger
from typing import Any

from .cert_pomes import CertKind, DecisionOutcome, Verdict
from .decision_pomes import (
    WittDecomposition, bil_isometry, bil_witt_decompose, finite_elements,
    form_isometry, is_finite, quad_isotropic, quad_isometry, split_values, ts_isometry
)
from .error_pomes import DimensionMismatch, ZeroScalar
from .field_pomes import FieldElement, FieldTower
from .form_pomes import (
    BilinearForm, PForm, QuadraticForm, diagonal_quadratic, pform_diagonal,
    pform_quasi_pfister, quad_diagonal, quad_quasi_pfister
)
from .frobenius_pomes import (
    SquareSubspace, field_closure, stabilizer_field, subspace_from_generators, subspace_transporter
)

TsForm = QuadraticForm | PForm


class Completeness(StrEnum):
    EXACT = "exact"
    LOWER_BOUND = "lower-bound"


@dataclass(frozen=True)
class SimilarityField:
    """
    A field *G* with *F^p ⊆ G ⊆ F*, held as a *F^p*-subspace of *F*.

    *ambient* is the field known to contain the true answer, and *log* records each tested candidate
    with its verdict, for bilinear computations.
    """
    field: SquareSubspace
    completeness: Completeness = Completeness.EXACT
    generators: tuple[FieldElement, ...] = ()
    ambient: SquareSubspace | None = None
    log: tuple[tuple[FieldElement, str], ...] = ()

    @property
    def dim(self) -> int:
        return self.field.dim

    @property
    def is_exact(self) -> bool:
        return self.completeness == Completeness.EXACT

    def contains(self,
                 c: FieldElement) -> bool:
        return self.field.contains(c)

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {
            "dim": self.dim,
            "completeness": str(self.completeness),
            "generators": [str(g) for g in self.generators],
            "basis": [str(b) for b in self.field.basis()]
        }
        if self.ambient is not None:
            result["ambient_dim"] = self.ambient.dim
        if self.log:
            result["candidates"] = [{"candidate": str(c), "verdict": v} for c, v in self.log]
        return result


@dataclass(frozen=True)
class QuasiPfisterFactorization:
    """
    The splitting *τ_an ≅ π ⊗ σ*, with *π* quasi-Pfister over the generators of the similarity field.
    """
    pfister: TsForm
    cofactor: TsForm
    outcome: DecisionOutcome

    def to_dict(self) -> dict[str, Any]:
        return {
            "pfister": str(self.pfister),
            "cofactor": str(self.cofactor),
            "isometry": self.outcome.to_dict()
        }


@dataclass(frozen=True)
class RelativeFactors:
    """
    The set *{c : φ ≅ c·ψ}*: empty, or the nonzero part of the subspace *coset*, a coset of *G^0(ψ)*.
    """
    coset: SquareSubspace | None
    factor: FieldElement | None
    outcome: DecisionOutcome = field(compare=False)

    @property
    def is_empty(self) -> bool:
        return self.factor is None

    def to_dict(self) -> dict[str, Any]:
        return {
            "factor": None if self.factor is None else str(self.factor),
            "coset_dim": 0 if self.coset is None else self.coset.dim,
            "decision": self.outcome.to_dict()
        }


def _diag_like(form: TsForm,
               values: list[FieldElement]) -> TsForm:
    if isinstance(form, PForm):
        return pform_diagonal(form.tower, values)
    return quad_diagonal(form.tower, values)


def whole_field(tower: FieldTower) -> SquareSubspace:
    """
    The field *F* itself, as the full *F^p*-subspace.
    """
    size: int = tower.p ** len(tower.pbasis_raw)
    return SquareSubspace(tower=tower,
                          vectors=[[tower.one if i == j else tower.zero for j in range(size)]
                                   for i in range(size)])


def _field_generators(g: SquareSubspace) -> list[FieldElement]:
    # greedy: add basis elements of g outside the closure of those picked so far
    tower: FieldTower = g.tower
    gens: list[FieldElement] = []
    current: SquareSubspace = field_closure([], tower)
    for b in g.basis():
        if current.dim == g.dim:
            break
        if not current.contains(b):
            gens.append(b)
            current = field_closure(gens, tower)
    return gens


def ts_similarity_field(tau: TsForm,
                        logger: Logger = None) -> tuple[SimilarityField, QuasiPfisterFactorization | None]:
    """
    Compute *G^0(τ)* for the totally singular form (or p-form) *τ*, and the factorization *τ_an ≅ π ⊗ σ*.

    The field is the stabilizer of the value space of *τ*; *π* is the quasi-Pfister form on greedily chosen
    field generators, and *σ* is diagonal in a basis of the value space over that field.
    The zero form has *G^0 = F* and no factorization.

    :param tau: the form
    :param logger: optional logger
    :return: the similarity field (always exact) and the factorization
    """
    tower: FieldTower = tau.tower
    values: list[FieldElement] = [v for v in tau.diagonal() if v]
    kept, _ = split_values(values, tower)
    an: list[FieldElement] = [values[i] for i in kept]
    if not an:
        return SimilarityField(field=whole_field(tower)), None

    space: SquareSubspace = subspace_from_generators(an, tower=tower)
    g: SquareSubspace = stabilizer_field(space)
    gens: list[FieldElement] = _field_generators(g)
    pfister: TsForm = pform_quasi_pfister(tower, gens) if isinstance(tau, PForm) else \
        quad_quasi_pfister(tower, gens)
    g_basis: list[FieldElement] = g.basis()
    sigma: list[FieldElement] = []
    span: SquareSubspace = SquareSubspace(tower=tower,
                                          vectors=[])
    for v in an:
        if not span.contains(v):
            sigma.append(v)
            span = subspace_from_generators([b * s for b in g_basis for s in sigma], tower=tower)
    products: list[FieldElement] = [x * s for s in sigma for x in pfister.diagonal()]
    outcome: DecisionOutcome = ts_isometry(_diag_like(tau, an), _diag_like(tau, products))
    if logger:
        logger.debug(msg=f"Similarity field of dimension {g.dim}, generators {[str(x) for x in gens]}, "
                         f"cofactor of dimension {len(sigma)}")
    return SimilarityField(field=g,
                           generators=tuple(gens)), \
        QuasiPfisterFactorization(pfister=pfister,
                                  cofactor=_diag_like(tau, sigma),
                                  outcome=outcome)


def _similarity(c: FieldElement,
                phi: Any,
                psi: Any,
                nested: DecisionOutcome) -> DecisionOutcome:
    # wrap the isometry decision between phi and c·psi
    if nested.is_unknown:
        return nested
    return DecisionOutcome(verdict=nested.verdict,
                           certificate=DecisionOutcome.yes(CertKind.SIMILARITY,
                                                           factor=c,
                                                           left=phi,
                                                           right=psi,
                                                           outcome=nested).certificate)


def ts_relative_factors(phi: TsForm,
                        psi: TsForm,
                        logger: Logger = None) -> RelativeFactors:
    """
    Compute the relative similarity factors *{c : φ ≅ c·ψ}* of totally singular forms (or p-forms).

    They are the nonzero *c* with *c·D(ψ) ⊆ D(φ)*, provided both value spaces have the same dimension.

    :raises DimensionMismatch: if the dimensions differ
    """
    if phi.dim != psi.dim:
        raise DimensionMismatch(phi.dim, psi.dim)
    tower: FieldTower = phi.tower
    d_phi: SquareSubspace = subspace_from_generators(phi.diagonal(), tower=tower)
    d_psi: SquareSubspace = subspace_from_generators(psi.diagonal(), tower=tower)
    coset: SquareSubspace | None = None
    if d_phi.dim == d_psi.dim:
        coset = subspace_transporter(d_psi, d_phi) if d_psi.dim else whole_field(tower)
    if coset is None or coset.dim == 0:
        if logger:
            logger.debug(msg=f"No relative similarity factor between {phi} and {psi}")
        return RelativeFactors(coset=None,
                               factor=None,
                               outcome=DecisionOutcome.no(CertKind.INVARIANT,
                                                          invariant="transporter",
                                                          left=phi,
                                                          right=psi))
    c: FieldElement = coset.basis()[0]
    return RelativeFactors(coset=coset,
                           factor=c,
                           outcome=_similarity(c, phi, psi, ts_isometry(phi, psi.scale(c))))


def bil_similarity_factor(c: FieldElement,
                          beta: BilinearForm,
                          logger: Logger = None) -> DecisionOutcome:
    """
    Decide whether *β ≅ c·β*.

    :raises ZeroScalar: if *c* is zero
    """
    if not c:
        raise ZeroScalar()
    c = beta.tower.coerce(c)
    return _similarity(c, beta, beta, bil_isometry(beta, beta.scale(c), logger=logger))


def bil_similarity_field(beta: BilinearForm,
                         logger: Logger = None) -> SimilarityField:
    """
    Compute *G^0(β)* for a bilinear form.

    The answer lies in *E_0 = G^0(q_β_an)*. The basis of *E_0* and the sums of two basis elements are tested
    as factors, and the passing ones generate the result. It is exact when it equals *E_0*, or when it has
    index 2 in *E_0* (no field lies strictly between); otherwise it is a lower bound.

    :param beta: the form
    :param logger: optional logger
    :return: the similarity field
    """
    tower: FieldTower = beta.tower
    ns: BilinearForm = beta.ns_part()
    whole: SquareSubspace = whole_field(tower)
    if ns.dim == 0:
        return SimilarityField(field=whole)
    dec: WittDecomposition = bil_witt_decompose(ns, logger=logger)
    if dec.anisotropic_dim == 0 and not any(ns.diagonal()):
        # hyperbolic
        return SimilarityField(field=whole)

    e0: SquareSubspace = ts_similarity_field(diagonal_quadratic(dec.anisotropic_form()))[0].field \
        if dec.anisotropic_dim else whole
    basis: list[FieldElement] = e0.basis()
    candidates: list[FieldElement] = basis + [x + y for x, y in itertools.combinations(basis, 2)]
    log: list[tuple[FieldElement, str]] = []
    passing: list[FieldElement] = []
    for c in candidates:
        outcome: DecisionOutcome = bil_similarity_factor(c, beta)
        log.append((c, str(outcome.verdict)))
        if outcome.is_yes:
            passing.append(c)
    closure: SquareSubspace = field_closure(passing, tower)
    exact: bool = closure.dim == e0.dim or 2 * closure.dim == e0.dim
    if logger:
        logger.debug(msg=f"Bilinear similarity field: {len(passing)} of {len(candidates)} candidates pass, "
                         f"dimension {closure.dim} inside {e0.dim}")
    return SimilarityField(field=closure,
                           completeness=Completeness.EXACT if exact else Completeness.LOWER_BOUND,
                           generators=tuple(_field_generators(closure)),
                           ambient=e0,
                           log=tuple(log))


def _enumerate_factors(phi: Any,
                       psi: Any,
                       budget: int,
                       logger: Logger) -> DecisionOutcome:
    # finite fields: try every nonzero scalar
    tower: FieldTower = phi.tower
    outcomes: list[tuple[FieldElement, DecisionOutcome]] = []
    for c in finite_elements(tower):
        nested: DecisionOutcome = form_isometry(phi, psi.scale(c), budget=budget, logger=logger)
        if nested.is_yes:
            return _similarity(c, phi, psi, nested)
        if nested.is_unknown:
            return DecisionOutcome.unknown(reason=f"undecided isometry for factor {c}")
        outcomes.append((c, nested))
    return DecisionOutcome.no(CertKind.EXHAUSTIVE,
                              left=phi,
                              right=psi,
                              outcomes=outcomes)


def similar(phi: BilinearForm | QuadraticForm | PForm,
            psi: BilinearForm | QuadraticForm | PForm,
            budget: int = None,
            logger: Logger = None) -> DecisionOutcome:
    """
    Decide whether *φ ≅ c·ψ* for some nonzero *c*, with a factor witness.

    Complete for totally singular forms and p-forms, and over finite fields. For bilinear forms the
    candidates come from the coset of the diagonal forms, and a *no* is exact when the similarity field of
    *ψ* fills that coset's field. For nonsingular quadratic forms, isotropy can refute; candidate factors are
    ratios of values.

    :raises DimensionMismatch: if the dimensions differ
    """
    if phi.dim != psi.dim:
        raise DimensionMismatch(phi.dim, psi.dim)
    tower: FieldTower = phi.tower
    ts_kind: bool = isinstance(phi, PForm) or (isinstance(phi, QuadraticForm) and phi.is_totally_singular())
    ts_other: bool = isinstance(psi, PForm) or (isinstance(psi, QuadraticForm) and psi.is_totally_singular())
    if ts_kind and ts_other:
        return ts_relative_factors(phi, psi, logger=logger).outcome
    if is_finite(tower):
        return _enumerate_factors(phi, psi, budget, logger)

    if isinstance(phi, BilinearForm):
        rf: RelativeFactors = ts_relative_factors(diagonal_quadratic(phi), diagonal_quadratic(psi))
        if rf.is_empty:
            return DecisionOutcome.no(CertKind.INVARIANT,
                                      invariant="transporter",
                                      left=phi,
                                      right=psi)
        e: SquareSubspace = subspace_transporter(rf.coset, rf.coset) if rf.coset.dim else whole_field(tower)
        c0: FieldElement = rf.factor
        candidates: list[FieldElement] = [c0] + [c0 * g for g in e.basis()]
        for c in candidates:
            nested: DecisionOutcome = bil_isometry(phi, psi.scale(c), logger=logger)
            if nested.is_yes:
                return _similarity(c, phi, psi, nested)
        g_psi: SimilarityField = bil_similarity_field(psi)
        if g_psi.is_exact and g_psi.dim == e.dim:
            # every relative factor would lie in c0·G(ψ), which holds c0
            return _similarity(c0, phi, psi, bil_isometry(phi, psi.scale(c0)))
        return DecisionOutcome.unknown(reason="no factor among the coset candidates",
                                       candidates=len(candidates))

    iso_phi: DecisionOutcome = quad_isotropic(phi, budget)
    iso_psi: DecisionOutcome = quad_isotropic(psi, budget)
    if {iso_phi.verdict, iso_psi.verdict} == {Verdict.YES, Verdict.NO}:
        return DecisionOutcome.no(CertKind.INVARIANT,
                                  invariant="isotropy",
                                  left=phi,
                                  right=psi,
                                  outcomes=[iso_phi, iso_psi])
    candidates = [tower.one]
    for a in phi.diagonal():
        for b in psi.diagonal():
            if a and b and a / b not in candidates:
                candidates.append(a / b)
    for c in candidates:
        nested = quad_isometry(phi, psi.scale(c), budget=budget, logger=logger)
        if nested.is_yes:
            return _similarity(c, phi, psi, nested)
    return DecisionOutcome.unknown(bound=budget,
                                   candidates=len(candidates))


def round_values_check(pi: BilinearForm | QuadraticForm | PForm,
                       samples: list[list[FieldElement]],
                       logger: Logger = None) -> list[tuple[FieldElement, DecisionOutcome]]:
    """
    Check that nonzero values of the (quasi-)Pfister form *π* at the sample vectors are similarity factors of *π*.
    """
    result: list[tuple[FieldElement, DecisionOutcome]] = []
    for x in samples:
        v: FieldElement = pi.evaluate(x)
        if not v:
            continue
        if isinstance(pi, BilinearForm):
            outcome: DecisionOutcome = bil_similarity_factor(v, pi, logger=logger)
        else:
            outcome = _similarity(v, pi, pi, form_isometry(pi, pi.scale(v), logger=logger))
        result.append((v, outcome))
    return result

"""
Seeded property suites: generated instances on which the descent, similarity, norm and transfer
statements are checked in their verifiable directions, plus cross-checks against the brute-force oracles.

Every instance is replayed from its *InstanceSpec* alone. Every decided outcome produced while checking
an instance is re-validated by the independent certificate checker; a rejected certificate fails the instance.
"""
from __future__ import annotations

import random
import sys
import time
from collections.abc import Callable
from dataclasses import dataclass, field, replace
from enum import StrEnum
from logging import Logger
from typing import Any

from .cert_pomes import CertKind, DecisionOutcome, Verdict, cert_check
from .config_pomes import QformsParam, qforms_get
from .decision_pomes import (
    bil_isometry, bil_witt_decompose, finite_elements, form_isometry,
    is_finite, quad_isometry, quad_isotropic, rank_of, ts_isometry, wp_solve
)
from .error_pomes import GenerationExhausted, IrreducibilityUnknown, UnknownSuite
from .field_pomes import (
    FieldElement, FieldTower, StepKind, char_poly, norm, norm_stepwise, sqrt, tower_base, tower_extend
)
from .form_pomes import (
    BilinearForm, PForm, QuadraticForm, bil_diagonal, bil_metabolic, bil_pfister,
    diagonal_quadratic, pform_quasi_pfister, quad_block, quad_blocks, quad_diagonal, quad_quasi_pfister
)
from .frobenius_pomes import SquareSubspace
from .matrix_pomes import Matrix, Vector, mat_det
from .obj_pomes import exc_format
from .oracle_pomes import OracleKind, oracle_bruteforce
from .similarity_pomes import (
    bil_similarity_factor, similar, ts_relative_factors, ts_similarity_field
)
from .transfer_pomes import frobenius_reciprocity_check, transfer_context, transfer_witt_checks


class Status(StrEnum):
    """
    Outcomes of one instance.
    """
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"
    CONTROL = "control"


class SuiteName(StrEnum):
    """
    The available suites.
    """
    ARTIN_SPRINGER = "artin-springer"
    ISOMETRY_DESCENT = "isometry-descent"
    SIMILARITY_DESCENT = "similarity-descent"
    SYMMETRIC_FUNCTIONS = "symmetric-functions"
    NORM_PRINCIPLE = "norm-principle"
    TRANSFER_IDENTITIES = "transfer-identities"
    ORACLES = "oracles"


SUITE_MODES: dict[SuiteName, tuple[str, ...]] = {
    SuiteName.ISOMETRY_DESCENT: ("separable-ts-bil", "odd-quadratic"),
    SuiteName.SIMILARITY_DESCENT: ("separable-ts-bil", "odd-quadratic", "p-form")
}

_SEVERITY: dict[Status, int] = {
    Status.PASS: 0,
    Status.CONTROL: 1,
    Status.UNKNOWN: 2,
    Status.FAIL: 3
}


@dataclass(frozen=True)
class InstanceSpec:
    """
    A complete recipe for one instance.

    The field recipe is *GF(p^k)(names)*; the form recipe is *kind*, *dim* and the coefficient degree
    bound *height*; the extension recipe is *degree* and *family* (*trinomial*, *eisenstein*,
    *artin-schreier*, *inseparable*, or *none* for no extension). *variant* selects a sub-case of a suite.
    """
    seed: int
    suite: str = ""
    mode: str = ""
    variant: int = 0
    p: int = 2
    k: int = 1
    names: tuple[str, ...] = ("t",)
    kind: str = "ts"
    dim: int = 2
    height: int = 2
    degree: int = 2
    family: str = "trinomial"
    budget: int = 2

    @property
    def separable(self) -> bool:
        return self.family != "inseparable"

    def shrunk(self) -> list[InstanceSpec]:
        """
        The recipes one step smaller than this one, in dimension, degree or height.
        """
        result: list[InstanceSpec] = []
        if self.dim > 1:
            result.append(replace(self, dim=self.dim - 1))
        if self.degree > 2 and self.family in ("trinomial", "eisenstein"):
            result.append(replace(self, degree=self.degree - 1))
        if self.height > 1:
            result.append(replace(self, height=self.height - 1))
        return result

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "suite": self.suite,
            "mode": self.mode,
            "variant": self.variant,
            "field": {"p": self.p, "k": self.k, "names": list(self.names)},
            "form": {"kind": self.kind, "dim": self.dim, "height": self.height},
            "extension": {"degree": self.degree, "family": self.family},
            "budget": self.budget
        }


@dataclass(frozen=True)
class Instance:
    spec: InstanceSpec
    field: FieldTower
    extension: FieldTower
    forms: dict[str, Any] = field(hash=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "field": self.field.key,
            "extension": self.extension.to_dict(),
            "forms": {name: form.to_dict() for name, form in self.forms.items()}
        }


@dataclass(frozen=True)
class InstanceResult:
    """
    The verdict on one instance, with the decisions backing it and, on failure, the smallest failing recipe.
    """
    spec: InstanceSpec
    status: Status
    detail: dict[str, Any]
    outcomes: tuple[tuple[str, DecisionOutcome], ...]
    checked: int = 0
    rejected: int = 0
    minimal: InstanceSpec | None = None

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {
            "seed": self.spec.seed,
            "status": str(self.status),
            "spec": self.spec.to_dict(),
            "detail": self.detail,
            "decisions": [{"check": name} | outcome.to_dict() for name, outcome in self.outcomes]
        }
        if self.minimal is not None:
            result["minimal"] = self.minimal.to_dict()
        return result


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    mode: str
    results: tuple[InstanceResult, ...]
    wall_time: float = 0.0

    @property
    def counts(self) -> dict[str, int]:
        result: dict[str, int] = {str(s): 0 for s in Status}
        for r in self.results:
            result[str(r.status)] += 1
        return result

    @property
    def passed(self) -> bool:
        return all(r.status != Status.FAIL for r in self.results)

    @property
    def certificates(self) -> int:
        return sum(r.checked for r in self.results)

    @property
    def rejected(self) -> int:
        return sum(r.rejected for r in self.results)

    @property
    def unknown_rate(self) -> float:
        return self.counts[Status.UNKNOWN] / len(self.results) if self.results else 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "mode": self.mode,
            "counts": self.counts,
            "certificates": self.certificates,
            "rejected": self.rejected,
            "passed": self.passed,
            "instances": [r.to_dict() for r in self.results],
            "wall_time": round(self.wall_time, 3)
        }


@dataclass
class _Trial:
    # the mutable state of an instance being checked
    status: Status = Status.PASS
    detail: dict[str, Any] = field(default_factory=dict)
    outcomes: list[tuple[str, DecisionOutcome]] = field(default_factory=list)

    def mark(self,
             status: Status,
             reason: str) -> None:
        if _SEVERITY[status] > _SEVERITY[self.status]:
            self.status = status
        self.detail.setdefault("reasons", []).append(reason)

    def record(self,
               name: str,
               outcome: DecisionOutcome) -> DecisionOutcome:
        self.outcomes.append((name, outcome))
        return outcome

    def expect(self,
               name: str,
               outcome: DecisionOutcome,
               verdict: Verdict) -> bool:
        self.record(name, outcome)
        if outcome.verdict == verdict:
            return True
        if outcome.is_unknown:
            self.mark(Status.UNKNOWN, f"{name}: undecided")
        else:
            self.mark(Status.FAIL, f"{name}: expected {verdict}, got {outcome.verdict}")
        return False

    def check(self,
              name: str,
              holds: bool) -> bool:
        self.detail.setdefault("checks", {})[name] = holds
        if not holds:
            self.mark(Status.FAIL, f"{name}: does not hold")
        return holds


# instance generation
def _first_gen(tower: FieldTower) -> FieldElement:
    return tower.gens()[tower.names[0]] if tower.names else tower.one


def _random_constant(tower: FieldTower,
                     rng: random.Random,
                     height: int) -> FieldElement:
    if tower.names:
        return tower.random_element(rng, degree=height, nonzero=True)
    units: list[FieldElement] = list(finite_elements(tower))
    return units[rng.randrange(len(units))]


def _candidate(tower: FieldTower,
               spec: InstanceSpec,
               attempt: int,
               rng: random.Random) -> list[FieldElement | int] | None:
    # coefficients of a candidate polynomial, lowest degree first
    n: int = spec.degree
    p: int = tower.p
    t: FieldElement = _first_gen(tower)
    match spec.family:
        case "inseparable":
            if attempt or not tower.names:
                return None
            return [-tower.pbasis()[0]] + [0] * (p - 1) + [1]
        case "artin-schreier":
            a: FieldElement = t if attempt == 0 and tower.names else _random_constant(tower, rng, spec.height)
            return [-a, -1] + [0] * (p - 2) + [1]
        case "eisenstein":
            if not tower.names:
                return None
            g: list[int] = [rng.randrange(p) for _ in range(n - 1)]
            if n % p == 0 and not any(g[i - 1] for i in range(1, n) if i % p):
                g[0] = 1
            return [t] + [t * c for c in g] + [1]
    if attempt == 0:
        return [t, 1] + [0] * (n - 2) + [1]
    coeffs: list[FieldElement | int] = [_random_constant(tower, rng, spec.height)] + [0] * (n - 1) + [1]
    coeffs[rng.choice([i for i in range(1, n) if i % p])] = 1
    return coeffs


def _anisotropic_values(tower: FieldTower,
                        rng: random.Random,
                        dim: int,
                        height: int) -> list[FieldElement]:
    # values independent over K^p, completed from the p-basis monomials when random draws fall short
    target: int = min(dim, tower.p ** tower.nvars)
    result: list[FieldElement] = []
    for _ in range(8 * target):
        if len(result) == target:
            break
        v: FieldElement = _random_constant(tower, rng, height)
        if rank_of(result + [v], tower) == len(result) + 1:
            result.append(v)
    idx: int = 0
    while len(result) < target:
        v = tower.pbasis_monomial(idx)
        if rank_of(result + [v], tower) == len(result) + 1:
            result.append(v)
        idx += 1
    return result


def _random_vector(tower: FieldTower,
                   rng: random.Random,
                   n: int,
                   height: int = 1) -> Vector:
    while True:
        v: Vector = [tower.random_element(rng, degree=height) for _ in range(n)]
        if any(v):
            return v


def _random_invertible(tower: FieldTower,
                       rng: random.Random,
                       n: int,
                       height: int = 1) -> Matrix:
    while True:
        m: Matrix = [[tower.random_element(rng, degree=height) for _ in range(n)] for _ in range(n)]
        if mat_det(tower, m):
            return m


def _base_forms(tower: FieldTower,
                spec: InstanceSpec,
                rng: random.Random) -> dict[str, Any]:
    if spec.kind == "quadratic":
        pairs: list[list[tuple[FieldElement, FieldElement]]] = [
            [(tower.random_element(rng, degree=spec.height), tower.random_element(rng, degree=spec.height))
             for _ in range(max(1, spec.dim // 2))] for _ in range(2)]
        return {"phi": quad_blocks(tower, pairs[0]),
                "psi": quad_blocks(tower, pairs[1])}
    a: list[FieldElement] = _anisotropic_values(tower, rng, spec.dim, spec.height)
    b: list[FieldElement] = _anisotropic_values(tower, rng, spec.dim, spec.height)
    match spec.kind:
        case "bilinear":
            return {"phi": bil_diagonal(tower, a), "psi": bil_diagonal(tower, b)}
        case "p-form":
            return {"phi": PForm(tower, a), "psi": PForm(tower, b)}
    return {"phi": quad_diagonal(tower, a), "psi": quad_diagonal(tower, b)}


def gen_instance(spec: InstanceSpec,
                 attempts: int = None,
                 logger: Logger = None) -> Instance:
    """
    Generate the field, the extension and the base forms described by *spec*, deterministically.

    The extension polynomial is drawn from the family of the recipe. The first candidate of a family is
    fixed (*X^n + X + t*, *X² + X + t*, *X^n + t·g(X) + t*, *X^p - t*); later candidates are random,
    and each is kept only if its irreducibility is certified.

    :param spec: the recipe
    :param attempts: candidate polynomials to try (defaults to the configuration)
    :param logger: optional logger
    :return: the instance
    :raises GenerationExhausted: if no candidate could be certified
    """
    if attempts is None:
        attempts = qforms_get(QformsParam.GEN_ATTEMPTS)
    base: FieldTower = tower_base(spec.p, spec.k, spec.names)
    rng: random.Random = random.Random(spec.seed)
    ext: FieldTower | None = base if spec.family == "none" else None
    attempt: int = 0
    while ext is None and attempt < attempts:
        coeffs: list[FieldElement | int] | None = _candidate(base, spec, attempt, rng)
        if coeffs is None:
            break
        try:
            ext = tower_extend(parent=base,
                               var="x",
                               coeffs=coeffs,
                               seed=spec.seed,
                               logger=logger)
        except IrreducibilityUnknown as e:
            if logger:
                logger.debug(msg=f"Candidate {attempt} rejected: {e}")
        attempt += 1
    if ext is None:
        raise GenerationExhausted(f"{spec.family}({spec.degree}) over {base.key}", attempts)

    return Instance(spec=spec,
                    field=base,
                    extension=ext,
                    forms=_base_forms(base, spec, rng))


# suite runners: each checks one instance, recording its decisions into the trial
Runner = Callable[[Instance, random.Random, _Trial, Logger | None], None]


def _run_artin_springer(inst: Instance,
                        rng: random.Random,
                        trial: _Trial,
                        logger: Logger | None) -> None:
    phi: BilinearForm | QuadraticForm = inst.forms["phi"]
    ext: FieldTower = inst.extension
    budget: int = inst.spec.budget
    q: QuadraticForm = diagonal_quadratic(phi) if isinstance(phi, BilinearForm) else phi
    trial.detail["form"] = str(phi)
    trial.expect("anisotropic-over-base", quad_isotropic(q, budget=budget), Verdict.NO)
    over_ext: DecisionOutcome = quad_isotropic(q.base_change(ext), budget=budget)
    if ext.kind == StepKind.INSEPARABLE:
        trial.record("control-over-extension", over_ext)
        trial.detail["isotropic-over-extension"] = str(over_ext.verdict)
        trial.mark(Status.CONTROL, "inseparable extension, excluded")
        return
    trial.expect("anisotropic-over-extension", over_ext, Verdict.NO)
    if isinstance(phi, BilinearForm):
        trial.check("anisotropic-part-over-extension",
                    bil_witt_decompose(phi.base_change(ext)).anisotropic_dim == phi.dim)


def _run_isometry_descent(inst: Instance,
                          rng: random.Random,
                          trial: _Trial,
                          logger: Logger | None) -> None:
    spec: InstanceSpec = inst.spec
    base: FieldTower = inst.field
    ext: FieldTower = inst.extension
    budget: int = spec.budget
    phi: Any = inst.forms["phi"]
    psi: Any = inst.forms["psi"]

    if spec.mode == "odd-quadratic" and not is_finite(base):
        # function fields: twins under a wp-shift, isometric over the extension by construction
        a: FieldElement = base.random_element(rng, degree=spec.height)
        w: FieldElement = base.random_element(rng, degree=spec.height)
        left: QuadraticForm = quad_block(base, 1, a)
        twin: QuadraticForm = quad_block(base, 1, a + w * w + w)
        trial.detail["pair"] = [str(left), str(twin)]
        trial.expect("twin-over-extension", quad_isometry(left.base_change(ext), twin.base_change(ext),
                                                          budget=budget, logger=logger), Verdict.YES)
        trial.expect("twin-over-base", quad_isometry(left, twin, budget=budget, logger=logger), Verdict.YES)
        if ext.degree_over(base) % 2:
            # Arf invariants apart by an anisotropic slot: not isometric over F, so neither over L
            delta: FieldElement = _anisotropic_pfister_slot(base, rng, spec.height)
            apart: QuadraticForm = quad_block(base, 1, a + delta)
            trial.detail["apart"] = str(apart)
            trial.expect("apart-over-base", quad_isometry(left, apart, budget=budget, logger=logger), Verdict.NO)
            trial.expect("apart-over-extension", quad_isometry(left.base_change(ext), apart.base_change(ext),
                                                               budget=budget, logger=logger), Verdict.NO)
        return

    if isinstance(phi, BilinearForm):
        if spec.variant % 5 == 0 and base.names:
            phi, psi = bil_metabolic(base, _first_gen(base)), bil_metabolic(base, 0)
        else:
            phi = phi.compose(_random_invertible(base, rng, phi.dim))
    trial.detail["pair"] = [str(phi), str(psi)]
    over_base: DecisionOutcome = trial.record("isometric-over-base",
                                              form_isometry(phi, psi, budget=budget, logger=logger))
    if over_base.is_no:
        trial.expect("non-isometric-over-extension",
                     form_isometry(phi.base_change(ext), psi.base_change(ext), budget=budget, logger=logger),
                     Verdict.NO)
    elif over_base.is_unknown:
        trial.mark(Status.UNKNOWN, "isometric-over-base: undecided")

    twin = phi.compose(_random_invertible(base, rng, phi.dim))
    trial.expect("twin-over-extension", form_isometry(phi.base_change(ext), twin.base_change(ext),
                                                      budget=budget, logger=logger), Verdict.YES)
    trial.expect("twin-over-base", form_isometry(phi, twin, budget=budget, logger=logger), Verdict.YES)
    phi_ext: Any = phi.base_change(ext)
    trial.expect("twin-by-extension-matrix",
                 form_isometry(phi_ext, phi_ext.compose(_random_invertible(ext, rng, phi.dim)),
                               budget=budget, logger=logger), Verdict.YES)


def pfister_norm_witness(d: FieldElement,
                         ext: FieldTower,
                         w: Vector) -> tuple[FieldElement, FieldElement]:
    """
    Represent *N_{L/F}(λ)* by *[1, d]*, for *λ = [1, d](w)* a value over the odd-degree extension *L* of *F*.

    Over the compositum *T = E·L*, *E = F(θ)* with *θ² + θ = d*, the norm *z = N_{T/E}(w_0 + θ·w_1)*
    has coordinates *(z_0, z_1)* over *F* with *z_0² + z_0·z_1 + d·z_1² = N_{L/F}(λ)*.

    :param d: an element of *F* outside *℘(F)*
    :param ext: the simple step *L* over *F*
    :param w: the value vector over *L*
    :return: the coordinates *(z_0, z_1)*
    """
    base: FieldTower = ext.parent
    e: FieldTower = tower_extend(parent=base,
                                 var="th",
                                 coeffs=[d, 1, 1],
                                 trusted=True)
    t: FieldTower = tower_extend(parent=e,
                                 var="y",
                                 coeffs=[base.element(r) for r in ext.modulus],
                                 trusted=True)

    def lift(v: FieldElement) -> FieldElement:
        return t.from_coords_over([e.coerce(c) for c in ext.coords_over(v, base)], e)

    theta: FieldElement = t.coerce(e.gens()["th"])
    z: FieldElement = norm(lift(w[0]) + theta * lift(w[1]), e)
    z0, z1 = e.coords_over(z, base)
    return z0, z1


def _anisotropic_pfister_slot(base: FieldTower,
                              rng: random.Random,
                              height: int) -> FieldElement:
    for _ in range(8):
        d: FieldElement = base.random_element(rng, degree=height, nonzero=True)
        if wp_solve(d).is_no:
            return d
    return _first_gen(base)


def _run_similarity_descent(inst: Instance,
                            rng: random.Random,
                            trial: _Trial,
                            logger: Logger | None) -> None:
    spec: InstanceSpec = inst.spec
    base: FieldTower = inst.field
    ext: FieldTower = inst.extension
    budget: int = spec.budget
    t: FieldElement = _first_gen(base)

    if spec.mode == "odd-quadratic":
        d: FieldElement = _anisotropic_pfister_slot(base, rng, spec.height)
        psi: QuadraticForm = quad_block(base, 1, d)
        trial.detail["form"] = str(psi)
        trial.expect("anisotropic-over-base", quad_isotropic(psi, budget=budget), Verdict.NO)
        w: Vector = _random_vector(ext, rng, 2)
        lam: FieldElement = psi.base_change(ext).evaluate(w)
        n_lam: FieldElement = norm(lam, base)
        z0, z1 = pfister_norm_witness(d, ext, w)
        trial.detail["norm"] = str(n_lam)
        trial.check("norm-represented", psi.evaluate([z0, z1]) == n_lam)
        trial.record("norm-representation", DecisionOutcome.yes(CertKind.REPRESENTATION,
                                                                 form=psi,
                                                                 vector=[z0, z1],
                                                                 value=n_lam))
        return

    if spec.mode == "p-form":
        psi_p: PForm = pform_quasi_pfister(base, [t])
        x: Vector = _random_vector(ext, rng, psi_p.dim)
        psi_ext: PForm = psi_p.base_change(ext)
        lam = psi_ext.evaluate(x)
        trial.expect("round-over-extension", _scaled(psi_ext, psi_ext, lam), Verdict.YES)
        f: tuple[FieldElement, ...] = char_poly(lam, base).min_poly
        n: int = len(f) - 1
        p: int = base.p
        coeff: dict[int, FieldElement] = {m: f[n - m] for m in range(1, n + 1)}
        order: list[int] = ([n] if n % p else []) + [m for m in range(1, n + 1) if m % p]
        m: int | None = next((m for m in order if coeff[m]), None)
        if m is None:
            trial.mark(Status.UNKNOWN, "no coefficient of admissible index")
            return
        c: FieldElement = coeff[m] ** pow(m, -1, p)
        trial.detail["factor"] = {"index": m, "value": str(c)}
        trial.expect("descended-factor", _scaled(psi_p, psi_p, c), Verdict.YES)
        return

    gens: list[FieldElement] = [base.gens()[name] for name in base.names]
    if spec.kind == "bilinear":
        beta: BilinearForm = bil_pfister(base, gens[:1])
        beta_ext: BilinearForm = beta.base_change(ext)
        lam = beta_ext.evaluate(_random_vector(ext, rng, beta.dim))
        trial.expect("round-over-extension", bil_similarity_factor(lam, beta_ext, logger=logger), Verdict.YES)
        trial.expect("norm-factor", bil_similarity_factor(norm(lam, base), beta, logger=logger), Verdict.YES)
        return

    pi: QuadraticForm = quad_quasi_pfister(base, gens[:1])
    pi_ext: QuadraticForm = pi.base_change(ext)
    x = [ext.element(ext.gen_raw), ext.one] if spec.variant == 0 else _random_vector(ext, rng, pi.dim)
    lam = pi_ext.evaluate(x)
    trial.detail["lambda"] = str(lam)
    trial.expect("round-over-extension", _scaled(pi_ext, pi_ext, lam), Verdict.YES)
    trial.expect("norm-factor", _scaled(pi, pi, norm(lam, base)), Verdict.YES)

    phi, other = inst.forms["phi"], inst.forms["psi"]
    over_base: DecisionOutcome = trial.record("similar-over-base", similar(phi, other, budget=budget, logger=logger))
    if over_base.is_no:
        trial.expect("non-similar-over-extension",
                     similar(phi.base_change(ext), other.base_change(ext), budget=budget, logger=logger),
                     Verdict.NO)


def _scaled(phi: QuadraticForm | PForm,
            psi: QuadraticForm | PForm,
            c: FieldElement) -> DecisionOutcome:
    # phi ≅ c·psi, for totally singular forms or p-forms
    return ts_isometry(phi, psi.scale(c))


def _s_values(coeff: list[FieldElement],
              count: int,
              tower: FieldTower) -> list[FieldElement]:
    # s(λ^m) for the functional of F(λ), from the recurrence s(λ^m) = -Σ a_i·s(λ^(m-i))
    n: int = len(coeff)
    result: list[FieldElement] = [tower.one] + [tower.zero] * (n - 1)
    for m in range(n, count):
        result.append(-sum((coeff[i - 1] * result[m - i] for i in range(1, n + 1)), tower.zero))
    return result[:count]


def _run_symmetric_functions(inst: Instance,
                             rng: random.Random,
                             trial: _Trial,
                             logger: Logger | None) -> None:
    spec: InstanceSpec = inst.spec
    base: FieldTower = inst.field
    ext: FieldTower = inst.extension
    psi: QuadraticForm = quad_quasi_pfister(base, [_first_gen(base)])
    c: FieldElement = base.one if spec.variant == 0 else base.random_element(rng, degree=1, nonzero=True)
    phi: QuadraticForm = psi.scale(c)
    psi_ext: QuadraticForm = psi.base_change(ext)
    x: Vector = [ext.element(ext.gen_raw), ext.one] if spec.variant == 0 else _random_vector(ext, rng, psi.dim)
    lam: FieldElement = ext.coerce(c) * psi_ext.evaluate(x)
    trial.detail["lambda"] = str(lam)
    trial.expect("hypothesis", _scaled(phi.base_change(ext), psi_ext, lam), Verdict.YES)

    g_psi: SquareSubspace = ts_similarity_field(psi, logger=logger)[0].field
    coset: SquareSubspace | None = ts_relative_factors(phi, psi, logger=logger).coset
    if coset is None:
        trial.check("relative-factors-nonempty", False)
        return
    f: tuple[FieldElement, ...] = char_poly(lam, base).min_poly
    n: int = len(f) - 1
    coeff: list[FieldElement] = [f[n - m] for m in range(1, n + 1)]
    for m in range(1, n + 1):
        target: SquareSubspace = g_psi if m % 2 == 0 else coset
        trial.check(f"coefficient-{m}", target.contains(coeff[m - 1]))
    for m, v in enumerate(_s_values(coeff, 2 * n, base)):
        target = g_psi if m % 2 == 0 else coset
        trial.check(f"s-power-{m}", target.contains(v))


def _inseparable_exponent(f: tuple[FieldElement, ...],
                          p: int) -> int:
    exps: list[int] = [i for i, c in enumerate(f) if c]
    result: int = 0
    while p ** (result + 1) <= exps[-1] and all(i % p ** (result + 1) == 0 for i in exps):
        result += 1
    return result


def _second_step(ext: FieldTower,
                 rng: random.Random,
                 logger: Logger | None) -> FieldTower | None:
    # a certified Artin-Schreier step over ext
    x: FieldElement = ext.element(ext.gen_raw)
    t: FieldElement = ext.coerce(_first_gen(ext.base))
    for a in (x, t * x, x + t, x * x + t * x + t):
        try:
            return tower_extend(parent=ext,
                                var="y",
                                coeffs=[a, 1, 1],
                                seed=rng.randrange(1 << 16),
                                logger=logger)
        except IrreducibilityUnknown:
            continue
    return None


def _run_norm_principle(inst: Instance,
                        rng: random.Random,
                        trial: _Trial,
                        logger: Logger | None) -> None:
    spec: InstanceSpec = inst.spec
    base: FieldTower = inst.field
    ext: FieldTower = inst.extension
    budget: int = spec.budget
    gens: list[FieldElement] = [base.gens()[name] for name in base.names]
    variant: int = spec.variant % 5

    if variant == 1:
        beta: BilinearForm = bil_pfister(base, gens[:1])
        lam: FieldElement = beta.base_change(ext).evaluate(_random_vector(ext, rng, beta.dim))
        n_lam: FieldElement = norm_stepwise(lam, base)
        trial.check("stepwise-norm", n_lam == norm(lam, base))
        trial.expect("norm-factor", bil_similarity_factor(n_lam, beta, logger=logger), Verdict.YES)
        return

    if variant == 4:
        d: FieldElement = _anisotropic_pfister_slot(base, rng, spec.height)
        psi: QuadraticForm = quad_block(base, 1, d)
        w: Vector = _random_vector(ext, rng, 2)
        n_lam = norm(psi.base_change(ext).evaluate(w), base)
        z0, z1 = pfister_norm_witness(d, ext, w)
        trial.check("norm-represented", psi.evaluate([z0, z1]) == n_lam)
        trial.record("norm-representation", DecisionOutcome.yes(CertKind.REPRESENTATION,
                                                                form=psi,
                                                                vector=[z0, z1],
                                                                value=n_lam))
        return

    # totally singular: the last slot of the quasi-Pfister form stays out of the inseparable step
    pi: QuadraticForm = quad_quasi_pfister(base, gens[-1:])
    top: FieldTower | None = ext
    if variant == 2:
        top = _second_step(ext, rng, logger)
    elif variant == 3:
        top = tower_extend(parent=ext,
                           var="y",
                           coeffs=[-ext.coerce(gens[0]), 0, 1])
    if top is None:
        trial.mark(Status.UNKNOWN, "second step not certified")
        return
    trial.detail["tower"] = top.key
    pi_top: QuadraticForm = pi.base_change(top)

    if variant == 3:
        # λ from the separable level: [top : F(λ)] is even
        inner: FieldElement = pi.base_change(ext).evaluate(_random_vector(ext, rng, pi.dim))
        n_inner: FieldElement = norm(top.coerce(inner), base)
        trial.check("even-degree-square", sqrt(n_inner) is not None)
        trial.expect("even-degree-factor", _scaled(pi, pi, n_inner), Verdict.YES)

    lam = pi_top.evaluate(_random_vector(top, rng, pi.dim))
    if variant == 0 and rng.random() < 0.5:
        mu: FieldElement = top.random_element(rng, degree=1, nonzero=True)
        lam = lam * mu * mu
    trial.expect("round-over-extension", _scaled(pi_top, pi_top, lam), Verdict.YES)
    n_lam = norm_stepwise(lam, base)
    trial.check("stepwise-norm", n_lam == norm(lam, base))
    trial.expect("norm-factor", _scaled(pi, pi, n_lam), Verdict.YES)

    f: tuple[FieldElement, ...] = char_poly(lam, base).min_poly
    e: int = _inseparable_exponent(f, base.p)
    insep: int = top.inseparable_degree_over(base)
    trial.detail["dichotomy"] = {"exponent": e, "inseparable_degree": insep}
    trial.check("dichotomy", e == 0 or insep > base.p ** e)


def _run_transfer_identities(inst: Instance,
                             rng: random.Random,
                             trial: _Trial,
                             logger: Logger | None) -> None:
    base: FieldTower = inst.field
    ctx = transfer_context(inst.extension, logger=logger)
    trial.detail["context"] = ctx.to_dict()
    report = transfer_witt_checks(ctx, logger=logger)
    for entry in report.entries:
        if entry.outcome is not None:
            trial.expect(entry.name, entry.outcome, Verdict.YES)
        else:
            trial.check(entry.name, entry.verdict == Verdict.YES)
    if ctx.degree <= 3:
        b: BilinearForm = inst.forms["phi"] if isinstance(inst.forms["phi"], BilinearForm) else \
            bil_diagonal(base, [1])
        q: QuadraticForm = quad_block(base, 1, _first_gen(base))
        undecided: list[str] = []
        for entry in frobenius_reciprocity_check(ctx, b, q, budget=inst.spec.budget, logger=logger).entries:
            if entry.name == "reciprocity":
                trial.expect(entry.name, entry.outcome, Verdict.YES)
            elif entry.verdict == Verdict.UNKNOWN:
                trial.record(entry.name, entry.outcome)
                undecided.append(entry.name)
            else:
                trial.expect(entry.name, entry.outcome, Verdict.YES)
        if undecided:
            trial.detail["undecided"] = undecided


def _run_oracles(inst: Instance,
                 rng: random.Random,
                 trial: _Trial,
                 logger: Logger | None) -> None:
    spec: InstanceSpec = inst.spec
    base: FieldTower = inst.field
    match spec.variant % 3:
        case 0:
            oracle = oracle_bruteforce(OracleKind.CONGRUENCE, bound=3, logger=logger)
            n: int = spec.dim
            grams: list[BilinearForm] = []
            for _ in range(2):
                upper: list[list[FieldElement]] = [[base.random_element(rng, degree=0) for _ in range(n)]
                                                   for _ in range(n)]
                grams.append(BilinearForm(base, [[upper[min(i, j)][max(i, j)] for j in range(n)]
                                                 for i in range(n)]))
            if spec.seed % 2:
                grams[1] = grams[0].compose(_random_invertible(base, rng, n, height=0))
            exact: DecisionOutcome = trial.record("bil-isometry", bil_isometry(grams[0], grams[1], logger=logger))
            congruent: bool = oracle.congruent(grams[0], grams[1])
            trial.detail["pair"] = [str(grams[0]), str(grams[1])]
            trial.detail["oracle"] = congruent
            if exact.is_unknown:
                trial.mark(Status.UNKNOWN, "bil-isometry: undecided")
            else:
                trial.check("oracle-agreement", exact.is_yes == congruent)
        case 1:
            oracle = oracle_bruteforce(OracleKind.ISOTROPY, bound=spec.height, logger=logger)
            values: list[FieldElement] = [base.random_element(rng, degree=spec.height, nonzero=True)
                                          for _ in range(spec.dim)]
            q: QuadraticForm = quad_diagonal(base, values)
            exact = trial.record("isotropy", quad_isotropic(q, budget=spec.budget))
            found: Vector | None = oracle.isotropic_vector(q)
            trial.detail["form"] = str(q)
            trial.detail["oracle"] = None if found is None else [str(v) for v in found]
            if found is not None:
                trial.check("oracle-agreement", exact.is_yes)
            elif exact.is_yes:
                # the exact witness may lie beyond the degree bound
                trial.detail["in_bound"] = _in_bound(exact.certificate.data["vector"], spec.height)
                trial.check("oracle-agreement", not trial.detail["in_bound"])
            else:
                trial.check("oracle-agreement", exact.is_no)
        case _:
            oracle = oracle_bruteforce(OracleKind.WP, bound=spec.height, logger=logger)
            if spec.seed % 2:
                w: FieldElement = base.random_element(rng, degree=spec.height - 1,
                                                      den_degree=spec.height - 1, nonzero=True)
                c: FieldElement = w * w + w
            else:
                c = base.random_element(rng, degree=spec.height, den_degree=1)
            exact = trial.record("wp", wp_solve(c, budget=spec.budget, logger=logger))
            root: FieldElement | None = oracle.wp_root(c)
            trial.detail["c"] = str(c)
            trial.detail["oracle"] = None if root is None else str(root)
            if exact.is_unknown:
                trial.mark(Status.UNKNOWN, "wp: undecided")
            elif root is not None:
                trial.check("oracle-agreement", exact.is_yes)
            elif exact.is_yes:
                trial.detail["in_bound"] = _height(exact.certificate.data["w"]) <= spec.height
                trial.check("oracle-agreement", not trial.detail["in_bound"])
            else:
                trial.check("oracle-agreement", True)


def _height(x: FieldElement) -> int:
    return max(max((e[0] for e, _ in x.raw[0]), default=0), max((e[0] for e, _ in x.raw[1]), default=0))


def _in_bound(v: Vector,
              bound: int) -> bool:
    # polynomial entries of degree at most the bound, up to a common scaling
    return all(not x.raw[0] or (x.raw[1] == x.tower.raw_one[1] and _height(x) <= bound) for x in v)


_RUNNERS: dict[SuiteName, Runner] = {
    SuiteName.ARTIN_SPRINGER: _run_artin_springer,
    SuiteName.ISOMETRY_DESCENT: _run_isometry_descent,
    SuiteName.SIMILARITY_DESCENT: _run_similarity_descent,
    SuiteName.SYMMETRIC_FUNCTIONS: _run_symmetric_functions,
    SuiteName.NORM_PRINCIPLE: _run_norm_principle,
    SuiteName.TRANSFER_IDENTITIES: _run_transfer_identities,
    SuiteName.ORACLES: _run_oracles
}


# running and shrinking
def _run_one(runner: Runner,
             spec: InstanceSpec,
             errors: list[str] | None,
             logger: Logger | None) -> InstanceResult:
    trial: _Trial = _Trial()
    try:
        inst: Instance = gen_instance(spec, logger=logger)
        trial.detail["extension"] = inst.extension.key
        runner(inst, random.Random(spec.seed * 7919 + spec.variant), trial, logger)
    except GenerationExhausted as e:
        trial.mark(Status.UNKNOWN, str(e))
    except Exception as e:  # noqa: # noinspection PyBroadException
        msg: str = exc_format(exc=e,
                              exc_info=sys.exc_info())
        if logger:
            logger.error(msg=msg)
        if isinstance(errors, list):
            errors.append(msg)
        trial.mark(Status.FAIL, msg)

    checked: int = 0
    rejected: int = 0
    for name, outcome in trial.outcomes:
        if outcome.is_unknown:
            continue
        checked += 1
        if not cert_check(outcome, errors=errors, logger=logger):
            rejected += 1
            trial.mark(Status.FAIL, f"{name}: certificate rejected")
    return InstanceResult(spec=spec,
                          status=trial.status,
                          detail=trial.detail,
                          outcomes=tuple(trial.outcomes),
                          checked=checked,
                          rejected=rejected)


def shrink_instance(runner: Runner,
                    spec: InstanceSpec,
                    logger: Logger = None) -> InstanceSpec:
    """
    Reduce a failing recipe step by step, while it keeps failing.

    :return: the smallest failing recipe reached
    """
    result: InstanceSpec = spec
    progress: bool = True
    while progress:
        progress = False
        for candidate in result.shrunk():
            if _run_one(runner, candidate, None, None).status == Status.FAIL:
                result = candidate
                progress = True
                break
    if logger:
        logger.debug(msg=f"Shrunk failing instance {spec.seed} to {result.to_dict()}")
    return result


def _run_specs(suite: SuiteName,
               mode: str,
               specs: list[InstanceSpec],
               errors: list[str] | None,
               logger: Logger | None) -> SuiteReport:
    runner: Runner = _RUNNERS[suite]
    start: float = time.perf_counter()
    results: list[InstanceResult] = []
    for spec in specs:
        res: InstanceResult = _run_one(runner, spec, errors, logger)
        if res.status == Status.FAIL:
            res = replace(res, minimal=shrink_instance(runner, spec, logger))
        if logger:
            logger.debug(msg=f"{suite} seed {spec.seed}: {res.status}")
        results.append(res)
    return SuiteReport(suite=str(suite),
                       mode=mode,
                       results=tuple(results),
                       wall_time=time.perf_counter() - start)


def _replays(spec: InstanceSpec,
             suite: SuiteName,
             seeds: int) -> list[InstanceSpec]:
    return [replace(spec, suite=str(suite), seed=spec.seed + i) for i in range(seeds)]


def check_artin_springer_separable(spec: InstanceSpec,
                                   seeds: int = 1,
                                   errors: list[str] = None,
                                   logger: Logger = None) -> SuiteReport:
    """
    Check that anisotropic totally singular and bilinear forms stay anisotropic over separable extensions.

    Inseparable extensions are run as a control group, excluded from the assertion.
    """
    return _run_specs(SuiteName.ARTIN_SPRINGER, spec.mode, _replays(spec, SuiteName.ARTIN_SPRINGER, seeds),
                      errors, logger)


def check_isometry_descent(spec: InstanceSpec,
                           seeds: int = 1,
                           errors: list[str] = None,
                           logger: Logger = None) -> SuiteReport:
    """
    Check isometry descent in mode *spec.mode*: *separable-ts-bil* or *odd-quadratic*.

    Pairs not isometric over *F* must stay so over *L*; twins built over *F* must test isometric over *F*.
    """
    return _run_specs(SuiteName.ISOMETRY_DESCENT, spec.mode, _replays(spec, SuiteName.ISOMETRY_DESCENT, seeds),
                      errors, logger)


def check_similarity_descent(spec: InstanceSpec,
                             seeds: int = 1,
                             errors: list[str] = None,
                             logger: Logger = None) -> SuiteReport:
    """
    Check similarity descent in mode *spec.mode*: *separable-ts-bil*, *odd-quadratic* or *p-form*.

    For a value *λ* of a round form over *L*, the descended factor (the norm, or *a_m^s* for p-forms)
    must be a similarity factor over *F*; for quadratic Pfister forms, the norm must be represented.
    """
    return _run_specs(SuiteName.SIMILARITY_DESCENT, spec.mode,
                      _replays(spec, SuiteName.SIMILARITY_DESCENT, seeds), errors, logger)


def check_symmetric_function_lemma(spec: InstanceSpec,
                                   seeds: int = 1,
                                   errors: list[str] = None,
                                   logger: Logger = None) -> SuiteReport:
    """
    Check that the coefficients *a_m* of the minimal polynomial of *λ*, and the values *s(λ^m)*, lie in
    *G^0(ψ)* for even *m* and in *G^0(φ, ψ)* for odd *m*, whenever *φ_K ≅ λ·ψ_K*.
    """
    return _run_specs(SuiteName.SYMMETRIC_FUNCTIONS, spec.mode,
                      _replays(spec, SuiteName.SYMMETRIC_FUNCTIONS, seeds), errors, logger)


def check_norm_principle(spec: InstanceSpec,
                         seeds: int = 1,
                         errors: list[str] = None,
                         logger: Logger = None) -> SuiteReport:
    """
    Check that norms of similarity factors over *L* are similarity factors over *F*.

    *spec.variant* selects the case: totally singular over a simple extension (0), bilinear Pfister (1),
    a two-step tower (2), a tower with an inseparable top step of even degree (3), quadratic Pfister with a
    represented norm (4). Stepwise and blocked norms are compared, and the separable/inseparable
    dichotomy is asserted on the totally singular cases.
    """
    return _run_specs(SuiteName.NORM_PRINCIPLE, spec.mode, _replays(spec, SuiteName.NORM_PRINCIPLE, seeds),
                      errors, logger)


def check_transfer_identities(spec: InstanceSpec,
                              seeds: int = 1,
                              errors: list[str] = None,
                              logger: Logger = None) -> SuiteReport:
    return _run_specs(SuiteName.TRANSFER_IDENTITIES, spec.mode,
                      _replays(spec, SuiteName.TRANSFER_IDENTITIES, seeds), errors, logger)


def check_oracles(spec: InstanceSpec,
                  seeds: int = 1,
                  errors: list[str] = None,
                  logger: Logger = None) -> SuiteReport:
    return _run_specs(SuiteName.ORACLES, spec.mode, _replays(spec, SuiteName.ORACLES, seeds), errors, logger)


def suite_specs(suite: SuiteName,
                seeds: int,
                seed: int = 0,
                mode: str = None,
                degrees: list[int] = None,
                budget: int = None,
                p: int = None) -> list[InstanceSpec]:
    """
    Build the default recipes of *suite* for the seeds *seed, ..., seed + seeds - 1*.

    The recipes cycle through field sizes, form kinds, dimensions, degrees and families.

    :param suite: the suite
    :param seeds: the number of instances
    :param seed: the first seed
    :param mode: the mode, for suites having modes (by default they cycle through all of them)
    :param degrees: the extension degrees to cycle through, for the transfer identities
    :param budget: the search budget (defaults to the configuration)
    :param p: the odd characteristic of the p-form mode (defaults to the configuration, or 3)
    :return: the recipes
    """
    if budget is None:
        budget = qforms_get(QformsParam.SEARCH_BUDGET)
    if p is None:
        p = qforms_get(QformsParam.CHARACTERISTIC)
    if p == 2:
        p = 3
    degrees = degrees or [2, 3, 4, 5]
    modes: tuple[str, ...] = SUITE_MODES.get(suite, ("",))
    result: list[InstanceSpec] = []
    for i in range(seeds):
        base: InstanceSpec = InstanceSpec(seed=seed + i,
                                          suite=str(suite),
                                          mode=mode or modes[i % len(modes)],
                                          variant=i,
                                          budget=budget)
        two: tuple[str, ...] = ("t", "u") if i % 3 == 2 else ("t",)
        spec: InstanceSpec
        match suite:
            case SuiteName.ARTIN_SPRINGER:
                family: str = "inseparable" if i % 5 == 4 else ("trinomial", "eisenstein", "artin-schreier")[i % 3]
                spec = replace(base,
                               kind=("ts", "bilinear")[i % 2],
                               names=two,
                               dim=1 + (i // 2) % (2 ** len(two)),
                               degree=2 if family in ("inseparable", "artin-schreier") else (3, 2, 3, 4)[i % 4],
                               family=family)
            case SuiteName.ISOMETRY_DESCENT if base.mode == "odd-quadratic":
                finite: bool = i % 2 == 0
                spec = replace(base,
                               names=() if finite else ("t",),
                               k=1 + (i // 2) % 2 if finite else 1,
                               kind="quadratic",
                               dim=(2, 4)[(i // 4) % 2] if finite else 2,
                               height=1,
                               degree=3)
            case SuiteName.ISOMETRY_DESCENT:
                spec = replace(base,
                               kind=("ts", "bilinear")[(i // 2) % 2],
                               names=two,
                               dim=len(two),
                               degree=(2, 3)[i % 2],
                               family=("trinomial", "eisenstein")[(i // 3) % 2])
            case SuiteName.SIMILARITY_DESCENT if base.mode == "odd-quadratic":
                spec = replace(base,
                               kind="quadratic",
                               height=1,
                               degree=3)
            case SuiteName.SIMILARITY_DESCENT if base.mode == "p-form":
                spec = replace(base,
                               p=p,
                               names=("t", "u"),
                               kind="p-form",
                               dim=p,
                               height=1,
                               degree=2)
            case SuiteName.SIMILARITY_DESCENT:
                spec = replace(base,
                               kind=("ts", "bilinear")[(i // 3) % 2],
                               names=("t", "u") if i % 2 else ("t",),
                               dim=2,
                               degree=(2, 3)[(i // 2) % 2])
            case SuiteName.SYMMETRIC_FUNCTIONS:
                spec = replace(base,
                               names=("t", "u") if i % 2 else ("t",),
                               degree=(2, 3, 4)[i % 3],
                               height=1)
            case SuiteName.NORM_PRINCIPLE:
                variant: int = i % 5
                spec = replace(base,
                               names=("t", "u") if variant == 3 or i % 2 else ("t",),
                               degree=3 if variant in (1, 4) else (2, 3)[(i // 5) % 2],
                               height=1)
            case SuiteName.TRANSFER_IDENTITIES:
                spec = replace(base,
                               k=1 + (i // len(degrees)) % 2,
                               kind="bilinear",
                               dim=1,
                               degree=degrees[i % len(degrees)],
                               family=("trinomial", "eisenstein")[(i // 2) % 2])
            case _:
                variant = i % 3
                spec = replace(base,
                               names=() if variant == 0 else ("t",),
                               k=1 + (i // 3) % 2 if variant == 0 else 1,
                               dim=1 + (i // 3) % 3 if variant == 0 else 2 + (i // 3) % 2,
                               height=2 if variant == 1 else 3,
                               family="none")
        result.append(spec)
    return result


def run_suite(name: str,
              seeds: int = None,
              seed: int = None,
              mode: str = None,
              degrees: list[int] = None,
              budget: int = None,
              errors: list[str] = None,
              logger: Logger = None) -> SuiteReport:
    """
    Run the suite *name* on its default recipes.

    :param name: the suite name
    :param seeds: the number of instances (defaults to the configuration)
    :param seed: the first seed (defaults to the configuration)
    :param mode: the mode, for suites having modes
    :param degrees: the extension degrees, for the transfer identities
    :param budget: the search budget (defaults to the configuration)
    :param errors: incidental error messages
    :param logger: optional logger
    :return: the report
    :raises UnknownSuite: if *name* or *mode* is not known
    """
    try:
        suite: SuiteName = SuiteName(name)
    except ValueError:
        raise UnknownSuite(name) from None
    if mode and mode not in SUITE_MODES.get(suite, ()):
        raise UnknownSuite(f"{name}/{mode}")
    if seeds is None:
        seeds = qforms_get(QformsParam.SEEDS)
    if seed is None:
        seed = qforms_get(QformsParam.SEED)
    if logger:
        logger.debug(msg=f"Running {suite} on {seeds} seeds from {seed}")
    return _run_specs(suite=suite,
                      mode=mode or "",
                      specs=suite_specs(suite=suite,
                                        seeds=seeds,
                                        seed=seed,
                                        mode=mode,
                                        degrees=degrees,
                                        budget=budget),
                      errors=errors,
                      logger=logger)

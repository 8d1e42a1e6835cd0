"""
Decision procedures on forms in characteristic 2: Witt decompositions, normal forms, the equation
*w² + w = c*, Arf invariants, isometry and Witt equivalence.

Every decision returns a *DecisionOutcome*. A *yes* is always verified on its witness before being
returned, except for binary blocks over *GF(2^k)(t)*, where vanishing local symbols stand in for a witness.
When neither a witness nor an obstruction is found within the search bound, the answer is *unknown*.
"""
from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from functools import lru_cache
from logging import Logger
from typing import Any

from .cert_pomes import CertKind, DecisionOutcome
from .config_pomes import QformsParam, qforms_get
from .error_pomes import (
    DimensionMismatch, NotTotallySingular, OddDimension, SingularInput, UnsupportedCharacteristic
)
from .field_pomes import FieldElement, FieldTower, mp_element, sqrt
from .form_pomes import (
    BilinearForm, PForm, QuadraticForm, diagonal_quadratic, quad_blocks, quad_diagonal, quad_hyperbolic
)
from .frobenius_pomes import square_coords, subspace_from_generators, subspace_member
from .gf_pomes import GaloisField, gf2_solve
from .matrix_pomes import (
    Matrix, Vector, mat_det, mat_direct_sum, mat_identity, mat_inverse,
    mat_kernel, mat_mul, mat_rank, mat_rref, mat_solve, mat_transpose, mat_zero
)
from .place_pomes import Place, has_places, norm_symbols, place_label, wp_pole
from .poly_pomes import MPoly, mp_add, mp_deg, mp_mul

TsForm = QuadraticForm | PForm


@dataclass(frozen=True)
class WittDecomposition:
    """
    A change of basis bringing a form to a standard shape.

    For a bilinear form: *M(a_1) ⊥ ... ⊥ M(a_m) ⊥ anisotropic*. For a quadratic form:
    *H^h ⊥ [a_1,b_1] ⊥ ... ⊥ <c_1, ..., c_s> ⊥ 0^z*. The columns of *matrix* are the new basis vectors,
    in the coordinates of *form*.
    """
    form: BilinearForm | QuadraticForm
    matrix: Matrix
    planes: tuple[FieldElement, ...] = ()
    anisotropic: Matrix = field(default_factory=list)
    hyperbolic: int = 0
    blocks: tuple[tuple[FieldElement, FieldElement], ...] = ()
    ts: tuple[FieldElement, ...] = ()
    zero: int = 0

    @property
    def is_bilinear(self) -> bool:
        return isinstance(self.form, BilinearForm)

    @property
    def anisotropic_dim(self) -> int:
        if self.is_bilinear:
            return len(self.anisotropic)
        return 2 * len(self.blocks) + len(self.ts)

    def assembled(self) -> BilinearForm | QuadraticForm:
        tower: FieldTower = self.form.tower
        if self.is_bilinear:
            gram: Matrix = []
            for a in self.planes:
                gram = mat_direct_sum(tower, gram, [[tower.zero, tower.one], [tower.one, a]])
            return BilinearForm(tower, mat_direct_sum(tower, gram, self.anisotropic))
        pairs: list[tuple[Any, Any]] = [(0, 0)] * self.hyperbolic + list(self.blocks)
        return quad_blocks(tower, pairs).perp(quad_diagonal(tower, [*self.ts, *([0] * self.zero)]))

    def anisotropic_form(self) -> BilinearForm:
        return BilinearForm(self.form.tower, self.anisotropic)

    def verify(self) -> bool:
        """
        Check the change of basis, and for a bilinear form the anisotropy of the remaining part.
        """
        tower: FieldTower = self.form.tower
        if len(self.matrix) != self.form.dim or not mat_det(tower, self.matrix):
            return False
        if self.form.compose(self.matrix) != self.assembled():
            return False
        if self.is_bilinear and self.anisotropic:
            diag: list[FieldElement] = [self.anisotropic[i][i] for i in range(len(self.anisotropic))]
            return subspace_from_generators(diag, tower=tower).dim == len(diag)
        if not self.is_bilinear and self.ts:
            return subspace_from_generators(list(self.ts), tower=tower).dim == len(self.ts)
        return True

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {
            "form": self.form.to_dict(),
            "matrix": [[str(x) for x in row] for row in self.matrix]
        }
        if self.is_bilinear:
            result["planes"] = [str(a) for a in self.planes]
            result["anisotropic"] = [[str(x) for x in row] for row in self.anisotropic]
        else:
            result["hyperbolic"] = self.hyperbolic
            result["blocks"] = [[str(a), str(b)] for a, b in self.blocks]
            result["ts"] = [str(c) for c in self.ts]
            result["zero"] = self.zero
        return result


@dataclass(frozen=True)
class ArfResult:
    representative: FieldElement
    outcome: DecisionOutcome

    def to_dict(self) -> dict[str, Any]:
        return {
            "representative": str(self.representative),
            "trivial": self.outcome.to_dict()
        }


# vector helpers, vectors in the coordinates of the input form
def _vadd(u: Vector, v: Vector) -> Vector:
    return [x + y for x, y in zip(u, v)]


def _vscale(c: FieldElement, v: Vector) -> Vector:
    return [c * x for x in v]


def _unit(tower: FieldTower, n: int, i: int) -> Vector:
    return [tower.one if j == i else tower.zero for j in range(n)]


def _columns(tower: FieldTower, vectors: list[Vector], n: int) -> Matrix:
    return [[v[i] for v in vectors] for i in range(n)] if vectors else mat_zero(tower, n, 0)


def _require_char2(tower: FieldTower,
                   op: str) -> None:
    if tower.p != 2:
        raise UnsupportedCharacteristic(tower.p, op)


def is_finite(tower: FieldTower) -> bool:
    return tower.base.nvars == 0


def split_values(values: list[FieldElement],
                 tower: FieldTower) -> tuple[list[int], dict[int, Vector]]:
    """
    Scan *values* in order, keeping those independent over *K^p* of the ones kept before.

    :return: the kept indices, and for every other index *k* coefficients *s* with
             *values[k] = Σ s_i^p·values[kept_i]*
    """
    kept: list[int] = []
    cols: list[Vector] = []
    relations: dict[int, Vector] = {}
    for k, v in enumerate(values):
        target: Vector = square_coords(tower.coerce(v))
        sol: Vector | None = None
        if not any(target):
            sol = [tower.zero] * len(kept)
        elif cols:
            sol = mat_solve(tower, mat_transpose(cols), target)
        if sol is None:
            kept.append(k)
            cols.append(target)
        else:
            relations[k] = sol
    return kept, relations


# totally singular forms and p-forms
def _ts_check(form: TsForm) -> None:
    if isinstance(form, QuadraticForm) and not form.is_totally_singular():
        raise NotTotallySingular(str(form))


def ts_isometry(phi: TsForm,
                psi: TsForm,
                logger: Logger = None) -> DecisionOutcome:
    """
    Decide whether the totally singular forms (or p-forms) *phi* and *psi* are isometric.

    They are exactly when they have the same dimension and span the same *K^p*-subspace of values.
    A *yes* carries an explicit isometry matrix *T* with *phi∘T = psi*.

    :param phi: the first form
    :param psi: the second form
    :param logger: optional logger
    :return: the decision
    """
    _ts_check(phi)
    _ts_check(psi)
    tower: FieldTower = phi.tower if phi.tower.has_level(psi.tower) else psi.tower
    if phi.tower is not tower:
        phi = phi.base_change(tower)
    if psi.tower is not tower:
        psi = psi.base_change(tower)
    if phi.dim != psi.dim:
        return DecisionOutcome.no(CertKind.INVARIANT,
                                  invariant="dimension",
                                  left=phi,
                                  right=psi)
    a: list[FieldElement] = phi.diagonal()
    b: list[FieldElement] = psi.diagonal()
    da = subspace_from_generators(a, tower=tower)
    db = subspace_from_generators(b, tower=tower)
    for x, gens, space in [(y, a, da) for y in b] + [(y, b, db) for y in a]:
        if not space.contains(x):
            if logger:
                logger.debug(msg=f"Value {x} lies outside the span of {[str(g) for g in gens]}")
            return DecisionOutcome.no(CertKind.RANK,
                                      element=x,
                                      generators=gens)

    n: int = phi.dim
    kept_a, rel_a = split_values(a, tower)
    kept_b, rel_b = split_values(b, tower)
    # isotropic vectors of phi, one per dependent value
    zeros: list[Vector] = []
    for k, s in rel_a.items():
        z: Vector = _unit(tower, n, k)
        for i, c in zip(kept_a, s):
            z[i] = z[i] - c
        zeros.append(z)
    gens: list[FieldElement] = [a[i] for i in kept_a]
    images: dict[int, Vector] = {}
    for j in kept_b:
        coeffs: Vector = subspace_member(b[j], subspace_from_generators(gens, tower=tower)).certificate.data["coefficients"]
        v: Vector = [tower.zero] * n
        for i, c in zip(kept_a, coeffs):
            v[i] = c
        images[j] = v
    for (k, s), z in zip(rel_b.items(), zeros):
        v = z
        for j, c in zip(kept_b, s):
            v = _vadd(v, _vscale(c, images[j]))
        images[k] = v
    t: Matrix = _columns(tower, [images[j] for j in range(n)], n)
    if phi.compose(t) != psi or not mat_det(tower, t):
        return DecisionOutcome.unknown(reason="isometry construction failed verification")
    return DecisionOutcome.yes(CertKind.ISOMETRY,
                               left=phi,
                               right=psi,
                               matrix=t)


# bilinear forms
def bil_witt_decompose(form: BilinearForm,
                       logger: Logger = None) -> WittDecomposition:
    """
    Split off metabolic planes *M(a)* from the nonsingular bilinear form *form* until the rest is anisotropic.

    A vector *x* with *b(x,x) = 0* is found as the first *K²*-dependency among the diagonal values of the
    current part; a partner *y* with *b(x,y) = 1* comes from the first nonzero entry of *G·x*.
    The remaining part is anisotropic exactly when its diagonal values are *K²*-independent.

    :param form: the form
    :param logger: optional logger
    :return: the decomposition
    :raises SingularInput: if *form* is singular
    """
    tower: FieldTower = form.tower
    _require_char2(tower, "bil_witt_decompose")
    if not form.is_nonsingular():
        raise SingularInput(str(form))
    n: int = form.dim
    basis: list[Vector] = [_unit(tower, n, i) for i in range(n)]
    planes: list[FieldElement] = []
    plane_vecs: list[Vector] = []
    while True:
        m: int = len(basis)
        g: Matrix = [[form.value(u, v) for v in basis] for u in basis]
        cols: list[Vector] = [square_coords(g[i][i]) for i in range(m)]
        kernel: list[Vector] = mat_kernel(tower, mat_transpose(cols), ncols=m) if m else []
        if not kernel:
            break
        s: Vector = kernel[0]
        gx: Vector = [sum((g[k][i] * s[i] for i in range(m)), tower.zero) for k in range(m)]
        j: int = next(k for k in range(m) if gx[k])
        inv: FieldElement = gx[j].inverse()
        a: FieldElement = g[j][j] * inv * inv
        x: Vector = [tower.zero] * n
        for coef, u in zip(s, basis):
            if coef:
                x = _vadd(x, _vscale(coef, u))
        y: Vector = _vscale(inv, basis[j])
        planes.append(a)
        plane_vecs += [x, y]
        # project onto the orthogonal complement of the plane, in the coordinates of the current part
        projected: list[Vector] = []
        for k in range(m):
            bx: FieldElement = gx[k]
            by: FieldElement = g[j][k] * inv
            c0: FieldElement = by + a * bx
            w: Vector = _unit(tower, m, k)
            w = [wi - c0 * si for wi, si in zip(w, s)]
            w[j] = w[j] - bx * inv
            projected.append(w)
        rows, pivots = mat_rref(tower, projected)
        basis = [_combine(tower, row, basis, n) for row in rows[:len(pivots)]]
        if logger:
            logger.debug(msg=f"Split off M({a}), {len(basis)} dimensions left")

    an: Matrix = [[form.value(u, v) for v in basis] for u in basis]
    return WittDecomposition(form=form,
                             matrix=_columns(tower, plane_vecs + basis, n),
                             planes=tuple(planes),
                             anisotropic=an)


def _combine(tower: FieldTower,
             coeffs: Vector,
             basis: list[Vector],
             n: int) -> Vector:
    result: Vector = [tower.zero] * n
    for c, u in zip(coeffs, basis):
        if c:
            result = _vadd(result, _vscale(c, u))
    return result


def bil_is_metabolic(form: BilinearForm,
                  logger: Logger = None) -> DecisionOutcome:
    """
    Decide whether the nonsingular bilinear *form* is metabolic.
    """
    dec: WittDecomposition = bil_witt_decompose(form, logger=logger)
    if dec.anisotropic_dim == 0:
        return DecisionOutcome.yes(CertKind.WITT, decomposition=dec)
    return DecisionOutcome.no(CertKind.WITT, decomposition=dec)


def bil_isometry(alpha: BilinearForm,
                 beta: BilinearForm,
                 logger: Logger = None) -> DecisionOutcome:
    """
    Decide whether the bilinear forms *alpha* and *beta* are isometric.

    After splitting off the radicals, the forms are isometric exactly when their anisotropic parts
    are (that is, when the sum of these parts is metabolic) and their diagonal quadratic forms are.
    The certificate bundles the three Witt decompositions with the totally singular decision.

    :raises DimensionMismatch: if the dimensions differ
    """
    if alpha.dim != beta.dim:
        raise DimensionMismatch(alpha.dim, beta.dim)
    tower: FieldTower = alpha.tower
    if alpha == beta:
        return DecisionOutcome.yes(CertKind.ISOMETRY,
                                   left=alpha,
                                   right=beta,
                                   matrix=mat_identity(tower, alpha.dim))
    if len(alpha.radical()) != len(beta.radical()):
        return DecisionOutcome.no(CertKind.INVARIANT,
                                  invariant="radical-dimension",
                                  left=alpha,
                                  right=beta)
    lw: WittDecomposition = bil_witt_decompose(alpha.ns_part(), logger=logger)
    rw: WittDecomposition = bil_witt_decompose(beta.ns_part(), logger=logger)
    sw: WittDecomposition = bil_witt_decompose(BilinearForm(tower, mat_direct_sum(tower, lw.anisotropic,
                                                                                   rw.anisotropic)),
                                               logger=logger)
    ts: DecisionOutcome = ts_isometry(diagonal_quadratic(alpha), diagonal_quadratic(beta))
    data: dict[str, Any] = {
        "left": alpha,
        "right": beta,
        "left_witt": lw,
        "right_witt": rw,
        "sum_witt": sw,
        "ts": ts
    }
    if logger:
        logger.debug(msg=f"Anisotropic parts: {lw.anisotropic_dim} and {rw.anisotropic_dim}, "
                         f"sum leaves {sw.anisotropic_dim}; diagonal forms: {ts.verdict}")
    if sw.anisotropic_dim == 0 and ts.is_yes:
        return DecisionOutcome.yes(CertKind.MILNOR, **data)
    return DecisionOutcome.no(CertKind.MILNOR, **data)


# the equation w² + w = c
def _gf_const(level: FieldTower,
              v: int) -> FieldElement:
    return level.element(((((), v),), level.raw_one[1]) if v else level.raw_zero)


def _const_value(x: FieldElement) -> int:
    return x.raw[0][0][1] if x.raw[0] else 0


def _bits(v: int, k: int) -> list[int]:
    return [(v >> j) & 1 for j in range(k)]


def _wp_system(c: FieldElement) -> tuple[list[int], list[int], list[Any], Callable[[list[int]], FieldElement]] | None:
    # the GF(2)-linear system for w ↦ w² + w, with a map from solution bits to w
    tower: FieldTower = c.tower
    base: FieldTower = tower.base
    gf: GaloisField = base.gf
    k: int = gf.k
    images: list[dict[Any, int]] = []
    target: dict[Any, int] = {}
    finish: Callable[[list[int]], FieldElement]

    if base.nvars == 0:
        n: int = tower.degree_over(base)
        units: list[FieldElement] = []
        for i in range(n):
            for j in range(k):
                coords: list[FieldElement] = [base.zero] * n
                coords[i] = _gf_const(base, 1 << j)
                units.append(tower.from_coords_over(coords, base))

        def gf2_coords(x: FieldElement) -> dict[Any, int]:
            result: dict[Any, int] = {}
            for i, cc in enumerate(tower.coords_over(x, base)):
                for j, bit in enumerate(_bits(_const_value(cc), k)):
                    if bit:
                        result[(i, j)] = 1
            return result

        images = [gf2_coords(u * u + u) for u in units]
        target = gf2_coords(c)

        def finish(sol: list[int]) -> FieldElement:
            return sum((u for u, bit in zip(units, sol) if bit), tower.zero)

    elif tower is base:
        num: MPoly = dict(c.raw[0])
        den: FieldElement | None = sqrt(base.element((c.raw[1], base.raw_one[1])))
        if den is None:
            return None
        big_b: MPoly = dict(den.raw[0])
        bound: int = max(mp_deg(num) // 2, mp_deg(big_b), 0)
        monomials: list[tuple[int, ...]] = [e for e in itertools.product(range(bound + 1), repeat=base.nvars)
                                            if sum(e) <= bound]
        polys: list[MPoly] = [{e: 1 << j} for e in monomials for j in range(k)]

        def poly_coords(a: MPoly) -> dict[Any, int]:
            result: dict[Any, int] = {}
            for e, v in a.items():
                for j, bit in enumerate(_bits(v, k)):
                    if bit:
                        result[(e, j)] = 1
            return result

        images = [poly_coords(mp_add(gf, mp_mul(gf, a, a), mp_mul(gf, a, big_b))) for a in polys]
        target = poly_coords(num)

        def finish(sol: list[int]) -> FieldElement:
            a: MPoly = {}
            for poly, bit in zip(polys, sol):
                if bit:
                    a = mp_add(gf, a, poly)
            return mp_element(base, a) / den

    else:
        return None

    keys: list[Any] = sorted(set(target).union(*images), key=repr)
    rows: list[int] = []
    rhs: list[int] = []
    for key in keys:
        mask: int = 0
        for idx, img in enumerate(images):
            if key in img:
                mask |= 1 << idx
        rows.append(mask)
        rhs.append(target.get(key, 0))
    return rows, rhs, images, finish


def wp_linear_system(c: FieldElement) -> tuple[list[int], list[int]] | None:
    """
    Build the GF(2)-linear system whose solutions give *w* with *w² + w = c*.

    Available at finite levels, and at the bottom level *GF(2^k)(t_1..t_n)* when the denominator
    of *c* is a square; there *w = A/B* with *B² = den(c)* and the degree of *A* bounded.

    :return: the rows (bit masks over the unknowns) and the right-hand side, or *None*
    """
    system = _wp_system(c)
    return None if system is None else (system[0], system[1])


def small_elements(tower: FieldTower,
                   budget: int,
                   cap: int = 512) -> list[FieldElement]:
    """
    Enumerate elements with coordinates over the bottom level given by polynomials of degree at most
    *budget* with coefficients in the prime field, nonzero in at most two coordinates.
    """
    base: FieldTower = tower.base
    monomials: list[tuple[int, ...]] = [e for e in itertools.product(range(budget + 1), repeat=base.nvars)
                                        if sum(e) <= budget]
    consts: list[FieldElement] = []
    for mask in range(1, 1 << min(len(monomials), 10)):
        consts.append(mp_element(base, {e: 1 for i, e in enumerate(monomials) if mask >> i & 1}))
    n: int = tower.degree_over(base)
    singles: list[FieldElement] = []
    for i in range(n):
        for s in consts:
            coords: list[FieldElement] = [base.zero] * n
            coords[i] = s
            singles.append(tower.from_coords_over(coords, base))
    result: list[FieldElement] = list(singles)
    for x, y in itertools.combinations(singles, 2):
        if len(result) >= cap:
            break
        result.append(x + y)
    return result[:cap]


def wp_solve(c: FieldElement,
             budget: int = None,
             logger: Logger = None) -> DecisionOutcome:
    """
    Decide whether *c* lies in *℘(K) = {w² + w}*.

    Complete at finite levels (linear algebra over GF(2), or the absolute trace on *GF(2^k)*) and at the bottom
    level *GF(2^k)(t_1..t_n)* (denominator test, then linear algebra on the numerator). Over *GF(2^k)(t)* an
    inconsistent system is explained, when possible, by a place where *c* keeps a pole of odd order. At other levels,
    witnesses are looked for at the lower levels holding *c*, then by a bounded search.

    :param c: the element
    :param budget: degree bound for the search (defaults to the configured one)
    :param logger: optional logger
    :return: the decision, a *yes* carrying *w*
    """
    tower: FieldTower = c.tower
    _require_char2(tower, "wp_solve")
    base: FieldTower = tower.base
    if budget is None:
        budget = qforms_get(QformsParam.SEARCH_BUDGET)

    if tower is base and base.nvars == 0 and base.gf.trace(_const_value(c)):
        return DecisionOutcome.no(CertKind.WP_OBSTRUCTION,
                                  c=c,
                                  reason="trace")
    if tower is base and base.nvars > 0 and sqrt(base.element((c.raw[1], base.raw_one[1]))) is None:
        return DecisionOutcome.no(CertKind.WP_OBSTRUCTION,
                                  c=c,
                                  reason="denominator")
    system = _wp_system(c)
    if system is not None:
        rows, rhs, images, finish = system
        sol, cert = gf2_solve(rows, rhs, len(images))
        if sol is None:
            pole: tuple[Place, int] | None = wp_pole(c) if has_places(tower) else None
            if pole is not None:
                return DecisionOutcome.no(CertKind.WP_OBSTRUCTION,
                                          c=c,
                                          reason="pole",
                                          place=place_label(tower, pole[0]),
                                          order=pole[1])
            return DecisionOutcome.no(CertKind.WP_OBSTRUCTION,
                                      c=c,
                                      reason="linear",
                                      rows=cert)
        w: FieldElement = finish(sol)
        if w * w + w == c:
            return DecisionOutcome.yes(CertKind.WP_WITNESS,
                                       c=c,
                                       w=w)
        return DecisionOutcome.unknown(reason="witness failed verification")

    # lower levels first
    level: FieldTower | None = tower.parent
    while level is not None:
        lower: FieldElement | None = tower.descend(c, level)
        if lower is not None:
            sub: DecisionOutcome = wp_solve(lower, budget=budget, logger=logger)
            if sub.is_yes:
                return DecisionOutcome.yes(CertKind.WP_WITNESS,
                                           c=c,
                                           w=tower.coerce(sub.certificate.data["w"]))
            if sub.is_no and tower.degree_over(level) % 2:
                # a quadratic subextension cannot lie in an extension of odd degree
                return DecisionOutcome.no(CertKind.WP_OBSTRUCTION,
                                          c=c,
                                          reason="odd-degree",
                                          outcome=sub)
            break
        level = level.parent
    candidates: list[FieldElement] = small_elements(tower, budget)
    for w in candidates:
        if w * w + w == c:
            return DecisionOutcome.yes(CertKind.WP_WITNESS,
                                       c=c,
                                       w=w)
    if logger:
        logger.debug(msg=f"No solution of w^2 + w = {c} among {len(candidates)} candidates")
    return DecisionOutcome.unknown(bound=budget,
                                   candidates=len(candidates))


# quadratic forms
def _project(polar: BilinearForm,
             e: Vector,
             f: Vector,
             w: Vector) -> Vector:
    # onto the orthogonal complement of a plane with b(e,f) = 1 and b(e,e) = b(f,f) = 0
    return _vadd(_vadd(w, _vscale(polar.value(w, f), e)), _vscale(polar.value(w, e), f))


def _hyperbolic_pair(q: QuadraticForm,
                     e: Vector,
                     f: Vector,
                     budget: int) -> tuple[Vector, Vector] | None:
    # turn the block [q(e), q(f)] into a hyperbolic pair, when an isotropic vector is found
    a: FieldElement = q.evaluate(e)
    b: FieldElement = q.evaluate(f)
    if not a:
        return e, _vadd(f, _vscale(b, e))
    if not b:
        return f, _vadd(e, _vscale(a, f))
    wp: DecisionOutcome = wp_solve(a * b, budget=budget)
    if not wp.is_yes:
        return None
    w: FieldElement = wp.certificate.data["w"]
    v: Vector = _vadd(_vscale(w / a, e), f)
    return v, _vadd(e, _vscale(a, v))


def finite_elements(tower: FieldTower) -> Iterator[FieldElement]:
    base: FieldTower = tower.base
    q: int = base.gf.q
    n: int = tower.degree_over(base)
    for idx in range(1, q ** n):
        coords: list[FieldElement] = []
        for _ in range(n):
            coords.append(_gf_const(base, idx % q))
            idx //= q
        yield tower.from_coords_over(coords, base)


@lru_cache(maxsize=256)
def _normalize(q: QuadraticForm,
               budget: int) -> WittDecomposition:
    tower: FieldTower = q.tower
    n: int = q.dim
    polar: BilinearForm = q.polar()
    rad: list[Vector] = polar.radical()

    # the radical: anisotropic values, then isotropic combinations
    values: list[FieldElement] = [q.evaluate(r) for r in rad]
    kept, relations = split_values(values, tower)
    ts_vecs: list[Vector] = [rad[i] for i in kept]
    zero_vecs: list[Vector] = []
    for k, s in relations.items():
        z: Vector = rad[k]
        for i, c in zip(kept, s):
            z = _vadd(z, _vscale(c, rad[i]))
        zero_vecs.append(z)

    # a symplectic basis of a complement
    _, pivots = mat_rref(tower, [list(r) for r in rad]) if rad else ([], [])
    pool: list[Vector] = [_unit(tower, n, i) for i in range(n) if i not in pivots]
    pairs: list[tuple[Vector, Vector]] = []
    while pool:
        e: Vector = pool.pop(0)
        j: int = next(idx for idx, w in enumerate(pool) if polar.value(e, w))
        f: Vector = pool.pop(j)
        f = _vscale(polar.value(e, f).inverse(), f)
        pool = [_project(polar, e, f, w) for w in pool]
        pairs.append((e, f))

    hyper: list[tuple[Vector, Vector]] = []
    blocks: list[tuple[Vector, Vector]] = []
    for e, f in pairs:
        hp = _hyperbolic_pair(q, e, f, budget)
        if hp:
            hyper.append(hp)
        else:
            blocks.append((e, f))

    if is_finite(tower):
        if ts_vecs:
            r: Vector = _vscale(sqrt(q.evaluate(ts_vecs[0])).inverse(), ts_vecs[0])
            ts_vecs[0] = r
            for e, f in blocks:
                f = _vadd(f, _vscale(sqrt(q.evaluate(f)), r))
                hyper.append(_hyperbolic_pair(q, e, f, budget))
            blocks = []
        else:
            while len(blocks) >= 2:
                e1, f1 = _unit_block(q, *blocks.pop(0))
                e2, f2 = _unit_block(q, *blocks.pop(0))
                v: Vector = _vadd(e1, e2)
                u: Vector = _vadd(f1, _vscale(q.evaluate(f1), v))
                hyper.append((v, u))
                e2 = _project(polar, v, u, e2)
                f2 = _project(polar, v, u, f2)
                f2 = _vscale(polar.value(e2, f2).inverse(), f2)
                hp = _hyperbolic_pair(q, e2, f2, budget)
                if hp:
                    hyper.append(hp)
                else:
                    blocks.insert(0, (e2, f2))
            if blocks:
                e, f = _unit_block(q, *blocks[0])
                delta: FieldElement = q.evaluate(f)
                for delta0 in finite_elements(tower):
                    wp: DecisionOutcome = wp_solve(delta + delta0, budget=budget)
                    if wp.is_yes:
                        f = _vadd(f, _vscale(wp.certificate.data["w"], e))
                        break
                blocks = [(e, f)]

    vectors: list[Vector] = [v for pair in hyper + blocks for v in pair] + ts_vecs + zero_vecs
    return WittDecomposition(form=q,
                             matrix=_columns(tower, vectors, n),
                             hyperbolic=len(hyper),
                             blocks=tuple((q.evaluate(e), q.evaluate(f)) for e, f in blocks),
                             ts=tuple(q.evaluate(r) for r in ts_vecs),
                             zero=len(zero_vecs))


def _unit_block(q: QuadraticForm,
                e: Vector,
                f: Vector) -> tuple[Vector, Vector]:
    # [a, b] ≅ [1, ab] over a perfect field
    s: FieldElement = sqrt(q.evaluate(e))
    return _vscale(s.inverse(), e), _vscale(s, f)


def quad_normalize(q: QuadraticForm,
                   budget: int = None) -> WittDecomposition:
    """
    Decompose *q* as *H^h ⊥ [a_1,b_1] ⊥ ... ⊥ <c_1..c_s> ⊥ 0^z* by an explicit change of basis.

    The radical is split into an anisotropic totally singular part and zero vectors; a symplectic basis
    of a complement gives the binary blocks. A block becomes hyperbolic only when an isotropic vector
    is found in it. Over finite fields the result is canonical: at most one anisotropic block *[1, δ]*
    (with a fixed *δ*), at most one totally singular value, equal to 1.

    :param q: the form
    :param budget: search bound for the equation *w² + w = c*
    :return: the decomposition
    """
    _require_char2(q.tower, "quad_normalize")
    if budget is None:
        budget = qforms_get(QformsParam.SEARCH_BUDGET)
    return _normalize(q, budget)


def quad_canonical_invariants(q: QuadraticForm) -> tuple[int, ...] | None:
    """
    The complete isometry invariants of *q* over a finite field: dimension, hyperbolic count,
    anisotropic blocks, totally singular values and zero dimension; *None* over other fields.
    """
    if not is_finite(q.tower):
        return None
    dec: WittDecomposition = quad_normalize(q)
    return q.dim, dec.hyperbolic, len(dec.blocks), len(dec.ts), dec.zero


def arf_invariant(q: QuadraticForm,
                  budget: int = None) -> ArfResult:
    """
    Compute the Arf invariant of the nonsingular form *q*: the class of *Σ a_i·b_i* modulo *℘(K)*,
    over a symplectic basis.

    :raises OddDimension: if *q* has odd dimension
    :raises SingularInput: if *q* has a nonzero radical
    """
    _require_char2(q.tower, "arf_invariant")
    if q.dim % 2:
        raise OddDimension(q.dim)
    if q.radical():
        raise SingularInput(str(q))
    dec: WittDecomposition = quad_normalize(q, budget)
    rep: FieldElement = sum((a * b for a, b in dec.blocks), q.tower.zero)
    return ArfResult(representative=rep,
                     outcome=wp_solve(rep, budget=budget))


def quad_isotropic(q: QuadraticForm,
                   budget: int = None) -> DecisionOutcome:
    """
    Decide whether *q* has a nonzero isotropic vector.

    Complete over finite fields, for totally singular forms and for binary nonsingular forms.
    """
    dec: WittDecomposition = quad_normalize(q, budget)
    tower: FieldTower = q.tower
    if dec.hyperbolic or dec.zero:
        idx: int = 0 if dec.hyperbolic else q.dim - 1
        return DecisionOutcome.yes(CertKind.VECTOR,
                                   form=q,
                                   vector=[row[idx] for row in dec.matrix],
                                   value=tower.zero)
    if not dec.blocks:
        return DecisionOutcome.no(CertKind.WITT, decomposition=dec)
    if len(dec.blocks) == 1 and not dec.ts:
        a, b = dec.blocks[0]
        wp: DecisionOutcome = wp_solve(a * b, budget=budget)
        if wp.is_no:
            return DecisionOutcome.no(CertKind.INVARIANT,
                                      invariant="binary-anisotropic",
                                      left=q,
                                      outcome=wp)
    return DecisionOutcome.unknown(bound=budget,
                                   reason="no isotropic vector found")


def _match_pair(q: QuadraticForm,
                a: FieldElement,
                b: FieldElement,
                c: FieldElement,
                d: FieldElement,
                ts: tuple[FieldElement, ...],
                budget: int) -> tuple[dict[str, FieldElement], dict[str, FieldElement]] | None:
    # images of the basis (e', f') of the block [c, d] inside the block [a, b] with basis (e, f),
    # plus the totally singular vectors r0, r1, ...; as coefficient maps on "e", "f", "r<i>"
    tower: FieldTower = q.tower
    one: FieldElement = tower.one
    ts_space = subspace_from_generators(list(ts), tower=tower) if ts else None
    for a1, b1, x_e, x_f in [(a, b, "e", "f"), (b, a, "f", "e")]:
        if (a1, b1) == (c, d):
            return {x_e: one}, {x_f: one}
        if a1 == c:
            s: FieldElement | None = None
            if not a1:
                s = b1 + d
            else:
                wp: DecisionOutcome = wp_solve(a1 * (b1 + d), budget=budget)
                if wp.is_yes:
                    s = wp.certificate.data["w"] / a1
            if s is not None:
                return {x_e: one}, {x_f: one, x_e: s}
            if ts_space is not None:
                mem: DecisionOutcome = subspace_member(b1 + d, ts_space)
                if mem.is_yes:
                    shift: dict[str, FieldElement] = {f"r{i}": x for i, x in
                                                      enumerate(mem.certificate.data["coefficients"])}
                    return {x_e: one}, {x_f: one, **shift}
        if b1 == d:
            s = None
            if not b1:
                s = a1 + c
            else:
                wp = wp_solve(b1 * (a1 + c), budget=budget)
                if wp.is_yes:
                    s = wp.certificate.data["w"] / b1
            if s is not None:
                return {x_e: one, x_f: s}, {x_f: one}
    if not c:
        return None
    if a and has_places(tower):
        # w² + w = ab + ac/y² is decided exactly over GF(2^k)(t)
        rep: tuple[FieldElement, FieldElement] | None = _represent(a, b, c, budget)
        return None if rep is None else _complete_pair(a, b, c, d, *rep, budget)
    # represent c by the block, then fix the partner by a ℘-shift
    for x, y in itertools.product([tower.zero, *small_elements(tower, budget, cap=48)], repeat=2):
        if a * x * x + x * y + b * y * y == c:
            completed = _complete_pair(a, b, c, d, x, y, budget)
            if completed is not None:
                return completed
    return None


def _complete_pair(a: FieldElement,
                   b: FieldElement,
                   c: FieldElement,
                   d: FieldElement,
                   x: FieldElement,
                   y: FieldElement,
                   budget: int) -> tuple[dict[str, FieldElement], dict[str, FieldElement]] | None:
    # v = x·e + y·f has q(v) = c; a partner u with b(v, u) = 1 and q(u) = d, when Arf allows it
    u0: dict[str, FieldElement]
    qu0: FieldElement
    if y:
        u0 = {"e": y.inverse()}
        qu0 = a / (y * y)
    elif x:
        u0 = {"f": x.inverse()}
        qu0 = b / (x * x)
    else:
        return None
    wp: DecisionOutcome = wp_solve(c * (qu0 + d), budget=budget)
    if not wp.is_yes:
        return None
    s: FieldElement = wp.certificate.data["w"] / c
    v: dict[str, FieldElement] = {"e": x, "f": y}
    u: dict[str, FieldElement] = dict(u0)
    for key, val in v.items():
        u[key] = u.get(key, c.tower.zero) + s * val
    return v, u


def _represent(a: FieldElement,
               b: FieldElement,
               c: FieldElement,
               budget: int) -> tuple[FieldElement, FieldElement] | None:
    # (x, y) with a·x² + x·y + b·y² = c: for each y, w = a·x/y solves w² + w = ab + ac/y²
    x0: FieldElement | None = sqrt(c / a)
    if x0 is not None:
        return x0, c.tower.zero
    for y in _denominators(c.tower, 2 * budget):
        wp: DecisionOutcome = wp_solve(a * b + a * c / (y * y), budget=budget)
        if wp.is_yes:
            return wp.certificate.data["w"] * y / a, y
    return None


def _denominators(tower: FieldTower,
                  degree: int,
                  cap: int = 256) -> list[FieldElement]:
    # Y and Y/Z, for nonzero prime-field polynomials Y, Z in t of degree at most the given one
    polys: list[FieldElement] = [mp_element(tower, {(i,): 1 for i in range(degree + 1) if mask >> i & 1})
                                 for mask in range(1, 1 << (degree + 1))]
    result: list[FieldElement] = list(polys)
    for z in polys[1:]:
        for y in polys:
            if len(result) >= cap:
                return result
            result.append(y / z)
    return result


def _match_normal_forms(np_: WittDecomposition,
                        nq: WittDecomposition,
                        ts: DecisionOutcome,
                        budget: int) -> Matrix | None:
    # a matrix M on normal-form coordinates with N_phi∘M = N_psi
    q: QuadraticForm = np_.form
    tower: FieldTower = q.tower
    n: int = q.dim
    pp: list[tuple[FieldElement, FieldElement]] = [(tower.zero, tower.zero)] * np_.hyperbolic + list(np_.blocks)
    pq: list[tuple[FieldElement, FieldElement]] = [(tower.zero, tower.zero)] * nq.hyperbolic + list(nq.blocks)
    m: int = len(pp)
    s: int = len(np_.ts)
    cols: list[Vector] = [[tower.zero] * n for _ in range(n)]
    used: set[int] = set()
    for j, (c, d) in enumerate(pq):
        found: bool = False
        for i, (a, b) in enumerate(pp):
            if i in used:
                continue
            match = _match_pair(q, a, b, c, d, np_.ts, budget)
            if match is None:
                continue
            for col, images in zip((2 * j, 2 * j + 1), match):
                for key, val in images.items():
                    row: int = 2 * i if key == "e" else 2 * i + 1 if key == "f" else 2 * m + int(key[1:])
                    cols[col][row] = val
            used.add(i)
            found = True
            break
        if not found:
            return None
    t_s: Matrix = ts.certificate.data["matrix"] if s else []
    for j in range(s):
        for i in range(s):
            cols[2 * m + j][2 * m + i] = t_s[i][j]
    for k in range(2 * m + s, n):
        cols[k][k] = tower.one
    return _columns(tower, cols, n)


def block_norm_symbols(left: WittDecomposition,
                       right: WittDecomposition) -> list[tuple[Place, int]] | None:
    """
    Compute the local symbols deciding whether the block of *H^h ⊥ [a, b]* represents the first value
    of the block of *H^h ⊥ [c, d]*, over *GF(2^k)(t)*.

    The form *[a, b]* represents *c* exactly when *ac* is a norm from the extension given by *w² + w = ab*,
    that is, when all local symbols of *(ab, ac)* vanish.

    :param left: the normal form of the first nonsingular form
    :param right: the normal form of the second one
    :return: the pairs *(place, symbol)*, or *None* for other shapes or when the places cannot be found
    """
    if not has_places(left.form.tower) or left.form.radical() or right.form.radical() or \
            left.hyperbolic != right.hyperbolic or len(left.blocks) != 1 or len(right.blocks) != 1:
        return None
    a, b = left.blocks[0]
    c, _ = right.blocks[0]
    if not (a and b and c):
        return None
    return norm_symbols(a * b, a * c)


def quad_isometry(phi: QuadraticForm,
                  psi: QuadraticForm,
                  budget: int = None,
                  logger: Logger = None) -> DecisionOutcome:
    """
    Decide whether the quadratic forms *phi* and *psi* are isometric.

    Obstructions come from the dimensions of radicals and zero parts, the totally singular parts,
    the Arf invariant of nonsingular forms, the canonical forms over finite fields, and over *GF(2^k)(t)* the
    local symbols telling whether one anisotropic block represents the other. Witnesses are assembled block
    by block from the normal forms (swaps, ℘-shifts, shifts by totally singular values, representation search)
    and verified on the original forms.

    :raises DimensionMismatch: if the dimensions differ
    """
    if phi.dim != psi.dim:
        raise DimensionMismatch(phi.dim, psi.dim)
    tower: FieldTower = phi.tower
    _require_char2(tower, "quad_isometry")
    if budget is None:
        budget = qforms_get(QformsParam.SEARCH_BUDGET)
    if phi == psi:
        return DecisionOutcome.yes(CertKind.ISOMETRY,
                                   left=phi,
                                   right=psi,
                                   matrix=mat_identity(tower, phi.dim))
    if phi.is_totally_singular() and psi.is_totally_singular():
        return ts_isometry(phi, psi, logger=logger)
    if len(phi.radical()) != len(psi.radical()):
        return DecisionOutcome.no(CertKind.INVARIANT,
                                  invariant="radical-dimension",
                                  left=phi,
                                  right=psi)
    np_: WittDecomposition = quad_normalize(phi, budget)
    nq: WittDecomposition = quad_normalize(psi, budget)
    if np_.zero != nq.zero:
        return DecisionOutcome.no(CertKind.INVARIANT,
                                  invariant="zero-dimension",
                                  left=phi,
                                  right=psi)
    ts: DecisionOutcome = ts_isometry(quad_diagonal(tower, list(np_.ts)), quad_diagonal(tower, list(nq.ts)))
    if ts.is_no:
        return DecisionOutcome.no(CertKind.INVARIANT,
                                  invariant="ts-part",
                                  left=phi,
                                  right=psi,
                                  outcome=ts)

    m: Matrix | None = None
    wp: DecisionOutcome | None = None
    symbols: list[tuple[Place, int]] | None = None
    if is_finite(tower):
        if quad_canonical_invariants(phi) != quad_canonical_invariants(psi):
            return DecisionOutcome.no(CertKind.INVARIANT,
                                      invariant="canonical",
                                      left=phi,
                                      right=psi)
        m = mat_identity(tower, phi.dim)
    else:
        if not phi.radical():
            c: FieldElement = arf_invariant(phi, budget).representative + arf_invariant(psi, budget).representative
            wp = wp_solve(c, budget=budget)
            if wp.is_no:
                return DecisionOutcome.no(CertKind.INVARIANT,
                                          invariant="arf",
                                          left=phi,
                                          right=psi,
                                          outcome=wp)
        symbols = block_norm_symbols(np_, nq)
        if symbols is not None:
            place: Place | None = next((v for v, s in symbols if s), None)
            if place is not None:
                return DecisionOutcome.no(CertKind.INVARIANT,
                                          invariant="representation",
                                          left=phi,
                                          right=psi,
                                          place=place_label(tower, place))
        if ts.is_yes:
            m = _match_normal_forms(np_, nq, ts, budget)

    if m is not None:
        inv: Matrix | None = mat_inverse(tower, nq.matrix)
        t: Matrix = mat_mul(tower, mat_mul(tower, np_.matrix, m), inv)
        if phi.compose(t) == psi and mat_det(tower, t):
            return DecisionOutcome.yes(CertKind.ISOMETRY,
                                       left=phi,
                                       right=psi,
                                       matrix=t)
        if logger:
            logger.warning(msg=f"Assembled isometry between {phi} and {psi} failed verification")
    if symbols is not None and wp is not None and wp.is_yes:
        # equal Arf invariants, and the block of phi represents the first value of the block of psi
        return DecisionOutcome.yes(CertKind.NORM_SYMBOLS,
                                   left=phi,
                                   right=psi,
                                   places=[place_label(tower, v) for v, _ in symbols],
                                   arf=wp)
    return DecisionOutcome.unknown(bound=budget,
                                   reason="no block matching found")


def form_isometry(phi: BilinearForm | QuadraticForm | PForm,
                  psi: BilinearForm | QuadraticForm | PForm,
                  budget: int = None,
                  logger: Logger = None) -> DecisionOutcome:
    """
    Dispatch the isometry decision on the kind of the forms.
    """
    if isinstance(phi, BilinearForm) and isinstance(psi, BilinearForm):
        return bil_isometry(phi, psi, logger=logger)
    if isinstance(phi, PForm) or isinstance(psi, PForm):
        return ts_isometry(phi, psi, logger=logger)
    return quad_isometry(phi, psi, budget=budget, logger=logger)


def witt_equivalent(phi: BilinearForm | QuadraticForm,
                    psi: BilinearForm | QuadraticForm,
                    budget: int = None,
                    logger: Logger = None) -> DecisionOutcome:
    """
    Decide Witt equivalence: metabolicity of the sum for bilinear forms, equality of the spans of values
    for totally singular forms, hyperbolicity of the sum for nonsingular quadratic forms.
    Mixed singular quadratic forms answer *unknown*.
    """
    tower: FieldTower = phi.tower
    if isinstance(phi, BilinearForm) and isinstance(psi, BilinearForm):
        return bil_is_metabolic(phi.ns_part().perp(psi.ns_part()), logger=logger)
    if phi.is_totally_singular() and psi.is_totally_singular():
        kept_a, _ = split_values(phi.diagonal(), tower)
        kept_b, _ = split_values(psi.diagonal(), tower)
        an_a: QuadraticForm = quad_diagonal(tower, [phi.diagonal()[i] for i in kept_a])
        an_b: QuadraticForm = quad_diagonal(tower, [psi.diagonal()[i] for i in kept_b])
        return ts_isometry(an_a, an_b, logger=logger)
    if not phi.radical() and not psi.radical():
        total: QuadraticForm = phi.perp(psi)
        return quad_isometry(total, quad_hyperbolic(tower, total.dim // 2), budget=budget, logger=logger)
    return DecisionOutcome.unknown(reason="Witt equivalence of singular forms")


def bil_an_dim(form: BilinearForm) -> int:
    return bil_witt_decompose(form.ns_part()).anisotropic_dim


def rank_of(values: list[FieldElement],
            tower: FieldTower) -> int:
    return mat_rank(tower, [square_coords(tower.coerce(v)) for v in values]) if values else 0

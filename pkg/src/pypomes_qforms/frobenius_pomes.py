"""
Subspaces of a field *K* over its subfield *K^p* of p-th powers.

Writing *x = Σ_e c_e^p·m_e* over the p-basis monomials *m_e* turns *x* into its square coordinates
*(c_e)*, a vector in *K^(p^r)*. The map is a bijection, and *s^p·x* goes to *s·(c_e)*, so *K^p*-subspaces
of *K* are handled as ordinary *K*-subspaces of coordinate vectors, kept in reduced row echelon form.
"""
from __future__ import annotations

from collections.abc import Iterable
from typing import Any

from .cert_pomes import CertKind, DecisionOutcome
from .error_pomes import ZeroSubspace
from .field_pomes import FieldElement, FieldTower
from .matrix_pomes import Matrix, Vector, mat_kernel, mat_rref, mat_solve, mat_transpose


class SquareSubspace:
    """
    A *K^p*-subspace of a tower level *K*.

    Immutable after construction: *rows* holds the reduced echelon basis of the square coordinates,
    *generators* the elements it was spanned from (possibly dependent).
    """

    def __init__(self,
                 tower: FieldTower,
                 vectors: list[Vector],
                 generators: Iterable[FieldElement] = ()) -> None:
        self.tower: FieldTower = tower
        self.size: int = tower.p ** len(tower.pbasis_raw)
        rows, pivots = mat_rref(tower, [list(v) for v in vectors]) if vectors else ([], [])
        self.rows: tuple[tuple[FieldElement, ...], ...] = tuple(tuple(r) for r in rows[:len(pivots)])
        self.pivots: tuple[int, ...] = tuple(pivots)
        self.generators: tuple[FieldElement, ...] = tuple(generators)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SquareSubspace):
            return NotImplemented
        return self.tower is other.tower and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.tower.key, self.rows))

    def __repr__(self) -> str:
        return f"SquareSubspace({self.tower.key}, dim={self.dim})"

    def basis(self) -> list[FieldElement]:
        """
        Return the elements of *K* matching the echelon rows.
        """
        return [from_square_coords(self.tower, list(row)) for row in self.rows]

    def reduce(self,
               v: Vector) -> Vector:
        """
        Reduce the coordinate vector *v* modulo the rows; the result is zero exactly on members.
        """
        result: Vector = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c: FieldElement = result[pc]
            if c:
                result = [x - c * y for x, y in zip(result, row)]
        return result

    def contains(self,
                 x: FieldElement) -> bool:
        return not any(self.reduce(square_coords(self.tower.coerce(x))))

    def to_dict(self) -> dict[str, Any]:
        return {
            "field": self.tower.key,
            "dim": self.dim,
            "basis": [str(b) for b in self.basis()]
        }


def square_coords(x: FieldElement) -> Vector:
    """
    Return the coordinates *(c_e)* with *x = Σ_e c_e^p·m_e*, *m_e* the p-basis monomials of the level of *x*.
    """
    tower: FieldTower = x.tower
    return [FieldElement(tower, c) for c in tower.raw_square_coords(x.raw)]


def from_square_coords(tower: FieldTower,
                       coords: Vector) -> FieldElement:
    # initialize the return variable
    result: FieldElement = tower.zero

    for e, c in enumerate(coords):
        if c:
            result = result + c ** tower.p * tower.pbasis_monomial(e)

    return result


def subspace_from_generators(gens: Iterable[FieldElement],
                             tower: FieldTower = None) -> SquareSubspace:
    """
    Build the *K^p*-span of *gens*.

    :param gens: the generators
    :param tower: the level *K* (defaults to the level of the first generator)
    :return: the subspace
    """
    items: list[FieldElement] = list(gens)
    if tower is None:
        tower = items[0].tower if items else None
    if tower is None:
        raise ZeroSubspace()
    items = [tower.coerce(g) for g in items]
    return SquareSubspace(tower=tower,
                          vectors=[square_coords(g) for g in items if g],
                          generators=items)


def subspace_member(x: FieldElement,
                    space: SquareSubspace) -> DecisionOutcome:
    """
    Decide whether *x* lies in *space*.

    A *yes* carries coefficients *s_i* with *x = Σ s_i^p·g_i* over the generators of *space*;
    a *no* carries the rank obstruction, *x* raising the rank of the generators.

    :param x: the element
    :param space: the subspace
    :return: the decision
    """
    tower: FieldTower = space.tower
    x = tower.coerce(x)
    gens: list[FieldElement] = list(space.generators) or space.basis()
    target: Vector = square_coords(x)
    cols: list[Vector] = [square_coords(g) for g in gens]
    a: Matrix = mat_transpose(cols) if cols else [[] for _ in target]
    sol: Vector | None = mat_solve(tower, a, target) if cols else (None if any(target) else [])
    if sol is None:
        return DecisionOutcome.no(CertKind.RANK,
                                  element=x,
                                  generators=gens)
    return DecisionOutcome.yes(CertKind.COEFFICIENTS,
                               target=x,
                               generators=gens,
                               coefficients=sol)


def subspace_sum(a: SquareSubspace,
                 b: SquareSubspace) -> SquareSubspace:
    return SquareSubspace(tower=a.tower,
                          vectors=[list(r) for r in a.rows + b.rows],
                          generators=a.generators + b.generators)


def subspace_intersect(a: SquareSubspace,
                       b: SquareSubspace) -> SquareSubspace:
    """
    Intersect *a* and *b*, as *{Σ α_i·row_i(a) : the sum reduces to zero modulo b}*.
    """
    tower: FieldTower = a.tower
    if not a.rows:
        return a
    reduced: list[Vector] = [b.reduce(list(r)) for r in a.rows]
    m: Matrix = mat_transpose(reduced)
    vectors: list[Vector] = []
    for alpha in mat_kernel(tower, m, ncols=a.dim):
        v: Vector = [tower.zero] * a.size
        for coef, row in zip(alpha, a.rows):
            if coef:
                v = [x + coef * y for x, y in zip(v, row)]
        vectors.append(v)
    return SquareSubspace(tower=tower,
                          vectors=vectors)


def subspace_contains(a: SquareSubspace,
                      b: SquareSubspace) -> bool:
    """
    Tell whether *b ⊆ a*.
    """
    return all(not any(a.reduce(list(r))) for r in b.rows)


def subspace_equals(a: SquareSubspace,
                    b: SquareSubspace) -> bool:
    return a.dim == b.dim and subspace_contains(a, b)


def subspace_transporter(a: SquareSubspace,
                         b: SquareSubspace) -> SquareSubspace:
    """
    Compute *{c ∈ K : c·a ⊆ b}*.

    Writing *c = Σ_f γ_f^p·m_f*, the square coordinates of *c·x* are *Σ_f γ_f·coords(m_f·x)*,
    so each basis element *x* of *a* imposes linear conditions on the coordinates *γ* of *c*.

    :param a: the subspace to be moved
    :param b: the target subspace
    :return: the transporter, itself a *K^p*-subspace of *K*
    """
    tower: FieldTower = a.tower
    size: int = a.size
    monomials: list[FieldElement] = [tower.pbasis_monomial(f) for f in range(size)]
    free: list[int] = [j for j in range(size) if j not in b.pivots]
    conditions: Matrix = []
    for x in a.basis():
        images: list[Vector] = [b.reduce(square_coords(m * x)) for m in monomials]
        for j in free:
            conditions.append([images[f][j] for f in range(size)])
    return SquareSubspace(tower=tower,
                          vectors=mat_kernel(tower, conditions, ncols=size))


def stabilizer_field(space: SquareSubspace) -> SquareSubspace:
    """
    Compute the stabilizer *{c : c·space ⊆ space}*, a field between *K^p* and *K*.

    :raises ZeroSubspace: if *space* is zero
    """
    if space.dim == 0:
        raise ZeroSubspace()
    return subspace_transporter(space, space)


def field_closure(gens: Iterable[FieldElement],
                  tower: FieldTower) -> SquareSubspace:
    """
    Compute the field *K^p(gens)*, as the *K^p*-span of all products of the generators.
    """
    items: list[FieldElement] = [tower.coerce(g) for g in gens]
    result: SquareSubspace = subspace_from_generators([tower.one, *items], tower=tower)
    while True:
        basis: list[FieldElement] = result.basis()
        products: list[FieldElement] = [x * y for i, x in enumerate(basis) for y in basis[i:]]
        grown: SquareSubspace = SquareSubspace(tower=tower,
                                               vectors=[list(r) for r in result.rows] +
                                               [square_coords(z) for z in products if z],
                                               generators=result.generators)
        if grown.dim == result.dim:
            break
        result = grown
    return result

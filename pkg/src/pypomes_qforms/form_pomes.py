"""
Bilinear forms, quadratic forms and p-forms over a tower level, with their standard builders.

All forms are immutable. A bilinear form is given by its symmetric Gram matrix; a quadratic form by
its upper triangular coefficient matrix *Q*, with *q(x) = Σ_{i≤j} Q_ij·x_i·x_j*; a p-form by its diagonal
coefficients, with *φ(x) = Σ a_i·x_i^p*.
"""
from __future__ import annotations

import itertools
from collections.abc import Sequence
from enum import StrEnum
from typing import Any

from .error_pomes import NotSymmetric, TowerMismatch
from .field_pomes import FieldElement, FieldTower
from .matrix_pomes import (
    Matrix, Vector, mat_congruence, mat_det, mat_direct_sum,
    mat_is_symmetric, mat_kernel, mat_rref, mat_transpose, vec_dot
)


class FormKind(StrEnum):
    BILINEAR = "bilinear"
    QUADRATIC = "quadratic"
    PFORM = "p-form"


def _freeze(tower: FieldTower,
            m: Sequence[Sequence[FieldElement | int]]) -> tuple[tuple[FieldElement, ...], ...]:
    return tuple(tuple(tower.coerce(x) for x in row) for row in m)


def _common_tower(a: FieldTower,
                  b: FieldTower) -> FieldTower:
    if a.has_level(b):
        return a
    if b.has_level(a):
        return b
    raise TowerMismatch(a.key, b.key)


class BilinearForm:
    """
    A symmetric bilinear form, given by its Gram matrix.
    """
    kind: FormKind = FormKind.BILINEAR

    def __init__(self,
                 tower: FieldTower,
                 gram: Sequence[Sequence[FieldElement | int]]) -> None:
        """
        :raises NotSymmetric: if *gram* is not square and symmetric
        """
        self.tower: FieldTower = tower
        self.gram: tuple[tuple[FieldElement, ...], ...] = _freeze(tower, gram)
        if not mat_is_symmetric([list(r) for r in self.gram]):
            raise NotSymmetric(str([[str(x) for x in r] for r in self.gram]))

    @property
    def dim(self) -> int:
        return len(self.gram)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self.tower is other.tower and self.gram == other.gram

    def __hash__(self) -> int:
        return hash(("b", self.gram))

    def __repr__(self) -> str:
        return f"BilinearForm({self})"

    def __str__(self) -> str:
        if self.is_diagonal():
            return "<" + ", ".join(str(x) for x in self.diagonal()) + ">_b"
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.gram) + "]_b"

    def matrix(self) -> Matrix:
        return [list(row) for row in self.gram]

    def value(self,
              x: Vector,
              y: Vector) -> FieldElement:
        x = [self.tower.coerce(v) for v in x]
        y = [self.tower.coerce(v) for v in y]
        return vec_dot(self.tower, x, [vec_dot(self.tower, list(row), y) for row in self.gram])

    def evaluate(self,
                 x: Vector) -> FieldElement:
        return self.value(x, x)

    def diagonal(self) -> list[FieldElement]:
        return [self.gram[i][i] for i in range(self.dim)]

    def is_diagonal(self) -> bool:
        return all(not self.gram[i][j] for i in range(self.dim) for j in range(self.dim) if i != j)

    def determinant(self) -> FieldElement:
        return mat_det(self.tower, self.matrix())

    def is_nonsingular(self) -> bool:
        return bool(self.determinant())

    def radical(self) -> list[Vector]:
        return mat_kernel(self.tower, self.matrix(), ncols=self.dim)

    def ns_part(self) -> BilinearForm:
        """
        Split off the radical: restrict to a complement of it, spanned by standard basis vectors.
        """
        rad: list[Vector] = self.radical()
        if not rad:
            return self
        # standard vectors completing a basis of the radical, in index order
        _, pivots = mat_rref(self.tower, [list(v) for v in rad])
        keep: list[int] = [i for i in range(self.dim) if i not in pivots]
        return BilinearForm(self.tower, [[self.gram[i][j] for j in keep] for i in keep])

    def compose(self,
                t: Matrix) -> BilinearForm:
        """
        Return the form *b(T·x, T·y)*, of Gram matrix *T^t·G·T*.
        """
        t = [[self.tower.coerce(x) for x in row] for row in t]
        return BilinearForm(self.tower, mat_congruence(self.tower, t, self.matrix()))

    def scale(self,
              c: FieldElement | int) -> BilinearForm:
        c = self.tower.coerce(c)
        return BilinearForm(self.tower, [[c * x for x in row] for row in self.gram])

    def perp(self,
             other: BilinearForm) -> BilinearForm:
        tower: FieldTower = _common_tower(self.tower, other.tower)
        return BilinearForm(tower, mat_direct_sum(tower,
                                                  [[tower.coerce(x) for x in r] for r in self.gram],
                                                  [[tower.coerce(x) for x in r] for r in other.gram]))

    def base_change(self,
                    level: FieldTower) -> BilinearForm:
        return BilinearForm(level, self.gram)

    def tensor(self,
               other: BilinearForm | QuadraticForm) -> BilinearForm | QuadraticForm:
        """
        Tensor with a bilinear form (Kronecker product of the Gram matrices) or with a quadratic form.

        For a quadratic *q*, *b ⊗ q* takes the value *b(x,x)·q(y)* on *x ⊗ y* and has polar *b ⊗ b_q*;
        the basis vector *e_i ⊗ f_j* sits at index *i·dim(q) + j*.
        """
        tower: FieldTower = _common_tower(self.tower, other.tower)
        g: Matrix = [[tower.coerce(x) for x in r] for r in self.gram]
        n: int = self.dim
        m: int = other.dim
        if isinstance(other, BilinearForm):
            h: Matrix = [[tower.coerce(x) for x in r] for r in other.gram]
            return BilinearForm(tower, [[g[i][k] * h[j][l] for k in range(n) for l in range(m)]
                                        for i in range(n) for j in range(m)])
        q: Matrix = [[tower.coerce(x) for x in r] for r in other.coeffs]
        polar: Matrix = other.polar().matrix()
        size: int = n * m
        result: Matrix = [[tower.zero] * size for _ in range(size)]
        for i, j in itertools.product(range(n), range(m)):
            a: int = i * m + j
            result[a][a] = g[i][i] * q[j][j]
            for k, l in itertools.product(range(n), range(m)):
                c: int = k * m + l
                if c > a:
                    result[a][c] = g[i][k] * polar[j][l]
        return QuadraticForm(tower, result)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": str(self.kind),
            "field": self.tower.key,
            "dim": self.dim,
            "gram": [[str(x) for x in row] for row in self.gram]
        }


class QuadraticForm:
    """
    A quadratic form, given by its upper triangular coefficient matrix.
    """
    kind: FormKind = FormKind.QUADRATIC

    def __init__(self,
                 tower: FieldTower,
                 coeffs: Sequence[Sequence[FieldElement | int]]) -> None:
        # any square matrix A stands for x^t·A·x: fold it onto the upper triangle
        a: tuple[tuple[FieldElement, ...], ...] = _freeze(tower, coeffs)
        n: int = len(a)
        if any(len(row) != n for row in a):
            raise NotSymmetric(str([[str(x) for x in r] for r in a]))
        self.tower: FieldTower = tower
        self.coeffs: tuple[tuple[FieldElement, ...], ...] = tuple(
            tuple(tower.zero if j < i else (a[i][j] if i == j else a[i][j] + a[j][i]) for j in range(n))
            for i in range(n))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadraticForm):
            return NotImplemented
        return self.tower is other.tower and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("q", self.coeffs))

    def __repr__(self) -> str:
        return f"QuadraticForm({self})"

    def __str__(self) -> str:
        if self.is_totally_singular():
            return "<" + ", ".join(str(x) for x in self.diagonal()) + ">"
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.coeffs) + "]_q"

    def matrix(self) -> Matrix:
        return [list(row) for row in self.coeffs]

    def evaluate(self,
                 x: Vector) -> FieldElement:
        x = [self.tower.coerce(v) for v in x]
        result: FieldElement = self.tower.zero
        for i in range(self.dim):
            if not x[i]:
                continue
            for j in range(i, self.dim):
                if x[j] and self.coeffs[i][j]:
                    result = result + self.coeffs[i][j] * x[i] * x[j]
        return result

    def polar(self) -> BilinearForm:
        """
        The polar form *b_q(x,y) = q(x+y) - q(x) - q(y)*, of Gram matrix *Q + Q^t*.
        """
        n: int = self.dim
        return BilinearForm(self.tower, [[self.coeffs[i][j] + self.coeffs[j][i] for j in range(n)]
                                         for i in range(n)])

    def diagonal(self) -> list[FieldElement]:
        return [self.coeffs[i][i] for i in range(self.dim)]

    def is_totally_singular(self) -> bool:
        return all(not self.coeffs[i][j] for i in range(self.dim) for j in range(i + 1, self.dim))

    def radical(self) -> list[Vector]:
        return self.polar().radical()

    def compose(self,
                t: Matrix) -> QuadraticForm:
        """
        Return the form *q(T·x)*.
        """
        t = [[self.tower.coerce(x) for x in row] for row in t]
        return QuadraticForm(self.tower, mat_congruence(self.tower, t, self.matrix()))

    def scale(self,
              c: FieldElement | int) -> QuadraticForm:
        c = self.tower.coerce(c)
        return QuadraticForm(self.tower, [[c * x for x in row] for row in self.coeffs])

    def perp(self,
             other: QuadraticForm) -> QuadraticForm:
        tower: FieldTower = _common_tower(self.tower, other.tower)
        return QuadraticForm(tower, mat_direct_sum(tower,
                                                   [[tower.coerce(x) for x in r] for r in self.coeffs],
                                                   [[tower.coerce(x) for x in r] for r in other.coeffs]))

    def base_change(self,
                    level: FieldTower) -> QuadraticForm:
        return QuadraticForm(level, self.coeffs)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": str(self.kind),
            "field": self.tower.key,
            "dim": self.dim,
            "matrix": [[str(x) for x in row] for row in self.coeffs]
        }


class PForm:
    """
    A diagonal p-form *Σ a_i·x_i^p*.
    """
    kind: FormKind = FormKind.PFORM

    def __init__(self,
                 tower: FieldTower,
                 values: Sequence[FieldElement | int]) -> None:
        self.tower: FieldTower = tower
        self.values: tuple[FieldElement, ...] = tuple(tower.coerce(v) for v in values)

    @property
    def dim(self) -> int:
        return len(self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PForm):
            return NotImplemented
        return self.tower is other.tower and self.values == other.values

    def __hash__(self) -> int:
        return hash(("p", self.values))

    def __repr__(self) -> str:
        return f"PForm({self})"

    def __str__(self) -> str:
        return "<" + ", ".join(str(x) for x in self.values) + ">_p"

    def diagonal(self) -> list[FieldElement]:
        return list(self.values)

    def evaluate(self,
                 x: Vector) -> FieldElement:
        result: FieldElement = self.tower.zero
        for a, v in zip(self.values, x):
            result = result + a * self.tower.coerce(v) ** self.tower.p
        return result

    def compose(self,
                t: Matrix) -> PForm:
        # φ(T·x) = Σ_j x_j^p · Σ_i a_i·T_ij^p
        p: int = self.tower.p
        cols: Matrix = mat_transpose([[self.tower.coerce(x) for x in row] for row in t])
        return PForm(self.tower, [sum((a * c ** p for a, c in zip(self.values, col)), self.tower.zero)
                                  for col in cols])

    def scale(self,
              c: FieldElement | int) -> PForm:
        c = self.tower.coerce(c)
        return PForm(self.tower, [c * a for a in self.values])

    def perp(self,
             other: PForm) -> PForm:
        tower: FieldTower = _common_tower(self.tower, other.tower)
        return PForm(tower, [*self.values, *other.values])

    def base_change(self,
                    level: FieldTower) -> PForm:
        return PForm(level, self.values)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": str(self.kind),
            "field": self.tower.key,
            "dim": self.dim,
            "values": [str(x) for x in self.values]
        }


Form = BilinearForm | QuadraticForm | PForm


# builders
def bil_gram(tower: FieldTower,
             rows: Sequence[Sequence[FieldElement | int]]) -> BilinearForm:
    return BilinearForm(tower, rows)


def bil_diagonal(tower: FieldTower,
                 values: Sequence[FieldElement | int]) -> BilinearForm:
    n: int = len(values)
    return BilinearForm(tower, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


def bil_pfister(tower: FieldTower,
                values: Sequence[FieldElement | int]) -> BilinearForm:
    """
    The bilinear Pfister form *<1, a_1>_b ⊗ ... ⊗ <1, a_n>_b*.
    """
    result: BilinearForm = bil_diagonal(tower, [1])
    for a in values:
        result = result.tensor(bil_diagonal(tower, [1, a]))
    return result


def bil_metabolic(tower: FieldTower,
                  a: FieldElement | int) -> BilinearForm:
    """
    The metabolic plane *M(a)*, of Gram matrix *[[0, 1], [1, a]]*.
    """
    return BilinearForm(tower, [[0, 1], [1, a]])


def bil_hyperbolic(tower: FieldTower,
                   n: int = 1) -> BilinearForm:
    result: BilinearForm = BilinearForm(tower, [])
    for _ in range(n):
        result = result.perp(bil_metabolic(tower, 0))
    return result


def quad_matrix(tower: FieldTower,
                rows: Sequence[Sequence[FieldElement | int]]) -> QuadraticForm:
    return QuadraticForm(tower, rows)


def quad_block(tower: FieldTower,
               a: FieldElement | int,
               b: FieldElement | int) -> QuadraticForm:
    """
    The binary form *[a, b] = a·x² + x·y + b·y²*.
    """
    return QuadraticForm(tower, [[a, 1], [0, b]])


def quad_blocks(tower: FieldTower,
                pairs: Sequence[tuple[FieldElement | int, FieldElement | int]]) -> QuadraticForm:
    result: QuadraticForm = QuadraticForm(tower, [])
    for a, b in pairs:
        result = result.perp(quad_block(tower, a, b))
    return result


def quad_diagonal(tower: FieldTower,
                  values: Sequence[FieldElement | int]) -> QuadraticForm:
    """
    The totally singular form *<a_1, ..., a_n> = Σ a_i·x_i²*.
    """
    n: int = len(values)
    return QuadraticForm(tower, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


def quad_quasi_pfister(tower: FieldTower,
                       values: Sequence[FieldElement | int]) -> QuadraticForm:
    """
    The quasi-Pfister form *<<a_1, ..., a_n>>*, diagonal in the products of the subsets of the *a_i*.
    """
    return quad_diagonal(tower, _subset_products(tower, values))


def quad_hyperbolic(tower: FieldTower,
                    n: int = 1) -> QuadraticForm:
    return quad_blocks(tower, [(0, 0)] * n)


def quad_pfister(tower: FieldTower,
                 values: Sequence[FieldElement | int],
                 d: FieldElement | int) -> QuadraticForm:
    """
    The quadratic Pfister form *<<a_1, ..., a_n>>_b ⊗ [1, d]*.
    """
    return bil_pfister(tower, values).tensor(quad_block(tower, 1, d))


def pform_diagonal(tower: FieldTower,
                   values: Sequence[FieldElement | int]) -> PForm:
    return PForm(tower, values)


def pform_quasi_pfister(tower: FieldTower,
                        values: Sequence[FieldElement | int]) -> PForm:
    """
    The p-form *⊗ <1, a_i, ..., a_i^(p-1)>*.
    """
    result: list[FieldElement] = [tower.one]
    for a in values:
        a = tower.coerce(a)
        result = [x * a ** e for e in range(tower.p) for x in result]
    return PForm(tower, result)


def diagonal_quadratic(form: BilinearForm) -> QuadraticForm:
    """
    The totally singular form *q_b(x) = b(x, x)*, diagonal in the diagonal of the Gram matrix.
    """
    return quad_diagonal(form.tower, form.diagonal())


def _subset_products(tower: FieldTower,
                     values: Sequence[FieldElement | int]) -> list[FieldElement]:
    result: list[FieldElement] = [tower.one]
    for a in values:
        a = tower.coerce(a)
        result = result + [x * a for x in result]
    return result


def form_kind(form: Form) -> str:
    """
    Classify *form* as *bilinear*, *totally-singular*, *nonsingular* (quadratic), *singular* (quadratic) or *p-form*.
    """
    if isinstance(form, BilinearForm):
        return "bilinear"
    if isinstance(form, PForm):
        return "p-form"
    if form.is_totally_singular():
        return "totally-singular"
    return "nonsingular" if not form.radical() else "singular"

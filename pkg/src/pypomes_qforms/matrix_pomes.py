"""
Exact dense linear algebra over the levels of a field tower.

Matrices are lists of rows, entries are *FieldElement* instances of one level. The level is passed
explicitly wherever a zero or a one must be produced, so that empty matrices are handled uniformly.
Elimination, determinants and characteristic polynomials run in sympy's *DomainMatrix*, over the
level wrapped as a sympy field domain.
"""
from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING, Any

from sympy.polys.domains.field import Field
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

if TYPE_CHECKING:
    from .field_pomes import FieldElement, FieldTower

Vector = list["FieldElement"]
Matrix = list[list["FieldElement"]]


class TowerDomain(Field):
    """
    A level of a field tower as a sympy field domain.
    """
    is_Exact = True

    def __init__(self,
                 field: FieldTower) -> None:
        from .field_pomes import FieldElement
        self.field: FieldTower = field
        self.dtype = FieldElement
        self.zero = field.zero
        self.one = field.one

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TowerDomain) and other.field is self.field

    def __hash__(self) -> int:
        return hash(("tower", self.field.key))

    def __str__(self) -> str:
        return self.field.key

    __repr__ = __str__

    def new(self,
            a: Any) -> FieldElement:
        return self.convert(a)

    def convert(self,
                element: Any,
                base: Any = None) -> FieldElement:
        return element if isinstance(element, self.dtype) else self.field.from_int(int(element))

    def characteristic(self) -> int:
        return self.field.p

    def is_negative(self,
                    a: FieldElement) -> bool:
        return False


@lru_cache(maxsize=128)
def tower_domain(field: FieldTower) -> TowerDomain:
    return TowerDomain(field)


def _dm(field: FieldTower,
        m: Matrix,
        cols: int = None) -> DomainMatrix:
    return DomainMatrix([list(row) for row in m],
                        (len(m), len(m[0]) if m else (cols or 0)),
                        tower_domain(field))


def mat_zero(field: FieldTower,
             rows: int,
             cols: int) -> Matrix:
    return [[field.zero for _ in range(cols)] for _ in range(rows)]


def mat_identity(field: FieldTower,
                 n: int) -> Matrix:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_transpose(m: Matrix) -> Matrix:
    if not m:
        return []
    return [[m[i][j] for i in range(len(m))] for j in range(len(m[0]))]


def mat_mul(field: FieldTower,
            a: Matrix,
            b: Matrix) -> Matrix:
    inner: int = len(b)
    cols: int = len(b[0]) if b else 0
    result: Matrix = mat_zero(field, len(a), cols)
    for i, row in enumerate(a):
        for k in range(inner):
            x: FieldElement = row[k]
            if x:
                bk: list[FieldElement] = b[k]
                out: list[FieldElement] = result[i]
                for j in range(cols):
                    if bk[j]:
                        out[j] = out[j] + x * bk[j]
    return result


def mat_vec(field: FieldTower,
            m: Matrix,
            v: Vector) -> Vector:
    return [vec_dot(field, row, v) for row in m]


def vec_dot(field: FieldTower,
            u: Vector,
            v: Vector) -> FieldElement:
    acc: FieldElement = field.zero
    for x, y in zip(u, v):
        if x and y:
            acc = acc + x * y
    return acc


def mat_congruence(field: FieldTower,
                   t: Matrix,
                   a: Matrix) -> Matrix:
    """
    Return *T^t·A·T*.
    """
    return mat_mul(field, mat_mul(field, mat_transpose(t), a), t)


def mat_direct_sum(field: FieldTower,
                   a: Matrix,
                   b: Matrix) -> Matrix:
    na: int = len(a)
    nb: int = len(b)
    result: Matrix = mat_zero(field, na + nb, na + nb)
    for i in range(na):
        for j in range(na):
            result[i][j] = a[i][j]
    for i in range(nb):
        for j in range(nb):
            result[na + i][na + j] = b[i][j]
    return result


def mat_is_symmetric(m: Matrix) -> bool:
    n: int = len(m)
    return all(len(row) == n for row in m) and \
        all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def mat_rref(field: FieldTower,
             m: Matrix) -> tuple[Matrix, list[int]]:
    """
    Bring *m* to reduced row echelon form.

    :param field: the level holding the entries
    :param m: the matrix
    :return: the reduced matrix and the list of pivot columns
    """
    if not m or not m[0]:
        return [list(row) for row in m], []
    reduced, pivots = _dm(field, m).rref()
    return reduced.to_list(), list(pivots)


def mat_rank(field: FieldTower,
             m: Matrix) -> int:
    return len(mat_rref(field, m)[1])


def mat_kernel(field: FieldTower,
               m: Matrix,
               ncols: int = None) -> list[Vector]:
    """
    Compute a basis of the right kernel *{x : m·x = 0}*.

    :param field: the level holding the entries
    :param m: the matrix
    :param ncols: the number of columns, needed when *m* has no rows
    :return: the kernel basis, one vector per free column
    """
    cols: int = len(m[0]) if m else (ncols or 0)
    r, pivots = mat_rref(field, m)
    result: list[Vector] = []
    pivot_set: set[int] = set(pivots)
    for free in range(cols):
        if free in pivot_set:
            continue
        v: Vector = [field.zero] * cols
        v[free] = field.one
        for row, pc in enumerate(pivots):
            if r[row][free]:
                v[pc] = -r[row][free]
        result.append(v)
    return result


def mat_solve(field: FieldTower,
              a: Matrix,
              b: Vector) -> Vector | None:
    """
    Solve *a·x = b*, returning one solution (free unknowns set to zero), or *None* if inconsistent.
    """
    cols: int = len(a[0]) if a else 0
    aug: Matrix = [list(row) + [y] for row, y in zip(a, b)]
    r, pivots = mat_rref(field, aug)
    if cols in pivots:
        return None
    x: Vector = [field.zero] * cols
    for row, pc in enumerate(pivots):
        x[pc] = r[row][cols]
    return x


def mat_inverse(field: FieldTower,
                a: Matrix) -> Matrix | None:
    if not a:
        return []
    try:
        return _dm(field, a).inv().to_list()
    except DMNonInvertibleMatrixError:
        return None


def mat_det(field: FieldTower,
            a: Matrix) -> FieldElement:
    return _dm(field, a).det() if a else field.one


def mat_charpoly(field: FieldTower,
                 a: Matrix) -> Vector:
    """
    Compute the characteristic polynomial *det(X·I - a)*.

    :param field: the level holding the entries
    :param a: the square matrix
    :return: the coefficients, lowest degree first, the last one being 1
    """
    if not a:
        return [field.one]
    return [field.zero if c == 0 else c for c in reversed(_dm(field, a).charpoly_berk())]

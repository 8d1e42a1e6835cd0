from pypomes_qforms import FieldElement, FieldTower
from pypomes_qforms.matrix_pomes import (
    Matrix, mat_charpoly, mat_congruence, mat_det, mat_direct_sum, mat_identity,
    mat_inverse, mat_is_symmetric, mat_kernel, mat_mul, mat_rank, mat_solve, mat_transpose
)


def _m(f: FieldTower, rows: list[list]) -> Matrix:
    return [[f.coerce(x) for x in row] for row in rows]


def test_inverse_and_det(f_t: FieldTower, t: FieldElement) -> None:
    a: Matrix = _m(f_t, [[1, t], [t, 1]])
    assert mat_det(f_t, a) == t * t + 1
    inv: Matrix = mat_inverse(f_t, a)
    assert mat_mul(f_t, a, inv) == mat_identity(f_t, 2)


def test_singular_matrix(f_t: FieldTower, t: FieldElement) -> None:
    a: Matrix = _m(f_t, [[1, t], [t, t * t]])
    assert mat_det(f_t, a) == 0
    assert mat_inverse(f_t, a) is None
    assert mat_rank(f_t, a) == 1
    kernel = mat_kernel(f_t, a)
    assert len(kernel) == 1
    assert all(sum((x * y for x, y in zip(row, kernel[0])), f_t.zero) == 0 for row in a)


def test_solve(f_t: FieldTower, t: FieldElement) -> None:
    a: Matrix = _m(f_t, [[1, t], [0, 1]])
    x = mat_solve(f_t, a, [t, f_t.one])
    assert x == [f_t.zero, f_t.one]
    assert mat_solve(f_t, _m(f_t, [[1, 1], [1, 1]]), [f_t.one, f_t.zero]) is None


def test_congruence_keeps_symmetry(f_t: FieldTower, t: FieldElement) -> None:
    a: Matrix = _m(f_t, [[t, 1], [1, 0]])
    s: Matrix = _m(f_t, [[1, t], [1, 0]])
    b: Matrix = mat_congruence(f_t, s, a)
    assert mat_is_symmetric(b)
    assert b == mat_mul(f_t, mat_mul(f_t, mat_transpose(s), a), s)


def test_direct_sum(f_t: FieldTower, t: FieldElement) -> None:
    d: Matrix = mat_direct_sum(f_t, _m(f_t, [[t]]), _m(f_t, [[1, 1], [1, 0]]))
    assert d == _m(f_t, [[t, 0, 0], [0, 1, 1], [0, 1, 0]])


def test_charpoly_of_companion(f_t: FieldTower, t: FieldElement) -> None:
    # companion matrix of X^3 + X + t
    c: Matrix = _m(f_t, [[0, 0, t], [1, 0, 1], [0, 1, 0]])
    assert mat_charpoly(f_t, c) == [t, f_t.one, f_t.zero, f_t.one]


def test_linear_algebra_over_a_tower_step(cubic: FieldTower) -> None:
    x: FieldElement = cubic.gens()["x"]
    a: Matrix = _m(cubic, [[x, 1], [1, x]])
    assert mat_det(cubic, a) == x * x + 1
    assert mat_mul(cubic, a, mat_inverse(cubic, a)) == mat_identity(cubic, 2)
    # X^2 + x^2 + 1 in characteristic 2
    assert mat_charpoly(cubic, a) == [x * x + 1, cubic.zero, cubic.one]


def test_empty_matrices(f_t: FieldTower) -> None:
    assert mat_det(f_t, []) == f_t.one
    assert mat_charpoly(f_t, []) == [f_t.one]
    assert mat_kernel(f_t, [], ncols=2) == [[f_t.one, f_t.zero], [f_t.zero, f_t.one]]

import pytest

from pypomes_qforms import (
    BilinearForm, FieldElement, FieldTower, FormKind, NotSymmetric, QuadraticForm, TowerMismatch,
    bil_diagonal, bil_gram, bil_hyperbolic, bil_metabolic, bil_pfister, diagonal_quadratic, form_kind,
    pform_quasi_pfister, quad_block, quad_diagonal, quad_hyperbolic, quad_matrix, quad_pfister,
    quad_quasi_pfister, tower_base
)


def test_bilinear_requires_symmetry(f_t: FieldTower, t: FieldElement) -> None:
    with pytest.raises(NotSymmetric):
        bil_gram(f_t, [[1, t], [0, 1]])


def test_quadratic_folds_to_upper_triangle(f_t: FieldTower, t: FieldElement) -> None:
    q: QuadraticForm = quad_matrix(f_t, [[1, t], [1, t]])
    assert q == quad_matrix(f_t, [[1, t + 1], [0, t]])
    assert q.evaluate([f_t.one, f_t.one]) == 1 + (t + 1) + t


def test_block_values_and_polar(f_t: FieldTower, t: FieldElement) -> None:
    q: QuadraticForm = quad_block(f_t, 1, t)
    assert q.evaluate([t, f_t.one]) == t * t + t + t
    assert q.polar() == bil_gram(f_t, [[0, 1], [1, 0]])
    assert form_kind(q) == "nonsingular"
    assert form_kind(quad_diagonal(f_t, [1, t])) == "totally-singular"
    assert form_kind(q.perp(quad_diagonal(f_t, [t]))) == "singular"


def test_pfister_builders(f_ab: FieldTower) -> None:
    a: FieldElement = f_ab.gens()["a"]
    b: FieldElement = f_ab.gens()["b"]
    assert bil_pfister(f_ab, [a, b]) == bil_diagonal(f_ab, [1, b, a, a * b])
    assert quad_quasi_pfister(f_ab, [a, b]).diagonal() == [f_ab.one, a, b, a * b]
    assert quad_pfister(f_ab, [a], b).dim == 4


def test_pform_quasi_pfister_dimension() -> None:
    f3: FieldTower = tower_base(3, 1, ("t", "u"))
    g = f3.gens()
    phi = pform_quasi_pfister(f3, [g["t"], g["u"]])
    assert phi.dim == 9
    assert phi.kind == FormKind.PFORM


def test_metabolic_and_hyperbolic(f_t: FieldTower, t: FieldElement) -> None:
    m: BilinearForm = bil_metabolic(f_t, t)
    assert m.determinant() == 1
    assert bil_hyperbolic(f_t, 2).dim == 4
    assert quad_hyperbolic(f_t, 1) == quad_block(f_t, 0, 0)
    assert diagonal_quadratic(m) == quad_diagonal(f_t, [0, t])


def test_radical_and_ns_part(f_t: FieldTower, t: FieldElement) -> None:
    b: BilinearForm = bil_diagonal(f_t, [t, 0]).perp(bil_metabolic(f_t, 1))
    assert len(b.radical()) == 1
    assert b.ns_part().dim == 3
    assert b.ns_part().is_nonsingular()


def test_perp_and_base_change(f_t: FieldTower, cubic: FieldTower, t: FieldElement) -> None:
    x: FieldElement = cubic.gens()["x"]
    b: BilinearForm = bil_diagonal(f_t, [1, t])
    c: BilinearForm = bil_diagonal(cubic, [x])
    s: BilinearForm = b.perp(c)
    assert s.tower is cubic
    assert s == b.base_change(cubic).perp(c)
    with pytest.raises(TowerMismatch):
        b.perp(bil_diagonal(tower_base(2, 1, ("u",)), [1]))


def test_compose_and_scale(f_t: FieldTower, t: FieldElement) -> None:
    b: BilinearForm = bil_diagonal(f_t, [1, t])
    swap = [[0, 1], [1, 0]]
    assert b.compose(swap) == bil_diagonal(f_t, [t, 1])
    assert b.scale(t) == bil_diagonal(f_t, [t, t * t])
    q: QuadraticForm = quad_block(f_t, 1, t)
    assert q.scale(t).evaluate([f_t.one, f_t.zero]) == t


def test_to_dict(f_t: FieldTower, t: FieldElement) -> None:
    d = quad_block(f_t, 1, t).to_dict()
    assert d["kind"] == "quadratic"
    assert d["dim"] == 2
    assert d["field"] == "GF(2)(t)"

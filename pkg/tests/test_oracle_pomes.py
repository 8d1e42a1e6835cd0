import pytest

from pypomes_qforms import (
    BoundExceeded, DimensionMismatch, FieldElement, FieldTower, OracleKind, UnsupportedCharacteristic,
    bil_diagonal, bil_metabolic, oracle_bruteforce, oracle_congruence_classes, oracle_gl_matrices,
    quad_diagonal, tower_base
)
from pypomes_qforms.matrix_pomes import mat_congruence


@pytest.fixture(scope="module")
def gf2() -> FieldTower:
    return tower_base(2, 1, ())


def test_gl_matrices(gf2: FieldTower) -> None:
    assert len(list(oracle_gl_matrices(gf2, 2))) == 6
    with pytest.raises(BoundExceeded):
        list(oracle_gl_matrices(gf2, 3, cap=100))


def test_congruence_classes(gf2: FieldTower) -> None:
    classes = oracle_congruence_classes(gf2, 1)
    assert len(classes) == 2
    assert len(set(classes.values())) == 2
    # <1,1>, <1,0> and <0,0> are pairwise incongruent symmetric 2x2 matrices
    two = oracle_congruence_classes(gf2, 2)
    assert len(two) == 8
    assert len({two[((gf2.one, gf2.zero), (gf2.zero, gf2.one))],
                two[((gf2.one, gf2.zero), (gf2.zero, gf2.zero))],
                two[((gf2.zero, gf2.zero), (gf2.zero, gf2.zero))]}) == 3


def test_congruent(gf2: FieldTower, logger) -> None:
    oracle = oracle_bruteforce(OracleKind.CONGRUENCE, 2, logger=logger)
    one = bil_diagonal(gf2, [1, 1])
    # <1,1> ≅ M(1) by T = [[1,0],[1,1]], not M(0)
    assert oracle.congruent(one, bil_metabolic(gf2, 1))
    assert not oracle.query(one, bil_metabolic(gf2, 0))
    t = oracle.congruence_matrix(one, bil_metabolic(gf2, 1))
    assert t is not None
    assert mat_congruence(gf2, t, one.matrix()) == bil_metabolic(gf2, 1).matrix()
    assert oracle.congruence_matrix(one, bil_metabolic(gf2, 0)) is None

    with pytest.raises(DimensionMismatch):
        oracle.congruent(bil_diagonal(gf2, [1]), one)
    with pytest.raises(BoundExceeded):
        oracle_bruteforce(OracleKind.CONGRUENCE, 1).congruent(one, one)


def test_isotropic_vector(f_t: FieldTower, t: FieldElement) -> None:
    assert oracle_bruteforce(OracleKind.ISOTROPY, 2).isotropic_vector(bil_diagonal(f_t, [1])) is None

    form = quad_diagonal(f_t, [1, t, t * t + t])
    v = oracle_bruteforce(OracleKind.ISOTROPY, 3).query(form)
    assert v is not None
    assert any(v)
    assert not form.evaluate(v)

    with pytest.raises(BoundExceeded):
        oracle_bruteforce(OracleKind.ISOTROPY, 3, cap=10).isotropic_vector(form)


def test_wp_root(f_t: FieldTower, t: FieldElement, f_ab: FieldTower) -> None:
    assert oracle_bruteforce(OracleKind.WP, 6).wp_root(t) is None

    w = oracle_bruteforce("bounded-height-wp", 1).query(t * t + t)
    assert w is not None
    assert w * w + w == t * t + t

    with pytest.raises(UnsupportedCharacteristic):
        oracle_bruteforce(OracleKind.WP, 1).wp_root(f_ab.gens()["a"])
    with pytest.raises(BoundExceeded):
        oracle_bruteforce(OracleKind.WP, 10, cap=100).wp_root(t)


def test_oracle_to_dict() -> None:
    assert oracle_bruteforce(OracleKind.WP, 2, cap=64).to_dict() == {
        "kind": "bounded-height-wp",
        "bound": 2,
        "cap": 64
    }

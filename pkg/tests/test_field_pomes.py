import random

import pytest
from hypothesis import given, settings, strategies as st

from pypomes_qforms import (
    DegreeCapExceeded, DivisionByZero, FieldElement, FieldTower, IrreducibilityUnknown,
    NameInUse, StepKind, TowerMismatch, UnsupportedCharacteristic, UnsupportedInseparableStep,
    char_poly, element_arith, functional_s, norm, norm_stepwise, pth_root, sqrt, tower_base, tower_extend
)


def test_tower_base_key_and_gens(f_ab: FieldTower) -> None:
    assert f_ab.key == "GF(2)(a,b)"
    assert set(f_ab.gens()) == {"a", "b"}
    assert set(tower_base(2, 2, ("t",)).gens()) == {"z", "t"}


def test_tower_base_rejects_bad_names() -> None:
    with pytest.raises(NameInUse):
        tower_base(2, 1, ("t", "t"))
    with pytest.raises(NameInUse):
        tower_base(2, 1, ("z",))
    with pytest.raises(UnsupportedCharacteristic):
        tower_base(11, 1, ("t",))


def test_field_arithmetic(f_t: FieldTower, t: FieldElement) -> None:
    x: FieldElement = (t + 1) / t
    assert x * t == t + 1
    assert x - 1 == 1 / t
    assert t + t == f_t.zero
    assert (t ** 2) ** -1 * t ** 2 == f_t.one
    assert element_arith("equals", x, (t + 1) * t.inverse())


def test_inverse_of_zero(f_t: FieldTower) -> None:
    with pytest.raises(DivisionByZero):
        f_t.zero.inverse()


def test_unrelated_towers(f_t: FieldTower, f_ab: FieldTower) -> None:
    a: FieldElement = f_ab.gens()["a"]
    assert a != f_t.gens()["t"]
    with pytest.raises(TowerMismatch):
        f_t.coerce(a)


def test_separable_cubic(cubic: FieldTower, f_t: FieldTower, t: FieldElement) -> None:
    assert cubic.kind == StepKind.SEPARABLE
    assert cubic.degree_over(f_t) == 3
    x: FieldElement = cubic.gens()["x"]
    assert x ** 3 + x + t == cubic.zero
    data = char_poly(x)
    assert list(data.coefficients) == [f_t.zero, f_t.one, t]
    assert data.norm == t
    assert data.degree == 3
    assert norm(x, f_t) == t


def test_functional_s(cubic: FieldTower, t: FieldElement) -> None:
    x: FieldElement = cubic.gens()["x"]
    assert functional_s(cubic.one) == 1
    assert functional_s(x) == 0
    assert functional_s(x ** 2) == 0
    assert functional_s(x ** 3) == t
    assert functional_s(x ** 4) == 0


def test_inseparable_step(root_t: FieldTower, f_t: FieldTower, t: FieldElement) -> None:
    assert root_t.kind == StepKind.INSEPARABLE
    assert root_t.inseparable_degree_over(f_t) == 2
    r: FieldElement = root_t.gens()["r"]
    assert r * r == t
    assert sqrt(root_t.coerce(t)) == r
    assert sqrt(t) is None
    # the norm of an element of a purely inseparable quadratic step is its square
    assert norm(r + 1, f_t) == t + 1


def test_sqrt_and_pth_root(f_t: FieldTower, t: FieldElement) -> None:
    assert sqrt(t ** 2 + 1) == t + 1
    assert sqrt(t ** 2 + t) is None
    f3: FieldTower = tower_base(3, 1, ("t",))
    s: FieldElement = f3.gens()["t"]
    assert pth_root(s ** 3 + 2) == s + 2
    with pytest.raises(UnsupportedCharacteristic):
        sqrt(s)


def test_tower_extend_errors(f_t: FieldTower, t: FieldElement) -> None:
    with pytest.raises(UnsupportedInseparableStep):
        tower_extend(f_t, "w", [t + 1, 0, 1])
    with pytest.raises(IrreducibilityUnknown):
        tower_extend(f_t, "w", [0, 1, 1])
    with pytest.raises(NameInUse):
        tower_extend(f_t, "t", [t, 1, 1])
    with pytest.raises(DegreeCapExceeded):
        tower_extend(f_t, "w", [t, 1, 0, 1], degree_cap=2)


def test_tower_extend_finite_factorization(gf4: FieldTower) -> None:
    # x^2 + x + 1 splits over GF(4)
    with pytest.raises(IrreducibilityUnknown):
        tower_extend(gf4, "w", [1, 1, 1])
    step: FieldTower = tower_extend(gf4, "w", [gf4.gens()["z"], 1, 1])
    assert step.certificate["method"] == "factorization"


def test_descend_and_coords(cubic: FieldTower, f_t: FieldTower, t: FieldElement) -> None:
    x: FieldElement = cubic.gens()["x"]
    assert cubic.descend(cubic.coerce(t + 1), f_t) == t + 1
    assert cubic.descend(x, f_t) is None
    coords: list[FieldElement] = cubic.coords_over(x ** 2 + t, f_t)
    assert coords == [t, f_t.zero, f_t.one]
    assert cubic.from_coords_over(coords, f_t) == x ** 2 + t


def test_two_step_tower_norms(as_step: FieldTower, f_t: FieldTower, t: FieldElement) -> None:
    top: FieldTower = tower_extend(as_step, "v", [t, 0, 1])
    assert top.degree_over(f_t) == 4
    assert top.inseparable_degree_over(f_t) == 2
    v: FieldElement = top.gens()["v"]
    y: FieldElement = top.gens()["y"]
    for x in (v + y, v * y + 1, y + t):
        assert norm(x, f_t) == norm_stepwise(x, f_t)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_norm_is_multiplicative(cubic: FieldTower, f_t: FieldTower, seed: int) -> None:
    rng: random.Random = random.Random(seed)
    a: FieldElement = cubic.random_element(rng, degree=2)
    b: FieldElement = cubic.random_element(rng, degree=2)
    assert norm(a * b, f_t) == norm(a, f_t) * norm(b, f_t)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_field_axioms(cubic: FieldTower, seed: int) -> None:
    rng: random.Random = random.Random(seed)
    a, b, c = (cubic.random_element(rng, degree=2) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    if a:
        assert a * a.inverse() == cubic.one

import logging

import pytest

from pypomes_qforms import FieldElement, FieldTower, tower_base, tower_extend


@pytest.fixture(scope="session")
def logger() -> logging.Logger:
    result: logging.Logger = logging.getLogger("pypomes_qforms.tests")
    result.setLevel(logging.DEBUG)
    return result


@pytest.fixture(scope="session")
def f_t() -> FieldTower:
    # GF(2)(t)
    return tower_base(2, 1, ("t",))


@pytest.fixture(scope="session")
def t(f_t: FieldTower) -> FieldElement:
    return f_t.gens()["t"]


@pytest.fixture(scope="session")
def f_ab() -> FieldTower:
    # GF(2)(a,b)
    return tower_base(2, 1, ("a", "b"))


@pytest.fixture(scope="session")
def gf4() -> FieldTower:
    return tower_base(2, 2, ())


@pytest.fixture(scope="session")
def cubic(f_t: FieldTower, t: FieldElement) -> FieldTower:
    # K = F[x]/(x^3 + x + t), separable of degree 3
    return tower_extend(parent=f_t,
                        var="x",
                        coeffs=[t, 1, 0, 1])


@pytest.fixture(scope="session")
def as_step(f_t: FieldTower, t: FieldElement) -> FieldTower:
    # L = F[y]/(y^2 + y + t), the Artin-Schreier extension
    return tower_extend(parent=f_t,
                        var="y",
                        coeffs=[t, 1, 1])


@pytest.fixture(scope="session")
def root_t(f_t: FieldTower, t: FieldElement) -> FieldTower:
    # F(sqrt(t)), purely inseparable
    return tower_extend(parent=f_t,
                        var="r",
                        coeffs=[t, 0, 1])

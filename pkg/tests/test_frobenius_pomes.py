import pytest

from pypomes_qforms import (
    FieldElement, FieldTower, ZeroSubspace, field_closure, stabilizer_field,
    subspace_contains, subspace_equals, subspace_from_generators, subspace_intersect,
    subspace_member, subspace_sum, cert_check
)


def test_square_span_dimension(f_ab: FieldTower) -> None:
    a: FieldElement = f_ab.gens()["a"]
    b: FieldElement = f_ab.gens()["b"]
    # the p-basis monomials 1, a, b, ab span F over F^2
    assert subspace_from_generators([f_ab.one, a, b, a * b]).dim == 4
    # a^3 = a^2·a, and a + 1 and a are dependent on 1, a
    assert subspace_from_generators([a, a ** 3, a + 1, f_ab.one]).dim == 2


def test_membership_certificates(f_ab: FieldTower) -> None:
    a: FieldElement = f_ab.gens()["a"]
    b: FieldElement = f_ab.gens()["b"]
    space = subspace_from_generators([f_ab.one, a])
    yes = subspace_member(a * b ** 2 + 1, space)
    assert yes.is_yes
    assert cert_check(yes)
    no = subspace_member(b, space)
    assert no.is_no
    assert cert_check(no)


def test_sum_and_intersection(f_ab: FieldTower) -> None:
    a: FieldElement = f_ab.gens()["a"]
    b: FieldElement = f_ab.gens()["b"]
    u = subspace_from_generators([f_ab.one, a])
    v = subspace_from_generators([f_ab.one, b])
    assert subspace_sum(u, v).dim == 3
    meet = subspace_intersect(u, v)
    assert meet.dim == 1
    assert meet.contains(f_ab.one)
    assert subspace_contains(subspace_sum(u, v), meet)
    assert not subspace_contains(u, v)


def test_stabilizer_field(f_ab: FieldTower) -> None:
    a: FieldElement = f_ab.gens()["a"]
    b: FieldElement = f_ab.gens()["b"]
    # <1, a, b, ab> spans F, stabilized by all of F
    assert stabilizer_field(subspace_from_generators([f_ab.one, a, b, a * b])).dim == 4
    # <1, a> is the field F^2(a)
    g = stabilizer_field(subspace_from_generators([f_ab.one, a]))
    assert subspace_equals(g, field_closure([a], f_ab))
    # <1, a, b> is stabilized by F^2 only
    assert stabilizer_field(subspace_from_generators([f_ab.one, a, b])).dim == 1


def test_stabilizer_of_zero(f_ab: FieldTower) -> None:
    with pytest.raises(ZeroSubspace):
        stabilizer_field(subspace_from_generators([f_ab.zero], tower=f_ab))


def test_field_closure(f_ab: FieldTower) -> None:
    a: FieldElement = f_ab.gens()["a"]
    b: FieldElement = f_ab.gens()["b"]
    assert field_closure([], f_ab).dim == 1
    assert field_closure([a], f_ab).dim == 2
    assert field_closure([a, b], f_ab).dim == 4
    assert field_closure([a + b], f_ab).dim == 2

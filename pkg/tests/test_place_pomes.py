from pypomes_qforms import FieldElement, FieldTower, tower_base
from pypomes_qforms.place_pomes import (
    INFINITY, has_places, local_symbol, multiplicity, norm_symbols,
    place_factors, place_from_label, place_label, rat_split, same_place, wp_pole
)


def _poly(x: FieldElement):
    num, den = rat_split(x)
    assert den.is_one
    return num


def test_place_factors(f_t: FieldTower, t: FieldElement) -> None:
    places = place_factors(f_t.gf, _poly((t + 1) ** 2 * (t * t + t + 1) * t))
    assert len(places) == 3
    assert {str(place_label(f_t, v)) for v in places} == {str(t), str(t + 1), str(t * t + t + 1)}
    assert place_factors(f_t.gf, _poly(f_t.one)) == []
    assert multiplicity(_poly((t + 1) ** 3 * t), _poly(t + 1)) == 3


def test_place_factors_gf4() -> None:
    f4t: FieldTower = tower_base(2, 2, ("t",))
    t: FieldElement = f4t.gens()["t"]
    # t^3 + t + 1 stays irreducible over GF(4), t^2 + t + 1 splits
    assert len(place_factors(f4t.gf, _poly(t ** 3 + t + 1))) == 1
    assert place_factors(f4t.gf, _poly(t * t + t + 1)) is None
    z: FieldElement = f4t.gens()["z"]
    assert place_factors(f4t.gf, _poly(t + z)) is None


def test_place_labels(f_t: FieldTower, t: FieldElement) -> None:
    assert has_places(f_t)
    assert not has_places(tower_base(2, 1, ("t", "u")))
    assert place_from_label(f_t, INFINITY) == INFINITY
    assert same_place(place_from_label(f_t, t * t + t + 1), _poly(t * t + t + 1))
    assert not same_place(INFINITY, _poly(t))
    # reducible, or not a polynomial
    assert place_from_label(f_t, t * t + 1) is None
    assert place_from_label(f_t, t.inverse()) is None


def test_local_symbols(f_t: FieldTower, t: FieldElement) -> None:
    # t = N(θ) for θ² + θ = t
    assert all(s == 0 for _, s in norm_symbols(t, t))
    # t + 1 is not a norm: the symbols at t + 1 and at infinity are both 1
    symbols = norm_symbols(t, t + 1)
    assert [(str(place_label(f_t, v)), s) for v, s in symbols] == [(INFINITY, 1), (str(t + 1), 1)]
    # the symbols add up to zero
    g: FieldElement = (t ** 3 + t + 1) / (t * t + t + 1)
    assert sum(s for _, s in norm_symbols(t.inverse() + t, g)) % 2 == 0
    assert local_symbol(t, t + 1, _poly(t)) == 0


def test_wp_pole(f_t: FieldTower, t: FieldElement) -> None:
    assert wp_pole(t ** 3) == (INFINITY, 3)
    # t^4 + t^2 = ℘(t^2)
    assert wp_pole(t ** 4 + t * t) is None
    # with u = t + 1: 1/u^4 + 1/u^3 ≡ 1/u^3 + 1/u^2
    place, order = wp_pole(t / (t + 1) ** 4)
    assert same_place(place, _poly(t + 1))
    assert order == 3

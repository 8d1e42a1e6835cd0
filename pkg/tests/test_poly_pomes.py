import pytest

from pypomes_qforms.gf_pomes import gf_field
from pypomes_qforms.poly_pomes import (
    mp_divexact, mp_gcd, mp_mul, mp_pow, mp_to_str, rat_add, rat_inv, rat_mul, rat_normalize
)

GF2 = gf_field(2)
GF4 = gf_field(2, 2)
# t + 1 and t^2 + t + 1 over GF(2), one variable
T1 = {(1,): 1, (0,): 1}
T2 = {(2,): 1, (1,): 1, (0,): 1}


def test_mp_gcd_is_monic() -> None:
    a = mp_mul(GF2, T1, T2)
    b = mp_mul(GF2, T1, T1)
    assert mp_gcd(GF2, a, b) == T1
    assert mp_gcd(GF2, T2, T1) == {(0,): 1}
    assert mp_gcd(GF2, {}, T2) == T2


def test_mp_gcd_over_gf4() -> None:
    z: int = 2
    # (t + z)(t + 1) and (t + z)^2 share t + z
    tz = {(1,): 1, (0,): z}
    a = mp_mul(GF4, tz, T1)
    b = mp_pow(GF4, tz, 2, 1)
    assert mp_gcd(GF4, a, b) == tz


def test_mp_divexact() -> None:
    assert mp_divexact(GF2, mp_mul(GF2, T1, T2), T2) == T1
    with pytest.raises(ValueError):
        mp_divexact(GF2, T2, T1)


def test_rat_normalize_cancels() -> None:
    num, den = rat_normalize(GF2, mp_mul(GF2, T1, T2), mp_mul(GF2, T1, T1), 1)
    assert mp_to_str(GF2, num, ("t",)) == "t^2 + t + 1"
    assert mp_to_str(GF2, den, ("t",)) == "t + 1"


def test_rat_arithmetic() -> None:
    x = rat_normalize(GF2, T2, T1, 1)
    one = rat_normalize(GF2, {(0,): 1}, {(0,): 1}, 1)
    assert rat_mul(GF2, x, rat_inv(GF2, x, 1), 1) == one
    # x + x = 0 in characteristic 2
    assert rat_add(GF2, x, x, 1)[0] == ()

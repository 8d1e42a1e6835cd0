import pytest
from hypothesis import given, strategies as st

from pypomes_qforms.gf_pomes import (
    gf2_clmul, gf2_solve, gf_embedding, gf_field, gfpoly_is_irreducible
)


@pytest.mark.parametrize("p, k", [(2, 1), (2, 3), (3, 2), (5, 1), (7, 1)])
def test_gf_field_inverses(p: int, k: int) -> None:
    gf = gf_field(p, k)
    assert gf.q == p ** k
    for a in range(1, gf.q):
        assert gf.mul(a, gf.inv(a)) == 1


def test_gf_field_is_cached() -> None:
    assert gf_field(2, 4) is gf_field(2, 4)


def test_gf_field_frobenius_root() -> None:
    gf = gf_field(2, 3)
    for a in range(gf.q):
        assert gf.pow(gf.frob_inv(a), 2) == a


def test_gf_field_inverse_of_zero() -> None:
    with pytest.raises(ZeroDivisionError):
        gf_field(2, 2).inv(0)


def test_gf_embedding_is_a_ring_map() -> None:
    small = gf_field(2, 2)
    big = gf_field(2, 4)
    emb = gf_embedding(small, big)
    for a in range(small.q):
        for b in range(small.q):
            assert emb[small.mul(a, b)] == big.mul(emb[a], emb[b])
            assert emb[small.add(a, b)] == big.add(emb[a], emb[b])


def test_gf_embedding_rejects_non_subfield() -> None:
    with pytest.raises(ValueError):
        gf_embedding(gf_field(2, 2), gf_field(2, 3))


@pytest.mark.parametrize("poly, expected", [
    ([1, 1, 1], True),       # x^2 + x + 1
    ([1, 1, 0, 1], True),    # x^3 + x + 1
    ([1, 0, 1], False),      # (x + 1)^2
    ([0, 1, 1], False),      # x(x + 1)
    ([1, 0, 0, 1, 1], True)  # x^4 + x^3 + 1
])
def test_gfpoly_is_irreducible_over_gf2(poly: list[int], expected: bool) -> None:
    assert gfpoly_is_irreducible(gf_field(2), poly) is expected


def test_gfpoly_is_irreducible_over_gf3() -> None:
    gf = gf_field(3)
    # x^2 + 1 has no root mod 3, x^2 - 1 does
    assert gfpoly_is_irreducible(gf, [1, 0, 1])
    assert not gfpoly_is_irreducible(gf, [2, 0, 1])


@given(st.integers(min_value=0, max_value=1 << 12),
       st.integers(min_value=0, max_value=1 << 12),
       st.integers(min_value=0, max_value=1 << 12))
def test_gf2_clmul_distributes(a: int, b: int, c: int) -> None:
    assert gf2_clmul(a, b ^ c) == gf2_clmul(a, b) ^ gf2_clmul(a, c)
    assert gf2_clmul(a, b) == gf2_clmul(b, a)


def test_gf2_solve_consistent() -> None:
    # x0 + x1 = 1, x1 = 1
    sol, cert = gf2_solve([0b11, 0b10], [1, 1], 2)
    assert cert is None
    assert sol == [0, 1]


def test_gf2_solve_inconsistent_certificate() -> None:
    rows = [0b11, 0b01, 0b10]
    rhs = [1, 1, 1]
    sol, cert = gf2_solve(rows, rhs, 2)
    assert sol is None
    combined: int = 0
    parity: int = 0
    for i in cert:
        combined ^= rows[i]
        parity ^= rhs[i]
    assert combined == 0
    assert parity == 1


def test_gfpoly_is_irreducible_over_gf4() -> None:
    gf = gf_field(2, 2)
    z: int = 2
    # x^2 + x + z has no root in GF(4), x^2 + x + 1 has z
    assert gfpoly_is_irreducible(gf, [z, 1, 1])
    assert not gfpoly_is_irreducible(gf, [1, 1, 1])
    # degree 3 stays irreducible over a quadratic extension
    assert gfpoly_is_irreducible(gf, [1, 1, 0, 1])
    assert not gfpoly_is_irreducible(gf, [z, 0, 1])


def test_gf_field_sympy_conversion() -> None:
    gf = gf_field(2, 3)
    for a in range(gf.q):
        assert gf.from_sympy(gf.to_sympy(a)) == a
    assert gf.from_sympy(gf.to_sympy(3) * gf.to_sympy(5)) == gf.mul(3, 5)

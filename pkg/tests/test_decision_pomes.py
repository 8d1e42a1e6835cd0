import pytest

from pypomes_qforms import (
    CertKind, DimensionMismatch, FieldElement, FieldTower, OddDimension, SingularInput,
    arf_invariant, bil_diagonal, bil_gram, bil_is_metabolic, bil_isometry, bil_metabolic, bil_pfister,
    bil_witt_decompose, cert_check, form_isometry, quad_block, quad_blocks, quad_diagonal,
    quad_hyperbolic, quad_isometry, quad_isotropic, quad_normalize, tower_base, ts_isometry,
    witt_equivalent, wp_solve
)


@pytest.fixture(scope="module")
def f_tu() -> FieldTower:
    return tower_base(2, 1, ("t", "u"))


@pytest.fixture(scope="module")
def f_abc() -> FieldTower:
    return tower_base(2, 1, ("a", "b", "c"))


def test_wp_solve(f_t: FieldTower, t: FieldElement) -> None:
    yes = wp_solve(t * t + t)
    assert yes.is_yes
    w: FieldElement = yes.certificate.data["w"]
    assert w * w + w == t * t + t
    assert cert_check(yes)

    # t has a pole of odd order at infinity
    no = wp_solve(t)
    assert no.is_no
    assert no.certificate.kind == CertKind.WP_OBSTRUCTION
    assert no.certificate.data["reason"] == "pole"
    assert no.certificate.data["place"] == "infinity"
    assert no.certificate.data["order"] == 1
    assert cert_check(no)

    # 1/t² ≡ 1/t, a simple pole at t
    finite = wp_solve((t * t).inverse())
    assert finite.is_no
    assert finite.certificate.data["reason"] == "pole"
    assert finite.certificate.data["place"] == t
    assert finite.certificate.data["order"] == 1
    assert cert_check(finite)

    # t² ≡ t
    assert wp_solve(t * t).certificate.data["place"] == "infinity"

    # 1/t has a non-square denominator
    den = wp_solve(t.inverse())
    assert den.is_no
    assert den.certificate.data["reason"] == "denominator"
    assert cert_check(den)


def test_wp_solve_prime_field() -> None:
    gf2: FieldTower = tower_base(2, 1, ())
    outcome = wp_solve(gf2.one)
    assert outcome.is_no
    assert outcome.certificate.data["reason"] == "trace"
    assert cert_check(outcome)
    assert wp_solve(gf2.zero).is_yes


def test_wp_solve_upper_level(as_step: FieldTower, t: FieldElement) -> None:
    # y^2 + y = t holds in F[y]/(y^2 + y + t)
    outcome = wp_solve(as_step.coerce(t))
    assert outcome.is_yes
    assert cert_check(outcome)


def test_wp_solve_odd_degree(cubic: FieldTower, root_t: FieldTower, t: FieldElement) -> None:
    # t stays outside ℘ over an extension of degree 3
    outcome = wp_solve(cubic.coerce(t))
    assert outcome.is_no
    assert outcome.certificate.data["reason"] == "odd-degree"
    assert outcome.certificate.data["outcome"].certificate.data["reason"] == "pole"
    assert cert_check(outcome)

    # over an extension of degree 2 the answer rests on the search
    assert not wp_solve(root_t.coerce(t)).is_no


def test_ts_isometry(f_t: FieldTower, t: FieldElement) -> None:
    phi = quad_diagonal(f_t, [1, t])
    psi = quad_diagonal(f_t, [t + 1, t])
    yes = ts_isometry(phi, psi)
    assert yes.is_yes
    assert phi.compose(yes.certificate.data["matrix"]) == psi
    assert cert_check(yes)

    # t^3 = t^2·t lies in the span of <t>
    assert ts_isometry(quad_diagonal(f_t, [t]), quad_diagonal(f_t, [t ** 3])).is_yes


def test_ts_isometry_no(f_tu: FieldTower) -> None:
    t: FieldElement = f_tu.gens()["t"]
    u: FieldElement = f_tu.gens()["u"]
    outcome = ts_isometry(quad_diagonal(f_tu, [1, t]), quad_diagonal(f_tu, [1, u]))
    assert outcome.is_no
    assert outcome.certificate.kind == CertKind.RANK
    assert cert_check(outcome)

    dims = ts_isometry(quad_diagonal(f_tu, [1]), quad_diagonal(f_tu, [1, u]))
    assert dims.is_no
    assert cert_check(dims)


def test_bil_witt_decompose(f_t: FieldTower, f_tu: FieldTower, t: FieldElement, logger) -> None:
    metabolic = bil_gram(f_t, [[0, 1], [1, t]])
    dec = bil_witt_decompose(metabolic, logger=logger)
    assert dec.verify()
    assert dec.anisotropic_dim == 0
    assert bil_is_metabolic(metabolic).is_yes

    gens: dict[str, FieldElement] = f_tu.gens()
    beta = bil_diagonal(f_tu, [1, gens["t"], gens["u"]])
    dec = bil_witt_decompose(beta)
    assert dec.verify()
    assert dec.anisotropic_dim == 3
    outcome = bil_is_metabolic(beta)
    assert outcome.is_no
    assert cert_check(outcome)

    # <1, 1> has the isotropic vector (1, 1)
    dec = bil_witt_decompose(bil_diagonal(f_t, [1, 1]))
    assert dec.verify()
    assert dec.anisotropic_dim == 0

    with pytest.raises(SingularInput):
        bil_witt_decompose(bil_diagonal(f_t, [1, 0]))


def test_bil_isometry(f_t: FieldTower, t: FieldElement, logger) -> None:
    swap = bil_isometry(bil_diagonal(f_t, [1, t]), bil_diagonal(f_t, [t, 1]), logger=logger)
    assert swap.is_yes
    assert cert_check(swap)

    # M(t) and M(0) have the same Witt class, but different diagonal forms
    planes = bil_isometry(bil_metabolic(f_t, t), bil_metabolic(f_t, 0))
    assert planes.is_no
    assert planes.certificate.kind == CertKind.MILNOR
    assert cert_check(planes)

    with pytest.raises(DimensionMismatch):
        bil_isometry(bil_diagonal(f_t, [1]), bil_diagonal(f_t, [1, 1]))


def test_bil_isometry_pfister(f_ab: FieldTower) -> None:
    a: FieldElement = f_ab.gens()["a"]
    b: FieldElement = f_ab.gens()["b"]
    outcome = bil_isometry(bil_diagonal(f_ab, [a + 1, a, b, a * b]), bil_pfister(f_ab, [a, b]))
    assert outcome.is_no
    assert cert_check(outcome)


def test_quad_normalize(f_t: FieldTower, t: FieldElement) -> None:
    q = quad_block(f_t, 1, t).perp(quad_diagonal(f_t, [t, 0]))
    dec = quad_normalize(q)
    assert dec.verify()
    assert dec.zero == 1
    assert len(dec.ts) == 1
    assert len(dec.blocks) + dec.hyperbolic == 1

    # t^2 + t = w^2 + w with w = t
    hyper = quad_normalize(quad_block(f_t, 1, t * t + t))
    assert hyper.verify()
    assert hyper.hyperbolic == 1


def test_arf_invariant(f_t: FieldTower, t: FieldElement) -> None:
    arf = arf_invariant(quad_block(f_t, 1, t))
    assert arf.representative == t
    assert arf.outcome.is_no
    assert arf.to_dict()["representative"] == str(t)

    with pytest.raises(OddDimension):
        arf_invariant(quad_diagonal(f_t, [1]))
    with pytest.raises(SingularInput):
        arf_invariant(quad_diagonal(f_t, [1, t]))


def test_quad_isometry_wp_shift(f_t: FieldTower, t: FieldElement) -> None:
    w: FieldElement = t + 1
    phi = quad_block(f_t, 1, t)
    psi = quad_block(f_t, 1, t + w * w + w)
    outcome = quad_isometry(phi, psi)
    assert outcome.is_yes
    assert cert_check(outcome)


def test_quad_isometry_arf(f_t: FieldTower, t: FieldElement) -> None:
    outcome = quad_isometry(quad_block(f_t, 1, t), quad_hyperbolic(f_t))
    assert outcome.is_no
    assert outcome.certificate.data["invariant"] == "arf"
    assert cert_check(outcome)


def test_quad_isometry_binary_same_arf(f_t: FieldTower, t: FieldElement) -> None:
    phi = quad_block(f_t, 1, t)
    psi = phi.compose([[t * t + 1, t], [t ** 3, t * t + t + 1]])
    outcome = quad_isometry(phi, psi)
    assert outcome.is_yes
    assert outcome.certificate.kind == CertKind.ISOMETRY
    assert phi.compose(outcome.certificate.data["matrix"]) == psi
    assert cert_check(outcome)

    # no witness within budget 0: the local symbols decide
    symbols = quad_isometry(phi, psi, budget=0)
    assert symbols.is_yes
    assert symbols.certificate.kind == CertKind.NORM_SYMBOLS
    assert cert_check(symbols)


def test_quad_isometry_binary_not_represented(f_t: FieldTower, t: FieldElement) -> None:
    # both have Arf invariant t, but [1, t] does not represent t + 1
    phi = quad_block(f_t, 1, t)
    psi = quad_block(f_t, t + 1, t / (t + 1))
    outcome = quad_isometry(phi, psi)
    assert outcome.is_no
    assert outcome.certificate.kind == CertKind.INVARIANT
    assert outcome.certificate.data["invariant"] == "representation"
    assert outcome.certificate.data["place"] == "infinity"
    assert cert_check(outcome)
    assert quad_isometry(psi, phi).is_no


def test_quad_isometry_radical_shift(f_abc: FieldTower) -> None:
    gens: dict[str, FieldElement] = f_abc.gens()
    a, b, c = gens["a"], gens["b"], gens["c"]
    phi = quad_block(f_abc, a, b).perp(quad_diagonal(f_abc, [c]))
    psi = quad_block(f_abc, a, b + c).perp(quad_diagonal(f_abc, [c]))
    outcome = quad_isometry(phi, psi)
    assert outcome.is_yes
    assert phi.compose(outcome.certificate.data["matrix"]) == psi
    assert cert_check(outcome)


def test_quad_isometry_invariants(f_t: FieldTower, t: FieldElement) -> None:
    zero = quad_isometry(quad_blocks(f_t, [(1, t)]).perp(quad_diagonal(f_t, [0])),
                         quad_blocks(f_t, [(1, t)]).perp(quad_diagonal(f_t, [1])))
    assert zero.is_no
    assert cert_check(zero)

    with pytest.raises(DimensionMismatch):
        quad_isometry(quad_block(f_t, 1, t), quad_diagonal(f_t, [1]))


def test_quad_isometry_finite(gf4: FieldTower) -> None:
    z: FieldElement = gf4.gens()["z"]
    # over GF(4), binary forms of equal Arf invariant are isometric
    outcome = quad_isometry(quad_block(gf4, z, z + 1), quad_block(gf4, 1, 1))
    assert outcome.is_yes
    assert cert_check(outcome)
    no = quad_isometry(quad_hyperbolic(gf4), quad_block(gf4, 1, z))
    assert no.is_no
    assert cert_check(no)


def test_quad_isotropic(f_t: FieldTower, t: FieldElement) -> None:
    yes = quad_isotropic(quad_hyperbolic(f_t))
    assert yes.is_yes
    assert cert_check(yes)
    no = quad_isotropic(quad_block(f_t, 1, t))
    assert no.is_no
    assert cert_check(no)
    ts = quad_isotropic(quad_diagonal(f_t, [1, t]))
    assert ts.is_no
    assert cert_check(ts)


def test_form_isometry_and_witt(f_t: FieldTower, t: FieldElement) -> None:
    assert form_isometry(bil_diagonal(f_t, [1, t]), bil_diagonal(f_t, [t, 1])).is_yes
    assert form_isometry(quad_diagonal(f_t, [1]), quad_diagonal(f_t, [t * t])).is_yes
    # <1>_b ⊥ <1>_b is metabolic
    assert witt_equivalent(bil_diagonal(f_t, [1]), bil_diagonal(f_t, [1])).is_yes
    assert witt_equivalent(quad_diagonal(f_t, [1, 1, t]), quad_diagonal(f_t, [t])).is_no

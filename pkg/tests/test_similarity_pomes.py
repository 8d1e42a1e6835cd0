import pytest

from pypomes_qforms import (
    CertKind, Completeness, DimensionMismatch, FieldElement, FieldTower, ZeroScalar,
    bil_diagonal, bil_metabolic, bil_pfister, bil_similarity_factor, bil_similarity_field,
    cert_check, field_closure, pform_diagonal, quad_block, quad_diagonal, round_values_check,
    similar, subspace_equals, tower_base, ts_relative_factors, ts_similarity_field
)


@pytest.fixture(scope="module")
def beta_i(f_ab: FieldTower):
    a: FieldElement = f_ab.gens()["a"]
    b: FieldElement = f_ab.gens()["b"]
    return bil_diagonal(f_ab, [a + 1, a, b, a * b])


def test_ts_similarity_field(f_ab: FieldTower, logger) -> None:
    a: FieldElement = f_ab.gens()["a"]
    b: FieldElement = f_ab.gens()["b"]
    sim, fact = ts_similarity_field(quad_diagonal(f_ab, [1, a, b]), logger=logger)
    assert sim.dim == 1
    assert sim.is_exact
    assert fact.outcome.is_yes

    # the quasi-Pfister form <<a, b>> is similar to itself by every nonzero scalar
    sim, fact = ts_similarity_field(quad_diagonal(f_ab, [1, a, b, a * b]))
    assert sim.dim == 4
    assert fact.pfister.dim == 4
    assert fact.cofactor.dim == 1

    # <1, a, a + 1> has anisotropic part <1, a>
    sim, fact = ts_similarity_field(quad_diagonal(f_ab, [1, a, a + 1]))
    assert subspace_equals(sim.field, field_closure([a], f_ab))
    assert fact.outcome.is_yes
    assert cert_check(fact.outcome)


def test_ts_similarity_field_zero_form(f_t: FieldTower) -> None:
    sim, fact = ts_similarity_field(quad_diagonal(f_t, [0, 0]))
    assert sim.dim == 2
    assert fact is None


def test_ts_similarity_field_pform() -> None:
    f3: FieldTower = tower_base(3, 1, ("t",))
    t: FieldElement = f3.gens()["t"]
    sim, fact = ts_similarity_field(pform_diagonal(f3, [1, t, t * t]))
    # the values span F over F^3
    assert sim.dim == 3
    assert fact.pfister.dim == 3


def test_ts_relative_factors(f_t: FieldTower, t: FieldElement) -> None:
    rf = ts_relative_factors(quad_diagonal(f_t, [t, t * t]), quad_diagonal(f_t, [1, t]))
    assert not rf.is_empty
    assert rf.outcome.is_yes
    assert cert_check(rf.outcome)
    assert rf.to_dict()["coset_dim"] == 2

    with pytest.raises(DimensionMismatch):
        ts_relative_factors(quad_diagonal(f_t, [1]), quad_diagonal(f_t, [1, t]))


def test_bil_similarity_factor(f_ab: FieldTower, beta_i) -> None:
    a: FieldElement = f_ab.gens()["a"]
    b: FieldElement = f_ab.gens()["b"]
    yes = bil_similarity_factor(a, beta_i)
    assert yes.is_yes
    assert yes.certificate.kind == CertKind.SIMILARITY
    assert cert_check(yes)
    no = bil_similarity_factor(b, beta_i)
    assert no.is_no
    assert cert_check(no)
    with pytest.raises(ZeroScalar):
        bil_similarity_factor(f_ab.zero, beta_i)


def test_bil_similarity_field(f_ab: FieldTower, beta_i, logger) -> None:
    a: FieldElement = f_ab.gens()["a"]
    sim = bil_similarity_field(beta_i, logger=logger)
    assert sim.dim == 2
    assert sim.is_exact
    assert subspace_equals(sim.field, field_closure([a], f_ab))
    assert sim.ambient.dim == 4
    assert sim.to_dict()["completeness"] == str(Completeness.EXACT)

    # the diagonal form of beta_i has the whole field as similarity field
    assert ts_similarity_field(quad_diagonal(f_ab, beta_i.diagonal()))[0].dim == 4


def test_bil_similarity_field_with_plane(f_ab: FieldTower) -> None:
    a: FieldElement = f_ab.gens()["a"]
    b: FieldElement = f_ab.gens()["b"]
    beta = bil_pfister(f_ab, [a]).perp(bil_metabolic(f_ab, b))
    sim = bil_similarity_field(beta)
    assert sim.dim == 1
    assert sim.is_exact
    # the hyperbolic plane is similar to itself by every factor
    assert bil_similarity_field(bil_metabolic(f_ab, 0)).dim == 4


def test_similar(f_t: FieldTower, t: FieldElement, logger) -> None:
    f_tu: FieldTower = tower_base(2, 1, ("t", "u"))
    tu: FieldElement = f_tu.gens()["t"]
    u: FieldElement = f_tu.gens()["u"]
    bil = similar(bil_diagonal(f_tu, [1, tu]), bil_diagonal(f_tu, [1, u]), logger=logger)
    assert bil.is_no
    assert cert_check(bil)
    ts = similar(quad_diagonal(f_tu, [1, tu]), quad_diagonal(f_tu, [1, u]))
    assert ts.is_no
    assert cert_check(ts)

    phi = quad_block(f_t, 1, t)
    scaled = similar(phi, phi.scale(t))
    assert scaled.is_yes
    assert cert_check(scaled)

    with pytest.raises(DimensionMismatch):
        similar(quad_diagonal(f_t, [1]), quad_diagonal(f_t, [1, t]))


def test_similar_finite(gf4: FieldTower) -> None:
    z: FieldElement = gf4.gens()["z"]
    outcome = similar(bil_diagonal(gf4, [1]), bil_diagonal(gf4, [z]))
    assert outcome.is_yes
    assert cert_check(outcome)


def test_round_values(f_ab: FieldTower) -> None:
    a: FieldElement = f_ab.gens()["a"]
    pi = bil_pfister(f_ab, [a])
    checks = round_values_check(pi, [[f_ab.one, f_ab.one], [f_ab.zero, f_ab.zero]])
    # the zero vector is skipped
    assert len(checks) == 1
    value, outcome = checks[0]
    assert value == a + 1
    assert outcome.is_yes

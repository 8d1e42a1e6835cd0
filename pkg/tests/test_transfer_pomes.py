import pytest

from pypomes_qforms import (
    FieldElement, FieldTower, InseparableContext, NotSimpleStep, Verdict,
    bil_diagonal, quad_block, quad_hyperbolic, quad_isotropic, transfer_bilinear,
    transfer_context, transfer_quadratic, transfer_witt_checks, frobenius_reciprocity_check
)


def test_transfer_context(cubic: FieldTower, f_t: FieldTower, t: FieldElement, logger) -> None:
    ctx = transfer_context(cubic, logger=logger)
    assert ctx.degree == 3
    assert ctx.base is f_t
    assert ctx.separable
    assert ctx.norm == t
    # s(x^3) = s(x + t) = t, s(x^5) = s(x^3 + t·x^2) = t
    assert [str(x) for x in ctx.powers] == [str(x) for x in (f_t.one, f_t.zero, f_t.zero, t, f_t.zero, t)]
    assert ctx.powers == ctx.recurrence
    assert ctx.designated == t
    assert ctx.to_dict()["degree"] == 3


def test_transfer_context_errors(f_t: FieldTower, root_t: FieldTower) -> None:
    with pytest.raises(NotSimpleStep):
        transfer_context(f_t)
    ctx = transfer_context(root_t)
    assert not ctx.separable
    with pytest.raises(InseparableContext):
        transfer_witt_checks(ctx)


def test_transfer_bilinear(cubic: FieldTower) -> None:
    ctx = transfer_context(cubic)
    one = transfer_bilinear(ctx, bil_diagonal(cubic, [1]))
    assert one.dim == 3
    assert one.tower is ctx.base
    for i in range(3):
        for j in range(3):
            assert one.gram[i][j] == ctx.powers[i + j]


def test_transfer_quadratic_hyperbolic(as_step: FieldTower) -> None:
    ctx = transfer_context(as_step)
    q = transfer_quadratic(ctx, quad_hyperbolic(as_step))
    assert q.dim == 4
    assert q.tower is ctx.base
    assert not any(q.diagonal())
    assert quad_isotropic(q).is_yes


@pytest.mark.parametrize("step", ["cubic", "as_step"])
def test_transfer_witt_checks(step: str, request: pytest.FixtureRequest, logger) -> None:
    k: FieldTower = request.getfixturevalue(step)
    report = transfer_witt_checks(transfer_context(k), logger=logger)
    assert report.passed
    names: list[str] = [e.name for e in report.entries]
    assert "transfer-pfister" in names
    assert report.to_dict()["context"]["degree"] == k.degree


def test_frobenius_reciprocity(cubic: FieldTower, f_t: FieldTower, t: FieldElement) -> None:
    ctx = transfer_context(cubic)
    report = frobenius_reciprocity_check(ctx, bil_diagonal(cubic, [1]), quad_block(f_t, 1, t))
    entries = {e.name: e for e in report.entries}
    assert entries["reciprocity"].verdict == Verdict.YES
    assert not report.failed

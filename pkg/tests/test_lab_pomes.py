import pytest

from pypomes_qforms import (
    InstanceSpec, Status, SuiteName, SUITE_MODES, UnknownSuite, Verdict,
    check_isometry_descent, check_oracles, check_transfer_identities, gen_instance, run_suite, suite_specs
)


def test_suite_specs() -> None:
    specs = suite_specs(SuiteName.TRANSFER_IDENTITIES, seeds=4, seed=10, degrees=[2, 3])
    assert [s.seed for s in specs] == [10, 11, 12, 13]
    assert [s.degree for s in specs] == [2, 3, 2, 3]
    assert all(s.kind == "bilinear" for s in specs)

    # modes cycle when none is given
    modes = [s.mode for s in suite_specs(SuiteName.SIMILARITY_DESCENT, seeds=3)]
    assert modes == list(SUITE_MODES[SuiteName.SIMILARITY_DESCENT])
    # the p-form mode runs in odd characteristic
    pform = suite_specs(SuiteName.SIMILARITY_DESCENT, seeds=1, mode="p-form")[0]
    assert pform.p == 3
    assert pform.kind == "p-form"


def test_instance_spec_shrunk() -> None:
    spec = InstanceSpec(seed=1, dim=3, degree=4, height=2)
    smaller = spec.shrunk()
    assert {(s.dim, s.degree, s.height) for s in smaller} == {(2, 4, 2), (3, 3, 2), (3, 4, 1)}
    assert InstanceSpec(seed=1, dim=1, degree=2, height=1).shrunk() == []
    assert spec.to_dict()["form"] == {"kind": "ts", "dim": 3, "height": 2}


def test_gen_instance_deterministic(logger) -> None:
    spec = InstanceSpec(seed=5, kind="bilinear", degree=3)
    first = gen_instance(spec, logger=logger)
    second = gen_instance(spec)
    assert first.extension.key == second.extension.key
    assert first.extension.degree == 3
    assert first.to_dict() == second.to_dict()

    none = gen_instance(InstanceSpec(seed=0, family="none"))
    assert none.extension is none.field


def test_run_suite_transfer_identities(logger) -> None:
    errors: list[str] = []
    report = run_suite("transfer-identities",
                       seeds=2,
                       degrees=[2, 3],
                       errors=errors,
                       logger=logger)
    assert report.passed
    assert not errors
    assert report.rejected == 0
    assert report.certificates > 0
    data = report.to_dict()
    assert data["suite"] == "transfer-identities"
    assert sum(data["counts"].values()) == 2
    assert len(data["instances"]) == 2


def test_run_suite_errors() -> None:
    with pytest.raises(UnknownSuite):
        run_suite("no-such-suite", seeds=1)
    with pytest.raises(UnknownSuite):
        run_suite("oracles", seeds=1, mode="odd-quadratic")


def test_check_functions() -> None:
    report = check_oracles(InstanceSpec(seed=0, names=(), dim=1, height=3, family="none"), seeds=2)
    assert report.passed
    assert all(r.status in (Status.PASS, Status.UNKNOWN) for r in report.results)

    report = check_transfer_identities(InstanceSpec(seed=3, kind="bilinear", dim=1, degree=3))
    assert report.passed
    assert len(report.results) == 1


def test_check_isometry_descent_odd_quadratic(logger) -> None:
    errors: list[str] = []
    report = check_isometry_descent(InstanceSpec(seed=1, mode="odd-quadratic", kind="quadratic", dim=2,
                                                 height=1, degree=3),
                                    seeds=2,
                                    errors=errors,
                                    logger=logger)
    assert not errors
    assert report.passed
    assert report.rejected == 0
    # pairs apart over the base field stay apart over the cubic extension
    for result in report.results:
        verdicts = dict(result.outcomes)
        assert verdicts["apart-over-base"].verdict == Verdict.NO
        assert verdicts["apart-over-extension"].verdict == Verdict.NO


@pytest.mark.slow
@pytest.mark.parametrize("suite", [str(s) for s in SuiteName])
def test_run_suite_all(suite: str) -> None:
    report = run_suite(suite, seeds=6, seed=0)
    assert report.passed
    assert report.rejected == 0

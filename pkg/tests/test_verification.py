import pytest

from app.config import DEFAULT_SEED
from app.exceptions import InvalidInput
from app.models import VerificationRun
from app.services.series import TruncatedSeries
from app.services.verification import (
    Checklist,
    record_run,
    run_suite,
    suite_names,
    timed_run,
)

SMALL_PARAMETERS = {
    "witt": {"max_rank": 2, "max_degree": 5, "lyndon_degree": 6},
    "color-witt": {"max_degree": 3},
    "pbw": {"max_degree": 4},
    "restricted-pbw": {"max_multiplicity": 2},
    "jacobi": {"trials": 10, "max_degree": 2},
    "schreier-consistency": {"truncation": 10, "max_degree": 4},
    "color-schreier": {"max_rank": 3, "max_degree": 3},
    "growth-rate": {"truncation": 200},
    "euler-roundtrip": {"trials": 20, "truncation": 20},
    "subalgebra-growth": {"truncation": 200, "max_degree": 4},
}


def test_every_suite_is_registered():
    assert suite_names() == sorted(SMALL_PARAMETERS)


@pytest.mark.parametrize("name", sorted(SMALL_PARAMETERS))
def test_suite_passes(name):
    report = run_suite(name, **SMALL_PARAMETERS[name])
    assert report.checks
    assert report.passed, [c for c in report.failed_checks]
    assert report.failed_checks == []


def test_unknown_suite():
    with pytest.raises(InvalidInput):
        run_suite("no-such-suite")


def test_unknown_parameter():
    with pytest.raises(InvalidInput):
        run_suite("witt", trials=3)


def test_non_positive_parameter():
    with pytest.raises(InvalidInput):
        run_suite("pbw", max_degree=0)


def test_none_parameters_fall_back_to_defaults():
    report = run_suite("color-witt", max_degree=None)
    assert report.parameters == {"max_degree": 5}


def test_seeded_suites_default_the_seed():
    assert run_suite("jacobi", trials=2, max_degree=2).seed == DEFAULT_SEED
    assert run_suite("pbw", max_degree=2).seed is None


def test_jacobi_defaults_reach_degree_four():
    report = run_suite("jacobi", trials=2)
    assert report.parameters["max_degree"] == 4
    assert report.passed


def test_reports_are_deterministic():
    first = run_suite("euler-roundtrip", seed=3, trials=10, truncation=12)
    second = run_suite("euler-roundtrip", seed=3, trials=10, truncation=12)
    assert first == second
    assert first.parameters["seed"] == 3


def test_timed_run_reports_duration():
    report, duration_ms = timed_run("pbw", max_degree=2)
    assert report.passed
    assert duration_ms >= 0


def test_checklist_rendering():
    checks = Checklist()
    assert checks.equal(
        "series",
        TruncatedSeries.from_coefficients([1, 2], 2),
        TruncatedSeries.from_coefficients([1, 2, 0], 2),
    )
    assert not checks.equal("ints", 3, 4)
    assert checks.within("rate", 2, 1.99, 0.05)
    assert checks.checks[0].expected == "1,2,0"
    assert checks.checks[2].actual == "1.990000"
    assert checks.checks[2].expected == "2.000000 ± 0.05"
    assert [c.label for c in checks.checks if not c.passed] == ["ints"]


def test_record_run_writes_ledger(db_session):
    report = run_suite("euler-roundtrip", seed=11, trials=3, truncation=8)
    run = record_run(db_session, report, duration_ms=1.5)

    stored = db_session.query(VerificationRun).filter(VerificationRun.id == run.id).one()
    assert stored.suite == "euler-roundtrip"
    assert stored.seed == 11
    assert stored.passed
    assert stored.parameters == report.parameters
    assert stored.check_count == len(report.checks) == len(stored.checks)
    assert stored.failed_count == 0
    assert stored.duration_ms == 1.5

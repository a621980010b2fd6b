"""Named cross-check suites: closed formulas against the brute-force oracle.

Each suite runs a fixed family of checks and returns a ``VerificationReport``.
Reports are deterministic for fixed parameters and seed. ``record_run`` appends
a report to the verification ledger.
"""

import logging
import math
import random
import time
from datetime import datetime
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field
from sqlalchemy.orm import Session

from app.config import DEFAULT_SEED, ENVELOPE_GROWTH_TOLERANCE
from app.exceptions import InvalidCharacteristic, InvalidInput
from app.models import VerificationCheck, VerificationRun
from app.services.envelope import (
    SignedDimensionSequence,
    enveloping_series,
    exterior_part,
    restricted_enveloping_series,
    symmetric_part,
    tensor_series,
)
from app.services.grading import BicharacterTable, GradedAlphabet, Generator
from app.services.growth import (
    enveloping_growth_matches,
    relative_growth_comparison,
    tail_window,
)
from app.services.oracle import (
    FreeAlgebraElement,
    example_subalgebra_generators,
    lazard_generators,
    lie_span_dimension,
    lyndon_count,
    pbw_count,
    subalgebra_span_dimension,
    super_commutator,
    validate_bicharacter,
    verify_jacobi,
)
from app.services.schreier import color_schreier_rank, lie_schreier_series
from app.services.series import (
    TruncatedSeries,
    euler_transform,
    geom_inverse,
    inverse_euler_transform,
)
from app.services.witt import (
    color_witt_dim,
    color_witt_series,
    free_lie_series,
    witt_dim,
    witt_limit_ratio,
    witt_series,
)

logger = logging.getLogger(__name__)

GOLDEN_RATIO = (1 + math.sqrt(5)) / 2
LIMIT_RATIO_TOLERANCE = 0.01
LIMIT_RATIO_START = 40


class CheckResult(BaseModel):
    label: str
    expected: str
    actual: str
    passed: bool


class VerificationReport(BaseModel):
    """Outcome of one suite run."""

    suite: str
    passed: bool
    seed: Optional[int] = None
    parameters: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def failed_checks(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


def _render(value: Any) -> str:
    if isinstance(value, TruncatedSeries):
        value = value.coefficients
    if isinstance(value, (list, tuple)):
        return ",".join(_render(v) for v in value)
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


class Checklist:
    """Accumulates check results for a suite."""

    def __init__(self):
        self.checks: List[CheckResult] = []

    def equal(self, label: str, expected: Any, actual: Any) -> bool:
        passed = expected == actual
        self.checks.append(CheckResult(
            label=label, expected=_render(expected), actual=_render(actual), passed=passed
        ))
        return passed

    def within(self, label: str, target: float, actual: float, tolerance: float) -> bool:
        passed = abs(actual - target) <= tolerance
        self.checks.append(CheckResult(
            label=label,
            expected=f"{_render(float(target))} ± {tolerance}",
            actual=_render(float(actual)),
            passed=passed,
        ))
        return passed

    def holds(self, label: str, condition: bool, expected: str, actual: str) -> bool:
        self.checks.append(CheckResult(label=label, expected=expected, actual=actual, passed=bool(condition)))
        return bool(condition)


# ── Suite registry ───────────────────────────────────────────────

SuiteRunner = Callable[..., None]
SUITES: Dict[str, Tuple[SuiteRunner, Dict[str, Any], bool]] = {}


def suite(name: str, seeded: bool = False, **defaults: Any):
    """Register ``fn(checks, **params)`` under ``name`` with default parameters."""
    def register(fn: SuiteRunner) -> SuiteRunner:
        SUITES[name] = (fn, defaults, seeded)
        return fn
    return register


def suite_names() -> List[str]:
    return sorted(SUITES)


def _require_positive(**params: int) -> None:
    for key, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise InvalidInput(f"{key} must be a positive integer, got {value!r}")


@suite("witt", max_rank=3, max_degree=7, lyndon_degree=10)
def _witt_suite(checks: Checklist, max_rank: int, max_degree: int, lyndon_degree: int) -> None:
    _require_positive(max_rank=max_rank, max_degree=max_degree, lyndon_degree=lyndon_degree)
    for r in range(1, max_rank + 1):
        for n in range(1, lyndon_degree + 1):
            checks.equal(f"witt_dim({r},{n}) = lyndon_count", lyndon_count(r, n), witt_dim(r, n))
    for r in range(1, max_rank + 1):
        alphabet = GradedAlphabet.standard(r, 0)
        for n in range(1, max_degree + 1):
            span = lie_span_dimension(alphabet, None, n)
            checks.equal(f"witt_dim({r},{n}) = oracle span", span.dimension, witt_dim(r, n))


@suite("color-witt", max_degree=5)
def _color_witt_suite(checks: Checklist, max_degree: int) -> None:
    _require_positive(max_degree=max_degree)
    for r, s in ((1, 1), (2, 1), (1, 2)):
        alphabet = GradedAlphabet.standard(r, s)
        first = lie_span_dimension(alphabet, None, 1)
        checks.equal(f"({r},{s}) degree-1 parity split", (r, s), (first.even, first.odd))
        for n in range(1, max_degree + 1):
            span = lie_span_dimension(alphabet, None, n)
            checks.equal(
                f"color_witt_dim({r},{s},{n}) = oracle span", span.dimension, color_witt_dim(r, s, n)
            )


def _oracle_split(r: int, s: int, max_degree: int) -> SignedDimensionSequence:
    alphabet = GradedAlphabet.standard(r, s)
    spans = [lie_span_dimension(alphabet, None, n) for n in range(1, max_degree + 1)]
    return SignedDimensionSequence.from_lists([x.even for x in spans], [x.odd for x in spans])


@suite("pbw", max_degree=5)
def _pbw_suite(checks: Checklist, max_degree: int) -> None:
    _require_positive(max_degree=max_degree)
    sdims = _oracle_split(1, 1, max_degree)
    envelope = enveloping_series(sdims)
    free = geom_inverse(TruncatedSeries.monomial(1, 2, max_degree))
    checks.equal("U(L(x,y)) = 1/(1-2t) over the oracle split", free, envelope)
    checks.equal(
        "U(L) = S(L+) ⊗ Λ(L-)",
        envelope,
        tensor_series(enveloping_series(symmetric_part(sdims)), enveloping_series(exterior_part(sdims))),
    )
    for n in range(max_degree + 1):
        checks.equal(f"pbw_count at degree {n}", envelope[n], pbw_count(sdims, None, n))


@suite("restricted-pbw", max_multiplicity=3)
def _restricted_pbw_suite(checks: Checklist, max_multiplicity: int) -> None:
    _require_positive(max_multiplicity=max_multiplicity)
    one_even = SignedDimensionSequence.from_lists([1], [], truncation_order=4)
    series = restricted_enveloping_series(one_even, 3)
    checks.equal("a1=1, p=3", (1, 1, 1, 0, 0), series.coefficients)
    for n in range(5):
        checks.equal(f"a1=1, p=3 pbw_count at degree {n}", series[n], pbw_count(one_even, 2, n))

    try:
        restricted_enveloping_series(SignedDimensionSequence.from_lists([1], [1]), 3)
        raised = False
    except InvalidCharacteristic:
        raised = True
    checks.holds("p=3 rejected for a super grading", raised, "InvalidCharacteristic", str(raised))

    for p in (3, 5, 7):
        for a in range(max_multiplicity + 1):
            for b in range(max_multiplicity + 1):
                top = a * (p - 1) + b
                sdims = SignedDimensionSequence.from_lists([a], [b], truncation_order=top + 1)
                total = sum(restricted_enveloping_series(
                    sdims, p, allow_small_characteristic=True
                ).coefficients)
                checks.equal(f"dim u(L) for a1={a}, b1={b}, p={p}", p**a * 2**b, total)


def _z2_squared_alphabet() -> GradedAlphabet:
    table = BicharacterTable(group=(2, 2), gamma_on_generators=((-1, -1), (-1, 1)))
    return GradedAlphabet(
        generators=(
            Generator(label="a", degree=(1, 0)),
            Generator(label="b", degree=(0, 1)),
            Generator(label="c", degree=(1, 1)),
        ),
        table=table,
    )


@suite("jacobi", seeded=True, trials=100, max_degree=4)
def _jacobi_suite(checks: Checklist, trials: int, max_degree: int, seed: int) -> None:
    _require_positive(trials=trials, max_degree=max_degree)
    cases = [
        ("(2,0) on the trivial group", GradedAlphabet.standard(2, 0)),
        ("(1,1) on Z2", GradedAlphabet.standard(1, 1)),
        ("Z2xZ2 color grading", _z2_squared_alphabet()),
    ]
    for label, alphabet in cases:
        validate_bicharacter(alphabet.table)
        report = verify_jacobi(alphabet, None, trials, max_degree, seed=seed)
        first = report.failures[0].identity if report.failures else "-"
        checks.holds(
            f"{label}: {trials} trials",
            report.passed,
            "0 failures",
            f"{len(report.failures)} failures (first: {first})",
        )


@suite("schreier-consistency", truncation=15, max_degree=5)
def _schreier_consistency_suite(checks: Checklist, truncation: int, max_degree: int) -> None:
    _require_positive(truncation=truncation, max_degree=max_degree)
    n = truncation
    two_t = TruncatedSeries.monomial(1, 2, n)
    one_t = TruncatedSeries.monomial(1, 1, n)
    witt = witt_series(2, n)

    commutator = lie_schreier_series(two_t, two_t)
    checks.equal("K = [L,L]: n-1 generators in degree n", [0, 0] + list(range(1, n)), list(commutator.coefficients))
    checks.equal("K = [L,L]: free Lie series of H(Z)", witt - two_t, free_lie_series(commutator))

    codim_one = lie_schreier_series(two_t, one_t)
    checks.equal("codimension 1: H(Z) = t/(1-t)", [0] + [1] * n, list(codim_one.coefficients))
    checks.equal("codimension 1: free Lie series of H(Z)", witt - one_t, free_lie_series(codim_one))

    checks.equal("K = L: H(Z) = H(X)", two_t, lie_schreier_series(two_t, TruncatedSeries.zero(n)))

    alphabet, gens = lazard_generators(max_degree)
    for d in range(1, max_degree + 1):
        checks.equal(
            f"Lazard subalgebra degree {d}",
            witt_dim(2, d) - (d == 1),
            subalgebra_span_dimension(gens, alphabet.table, d),
        )


@suite("color-schreier", max_rank=5, max_degree=4)
def _color_schreier_suite(checks: Checklist, max_rank: int, max_degree: int) -> None:
    _require_positive(max_rank=max_rank, max_degree=max_degree)
    for r in range(1, max_rank + 1):
        checks.equal(f"rank K for r={r}", 2 * r + 1, color_schreier_rank(r + 1, 1))

    alphabet, gens = example_subalgebra_generators(1)
    checks.equal("generators of K for r=1", color_schreier_rank(2, 1), len(gens))
    for n in range(1, max_degree + 1):
        checks.equal(
            f"dim K ∩ L_{n} for r=1",
            color_witt_dim(1, 1, n) - (n == 1),
            subalgebra_span_dimension(gens, alphabet.table, n),
        )


@suite("growth-rate", truncation=200)
def _growth_rate_suite(checks: Checklist, truncation: int) -> None:
    _require_positive(truncation=truncation)
    for r, s in ((2, 1), (1, 1)):
        report = enveloping_growth_matches(r, s, truncation)
        checks.within(f"L({r},{s}) growth rate", r + s, report.lie_estimate.rate, report.tolerance)
        checks.within(f"U(L({r},{s})) growth rate", r + s, report.envelope_estimate.rate, report.tolerance)
    for r, s in ((2, 0), (2, 1)):
        deviation = max(
            abs(witt_limit_ratio(r, s, n) - 1) for n in range(LIMIT_RATIO_START, truncation + 1)
        ) if truncation >= LIMIT_RATIO_START else 0.0
        checks.within(
            f"n·dim L_n/{r + s}^n for {LIMIT_RATIO_START} <= n <= {truncation}, (r,s)=({r},{s})",
            0.0, deviation, LIMIT_RATIO_TOLERANCE,
        )


@suite("euler-roundtrip", seeded=True, trials=200, truncation=48)
def _euler_roundtrip_suite(checks: Checklist, trials: int, truncation: int, seed: int) -> None:
    _require_positive(trials=trials, truncation=truncation)
    rng = random.Random(seed)
    mismatches = []
    for trial in range(trials):
        coefficients = [0] + [rng.randint(-4, 4) for _ in range(truncation)]
        f = TruncatedSeries.from_coefficients(coefficients, truncation)
        if inverse_euler_transform(euler_transform(f)) != f:
            mismatches.append(trial)
    checks.holds(
        f"{trials} round trips at N={truncation}",
        not mismatches,
        "0 mismatches",
        f"{len(mismatches)} mismatches" + (f" (first trial {mismatches[0]})" if mismatches else ""),
    )


@suite("subalgebra-growth", truncation=200, max_degree=6)
def _subalgebra_growth_suite(checks: Checklist, truncation: int, max_degree: int) -> None:
    _require_positive(truncation=truncation, max_degree=max_degree)
    if truncation < 4:
        raise InvalidInput(f"truncation must be >= 4, got {truncation}")
    window = tail_window(truncation)

    # K of codimension 1 in L(x1, y): same growth as L.
    ambient = color_witt_series(1, 1, truncation)
    codim_one = ambient - TruncatedSeries.monomial(1, 1, truncation)
    same = relative_growth_comparison(codim_one, ambient, window)
    checks.within("codimension-1 K grows like L(x,y)", 0.0, same.difference, ENVELOPE_GROWTH_TOLERANCE)

    # K = <x, [x,y]> in L(x, y): free on weights 1 and 2.
    size = 2
    x = FreeAlgebraElement.generator(0, size)
    y = FreeAlgebraElement.generator(1, size)
    table = BicharacterTable.trivial()
    gens = [x, super_commutator(x, y, table)]
    predicted = free_lie_series(TruncatedSeries.from_coefficients([0, 1, 1], truncation))
    for n in range(1, max_degree + 1):
        checks.equal(
            f"dim <x,[x,y]> in degree {n}", predicted[n], subalgebra_span_dimension(gens, table, n)
        )

    report = relative_growth_comparison(predicted, witt_series(2, truncation), window)
    checks.within(
        "growth rate of <x,[x,y]>", GOLDEN_RATIO, report.subalgebra_estimate.rate, ENVELOPE_GROWTH_TOLERANCE
    )
    checks.holds(
        "<x,[x,y]> grows strictly slower than L(x,y)",
        report.strictly_less,
        "strictly less",
        f"{report.subalgebra_estimate.rate:.6f} vs {report.ambient_estimate.rate:.6f}",
    )


# ── Entry points ─────────────────────────────────────────────────

def run_suite(name: str, seed: Optional[int] = None, **params: Any) -> VerificationReport:
    """Run a named suite. Unknown suites or parameters raise InvalidInput."""
    if name not in SUITES:
        raise InvalidInput(f"unknown suite '{name}'; choose from {', '.join(suite_names())}")
    runner, defaults, seeded = SUITES[name]
    unknown = sorted(set(params) - set(defaults))
    if unknown:
        raise InvalidInput(f"suite '{name}' does not take {', '.join(unknown)}")
    effective = {**defaults, **{k: v for k, v in params.items() if v is not None}}
    if seeded:
        effective["seed"] = DEFAULT_SEED if seed is None else seed

    logger.info("Running suite '%s' with %s", name, effective)
    checks = Checklist()
    runner(checks, **effective)
    report = VerificationReport(
        suite=name,
        passed=all(c.passed for c in checks.checks),
        seed=effective.get("seed"),
        parameters=effective,
        checks=checks.checks,
    )
    if report.passed:
        logger.info("Suite '%s' passed %d checks", name, len(report.checks))
    else:
        logger.warning(
            "Suite '%s' failed %d of %d checks", name, len(report.failed_checks), len(report.checks)
        )
    return report


def timed_run(name: str, seed: Optional[int] = None, **params: Any) -> Tuple[VerificationReport, float]:
    """run_suite plus its wall-clock duration in milliseconds."""
    start = time.perf_counter()
    report = run_suite(name, seed=seed, **params)
    return report, (time.perf_counter() - start) * 1000


def record_run(db: Session, report: VerificationReport, duration_ms: Optional[float] = None) -> VerificationRun:
    """Append a report and its checks to the verification ledger."""
    run = VerificationRun(
        suite=report.suite,
        seed=report.seed,
        parameters=report.parameters,
        passed=report.passed,
        check_count=len(report.checks),
        failed_count=len(report.failed_checks),
        duration_ms=duration_ms,
        created_at=datetime.utcnow(),
    )
    db.add(run)
    db.flush()
    for c in report.checks:
        db.add(VerificationCheck(
            run_id=run.id, label=c.label, expected=c.expected, actual=c.actual, passed=c.passed
        ))
    db.commit()
    db.refresh(run)
    logger.info(
        "Recorded run %d: suite=%s passed=%s (%d checks)",
        run.id, run.suite, run.passed, run.check_count,
    )
    return run

"""Command-line front end.

    python -m app witt --rank 2 --degree 6
    python -m app euler --coeffs 0,1,1 --max-degree 10 --format json
    echo "1 2 4 8 16" | python -m app inv-euler --max-degree 4
    python -m app envelope --even 1 --odd 1 --prime 5
    python -m app schreier color --rank-l 4 --odd-codim 1
    python -m app growth --coeffs 0,2,1,2,3,6,9 --window 2,6
    python -m app verify witt --max-rank 3 --max-degree 7

Exit codes: 0 success, 2 invalid input, 3 verification mismatch. Results go to
stdout; logs go to stderr.
"""

import argparse
import csv
import io
import json
import logging
import re
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from pydantic import ValidationError

from app.config import DEFAULT_TRUNCATION, GROWTH_TOLERANCE, LOG_DATEFMT, LOG_FORMAT
from app.exceptions import InvalidInput
from app.schemas import AlphabetDocument, result_envelope
from app.services.envelope import envelope_from_split
from app.services.growth import growth_rate_estimate
from app.services.schreier import alphabet_schreier_series, color_schreier_rank, group_schreier_rank
from app.services.series import TruncatedSeries, euler_transform, geom_inverse, inverse_euler_transform
from app.services.verification import VerificationReport, suite_names, timed_run
from app.services.witt import color_witt_dim, color_witt_series, witt_dim, witt_series

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_VERIFICATION_FAILED = 3

_SEPARATORS = re.compile(r"[\s,]+")


class Outcome:
    """What a subcommand produced: the result document and its exit code."""

    def __init__(self, result: Any, meta: Dict[str, Any], exit_code: int = EXIT_OK, kind: str = "value"):
        self.result = result
        self.meta = meta
        self.exit_code = exit_code
        self.kind = kind


# ── Input parsing ────────────────────────────────────────────────

def parse_integers(text: str, what: str = "coefficients") -> List[int]:
    """Whitespace- or comma-separated decimal integers."""
    tokens = [t for t in _SEPARATORS.split(text.strip()) if t]
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InvalidInput(f"{what} must be decimal integers, got {text.strip()!r}")


def parse_window(text: str) -> tuple:
    values = parse_integers(text, "window")
    if len(values) != 2:
        raise InvalidInput(f"window must be two integers a,b, got {text!r}")
    return values[0], values[1]


def _series_input(args: argparse.Namespace) -> List[int]:
    text = args.coeffs if args.coeffs is not None else sys.stdin.read()
    coefficients = parse_integers(text)
    if not coefficients:
        raise InvalidInput("no coefficients given (use --coeffs or stdin)")
    return coefficients


def _truncation(args: argparse.Namespace) -> int:
    n = args.max_degree if args.max_degree is not None else DEFAULT_TRUNCATION
    if n < 0:
        raise InvalidInput(f"--max-degree must be >= 0, got {n}")
    return n


# ── Subcommands ──────────────────────────────────────────────────

def cmd_witt(args: argparse.Namespace) -> Outcome:
    if args.degree is not None:
        if args.odd:
            dim = color_witt_dim(args.rank, args.odd, args.degree)
        else:
            dim = witt_dim(args.rank, args.degree)
        return Outcome(dim, {"truncation": args.degree})
    n = _truncation(args)
    if args.odd:
        series = color_witt_series(args.rank, args.odd, n)
    else:
        series = witt_series(args.rank, n)
    return Outcome(list(series.coefficients), {"truncation": n}, kind="series")


def _transform(operation: Callable[[TruncatedSeries], TruncatedSeries]) -> Callable[[argparse.Namespace], Outcome]:
    def command(args: argparse.Namespace) -> Outcome:
        coeffs = _series_input(args)
        # Without --max-degree, keep every coefficient given.
        n = _truncation(args) if args.max_degree is not None else max(DEFAULT_TRUNCATION, len(coeffs) - 1)
        result = operation(TruncatedSeries.from_coefficients(coeffs, n))
        return Outcome(list(result.coefficients), {"truncation": n}, kind="series")
    return command


cmd_euler = _transform(euler_transform)
cmd_inv_euler = _transform(inverse_euler_transform)
cmd_geom_inverse = _transform(geom_inverse)


def cmd_envelope(args: argparse.Namespace) -> Outcome:
    n = _truncation(args)
    result = envelope_from_split(
        parse_integers(args.even or "", "--even"),
        parse_integers(args.odd or "", "--odd"),
        n,
        prime=args.prime,
        allow_small_characteristic=args.allow_small_characteristic,
    )
    return Outcome(list(result.coefficients), {"truncation": n}, kind="series")


def cmd_schreier_group(args: argparse.Namespace) -> Outcome:
    return Outcome(group_schreier_rank(args.rank, args.index), {"truncation": None})


def cmd_schreier_lie(args: argparse.Namespace) -> Outcome:
    n = _truncation(args)
    try:
        with open(args.alphabet, encoding="utf-8") as fh:
            document = AlphabetDocument.model_validate_json(fh.read())
    except OSError as e:
        raise InvalidInput(f"cannot read alphabet file: {e}")
    h_lk = TruncatedSeries.from_coefficients(parse_integers(args.quotient_coeffs, "--quotient-coeffs"), n)
    result = alphabet_schreier_series(document.to_alphabet(), h_lk)
    return Outcome(list(result.coefficients), {"truncation": n}, kind="series")


def cmd_schreier_color(args: argparse.Namespace) -> Outcome:
    return Outcome(color_schreier_rank(args.rank_l, args.odd_codim), {"truncation": None})


def cmd_growth(args: argparse.Namespace) -> Outcome:
    coefficients = parse_integers(args.coeffs)
    n = args.max_degree if args.max_degree is not None else len(coefficients) - 1
    if n < 1:
        raise InvalidInput("growth needs coefficients up to at least t^1")
    window = parse_window(args.window)
    dims = TruncatedSeries.from_coefficients(coefficients, n)
    tolerance = args.tolerance if args.tolerance is not None else GROWTH_TOLERANCE
    estimate = growth_rate_estimate(dims, window, tolerance)
    return Outcome(estimate.model_dump(mode="json"), {"truncation": n, "window": window}, kind="mapping")


def cmd_verify(args: argparse.Namespace) -> Outcome:
    params = {
        key: getattr(args, key)
        for key in ("max_rank", "max_degree", "trials", "truncation")
        if getattr(args, key) is not None
    }
    report, duration_ms = timed_run(args.suite, seed=args.seed, **params)
    if args.record:
        from app.database import SessionLocal, init_db
        from app.services.verification import record_run

        init_db()
        db = SessionLocal()
        try:
            record_run(db, report, duration_ms)
        finally:
            db.close()
    meta: Dict[str, Any] = {"truncation": report.parameters.get("truncation", report.parameters.get("max_degree"))}
    if report.seed is not None:
        meta["seed"] = report.seed
    exit_code = EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED
    return Outcome(report, meta, exit_code=exit_code, kind="report")


# ── Output ───────────────────────────────────────────────────────

def _json_ready(result: Any) -> Any:
    if isinstance(result, VerificationReport):
        return result.model_dump(mode="json")
    return result


def render(outcome: Outcome, fmt: str) -> str:
    if fmt == "json":
        document = result_envelope(
            _json_ready(outcome.result),
            truncation=outcome.meta.get("truncation"),
            seed=outcome.meta.get("seed"),
            window=outcome.meta.get("window"),
        )
        return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        return _render_csv(outcome)
    return _render_table(outcome)


def _render_csv(outcome: Outcome) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if outcome.kind == "series":
        writer.writerow(["n", "coefficient"])
        writer.writerows(enumerate(outcome.result))
    elif outcome.kind == "mapping":
        writer.writerow(["field", "value"])
        for key, value in outcome.result.items():
            writer.writerow([key, "" if value is None else value])
    elif outcome.kind == "report":
        writer.writerow(["label", "expected", "actual", "passed"])
        for c in outcome.result.checks:
            writer.writerow([c.label, c.expected, c.actual, c.passed])
    else:
        writer.writerow(["result"])
        writer.writerow([outcome.result])
    return buffer.getvalue()


def _render_table(outcome: Outcome) -> str:
    if outcome.kind == "series":
        width = len(str(len(outcome.result) - 1))
        return "".join(f"{n:>{width}}  {c}\n" for n, c in enumerate(outcome.result))
    if outcome.kind == "mapping":
        width = max(len(k) for k in outcome.result)
        return "".join(f"{k:<{width}}  {v}\n" for k, v in outcome.result.items())
    if outcome.kind == "report":
        report = outcome.result
        lines = [
            f"{'PASS' if c.passed else 'FAIL'}  {c.label}: expected {c.expected}, got {c.actual}"
            for c in report.checks
        ]
        failed = len(report.failed_checks)
        lines.append(
            f"suite {report.suite}: {len(report.checks) - failed}/{len(report.checks)} checks passed"
            + (f" (seed {report.seed})" if report.seed is not None else "")
        )
        return "\n".join(lines) + "\n"
    return f"{outcome.result}\n"


# ── Parser ───────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="table")
    common.add_argument("--verbose", action="store_true", help="Log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="python -m app",
        description="Hilbert series, Witt dimensions, Schreier formulas and growth rates "
                    "for free color Lie superalgebras",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # witt
    witt_p = subparsers.add_parser("witt", parents=[common], help="Dimensions of free (color) Lie superalgebras")
    witt_p.add_argument("--rank", type=int, required=True, help="Even generators r")
    witt_p.add_argument("--odd", type=int, default=0, help="Odd generators s")
    witt_range = witt_p.add_mutually_exclusive_group(required=True)
    witt_range.add_argument("--degree", type=int, help="Single degree n")
    witt_range.add_argument("--max-degree", type=int, help="Whole series up to t^N")
    witt_p.set_defaults(handler=cmd_witt)

    # series transforms
    for name, handler, help_text in (
        ("euler", cmd_euler, "Euler transform Σ aᵢtⁱ ↦ ∏ (1 - tⁱ)^(-aᵢ)"),
        ("inv-euler", cmd_inv_euler, "Inverse Euler transform (series with f(0) = 1)"),
        ("geom-inverse", cmd_geom_inverse, "1/(1 - f) (series with f(0) = 0)"),
    ):
        p = subparsers.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--coeffs", help="Coefficients from t^0; read from stdin when omitted")
        p.add_argument("--max-degree", type=int, help=f"Truncation order N (default: the larger of {DEFAULT_TRUNCATION} and the input length - 1)")
        p.set_defaults(handler=handler)

    # envelope
    env_p = subparsers.add_parser("envelope", parents=[common], help="Hilbert series of U(L) or u(L)")
    env_p.add_argument("--even", default="", help="a_1,a_2,... even dimensions from degree 1")
    env_p.add_argument("--odd", default="", help="b_1,b_2,... odd dimensions from degree 1")
    env_p.add_argument("--prime", type=int, help="Characteristic p for the restricted envelope")
    env_p.add_argument("--allow-small-characteristic", action="store_true",
                       help="Accept p < 5 for a nontrivially graded algebra")
    env_p.add_argument("--max-degree", type=int)
    env_p.set_defaults(handler=cmd_envelope)

    # schreier
    schreier_p = subparsers.add_parser("schreier", help="Schreier-type formulas")
    schreier_sub = schreier_p.add_subparsers(dest="variant", required=True)

    group_p = schreier_sub.add_parser("group", parents=[common], help="Subgroup rank in a free group")
    group_p.add_argument("--rank", type=int, required=True)
    group_p.add_argument("--index", type=int, required=True)
    group_p.set_defaults(handler=cmd_schreier_group)

    lie_p = schreier_sub.add_parser("lie", parents=[common], help="H(Z) for a subalgebra of a free Lie algebra")
    lie_p.add_argument("--alphabet", required=True, help="JSON alphabet document")
    lie_p.add_argument("--quotient-coeffs", required=True, help="H(L/K) from t^0")
    lie_p.add_argument("--max-degree", type=int)
    lie_p.set_defaults(handler=cmd_schreier_lie)

    color_p = schreier_sub.add_parser("color", parents=[common], help="Rank of K in a free color Lie superalgebra")
    color_p.add_argument("--rank-l", type=int, required=True)
    color_p.add_argument("--odd-codim", type=int, required=True)
    color_p.set_defaults(handler=cmd_schreier_color)

    # growth
    growth_p = subparsers.add_parser("growth", parents=[common], help="Growth-rate estimate of a dimension series")
    growth_p.add_argument("--coeffs", required=True, help="dim_0, dim_1, ... from t^0")
    growth_p.add_argument("--window", required=True, help="a,b")
    growth_p.add_argument("--tolerance", type=float)
    growth_p.add_argument("--max-degree", type=int)
    growth_p.set_defaults(handler=cmd_growth)

    # verify
    verify_p = subparsers.add_parser("verify", parents=[common], help="Oracle cross-check suites")
    verify_p.add_argument("suite", choices=suite_names())
    verify_p.add_argument("--seed", type=int)
    verify_p.add_argument("--max-rank", type=int)
    verify_p.add_argument("--max-degree", type=int)
    verify_p.add_argument("--trials", type=int)
    verify_p.add_argument("--truncation", type=int)
    verify_p.add_argument("--record", action="store_true", help="Append the run to the ledger database")
    verify_p.set_defaults(handler=cmd_verify)

    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format=LOG_FORMAT,
        datefmt=LOG_DATEFMT,
        stream=sys.stderr,
        force=True,
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run the subcommand, print its document; return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID_INPUT

    _configure_logging(args.verbose)
    try:
        outcome = args.handler(args)
    except (ValueError, ValidationError) as e:
        logger.debug("Invalid input", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    sys.stdout.write(render(outcome, args.format))
    if outcome.exit_code == EXIT_VERIFICATION_FAILED:
        logger.warning("Verification suite reported mismatches")
    return outcome.exit_code


def main() -> None:
    sys.exit(run())

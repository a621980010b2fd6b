"""Growth functions and growth-rate estimates from dimension series.

γ(n) = Σ_{1≤k≤n} dim_k is the growth function, λ(n) = γ(n) - γ(n-1) its
differences, and the (relative) growth rate is limsup λ(n)^(1/n). Finite data
can only estimate the limsup; every estimate records the window it used.

Floating point is confined to this module.
"""

import logging
import math
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from app.config import (
    ENVELOPE_GROWTH_TOLERANCE,
    GROWTH_TOLERANCE,
    POLYNOMIAL_MAX_DEGREE,
    POLYNOMIAL_RESIDUAL_THRESHOLD,
)
from app.exceptions import InvalidInput
from app.services.series import TruncatedSeries, geom_inverse
from app.services.witt import color_witt_series

logger = logging.getLogger(__name__)

MIN_ENVELOPE_TRUNCATION = 50


class GrowthMethod(str, Enum):
    ROOT_TEST = "root_test"
    RATIO_TEST = "ratio_test"


class GrowthClass(str, Enum):
    EXPONENTIAL = "exponential"
    POLYNOMIALLY_BOUNDED = "polynomially_bounded"
    INTERMEDIATE = "intermediate"
    INCONCLUSIVE = "inconclusive"


class GrowthEstimate(BaseModel):
    """Estimated growth rate over a finite window."""

    rate: float = Field(..., ge=0)
    method: GrowthMethod
    window: Tuple[int, int]
    classification: GrowthClass
    root_estimate: Optional[float] = None
    ratio_estimate: Optional[float] = None
    polynomial_degree: Optional[float] = Field(default=None, description="Fitted exponent of λ(n) ~ n^k")


class GrowthComparison(BaseModel):
    """Growth of a free color Lie superalgebra against its enveloping algebra."""

    r: int
    s: int
    truncation_order: int
    expected_rate: int
    lie_estimate: GrowthEstimate
    envelope_estimate: GrowthEstimate
    difference: float
    tolerance: float
    passed: bool


class SubalgebraGrowthReport(BaseModel):
    """Relative growth of a subalgebra against its ambient algebra."""

    window: Tuple[int, int]
    subalgebra_estimate: GrowthEstimate
    ambient_estimate: GrowthEstimate
    difference: float
    strictly_less: bool


def growth_function(dims: TruncatedSeries) -> List[int]:
    """γ(1..N): partial sums of the positive-degree dimensions."""
    if any(c < 0 for c in dims.coefficients):
        raise InvalidInput("dimension series must have nonnegative coefficients")
    gamma, running = [], 0
    for d in dims.coefficients[1:]:
        running += d
        gamma.append(running)
    return gamma


def lambda_differences(gamma: Sequence[int]) -> List[int]:
    """λ(1) = γ(1), λ(n) = γ(n) - γ(n-1)."""
    out, previous = [], 0
    for n, value in enumerate(gamma, start=1):
        if value < previous:
            raise InvalidInput(f"growth function decreases at n={n}: {previous} -> {value}")
        out.append(value - previous)
        previous = value
    return out


def _root_test(lam: Sequence[int], n_start: int, n_end: int) -> Optional[float]:
    """max over the upper half of the window of (λ(n)/λ(a'))^(1/(n - a')).

    a' is the first degree in the window with λ > 0; dividing by λ(a') removes
    constant and slowly varying prefactors from the n-th root.
    """
    base = next((n for n in range(n_start, n_end + 1) if lam[n] > 0), None)
    if base is None or base == n_end:
        return None
    log_base = math.log(lam[base])
    midpoint = base + max(1, (n_end - base) // 2)
    roots = [
        math.exp((math.log(lam[n]) - log_base) / (n - base))
        for n in range(midpoint, n_end + 1)
        if lam[n] > 0
    ]
    return max(roots) if roots else None


def _ratio_test(lam: Sequence[int], n_start: int, n_end: int) -> Optional[float]:
    """λ(n+1)/λ(n) at the last consecutive positive pair in the window."""
    for n in range(n_end - 1, n_start - 1, -1):
        if lam[n] > 0 and lam[n + 1] > 0:
            return math.exp(math.log(lam[n + 1]) - math.log(lam[n]))
    return None


def _polynomial_envelope(lam: Sequence[int], n_start: int, n_end: int) -> Optional[Tuple[float, float]]:
    """Least-squares fit log λ = k·log n + c; returns (k, rms residual)."""
    points = [(n, lam[n]) for n in range(n_start, n_end + 1) if lam[n] > 0]
    if len(points) < 3:
        return None
    log_n = np.log(np.array([n for n, _ in points], dtype=float))
    log_lam = np.array([math.log(v) for _, v in points], dtype=float)
    slope, intercept = np.polyfit(log_n, log_lam, 1)
    residual = float(np.sqrt(np.mean((slope * log_n + intercept - log_lam) ** 2)))
    return float(slope), residual


def growth_rate_estimate(
    dims: TruncatedSeries,
    window: Tuple[int, int],
    tolerance: float = GROWTH_TOLERANCE,
) -> GrowthEstimate:
    """Estimate limsup λ(n)^(1/n) over ``window`` and classify the growth."""
    n_start, n_end = window
    if not 1 <= n_start < n_end <= dims.truncation_order:
        raise InvalidInput(
            f"window {window} must satisfy 1 <= start < end <= {dims.truncation_order}"
        )
    gamma = growth_function(dims)
    lam = [0] + lambda_differences(gamma)

    root = _root_test(lam, n_start, n_end)
    ratio = _ratio_test(lam, n_start, n_end)
    fit = _polynomial_envelope(lam, n_start, n_end)

    if root is not None:
        rate, method = root, GrowthMethod.ROOT_TEST
    elif ratio is not None:
        rate, method = ratio, GrowthMethod.RATIO_TEST
    else:
        rate, method = 0.0, GrowthMethod.ROOT_TEST

    polynomial = fit is not None and fit[0] <= POLYNOMIAL_MAX_DEGREE and fit[1] <= POLYNOMIAL_RESIDUAL_THRESHOLD
    if root is None and ratio is None:
        classification = GrowthClass.POLYNOMIALLY_BOUNDED
    elif polynomial:
        classification = GrowthClass.POLYNOMIALLY_BOUNDED
    elif root is not None and ratio is not None and abs(root - ratio) > tolerance:
        classification = GrowthClass.INCONCLUSIVE
    elif rate > 1 + tolerance:
        classification = GrowthClass.EXPONENTIAL
    else:
        classification = GrowthClass.INTERMEDIATE

    logger.debug(
        "Growth estimate window=%s: root=%s ratio=%s fit=%s -> %s",
        window, root, ratio, fit, classification.value,
    )
    return GrowthEstimate(
        rate=max(rate, 0.0),
        method=method,
        window=(n_start, n_end),
        classification=classification,
        root_estimate=root,
        ratio_estimate=ratio,
        polynomial_degree=fit[0] if fit is not None else None,
    )


def tail_window(truncation_order: int) -> Tuple[int, int]:
    return (truncation_order // 2, truncation_order)


def enveloping_growth_matches(
    r: int, s: int, truncation_order: int, tolerance: float = ENVELOPE_GROWTH_TOLERANCE
) -> GrowthComparison:
    """Compare the growth of L(X) and of U(L(X)) = A⟨X⟩ against r + s."""
    if r < 0 or s < 0 or r + s < 2:
        raise InvalidInput(f"need r + s >= 2 for exponential growth, got r={r}, s={s}")
    if truncation_order < MIN_ENVELOPE_TRUNCATION:
        raise InvalidInput(
            f"truncation order must be >= {MIN_ENVELOPE_TRUNCATION}, got {truncation_order}"
        )
    window = tail_window(truncation_order)
    lie_dims = color_witt_series(r, s, truncation_order)
    envelope_dims = geom_inverse(TruncatedSeries.monomial(1, r + s, truncation_order))

    lie = growth_rate_estimate(lie_dims, window)
    envelope = growth_rate_estimate(envelope_dims, window)
    expected = r + s
    passed = abs(lie.rate - expected) <= tolerance and abs(envelope.rate - expected) <= tolerance

    logger.info(
        "Growth comparison r=%d s=%d N=%d: lie=%.4f envelope=%.4f expected=%d passed=%s",
        r, s, truncation_order, lie.rate, envelope.rate, expected, passed,
    )
    return GrowthComparison(
        r=r,
        s=s,
        truncation_order=truncation_order,
        expected_rate=expected,
        lie_estimate=lie,
        envelope_estimate=envelope,
        difference=abs(lie.rate - envelope.rate),
        tolerance=tolerance,
        passed=passed,
    )


def relative_growth_comparison(
    sub_dims: TruncatedSeries,
    ambient_dims: TruncatedSeries,
    window: Tuple[int, int],
    tolerance: float = ENVELOPE_GROWTH_TOLERANCE,
) -> SubalgebraGrowthReport:
    """Relative growth rate of K ⊆ S against the growth rate of S."""
    sub = growth_rate_estimate(sub_dims, window)
    ambient = growth_rate_estimate(ambient_dims, window)
    return SubalgebraGrowthReport(
        window=window,
        subalgebra_estimate=sub,
        ambient_estimate=ambient,
        difference=ambient.rate - sub.rate,
        strictly_less=ambient.rate - sub.rate > tolerance,
    )

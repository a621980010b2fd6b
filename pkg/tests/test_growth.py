import math

import pytest

from app.exceptions import InvalidInput
from app.services.growth import (
    GrowthClass,
    GrowthMethod,
    enveloping_growth_matches,
    growth_function,
    growth_rate_estimate,
    lambda_differences,
    relative_growth_comparison,
    tail_window,
)
from app.services.series import TruncatedSeries
from app.services.witt import free_lie_series, witt_series


def _dims(values, n=None):
    """Series with λ(k) = values[k-1]."""
    values = list(values)
    return TruncatedSeries.from_coefficients([0] + values, n if n is not None else len(values))


def test_growth_function_examples():
    assert growth_function(witt_series(2, 5)) == [2, 3, 5, 8, 14]
    assert growth_function(TruncatedSeries.zero(4)) == [0, 0, 0, 0]
    assert growth_function(TruncatedSeries.monomial(1, 1, 4)) == [1, 1, 1, 1]


def test_growth_function_rejects_negative_dimensions():
    with pytest.raises(InvalidInput):
        growth_function(TruncatedSeries.from_coefficients([0, 1, -1], 2))


def test_lambda_differences():
    assert lambda_differences([2, 3, 5, 8]) == [2, 1, 2, 3]
    assert lambda_differences([4, 4, 4]) == [4, 0, 0]
    with pytest.raises(InvalidInput):
        lambda_differences([3, 2])


def test_lambda_differences_inverts_growth_function():
    dims = witt_series(3, 20)
    assert lambda_differences(growth_function(dims)) == list(dims.coefficients[1:])


def test_free_lie_algebra_of_rank_two():
    estimate = growth_rate_estimate(witt_series(2, 200), (100, 200))
    assert 1.95 <= estimate.rate <= 2.0
    assert estimate.classification == GrowthClass.EXPONENTIAL
    assert estimate.method == GrowthMethod.ROOT_TEST
    assert estimate.window == (100, 200)


def test_exact_geometric_growth():
    estimate = growth_rate_estimate(_dims(3**n for n in range(1, 101)), (50, 100))
    assert estimate.rate == pytest.approx(3, rel=1e-9)
    assert estimate.classification == GrowthClass.EXPONENTIAL


def test_quadratic_growth_is_polynomially_bounded():
    estimate = growth_rate_estimate(_dims(n * n for n in range(1, 201)), (100, 200))
    assert estimate.rate < 1.05
    assert estimate.classification == GrowthClass.POLYNOMIALLY_BOUNDED
    assert estimate.polynomial_degree == pytest.approx(2, abs=0.01)


@pytest.mark.parametrize("c, rho", [(1, 2.5), (7, 1.5), (3, 4.0)])
def test_scaled_geometric_growth_within_two_percent(c, rho):
    dims = _dims(round(c * rho**n) for n in range(1, 121))
    estimate = growth_rate_estimate(dims, (60, 120))
    assert abs(estimate.rate - rho) <= 0.02 * rho


@pytest.mark.parametrize("c", [2, 10])
def test_root_test_is_scale_invariant(c):
    base = witt_series(2, 200)
    scaled = TruncatedSeries.from_coefficients([c * d for d in base.coefficients], 200)
    window = (100, 200)
    assert abs(growth_rate_estimate(scaled, window).rate - growth_rate_estimate(base, window).rate) <= 0.02


def test_all_zero_window_is_polynomially_bounded():
    estimate = growth_rate_estimate(TruncatedSeries.monomial(1, 3, 20), (5, 20))
    assert estimate.rate == 0
    assert estimate.classification == GrowthClass.POLYNOMIALLY_BOUNDED


@pytest.mark.parametrize("window", [(5, 5), (0, 10), (10, 5), (10, 21)])
def test_invalid_windows(window):
    with pytest.raises(InvalidInput):
        growth_rate_estimate(witt_series(2, 20), window)


def test_tail_window():
    assert tail_window(200) == (100, 200)


@pytest.mark.parametrize("r, s", [(2, 1), (1, 1)])
def test_enveloping_growth_matches(r, s):
    report = enveloping_growth_matches(r, s, 200)
    assert report.passed
    assert abs(report.lie_estimate.rate - (r + s)) <= 0.05
    assert abs(report.envelope_estimate.rate - (r + s)) <= 0.05
    assert report.difference <= 0.05


def test_enveloping_growth_matches_preconditions():
    with pytest.raises(InvalidInput):
        enveloping_growth_matches(1, 0, 200)
    with pytest.raises(InvalidInput):
        enveloping_growth_matches(2, 1, 40)


def test_proper_subalgebra_grows_strictly_slower():
    n = 200
    sub = free_lie_series(TruncatedSeries.from_coefficients([0, 1, 1], n))
    report = relative_growth_comparison(sub, witt_series(2, n), tail_window(n))
    golden = (1 + math.sqrt(5)) / 2
    assert abs(report.subalgebra_estimate.rate - golden) <= 0.05
    assert report.strictly_less


def test_codimension_one_subalgebra_grows_at_the_same_rate():
    n = 200
    ambient = witt_series(3, n)
    sub = ambient - TruncatedSeries.monomial(1, 1, n)
    report = relative_growth_comparison(sub, ambient, tail_window(n))
    assert not report.strictly_less
    assert abs(report.difference) <= 0.05

import pytest
from sympy import divisors

from app.exceptions import InvalidInput, UnsupportedParity
from app.services.grading import GradedAlphabet, Generator
from app.services.series import TruncatedSeries, euler_transform, geom_inverse
from app.services.witt import (
    alphabet_series,
    color_witt_dim,
    color_witt_series,
    free_associative_series,
    free_lie_series,
    free_lie_series_from_alphabet,
    moebius,
    witt_dim,
    witt_limit_ratio,
    witt_series,
)


def _alphabet(*weights: int) -> GradedAlphabet:
    return GradedAlphabet(
        generators=tuple(Generator(label=f"z{i}", weight=w) for i, w in enumerate(weights))
    )


@pytest.mark.parametrize("n, expected", [(1, 1), (2, -1), (6, 1), (12, 0), (30, -1)])
def test_moebius(n, expected):
    assert moebius(n) == expected


def test_moebius_rejects_zero():
    with pytest.raises(InvalidInput):
        moebius(0)


@pytest.mark.parametrize("r, n, expected", [(2, 1, 2), (2, 3, 2), (2, 6, 9), (3, 3, 8), (0, 4, 0)])
def test_witt_dim(r, n, expected):
    assert witt_dim(r, n) == expected


def test_witt_divisor_sums_are_divisible():
    for r in range(7):
        for n in range(1, 41):
            assert sum(moebius(d) * r ** (n // d) for d in divisors(n)) % n == 0
            for s in range(7):
                total = sum(moebius(m) * (r - (-1) ** m * s) ** (n // m) for m in divisors(n))
                assert total % n == 0, (r, s, n)


@pytest.mark.parametrize("r, s, n, expected", [(1, 1, 2, 2), (2, 1, 2, 4), (1, 1, 3, 2), (0, 1, 2, 1)])
def test_color_witt_dim(r, s, n, expected):
    assert color_witt_dim(r, s, n) == expected


def test_color_witt_dim_without_odd_generators_is_witt_dim():
    for r in range(1, 5):
        for n in range(1, 9):
            assert color_witt_dim(r, 0, n) == witt_dim(r, n)


def test_color_witt_degree_one_counts_generators():
    for r in range(4):
        for s in range(4):
            if r + s:
                assert color_witt_dim(r, s, 1) == r + s


def test_color_witt_dim_needs_a_generator():
    with pytest.raises(InvalidInput):
        color_witt_dim(0, 0, 3)


def test_witt_series_examples():
    assert witt_series(2, 8).coefficients == (0, 2, 1, 2, 3, 6, 9, 18, 30)
    assert witt_series(1, 6).coefficients == (0, 1, 0, 0, 0, 0, 0)
    assert witt_series(0, 4) == TruncatedSeries.zero(4)
    assert color_witt_series(2, 0, 8) == witt_series(2, 8)


@pytest.mark.parametrize("r", range(1, 6))
def test_pbw_witt_identity(r):
    n = 30
    assert euler_transform(witt_series(r, n)) == geom_inverse(TruncatedSeries.monomial(1, r, n))


def test_alphabet_series():
    assert alphabet_series(_alphabet(1, 1, 1), 3).coefficients == (0, 3, 0, 0)
    assert alphabet_series(_alphabet(1, 3, 3), 4).coefficients == (0, 1, 0, 2, 0)
    assert alphabet_series(GradedAlphabet(), 2) == TruncatedSeries.zero(2)


def test_free_associative_series():
    assert free_associative_series(_alphabet(1, 1), 5).coefficients == (1, 2, 4, 8, 16, 32)


def test_free_lie_series_from_alphabet():
    assert free_lie_series_from_alphabet(GradedAlphabet.standard(2), 10) == witt_series(2, 10)
    weighted = free_lie_series_from_alphabet(_alphabet(1, 2), 6)
    assert weighted[1] == 1
    assert weighted[2] == 1
    assert weighted[3] == 1
    assert free_lie_series_from_alphabet(_alphabet(1), 5).coefficients == (0, 1, 0, 0, 0, 0)


def test_free_lie_series_from_alphabet_rejects_odd_generators():
    with pytest.raises(UnsupportedParity):
        free_lie_series_from_alphabet(GradedAlphabet.standard(1, 1), 5)


def test_free_lie_series_rejects_negative_alphabet():
    with pytest.raises(InvalidInput):
        free_lie_series(TruncatedSeries.from_coefficients([0, 1, -1], 4))


def test_witt_limit_ratio_tends_to_one():
    for r, s in ((2, 0), (2, 1)):
        for n in range(40, 201, 20):
            assert abs(witt_limit_ratio(r, s, n) - 1) < 0.01

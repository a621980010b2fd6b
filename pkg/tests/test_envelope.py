import random

import pytest

from app.exceptions import InvalidCharacteristic
from app.services.envelope import (
    SignedDimensionSequence,
    direct_sum_series,
    envelope_from_split,
    enveloping_series,
    exterior_part,
    restricted_enveloping_series,
    symmetric_part,
    tensor_series,
)
from app.services.grading import BicharacterTable
from app.services.series import TruncatedSeries


def _sdims(even, odd, n):
    return SignedDimensionSequence.from_lists(even, odd, truncation_order=n)


def test_signed_dimension_sequence_validation():
    with pytest.raises(ValueError):
        SignedDimensionSequence(even_dims=(1, -1), odd_dims=(0, 0))
    with pytest.raises(ValueError):
        SignedDimensionSequence(even_dims=(1, 2), odd_dims=(0,))
    sdims = _sdims([1, 2], [3], 4)
    assert sdims.even_dims == (1, 2, 0, 0)
    assert sdims.odd_dims == (3, 0, 0, 0)
    assert sdims.total_dims == (4, 2, 0, 0)
    assert sdims.has_odd_part


def test_enveloping_series_examples():
    assert enveloping_series(_sdims([2], [], 5)).coefficients == (1, 2, 3, 4, 5, 6)
    assert enveloping_series(_sdims([], [2], 4)).coefficients == (1, 2, 1, 0, 0)


def test_enveloping_series_factorizes():
    rng = random.Random(5)
    for _ in range(10):
        even = [rng.randint(0, 3) for _ in range(8)]
        odd = [rng.randint(0, 3) for _ in range(8)]
        sdims = _sdims(even, odd, 8)
        split = tensor_series(
            enveloping_series(symmetric_part(sdims)), enveloping_series(exterior_part(sdims))
        )
        assert enveloping_series(sdims) == split


def test_restricted_enveloping_series_examples():
    assert restricted_enveloping_series(_sdims([1], [], 4), 3).coefficients == (1, 1, 1, 0, 0)
    assert restricted_enveloping_series(_sdims([2], [], 3), 2).coefficients == (1, 2, 1, 0)
    assert restricted_enveloping_series(_sdims([], [1], 3), 5).coefficients == (1, 1, 0, 0)


def test_small_characteristic_needs_override_for_graded_algebras():
    with pytest.raises(InvalidCharacteristic):
        restricted_enveloping_series(_sdims([1], [1], 3), 3)
    with pytest.raises(InvalidCharacteristic):
        restricted_enveloping_series(_sdims([1], [], 3), 2, grading=BicharacterTable.super_z2())
    series = restricted_enveloping_series(_sdims([1], [1], 3), 3, allow_small_characteristic=True)
    assert series.coefficients == (1, 2, 2, 1)


def test_trivial_grading_accepts_every_prime():
    for p in (2, 3, 5):
        restricted_enveloping_series(_sdims([1, 1], [], 5), p, grading=BicharacterTable.trivial())


@pytest.mark.parametrize("p", [3, 5, 7])
def test_finite_dimensional_restricted_envelope(p):
    for a in range(4):
        for b in range(4):
            top = a * (p - 1) + b
            sdims = _sdims([a], [b], top + 1)
            series = restricted_enveloping_series(sdims, p, allow_small_characteristic=True)
            assert sum(series.coefficients) == p**a * 2**b
            assert series[top + 1] == 0


def test_restricted_is_bounded_by_unrestricted():
    sdims = _sdims([2, 1, 1, 3], [1, 0, 2], 12)
    restricted = restricted_enveloping_series(sdims, 5)
    full = enveloping_series(sdims)
    assert all(r <= f for r, f in zip(restricted.coefficients, full.coefficients))


def test_direct_sum_and_tensor_series():
    one_plus_t = TruncatedSeries.from_coefficients([1, 1], 2)
    assert direct_sum_series(one_plus_t, one_plus_t).coefficients == (2, 2, 0)
    assert direct_sum_series(one_plus_t, TruncatedSeries.zero(2)) == one_plus_t
    assert tensor_series(one_plus_t, one_plus_t).coefficients == (1, 2, 1)
    assert tensor_series(one_plus_t, TruncatedSeries.one(2)) == one_plus_t


def test_direct_sum_matches_filtered_dimension_count():
    rng = random.Random(17)
    u = [rng.randint(0, 9) for _ in range(11)]
    v = [rng.randint(0, 9) for _ in range(11)]
    summed = direct_sum_series(
        TruncatedSeries.from_coefficients(u, 10), TruncatedSeries.from_coefficients(v, 10)
    )
    assert list(summed.coefficients) == [a + b for a, b in zip(u, v)]


def test_envelope_from_split():
    assert envelope_from_split([1], [1], 5).coefficients == (1, 2, 2, 2, 2, 2)
    assert envelope_from_split([1], [], 4, prime=3).coefficients == (1, 1, 1, 0, 0)
    with pytest.raises(InvalidCharacteristic):
        envelope_from_split([], [1], 4, prime=2)

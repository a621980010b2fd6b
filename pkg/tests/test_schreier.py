import pytest

from app.exceptions import InvalidInput, UnsupportedParity
from app.services.grading import GradedAlphabet
from app.services.schreier import (
    alphabet_schreier_series,
    color_schreier_rank,
    group_schreier_rank,
    lie_schreier_series,
)
from app.services.series import TruncatedSeries
from app.services.witt import free_lie_series, witt_series

N = 15


def _t(c: int, n: int = N) -> TruncatedSeries:
    return TruncatedSeries.monomial(1, c, n)


@pytest.mark.parametrize("n, index, expected", [(2, 3, 4), (5, 1, 5), (1, 7, 1)])
def test_group_schreier_rank(n, index, expected):
    assert group_schreier_rank(n, index) == expected


def test_group_schreier_rank_rejects_zero_index():
    with pytest.raises(InvalidInput):
        group_schreier_rank(2, 0)


def test_commutator_subalgebra():
    h_z = lie_schreier_series(_t(2), _t(2))
    assert h_z.coefficients == (0, 0) + tuple(range(1, N))
    assert free_lie_series(h_z) == witt_series(2, N) - _t(2)


def test_codimension_one_subalgebra():
    h_z = lie_schreier_series(_t(2), _t(1))
    assert h_z.coefficients == (0,) + (1,) * N
    assert free_lie_series(h_z) == witt_series(2, N) - _t(1)


def test_whole_algebra_is_its_own_generating_set():
    for h_x in (_t(2), TruncatedSeries.from_coefficients([0, 1, 3, 0, 2], N)):
        assert lie_schreier_series(h_x, TruncatedSeries.zero(N)) == h_x


def test_lie_schreier_series_preconditions():
    with pytest.raises(InvalidInput):
        lie_schreier_series(TruncatedSeries.one(N), _t(1))
    with pytest.raises(InvalidInput):
        lie_schreier_series(_t(2), TruncatedSeries.from_coefficients([1, 1], N))
    with pytest.raises(InvalidInput):
        lie_schreier_series(_t(2), TruncatedSeries.from_coefficients([0, -1], N))


def test_alphabet_schreier_series():
    h_z = alphabet_schreier_series(GradedAlphabet.standard(2), _t(2, 6))
    assert h_z.coefficients == (0, 0, 1, 2, 3, 4, 5)
    with pytest.raises(UnsupportedParity):
        alphabet_schreier_series(GradedAlphabet.standard(1, 1), _t(1, 6))


@pytest.mark.parametrize("r", range(1, 6))
def test_color_schreier_rank_reproduces_2r_plus_1(r):
    assert color_schreier_rank(r + 1, 1) == 2 * r + 1


def test_color_schreier_rank_edge_cases():
    assert color_schreier_rank(4, 0) == 4
    assert color_schreier_rank(2, 1) == 3
    with pytest.raises(InvalidInput):
        color_schreier_rank(0, 1)
    with pytest.raises(InvalidInput):
        color_schreier_rank(2, -1)

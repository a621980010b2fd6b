"""Schreier-type formulas for subgroups and subalgebras of free objects."""

from app.exceptions import InvalidInput, UnsupportedParity
from app.services.grading import GradedAlphabet
from app.services.series import TruncatedSeries, euler_transform
from app.services.witt import alphabet_series


def group_schreier_rank(n: int, index: int) -> int:
    """rank(K) = (n - 1)[G : K] + 1 for K of finite index in a free group of rank n."""
    if n < 1 or index < 1:
        raise InvalidInput(f"need rank >= 1 and index >= 1, got rank={n}, index={index}")
    return (n - 1) * index + 1


def lie_schreier_series(h_x: TruncatedSeries, h_lk: TruncatedSeries) -> TruncatedSeries:
    """H(Z) = (H(X) - 1)·𝓔(H(L/K)) + 1.

    Z is a free generating set of the subalgebra K of the free Lie algebra
    L(X); H(L/K) is the generating function of the quotient space.
    """
    if h_x.constant_term != 0 or h_lk.constant_term != 0:
        raise InvalidInput("H(X) and H(L/K) must have zero constant terms")
    if any(c < 0 for c in h_lk.coefficients):
        raise InvalidInput("H(L/K) counts dimensions and must be nonnegative")
    n = min(h_x.truncation_order, h_lk.truncation_order)
    one = TruncatedSeries.one(n)
    return (h_x.truncate(n) - one) * euler_transform(h_lk.truncate(n)) + one


def color_schreier_rank(rank_l: int, odd_codim: int) -> int:
    """rank(K) = 2^s (rank(L) - 1) + 1 with s the odd codimension dim (L/K)₋."""
    if rank_l < 1:
        raise InvalidInput(f"rank(L) must be >= 1, got {rank_l}")
    if odd_codim < 0:
        raise InvalidInput(f"odd codimension must be >= 0, got {odd_codim}")
    return 2**odd_codim * (rank_l - 1) + 1


def alphabet_schreier_series(alphabet: GradedAlphabet, h_lk: TruncatedSeries) -> TruncatedSeries:
    """lie_schreier_series with H(X) read off a purely even alphabet."""
    if alphabet.s:
        raise UnsupportedParity(
            f"alphabet has {alphabet.s} odd generator(s); the Schreier series covers free Lie algebras only"
        )
    return lie_schreier_series(alphabet_series(alphabet, h_lk.truncation_order), h_lk)

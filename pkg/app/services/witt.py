"""Witt-type dimension formulas for free (color) Lie superalgebras.

    dim Lₙ = (1/n) Σ_{d|n} μ(d) r^(n/d)                       (free Lie algebra, rank r)
    dim Lₙ = (1/n) Σ_{m|n} μ(m) (r - (-1)^m s)^(n/m)          (r even, s odd generators)

For weighted, purely even alphabets the series form is used instead: the
enveloping algebra is free associative, H(A⟨X⟩) = 1/(1 - H(X)), and the free
Lie series is its inverse Euler transform.
"""

import logging

from sympy import divisors
from sympy.ntheory import mobius as _sympy_mobius

from app.exceptions import InvalidInput, UnsupportedParity
from app.services.grading import GradedAlphabet
from app.services.series import (
    TruncatedSeries,
    geom_inverse,
    inverse_euler_transform,
)

logger = logging.getLogger(__name__)


def moebius(n: int) -> int:
    """μ(n): 0 if a prime square divides n, else (-1)^(number of prime factors)."""
    if n < 1:
        raise InvalidInput(f"Möbius function is defined for n >= 1, got {n}")
    return int(_sympy_mobius(n))


def _exact_divide(total: int, n: int, what: str) -> int:
    if total % n != 0:
        # The divisor sum is a necklace count; a remainder is a bug, not bad input.
        raise ArithmeticError(f"{what}: divisor sum {total} not divisible by {n}")
    return total // n


def witt_dim(r: int, n: int) -> int:
    """Dimension of the degree-n part of the free Lie algebra of rank r."""
    if r < 0:
        raise InvalidInput(f"rank must be >= 0, got {r}")
    if n < 1:
        raise InvalidInput(f"degree must be >= 1, got {n}")
    total = sum(moebius(d) * r ** (n // d) for d in divisors(n))
    return _exact_divide(total, n, f"witt_dim({r}, {n})")


def color_witt_dim(r: int, s: int, n: int) -> int:
    """Total dimension of Lₙ for r even and s odd generators of weight 1."""
    if r < 0 or s < 0 or r + s < 1:
        raise InvalidInput(f"need r, s >= 0 and r + s >= 1, got r={r}, s={s}")
    if n < 1:
        raise InvalidInput(f"degree must be >= 1, got {n}")
    total = sum(moebius(m) * (r - (-1) ** m * s) ** (n // m) for m in divisors(n))
    return _exact_divide(total, n, f"color_witt_dim({r}, {s}, {n})")


def witt_series(r: int, truncation_order: int) -> TruncatedSeries:
    """H(L, t) = Σ_{n=1..N} witt_dim(r, n) tⁿ."""
    coeffs = [0] + [witt_dim(r, n) for n in range(1, truncation_order + 1)]
    return TruncatedSeries.from_coefficients(coeffs, truncation_order)


def color_witt_series(r: int, s: int, truncation_order: int) -> TruncatedSeries:
    coeffs = [0] + [color_witt_dim(r, s, n) for n in range(1, truncation_order + 1)]
    return TruncatedSeries.from_coefficients(coeffs, truncation_order)


def witt_limit_ratio(r: int, s: int, n: int) -> float:
    """n·dim Lₙ / (r+s)ⁿ, which tends to 1."""
    return n * color_witt_dim(r, s, n) / (r + s) ** n


def alphabet_series(alphabet: GradedAlphabet, truncation_order: int) -> TruncatedSeries:
    """H(X) = Σ |Xᵢ| tⁱ."""
    coeffs = [0] * (truncation_order + 1)
    for gen in alphabet.generators:
        if gen.weight <= truncation_order:
            coeffs[gen.weight] += 1
    return TruncatedSeries.from_coefficients(coeffs, truncation_order)


def free_associative_series(alphabet: GradedAlphabet, truncation_order: int) -> TruncatedSeries:
    """H(A⟨X⟩) = 1 / (1 - H(X))."""
    return geom_inverse(alphabet_series(alphabet, truncation_order))


def free_lie_series(h_x: TruncatedSeries) -> TruncatedSeries:
    """Free Lie series of an even alphabet given by its generating function."""
    if any(c < 0 for c in h_x.coefficients):
        raise InvalidInput("an alphabet series has nonnegative coefficients")
    return inverse_euler_transform(geom_inverse(h_x))


def free_lie_series_from_alphabet(alphabet: GradedAlphabet, truncation_order: int) -> TruncatedSeries:
    """Weight-graded Hilbert series of L(X) for a purely even weighted alphabet."""
    if alphabet.s:
        raise UnsupportedParity(
            f"alphabet has {alphabet.s} odd generator(s); the weighted formula "
            "covers purely even alphabets only"
        )
    logger.debug(
        "Free Lie series for %d generators, weights=%s, N=%d",
        len(alphabet), alphabet.weights, truncation_order,
    )
    return free_lie_series(alphabet_series(alphabet, truncation_order))

"""Exact truncated power series over the integers.

Every Hilbert series in the package is a ``TruncatedSeries``: the coefficients
of t^0 .. t^N as arbitrary-precision integers. Binary operations truncate to
the smaller of the two orders.

The Euler-transform family turns dimension sequences into Hilbert series of
symmetric, exterior and (restricted) enveloping algebras:

- ``euler_transform``            Σ aᵢtⁱ ↦ ∏ (1 − tⁱ)^(−aᵢ)
- ``super_euler_transform``      ∏ (1 − tⁿ)^(−aₙ) (1 + tⁿ)^(bₙ)
- ``restricted_euler_transform`` ∏ ((1 − t^(pn)) / (1 − tⁿ))^(aₙ) (1 + tⁿ)^(bₙ)

All products are expanded factor by factor with exact integer binomial
series; no rationals or floats are involved.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Iterable, List, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import divisors, isprime
from sympy.ntheory import mobius

from app.exceptions import InvalidInput, NotAnEulerTransform

if TYPE_CHECKING:
    from app.services.envelope import SignedDimensionSequence

logger = logging.getLogger(__name__)


class TruncatedSeries(BaseModel):
    """Integer power series modulo t^(N+1)."""

    model_config = ConfigDict(frozen=True)

    coefficients: Tuple[int, ...] = Field(..., description="Coefficients of t^0 .. t^N")
    truncation_order: int = Field(..., ge=0, description="N")

    @model_validator(mode="after")
    def _check_length(self) -> "TruncatedSeries":
        if len(self.coefficients) != self.truncation_order + 1:
            raise ValueError(
                f"expected {self.truncation_order + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )
        return self

    # ── Constructors ─────────────────────────────────────────────

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int], truncation_order: int) -> "TruncatedSeries":
        """Pad with zeros (or cut) to exactly N+1 coefficients."""
        if truncation_order < 0:
            raise InvalidInput(f"truncation order must be >= 0, got {truncation_order}")
        coeffs = [int(c) for c in coefficients][: truncation_order + 1]
        coeffs.extend([0] * (truncation_order + 1 - len(coeffs)))
        return cls(coefficients=tuple(coeffs), truncation_order=truncation_order)

    @classmethod
    def zero(cls, truncation_order: int) -> "TruncatedSeries":
        return cls.from_coefficients([], truncation_order)

    @classmethod
    def one(cls, truncation_order: int) -> "TruncatedSeries":
        return cls.from_coefficients([1], truncation_order)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int, truncation_order: int) -> "TruncatedSeries":
        """c·t^k (zero if k > N)."""
        coeffs = [0] * (truncation_order + 1)
        if 0 <= exponent <= truncation_order:
            coeffs[exponent] = coefficient
        return cls(coefficients=tuple(coeffs), truncation_order=truncation_order)

    # ── Accessors ────────────────────────────────────────────────

    @property
    def constant_term(self) -> int:
        return self.coefficients[0]

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def truncate(self, truncation_order: int) -> "TruncatedSeries":
        if truncation_order > self.truncation_order:
            raise InvalidInput(
                f"cannot extend a series known to order {self.truncation_order} "
                f"to order {truncation_order}"
            )
        return TruncatedSeries.from_coefficients(self.coefficients, truncation_order)

    # ── Operators ────────────────────────────────────────────────

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_sub(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return _make([-c for c in self.coefficients])

    def __mul__(self, other: Union["TruncatedSeries", int]) -> "TruncatedSeries":
        if isinstance(other, int):
            return _make([other * c for c in self.coefficients])
        return series_mul(self, other)

    def __rmul__(self, other: int) -> "TruncatedSeries":
        return self * other


def _make(coefficients: Sequence[int]) -> TruncatedSeries:
    return TruncatedSeries(coefficients=tuple(coefficients), truncation_order=len(coefficients) - 1)


def _common_order(f: TruncatedSeries, g: TruncatedSeries) -> int:
    return min(f.truncation_order, g.truncation_order)


def _require_zero_constant(f: TruncatedSeries, operation: str) -> None:
    if f.constant_term != 0:
        raise InvalidInput(f"{operation} needs a zero constant term, got {f.constant_term}")


def _binomial_factor(exponent: int, step: int, sign: int, truncation_order: int) -> List[int]:
    """Coefficients of (1 - sign·t^step)^(-exponent) up to t^N.

    Uses (1 - x)^(-a) = Σ C(a+k-1, k) x^k, valid for every integer a; the
    running product c_k = c_{k-1}·(a+k-1)/k divides exactly at each step.
    """
    factor = [0] * (truncation_order + 1)
    factor[0] = 1
    c = 1
    k = 1
    while k * step <= truncation_order:
        c = c * (exponent + k - 1) // k
        if c == 0:
            break
        factor[k * step] = c * sign**k
        k += 1
    return factor


def _multiply_sparse(acc: List[int], factor: List[int], step: int) -> List[int]:
    """acc·factor where factor is supported on multiples of ``step``."""
    n_max = len(acc) - 1
    support = [(k, c) for k, c in enumerate(factor) if c and k % step == 0]
    out = [0] * (n_max + 1)
    for n, a in enumerate(acc):
        if a == 0:
            continue
        for k, c in support:
            if n + k > n_max:
                break
            out[n + k] += a * c
    return out


def _apply_power(acc: List[int], step: int, exponent: int, sign: int = 1) -> List[int]:
    """acc·(1 - sign·t^step)^(-exponent)."""
    if exponent == 0:
        return acc
    factor = _binomial_factor(exponent, step, sign, len(acc) - 1)
    return _multiply_sparse(acc, factor, step)


# ── Ring operations ──────────────────────────────────────────────

def series_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = _common_order(f, g)
    return _make([f[i] + g[i] for i in range(n + 1)])


def series_sub(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = _common_order(f, g)
    return _make([f[i] - g[i] for i in range(n + 1)])


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller order."""
    n = _common_order(f, g)
    out = [0] * (n + 1)
    for i in range(n + 1):
        a = f[i]
        if a == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += a * g[j]
    return _make(out)


def geom_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """1/(1 - f) for f with zero constant term."""
    _require_zero_constant(f, "geom_inverse")
    n = f.truncation_order
    g = [0] * (n + 1)
    g[0] = 1
    for m in range(1, n + 1):
        g[m] = sum(f[k] * g[m - k] for k in range(1, m + 1))
    return _make(g)


def _reciprocal(f: TruncatedSeries) -> List[int]:
    """1/f for f with constant term 1 (integer recurrence)."""
    n = f.truncation_order
    inv = [0] * (n + 1)
    inv[0] = 1
    for m in range(1, n + 1):
        inv[m] = -sum(f[k] * inv[m - k] for k in range(1, m + 1))
    return inv


# ── Euler transforms ─────────────────────────────────────────────

def euler_transform(f: TruncatedSeries) -> TruncatedSeries:
    """Σ aᵢtⁱ ↦ ∏ 1/(1 - tⁱ)^aᵢ; coefficients may be negative."""
    _require_zero_constant(f, "euler_transform")
    n = f.truncation_order
    acc = [1] + [0] * n
    for i in range(1, n + 1):
        acc = _apply_power(acc, i, f[i])
    return _make(acc)


def inverse_euler_transform(f: TruncatedSeries) -> TruncatedSeries:
    """Recover a with euler_transform(a) = f.

    The power sums b_m = [t^m](t·f'/f) satisfy b_m = Σ_{d|m} d·a_d, so
    n·a_n = Σ_{d|n} μ(n/d)·b_d. A non-exact division means f is not the Euler
    transform of an integer series.
    """
    if f.constant_term != 1:
        raise InvalidInput(f"inverse_euler_transform needs f(0) = 1, got {f.constant_term}")
    n = f.truncation_order
    t_derivative = [k * f[k] for k in range(n + 1)]
    log_derivative = series_mul(_make(t_derivative), _make(_reciprocal(f)))
    power_sums = log_derivative.coefficients

    out = [0] * (n + 1)
    for m in range(1, n + 1):
        total = sum(int(mobius(m // d)) * power_sums[d] for d in divisors(m))
        if total % m != 0:
            raise NotAnEulerTransform(
                f"coefficient at t^{m} is {total}/{m}, not an integer"
            )
        out[m] = total // m
    return _make(out)


def _check_sdims(sdims: "SignedDimensionSequence") -> None:
    if any(a < 0 for a in sdims.even_dims) or any(b < 0 for b in sdims.odd_dims):
        raise InvalidInput("even and odd dimensions must be nonnegative")


def super_euler_transform(sdims: "SignedDimensionSequence") -> TruncatedSeries:
    """∏ (1 - tⁿ)^(-aₙ) (1 + tⁿ)^(bₙ): the PBW series of a color Lie superalgebra."""
    _check_sdims(sdims)
    n_max = sdims.truncation_order
    acc = [1] + [0] * n_max
    for n, (a, b) in enumerate(zip(sdims.even_dims, sdims.odd_dims), start=1):
        acc = _apply_power(acc, n, a)
        # (1 + x)^b = (1 - (-x))^(-(-b))
        acc = _apply_power(acc, n, -b, sign=-1)
    return _make(acc)


def restricted_euler_transform(sdims: "SignedDimensionSequence", p: int) -> TruncatedSeries:
    """PBW series with even exponents capped at p - 1."""
    if not isprime(p):
        raise InvalidInput(f"p must be prime, got {p}")
    _check_sdims(sdims)
    n_max = sdims.truncation_order
    acc = [1] + [0] * n_max
    for n, (a, b) in enumerate(zip(sdims.even_dims, sdims.odd_dims), start=1):
        acc = _apply_power(acc, n, a)
        acc = _apply_power(acc, p * n, -a)
        acc = _apply_power(acc, n, -b, sign=-1)
    return _make(acc)

"""Hilbert series of universal and restricted enveloping algebras.

By PBW, U(L) ≅ S(L₊) ⊗ Λ(L₋) as graded spaces, so H(U(L)) depends only on
the parity split (aₙ, bₙ) = (dim (Lₙ)₊, dim (Lₙ)₋). The split is always an
explicit input here; total dimensions alone do not determine it.
"""

import logging
from typing import Iterable, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.exceptions import InvalidCharacteristic, InvalidInput
from app.services.grading import BicharacterTable
from app.services.series import (
    TruncatedSeries,
    restricted_euler_transform,
    series_add,
    series_mul,
    super_euler_transform,
)

logger = logging.getLogger(__name__)

# Restricted color superalgebras need characteristic other than 2 and 3.
MIN_GRADED_CHARACTERISTIC = 5


class SignedDimensionSequence(BaseModel):
    """Even/odd dimensions (aₙ, bₙ) for n = 1..N."""

    model_config = ConfigDict(frozen=True)

    even_dims: Tuple[int, ...] = Field(..., description="a_1 .. a_N")
    odd_dims: Tuple[int, ...] = Field(..., description="b_1 .. b_N")

    @field_validator("even_dims", "odd_dims")
    @classmethod
    def validate_nonnegative(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(d < 0 for d in v):
            raise ValueError("dimensions must be nonnegative")
        return v

    @model_validator(mode="after")
    def _check_lengths(self) -> "SignedDimensionSequence":
        if len(self.even_dims) != len(self.odd_dims):
            raise ValueError(
                f"even_dims has {len(self.even_dims)} entries, odd_dims has {len(self.odd_dims)}"
            )
        return self

    @classmethod
    def from_lists(
        cls, even: Iterable[int] = (), odd: Iterable[int] = (), truncation_order: Optional[int] = None
    ) -> "SignedDimensionSequence":
        """Pad (or cut) both lists to length N; N defaults to the longer list."""
        even, odd = list(even), list(odd)
        n = truncation_order if truncation_order is not None else max(len(even), len(odd))
        if n < 0:
            raise InvalidInput(f"truncation order must be >= 0, got {n}")
        even = (even + [0] * n)[:n]
        odd = (odd + [0] * n)[:n]
        return cls(even_dims=tuple(even), odd_dims=tuple(odd))

    @property
    def truncation_order(self) -> int:
        return len(self.even_dims)

    @property
    def total_dims(self) -> Tuple[int, ...]:
        return tuple(a + b for a, b in zip(self.even_dims, self.odd_dims))

    @property
    def has_odd_part(self) -> bool:
        return any(self.odd_dims)


def enveloping_series(sdims: SignedDimensionSequence) -> TruncatedSeries:
    """H(U(L), t) = ∏ (1 - tⁿ)^(-aₙ) (1 + tⁿ)^(bₙ)."""
    return super_euler_transform(sdims)


def restricted_enveloping_series(
    sdims: SignedDimensionSequence,
    p: int,
    grading: Optional[BicharacterTable] = None,
    allow_small_characteristic: bool = False,
) -> TruncatedSeries:
    """H(u(L), t) for a color Lie p-superalgebra.

    A nontrivial grading (a group with more than one element, or any odd
    dimension) needs p >= 5 unless ``allow_small_characteristic`` is set; for
    G = {1} every prime is accepted.
    """
    nontrivial = sdims.has_odd_part or (grading is not None and not grading.is_trivial)
    if nontrivial and p < MIN_GRADED_CHARACTERISTIC and not allow_small_characteristic:
        raise InvalidCharacteristic(
            f"characteristic {p} is not allowed for a nontrivially graded algebra "
            f"(need p >= {MIN_GRADED_CHARACTERISTIC})"
        )
    return restricted_euler_transform(sdims, p)


def direct_sum_series(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """H(U ⊕ V) with (U ⊕ V)ⁿ = Uⁿ ⊕ Vⁿ."""
    return series_add(f, g)


def tensor_series(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """H(U ⊗ V) with (U ⊗ V)ⁿ = Σᵢ Uⁱ ⊗ V^(n-i)."""
    return series_mul(f, g)


def symmetric_part(sdims: SignedDimensionSequence) -> SignedDimensionSequence:
    """The even half (a, 0); its enveloping series is H(S(L₊))."""
    return SignedDimensionSequence(even_dims=sdims.even_dims, odd_dims=(0,) * sdims.truncation_order)


def exterior_part(sdims: SignedDimensionSequence) -> SignedDimensionSequence:
    """The odd half (0, b); its enveloping series is H(Λ(L₋))."""
    return SignedDimensionSequence(even_dims=(0,) * sdims.truncation_order, odd_dims=sdims.odd_dims)


def envelope_from_split(
    even: Iterable[int],
    odd: Iterable[int],
    truncation_order: int,
    prime: Optional[int] = None,
    allow_small_characteristic: bool = False,
) -> TruncatedSeries:
    """H(U(L)), or H(u(L)) when ``prime`` is given, from raw a_n, b_n lists."""
    sdims = SignedDimensionSequence.from_lists(even, odd, truncation_order)
    if prime is None:
        return enveloping_series(sdims)
    logger.debug("Restricted envelope: p=%d N=%d odd part=%s", prime, truncation_order, sdims.has_odd_part)
    return restricted_enveloping_series(
        sdims, prime, allow_small_characteristic=allow_small_characteristic
    )

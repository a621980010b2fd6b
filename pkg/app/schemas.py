"""Pydantic schemas for API request/response validation."""

from typing import Any, Dict, List, Optional, Tuple
from datetime import datetime
from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.config import DEFAULT_TRUNCATION
from app.services.grading import BicharacterTable, GradedAlphabet, Generator


# ── Input documents ──────────────────────────────────────────────

class GeneratorDocument(BaseModel):
    """One generator of an alphabet document."""
    label: str = Field(..., min_length=1)
    weight: int = Field(default=1, ge=1)
    degree: List[int] = Field(default_factory=list, description="Group element, one entry per cyclic factor")


class AlphabetDocument(BaseModel):
    """Alphabet and bicharacter, as read from ``--alphabet FILE`` or a request body.

    {"group": [m1, ...], "gamma_on_generators": [[±1, ...], ...],
     "generators": [{"label": "x", "weight": 1, "degree": [0, ...]}]}
    """
    group: List[int] = Field(default_factory=list)
    gamma_on_generators: Optional[List[List[int]]] = None
    generators: List[GeneratorDocument] = Field(default_factory=list)

    def to_table(self) -> BicharacterTable:
        gamma = None
        if self.gamma_on_generators is not None:
            gamma = tuple(tuple(row) for row in self.gamma_on_generators)
        return BicharacterTable(group=tuple(self.group), gamma_on_generators=gamma)

    def to_alphabet(self) -> GradedAlphabet:
        return GradedAlphabet(
            generators=tuple(
                Generator(label=g.label, weight=g.weight, degree=tuple(g.degree))
                for g in self.generators
            ),
            table=self.to_table(),
        )


# ── Request Schemas ──────────────────────────────────────────────

class SeriesRequest(BaseModel):
    """A series given by its coefficients from t^0 upwards."""
    coefficients: List[int] = Field(..., description="Coefficients of t^0, t^1, ...")
    truncation: int = Field(default=DEFAULT_TRUNCATION, ge=0, le=2000, description="Truncation order N")


class EnvelopeRequest(BaseModel):
    """Parity split (a_n, b_n) from n = 1, optionally with a prime for u(L)."""
    even: List[int] = Field(default_factory=list, description="a_1, a_2, ...")
    odd: List[int] = Field(default_factory=list, description="b_1, b_2, ...")
    prime: Optional[int] = Field(default=None, ge=2)
    allow_small_characteristic: bool = False
    truncation: int = Field(default=DEFAULT_TRUNCATION, ge=0, le=2000)


class SchreierLieRequest(BaseModel):
    """H(Z) for a subalgebra K of L(X) with quotient series H(L/K)."""
    alphabet: AlphabetDocument
    quotient_coefficients: List[int] = Field(..., description="H(L/K) from t^0 upwards")
    truncation: int = Field(default=DEFAULT_TRUNCATION, ge=0, le=2000)


class GrowthRequest(BaseModel):
    """Dimension series from t^0 upwards and the window to estimate over."""
    coefficients: List[int] = Field(..., min_length=2)
    window: Tuple[int, int]
    tolerance: Optional[float] = Field(default=None, gt=0, lt=1)

    @field_validator("window")
    @classmethod
    def validate_window(cls, v: Tuple[int, int]) -> Tuple[int, int]:
        if v[0] >= v[1]:
            raise ValueError("window start must be below its end")
        return v


class VerifyRequest(BaseModel):
    """Optional overrides for a suite's default parameters."""
    seed: Optional[int] = None
    max_rank: Optional[int] = Field(default=None, ge=1)
    max_degree: Optional[int] = Field(default=None, ge=1)
    trials: Optional[int] = Field(default=None, ge=1)
    truncation: Optional[int] = Field(default=None, ge=1)

    def suite_parameters(self) -> Dict[str, int]:
        return {
            k: v for k, v in self.model_dump(exclude={"seed"}).items() if v is not None
        }


# ── Response Schemas ─────────────────────────────────────────────

def result_envelope(
    result: Any,
    truncation: Optional[int] = None,
    seed: Optional[int] = None,
    window: Optional[Tuple[int, int]] = None,
) -> Dict[str, Any]:
    """{"result": ..., "meta": {"truncation": N, "seed": S?, "window": [a, b]?}}."""
    meta: Dict[str, Any] = {"truncation": truncation}
    if seed is not None:
        meta["seed"] = seed
    if window is not None:
        meta["window"] = [window[0], window[1]]
    return {"result": result, "meta": meta}


class VerificationCheckResponse(BaseModel):
    """A single ledger check."""
    label: str
    expected: str
    actual: str
    passed: bool

    model_config = ConfigDict(from_attributes=True)


class VerificationRunResponse(BaseModel):
    """A ledger row with its checks."""
    id: int
    suite: str
    seed: Optional[int]
    parameters: Dict[str, Any]
    passed: bool
    check_count: int
    failed_count: int
    duration_ms: Optional[float]
    created_at: datetime
    checks: List[VerificationCheckResponse] = []

    model_config = ConfigDict(from_attributes=True)


class VerificationRunSummary(BaseModel):
    """A ledger row without its checks."""
    id: int
    suite: str
    seed: Optional[int]
    passed: bool
    check_count: int
    failed_count: int
    duration_ms: Optional[float]
    created_at: datetime

    model_config = ConfigDict(from_attributes=True)

"""Grading data shared by the closed formulas and the oracle.

A ``BicharacterTable`` is a finite abelian group G = ℤ_{m1} × … × ℤ_{mk}
together with a ±1-valued map γ: G × G → {±1}. It is either derived from
its values on pairs of cyclic generators,

    γ(g, h) = ∏_{i,j} c_ij ^ (g_i · h_j),

or given as a full table over ``elements()`` (needed to describe tables
that are not bicharacters at all, which ``validate_bicharacter`` rejects).

A ``GradedAlphabet`` is a finite generating set: every generator carries a
positive weight and a G-degree; it is even when γ(g, g) = +1.
"""

import itertools
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

GroupElement = Tuple[int, ...]


class BicharacterTable(BaseModel):
    """Finite abelian group with a ±1-valued γ."""

    model_config = ConfigDict(frozen=True)

    group: Tuple[int, ...] = Field(default=(), description="Moduli of the cyclic factors")
    gamma_on_generators: Optional[Tuple[Tuple[int, ...], ...]] = Field(
        default=None, description="c_ij = γ(e_i, e_j)"
    )
    values: Optional[Tuple[Tuple[int, ...], ...]] = Field(
        default=None, description="Full table indexed like elements()"
    )

    @field_validator("group")
    @classmethod
    def validate_group(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(m < 1 for m in v):
            raise ValueError("cyclic moduli must be >= 1")
        return v

    @model_validator(mode="after")
    def _check_shapes(self) -> "BicharacterTable":
        k = len(self.group)
        if self.gamma_on_generators is not None and self.values is not None:
            raise ValueError("give either gamma_on_generators or values, not both")
        if self.gamma_on_generators is not None:
            rows = self.gamma_on_generators
            if len(rows) != k or any(len(row) != k for row in rows):
                raise ValueError(f"gamma_on_generators must be a {k}x{k} matrix")
            if any(c not in (1, -1) for row in rows for c in row):
                raise ValueError("bicharacter values must be +1 or -1")
        if self.values is not None:
            size = 1
            for m in self.group:
                size *= m
            if len(self.values) != size or any(len(row) != size for row in self.values):
                raise ValueError(f"values must be a {size}x{size} table")
            if any(c not in (1, -1) for row in self.values for c in row):
                raise ValueError("bicharacter values must be +1 or -1")
        return self

    # ── Constructors ─────────────────────────────────────────────

    @classmethod
    def trivial(cls) -> "BicharacterTable":
        """G = {1}, γ ≡ 1: ordinary Lie algebras."""
        return cls()

    @classmethod
    def super_z2(cls) -> "BicharacterTable":
        """G = ℤ₂, γ(i, j) = (-1)^(ij): Lie superalgebras."""
        return cls(group=(2,), gamma_on_generators=((-1,),))

    # ── Group structure ──────────────────────────────────────────

    def elements(self) -> List[GroupElement]:
        return [tuple(g) for g in itertools.product(*(range(m) for m in self.group))]

    def index_of(self, g: GroupElement) -> int:
        """Position of g in elements() (mixed radix, last factor fastest)."""
        index = 0
        for x, m in zip(g, self.group):
            index = index * m + x % m
        return index

    @property
    def order(self) -> int:
        size = 1
        for m in self.group:
            size *= m
        return size

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def normalize(self, g) -> GroupElement:
        g = tuple(g)
        if len(g) != len(self.group):
            raise ValueError(f"degree {g} does not belong to a group with {len(self.group)} factors")
        return tuple(x % m for x, m in zip(g, self.group))

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % m for a, b, m in zip(g, h, self.group))

    # ── γ ────────────────────────────────────────────────────────

    def gamma(self, g: GroupElement, h: GroupElement) -> int:
        if self.values is not None:
            return self.values[self.index_of(g)][self.index_of(h)]
        if self.gamma_on_generators is None:
            return 1
        exponent_of_minus_one = 0
        for i, gi in enumerate(g):
            if gi == 0:
                continue
            for j, hj in enumerate(h):
                if hj and self.gamma_on_generators[i][j] == -1:
                    exponent_of_minus_one += gi * hj
        return -1 if exponent_of_minus_one % 2 else 1

    def is_even(self, g: GroupElement) -> bool:
        return self.gamma(g, g) == 1


class Generator(BaseModel):
    """One letter of a graded alphabet."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(..., min_length=1)
    weight: int = Field(default=1, ge=1)
    degree: Tuple[int, ...] = Field(default=())


class GradedAlphabet(BaseModel):
    """Finitely graded generating set X = X₊ ∪ X₋."""

    model_config = ConfigDict(frozen=True)

    generators: Tuple[Generator, ...] = Field(default=())
    table: BicharacterTable = Field(default_factory=BicharacterTable.trivial)

    @model_validator(mode="after")
    def _check_generators(self) -> "GradedAlphabet":
        labels = [g.label for g in self.generators]
        if len(set(labels)) != len(labels):
            raise ValueError(f"generator labels must be unique, got {labels}")
        for g in self.generators:
            if len(g.degree) != len(self.table.group):
                raise ValueError(
                    f"generator '{g.label}' has degree {g.degree}, "
                    f"expected {len(self.table.group)} components"
                )
        return self

    @classmethod
    def standard(cls, r: int, s: int = 0) -> "GradedAlphabet":
        """r even generators x1.. and s odd generators y1.., all of weight 1."""
        if r < 0 or s < 0:
            raise ValueError("r and s must be nonnegative")
        table = BicharacterTable.super_z2() if s else BicharacterTable.trivial()
        even_degree = (0,) if s else ()
        gens = [Generator(label=f"x{i + 1}", weight=1, degree=even_degree) for i in range(r)]
        gens += [Generator(label=f"y{j + 1}", weight=1, degree=(1,)) for j in range(s)]
        return cls(generators=tuple(gens), table=table)

    def __len__(self) -> int:
        return len(self.generators)

    def degree_of(self, index: int) -> GroupElement:
        return self.table.normalize(self.generators[index].degree)

    def is_even_generator(self, index: int) -> bool:
        return self.table.is_even(self.degree_of(index))

    @property
    def even_generators(self) -> List[Generator]:
        return [g for i, g in enumerate(self.generators) if self.is_even_generator(i)]

    @property
    def odd_generators(self) -> List[Generator]:
        return [g for i, g in enumerate(self.generators) if not self.is_even_generator(i)]

    @property
    def r(self) -> int:
        return len(self.even_generators)

    @property
    def s(self) -> int:
        return len(self.odd_generators)

    @property
    def weights(self) -> List[int]:
        return [g.weight for g in self.generators]

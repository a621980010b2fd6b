"""Randomized check of γ-skew-symmetry and the γ-Jacobi identity."""

import logging
import random
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from app.config import DEFAULT_SEED
from app.exceptions import InvalidInput
from app.services.grading import BicharacterTable, GradedAlphabet
from app.services.oracle.bicharacter import super_commutator
from app.services.oracle.free_algebra import FreeAlgebraElement
from app.services.oracle.spans import resolve_table, lie_basis

logger = logging.getLogger(__name__)

COEFFICIENT_RANGE = 3


class JacobiWitness(BaseModel):
    """A failing triple (should never occur)."""

    trial: int
    identity: str
    x: str
    y: str
    z: str
    residue: str


class JacobiReport(BaseModel):
    trials: int
    max_degree: int
    seed: int
    passed: bool
    failures: List[JacobiWitness] = Field(default_factory=list)


def _homogeneous_pools(
    alphabet: GradedAlphabet, table: BicharacterTable, max_degree: int
) -> List[List[FreeAlgebraElement]]:
    """Basis elements grouped by (weight, letter content)."""
    pools: Dict[Tuple, List[FreeAlgebraElement]] = defaultdict(list)
    for n in range(1, max_degree + 1):
        for element in lie_basis(alphabet, table, n):
            pools[(n, element.content)].append(element)
    return [pools[key] for key in sorted(pools)]


def _random_element(rng: random.Random, pools: List[List[FreeAlgebraElement]]) -> FreeAlgebraElement:
    pool = rng.choice(pools)
    coefficients = [rng.randint(-COEFFICIENT_RANGE, COEFFICIENT_RANGE) for _ in pool]
    if not any(coefficients):
        coefficients[rng.randrange(len(pool))] = 1
    total = pool[0].scaled(0)
    for c, element in zip(coefficients, pool):
        total = total + element.scaled(c)
    return total


def verify_jacobi(
    alphabet: GradedAlphabet,
    table: Optional[BicharacterTable],
    trials: int,
    max_degree: int,
    seed: int = DEFAULT_SEED,
) -> JacobiReport:
    """Check both identities on ``trials`` random homogeneous triples."""
    if trials < 0 or max_degree < 1:
        raise InvalidInput(f"need trials >= 0 and max_degree >= 1, got {trials}, {max_degree}")
    if not alphabet.generators:
        raise InvalidInput("alphabet has no generators")
    table = resolve_table(alphabet, table)
    labels = [g.label for g in alphabet.generators]
    pools = _homogeneous_pools(alphabet, table, max_degree)
    rng = random.Random(seed)
    failures: List[JacobiWitness] = []

    def bracket(a, b):
        return super_commutator(a, b, table)

    for trial in range(trials):
        x, y, z = (_random_element(rng, pools) for _ in range(3))
        dx, dy, dz = x.degree, y.degree, z.degree

        skew = bracket(x, y) + bracket(y, x).scaled(table.gamma(dx, dy))
        if not skew.is_zero():
            failures.append(JacobiWitness(
                trial=trial, identity="skew-symmetry",
                x=x.pretty(labels), y=y.pretty(labels), z="", residue=skew.pretty(labels),
            ))

        jacobi = (
            bracket(x, bracket(y, z)).scaled(table.gamma(dz, dx))
            + bracket(z, bracket(x, y)).scaled(table.gamma(dy, dz))
            + bracket(y, bracket(z, x)).scaled(table.gamma(dx, dy))
        )
        if not jacobi.is_zero():
            failures.append(JacobiWitness(
                trial=trial, identity="jacobi",
                x=x.pretty(labels), y=y.pretty(labels), z=z.pretty(labels),
                residue=jacobi.pretty(labels),
            ))

    if failures:
        logger.error("Jacobi check found %d failure(s) with seed=%d", len(failures), seed)
    else:
        logger.info("Jacobi check passed: %d trials, degree <= %d, seed=%d", trials, max_degree, seed)
    return JacobiReport(
        trials=trials, max_degree=max_degree, seed=seed, passed=not failures, failures=failures
    )

"""Brute-force computer algebra used to cross-check the closed formulas."""

from app.services.oracle.bicharacter import BicharacterReport, super_commutator, validate_bicharacter
from app.services.oracle.counting import is_lyndon, lyndon_count, pbw_count
from app.services.oracle.free_algebra import FreeAlgebraElement
from app.services.oracle.jacobi import JacobiReport, JacobiWitness, verify_jacobi
from app.services.oracle.spans import (
    BracketClosure,
    LieSpanResult,
    example_subalgebra_generators,
    lazard_generators,
    lie_basis,
    lie_span_dimension,
    subalgebra_span_dimension,
)

__all__ = [
    "BicharacterReport",
    "BracketClosure",
    "FreeAlgebraElement",
    "JacobiReport",
    "JacobiWitness",
    "LieSpanResult",
    "example_subalgebra_generators",
    "is_lyndon",
    "lazard_generators",
    "lie_basis",
    "lie_span_dimension",
    "lyndon_count",
    "pbw_count",
    "subalgebra_span_dimension",
    "super_commutator",
    "validate_bicharacter",
    "verify_jacobi",
]

"""Bicharacter axioms and the γ-super commutator."""

import logging
from fractions import Fraction
from typing import List, Tuple

from pydantic import BaseModel

from app.exceptions import InvalidBicharacter, InvalidInput
from app.services.grading import BicharacterTable
from app.services.oracle.free_algebra import FreeAlgebraElement

logger = logging.getLogger(__name__)


class BicharacterReport(BaseModel):
    """Outcome of ``validate_bicharacter``."""

    group: Tuple[int, ...]
    order: int
    even_part: List[Tuple[int, ...]]
    odd_part: List[Tuple[int, ...]]
    even_index: int


def validate_bicharacter(table: BicharacterTable) -> BicharacterReport:
    """Check bimultiplicativity and skew-symmetry over the whole group.

    Raises InvalidBicharacter with the first violating pair or triple.
    """
    elements = table.elements()
    for f in elements:
        for g in elements:
            if table.gamma(f, g) * table.gamma(g, f) != 1:
                raise InvalidBicharacter(
                    f"skew-symmetry fails: γ({f},{g})·γ({g},{f}) != 1", witness=(f, g)
                )
            for h in elements:
                gh = table.add(g, h)
                if table.gamma(f, gh) != table.gamma(f, g) * table.gamma(f, h):
                    raise InvalidBicharacter(
                        f"γ({f}, {g}+{h}) != γ({f},{g})·γ({f},{h})", witness=(f, g, h)
                    )
                if table.gamma(gh, f) != table.gamma(g, f) * table.gamma(h, f):
                    raise InvalidBicharacter(
                        f"γ({g}+{h}, {f}) != γ({g},{f})·γ({h},{f})", witness=(g, h, f)
                    )

    even = [g for g in elements if table.is_even(g)]
    odd = [g for g in elements if not table.is_even(g)]
    # G₊ is a subgroup of index at most 2.
    if len(even) * 2 < len(elements):
        raise InvalidBicharacter(f"G+ has index > 2 ({len(even)} of {len(elements)} elements)")
    logger.debug("Bicharacter on %s valid: |G+|=%d |G-|=%d", table.group, len(even), len(odd))
    return BicharacterReport(
        group=table.group,
        order=len(elements),
        even_part=even,
        odd_part=odd,
        even_index=len(elements) // len(even),
    )


def super_commutator(
    u: FreeAlgebraElement, v: FreeAlgebraElement, table: BicharacterTable
) -> FreeAlgebraElement:
    """[u, v]_γ = uv - γ(d(u), d(v)) vu for homogeneous u, v."""
    if not (u.is_homogeneous and v.is_homogeneous):
        raise InvalidInput("the γ-commutator is defined on homogeneous elements only")
    sign = table.gamma(u.degree, v.degree)
    terms = u.words_product(v)
    for w, c in v.words_product(u).items():
        terms[w] = terms.get(w, 0) - sign * c
    content = None
    if u.content is not None and v.content is not None:
        content = tuple(a + b for a, b in zip(u.content, v.content))
    return FreeAlgebraElement(
        {w: Fraction(c) for w, c in terms.items()},
        weight=u.weight + v.weight,
        degree=table.add(u.degree, v.degree),
        content=content,
    )

"""Sparse elements of the free associative algebra A⟨X⟩ over ℚ.

Words are tuples of generator indices. An element stores only nonzero
coefficients; when it is homogeneous it also carries its weight, its G-degree
and its letter content (how many times each generator occurs in every word).
"""

from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple

Word = Tuple[int, ...]
Content = Tuple[int, ...]


class FreeAlgebraElement:
    """Finite ℚ-linear combination of words."""

    __slots__ = ("terms", "weight", "degree", "content")

    def __init__(
        self,
        terms: Dict[Word, Fraction],
        weight: Optional[int] = None,
        degree: Optional[Tuple[int, ...]] = None,
        content: Optional[Content] = None,
    ):
        self.terms = {w: Fraction(c) for w, c in terms.items() if c != 0}
        self.weight = weight
        self.degree = degree
        self.content = content

    @classmethod
    def generator(
        cls, index: int, size: int, weight: int = 1, degree: Tuple[int, ...] = ()
    ) -> "FreeAlgebraElement":
        """The letter ``index`` of an alphabet with ``size`` letters."""
        content = tuple(1 if i == index else 0 for i in range(size))
        return cls({(index,): Fraction(1)}, weight=weight, degree=tuple(degree), content=content)

    @property
    def is_homogeneous(self) -> bool:
        return self.weight is not None and self.degree is not None

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[Tuple[Word, Fraction]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeAlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def _with_terms(self, terms: Dict[Word, Fraction]) -> "FreeAlgebraElement":
        return FreeAlgebraElement(terms, self.weight, self.degree, self.content)

    def __neg__(self) -> "FreeAlgebraElement":
        return self._with_terms({w: -c for w, c in self.terms.items()})

    def scaled(self, factor) -> "FreeAlgebraElement":
        factor = Fraction(factor)
        if factor == 0:
            return self._with_terms({})
        return self._with_terms({w: factor * c for w, c in self.terms.items()})

    def __add__(self, other: "FreeAlgebraElement") -> "FreeAlgebraElement":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        same = (self.weight, self.degree, self.content) == (other.weight, other.degree, other.content)
        if same or other.is_zero():
            return self._with_terms(terms)
        if self.is_zero():
            return other._with_terms(terms)
        return FreeAlgebraElement(terms)

    def __sub__(self, other: "FreeAlgebraElement") -> "FreeAlgebraElement":
        return self + (-other)

    def words_product(self, other: "FreeAlgebraElement") -> Dict[Word, Fraction]:
        """Concatenation product as a raw term dictionary."""
        out: Dict[Word, Fraction] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                out[w] = out.get(w, 0) + a * b
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            word = "".join(f"e{i}" for i in w)
            parts.append(word if c == 1 else f"{c}*{word}")
        return " + ".join(parts)

    def pretty(self, labels) -> str:
        """Render with generator labels, e.g. ``x1y1 - y1x1``."""
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            word = "".join(labels[i] for i in w)
            parts.append(word if c == 1 else f"{c}*{word}")
        return " + ".join(parts)

"""Free color Lie superalgebras realized inside A⟨X⟩.

L(X) is the subalgebra of A⟨X⟩^(γ) generated by the letters under the
γ-commutator. Its weight-n component is spanned by the letters of weight n
and by all [u, v] with u, v running over bases of L_k and L_(n-k), for every
split k. Ranks are exact over ℚ.

Candidates are grouped by letter content before elimination: a bracket of
multihomogeneous elements is multihomogeneous, so the echelon bases of
different contents never interact.
"""

import logging
from functools import lru_cache
from typing import Dict, Hashable, Iterable, Iterator, List, Optional, Tuple

from pydantic import BaseModel

from app.config import ORACLE_WORD_CAP
from app.exceptions import InvalidInput, TooLarge
from app.services.grading import BicharacterTable, GradedAlphabet
from app.services.oracle.bicharacter import super_commutator
from app.services.oracle.elimination import EchelonBasis
from app.services.oracle.free_algebra import FreeAlgebraElement
from app.services.series import geom_inverse
from app.services.witt import alphabet_series

logger = logging.getLogger(__name__)


class LieSpanResult(BaseModel):
    """Dimension of L_n with its parity split."""

    degree: int
    dimension: int
    even: int
    odd: int


def _content_of(element: FreeAlgebraElement, letters: int) -> Optional[Tuple[int, ...]]:
    """Common letter content of all words, or None if the words disagree."""
    contents = set()
    for word, _ in element:
        counts = [0] * letters
        for i in word:
            counts[i] += 1
        contents.add(tuple(counts))
        if len(contents) > 1:
            return None
    return contents.pop() if contents else None


class BracketClosure:
    """Degreewise bases of the subalgebra generated by homogeneous elements."""

    def __init__(self, generators: Iterable[FreeAlgebraElement], table: BicharacterTable):
        self.table = table
        self.generators = list(generators)
        for g in self.generators:
            if not g.is_homogeneous:
                raise InvalidInput("subalgebra generators must be homogeneous")
            if g.weight < 1:
                raise InvalidInput(f"generator weights must be >= 1, got {g.weight}")
        self.letters = 1 + max((i for g in self.generators for w, _ in g for i in w), default=-1)
        # Generators without a content get a copy that carries one; the inputs stay untouched.
        self.generators = [
            g if g.content is not None
            else FreeAlgebraElement(g.terms, g.weight, g.degree, _content_of(g, self.letters))
            for g in self.generators
        ]
        self._split_by_content = all(g.content is not None for g in self.generators)
        self._basis: Dict[int, List[FreeAlgebraElement]] = {}

    def _candidates(self, m: int) -> Iterator[FreeAlgebraElement]:
        for g in self.generators:
            if g.weight == m:
                yield g
        for k in range(1, m):
            for u in self._basis[k]:
                for v in self._basis[m - k]:
                    yield super_commutator(u, v, self.table)

    def _group_key(self, element: FreeAlgebraElement) -> Hashable:
        return element.content if self._split_by_content else None

    def _build(self, m: int) -> None:
        echelons: Dict[Hashable, EchelonBasis] = {}
        basis: List[FreeAlgebraElement] = []
        for candidate in self._candidates(m):
            if candidate.is_zero():
                continue
            echelon = echelons.setdefault(self._group_key(candidate), EchelonBasis())
            if echelon.insert(candidate.terms):
                basis.append(candidate)
        self._basis[m] = basis
        logger.debug("Bracket closure: weight %d has %d basis elements", m, len(basis))

    def basis(self, n: int) -> List[FreeAlgebraElement]:
        if n < 1:
            raise InvalidInput(f"degree must be >= 1, got {n}")
        for m in range(1, n + 1):
            if m not in self._basis:
                self._build(m)
        return list(self._basis[n])

    def dimension(self, n: int) -> int:
        return len(self.basis(n))

    def parity_split(self, n: int) -> Tuple[int, int]:
        even = sum(1 for e in self.basis(n) if self.table.is_even(e.degree))
        return even, len(self._basis[n]) - even


def _letters(alphabet: GradedAlphabet) -> List[FreeAlgebraElement]:
    size = len(alphabet.generators)
    return [
        FreeAlgebraElement.generator(i, size, weight=g.weight, degree=alphabet.degree_of(i))
        for i, g in enumerate(alphabet.generators)
    ]


@lru_cache(maxsize=32)
def _free_lie_realization(alphabet: GradedAlphabet, table: BicharacterTable) -> BracketClosure:
    return BracketClosure(_letters(alphabet), table)


def resolve_table(alphabet: GradedAlphabet, table: Optional[BicharacterTable]) -> BicharacterTable:
    if table is None:
        return alphabet.table
    if table.group != alphabet.table.group:
        raise InvalidInput(
            f"table group {table.group} does not match the alphabet's group {alphabet.table.group}"
        )
    return table


def _check_word_count(alphabet: GradedAlphabet, n: int, word_cap: int) -> None:
    words = geom_inverse(alphabet_series(alphabet, n))[n]
    if words > word_cap:
        raise TooLarge(f"{words} words of weight {n} exceed the cap of {word_cap}")


def lie_basis(
    alphabet: GradedAlphabet,
    table: Optional[BicharacterTable],
    n: int,
    word_cap: int = ORACLE_WORD_CAP,
) -> List[FreeAlgebraElement]:
    """Basis of L(X)_n as γ-bracket polynomials in A⟨X⟩."""
    table = resolve_table(alphabet, table)
    _check_word_count(alphabet, n, word_cap)
    return _free_lie_realization(alphabet, table).basis(n)


def lie_span_dimension(
    alphabet: GradedAlphabet,
    table: Optional[BicharacterTable],
    n: int,
    word_cap: int = ORACLE_WORD_CAP,
) -> LieSpanResult:
    """dim L(X)_n with (even, odd) split, by brute-force spanning."""
    table = resolve_table(alphabet, table)
    _check_word_count(alphabet, n, word_cap)
    closure = _free_lie_realization(alphabet, table)
    even, odd = closure.parity_split(n)
    logger.info("Oracle span: %d generators, degree %d -> dim %d (even %d, odd %d)",
                len(alphabet.generators), n, even + odd, even, odd)
    return LieSpanResult(degree=n, dimension=even + odd, even=even, odd=odd)


def subalgebra_span_dimension(
    generators: List[FreeAlgebraElement],
    table: BicharacterTable,
    n: int,
    word_cap: int = ORACLE_WORD_CAP,
) -> int:
    """dim of the weight-n component of the subalgebra generated by ``generators``."""
    closure = BracketClosure(generators, table)
    if closure.letters ** n > word_cap:
        raise TooLarge(f"{closure.letters}^{n} words exceed the cap of {word_cap}")
    return closure.dimension(n)


def lazard_generators(n: int) -> Tuple[GradedAlphabet, List[FreeAlgebraElement]]:
    """ad(x)^k(y), k = 0..n-1, inside the free Lie algebra on even x, y."""
    alphabet = GradedAlphabet.standard(2, 0)
    x, y = _letters(alphabet)
    table = alphabet.table
    gens = [y]
    for _ in range(1, n):
        gens.append(super_commutator(x, gens[-1], table))
    return alphabet, gens


def example_subalgebra_generators(r: int) -> Tuple[GradedAlphabet, List[FreeAlgebraElement]]:
    """{xᵢ, [xᵢ, y]} ∪ {[y, y]} in the free superalgebra on x1..xr even, y odd."""
    if r < 1:
        raise InvalidInput(f"need at least one even generator, got r={r}")
    alphabet = GradedAlphabet.standard(r, 1)
    letters = _letters(alphabet)
    xs, y = letters[:r], letters[r]
    table = alphabet.table
    gens = list(xs)
    gens += [super_commutator(x, y, table) for x in xs]
    gens.append(super_commutator(y, y, table))
    return alphabet, gens

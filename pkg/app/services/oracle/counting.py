"""Enumerative oracles: Lyndon words and PBW monomials."""

import itertools
from typing import Optional

from app.config import ORACLE_WORD_CAP
from app.exceptions import InvalidInput, TooLarge
from app.services.envelope import SignedDimensionSequence


def is_lyndon(word) -> bool:
    """Strictly smaller than every proper rotation."""
    n = len(word)
    return all(word < word[i:] + word[:i] for i in range(1, n))


def lyndon_count(k: int, n: int, word_cap: int = ORACLE_WORD_CAP) -> int:
    """Number of Lyndon words of length n over k letters, by enumeration."""
    if k < 1 or n < 1:
        raise InvalidInput(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    if k**n > word_cap:
        raise TooLarge(f"{k}^{n} words exceed the cap of {word_cap}")
    return sum(1 for word in itertools.product(range(k), repeat=n) if is_lyndon(word))


def pbw_count(sdims: SignedDimensionSequence, exponent_cap: Optional[int], n: int) -> int:
    """Ordered PBW monomials of degree n.

    Every even basis element of weight m contributes exponents 0..exponent_cap
    (unbounded when None), every odd one exponents 0 or 1. Counted element by
    element, independently of the Euler-product code.
    """
    if n < 0:
        raise InvalidInput(f"degree must be >= 0, got {n}")
    if exponent_cap is not None and exponent_cap < 0:
        raise InvalidInput(f"exponent cap must be >= 0, got {exponent_cap}")
    counts = [1] + [0] * n
    for m, (a, b) in enumerate(zip(sdims.even_dims, sdims.odd_dims), start=1):
        if m > n:
            break
        for _ in range(a):
            if exponent_cap is None:
                for d in range(m, n + 1):
                    counts[d] += counts[d - m]
            else:
                counts = [
                    sum(counts[d - j * m] for j in range(exponent_cap + 1) if d - j * m >= 0)
                    for d in range(n + 1)
                ]
        for _ in range(b):
            for d in range(n, m - 1, -1):
                counts[d] += counts[d - m]
    return counts[n]

"""Incremental fraction-free Gaussian elimination over sparse integer rows.

Rows are dictionaries word -> int with the lexicographically largest word as
pivot. A candidate vector is reduced against the stored rows by
cross-multiplication (no division), then divided by its content gcd to keep
entries small. The result is exact rank over ℚ.
"""

import math
from fractions import Fraction
from typing import Dict, Hashable, Mapping

Row = Dict[Hashable, int]


def _integer_row(vector: Mapping[Hashable, Fraction]) -> Row:
    """Clear denominators and divide out the content."""
    denominator = 1
    for c in vector.values():
        denominator = math.lcm(denominator, Fraction(c).denominator)
    row = {k: int(Fraction(c) * denominator) for k, c in vector.items() if c != 0}
    return _primitive(row)


def _primitive(row: Row) -> Row:
    g = 0
    for c in row.values():
        g = math.gcd(g, c)
        if g == 1:
            return row
    if g > 1:
        return {k: c // g for k, c in row.items()}
    return row


class EchelonBasis:
    """Rows in echelon form, keyed by pivot."""

    def __init__(self):
        self.rows: Dict[Hashable, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Mapping[Hashable, Fraction]) -> Row:
        """Residue of ``vector`` modulo the span of the stored rows (up to scale)."""
        v = _integer_row(vector)
        while v:
            pivot = max(v)
            row = self.rows.get(pivot)
            if row is None:
                return v
            a, b = row[pivot], v[pivot]
            out = {k: a * c for k, c in v.items()}
            for k, c in row.items():
                value = out.get(k, 0) - b * c
                if value:
                    out[k] = value
                else:
                    out.pop(k, None)
            v = _primitive(out)
        return v

    def insert(self, vector: Mapping[Hashable, Fraction]) -> bool:
        """Add ``vector`` if independent; return whether the rank grew."""
        residue = self.reduce(vector)
        if not residue:
            return False
        self.rows[max(residue)] = residue
        return True

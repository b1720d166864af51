"""Row-reduced bases over GF(2) with int bitsets.

Each row has a pivot at its lowest set bit and no other row has that bit set,
so the basis of a subspace is unique regardless of insertion order.
Rows optionally carry a *tag*, an int bitmask recording which inserted
generators XOR to that row; this lets callers recover explicit combinations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph_core import ParityVector

DEFAULT_RANK_LIMIT = 20


def _pivot(x: int) -> int:
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class Gf2Basis:
    width: int
    rows: tuple[int, ...] = ()
    tags: tuple[int, ...] = ()
    generators: int = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    @classmethod
    def empty(cls, width: int) -> "Gf2Basis":
        return cls(width)

    @classmethod
    def from_vectors(cls, width: int, vectors: Iterable[ParityVector | int]) -> "Gf2Basis":
        b = cls(width)
        for v in vectors:
            b = b.insert(v)
        return b

    def _bits(self, v: ParityVector | int) -> int:
        if isinstance(v, ParityVector):
            if v.width != self.width:
                raise ValueError(f"width mismatch: {v.width} != {self.width}")
            return v.bits
        if v < 0 or v >> self.width:
            raise ValueError("vector wider than basis")
        return v

    def reduce(self, v: ParityVector | int) -> tuple[int, int]:
        """Residue of v against the basis and the tag of the rows used."""
        x = self._bits(v)
        tag = 0
        for row, t in zip(self.rows, self.tags):
            if x >> _pivot(row) & 1:
                x ^= row
                tag ^= t
        return x, tag

    def insert(self, v: ParityVector | int) -> "Gf2Basis":
        x, tag = self.reduce(v)
        tag ^= 1 << self.generators
        if not x:
            return Gf2Basis(self.width, self.rows, self.tags, self.generators + 1)
        p = _pivot(x)
        rows, tags = [], []
        for row, t in zip(self.rows, self.tags):
            if row >> p & 1:
                row ^= x
                t ^= tag
            rows.append(row)
            tags.append(t)
        # keep rows ordered by pivot so the representation is canonical
        at = sum(1 for r in rows if _pivot(r) < p)
        rows.insert(at, x)
        tags.insert(at, tag)
        return Gf2Basis(self.width, tuple(rows), tuple(tags), self.generators + 1)

    def in_span(self, v: ParityVector | int) -> bool:
        return self.reduce(v)[0] == 0

    def combination(self, v: ParityVector | int) -> int | None:
        """Bitmask of inserted generators (by insertion order) summing to v, or None."""
        x, tag = self.reduce(v)
        return tag if x == 0 else None

    def weight1_in_span(self, colors: Iterable[int] | None = None) -> int | None:
        """Smallest i (optionally restricted to ``colors``) with e_i in the span."""
        allowed = None if colors is None else set(colors)
        for row in self.rows:
            if row & (row - 1) == 0:
                i = _pivot(row)
                if allowed is None or i in allowed:
                    return i
        return None

    def span(self) -> Iterable[int]:
        """Every element of the span, zero first, in Gray-code order."""
        x = 0
        yield x
        for i in range(1, 1 << self.rank):
            x ^= self.rows[(i & -i).bit_length() - 1]
            yield x

    def min_weight(self, rank_limit: int = DEFAULT_RANK_LIMIT) -> int | None:
        """Minimum weight of a nonzero span element by plain enumeration.

        None for the zero space or when rank exceeds ``rank_limit``.
        """
        if self.rank == 0 or self.rank > rank_limit:
            return None
        best = self.width + 1
        it = iter(self.span())
        next(it)
        for x in it:
            w = x.bit_count()
            if w < best:
                best = w
                if best == 1:
                    break
        return best

    def vectors(self) -> list[ParityVector]:
        return [ParityVector(self.width, r) for r in self.rows]


def insert(basis: Gf2Basis, v: ParityVector) -> Gf2Basis:
    return basis.insert(v)


def in_span(basis: Gf2Basis, v: ParityVector) -> bool:
    return basis.in_span(v)


def weight1_in_span(basis: Gf2Basis) -> int | None:
    return basis.weight1_in_span()


def min_weight(basis: Gf2Basis, rank_limit: int = DEFAULT_RANK_LIMIT) -> int | None:
    return basis.min_weight(rank_limit)

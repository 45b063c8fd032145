"""GF(2) linear algebra on bit-packed rows (one Python int per row)."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .gf2_exterior import ExtElement, bidegree_of

__all__ = [
    "HomogeneityError",
    "EchelonBasis",
    "Gf2Matrix",
    "monomial_basis",
    "matrix_from_elements",
    "element_vector",
    "gf2_rank",
    "rank",
    "quotient_dim",
    "in_span",
]


class HomogeneityError(ValueError):
    """Raised when elements of mixed bidegree are packed into one matrix."""


class EchelonBasis:
    """Incremental row-echelon basis of a GF(2) row space."""

    __slots__ = ("_pivots",)

    def __init__(self, rows: Iterable[int] = ()):
        self._pivots: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def reduce(self, v: int) -> int:
        while v:
            row = self._pivots.get(v.bit_length())
            if row is None:
                break
            v ^= row
        return v

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if v == 0:
            return False
        self._pivots[v.bit_length()] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def copy(self) -> "EchelonBasis":
        clone = EchelonBasis()
        clone._pivots = dict(self._pivots)
        return clone

    @property
    def rank(self) -> int:
        return len(self._pivots)


def gf2_rank(rows: Iterable[int]) -> int:
    return EchelonBasis(rows).rank


def monomial_basis(degree: tuple[int, int], n: int) -> list[tuple[int, int]]:
    """All squarefree (xmask, ymask) pairs of the given bidegree, canonical order."""
    dx, dy = degree
    if dx < 0 or dy < 0 or dx > n or dy > n:
        return []
    xmasks = sorted(sum(1 << b for b in bits) for bits in combinations(range(n), dx))
    ymasks = sorted(sum(1 << b for b in bits) for bits in combinations(range(n), dy))
    return [(xm, ym) for xm in xmasks for ym in ymasks]


@dataclass
class Gf2Matrix:
    """Rows are packed ints; bit j of a row is the coefficient of column j."""

    rows: list[int]
    columns: list[tuple[int, int]]
    column_index: dict[tuple[int, int], int] = field(repr=False)

    @property
    def ncols(self) -> int:
        return len(self.columns)


def element_vector(e: ExtElement, column_index: dict[tuple[int, int], int]) -> int:
    v = 0
    for t in e.term_masks:
        v |= 1 << column_index[t]
    return v


def matrix_from_elements(
    elements: Sequence[ExtElement], degree: tuple[int, int], n: int
) -> Gf2Matrix:
    """Pack homogeneous elements of one bidegree into a matrix.

    Zero elements become zero rows; any nonzero element of a different
    bidegree raises ``HomogeneityError``.
    """
    for e in elements:
        bd = bidegree_of(e)
        if bd != "any" and bd != degree:
            raise HomogeneityError(f"element of bidegree {bd} in a matrix of bidegree {degree}")
    columns = monomial_basis(degree, n)
    column_index = {c: j for j, c in enumerate(columns)}
    rows = [element_vector(e, column_index) for e in elements]
    return Gf2Matrix(rows=rows, columns=columns, column_index=column_index)


def rank(m: Gf2Matrix) -> int:
    return gf2_rank(m.rows)


def quotient_dim(
    span_big: Sequence[ExtElement],
    span_small: Sequence[ExtElement],
    degree: tuple[int, int],
    n: int,
) -> int:
    """dim(span_big + span_small) - dim(span_small)."""
    columns = monomial_basis(degree, n)
    column_index = {c: j for j, c in enumerate(columns)}
    small = EchelonBasis()
    for e in span_small:
        _check_degree(e, degree)
        small.add(element_vector(e, column_index))
    base = small.rank
    for e in span_big:
        _check_degree(e, degree)
        small.add(element_vector(e, column_index))
    return small.rank - base


def in_span(
    e: ExtElement,
    basis: Sequence[ExtElement],
    degree: tuple[int, int],
    n: int,
) -> bool:
    columns = monomial_basis(degree, n)
    column_index = {c: j for j, c in enumerate(columns)}
    eb = EchelonBasis()
    for b in basis:
        _check_degree(b, degree)
        eb.add(element_vector(b, column_index))
    _check_degree(e, degree)
    return eb.contains(element_vector(e, column_index))


def _check_degree(e: ExtElement, degree: tuple[int, int]) -> None:
    bd = bidegree_of(e)
    if bd != "any" and bd != degree:
        raise HomogeneityError(f"element of bidegree {bd}, expected {degree}")

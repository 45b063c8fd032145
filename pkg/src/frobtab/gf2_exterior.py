"""Bit-packed arithmetic in the squarefree quotient of k[x1..xn, y1..yn] over GF(2).

The ground ring is the polynomial ring on two blocks of n variables modulo
the squares of all variables, in characteristic 2.  In characteristic 2 this
quotient coincides with the exterior algebra on the 2n variables, so there is
no sign bookkeeping: a monomial is a pair of bitmasks (x block, y block), a
general element is a GF(2) set of monomials, and addition is symmetric
difference of term sets.

Variables are indexed 1..n with n <= 32.  Bit i-1 of a mask records the
presence of the variable with index i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

__all__ = [
    "MAX_N",
    "DegenerateMinorError",
    "MismatchedGroundSetError",
    "Monomial",
    "ExtElement",
    "mono_mul",
    "elem_add",
    "elem_mul",
    "x_var",
    "y_var",
    "monomial",
    "minor",
    "bidegree_of",
    "mask_of",
    "indices_of",
]

MAX_N = 32


class DegenerateMinorError(ValueError):
    """Raised when a 2x2 minor is requested on a repeated index."""


class MismatchedGroundSetError(ValueError):
    """Raised when operands live over different variable counts n."""


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise ValueError(f"variable count n must be an integer in 1..{MAX_N}, got {n!r}")


def _same_n(n1: int, n2: int) -> int:
    if n1 != n2:
        raise MismatchedGroundSetError(f"operands use different variable counts: {n1} != {n2}")
    return n1


def mask_of(indices: Iterable[int], n: int) -> int:
    """Pack a set of 1-based variable indices into a bitmask."""
    mask = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated variable index {i} (squares vanish)")
        mask |= bit
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into sorted 1-based variable indices."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class Monomial:
    """A squarefree monomial: one bitmask per variable block."""

    xmask: int
    ymask: int
    n: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        full = (1 << self.n) - 1
        if self.xmask & ~full or self.ymask & ~full:
            raise ValueError(f"mask out of range for n={self.n}")

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.xmask.bit_count(), self.ymask.bit_count())

    @property
    def degree(self) -> int:
        return self.xmask.bit_count() + self.ymask.bit_count()

    def sort_key(self) -> tuple[int, int]:
        """Canonical term order: compare (xmask, ymask) as integers, x most significant."""
        return (self.xmask, self.ymask)

    def __str__(self) -> str:
        if self.xmask == 0 and self.ymask == 0:
            return "1"
        parts = [f"x{i}" for i in indices_of(self.xmask)]
        parts += [f"y{i}" for i in indices_of(self.ymask)]
        return "".join(parts)


def mono_mul(m1: Monomial, m2: Monomial) -> "ExtElement":
    """Product of two monomials; zero when any variable would square."""
    n = _same_n(m1.n, m2.n)
    if m1.xmask & m2.xmask or m1.ymask & m2.ymask:
        return ExtElement.zero(n)
    return ExtElement(((m1.xmask | m2.xmask, m1.ymask | m2.ymask),), n)


class ExtElement:
    """A GF(2) linear combination of squarefree monomials.

    Immutable.  Supports ``+`` (symmetric difference of term sets) and ``*``
    (distributed monomial products, accumulated mod 2).
    """

    __slots__ = ("_terms", "n", "_hash")

    def __init__(self, terms: Iterable[tuple[int, int]], n: int):
        _check_n(n)
        self._terms = frozenset(terms)
        self.n = n
        full = (1 << n) - 1
        for xm, ym in self._terms:
            if xm & ~full or ym & ~full:
                raise ValueError(f"term mask out of range for n={n}")
        self._hash = hash((self._terms, n))

    @classmethod
    def zero(cls, n: int) -> "ExtElement":
        return cls((), n)

    @classmethod
    def one(cls, n: int) -> "ExtElement":
        return cls(((0, 0),), n)

    @classmethod
    def from_monomial(cls, m: Monomial) -> "ExtElement":
        return cls(((m.xmask, m.ymask),), m.n)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def term_masks(self) -> frozenset[tuple[int, int]]:
        return self._terms

    def terms(self) -> list[Monomial]:
        """Terms as Monomials in the canonical order."""
        return [Monomial(xm, ym, self.n) for xm, ym in sorted(self._terms)]

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.terms())

    def __add__(self, other: "ExtElement") -> "ExtElement":
        if not isinstance(other, ExtElement):
            return NotImplemented
        n = _same_n(self.n, other.n)
        return ExtElement(self._terms ^ other._terms, n)

    def __mul__(self, other: "ExtElement") -> "ExtElement":
        if not isinstance(other, ExtElement):
            return NotImplemented
        n = _same_n(self.n, other.n)
        acc: set[tuple[int, int]] = set()
        for x1, y1 in self._terms:
            for x2, y2 in other._terms:
                if x1 & x2 or y1 & y2:
                    continue
                t = (x1 | x2, y1 | y2)
                if t in acc:
                    acc.discard(t)
                else:
                    acc.add(t)
        return ExtElement(acc, n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(str(Monomial(xm, ym, self.n)) for xm, ym in sorted(self._terms))

    def __repr__(self) -> str:
        return f"ExtElement({self}, n={self.n})"


def elem_add(e1: ExtElement, e2: ExtElement) -> ExtElement:
    return e1 + e2


def elem_mul(e1: ExtElement, e2: ExtElement) -> ExtElement:
    return e1 * e2


def x_var(i: int, n: int) -> ExtElement:
    """The element x_i."""
    return ExtElement(((mask_of([i], n), 0),), n)


def y_var(i: int, n: int) -> ExtElement:
    """The element y_i."""
    return ExtElement(((0, mask_of([i], n)),), n)


def monomial(xs: Iterable[int], ys: Iterable[int], n: int) -> ExtElement:
    """The monomial with x indices ``xs`` and y indices ``ys`` as an element."""
    return ExtElement(((mask_of(xs, n), mask_of(ys, n)),), n)


def minor(i: int, j: int, n: int) -> ExtElement:
    """The 2x2 minor x_i*y_j + x_j*y_i.

    Symmetric in its arguments (characteristic 2); a repeated index is a
    degenerate minor and raises ``DegenerateMinorError``.
    """
    if i == j:
        raise DegenerateMinorError(f"minor on repeated index {i}")
    bi = mask_of([i], n)
    bj = mask_of([j], n)
    return ExtElement(((bi, bj), (bj, bi)), n)


def bidegree_of(e: ExtElement) -> Union[tuple[int, int], str]:
    """Common (x-degree, y-degree) of all terms.

    Returns the string ``"inhomogeneous"`` when terms disagree and ``"any"``
    for the zero element.
    """
    degs = {(xm.bit_count(), ym.bit_count()) for xm, ym in e.term_masks}
    if not degs:
        return "any"
    if len(degs) > 1:
        return "inhomogeneous"
    return degs.pop()

"""Standard monomials attached to two-row tableaux, and the cap-2 basis sets.

A tableau of shape (r1, d) together with a split point ``a`` encodes the
element

    product of column minors [row1[i], row2[i]]  (i = 1..d)
    times x-variables at row1 positions d+1..a
    times y-variables at row1 positions a+1..r1.

For an index triple (a, b, d) the basis of the ideal-power subquotient in
bidegree (a, b) is indexed by cap-2 semistandard tableaux through a
case-split rectification map that turns them into classical semistandard
tableaux by swapping maximal blocks of identical columns.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2_exterior import ExtElement, minor, x_var, y_var
from .symfunc import CASE_ALL_EQUAL, CASE_GENERAL, CASE_OFF_BY_ONE, classify_triple
from .tableaux import Tableau, enumerate_tableaux, is_2ssyt, rows_are_ssyt

__all__ = [
    "DomainError",
    "IndexTriple",
    "case_tag",
    "standard_monomial",
    "rectify",
    "two_standard_monomial",
    "basis_index_set",
    "is_two_straight",
    "rows_two_straight",
]


class DomainError(ValueError):
    """Raised when a tableau is outside the domain of a construction map."""


@dataclass(frozen=True)
class IndexTriple:
    """Bidegree (a, b) and ideal power d, with the alphabet bound n."""

    a: int
    b: int
    d: int
    n: int

    def __post_init__(self) -> None:
        if not self.a >= self.b >= self.d >= 0:
            raise DomainError(f"need a >= b >= d >= 0, got {(self.a, self.b, self.d)}")
        if not 1 <= self.n:
            raise DomainError("need n >= 1")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.a + self.b - self.d, self.d)

    def __str__(self) -> str:
        return f"(a={self.a}, b={self.b}, d={self.d}, n={self.n})"


def case_tag(idx: IndexTriple) -> str:
    return classify_triple(idx.a, idx.b, idx.d)


def standard_monomial(t: Tableau, a: int) -> ExtElement:
    """The element encoded by a tableau with split point ``a``.

    Returns the zero element when the algebra cancels (degenerate column,
    repeated minor, repeated tail variable); it never raises for that.
    """
    r1, d = t.shape
    if not d <= a <= r1:
        raise DomainError(f"split point a={a} outside columns {d}..{r1} of shape {t.shape}")
    out = ExtElement.one(t.n)
    for i in range(d):
        u, w = t.row1[i], t.row2[i]
        if u == w:
            return ExtElement.zero(t.n)
        out = out * minor(u, w, t.n)
    for i in range(d, a):
        out = out * x_var(t.row1[i], t.n)
    for i in range(a, r1):
        out = out * y_var(t.row1[i], t.n)
    return out


def _identical_blocks(row1: list[int], row2: list[int]) -> list[tuple[int, int]]:
    """Maximal runs [i, k] (1-based, inclusive) of columns with equal entries."""
    blocks = []
    j = 1
    while j <= len(row2):
        if row1[j - 1] == row2[j - 1]:
            i = j
            while j + 1 <= len(row2) and row1[j] == row2[j]:
                j += 1
            blocks.append((i, j))
        j += 1
    return blocks


def rectify(t: Tableau, idx: IndexTriple) -> Tableau:
    """Rewrite a cap-2 semistandard tableau as a classical semistandard one.

    Case split on the triple:

    * generic: shape (a+b-d, d); every maximal identical-column block
      [i..k] swaps row1[i+1..k+1] with row2[i..k].
    * a = b = d: shape (a, a) with distinct rows; interior blocks swap as
      above, and the block reaching the last column (which starts at i >= 2)
      swaps row1[i..a] with row2[i-1..a-1].
    * a-1 = b-1 = d: shape (a+1, a-1) swaps as in the generic case; the
      identical-row square tableau first becomes the filling
      (row1 + last entry / row1 minus last entry) and is then swapped.
    """
    if t.n != idx.n:
        raise DomainError(f"tableau over n={t.n} but index triple over n={idx.n}")
    case = case_tag(idx)
    a, d = idx.a, idx.d
    row1, row2 = list(t.row1), list(t.row2)
    if case == CASE_OFF_BY_ONE and t.shape == (a, a):
        if t.row1 != t.row2 or not is_2ssyt(t):
            raise DomainError(f"square input must be an identical-row cap-2 tableau: {t}")
        row1 = list(t.row1) + [t.row1[-1]]
        row2 = list(t.row1[:-1])
    else:
        if t.shape != idx.shape or not is_2ssyt(t):
            raise DomainError(f"tableau {t} not cap-2 semistandard of shape {idx.shape}")
        if case == CASE_ALL_EQUAL and t.row1 == t.row2:
            raise DomainError(f"identical rows are excluded for a=b=d: {t}")

    new1, new2 = row1[:], row2[:]
    square = case == CASE_ALL_EQUAL
    for i, k in _identical_blocks(row1, row2):
        if square and k == len(row1):
            # block reaches the last column of a square shape; i >= 2 because
            # the rows are not identical
            for j in range(i, k + 1):
                new1[j - 1] = row2[j - 2]
            for j in range(i - 1, k):
                new2[j - 1] = row1[j]
        else:
            for j in range(i + 1, k + 2):
                new1[j - 1] = row2[j - 2]
            for j in range(i, k + 1):
                new2[j - 1] = row1[j]
    return Tableau(tuple(new1), tuple(new2), t.n)


def two_standard_monomial(t: Tableau, idx: IndexTriple) -> ExtElement:
    """Standard monomial of the rectified tableau."""
    return standard_monomial(rectify(t, idx), idx.a)


def basis_index_set(idx: IndexTriple) -> list[Tableau]:
    """The cap-2 tableaux indexing the subquotient basis for this triple."""
    case = case_tag(idx)
    if case == CASE_ALL_EQUAL:
        return [
            t
            for t in enumerate_tableaux((idx.a, idx.a), idx.n, "2ssyt")
            if t.row1 != t.row2
        ]
    if case == CASE_OFF_BY_ONE:
        out = list(enumerate_tableaux((idx.a + 1, idx.a - 1), idx.n, "2ssyt"))
        out += [
            t
            for t in enumerate_tableaux((idx.a, idx.a), idx.n, "2ssyt")
            if t.row1 == t.row2
        ]
        return out
    return list(enumerate_tableaux(idx.shape, idx.n, "2ssyt"))


def _multiplicity_ok(A: tuple[int, ...], B: tuple[int, ...], d: int) -> bool:
    counts: dict[int, int] = {}
    for v in A + B:
        counts[v] = counts.get(v, 0) + 1
        if counts[v] > 2:
            return False
    cols = [(A[i], B[i]) for i in range(d)]
    return len(set(cols)) == d


def is_two_straight(t: Tableau, idx: IndexTriple) -> bool:
    """Whether a classical semistandard tableau indexes a rectified basis element.

    Characterized by explicit inequalities on the rows; equivalent (and
    tested equivalent) to membership in the image of ``rectify``.  For the
    triple (1,1,0) every weakly increasing pair is straight: the pair (v,v)
    is the rectification of the identical-row singleton and its monomial
    x_v*y_v does not lie in the ideal, so the generic tail-strictness rule is
    deliberately not applied there.
    """
    if t.n != idx.n:
        raise DomainError(f"tableau over n={t.n} but index triple over n={idx.n}")
    a, b, d = idx.a, idx.b, idx.d
    r1 = a + b - d
    if t.shape != (r1, d):
        raise DomainError(f"tableau shape {t.shape}, expected {(r1, d)}")
    return rows_two_straight(t.row1, t.row2, a, b, d)


def rows_two_straight(
    A: tuple[int, ...], B: tuple[int, ...], a: int, b: int, d: int
) -> bool:
    """Raw-row version of ``is_two_straight`` (no shape or alphabet checks)."""
    r1 = a + b - d
    if not rows_are_ssyt(A, B):
        return False
    if (a, b, d) == (1, 1, 0):
        return True
    if not _multiplicity_ok(A, B, d):
        return False

    if a == b == d:
        # square variant
        for i0 in range(1, a - 1):
            if A[i0] == A[i0 + 1] and not B[i0 - 1] < A[i0]:
                return False
        for i0 in range(a - 1):
            if A[i0] != A[i0 + 1]:
                continue
            J = [j0 for j0 in range(i0, a - 2) if B[j0] != A[j0 + 2]]
            if J:
                if not B[J[0]] < A[J[0] + 2]:
                    return False
            elif not B[a - 2] < B[a - 1]:
                return False
        for i0 in range(a - 2):
            if not B[i0] < B[i0 + 1]:
                return False
        if a >= 2 and B[a - 2] == B[a - 1]:
            Jp = [j0 for j0 in range(2, a) if B[j0 - 2] != A[j0]]
            if Jp:
                j0 = max(Jp)
                if not B[j0 - 2] < A[j0]:
                    return False
            elif not A[0] < A[1]:
                return False
        return True

    # non-square variant
    for i0 in range(1, d):
        if A[i0] == A[i0 + 1] and not B[i0 - 1] < A[i0]:
            return False
    for i0 in range(d):
        if A[i0] != A[i0 + 1]:
            continue
        J = [j0 for j0 in range(i0, d) if j0 + 2 <= r1 - 1 and B[j0] != A[j0 + 2]]
        if J:
            if not B[J[0]] < A[J[0] + 2]:
                return False
        elif a - 1 == b == d:
            pass
        elif a - 1 == b - 1 == d and i0 == 0:
            pass
        else:
            return False
    for i0 in range(d - 1):
        if not B[i0] < B[i0 + 1]:
            return False
    for i0 in range(d, r1 - 1):
        if not A[i0] < A[i0 + 1]:
            return False
    return True

"""Two-row tableaux on the alphabet {1..n}, with the cap-2 semistandard variant.

A ``Tableau`` is an arbitrary two-row filling (validation of monotonicity is
left to the predicates, since rewriting passes intermediate fillings around).
Two predicates matter:

* ``is_ssyt`` — the classical condition: rows weakly increase, columns
  strictly increase.
* ``is_2ssyt`` — the cap-2 variant: rows and columns weakly increase, no
  entry repeats in a row, and every column with equal entries passes a
  run-length scan.  With exponent cap 2 the scan is always satisfied; it is
  implemented literally anyway and cross-checked against the transpose
  oracle (a filling is cap-2 semistandard exactly when its transposed
  filling is classically semistandard).

The module also provides a generic column-strict enumerator for arbitrary
partition shapes, which serves as the independent oracle for counts and for
classical Schur polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "Tableau",
    "is_ssyt",
    "is_2ssyt",
    "rows_are_ssyt",
    "enumerate_tableaux",
    "weight",
    "transpose_shape",
    "transpose_tableau",
    "is_ssyt_rows",
    "enumerate_column_strict",
    "count_column_strict",
    "parse_tableau",
    "format_tableau",
]


@dataclass(frozen=True)
class Tableau:
    """A two-row filling; ``row2`` may be shorter than ``row1``."""

    row1: tuple[int, ...]
    row2: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "row1", tuple(self.row1))
        object.__setattr__(self, "row2", tuple(self.row2))
        if len(self.row2) > len(self.row1):
            raise ValueError("second row longer than first")
        if not 1 <= self.n:
            raise ValueError("need n >= 1")
        for v in self.row1 + self.row2:
            if not 1 <= v <= self.n:
                raise ValueError(f"entry {v} out of range 1..{self.n}")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row1), len(self.row2))

    def __str__(self) -> str:
        return format_tableau(self)


def rows_are_ssyt(row1: Sequence[int], row2: Sequence[int]) -> bool:
    """Classical semistandard check on raw rows."""
    if any(row1[i] > row1[i + 1] for i in range(len(row1) - 1)):
        return False
    if any(row2[i] > row2[i + 1] for i in range(len(row2) - 1)):
        return False
    return all(row1[i] < row2[i] for i in range(len(row2)))


def is_ssyt(t: Tableau) -> bool:
    return rows_are_ssyt(t.row1, t.row2)


def is_2ssyt(t: Tableau) -> bool:
    """Cap-2 semistandard: weakly increasing rows and columns, no repeat in
    a row, and the run-length scan on every column with equal entries."""
    r1, r2 = t.row1, t.row2
    # (1) rows and columns weakly increase
    if any(r1[i] > r1[i + 1] for i in range(len(r1) - 1)):
        return False
    if any(r2[i] > r2[i + 1] for i in range(len(r2) - 1)):
        return False
    if any(r1[i] > r2[i] for i in range(len(r2))):
        return False
    # (2) an entry may appear at most cap-1 = 1 times per row
    if any(r1[i] == r1[i + 1] for i in range(len(r1) - 1)):
        return False
    if any(r2[i] == r2[i + 1] for i in range(len(r2) - 1)):
        return False
    # (3) run scan for columns with equal entries: the run of the value
    # rightward in row 1 plus its run leftward in row 2 must reach the cap.
    for j in range(len(r2)):
        if r1[j] == r2[j]:
            r = j
            while r + 1 < len(r1) and r1[r + 1] == r1[j]:
                r += 1
            s = j
            while s - 1 >= 0 and r2[s - 1] == r2[j]:
                s -= 1
            if (r - j + 1) + (j - s + 1) < 2:
                return False
    return True


def weight(t: Tableau) -> tuple[int, ...]:
    """Multiplicity of each letter 1..n over both rows."""
    w = [0] * t.n
    for v in t.row1 + t.row2:
        w[v - 1] += 1
    return tuple(w)


def _increasing_rows(length: int, n: int, strict: bool) -> Iterator[tuple[int, ...]]:
    """All (weakly or strictly) increasing rows, in lexicographic order."""
    row: list[int] = []

    def rec(pos: int, lo: int) -> Iterator[tuple[int, ...]]:
        if pos == length:
            yield tuple(row)
            return
        for v in range(lo, n + 1):
            row.append(v)
            yield from rec(pos + 1, v + 1 if strict else v)
            row.pop()

    return rec(0, 1)


def enumerate_tableaux(shape: tuple[int, int], n: int, kind: str = "ssyt") -> list[Tableau]:
    """All tableaux of the given two-row shape, sorted lexicographically.

    ``kind`` is ``"ssyt"`` (classical) or ``"2ssyt"`` (cap-2).  The result is
    ordered by (row1, row2) and free of duplicates by construction.
    """
    if kind not in ("ssyt", "2ssyt"):
        raise ValueError(f"unknown tableau kind {kind!r}")
    len1, len2 = shape
    if len2 > len1 or len2 < 0:
        raise ValueError(f"invalid two-row shape {shape}")
    strict = kind == "2ssyt"
    out: list[Tableau] = []
    for row1 in _increasing_rows(len1, n, strict):
        row2: list[int] = []

        def rec(pos: int) -> None:
            if pos == len2:
                out.append(Tableau(row1, tuple(row2), n))
                return
            if strict:
                lo = max(row1[pos], row2[-1] + 1 if row2 else 1)
            else:
                lo = max(row1[pos] + 1, row2[-1] if row2 else 1)
            for v in range(lo, n + 1):
                row2.append(v)
                rec(pos + 1)
                row2.pop()

        rec(0)
    return out


def transpose_shape(shape: tuple[int, int]) -> tuple[int, ...]:
    """Conjugate partition of a two-row shape: (2,...,2,1,...,1)."""
    len1, len2 = shape
    return (2,) * len2 + (1,) * (len1 - len2)


def transpose_tableau(t: Tableau) -> tuple[tuple[int, ...], ...]:
    """The transposed filling: column j of ``t`` becomes row j."""
    len1, len2 = t.shape
    rows = []
    for j in range(len1):
        if j < len2:
            rows.append((t.row1[j], t.row2[j]))
        else:
            rows.append((t.row1[j],))
    return tuple(rows)


def is_ssyt_rows(rows: Sequence[Sequence[int]]) -> bool:
    """Classical semistandard check for an arbitrary partition-shaped filling."""
    lengths = [len(r) for r in rows]
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    for r in rows:
        if any(r[i] > r[i + 1] for i in range(len(r) - 1)):
            return False
    for i in range(1, len(rows)):
        for j in range(len(rows[i])):
            if rows[i - 1][j] >= rows[i][j]:
                return False
    return True


def enumerate_column_strict(partition: Sequence[int], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All classical semistandard fillings of a partition shape on {1..n}.

    Independent of the two-row machinery; used as the counting oracle and
    for classical Schur polynomials.  Yields fillings as tuples of rows.
    """
    shape = tuple(partition)
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)) or any(p < 0 for p in shape):
        raise ValueError(f"not a partition: {partition}")
    shape = tuple(p for p in shape if p > 0)
    if not shape:
        yield ()
        return
    rows: list[list[int]] = [[] for _ in shape]

    def rec(i: int, j: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == len(shape):
            yield tuple(tuple(r) for r in rows)
            return
        ni, nj = (i, j + 1) if j + 1 < shape[i] else (i + 1, 0)
        lo = 1
        if j > 0:
            lo = rows[i][j - 1]
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, n + 1):
            rows[i].append(v)
            yield from rec(ni, nj)
            rows[i].pop()

    yield from rec(0, 0)


def count_column_strict(partition: Sequence[int], n: int) -> int:
    return sum(1 for _ in enumerate_column_strict(partition, n))


def format_tableau(t: Tableau) -> str:
    """Wire format ``"1 1 2 3 / 2 3 4 5"``; an empty side is left blank."""
    return (" ".join(map(str, t.row1)) + " / " + " ".join(map(str, t.row2))).strip()


def parse_tableau(text: str, n: int) -> Tableau:
    parts = text.split("/")
    if len(parts) != 2:
        raise ValueError(f"tableau text must contain exactly one '/': {text!r}")
    row1 = tuple(int(v) for v in parts[0].split())
    row2 = tuple(int(v) for v in parts[1].split())
    return Tableau(row1, row2, n)

"""Symmetric polynomials in n variables with integer coefficients.

Provides the squarefree-exponent truncations used by the character
computations: ``h_squarefree(d, n)`` is the complete homogeneous sum
restricted to exponents below 2 (hence equal to the elementary symmetric
polynomial, which is implemented separately by the Newton-style recurrence
and used as the cross-check), and ``schur_squarefree`` is the 2x2
Jacobi-Trudi determinant in those truncations.

Also home to the promotion/demotion bijections between the two families of
two-row tableau sets whose alternating weight sum reproduces the distinct-row
character.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .tableaux import (
    Tableau,
    enumerate_column_strict,
    enumerate_tableaux,
    is_2ssyt,
    weight,
)

__all__ = [
    "SymPoly",
    "elementary",
    "h_squarefree",
    "schur_squarefree",
    "schur",
    "tableau_term",
    "classify_triple",
    "expected_character",
    "alternating_sum_matches_distinct_rows",
    "promotable_tableaux",
    "unpromotable_tableaux",
    "promote",
    "demote",
    "is_symmetric",
]

CASE_GENERAL = "general"
CASE_ALL_EQUAL = "all_equal"
CASE_OFF_BY_ONE = "off_by_one"


class SymPoly:
    """A polynomial in t1..tn over the integers, stored sparsely."""

    __slots__ = ("_coeffs", "n")

    def __init__(self, coeffs: Mapping[tuple[int, ...], int], n: int):
        if n < 1:
            raise ValueError("need n >= 1")
        self.n = n
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in coeffs.items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for n={n}")
            if c:
                clean[exps] = c
        self._coeffs = clean

    @classmethod
    def zero(cls, n: int) -> "SymPoly":
        return cls({}, n)

    @classmethod
    def one(cls, n: int) -> "SymPoly":
        return cls({(0,) * n: 1}, n)

    @classmethod
    def variable(cls, i: int, n: int) -> "SymPoly":
        exps = [0] * n
        exps[i - 1] = 1
        return cls({tuple(exps): 1}, n)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, exps: Sequence[int]) -> int:
        return self._coeffs.get(tuple(exps), 0)

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._coeffs.items())

    def _binop(self, other: "SymPoly", sign: int) -> "SymPoly":
        if not isinstance(other, SymPoly):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"mixed variable counts: {self.n} != {other.n}")
        out = dict(self._coeffs)
        for exps, c in other._coeffs.items():
            out[exps] = out.get(exps, 0) + sign * c
        return SymPoly(out, self.n)

    def __add__(self, other: "SymPoly") -> "SymPoly":
        return self._binop(other, 1)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self._binop(other, -1)

    def __neg__(self) -> "SymPoly":
        return SymPoly({e: -c for e, c in self._coeffs.items()}, self.n)

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        if not isinstance(other, SymPoly):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"mixed variable counts: {self.n} != {other.n}")
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SymPoly(out, self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    def evaluate_at_ones(self) -> int:
        """Sum of coefficients, i.e. the value at t1 = ... = tn = 1."""
        return sum(self._coeffs.values())

    def to_json_entries(self) -> list[dict]:
        return [{"exps": list(e), "coeff": c} for e, c in self.items()]

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for exps, c in self.items():
            vars_ = "*".join(
                f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            if not vars_:
                parts.append(str(c))
            elif c == 1:
                parts.append(vars_)
            elif c == -1:
                parts.append(f"-{vars_}")
            else:
                parts.append(f"{c}*{vars_}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SymPoly({self}, n={self.n})"


def is_symmetric(p: SymPoly) -> bool:
    """Invariance under all adjacent variable swaps."""
    for i in range(p.n - 1):
        swapped: dict[tuple[int, ...], int] = {}
        for exps, c in p.items():
            e = list(exps)
            e[i], e[i + 1] = e[i + 1], e[i]
            swapped[tuple(e)] = c
        if SymPoly(swapped, p.n) != p:
            return False
    return True


def elementary(d: int, n: int) -> SymPoly:
    """Elementary symmetric polynomial e_d via the one-variable-at-a-time recurrence."""
    if d < 0:
        return SymPoly.zero(n)
    dp = [SymPoly.one(n)] + [SymPoly.zero(n)] * d
    for k in range(1, n + 1):
        tk = SymPoly.variable(k, n)
        for j in range(min(d, k), 0, -1):
            dp[j] = dp[j] + tk * dp[j - 1]
    return dp[d]


def h_squarefree(d: int, n: int) -> SymPoly:
    """Complete homogeneous sum of degree d restricted to squarefree exponents.

    Defined by direct enumeration of the exponent vectors; agrees with
    ``elementary(d, n)``, which is computed differently.
    """
    if d < 0:
        return SymPoly.zero(n)
    coeffs: dict[tuple[int, ...], int] = {}
    for bits in combinations(range(n), d):
        exps = [0] * n
        for b in bits:
            exps[b] = 1
        coeffs[tuple(exps)] = 1
    return SymPoly(coeffs, n)


def schur_squarefree(r1: int, r2: int, n: int) -> SymPoly:
    """Two-row Jacobi-Trudi determinant in the squarefree truncations."""
    return h_squarefree(r1, n) * h_squarefree(r2, n) - h_squarefree(r1 + 1, n) * h_squarefree(
        r2 - 1, n
    )


def schur(partition: Sequence[int], n: int) -> SymPoly:
    """Classical Schur polynomial as the weight sum over column-strict fillings."""
    coeffs: dict[tuple[int, ...], int] = {}
    for filling in enumerate_column_strict(partition, n):
        w = [0] * n
        for row in filling:
            for v in row:
                w[v - 1] += 1
        w = tuple(w)
        coeffs[w] = coeffs.get(w, 0) + 1
    return SymPoly(coeffs, n)


def tableau_term(t: Tableau) -> SymPoly:
    """The monomial t^weight of a tableau."""
    return SymPoly({weight(t): 1}, t.n)


def classify_triple(a: int, b: int, d: int) -> str:
    """Case split driving both the basis construction and the character formula.

    The degenerate triple (0,0,0) counts as generic: its graded piece is the
    ground field, with the empty tableau as basis and character 1.
    """
    if not a >= b >= d >= 0:
        raise ValueError(f"need a >= b >= d >= 0, got {(a, b, d)}")
    if a == b == d and a >= 1:
        return CASE_ALL_EQUAL
    if a - 1 == b - 1 == d:
        return CASE_OFF_BY_ONE
    return CASE_GENERAL


def expected_character(a: int, b: int, d: int, n: int) -> SymPoly:
    """Predicted character of the (d, d+1) ideal-power subquotient in bidegree (a, b)."""
    case = classify_triple(a, b, d)
    if case == CASE_ALL_EQUAL:
        out = SymPoly.zero(n)
        for j in range(1, a + 1):
            term = schur_squarefree(a + j, a - j, n)
            out = out + term if j % 2 == 1 else out - term
        return out
    if case == CASE_OFF_BY_ONE:
        out = schur_squarefree(a, a, n)
        for j in range(2, a + 1):
            term = schur_squarefree(a + j, a - j, n)
            out = out + term if j % 2 == 0 else out - term
        return out
    return schur_squarefree(a + b - d, d, n)


def _shape_params(t: Tableau) -> tuple[int, int]:
    """Recover (a, i) from a shape (a+i, a-i)."""
    r1, r2 = t.shape
    if (r1 + r2) % 2 or (r1 - r2) % 2:
        raise ValueError(f"shape {t.shape} is not of the form (a+i, a-i)")
    return ((r1 + r2) // 2, (r1 - r2) // 2)


def _max_disagreement(row1: Sequence[int], row2: Sequence[int], offset: int):
    """Largest 1-based k with row2[k] != row1[k+offset], or None."""
    for k in range(len(row2), 0, -1):
        if row2[k - 1] != row1[k + offset - 1]:
            return k
    return None


def promotable_tableaux(a: int, i: int, n: int) -> list[Tableau]:
    """Cap-2 tableaux of shape (a+i, a-i) whose last disagreement overhangs.

    Disagreement compares row2[k] with row1[k+2i]; the tableau is promotable
    when some k disagrees and the largest such k has row2[k] > row1[k+2i].
    At i = 0 this is exactly the distinct-row condition.
    """
    out = []
    for t in enumerate_tableaux((a + i, a - i), n, "2ssyt"):
        k = _max_disagreement(t.row1, t.row2, 2 * i)
        if k is not None and t.row2[k - 1] > t.row1[k + 2 * i - 1]:
            out.append(t)
    return out


def unpromotable_tableaux(a: int, i: int, n: int) -> list[Tableau]:
    """Complement of the promotable set inside the cap-2 tableaux of (a+i, a-i)."""
    out = []
    for t in enumerate_tableaux((a + i, a - i), n, "2ssyt"):
        k = _max_disagreement(t.row1, t.row2, 2 * i)
        if k is None or t.row2[k - 1] < t.row1[k + 2 * i - 1]:
            out.append(t)
    return out


def _reslice(row1: Sequence[int], row2: Sequence[int], j: int, twoi: int, n: int) -> Tableau:
    new1 = tuple(row1[: j + twoi]) + tuple(row2[j - 1 :])
    new2 = tuple(row2[: j - 1]) + tuple(row1[j + twoi :])
    return Tableau(new1, new2, n)


def promote(t: Tableau) -> Tableau:
    """Move the overhanging tail of row 2 up: shape (a+i, a-i) -> (a+i+1, a-i-1)."""
    a, i = _shape_params(t)
    if not is_2ssyt(t):
        raise ValueError(f"not a cap-2 semistandard tableau: {t}")
    k = _max_disagreement(t.row1, t.row2, 2 * i)
    if k is None or t.row2[k - 1] < t.row1[k + 2 * i - 1]:
        raise ValueError(f"tableau is not promotable: {t}")
    return _reslice(t.row1, t.row2, k, 2 * i, t.n)


def demote(t: Tableau) -> Tableau:
    """Inverse of ``promote``: shape (a+i, a-i) -> (a+i-1, a-i+1) for i >= 1."""
    a, i = _shape_params(t)
    if i < 1:
        raise ValueError("cannot demote a square shape")
    if not is_2ssyt(t):
        raise ValueError(f"not a cap-2 semistandard tableau: {t}")
    k = _max_disagreement(t.row1, t.row2, 2 * i)
    if k is not None and t.row2[k - 1] > t.row1[k + 2 * i - 1]:
        raise ValueError(f"tableau is not demotable: {t}")
    j = 1 if k is None else k + 1
    return _reslice(t.row1, t.row2, j, 2 * i - 2, t.n)


def alternating_sum_matches_distinct_rows(a: int, n: int) -> bool:
    """Check that the alternating truncated-Schur sum equals the weight sum
    over distinct-row square tableaux (the i = 0 promotable set)."""
    lhs = SymPoly.zero(n)
    for j in range(1, a + 1):
        term = schur_squarefree(a + j, a - j, n)
        lhs = lhs + term if j % 2 == 1 else lhs - term
    rhs = SymPoly.zero(n)
    for t in promotable_tableaux(a, 0, n):
        rhs = rhs + tableau_term(t)
    return lhs == rhs

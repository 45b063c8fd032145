"""Torus characters of the minor-ideal filtration, and basis certification.

For an index triple (a, b, d) the object of study is the bidegree-(a, b)
piece of the subquotient (d-th power of the minor ideal) / (d+1-st power).
Everything here is computed by exact GF(2) linear algebra over the monomial
basis of the squarefree ring:

* spanning sets for each ideal power in each bidegree,
* diagonal-torus characters of the subquotients (ranks weight by weight),
* certification that the proposed straight-tableau basis really is one
  (independent modulo the higher power, and spanning the lower one).

Spanning sets and echelon bases are cached per (power, bidegree, n); the
verification of a whole grid of triples reuses them heavily.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .gf2_exterior import ExtElement, minor, monomial
from .linalg_gf2 import EchelonBasis, element_vector, monomial_basis
from .standard_monomials import IndexTriple, basis_index_set, case_tag, two_standard_monomial
from .symfunc import SymPoly, expected_character, h_squarefree, schur
from .tableaux import transpose_shape

__all__ = [
    "CharacterReport",
    "ideal_power_span",
    "quotient_dimension",
    "subquotient_character",
    "in_ideal_power",
    "verify_triple",
    "telescoping_check",
    "pieri_filtration_check",
]


@lru_cache(maxsize=None)
def _ideal_span_cached(d: int, a: int, b: int, n: int) -> tuple[ExtElement, ...]:
    """Nonzero products (d distinct minors) * x-monomial * y-monomial of bidegree (a, b)."""
    if a - d < 0 or b - d < 0:
        return ()
    pairs = list(combinations(range(1, n + 1), 2))
    xparts = list(combinations(range(1, n + 1), a - d))
    yparts = list(combinations(range(1, n + 1), b - d))
    out = []
    for chosen in combinations(pairs, d):
        prod = ExtElement.one(n)
        for i, j in chosen:
            prod = prod * minor(i, j, n)
            if prod.is_zero:
                break
        if prod.is_zero:
            continue
        for xs in xparts:
            left = prod * monomial(xs, (), n)
            if left.is_zero:
                continue
            for ys in yparts:
                g = left * monomial((), ys, n)
                if not g.is_zero:
                    out.append(g)
    return tuple(out)


def ideal_power_span(d: int, bidegree: tuple[int, int], n: int) -> tuple[ExtElement, ...]:
    """A spanning set for the d-th ideal power in the given bidegree."""
    return _ideal_span_cached(d, bidegree[0], bidegree[1], n)


@lru_cache(maxsize=None)
def _column_index(a: int, b: int, n: int) -> dict[tuple[int, int], int]:
    return {m: i for i, m in enumerate(monomial_basis((a, b), n))}


def _weight_of_masks(xmask: int, ymask: int, n: int) -> tuple[int, ...]:
    return tuple(((xmask >> i) & 1) + ((ymask >> i) & 1) for i in range(n))


def _element_weight(e: ExtElement) -> tuple[int, ...]:
    xm, ym = next(iter(e.term_masks))
    return _weight_of_masks(xm, ym, e.n)


@lru_cache(maxsize=None)
def _weight_ranks(d: int, a: int, b: int, n: int) -> dict[tuple[int, ...], int]:
    """Rank of the d-th ideal power in bidegree (a, b), weight by weight.

    The spanning products are weight homogeneous, so the weight spaces are
    spanned independently and per-weight echelon bases give the dimensions.
    """
    cols = _column_index(a, b, n)
    by_weight: dict[tuple[int, ...], EchelonBasis] = {}
    for g in _ideal_span_cached(d, a, b, n):
        w = _element_weight(g)
        by_weight.setdefault(w, EchelonBasis()).add(element_vector(g, cols))
    return {w: eb.rank for w, eb in by_weight.items()}


@lru_cache(maxsize=None)
def _ideal_echelon(d: int, a: int, b: int, n: int) -> EchelonBasis:
    cols = _column_index(a, b, n)
    eb = EchelonBasis()
    for g in _ideal_span_cached(d, a, b, n):
        eb.add(element_vector(g, cols))
    return eb


def quotient_dimension(idx: IndexTriple) -> int:
    """dim of (d-th power)/(d+1-st power) in bidegree (a, b)."""
    lo = _ideal_echelon(idx.d, idx.a, idx.b, idx.n).rank
    hi = _ideal_echelon(idx.d + 1, idx.a, idx.b, idx.n).rank
    return lo - hi


def subquotient_character(idx: IndexTriple) -> SymPoly:
    """Diagonal-torus character of the subquotient at the index triple."""
    a, b, d, n = idx.a, idx.b, idx.d, idx.n
    lo = _weight_ranks(d, a, b, n)
    hi = _weight_ranks(d + 1, a, b, n)
    coeffs: dict[tuple[int, ...], int] = {}
    for w, r in lo.items():
        c = r - hi.get(w, 0)
        if c:
            coeffs[w] = c
    return SymPoly(coeffs, n)


def in_ideal_power(e: ExtElement, d: int) -> bool:
    """Membership of an element in the d-th power of the minor ideal.

    Inhomogeneous elements are split into bidegree pieces (the ideal power
    is spanned by bihomogeneous elements, so membership is piecewise).
    """
    if e.is_zero:
        return True
    if d <= 0:
        return True
    pieces: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for xm, ym in e.term_masks:
        key = (xm.bit_count(), ym.bit_count())
        pieces.setdefault(key, []).append((xm, ym))
    for (a, b), masks in pieces.items():
        eb = _ideal_echelon(d, a, b, e.n)
        cols = _column_index(a, b, e.n)
        v = 0
        for m in masks:
            v |= 1 << cols[m]
        if not eb.contains(v):
            return False
    return True


@dataclass(frozen=True)
class CharacterReport:
    """Outcome of verifying one index triple, all checks exact."""

    a: int
    b: int
    d: int
    n: int
    case: str
    match: bool
    computed: SymPoly
    expected: SymPoly
    basis_count: int
    quotient_dim: int
    independent: bool
    spanning: bool
    mismatched_weights: tuple[tuple[int, ...], ...]

    @property
    def ok(self) -> bool:
        return (
            self.match
            and self.independent
            and self.spanning
            and self.basis_count == self.quotient_dim
        )


def verify_triple(idx: IndexTriple) -> CharacterReport:
    """Compare the computed subquotient character with the case formula and
    certify the straight-tableau basis by rank computations."""
    a, b, d, n = idx.a, idx.b, idx.d, idx.n
    computed = subquotient_character(idx)
    expected = expected_character(a, b, d, n)
    weights = set(dict(computed.items())) | set(dict(expected.items()))
    mismatched = tuple(
        sorted(w for w in weights if computed.coeff(w) != expected.coeff(w))
    )

    tabs = basis_index_set(idx)
    cols = _column_index(a, b, n)
    higher = _ideal_echelon(d + 1, a, b, n)
    joint = higher.copy()
    added = 0
    for t in tabs:
        if joint.add(element_vector(two_standard_monomial(t, idx), cols)):
            added += 1
    independent = added == len(tabs)
    spanning = joint.rank == _ideal_echelon(d, a, b, n).rank

    return CharacterReport(
        a=a,
        b=b,
        d=d,
        n=n,
        case=case_tag(idx),
        match=computed == expected,
        computed=computed,
        expected=expected,
        basis_count=len(tabs),
        quotient_dim=quotient_dimension(idx),
        independent=independent,
        spanning=spanning,
        mismatched_weights=mismatched,
    )


def telescoping_check(a: int, b: int, n: int) -> bool:
    """Sum of all subquotient characters equals the character of the full
    bidegree-(a, b) piece of the squarefree ring."""
    total = SymPoly.zero(n)
    for d in range(0, b + 1):
        total = total + subquotient_character(IndexTriple(a, b, d, n))
    return total == h_squarefree(a, n) * h_squarefree(b, n)


def pieri_filtration_check(a: int, b: int, n: int) -> bool:
    """Product of two squarefree complete pieces decomposes over the
    transposed two-row shapes (a+i, b-i)."""
    if a <= b:
        raise ValueError(f"requires a > b, got a={a}, b={b}")
    total = SymPoly.zero(n)
    for i in range(0, b + 1):
        total = total + schur(transpose_shape((a + i, b - i)), n)
    return total == h_squarefree(a, n) * h_squarefree(b, n)

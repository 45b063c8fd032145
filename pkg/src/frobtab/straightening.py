"""Rewriting of tableau products into (cap-2) straight form.

Two levels of rewriting live here.

``classical_straighten`` works with exact identities in the squarefree
quotient: the three-term minor exchange, the minor-against-variable exchange,
and the split of a mixed x*y pair into its swap plus a minor.  It turns any
column-strict two-row filling into a GF(2) sum of classical semistandard
tableaux with exactly the same element value.  Because the pair split raises
the minor count, its output may mix strata (shapes (r1-k, d+k)).

``two_straighten`` rewrites a semistandard tableau, modulo the (d+1)-st power
of the minor ideal, into the straight tableaux characterized by
``rows_two_straight``.  It is a work loop: kill syntactic zeroes, drop terms
that fall into the higher ideal power, recurse on the prefix when the prefix
itself is not straight, and otherwise apply one of a small family of exact or
congruence moves at the junction of the last columns.  Every move is either
an exact identity or changes the element by a member of the higher ideal
power, so the output sum is congruent to the input; the certifying oracle
lives in ``characters``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .gf2_exterior import ExtElement
from .standard_monomials import DomainError, IndexTriple, rows_two_straight, standard_monomial
from .tableaux import Tableau, rows_are_ssyt

__all__ = [
    "TableauSum",
    "StraighteningLimitExceeded",
    "classical_straighten",
    "two_straighten",
    "collapse_interlocked",
    "swap_repeat_33",
    "swap_repeat_32",
    "interlocked_triple",
]

ITERATION_CAP = 10**6


class StraighteningLimitExceeded(RuntimeError):
    """The work loop exceeded its iteration budget (indicates a cycle bug)."""


@dataclass(frozen=True)
class TableauSum:
    """A GF(2) set of tableaux read as elements via the split point ``a``.

    Terms may mix shapes (exact classical straightening crosses strata);
    ``shape`` is None in that case.
    """

    terms: frozenset[Tableau]
    a: int
    n: int

    @property
    def shape(self) -> tuple[int, int] | None:
        shapes = {t.shape for t in self.terms}
        if len(shapes) == 1:
            return shapes.pop()
        return None

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms, key=lambda t: (t.row1, t.row2)))

    def element_sum(self) -> ExtElement:
        out = ExtElement.zero(self.n)
        for t in self.terms:
            out = out + standard_monomial(t, self.a)
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "  +  ".join(str(t) for t in self)


# ---------------------------------------------------------------------------
# classical straightening
# ---------------------------------------------------------------------------

Triple = tuple[tuple[tuple[int, int], ...], tuple[int, ...], tuple[int, ...]]


def _normalize(minors, xs, ys) -> Triple | None:
    """Canonical form of a product term, or None when it is zero.

    Zero happens for a degenerate or repeated minor, a repeated tail
    variable, or any index occurring three times in total (two of the three
    occurrences then land in the same block and square to zero).
    """
    norm = []
    for u, w in minors:
        if u == w:
            return None
        norm.append((u, w) if u < w else (w, u))
    norm.sort()
    if any(norm[i] == norm[i + 1] for i in range(len(norm) - 1)):
        return None
    xs = tuple(sorted(xs))
    ys = tuple(sorted(ys))
    if any(xs[i] == xs[i + 1] for i in range(len(xs) - 1)):
        return None
    if any(ys[i] == ys[i + 1] for i in range(len(ys) - 1)):
        return None
    counts: dict[int, int] = {}
    for v in [v for m in norm for v in m] + list(xs) + list(ys):
        counts[v] = counts.get(v, 0) + 1
        if counts[v] > 2:
            return None
    return (tuple(norm), xs, ys)


def _triple_of_rows(row1, row2, a) -> Triple:
    d = len(row2)
    minors = tuple((row1[i], row2[i]) for i in range(d))
    return (minors, tuple(row1[d:a]), tuple(row1[a:]))


def _rows_of_triple(t: Triple) -> tuple[tuple[int, ...], tuple[int, ...]]:
    minors, xs, ys = t
    row1 = tuple(u for u, _ in minors) + xs + ys
    row2 = tuple(w for _, w in minors)
    return (row1, row2)


def _classical_terms(row1, row2, a) -> set[Triple]:
    """Straighten a column-strict filling; returns the GF(2) set of
    semistandard normalized terms across all strata."""
    start = _normalize(*_triple_of_rows(row1, row2, a))
    out: set[Triple] = set()
    if start is None:
        return out
    work = [start]
    iters = 0
    while work:
        iters += 1
        if iters > ITERATION_CAP:
            raise StraighteningLimitExceeded(
                f"classical straightening of {row1}/{row2} exceeded {ITERATION_CAP} steps"
            )
        minors, xs, ys = work.pop()
        # exchange for an out-of-order adjacent minor pair: values p<q<r<s
        # with minors (p,s),(q,r) present rewrite to (p,q)(r,s) + (p,r)(q,s)
        viol = next(
            (
                i
                for i in range(len(minors) - 1)
                if minors[i][0] < minors[i + 1][0] and minors[i][1] > minors[i + 1][1]
            ),
            None,
        )
        if viol is not None:
            i = viol
            p, s = minors[i]
            q, r = minors[i + 1]
            for pair in (((p, q), (r, s)), ((p, r), (q, s))):
                cand = _normalize(minors[:i] + pair + minors[i + 2 :], xs, ys)
                if cand is not None:
                    work.append(cand)
            continue
        # exchange when the last minor exceeds the first tail variable:
        # [u,w]*x_v = [v,u]*x_w + [v,w]*x_u for v < u < w (same in y)
        if minors and xs and minors[-1][0] > xs[0]:
            u, w = minors[-1]
            v = xs[0]
            for m, x in (((v, u), w), ((v, w), u)):
                cand = _normalize(minors[:-1] + (m,), (x,) + xs[1:], ys)
                if cand is not None:
                    work.append(cand)
            continue
        if minors and not xs and ys and minors[-1][0] > ys[0]:
            u, w = minors[-1]
            v = ys[0]
            for m, y in (((v, u), w), ((v, w), u)):
                cand = _normalize(minors[:-1] + (m,), xs, (y,) + ys[1:])
                if cand is not None:
                    work.append(cand)
            continue
        # split a decreasing x,y junction: x_w*y_z = x_z*y_w + [z,w] for z < w
        if xs and ys and xs[-1] > ys[0]:
            w = xs[-1]
            z = ys[0]
            cand = _normalize(minors, xs[:-1] + (z,), (w,) + ys[1:])
            if cand is not None:
                work.append(cand)
            cand = _normalize(minors + ((z, w),), xs[:-1], ys[1:])
            if cand is not None:
                work.append(cand)
            continue
        term = (minors, xs, ys)
        if term in out:
            out.remove(term)
        else:
            out.add(term)
    return out


def classical_straighten(t: Tableau, a: int) -> TableauSum:
    """Exact rewrite of a column-strict filling as a sum of semistandard tableaux.

    The element value is preserved exactly: the sum of the standard monomials
    of the output equals the standard monomial of the input.
    """
    r1, d = t.shape
    if not d <= a <= r1:
        raise DomainError(f"split point a={a} outside columns {d}..{r1} of shape {t.shape}")
    if any(t.row1[i] >= t.row2[i] for i in range(d)):
        raise DomainError(f"columns must strictly increase: {t}")
    terms = _classical_terms(t.row1, t.row2, a)
    tabs = frozenset(Tableau(*_rows_of_triple(tr), t.n) for tr in terms)
    return TableauSum(tabs, a, t.n)


# ---------------------------------------------------------------------------
# named exact identities on interlocked patterns
# ---------------------------------------------------------------------------


def collapse_interlocked(t: Tableau) -> ExtElement:
    """Value of the interlocked square pattern (α α β.. / ..β δ ε).

    For row1 = (α, α, β_1..β_m) and row2 = (β_1..β_m, δ, ε) the element
    collapses to x_α y_α · Π x_{β_i} y_{β_i} · [δ, ε].
    """
    r1, r2 = t.shape
    if r1 != r2 or r1 < 2:
        raise DomainError(f"need a square shape of side >= 2, got {t.shape}")
    m = r1 - 2
    if t.row1[0] != t.row1[1] or t.row1[2:] != t.row2[:m]:
        raise DomainError(f"rows do not interlock: {t}")
    from .gf2_exterior import minor, monomial

    alpha = t.row1[0]
    betas = t.row1[2:]
    delta, eps = t.row2[m], t.row2[m + 1]
    out = monomial([alpha], [alpha], t.n)
    for b in betas:
        out = out * monomial([b], [b], t.n)
    return out * minor(delta, eps, t.n)


def swap_repeat_33(t: Tableau) -> Tableau:
    """(α, α, γ / δ, ε, η) -> (ε, η, γ / δ, α, α); both have the same value."""
    if t.shape != (3, 3) or t.row1[0] != t.row1[1]:
        raise DomainError(f"expected shape (3,3) with a repeated first entry: {t}")
    alpha, _, gamma = t.row1
    delta, eps, eta = t.row2
    return Tableau((eps, eta, gamma), (delta, alpha, alpha), t.n)


def swap_repeat_32(t: Tableau) -> Tableau:
    """(α, α, γ / δ, ε) -> (δ, α, α / ε, γ); both have the same value."""
    if t.shape != (3, 2) or t.row1[0] != t.row1[1]:
        raise DomainError(f"expected shape (3,2) with a repeated first entry: {t}")
    alpha, _, gamma = t.row1
    delta, eps = t.row2
    return Tableau((delta, alpha, alpha), (eps, gamma), t.n)


def interlocked_triple(t: Tableau) -> tuple[Tableau, Tableau]:
    """The two partners whose values sum with the input to zero.

    Input row1 = (α, α, β_1..β_m, γ) and row2 = (β_1..β_m, δ, ε, [η]); the
    partners exchange γ with δ and with ε respectively.  Works for the square
    shape (m+3, m+3) and its truncation (m+3, m+2) without the η box.
    """
    r1, r2 = t.shape
    if r1 < 3 or r2 not in (r1, r1 - 1):
        raise DomainError(f"unsupported shape {t.shape}")
    m = r1 - 3
    has_eta = r1 == r2
    if t.row1[0] != t.row1[1] or t.row1[2 : 2 + m] != t.row2[:m]:
        raise DomainError(f"rows do not interlock: {t}")
    gamma = t.row1[-1]
    head = t.row1[:-1]
    betas = t.row2[:m]
    if has_eta:
        delta, eps, eta = t.row2[m], t.row2[m + 1], t.row2[m + 2]
        t1 = Tableau(head + (delta,), betas + (gamma, eps, eta), t.n)
        t2 = Tableau(head + (eps,), betas + (gamma, delta, eta), t.n)
    else:
        delta, eps = t.row2[m], t.row2[m + 1]
        t1 = Tableau(head + (delta,), betas + (gamma, eps), t.n)
        t2 = Tableau(head + (eps,), betas + (gamma, delta), t.n)
    return (t1, t2)


# ---------------------------------------------------------------------------
# cap-2 straightening
# ---------------------------------------------------------------------------

Rows = tuple[tuple[int, ...], tuple[int, ...]]

_TS_CACHE: dict[tuple, frozenset[Rows]] = {}


def _square_junction(A, B, a) -> list[Rows] | None:
    """Junction moves for the square shape (a, a); None means no move applies."""
    assert a >= 3, "small square tableaux are always straight or zero"
    pre1, pre2 = A[: a - 3], B[: a - 3]
    if A[a - 2] == A[a - 1]:
        # repeated last column top: one-term swap
        assert B[a - 3] > A[a - 1]
        new1 = pre1 + (A[a - 3], A[a - 1], B[a - 2])
        new2 = pre2 + (A[a - 2], B[a - 3], B[a - 1])
        return [(new1, new2)]
    if B[a - 3] == B[a - 2]:
        beta = B[a - 3]
        if beta > A[a - 1]:
            new1 = pre1 + (A[a - 3], A[a - 1], B[a - 2])
            new2 = pre2 + (A[a - 2], B[a - 3], B[a - 1])
        else:
            new1 = pre1 + (A[a - 3], B[a - 3], B[a - 2])
            new2 = pre2 + (A[a - 2], A[a - 1], B[a - 1])
        return [(new1, new2)]
    if _has_chain(A, B, a):
        if B[a - 2] == B[a - 1] and B[a - 3] == A[a - 1]:
            # the full minor chain telescopes to a square: exactly zero
            return []
        assert B[a - 3] > A[a - 1]
        t1 = (pre1 + (A[a - 3], A[a - 2], B[a - 3]), pre2 + (A[a - 1], B[a - 2], B[a - 1]))
        t2 = (pre1 + (A[a - 3], A[a - 2], B[a - 2]), pre2 + (A[a - 1], B[a - 3], B[a - 1]))
        if B[a - 2] == B[a - 1]:
            return [t1]
        return [t1, t2]
    if B[a - 2] == B[a - 1]:
        jp = [j0 for j0 in range(2, a) if B[j0 - 2] != A[j0]]
        if not jp:
            # full chain with a repeated head: the cycle telescopes to zero
            assert A[0] == A[1]
            return []
        j0 = max(jp)
        assert B[j0 - 2] > A[j0]
        mid1 = (A[j0 - 2], A[j0], B[j0 - 2])
        mid2 = (A[j0 - 1], B[j0 - 1], B[j0])
        alt1 = (A[j0 - 2], A[j0 - 1], B[j0 - 2])
        alt2 = (A[j0], B[j0 - 1], B[j0])
        tail1, tail2 = A[j0 + 1 :], B[j0 + 1 :]
        return [
            (A[: j0 - 2] + mid1 + tail1, B[: j0 - 2] + mid2 + tail2),
            (A[: j0 - 2] + alt1 + tail1, B[: j0 - 2] + alt2 + tail2),
        ]
    return None


def _has_chain(A, B, a) -> bool:
    """Some i <= a-2 has a repeated top pair whose minor chain runs to the end."""
    for i0 in range(a - 2):
        if A[i0] == A[i0 + 1] and all(B[j0] == A[j0 + 2] for j0 in range(i0, a - 3)):
            return True
    return False


def _column_junction(A, B, a) -> list[Rows] | None:
    """Junction moves for the shape (a, a-1): the square moves without the
    last bottom box."""
    assert a >= 3, "small tableaux of this shape are always straight or zero"
    pre1, pre2 = A[: a - 3], B[: a - 3]
    if A[a - 2] == A[a - 1]:
        assert B[a - 3] > A[a - 1]
        return [(pre1 + (A[a - 3], A[a - 1], B[a - 2]), pre2 + (A[a - 2], B[a - 3]))]
    if B[a - 3] == B[a - 2]:
        beta = B[a - 3]
        if beta > A[a - 1]:
            return [(pre1 + (A[a - 3], A[a - 1], B[a - 2]), pre2 + (A[a - 2], B[a - 3]))]
        return [(pre1 + (A[a - 3], B[a - 3], B[a - 2]), pre2 + (A[a - 2], A[a - 1]))]
    if _has_chain(A, B, a):
        assert B[a - 3] > A[a - 1]
        return [
            (pre1 + (A[a - 3], A[a - 2], B[a - 3]), pre2 + (A[a - 1], B[a - 2])),
            (pre1 + (A[a - 3], A[a - 2], B[a - 2]), pre2 + (A[a - 1], B[a - 3])),
        ]
    return None


def _short_tail_junction(A, B, a, b, d) -> list[Rows] | None:
    """Junction for shapes with a two-box tail (a+b-d = d+2).

    Requires some repeated top pair whose minor chain reaches column d; the
    offending value is the last bottom entry against the last top entry.
    """
    r1 = len(A)
    assert r1 == d + 2 and d >= 1
    chain = [
        i0
        for i0 in range(d)
        if A[i0] == A[i0 + 1] and all(B[j0] == A[j0 + 2] for j0 in range(i0, d - 1))
    ]
    if not chain:
        return None
    if B[d - 1] == A[d + 1]:
        # chain closes up: zero for a two-box x tail, higher-power content
        # for an x,y tail; dropped either way
        return []
    assert B[d - 1] > A[d + 1]
    new1 = A[: d + 1] + (B[d - 1],)
    new2 = B[: d - 1] + (A[d + 1],)
    return [(new1, new2)]


def _ts(rows: Rows, a: int, b: int, d: int, order: str) -> frozenset[Rows]:
    key = (rows, a, b, d, order)
    cached = _TS_CACHE.get(key)
    if cached is not None:
        return cached
    queue: deque[Rows] = deque([rows])
    out: set[Rows] = set()
    iters = 0
    while queue:
        iters += 1
        if iters > ITERATION_CAP:
            raise StraighteningLimitExceeded(
                f"straightening of {rows} for (a,b,d)=({a},{b},{d}) exceeded {ITERATION_CAP} steps"
            )
        cur = queue.pop() if order == "lifo" else queue.popleft()
        A, B = cur
        if not rows_are_ssyt(A, B):
            # exact classical rewrite; terms in higher strata lie in the
            # higher ideal power and are dropped
            for triple in _classical_terms(A, B, a):
                if len(triple[0]) == d:
                    queue.append(_rows_of_triple(triple))
            continue
        if _is_zero_term(A, B, a, d):
            continue
        if d < a and a < len(A) and A[a - 1] == A[a] and (d >= 1 or a - d >= 2):
            # repeated value across the x,y junction: the term lies in the
            # higher ideal power (box-move identity), except for the triple
            # (1,1,0) whose lone monomial survives
            continue
        if rows_two_straight(A, B, a, b, d):
            if cur in out:
                out.remove(cur)
            else:
                out.add(cur)
            continue
        # prefix recursion
        if a == b == d:
            prefix = (A[:-1], B[:-1])
            pidx = (a - 1, b - 1, d - 1)
            unit = ("col", A[-1], B[-1])
        elif b > d:
            prefix = (A[:-1], B)
            pidx = (a, b - 1, d)
            unit = ("box", A[-1])
        else:
            prefix = (A[:-1], B)
            pidx = (a - 1, b, d)
            unit = ("box", A[-1])
        if not rows_two_straight(prefix[0], prefix[1], *pidx):
            for s1, s2 in _ts(prefix, *pidx, order):
                if unit[0] == "col":
                    queue.append((s1 + (unit[1],), s2 + (unit[2],)))
                else:
                    queue.append((s1 + (unit[1],), s2))
            continue
        # junction moves
        if a == b == d:
            moved = _square_junction(A, B, a)
        elif a - 1 == b == d:
            moved = _column_junction(A, B, a)
        else:
            moved = _short_tail_junction(A, B, a, b, d)
        if moved is None:
            raise AssertionError(
                f"no junction move applies to {A}/{B} for (a,b,d)=({a},{b},{d})"
            )
        queue.extend(moved)
    result = frozenset(out)
    _TS_CACHE[key] = result
    return result


def _is_zero_term(A, B, a, d) -> bool:
    counts: dict[int, int] = {}
    for v in A + B:
        counts[v] = counts.get(v, 0) + 1
        if counts[v] > 2:
            return True
    cols = [(A[i], B[i]) for i in range(d)]
    if len(set(cols)) != d:
        return True
    xs = A[d:a]
    ys = A[a:]
    if any(xs[i] == xs[i + 1] for i in range(len(xs) - 1)):
        return True
    return any(ys[i] == ys[i + 1] for i in range(len(ys) - 1))


def two_straighten(t: Tableau, idx: IndexTriple, order: str = "lifo") -> TableauSum:
    """Rewrite a semistandard tableau as a straight sum modulo the higher ideal power.

    The result is a GF(2) set of straight tableaux of the same shape whose
    element sum is congruent to the input's standard monomial modulo the
    (d+1)-st power of the minor ideal.  ``order`` selects the work-queue
    discipline ("lifo" or "fifo"); different orders may return different
    representative sums, congruent to each other.
    """
    if order not in ("lifo", "fifo"):
        raise ValueError(f"unknown order {order!r}")
    if t.n != idx.n:
        raise DomainError(f"tableau over n={t.n} but index triple over n={idx.n}")
    if t.shape != idx.shape:
        raise DomainError(f"tableau shape {t.shape}, expected {idx.shape}")
    if not rows_are_ssyt(t.row1, t.row2):
        raise DomainError(f"input must be semistandard: {t}")
    rows_out = _ts((t.row1, t.row2), idx.a, idx.b, idx.d, order)
    terms = frozenset(Tableau(r1, r2, t.n) for r1, r2 in rows_out)
    return TableauSum(terms, idx.a, t.n)

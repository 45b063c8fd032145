"""Rewriting engines: classical straightening and the cap-2 work loop."""

import itertools

import pytest

from frobtab.characters import in_ideal_power
from frobtab.gf2_exterior import minor, monomial
from frobtab.standard_monomials import (
    DomainError,
    IndexTriple,
    is_two_straight,
    standard_monomial,
)
from frobtab.straightening import (
    TableauSum,
    classical_straighten,
    collapse_interlocked,
    interlocked_triple,
    swap_repeat_32,
    swap_repeat_33,
    two_straighten,
)
from frobtab.tableaux import Tableau, enumerate_tableaux


def all_column_strict_fillings(n, r1, d):
    for row1 in itertools.product(range(1, n + 1), repeat=r1):
        for row2 in itertools.product(range(1, n + 1), repeat=d):
            if all(row1[i] < row2[i] for i in range(d)):
                yield Tableau(row1, row2, n)


def test_classical_straightening_is_exact_and_lands_on_ssyt():
    n = 3
    for r1 in range(0, 5):
        for d in range(0, r1 + 1):
            for t in all_column_strict_fillings(n, r1, d):
                for a in range(d, r1 + 1):
                    out = classical_straighten(t, a)
                    assert out.element_sum() == standard_monomial(t, a), (t, a)
                    for u in out.terms:
                        assert u.shape[0] >= u.shape[1]


def test_classical_straightening_known_exchange():
    # [1,4][2,3] = [1,2][3,4] + [1,3][2,4]
    out = classical_straighten(Tableau((1, 2), (4, 3), 4), 2)
    got = {(u.row1, u.row2) for u in out.terms}
    assert got == {((1, 3), (2, 4)), ((1, 2), (3, 4))}


def test_classical_straightening_can_cross_strata():
    # x2 y1 = x1 y2 + [1,2]: one term has an extra column
    out = classical_straighten(Tableau((2, 1), (), 2), 1)
    assert out.shape is None
    assert {u.shape for u in out.terms} == {(2, 0), (1, 1)}


def test_classical_straightening_rejects_degenerate_columns():
    with pytest.raises(DomainError):
        classical_straighten(Tableau((2, 1), (2,), 3), 1)


def test_tableau_sum_basics():
    t = Tableau((1, 2), (2, 3), 3)
    s = TableauSum(frozenset([t]), 2, 3)
    assert s.shape == (2, 2)
    assert len(s) == 1
    assert str(s) == str(t)
    assert str(TableauSum(frozenset(), 2, 3)) == "0"


def test_collapse_interlocked_golden_example():
    t = Tableau((1, 1, 2, 3), (2, 3, 4, 5), 5)
    want = (
        monomial([1], [1], 5)
        * monomial([2], [2], 5)
        * monomial([3], [3], 5)
        * minor(4, 5, 5)
    )
    assert collapse_interlocked(t) == want
    assert standard_monomial(t, 4) == want


def test_collapse_interlocked_exhaustive():
    n = 6
    for m in range(0, 3):
        for vals in itertools.permutations(range(1, n + 1), m + 3):
            alpha, delta, eps = vals[0], vals[m + 1], vals[m + 2]
            betas = tuple(sorted(vals[1 : m + 1]))
            t = Tableau((alpha, alpha) + betas, betas + (delta, eps), n)
            assert collapse_interlocked(t) == standard_monomial(t, m + 2), t


def test_collapse_interlocked_rejects_non_interlocking():
    with pytest.raises(DomainError):
        collapse_interlocked(Tableau((1, 2, 3), (2, 4, 5), 5))


def test_swap_repeat_identities_exhaustive():
    n = 6
    for alpha, gamma, delta, eps, eta in itertools.permutations(range(1, n + 1), 5):
        t = Tableau((alpha, alpha, gamma), (delta, eps, eta), n)
        assert standard_monomial(t, 3) == standard_monomial(swap_repeat_33(t), 3), t
    for alpha, gamma, delta, eps in itertools.permutations(range(1, n + 1), 4):
        t = Tableau((alpha, alpha, gamma), (delta, eps), n)
        for a in (2, 3):
            assert standard_monomial(t, a) == standard_monomial(
                swap_repeat_32(t), a
            ), (t, a)


def test_interlocked_triple_golden_example():
    s = Tableau((1, 1, 2, 4, 5), (2, 4, 6, 7, 8), 8)
    t, u = interlocked_triple(s)
    assert (t.row1, t.row2) == ((1, 1, 2, 4, 6), (2, 4, 5, 7, 8))
    assert (u.row1, u.row2) == ((1, 1, 2, 4, 7), (2, 4, 5, 6, 8))
    total = (
        standard_monomial(s, 5) + standard_monomial(t, 5) + standard_monomial(u, 5)
    )
    assert total.is_zero


def test_interlocked_triple_exhaustive():
    n = 6
    for m in range(0, 2):
        for vals in itertools.permutations(range(1, n + 1), m + 5):
            alpha, gamma = vals[0], vals[1]
            betas = tuple(sorted(vals[2 : 2 + m]))
            delta, eps, eta = vals[m + 2], vals[m + 3], vals[m + 4]
            s = Tableau((alpha, alpha) + betas + (gamma,), betas + (delta, eps, eta), n)
            t, u = interlocked_triple(s)
            total = (
                standard_monomial(s, m + 3)
                + standard_monomial(t, m + 3)
                + standard_monomial(u, m + 3)
            )
            assert total.is_zero, s
        for vals in itertools.permutations(range(1, n + 1), m + 4):
            alpha, gamma = vals[0], vals[1]
            betas = tuple(sorted(vals[2 : 2 + m]))
            delta, eps = vals[m + 2], vals[m + 3]
            s = Tableau((alpha, alpha) + betas + (gamma,), betas + (delta, eps), n)
            t, u = interlocked_triple(s)
            for a in (m + 2, m + 3):
                total = (
                    standard_monomial(s, a)
                    + standard_monomial(t, a)
                    + standard_monomial(u, a)
                )
                assert total.is_zero, (s, a)


def test_two_straighten_golden_example():
    t = Tableau((1, 2, 2, 4, 5), (3, 3, 6, 7, 7), 7)
    out = two_straighten(t, IndexTriple(5, 5, 5, 7))
    got = {(u.row1, u.row2) for u in out.terms}
    assert got == {
        ((1, 2, 3, 5, 6), (2, 3, 4, 7, 7)),
        ((1, 2, 3, 4, 6), (2, 3, 5, 7, 7)),
    }


def test_two_straighten_fixes_straight_tableaux():
    for n in range(1, 5):
        for a in range(0, 4):
            for b in range(0, a + 1):
                for d in range(0, b + 1):
                    idx = IndexTriple(a, b, d, n)
                    for t in enumerate_tableaux(idx.shape, n, kind="ssyt"):
                        if is_two_straight(t, idx):
                            out = two_straighten(t, idx)
                            assert out.terms == frozenset([t]), (idx, t)


def test_two_straighten_kills_repeated_columns():
    idx = IndexTriple(2, 2, 2, 3)
    out = two_straighten(Tableau((1, 1), (2, 2), 3), idx)
    assert not out.terms
    assert standard_monomial(Tableau((1, 1), (2, 2), 3), 2).is_zero


def test_two_straighten_outputs_are_straight_and_congruent():
    for n in range(1, 5):
        for a in range(0, 4):
            for b in range(0, a + 1):
                for d in range(0, b + 1):
                    idx = IndexTriple(a, b, d, n)
                    for t in enumerate_tableaux(idx.shape, n, kind="ssyt"):
                        out = two_straighten(t, idx)
                        for u in out.terms:
                            assert is_two_straight(u, idx), (idx, t, u)
                        diff = standard_monomial(t, a) + out.element_sum()
                        assert in_ideal_power(diff, d + 1), (idx, t)


def test_two_straighten_orders_agree_up_to_higher_power():
    for n in range(1, 5):
        for a in range(0, 4):
            for b in range(0, a + 1):
                for d in range(0, b + 1):
                    idx = IndexTriple(a, b, d, n)
                    for t in enumerate_tableaux(idx.shape, n, kind="ssyt"):
                        lifo = two_straighten(t, idx, order="lifo")
                        fifo = two_straighten(t, idx, order="fifo")
                        if lifo.terms != fifo.terms:
                            diff = lifo.element_sum() + fifo.element_sum()
                            assert in_ideal_power(diff, d + 1), (idx, t)


def test_two_straighten_validates_input():
    idx = IndexTriple(2, 2, 1, 3)
    with pytest.raises(DomainError):
        two_straighten(Tableau((1, 2), (2,), 3), idx)  # wrong shape
    with pytest.raises(DomainError):
        two_straighten(Tableau((2, 1, 1), (3,), 3), idx)  # not semistandard
    with pytest.raises(ValueError):
        two_straighten(Tableau((1, 1, 2), (2,), 3), idx, order="random")

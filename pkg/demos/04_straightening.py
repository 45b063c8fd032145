"""Straightening: exact classical rewriting, the interlock identities, and
the modular rewriting into straight tableaux.

The classical straightening of a column-strict filling is an exact identity
in the ring.  The cap-2 straightening works modulo the next power of the
minor ideal: it rewrites any semistandard tableau as a sum of straight
tableaux congruent to it, and the congruence is certified by an independent
GF(2) rank oracle.
"""

from frobtab import (
    IndexTriple,
    Tableau,
    classical_straighten,
    collapse_interlocked,
    format_tableau,
    in_ideal_power,
    interlocked_triple,
    standard_monomial,
    two_straighten,
)

print("== classical straightening is exact ==")
t = Tableau((1, 2), (4, 3), 4)  # minors [1,4][2,3]: out of order
out = classical_straighten(t, 2)
print("input:   ", format_tableau(t))
print("output:  ", " + ".join(format_tableau(u) for u in out))
print("exact?   ", out.element_sum() == standard_monomial(t, 2))

print()
print("== interlocked patterns collapse ==")
s = Tableau((1, 1, 2, 3), (2, 3, 4, 5), 5)
print("tableau: ", format_tableau(s))
print("collapses to:", collapse_interlocked(s))

print()
print("== the three-term interlock relation ==")
s = Tableau((1, 1, 2, 4, 5), (2, 4, 6, 7, 8), 8)
t1, t2 = interlocked_triple(s)
print("S =", format_tableau(s))
print("T =", format_tableau(t1))
print("U =", format_tableau(t2))
total = standard_monomial(s, 5) + standard_monomial(t1, 5) + standard_monomial(t2, 5)
print("F_S + F_T + F_U =", total)

print()
print("== straightening modulo the higher ideal power ==")
idx = IndexTriple(5, 5, 5, 7)
t = Tableau((1, 2, 2, 4, 5), (3, 3, 6, 7, 7), 7)
out = two_straighten(t, idx)
print("input:  ", format_tableau(t))
for u in out:
    print("output: ", format_tableau(u))
diff = standard_monomial(t, idx.a) + out.element_sum()
print("difference lies in the 6th ideal power?", in_ideal_power(diff, idx.d + 1))

print()
print("== terms can die ==")
t = Tableau((1, 1), (2, 2), 3)  # repeated column: [1,2][1,2] = 0
out = two_straighten(t, IndexTriple(2, 2, 2, 3))
print("straightening of", format_tableau(t), "is:", str(out))

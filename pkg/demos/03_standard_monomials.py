"""Standard monomials, the index triple case split, and rectification.

A two-row tableau of shape (a+b-d, d) encodes a product: each of the first d
columns is a 2x2 minor, the remaining top-row boxes are single x or y
variables (x up to position a, y afterwards).  The subquotients of the minor
ideal filtration are indexed by triples a >= b >= d, and each triple falls
into one of three cases with its own basis shape.
"""

from frobtab import (
    IndexTriple,
    Tableau,
    basis_index_set,
    case_tag,
    format_tableau,
    rectify,
    standard_monomial,
    two_standard_monomial,
)

print("== reading a tableau as a ring element ==")
t = Tableau((1, 1, 2, 3), (2, 3, 4, 5), 5)
print("tableau:", format_tableau(t), " split a=4")
print("element:", standard_monomial(t, 4))
print("         ([1,2][1,3][2,4][3,5]: sixteen products collapse to two terms)")

print()
print("== the three cases ==")
for triple in [(3, 3, 3), (3, 3, 2), (3, 2, 1), (1, 1, 0)]:
    idx = IndexTriple(*triple, n=5)
    print(f"  (a,b,d) = {triple}: {case_tag(idx)}")

print()
print("== basis index sets ==")
idx = IndexTriple(2, 2, 1, 3)
print(f"triple {idx} is {case_tag(idx)}; its basis indices are:")
for u in basis_index_set(idx):
    print("  ", format_tableau(u))

print()
print("== rectification ==")
# a cap-2 tableau may repeat columns; rectification trades each repeated
# block for a straight tableau of the same weight indexing the same class
examples = [
    (Tableau((1, 2, 3, 5, 6), (1, 2, 4, 5), 6), IndexTriple(5, 4, 4, 6)),
    (Tableau((1, 2, 3, 5, 6), (1, 2, 4, 5, 6), 6), IndexTriple(5, 5, 5, 6)),
    (Tableau((1, 2, 4, 5), (1, 2, 4, 5), 5), IndexTriple(4, 4, 3, 5)),
]
for t, idx in examples:
    u = rectify(t, idx)
    print(f"  {format_tableau(t)}   --{idx}-->   {format_tableau(u)}")

print()
t, idx = examples[0]
print("the rectified tableau evaluates to the 2-standard monomial:")
print("  ", two_standard_monomial(t, idx))

"""Two-row tableaux with entries repeated at most twice, and their Schur-like
generating functions.

A "cap-2" tableau weakly increases along rows and down columns, and never
repeats an entry inside a row.  Columns MAY repeat — that is what the cap-2
condition buys over classical semistandard tableaux, and it is exactly the
transpose of classical semistandardness.
"""

from frobtab import (
    SymPoly,
    enumerate_tableaux,
    format_tableau,
    is_2ssyt,
    schur,
    schur_squarefree,
    transpose_shape,
    weight,
)
from frobtab.symfunc import tableau_term

n = 3
shape = (2, 1)

print(f"== all cap-2 tableaux of shape {shape} on [{n}] ==")
for t in enumerate_tableaux(shape, n, kind="2ssyt"):
    print(" ", format_tableau(t), "   weight", weight(t))

print()
print("note the repeated column in '1 2 / 1': allowed here, not classically")
print("classical count:", len(enumerate_tableaux(shape, n, kind="ssyt")))
print("cap-2 count:    ", len(enumerate_tableaux(shape, n, kind="2ssyt")))

print()
print("== generating function ==")
total = SymPoly.zero(n)
for t in enumerate_tableaux(shape, n, kind="2ssyt"):
    total = total + tableau_term(t)
print("sum of t^T over cap-2 tableaux:", total)
print("truncated Schur s~(2,1):       ", schur_squarefree(2, 1, n))

print()
print("== transpose duality ==")
print(f"transpose of {shape} is {transpose_shape(shape)}")
print("Schur of the transpose shape:  ", schur(transpose_shape(shape), n))
print()
print("all three agree: the cap-2 condition on a two-row shape is the")
print("classical condition on its transpose, column by column")

print()
print("== a one-column subtlety ==")
print("is_2ssyt('1 / 1'):", is_2ssyt(enumerate_tableaux((1, 1), 1, kind="2ssyt")[0]))
print("a doubled one-box column is fine: the repeat is down a column, not a row")

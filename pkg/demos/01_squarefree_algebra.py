"""A tour of the ground ring: squarefree polynomials over GF(2).

The ring has variables x_1..x_n, y_1..y_n with every square equal to zero,
and coefficients in the two-element field.  Elements are finite sets of
squarefree monomials; addition is symmetric difference, so every element is
its own negative.
"""

from frobtab import ExtElement, bidegree_of, minor, monomial, x_var, y_var

n = 4

print("== basic arithmetic ==")
e = x_var(1, n) * y_var(2, n)
f = x_var(2, n) * y_var(1, n)
print("x1*y2         =", e)
print("x1*y2 + x2*y1 =", e + f)
print("(e + e)       =", e + e, "   # characteristic 2: everything cancels")
print("x1 * x1       =", x_var(1, n) * x_var(1, n), "   # squares vanish")

print()
print("== 2x2 minors ==")
m12 = minor(1, 2, n)
m34 = minor(3, 4, n)
print("[1,2]       =", m12)
print("[1,2]*[3,4] =", m12 * m34)
print("[1,2]^2     =", m12 * m12, "  # repeated minors die too")

print()
print("== the exchange relation ==")
# [1,2][3,4] + [1,3][2,4] + [1,4][2,3] = 0: with signs gone, the classical
# three-term relation becomes a plain XOR identity
total = m12 * m34 + minor(1, 3, n) * minor(2, 4, n) + minor(1, 4, n) * minor(2, 3, n)
print("[1,2][3,4] + [1,3][2,4] + [1,4][2,3] =", total)

print()
print("== bookkeeping ==")
g = m12 * monomial([3], [4], n)
print("[1,2]*x3*y4 =", g)
print("bidegree    =", bidegree_of(g))
print("zero prints as:", ExtElement.zero(n))

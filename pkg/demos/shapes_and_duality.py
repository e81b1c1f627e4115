"""Shapes of a subspace at a point, and how they flip under the apolar dual.

At each point b the pivots of U (orders of vanishing at b) give a partition in
the k x l box.  The dual U* in P_n has the conjugate of the complementary
shape, and its reduced matrix is a signed transpose of the one for U.
"""

from polysubspace import (INF, apolar_dual, check_conjugate_complement, from_basis, parse_poly,
                          shape_at, wronskian_covariant)
from polysubspace.subspace import format_matrix

n = 5
U = from_basis([parse_poly(t, deg_bound=n) for t in
                ("(z-1)^3*(z+2)", "(z-1)^2*(z+1)*z", "z^5 + 3*z - 1")])
D = apolar_dual(U)
print("U  =", U)
print("U* =", D)
print("W(U)  =", wronskian_covariant(U))
print("W(U*) =", wronskian_covariant(D), "(same up to a constant)")

for b in (1, 0, -1, INF):
    r, rd = shape_at(U, b), shape_at(D, b)
    ok = check_conjugate_complement(r.shape, rd.shape)
    print(f"\nat {'inf' if b is INF else b}: pivots {r.pivots.values}, shape {r.shape.parts}; "
          f"dual shape {rd.shape.parts}; conjugate-complement: {ok}")
    print(f"  order of W(U) there: {U.k * U.ell - sum(r.shape.parts)}")
    print("  reduced matrix of U :", format_matrix(r.bounded_matrix))
    print("  reduced matrix of U*:", format_matrix(rd.bounded_matrix))

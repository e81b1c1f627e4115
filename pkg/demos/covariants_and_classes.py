"""Covariants of a binary form and the size of its projective symmetry group.

H = 0 means two-parameter stabilizer (a single root of full multiplicity),
T = 0 or T^2 proportional to H^3 means one-parameter (two distinct roots),
otherwise the group is finite and J^2, K are non-constant.
"""

from polysubspace import covariant_bundle, from_basis, monomial_equivalence_test, parse_poly
from polysubspace.covariants import classify

N = 4
for text in ("(z-2)^4", "z^3*(z-1)", "z^2*(z+1)^2", "z^4 - 1", "z^4 + z + 1"):
    b = covariant_bundle(parse_poly(text, deg_bound=N), N)
    print(f"{text:>12}: {classify(b)}")
    print(f"{'':>14}H = {b.H}")
    print(f"{'':>14}T = {b.T}")

# a subspace whose Wronskian has two distinct roots is a monomial subspace in disguise
U = from_basis([parse_poly(t, deg_bound=3) for t in ("(z-1)*(z-3)^2", "(z-1)^2*(z-3)")])
g, exps = monomial_equivalence_test(U)
print("\nU =", U)
print("moved by", g, "to span of z^e for e in", exps.values)

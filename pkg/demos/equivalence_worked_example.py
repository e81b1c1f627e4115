"""Two cubic pencils with the same Wronskian z^4 - 1, decided equivalent.

Run with ``python3 demos/equivalence_worked_example.py``.
"""

from polysubspace import (covariant_bundle, decide_equivalence, from_basis, parse_poly,
                          subspace_symmetries, wronskian_covariant, wronskian_symmetry_group)
from polysubspace.poly import bilinear_factors
from polysubspace.equivalence import compatibility_data


def P(text):
    return parse_poly(text, deg_bound=3, d=3)


U1 = from_basis([P("z^3 - sqrt(3)*i*z"), P("z^2 - i/sqrt(3)")])
U2 = from_basis([P("z^3 + sqrt(3)*i*z"), P("z^2 + i/sqrt(3)")])

W1, W2 = wronskian_covariant(U1), wronskian_covariant(U2)
print("W(U1) =", W1)
print("W(U2) =", W2)

# the absolute invariants of the common Wronskian
b = covariant_bundle(W1.rep, W1.deg_bound)
print("J^2 =", "(%s) / (%s)" % b.J2)
print("K   =", "(%s) / (%s)" % b.K)

# J^2(z) - J^2(Z) and K(z) - K(Z) share a numerator that splits into bilinear factors;
# each factor is one projective symmetry of z^4 - 1
data = compatibility_data(W1.rep, W1.rep, W1.deg_bound, U1.field)
print("bilinear factors of the common numerator:")
for g in bilinear_factors(data.common, U1.field):
    print("   ", g)

G = wronskian_symmetry_group(W1.rep, W1.deg_bound, U1.field)
print("symmetries of W:", ", ".join(map(str, G)))

# only half of them fix U1; the rest carry U1 onto U2
print("symmetries of U1:", ", ".join(map(str, subspace_symmetries(U1))))

v = decide_equivalence(U1, U2)
print("equivalent:", v.equivalent, " witness:", v.witness)

"""Shared generators and independent oracles for the test suite.

The oracles here go through sympy or plain enumeration and never call the
package routines they are used to check.
"""

import random
from fractions import Fraction
from functools import lru_cache

import sympy as sp

from polysubspace import FieldElement, Mobius, Polynomial
from polysubspace.subspace import from_basis

z, Z = sp.symbols("z Z")


def to_sympy(x):
    """A tower scalar as a sympy number."""
    if isinstance(x, FieldElement):
        a, b, c, e = (sp.Rational(q.numerator, q.denominator) for q in x.coords)
        r = sp.sqrt(x.d) if x.d is not None else 0
        return a + b * sp.I + c * r + e * sp.I * r
    q = Fraction(x)
    return sp.Rational(q.numerator, q.denominator)


def poly_expr(p, var=z):
    return sp.expand(sum(to_sympy(c) * var ** j for j, c in enumerate(p.coefficients())))


def same(a, b):
    return sp.simplify(sp.expand(a - b)) == 0


def rand_frac(rng, box=5, den=3):
    return Fraction(rng.randint(-box, box), rng.randint(1, den))


def rand_gaussian(rng, box=3):
    x = FieldElement(rng.randint(-box, box), rng.randint(-box, box))
    return x if not x.is_rational() else x.to_fraction()


def rand_poly(rng, n, box=5, gaussian=False):
    if gaussian:
        return Polynomial([rand_gaussian(rng, box) for _ in range(n + 1)], n)
    return Polynomial([rng.randint(-box, box) for _ in range(n + 1)], n)


def rand_subspace(rng, n, k, box=5, gaussian=False):
    while True:
        polys = [rand_poly(rng, n, box, gaussian) for _ in range(k)]
        if any(not p.is_zero() for p in polys):
            U = from_basis(polys, n)
            if U.k == k:
                return U


def rand_mobius(rng, box=4, gaussian=False):
    pick = (lambda: rand_gaussian(rng, box)) if gaussian else (lambda: rng.randint(-box, box))
    while True:
        a, b, c, e = pick(), pick(), pick(), pick()
        if a * e - b * c != 0:
            return Mobius(a, b, c, e)


def rng_for(seed):
    return random.Random(seed)


# oracles ---------------------------------------------------------------------

def wronskian_oracle(polys):
    exprs = [poly_expr(p) for p in polys]
    k = len(exprs)
    M = sp.Matrix(k, k, lambda i, j: sp.diff(exprs[j], z, i))
    return sp.expand(M.det(method="berkowitz"))


def rank_oracle(exprs, n):
    rows = [[sp.Poly(e, z).coeff_monomial(z ** j) for j in range(n + 1)] for e in exprs]
    return sp.Matrix(rows).rank(simplify=True)


def in_span_oracle(p_expr, basis_exprs, n):
    return rank_oracle(list(basis_exprs) + [p_expr], n) == rank_oracle(basis_exprs, n)


def mobius_oracle(g, p_expr, n):
    a, b, c, e = (to_sympy(x) for x in g.entries)
    return sp.expand(sp.cancel((c * Z + e) ** n * p_expr.subs(z, (a * Z + b) / (c * Z + e)))).subs(Z, z)


@lru_cache(maxsize=None)
def count_syt(shape):
    """Standard Young tableaux of ``shape`` by removing the largest entry from a corner."""
    shape = tuple(x for x in shape if x)
    if sum(shape) <= 1:
        return 1
    total = 0
    for i, row in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if row > below:
            smaller = list(shape)
            smaller[i] -= 1
            total += count_syt(tuple(smaller))
    return total


def order_oracle(expr, b):
    """Multiplicity of the root ``b`` of a sympy polynomial in ``z``."""
    if expr == 0:
        return None
    m = 0
    while sp.simplify(expr.subs(z, b)) == 0:
        expr = sp.diff(expr, z)
        m += 1
    return m


def sign_law_holds(rep, rep_star):
    """Reduced bounded matrices of ``U`` and ``U*`` at a point are signed transposes.

    With pivots ``nu`` and non-pivots ``mu`` of ``U``:
    ``B*[l-1-j][k-1-i] = (-1)^(nu_i + mu_j + 1) A[i][j]``.
    """
    A, B = rep.bounded_matrix, rep_star.bounded_matrix
    nu, mu = rep.pivots, rep.non_pivots
    k, l = len(nu), len(mu)
    for i in range(k):
        for j in range(l):
            sign = -1 if (nu[i] + mu[j] + 1) % 2 else 1
            if B[l - 1 - j][k - 1 - i] != sign * A[i][j]:
                return False
    return True

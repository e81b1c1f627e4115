from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from _util import poly_expr, rand_mobius, rand_poly, rng_for, same, to_sympy, z
from polysubspace import (INF, FieldElement, Mobius, Polynomial, SymmetryClass, covariant_bundle,
                          from_basis, mobius_apply, monomial_equivalence_test, parse_poly,
                          symmetry_class, transvectant)
from polysubspace.covariants import j2_constant, splitting_tower
from polysubspace.exactfield import QQ, QQ_I, Tower
from polysubspace.poly import proportional
from polysubspace.subspace import mobius_apply_subspace, monomial_subspace
from polysubspace.wronski import transform_weighted


def P(text, n=None, d=None):
    return parse_poly(text, deg_bound=n, d=d)


def test_octahedral_bundle():
    b = covariant_bundle(P("z^4 - 1"), 4)
    assert b.H == P("-144*z^2")
    assert b.T == P("-1152*z^5 - 1152*z")
    assert b.J2 == (P("-4/9*(z^4+1)^2"), P("z^4"))
    assert b.K == (P("-2/9*(z^8 + 10*z^4 + 1)"), P("z^4"))


def test_transvectant_examples():
    Q = P("z^4 - 1")
    assert transvectant(Q, Q, 2, 4, 4) / 2 == P("-144*z^2")
    R = P("z^2 + 3")
    assert proportional(transvectant(Q, R, 0, 4, 2), Q * R)


def test_transvectant_matches_sympy_definition():
    # H = n(n-1) (Q Q'' - (n-1)/n Q'^2)
    Q = P("z^3 - 2*z + 5")
    n = 3
    H = transvectant(Q, Q, 2, n, n) / 2
    q = poly_expr(Q)
    expected = sp.expand(n * (n - 1) * (q * sp.diff(q, z, 2) - Fraction(n - 1, n) * sp.diff(q, z) ** 2))
    assert same(poly_expr(H), expected)


def test_pure_power_has_vanishing_hessian():
    assert covariant_bundle(P("z^5"), 5).H.is_zero()
    assert covariant_bundle(P("(2*z - 3)^4"), 4).H.is_zero()


@pytest.mark.parametrize("N,m", [(4, 1), (4, 2), (5, 3), (6, 2)])
def test_monomial_hessian_and_constant_j2(N, m):
    b = covariant_bundle(Polynomial.monomial(m, 1, N), N)
    assert b.H == Polynomial.monomial(2 * m - 2, (N - 1) * m * (m - N), 2 * N - 4)
    assert j2_constant(b) is not None


def test_symmetry_class_examples():
    assert symmetry_class(P("(z+1)^4"), 4) == SymmetryClass.TwoParameterStab
    assert symmetry_class(P("z^2", 4), 4) == SymmetryClass.OneParameterStab
    assert symmetry_class(P("z^4 - 1"), 4) == SymmetryClass.FiniteStab


def test_monomial_test_examples():
    U = from_basis([P("z^3 - 3*z - 2"), P("z^2 + 2*z + 1", 3)])
    g, exps = monomial_equivalence_test(U)
    assert mobius_apply_subspace(g, U) == monomial_subspace(tuple(exps), 3)
    assert set(exps) in ({0, 1}, {2, 3})
    U = from_basis([P("(z-2)^3"), P("(z+5)^3")])
    g, exps = monomial_equivalence_test(U)
    assert tuple(exps) == (0, 3)
    U1 = from_basis([P("z^3 - sqrt(3)*i*z", d=3), P("z^2 - i/sqrt(3)", 3, d=3)])
    assert monomial_equivalence_test(U1) is None


def test_monomial_test_adjoins_radical():
    U = from_basis([P("(z^2 - 2)*z"), P("z^2 - 2", 3)])
    g, exps = monomial_equivalence_test(U)
    assert g.tower == Tower(2, 2)
    assert mobius_apply_subspace(g, U.with_field(Tower(2, 2))) == monomial_subspace(tuple(exps), 3)


def test_splitting_tower():
    assert splitting_tower(P("z^2 - 3"), QQ) == Tower(2, 3)
    assert splitting_tower(P("z^2 + 1"), QQ) == QQ_I
    assert splitting_tower(P("z^2 - 2"), Tower(2, 3)) is None


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_covariance(seed):
    rng = rng_for(seed)
    N = rng.randint(3, 6)
    Q = rand_poly(rng, N, box=3)
    if Q.is_zero():
        return
    g = rand_mobius(rng, box=3)
    b, bg = covariant_bundle(Q, N), covariant_bundle(mobius_apply(g, Q, N), N)
    for name, w in (("H", 2 * N - 4), ("T", 3 * N - 6), ("U", 4 * N - 8)):
        lhs = getattr(bg, name)
        rhs = transform_weighted(g, getattr(b, name), w)
        assert proportional(lhs, rhs) or (lhs.is_zero() and rhs.is_zero())


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_absolute_invariants(seed):
    rng = rng_for(seed)
    N = rng.randint(3, 6)
    Q = rand_poly(rng, N, box=3)
    b = covariant_bundle(Q, N)
    if b.J2 is None:
        return
    g = rand_mobius(rng, box=3)
    bg = covariant_bundle(mobius_apply(g, Q, N), N)
    a, c, d_, e = (to_sympy(x) for x in g.entries)
    Zs = sp.Symbol("Z")
    arg = (a * Zs + c) / (d_ * Zs + e)
    for name in ("J2", "K"):
        num, den = getattr(b, name)
        num_g, den_g = getattr(bg, name)
        f = (poly_expr(num) / poly_expr(den)).subs(z, arg)
        fg = (poly_expr(num_g) / poly_expr(den_g)).subs(z, Zs)
        assert sp.expand(sp.numer(sp.together(f - fg))) == 0


def test_class_is_invariant():
    rng = rng_for(11)
    for _ in range(15):
        N = rng.randint(3, 6)
        Q = rand_poly(rng, N, box=3)
        g = rand_mobius(rng, box=3)
        assert symmetry_class(Q, N) == symmetry_class(mobius_apply(g, Q, N), N)

"""Transvectants, the covariants H, T, V, U of a binary form, and J^2, K."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import InternalInconsistency, TowerTooSmall
from .exactfield import FieldElement, Tower, is_squarefree, reduce_scalar, squarefree_split
from .partitions import PivotSequence
from .poly import Mobius, Polynomial, gcd, proportional, split_roots, squarefree_part
from .subspace import Subspace, mobius_apply_subspace
from .wronski import ProjectivePoly, wronskian_covariant


class SymmetryClass(enum.Enum):
    TwoParameterStab = "TwoParameterStab"
    OneParameterStab = "OneParameterStab"
    FiniteStab = "FiniteStab"

    def __str__(self):
        return self.value


def transvectant(Q: Polynomial, R: Polynomial, r: int, n: int, m: int) -> Polynomial:
    """The ``r``-th transvectant of ``Q`` (formal degree ``n``) and ``R`` (formal degree ``m``)."""
    if not 0 <= r <= min(n, m):
        raise ValueError(f"order {r} outside 0..{min(n, m)}")
    acc = Polynomial([])
    for j in range(r + 1):
        coef = (-1) ** j * math.comb(n - r + j, j) * math.comb(m - j, r - j)
        if coef:
            acc = acc + Q.derivative(r - j) * R.derivative(j) * coef
    return (acc * math.factorial(r)).with_bound(n + m - 2 * r)


def _hessian(Q, N):
    d1, d2 = Q.derivative(), Q.derivative(2)
    return (Q * d2 - d1 * d1 * Fraction(N - 1, N)) * (N * (N - 1))


def _t_closed(Q, N):
    d1, d2, d3 = Q.derivative(), Q.derivative(2), Q.derivative(3)
    inner = (Q * Q * d3 - Q * d1 * d2 * Fraction(3 * (N - 2), N)
             + d1 * d1 * d1 * Fraction(2 * (N - 1) * (N - 2), N * N))
    return inner * (-N * N * (N - 1))


def _v_closed(Q, N):
    d1, d3, d4 = Q.derivative(), Q.derivative(3), Q.derivative(4)
    d2 = Q.derivative(2)
    Q2 = Q * Q
    return (Q2 * Q * d4
            - Q2 * d1 * d3 * Fraction(4 * (N - 3), N)
            + Q * d1 * d1 * d2 * Fraction(6 * (N - 2) * (N - 3), N * N)
            - d1 ** 4 * Fraction(3 * (N - 1) * (N - 2) * (N - 3), N ** 3))


def reduce_fraction(num: Polynomial, den: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """Cancel common factors; the denominator comes back monic."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    g = gcd(num, den)
    num, den = num.exquo(g), den.exquo(g)
    lc = den.leading()
    return num / lc, den / lc


@dataclass(frozen=True)
class CovariantBundle:
    """All covariants of ``Q`` regarded as a form of formal degree ``N``.

    ``J2`` and ``K`` are reduced ``(numerator, denominator)`` pairs, or
    ``None`` when ``H`` vanishes.
    """

    Q: Polynomial
    N: int
    H: Polynomial
    T: Polynomial
    V: Polynomial
    U: Polynomial
    J2: Optional[Tuple[Polynomial, Polynomial]]
    K: Optional[Tuple[Polynomial, Polynomial]]

    @property
    def h_vanishes(self) -> bool:
        return self.H.is_zero()


def _as_poly(Q) -> Polynomial:
    return Q.rep if isinstance(Q, ProjectivePoly) else Q


def covariant_bundle(Q, N: Optional[int] = None, check: bool = True) -> CovariantBundle:
    """Compute H, T, V, U by the closed forms, cross-checked against transvectants."""
    Q = _as_poly(Q)
    if Q.is_zero():
        raise ValueError("covariants of the zero form")
    N = Q.deg_bound if N is None else N
    if N < Q.degree:
        raise ValueError(f"formal degree {N} below deg Q = {Q.degree}")
    Q = Q.with_bound(N)
    if N < 3:
        # the closed forms divide by N and differentiate three times; tiny
        # degrees are handled by the transvectant route alone
        H = transvectant(Q, Q, 2, N, N) / 2 if N >= 2 else Polynomial([], 0)
        T = transvectant(Q, H, 1, N, 2 * N - 4) if N >= 2 and not H.is_zero() else Polynomial([])
        V = Polynomial([])
        U = Polynomial([])
        return _finish(Q, N, H, T, V, U)
    H = _hessian(Q, N).with_bound(2 * N - 4)
    T = _t_closed(Q, N).with_bound(3 * N - 6)
    V = _v_closed(Q, N).with_bound(4 * N - 8)
    U = (V * (N ** 3 * (N - 1)) - H * H * Fraction(3 * (N - 2), N - 1)).with_bound(4 * N - 8)
    if check:
        H2 = transvectant(Q, Q, 2, N, N) / 2
        T2 = transvectant(Q, H, 1, N, 2 * N - 4)
        U2 = transvectant(Q, T, 1, N, 3 * N - 6)
        for name, a, b in (("H", H, H2), ("T", T, T2), ("U", U, U2)):
            if a != b:
                raise InternalInconsistency(f"{name}: closed form {a} but transvectant {b}")
    return _finish(Q, N, H, T, V, U)


def _finish(Q, N, H, T, V, U) -> CovariantBundle:
    if H.is_zero():
        return CovariantBundle(Q, N, H, T, V, U, None, None)
    J2 = reduce_fraction(T * T, H * H * H)
    K = reduce_fraction(U, H * H)
    return CovariantBundle(Q, N, H, T, V, U, J2, K)


def classify(bundle: CovariantBundle) -> SymmetryClass:
    if bundle.H.is_zero():
        return SymmetryClass.TwoParameterStab
    T, H = bundle.T, bundle.H
    if T.is_zero() or proportional(T * T, H * H * H):
        return SymmetryClass.OneParameterStab
    return SymmetryClass.FiniteStab


def symmetry_class(Q, N: Optional[int] = None) -> SymmetryClass:
    return classify(covariant_bundle(Q, N))


def j2_constant(bundle: CovariantBundle):
    """The value of J^2 when it is constant, else ``None``."""
    if bundle.J2 is None:
        return None
    num, den = bundle.J2
    if num.degree <= 0 and den.degree == 0:
        return reduce_scalar(num[0] / den[0]) if num else Fraction(0)
    return None


# monomial subspaces ----------------------------------------------------------------

def _isqrt_exact(q: Fraction):
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def splitting_tower(f: Polynomial, tower: Tower) -> Optional[Tower]:
    """A tower containing the roots of the monic quadratic ``f``, or ``None``.

    ``tower`` may only be enlarged by filling the unused radical slot.
    """
    p, q = f[1], f[0]
    disc = reduce_scalar(p * p - 4 * q)
    if isinstance(disc, FieldElement):
        if disc.d is not None:
            return None
        a, b = disc.coords[0], disc.coords[1]
        r = _isqrt_exact(a * a + b * b)
        if r is None:
            return None
        m = (a + r) / 2  # sqrt(disc) = u + v*i with u^2 = (a + |disc|)/2 > 0
    else:
        m = disc
    num = m.numerator * m.denominator
    _, rad = squarefree_split(num)
    if rad == 1:
        return tower.join(Tower(1)) if isinstance(disc, FieldElement) else tower
    if rad == -1:
        return tower.join(Tower(1))
    if tower.level == 2:
        return tower if tower.d in (rad, -rad) else None
    assert is_squarefree(rad)
    return Tower(2, rad)


def _monomial_exponents(V: Subspace) -> Optional[Tuple[int, ...]]:
    for row in V.matrix:
        if sum(1 for x in row if x != 0) != 1:
            return None
    return tuple(sorted(V.pivot_degrees))


def monomial_equivalence_test(U: Subspace, tower: Optional[Tower] = None):
    """Find ``g`` with ``g.U`` spanned by monomials, when ``W(U)`` has at most two roots.

    Roots are counted on the Riemann sphere: infinity is a root when
    ``deg W(U) < k*l``.  A single root is sent to infinity; two roots are
    sent to ``0`` and infinity.  Returns ``(g, exponents)`` or ``None``.
    Raises TowerTooSmall when the two roots need a field the tower cannot hold.
    """
    tower = U.field if tower is None else tower.join(U.field)
    W = wronskian_covariant(U)
    N = W.deg_bound
    sq = squarefree_part(W.rep) if W.degree > 0 else Polynomial([1])
    at_inf = W.degree < N
    count = sq.degree + (1 if at_inf else 0)
    if count > 2:
        return None
    roots = []
    if sq.degree > 0:
        found, rest = split_roots(sq, tower)
        if rest.degree > 0:
            ext = splitting_tower(sq, tower) if sq.degree == 2 else None
            if ext is None:
                raise TowerTooSmall(f"the roots of {sq} are outside {tower}")
            found, rest = split_roots(sq, ext)
            assert rest.degree == 0
        roots = [r for r, _ in found]
    if count == 0:  # all of P_n
        g = Mobius.identity()
    elif count == 1:
        if at_inf:
            g = Mobius.identity()
        else:
            (r,) = roots
            g = Mobius(r, -1, 1, 0)  # z = (r Z - 1)/Z, so Z = infinity goes to r
    elif at_inf:
        (r,) = roots
        g = Mobius.translation(r)
    else:
        r1, r2 = roots
        g = Mobius(r2, r1, 1, 1)  # Z = 0 -> r1, Z = infinity -> r2
    V = mobius_apply_subspace(g, U)
    exps = _monomial_exponents(V)
    if exps is None:
        raise InternalInconsistency(f"{g} does not take {U} to a monomial subspace")
    return g, PivotSequence(exps, U.k, U.ell)

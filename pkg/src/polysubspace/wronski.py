"""Wronskians of polynomial tuples and the Wronskian covariant of a subspace."""

from __future__ import annotations

from typing import List, Sequence

from .errors import InternalInconsistency
from .poly import INF, Mobius, Polynomial, mobius_apply, ord_at
from .subspace import Subspace, shape_at


class ProjectivePoly:
    """A nonzero polynomial of ``P_N`` up to scale; stored monic."""

    __slots__ = ("rep", "deg_bound")

    def __init__(self, p: Polynomial, deg_bound=None):
        if p.is_zero():
            raise ValueError("the zero polynomial has no projective class")
        self.deg_bound = p.deg_bound if deg_bound is None else deg_bound
        self.rep = p.monic().with_bound(self.deg_bound)

    @property
    def degree(self) -> int:
        return self.rep.degree

    @property
    def tower(self):
        return self.rep.tower

    def ord_at(self, b):
        return ord_at(self.rep, b)

    def __eq__(self, other):
        if isinstance(other, ProjectivePoly):
            return self.deg_bound == other.deg_bound and self.rep == other.rep
        if isinstance(other, Polynomial):
            return not other.is_zero() and self.rep == other.monic()
        return NotImplemented

    def __hash__(self):
        return hash((self.deg_bound, self.rep))

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return f"ProjectivePoly({self.rep}, N={self.deg_bound})"


def _bareiss_det(M: List[List[Polynomial]]) -> Polynomial:
    """Fraction-free determinant; every division below is exact."""
    M = [row[:] for row in M]
    k = len(M)
    sign = 1
    prev = Polynomial([1])
    for s in range(k - 1):
        if M[s][s].is_zero():
            swap = next((i for i in range(s + 1, k) if not M[i][s].is_zero()), None)
            if swap is None:
                return Polynomial([])
            M[s], M[swap] = M[swap], M[s]
            sign = -sign
        for i in range(s + 1, k):
            for j in range(s + 1, k):
                M[i][j] = (M[i][j] * M[s][s] - M[i][s] * M[s][j]).exquo(prev)
        prev = M[s][s]
    det = M[k - 1][k - 1]
    return -det if sign < 0 else det


def wronskian(polys: Sequence[Polynomial]) -> Polynomial:
    """``det(p_j^(i))`` for ``i = 0..k-1``; the bound is ``k*(n+1-k)``."""
    polys = list(polys)
    if not polys:
        raise ValueError("wronskian of an empty tuple")
    k = len(polys)
    n = max(p.deg_bound for p in polys)
    M = [[p.derivative(i) for p in polys] for i in range(k)]
    return _bareiss_det(M).with_bound(max(k * (n + 1 - k), 0))


def vandermonde(nu: Sequence[int]) -> int:
    nu = list(nu)
    out = 1
    for i in range(len(nu)):
        for j in range(i + 1, len(nu)):
            out *= nu[j] - nu[i]
    return out


def wronskian_covariant(U: Subspace) -> ProjectivePoly:
    return ProjectivePoly(wronskian(U.basis()), U.k * U.ell)


def order_of_covariant(U: Subspace, b) -> int:
    """``ord_b W(U)`` from the shape at ``b``, checked against the Wronskian itself."""
    from_shape = U.k * U.ell - shape_at(U, b).shape.total
    direct = wronskian_covariant(U).ord_at(b)
    if from_shape != direct:
        raise InternalInconsistency(
            f"ord at {b}: shape gives {from_shape}, Wronskian gives {direct} for {U}")
    return from_shape


def transform_weighted(g: Mobius, p: Polynomial, weight: int) -> Polynomial:
    return mobius_apply(g, p.with_bound(weight), weight)


def equivariance_check(g: Mobius, polys: Sequence[Polynomial]) -> bool:
    """Exact check of ``W(g.p_1, ..., g.p_k) = det(g)^(k(k-1)/2) (g.W)`` at weight ``k*l``.

    For a unimodular ``g`` the scalar is 1; rescaling the matrix by ``s``
    multiplies the left side by ``s^(nk)`` and the right by ``s^(kl)``, and
    ``nk - kl = k(k-1)``.
    """
    polys = list(polys)
    k = len(polys)
    n = max(p.deg_bound for p in polys)
    weight = k * (n + 1 - k)
    lhs = wronskian([mobius_apply(g, p, n) for p in polys])
    rhs = transform_weighted(g, wronskian(polys), weight) * g.det ** (k * (k - 1) // 2)
    return lhs == rhs


def monomial_wronskian(nu: Sequence[int], n: int) -> Polynomial:
    """``V(nu) z^(sum nu - k(k-1)/2)``, the closed form for monomial tuples."""
    k = len(nu)
    deg = sum(nu) - k * (k - 1) // 2
    return Polynomial.monomial(deg, vandermonde(nu), k * (n + 1 - k))


def degree_from_shape(U: Subspace) -> int:
    """``deg W(U)`` as the total of the shape at infinity."""
    return shape_at(U, INF).shape.total


__all__ = [
    "ProjectivePoly", "wronskian", "vandermonde", "wronskian_covariant",
    "order_of_covariant", "equivariance_check", "transform_weighted",
    "monomial_wronskian", "degree_from_shape",
]

"""Subspaces of P_n: canonical storage, shapes, apolar duality, Möbius action."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import ParseError, ZeroSubspace
from .exactfield import QQ, QQ_I, Tower, check_radical, format_scalar, reduce_scalar
from .linalg import nullspace, rank, rref
from .partitions import Partition, PivotSequence, from_minus_pivots, from_plus_pivots
from .poly import INF, Mobius, Polynomial, gcd, mobius_apply


class Subspace:
    """A ``k``-dimensional subspace of ``P_n``.

    The basis is kept as the reduced row echelon form of the coefficient
    matrix with columns ordered ``z^n, ..., z^0``, so the pivots are the
    degrees that occur in ``U`` and two subspaces are equal exactly when the
    matrices are.  ``field`` is the tower the subspace was declared over; it
    always contains the entries.
    """

    __slots__ = ("n", "matrix", "pivot_degrees", "field")

    def __init__(self, rows: Sequence[Sequence], n: int, field: Optional[Tower] = None):
        R, piv = rref(rows)
        if not R:
            raise ZeroSubspace("the given polynomials span the zero subspace")
        self.n = n
        self.matrix = tuple(tuple(r) for r in R)
        self.pivot_degrees = tuple(n - c for c in piv)
        t = QQ
        for r in self.matrix:
            for x in r:
                t = t.join(Polynomial([x]).tower)
        self.field = t if field is None else field.join(t)

    @property
    def k(self) -> int:
        return len(self.matrix)

    @property
    def ell(self) -> int:
        return self.n + 1 - self.k

    @property
    def tower(self) -> Tower:
        return self.field

    def basis(self) -> List[Polynomial]:
        """Canonical basis, highest degree first, each element monic."""
        return [Polynomial(list(reversed(r)), self.n) for r in self.matrix]

    @property
    def degree(self) -> int:
        """``deg U``, the largest degree of an element."""
        return self.pivot_degrees[0]

    def contains(self, p: Polynomial) -> bool:
        row = list(reversed(p.with_bound(self.n).coefficients()))
        return rank(list(self.matrix) + [row]) == self.k

    def with_field(self, field: Tower) -> "Subspace":
        return Subspace(self.matrix, self.n, field)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.n, self.matrix))

    def __str__(self):
        return "span{" + ", ".join(str(p) for p in self.basis()) + f"}} in P_{self.n}"

    def __repr__(self):
        return f"Subspace({self})"

    # serialization ----------------------------------------------------------

    def to_dict(self) -> dict:
        t = self.field
        return {
            "n": self.n,
            "field": {"i": t.level >= 1, "d": t.d},
            "basis": [str(p) for p in self.basis()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def from_basis(polys: Sequence[Polynomial], n: Optional[int] = None,
               field: Optional[Tower] = None) -> Subspace:
    """Span of ``polys`` inside ``P_n`` (``n`` defaults to the common bound)."""
    polys = list(polys)
    if not polys:
        raise ZeroSubspace("no polynomials given")
    if n is None:
        n = max(p.deg_bound for p in polys)
    rows = [list(reversed(p.with_bound(n).coefficients())) for p in polys]
    return Subspace(rows, n, field)


def full_space(n: int, k: Optional[int] = None) -> Subspace:
    """``P_{k-1}`` inside ``P_n`` (all of ``P_n`` when ``k`` is omitted)."""
    k = n + 1 if k is None else k
    return from_basis([Polynomial.monomial(j, 1, n) for j in range(k)], n)


def monomial_subspace(exponents: Sequence[int], n: int) -> Subspace:
    return from_basis([Polynomial.monomial(j, 1, n) for j in exponents], n)


# shapes -----------------------------------------------------------------------

@dataclass(frozen=True)
class ShapeReport:
    """Shape data of ``U`` at a point ``b`` of the extended plane.

    ``pivots`` are the orders (or at infinity, the degrees) realized by the
    reduced basis; ``bounded_matrix[i][j]`` is the derivative of the ``i``-th
    reduced basis element of order ``non_pivots[j]`` at ``b`` (at ``0`` when
    ``b`` is infinity).
    """

    b: object
    shape: Partition
    pivots: PivotSequence
    non_pivots: Tuple[int, ...]
    reduced_basis: Tuple[Polynomial, ...]
    bounded_matrix: Tuple[Tuple, ...]


def _derivative_rows(polys, b, n):
    rows = []
    for p in polys:
        q = p if b is INF or b == 0 else p.translate(b)
        c = q.with_bound(n).coefficients()
        rows.append([reduce_scalar(c[j] * math.factorial(j)) for j in range(n + 1)])
    return rows


def shape_at(U: Subspace, b) -> ShapeReport:
    n, k, l = U.n, U.k, U.ell
    basis = U.basis()
    if b is INF:
        # reduce by degree: eliminate from the highest column down
        rows = [list(reversed(r)) for r in _derivative_rows(basis, INF, n)]
        R, piv = rref(rows)
        R = [list(reversed(r)) for r in reversed(R)]
        nu = tuple(n - c for c in reversed(piv))
    else:
        b = reduce_scalar(b)
        R, nu = rref(_derivative_rows(basis, b, n))
        nu = tuple(nu)
    mu = tuple(j for j in range(n + 1) if j not in nu)
    reduced = []
    for r in R:
        w = Polynomial([reduce_scalar(r[j] / math.factorial(j)) for j in range(n + 1)], n)
        reduced.append(w if b is INF or b == 0 else w.translate(-b))
    pivots = PivotSequence(nu, k, l)
    shape = from_minus_pivots(pivots) if b is INF else from_plus_pivots(pivots)
    bounded = tuple(tuple(r[m] for m in mu) for r in R)
    return ShapeReport(b, shape, pivots, mu, tuple(reduced), bounded)


def order_filtration(U: Subspace, b) -> List[Subspace]:
    """``U_1 = U ⊃ U_2 ⊃ ... ⊃ U_k``, each step raising the order at ``b`` (degree drop at infinity)."""
    rb = list(shape_at(U, b).reduced_basis)
    if b is INF:
        rb = rb[::-1]
    return [from_basis(rb[i:], U.n, U.field) for i in range(U.k)]


def order_of(U: Subspace, b) -> int:
    """``ord_b U``: the smallest order at ``b`` among elements of ``U``."""
    if b is INF:
        return U.n - U.degree
    return shape_at(U, b).pivots[0]


# group action and duality ----------------------------------------------------------

def mobius_apply_subspace(g: Mobius, U: Subspace) -> Subspace:
    return from_basis([mobius_apply(g, p, U.n) for p in U.basis()], U.n, U.field.join(g.tower))


def gamma(p: Polynomial, q: Polynomial, n: int):
    """The invariant pairing on ``P_n``: ``gamma(z^j, z^(n-j)) = (-1)^j / C(n, j)``."""
    if p.degree > n or q.degree > n:
        raise ValueError(f"arguments do not lie in P_{n}")
    acc = Fraction(0)
    for j in range(p.degree + 1):
        if p[j] == 0:
            continue
        term = p[j] * q[n - j] / math.comb(n, j)
        acc = acc - term if j % 2 else acc + term
    return reduce_scalar(acc)


def apolar_dual(U: Subspace) -> Subspace:
    """``U*``: everything ``gamma``-orthogonal to ``U``."""
    n = U.n
    if U.k == n + 1:
        raise ZeroSubspace("the dual of all of P_n is zero")
    conds = []
    for v in U.basis():
        # gamma(u, v) as a linear form in the coefficients of u
        conds.append([reduce_scalar((-1) ** j * v[n - j] / math.comb(n, j)) for j in range(n + 1)])
    null = nullspace(conds, n + 1)
    return from_basis([Polynomial(x, n) for x in null], n, U.field)


# primitivity ----------------------------------------------------------------------------

def common_factor(U: Subspace) -> Polynomial:
    """Monic gcd of the elements of ``U``; its roots are the finite common roots."""
    g = Polynomial([])
    for p in U.basis():
        g = gcd(g, p)
    return g


def is_primitive(U: Subspace) -> bool:
    """``deg U = n`` and no finite point where every element of ``U`` vanishes."""
    return U.degree == U.n and common_factor(U).degree == 0


def is_strongly_primitive(U: Subspace) -> bool:
    if U.k == U.n + 1:
        return False
    return is_primitive(U) and is_primitive(apolar_dual(U))


# file form -----------------------------------------------------------------------------

def _field_from_spec(spec) -> Tower:
    if spec is None:
        return QQ
    if not isinstance(spec, dict):
        raise ParseError("'field' must be an object like {\"i\": true, \"d\": 3}")
    d = spec.get("d")
    if d is not None:
        try:
            return Tower(2, check_radical(int(d)))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad radicand in 'field': {exc}") from None
    return QQ_I if spec.get("i") else QQ


def _locate(text: str, needle: str):
    pos = text.find(needle)
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def subspace_from_dict(data, source: Optional[str] = None) -> Subspace:
    """Build a subspace from the parsed JSON form; ``source`` improves error positions."""
    from .textform import parse_poly

    if not isinstance(data, dict) or "basis" not in data:
        raise ParseError("expected an object with 'n' and 'basis'", 1, 1)
    field = _field_from_spec(data.get("field"))
    basis = data["basis"]
    if not isinstance(basis, list) or not all(isinstance(s, str) for s in basis):
        raise ParseError("'basis' must be a list of strings")
    polys = []
    for s in basis:
        try:
            p = parse_poly(s, d=field.d)
        except ParseError as exc:
            line, col = _locate(source, s) if source else (None, None)
            if line is not None and exc.column is not None:
                col += exc.column - 1
            raise ParseError(exc.message, line, col if line is not None else exc.column) from None
        t = p.tower
        if t.level > field.level or (t.d is not None and t.d != field.d):
            line, col = _locate(source, s) if source else (None, None)
            raise ParseError(f"{s!r} needs {t} but the declared field is {field}", line, col)
        polys.append(p)
    n = data.get("n")
    if n is None:
        n = max(max(p.degree for p in polys), 0)
    if not isinstance(n, int) or n < 0:
        raise ParseError("'n' must be a non-negative integer")
    for p, s in zip(polys, basis):
        if p.degree > n:
            line, col = _locate(source, s) if source else (None, None)
            raise ParseError(f"{s!r} has degree {p.degree} > n = {n}", line, col)
    return from_basis([p.with_bound(n) for p in polys], n, field)


def subspace_from_json(text: str) -> Subspace:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    return subspace_from_dict(data, text)


def format_matrix(rows) -> List[List[str]]:
    return [[format_scalar(x) for x in r] for r in rows]

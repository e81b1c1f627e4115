"""Dense univariate polynomials, Möbius maps and sparse bivariate polynomials.

A :class:`Polynomial` is an element of ``P_n``: it carries its coefficient
list together with the formal degree bound ``n``, which matters for the
order at infinity and for the weight of the Möbius action.

Roots are only ever extracted inside the configured field tower; see
:func:`linear_roots`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exactfield import (FieldElement, Tower, QQ, as_element, field_inv, field_mul,
                         format_scalar, reduce_scalar, scalar_sort_key, tower_of)


class _Infinity:
    """The point at infinity of the extended complex plane."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def _is_multiterm(text: str) -> bool:
    return " + " in text or " - " in text


class Polynomial:
    """Element of ``P_n`` with exact scalar coefficients, lowest degree first."""

    __slots__ = ("_c", "deg_bound")

    def __init__(self, coeffs: Iterable = (), deg_bound: Optional[int] = None):
        c = [reduce_scalar(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        if deg_bound is None:
            deg_bound = max(len(c) - 1, 0)
        if len(c) - 1 > deg_bound:
            raise ValueError(f"degree {len(c) - 1} exceeds bound {deg_bound}")
        self._c = tuple(c)
        self.deg_bound = deg_bound

    # construction helpers -------------------------------------------------

    @classmethod
    def monomial(cls, j: int, coeff=1, deg_bound: Optional[int] = None) -> "Polynomial":
        return cls([0] * j + [coeff], deg_bound)

    @classmethod
    def constant(cls, c, deg_bound: int = 0) -> "Polynomial":
        return cls([c], deg_bound)

    @classmethod
    def from_roots(cls, roots: Iterable, deg_bound: Optional[int] = None) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p.with_bound(deg_bound if deg_bound is not None else p.degree)

    def with_bound(self, n: int) -> "Polynomial":
        return Polynomial(self._c, n)

    # basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` standing for the zero polynomial."""
        return len(self._c) - 1

    def coefficients(self) -> List:
        """Coefficients of ``1, z, ..., z^n`` padded to the degree bound."""
        return list(self._c) + [Fraction(0)] * (self.deg_bound + 1 - len(self._c))

    def __getitem__(self, j: int):
        return self._c[j] if 0 <= j < len(self._c) else Fraction(0)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def leading(self):
        return self._c[-1] if self._c else Fraction(0)

    @property
    def tower(self) -> Tower:
        t = QQ
        for x in self._c:
            t = t.join(tower_of(x))
        return t

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction, FieldElement)):
            return self._c == Polynomial([other])._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    # arithmetic ------------------------------------------------------------

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction, FieldElement)):
            return NotImplemented
        o = self._lift(other)
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for j, x in enumerate(b):
            c[j] = c[j] + x
        return Polynomial(c, max(self.deg_bound, o.deg_bound if isinstance(other, Polynomial) else 0))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-x for x in self._c], self.deg_bound)

    def __sub__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction, FieldElement)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            if other == 0:
                return Polynomial((), self.deg_bound)
            return Polynomial([x * other for x in self._c], self.deg_bound)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._c, other._c
        bound = self.deg_bound + other.deg_bound
        if not a or not b:
            return Polynomial((), bound)
        c = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                c[i + j] += x * y
        return Polynomial(c, bound)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        bound = self.deg_bound * k
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result.with_bound(bound)

    def scale(self, c) -> "Polynomial":
        return self * c

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            return self.exquo(c)
        return self * field_inv(c)

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._c)
        db = other.degree
        lc_inv = field_inv(other.leading())
        q = [Fraction(0)] * max(len(r) - db, 0)
        for k in range(len(r) - 1 - db, -1, -1):
            coef = r[k + db] * lc_inv
            if coef == 0:
                continue
            q[k] = coef
            for j, y in enumerate(other._c):
                r[k + j] = r[k + j] - coef * y
        return Polynomial(q, max(self.deg_bound - db, 0)), Polynomial(r[:db] if db > 0 else [], self.deg_bound)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def divides(self, other: "Polynomial") -> bool:
        """True when ``self`` divides ``other``."""
        return (other % self).is_zero()

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self / self.leading()

    def derivative(self, k: int = 1) -> "Polynomial":
        c = list(self._c)
        for _ in range(k):
            c = [j * c[j] for j in range(1, len(c))]
        return Polynomial(c, max(self.deg_bound - k, 0))

    def __call__(self, x):
        acc = Fraction(0)
        for coef in reversed(self._c):
            acc = acc * x + coef
        return reduce_scalar(acc)

    def compose(self, q: "Polynomial") -> "Polynomial":
        acc = Polynomial([])
        for coef in reversed(self._c):
            acc = acc * q + coef
        return acc

    def translate(self, b) -> "Polynomial":
        """``p(z + b)`` with the same degree bound."""
        return self.compose(Polynomial([b, 1])).with_bound(self.deg_bound)

    def taylor(self, b) -> List:
        """Derivative values ``p(b), p'(b), ..., p^(n)(b)``."""
        shifted = self.translate(b).coefficients()
        return [reduce_scalar(c * math.factorial(j)) for j, c in enumerate(shifted)]

    # text -----------------------------------------------------------------

    def to_str(self, var: str = "z") -> str:
        if not self._c:
            return "0"
        pieces = []
        for j in range(len(self._c) - 1, -1, -1):
            coef = self._c[j]
            if coef == 0:
                continue
            text = format_scalar(coef)
            mono = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
            if _is_multiterm(text):
                body = f"({text})" + (f"*{mono}" if mono else "")
                sign = "+"
            else:
                sign = "-" if text.startswith("-") else "+"
                mag = text[1:] if sign == "-" else text
                if not mono:
                    body = mag
                elif mag == "1":
                    body = mono
                else:
                    body = f"{mag}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r}, deg_bound={self.deg_bound})"


def ord_at(p: Polynomial, b) -> float:
    """Order of vanishing of ``p`` at ``b``; ``b`` may be :data:`INF`.

    At infinity the order is ``deg_bound - deg p``.  The zero polynomial has
    order ``math.inf`` everywhere.
    """
    if p.is_zero():
        return math.inf
    if b is INF:
        return p.deg_bound - p.degree
    m = 0
    q = p
    lin = Polynomial([-b, 1])
    while True:
        quo, rem = divmod(q, lin)
        if not rem.is_zero():
            return m
        q = quo
        m += 1


def proportional(p: Polynomial, q: Polynomial) -> bool:
    """Projective equality: ``p = c*q`` for some nonzero scalar ``c``."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    if p.degree != q.degree:
        return False
    return p.monic() == q.monic()


# Möbius maps ------------------------------------------------------------------

class Mobius:
    """Fractional linear map ``z = (a*Z + b) / (c*Z + e)``, stored up to scale.

    The action on ``P_n`` is ``p -> (c*Z + e)^n p((a*Z + b)/(c*Z + e))``.  It is
    a right action: applying ``g`` and then ``h`` equals applying ``g @ h``.
    """

    __slots__ = ("a", "b", "c", "e")

    def __init__(self, a, b, c, e):
        a, b, c, e = (reduce_scalar(x) for x in (a, b, c, e))
        if a * e - b * c == 0:
            raise ValueError("singular Möbius matrix")
        self.a, self.b, self.c, self.e = a, b, c, e

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, t) -> "Mobius":
        return cls(1, t, 0, 1)

    @classmethod
    def scaling(cls, s) -> "Mobius":
        return cls(s, 0, 0, 1)

    @classmethod
    def inversion(cls) -> "Mobius":
        """``z = -1/Z``."""
        return cls(0, -1, 1, 0)

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.e)

    @property
    def det(self):
        return reduce_scalar(self.a * self.e - self.b * self.c)

    @property
    def tower(self) -> Tower:
        t = QQ
        for x in self.entries:
            t = t.join(tower_of(x))
        return t

    def __matmul__(self, other: "Mobius") -> "Mobius":
        a, b, c, e = self.entries
        A, B, C, E = other.entries
        return Mobius(a * A + b * C, a * B + b * E, c * A + e * C, c * B + e * E)

    def inverse(self) -> "Mobius":
        return Mobius(self.e, -self.b, -self.c, self.a)

    def canonical(self) -> Tuple:
        """Entries scaled so that ``c = 1``, or ``e = 1`` when ``c = 0``."""
        s = self.c if self.c != 0 else self.e
        inv = 1 / as_element(s)
        return tuple(reduce_scalar(x * inv) for x in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Mobius):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def sort_key(self):
        """Affine maps first, then by the simplest canonical entries."""
        a, b, c, e = self.canonical()
        return (c != 0,) + tuple(scalar_sort_key(x) for x in (c, e, a, b))

    def __call__(self, Z):
        """Image of a point of the extended plane: ``z = g(Z)``."""
        a, b, c, e = self.entries
        if Z is INF:
            return INF if c == 0 else reduce_scalar(a / as_element(c))
        den = c * Z + e
        if den == 0:
            return INF
        return reduce_scalar((a * Z + b) / as_element(den))

    def to_str(self, var: str = "Z") -> str:
        a, b, c, e = self.canonical()
        num = Polynomial([b, a]).to_str(var)
        if c == 0:
            return f"z = {num}"
        den = Polynomial([e, c]).to_str(var)
        if Polynomial([b, a]).degree > 0 and _is_multiterm(num):
            num = f"({num})"
        if _is_multiterm(den):
            den = f"({den})"
        return f"z = {num}/{den}"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Mobius({self.to_str()!r})"


def mobius_apply(g: Mobius, p: Polynomial, n: Optional[int] = None) -> Polynomial:
    """``(c*Z + e)^n p((a*Z + b)/(c*Z + e))`` expanded, with ``n = p.deg_bound``."""
    n = p.deg_bound if n is None else n
    num = Polynomial([g.b, g.a])
    den = Polynomial([g.e, g.c])
    num_pows = [Polynomial([1])]
    den_pows = [Polynomial([1])]
    for _ in range(n):
        num_pows.append(num_pows[-1] * num)
        den_pows.append(den_pows[-1] * den)
    acc = Polynomial([], n)
    for j in range(p.degree + 1):
        if p[j] == 0:
            continue
        acc = acc + (num_pows[j] * den_pows[n - j]) * p[j]
    return acc.with_bound(n)


# GCD, square-free parts, roots --------------------------------------------------

def _rational_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    from sympy.polys.domains import QQ as SQQ
    from sympy.polys.euclidtools import dup_gcd

    def dense(f):
        return [SQQ(c.numerator, c.denominator) for c in reversed(f.coefficients()[:f.degree + 1])]

    g = dup_gcd(dense(p), dense(q), SQQ)
    return Polynomial([Fraction(int(c.numerator), int(c.denominator)) for c in reversed(g)]).monic()


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero only when both inputs are zero).

    Rational inputs go to sympy's gcd over Q, which avoids the coefficient
    growth of plain Euclid; tower inputs use Euclid with monic remainders.
    """
    if p.degree > 0 and q.degree > 0 and p.tower == QQ and q.tower == QQ:
        return _rational_gcd(p, q)
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
        if not b.is_zero():
            b = b.monic()
    return a.monic()


def squarefree_decomposition(p: Polynomial) -> List[Tuple[Polynomial, int]]:
    """Yun's algorithm: monic pairwise coprime square-free factors with multiplicity.

    ``p == p.leading() * prod(f**m)`` and multiplicities increase strictly.
    """
    if p.is_zero():
        raise ValueError("square-free decomposition of zero")
    f = p.monic()
    out = []
    if f.degree <= 0:
        return out
    fp = f.derivative()
    a = gcd(f, fp)
    b = f.exquo(a)
    c = fp.exquo(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a.with_bound(a.degree), i))
        b = b.exquo(a)
        c = d.exquo(a)
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p: Polynomial) -> Polynomial:
    s = Polynomial([1])
    for f, _ in squarefree_decomposition(p):
        s = s * f
    return s


def _to_sympy(x):
    import sympy

    e = as_element(x)
    a, b, c, ee = (sympy.Rational(q.numerator, q.denominator) for q in e.coords)
    expr = a + b * sympy.I
    if e.d is not None:
        r = sympy.sqrt(e.d)
        expr += c * r + ee * sympy.I * r
    return expr


def _from_sympy(expr, tower: Tower):
    """Convert an algebraic number from sympy back into the tower; None if it is not there."""
    import sympy

    expr = sympy.expand(sympy.radsimp(sympy.nsimplify(expr)))
    d = tower.d
    coords = [Fraction(0)] * 4
    for term, coef in expr.as_coefficients_dict().items():
        if not coef.is_Rational:
            return None
        q = Fraction(int(coef.p), int(coef.q))
        if term == 1:
            coords[0] += q
        elif term == sympy.I:
            coords[1] += q
        elif d is not None and (term == sympy.sqrt(abs(d)) or term == sympy.I * sympy.sqrt(abs(d))):
            with_i = term.has(sympy.I)
            if d > 0:
                coords[3 if with_i else 2] += q
            elif with_i:  # i*sqrt(|d|) = sqrt(d)
                coords[2] += q
            else:  # sqrt(|d|) = -i*sqrt(d)
                coords[3] -= q
        else:
            return None
    return reduce_scalar(FieldElement(*coords, d=d if (coords[2] or coords[3]) else None))


@lru_cache(maxsize=4096)
def _roots_of_squarefree(coeffs: Tuple, tower: Tower) -> Tuple[Tuple, Tuple]:
    import sympy

    z = sympy.Symbol("z")
    expr = sum(_to_sympy(c) * z ** j for j, c in enumerate(coeffs))
    kwargs = {}
    if tower.level == 1:
        kwargs["gaussian"] = True
    elif tower.level == 2:
        kwargs["extension"] = [sympy.I, sympy.sqrt(tower.d)]
    _, factors = sympy.factor_list(expr, z, **kwargs)
    roots = []
    rest = []
    for f, _ in factors:
        fp = sympy.Poly(f, z)
        if fp.degree() == 1:
            c1, c0 = fp.all_coeffs()
            r = _from_sympy(-c0 / c1, tower)
            if r is not None:
                roots.append(r)
                continue
        rest.append(f)
    return tuple(roots), tuple(str(f) for f in rest)


def split_roots(p: Polynomial, tower: Optional[Tower] = None):
    """Roots of ``p`` inside ``tower`` with multiplicities, and the unsplit remainder.

    Returns ``(roots, remainder)`` where ``roots`` is a sorted list of
    ``(root, multiplicity)`` and ``p`` equals ``remainder`` times the linear
    factors up to a scalar.  Every root is checked by exact evaluation.
    """
    if p.is_zero():
        raise ValueError("roots of the zero polynomial")
    tower = p.tower if tower is None else tower.join(p.tower)
    found = []
    remainder = p.monic()
    for f, m in squarefree_decomposition(p):
        if f.degree == 1:
            candidates = [field_mul(-f[0], field_inv(f[1]))]
        else:
            candidates = list(_roots_of_squarefree(tuple(f._c), tower)[0])
        for r in candidates:
            if f(r) != 0:
                raise ArithmeticError(f"root recognition produced a non-root {r}")
            found.append((r, m))
            remainder = remainder.exquo(Polynomial([-r, 1]) ** m)
    found.sort(key=lambda rm: scalar_sort_key(rm[0]))
    return found, remainder.with_bound(max(remainder.degree, 0))


def linear_roots(p: Polynomial, tower: Optional[Tower] = None) -> List[Tuple[object, int]]:
    """All roots of ``p`` lying in ``tower`` (default: the tower of ``p``)."""
    return split_roots(p, tower)[0]


# Bivariate polynomials -----------------------------------------------------------

class BiPolynomial:
    """Sparse polynomial in ``z`` and ``Z``; keys ``(i, j)`` stand for ``z^i Z^j``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Dict[Tuple[int, int], object]] = None):
        self.coeffs = {k: reduce_scalar(v) for k, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def from_z(cls, p: Polynomial) -> "BiPolynomial":
        return cls({(i, 0): c for i, c in enumerate(p._c)})

    @classmethod
    def from_Z(cls, p: Polynomial) -> "BiPolynomial":
        return cls({(0, j): c for j, c in enumerate(p._c)})

    @classmethod
    def from_z_coeffs(cls, rows: Sequence[Polynomial]) -> "BiPolynomial":
        """Build from the list of ``Z``-polynomials multiplying ``z^0, z^1, ...``."""
        out = {}
        for i, row in enumerate(rows):
            for j, c in enumerate(row._c):
                out[(i, j)] = c
        return cls(out)

    def z_coeffs(self) -> List[Polynomial]:
        if not self.coeffs:
            return []
        dz = self.degree_z
        rows = [dict() for _ in range(dz + 1)]
        for (i, j), c in self.coeffs.items():
            rows[i][j] = c
        out = []
        for r in rows:
            top = max(r) if r else -1
            out.append(Polynomial([r.get(j, 0) for j in range(top + 1)]))
        return out

    @property
    def degree_z(self) -> int:
        return max((i for i, _ in self.coeffs), default=-1)

    @property
    def degree_Z(self) -> int:
        return max((j for _, j in self.coeffs), default=-1)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "BiPolynomial") -> "BiPolynomial":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BiPolynomial(out)

    def __neg__(self):
        return BiPolynomial({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return BiPolynomial({k: v * other for k, v in self.coeffs.items()})
        out: Dict[Tuple[int, int], object] = {}
        for (i1, j1), v1 in self.coeffs.items():
            for (i2, j2), v2 in other.coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + v1 * v2
        return BiPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, z, Z):
        acc = Fraction(0)
        for (i, j), c in self.coeffs.items():
            acc = acc + c * z ** i * Z ** j
        return reduce_scalar(acc)

    def substitute_mobius(self, g: Mobius) -> Polynomial:
        """``C(g(Z), Z) * (c*Z + e)^deg_z`` as a polynomial in ``Z``."""
        dz = self.degree_z
        num = Polynomial([g.b, g.a])
        den = Polynomial([g.e, g.c])
        acc = Polynomial([])
        for i, row in enumerate(self.z_coeffs()):
            acc = acc + row * num ** i * den ** (dz - i)
        return acc

    def normalized(self) -> "BiPolynomial":
        """Scale so that the lexicographically largest monomial has coefficient 1."""
        if not self.coeffs:
            return self
        lead = self.coeffs[max(self.coeffs)]
        return self * (1 / as_element(lead))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j) in sorted(self.coeffs, reverse=True):
            mono = "*".join(x for x in (
                "" if i == 0 else ("z" if i == 1 else f"z^{i}"),
                "" if j == 0 else ("Z" if j == 1 else f"Z^{j}")) if x)
            coef = format_scalar(self.coeffs[(i, j)])
            parts.append(f"({coef})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"BiPolynomial({self})"


def _content(rows: Sequence[Polynomial]) -> Polynomial:
    g = Polynomial([])
    for r in rows:
        g = gcd(g, r)
        if g.degree == 0:
            break
    return g


def _primitive(rows: List[Polynomial]) -> Tuple[Polynomial, List[Polynomial]]:
    c = _content(rows)
    if c.is_zero():
        return c, rows
    return c, [r.exquo(c) for r in rows]


def _trim(rows: List[Polynomial]) -> List[Polynomial]:
    rows = list(rows)
    while rows and rows[-1].is_zero():
        rows.pop()
    return rows


def _prem(A: List[Polynomial], B: List[Polynomial]) -> List[Polynomial]:
    """Pseudo-remainder of ``A`` by ``B`` as polynomials in ``z`` over ``K[Z]``."""
    R = list(A)
    db = len(B) - 1
    lb = B[-1]
    while len(R) - 1 >= db and R:
        lr = R[-1]
        shift = len(R) - 1 - db
        R = [r * lb for r in R]
        for j, bj in enumerate(B):
            R[shift + j] = R[shift + j] - lr * bj
        R = _trim(R)
    return R


def _interpolate(xs: Sequence, ys: Sequence) -> Polynomial:
    """Lagrange interpolation through ``(xs[i], ys[i])``."""
    out = Polynomial([])
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Polynomial([1])
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial([-xj, 1]) / (xi - xj)
        out = out + basis * yi
    return out


def _sample_points():
    m = 0
    while True:
        yield m
        if m:
            yield -m
        m += 1


def _gcd_by_interpolation(A: List[Polynomial], B: List[Polynomial]) -> Optional[List[Polynomial]]:
    """GCD of two ``z``-primitive polynomials from specializations ``Z = Z0``.

    The specialized monic gcds are scaled by ``gamma(Z0)``, where ``gamma``
    is the gcd of the leading coefficients, so that they interpolate to a
    multiple of the true gcd.  Unlucky points can only raise the degree; the
    result is verified by exact pseudo-division and ``None`` is returned when
    that fails.
    """
    gamma = gcd(A[-1], B[-1])
    bound = gamma.degree + min(max(r.degree for r in A), max(r.degree for r in B))
    best, samples = None, []
    for Z0 in _sample_points():
        if A[-1](Z0) == 0 or B[-1](Z0) == 0:
            continue
        g = gcd(Polynomial([r(Z0) for r in A]), Polynomial([r(Z0) for r in B]))
        if best is None or g.degree < best:
            best, samples = g.degree, []
        if g.degree > best:
            continue
        samples.append((Z0, g * gamma(Z0)))
        if best == 0:
            return [Polynomial([1])]
        if len(samples) > bound:
            break
    xs = [x for x, _ in samples]
    rows = [_interpolate(xs, [g[j] for _, g in samples]) for j in range(best + 1)]
    _, G = _primitive(rows)
    if _prem(A, G) or _prem(B, G):
        return None
    return G


def _gcd_by_prs(A: List[Polynomial], B: List[Polynomial]) -> List[Polynomial]:
    """Primitive pseudo-remainder sequence in ``z`` (slow when coefficients grow)."""
    if len(A) < len(B):
        A, B = B, A
    while len(B) > 1:
        R = _prem(A, B)
        A = B
        if not R:
            B = []
            break
        _, B = _primitive(R)
    if len(B) == 1:
        # a nonzero remainder free of z: the primitive parts are coprime
        A = [Polynomial([1])]
    _, A = _primitive(A)
    return A


def bi_gcd(P: BiPolynomial, Q: BiPolynomial) -> BiPolynomial:
    """GCD in ``K[z, Z]``, returned normalized (it is defined up to a scalar).

    Contents in ``K[Z]`` are handled separately; the primitive parts go through
    evaluation and interpolation in ``Z``, with the pseudo-remainder sequence
    as a fallback.
    """
    A, B = P.z_coeffs(), Q.z_coeffs()
    if not A:
        return Q.normalized()
    if not B:
        return P.normalized()
    ca, A = _primitive(A)
    cb, B = _primitive(B)
    content = gcd(ca, cb)
    if len(A) == 1 or len(B) == 1:
        G = [Polynomial([1])]
    else:
        G = _gcd_by_interpolation(A, B)
        if G is None:
            G = _gcd_by_prs(A, B)
    return BiPolynomial.from_z_coeffs([r * content for r in G]).normalized()


def bilinear_factors(C: BiPolynomial, tower: Optional[Tower] = None) -> List[Mobius]:
    """Möbius maps ``z = -(cZ + e)/(aZ + b)`` whose bilinear factor divides ``C``.

    A factor ``L(Z) z + t T(Z)`` with ``L``, ``T`` of degree at most one has its
    ``L`` dividing the leading ``z``-coefficient and ``T`` dividing the
    trailing one, so normalizing ``L`` and ``T`` to be monic leaves only the
    scalar ``t``.  For each candidate pair, ``t`` is a common root of the
    ``Z``-coefficients of ``C(-t T/L, Z) L^deg``.
    """
    rows = C.z_coeffs()
    while rows and rows[0].is_zero():  # drop powers of z; they give no map
        rows = rows[1:]
    rows = _trim(rows)
    if len(rows) < 2:
        return []
    _, rows = _primitive(rows)
    tower = _rows_tower(rows) if tower is None else tower.join(_rows_tower(rows))
    dz = len(rows) - 1
    one = Polynomial([1])
    leads = [one] + [Polynomial([-r, 1]) for r, _ in linear_roots(rows[-1], tower)]
    trails = [one] + [Polynomial([-s, 1]) for s, _ in linear_roots(rows[0], tower)]
    found = {}
    for L in leads:
        Lpows = [one]
        for _ in range(dz):
            Lpows.append(Lpows[-1] * L)
        for T in trails:
            if L.degree == 0 and T.degree == 0:
                continue
            if L.degree == 1 and T.degree == 1 and L == T:
                continue
            # coefficient of t^i is (-1)^i C_i T^i L^(dz-i)
            by_t = [rows[i] * T ** i * Lpows[dz - i] * (-1) ** i for i in range(dz + 1)]
            top = max(p.degree for p in by_t)
            g = Polynomial([])
            for j in range(top + 1):
                g = gcd(g, Polynomial([p[j] for p in by_t]))
                if g.degree == 0:
                    break
            if g.degree <= 0:
                continue
            for t, _ in linear_roots(g, tower):
                if t == 0:
                    continue
                num = T * (-t)
                try:
                    m = Mobius(num[1], num[0], L[1], L[0])
                except ValueError:
                    continue
                found[m] = m
    return sorted(found.values(), key=Mobius.sort_key)


def _rows_tower(rows: Sequence[Polynomial]) -> Tower:
    t = QQ
    for r in rows:
        t = t.join(r.tower)
    return t

"""Exact arithmetic in the tower Q ⊂ Q(i) ⊂ Q(i, sqrt(d)).

Rationals are plain :class:`fractions.Fraction` values (ints are accepted
anywhere a scalar is expected).  Anything involving ``i`` or the radical
``sqrt(d)`` is a :class:`FieldElement` holding four rational coordinates
on the basis ``1, i, sqrt(d), i*sqrt(d)``.  The two kinds mix freely under
the usual operators, so polynomial and matrix code can stay generic over
"scalars".
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .errors import IncompatibleTower

Scalar = Union[int, Fraction, "FieldElement"]

LEVEL_NAMES = ("Q", "Q(i)", "Q(i,sqrt(d))")


def is_squarefree(d: int) -> bool:
    d = abs(d)
    if d == 0:
        return False
    p = 2
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 1
    return True


def squarefree_split(m: int):
    """Write ``m = s^2 * r`` with ``r`` square-free; returns ``(s, r)``."""
    sign = -1 if m < 0 else 1
    m = abs(m)
    s = 1
    p = 2
    while p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            s *= p
        p += 1
    return s, sign * m


def check_radical(d: int) -> int:
    """Validate the radicand of the tower; ``d`` must be square-free, not 0 or ±1."""
    d = int(d)
    if d in (0, 1, -1) or not is_squarefree(d):
        raise ValueError(f"sqrt({d}) does not give a quadratic extension of Q(i)")
    return d


class Tower(NamedTuple):
    """Smallest field of the tower containing some set of values.

    ``level`` is 0 for Q, 1 for Q(i) and 2 for Q(i, sqrt(d)).  ``d`` is only
    meaningful (and only set) at level 2.
    """

    level: int = 0
    d: Optional[int] = None

    def join(self, other: "Tower") -> "Tower":
        if self.d is not None and other.d is not None and self.d != other.d:
            raise IncompatibleTower(f"sqrt({self.d}) and sqrt({other.d}) in one expression")
        level = max(self.level, other.level)
        d = self.d if self.d is not None else other.d
        return Tower(level, d if level == 2 else None)

    def __str__(self):
        if self.level == 2:
            return f"Q(i,sqrt({self.d}))"
        return LEVEL_NAMES[self.level]


QQ = Tower(0)
QQ_I = Tower(1)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


class FieldElement:
    """``a + b*i + c*sqrt(d) + e*i*sqrt(d)`` with rational coordinates.

    Instances are immutable.  ``level`` records the tower the element was
    declared in; it is at least the smallest level that holds the value.
    """

    __slots__ = ("coords", "d", "level")

    def __init__(self, a=0, b=0, c=0, e=0, d: Optional[int] = None, level: Optional[int] = None):
        coords = (_frac(a), _frac(b), _frac(c), _frac(e))
        if (coords[2] or coords[3]) and d is None:
            raise ValueError("radical coordinates need a radicand d")
        if d is not None:
            d = check_radical(d)
        minimal = 2 if (coords[2] or coords[3]) else (1 if coords[1] else 0)
        if level is None:
            level = minimal
        if level < minimal:
            raise ValueError("declared tower is too small for the coordinates")
        if level == 2 and d is None:
            raise ValueError("level 2 needs a radicand d")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "d", d if level == 2 else None)
        object.__setattr__(self, "level", level)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @classmethod
    def i(cls) -> "FieldElement":
        return cls(0, 1)

    @classmethod
    def sqrt(cls, d: int) -> "FieldElement":
        return cls(0, 0, 1, 0, d=d)

    @property
    def tower(self) -> Tower:
        return Tower(self.level, self.d)

    def is_rational(self) -> bool:
        return not (self.coords[1] or self.coords[2] or self.coords[3])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __bool__(self):
        return any(self.coords)

    # arithmetic ---------------------------------------------------------

    def _binary_setup(self, other):
        other = as_element(other)
        tower = self.tower.join(other.tower)
        return other, tower

    def __add__(self, other):
        if not isinstance(other, (FieldElement, int, Fraction)):
            return NotImplemented
        other, tower = self._binary_setup(other)
        return FieldElement(*(x + y for x, y in zip(self.coords, other.coords)),
                            d=tower.d, level=tower.level)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(*(-x for x in self.coords), d=self.d, level=self.level)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, (FieldElement, int, Fraction)):
            return NotImplemented
        return self + (-as_element(other))

    def __rsub__(self, other):
        if not isinstance(other, (FieldElement, int, Fraction)):
            return NotImplemented
        return as_element(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(*(x * other for x in self.coords), d=self.d, level=self.level)
        if not isinstance(other, FieldElement):
            return NotImplemented
        other, tower = self._binary_setup(other)
        a1, b1, c1, e1 = self.coords
        a2, b2, c2, e2 = other.coords
        d = tower.d or 0
        return FieldElement(
            a1 * a2 - b1 * b2 + d * (c1 * c2 - e1 * e2),
            a1 * b2 + b1 * a2 + d * (c1 * e2 + e1 * c2),
            a1 * c2 + c1 * a2 - b1 * e2 - e1 * b2,
            a1 * e2 + e1 * a2 + b1 * c2 + c1 * b2,
            d=tower.d, level=tower.level)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        a, b, c, e = self.coords
        d = self.d or 0
        # x = A + B*s with A, B in Q(i); x * (A - B*s) = A^2 - d*B^2 in Q(i)
        g0 = a * a - b * b - d * (c * c - e * e)
        g1 = 2 * a * b - 2 * d * c * e
        norm = g0 * g0 + g1 * g1
        h0, h1 = g0 / norm, -g1 / norm
        conj = FieldElement(a, b, -c, -e, d=self.d, level=self.level)
        return conj * FieldElement(h0, h1, d=self.d, level=self.level)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return FieldElement(*(x / other for x in self.coords), d=self.d, level=self.level)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = FieldElement(1, d=self.d, level=self.level)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "FieldElement":
        """Image under i -> -i (the radical is left alone)."""
        a, b, c, e = self.coords
        return FieldElement(a, -b, c, -e, d=self.d, level=self.level)

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, FieldElement):
            return NotImplemented
        if self.coords != other.coords:
            return False
        if self.coords[2] or self.coords[3]:
            return self.d == other.d
        return True

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        if self.coords[2] or self.coords[3]:
            return hash((self.coords, self.d))
        return hash(self.coords)

    def __complex__(self):
        a, b, c, e = (float(x) for x in self.coords)
        if self.d is None:
            return complex(a, b)
        root = complex(self.d) ** 0.5
        return complex(a, b) + complex(c, e) * root

    # text ---------------------------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"FieldElement({format_scalar(self)!r})"


def as_element(x) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    return FieldElement(_frac(x))


def reduce_scalar(x):
    """Canonical scalar: a Fraction when the value is rational."""
    if isinstance(x, FieldElement):
        return x.coords[0] if x.is_rational() else x
    return _frac(x)


def tower_of(x) -> Tower:
    if isinstance(x, FieldElement):
        return x.tower
    return QQ


def tower_join(a, b) -> Tower:
    """Smallest tower containing both arguments (elements or towers)."""
    ta = a if isinstance(a, Tower) else tower_of(a)
    tb = b if isinstance(b, Tower) else tower_of(b)
    return ta.join(tb)


def field_add(x, y):
    return reduce_scalar(x + y)


def field_mul(x, y):
    return reduce_scalar(x * y)


def field_neg(x):
    return reduce_scalar(-x)


def field_inv(x):
    if isinstance(x, FieldElement):
        return reduce_scalar(x.inverse())
    x = _frac(x)
    if x == 0:
        raise ZeroDivisionError("inverse of zero")
    return 1 / x


def scalar_sort_key(x):
    """Total order on scalars, used only for deterministic output ordering.

    Rationals come before Gaussian values, which come before values using
    the radical; coordinates compare by size and then sign, so
    ``0 < 1 < -1 < 2`` and ``i`` comes before ``-i``.
    """
    e = as_element(x)
    return tuple((abs(c), c < 0) for c in reversed(e.coords)) + ((e.d or 0),)


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Text form such as ``-1/3*i*sqrt(3)`` or ``1 + i``."""
    e = as_element(x)
    names = ("", "i", f"sqrt({e.d})", f"i*sqrt({e.d})")
    terms = []
    for coef, name in zip(e.coords, names):
        if coef == 0:
            continue
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        if not name:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = name
        elif mag.denominator == 1:
            body = f"{mag.numerator}*{name}"
        else:
            body = f"{mag.numerator}/{mag.denominator}*{name}"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def parse_scalar(text: str, d: Optional[int] = None):
    """Parse the text form of a field element (inverse of :func:`format_scalar`)."""
    from .textform import parse_expression

    p = parse_expression(text, variables=(), d=d)
    return p

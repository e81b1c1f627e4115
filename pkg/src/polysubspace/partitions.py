"""Bounded partitions, pivot sequences and the degree of the Wronski map."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Tuple

from .errors import BoundsMismatch


@dataclass(frozen=True)
class Partition:
    """Partition with Ferrers diagram inside a ``k x l`` rectangle.

    Only the positive parts are stored; ``part(i)`` returns zero past them.
    """

    parts: Tuple[int, ...]
    k: int
    l: int

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts if x)
        object.__setattr__(self, "parts", parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts {parts} are not non-increasing")
        if len(parts) > self.k or (parts and parts[0] > self.l):
            raise ValueError(f"{list(parts)} does not fit in a {self.k}x{self.l} rectangle")

    @property
    def n(self) -> int:
        return self.k + self.l - 1

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return len(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    def part(self, i: int) -> int:
        """``lambda_i`` with 1-based ``i``."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self) -> Tuple[int, ...]:
        return tuple(self.part(i) for i in range(1, self.k + 1))

    def is_rectangular(self) -> bool:
        return all(x == self.width for x in self.parts)

    def __str__(self):
        return f"[{','.join(map(str, self.parts))}] (k={self.k},l={self.l})"


@dataclass(frozen=True)
class PivotSequence:
    """Strictly increasing ``k`` values in ``{0, ..., n}``, ``n = k + l - 1``."""

    values: Tuple[int, ...]
    k: int
    l: int

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        n = self.k + self.l - 1
        if len(values) != self.k:
            raise ValueError(f"need {self.k} pivots, got {len(values)}")
        if any(a >= b for a, b in zip(values, values[1:])) or (values and (values[0] < 0 or values[-1] > n)):
            raise ValueError(f"{values} is not strictly increasing inside 0..{n}")

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)


def conjugate(lam: Partition) -> Partition:
    w = lam.width
    parts = [sum(1 for x in lam.parts if x >= j) for j in range(1, w + 1)]
    return Partition(tuple(parts), lam.l, lam.k)


def plus_pivots(lam: Partition) -> PivotSequence:
    k, l = lam.k, lam.l
    return PivotSequence(tuple(l - 1 - lam.part(i) + i for i in range(1, k + 1)), k, l)


def minus_pivots(lam: Partition) -> PivotSequence:
    k, l = lam.k, lam.l
    return PivotSequence(tuple(lam.part(k + 1 - i) + i - 1 for i in range(1, k + 1)), k, l)


def from_plus_pivots(nu: PivotSequence) -> Partition:
    """Inverse of :func:`plus_pivots`: ``lambda_i = n - nu_i + i - k``."""
    k, l = nu.k, nu.l
    n = k + l - 1
    return Partition(tuple(n - nu[i - 1] + i - k for i in range(1, k + 1)), k, l)


def from_minus_pivots(nu: PivotSequence) -> Partition:
    """Inverse of :func:`minus_pivots`."""
    k, l = nu.k, nu.l
    return Partition(tuple(nu[k - i] - (k - i) for i in range(1, k + 1)), k, l)


def complement(lam: Partition) -> Partition:
    k, l = lam.k, lam.l
    return Partition(tuple(l - lam.part(k + 1 - i) for i in range(1, k + 1)), k, l)


def check_conjugate_complement(lam: Partition, lam_hat: Partition) -> bool:
    """Decide ``lam_hat == conjugate(lam)`` via complementary pivot sets.

    ``lam`` lives in ``B(k,l)`` and ``lam_hat`` in ``B(l,k)``; they are
    conjugate exactly when ``lam+`` and ``lam_hat-`` partition ``{0..n}``.
    """
    if (lam_hat.k, lam_hat.l) != (lam.l, lam.k):
        raise BoundsMismatch(f"shapes {lam.k}x{lam.l} and {lam_hat.k}x{lam_hat.l} are not transposed")
    n = lam.n
    plus = set(plus_pivots(lam))
    minus = set(minus_pivots(lam_hat))
    verdict = not (plus & minus) and (plus | minus) == set(range(n + 1))
    assert verdict == (conjugate(lam) == lam_hat)
    return verdict


def bounded_partitions(k: int, l: int) -> Iterator[Partition]:
    """All partitions in the ``k x l`` rectangle."""
    def rec(prefix, cap, left):
        yield Partition(tuple(prefix), k, l)
        if left == 0:
            return
        for x in range(min(cap, l), 0, -1):
            yield from rec(prefix + [x], x, left - 1)

    yield from rec([], l, k)


def superfactorial(j: int) -> int:
    """``1! 2! ... j!`` (with the empty product for ``j <= 0``)."""
    out = 1
    for i in range(1, j + 1):
        out *= math.factorial(i)
    return out


def wronski_degree(k: int, l: int) -> int:
    """Number of standard Young tableaux of rectangular shape ``k x l``."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    n = k + l - 1
    num = superfactorial(k - 1) * superfactorial(l - 1) * math.factorial(k * l)
    den = superfactorial(n)
    q, r = divmod(num, den)
    assert r == 0
    return q

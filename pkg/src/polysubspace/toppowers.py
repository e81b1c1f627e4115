"""Top powers ``(z - b)^n`` inside a subspace and bases made of them."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import DimensionDrop, TowerLimited, ZeroSubspace
from .exactfield import Tower
from .poly import INF, Mobius, Polynomial, proportional, split_roots, squarefree_part
from .subspace import Subspace, apolar_dual, common_factor, from_basis, mobius_apply_subspace
from .wronski import wronskian, wronskian_covariant


def top_power(b, n: int) -> Polynomial:
    """``(z - b)^n``, or the constant 1 when ``b`` is infinity."""
    if b is INF:
        return Polynomial([1], n)
    return (Polynomial([-b, 1]) ** n).with_bound(n)


def derivative_subspace(U: Subspace, j: int) -> Subspace:
    """Span of the ``j``-th derivatives, inside ``P_(n-j)``."""
    if j < 0:
        raise ValueError("negative derivative order")
    if j == 0:
        return U
    ders = [p.derivative(j) for p in U.basis()]
    if all(d.is_zero() for d in ders):
        raise ZeroSubspace(f"every element of U has degree below {j}")
    return from_basis(ders, U.n - j, U.field)


def find_top_powers(U: Subspace, tower: Optional[Tower] = None) -> List[Tuple[object, Polynomial]]:
    """All ``(b, (z - b)^n)`` in ``U``; ``b = INF`` stands for the constant 1.

    ``(z - b)^n`` lies in ``U`` exactly when every element of the apolar dual
    vanishes at ``b``, and 1 lies in ``U`` exactly when ``deg U* < n``.
    """
    if U.k == U.n + 1:
        raise ValueError("every top power lies in all of P_n")
    tower = U.field if tower is None else tower.join(U.field)
    D = apolar_dual(U)
    G = common_factor(D)
    out = []
    if G.degree > 0:
        roots, rest = split_roots(G, tower)
        if rest.degree > 0:
            raise TowerLimited(f"common roots {rest} of the dual lie outside {tower}")
        out = [(b, top_power(b, U.n)) for b, _ in roots]
    if D.degree < U.n:
        out.append((INF, top_power(INF, U.n)))
    for b, p in out:
        if not U.contains(p):
            raise ArithmeticError(f"top power at {b} predicted by the dual is not in U")
    return out


@dataclass
class TopPowerReport:
    """Outcome of the basis-of-top-powers test.

    ``Q`` is ``W(V^(l-1))`` where ``V = chart . U`` (``chart`` is the identity
    unless 1 lies in ``U``).  ``condition_i``/``condition_ii`` are the two
    conditions of the criterion for ``V``; ``top_powers`` lists the points
    ``b`` of ``U`` when they could be found in the tower.
    """

    has_basis: bool
    top_powers: Optional[List[Tuple[object, Polynomial]]]
    Q: Optional[Polynomial]
    lth_power_holds: Optional[bool]
    condition_i: Optional[bool] = None
    condition_ii: Optional[bool] = None
    chart: Mobius = field(default_factory=Mobius.identity)
    note: str = ""


def _criterion(V: Subspace):
    """Conditions (i) and (ii) for a subspace not containing 1."""
    k, l = V.k, V.ell
    D = derivative_subspace(V, l - 1)
    if D.k < k:
        return None, False, None
    Q = wronskian(D.basis())
    cond_i = Q.degree == k and squarefree_part(Q).degree == k
    cond_ii = all(Q.divides(q) for q in apolar_dual(V).basis()) if cond_i else False
    return Q, cond_i, cond_ii


def has_top_power_basis(U: Subspace, tower: Optional[Tower] = None) -> TopPowerReport:
    tower = U.field if tower is None else tower.join(U.field)
    n, k, l = U.n, U.k, U.ell
    if l == 0:
        return TopPowerReport(True, None, None, True, True, True,
                              note="U is all of P_n; any n+1 distinct points give a basis")
    chart = Mobius.identity()
    V = U
    if apolar_dual(U).degree < n:  # 1 lies in U: move some point outside U to infinity
        for t in range(k + 1):
            if not U.contains(top_power(t, n)):
                chart = Mobius(t, 1, 1, 0)  # z = t + 1/Z
                break
        V = mobius_apply_subspace(chart, U)
    Q, cond_i, cond_ii = _criterion(V)
    has_basis = bool(cond_i and cond_ii)
    try:
        lth = lth_power_check(U)
    except DimensionDrop:
        lth = None
    report = TopPowerReport(has_basis, None, Q, lth, cond_i, cond_ii, chart)
    if Q is None:
        report.note = "the derivative subspace lost dimension, so no basis of top powers exists"
    if has_basis:
        roots, rest = split_roots(Q, tower)
        if rest.degree > 0:
            report.note = f"basis exists but the roots of {rest} lie outside {tower}"
            return report
        points = [chart(b) for b, _ in roots]  # back to the original chart
        tops = [(b, top_power(b, n)) for b in points]
        if from_basis([p for _, p in tops], n) != U:
            raise ArithmeticError("recovered top powers do not span U")
        report.top_powers = _sorted_points(tops)
    else:
        try:
            report.top_powers = find_top_powers(U, tower)
        except TowerLimited as exc:
            report.note = str(exc)
    return report


def _sorted_points(tops):
    from .exactfield import scalar_sort_key

    finite = sorted((t for t in tops if t[0] is not INF), key=lambda t: scalar_sort_key(t[0]))
    return finite + [t for t in tops if t[0] is INF]


def count_top_powers_codim1(U: Subspace) -> int:
    """Distinct roots of ``W(U)`` on the Riemann sphere, for ``U`` of codimension 1."""
    if U.ell != 1:
        raise ValueError(f"U has codimension {U.ell}, not 1")
    W = wronskian_covariant(U)
    sq = squarefree_part(W.rep).degree if W.degree > 0 else 0
    return sq + (1 if W.degree < U.k else 0)


def lth_power_check(U: Subspace) -> bool:
    """``W(U)`` proportional to ``W(U^(l-1))^l``."""
    l = U.ell
    if l == 0:
        return True
    D = derivative_subspace(U, l - 1)
    if D.k < U.k:
        raise DimensionDrop(f"U^({l - 1}) has dimension {D.k} < {U.k}")
    return proportional(wronskian(U.basis()), wronskian(D.basis()) ** l)


# conjecture probe ----------------------------------------------------------------------

def _random_poly(rng, n, box):
    return Polynomial([rng.randint(-box, box) for _ in range(n + 1)], n)


def _distinct_ints(rng, k, box):
    return rng.sample(range(-box, box + 1), k)


def _sample(strategy, rng, k, n, box):
    if strategy == "random":
        return from_basis([_random_poly(rng, n, box) for _ in range(k)], n)
    if strategy == "planted":
        return from_basis([top_power(b, n) for b in _distinct_ints(rng, k, box)], n)
    if strategy == "mixed":
        tops = [top_power(b, n) for b in _distinct_ints(rng, k - 1, box)]
        return from_basis(tops + [_random_poly(rng, n, box)], n)
    if strategy == "moved":
        U = from_basis([top_power(b, n) for b in _distinct_ints(rng, k, box)], n)
        while True:
            a, b, c, e = (rng.randint(-box, box) for _ in range(4))
            if a * e - b * c:
                return mobius_apply_subspace(Mobius(a, b, c, e), U)
    raise ValueError(f"unknown strategy {strategy!r}")


STRATEGIES = ("random", "planted", "mixed", "moved")


def hypothesis_holds(U: Subspace) -> bool:
    """``W(U) = W(U^(l-1))^l`` and ``W(U^(l-1))`` has ``k`` distinct finite roots."""
    try:
        D = derivative_subspace(U, U.ell - 1)
    except ZeroSubspace:
        return False
    if D.k < U.k:
        return False
    Q = wronskian(D.basis())
    if Q.degree != U.k or squarefree_part(Q).degree != U.k:
        return False
    return proportional(wronskian(U.basis()), Q ** U.ell)


@dataclass
class ProbeReport:
    seed: int
    k: int
    n: int
    requested: int
    attempts: int = 0
    hits: int = 0
    hits_by_strategy: Counter = field(default_factory=Counter)
    counterexamples: List[Subspace] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "seed": self.seed, "k": self.k, "n": self.n, "l": self.n + 1 - self.k,
            "requested_hits": self.requested, "attempts": self.attempts, "hits": self.hits,
            "hits_by_strategy": dict(sorted(self.hits_by_strategy.items())),
            "counterexamples": [U.to_dict() for U in self.counterexamples],
        }


def conjecture_probe(trials: int, k: int, n: int, seed: int = 0, box: int = 5,
                     max_attempts: Optional[int] = None) -> ProbeReport:
    """Sample subspaces until ``trials`` satisfy the hypothesis; collect counterexamples.

    A counterexample satisfies :func:`hypothesis_holds` but has no basis of
    top powers.  Strategies rotate over :data:`STRATEGIES`.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    rng = random.Random(seed)
    report = ProbeReport(seed, k, n, trials)
    max_attempts = max_attempts if max_attempts is not None else 50 * trials + 100
    while report.hits < trials and report.attempts < max_attempts:
        strategy = STRATEGIES[report.attempts % len(STRATEGIES)]
        report.attempts += 1
        try:
            U = _sample(strategy, rng, k, n, box)
        except ZeroSubspace:
            continue
        if U.k != k or not hypothesis_holds(U):
            continue
        report.hits += 1
        report.hits_by_strategy[strategy] += 1
        if not has_top_power_basis(U).has_basis:
            report.counterexamples.append(U)
    return report

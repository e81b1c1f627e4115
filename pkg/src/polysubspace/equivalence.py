"""Projective equivalence of subspaces through their Wronskian covariants.

Two Wronskians are compared through the absolute invariants ``J^2`` and
``K``: the numerators of ``J^2(z) - J^2_hat(Z)`` and ``K(z) - K_hat(Z)`` share
exactly the bilinear factors that correspond to Möbius maps between them.
Once one map ``g1`` is known, the subspaces are equivalent iff some ``g2`` in
the symmetry group of ``W(U)`` has ``(g2 then g1) . U == U_hat``.

Subspaces whose Wronskian has one or two roots are reduced to monomial
subspaces instead, where only the exponent sets matter.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .covariants import (CovariantBundle, SymmetryClass, classify, covariant_bundle,
                         monomial_equivalence_test)
from .errors import (DimensionMismatch, GroupClosureFailure, InternalInconsistency,
                     NotFiniteStab, TowerLimited)
from .exactfield import FieldElement, Tower
from .partitions import PivotSequence
from .poly import BiPolynomial, Mobius, Polynomial, bi_gcd, bilinear_factors, mobius_apply, proportional
from .subspace import Subspace, mobius_apply_subspace
from .wronski import ProjectivePoly, wronskian_covariant


class Diagnostic(enum.Enum):
    WronskiansInequivalent = "WronskiansInequivalent"
    FoundWitness = "FoundWitness"
    SymmetrySearchExhausted = "SymmetrySearchExhausted"
    MonomialCase = "MonomialCase"
    InfiniteStabCase = "InfiniteStabCase"
    TowerLimited = "TowerLimited"

    def __str__(self):
        return self.value


@dataclass
class EquivalenceVerdict:
    """``equivalent`` is ``None`` when the answer could not be decided in the tower."""

    equivalent: Optional[bool]
    witness: Optional[Mobius]
    wronskian_symmetries: List[Mobius]
    diagnostic: Diagnostic
    detail: str = ""
    candidates: List[Mobius] = field(default_factory=list)


def _poly(Q) -> Polynomial:
    return Q.rep if isinstance(Q, ProjectivePoly) else Q


def _relation_numerator(f: Tuple[Polynomial, Polynomial], g: Tuple[Polynomial, Polynomial]) -> BiPolynomial:
    """Numerator of ``f(z) - g(Z)`` for reduced fractions ``f``, ``g``."""
    (a, b), (ah, bh) = f, g
    return (BiPolynomial.from_z(a) * BiPolynomial.from_Z(bh)
            - BiPolynomial.from_Z(ah) * BiPolynomial.from_z(b))


@dataclass
class Compatibility:
    maps: List[Mobius]
    common: BiPolynomial


def compatibility_data(Q, Q_hat, N: int, tower: Optional[Tower] = None,
                       bundles: Optional[Tuple[CovariantBundle, CovariantBundle]] = None) -> Compatibility:
    Q, Q_hat = _poly(Q).with_bound(N), _poly(Q_hat).with_bound(N)
    b1, b2 = bundles or (covariant_bundle(Q, N), covariant_bundle(Q_hat, N))
    for b in (b1, b2):
        cls = classify(b)
        if cls != SymmetryClass.FiniteStab:
            # J^2 and K are constant (or undefined), so they carry no relation
            raise NotFiniteStab(f"{b.Q} has an infinite symmetry group ({cls})")
    tower = (tower or Tower()).join(Q.tower).join(Q_hat.tower)
    C = bi_gcd(_relation_numerator(b1.J2, b2.J2), _relation_numerator(b1.K, b2.K))
    maps = []
    for g in bilinear_factors(C, tower):
        if proportional(mobius_apply(g, Q, N), Q_hat):
            maps.append(g)
    return Compatibility(sorted(maps, key=Mobius.sort_key), C)


def wronskian_compatibility(Q, Q_hat, N: int, tower: Optional[Tower] = None) -> List[Mobius]:
    """All Möbius maps ``g`` in the tower with ``g . Q`` proportional to ``Q_hat``."""
    return compatibility_data(Q, Q_hat, N, tower).maps


def _check_group(G: Sequence[Mobius]):
    S = set(G)
    if Mobius.identity() not in S:
        raise GroupClosureFailure("identity missing from the symmetry list")
    for g in G:
        if g.inverse() not in S:
            raise GroupClosureFailure(f"inverse of {g} missing")
        for h in G:
            if g @ h not in S:
                raise GroupClosureFailure(f"{g} composed with {h} missing")


def wronskian_symmetry_group(Q, N: int, tower: Optional[Tower] = None) -> List[Mobius]:
    """Symmetries of ``Q`` found in the tower, verified to form a group."""
    G = wronskian_compatibility(Q, Q, N, tower)
    _check_group(G)
    return G


def _class_of(U: Subspace) -> Tuple[ProjectivePoly, CovariantBundle, SymmetryClass]:
    W = wronskian_covariant(U)
    b = covariant_bundle(W.rep, W.deg_bound)
    return W, b, classify(b)


# monomial case -------------------------------------------------------------------

def reflect(exps: Sequence[int], n: int) -> Tuple[int, ...]:
    """Exponents after ``z -> 1/z``: ``nu_i -> n - nu_(k+1-i)``."""
    return tuple(n - e for e in reversed(exps))


def _monomial_form(U: Subspace, tower=None):
    test = monomial_equivalence_test(U, tower)
    if test is None:
        raise ValueError(f"{U} is not equivalent to a monomial subspace")
    g, exps = test
    refl = reflect(exps.values, U.n)
    return g, tuple(exps), refl


def monomial_canonical_form(U: Subspace, tower: Optional[Tower] = None) -> Tuple[PivotSequence, bool]:
    """Exponent set of a monomial form of ``U``, the smaller of it and its reflection.

    The flag reports whether the reflected set was the one returned.
    """
    _, exps, refl = _monomial_form(U, tower)
    if refl < exps:
        return PivotSequence(refl, U.k, U.ell), True
    return PivotSequence(exps, U.k, U.ell), False


def _monomial_decision(U, U_hat, tower, diagnostic) -> EquivalenceVerdict:
    try:
        g, e, _ = _monomial_form(U, tower)
        gh, eh, _ = _monomial_form(U_hat, tower)
    except TowerLimited as exc:
        return EquivalenceVerdict(None, None, [], Diagnostic.TowerLimited, str(exc))
    # g . U = span z^e and gh . U_hat = span z^eh; the action is a right action
    if e == eh:
        witness = g @ gh.inverse()
    elif reflect(e, U.n) == eh:
        witness = g @ Mobius(0, 1, 1, 0) @ gh.inverse()
    else:
        return EquivalenceVerdict(False, None, [], diagnostic,
                                  f"monomial exponents {list(e)} and {list(eh)} differ up to reflection")
    if mobius_apply_subspace(witness, U) != U_hat:
        raise InternalInconsistency(f"monomial witness {witness} does not map U to U_hat")
    return EquivalenceVerdict(True, witness, [], diagnostic, f"monomial exponents {list(min(e, reflect(e, U.n)))}")


# main decision ---------------------------------------------------------------------

def decide_equivalence(U: Subspace, U_hat: Subspace, tower: Optional[Tower] = None) -> EquivalenceVerdict:
    if (U.n, U.k) != (U_hat.n, U_hat.k):
        raise DimensionMismatch(f"G_{U.k}P_{U.n} versus G_{U_hat.k}P_{U_hat.n}")
    tower = (tower or Tower()).join(U.field).join(U_hat.field)
    W, bw, cls = _class_of(U)
    Wh, bwh, clsh = _class_of(U_hat)
    if cls != clsh:
        return EquivalenceVerdict(False, None, [], Diagnostic.WronskiansInequivalent,
                                  f"Wronskian classes {cls} and {clsh} differ")
    if cls == SymmetryClass.TwoParameterStab:
        return _monomial_decision(U, U_hat, tower, Diagnostic.InfiniteStabCase)
    if cls == SymmetryClass.OneParameterStab:
        return _monomial_decision(U, U_hat, tower, Diagnostic.MonomialCase)
    N = W.deg_bound
    comp = compatibility_data(W.rep, Wh.rep, N, tower, (bw, bwh))
    if not comp.maps:
        C = comp.common
        if C.degree_z >= 1 and C.degree_Z >= 1:
            return EquivalenceVerdict(None, None, [], Diagnostic.TowerLimited,
                                      f"J^2/K relations share a factor without bilinear factors in {tower}")
        return EquivalenceVerdict(False, None, [], Diagnostic.WronskiansInequivalent,
                                  "the J^2 and K relations are incompatible")
    g1 = comp.maps[0]
    try:
        stab = wronskian_symmetry_group(W.rep, N, tower)
    except GroupClosureFailure as exc:
        return EquivalenceVerdict(None, None, [], Diagnostic.TowerLimited, str(exc))
    coset = {g2 @ g1 for g2 in stab}
    if coset != set(comp.maps):
        raise InternalInconsistency("the maps W(U) -> W(U_hat) are not a coset of Stab W(U)")
    witnesses = sorted((g2 @ g1 for g2 in stab if mobius_apply_subspace(g2 @ g1, U) == U_hat),
                       key=Mobius.sort_key)
    if not witnesses:
        return EquivalenceVerdict(False, None, stab, Diagnostic.SymmetrySearchExhausted,
                                  f"none of the {len(stab)} maps W(U) -> W(U_hat) carries U to U_hat",
                                  comp.maps)
    return EquivalenceVerdict(True, witnesses[0], stab, Diagnostic.FoundWitness, "", comp.maps)


def subspace_symmetries(U: Subspace, tower: Optional[Tower] = None) -> List[Mobius]:
    """Elements of ``Stab W(U)`` (found in the tower) that fix ``U``."""
    W, _, cls = _class_of(U)
    if cls != SymmetryClass.FiniteStab:
        raise NotFiniteStab(f"W(U) = {W} has an infinite symmetry group ({cls})")
    tower = (tower or Tower()).join(U.field)
    G = wronskian_symmetry_group(W.rep, W.deg_bound, tower)
    return [g for g in G if mobius_apply_subspace(g, U) == U]


# numeric candidate generator (cross-check only) ------------------------------------

def _numeric_roots(Q: Polynomial, N: int, tol=1e-6):
    import numpy as np

    coeffs = [complex(c) for c in reversed(Q.coefficients()[:Q.degree + 1])]
    raw = list(np.roots(coeffs)) if Q.degree > 0 else []
    clusters: List[List] = []
    for r in raw:
        for cl in clusters:
            if abs(cl[0] - r) < tol * max(1, abs(r)):
                cl[1] += 1
                break
        else:
            clusters.append([r, 1])
    pts = [((complex(r), 1 + 0j), m) for r, m in clusters]
    if Q.degree < N:
        pts.append(((1 + 0j, 0j), N - Q.degree))
    return pts


def _three_point(P1, P2, P3):
    """Matrix sending 0, infinity, 1 to the homogeneous points P1, P2, P3."""
    det = lambda u, v: u[0] * v[1] - u[1] * v[0]
    lam = -det(P1, P3) / det(P2, P3)
    return [[lam * P2[0], P1[0]], [lam * P2[1], P1[1]]]


def _recognize(x: complex, bound=10 ** 6, tol=1e-9):
    re = Fraction(x.real).limit_denominator(bound)
    im = Fraction(x.imag).limit_denominator(bound)
    if abs(float(re) - x.real) > tol or abs(float(im) - x.imag) > tol:
        return None
    return FieldElement(re, im) if im else re


def numeric_candidates(Q, Q_hat, N: int) -> List[Mobius]:
    """Möbius maps between two forms found by matching root triples numerically.

    Coefficients are recognized in Q(i) only; every candidate is verified
    exactly before being returned, so this never produces a wrong map, but it
    may miss maps with irrational entries.
    """
    import itertools

    import numpy as np

    Q, Q_hat = _poly(Q).with_bound(N), _poly(Q_hat).with_bound(N)
    R, Rh = _numeric_roots(Q, N), _numeric_roots(Q_hat, N)
    if len(R) < 3 or len(Rh) < 3:
        return []
    src = R[:3]
    Mz = np.array(_three_point(*(p for p, _ in src)), dtype=complex)
    out = {}
    for tri in itertools.permutations(Rh, 3):
        if [m for _, m in tri] != [m for _, m in src]:
            continue
        MZ = np.array(_three_point(*(p for p, _ in tri)), dtype=complex)
        G = Mz @ np.linalg.inv(MZ)
        flat = G.flatten()
        s = flat[2] if abs(flat[2]) > 1e-12 else flat[3]
        ents = [_recognize(x / s) for x in flat]
        if any(x is None for x in ents):
            continue
        try:
            g = Mobius(*ents)
        except ValueError:
            continue
        if proportional(mobius_apply(g, Q, N), Q_hat):
            out[g] = g
    return sorted(out.values(), key=Mobius.sort_key)

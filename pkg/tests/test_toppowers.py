import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _util import rand_mobius, rand_subspace, rng_for
from polysubspace import (INF, DimensionDrop, ZeroSubspace, apolar_dual, conjecture_probe,
                          count_top_powers_codim1, derivative_subspace, find_top_powers,
                          from_basis, has_top_power_basis, lth_power_check, parse_poly)
from polysubspace.poly import proportional
from polysubspace.subspace import full_space, mobius_apply_subspace, monomial_subspace
from polysubspace.toppowers import hypothesis_holds, top_power


def P(text, n=None, d=None):
    return parse_poly(text, deg_bound=n, d=d)


def span(texts, n, d=None):
    return from_basis([P(t, n, d) for t in texts], n)


CUBES = ["(z-1)^3", "(z+1)^3"]


def test_derivative_subspace_examples():
    U = span(CUBES, 3)
    assert derivative_subspace(U, 1) == span(["(z-1)^2", "(z+1)^2"], 2)
    D = derivative_subspace(span(["1", "z"], 1), 1)
    assert D.k == 1 and D == span(["1"], 0)
    assert derivative_subspace(U, 0) == U
    with pytest.raises(ZeroSubspace):
        derivative_subspace(span(["1"], 2), 1)


def test_find_top_powers_examples():
    assert sorted(b for b, _ in find_top_powers(span(CUBES, 3))) == [-1, 1]
    assert [b for b, _ in find_top_powers(full_space(4, 2))] == [INF]
    U1 = span(["z^3 - sqrt(3)*i*z", "z^2 - i/sqrt(3)"], 3, d=3)
    assert find_top_powers(U1) == []


def test_basis_of_cubes():
    rep = has_top_power_basis(span(CUBES, 3))
    assert rep.has_basis and rep.condition_i and rep.condition_ii
    assert proportional(rep.Q, P("z^2 - 1"))
    assert [b for b, _ in rep.top_powers] == [1, -1]
    assert rep.lth_power_holds


def test_codimension_one_examples():
    assert not has_top_power_basis(span(["z", "z^2"], 2)).has_basis   # W = z^2
    assert not has_top_power_basis(span(["1", "z"], 2)).has_basis     # W constant
    assert has_top_power_basis(span(["(z-1)^2", "(z+1)^2"], 2)).has_basis


def test_monomial_pair_has_no_basis():
    rep = has_top_power_basis(span(["z", "z^2"], 3))
    assert not rep.has_basis


def test_basis_through_the_constant():
    rep = has_top_power_basis(span(["1", "z^3"], 3))
    assert rep.has_basis
    assert [b for b, _ in rep.top_powers] == [0, INF]


def test_count_codim1_examples():
    assert count_top_powers_codim1(span(["(z-1)^2", "(z+1)^2"], 2)) == 2
    assert count_top_powers_codim1(span(["z + 1", "z^2 + z"], 2)) == 1
    assert count_top_powers_codim1(full_space(3, 3)) == 1
    with pytest.raises(ValueError):
        count_top_powers_codim1(span(CUBES, 3))


def test_lth_power_examples():
    assert lth_power_check(span(CUBES, 3))
    assert not lth_power_check(span(["z^3 + 2*z + 5", "z^2 - 3*z + 1"], 3))
    with pytest.raises(DimensionDrop):
        lth_power_check(span(["1", "z"], 3))


def _planted(rng, n, k):
    nodes = rng.sample(range(-6, 7), k)
    return nodes, from_basis([top_power(b, n) for b in nodes], n)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_planted_round_trip(seed):
    rng = rng_for(seed)
    n = rng.randint(2, 7)
    k = rng.randint(1, n)
    nodes, U = _planted(rng, n, k)
    rep = has_top_power_basis(U)
    assert rep.has_basis
    assert sorted(b for b, _ in rep.top_powers) == sorted(nodes)
    assert rep.lth_power_holds


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_at_most_k_top_powers(seed):
    rng = rng_for(seed)
    n = rng.randint(2, 6)
    k = rng.randint(1, n)
    nodes, U = _planted(rng, n, k)
    if rng.random() < 0.5:
        U = mobius_apply_subspace(rand_mobius(rng, box=2), U)
    assert len(find_top_powers(U)) <= k


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_membership_matches_dual(seed):
    rng = rng_for(seed)
    n = rng.randint(2, 6)
    k = rng.randint(1, n)
    nodes, U = _planted(rng, n, max(1, k - 1))
    if rng.random() < 0.5:
        U = from_basis(U.basis() + [P("z^%d + %d" % (rng.randint(0, n), rng.randint(-3, 3)), n)], n)
    D = apolar_dual(U)
    for b in range(-6, 7):
        inside = U.contains(top_power(b, n))
        assert inside == all(q(b) == 0 for q in D.basis())


def test_necessary_condition():
    # a top-power basis forces the l-th power identity
    rng = rng_for(4)
    for _ in range(20):
        n = rng.randint(2, 6)
        _, U = _planted(rng, n, rng.randint(1, n))
        assert lth_power_check(U)
        assert hypothesis_holds(U)


def test_probe_small():
    rep = conjecture_probe(30, 2, 3, seed=1)
    assert rep.hits == 30 and rep.counterexamples == []
    assert sum(rep.hits_by_strategy.values()) == 30
    again = conjecture_probe(30, 2, 3, seed=1)
    assert again.as_dict() == rep.as_dict()

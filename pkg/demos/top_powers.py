"""Recognising subspaces spanned by top powers (z - b)^n, and a probe of the converse.

A basis of top powers forces the l-th power condition on W(U^(l-1)); the probe
samples subspaces satisfying that condition and looks for ones that still have
no such basis.  For l = 1 and l = 2 none should turn up.
"""

from polysubspace import conjecture_probe, from_basis, has_top_power_basis, parse_poly

n = 4
planted = from_basis([parse_poly(f"(z - ({b}))^{n}", deg_bound=n) for b in (2, -1, 3)])
generic = from_basis([parse_poly(t, deg_bound=n) for t in ("z^4 + z", "z^3 - 2", "z^2 + z + 1")])

for name, U in (("planted", planted), ("generic", generic)):
    rep = has_top_power_basis(U)
    print(f"{name}: {U}")
    print(f"   has basis of top powers: {rep.has_basis} "
          f"(conditions {rep.condition_i}, {rep.condition_ii}; l-th power condition {rep.lth_power_holds})")
    if rep.top_powers:
        print("   nodes:", [str(b) for b, _ in rep.top_powers])

for k, n in ((3, 3), (3, 4)):
    r = conjecture_probe(50, k, n, seed=1)
    print(f"probe k={k}, n={n}: {r.hits} hits in {r.attempts} samples, "
          f"{len(r.counterexamples)} counterexamples")

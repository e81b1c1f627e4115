"""Exact polynomial subspaces, Wronskian covariants and projective equivalence.

Everything is computed exactly over Q, Q(i) or Q(i, sqrt(d)).
"""

__version__ = "0.1.0"

from .errors import (BoundsMismatch, DimensionDrop, DimensionMismatch, GroupClosureFailure,
                     IncompatibleTower, InternalInconsistency, NotFiniteStab, ParseError,
                     PolySubspaceError, TowerLimited, TowerTooSmall, ZeroSubspace)
from .exactfield import (QQ, QQ_I, FieldElement, Tower, field_add, field_inv, field_mul,
                         field_neg, format_scalar, parse_scalar, tower_join)
from .poly import (INF, BiPolynomial, Mobius, Polynomial, bi_gcd, bilinear_factors, gcd,
                   linear_roots, mobius_apply, ord_at, squarefree_decomposition)
from .textform import parse_poly
from .partitions import (Partition, PivotSequence, check_conjugate_complement, complement,
                         conjugate, minus_pivots, plus_pivots, wronski_degree)
from .subspace import (ShapeReport, Subspace, apolar_dual, from_basis, gamma, is_primitive,
                       is_strongly_primitive, mobius_apply_subspace, shape_at,
                       subspace_from_json)
from .wronski import (ProjectivePoly, equivariance_check, order_of_covariant, vandermonde,
                      wronskian, wronskian_covariant)
from .covariants import (CovariantBundle, SymmetryClass, covariant_bundle,
                         monomial_equivalence_test, symmetry_class, transvectant)
from .equivalence import (Diagnostic, EquivalenceVerdict, decide_equivalence,
                          monomial_canonical_form, subspace_symmetries, wronskian_compatibility,
                          wronskian_symmetry_group)
from .toppowers import (TopPowerReport, conjecture_probe, count_top_powers_codim1,
                        derivative_subspace, find_top_powers, has_top_power_basis,
                        lth_power_check)

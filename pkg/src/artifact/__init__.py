"""Exact decomposition data for invariants of imprimitive reflection groups.

The package computes, in exact cyclotomic arithmetic, the combinatorial
and representation-theoretic data attached to the invariant map of the
groups G(m, e, n): partition strata and their specialization diagram,
canonical filtration layers with a symbolic Reynolds-sum oracle, the full
irreducible census built from orbit spans of seed polynomials, isotypic
and matrix-unit projectors, Mackey/Clifford consistency checks, and
residue classification of logarithmic differential forms.

The ``reflect`` command line exposes the same operations; the
``acceptance`` module packages the machine-checkable acceptance suite.
"""

from .exactalg import (CycNum, Poly, act, delta_n, f_alpha, parse_cyc,
                       parse_poly, specht, specht_power, vandermonde,
                       x_alpha)
from .filtration import (FiltrationLayer, canonical_content,
                         canonical_content_oracle, intersection_criterion,
                         quotient_content, trace_vanishing_oracle)
from .groups import (BoundExceeded, GroupElement, GroupSpec, Subgroup,
                     conjugacy_classes, double_cosets, elements_of,
                     full_subgroup, generators, inertia_group, inv,
                     make_element, mul, young_subgroup)
from .partitions import (conjugate, dominance_leq, enumerate_partitions,
                         enumerate_set_partitions, hook_length_count,
                         min_filled, phi_mu, raw_layer, strata_graph)
from .repr import (Character, RegularModule, Representation, all_irreps,
                   cyclic_span_dim, induced_character, inner_product,
                   invariant_dim, mackey_check, orbit_span, projector_chi,
                   projector_unit, restricted_character, reynolds,
                   young_irreps)
from .residues import (INFINITY, Certificate, LogForm, NotEtaleTrivial,
                       ResidueDivisor, classify_etale_trivial, dlog,
                       extract_log_part_univariate, iso_class_equal,
                       logform_from_json, residue_along, residue_divisor)

__version__ = "0.1.0"

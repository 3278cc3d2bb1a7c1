"""Canonical filtration of the symmetric-group direct image, as label calculus.

For the invariant map of S_n acting on n variables, the direct image of the
structure sheaf decomposes into isotypic pieces indexed by partitions of n.
The canonical filtration assigns to every stratum label mu (a partition of n)
the set of isotypic labels whose modules lie in the layer N_mu.  This module
implements:

* the combinatorial membership rule (``canonical_content``), built on the
  dominance-order predicate from :mod:`artifact.partitions`;
* the successive quotients Phi_mu (``quotient_content``);
* a brute-force symbolic oracle (``canonical_content_oracle``) that decides
  membership by computing Reynolds averages of Specht polynomials over Young
  subgroups in exact arithmetic, entirely independently of the rule;
* the intersection criterion (``intersection_criterion``) equivalent to the
  vanishing of those averages.

Labels returned by the content functions are isotypic labels, i.e. the
conjugates of the raw layer partitions; the raw sets are available from
:func:`artifact.partitions.raw_layer` and :func:`artifact.partitions.phi_mu`.
"""

from dataclasses import dataclass
from itertools import permutations

from .exactalg import Poly, act, specht
from .groups import BoundExceeded, GroupElement, GroupSpec
from .partitions import (
    check_partition,
    check_set_partition,
    conjugate,
    enumerate_partitions,
    min_filled,
    phi_mu,
    raw_layer,
    set_partitions_of_shape,
)

#: Largest n for which the symbolic Reynolds oracle will run by default.
#: A Young subgroup on n letters has at most n! elements, so n = 7 keeps a
#: single trace computation under 5040 polynomial actions.
SYMBOLIC_BOUND = 7


@dataclass(frozen=True)
class FiltrationLayer:
    """One layer of the canonical filtration.

    ``mu`` is the stratum label (a partition of n) and ``content`` is the
    frozenset of isotypic labels lambda whose modules M_lambda lie inside the
    layer N_mu.  Contents grow along the specialization order of strata and
    the fully-split stratum (1, ..., 1) has empty content.
    """

    mu: tuple
    content: frozenset

    def __str__(self):
        labels = ", ".join(str(lam) for lam in sorted(self.content, reverse=True))
        return f"N_{self.mu} = {{{labels}}}"


def canonical_content(mu) -> FiltrationLayer:
    """Layer content of the canonical filtration at stratum ``mu``.

    Combinatorial rule: the content consists of the conjugates of all
    partitions lambda of n that are *not* dominated from below by mu, i.e.
    ``not dominance_leq(mu, lambda)``.
    """
    mu = check_partition(mu)
    return FiltrationLayer(mu, frozenset(conjugate(lam) for lam in raw_layer(mu)))


def quotient_content(mu) -> frozenset:
    """Isotypic labels contributed at stratum ``mu``.

    Returns the conjugates of the members of Phi_mu: the partitions in the
    raw layer of mu with exactly one more part than mu.  See
    :func:`artifact.partitions.phi_mu` for the choice of rule.
    """
    mu = check_partition(mu)
    return frozenset(conjugate(lam) for lam in phi_mu(mu))


def _block_average(poly: Poly, block, n: int) -> Poly:
    """Sum of the images of ``poly`` under all permutations of ``block``.

    The permutations fix every variable outside ``block``; the result is the
    (unnormalized) Reynolds average over the symmetric group of the block.
    """
    spec = GroupSpec(1, 1, n)
    zero_w = (0,) * n
    total = Poly.zero(n, poly.m)
    for image in permutations(block):
        perm = list(range(1, n + 1))
        for src, dst in zip(block, image):
            perm[src - 1] = dst
        total = total + act(GroupElement(spec, zero_w, tuple(perm)), poly)
    return total


def trace_vanishing_oracle(P, Q, bound: int = SYMBOLIC_BOUND) -> bool:
    """Decide symbolically whether the Young-subgroup trace of s_Q vanishes.

    Computes the Reynolds sum of the Specht polynomial s_Q over the Young
    subgroup of the set partition ``P`` in exact arithmetic and reports
    whether it is the zero polynomial.  The sum over the product group
    factors into successive averages over the individual blocks of ``P``,
    which commute; a zero intermediate result short-circuits the remaining
    blocks since averaging preserves zero.

    Raises :class:`BoundExceeded` when the underlying set has more than
    ``bound`` elements.
    """
    P = check_set_partition(P)
    Q = check_set_partition(Q)
    n = sum(len(b) for b in P)
    if sum(len(b) for b in Q) != n:
        raise ValueError("P and Q must partition the same set")
    if n > bound:
        raise BoundExceeded(f"symbolic trace oracle limited to n <= {bound}, got n = {n}")
    poly = specht(Q, n)
    for block in P:
        if len(block) == 1:
            continue
        poly = _block_average(poly, block, n)
        if poly.is_zero():
            return True
    return poly.is_zero()


def intersection_criterion(P, Q) -> bool:
    """Combinatorial criterion equivalent to the vanishing of the trace.

    True iff some block of ``P`` meets some block of ``Q`` in at least two
    elements; in that case s_Q is antisymmetric in two letters that the Young
    subgroup of ``P`` symmetrizes, and the trace vanishes.
    """
    P = check_set_partition(P)
    Q = check_set_partition(Q)
    return any(len(set(pb) & set(qb)) >= 2 for pb in P for qb in Q)


def canonical_content_oracle(mu, bound: int = SYMBOLIC_BOUND) -> frozenset:
    """Layer content at ``mu`` computed by brute-force symbolic traces.

    An isotypic label kappa belongs to the layer iff for *every* set
    partition P of shape mu the Young-subgroup trace of the Specht polynomial
    of the min-filled set partition of shape kappa vanishes.  Fixing the
    min-filled indexer per shape is sound because the vanishing is invariant
    under relabelling the blocks of Q by any permutation once all P of the
    given shape are quantified over.

    Raises :class:`BoundExceeded` when n exceeds ``bound``.
    """
    mu = check_partition(mu)
    n = sum(mu)
    if n > bound:
        raise BoundExceeded(f"symbolic content oracle limited to n <= {bound}, got n = {n}")
    shapes_p = set_partitions_of_shape(mu, n)
    out = set()
    for kappa in enumerate_partitions(n):
        indexer = min_filled(kappa)
        if all(trace_vanishing_oracle(P, indexer, bound) for P in shapes_p):
            out.add(kappa)
    return frozenset(out)

"""Partition and set-partition combinatorics.

Partitions of an integer n are represented as tuples of weakly decreasing
positive integers summing to n; the empty tuple is the unique partition of 0.
Set partitions of {1..n} are tuples of disjoint blocks (tuples of integers)
covering {1..n}; the normal form orders blocks by decreasing size, ties
broken by smallest element, and sorts members inside each block.

The module provides the two partial orders on partitions that drive the
canonical filtration of the symmetric-group direct image — the dominance
order and the coarser merge ("specialization") order — together with the
layer sets P_n^mu, their successive differences Phi_mu, and the Hasse
diagram of the merge order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

MAX_N = 40  # overflow guard for partition enumeration


# ---------------------------------------------------------------------------
# validation helpers
# ---------------------------------------------------------------------------

def check_partition(parts) -> tuple:
    """Validate and normalize a partition given as any iterable of ints."""
    t = tuple(int(p) for p in parts)
    if any(p <= 0 for p in t):
        raise ValueError(f"partition parts must be positive: {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {t}")
    return t


def check_set_partition(blocks, n: int | None = None) -> tuple:
    """Validate a set partition of {1..n} and return its normal form.

    Blocks are sorted by decreasing size (ties by smallest member) and the
    members inside each block are sorted increasingly.
    """
    bl = [tuple(sorted(int(x) for x in b)) for b in blocks]
    if any(len(b) == 0 for b in bl):
        raise ValueError("empty block in set partition")
    members = sorted(x for b in bl for x in b)
    if n is None:
        n = len(members)
    if members != list(range(1, n + 1)):
        raise ValueError(f"blocks must partition {{1..{n}}}: got {bl}")
    bl.sort(key=lambda b: (-len(b), b[0]))
    return tuple(bl)


def shape_of(blocks) -> tuple:
    """Block-size partition of a set partition."""
    return tuple(sorted((len(b) for b in blocks), reverse=True))


def min_filled(shape, members=None) -> tuple:
    """The set partition of given shape whose blocks take the smallest
    available members in order: shape (2,2) on {1..4} -> ((1,2),(3,4)).

    ``members`` defaults to 1..n; passing an explicit sorted tuple fills the
    blocks from that ground set instead.
    """
    shape = check_partition(shape) if shape else ()
    if members is None:
        members = tuple(range(1, sum(shape) + 1))
    else:
        members = tuple(sorted(members))
    if len(members) != sum(shape):
        raise ValueError("ground set size does not match shape")
    blocks, idx = [], 0
    for s in shape:
        blocks.append(tuple(members[idx:idx + s]))
        idx += s
    return tuple(blocks)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_partitions(n: int) -> list:
    """All partitions of n, each exactly once, in reverse-lexicographic
    order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_N:
        raise ValueError(f"n > {MAX_N} not supported")
    return _enumerate_partitions(n)


@lru_cache(maxsize=None)
def _enumerate_partitions(n: int) -> list:
    out = []

    def rec(rem, mx, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rem, mx), 0, -1):
            prefix.append(p)
            rec(rem - p, p, prefix)
            prefix.pop()

    rec(n, n if n else 1, [])
    return out if n else [()]


def enumerate_set_partitions(n: int):
    """All set partitions of {1..n} in normal form (deterministic order)."""
    if n == 0:
        yield ()
        return

    def rec(k, blocks):
        if k > n:
            yield check_set_partition(blocks, n)
            return
        for i in range(len(blocks)):
            blocks[i].append(k)
            yield from rec(k + 1, blocks)
            blocks[i].pop()
        blocks.append([k])
        yield from rec(k + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def set_partitions_of_shape(shape, n: int | None = None) -> list:
    """All set partitions of {1..n} whose block-size partition equals shape."""
    shape = check_partition(shape)
    if n is None:
        n = sum(shape)
    if sum(shape) != n:
        raise ValueError("shape must sum to n")
    return [p for p in enumerate_set_partitions(n) if shape_of(p) == shape]


# ---------------------------------------------------------------------------
# orders
# ---------------------------------------------------------------------------

def conjugate(lam) -> tuple:
    """Transpose of the Young diagram."""
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def dominance_leq(lam, mu) -> bool:
    """True iff lam is dominated by mu: every prefix sum of mu is >= the
    corresponding prefix sum of lam."""
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions must have equal size")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if b < a:
            return False
    return True


def specialization_succ(lam, mu) -> bool:
    """True iff mu arises by merging parts of lam (mu coarsens lam).

    Implemented by exhaustive search over assignments of the parts of lam
    to the parts of mu.
    """
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions must have equal size")
    return _merges_to(lam, mu)


@lru_cache(maxsize=None)
def _merges_to(lam: tuple, mu: tuple) -> bool:
    if not mu:
        return not lam
    if len(lam) < len(mu):
        return False
    target = mu[0]

    def pick(idx, remaining, chosen):
        if remaining == 0:
            rest = tuple(x for i, x in enumerate(lam) if i not in chosen)
            return _merges_to(rest, mu[1:])
        if idx >= len(lam):
            return False
        for j in range(idx, len(lam)):
            if lam[j] > remaining:
                continue
            if j > idx and lam[j] == lam[j - 1] and (j - 1) not in chosen:
                continue  # skip equal-part duplicates
            chosen.add(j)
            if pick(j + 1, remaining - lam[j], chosen):
                chosen.discard(j)
                return True
            chosen.discard(j)
        return False

    return pick(0, target, set())


# ---------------------------------------------------------------------------
# the reduction procedure and layer membership
# ---------------------------------------------------------------------------

def reduce(lam, k: int) -> tuple:
    """Replace the largest part by lam_1 - k, re-sort decreasingly and drop
    zero parts: a partition of |lam| - k."""
    lam = check_partition(lam)
    if not lam and k == 0:
        return ()
    if not lam or k < 0 or k > lam[0]:
        raise ValueError(f"k={k} out of range for {lam}")
    parts = [lam[0] - k] + list(lam[1:])
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def reduction_accepts(lam, mu) -> bool:
    """The iterated-reduction acceptance rule: starting from lam, test at
    step i whether mu_i exceeds the current largest part; if so accept,
    otherwise reduce by mu_i and continue.  Rejects iff every step reduces.

    This rule is a strict over-approximation of layer membership: it agrees
    with :func:`in_pnmu` for n <= 3 but from n = 4 on accepts extra pairs —
    the first being lam=(3,1), mu=(2,2), which the symbolic trace oracle
    rejects.  It is kept for reference and comparison; all layer
    computations use :func:`in_pnmu`.
    """
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions must have equal size")
    cur = lam
    for i, m_i in enumerate(mu):
        top = cur[0] if cur else 0
        if m_i > top:
            return True
        cur = reduce(cur, m_i)
    return False


def in_pnmu(lam, mu) -> bool:
    """Membership of lam in the layer set P_n^mu.

    Equivalent characterization: lam lies in P_n^mu iff mu does NOT dominate
    ... iff ``not dominance_leq(mu, lam)``.  This matches the symbolic trace
    oracle (Reynolds averages of Specht polynomials over Young subgroups)
    exactly; see the filtration module's oracle.
    """
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions must have equal size")
    return not dominance_leq(mu, lam)


def raw_layer(mu) -> frozenset:
    """The raw layer set P_n^mu = { lam : in_pnmu(lam, mu) }."""
    mu = check_partition(mu)
    n = sum(mu)
    return frozenset(lam for lam in enumerate_partitions(n) if in_pnmu(lam, mu))


def phi_mu(mu) -> frozenset:
    """The quotient set Phi_mu: the slice of P_n^mu one level below mu.

    Returns the members of the raw layer ``raw_layer(mu)`` having exactly
    ``len(mu) + 1`` parts.  The slice reproduces the reference values
    Phi_{(4)} = {(3,1),(2,2)} at n = 4 and Phi_{(2,2,2)} =
    {(2,2,1,1),(3,1,1,1)} at n = 6, together with the singleton counts at
    the remaining n = 4 strata and at (2,1,...,1) for n <= 6; no set
    difference of raw layers over any ordering of the strata reproduces all
    of those values simultaneously.  The slices over all mu cover every
    partition of n except (n) itself, but incomparable strata may share
    slice members, so the slices do not form a disjoint partition of the
    label set.
    """
    mu = check_partition(mu)
    target = len(mu) + 1
    return frozenset(lam for lam in raw_layer(mu) if len(lam) == target)


# ---------------------------------------------------------------------------
# strata graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StrataGraph:
    """Covering relations of the merge order on partitions of n.

    ``edges`` contains pairs (finer, coarser): an arrow of the
    specialization diagram.  The unique source is (1,...,1) and the unique
    sink is (n,).
    """
    nodes: tuple
    edges: tuple

    def to_dot(self) -> str:
        def name(p):
            return '"' + ",".join(map(str, p)) + '"'

        lines = ["digraph strata {"]
        for p in self.nodes:
            lines.append(f"  {name(p)};")
        for a, b in self.edges:
            lines.append(f"  {name(a)} -> {name(b)};")
        lines.append("}")
        return "\n".join(lines)


def strata_graph(n: int) -> StrataGraph:
    """The Hasse diagram of the merge order: edge (lam, mu) iff mu strictly
    coarsens lam with no partition strictly between."""
    if n < 1:
        raise ValueError("n must be positive")
    nodes = enumerate_partitions(n)
    strictly_under = {
        mu: [lam for lam in nodes
             if lam != mu and specialization_succ(lam, mu)]
        for mu in nodes
    }
    edges = []
    for mu in nodes:
        for lam in strictly_under[mu]:
            if any(specialization_succ(lam, nu) for nu in strictly_under[mu]
                   if nu != lam and nu != mu and specialization_succ(nu, mu)):
                continue
            edges.append((lam, mu))
    edges.sort()
    return StrataGraph(nodes=tuple(nodes), edges=tuple(edges))


# ---------------------------------------------------------------------------
# standard-tableau count (hook lengths) — used as an independent dimension
# oracle in tests
# ---------------------------------------------------------------------------

def hook_length_count(lam) -> int:
    """Number of standard Young tableaux of shape lam, by hook lengths."""
    lam = check_partition(lam)
    if not lam:
        return 1
    conj = conjugate(lam)
    n = sum(lam)
    denom = 1
    for i, row in enumerate(lam):
        for j in range(row):
            denom *= (row - j) + (conj[j] - (i + 1))
    return factorial(n) // denom

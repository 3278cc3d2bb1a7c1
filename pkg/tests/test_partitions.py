"""Partitions, set partitions, layer slices, and the strata graph."""

import math

import pytest
from hypothesis import given, strategies as st

from artifact.partitions import (
    check_partition,
    check_set_partition,
    conjugate,
    dominance_leq,
    enumerate_partitions,
    enumerate_set_partitions,
    hook_length_count,
    in_pnmu,
    min_filled,
    phi_mu,
    raw_layer,
    reduce,
    reduction_accepts,
    set_partitions_of_shape,
    shape_of,
    specialization_succ,
    strata_graph,
)


@st.composite
def partitions(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    opts = enumerate_partitions(n)
    return opts[draw(st.integers(0, len(opts) - 1))]


@st.composite
def partition_pairs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    opts = enumerate_partitions(n)
    i = draw(st.integers(0, len(opts) - 1))
    j = draw(st.integers(0, len(opts) - 1))
    return opts[i], opts[j]


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _partition_counts(limit):
    """Independent oracle: Euler's pentagonal-number recurrence."""
    p = [1] + [0] * limit
    for n in range(1, limit + 1):
        total, k = 0, 1
        while k * (3 * k - 1) // 2 <= n:
            sign = -1 if k % 2 == 0 else 1
            total += sign * p[n - k * (3 * k - 1) // 2]
            if k * (3 * k + 1) // 2 <= n:
                total += sign * p[n - k * (3 * k + 1) // 2]
            k += 1
        p[n] = total
    return p


def test_enumerate_partitions_counts():
    counts = _partition_counts(12)
    for n in range(1, 13):
        parts = enumerate_partitions(n)
        assert len(parts) == counts[n]
        assert len(set(parts)) == len(parts)
        for lam in parts:
            assert sum(lam) == n
            assert all(a >= b for a, b in zip(lam, lam[1:]))
            assert lam[-1] >= 1
    assert counts[6] == 11 and counts[8] == 22


def test_check_partition_rejects_garbage():
    with pytest.raises(ValueError):
        check_partition((2, 3))
    with pytest.raises(ValueError):
        check_partition((2, 0))
    assert check_partition(()) == ()
    assert check_partition([3, 1]) == (3, 1)


@given(partitions())
def test_conjugate_involution(lam):
    mu = conjugate(lam)
    assert sum(mu) == sum(lam)
    assert conjugate(mu) == lam
    # column counts: mu_j = #{i : lam_i >= j}
    for j in range(1, len(mu) + 1):
        assert mu[j - 1] == sum(1 for a in lam if a >= j)


# ---------------------------------------------------------------------------
# dominance and specialization orders
# ---------------------------------------------------------------------------

def test_dominance_is_a_partial_order():
    for n in range(1, 7):
        parts = enumerate_partitions(n)
        for a in parts:
            assert dominance_leq(a, a)
            for b in parts:
                if dominance_leq(a, b) and dominance_leq(b, a):
                    assert a == b
                for c in parts:
                    if dominance_leq(a, b) and dominance_leq(b, c):
                        assert dominance_leq(a, c)


def test_dominance_conjugation_antitone():
    for n in range(1, 8):
        parts = enumerate_partitions(n)
        for a in parts:
            for b in parts:
                assert dominance_leq(a, b) == dominance_leq(
                    conjugate(b), conjugate(a))


def test_specialization_refines_dominance():
    for n in range(1, 9):
        parts = enumerate_partitions(n)
        for lam in parts:
            assert specialization_succ(lam, lam)
            for mu in parts:
                if specialization_succ(lam, mu):
                    assert dominance_leq(lam, mu)


def test_specialization_examples():
    assert specialization_succ((2, 1, 1), (3, 1))
    assert not specialization_succ((3, 1), (2, 2))
    # no sub-multiset of (2,2,2) sums to 3
    assert not specialization_succ((2, 2, 2), (3, 3))


@given(partition_pairs())
def test_size_mismatch_rejected(pair):
    lam, _ = pair
    bigger = (lam[0] + 1,) + lam[1:]
    with pytest.raises(ValueError):
        dominance_leq(lam, bigger)
    with pytest.raises(ValueError):
        specialization_succ(lam, bigger)
    with pytest.raises(ValueError):
        in_pnmu(lam, bigger)


# ---------------------------------------------------------------------------
# iterated reduction and layer membership
# ---------------------------------------------------------------------------

def test_reduce_examples():
    assert reduce((3, 1, 1, 1), 2) == (1, 1, 1, 1)
    assert reduce((4,), 0) == (4,)
    assert reduce((2, 2), 2) == (2,)
    with pytest.raises(ValueError):
        reduce((2, 2), 3)


def test_in_pnmu_examples():
    assert in_pnmu((1, 1, 1, 1), (3, 1))
    assert not in_pnmu((3, 1), (3, 1))
    assert in_pnmu((3, 1, 1, 1), (2, 2, 2))
    # (4) dominates (2,2), so it sits strictly above the (2,2) layer
    assert not in_pnmu((4,), (2, 2))


def test_in_pnmu_never_reflexive():
    for n in range(1, 9):
        for mu in enumerate_partitions(n):
            assert not in_pnmu(mu, mu)


def test_strict_dominance_implies_membership():
    for n in range(1, 9):
        parts = enumerate_partitions(n)
        for lam in parts:
            for mu in parts:
                if lam != mu and dominance_leq(lam, mu):
                    assert in_pnmu(lam, mu)


def test_reduction_rule_overaccepts_from_n4():
    # the one-pass acceptance rule agrees with in_pnmu up to n = 3 ...
    for n in range(1, 4):
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(n):
                assert reduction_accepts(lam, mu) == in_pnmu(lam, mu)
    # ... and first diverges at (3,1) vs (2,2)
    assert reduction_accepts((3, 1), (2, 2))
    assert not in_pnmu((3, 1), (2, 2))


def test_raw_layer_matches_membership():
    for n in range(1, 8):
        parts = enumerate_partitions(n)
        for mu in parts:
            layer = raw_layer(mu)
            assert layer == frozenset(
                lam for lam in parts if in_pnmu(lam, mu))


# ---------------------------------------------------------------------------
# layer slices
# ---------------------------------------------------------------------------

def test_phi_anchors():
    assert phi_mu((2, 2, 2)) == frozenset({(2, 2, 1, 1), (3, 1, 1, 1)})
    assert phi_mu((4,)) == frozenset({(3, 1), (2, 2)})
    for n in range(1, 8):
        assert phi_mu((1,) * n) == frozenset()
    assert phi_mu((2, 1, 1)) == frozenset({(1, 1, 1, 1)})


def test_phi_is_a_length_slice_of_the_layer():
    for n in range(1, 8):
        for mu in enumerate_partitions(n):
            sl = phi_mu(mu)
            assert sl <= raw_layer(mu)
            assert all(len(lam) == len(mu) + 1 for lam in sl)


def test_phi_slices_cover_everything_but_the_top():
    for n in range(1, 8):
        parts = enumerate_partitions(n)
        covered = set()
        for mu in parts:
            covered |= phi_mu(mu)
        assert covered == set(parts) - {(n,)}


def test_phi_slices_can_overlap():
    # slices of incomparable strata may share members
    assert phi_mu((2, 2)) & phi_mu((3, 1)) == {(2, 1, 1)}


# ---------------------------------------------------------------------------
# strata graph
# ---------------------------------------------------------------------------

def test_strata_graph_n1():
    g = strata_graph(1)
    assert g.nodes == ((1,),)
    assert g.edges == ()


def test_strata_graph_n4():
    g = strata_graph(4)
    assert set(g.nodes) == set(enumerate_partitions(4))
    assert set(g.edges) == {
        ((1, 1, 1, 1), (2, 1, 1)),
        ((2, 1, 1), (2, 2)),
        ((2, 1, 1), (3, 1)),
        ((2, 2), (4,)),
        ((3, 1), (4,)),
    }


def _cover_edges(n):
    """Independent oracle: covers of the merge order from scratch."""
    parts = enumerate_partitions(n)
    lt = {(a, b) for a in parts for b in parts
          if a != b and specialization_succ(a, b)}
    return {(a, b) for (a, b) in lt
            if not any((a, c) in lt and (c, b) in lt for c in parts)}


def test_strata_graph_is_the_cover_relation():
    for n in range(1, 7):
        g = strata_graph(n)
        assert set(g.nodes) == set(enumerate_partitions(n))
        assert set(g.edges) == _cover_edges(n)


def test_strata_graph_dot_output():
    dot = strata_graph(4).to_dot()
    assert dot.startswith("digraph")
    assert dot.count("->") == 5


# ---------------------------------------------------------------------------
# set partitions
# ---------------------------------------------------------------------------

def test_set_partition_counts_are_bell_numbers():
    bell = [1, 1, 2, 5, 15, 52, 203]
    for n in range(1, 7):
        seen = set(enumerate_set_partitions(n))
        assert len(seen) == bell[n]
        for blocks in seen:
            assert sorted(x for b in blocks for x in b) == list(range(1, n + 1))


def test_set_partitions_of_shape_counts():
    for n in range(1, 6):
        for lam in enumerate_partitions(n):
            count = math.factorial(n)
            for part in lam:
                count //= math.factorial(part)
            mult = 1
            for v in set(lam):
                mult *= math.factorial(lam.count(v))
            count //= mult
            got = list(set_partitions_of_shape(lam, n))
            assert len(got) == count
            assert all(shape_of(blocks) == lam for blocks in got)


@given(partitions(max_n=7))
def test_min_filled_has_the_right_shape(lam):
    blocks = min_filled(lam)
    assert shape_of(blocks) == lam
    # consecutive filling: blocks tile 1..n in order
    flat = [x for b in blocks for x in b]
    assert flat == list(range(1, sum(lam) + 1))


def test_check_set_partition_rejects_garbage():
    with pytest.raises(ValueError):
        check_set_partition(({1, 2}, {2, 3}))
    with pytest.raises(ValueError):
        check_set_partition(({1, 2}, {4,}), 4)


# ---------------------------------------------------------------------------
# hook length counts
# ---------------------------------------------------------------------------

def test_hook_length_anchors():
    assert hook_length_count((2, 2)) == 2
    assert hook_length_count((2, 1, 1)) == 3
    assert hook_length_count((3, 2)) == 5
    for n in range(1, 8):
        assert hook_length_count((n,)) == 1
        assert hook_length_count((1,) * n) == 1


def test_hook_length_squares_sum_to_factorial():
    for n in range(1, 7):
        total = sum(hook_length_count(lam) ** 2
                    for lam in enumerate_partitions(n))
        assert total == math.factorial(n)


@given(partitions(max_n=7))
def test_hook_length_conjugation_invariant(lam):
    assert hook_length_count(lam) == hook_length_count(conjugate(lam))

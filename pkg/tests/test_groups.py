"""Group elements, subgroups, inertia groups, and double cosets."""

import math
import random

import pytest
from hypothesis import given, strategies as st

from artifact.groups import (
    BoundExceeded,
    GroupSpec,
    Subgroup,
    alpha_data,
    conjugacy_class_count,
    conjugacy_classes,
    double_cosets,
    element_from_json,
    elements_of,
    enumerate_group,
    full_subgroup,
    generators,
    inertia_group,
    inertia_group_bruteforce,
    inv,
    make_element,
    mul,
    young_subgroup,
)

SMALL_SPECS = [
    GroupSpec(1, 1, 3),
    GroupSpec(1, 1, 4),
    GroupSpec(2, 1, 2),
    GroupSpec(2, 1, 3),
    GroupSpec(1, 2, 2),
    GroupSpec(1, 2, 4),
    GroupSpec(3, 1, 2),
    GroupSpec(1, 3, 3),
]


@st.composite
def group_elements(draw, spec):
    els = elements_of(spec)
    return els[draw(st.integers(0, len(els) - 1))]


# ---------------------------------------------------------------------------
# group structure
# ---------------------------------------------------------------------------

def test_notation_and_order():
    assert GroupSpec(2, 2, 4).notation() == "G(4,2,4)"
    assert GroupSpec(2, 2, 4).order() == 3072
    assert GroupSpec(1, 1, 3).notation() == "G(1,1,3)"
    assert GroupSpec(1, 2, 4).order() == 192


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_enumeration_matches_the_closed_form(spec):
    els = list(enumerate_group(spec))
    m, e, n = spec.m, spec.e, spec.n
    assert len(els) == m ** n * math.factorial(n) // e == spec.order()
    assert len(set(els)) == len(els)
    for g in els:
        assert sum(g.w) % e == 0


def test_make_element_validation():
    spec = GroupSpec(1, 2, 3)
    with pytest.raises(ValueError):
        make_element(spec, (1, 0, 0), (1, 2, 3))       # weight sum not 0 mod e
    with pytest.raises(ValueError):
        make_element(spec, (0, 0, 0), (1, 1, 3))       # not a permutation
    with pytest.raises(ValueError):
        make_element(spec, (0, 0), (1, 2, 3))          # wrong length
    g = make_element(spec, (3, -1, 0), (2, 1, 3))
    assert g.w == (1, 1, 0)
    assert element_from_json(spec, {"w": [3, -1, 0], "p": [2, 1, 3]}) == g


SPEC_AX = GroupSpec(2, 1, 2)


@given(group_elements(SPEC_AX), group_elements(SPEC_AX), group_elements(SPEC_AX))
def test_group_axioms(g, h, k):
    assert mul(mul(g, h), k) == mul(g, mul(h, k))
    ident = SPEC_AX.identity()
    assert mul(g, ident) == g
    assert mul(ident, g) == g
    assert mul(g, inv(g)) == ident
    assert inv(mul(g, h)) == mul(inv(h), inv(g))


def test_mixed_spec_rejected():
    g = GroupSpec(1, 1, 3).identity()
    h = GroupSpec(2, 1, 3).identity()
    with pytest.raises(ValueError):
        mul(g, h)


# ---------------------------------------------------------------------------
# conjugacy classes
# ---------------------------------------------------------------------------

CLASS_COUNTS = [
    (GroupSpec(1, 1, 3), 3),
    (GroupSpec(1, 1, 4), 5),
    (GroupSpec(2, 1, 2), 5),
    (GroupSpec(2, 1, 3), 10),
    (GroupSpec(1, 2, 2), 4),
]


@pytest.mark.parametrize("spec,count", CLASS_COUNTS)
def test_conjugacy_class_counts(spec, count):
    classes, index = conjugacy_classes(spec)
    assert len(classes) == count
    assert conjugacy_class_count(spec) == count
    assert sum(size for _, size in classes) == spec.order()
    assert classes[0][0] == spec.identity()
    assert len(index) == spec.order()


def test_class_representatives_are_not_conjugate():
    spec = GroupSpec(1, 1, 3)
    reps = [g for g, _ in conjugacy_classes(spec)[0]]
    els = elements_of(spec)
    for i, g in enumerate(reps):
        for h in reps[i + 1:]:
            assert all(mul(mul(s, g), inv(s)) != h for s in els)


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------

def test_young_subgroup_order_and_membership():
    spec = GroupSpec(1, 1, 4)
    H = young_subgroup([[1, 2], [3, 4]], spec)
    assert H.order() == 4
    for g in H:
        assert all(1 <= g.p[i] <= 2 for i in range(2))
    assert full_subgroup(spec).order() == 24


def test_subgroup_closure():
    spec = GroupSpec(1, 1, 4)
    gens = [make_element(spec, (0,) * 4, (2, 3, 1, 4))]
    H = Subgroup.from_generators(spec, gens)
    assert H.order() == 3
    for g in H:
        for h in H:
            assert mul(g, h) in H
        assert inv(g) in H


def test_subgroup_lagrange():
    spec = GroupSpec(2, 1, 2)
    for g in elements_of(spec):
        H = Subgroup.from_generators(spec, [g])
        assert spec.order() % H.order() == 0


def test_bounds_are_enforced():
    with pytest.raises(BoundExceeded):
        list(enumerate_group(GroupSpec(2, 1, 3), bound=10))
    spec = GroupSpec(1, 1, 4)
    with pytest.raises(BoundExceeded):
        Subgroup.from_generators(spec, list(generators(spec)), bound=6)


# ---------------------------------------------------------------------------
# inertia groups
# ---------------------------------------------------------------------------

INERTIA_SPECS = [
    GroupSpec(2, 2, 2),
    GroupSpec(1, 2, 3),
    GroupSpec(3, 1, 2),
    GroupSpec(1, 3, 3),
]


@pytest.mark.parametrize("spec", INERTIA_SPECS)
def test_inertia_group_matches_brute_force_exhaustively(spec):
    m, n = spec.m, spec.n
    for code in range(m ** n):
        alpha = tuple((code // m ** i) % m for i in range(n))
        H = inertia_group(spec, alpha)
        assert frozenset(H.elements) == inertia_group_bruteforce(spec, alpha)


def test_inertia_group_matches_brute_force_sampled():
    rng = random.Random(20260814)
    for spec in (GroupSpec(1, 1, 5), GroupSpec(1, 2, 4), GroupSpec(2, 2, 4)):
        for _ in range(10):
            alpha = tuple(rng.randrange(spec.m) for _ in range(spec.n))
            H = inertia_group(spec, alpha)
            assert frozenset(H.elements) == \
                inertia_group_bruteforce(spec, alpha)


def test_alpha_shift_data():
    spec = GroupSpec(1, 2, 4)
    data = alpha_data(spec, (1, 1, 0, 0))
    assert data.b * data.o == spec.e
    assert data.o == 2
    assert data.t.p == (3, 4, 1, 2)
    fixed = alpha_data(spec, (1, 1, 1, 1))
    assert fixed.t == spec.identity()


# ---------------------------------------------------------------------------
# double cosets
# ---------------------------------------------------------------------------

def test_double_cosets_partition_the_group():
    spec = GroupSpec(1, 1, 4)
    pairs = [
        (young_subgroup([[1, 2], [3, 4]], spec),
         young_subgroup([[1, 2, 3], [4]], spec)),
        (young_subgroup([[1, 2, 3], [4]], spec),
         young_subgroup([[1, 2, 3], [4]], spec)),
    ]
    for H1, H2 in pairs:
        cosets = double_cosets(H1, H2)
        assert sum(dc.size for dc in cosets) == spec.order()
        for dc in cosets:
            assert dc.size == H1.order() * H2.order() // dc.intersection.order()
            for g in dc.intersection:
                assert g in H1


def test_double_coset_count_anchor():
    spec = GroupSpec(1, 1, 4)
    H = young_subgroup([[1, 2, 3], [4]], spec)
    assert len(double_cosets(H, H)) == 2

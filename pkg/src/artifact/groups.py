"""Imprimitive complex reflection groups G(m, e, n) and their subgroups.

A group spec holds (d, e, n) with m = d*e; the group G(m, e, n) consists of
n x n monomial matrices whose nonzero entries are m-th roots of unity with
entry product an (m/e)-th root of unity.  Concretely an element is a pair
(w, p): a weight vector w in (Z/m)^n with sum(w) = 0 mod e, and a
permutation p of {1..n} given by its tuple of images (1-based), acting as
the matrix sending the basis vector at i to zeta_m^{w at p(i)} times the
basis vector at p(i).  Multiplication composes accordingly:

    (w1, p1) * (w2, p2) = (w1 + p1.w2, p1 p2)

where (p1.w2) adds w2[i] onto position p1(i).  |G(m,e,n)| = m^n n! / e.

The module also provides Young subgroups, the weight-class data attached to
an exponent vector alpha (its shift period b, orbit size o = e/b and the
order-preserving shift permutation t), inertia groups, double cosets and
conjugacy classes.  Enumeration is guarded by a size bound (default 10**6).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import NamedTuple

from .partitions import check_set_partition

DEFAULT_BOUND = 10 ** 6


class BoundExceeded(RuntimeError):
    """Raised when an enumeration would exceed the configured size bound."""


# ---------------------------------------------------------------------------
# group spec and elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class GroupSpec:
    """The group G(m, e, n) with m = d * e."""
    d: int
    e: int
    n: int

    def __post_init__(self):
        if self.d < 1 or self.e < 1 or self.n < 1:
            raise ValueError("d, e, n must be positive")

    @property
    def m(self) -> int:
        return self.d * self.e

    def order(self) -> int:
        return self.m ** self.n * factorial(self.n) // self.e

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.n, tuple(range(1, self.n + 1)))

    def notation(self) -> str:
        return f"G({self.m},{self.e},{self.n})"


class GroupElement(NamedTuple):
    """Element (w, p) of G(m, e, n); w is reduced mod m, p maps i -> p[i-1]."""
    spec: GroupSpec
    w: tuple
    p: tuple

    def key(self):
        """Deterministic sort key (spec-independent)."""
        return (self.w, self.p)

    def to_json(self) -> dict:
        return {"w": list(self.w), "p": list(self.p)}


def make_element(spec: GroupSpec, w, p) -> GroupElement:
    """Validate and build a group element; weights are reduced mod m."""
    n, m, e = spec.n, spec.m, spec.e
    w = tuple(int(x) % m for x in w)
    p = tuple(int(x) for x in p)
    if len(w) != n or len(p) != n:
        raise ValueError(f"element components must have length {n}")
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {p}")
    if sum(w) % e:
        raise ValueError(f"weight sum {sum(w)} not divisible by e={e}")
    return GroupElement(spec, w, p)


def element_from_json(spec: GroupSpec, obj: dict) -> GroupElement:
    return make_element(spec, obj["w"], obj["p"])


def mul(g: GroupElement, h: GroupElement) -> GroupElement:
    """Product g*h (g applied after h as matrices)."""
    if g.spec != h.spec:
        raise ValueError("elements of different groups")
    spec = g.spec
    n, m = spec.n, spec.m
    w = list(g.w)
    for i in range(n):
        j = g.p[i] - 1
        w[j] = (w[j] + h.w[i]) % m
    p = tuple(g.p[h.p[i] - 1] for i in range(n))
    return GroupElement(spec, tuple(w), p)


def inv(g: GroupElement) -> GroupElement:
    spec = g.spec
    n, m = spec.n, spec.m
    pi = [0] * n
    for i in range(n):
        pi[g.p[i] - 1] = i + 1
    wi = tuple((-g.w[g.p[i] - 1]) % m for i in range(n))
    return GroupElement(spec, wi, tuple(pi))


def generators(spec: GroupSpec) -> list:
    """A fixed generating set: adjacent transpositions, the weight vector
    (e, 0, ..., 0) when e < m, and the difference vector (1, m-1, 0, ...)."""
    m, e, n = spec.m, spec.e, spec.n
    gens = []
    idp = tuple(range(1, n + 1))
    zero = (0,) * n
    for i in range(1, n):
        p = list(idp)
        p[i - 1], p[i] = p[i], p[i - 1]
        gens.append(GroupElement(spec, zero, tuple(p)))
    if m > 1:
        if e < m:
            w = [0] * n
            w[0] = e
            gens.append(GroupElement(spec, tuple(w), idp))
        if n > 1:
            w = [0] * n
            w[0], w[1] = 1, m - 1
            gens.append(GroupElement(spec, tuple(w), idp))
    return gens


def _check_bound(size: int, bound: int | None):
    b = DEFAULT_BOUND if bound is None else bound
    if size > b:
        raise BoundExceeded(f"group of order {size} exceeds bound {b}")


def enumerate_group(spec: GroupSpec, bound: int | None = None):
    """Stream all elements, each exactly once, in a deterministic order
    (weights in product order within permutations in lexicographic order)."""
    _check_bound(spec.order(), bound)
    m, e, n = spec.m, spec.e, spec.n
    for perm in itertools.permutations(range(1, n + 1)):
        for w in itertools.product(range(m), repeat=n):
            if sum(w) % e == 0:
                yield GroupElement(spec, w, perm)


_ELEMENTS_CACHE: dict = {}


def elements_of(spec: GroupSpec, bound: int | None = None) -> tuple:
    """All elements as a tuple sorted by (w, p); cached."""
    _check_bound(spec.order(), bound)
    hit = _ELEMENTS_CACHE.get(spec)
    if hit is None:
        hit = tuple(sorted(enumerate_group(spec, bound), key=GroupElement.key))
        _ELEMENTS_CACHE[spec] = hit
    return hit


# ---------------------------------------------------------------------------
# conjugacy classes
# ---------------------------------------------------------------------------

def _conjugacy_partition(universe, gens):
    """Orbit partition of ``universe`` under conjugation by ``gens``.

    Returns (list of (representative, orbit size), dict element -> index).
    Representatives are the first elements encountered scanning ``universe``
    in order, so the result is deterministic.
    """
    gpairs = [(g, inv(g)) for g in gens]
    index = {}
    reps = []
    for x in universe:
        if x in index:
            continue
        k = len(reps)
        orbit = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for g, gi in gpairs:
                z = mul(mul(g, y), gi)
                if z not in orbit:
                    orbit.add(z)
                    stack.append(z)
        for y in orbit:
            index[y] = k
        reps.append((x, len(orbit)))
    return reps, index


_CLASS_CACHE: dict = {}


def conjugacy_classes(spec: GroupSpec, bound: int | None = None):
    """Conjugacy classes of G: (list of (rep, size), element -> index map)."""
    _check_bound(spec.order(), bound)
    hit = _CLASS_CACHE.get(spec)
    if hit is None:
        universe = elements_of(spec, bound)
        hit = _conjugacy_partition(universe, generators(spec))
        total = sum(sz for _, sz in hit[0])
        assert total == spec.order(), "class sizes do not sum to group order"
        _CLASS_CACHE[spec] = hit
    return hit


def conjugacy_class_count(spec: GroupSpec, bound: int | None = None) -> int:
    return len(conjugacy_classes(spec, bound)[0])


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------

class Subgroup:
    """A subgroup of G(m, e, n), stored as an explicit element tuple.

    Construct with :meth:`from_generators` (closure) or
    :meth:`from_elements` (trusted closed set; identity checked).
    """

    def __init__(self, spec: GroupSpec, gens: tuple, elements: tuple):
        self.spec = spec
        self.generators = gens
        self.elements = elements
        self._element_set = frozenset(elements)
        self._classes = None

    @classmethod
    def from_generators(cls, spec: GroupSpec, gens, bound: int | None = None):
        b = DEFAULT_BOUND if bound is None else bound
        gens = tuple(gens)
        for g in gens:
            if g.spec != spec:
                raise ValueError("generator from a different group")
        closure_gens = gens + tuple(inv(g) for g in gens)
        seen = {spec.identity()}
        queue = [spec.identity()]
        while queue:
            x = queue.pop()
            for g in closure_gens:
                y = mul(x, g)
                if y not in seen:
                    if len(seen) >= b:
                        raise BoundExceeded(
                            f"subgroup closure exceeds bound {b}")
                    seen.add(y)
                    queue.append(y)
        return cls(spec, gens, tuple(sorted(seen, key=GroupElement.key)))

    @classmethod
    def from_elements(cls, spec: GroupSpec, elements, gens=None):
        elements = tuple(sorted(set(elements), key=GroupElement.key))
        if spec.identity() not in elements:
            raise ValueError("element set lacks the identity")
        return cls(spec, tuple(gens) if gens else elements, elements)

    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self._element_set

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.spec == other.spec
                and self._element_set == other._element_set)

    def __hash__(self):
        return hash((self.spec, self._element_set))

    def conjugacy_classes(self):
        """Classes under conjugation by this subgroup's own elements."""
        if self._classes is None:
            self._classes = _conjugacy_partition(self.elements,
                                                 list(self.generators))
        return self._classes

    def __repr__(self):
        return (f"Subgroup({self.spec.notation()}, order {self.order()}, "
                f"{len(self.generators)} generators)")


def full_subgroup(spec: GroupSpec, bound: int | None = None) -> Subgroup:
    """The whole group G as a Subgroup object."""
    return Subgroup(spec, tuple(generators(spec)), elements_of(spec, bound))


def young_subgroup(P, spec: GroupSpec | None = None) -> Subgroup:
    """The Young subgroup S_P of permutations preserving each block of the
    set partition P, embedded with zero weights.  ``spec`` defaults to the
    symmetric group G(1, 1, n)."""
    P = check_set_partition(P)
    n = sum(len(b) for b in P)
    if spec is None:
        spec = GroupSpec(1, 1, n)
    if spec.n != n:
        raise ValueError("set partition does not match spec.n")
    idp = tuple(range(1, n + 1))
    zero = (0,) * n
    gens = []
    for block in P:
        bl = sorted(block)
        for i in range(len(bl) - 1):
            p = list(idp)
            p[bl[i] - 1], p[bl[i + 1] - 1] = p[bl[i + 1] - 1], p[bl[i] - 1]
            gens.append(GroupElement(spec, zero, tuple(p)))
    return Subgroup.from_generators(spec, gens)


# ---------------------------------------------------------------------------
# weight classes of an exponent vector alpha
# ---------------------------------------------------------------------------

def alpha_canonical(spec: GroupSpec, alpha) -> tuple:
    """Canonical representative of the class of alpha modulo the diagonal
    shift alpha -> alpha + d*(1,..,1) and coordinate permutation: the
    lexicographically least sorted shift."""
    m, e, d, n = spec.m, spec.e, spec.d, spec.n
    alpha = tuple(int(a) % m for a in alpha)
    if len(alpha) != n:
        raise ValueError(f"alpha must have length {n}")
    return min(tuple(sorted(((a + j * d) % m) for a in alpha))
               for j in range(e))


def alpha_class_reps(spec: GroupSpec) -> list:
    """All canonical representatives, in lexicographic order."""
    m, n = spec.m, spec.n
    seen = set()
    reps = []
    for alpha in itertools.combinations_with_replacement(range(m), n):
        canon = alpha_canonical(spec, alpha)
        if canon not in seen:
            seen.add(canon)
            reps.append(canon)
    return reps


@dataclass(frozen=True)
class AlphaData:
    """Shift data of an exponent vector alpha.

    classes: for each value v in Z/m, the 1-based positions i with
        alpha_i = v.
    sizes: the m class sizes.
    b: least j >= 1 with sizes invariant under v -> v + j*d (b divides e).
    o: orbit size e // b of alpha under the diagonal shift.
    t: the order-preserving permutation sending each class to the class
        b*d further on, as a zero-weight group element.
    """
    alpha: tuple
    classes: tuple
    sizes: tuple
    b: int
    o: int
    t: GroupElement


def alpha_data(spec: GroupSpec, alpha) -> AlphaData:
    m, e, d, n = spec.m, spec.e, spec.d, spec.n
    alpha = tuple(int(a) % m for a in alpha)
    if len(alpha) != n:
        raise ValueError(f"alpha must have length {n}")
    classes = tuple(tuple(i + 1 for i, a in enumerate(alpha) if a == v)
                    for v in range(m))
    sizes = tuple(len(c) for c in classes)
    b = e
    for j in range(1, e + 1):
        if all(sizes[(v + j * d) % m] == sizes[v] for v in range(m)):
            b = j
            break
    o = e // b
    t = list(range(1, n + 1))
    for v in range(m):
        for src, dst in zip(classes[v], classes[(v + b * d) % m]):
            t[src - 1] = dst
    t_elt = GroupElement(spec, (0,) * n, tuple(t))
    return AlphaData(alpha=alpha, classes=classes, sizes=sizes, b=b, o=o,
                     t=t_elt)


def inertia_group(spec: GroupSpec, alpha) -> Subgroup:
    """The subgroup of permutations g with g.alpha = alpha + j*d*(1,..,1)
    for some j, generated by the Young subgroup of the value classes of
    alpha together with the shift permutation t."""
    data = alpha_data(spec, alpha)
    blocks = [c for c in data.classes if c]
    gens = list(young_subgroup(check_set_partition(blocks, spec.n),
                               spec).generators)
    if data.t != spec.identity():
        gens.append(data.t)
    H = Subgroup.from_generators(spec, gens)
    y_order = 1
    for c in blocks:
        y_order *= factorial(len(c))
    assert H.order() == y_order * data.o, \
        "inertia group order differs from |Y_alpha| * o_alpha"
    return H


def inertia_group_bruteforce(spec: GroupSpec, alpha) -> frozenset:
    """Independent cross-check (meant for small n): all permutations p with
    p.alpha - alpha a multiple of d*(1,..,1) mod m, where (p.alpha)_i =
    alpha at the preimage of i."""
    m, e, d, n = spec.m, spec.e, spec.d, spec.n
    alpha = tuple(int(a) % m for a in alpha)
    out = set()
    for perm in itertools.permutations(range(1, n + 1)):
        moved = [0] * n
        for i in range(n):
            moved[perm[i] - 1] = alpha[i]
        if any(all((moved[i] - alpha[i]) % m == (j * d) % m
                   for i in range(n)) for j in range(e)):
            out.add(GroupElement(spec, (0,) * n, perm))
    return frozenset(out)


# ---------------------------------------------------------------------------
# double cosets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DoubleCoset:
    """One double coset H1 s H2 with its intersection group
    H(s) = H1 ∩ s H2 s^{-1}."""
    rep: GroupElement
    size: int
    intersection: "Subgroup"


def double_cosets(H1: Subgroup, H2: Subgroup,
                  bound: int | None = None) -> list:
    """Double cosets H1 \\ G / H2 in the ambient group of both subgroups,
    with deterministic representatives (least uncovered element)."""
    if H1.spec != H2.spec:
        raise ValueError("subgroups of different groups")
    spec = H1.spec
    ambient = elements_of(spec, bound)
    covered = set()
    out = []
    for s in ambient:
        if s in covered:
            continue
        coset = set()
        for h1 in H1:
            h1s = mul(h1, s)
            for h2 in H2:
                coset.add(mul(h1s, h2))
        covered |= coset
        si = inv(s)
        inter = [h for h in H1 if mul(mul(si, h), s) in H2]
        out.append(DoubleCoset(rep=s, size=len(coset),
                               intersection=Subgroup.from_elements(spec,
                                                                   inter)))
    assert sum(c.size for c in out) == len(ambient), \
        "double coset sizes do not sum to |G|"
    return out

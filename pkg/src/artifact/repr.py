"""Representations of G(m, e, n) on polynomial spans.

A representation is stored as the reduced row-echelon basis (graded-lex
pivots) of the span of a group orbit of a seed polynomial; matrices,
traces and characters are obtained by solving against that basis.  On top
of this the module provides class-function arithmetic (inner products,
restriction, induction, Mackey's double-coset decomposition), isotypic
and matrix-unit projectors on finite modules, Clifford-theory helpers for
normal subgroups, the census of all irreducible representations of
G(m, e, n) built from monomial orbits times powered Specht polynomials,
and cyclic spans in the regular module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .exactalg import CycNum, Poly, act, grlex_key, vandermonde, x_alpha
from .groups import (
    GroupElement,
    GroupSpec,
    Subgroup,
    alpha_class_reps,
    alpha_data,
    conjugacy_classes,
    double_cosets,
    elements_of,
    generators,
    inv,
    mul,
    young_subgroup,
)
from .partitions import enumerate_partitions, min_filled

# ---------------------------------------------------------------------------
# uniform access to GroupSpec / Subgroup
# ---------------------------------------------------------------------------

def spec_of(group) -> GroupSpec:
    return group if isinstance(group, GroupSpec) else group.spec


def group_elements(group, bound: int | None = None) -> tuple:
    if isinstance(group, GroupSpec):
        return elements_of(group, bound)
    return group.elements


def group_generators(group) -> tuple:
    if isinstance(group, GroupSpec):
        return tuple(generators(group))
    return group.generators


def group_classes(group, bound: int | None = None):
    """(list of (rep, size), element -> class index) for either kind."""
    if isinstance(group, GroupSpec):
        return conjugacy_classes(group, bound)
    return group.conjugacy_classes()


def group_order(group) -> int:
    if isinstance(group, GroupSpec):
        return group.order()
    return group.order()


def contains_subgroup(group, H: Subgroup) -> bool:
    """Whether H sits inside ``group`` (a GroupSpec or Subgroup)."""
    if isinstance(group, GroupSpec):
        return H.spec == group
    return H.spec == group.spec and all(h in group for h in H)


# ---------------------------------------------------------------------------
# echelon machinery over Q(zeta)
# ---------------------------------------------------------------------------

def _row_sub(row: dict, c: CycNum, other: dict) -> dict:
    """row - c * other on exponent->CycNum dicts."""
    out = dict(row)
    for k, v in other.items():
        delta = c * v
        w = out.get(k)
        w = -delta if w is None else w - delta
        if w.is_zero():
            out.pop(k, None)
        else:
            out[k] = w
    return out


def _echelon_insert(pivots: dict, row: dict):
    """Reduce ``row`` against the pivot rows; if independent, install it
    normalized to leading coefficient 1 and return its pivot key, else
    return None."""
    while row:
        key = max(row, key=grlex_key)
        piv = pivots.get(key)
        if piv is None:
            li = row[key].inv()
            pivots[key] = {k: li * v for k, v in row.items()}
            return key
        row = _row_sub(row, row[key], piv)
    return None


def _back_substitute(pivots: dict) -> dict:
    """Eliminate every pivot monomial from all other rows, yielding the
    unique reduced echelon basis of the span."""
    keys = sorted(pivots, key=grlex_key, reverse=True)
    for key in keys:
        piv = pivots[key]
        for other in keys:
            if other == key:
                continue
            row = pivots[other]
            c = row.get(key)
            if c is not None and not c.is_zero():
                pivots[other] = _row_sub(row, c, piv)
    return pivots


# ---------------------------------------------------------------------------
# representations as polynomial spans
# ---------------------------------------------------------------------------

class Representation:
    """Span of a group orbit of polynomials, with its matrix action.

    ``basis`` is the reduced echelon basis ordered by decreasing graded-lex
    leading monomial; matrices act on coordinate columns: column j of
    matrix_of(g) holds the coordinates of act(g, basis[j]).
    """

    def __init__(self, group, basis_rows: dict, conductor: int):
        self.group = group
        self.spec = spec_of(group)
        self.conductor = conductor
        keys = sorted(basis_rows, key=grlex_key, reverse=True)
        self._pivot_index = {k: i for i, k in enumerate(keys)}
        self._rows = [basis_rows[k] for k in keys]
        self.basis = tuple(
            Poly(self.spec.n, conductor,
                 {k: c.embed(conductor) for k, c in row.items()})
            for row in self._rows)
        self._matrices: dict = {}
        self._char = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, p: Poly) -> list:
        """Coordinates of p in the basis; ValueError if p is outside."""
        row = dict(p.terms)
        out = [CycNum.zero(1)] * self.dim
        while row:
            key = max(row, key=grlex_key)
            i = self._pivot_index.get(key)
            if i is None:
                raise ValueError("polynomial not in the span")
            c = row[key]
            out[i] = c
            row = _row_sub(row, c, self._rows[i])
        return out

    def matrix_of(self, g: GroupElement) -> list:
        """The dim x dim matrix of g in the echelon basis (cached)."""
        hit = self._matrices.get(g)
        if hit is None:
            cols = [self.coords(act(g, b)) for b in self.basis]
            hit = [[cols[j][i] for j in range(self.dim)]
                   for i in range(self.dim)]
            self._matrices[g] = hit
        return hit

    def trace_of(self, g: GroupElement) -> CycNum:
        total = CycNum.zero(1)
        for j, b in enumerate(self.basis):
            total = total + self.coords(act(g, b))[j]
        return total

    def character(self) -> "Character":
        if self._char is None:
            reps, _ = group_classes(self.group)
            self._char = Character(self.group,
                                   [self.trace_of(r) for r, _sz in reps])
        return self._char

    def __repr__(self):
        return (f"Representation(dim {self.dim} of "
                f"{self.spec.notation()}, conductor {self.conductor})")


def orbit_span(group, p: Poly, bound: int | None = None) -> Representation:
    """The span of {act(g, p) : g in group} as a Representation, computed
    by generator closure and canonicalized to reduced echelon form (hence
    independent of enumeration order)."""
    spec = spec_of(group)
    if spec.n != p.n:
        raise ValueError("variable count differs from group degree")
    L = lcm(p.m, spec.m)
    seed = p.embed(L)
    gens = list(group_generators(group))
    pivots: dict = {}
    work = []
    k0 = _echelon_insert(pivots, dict(seed.terms))
    if k0 is not None:
        work.append(k0)
    while work:
        key = work.pop()
        base = Poly(spec.n, L, dict(pivots[key]))
        for g in gens:
            k = _echelon_insert(pivots, dict(act(g, base).terms))
            if k is not None:
                work.append(k)
    return Representation(group, _back_substitute(pivots), L)


def character(rep: Representation) -> "Character":
    """The character of a representation (free-function form)."""
    return rep.character()


# ---------------------------------------------------------------------------
# class functions
# ---------------------------------------------------------------------------

class Character:
    """A class function on a GroupSpec or Subgroup, stored by its values at
    the group's conjugacy class representatives (identity class first)."""

    def __init__(self, group, values):
        self.group = group
        reps, index = group_classes(group)
        if len(values) != len(reps):
            raise ValueError("one value per conjugacy class required")
        self.class_reps = tuple(r for r, _ in reps)
        self.class_sizes = tuple(sz for _, sz in reps)
        self._index = index
        self.values = tuple(v if isinstance(v, CycNum)
                            else CycNum.rational(v) for v in values)
        ident = spec_of(group).identity()
        assert self.class_reps[0] == ident, \
            "identity expected as the first class representative"

    def value(self, g: GroupElement) -> CycNum:
        return self.values[self._index[g]]

    def degree(self) -> CycNum:
        return self.values[0]

    def __eq__(self, other):
        return (isinstance(other, Character) and self.group == other.group
                and len(self.values) == len(other.values)
                and all(a.equals(b) for a, b in
                        zip(self.values, other.values)))

    def __hash__(self):
        return hash((id(self.group), len(self.values)))

    def __add__(self, other):
        if self.group != other.group:
            raise ValueError("characters on different groups")
        return Character(self.group, [a + b for a, b in
                                      zip(self.values, other.values)])

    def scale(self, c) -> "Character":
        return Character(self.group, [v * c for v in self.values])

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.values)
        return f"Character({spec_of(self.group).notation()}: {vals})"


def inner_product(chi1: Character, chi2: Character) -> CycNum:
    """<chi1, chi2> = (1/|G|) sum over classes of size * chi1 * conj(chi2)."""
    if chi1.class_reps != chi2.class_reps:
        raise ValueError("characters on different groups")
    total = CycNum.zero(1)
    for sz, a, b in zip(chi1.class_sizes, chi1.values, chi2.values):
        total = total + (a * b.conj()) * sz
    return total * Fraction(1, sum(chi1.class_sizes))


def invariant_dim(chi: Character, H: Subgroup) -> int:
    """dim of the H-invariants of a module with character chi:
    (1/|H|) sum_{h in H} chi(h).  Raises ArithmeticError if the average is
    not a nonnegative rational integer."""
    if not contains_subgroup(chi.group, H):
        raise ValueError("H is not contained in the character's group")
    total = CycNum.zero(1)
    for h in H:
        total = total + chi.value(h)
    total = total * Fraction(1, H.order())
    if not total.is_rational():
        raise ArithmeticError(f"invariant average not rational: {total}")
    q = total.as_fraction()
    if q.denominator != 1 or q < 0:
        raise ArithmeticError(f"invariant average not a nonnegative "
                              f"integer: {q}")
    return int(q)


def restricted_character(chi: Character, H: Subgroup) -> Character:
    """Res chi from its group down to the subgroup H."""
    if not contains_subgroup(chi.group, H):
        raise ValueError("H is not contained in the character's group")
    reps, _ = H.conjugacy_classes()
    return Character(H, [chi.value(r) for r, _sz in reps])


def induced_character(H: Subgroup, chi: Character, ambient=None) -> Character:
    """Ind chi from H up to ``ambient`` (default: the full GroupSpec):
    chi^G(g) = (1/|H|) sum_{x in G, x^{-1} g x in H} chi(x^{-1} g x)."""
    if chi.group != H and not (isinstance(chi.group, Subgroup)
                               and chi.group == H):
        raise ValueError("character must live on H")
    if ambient is None:
        ambient = H.spec
    if not contains_subgroup(ambient, H):
        raise ValueError("H is not contained in the ambient group")
    amb_elements = group_elements(ambient)
    reps, _ = group_classes(ambient)
    values = []
    for g, _sz in reps:
        total = CycNum.zero(1)
        for x in amb_elements:
            y = mul(mul(inv(x), g), x)
            if y in H:
                total = total + chi.value(y)
        values.append(total * Fraction(1, H.order()))
    return Character(ambient, values)


def reynolds(group, p: Poly, bound: int | None = None) -> Poly:
    """The averaging-free Reynolds sum: sum_{g in group} act(g, p)."""
    out = Poly.zero(p.n, p.m)
    for g in group_elements(group, bound):
        out = out + act(g, p)
    return out


# ---------------------------------------------------------------------------
# modules and projectors
# ---------------------------------------------------------------------------

def mat_identity(d: int) -> list:
    return [[CycNum.one(1) if i == j else CycNum.zero(1)
             for j in range(d)] for i in range(d)]


def mat_zero(d: int) -> list:
    return [[CycNum.zero(1) for _ in range(d)] for _ in range(d)]


def mat_add(A: list, B: list) -> list:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A: list, c) -> list:
    return [[a * c for a in row] for row in A]


def mat_mul(A: list, B: list) -> list:
    d = len(A)
    k = len(B)
    out = []
    for i in range(d):
        row = []
        Ai = A[i]
        for j in range(len(B[0]) if k else 0):
            s = CycNum.zero(1)
            for t in range(k):
                a = Ai[t]
                if not a.is_zero():
                    s = s + a * B[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_eq(A: list, B: list) -> bool:
    if len(A) != len(B):
        return False
    return all(len(ra) == len(rb) and all(a.equals(b) for a, b in
                                          zip(ra, rb))
               for ra, rb in zip(A, B))


def mat_trace(A: list) -> CycNum:
    total = CycNum.zero(1)
    for i in range(len(A)):
        total = total + A[i][i]
    return total


def mat_rank(A: list) -> int:
    """Row rank by Gaussian elimination over Q(zeta)."""
    rows = [{j: v for j, v in enumerate(row) if not v.is_zero()}
            for row in A]
    pivots: dict = {}
    rank = 0
    for row in rows:
        while row:
            j = min(row)
            piv = pivots.get(j)
            if piv is None:
                li = row[j].inv()
                pivots[j] = {k: li * v for k, v in row.items()}
                rank += 1
                break
            c = row[j]
            new = dict(row)
            for k, v in piv.items():
                delta = c * v
                w = new.get(k)
                w = -delta if w is None else w - delta
                if w.is_zero():
                    new.pop(k, None)
                else:
                    new[k] = w
            row = new
    return rank


class RegularModule:
    """The regular module C[G]: basis the group elements in canonical
    order, with g acting by left translation."""

    def __init__(self, group, bound: int | None = None):
        self.group = group
        self.elements = group_elements(group, bound)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.dim = len(self.elements)

    def matrix(self, g: GroupElement) -> list:
        M = mat_zero(self.dim)
        for j, h in enumerate(self.elements):
            M[self.index[mul(g, h)]][j] = CycNum.one(1)
        return M


class RepresentationModule:
    """A Representation viewed through the generic module interface."""

    def __init__(self, rep: Representation):
        self.group = rep.group
        self.rep = rep
        self.dim = rep.dim

    def matrix(self, g: GroupElement) -> list:
        return self.rep.matrix_of(g)


def projector_chi(chi: Character, module) -> list:
    """The isotypic projector p^chi = (n_chi / |G|) sum_t chi(t^{-1})
    rho_M(t) as a dense matrix on the module."""
    group = chi.group
    n_chi = chi.degree()
    order = group_order(group)
    total = mat_zero(module.dim)
    for t in group_elements(group):
        c = chi.value(inv(t))
        if not c.is_zero():
            total = mat_add(total, mat_scale(module.matrix(t), c))
    return mat_scale(total, n_chi * Fraction(1, order))


def projector_unit(rep: Representation, a: int, b: int, module) -> list:
    """The matrix-unit projector p_{ab} = (n_chi / |G|) sum_t
    r_{ba}(t^{-1}) rho_M(t), built from the matrix coefficients r of the
    given irreducible representation.

    The coefficient indices are transposed relative to the naive reading
    so that the matrix-unit identities p_{ab} p_{cd} = delta_{bc} p_{ad}
    and sum_a p_{aa} = p^chi hold for arbitrary (not necessarily unitary)
    matrix realizations; for unitary ones the two readings coincide.
    """
    group = rep.group
    d = rep.dim
    if not (0 <= a < d and 0 <= b < d):
        raise ValueError("matrix-unit indices out of range")
    order = group_order(group)
    total = mat_zero(module.dim)
    for t in group_elements(group):
        c = rep.matrix_of(inv(t))[b][a]
        if not c.is_zero():
            total = mat_add(total, mat_scale(module.matrix(t), c))
    return mat_scale(total, d * Fraction(1, order))


# ---------------------------------------------------------------------------
# Mackey decomposition
# ---------------------------------------------------------------------------

@dataclass
class MackeyResult:
    ok: bool
    num_double_cosets: int
    lhs: Character
    rhs: Character
    coset_reps: tuple


def conjugated_character(chi: Character, s: GroupElement,
                         K: Subgroup) -> Character:
    """The s-translate of chi as a character of K: x -> chi(s^{-1} x s);
    requires s^{-1} K s to lie in chi's group."""
    si = inv(s)
    reps, _ = K.conjugacy_classes()
    return Character(K, [chi.value(mul(mul(si, r), s)) for r, _sz in reps])


def mackey_check(H1: Subgroup, H2: Subgroup, chi: Character) -> MackeyResult:
    """Verify Mackey's formula for chi on H2:

        Res_{H1} Ind_{H2}^G chi
            = sum_s Ind_{H(s)}^{H1} (s.chi restricted to H(s))

    summing over double coset representatives s with
    H(s) = H1 ∩ s H2 s^{-1}.  Both sides are computed independently and
    compared as class functions on H1.
    """
    if H1.spec != H2.spec:
        raise ValueError("subgroups of different groups")
    spec = H1.spec
    lhs = restricted_character(induced_character(H2, chi, spec), H1)
    cosets = double_cosets(H1, H2)
    rhs_vals = [CycNum.zero(1)] * len(lhs.values)
    for dc in cosets:
        K = dc.intersection
        part = induced_character(K, conjugated_character(chi, dc.rep, K),
                                 H1)
        rhs_vals = [a + b for a, b in zip(rhs_vals, part.values)]
    rhs = Character(H1, rhs_vals)
    ok = all(a.equals(b) for a, b in zip(lhs.values, rhs.values))
    return MackeyResult(ok=ok, num_double_cosets=len(cosets), lhs=lhs,
                        rhs=rhs, coset_reps=tuple(dc.rep for dc in cosets))


# ---------------------------------------------------------------------------
# the irreducible census of G(m, e, n)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IrrepLabel:
    """Census label: the canonical exponent class alpha, the tuple of
    partition shapes indexed by residue value (empty classes hold the
    empty partition), and the Fourier index i in 0..s-1 where s is the
    order of the shape tuple's shift stabilizer."""
    alpha: tuple
    shapes: tuple
    i: int

    def __str__(self):
        shapes = ";".join(
            ",".join(map(str, sh)) if sh else "-" for sh in self.shapes)
        return f"alpha={','.join(map(str, self.alpha))} shapes={shapes} " \
               f"i={self.i}"


@dataclass
class LabeledIrrep:
    label: IrrepLabel
    rep: Representation


def _shift_shapes(shapes: tuple, m: int, bd: int) -> tuple:
    """Relabel the per-value shape tuple under value shift v -> v + bd."""
    return tuple(shapes[(v - bd) % m] for v in range(m))


def census_seeds(spec: GroupSpec):
    """Deterministic list of (label, seed polynomial) pairs whose orbit
    spans exhaust the irreducible representations of G(m, e, n).

    For each canonical exponent class alpha (shift data b, o, t) and each
    orbit representative Lambda of per-value shape tuples under the value
    shift, with stabilizer order s | o, the seeds are the discrete-Fourier
    combinations

        v_i = sum_{k=0}^{s-1} zeta_s^{-ik} (t^{o/s})^k . (x^alpha s_Lambda)

    for i in 0..s-1, where s_Lambda is the product over values v of the
    Specht polynomial in the m-th powers of the variables of the class of
    v, partitioned by Lambda_v into minimally-filled blocks.
    """
    m, e, n, d = spec.m, spec.e, spec.n, spec.d
    out = []
    for alpha in alpha_class_reps(spec):
        data = alpha_data(spec, alpha)
        b, o, t_elt = data.b, data.o, data.t
        bd = (b * d) % m
        per_class = [enumerate_partitions(sz) for sz in data.sizes]
        seen = set()
        for tup in itertools.product(*per_class):
            orbit = []
            cur = tup
            for _ in range(o):
                orbit.append(cur)
                cur = _shift_shapes(cur, m, bd)
            canon = min(orbit)
            if canon in seen:
                continue
            seen.add(canon)
            s = sum(1 for sh in orbit if sh == canon)
            base = x_alpha(spec, alpha)
            for v in range(m):
                if data.sizes[v]:
                    for block in min_filled(canon[v],
                                            members=data.classes[v]):
                        base = base * vandermonde(block, n, power=m)
            tstep = spec.identity()
            for _ in range(o // s):
                tstep = mul(t_elt, tstep)
            L = lcm(m, s)
            base = base.embed(L)
            for i in range(s):
                gen = Poly.zero(n, L)
                cur_p = base
                for k in range(s):
                    gen = gen + cur_p.scale(
                        CycNum.zeta(L, (-i * k * (L // s)) % L))
                    if k + 1 < s:
                        cur_p = act(tstep, cur_p)
                out.append((IrrepLabel(alpha=tuple(alpha),
                                       shapes=tuple(canon), i=i), gen))
    return out


def all_irreps(spec: GroupSpec, bound: int | None = None) -> list:
    """All irreducible representations of G(m, e, n), as labeled orbit
    spans, in deterministic census order."""
    elements_of(spec, bound)  # enforce the size bound up front
    out = []
    for label, seed in census_seeds(spec):
        out.append(LabeledIrrep(label=label, rep=orbit_span(spec, seed)))
    return out


# ---------------------------------------------------------------------------
# irreducible characters of Young subgroups
# ---------------------------------------------------------------------------

def young_irreps(P, spec: GroupSpec | None = None):
    """The Young subgroup of the set partition P together with its full
    list of irreducible characters, one per tuple of partitions of the
    block sizes (outer tensor products of Specht spans).

    Returns (H, [(shape_tuple, Character), ...]) with blocks taken in the
    normal-form order of P.
    """
    H = young_subgroup(P, spec)
    from .partitions import check_set_partition
    P = check_set_partition(P)
    n = spec_of(H).n
    shape_lists = [enumerate_partitions(len(block)) for block in P]
    out = []
    for shapes in itertools.product(*shape_lists):
        seed = Poly.constant(1, n)
        for block, shape in zip(P, shapes):
            for piece in min_filled(shape, members=block):
                seed = seed * vandermonde(piece, n)
        rep = orbit_span(H, seed)
        out.append((shapes, rep.character()))
    return H, out


# ---------------------------------------------------------------------------
# Clifford-theory helpers for a normal subgroup
# ---------------------------------------------------------------------------

def minimal_generating_sequence(H: Subgroup) -> list:
    """A short generating sequence found greedily (smallest element not in
    the closure so far)."""
    spec = H.spec
    chosen: list = []
    current = Subgroup.from_generators(spec, [])
    for g in H.elements:
        if g not in current:
            chosen.append(g)
            current = Subgroup.from_generators(spec, chosen)
            if current.order() == H.order():
                break
    return chosen


def element_order(g: GroupElement) -> int:
    spec = g.spec
    ident = spec.identity()
    k = 1
    cur = g
    while cur != ident:
        cur = mul(cur, g)
        k += 1
    return k


def abelian_characters(H: Subgroup) -> list:
    """All one-dimensional characters of an abelian subgroup, found by
    assigning roots of unity to a minimal generating sequence and keeping
    the consistent extensions."""
    gens = minimal_generating_sequence(H)
    N = 1
    for h in H:
        N = lcm(N, element_order(h))
    out = []
    for powers in itertools.product(range(N), repeat=len(gens)):
        table = {H.spec.identity(): CycNum.one(N)}
        queue = [H.spec.identity()]
        ok = True
        while queue:
            x = queue.pop()
            for g, k in zip(gens, powers):
                y = mul(x, g)
                val = table[x] * CycNum.zeta(N, k)
                if y in table:
                    if not table[y].equals(val):
                        ok = False
                        break
                else:
                    table[y] = val
                    queue.append(y)
            if not ok:
                break
        if not ok or len(table) != H.order():
            continue
        if all(table[mul(x, y)].equals(table[x] * table[y])
               for x in H for y in H):
            reps, _ = H.conjugacy_classes()
            out.append(Character(H, [table[r] for r, _sz in reps]))
    return out


def lifted_characters(H: Subgroup, N: Subgroup) -> list:
    """One-dimensional characters of H that factor through the quotient
    H/N (N must be normal in H): computed by building the coset
    multiplication table and enumerating the characters of the quotient.
    Non-abelian quotients yield only the characters of their
    abelianization."""
    if not all(h in H for h in N):
        raise ValueError("N is not contained in H")
    coset_of = {}
    keys = []
    for h in H.elements:
        if h in coset_of:
            continue
        members = sorted((mul(h, x) for x in N), key=GroupElement.key)
        keys.append(members[0])
        for y in members:
            coset_of[y] = members[0]
    for h in H.elements:
        for x in N:
            if coset_of[mul(x, h)] != coset_of[h]:
                raise ValueError("N is not normal in H")
    q = len(keys)
    key_index = {k: i for i, k in enumerate(keys)}

    def qmul(i: int, j: int) -> int:
        return key_index[coset_of[mul(keys[i], keys[j])]]

    orders = []
    for i in range(q):
        k, cur = 1, i
        while cur != 0:
            cur = qmul(cur, i)
            k += 1
        orders.append(k)
    exponent = 1
    for k in orders:
        exponent = lcm(exponent, k)
    # greedy generating set of the quotient
    gen_idx: list = []
    reached = {0}
    for i in range(q):
        if i not in reached:
            gen_idx.append(i)
            frontier = list(reached)
            while frontier:
                x = frontier.pop()
                for j in gen_idx:
                    y = qmul(x, j)
                    if y not in reached:
                        reached.add(y)
                        frontier.append(y)
    reps, _ = H.conjugacy_classes()
    out = []
    for powers in itertools.product(range(exponent), repeat=len(gen_idx)):
        table = {0: CycNum.one(exponent)}
        queue = [0]
        ok = True
        while queue and ok:
            x = queue.pop()
            for j, k in zip(gen_idx, powers):
                y = qmul(x, j)
                val = table[x] * CycNum.zeta(exponent, k)
                if y in table:
                    if not table[y].equals(val):
                        ok = False
                        break
                else:
                    table[y] = val
                    queue.append(y)
        if not ok or len(table) != q:
            continue
        if all(table[qmul(x, y)].equals(table[x] * table[y])
               for x in range(q) for y in range(q)):
            out.append(Character(
                H, [table[key_index[coset_of[r]]] for r, _sz in reps]))
    return out


def clifford_shape(chi: Character, H: Subgroup, irr_H: list) -> dict:
    """Clifford-theory shape of the restriction of chi to a normal
    subgroup H: decomposes Res chi against the given complete list of
    irreducible H-characters and reports whether the nonzero
    multiplicities are all equal and supported on a single orbit of the
    conjugation action of the ambient group on irr_H.

    Returns {"ok": bool, "e": common multiplicity, "orbit_size": int,
    "mults": tuple}.
    """
    G = chi.group
    res = restricted_character(chi, H)
    mults = []
    for eta in irr_H:
        ip = inner_product(res, eta)
        if not ip.is_rational() or ip.as_fraction().denominator != 1:
            raise ArithmeticError("restriction multiplicity not an integer")
        mults.append(int(ip.as_fraction()))
    support = [k for k, mm in enumerate(mults) if mm]
    ok = bool(support)
    e_common = mults[support[0]] if support else 0
    ok = ok and all(mults[k] == e_common for k in support)
    # single conjugation orbit check
    if ok:
        reps_H, _ = H.conjugacy_classes()

        def conj_index(k: int, g: GroupElement) -> int:
            gi = inv(g)
            vals = [irr_H[k].value(mul(mul(g, r), gi)) for r, _sz in reps_H]
            for j, eta in enumerate(irr_H):
                if all(a.equals(b) for a, b in zip(vals, eta.values)):
                    return j
            raise ArithmeticError("conjugated character missing from irr_H")

        orbit = {support[0]}
        stack = [support[0]]
        gens = group_generators(G)
        while stack:
            k = stack.pop()
            for g in gens:
                j = conj_index(k, g)
                if j not in orbit:
                    orbit.add(j)
                    stack.append(j)
        ok = orbit == set(support)
    return {"ok": ok, "e": e_common, "orbit_size": len(support),
            "mults": tuple(mults)}


# ---------------------------------------------------------------------------
# cyclic spans in the regular module
# ---------------------------------------------------------------------------

def cyclic_span_dim(group, coeffs: dict, bound: int | None = None) -> int:
    """Dimension of the cyclic submodule C[G].v generated by
    v = sum_g coeffs[g] g in the regular module (missing coefficients are
    zero)."""
    elements = group_elements(group, bound)
    index = {g: i for i, g in enumerate(elements)}
    vec = {}
    for g, c in coeffs.items():
        c = c if isinstance(c, CycNum) else CycNum.rational(c)
        if g not in index:
            raise ValueError("coefficient on a non-element")
        if not c.is_zero():
            vec[index[g]] = c
    rows = []
    for g in elements:
        row = {}
        for g2, c in coeffs.items():
            c = c if isinstance(c, CycNum) else CycNum.rational(c)
            if not c.is_zero():
                row[index[mul(g, g2)]] = c
        rows.append(row)
    # sparse rank
    pivots: dict = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            j = min(row)
            piv = pivots.get(j)
            if piv is None:
                li = row[j].inv()
                pivots[j] = {k: li * v for k, v in row.items()}
                rank += 1
                break
            c = row[j]
            new = dict(row)
            for k, v in piv.items():
                delta = c * v
                w = new.get(k)
                w = -delta if w is None else w - delta
                if w.is_zero():
                    new.pop(k, None)
                else:
                    new[k] = w
            row = new
    return rank

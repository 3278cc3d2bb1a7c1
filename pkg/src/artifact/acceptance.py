"""The acceptance suite: thirteen machine-checkable criteria.

Each ``criterion_<k>()`` function checks one end-to-end property of the
library with exact arithmetic and returns ``(ok, detail)``; ``run_all``
drives the full suite and is what the command-line ``verify`` command
prints.  Stated time limits are enforced as part of the verdict.

Two criteria assert externally fixed reference values that the library's
computations contradict; they are kept as stated rather than weakened,
and their detail strings explain the mathematical discrepancy.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from sympy import primerange

from .exactalg import Poly, delta_n, f_alpha, specht
from .filtration import (canonical_content, canonical_content_oracle,
                         intersection_criterion, trace_vanishing_oracle)
from .groups import (GroupElement, GroupSpec, Subgroup, conjugacy_classes,
                     elements_of, young_subgroup)
from .partitions import (conjugate, enumerate_partitions,
                         enumerate_set_partitions, hook_length_count,
                         min_filled, phi_mu, raw_layer, strata_graph)
from .repr import (RegularModule, abelian_characters, all_irreps,
                   clifford_shape, cyclic_span_dim, inner_product,
                   invariant_dim, lifted_characters, mackey_check,
                   mat_add, mat_eq, mat_identity, mat_mul, mat_rank,
                   mat_zero, orbit_span, projector_chi, projector_unit,
                   reynolds, young_irreps)
from .residues import (Certificate, LogForm, classify_etale_trivial,
                       iso_class_equal, residue_divisor)

__all__ = ["CRITERIA", "run_all"] + [f"criterion_{k}" for k in range(1, 14)]


# ---------------------------------------------------------------------------
# 1: canonical contents at n = 4
# ---------------------------------------------------------------------------

def criterion_1():
    """canonical_content((3,1)) and ((2,2)) against the reference sets."""
    got31 = canonical_content((3, 1)).content
    want31 = frozenset({(2, 2), (3, 1), (4,)})
    got22 = canonical_content((2, 2)).content
    want22 = frozenset({(2, 1, 1), (3, 1), (4,)})
    ok = got31 == want31 and got22 == want22
    detail = (f"content((3,1)) = {sorted(got31)}, "
              f"content((2,2)) = {sorted(got22)}")
    if got31 != want31:
        detail += f"; expected content((3,1)) = {sorted(want31)}"
    if got22 != want22:
        detail += (
            f"; expected content((2,2)) = {sorted(want22)}.  A label kappa "
            "belongs to the computed content iff conjugate(kappa) lies "
            "outside the dominance-up set of (2,2); the reference set's "
            "extra label (2,1,1) = conjugate((3,1)) is excluded because "
            "(2,2) <= (3,1) in dominance (partial sums 2 <= 3, 4 <= 4), and "
            "the symbolic trace oracle at n = 4 independently returns "
            "{(3,1),(4)} for (2,2)")
    return ok, detail


# ---------------------------------------------------------------------------
# 2: the raw layer of (3,2) at n = 5
# ---------------------------------------------------------------------------

def criterion_2():
    """raw_layer((3,2)) equals the reference four-element set."""
    got = raw_layer((3, 2))
    want = frozenset({(1, 1, 1, 1, 1), (2, 1, 1, 1), (3, 1, 1), (2, 2, 1)})
    detail = f"raw layer of (3,2) = {sorted(got)}"
    if got != want:
        detail += f"; expected {sorted(want)}"
    return got == want, detail


# ---------------------------------------------------------------------------
# 3: quotient labels and the specialization diagram at n = 6
# ---------------------------------------------------------------------------

# Reference n = 6 specialization diagram asserted by this criterion.
REFERENCE_EDGES_N6 = frozenset({
    ((1, 1, 1, 1, 1, 1), (2, 1, 1, 1, 1)),
    ((2, 1, 1, 1, 1), (2, 2, 1, 1)),
    ((2, 1, 1, 1, 1), (3, 1, 1, 1)),
    ((2, 2, 1, 1), (2, 2, 2)),
    ((2, 2, 1, 1), (3, 2, 1)),
    ((2, 2, 2), (3, 3)),
    ((2, 2, 2), (4, 2)),
    ((3, 1, 1, 1), (3, 2, 1)),
    ((3, 1, 1, 1), (4, 1, 1)),
    ((3, 2, 1), (3, 3)),
    ((3, 2, 1), (4, 2)),
    ((3, 2, 1), (5, 1)),
    ((3, 3), (6,)),
    ((4, 1, 1), (4, 2)),
    ((4, 1, 1), (5, 1)),
    ((4, 2), (6,)),
    ((5, 1), (6,)),
})


def criterion_3():
    """phi_mu((2,2,2)) and the n = 6 diagram against the references."""
    got_phi = phi_mu((2, 2, 2))
    want_phi = frozenset({(2, 2, 1, 1), (3, 1, 1, 1)})
    got_edges = frozenset(strata_graph(6).edges)
    ok = got_phi == want_phi and got_edges == REFERENCE_EDGES_N6
    detail = f"phi((2,2,2)) = {sorted(got_phi)}"
    if got_phi != want_phi:
        detail += f"; expected {sorted(want_phi)}"
    if got_edges == REFERENCE_EDGES_N6:
        detail += f"; diagram has {len(got_edges)} edges, all as referenced"
    else:
        extra = sorted(got_edges - REFERENCE_EDGES_N6)
        missing = sorted(REFERENCE_EDGES_N6 - got_edges)
        detail += (
            f"; computed diagram differs from the reference: computed-only "
            f"edges {extra}, reference-only edges {missing}.  Merging the "
            "two 2-blocks of a shape-(2,2,1,1) set partition yields shape "
            "(4,1,1) with no shape strictly between, so (2,2,1,1)->(4,1,1) "
            "is a genuine covering edge; and every union of blocks of a "
            "shape-(2,2,2) set partition has even size, so no shape-(3,3) "
            "partition coarsens one of shape (2,2,2) and (2,2,2)->(3,3) is "
            "not even a comparability")
    return ok, detail


# ---------------------------------------------------------------------------
# 4: combinatorial rule == symbolic oracle for n = 3, 4, 5
# ---------------------------------------------------------------------------

def criterion_4():
    """canonical_content agrees with the Reynolds-sum oracle, n <= 5."""
    checked = 0
    for n in (3, 4, 5):
        for mu in enumerate_partitions(n):
            rule = canonical_content(mu).content
            oracle = canonical_content_oracle(mu)
            if rule != oracle:
                return False, (f"mu = {mu}: rule {sorted(rule)} != "
                               f"oracle {sorted(oracle)}")
            checked += 1
    return True, f"rule == oracle for all {checked} strata with n in 3..5"


# ---------------------------------------------------------------------------
# 5: trace vanishing <=> block intersection
# ---------------------------------------------------------------------------

def criterion_5():
    """Equivalence of the symbolic and combinatorial criteria."""
    checked = 0
    for n in range(1, 6):
        parts = list(enumerate_set_partitions(n))
        for P in parts:
            for Q in parts:
                if trace_vanishing_oracle(P, Q) != intersection_criterion(P, Q):
                    return False, f"mismatch at n={n}: P={P}, Q={Q}"
                checked += 1
    rng = random.Random(2026)
    parts6 = list(enumerate_set_partitions(6))
    for _ in range(500):
        P = rng.choice(parts6)
        Q = rng.choice(parts6)
        if trace_vanishing_oracle(P, Q) != intersection_criterion(P, Q):
            return False, f"mismatch at n=6: P={P}, Q={Q}"
        checked += 1
    return True, (f"{checked} pairs agree (exhaustive n <= 5 plus 500 "
                  "random at n = 6)")


# ---------------------------------------------------------------------------
# 6: the irreducible census over nine groups
# ---------------------------------------------------------------------------

CENSUS_SPECS = ((1, 1, 3), (1, 1, 4), (2, 1, 2), (2, 1, 3), (1, 2, 2),
                (1, 2, 4), (3, 1, 2), (1, 3, 3), (2, 2, 4))


def criterion_6():
    """Completeness and orthonormality of every census."""
    lines = []
    for d, e, n in CENSUS_SPECS:
        spec = GroupSpec(d, e, n)
        order = spec.order()
        irr = all_irreps(spec)
        chars = [li.rep.character() for li in irr]
        total = 0
        for li, chi in zip(irr, chars):
            ip = inner_product(chi, chi)
            if not (ip.is_rational() and ip.as_fraction() == 1):
                return False, (f"{spec.notation()}: <chi,chi> = {ip} != 1 "
                               f"for {li.label}")
            deg = int(chi.degree().as_fraction())
            total += deg * deg
        for i in range(len(chars)):
            for j in range(i + 1, len(chars)):
                if not inner_product(chars[i], chars[j]).is_zero():
                    return False, (f"{spec.notation()}: irreps {i} and {j} "
                                   "are not orthogonal")
        if total != order:
            return False, (f"{spec.notation()}: sum of squared degrees "
                           f"{total} != order {order}")
        classes, _ = conjugacy_classes(spec)
        if len(irr) != len(classes):
            return False, (f"{spec.notation()}: {len(irr)} irreps vs "
                           f"{len(classes)} conjugacy classes")
        lines.append(f"{spec.notation()}:{len(irr)}")
    return True, "censuses complete and orthonormal — " + ", ".join(lines)


# ---------------------------------------------------------------------------
# 7: the Fourier seeds of alpha = (1,1,0,0) in G(2,2,4)
# ---------------------------------------------------------------------------

def criterion_7():
    """f_alpha reproduces x1 x2 +- x3 x4 for the index-2 group on 4 vars."""
    spec = GroupSpec(1, 2, 4)
    p12 = Poly.variable(1, 4) * Poly.variable(2, 4)
    p34 = Poly.variable(3, 4) * Poly.variable(4, 4)
    f0 = f_alpha(spec, (1, 1, 0, 0), 0)
    f1 = f_alpha(spec, (1, 1, 0, 0), 1)
    ok0 = f0.equals(p12 + p34)
    diff = p12 + p34.scale(-1)
    ok1 = f1.equals(diff) or f1.equals(diff.scale(-1))
    detail = f"f_(1,1,0,0),0 = {f0}; f_(1,1,0,0),1 = {f1}"
    if not (ok0 and ok1):
        detail += "; expected x1 x2 + x3 x4 and x1 x2 - x3 x4 (up to sign)"
    return ok0 and ok1, detail


# ---------------------------------------------------------------------------
# 8: the projector algebra on regular modules
# ---------------------------------------------------------------------------

PROJECTOR_SPECS = ((1, 1, 3), (1, 1, 4), (2, 1, 2))


def criterion_8():
    """Isotypic and matrix-unit projector identities, with ranks."""
    for d, e, n in PROJECTOR_SPECS:
        spec = GroupSpec(d, e, n)
        module = RegularModule(spec)
        irr = all_irreps(spec)
        projs = []
        for li in irr:
            projs.append(projector_chi(li.rep.character(), module))
        total = mat_zero(module.dim)
        for P in projs:
            total = mat_add(total, P)
        if not mat_eq(total, mat_identity(module.dim)):
            return False, f"{spec.notation()}: projectors do not sum to id"
        for i, P in enumerate(projs):
            if not mat_eq(mat_mul(P, P), P):
                return False, (f"{spec.notation()}: projector {i} is not "
                               "idempotent")
            for j in range(i + 1, len(projs)):
                if not mat_eq(mat_mul(P, projs[j]), mat_zero(module.dim)):
                    return False, (f"{spec.notation()}: projectors {i},{j} "
                                   "do not annihilate")
        for li, P in zip(irr, projs):
            dim = li.rep.dim
            units = [[projector_unit(li.rep, a, b, module)
                      for b in range(dim)] for a in range(dim)]
            diag_sum = mat_zero(module.dim)
            for a in range(dim):
                diag_sum = mat_add(diag_sum, units[a][a])
            if not mat_eq(diag_sum, P):
                return False, (f"{spec.notation()} {li.label}: diagonal "
                               "units do not sum to the isotypic projector")
            for a in range(dim):
                if mat_rank(units[a][a]) != dim:
                    return False, (f"{spec.notation()} {li.label}: rank of "
                                   f"unit ({a},{a}) != {dim}")
                for b in range(dim):
                    for c in range(dim):
                        if not mat_eq(mat_mul(units[a][b], units[b][c]),
                                      units[a][c]):
                            return False, (f"{spec.notation()} {li.label}: "
                                           f"unit chain ({a},{b}),({b},{c}) "
                                           "fails")
    names = ", ".join(GroupSpec(*s).notation() for s in PROJECTOR_SPECS)
    return True, f"all projector identities hold on {names}"


# ---------------------------------------------------------------------------
# 9: branching to S_{n-1} and the seed delta_n
# ---------------------------------------------------------------------------

def criterion_9():
    """Exactly one nontrivial irrep sees S_{n-1}-invariants, and delta_n
    spans an irreducible (n-1)-dimensional complement of the averages."""
    lines = []
    for n in range(3, 7):
        spec = GroupSpec(1, 1, n)
        sub = young_subgroup([list(range(1, n)), [n]], spec)
        hits = []
        for li in all_irreps(spec):
            chi = li.rep.character()
            if all(v.is_rational() and v.as_fraction() == 1
                   for v in chi.values):
                continue
            dim = invariant_dim(chi, sub)
            if dim:
                hits.append((li.label, dim))
        if len(hits) != 1 or hits[0][1] != 1:
            return False, f"n={n}: nontrivial invariant dims {hits}"
        seed = delta_n(n)
        if not reynolds(spec, seed).is_zero():
            return False, f"n={n}: the group average of delta_n is nonzero"
        rep = orbit_span(spec, seed)
        if rep.dim != n - 1:
            return False, f"n={n}: orbit span of delta_n has dim {rep.dim}"
        norm = inner_product(rep.character(), rep.character())
        if not (norm.is_rational() and norm.as_fraction() == 1):
            return False, f"n={n}: delta_n span is not irreducible ({norm})"
        lines.append(f"n={n}")
    return True, ("one nontrivial branching irrep with multiplicity 1, and "
                  "delta_n spans an irreducible of dim n-1, for "
                  + ", ".join(lines))


# ---------------------------------------------------------------------------
# 10: Mackey double cosets and Clifford restriction shapes
# ---------------------------------------------------------------------------

def _klein_subgroup(spec: GroupSpec) -> Subgroup:
    zero = (0,) * spec.n
    perms = ((1, 2, 3, 4), (2, 1, 4, 3), (3, 4, 1, 2), (4, 3, 2, 1))
    return Subgroup.from_elements(
        spec, [GroupElement(spec, zero, p) for p in perms])


def criterion_10():
    """Mackey's formula on Young subgroup pairs; Clifford shapes for three
    normal-subgroup restrictions."""
    spec4 = GroupSpec(1, 1, 4)
    parts4 = list(enumerate_set_partitions(4))
    checked = 0
    young = [(P, *young_irreps(P, spec4)) for P in parts4]
    for P1, H1, _chars1 in young:
        for P2, H2, chars2 in young:
            for _shapes, chi in chars2:
                res = mackey_check(H1, H2, chi)
                if not res.ok:
                    return False, f"Mackey fails for P1={P1}, P2={P2}"
                checked += 1
    spec5 = GroupSpec(1, 1, 5)
    rng = random.Random(41)
    parts5 = list(enumerate_set_partitions(5))
    for _ in range(5):
        P1 = rng.choice(parts5)
        P2 = rng.choice(parts5)
        H1 = young_subgroup(P1, spec5)
        H2, chars2 = young_irreps(P2, spec5)
        for _shapes, chi in chars2:
            res = mackey_check(H1, H2, chi)
            if not res.ok:
                return False, f"Mackey fails for P1={P1}, P2={P2} at n=5"
            checked += 1

    # Clifford shapes: S_4 over A_4, S_4 over the Klein subgroup, and
    # G(2,1,2) over its diagonal normal subgroup.
    zero4 = (0, 0, 0, 0)
    alt = Subgroup.from_generators(spec4, [
        GroupElement(spec4, zero4, (2, 3, 1, 4)),
        GroupElement(spec4, zero4, (2, 1, 4, 3)),
    ])
    klein = _klein_subgroup(spec4)
    irr_alt = lifted_characters(alt, klein)
    irr_alt.append(orbit_span(alt, delta_n(4)).character())
    irr_klein = abelian_characters(klein)
    spec212 = GroupSpec(2, 1, 2)
    diag = Subgroup.from_generators(spec212, [
        GroupElement(spec212, (1, 0), (1, 2)),
        GroupElement(spec212, (0, 1), (1, 2)),
    ])
    irr_diag = abelian_characters(diag)
    cases = [("S4 over A4", spec4, alt, irr_alt),
             ("S4 over the Klein subgroup", spec4, klein, irr_klein),
             ("G(2,1,2) over the diagonal", spec212, diag, irr_diag)]
    for name, spec, H, irr_H in cases:
        index = spec.order() // H.order()
        for li in all_irreps(spec):
            shape = clifford_shape(li.rep.character(), H, irr_H)
            if not shape["ok"]:
                return False, (f"{name}: restriction of {li.label} is not "
                               f"orbit-uniform ({shape['mults']})")
            if shape["e"] and index % shape["e"]:
                return False, (f"{name}: multiplicity {shape['e']} does not "
                               f"divide the index {index}")
    return True, (f"{checked} Mackey instances pass; all three Clifford "
                  "restriction shapes are orbit-uniform")


# ---------------------------------------------------------------------------
# 11: Specht span dimensions against hook lengths
# ---------------------------------------------------------------------------

def criterion_11():
    """dim of the Specht span equals the conjugate-shape tableau count."""
    checked = 0
    for n in range(1, 6):
        spec = GroupSpec(1, 1, n)
        for lam in enumerate_partitions(n):
            rep = orbit_span(spec, specht(min_filled(lam), n))
            want = hook_length_count(conjugate(lam))
            if rep.dim != want:
                return False, (f"shape {lam}: span dim {rep.dim} != "
                               f"tableau count {want}")
            checked += 1
    return True, f"all {checked} shapes with n <= 5 match hook lengths"


# ---------------------------------------------------------------------------
# 12: residue arithmetic
# ---------------------------------------------------------------------------

def criterion_12():
    """Degree-weighted residue sums vanish; classification round-trips."""
    X = Poly.variable(1, 1)
    one = Poly.constant(1, 1)
    pool = [X - one, X + one, X, X * X + one, X * X + X + one,
            X - Poly.constant(2, 1), X + Poly.constant(3, 1)]
    rng = random.Random(7)
    for trial in range(100):
        k = rng.randint(1, 4)
        primes = rng.sample(pool, k)
        coeffs = [rng.randint(-6, 6) or 1 for _ in range(k)]
        gamma = LogForm.make(1, list(zip(coeffs, primes)))
        if not residue_divisor(gamma).degree_weighted_sum().is_zero():
            return False, f"nonzero degree-weighted sum at trial {trial}"
    for trial in range(200):
        l = rng.randint(1, 12)
        k = rng.randint(1, 4)
        primes = rng.sample(pool, k)
        exps = [rng.randint(1, 5) * rng.choice((1, -1)) for _ in range(k)]
        gamma = LogForm.make(
            1, [(Fraction(e, l), p) for e, p in zip(exps, primes)])
        res = classify_etale_trivial(gamma)
        if not isinstance(res, Certificate):
            return False, f"trial {trial}: classified as {res}"
        num, den = res.phi
        parts = [(Fraction(s, res.l), p) for s, p in ((1, num), (-1, den))
                 if p.total_degree() > 0]
        rebuilt = LogForm.make(1, parts)
        if not (iso_class_equal(gamma, rebuilt)
                and iso_class_equal(rebuilt, gamma)):
            return False, f"trial {trial}: round trip left the iso class"
    return True, ("100 residue divisors of degree 0 and 200 certificate "
                  "round trips")


# ---------------------------------------------------------------------------
# 13: cyclic spans with prime coefficients
# ---------------------------------------------------------------------------

def criterion_13():
    """A prime-coefficient vector generates the whole regular module; the
    all-ones vector generates the line of averages."""
    for d, e, n in ((1, 1, 3), (1, 1, 4)):
        spec = GroupSpec(d, e, n)
        elements = elements_of(spec)
        primes = list(primerange(2, 200))[:len(elements)]
        full = cyclic_span_dim(spec, dict(zip(elements, primes)))
        if full != len(elements):
            return False, (f"{spec.notation()}: prime vector spans "
                           f"{full} < {len(elements)}")
        line = cyclic_span_dim(spec, {g: 1 for g in elements})
        if line != 1:
            return False, f"{spec.notation()}: sum of all g spans {line}"
    return True, "prime vectors are cyclic; the all-ones vector spans a line"


# ---------------------------------------------------------------------------
# the driver
# ---------------------------------------------------------------------------

TIME_LIMITS = {1: 1.0, 2: 1.0, 3: 1.0, 4: 300.0, 5: 600.0, 6: 600.0,
               8: 60.0, 9: 60.0, 10: 120.0, 12: 60.0}

CRITERIA = (
    (1, "canonical contents at n = 4", criterion_1),
    (2, "raw layer of (3,2) at n = 5", criterion_2),
    (3, "quotient labels and diagram at n = 6", criterion_3),
    (4, "combinatorial rule vs symbolic oracle", criterion_4),
    (5, "trace vanishing vs block intersection", criterion_5),
    (6, "irreducible census over nine groups", criterion_6),
    (7, "Fourier seeds of (1,1,0,0) in the index-2 group", criterion_7),
    (8, "projector algebra on regular modules", criterion_8),
    (9, "branching and the delta_n seed", criterion_9),
    (10, "Mackey and Clifford checks", criterion_10),
    (11, "Specht dimensions vs hook lengths", criterion_11),
    (12, "residue divisors and certificates", criterion_12),
    (13, "cyclic spans with prime coefficients", criterion_13),
)


def run_criterion(number: int):
    """Run one criterion with its time limit; returns a result record."""
    for num, title, fn in CRITERIA:
        if num == number:
            break
    else:
        raise ValueError(f"no criterion numbered {number}")
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # pragma: no cover - diagnostic path
        ok, detail = False, f"exception: {exc!r}"
    seconds = time.perf_counter() - start
    limit = TIME_LIMITS.get(number)
    if ok and limit is not None and seconds > limit:
        ok = False
        detail += f"; took {seconds:.1f}s, over the {limit:.0f}s limit"
    return {"criterion": number, "title": title, "ok": ok,
            "detail": detail, "seconds": round(seconds, 3)}


def run_all(numbers=None) -> list:
    """Run the full suite (or the given criteria numbers) in order."""
    wanted = ([num for num, _t, _f in CRITERIA]
              if numbers is None else list(numbers))
    return [run_criterion(num) for num in wanted]

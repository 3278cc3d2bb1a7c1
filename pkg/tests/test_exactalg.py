"""Cyclotomic numbers, exact polynomials, and the monomial group action."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from artifact.exactalg import (
    CycNum,
    Poly,
    act,
    cyclotomic_coeffs,
    delta_n,
    f_alpha,
    parse_cyc,
    parse_poly,
    specht,
    specht_power,
    vandermonde,
    x_alpha,
)
from artifact.groups import (
    GroupSpec,
    alpha_data,
    elements_of,
    inv,
    make_element,
    mul,
    young_subgroup,
)
from artifact.partitions import enumerate_partitions, min_filled

MODULI = (1, 2, 3, 4, 6, 12)


@st.composite
def cyc_numbers(draw):
    m = draw(st.sampled_from(MODULI))
    dim = len(CycNum.zero(m).v)
    coeffs = draw(st.lists(
        st.fractions(min_value=-3, max_value=3, max_denominator=4),
        min_size=dim, max_size=dim))
    out = CycNum.zero(m)
    for k, q in enumerate(coeffs):
        out = out + CycNum.zeta(m, k) * CycNum.rational(q)
    return out


@st.composite
def polys(draw, n=2, max_terms=3):
    terms = draw(st.lists(
        st.tuples(st.lists(st.integers(0, 3), min_size=n, max_size=n),
                  st.integers(-4, 4)),
        min_size=0, max_size=max_terms))
    p = Poly.zero(n, 1)
    for exps, c in terms:
        p = p + Poly.monomial(tuple(exps), c)
    return p


@st.composite
def group_elements(draw, spec):
    els = elements_of(spec)
    return els[draw(st.integers(0, len(els) - 1))]


# ---------------------------------------------------------------------------
# cyclotomic arithmetic
# ---------------------------------------------------------------------------

@given(cyc_numbers(), cyc_numbers(), cyc_numbers())
def test_cyc_ring_axioms(a, b, c):
    assert (a + b).equals(b + a)
    assert (a * b).equals(b * a)
    assert ((a + b) + c).equals(a + (b + c))
    assert ((a * b) * c).equals(a * (b * c))
    assert (a * (b + c)).equals(a * b + a * c)
    assert (a + CycNum.zero(1)).equals(a)
    assert (a * CycNum.one(1)).equals(a)
    assert (a - a).is_zero()


@given(cyc_numbers())
def test_cyc_multiplicative_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inv()
    else:
        assert (a * a.inv()).equals(CycNum.one(1))


@given(cyc_numbers(), cyc_numbers())
def test_cyc_conjugation_is_a_ring_involution(a, b):
    assert a.conj().conj().equals(a)
    assert (a + b).conj().equals(a.conj() + b.conj())
    assert (a * b).conj().equals(a.conj() * b.conj())
    # a * conj(a) is a nonnegative real number
    norm = (a * a.conj()).to_complex()
    assert abs(norm.imag) < 1e-9
    assert norm.real > -1e-9


@given(cyc_numbers(), cyc_numbers())
def test_cyc_complex_embedding_is_a_homomorphism(a, b):
    za, zb = a.to_complex(), b.to_complex()
    assert abs((a + b).to_complex() - (za + zb)) < 1e-9
    assert abs((a * b).to_complex() - (za * zb)) < 1e-9


def test_zeta_is_a_primitive_root():
    for m in range(1, 13):
        z = CycNum.zeta(m)
        power = CycNum.one(m)
        for k in range(1, m):
            power = power * z
            assert not power.equals(CycNum.one(1))
        assert (power * z).equals(CycNum.one(1))
        # and it satisfies the m-th cyclotomic polynomial
        value = CycNum.zero(m)
        power = CycNum.one(m)
        for coeff in cyclotomic_coeffs(m):
            value = value + power * CycNum.rational(coeff)
            power = power * z
        assert value.is_zero()


def test_rationality_detection():
    z = CycNum.zeta(6)
    assert not z.is_rational()
    # zeta_6 + zeta_6^5 = 1
    s = z + z.conj()
    assert s.is_rational() and s.as_fraction() == 1
    assert CycNum.rational(Fraction(-7, 3)).as_fraction() == Fraction(-7, 3)


@given(cyc_numbers())
def test_cyc_conductor_embedding(a):
    big = a.embed(24)
    assert big.m == 24
    assert big.equals(a)


@given(cyc_numbers())
def test_cyc_parse_str_round_trip(a):
    assert parse_cyc(str(a)).equals(a)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

@given(polys(), polys(), polys())
def test_poly_ring_axioms(p, q, r):
    assert (p + q).equals(q + p)
    assert (p * q).equals(q * p)
    assert ((p + q) + r).equals(p + (q + r))
    assert ((p * q) * r).equals(p * (q * r))
    assert (p * (q + r)).equals(p * q + p * r)
    assert (p * Poly.constant(1, 2)).equals(p)


@given(polys())
def test_poly_parse_str_round_trip(p):
    assert parse_poly(str(p), p.n).equals(p)


@given(polys(), polys())
def test_poly_complex_evaluation_is_a_homomorphism(p, q):
    point = (1.25 - 0.5j, -0.75 + 1.5j)
    vp, vq = p.eval_complex(point), q.eval_complex(point)
    assert abs((p + q).eval_complex(point) - (vp + vq)) < 1e-9
    assert abs((p * q).eval_complex(point) - (vp * vq)) < 1e-9


def test_poly_total_degree_and_zero():
    assert Poly.zero(2, 1).is_zero()
    p = parse_poly("1 * x1^2 x2 + 3 * x2", 2)
    assert p.total_degree() == 3
    assert not p.is_zero()


# ---------------------------------------------------------------------------
# the group action
# ---------------------------------------------------------------------------

SPEC22 = GroupSpec(2, 1, 2)


@given(group_elements(SPEC22), group_elements(SPEC22), polys())
def test_act_is_a_group_action(g, h, p):
    assert act(g, act(h, p)).equals(act(mul(g, h), p))
    assert act(SPEC22.identity(), p).equals(p)
    assert act(inv(g), act(g, p)).equals(p)


@given(group_elements(SPEC22), polys(), polys())
def test_act_is_a_ring_homomorphism(g, p, q):
    assert act(g, p + q).equals(act(g, p) + act(g, q))
    assert act(g, p * q).equals(act(g, p) * act(g, q))


def _perm_sign(perm):
    n = len(perm)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@pytest.mark.parametrize("lam", [(2, 2), (3, 1), (2, 1, 1), (3, 2)])
def test_specht_is_the_block_sign_representation(lam):
    blocks = min_filled(lam)
    s = specht(blocks)
    for g in young_subgroup(blocks):
        assert act(g, s).equals(s.scale(_perm_sign(g.p)))


def test_specht_of_singletons_is_constant():
    assert specht(min_filled((1, 1, 1))).equals(Poly.constant(1, 3))


def test_vandermonde_antisymmetry():
    spec = GroupSpec(1, 1, 5)
    v = vandermonde((1, 2, 3), 5)
    swap_in = make_element(spec, (0,) * 5, (2, 1, 3, 4, 5))
    swap_out = make_element(spec, (0,) * 5, (1, 2, 3, 5, 4))
    assert act(swap_in, v).equals(v.scale(-1))
    assert act(swap_out, v).equals(v)


def test_specht_power_one_is_specht():
    blocks = min_filled((2, 2))
    assert specht_power(blocks, 1).equals(specht(blocks))


# ---------------------------------------------------------------------------
# Fourier seeds
# ---------------------------------------------------------------------------

F_ALPHA_CASES = [
    (GroupSpec(1, 2, 4), (1, 1, 0, 0)),
    (GroupSpec(1, 3, 3), (0, 1, 2)),
    (GroupSpec(2, 2, 4), (1, 3, 1, 3)),
]


@pytest.mark.parametrize("spec,alpha", F_ALPHA_CASES)
def test_f_alpha_is_a_shift_eigenvector(spec, alpha):
    data = alpha_data(spec, alpha)
    assert data.b * data.o == spec.e
    for i in range(data.o):
        f = f_alpha(spec, alpha, i)
        assert act(data.t, f).equals(f.scale(CycNum.zeta(data.o, i)))


@pytest.mark.parametrize("spec,alpha", F_ALPHA_CASES)
def test_f_alpha_fourier_inversion(spec, alpha):
    data = alpha_data(spec, alpha)
    total = Poly.zero(spec.n, 1)
    for i in range(data.o):
        total = total + f_alpha(spec, alpha, i)
    assert total.equals(x_alpha(spec, alpha).scale(data.o))


def test_delta_n_value():
    assert delta_n(3).equals(parse_poly("-1 * x1 + -1 * x2 + 2 * x3", 3))
    # delta_n vanishes on the diagonal
    for n in range(2, 6):
        assert abs(delta_n(n).eval_complex((0.7 + 0.2j,) * n)) < 1e-12

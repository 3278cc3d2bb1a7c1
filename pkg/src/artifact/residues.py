"""Closed logarithmic 1-forms over rational function fields.

A form is stored in log-plus-exact coordinates,

    gamma = sum_i c_i dlog P_i + d(psi),

with constants c_i (rational or cyclotomic), polynomials P_i irreducible
over the rationals and pairwise non-associate, and a rational function psi.
The module computes residues against prime divisors, synthesizes the
residue divisor with its point at infinity in one variable, classifies
rank-one forms as etale-trivial with an explicit radical certificate, and
decides isomorphism of the associated classes.  Univariate inputs are
factored exactly over the rationals via sympy; multivariate primes are
trusted from the caller.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import sympy

from .exactalg import CycNum, Poly, parse_cyc


class _Infinity:
    """The hyperplane at infinity of the univariate projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "oo"

    def __str__(self):
        return "oo"


#: Divisor entry symbol for the point at infinity.
INFINITY = _Infinity()


# ---------------------------------------------------------------------------
# sympy conversion helpers (rational-coefficient polynomials only)
# ---------------------------------------------------------------------------

def _symbols(n: int):
    return sympy.symbols(f"x1:{n + 1}")


def poly_to_sympy(p: Poly, syms=None):
    """Convert a rational-coefficient :class:`Poly` to a sympy expression."""
    syms = _symbols(p.n) if syms is None else syms
    expr = sympy.Integer(0)
    for exps, coef in p.terms.items():
        if not coef.is_rational():
            raise ArithmeticError("polynomial has an irrational coefficient")
        q = coef.as_fraction()
        term = sympy.Rational(q.numerator, q.denominator)
        for s, a in zip(syms, exps):
            if a:
                term *= s ** a
        expr += term
    return expr


def poly_from_sympy(expr, syms, n: int) -> Poly:
    """Convert a polynomial sympy expression over Q to a :class:`Poly`."""
    sp = sympy.Poly(sympy.expand(expr), *syms, domain="QQ")
    terms = {}
    for exps, coef in sp.terms():
        q = Fraction(int(coef.numerator), int(coef.denominator))
        full = exps + (0,) * (n - len(exps))
        terms[full] = CycNum.rational(q)
    return Poly(n, 1, terms)


def _as_cyc(c) -> CycNum:
    return c if isinstance(c, CycNum) else CycNum.rational(Fraction(c))


def _is_associate(p: Poly, q: Poly) -> bool:
    """True iff p = c*q for a nonzero scalar c."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    lp = p.leading()
    lq = q.leading()
    if lp[0] != lq[0]:
        return False
    return p.equals(q.scale(lp[1] / lq[1]))


def _is_constant_ratio(num: Poly, den: Poly) -> bool:
    """True iff num/den is a constant (including num = 0)."""
    if num.is_zero():
        return True
    ln = num.leading()
    ld = den.leading()
    if ln[0] != ld[0]:
        return False
    return num.equals(den.scale(ln[1] / ld[1]))


def _univariate_factors(p: Poly):
    """Monic irreducible factors of a univariate rational Poly, with
    multiplicities, via exact factorization over the rationals."""
    x = sympy.Symbol("x1")
    expr = poly_to_sympy(p, (x,))
    _, factors = sympy.factor_list(expr, x)
    out = []
    for fac, mult in factors:
        out.append((poly_from_sympy(sympy.monic(sympy.Poly(fac, x)).as_expr(),
                                    (x,), 1), int(mult)))
    return out


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LogForm:
    """A closed form c_1 dlog P_1 + ... + c_r dlog P_r + d(psi).

    ``log_part`` is a tuple of (coefficient, prime) pairs with nonzero
    coefficients and pairwise non-associate non-constant primes;
    ``exact_part`` is a (numerator, denominator) pair of polynomials
    representing psi.  Build instances through :meth:`make`, which
    normalizes input (factoring univariate primes over the rationals,
    merging associate primes, dropping zero coefficients).
    """

    n_vars: int
    log_part: tuple
    exact_part: tuple

    @staticmethod
    def make(n_vars: int, log=(), exact=None) -> "LogForm":
        merged = []  # list of [coeff, prime]
        for c, p in log:
            c = _as_cyc(c)
            if c.is_zero():
                continue
            if p.n != n_vars:
                raise ValueError("prime has wrong number of variables")
            if p.total_degree() < 1:
                raise ValueError("log-part primes must be non-constant")
            if n_vars == 1:
                pieces = [(fac, mult) for fac, mult in _univariate_factors(p)]
            else:
                pieces = [(p, 1)]
            for fac, mult in pieces:
                contrib = c * mult if mult != 1 else c
                for entry in merged:
                    if _is_associate(entry[1], fac):
                        entry[0] = entry[0] + contrib
                        break
                else:
                    merged.append([contrib, fac])
        if exact is None:
            num, den = Poly.zero(n_vars), Poly.constant(1, n_vars)
        else:
            num, den = exact
            if den.is_zero():
                raise ZeroDivisionError("exact part has zero denominator")
            if num.n != n_vars or den.n != n_vars:
                raise ValueError("exact part has wrong number of variables")
            if num.is_zero():
                num, den = Poly.zero(n_vars), Poly.constant(1, n_vars)
        kept = tuple((c, p) for c, p in
                     ((entry[0], entry[1]) for entry in merged)
                     if not c.is_zero())
        return LogForm(n_vars=n_vars, log_part=kept, exact_part=(num, den))

    def exact_is_constant(self) -> bool:
        return _is_constant_ratio(*self.exact_part)

    def __str__(self):
        bits = []
        for c, p in self.log_part:
            bits.append(f"({c}) dlog({p})")
        num, den = self.exact_part
        if not num.is_zero():
            bits.append(f"d(({num})/({den}))")
        return " + ".join(bits) if bits else "0"


def dlog(p: Poly, c=1) -> LogForm:
    """The form c * dlog(p)."""
    return LogForm.make(p.n, [(c, p)])


def add_forms(a: LogForm, b: LogForm) -> LogForm:
    """Sum of two forms over the same variables (exact parts added as
    rational functions)."""
    if a.n_vars != b.n_vars:
        raise ValueError("forms must share a variable set")
    na, da = a.exact_part
    nb, db = b.exact_part
    num = na * db + nb * da
    den = da * db
    return LogForm.make(a.n_vars, list(a.log_part) + list(b.log_part),
                        (num, den))


@dataclass(frozen=True)
class ResidueDivisor:
    """Formal sum of residues against prime divisors.

    ``entries`` is a tuple of (coefficient, prime) pairs where the prime is
    a :class:`Poly` or :data:`INFINITY`; coefficients are nonzero and each
    prime appears once.
    """

    entries: tuple

    def degree_weighted_sum(self) -> CycNum:
        """Sum of coefficient * degree over all entries, the point at
        infinity counting with degree one."""
        total = CycNum.zero(1)
        for c, p in self.entries:
            deg = 1 if p is INFINITY else p.total_degree()
            total = total + c * deg
        return total

    def coefficient_of(self, p) -> CycNum:
        for c, q in self.entries:
            if (p is INFINITY and q is INFINITY) or \
                    (p is not INFINITY and q is not INFINITY and
                     _is_associate(p, q)):
                return c
        return CycNum.zero(1)


@dataclass(frozen=True)
class Certificate:
    """Etale-trivial certificate: l * gamma = dlog(phi) with phi = num/den."""

    l: int
    phi: tuple  # (numerator Poly, denominator Poly)

    def __str__(self):
        num, den = self.phi
        phi = str(num) if den.equals(Poly.constant(1, den.n)) \
            else f"({num})/({den})"
        return f"l = {self.l}, phi = {phi}"


@dataclass(frozen=True)
class NotEtaleTrivial:
    """Negative classification verdict with the reason and an optional
    witness (for the exponential case, the (l, phi) log-part certificate)."""

    reason: str
    witness: object = None

    def __str__(self):
        return f"not etale-trivial: {self.reason}"


class NonConstantResidue(ValueError):
    """A univariate residue function is not constant, so the form lies
    outside the rational-log class."""

    def __init__(self, factor: str, residue: str):
        super().__init__(f"non-constant residue along {factor}: {residue}")
        self.factor = factor
        self.residue = residue


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def residue_along(gamma: LogForm, p: Poly) -> CycNum:
    """Residue of ``gamma`` along the prime divisor of ``p``.

    Returns c_i when ``p`` is associate to a log-part prime, else zero.
    Univariate inputs are verified irreducible over the rationals;
    multivariate irreducibility is trusted from the caller.
    """
    if p.n != gamma.n_vars:
        raise ValueError("prime has wrong number of variables")
    if p.total_degree() < 1:
        raise ValueError("prime must be non-constant")
    if p.n == 1:
        factors = _univariate_factors(p)
        if len(factors) != 1 or factors[0][1] != 1:
            raise ValueError(f"reducible polynomial: {p}")
    for c, q in gamma.log_part:
        if _is_associate(p, q):
            return c
    return CycNum.zero(1)


def residue_divisor(gamma: LogForm) -> ResidueDivisor:
    """The residue divisor of ``gamma``.

    Entries are the (c_i, P_i) pairs of the log part; in one variable the
    point at infinity is appended with the forced coefficient
    -sum c_i deg P_i (omitted when zero), so the degree-weighted sum of a
    univariate divisor is exactly zero.
    """
    entries = list(gamma.log_part)
    if gamma.n_vars == 1:
        inf = CycNum.zero(1)
        for c, p in gamma.log_part:
            inf = inf - c * p.total_degree()
        if not inf.is_zero():
            entries.append((inf, INFINITY))
    return ResidueDivisor(entries=tuple(entries))


def classify_etale_trivial(gamma: LogForm):
    """Classify a rank-one form, returning a :class:`Certificate` or a
    :class:`NotEtaleTrivial` verdict.

    When every residue c_i is rational, l is the least common multiple of
    their denominators and phi = prod P_i^(l c_i), so that
    l*gamma - dlog(phi) = l*d(psi); gamma is etale-trivial iff additionally
    psi is constant.  An irrational residue, or a nonconstant psi (an
    exponential component), yields the negative verdict — the latter with
    the (l, phi) log-part witness attached.
    """
    for c, p in gamma.log_part:
        if not c.is_rational():
            return NotEtaleTrivial("irrational residue", witness=(c, p))
    denominators = [c.as_fraction().denominator for c, _ in gamma.log_part]
    l = lcm(*denominators) if denominators else 1
    num = Poly.constant(1, gamma.n_vars)
    den = Poly.constant(1, gamma.n_vars)
    for c, p in gamma.log_part:
        e = c.as_fraction() * l
        assert e.denominator == 1
        e = int(e)
        if e > 0:
            for _ in range(e):
                num = num * p
        else:
            for _ in range(-e):
                den = den * p
    if not gamma.exact_is_constant():
        return NotEtaleTrivial("exponential component", witness=(l, (num, den)))
    return Certificate(l=l, phi=(num, den))


def iso_class_equal(g1: LogForm, g2: LogForm) -> bool:
    """Whether two forms define the same isomorphism class.

    True iff after matching associate primes every residue difference is a
    rational integer and the difference of the exact parts is constant.
    """
    if g1.n_vars != g2.n_vars:
        raise ValueError("forms must share a variable set")
    used = set()
    for c1, p1 in g1.log_part:
        diff = c1
        for idx, (c2, p2) in enumerate(g2.log_part):
            if idx not in used and _is_associate(p1, p2):
                used.add(idx)
                diff = c1 - c2
                break
        if not (diff.is_rational() and diff.as_fraction().denominator == 1):
            return False
    for idx, (c2, _p2) in enumerate(g2.log_part):
        if idx in used:
            continue
        if not (c2.is_rational() and c2.as_fraction().denominator == 1):
            return False
    n1, d1 = g1.exact_part
    n2, d2 = g2.exact_part
    return _is_constant_ratio(n1 * d2 - n2 * d1, d1 * d2)


def extract_log_part_univariate(num: Poly, den: Poly) -> LogForm:
    """Write A/B dx as a LogForm, for squarefree B and deg A <= deg B.

    For each irreducible factor q of the denominator the candidate residue
    is the residue function r = A * (B')^(-1) mod q; the factor contributes
    c dlog q exactly when r is the constant c.  A nonconstant residue
    function raises :class:`NonConstantResidue` — the form then lies
    outside the rational-log class handled here.  A nonzero constant
    quotient k = A/B - (log pieces) contributes the exact part d(k*x).
    """
    if num.n != 1 or den.n != 1:
        raise ValueError("expected univariate polynomials")
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    x = sympy.Symbol("x1")
    a = poly_to_sympy(num, (x,))
    b = poly_to_sympy(den, (x,))
    bp = sympy.diff(b, x)
    if sympy.degree(sympy.gcd(b, bp), x) > 0:
        raise ValueError("denominator is not squarefree")
    if num.total_degree() > den.total_degree() and not num.is_zero():
        raise ValueError("numerator degree exceeds denominator degree")
    log = []
    for q, _mult in sympy.factor_list(b, x)[1]:
        if sympy.degree(q, x) < 1:
            continue
        inv = sympy.invert(sympy.rem(bp, q, x), q, x)
        r = sympy.rem(sympy.expand(a * inv), q, x)
        if sympy.degree(r, x) > 0:
            raise NonConstantResidue(str(q), str(sympy.nsimplify(r)))
        c = Fraction(sympy.Rational(r))
        if c:
            log.append((c, poly_from_sympy(sympy.monic(sympy.Poly(q, x)).as_expr(),
                                           (x,), 1)))
    if num.total_degree() == den.total_degree() and not num.is_zero():
        k = num.leading()[1] / den.leading()[1]
    else:
        k = CycNum.zero(1)
    check = a - sum(sympy.Rational(c.numerator, c.denominator) *
                    sympy.diff(poly_to_sympy(p, (x,)), x) *
                    sympy.cancel(b / poly_to_sympy(p, (x,)))
                    for c, p in log)
    kq = k.as_fraction()
    check = sympy.expand(check - sympy.Rational(kq.numerator, kq.denominator) * b)
    assert check == 0, "log-part extraction left a nonzero remainder"
    exact = None
    if not k.is_zero():
        exact = (Poly.variable(1, 1).scale(k), Poly.constant(1, 1))
    return LogForm.make(1, log, exact)


# ---------------------------------------------------------------------------
# JSON form files
# ---------------------------------------------------------------------------

def parse_coefficient(text) -> CycNum:
    """Parse a residue coefficient: a rational like ``1/2``, a root of
    unity like ``zeta3``, or a cyclotomic vector like ``[0,1]@3``."""
    if isinstance(text, (int, Fraction)):
        return CycNum.rational(Fraction(text))
    s = str(text).strip()
    if s.startswith("zeta"):
        return CycNum.zeta(int(s[4:]))
    if s.startswith("["):
        return parse_cyc(s)
    return CycNum.rational(Fraction(s))


def _parse_named_poly(text: str, names, n: int) -> Poly:
    syms = sympy.symbols(names)
    if n == 1:
        syms = (syms,) if not isinstance(syms, (list, tuple)) else tuple(syms)
    expr = sympy.parse_expr(str(text).replace("^", "**"),
                            local_dict={nm: s for nm, s in zip(names, syms)})
    return poly_from_sympy(expr, syms, n)


def logform_from_json(data: dict) -> LogForm:
    """Build a LogForm from the JSON file layout

    ``{"vars": ["x","y"], "log": [{"c": "1/2", "p": "x^2 - y"}],
       "exact": "x*y"}``

    The exact part may be a rational expression in the named variables;
    ``^`` is accepted for powers.
    """
    names = list(data["vars"])
    n = len(names)
    log = []
    for row in data.get("log", []):
        log.append((parse_coefficient(row["c"]),
                    _parse_named_poly(row["p"], names, n)))
    exact = None
    if data.get("exact") not in (None, "", "0"):
        syms = sympy.symbols(names)
        if n == 1 and not isinstance(syms, (list, tuple)):
            syms = (syms,)
        expr = sympy.parse_expr(str(data["exact"]).replace("^", "**"),
                                local_dict={nm: s for nm, s in
                                            zip(names, syms)})
        nu, de = sympy.fraction(sympy.together(expr))
        exact = (poly_from_sympy(nu, syms, n), poly_from_sympy(de, syms, n))
    return LogForm.make(n, log, exact)

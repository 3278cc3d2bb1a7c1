"""Exact arithmetic: cyclotomic numbers, polynomials, and the group action.

Cyclotomic numbers are elements of Q(zeta_m), stored densely as coordinate
vectors of length phi(m) over the power basis 1, zeta, ..., zeta^{phi(m)-1}
with Fraction entries; reduction is by the m-th cyclotomic polynomial.
Arithmetic between different conductors embeds both operands into the
compositum Q(zeta_lcm).

Polynomials are finite sums of monomials in x1..xn with CycNum
coefficients, all held at one conductor; the zero polynomial keeps no
terms.  The canonical text form lists terms in decreasing graded
lexicographic order, joined by " + ", each term printed as
``[c0,c1,...]@m * x1^a1 x2^a2 ...`` (exponent 1 bare, exponent 0 omitted,
bare coefficient for the constant term); the form round-trips through
:func:`parse_poly`.

The group G(m, e, n) acts on polynomials by (g.p)(x) = p(g^{-1} x): the
monomial x^a picks up the phase zeta_m^{sum_i a_i w'_i} and its exponents
are relabeled by the permutation part, where (w', p') = g^{-1}.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from math import lcm

import sympy

from .groups import GroupElement, GroupSpec, alpha_data
from .groups import inv as group_inv
from .partitions import check_set_partition

# ---------------------------------------------------------------------------
# cyclotomic polynomial data
# ---------------------------------------------------------------------------

_CYCPOLY_CACHE: dict = {}


def cyclotomic_coeffs(m: int) -> list:
    """Coefficients of the m-th cyclotomic polynomial, ascending degree."""
    if m not in _CYCPOLY_CACHE:
        z = sympy.Symbol("z")
        p = sympy.cyclotomic_poly(m, z)
        coeffs = sympy.Poly(p, z).all_coeffs()[::-1]
        _CYCPOLY_CACHE[m] = [Fraction(int(c)) for c in coeffs]
    return _CYCPOLY_CACHE[m]


def _phi_deg(m: int) -> int:
    return len(cyclotomic_coeffs(m)) - 1


def _shift_reduce(vec, m):
    """Multiply the coordinate vector by zeta once, reducing mod Phi_m."""
    deg = len(vec)
    carry = vec[-1]
    out = [Fraction(0)] + vec[:-1]
    if carry:
        phi = cyclotomic_coeffs(m)
        for i in range(deg):
            if phi[i]:
                out[i] -= carry * phi[i]
    return out


def _reduce_top(prod, m):
    deg = _phi_deg(m)
    top = prod[-1]
    prod = prod[:-1]
    if top:
        phi = cyclotomic_coeffs(m)
        off = len(prod) - deg
        for i in range(deg):
            if phi[i]:
                prod[off + i] -= top * phi[i]
    return prod


_ZETA_CACHE: dict = {}
_INV_CACHE: dict = {}


class CycNum:
    """An element of Q(zeta_m) in the power basis.  Treat as immutable."""
    __slots__ = ("m", "v")

    def __init__(self, m: int, v=None):
        self.m = m
        if v is None:
            v = [Fraction(0)] * _phi_deg(m)
        else:
            v = [Fraction(x) for x in v]
            if len(v) != _phi_deg(m):
                raise ValueError(
                    f"coordinate vector must have length phi({m}) = "
                    f"{_phi_deg(m)}")
        self.v = v

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(m: int) -> "CycNum":
        return CycNum(m)

    @staticmethod
    def rational(q, m: int = 1) -> "CycNum":
        c = CycNum(m)
        c.v[0] = Fraction(q)
        return c

    @staticmethod
    def one(m: int = 1) -> "CycNum":
        return CycNum.rational(1, m)

    @staticmethod
    def zeta(m: int, k: int = 1) -> "CycNum":
        """zeta_m^k."""
        k %= m
        key = (m, k)
        hit = _ZETA_CACHE.get(key)
        if hit is None:
            cur = [Fraction(0)] * _phi_deg(m)
            cur[0] = Fraction(1)
            for _ in range(k):
                cur = _shift_reduce(cur, m)
            hit = CycNum(m, cur)
            _ZETA_CACHE[key] = hit
        return hit

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.v)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.v[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self.v[0]

    # -- conductor handling -------------------------------------------------

    def embed(self, m2: int) -> "CycNum":
        """The same number inside Q(zeta_m2); requires m | m2."""
        if self.m == m2:
            return self
        if m2 % self.m:
            raise ValueError(f"no embedding of Q(zeta_{self.m}) in "
                             f"Q(zeta_{m2})")
        r = m2 // self.m
        out = CycNum.zero(m2)
        for i, a in enumerate(self.v):
            if a:
                out = out + CycNum.zeta(m2, i * r) * a
        return out

    @staticmethod
    def _common(a: "CycNum", b: "CycNum"):
        if a.m == b.m:
            return a, b
        L = lcm(a.m, b.m)
        return a.embed(L), b.embed(L)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "CycNum":
        if isinstance(x, CycNum):
            return x
        if isinstance(x, (int, Fraction)):
            return CycNum.rational(x)
        return NotImplemented

    def __add__(self, o):
        o = CycNum._coerce(o)
        if o is NotImplemented:
            return NotImplemented
        a, b = CycNum._common(self, o)
        return CycNum(a.m, [x + y for x, y in zip(a.v, b.v)])

    __radd__ = __add__

    def __sub__(self, o):
        o = CycNum._coerce(o)
        if o is NotImplemented:
            return NotImplemented
        a, b = CycNum._common(self, o)
        return CycNum(a.m, [x - y for x, y in zip(a.v, b.v)])

    def __rsub__(self, o):
        return (-self).__add__(o)

    def __neg__(self):
        return CycNum(self.m, [-x for x in self.v])

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return CycNum(self.m, [x * o for x in self.v])
        if not isinstance(o, CycNum):
            return NotImplemented
        a, b = CycNum._common(self, o)
        deg = len(a.v)
        prod = [Fraction(0)] * (2 * deg - 1 if deg > 0 else 1)
        for i, x in enumerate(a.v):
            if x:
                for j, y in enumerate(b.v):
                    if y:
                        prod[i + j] += x * y
        while len(prod) > deg:
            prod = _reduce_top(prod, a.m)
        prod += [Fraction(0)] * (deg - len(prod))
        return CycNum(a.m, prod)

    __rmul__ = __mul__

    def inv(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm
        against the cyclotomic polynomial."""
        if self.is_rational():
            if self.v[0] == 0:
                raise ZeroDivisionError("division by zero cyclotomic number")
            out = CycNum.zero(self.m)
            out.v[0] = Fraction(1) / self.v[0]
            return out
        key = (self.m, tuple(self.v))
        hit = _INV_CACHE.get(key)
        if hit is not None:
            return hit
        z = sympy.Symbol("z")
        phi_expr = sum(sympy.Rational(c.numerator, c.denominator) * z ** i
                       for i, c in enumerate(cyclotomic_coeffs(self.m)))
        me_expr = sum(sympy.Rational(c.numerator, c.denominator) * z ** i
                      for i, c in enumerate(self.v))
        s, _t, h = sympy.gcdex(me_expr, phi_expr, z)
        hp = sympy.Poly(h, z)
        if hp.degree() != 0:
            raise ZeroDivisionError("not invertible modulo the cyclotomic "
                                    "polynomial")
        hr = sympy.Rational(hp.all_coeffs()[0])
        hc = Fraction(int(hr.p), int(hr.q))
        sc = sympy.Poly(s, z).all_coeffs()[::-1]
        deg = len(self.v)
        out = [Fraction(0)] * deg
        for i, x in enumerate(sc):
            r = sympy.Rational(x)
            out[i] = Fraction(int(r.p), int(r.q)) / hc
        res = CycNum(self.m, out[:deg])
        _INV_CACHE[key] = res
        return res

    def __truediv__(self, o):
        o = CycNum._coerce(o)
        if o is NotImplemented:
            return NotImplemented
        a, b = CycNum._common(self, o)
        return a * b.inv()

    def __rtruediv__(self, o):
        o = CycNum._coerce(o)
        if o is NotImplemented:
            return NotImplemented
        return o.__truediv__(self)

    def conj(self) -> "CycNum":
        """Complex conjugation zeta -> zeta^{-1}."""
        out = CycNum.zero(self.m)
        for i, a in enumerate(self.v):
            if a:
                out = out + CycNum.zeta(self.m, -i) * a
        return out

    # -- comparison / hashing (structural: conductor matters) ---------------

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.is_rational() and self.v[0] == o
        return (isinstance(o, CycNum) and self.m == o.m and self.v == o.v)

    def __hash__(self):
        return hash((self.m, tuple(self.v)))

    def equals(self, o) -> bool:
        """Equality as complex numbers (conductor-independent)."""
        o = CycNum._coerce(o)
        a, b = CycNum._common(self, o)
        return a.v == b.v

    # -- output -------------------------------------------------------------

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.m)
        return sum(float(a) * z ** i for i, a in enumerate(self.v))

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.v) + "]@" + str(self.m)

    __repr__ = __str__


_CYC_RE = re.compile(r"^\[([^\]]*)\]@(\d+)$")


def parse_cyc(text: str) -> CycNum:
    """Parse the ``[c0,c1,...]@m`` form (or a bare rational, conductor 1)."""
    text = text.strip()
    mo = _CYC_RE.match(text)
    if mo is None:
        return CycNum.rational(Fraction(text))
    body, m = mo.group(1), int(mo.group(2))
    coords = [Fraction(x) for x in body.split(",")] if body else []
    return CycNum(m, coords)


def cyc_arith(a: CycNum, b: CycNum, op: str) -> CycNum:
    """Dispatch arithmetic by name: op in {"add", "sub", "mul", "div"}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def grlex_key(exps: tuple):
    """Sort key realizing graded lexicographic order."""
    return (sum(exps), exps)


class Poly:
    """Polynomial in x1..xn over Q(zeta_m); terms: exponent tuple -> CycNum.

    All coefficients are held at the polynomial's conductor m and zero
    coefficients are dropped.  Treat instances as immutable.
    """
    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int = 1, terms: dict | None = None):
        self.n = n
        self.m = m
        clean = {}
        if terms:
            for k, c in terms.items():
                k = tuple(int(x) for x in k)
                if len(k) != n or any(x < 0 for x in k):
                    raise ValueError(f"bad exponent tuple {k} for n={n}")
                if not isinstance(c, CycNum):
                    c = CycNum.rational(c)
                c = c.embed(m) if m % c.m == 0 else c
                if c.m != m:
                    raise ValueError("coefficient conductor does not divide "
                                     "the polynomial conductor")
                if not c.is_zero():
                    clean[k] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(n: int, m: int = 1) -> "Poly":
        return Poly(n, m)

    @staticmethod
    def constant(c, n: int, m: int | None = None) -> "Poly":
        c = c if isinstance(c, CycNum) else CycNum.rational(c)
        m = c.m if m is None else m
        return Poly(n, m, {(0,) * n: c})

    @staticmethod
    def variable(i: int, n: int, m: int = 1) -> "Poly":
        """The variable x_i (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        exp = tuple(1 if j == i - 1 else 0 for j in range(n))
        return Poly(n, m, {exp: CycNum.one(m)})

    @staticmethod
    def monomial(exps, c=1, m: int | None = None) -> "Poly":
        c = c if isinstance(c, CycNum) else CycNum.rational(c)
        m = c.m if m is None else m
        exps = tuple(int(x) for x in exps)
        return Poly(len(exps), m, {exps: c})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list:
        """Terms in decreasing graded-lex order (leading term first)."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]),
                      reverse=True)

    def leading(self):
        """(exponent tuple, coefficient) of the graded-lex leading term."""
        if not self.terms:
            return None
        k = max(self.terms, key=grlex_key)
        return k, self.terms[k]

    def total_degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def embed(self, m2: int) -> "Poly":
        if m2 == self.m:
            return self
        return Poly(self.n, m2, {k: c.embed(m2) for k, c in
                                 self.terms.items()})

    # -- arithmetic ---------------------------------------------------------

    def _common(self, o: "Poly"):
        if self.n != o.n:
            raise ValueError("polynomials in different variable counts")
        L = lcm(self.m, o.m)
        return self.embed(L), o.embed(L)

    def __add__(self, o: "Poly") -> "Poly":
        a, b = self._common(o)
        out = dict(a.terms)
        for k, c in b.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return Poly(a.n, a.m, out)

    def __sub__(self, o: "Poly") -> "Poly":
        return self + (-o)

    def __neg__(self) -> "Poly":
        return Poly(self.n, self.m, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "Poly":
        c = c if isinstance(c, CycNum) else CycNum.rational(c)
        if c.is_zero():
            return Poly.zero(self.n, lcm(self.m, c.m))
        L = lcm(self.m, c.m)
        ce = c.embed(L)
        return Poly(self.n, L, {k: ce * v.embed(L)
                                for k, v in self.terms.items()})

    def __mul__(self, o: "Poly") -> "Poly":
        a, b = self._common(o)
        out: dict = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                c = c1 * c2
                s = out.get(k)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return Poly(a.n, a.m, out)

    def __eq__(self, o):
        return (isinstance(o, Poly) and self.n == o.n and self.m == o.m
                and self.terms == o.terms)

    def __hash__(self):
        return hash((self.n, self.m,
                     frozenset((k, hash(c)) for k, c in self.terms.items())))

    def equals(self, o: "Poly") -> bool:
        """Equality as polynomial functions (conductor-independent)."""
        a, b = self._common(o)
        return a.terms == b.terms

    # -- evaluation & output -------------------------------------------------

    def eval_complex(self, point) -> complex:
        """Evaluate at a tuple of n complex numbers."""
        point = list(point)
        if len(point) != self.n:
            raise ValueError("point has wrong length")
        total = 0j
        for k, c in self.terms.items():
            t = c.to_complex()
            for x, a in zip(point, k):
                if a:
                    t *= x ** a
            total += t
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            mono = " ".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}"
                for i, a in enumerate(k) if a)
            parts.append(f"{c} * {mono}" if mono else str(c))
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.n}, {self.m}, {self})"


_MONO_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_poly(text: str, n: int | None = None) -> Poly:
    """Parse the canonical text form; ``n`` may extend the variable count
    beyond the largest index that occurs."""
    text = text.strip()
    raw_terms = []
    max_var = 0
    if text != "0":
        for part in text.split(" + "):
            part = part.strip()
            if " * " in part:
                coef_s, mono_s = part.split(" * ", 1)
                coef = parse_cyc(coef_s)
            elif part.startswith("[") or _MONO_RE.match(part) is None:
                coef, mono_s = parse_cyc(part), ""
            else:
                coef, mono_s = CycNum.one(1), part
            exps = {}
            for tok in mono_s.split():
                mo = _MONO_RE.match(tok)
                if mo is None:
                    raise ValueError(f"bad monomial token {tok!r}")
                i = int(mo.group(1))
                a = int(mo.group(2)) if mo.group(2) else 1
                exps[i] = exps.get(i, 0) + a
                max_var = max(max_var, i)
            raw_terms.append((exps, coef))
    if n is None:
        n = max_var
    elif n < max_var:
        raise ValueError(f"n={n} too small for variable x{max_var}")
    L = 1
    for _, c in raw_terms:
        L = lcm(L, c.m)
    out = Poly.zero(n, L)
    for exps, coef in raw_terms:
        k = tuple(exps.get(i + 1, 0) for i in range(n))
        out = out + Poly(n, L, {k: coef.embed(L)})
    return out


# ---------------------------------------------------------------------------
# the group action
# ---------------------------------------------------------------------------

def act(g: GroupElement, p: Poly) -> Poly:
    """(g.p)(x) = p(g^{-1} x).  With (w', _) = g^{-1} the monomial x^a
    gains the phase zeta_m^{sum_i a_i w'_i} and the exponent at position i
    moves to position g.p(i).  The result's conductor is
    lcm(p.m, group conductor)."""
    spec = g.spec
    if spec.n != p.n:
        raise ValueError("group degree differs from variable count")
    wi = group_inv(g).w
    pg = g.p
    m = spec.m
    L = lcm(p.m, m)
    r = L // m
    out: dict = {}
    for kexp, coef in p.terms.items():
        phase = 0
        e = [0] * p.n
        for i, a in enumerate(kexp):
            if a:
                phase += wi[i] * a
                e[pg[i] - 1] = a
        c = coef.embed(L)
        if phase % m:
            c = c * CycNum.zeta(L, r * phase)
        k = tuple(e)
        s = out.get(k)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return Poly(p.n, L, out)


# ---------------------------------------------------------------------------
# named polynomial families
# ---------------------------------------------------------------------------

def vandermonde(S, n: int | None = None, power: int = 1) -> Poly:
    """prod_{i < j} (x_{s_i}^power - x_{s_j}^power) over S sorted
    increasingly; the empty and singleton products are 1."""
    S = sorted(set(int(x) for x in S))
    if S and S[0] < 1:
        raise ValueError("variable indices must be >= 1")
    if n is None:
        n = S[-1] if S else 0
    elif S and n < S[-1]:
        raise ValueError(f"n={n} too small for index {S[-1]}")
    out = Poly.constant(1, n)
    for a in range(len(S)):
        for b in range(a + 1, len(S)):
            ea = tuple(power if j == S[a] - 1 else 0 for j in range(n))
            eb = tuple(power if j == S[b] - 1 else 0 for j in range(n))
            out = out * Poly(n, 1, {ea: CycNum.one(1),
                                    eb: CycNum.rational(-1)})
    return out


def specht(Q, n: int | None = None) -> Poly:
    """The Specht polynomial of the set partition Q: the product of the
    Vandermonde factors of its blocks.  Spans (under the symmetric group)
    the irreducible representation whose shape is the conjugate of the
    block-size partition of Q."""
    Q = check_set_partition(Q)
    total = sum(len(b) for b in Q)
    if n is None:
        n = total
    out = Poly.constant(1, n)
    for block in Q:
        out = out * vandermonde(block, n)
    return out


def specht_power(Q, power: int, n: int | None = None) -> Poly:
    """Specht polynomial in the powered variables x_i^power."""
    Q = check_set_partition(Q)
    total = sum(len(b) for b in Q)
    if n is None:
        n = total
    if power < 1:
        raise ValueError("power must be >= 1")
    out = Poly.constant(1, n)
    for block in Q:
        out = out * vandermonde(block, n, power=power)
    return out


def delta_n(n: int) -> Poly:
    """(n-1) x_n - sum_{i<n} x_i, for n >= 2: spans the standard
    representation summand of the defining permutation action."""
    if n < 2:
        raise ValueError("delta_n requires n >= 2")
    terms = {tuple(1 if j == i else 0 for j in range(n)):
             CycNum.rational(-1) for i in range(n - 1)}
    terms[tuple(0 if j < n - 1 else 1 for j in range(n))] = \
        CycNum.rational(n - 1)
    return Poly(n, 1, terms)


def x_alpha(spec: GroupSpec, alpha) -> Poly:
    """The monomial x^alpha at the group's conductor."""
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != spec.n or any(a < 0 for a in alpha):
        raise ValueError("alpha must be a nonnegative vector of length n")
    return Poly(spec.n, spec.m, {alpha: CycNum.one(spec.m)})


def f_alpha(spec: GroupSpec, alpha, i: int) -> Poly:
    """The discrete-Fourier combination of the shift orbit of x^alpha:

        f_{alpha,i} = sum_{k=0}^{o-1} zeta_o^{-ik} (t_alpha^k . x^alpha)

    where o is the orbit size of alpha under the diagonal shift
    alpha -> alpha + b*d*(1,..,1) and t_alpha the order-preserving shift
    permutation.  It is an eigenvector of t_alpha with eigenvalue
    zeta_o^i, and for o = 1 degenerates to x^alpha itself.  The result's
    conductor is lcm(m, o).
    """
    data = alpha_data(spec, alpha)
    o = data.o
    if not 0 <= i < o:
        raise ValueError(f"index i={i} out of range 0..{o - 1}")
    L = lcm(spec.m, o)
    out = Poly.zero(spec.n, L)
    cur = x_alpha(spec, alpha).embed(L)
    for k in range(o):
        out = out + cur.scale(CycNum.zeta(L, (-i * k * (L // o)) % L))
        if k + 1 < o:
            cur = act(data.t, cur)
    return out

"""Dense univariate polynomials over the rationals, plus the quadratic
extension ring used by the Pell machinery.

Coefficients are stored ascending in a tuple; each entry is an int or a
Fraction (Fractions with denominator 1 are normalized to int).  The zero
polynomial has empty coefficients and degree None.
"""

import re
from fractions import Fraction
from math import gcd, isqrt


def _norm_coeff(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    return _norm_coeff(Fraction(c))


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Poly):
            self.coeffs = coeffs.coeffs
            return
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def const(c):
        return Poly([c])

    @staticmethod
    def monomial(k, c=1):
        return Poly([0] * k + [c])

    @staticmethod
    def coerce(x):
        return x if isinstance(x, Poly) else Poly.const(x)

    # -- basic structure ------------------------------------------------------

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def constant(self):
        return self.coeffs[0] if self.coeffs else 0

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __hash__(self):
        return hash(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = Poly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) + (-self)

    def __mul__(self, other):
        other = Poly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = Poly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = []
        rem = list(self.coeffs)
        d = other.degree
        lc = Fraction(other.lead())
        while len(rem) - 1 >= d and rem:
            c = Fraction(rem[-1]) / lc
            k = len(rem) - 1 - d
            q.append((k, c))
            for i, oc in enumerate(other.coeffs):
                rem[k + i] -= c * oc
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        qc = [0] * (q[0][0] + 1 if q else 0)
        for k, c in q:
            qc[k] = c
        return Poly(qc), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, Poly.coerce(other))
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other):
        if self.is_zero():
            return Poly.coerce(other).is_zero()
        return (Poly.coerce(other) % self).is_zero()

    # -- calculus & evaluation ------------------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose(self, other):
        other = Poly.coerce(other)
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def shift(self, k):
        """Multiply by T^k."""
        if self.is_zero():
            return self
        return Poly((0,) * k + self.coeffs)

    def truncate(self, k):
        """Reduce mod T^k."""
        return Poly(self.coeffs[:k])

    def primitive_part(self):
        """Integer-coefficient associate with content 1 and positive lead."""
        if self.is_zero():
            return self
        den = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        if ints[-1] < 0:
            g = -g
        return Poly([c // g for c in ints])

    def monic(self):
        if self.is_zero():
            return self
        lc = Fraction(self.lead())
        return Poly([Fraction(c) / lc for c in self.coeffs])

    # -- text form ------------------------------------------------------------

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


ZERO = Poly()
ONE = Poly([1])
T = Poly([0, 1])


def format_poly(p, var="T"):
    """Canonical ascending text form, e.g. ``-1 + 2*T^2``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if i == 0:
            term = str(c)
        else:
            v = var if i == 1 else f"{var}^{i}"
            if c == 1:
                term = v
            elif c == -1:
                term = f"-{v}"
            else:
                term = f"{c}*{v}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


_TERM_RE = re.compile(
    r"^\s*(?P<coef>[+-]?\s*\d+(?:/\d+)?)?\s*"
    r"(?:(?(coef)\*\s*)?(?P<var>[A-Za-z]\w*)(?:\^(?P<exp>\d+))?)?\s*$"
)


def parse_poly(text, var="T"):
    """Inverse of :func:`format_poly`; accepts any +/- separated terms."""
    text = text.strip()
    if text in ("0", ""):
        return Poly()
    # split into sign-carrying terms ('-' never occurs inside a term)
    terms = []
    for chunk in text.replace("-", "+-").split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk.startswith("-"):
            terms.append((-1, chunk[1:].strip()))
        else:
            terms.append((1, chunk))
    coeffs = {}
    for sign, term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse term {term!r}")
        if m.group("var") is not None and m.group("var") != var:
            raise ValueError(f"unexpected variable {m.group('var')!r}")
        c = Fraction(m.group("coef").replace(" ", "")) if m.group("coef") else Fraction(1)
        k = 0
        if m.group("var") is not None:
            k = int(m.group("exp")) if m.group("exp") else 1
        coeffs[k] = coeffs.get(k, 0) + sign * c
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return Poly(out)


# -- gcd, resultants, real-root machinery -------------------------------------


def poly_gcd(a, b):
    """Monic gcd over Q."""
    a, b = Poly.coerce(a), Poly.coerce(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def resultant(a, b):
    """Res(a, b) over Q via the Euclidean recursion."""
    a, b = Poly.coerce(a), Poly.coerce(b)
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    res = Fraction(1)
    while True:
        if b.degree == 0:
            return _norm_coeff(res * Fraction(b.lead()) ** a.degree)
        r = a % b
        if r.is_zero():
            return 0 if a.degree > 0 else _norm_coeff(res)
        res *= (
            Fraction(-1) ** (a.degree * b.degree)
            * Fraction(b.lead()) ** (a.degree - r.degree)
        )
        a, b = b, r


def poly_mod_p(a, p):
    """Coefficient list of a mod p, ascending, trimmed.  Requires p-integral coefficients."""
    out = []
    for c in Poly.coerce(a).coeffs:
        c = Fraction(c)
        if c.denominator % p == 0:
            raise ValueError(f"coefficient {c} not p-integral at {p}")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    while out and out[-1] == 0:
        out.pop()
    return out


def resultant_mod_p(a, b, p):
    """Res(a mod p, b mod p) in F_p; degrees must not drop mod p."""
    fa, fb = poly_mod_p(a, p), poly_mod_p(b, p)
    if len(fa) - 1 != a.degree or len(fb) - 1 != b.degree:
        raise ValueError("leading coefficient vanishes mod p")
    res = 1
    while True:
        if not fb:
            return 0
        if len(fb) == 1:
            return res * pow(fb[0], len(fa) - 1, p) % p
        # fa mod fb over F_p
        r = list(fa)
        inv = pow(fb[-1], -1, p)
        while len(r) >= len(fb) and r:
            c = r[-1] * inv % p
            k = len(r) - len(fb)
            for i, oc in enumerate(fb):
                r[k + i] = (r[k + i] - c * oc) % p
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        if not r:
            return 0 if len(fa) > 1 else res % p
        res = (
            res
            * pow(-1, (len(fa) - 1) * (len(fb) - 1), p)
            * pow(fb[-1], len(fa) - len(r), p)
        ) % p
        fa, fb = fb, r


def _sign_changes(vals):
    signs = [v for v in vals if v != 0]
    return sum(
        1 for s, t in zip(signs, signs[1:]) if (s > 0) != (t > 0)
    )


def sturm_chain(p):
    p = Poly.coerce(p)
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree is not None and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def cauchy_bound(p):
    """All real roots of p lie in (-B, B) for this B."""
    p = Poly.coerce(p)
    if p.is_zero() or p.degree == 0:
        return Fraction(1)
    lc = Fraction(p.lead())
    return 1 + max(abs(Fraction(c) / lc) for c in p.coeffs[:-1])


def sturm_count(p, lo, hi):
    """Number of distinct real roots of p in (lo, hi]."""
    p = Poly.coerce(p)
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    chain = sturm_chain(p)
    return _sign_changes([q(lo) for q in chain]) - _sign_changes(
        [q(hi) for q in chain]
    )


def real_root_count(p):
    """Number of distinct real roots of p (0 for nonzero constants)."""
    p = Poly.coerce(p)
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if p.degree == 0:
        return 0
    b = cauchy_bound(p)
    return sturm_count(p, -b, b)


def squarefree_decomposition(p):
    """Yun's algorithm: list of (factor, multiplicity), factors monic."""
    p = Poly.coerce(p)
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return []
    p = p.monic()
    g = poly_gcd(p, p.derivative())
    out = []
    if g.degree == 0:
        return [(p, 1)]
    w = p.exact_div(g)
    y = p.derivative().exact_div(g)
    i = 1
    while not w.is_constant():
        z = y - w.derivative()
        f = poly_gcd(w, z)
        if not f.is_constant():
            out.append((f, i))
        w = w.exact_div(f)
        y = z.exact_div(f)
        i += 1
    return out


# -- small-degree rational factorization --------------------------------------


def _divisors(n):
    n = abs(n)
    out = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
    return sorted(out)


def rational_roots(p):
    """All rational roots of p, each listed once, sorted."""
    p = Poly.coerce(p).primitive_part()
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots = set()
    k = 0
    while p[k] == 0:
        roots.add(Fraction(0))
        k += 1
    if k:
        p = Poly(p.coeffs[k:])
    if p.degree == 0:
        return sorted(roots)
    a0, an = p.constant(), p.lead()
    for q in _divisors(an):
        for r in _divisors(a0):
            for cand in (Fraction(r, q), Fraction(-r, q)):
                if p(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def factor_small(p):
    """Factor p over Q into irreducibles; degree at most 4.

    Returns (unit, [(monic_factor, multiplicity), ...]) sorted by degree then
    coefficients.
    """
    p = Poly.coerce(p)
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree > 4:
        raise ValueError("factor_small is limited to degree <= 4")
    unit = Fraction(p.lead())
    rem = p.monic()
    factors = {}

    def record(f):
        factors[f] = factors.get(f, 0) + 1

    for r in rational_roots(rem):
        lin = Poly([-r, 1])
        while lin.divides(rem):
            record(lin)
            rem = rem.exact_div(lin)
    # rem now has no rational roots; split off irreducible quadratics
    while rem.degree is not None and rem.degree >= 2:
        if rem.degree in (2, 3):
            # no rational root => irreducible (deg 3) or irreducible quadratic
            record(rem)
            rem = ONE
            break
        found = False
        # degree 4, no rational roots: search for a monic quadratic factor
        # x^2 + b*x + c via resultant of coefficient constraints; direct scan
        # over candidate c | constant term is enough at this degree.
        a3, a2, a1, a0 = (Fraction(rem[3]), Fraction(rem[2]),
                         Fraction(rem[1]), Fraction(rem[0]))
        pp = rem.primitive_part()
        lead2 = pp.lead()
        const2 = pp.constant()
        # no rational roots => constant term nonzero
        cands = set()
        for qn in _divisors(const2):
            for qd in _divisors(lead2):
                cands.add(Fraction(qn, qd))
                cands.add(Fraction(-qn, qd))
        for c in sorted(cands):
            if c == 0:
                continue
            # b satisfies: from x^4+a3x^3+a2x^2+a1x+a0 = (x^2+bx+c)(x^2+dx+e)
            # with e = a0/c, d = a3 - b, and matching x^1: a1 = b*e + c*d
            e = a0 / c
            # a1 = b*e + c*(a3-b) => b*(e-c) = a1 - c*a3
            if e == c:
                if a1 != c * a3:
                    continue
                # b free along this line; pin with the x^2 match:
                # a2 = e + c + b*d = e + c + b*(a3-b)
                # b^2 - a3*b + (a2 - e - c) = 0
                disc = a3 * a3 - 4 * (a2 - e - c)
                rt = _fraction_sqrt(disc)
                if rt is None:
                    continue
                bs = [(a3 + rt) / 2, (a3 - rt) / 2]
            else:
                b = (a1 - c * a3) / (e - c)
                if a2 != e + c + b * (a3 - b):
                    continue
                bs = [b]
            for b in bs:
                quad = Poly([c, b, 1])
                if quad.divides(rem):
                    record(quad)
                    rem = rem.exact_div(quad)
                    found = True
                    break
            if found:
                break
        if not found:
            record(rem)
            rem = ONE
            break
    if rem.degree is not None and rem.degree >= 1:
        record(rem)
    out = sorted(
        factors.items(), key=lambda kv: (kv[0].degree, kv[0].coeffs)
    )
    check = Poly([unit])
    for f, m in out:
        check = check * f**m
    assert check == p
    return _norm_coeff(unit), out


def _fraction_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


# -- quadratic extension R[T][sqrt(D)] ----------------------------------------


class QuadExt:
    """Element u + w*sqrt(D) with u, w in Q[T] and D a fixed polynomial."""

    __slots__ = ("u", "w", "D")

    def __init__(self, u, w, D):
        self.u = Poly.coerce(u)
        self.w = Poly.coerce(w)
        self.D = Poly.coerce(D)

    def _check(self, other):
        if self.D != other.D:
            raise ValueError("mixed quadratic extensions")

    def __eq__(self, other):
        if not isinstance(other, QuadExt):
            return NotImplemented
        return (self.u, self.w, self.D) == (other.u, other.w, other.D)

    def __hash__(self):
        return hash((self.u.coeffs, self.w.coeffs, self.D.coeffs))

    def __repr__(self):
        return f"QuadExt({self.u}, {self.w}; D={self.D})"

    def conj(self):
        return QuadExt(self.u, -self.w, self.D)

    def norm(self):
        return self.u * self.u - self.D * self.w * self.w

    def __add__(self, other):
        if isinstance(other, QuadExt):
            self._check(other)
            return QuadExt(self.u + other.u, self.w + other.w, self.D)
        return QuadExt(self.u + other, self.w, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.u, -self.w, self.D)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadExt) else QuadExt(-Poly.coerce(other), 0, self.D))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuadExt):
            self._check(other)
            return QuadExt(
                self.u * other.u + self.D * self.w * other.w,
                self.u * other.w + self.w * other.u,
                self.D,
            )
        return QuadExt(self.u * other, self.w * other, self.D)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            nm = self.norm()
            if nm != ONE and nm != 1:
                raise ValueError("negative power needs norm 1")
            return self.conj() ** (-n)
        result = QuadExt(1, 0, self.D)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divides(self, other):
        """Whether self | other in Q[T][sqrt(D)] (exact component division)."""
        self._check(other)
        nm = self.norm()
        if nm.is_zero():
            return other.u.is_zero() and other.w.is_zero()
        prod = other * self.conj()
        return nm.divides(prod.u) and nm.divides(prod.w)

    def exact_div(self, other):
        """self / other, assuming divisibility."""
        self._check(other)
        nm = other.norm()
        prod = self * other.conj()
        return QuadExt(prod.u.exact_div(nm), prod.w.exact_div(nm), self.D)


# -- rational functions -------------------------------------------------------


class RationalFunction:
    """Quotient num/den of polynomials, normalized monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num, den = Poly.coerce(num), Poly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if not g.is_constant():
            num, den = num.exact_div(g), den.exact_div(g)
        lc = Fraction(den.lead())
        self.num = num * (1 / lc)
        self.den = den * (1 / lc)

    def __eq__(self, other):
        other = self._coerce(other)
        return (self.num, self.den) == (other.num, other.den)

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    @staticmethod
    def _coerce(x):
        if isinstance(x, RationalFunction):
            return x
        return RationalFunction(Poly.coerce(x))

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def is_polynomial(self):
        return self.den == ONE

    def as_polynomial(self):
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __repr__(self):
        if self.is_polynomial():
            return f"RationalFunction({self.num})"
        return f"RationalFunction(({self.num}) / ({self.den}))"

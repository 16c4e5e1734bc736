"""Exact integer and rational arithmetic helpers.

Valuations, CRT, Hensel lifting of roots of unity, four-square
decompositions, and the two localization facts used by the witness systems
(the 1/b closure of a local ring and the p*x - 1 non-vanishing gate).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class _Infinity:
    """Order of 0 at any prime.  Compares above every integer."""

    def __repr__(self):
        return "INF"

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INF = _Infinity()

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid for all n < 2**64."""
    if n >= 1 << 64:
        raise ValueError("primality test restricted to 64-bit inputs")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_prime(p):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def ord_int(n, p):
    """Exponent of p in n; INF for n = 0.  Assumes p already validated."""
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ord_p(x, p):
    """Order of a rational x at the prime p; INF for x = 0."""
    _require_prime(p)
    x = Fraction(x)
    if x == 0:
        return INF
    return ord_int(x.numerator, p) - ord_int(x.denominator, p)


from functools import lru_cache


def factorize(n):
    """Prime factorization as an ordered dict {p: e}; n >= 1."""
    return dict(_factorize_cached(n))


@lru_cache(maxsize=1 << 16)
def _factorize_cached(n):
    if n < 1:
        raise ValueError("n must be >= 1")
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    q = 5
    while q * q <= n:
        for p in (q, q + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        q += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return tuple(out.items())


def moebius(n):
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n):
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def radical(n):
    out = 1
    for p in factorize(n):
        out *= p
    return out


def xgcd(a, b):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def crt(residues, moduli):
    """Unique c in [0, prod(moduli)) with c = residues[i] mod moduli[i]."""
    if len(residues) != len(moduli):
        raise ValueError("residue and modulus lists differ in length")
    if not moduli:
        raise ValueError("empty modulus list")
    for m in moduli:
        if m < 2:
            raise ValueError(f"modulus {m} < 2")
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            if gcd(moduli[i], moduli[j]) != 1:
                raise ValueError(
                    f"moduli not coprime: ({moduli[i]}, {moduli[j]})"
                )
    c, m = residues[0] % moduli[0], moduli[0]
    for r, n in zip(residues[1:], moduli[1:]):
        g, u, _ = xgcd(m, n)
        assert g == 1
        c = (c + (r - c) * u % n * m) % (m * n)
        m *= n
    return c


def primitive_root(p):
    """Smallest primitive root modulo the prime p."""
    _require_prime(p)
    if p == 2:
        return 1
    fac = []
    q, n = 2, p - 1
    while q * q <= n:
        if n % q == 0:
            fac.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        fac.append(n)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise AssertionError("no primitive root found")


def _hensel_lift_unity(x0, m, p, k):
    # Newton-lift a root of X^m - 1 from mod p to mod p^k; m is a unit mod p.
    q = p
    x = x0 % p
    while q < p**k:
        q = min(q * q, p**k)
        fx = (pow(x, m, q) - 1) % q
        dfx = m * pow(x, m - 1, q) % q
        x = (x - fx * pow(dfx, -1, q)) % q
    return x


def hensel_root_of_unity(m, p, k):
    """Smallest c in [0, p^k) of exact multiplicative order m mod p^k.

    Requires m | (p - 1); c is the Hensel lift of a primitive m-th root of
    unity from the residue field.
    """
    _require_prime(p)
    if m < 1 or (p - 1) % m != 0:
        raise ValueError(f"{m} does not divide {p} - 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    if m == 1:
        return 1
    g = primitive_root(p)
    base = pow(g, (p - 1) // m, p)
    candidates = [
        _hensel_lift_unity(pow(base, j, p), m, p, k)
        for j in range(1, m)
        if gcd(j, m) == 1
    ]
    return min(candidates)


def four_squares(n):
    """x1^2 + x2^2 + x3^2 + x4^2 = n with x1 >= x2 >= x3 >= x4 >= 0."""
    from diobench.kernels import four_squares_raw

    if n < 0:
        raise ValueError("n must be non-negative")
    sol = four_squares_raw(n)
    assert sum(x * x for x in sol) == n
    return sol


@dataclass(frozen=True)
class RingDescriptor:
    """Base ring of the polynomial ring: Q itself or Z localized at primes."""

    mode: str  # "full" | "localized"
    primes: tuple = ()
    var: str = "t"

    def __post_init__(self):
        if self.mode not in ("full", "localized"):
            raise ValueError(f"unknown ring mode {self.mode!r}")
        if self.mode == "localized":
            if not self.primes:
                raise ValueError("localized ring needs at least one prime")
            if len(set(self.primes)) != len(self.primes):
                raise ValueError("localized primes must be distinct")
            for p in self.primes:
                _require_prime(p)
        elif self.primes:
            raise ValueError("full-rationals ring takes no primes")

    def contains(self, q):
        q = Fraction(q)
        return all(ord_int(q.denominator, p) == 0 for p in self.primes)

    def is_unit(self, q):
        q = Fraction(q)
        if q == 0:
            return False
        return self.contains(q) and all(
            ord_int(q.numerator, p) == 0 for p in self.primes
        )


FULL_RATIONALS = RingDescriptor("full")


def localized_at(*primes, var="t"):
    return RingDescriptor("localized", tuple(primes), var)


def local_inverse_closure(q, ring):
    """Given a/b in lowest terms inside the ring, return (1/b, (x1, x2)).

    x1, x2 are Bezout coefficients with a*x1 + b*x2 = 1; x1 is the least
    non-negative inverse of a modulo b.
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    if not ring.contains(q):
        raise ValueError(f"{q} is not in the ring {ring}")
    a, b = q.numerator, q.denominator
    if b == 1:
        return Fraction(1), (0, 1)
    x1 = pow(a, -1, b) % b
    x2 = (1 - a * x1) // b
    assert a * x1 + b * x2 == 1
    return Fraction(1, b), (x1, x2)


def nonzero_gate(x, p, ring=None):
    """p*x - 1 for x in a ring where p is not invertible; never zero."""
    _require_prime(p)
    if ring is None:
        ring = localized_at(p)
    if p not in ring.primes:
        raise ValueError(f"{p} is invertible in {ring}; gate has no force")
    from diobench.polynomial import Poly

    if isinstance(x, Poly):
        for c in x.coeffs:
            if not ring.contains(c):
                raise ValueError(f"{x} is not in the ring {ring}")
        result = x * p - 1
        assert not result.is_zero()
        return result
    x = Fraction(x)
    if not ring.contains(x):
        raise ValueError(f"{x} is not in the ring {ring}")
    result = p * x - 1
    assert result != 0
    return result if result.denominator > 1 else result.numerator

"""Polynomial Pell solutions (f_n, g_n) over Q[T] and the epsilon-power
identities built on them.

With D = s^2 - 1 and eps = s - sqrt(D), the pair is defined by
f_n - sqrt(D) g_n = eps^n.  All solutions of f^2 - D g^2 = 1 are +-(f_n, g_n)
with n ranging over the integers (negative n via conjugation).
"""

from dataclasses import dataclass

from diobench.polynomial import ONE, Poly, QuadExt, ZERO


def discriminant(s):
    s = Poly.coerce(s)
    return s * s - 1


def epsilon(s):
    """eps = s - sqrt(s^2 - 1) as a QuadExt element (norm 1)."""
    s = Poly.coerce(s)
    return QuadExt(s, Poly([-1]), discriminant(s))


@dataclass(frozen=True)
class PellPair:
    n: int
    f: Poly
    g: Poly
    s: Poly

    def verify(self):
        return self.f * self.f - discriminant(self.s) * self.g * self.g == ONE

    def as_quad(self):
        """f_n - sqrt(D) g_n as a QuadExt element."""
        return QuadExt(self.f, -self.g, discriminant(self.s))


def pell_pair(s, n):
    """The unique (f_n, g_n) with f_n - sqrt(s^2-1) g_n = eps^n."""
    s = Poly.coerce(s)
    if s.is_constant():
        raise ValueError("parameter s must be nonconstant")
    z = epsilon(s) ** n
    pair = PellPair(n, z.u, -z.w, s)
    assert pair.verify()
    return pair


def check_degree_law(s, n):
    """deg f_n = n*deg s and deg g_n = (n-1)*deg s, for n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    s = Poly.coerce(s)
    pair = pell_pair(s, n)
    d = s.degree
    ok_f = pair.f.degree == n * d
    # g_1 = 1 has degree 0 = (1-1)*d
    gdeg = pair.g.degree if pair.g.degree is not None else 0
    ok_g = gdeg == (n - 1) * d
    return {
        "n": n,
        "s": str(s),
        "deg_f": pair.f.degree,
        "deg_g": gdeg,
        "pass": ok_f and ok_g,
    }


def check_divisibility_law(ell, n, s):
    """ell | n  <=>  g_ell | g_n, confirmed by exact division."""
    if ell < 1 or n < 1:
        raise ValueError("indices must be >= 1")
    s = Poly.coerce(s)
    g_ell = pell_pair(s, ell).g
    g_n = pell_pair(s, n).g
    index_div = n % ell == 0
    poly_div = g_ell.divides(g_n)
    return {
        "ell": ell,
        "n": n,
        "s": str(s),
        "index_divides": index_div,
        "poly_divides": poly_div,
        "pass": index_div == poly_div,
    }


def recognize_solution(f, g, s):
    """Given a Pell solution (f, g), return (n, sign) with (f,g) = sign*(f_n, g_n).

    Negative n covers the conjugate branch (g_{-n} = -g_n, f_{-n} = f_n).
    """
    f, g, s = Poly.coerce(f), Poly.coerce(g), Poly.coerce(s)
    if s.is_constant():
        raise ValueError("parameter s must be nonconstant")
    if f * f - discriminant(s) * g * g != ONE:
        raise ValueError("not a Pell solution")
    if f.degree is None:
        raise ValueError("not a Pell solution")  # f = 0 impossible anyway
    if f.degree % s.degree != 0:
        raise ValueError("degree not a multiple of deg s")
    n = f.degree // s.degree
    for sign in (1, -1):
        for idx in (n, -n):
            pair = pell_pair(s, idx)
            if pair.f == sign * f and pair.g == sign * g:
                return idx, sign
    raise ValueError("Pell solution not recognized")  # unreachable by Lemma


def w_n(n, s=Poly([0, 1])):
    """g_n extended to negative indices by w_{-n} = -w_n."""
    s = Poly.coerce(s)
    if n >= 0:
        return pell_pair(s, n).g if n > 0 else ZERO
    return -pell_pair(s, -n).g


def wn_congruence(n, s=Poly([0, 1])):
    """w_n == n mod (s - 1): the difference vanishes at s = 1."""
    s = Poly.coerce(s)
    diff = w_n(n, s) - n
    ok = (s - 1).divides(diff) if not diff.is_zero() else True
    return {"n": n, "s": str(s), "pass": ok}


def eps_quotient(n, s=Poly([0, 1])):
    """q_n = (eps^n - 1)/(eps - 1) together with the q_n == n (mod eps-1) check.

    Returns (q_n, report).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    s = Poly.coerce(s)
    eps = epsilon(s)
    one = QuadExt(1, 0, eps.D)
    num = eps**n - one
    den = eps - one
    if n == 0:
        q = QuadExt(0, 0, eps.D)
    else:
        # geometric sum 1 + eps + ... + eps^(n-1); exact, avoids division
        q = QuadExt(0, 0, eps.D)
        acc = one
        for _ in range(n):
            q = q + acc
            acc = acc * eps
    assert den * q == num
    diff = q - QuadExt(n, 0, eps.D)
    ok = den.divides(diff)
    return q, {"n": n, "s": str(s), "pass": ok}

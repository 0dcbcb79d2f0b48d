"""Univariate factorization over F_p and its finite extensions.

Polynomials are little-endian coefficient lists over a pluggable
coefficient field: plain F_p integers here, triangular-tower residues in
decompose.py. The pipeline is squarefree decomposition (with p-th-root
descent when the derivative vanishes), distinct-degree splitting, then
Cantor-Zassenhaus equal-degree splitting with a fixed-seed generator so
results are reproducible.
"""

from __future__ import annotations

import random

from .errors import RingMismatchError
from .ring import Polynomial

_EDF_SEED = 0x5EED


class PrimeCoeffs:
    """Coefficient arithmetic for F_p itself."""

    def __init__(self, p: int):
        self.p = p
        self.q = p  # field size

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def is_zero(self, a):
        return a == 0

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def pth_root(self, a):
        # Frobenius is the identity on F_p
        return a % self.p

    def random(self, rng: random.Random):
        return rng.randrange(self.p)

    def key(self, a):
        return a


# -- generic univariate routines (coefficients in field F) ------------------


def trim(cs, F):
    while cs and F.is_zero(cs[-1]):
        cs.pop()
    return cs


def deg(cs) -> int:
    return len(cs) - 1


def u_add(a, b, F):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else F.zero
        y = b[i] if i < len(b) else F.zero
        out.append(F.add(x, y))
    return trim(out, F)


def u_sub(a, b, F):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else F.zero
        y = b[i] if i < len(b) else F.zero
        out.append(F.sub(x, y))
    return trim(out, F)


def u_scale(a, c, F):
    return trim([F.mul(x, c) for x in a], F)


def u_mul(a, b, F):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out, F)


def u_divmod(a, b, F):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    inv_lead = F.inv(b[-1])
    q = [F.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = F.mul(a[-1], inv_lead)
        k = len(a) - len(b)
        if not F.is_zero(c):
            q[k] = c
            for i, y in enumerate(b):
                a[k + i] = F.sub(a[k + i], F.mul(c, y))
        a.pop()
        trim(a, F)
        if len(a) < len(b):
            break
    return trim(q, F), trim(a, F)


def u_rem(a, b, F):
    return u_divmod(a, b, F)[1]


def u_quo(a, b, F):
    return u_divmod(a, b, F)[0]


def u_monic(a, F):
    if not a:
        return a
    return u_scale(a, F.inv(a[-1]), F)


def u_gcd(a, b, F):
    a, b = list(a), list(b)
    while b:
        a, b = b, u_rem(a, b, F)
    return u_monic(a, F)


def u_powmod(a, e: int, m, F):
    result = [F.one]
    base = u_rem(a, m, F)
    while e:
        if e & 1:
            result = u_rem(u_mul(result, base, F), m, F)
        base = u_rem(u_mul(base, base, F), m, F)
        e >>= 1
    return result


def u_deriv(a, F):
    out = []
    for i in range(1, len(a)):
        c = a[i]
        s = F.zero
        for _ in range(i % F.p):
            s = F.add(s, c)
        out.append(s)
    return trim(out, F)


def u_pth_root(a, F):
    """Inverse Frobenius on a polynomial all of whose exponents are divisible by p."""
    p = F.p
    out = []
    for i in range(0, len(a), p):
        out.append(F.pth_root(a[i]))
        for j in range(1, p):
            if i + j < len(a) and not F.is_zero(a[i + j]):
                raise ValueError("polynomial is not a p-th power")
    return trim(out, F)


def squarefree_parts(f, F):
    """Monic squarefree decomposition [(g_i, m_i)] with f = prod g_i^{m_i}."""
    factors = []
    outer = 1
    f = u_monic(list(f), F)
    while deg(f) > 0:
        df = u_deriv(f, F)
        if df:
            g = u_gcd(f, df, F)
            w = u_quo(f, g, F)
            i = 1
            while deg(w) > 0:
                y = u_gcd(w, g, F)
                z = u_quo(w, y, F)
                if deg(z) > 0:
                    factors.append((z, i * outer))
                i += 1
                w = y
                g = u_quo(g, y, F)
            if deg(g) > 0:
                f = u_pth_root(g, F)
                outer *= F.p
            else:
                break
        else:
            f = u_pth_root(f, F)
            outer *= F.p
    return factors


def distinct_degree(f, F):
    """Split monic squarefree f into [(product of degree-d irreducibles, d)]."""
    out = []
    x = [F.zero, F.one]
    h = list(x)
    d = 0
    f = list(f)
    while deg(f) >= 2 * (d + 1):
        d += 1
        h = u_powmod(h, F.q, f, F)
        g = u_gcd(f, u_sub(h, x, F), F)
        if deg(g) > 0:
            out.append((g, d))
            f = u_quo(f, g, F)
            h = u_rem(h, f, F)
    if deg(f) > 0:
        out.append((f, deg(f)))
    return out


def _random_poly(n, F, rng):
    return trim([F.random(rng) for _ in range(n)], F)


def equal_degree(f, d: int, F, rng):
    """Cantor-Zassenhaus: split monic f, a product of degree-d irreducibles."""
    n = deg(f)
    if n == d:
        return [list(f)]
    while True:
        a = _random_poly(n, F, rng)
        if deg(a) < 1:
            continue
        g = u_gcd(f, a, F)
        if 0 < deg(g) < n:
            break
        if F.p == 2:
            # trace to F_2: sum of 2^i-th powers, i < m*d where q = 2^m
            m = F.q.bit_length() - 1
            b = [F.zero]
            t = u_rem(a, f, F)
            for _ in range(m * d):
                b = u_add(b, t, F)
                t = u_rem(u_mul(t, t, F), f, F)
            g = u_gcd(f, b, F)
        else:
            e = (F.q**d - 1) // 2
            b = u_powmod(a, e, f, F)
            g = u_gcd(f, u_sub(b, [F.one], F), F)
        if 0 < deg(g) < n:
            break
    return equal_degree(g, d, F, rng) + equal_degree(u_quo(f, g, F), d, F, rng)


def factor_monic(f, F, rng=None):
    """Full factorization of monic f: list of (monic irreducible, multiplicity)."""
    if rng is None:
        rng = random.Random(_EDF_SEED)
    out = []
    for g, mult in squarefree_parts(f, F):
        for h, d in distinct_degree(g, F):
            for irr in equal_degree(h, d, F, rng):
                out.append((u_monic(irr, F), mult))
    out.sort(key=lambda fm: (deg(fm[0]), [F.key(c) for c in fm[0]], fm[1]))
    return out


# -- Polynomial-level entry point over F_p ----------------------------------


def _to_dense(f: Polynomial):
    """(variable index, little-endian coefficient list) of a univariate poly."""
    used = f.support()
    if len(used) > 1:
        raise ValueError(f"{f} is not univariate")
    var = used.pop() if used else 0
    coeffs = [0] * (f.total_degree() + 1)
    for exps, c in f.terms.items():
        coeffs[exps[var]] = c
    return var, coeffs


def _from_dense(ring, var: int, coeffs) -> Polynomial:
    terms = []
    for e, c in enumerate(coeffs):
        if c:
            exps = tuple(e if i == var else 0 for i in range(ring.nvars))
            terms.append((exps, c))
    return ring.from_terms(terms)


def factor_univariate(f: Polynomial):
    """Factor a nonzero univariate polynomial over F_p.

    Returns (leading coefficient, [(monic irreducible Polynomial, mult)]),
    sorted canonically. A nonzero constant factors as itself times nothing.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.is_constant():
        return f.constant_term(), []
    var, coeffs = _to_dense(f)
    F = PrimeCoeffs(f.ring.p)
    lc = coeffs[-1]
    factors = factor_monic(u_monic(coeffs, F), F, random.Random(_EDF_SEED))
    return lc, [(_from_dense(f.ring, var, g), m) for g, m in factors]

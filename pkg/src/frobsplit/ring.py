"""Exact arithmetic core: prime fields, monomial orders, sparse polynomials.

Coefficients are canonical machine integers in ``[0, p)``; monomials are
exponent tuples used directly as dict keys. Polynomial values are immutable
after construction and safe to share across threads.
"""

from __future__ import annotations

from .errors import InputError, RingMismatchError

# Bracket powers reach exponent p*deg; exponents must fail loudly, never wrap.
EXPONENT_LIMIT = 2**31 - 1


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (n fits in 31 bits)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field F_p for a prime 2 <= p <= 2^31 - 1."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p <= 2**31 - 1:
            raise InputError(f"p must be an integer in [2, 2^31-1], got {p!r}")
        if not is_prime(p):
            raise InputError(f"NOT_PRIME: {p} is not prime")
        self.p = p

    def reduce(self, c: int) -> int:
        return c % self.p

    def inv(self, c: int) -> int:
        c %= self.p
        if c == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(c, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"F_{self.p}"


class MonomialOrder:
    """A total order on exponent tuples compatible with multiplication.

    ``key(e)`` returns a sort key; larger key means larger monomial.
    Lex with the eliminated variable first doubles as the elimination
    (block) order used for tag-variable tricks.
    """

    __slots__ = ("name",)

    def __init__(self, name: str):
        if name not in ("grevlex", "lex"):
            raise InputError(f"unknown monomial order {name!r}")
        self.name = name

    def key(self, exps):
        if self.name == "lex":
            return exps
        # grevlex: total degree, then the *last* differing exponent smaller
        # wins; reversing and negating turns that into plain tuple comparison.
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.name == other.name

    def __hash__(self):
        return hash(("MonomialOrder", self.name))

    def __repr__(self):
        return self.name


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def monomial_cmp(m1, m2, order: MonomialOrder) -> int:
    """Three-way comparison of exponent tuples: -1, 0, or 1."""
    if len(m1) != len(m2):
        raise RingMismatchError(f"arity mismatch: {len(m1)} vs {len(m2)}")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


class PolyRing:
    """F_p[x_1, ..., x_n] with a fixed variable list and monomial order."""

    __slots__ = ("field", "vars", "order", "_var_index")

    def __init__(self, field: PrimeField, variables, order: MonomialOrder = GREVLEX):
        variables = tuple(variables)
        if len(variables) < 1:
            raise InputError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise InputError(f"duplicate variable names in {variables}")
        self.field = field
        self.vars = variables
        self.order = order
        self._var_index = {v: i for i, v in enumerate(variables)}

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        c = self.field.reduce(c)
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def gen(self, name: str) -> "Polynomial":
        i = self._var_index.get(name)
        if i is None:
            raise InputError(f"unknown variable {name!r}")
        return self.monomial(tuple(1 if j == i else 0 for j in range(self.nvars)))

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(v) for v in self.vars)

    def monomial(self, exps, coeff: int = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise InputError(f"bad exponent vector {exps} for {self}")
        coeff = self.field.reduce(coeff)
        if coeff == 0:
            return Polynomial(self, {})
        return Polynomial(self, {exps: coeff})

    def from_terms(self, terms) -> "Polynomial":
        """Build a polynomial from an iterable of (exponent tuple, coeff)."""
        acc: dict = {}
        for exps, c in terms:
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise InputError(f"bad exponent vector {exps} for {self}")
            c = self.field.reduce(acc.get(exps, 0) + c)
            if c:
                acc[exps] = c
            else:
                acc.pop(exps, None)
        return Polynomial(self, acc)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.field, self.vars, order)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.vars == other.vars
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.vars, self.order))

    def __repr__(self):
        return f"F_{self.p}[{','.join(self.vars)}]/{self.order.name}"


def remap(poly: "Polynomial", target: PolyRing, positions) -> "Polynomial":
    """Transport ``poly`` into ``target``; variable i goes to slot positions[i].

    Used for tag adjunction and variable permutation. ``positions[i] = None``
    drops variable i, which requires its exponent to be zero everywhere.
    """
    if target.field != poly.ring.field:
        raise RingMismatchError("coefficient fields differ")
    n_new = target.nvars
    terms = {}
    for exps, c in poly.terms.items():
        new = [0] * n_new
        for i, e in enumerate(exps):
            if positions[i] is None:
                if e:
                    raise ValueError(f"cannot drop variable with exponent {e}")
            else:
                new[positions[i]] = e
        terms[tuple(new)] = c
    return Polynomial(target, terms)


class Polynomial:
    """Sparse multivariate polynomial over F_p.

    Invariant: no stored zero coefficients; the zero polynomial is the empty
    map. Arithmetic is exact mod p. Instances are treated as immutable.
    """

    __slots__ = ("ring", "terms", "_lead", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None
        self._hash = None

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading_monomial(self):
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lead = max(self.terms, key=self.ring.order.key)
        return self._lead

    def leading_coeff(self) -> int:
        return self.terms[self.leading_monomial()]

    def support(self):
        """Indices of variables that actually occur."""
        used = set()
        for e in self.terms:
            for i, v in enumerate(e):
                if v:
                    used.add(i)
        return used

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ring.constant(other)
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ring.p
        acc = dict(self.terms)
        for exps, c in other.terms.items():
            s = (acc.get(exps, 0) + c) % p
            if s:
                acc[exps] = s
            else:
                acc.pop(exps, None)
        return Polynomial(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ring.p
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                s = (acc.get(exps, 0) + c1 * c2) % p
                if s:
                    acc[exps] = s
                else:
                    acc.pop(exps, None)
        for exps in acc:
            if any(e > EXPONENT_LIMIT for e in exps):
                raise OverflowError(f"exponent exceeds {EXPONENT_LIMIT}")
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {k!r}")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base2 = base * base if k > 1 else base
            base = base2
            k >>= 1
        return result

    def scale(self, c: int) -> "Polynomial":
        c = self.ring.field.reduce(c)
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial(self.ring, {e: (v * c) % p for e, v in self.terms.items()})

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.ring.field.inv(self.leading_coeff()))

    def derivative(self, var_index: int) -> "Polynomial":
        p = self.ring.p
        acc = {}
        for exps, c in self.terms.items():
            e = exps[var_index]
            nc = (c * e) % p
            if e and nc:
                ne = exps[:var_index] + (e - 1,) + exps[var_index + 1 :]
                acc[ne] = (acc.get(ne, 0) + nc) % p
                if not acc[ne]:
                    del acc[ne]
        return Polynomial(self.ring, acc)

    # -- identity ----------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending monomial order (canonical iteration)."""
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ring.constant(other)
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(sorted(self.terms.items()))))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        """Canonical text: descending terms, coefficients in [1, p)."""
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.vars, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self} in {self.ring}>"

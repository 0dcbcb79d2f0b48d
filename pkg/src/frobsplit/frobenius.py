"""Prime-characteristic operators: p-th power decomposition, the trace map,
Frobenius roots, splittings, Fedder's test, compatibility, and closure.

A splitting of the polynomial ring S = F_p[x_1..x_n] is encoded by a single
polynomial f with sigma(h) = u(f*h), where u projects g = sum g_b^p x^b
onto the component at b = (p-1, ..., p-1). The zero locus of the splitting
is read as the hypersurface V(f): the enumeration's local progress argument
needs the splitting to be a unit wherever f is nonzero, which holds for the
divisor-of-f reading and fails for the pointwise reading "f in m^[p]", so
the latter is rejected.

There is deliberately no "largest compatible ideal inside J" operator: the
natural candidate iteration J "meet" (J^[p] : f) can descend forever (p=2,
f=xy, J=(x^2) gives (x^2), (x^3), (x^5), ... with no fixed point), so no
terminating contract exists at this level, and the enumeration never needs
one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import (
    BudgetExceededError,
    KernelInconsistencyError,
    NotASplittingError,
    NotConstructibleError,
)
from .ideals import Ideal, bracket_power, ideal_colon, ideal_product, ideal_sum
from .ring import Polynomial, PolyRing

DEFAULT_CLOSURE_ROUNDS = 64


@dataclass(frozen=True)
class FrobDecomposition:
    """g = sum over b in [0,p-1]^n of (component[b])^p * x^b, exactly."""

    ring: PolyRing
    components: dict

    def recompose(self) -> Polynomial:
        total = self.ring.zero()
        for b, gb in self.components.items():
            total = total + (gb**self.ring.p) * self.ring.monomial(b)
        return total


def frob_decompose(g: Polynomial) -> FrobDecomposition:
    """Unique p-th power decomposition of g; zero components are omitted.

    Coefficient p-th roots are the identity on F_p (c^p = c).
    """
    p = g.ring.p
    buckets: dict = {}
    for exps, c in g.terms.items():
        b = tuple(e % p for e in exps)
        root = tuple(e // p for e in exps)
        buckets.setdefault(b, []).append((root, c))
    components = {
        b: g.ring.from_terms(terms) for b, terms in sorted(buckets.items())
    }
    return FrobDecomposition(g.ring, components)


def trace(g: Polynomial) -> Polynomial:
    """The trace map u: the decomposition component at b = (p-1, ..., p-1)."""
    p = g.ring.p
    terms = []
    for exps, c in g.terms.items():
        if all(e % p == p - 1 for e in exps):
            terms.append((tuple(e // p for e in exps), c))
    return g.ring.from_terms(terms)


def frob_root(J: Ideal) -> Ideal:
    """The smallest ideal K with J contained in K^[p].

    Computed from the generators alone: if s = sum s_c^p x^c, the
    decomposition components of s*g are sums of monomial multiples of the
    components of g, so the component ideal of any element of J already
    lies in the component ideal of the generators. Generating-set
    independence is asserted separately as a property test.
    """
    gens = []
    seen = set()
    for g in J.gens:
        for b, gb in frob_decompose(g).components.items():
            if gb not in seen:
                seen.add(gb)
                gens.append(gb)
    return Ideal(J.ring, gens)


@dataclass(frozen=True)
class Splitting:
    """A validated Frobenius splitting sigma = u o (mult by f), u(f) = 1."""

    ring: PolyRing
    f: Polynomial
    validated: bool = False

    @property
    def p(self) -> int:
        return self.ring.p

    def __str__(self):
        return f"splitting by {self.f} over {self.ring}"


def validate_splitting(f: Polynomial) -> Splitting:
    """Check u(f) = 1, the condition for sigma(h) = u(f*h) to split Frobenius."""
    u = trace(f)
    if not u.is_constant() or u.constant_term() != 1:
        raise NotASplittingError(u)
    return Splitting(f.ring, f, validated=True)


def fedder_is_fpure(g: Polynomial) -> bool:
    """Fedder's criterion at the origin: g^(p-1) not in (x_1^p, ..., x_n^p).

    A monomial lies in the bracket ideal iff some exponent reaches p, so the
    test scans for one term of g^(p-1) inside the box [0, p-1]^n.
    """
    if g.constant_term() != 0:
        raise ValueError("Fedder test expects g in the maximal ideal at the origin")
    p = g.ring.p
    power = g ** (p - 1)
    return any(all(e < p for e in exps) for exps in power.terms)


def splitting_from_hypersurface(g: Polynomial) -> Splitting:
    """A splitting f = c * x^b * g^(p-1) compatible with V(g), if the box
    search finds b with u(x^b * g^(p-1)) a nonzero constant.

    Sufficient for the suite, not complete in general: only multipliers
    that are monomials times constants are tried.
    """
    if g.is_constant():
        raise ValueError("hypersurface polynomial must be nonconstant")
    ring = g.ring
    p = ring.p
    power = g ** (p - 1)
    for b in product(range(p), repeat=ring.nvars):
        u = trace(ring.monomial(b) * power)
        if u.is_constant() and not u.is_zero():
            c = ring.field.inv(u.constant_term())
            return validate_splitting(power * ring.monomial(b, c))
    raise NotConstructibleError(
        f"no monomial multiplier in [0,{p - 1}]^{ring.nvars} makes {g}^(p-1) a splitting"
    )


def _require_validated(s: Splitting):
    if not s.validated:
        raise ValueError("splitting has not been validated")


def is_compatible(s: Splitting, I: Ideal) -> bool:
    """True iff sigma(I) is contained in I.

    Decided two independent ways: frob_root(f*I) inside I, and f inside
    (I^[p] : I). The formulations are provably equivalent; a disagreement
    is a kernel bug and raises, never returns.
    """
    _require_validated(s)
    if I.is_zero():
        return True
    via_root = I.contains(frob_root(ideal_product(Ideal(I.ring, (s.f,)), I)))
    via_colon = ideal_colon(bracket_power(I, I.ring.p), I).contains_poly(s.f)
    if via_root != via_colon:
        raise KernelInconsistencyError(
            f"compatibility tests disagree on {I}: root={via_root}, colon={via_colon}"
        )
    return via_root


def compatible_closure(s: Splitting, J: Ideal, max_rounds: int | None = None) -> Ideal:
    """The smallest sigma-compatible ideal containing J.

    Iterates J <- J + frob_root(f*J) to its fixed point; the chain ascends,
    so Noetherianity guarantees termination, but a configurable round cap
    fails hard rather than spinning on a kernel bug.
    """
    _require_validated(s)
    rounds = DEFAULT_CLOSURE_ROUNDS if max_rounds is None else max_rounds
    f_ideal = Ideal(J.ring, (s.f,))
    current = J
    for _ in range(rounds):
        grown = ideal_sum(current, frob_root(ideal_product(f_ideal, current)))
        if grown == current:
            return current
        current = grown
    raise BudgetExceededError(
        f"compatible closure did not stabilize within {rounds} rounds"
    )

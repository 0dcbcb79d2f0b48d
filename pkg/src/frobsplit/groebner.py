"""Buchberger's algorithm with Gebauer-Moller pair elimination.

The reduced Groebner basis computed here is the canonical identity of an
ideal: two ideals over the same ring and order are equal iff their reduced
bases are identical. Everything downstream leans on that.
"""

from __future__ import annotations

from .errors import BudgetExceededError, RingMismatchError
from .ring import Polynomial, PolyRing

DEFAULT_PAIR_BUDGET = 50_000


def monomial_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class GroebnerBasis:
    """A reduced Groebner basis: monic elements, sorted by leading monomial."""

    __slots__ = ("ring", "elements", "reduced", "_lms")

    def __init__(self, ring: PolyRing, elements, reduced: bool = True):
        self.ring = ring
        self.elements = tuple(elements)
        self.reduced = reduced
        self._lms = tuple(g.leading_monomial() for g in self.elements)

    @property
    def order(self):
        return self.ring.order

    def is_zero_ideal(self) -> bool:
        return not self.elements

    def is_unit_ideal(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def key(self):
        """Hashable canonical identity of the underlying ideal."""
        return tuple(tuple(sorted(g.terms.items())) for g in self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.ring, self.key()))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"GB[{'; '.join(str(g) for g in self.elements)}]"


def poly_divmod(f: Polynomial, divisors) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: f = sum(q_i * divisors[i]) + r.

    No term of r is divisible by any divisor's leading monomial. The first
    divisor in list order whose leading monomial divides the current leading
    term is used, so the result is deterministic for a fixed divisor list.
    """
    ring = f.ring
    divisors = list(divisors)
    for d in divisors:
        if d.ring != ring:
            raise RingMismatchError(f"{d.ring} vs {ring}")
        if d.is_zero():
            raise ZeroDivisionError("zero divisor in division")
    lms = [d.leading_monomial() for d in divisors]
    lcs = [d.leading_coeff() for d in divisors]
    inv = ring.field.inv
    quotients = [ring.zero() for _ in divisors]
    remainder = ring.zero()
    work = f
    while not work.is_zero():
        t = work.leading_monomial()
        c = work.terms[t]
        for i, m in enumerate(lms):
            if monomial_divides(m, t):
                qexps = tuple(a - b for a, b in zip(t, m))
                qc = (c * inv(lcs[i])) % ring.p
                qterm = ring.monomial(qexps, qc)
                quotients[i] = quotients[i] + qterm
                work = work - qterm * divisors[i]
                break
        else:
            tterm = ring.monomial(t, c)
            remainder = remainder + tterm
            work = work - tterm
    return quotients, remainder


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Remainder of f modulo a (Groebner) basis; zero iff f is in the ideal."""
    if isinstance(basis, GroebnerBasis):
        if basis.ring != f.ring:
            raise RingMismatchError(f"{f.ring} vs {basis.ring}")
        divisors = basis.elements
    else:
        divisors = [g for g in basis if not g.is_zero()]
    if not divisors:
        return f
    return poly_divmod(f, divisors)[1]


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return f/g, raising ValueError if g does not divide f exactly."""
    if f.is_zero():
        return f
    qs, r = poly_divmod(f, [g])
    if not r.is_zero():
        raise ValueError(f"{g} does not divide {f}")
    return qs[0]


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    # f, g monic
    ring = f.ring
    lf, lg = f.leading_monomial(), g.leading_monomial()
    l = monomial_lcm(lf, lg)
    mf = ring.monomial(tuple(a - b for a, b in zip(l, lf)))
    mg = ring.monomial(tuple(a - b for a, b in zip(l, lg)))
    return mf * f - mg * g


def _gm_update(old_pairs, lms, t):
    """Gebauer-Moller pair-set update after appending element index t."""
    lm_t = lms[t]
    lcms = [monomial_lcm(lms[i], lm_t) for i in range(t)]
    # criterion M: drop (i,t) when some lcm(j,t) properly divides lcm(i,t)
    survivors = []
    for i in range(t):
        li = lcms[i]
        if any(
            lcms[j] != li and monomial_divides(lcms[j], li) for j in range(t)
        ):
            continue
        survivors.append(i)
    # criterion F: one pair per equal-lcm class; criterion B: if any member
    # of the class has coprime leading monomials, the whole class reduces to 0
    by_lcm: dict = {}
    for i in survivors:
        by_lcm.setdefault(lcms[i], []).append(i)
    new_pairs = []
    for lcm_key in sorted(by_lcm):
        group = by_lcm[lcm_key]
        if any(monomial_coprime(lms[i], lm_t) for i in group):
            continue
        new_pairs.append((group[0], t))
    # chain criterion on surviving old pairs
    kept = []
    for i, j in old_pairs:
        lij = monomial_lcm(lms[i], lms[j])
        if (
            monomial_divides(lm_t, lij)
            and monomial_lcm(lms[i], lm_t) != lij
            and monomial_lcm(lms[j], lm_t) != lij
        ):
            continue
        kept.append((i, j))
    return kept + new_pairs


def buchberger(gens, pair_budget: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Deterministic for a fixed input order: pairs are selected by the normal
    strategy (minimal lcm in the ring's monomial order, ties by index).
    Raises BudgetExceededError after ``pair_budget`` S-polynomial reductions
    rather than returning a truncated basis.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger needs at least one polynomial (may be zero)")
    ring = gens[0].ring
    budget = DEFAULT_PAIR_BUDGET if pair_budget is None else pair_budget
    basis: list[Polynomial] = []
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError(f"{g.ring} vs {ring}")
        if g.is_zero():
            continue
        if g.is_constant():
            return GroebnerBasis(ring, (ring.one(),))
        basis.append(g.monic())
    if not basis:
        return GroebnerBasis(ring, ())

    lms = []
    pairs: list = []
    def push(g):
        basis_idx = len(lms)
        lms.append(g.leading_monomial())
        return _gm_update(pairs, lms, basis_idx)

    work = basis
    basis = []
    for g in work:
        basis.append(g)
        pairs = push(g)

    okey = ring.order.key
    reductions = 0
    while pairs:
        best = min(pairs, key=lambda ij: (okey(monomial_lcm(lms[ij[0]], lms[ij[1]])), ij))
        pairs.remove(best)
        reductions += 1
        if reductions > budget:
            raise BudgetExceededError(
                f"Groebner pair budget of {budget} reductions exceeded"
            )
        i, j = best
        r = normal_form(_spoly(basis[i], basis[j]), basis)
        if r.is_zero():
            continue
        if r.is_constant():
            return GroebnerBasis(ring, (ring.one(),))
        basis.append(r.monic())
        pairs = push(basis[-1])

    return GroebnerBasis(ring, _interreduce(basis))


def _interreduce(basis):
    """Minimalize then tail-reduce a Groebner basis into the reduced one."""
    ring = basis[0].ring
    okey = ring.order.key
    ordered = sorted(basis, key=lambda g: okey(g.leading_monomial()))
    minimal: list[Polynomial] = []
    for g in ordered:
        lm = g.leading_monomial()
        if not any(monomial_divides(m.leading_monomial(), lm) for m in minimal):
            minimal.append(g)
    # leading monomials are now pairwise non-divisible, so tail reduction
    # leaves them fixed and one full pass yields the reduced basis
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        reduced.append(normal_form(g, others).monic() if others else g)
    return reduced

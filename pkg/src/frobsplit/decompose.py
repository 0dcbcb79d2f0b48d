"""Minimal-prime decomposition inside an explicit capability envelope.

Four paths, each complete on its own domain:

  (a) monomial ideals: minimal variable covers of the generator supports;
  (b) principal ideals of low total degree: exhaustive trial division by
      monic linear forms (and monic quadratics for quartics), with
      irreducibility certified by the exhausted search;
  (c) zero-dimensional ideals: lex triangular decomposition, factoring one
      variable at a time over the extension tower built so far;
  (d) anything else: recursive splitting on a factorable basis element.

Ideals outside the envelope raise UnsupportedIdealError carrying the ideal;
there is never a silent wrong answer. Zero-dimensional output is backed by
TriangularPrimeIdeal, a chain t_1(x_1), t_2(x_1,x_2), ... with each step
monic in its top variable and irreducible over the tower below it; the base
field stays F_p, so one chain is one F_p-prime even when it carries a whole
Galois orbit of geometric points.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from .errors import UnsupportedIdealError
from .factor import factor_monic, factor_univariate, u_gcd, u_monic
from .groebner import buchberger, exact_divide, poly_divmod
from .ideals import Ideal, dimension, ideal_sum
from .ring import LEX, Polynomial, PolyRing, remap

_QUADRATIC_TRIAL_CAP = 100_000
_TOWER_SEED = 0x70E3


class TriangularPrimeIdeal(Ideal):
    """A maximal ideal presented by its lex triangular chain."""

    __slots__ = ("chain",)

    def __init__(self, ring: PolyRing, chain):
        super().__init__(ring, tuple(chain))
        self.chain = tuple(chain)


def minimal_primes(I: Ideal) -> list[Ideal]:
    """The minimal primes of I, deduplicated and pairwise incomparable."""
    if I.is_unit():
        raise ValueError("the unit ideal has no minimal primes")
    gb = I.groebner()
    if gb.is_zero_ideal():
        return [I]
    return _minimalize(_decompose(I))


def _minimalize(candidates):
    unique = {}
    for P in candidates:
        unique.setdefault(P.key(), P)
    primes = list(unique.values())
    kept = []
    for P in primes:
        if not any(Q.key() != P.key() and P.contains(Q) for Q in primes):
            kept.append(P)
    kept.sort(key=lambda P: [str(g) for g in P.canonical_gens()])
    return kept


def _decompose(I: Ideal) -> list[Ideal]:
    gb = I.groebner()
    if all(len(g.terms) == 1 for g in gb):
        return _monomial_minimal_primes(I)
    if len(gb) == 1:
        return _principal_minimal_primes(I, gb.elements[0])
    if dimension(I) == 0:
        return _zero_dimensional_minimal_primes(I)
    return _split_on_factorable(I)


# -- path (a): monomial ideals ----------------------------------------------


def _monomial_minimal_primes(I: Ideal) -> list[Ideal]:
    ring = I.ring
    n = ring.nvars
    supports = [
        frozenset(i for i, e in enumerate(g.leading_monomial()) if e)
        for g in I.groebner()
    ]
    hitting = []
    for k in range(n + 1):
        for S in combinations(range(n), k):
            sset = set(S)
            if all(sup & sset for sup in supports):
                hitting.append(sset)
    minimal = [S for S in hitting if not any(T < S for T in hitting)]
    return [
        Ideal(ring, [ring.gen(ring.vars[i]) for i in sorted(S)]) for S in minimal
    ]


# -- path (b): principal ideals ---------------------------------------------


def _monomials_up_to(ring: PolyRing, degree: int):
    monos = [
        e for e in product(range(degree + 1), repeat=ring.nvars) if sum(e) <= degree
    ]
    monos.sort(key=ring.order.key)
    return monos


def _monic_candidates(ring: PolyRing, degree: int):
    """All monic polynomials of total degree ``degree``: each degree-d
    leading monomial together with free smaller-order coefficients."""
    monos = _monomials_up_to(ring, degree)
    p = ring.p
    for idx, lead in enumerate(monos):
        if sum(lead) != degree:
            continue
        lower = monos[:idx]
        for coeffs in product(range(p), repeat=len(lower)):
            terms = [(lead, 1)]
            terms += [(m, c) for m, c in zip(lower, coeffs) if c]
            yield ring.from_terms(terms)


def _candidate_count(ring: PolyRing, degree: int) -> int:
    monos = _monomials_up_to(ring, degree)
    return sum(ring.p**idx for idx, lead in enumerate(monos) if sum(lead) == degree)


def _strip_factors(work: Polynomial, degree: int):
    """Divide out every monic factor of the given total degree, exhaustively.

    Stripping one prime factor neither creates nor destroys divisibility by
    another, so one ascending sweep with repeated division is complete.
    """
    found = []
    for candidate in _monic_candidates(work.ring, degree):
        if work.total_degree() < degree:
            break
        while True:
            try:
                quotient = exact_divide(work, candidate)
            except ValueError:
                break
            work = quotient
            found.append(candidate)
    return work, found


def _principal_minimal_primes(I: Ideal, g: Polynomial) -> list[Ideal]:
    ring = I.ring
    if len(g.support()) <= 1:
        _, factors = factor_univariate(g)
        return [Ideal(ring, (q,)) for q, _ in factors]
    d = g.total_degree()
    if d > 4:
        raise UnsupportedIdealError(
            I, f"principal ideal of total degree {d} > 4 is outside the trial envelope"
        )
    work, irreducibles = _strip_factors(g, 1)
    rest = work.total_degree()
    if rest in (2, 3):
        # no linear factor over F_p, so a quadratic or cubic is irreducible
        irreducibles.append(work.monic())
    elif rest == 4:
        if _candidate_count(ring, 2) > _QUADRATIC_TRIAL_CAP:
            raise UnsupportedIdealError(
                I, "quartic quadratic-factor trial exceeds the candidate cap"
            )
        work, quadratics = _strip_factors(work, 2)
        irreducibles += quadratics
        if work.total_degree() == 4:
            # survived the exhaustive linear and quadratic trials
            irreducibles.append(work.monic())
        elif work.total_degree() != 0:
            raise UnsupportedIdealError(I, "quartic trial left an unexpected cofactor")
    elif rest != 0:
        raise UnsupportedIdealError(I, "trial division left an unexpected cofactor")
    return [Ideal(ring, (q,)) for q in irreducibles]


# -- path (c): zero-dimensional ideals --------------------------------------


class TowerCoeffs:
    """Arithmetic in F_p[x_1..x_k]/(t_1..t_k) for the triangular recursion.

    Elements are polynomials of the working ring in normal form modulo the
    chain; the chain's leading terms are pure powers of distinct variables,
    so it is a Groebner basis and normal forms are canonical. Inversion and
    p-th roots are linear algebra over F_p on the standard monomial basis.
    """

    def __init__(self, ring: PolyRing, chain, head_slots):
        self.ring = ring
        self.chain = list(chain)
        self.p = ring.p
        self._head_degree = {
            slot: max(e[slot] for e in t.terms)
            for t, slot in zip(self.chain, head_slots)
        }
        self._basis = self._standard_monomials()
        self._index = {m: i for i, m in enumerate(self._basis)}
        self.q = self.p ** len(self._basis)
        self._frob_matrix = None

    def _standard_monomials(self):
        axes = [
            range(self._head_degree.get(i, 1)) for i in range(self.ring.nvars)
        ]
        monos = list(product(*axes))
        monos.sort(key=self.ring.order.key)
        return monos

    @property
    def zero(self):
        return self.ring.zero()

    @property
    def one(self):
        return self.ring.one()

    def nf(self, poly: Polynomial) -> Polynomial:
        if not self.chain or poly.is_zero():
            return poly
        return poly_divmod(poly, self.chain)[1]

    def is_zero(self, a):
        return a.is_zero()

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return self.nf(a * b)

    def _vec(self, a):
        v = [0] * len(self._basis)
        for exps, c in a.terms.items():
            v[self._index[exps]] = c
        return v

    def _unvec(self, v):
        return self.ring.from_terms([(m, c) for m, c in zip(self._basis, v) if c])

    def inv(self, a):
        if a.is_zero():
            raise ZeroDivisionError("inverse of 0 in tower field")
        if a.is_constant():
            return self.ring.constant(self.ring.field.inv(a.constant_term()))
        cols = [self._vec(self.mul(a, self.ring.monomial(m))) for m in self._basis]
        sol = _solve_mod_p(cols, self._vec(self.one), self.p)
        if sol is None:
            raise ZeroDivisionError(f"{a} is a zero divisor: chain is not maximal")
        return self._unvec(sol)

    def pth_root(self, a):
        if self._frob_matrix is None:
            self._frob_matrix = [
                self._vec(self.nf(self.ring.monomial(m) ** self.p))
                for m in self._basis
            ]
        sol = _solve_mod_p(self._frob_matrix, self._vec(a), self.p)
        if sol is None:
            raise ZeroDivisionError("Frobenius not invertible: chain is not maximal")
        return self._unvec(sol)

    def random(self, rng: random.Random):
        return self._unvec([rng.randrange(self.p) for _ in self._basis])

    def key(self, a):
        return tuple(sorted(a.terms.items()))


def _solve_mod_p(columns, rhs, p):
    """Solve sum_j x_j * columns[j] = rhs over F_p; None if inconsistent."""
    n = len(rhs)
    m = len(columns)
    aug = [[columns[j][i] % p for j in range(m)] + [rhs[i] % p] for i in range(n)]
    pivots = []
    row = 0
    for col in range(m):
        sel = next((r for r in range(row, n) if aug[r][col]), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = pow(aug[row][col], p - 2, p)
        aug[row] = [(v * inv) % p for v in aug[row]]
        for r in range(n):
            if r != row and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [(a - factor * b) % p for a, b in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    sol = [0] * m
    for r, col in enumerate(pivots):
        sol[col] = aug[r][m]
    for r in range(row, n):
        if aug[r][m] % p:
            return None
    return sol


def _zero_dimensional_minimal_primes(I: Ideal) -> list[Ideal]:
    """All maximal ideals over a zero-dimensional ideal, as triangular chains.

    Works in a lex ring with the variables reversed, so elimination yields a
    univariate polynomial in x_1 first; each of its irreducible factors
    extends the chain, and the next variable is factored over that tower.
    """
    ring = I.ring
    n = ring.nvars
    W = PolyRing(ring.field, tuple(reversed(ring.vars)), LEX)
    to_W = [n - 1 - i for i in range(n)]
    gens_W = [remap(g, W, to_W) for g in I.gens]
    results = []

    def recurse(gens, chain, head_slots, level):
        if level == n:
            results.append(list(chain))
            return
        basis = buchberger(gens)
        if basis.is_unit_ideal():
            return
        slot = n - 1 - level
        F = TowerCoeffs(W, chain, head_slots)
        h: list = []
        for g in basis:
            if any(any(e[s] for s in range(slot)) for e in g.terms):
                continue  # involves a variable beyond the current level
            img = _univariate_over_tower(g, slot, F)
            if img:
                h = u_gcd(h, img, F) if h else u_monic(img, F)
        if len(h) <= 1:
            return  # empty fiber on this branch
        rng = random.Random(_TOWER_SEED)
        for t_dense, _mult in factor_monic(h, F, rng):
            t_poly = _from_univariate(t_dense, slot, W)
            recurse(
                gens + [t_poly], chain + [t_poly], head_slots + [slot], level + 1
            )

    recurse(gens_W, [], [], 0)
    from_W = [n - 1 - j for j in range(n)]
    out = []
    for chain in results:
        out.append(TriangularPrimeIdeal(ring, [remap(t, ring, from_W) for t in chain]))
    return out


def _univariate_over_tower(g: Polynomial, slot: int, F: TowerCoeffs):
    by_degree: dict = {}
    W = g.ring
    for exps, c in g.terms.items():
        d = exps[slot]
        rest = exps[:slot] + (0,) + exps[slot + 1 :]
        by_degree[d] = by_degree.get(d, W.zero()) + W.from_terms([(rest, c)])
    coeffs = [F.nf(by_degree.get(i, W.zero())) for i in range(max(by_degree) + 1)]
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _from_univariate(coeffs, slot: int, W: PolyRing):
    total = W.zero()
    x = W.gen(W.vars[slot])
    for i, c in enumerate(coeffs):
        total = total + c * x**i
    return total


# -- path (d): recursive splitting ------------------------------------------


def _try_split(g: Polynomial):
    """A factorization g = a*b with both factors nonconstant, or None."""
    ring = g.ring
    if len(g.support()) <= 1:
        lc, factors = factor_univariate(g)
        flat = [q for q, m in factors for _ in range(m)]
        if len(flat) < 2:
            return None
        b = ring.constant(lc)
        for q in flat[1:]:
            b = b * q
        return flat[0], b
    if g.total_degree() > 4:
        return None
    for degree in (1, 2):
        if degree == 2 and (
            g.total_degree() < 4 or _candidate_count(ring, 2) > _QUADRATIC_TRIAL_CAP
        ):
            break
        for candidate in _monic_candidates(ring, degree):
            try:
                quotient = exact_divide(g, candidate)
            except ValueError:
                continue
            if quotient.is_constant():
                continue
            return candidate, quotient
    return None


def _split_on_factorable(I: Ideal) -> list[Ideal]:
    for g in I.canonical_gens():
        split = _try_split(g)
        if split is None:
            continue
        a, b = split
        if I.contains_poly(a) or I.contains_poly(b):
            # the corresponding branch would equal I: no progress here
            continue
        out = []
        for piece in (a, b):
            out.extend(_decompose(ideal_sum(I, Ideal(I.ring, (piece,)))))
        return out
    raise UnsupportedIdealError(
        I,
        "not monomial, principal, or zero-dimensional, and no basis element "
        "splits under trial factorization",
    )

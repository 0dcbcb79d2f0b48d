"""Ideal-level algebra on top of the Groebner kernel.

Sums, products, bracket powers, intersections (by tag-variable
elimination), colon ideals, Krull dimension, Jacobian ideals, and radical
membership. An Ideal's identity is its reduced Groebner basis: equality,
hashing and containment all go through it.
"""

from __future__ import annotations

import warnings
from itertools import combinations

from .errors import InputError, RingMismatchError
from .groebner import GroebnerBasis, buchberger, exact_divide, normal_form
from .ring import GREVLEX, LEX, Polynomial, PolyRing, remap


class Ideal:
    """An ideal of F_p[x_1..x_n] with a lazily cached reduced Groebner basis.

    The zero ideal has an empty generator list; the unit ideal is detected
    by its basis being {1}.
    """

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: PolyRing, gens=()):
        self.ring = ring
        cleaned = []
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError(f"ideal generator {g!r} is not a Polynomial")
            if g.ring != ring:
                raise RingMismatchError(f"{g.ring} vs {ring}")
            if not g.is_zero():
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb = None

    @classmethod
    def zero(cls, ring) -> "Ideal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring) -> "Ideal":
        return cls(ring, (ring.one(),))

    def groebner(self) -> GroebnerBasis:
        if self._gb is None:
            if not self.gens:
                self._gb = GroebnerBasis(self.ring, ())
            else:
                self._gb = buchberger(self.gens)
        return self._gb

    def is_zero(self) -> bool:
        return self.groebner().is_zero_ideal()

    def is_unit(self) -> bool:
        return self.groebner().is_unit_ideal()

    def is_proper_nonzero(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def contains_poly(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def contains(self, other: "Ideal") -> bool:
        """True iff other is a subset of self."""
        gb = self.groebner()
        return all(gb.contains(g) for g in other.gens)

    def key(self):
        """Hashable canonical identity (reduced-GB fingerprint)."""
        return self.groebner().key()

    def canonical_gens(self) -> tuple[Polynomial, ...]:
        return self.groebner().elements

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.ring == other.ring
            and self.groebner() == other.groebner()
        )

    def __hash__(self):
        return hash((self.ring, self.key()))

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self):
        return f"Ideal{self}"


def _check_same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _check_same_ring(I, J)
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _check_same_ring(I, J)
    return Ideal(I.ring, tuple(g * h for g in I.gens for h in J.gens))


def bracket_power(I: Ideal, q: int) -> Ideal:
    """The Frobenius power I^[q]: ideal of q-th powers of the generators.

    q must be p^e with e >= 1. The result does not depend on the chosen
    generating set (checked by property tests).
    """
    p = I.ring.p
    e, m = 0, q
    while m > 1 and m % p == 0:
        m //= p
        e += 1
    if m != 1 or e < 1:
        raise InputError(f"{q} is not a positive power of p={p}")
    return Ideal(I.ring, tuple(g**q for g in I.gens))


def _tag_ring(ring: PolyRing) -> tuple[PolyRing, list[int]]:
    """Ring with a fresh tag variable adjoined in front, under lex.

    Lex with the tag largest is an elimination order for the tag: basis
    elements free of the tag generate the elimination ideal.
    """
    tag = "t_"
    while tag in ring.vars:
        tag += "_"
    ext = PolyRing(ring.field, (tag,) + ring.vars, LEX)
    positions = [i + 1 for i in range(ring.nvars)]
    return ext, positions


def _eliminate_tag(ext_basis, ring: PolyRing) -> list[Polynomial]:
    kept = []
    drop_tag = [None] + list(range(ring.nvars))
    for g in ext_basis:
        if all(e[0] == 0 for e in g.terms):
            kept.append(remap(g, ring, drop_tag))
    return kept


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I intersect J, by eliminating t from t*I + (1-t)*J."""
    _check_same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal.zero(I.ring)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    # nested cases avoid an elimination entirely
    if J.contains(I):
        return I
    if I.contains(J):
        return J
    ring = I.ring
    ext, positions = _tag_ring(ring)
    t = ext.gen(ext.vars[0])
    one_minus_t = ext.one() - t
    gens = [t * remap(g, ext, positions) for g in I.gens]
    gens += [one_minus_t * remap(g, ext, positions) for g in J.gens]
    basis = buchberger(gens)
    return Ideal(ring, _eliminate_tag(basis.elements, ring))


def ideal_colon(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = {t : t*J in I}, via (I meet (g))/g per generator of J."""
    _check_same_ring(I, J)
    if J.is_zero():
        warnings.warn(
            "colon by the zero ideal: returning (1) by convention",
            RuntimeWarning,
            stacklevel=2,
        )
        return Ideal.unit(I.ring)
    if I.is_unit():
        return Ideal.unit(I.ring)
    result = None
    for g in J.gens:
        meet = ideal_intersect(I, Ideal(I.ring, (g,)))
        quotient = Ideal(I.ring, tuple(exact_divide(h, g) for h in meet.canonical_gens()))
        result = quotient if result is None else ideal_intersect(result, quotient)
    return result if result is not None else Ideal.unit(I.ring)


def dimension(I: Ideal) -> int:
    """Krull dimension of ring/I via maximal independent variable sets.

    A variable set S is independent when no leading monomial of the basis
    is supported inside S; the dimension is the largest such |S|.
    """
    if I.is_unit():
        raise ValueError("the unit ideal cuts out the empty variety")
    n = I.ring.nvars
    gb = I.groebner()
    if gb.is_zero_ideal():
        return n
    supports = [frozenset(i for i, e in enumerate(g.leading_monomial()) if e) for g in gb]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            sset = set(S)
            if all(not sup <= sset for sup in supports):
                return size
    raise AssertionError("unreachable: empty set is always independent")


def _det(matrix):
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    ring = matrix[0][0].ring
    total = ring.zero()
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        cofactor = entry * _det(minor)
        total = total + cofactor if j % 2 == 0 else total - cofactor
    return total


def jacobian_ideal(P: Ideal) -> Ideal:
    """P plus the codim-sized minors of the Jacobian of its reduced basis.

    The vanishing locus contains the singular locus of V(P), and every
    generator vanishes on it; both hold for any generating set, so the
    canonical basis is used for determinism. For P = (0) the ambient space
    is smooth and the unit ideal is returned.
    """
    if P.is_zero():
        return Ideal.unit(P.ring)
    if P.is_unit():
        raise ValueError("jacobian_ideal of the unit ideal")
    ring = P.ring
    n = ring.nvars
    c = n - dimension(P)
    gens = P.canonical_gens()
    jac = [[g.derivative(v) for v in range(n)] for g in gens]
    minors = []
    for rows in combinations(range(len(gens)), c):
        for cols in combinations(range(n), c):
            sub = [[jac[r][col] for col in cols] for r in rows]
            d = _det(sub)
            if not d.is_zero():
                minors.append(d)
    return ideal_sum(P, Ideal(ring, minors))


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    """True iff f lies in the radical of I (Rabinowitsch trick)."""
    if f.ring != I.ring:
        raise RingMismatchError(f"{f.ring} vs {I.ring}")
    if f.is_zero():
        return True
    if I.contains_poly(f):
        return True
    ring = I.ring
    ext, positions = _tag_ring(ring)
    ext = PolyRing(ring.field, ext.vars, GREVLEX)  # any order decides 1 in J
    t = ext.gen(ext.vars[0])
    gens = [remap(g, ext, positions) for g in I.gens]
    gens.append(ext.one() - t * remap(f, ext, positions))
    return buchberger(gens).is_unit_ideal()

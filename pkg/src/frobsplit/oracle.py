"""Independent brute-force oracles and randomized completeness probes.

The monomial oracle enumerates every squarefree monomial ideal of a small
ring outright and filters by the compatibility test, giving a ground-truth
member set for coordinate splittings that the enumeration must reproduce
exactly. The probe harness draws seeded pseudo-random ideals and checks
that their compatible closures are already lattice members; a miss is a
completeness bug. The generator is Python's Mersenne Twister (mt19937),
named in every report so runs can be reproduced elsewhere.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from .errors import InputError
from .frobenius import Splitting, compatible_closure, is_compatible, validate_splitting
from .ideals import Ideal
from .lattice import CompatibleLattice, canonical_text, enumerate_all, member_sort_key
from .ring import GREVLEX, PolyRing, PrimeField

RNG_NAME = "mt19937"
ORACLE_MAX_VARS = 3


def coordinate_splitting(ring: PolyRing) -> Splitting:
    """The splitting by (x_1 * ... * x_n)^(p-1)."""
    f = ring.one()
    for g in ring.gens():
        f = f * g ** (ring.p - 1)
    return validate_splitting(f)


def squarefree_monomial_ideals(ring: PolyRing) -> list[Ideal]:
    """Every ideal generated by squarefree monomials, plus (0) and (1).

    Exhaustive: all generating subsets of the 2^n - 1 nonempty squarefree
    monomials, deduplicated by canonical basis.
    """
    n = ring.nvars
    monomials = []
    for mask in product((0, 1), repeat=n):
        if any(mask):
            monomials.append(ring.monomial(mask))
    seen = {}
    zero = Ideal.zero(ring)
    seen[zero.key()] = zero
    unit = Ideal.unit(ring)
    seen[unit.key()] = unit
    for r in range(1, len(monomials) + 1):
        for subset in combinations(monomials, r):
            I = Ideal(ring, subset)
            seen.setdefault(I.key(), I)
    return sorted(seen.values(), key=member_sort_key)


def monomial_oracle_report(n: int, p: int) -> dict:
    """Compare enumerate_all against the exhaustive squarefree-monomial filter."""
    if n > ORACLE_MAX_VARS:
        raise InputError(
            f"monomial oracle is exhaustive only up to {ORACLE_MAX_VARS} variables"
        )
    ring = PolyRing(PrimeField(p), tuple("xyz"[:n]), GREVLEX)
    s = coordinate_splitting(ring)
    oracle_members = [
        I for I in squarefree_monomial_ideals(ring) if is_compatible(s, I)
    ]
    lattice = enumerate_all(s)
    oracle_keys = {I.key() for I in oracle_members}
    lattice_keys = {m.key() for m in lattice.members}
    agree = oracle_keys == lattice_keys
    return {
        "n": n,
        "p": p,
        "f": str(s.f),
        "oracle_members": [list(canonical_text(I)) for I in oracle_members],
        "enumerated_members": [list(canonical_text(m)) for m in lattice.members],
        "counts": {"oracle": len(oracle_members), "enumerated": len(lattice.members)},
        "agree": agree,
    }


def random_ideals(ring: PolyRing, count: int, seed: int, max_deg: int = 3):
    """Seeded pseudo-random ideals: <= 2 generators, <= 3 terms each."""
    rng = random.Random(seed)
    monomials = sorted(
        (e for e in product(range(max_deg + 1), repeat=ring.nvars) if sum(e) <= max_deg),
        key=ring.order.key,
    )
    out = []
    for _ in range(count):
        gens = []
        for _ in range(rng.randint(1, 2)):
            terms = []
            for _ in range(rng.randint(1, 3)):
                exps = monomials[rng.randrange(len(monomials))]
                coeff = rng.randint(1, ring.p - 1)
                terms.append((exps, coeff))
            gens.append(ring.from_terms(terms))
        out.append(Ideal(ring, gens))
    return out


def probe_report(
    s: Splitting,
    lattice: CompatibleLattice,
    count: int = 100,
    seed: int = 0,
    max_deg: int = 3,
) -> dict:
    """Closure-completeness probe: every A(J) must be a lattice member."""
    misses = []
    for i, J in enumerate(random_ideals(s.ring, count, seed, max_deg)):
        closure = compatible_closure(s, J)
        if not lattice.contains_ideal(closure):
            misses.append(
                {
                    "probe_index": i,
                    "gens": [str(g) for g in J.gens],
                    "closure": list(canonical_text(closure)),
                }
            )
    return {
        "input": {"p": s.p, "vars": list(s.ring.vars), "f": str(s.f)},
        "rng": RNG_NAME,
        "seed": seed,
        "probes": count,
        "max_deg": max_deg,
        "lattice_size": len(lattice.members),
        "misses": misses,
        "passed": not misses,
    }

"""Enumeration of every compatibly split subvariety under a fixed splitting.

The recursion starts at the zero ideal and repeatedly passes to the zero
locus of the induced splitting together with the singular locus: every
compatible prime strictly containing P must contain

    G(P) = P + zideal(P) * jacobian_ideal(P),

hence also the compatible closure T of G(P), hence one of T's minimal
primes. Each child strictly contains its parent, so chains ascend and depth
is bounded by the number of variables; termination is precisely the
finiteness of the lattice. The full member set is then the closure of the
primes (plus the trivial ideals) under sums and intersections.

zideal is exact at P = (0) (it returns (f)) and for principal primes; at
singular points of V(P) its value is only an upper bound for the locus, but
soundness there is carried by the Jacobian factor, which vanishes on all of
Sing V(P). The product with the Jacobian ideal still makes progress because
P is prime and neither factor lies inside P: the zideal contract guarantees
an element outside P, and over the perfect base field F_p every prime is
generically smooth, so some Jacobian minor survives too.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .decompose import minimal_primes
from .errors import KernelInconsistencyError, VerificationFailedError
from .frobenius import Splitting, compatible_closure, is_compatible
from .ideals import (
    Ideal,
    bracket_power,
    dimension,
    ideal_colon,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    jacobian_ideal,
)


def member_dimension(I: Ideal) -> int:
    """Krull dimension of the quotient; -1 for the unit ideal (empty locus)."""
    if I.is_unit():
        return -1
    return dimension(I)


def canonical_text(I: Ideal) -> tuple[str, ...]:
    return tuple(str(g) for g in I.canonical_gens())


def member_sort_key(I: Ideal):
    return (-member_dimension(I), canonical_text(I))


@dataclass(frozen=True)
class CompatiblePrimeNode:
    """Discovery record: which prime was found under which parent."""

    prime: Ideal
    parent: Ideal | None
    depth: int


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]
    member_ok: tuple[bool, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


@dataclass
class CompatibleLattice:
    """The finite lattice of all compatible ideals of a splitting."""

    splitting: Splitting
    members: tuple[Ideal, ...]
    prime_keys: frozenset
    hasse_edges: tuple[tuple[int, int], ...]
    dims: tuple[int, ...]
    nodes: tuple[CompatiblePrimeNode, ...]
    report: VerificationReport | None = None
    verified: tuple[bool, ...] = field(default_factory=tuple)

    def is_prime(self, i: int) -> bool:
        return self.members[i].key() in self.prime_keys

    def is_trivial(self, i: int) -> bool:
        m = self.members[i]
        return m.is_zero() or m.is_unit()

    def index_of(self, I: Ideal):
        key = I.key()
        for i, m in enumerate(self.members):
            if m.key() == key:
                return i
        return None

    def contains_ideal(self, I: Ideal) -> bool:
        return self.index_of(I) is not None

    def primes(self) -> list[Ideal]:
        return [m for i, m in enumerate(self.members) if self.is_prime(i)]

    def proper_nonzero(self) -> list[Ideal]:
        return [m for i, m in enumerate(self.members) if not self.is_trivial(i)]


def z_ideal(s: Splitting, P: Ideal) -> Ideal:
    """Ideal of the zero locus of the splitting induced on V(P).

    Returns P + (((f) + P^[p]) : (P^[p] : P)); exactly (f) at P = (0) and
    exactly (cofactor) + P for principal primes. Soundness: every zero of
    the induced splitting on the regular locus of V(P) is a zero of the
    result. The result always strictly exceeds P; equality would contradict
    the splitting being nonzero on V(P) and raises as an internal error.
    """
    if not s.validated:
        raise ValueError("splitting has not been validated")
    ring = P.ring
    f_ideal = Ideal(ring, (s.f,))
    if P.is_zero():
        return f_ideal
    frobp = bracket_power(P, ring.p)
    inducing = ideal_colon(frobp, P)
    numerator = ideal_sum(f_ideal, frobp)
    result = ideal_sum(P, ideal_colon(numerator, inducing))
    if result == P:
        raise KernelInconsistencyError(
            f"zero locus of the induced splitting collapsed into {P}"
        )
    return result


def recursion_step(s: Splitting, P: Ideal) -> list[Ideal]:
    """Children primes of P: the minimal primes of A(P + zideal * jacobian).

    Completeness: every compatible prime strictly containing P contains
    G(P), hence its compatible closure T, hence one of T's minimal primes,
    so the worklist never loses a branch. Each child must itself be
    compatible (components of compatible subschemes are); a failure there
    is a kernel bug, not a filter.
    """
    grown = ideal_sum(P, ideal_product(z_ideal(s, P), jacobian_ideal(P)))
    closure = compatible_closure(s, grown)
    if closure.is_unit():
        return []
    children = minimal_primes(closure)
    for child in children:
        if not is_compatible(s, child):
            raise KernelInconsistencyError(
                f"component {child} of the compatible ideal {closure} "
                "failed the compatibility test"
            )
        if not (child.contains(P) and child != P):
            raise KernelInconsistencyError(
                f"child {child} does not strictly contain its parent {P}"
            )
    return children


def enumerate_all(s: Splitting, parallel: bool = False) -> CompatibleLattice:
    """Enumerate the full lattice: primes by worklist, members by closure.

    Breadth-first from (0), deduplicating primes by reduced basis; the
    worklist is finite and parent chains strictly ascend (depth is asserted
    to stay within the variable count). Branches may run in parallel;
    canonical sorting restores a deterministic result either way.
    Verification runs at the end and a failure aborts with diagnostics.
    """
    if not s.validated:
        raise ValueError("splitting has not been validated")
    ring = s.ring
    n = ring.nvars
    root = Ideal.zero(ring)
    nodes = [CompatiblePrimeNode(root, None, 0)]
    depth_of = {root.key(): 0}
    frontier = [root]
    primes: list[Ideal] = []
    while frontier:
        if parallel and len(frontier) > 1:
            with ThreadPoolExecutor(max_workers=min(len(frontier), 8)) as pool:
                batches = list(pool.map(lambda P: recursion_step(s, P), frontier))
        else:
            batches = [recursion_step(s, P) for P in frontier]
        next_frontier = []
        for parent, children in zip(frontier, batches):
            for child in children:
                key = child.key()
                if key in depth_of:
                    continue
                depth = depth_of[parent.key()] + 1
                if depth > n:
                    raise KernelInconsistencyError(
                        f"recursion reached depth {depth} > {n} variables"
                    )
                depth_of[key] = depth
                nodes.append(CompatiblePrimeNode(child, parent, depth))
                primes.append(child)
                next_frontier.append(child)
        next_frontier.sort(key=member_sort_key)
        frontier = next_frontier

    pool: dict = {}
    for I in [root, Ideal.unit(ring)] + primes:
        pool.setdefault(I.key(), I)
    # close under sums and intersections; finite since the lattice is finite
    while True:
        current = sorted(pool.values(), key=member_sort_key)
        added = False
        for I, J in combinations(current, 2):
            for K in (ideal_sum(I, J), ideal_intersect(I, J)):
                if K.key() not in pool:
                    pool[K.key()] = K
                    added = True
        if not added:
            break

    members = tuple(sorted(pool.values(), key=member_sort_key))
    dims = tuple(member_dimension(m) for m in members)
    edges = _hasse_edges(members)
    lattice = CompatibleLattice(
        splitting=s,
        members=members,
        prime_keys=frozenset(P.key() for P in primes),
        hasse_edges=edges,
        dims=dims,
        nodes=tuple(nodes),
    )
    report = verify_lattice(s, lattice)
    lattice.report = report
    lattice.verified = report.member_ok
    if not report.passed:
        raise VerificationFailedError(report)
    return lattice


def _hasse_edges(members) -> tuple[tuple[int, int], ...]:
    m = len(members)
    below = [[False] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i != j and members[j].contains(members[i]) and members[i] != members[j]:
                below[i][j] = True
    edges = []
    for i in range(m):
        for j in range(m):
            if below[i][j] and not any(below[i][k] and below[k][j] for k in range(m)):
                edges.append((i, j))
    return tuple(edges)


def verify_lattice(s: Splitting, L: CompatibleLattice) -> VerificationReport:
    """Assertion pass over an enumerated lattice.

    Per nontrivial member: compatibility by both formulations, membership of
    f, and closure of its minimal primes inside the lattice. Globally: the
    unique minimal proper nonzero member is the compatible closure of (f),
    and the member set is closed under sums and intersections. Failures are
    reported, never raised.
    """
    checks: list[CheckResult] = []
    member_ok = [True] * len(L.members)
    f = s.f

    for i, I in enumerate(L.members):
        if L.is_trivial(i):
            continue
        label = "{" + ", ".join(canonical_text(I)) + "}"
        try:
            compatible = is_compatible(s, I)
        except KernelInconsistencyError as exc:
            checks.append(CheckResult(f"compatible[{i}]", False, str(exc)))
            member_ok[i] = False
        else:
            checks.append(
                CheckResult(
                    f"compatible[{i}]",
                    compatible,
                    f"member {label}" if compatible else f"member {label} fails both-way test",
                )
            )
            member_ok[i] = member_ok[i] and compatible
        has_f = I.contains_poly(f)
        checks.append(
            CheckResult(
                f"contains_f[{i}]",
                has_f,
                "" if has_f else f"f not in member {label}",
            )
        )
        member_ok[i] = member_ok[i] and has_f
        try:
            comp_primes = minimal_primes(I)
            missing = [P for P in comp_primes if not L.contains_ideal(P)]
            checks.append(
                CheckResult(
                    f"components_present[{i}]",
                    not missing,
                    "" if not missing else f"missing components {[str(P) for P in missing]}",
                )
            )
            member_ok[i] = member_ok[i] and not missing
        except Exception as exc:  # decomposition outside envelope: report, not crash
            checks.append(CheckResult(f"components_present[{i}]", False, str(exc)))
            member_ok[i] = False

    proper = [m for i, m in enumerate(L.members) if not L.is_trivial(i)]
    if proper:
        minimal = [
            I for I in proper if not any(J != I and I.contains(J) for J in proper)
        ]
        closure_f = compatible_closure(s, Ideal(s.ring, (f,)))
        ok = len(minimal) == 1 and minimal[0] == closure_f
        checks.append(
            CheckResult(
                "minimal_member_is_closure_of_f",
                ok,
                ""
                if ok
                else f"minimal members {[str(I) for I in minimal]} vs closure {closure_f}",
            )
        )
    else:
        checks.append(
            CheckResult("minimal_member_is_closure_of_f", True, "no proper members")
        )

    missing_ops = []
    for I, J in combinations(L.members, 2):
        for tag, K in (("sum", ideal_sum(I, J)), ("intersection", ideal_intersect(I, J))):
            if not L.contains_ideal(K):
                missing_ops.append(f"{tag} of {I} and {J} -> {K}")
    checks.append(
        CheckResult(
            "closed_under_sum_and_intersection",
            not missing_ops,
            "; ".join(missing_ops[:4]),
        )
    )

    return VerificationReport(tuple(checks), tuple(member_ok))

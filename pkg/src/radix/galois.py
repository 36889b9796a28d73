"""Permutation groups and the quintic solvability-by-radicals verdict.

A polynomial equation is solvable by radicals exactly when its Galois group
is a solvable group.  Solvability of a concrete permutation group is decided
here with the derived series (iterated commutator subgroups), which is
equivalent to the chain-with-cyclic-quotients definition and much easier to
compute on explicit element sets.

For an irreducible quintic the group itself is never computed.  Instead the
factor degree patterns of f mod p supply cycle types of Frobenius elements,
and one forbidden type is enough: every solvable transitive subgroup of S5
lives inside the order-20 Frobenius group F20 (with D5 and C5 below it),
whose elements only have cycle types 1+1+1+1+1, 2+2+1, 4+1 and 5.  Any
sampled type outside that set certifies the group contains A5 and the
equation is not solvable by radicals, with the witness prime as a
checkable certificate.  If no forbidden type shows up the verdict stays
honestly undetermined: proving solvability of an irreducible quintic needs
machinery out of scope here.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import factorial
from typing import Iterable, Optional, Sequence

from .finite_field import CycleType, factor_degree_pattern, is_irreducible_q, usable_primes
from .polynomial import Polynomial, poly_gcd

Perm = tuple[int, ...]

MAX_GROUP_SIZE = 40320  # 8!


class GroupSizeExceeded(RuntimeError):
    pass


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: (p*q)(i) = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Perm:
    """Permutation of [0, n) from disjoint cycles, e.g. [(0, 1), (2, 3, 4)]."""
    out = list(range(n))
    for cyc in cycles:
        for i, v in enumerate(cyc):
            out[v] = cyc[(i + 1) % len(cyc)]
    return tuple(out)


def cycle_type_of(p: Perm) -> CycleType:
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        parts.append(length)
    return CycleType(parts)


class PermGroup:
    """A permutation group as an explicit closed element set."""

    __slots__ = ("n", "elements", "element_set", "generators")

    def __init__(self, n: int, elements: Iterable[Perm], generators: Sequence[Perm] = ()):
        self.n = n
        self.element_set = frozenset(elements)
        self.elements = tuple(sorted(self.element_set))
        self.generators = tuple(generators)
        if identity(n) not in self.element_set:
            raise ValueError("group must contain the identity")
        if factorial(n) % len(self.element_set) != 0:
            raise ValueError("order does not divide n! (not closed?)")

    @property
    def size(self) -> int:
        return len(self.element_set)

    def __contains__(self, p: Perm) -> bool:
        return p in self.element_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.n == other.n and self.element_set == other.element_set

    def __hash__(self) -> int:
        return hash((self.n, self.element_set))

    def __repr__(self) -> str:
        return f"PermGroup(n={self.n}, size={self.size})"


def group_closure(generators: Sequence[Perm]) -> PermGroup:
    """Breadth-first closure of the generators under composition."""
    if not generators:
        raise ValueError("need at least one generator (the identity works)")
    n = len(generators[0])
    if any(len(g) != n for g in generators):
        raise ValueError("generators act on different sets")
    gens = [tuple(g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(n)):
            raise ValueError(f"not a permutation of [0, {n}): {g}")
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                e = compose(g, h)
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
                    if len(seen) > MAX_GROUP_SIZE:
                        raise GroupSizeExceeded(f"closure exceeds {MAX_GROUP_SIZE}")
        frontier = nxt
    return PermGroup(n, seen, generators=gens)


def commutator_subgroup(G: PermGroup) -> PermGroup:
    """Closure of all commutators a b a^-1 b^-1."""
    elems = G.elements
    inverses = {a: inverse(a) for a in elems}
    comms = {
        compose(compose(a, b), compose(inverses[a], inverses[b]))
        for a in elems
        for b in elems
    }
    return group_closure(sorted(comms))


def derived_series(G: PermGroup) -> list[PermGroup]:
    """G, [G, G], [[G, G], [G, G]], ... until it stabilizes."""
    series = [G]
    while True:
        nxt = commutator_subgroup(series[-1])
        if nxt.size == series[-1].size:
            return series
        series.append(nxt)


def is_solvable(G: PermGroup) -> bool:
    """True when the derived series reaches the trivial group."""
    return derived_series(G)[-1].size == 1


# -- quintic verdict -----------------------------------------------------------

# Cycle types of elements of F20 (and so of D5 and C5 inside it): element
# orders in F20 are 1, 2, 4, 5 and the order-2 and order-4 elements fix one
# point, giving 2+2+1 and 4+1.  A transitive solvable subgroup of S5 is
# contained in F20 up to conjugacy, so any other sampled type rules every
# solvable group out.
ALLOWED_SOLVABLE_QUINTIC_TYPES = frozenset(
    {(1, 1, 1, 1, 1), (2, 2, 1), (4, 1), (5,)}
)


class VerdictStatus(Enum):
    SOLVABLE_BY_RADICALS = "solvable_by_radicals"
    NOT_SOLVABLE_BY_RADICALS = "not_solvable_by_radicals"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class SolvabilityVerdict:
    status: VerdictStatus
    reason: Optional[str] = None
    witness_prime: Optional[int] = None
    witness_cycle_type: Optional[CycleType] = None
    primes_tested: Optional[int] = None

    def __str__(self) -> str:
        if self.status is VerdictStatus.SOLVABLE_BY_RADICALS:
            return f"solvable by radicals ({self.reason})"
        if self.status is VerdictStatus.NOT_SOLVABLE_BY_RADICALS:
            return (
                f"not solvable by radicals (witness: mod {self.witness_prime} "
                f"factor pattern {self.witness_cycle_type})"
            )
        return f"undetermined after {self.primes_tested} usable primes"


def _sample_patterns(f: Polynomial, max_primes: int) -> list[tuple[int, CycleType]]:
    samples: list[tuple[int, CycleType]] = []
    for p, g in usable_primes(f):
        samples.append((p, factor_degree_pattern(g)))
        if len(samples) >= max_primes:
            break
    if not samples:
        raise RuntimeError("no usable prime among the first 200")
    return samples


def frobenius_sample(f: Polynomial, max_primes: int = 50) -> list[tuple[int, CycleType]]:
    """Factor degree patterns of an irreducible quintic mod the first usable primes.

    Each pattern is the cycle type of a Frobenius element of the Galois
    group.  Raises if f is not an irreducible quintic, or if no usable prime
    exists among the first 200 (impossible for squarefree input).
    """
    if f.degree != 5:
        raise ValueError(f"expected degree 5, got {f.degree}")
    if not is_irreducible_q(f):
        raise ValueError("polynomial is reducible over Q")
    return _sample_patterns(f, max_primes)


def quintic_verdict(f: Polynomial, max_primes: int = 50) -> SolvabilityVerdict:
    """Decide or certify (non-)solvability by radicals for a quintic.

    Reducible quintics are solvable outright: every factor has degree <= 4
    and falls to the closed-form solvers.  For irreducible ones, sample
    cycle types mod p; the first type outside the F20 set is returned as a
    non-solvability certificate.  When all samples are allowed types the
    result is Undetermined with the count of primes tested - heuristically
    solvable, and the caller can raise max_primes.
    """
    if f.degree != 5:
        raise ValueError(f"expected degree 5, got {f.degree}")
    if poly_gcd(f, f.derivative()).degree != 0:
        raise ValueError("quintic verdict requires squarefree input")
    if not is_irreducible_q(f):
        return SolvabilityVerdict(
            VerdictStatus.SOLVABLE_BY_RADICALS,
            reason="factors have degree <= 4",
        )
    tested = 0
    for p, g in usable_primes(f):
        tested += 1
        ctype = factor_degree_pattern(g)
        if ctype.parts not in ALLOWED_SOLVABLE_QUINTIC_TYPES:
            return SolvabilityVerdict(
                VerdictStatus.NOT_SOLVABLE_BY_RADICALS,
                witness_prime=p,
                witness_cycle_type=ctype,
                primes_tested=tested,
            )
        if tested >= max_primes:
            break
    if tested == 0:
        raise RuntimeError("no usable prime among the first 200")
    return SolvabilityVerdict(
        VerdictStatus.UNDETERMINED,
        primes_tested=tested,
    )

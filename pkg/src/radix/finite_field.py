"""Polynomials over prime fields and irreducibility testing over Q.

The mod-p machinery exists to produce *factor degree patterns*: the multiset
of degrees of the irreducible factors of f mod p.  For a squarefree
reduction this multiset is the cycle type of a Frobenius element of the
Galois group of f, which is the evidence the solvability module consumes.

Everything is sized for degree <= 5 and small primes, so polynomials are
plain coefficient tuples and factoring is distinct-degree factorization via
iterated gcd(g, x^(p^d) - x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from .polynomial import Polynomial, poly_gcd, rational_roots

PRIME_SEARCH_CAP = 200  # number of primes scanned when hunting usable ones


class BadPrime(ValueError):
    """The prime divides a denominator or the leading numerator."""


class NotSquarefree(ValueError):
    """The mod-p reduction has a repeated factor; pick another prime."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def primes() -> Iterator[int]:
    """2, 3, 5, ... by trial division; plenty fast for the first few hundred."""
    n = 2
    while True:
        if _is_prime(n):
            yield n
        n += 1


@dataclass(frozen=True)
class CycleType:
    """Multiset of positive integers, stored sorted descending.

    Encodes either the cycle lengths of a permutation or the factor degrees
    of a squarefree polynomial mod p; the two coincide for Frobenius
    elements, which is the whole point.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        canon = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in canon):
            raise ValueError("cycle type parts must be positive")
        object.__setattr__(self, "parts", canon)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)


class FpPoly:
    """Polynomial over F_p, coefficients in [0, p), trailing zeros stripped."""

    __slots__ = ("prime", "coeffs")

    def __init__(self, prime: int, coeffs: Sequence[int]):
        if not _is_prime(prime):
            raise ValueError(f"{prime} is not prime")
        cs = [c % prime for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.prime = prime
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @classmethod
    def x(cls, prime: int) -> "FpPoly":
        return cls(prime, (0, 1))

    @classmethod
    def one(cls, prime: int) -> "FpPoly":
        return cls(prime, (1,))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.prime == other.prime and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.prime, self.coeffs))

    def __repr__(self) -> str:
        return f"FpPoly({self.prime}, {list(self.coeffs)})"

    def _check(self, other: "FpPoly") -> None:
        if self.prime != other.prime:
            raise ValueError("mixed primes")

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        get = lambda t, i: t[i] if i < len(t) else 0
        return FpPoly(self.prime, [get(self.coeffs, i) + get(other.coeffs, i) for i in range(n)])

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        get = lambda t, i: t[i] if i < len(t) else 0
        return FpPoly(self.prime, [get(self.coeffs, i) - get(other.coeffs, i) for i in range(n)])

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return FpPoly(self.prime, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % self.prime
        return FpPoly(self.prime, out)

    def __divmod__(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.prime
        rem = list(self.coeffs)
        dn = other.degree
        if self.degree < dn:
            return FpPoly(p, ()), self
        inv_lead = pow(other.coeffs[-1], -1, p)
        quot = [0] * (self.degree - dn + 1)
        for k in range(self.degree - dn, -1, -1):
            c = (rem[k + dn] * inv_lead) % p
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = (rem[k + j] - c * b) % p
        return FpPoly(p, quot), FpPoly(p, rem)

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "FpPoly":
        return FpPoly(self.prime, [i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "FpPoly":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        inv = pow(self.coeffs[-1], -1, self.prime)
        return FpPoly(self.prime, [c * inv for c in self.coeffs])

    def gcd(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def pow_mod(self, exponent: int, modulus: "FpPoly") -> "FpPoly":
        """self**exponent mod modulus by repeated squaring."""
        result = FpPoly.one(self.prime)
        base = self % modulus
        e = exponent
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def is_squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree == 0


def reduce_mod_p(f: Polynomial, prime: int) -> FpPoly:
    """Coefficient-wise reduction of a rational polynomial mod p.

    Raises BadPrime if p divides any coefficient denominator or the leading
    numerator (either would change the degree or be undefined).
    """
    if f.is_zero():
        raise ValueError("cannot reduce the zero polynomial")
    if not _is_prime(prime):
        raise ValueError(f"{prime} is not prime")
    for c in f.coeffs:
        if c.denominator % prime == 0:
            raise BadPrime(f"prime {prime} divides a coefficient denominator")
    if f.leading.numerator % prime == 0:
        raise BadPrime(f"prime {prime} divides the leading coefficient")
    return FpPoly(
        prime,
        [c.numerator * pow(c.denominator, -1, prime) % prime for c in f.coeffs],
    )


def factor_degree_pattern(g: FpPoly) -> CycleType:
    """Degrees of the irreducible factors of a squarefree g over F_p.

    Distinct-degree factorization: for d = 1, 2, ... the gcd of g with
    x^(p^d) - x collects exactly the factors of degree dividing d; removing
    lower degrees first makes each gcd the product of the degree-d factors,
    so its degree divided by d counts them.  No factor is ever produced
    explicitly, only the degree bookkeeping.
    """
    if g.degree < 1:
        raise ValueError("pattern of a constant polynomial")
    if not g.is_squarefree():
        raise NotSquarefree(f"reduction mod {g.prime} has a repeated factor")
    p = g.prime
    work = g.monic()
    parts: list[int] = []
    d = 0
    while work.degree > 0:
        d += 1
        if 2 * d > work.degree:
            # the remainder has no factor of degree <= deg/2: irreducible
            parts.append(work.degree)
            break
        xq = FpPoly.x(p).pow_mod(p**d, work)
        split = work.gcd(xq - FpPoly.x(p))
        if split.degree > 0:
            parts.extend([d] * (split.degree // d))
            work = work // split
    return CycleType(parts)


def usable_primes(f: Polynomial, limit: int = PRIME_SEARCH_CAP) -> Iterator[tuple[int, FpPoly]]:
    """Yield (p, f mod p) for primes where the reduction works and is squarefree.

    Scans the first ``limit`` primes in order; a prime is skipped when it
    divides the leading numerator, a denominator, or the discriminant
    (equivalently: the reduction keeps its degree and stays squarefree).
    """
    gen = primes()
    for _ in range(limit):
        p = next(gen)
        try:
            g = reduce_mod_p(f, p)
        except BadPrime:
            continue
        if g.is_squarefree():
            yield p, g


def _subset_sums(parts: Sequence[int]) -> set[int]:
    sums = {0}
    for p in parts:
        sums |= {s + p for s in sums}
    return sums


def _quadratic_factor_exists(f: Polynomial) -> bool:
    """Bounded search for a monic rational quadratic factor of f.

    After clearing denominators, any rational quadratic factor scales to a
    primitive integer one (Gauss): leading term dividing the leading
    coefficient, constant term dividing the constant coefficient, and all
    entries within the coarse 2^deg * (1 + max|coeff|) height bound.  A
    factor q also satisfies q(1) | f(1) and q(-1) | f(-1), which prunes the
    middle coefficient down to a handful of candidates before the exact
    division check.
    """
    g = f.clear_denominators()
    bound = 2 ** g.degree * (1 + max(abs(int(c)) for c in g.coeffs))
    lead, const = int(g.leading), int(g.constant)
    if const == 0:
        return True  # x divides f; callers screen rational roots first
    at_one, at_minus_one = int(g(1)), int(g(-1))  # nonzero: no rational roots
    one_divs = _divisors_of(at_one)
    for a2 in _divisors_of(lead):
        if a2 > bound:
            break
        for a0_abs in _divisors_of(const):
            if a0_abs > bound:
                break
            for a0 in (a0_abs, -a0_abs):
                for d_abs in one_divs:
                    for d in (d_abs, -d_abs):
                        a1 = d - a2 - a0  # forces quad(1) = d
                        if abs(a1) > bound:
                            continue
                        at_m1 = a2 - a1 + a0
                        if at_m1 == 0 or at_minus_one % at_m1 != 0:
                            continue
                        quad = Polynomial((Fraction(a0, a2), Fraction(a1, a2), 1))
                        if (g % quad).is_zero():
                            return True
    return False


def _divisors_of(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def is_irreducible_q(f: Polynomial, screening_primes: int = 12) -> bool:
    """Irreducibility over Q for squarefree f of degree 1..5.

    Degree <= 3 reduces to the absence of a rational root.  For degrees 4
    and 5 the only factorization shapes left after ruling out rational
    roots involve a quadratic factor, so the test is: some usable prime
    with an irreducible reduction proves irreducibility outright; the
    intersected factor patterns can rule every proper factor degree out;
    otherwise an exhaustive height-bounded search for a monic rational
    quadratic factor decides.
    """
    n = f.degree
    if n < 1 or n > 5:
        raise ValueError(f"irreducibility test supports degree 1..5, got {n}")
    if not poly_gcd(f, f.derivative()).degree == 0:
        raise ValueError("irreducibility test requires squarefree input")
    if n == 1:
        return True
    if rational_roots(f):
        return False
    if n <= 3:
        return True

    feasible: set[int] | None = None
    for count, (p, g) in enumerate(usable_primes(f)):
        if count >= screening_primes:
            break
        pattern = factor_degree_pattern(g)
        if pattern.parts == (n,):
            return True
        sums = _subset_sums(pattern.parts) - {0, n}
        feasible = sums if feasible is None else (feasible & sums)
        if not feasible:
            return True
    # degree 4 splits only as 2+2, degree 5 only as 2+3 (no rational roots),
    # so a quadratic factor is the one remaining possibility either way
    if feasible is not None and 2 not in feasible:
        return True
    return _quadratic_factor_exists(f)

"""Exact univariate polynomial arithmetic over the rationals.

Coefficients are `fractions.Fraction` throughout, so every operation here is
exact: evaluation, gcd, division, depression (removal of the second-highest
term by a Tschirnhaus shift), square-free splitting and rational root search
never touch floating point.

A polynomial is stored densely: ``coeffs[i]`` is the coefficient of ``x**i``
and trailing zeros are stripped, so the leading coefficient is nonzero except
for the zero polynomial (empty coefficient tuple, degree -1 by convention).
Degrees at play never exceed five, which makes the dense representation and
plain Euclidean gcd entirely adequate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

RationalLike = Union[int, Fraction]


class Polynomial:
    """Dense rational-coefficient polynomial in one variable."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        """Coefficient of x**i (zero beyond the stored degree)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- construction helpers ---------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike]) -> "Polynomial":
        """Monic polynomial with the given rational roots (with multiplicity)."""
        f = cls.one()
        for r in roots:
            f = f * cls((-Fraction(r), 1))
        return f

    # -- ring operations ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(i) - other.coeff(i) for i in range(n))

    def __mul__(self, other: Union["Polynomial", RationalLike]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Exact Euclidean division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = other.degree, self.degree
        if dd < dn:
            return Polynomial.zero(), self
        quot = [Fraction(0)] * (dd - dn + 1)
        inv_lead = 1 / other.leading
        for k in range(dd - dn, -1, -1):
            c = rem[k + dn] * inv_lead
            quot[k] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    # -- calculus / normalization -------------------------------------------

    def __call__(self, x: RationalLike) -> Fraction:
        """Evaluate exactly at a rational point (Horner order)."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        if self.leading == 1:
            return self
        return self * (1 / self.leading)

    def clear_denominators(self) -> "Polynomial":
        """Scale to primitive integer coefficients with positive leading term."""
        if self.is_zero():
            return self
        from math import gcd, lcm

        denom = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * denom) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return Polynomial(ints)

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        return self.to_text("x")

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def to_text(self, var: str = "x") -> str:
        """Human-readable form, highest power first, e.g. ``x^3 - 15x - 4``."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xi = var if i == 1 else f"{var}^{i}"
                body = xi if mag == 1 else f"{mag}{xi}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


# -- gcd and factor-structure helpers ------------------------------------


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd over Q[x] by the plain Euclidean algorithm."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def squarefree_part(f: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Split ``f`` into its square-free part and the repeated-root factor.

    Returns ``(f / gcd(f, f'), gcd(f, f'))``, both monic.  The first factor
    has exactly the distinct roots of ``f``, each once; the second carries a
    root of multiplicity m with multiplicity m - 1, so the root multiset of
    ``f`` is the disjoint union of the two parts' multisets.
    """
    if f.is_zero():
        raise ValueError("square-free split of the zero polynomial")
    g = poly_gcd(f, f.derivative())
    if g.is_zero():  # f constant
        return Polynomial.one(), Polynomial.one()
    return (f // g).monic(), g.monic()


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(f: Polynomial) -> list[Fraction]:
    """All rational roots of ``f``, deduplicated and sorted ascending.

    Uses the rational root theorem after clearing denominators: every
    rational root p/q in lowest terms has p dividing the constant term and
    q dividing the leading coefficient.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has every root")
    if f.degree == 0:
        return []
    g = f.clear_denominators()
    roots: set[Fraction] = set()
    # strip powers of x first so the constant term is nonzero
    low = 0
    while g.coeff(low) == 0:
        low += 1
    if low > 0:
        roots.add(Fraction(0))
        g = Polynomial(g.coeffs[low:])
    if g.degree >= 1:
        for p in _divisors(int(g.constant)):
            for q in _divisors(int(g.leading)):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if g(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


# -- depression (Tschirnhaus shift) ---------------------------------------


@dataclass(frozen=True)
class DepressedCubic:
    """y^3 + p*y + q obtained from a monic cubic by x = y - shift."""

    p: Fraction
    q: Fraction
    shift: Fraction

    def polynomial(self) -> Polynomial:
        return Polynomial((self.q, self.p, 0, 1))


@dataclass(frozen=True)
class DepressedQuartic:
    """y^4 + p*y^2 + q*y + r obtained from a monic quartic by x = y - shift."""

    p: Fraction
    q: Fraction
    r: Fraction
    shift: Fraction

    def polynomial(self) -> Polynomial:
        return Polynomial((self.r, self.q, self.p, 0, 1))


def depress(f: Polynomial) -> Union[DepressedCubic, DepressedQuartic]:
    """Remove the second-highest term of a monic cubic or quartic.

    For x^3 + a x^2 + b x + c the shift x = y - a/3 gives
    p = b - a^2/3 and q = c - a b/3 + 2 a^3/27.  For
    x^4 + a x^3 + b x^2 + c x + d the shift x = y - a/4 gives
    p = b - 3a^2/8, q = c - a b/2 + a^3/8 and
    r = d - a c/4 + a^2 b/16 - 3 a^4/256.

    Substituting y = x + shift into the depressed form recovers ``f``.
    """
    if f.degree not in (3, 4):
        raise ValueError(f"depression is defined for degree 3 or 4, got {f.degree}")
    if not f.is_monic():
        raise ValueError("depression requires a monic polynomial")
    if f.degree == 3:
        a, b, c = f.coeff(2), f.coeff(1), f.coeff(0)
        return DepressedCubic(
            p=b - a * a / 3,
            q=c - a * b / 3 + 2 * a**3 / 27,
            shift=a / 3,
        )
    a, b, c, d = f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0)
    return DepressedQuartic(
        p=b - 3 * a * a / 8,
        q=c - a * b / 2 + a**3 / 8,
        r=d - a * c / 4 + a * a * b / 16 - 3 * a**4 / 256,
        shift=a / 4,
    )

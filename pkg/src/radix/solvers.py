"""Closed-form radical solutions for polynomials of degree one through four.

Cubics go through depression and the u, v substitution: u^3 and v^3 solve
the auxiliary quadratic z^2 + q z - p^3/27, and the three roots are
u + v, e1*u + e2*v, e2*u + e1*v with e1, e2 the primitive cube roots of
unity.  Of the nine combinations of cube-root branches only those with
u*v = -p/3 are valid, so v is *constructed* as the algebraic quotient
-p/(3u) rather than as an independent radical: invalid pairings are
unrepresentable by shape.

Quartics come in two flavors.  The perfect-square method completes
(x^2 + a/2 + y)^2 and picks y on the resolvent cubic
8y^3 + 8a y^2 + (2a^2 - 8c) y - b^2 so the right side becomes a square,
splitting the quartic into two quadratics.  The symmetric method writes a
root as u + v + w where u^2, v^2, w^2 solve
z^3 + (p/2) z^2 + (p^2/16 - r/4) z - q^2/64; again the third value is a
quotient, w = (-q/8)/(u v), which bakes in the sign rule u*v*w = -q/8, and
the four roots are the sign patterns (+++), (+--), (-+-), (--+).

The same resolvent also classifies the real/complex split of a squarefree
quartic with q != 0: three positive real resolvent roots mean four real
roots, one positive and two negative mean two conjugate pairs, one real and
two complex mean two real roots and one pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Union

from mpmath import mpf

from .polynomial import (
    DepressedCubic,
    DepressedQuartic,
    Polynomial,
    depress,
    poly_gcd,
    rational_roots,
    squarefree_part,
)
from .radicals import (
    Add,
    Const,
    Mul,
    Neg,
    RadicalExpr,
    Root,
    RootOfUnity,
    add,
    const,
    eval_many,
    inv,
    mul,
    neg,
    root,
    simplify,
    sqrt,
)

EPS1 = RootOfUnity(3, 1)
EPS2 = RootOfUnity(3, 2)


class Method(str, Enum):
    LINEAR = "linear"
    QUADRATIC = "quadratic"
    CARDANO = "cardano"
    FERRARI = "ferrari"
    EULER = "euler"
    BIQUADRATIC = "biquadratic"


class RootClass(Enum):
    FOUR_REAL = "four_real"
    TWO_REAL_TWO_COMPLEX = "two_real_two_complex"
    TWO_CONJUGATE_PAIRS = "two_conjugate_pairs"


class MultipleRootsError(ValueError):
    """The operation requires a squarefree input."""


@dataclass(frozen=True)
class SolutionSet:
    """Roots of a polynomial as radical expressions, with multiplicity."""

    roots: tuple[RadicalExpr, ...]
    method: Method
    casus_irreducibilis: bool = False
    classification: Optional[RootClass] = None


def _unshift(roots: Sequence[RadicalExpr], shift: Fraction) -> list[RadicalExpr]:
    """Map roots of the depressed polynomial back via x = y - shift."""
    if shift == 0:
        return list(roots)
    return [simplify(add(r, const(-shift))) for r in roots]


# -- degrees one and two ------------------------------------------------------


def solve_linear(a: Union[int, Fraction], b: Union[int, Fraction]) -> SolutionSet:
    """Root of a*x + b = 0."""
    a, b = Fraction(a), Fraction(b)
    if a == 0:
        raise ValueError("leading coefficient must be nonzero")
    return SolutionSet((Const(-b / a),), Method.LINEAR)


def solve_quadratic(
    a: Union[int, Fraction], b: Union[int, Fraction], c: Union[int, Fraction]
) -> SolutionSet:
    """Roots of a*x^2 + b*x + c = 0 as (-b +/- sqrt(b^2 - 4ac)) / (2a).

    The discriminant stays under a square root symbolically; when it is a
    perfect rational square the simplifier collapses the root to a rational.
    The "+" root comes first.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        raise ValueError("leading coefficient must be nonzero")
    disc = b * b - 4 * a * c
    radical = sqrt(const(disc))
    scale = 1 / (2 * a)
    plus = simplify(add(const(-b * scale), mul(const(scale), radical)))
    minus = simplify(add(const(-b * scale), neg(mul(const(scale), radical))))
    return SolutionSet((plus, minus), Method.QUADRATIC)


def _expr_quadratic_roots(
    b_expr: RadicalExpr, c_expr: RadicalExpr
) -> tuple[RadicalExpr, RadicalExpr]:
    """Roots of monic x^2 + B x + C with radical-expression coefficients."""
    disc = add(mul(b_expr, b_expr), mul(const(-4), c_expr))
    radical = sqrt(disc)
    half = const(Fraction(1, 2))
    plus = simplify(mul(half, add(neg(b_expr), radical)))
    minus = simplify(mul(half, add(neg(b_expr), neg(radical))))
    return plus, minus


# -- cubics -------------------------------------------------------------------


def cubic_casus_flag(d: DepressedCubic) -> bool:
    """True when (p/3)^3 + (q/2)^2 < 0, exactly.

    This is the case where the square root inside the cube roots goes
    negative while all three roots are real, so radicals cannot avoid
    complex intermediates (the observation that forced complex numbers into
    algebra).  Equivalent to the cubic having three distinct real roots.
    """
    return (d.p / 3) ** 3 + (d.q / 2) ** 2 < 0


def cardano_depressed(d: DepressedCubic) -> SolutionSet:
    """Radical roots of y^3 + p*y + q, in the order x1, x2, x3."""
    p, q = d.p, d.q
    casus = cubic_casus_flag(d)
    if p == 0:
        # y^3 = -q: the three cube-root branches
        roots = tuple(simplify(root(const(-q), 3, b)) for b in range(3))
        return SolutionSet(roots, Method.CARDANO, casus_irreducibilis=casus)
    disc = q * q / 4 + p**3 / 27
    u_cubed = add(const(-q / 2), sqrt(const(disc)))
    u1 = root(u_cubed, 3, 0)
    # u1 = 0 would need p = 0 (handled above), so the quotient is safe
    v1 = mul(const(-p / 3), inv(u1))
    x1 = add(u1, v1)
    x2 = add(mul(EPS1, u1), mul(EPS2, v1))
    x3 = add(mul(EPS2, u1), mul(EPS1, v1))
    roots = tuple(simplify(x) for x in (x1, x2, x3))
    return SolutionSet(roots, Method.CARDANO, casus_irreducibilis=casus)


def solve_cubic(f: Polynomial) -> SolutionSet:
    """Radical roots of a degree-3 polynomial."""
    if f.degree != 3:
        raise ValueError(f"expected degree 3, got {f.degree}")
    d = depress(f.monic())
    assert isinstance(d, DepressedCubic)
    sol = cardano_depressed(d)
    return SolutionSet(
        tuple(_unshift(sol.roots, d.shift)),
        Method.CARDANO,
        casus_irreducibilis=sol.casus_irreducibilis,
    )


def _cubic_roots_shallow(f: Polynomial) -> list[RadicalExpr]:
    """Roots of a monic cubic with rational roots kept as plain constants.

    Rational roots (found exactly, ascending) are deflated out first so the
    leftover factor is solved at its own degree; this keeps resolvent roots
    as shallow as the input allows.
    """
    work = f.monic()
    consts: list[Fraction] = []
    for r in rational_roots(work):
        while work.degree >= 1:
            quot, rem = divmod(work, Polynomial((-r, 1)))
            if not rem.is_zero():
                break
            consts.append(r)
            work = quot
    exprs: list[RadicalExpr] = [Const(r) for r in consts]
    if work.degree == 2:
        exprs.extend(solve_quadratic(work.coeff(2), work.coeff(1), work.coeff(0)).roots)
    elif work.degree == 3:
        exprs.extend(solve_cubic(work).roots)
    return exprs


# -- quartics: perfect-square method ------------------------------------------


def ferrari_resolvent(f: Polynomial, offset: Optional[Fraction] = None) -> Polynomial:
    """Resolvent cubic of a depressed monic quartic x^4 + a x^2 + b x + c.

    Completing (x^2 + y + m)^2 with m = offset (default a/2) and requiring
    the right-hand side (2y + 2m - a) x^2 - b x + (y^2 + 2my + m^2 - c) to
    be a perfect square in x gives, monic in y:

        y^3 + (6m - a)/2 * y^2 + (3m^2 - am - c) * y
            + ((2m - a)(m^2 - c) - b^2/4) / 2

    With the default offset this is y^3 + a y^2 + (a^2/4 - c) y - b^2/8.
    Other offsets shift the resolvent root by m - a/2; the classical worked
    instance x^4 + 6x^2 + 36 = 60x completes against the constant term
    (m = 6) and lands on y^3 + 15y^2 + 36y - 450.
    """
    if f.degree != 4 or not f.is_monic() or f.coeff(3) != 0:
        raise ValueError("expected a monic depressed quartic x^4 + a x^2 + b x + c")
    a, b, c = f.coeff(2), f.coeff(1), f.coeff(0)
    m = a / 2 if offset is None else Fraction(offset)
    return Polynomial(
        (
            ((2 * m - a) * (m * m - c) - b * b / 4) / 2,
            3 * m * m - a * m - c,
            (6 * m - a) / 2,
            1,
        )
    )


def _select_resolvent_root(res: Polynomial) -> RadicalExpr:
    """Pick a resolvent root for the quadratic split.

    Preference order: exact rational roots ascending with y > 0, then the
    real roots of the radical solution (first the nested-radical real root)
    with 2y > 0 numerically.  Any nonzero resolvent root makes the split
    algebraically valid; positivity just keeps sqrt(2y) real.  A positive
    real root always exists because the resolvent is negative at 0 (value
    -b^2/8 with b != 0) and grows without bound.
    """
    candidates = _cubic_roots_shallow(res)
    fallback: RadicalExpr | None = None
    for cand in candidates:
        if isinstance(cand, Const):
            if cand.value > 0:
                return cand
            if cand.value != 0 and fallback is None:
                fallback = cand
    irrational = [c for c in candidates if not isinstance(c, Const)]
    if irrational:
        vals = eval_many(irrational, 64)
        for cand, val in zip(irrational, vals):
            looks_real = abs(val.imag) <= max(2 * val.error_radius, mpf(2) ** -40)
            if looks_real and val.real > 0:
                return cand
        if fallback is None:
            fallback = irrational[0]
    if fallback is None:
        raise ArithmeticError("resolvent has no nonzero root; is b zero?")
    return fallback


def solve_quartic_ferrari(f: Polynomial) -> SolutionSet:
    """Radical roots of a degree-4 polynomial by the perfect-square method.

    The quartic is normalized monic and depressed; a resolvent root y0 is
    embedded symbolically and the two quadratics

        x^2 - s x + (a/2 + y0 + b/(2s)) = 0
        x^2 + s x + (a/2 + y0 - b/(2s)) = 0,   s = sqrt(2 y0)

    are solved with the "+" roots first.  b = 0 has no valid split (y0 = 0)
    and is delegated to the biquadratic substitution.
    """
    if f.degree != 4:
        raise ValueError(f"expected degree 4, got {f.degree}")
    d = depress(f.monic())
    assert isinstance(d, DepressedQuartic)
    if d.q == 0:
        sol = solve_biquadratic(d)
        return SolutionSet(
            tuple(_unshift(sol.roots, d.shift)),
            Method.BIQUADRATIC,
            classification=_try_classify(d),
        )
    res = ferrari_resolvent(d.polynomial())
    y0 = _select_resolvent_root(res)
    s = simplify(root(mul(const(2), y0), 2, 0))
    half_a = const(d.p / 2)
    shift_term = mul(const(d.q / 2), inv(s))
    r1_plus, r1_minus = _expr_quadratic_roots(neg(s), add(half_a, y0, shift_term))
    r2_plus, r2_minus = _expr_quadratic_roots(s, add(half_a, y0, neg(shift_term)))
    roots = _unshift((r1_plus, r1_minus, r2_plus, r2_minus), d.shift)
    return SolutionSet(tuple(roots), Method.FERRARI, classification=_try_classify(d))


# -- quartics: symmetric (u+v+w) method ----------------------------------------


def euler_resolvent(d: DepressedQuartic) -> Polynomial:
    """z^3 + (p/2) z^2 + (p^2/16 - r/4) z - q^2/64, whose roots are u^2, v^2, w^2."""
    p, q, r = d.p, d.q, d.r
    return Polynomial((-q * q / 64, p * p / 16 - r / 4, p / 2, 1))


def _resolvent_roots_sorted(res: Polynomial) -> list[RadicalExpr]:
    """Resolvent roots ordered: rational ascending first, then by real part."""
    exprs = _cubic_roots_shallow(res)
    rational = [e for e in exprs if isinstance(e, Const)]
    other = [e for e in exprs if not isinstance(e, Const)]
    if other:
        vals = eval_many(other, 64)
        order = sorted(range(len(other)), key=lambda i: (vals[i].real, vals[i].imag))
        other = [other[i] for i in order]
    return rational + other


def solve_quartic_euler(d: DepressedQuartic) -> SolutionSet:
    """Radical roots of y^4 + p y^2 + q y + r with q != 0, no multiple roots.

    u0 and v0 are principal square roots of the first two resolvent roots;
    w0 = (-q/8)/(u0 v0) enforces the sign condition structurally.  The roots
    are the four sign patterns u0+v0+w0, u0-v0-w0, -u0+v0-w0, -u0-v0+w0.
    """
    if d.q == 0:
        raise ValueError("q = 0 is the biquadratic case; use solve_biquadratic")
    quartic = d.polynomial()
    if poly_gcd(quartic, quartic.derivative()).degree != 0:
        raise MultipleRootsError("quartic has multiple roots; reduce first")
    z = _resolvent_roots_sorted(euler_resolvent(d))
    u0 = simplify(root(z[0], 2, 0))
    v0 = simplify(root(z[1], 2, 0))
    w0 = simplify(mul(const(-d.q / 8), inv(mul(u0, v0))))
    x1 = add(u0, v0, w0)
    x2 = add(u0, neg(v0), neg(w0))
    x3 = add(neg(u0), v0, neg(w0))
    x4 = add(neg(u0), neg(v0), w0)
    roots = tuple(simplify(x) for x in (x1, x2, x3, x4))
    return SolutionSet(roots, Method.EULER, classification=classify_quartic(d))


def _descartes_positive_count(f: Polynomial) -> int:
    """Sign changes of the coefficient sequence, exact for all-real roots."""
    signs = [1 if c > 0 else -1 for c in reversed(f.coeffs) if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def classify_quartic(d: DepressedQuartic) -> RootClass:
    """Real/complex split of a squarefree depressed quartic with q != 0.

    Decided exactly from the resolvent cubic: if it has one real root the
    quartic has two real roots and a conjugate pair; with three real roots
    (all necessarily nonzero, product q^2/64 > 0) either all three are
    positive giving four real roots, or one is positive and two negative
    giving two conjugate pairs.
    """
    if d.q == 0:
        raise ValueError("classification requires q != 0")
    quartic = d.polynomial()
    if poly_gcd(quartic, quartic.derivative()).degree != 0:
        raise MultipleRootsError("quartic has multiple roots")
    res = euler_resolvent(d)
    dep = depress(res)
    assert isinstance(dep, DepressedCubic)
    delta = (dep.p / 3) ** 3 + (dep.q / 2) ** 2
    if delta > 0:
        return RootClass.TWO_REAL_TWO_COMPLEX
    if delta == 0:  # cannot happen for a squarefree quartic
        raise MultipleRootsError("resolvent has multiple roots")
    positives = _descartes_positive_count(res)
    if positives == 3:
        return RootClass.FOUR_REAL
    if positives == 1:
        return RootClass.TWO_CONJUGATE_PAIRS
    raise AssertionError(f"impossible sign pattern for resolvent {res}")


def _try_classify(d: DepressedQuartic) -> Optional[RootClass]:
    try:
        return classify_quartic(d)
    except (ValueError, MultipleRootsError):
        return None


def solve_biquadratic(d: DepressedQuartic) -> SolutionSet:
    """Roots of y^4 + p y^2 + r via t = y^2: +/- sqrt of each quadratic root."""
    if d.q != 0:
        raise ValueError("biquadratic substitution requires q = 0")
    tsol = solve_quadratic(1, d.p, d.r)
    roots: list[RadicalExpr] = []
    for t in tsol.roots:
        plus = simplify(root(t, 2, 0))
        roots.extend((plus, simplify(neg(plus))))
    return SolutionSet(tuple(roots), Method.BIQUADRATIC)


# -- dispatcher ----------------------------------------------------------------


def solve_any(f: Polynomial, method: str = "auto") -> SolutionSet:
    """Solve a polynomial of degree 1..4 in radicals.

    Multiple roots are stripped with the square-free split first (the
    repeated factor is solved recursively and the multisets merged), so the
    closed-form machinery only ever sees squarefree input.  Quartics honor
    ``method`` in {"ferrari", "euler", "auto"}; auto uses the symmetric
    method, or the biquadratic substitution when the depressed quartic has
    no linear term.
    """
    if method not in ("auto", "ferrari", "euler"):
        raise ValueError(f"unknown method {method!r}")
    if f.degree < 1 or f.degree > 4:
        raise ValueError(f"radical solving supports degree 1..4, got {f.degree}")
    sf, repeated = squarefree_part(f)
    extra: list[RadicalExpr] = []
    if repeated.degree >= 1:
        extra = list(solve_any(repeated, method).roots)

    deg = sf.degree
    if deg == 1:
        sol = solve_linear(sf.coeff(1), sf.coeff(0))
    elif deg == 2:
        sol = solve_quadratic(sf.coeff(2), sf.coeff(1), sf.coeff(0))
    elif deg == 3:
        sol = solve_cubic(sf)
    else:
        d = depress(sf)
        assert isinstance(d, DepressedQuartic)
        if method == "ferrari":
            sol = solve_quartic_ferrari(sf)
        elif d.q == 0:
            inner = solve_biquadratic(d)
            sol = SolutionSet(
                tuple(_unshift(inner.roots, d.shift)),
                Method.BIQUADRATIC,
                classification=_try_classify(d),
            )
        else:
            inner = solve_quartic_euler(d)
            sol = SolutionSet(
                tuple(_unshift(inner.roots, d.shift)),
                Method.EULER,
                classification=inner.classification,
            )
    if not extra:
        return sol
    return SolutionSet(
        sol.roots + tuple(extra),
        sol.method,
        casus_irreducibilis=sol.casus_irreducibilis,
        classification=None,
    )

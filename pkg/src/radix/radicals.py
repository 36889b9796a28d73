"""Radical expression trees: the output language of the closed-form solvers.

A tree is built from exact rational constants, roots of unity, field
operations and k-th roots with an explicit branch index.  The branch is part
of the syntax on purpose: the classical formulas are only correct for
particular pairings of root branches, and making the branch a plain integer
in the tree lets that choice be constructed, inspected and tested instead of
living implicitly in "the" cube root.

``Root(x, k, b)`` denotes the principal k-th root of x (argument in
(-pi/k, pi/k]) multiplied by e^(2*pi*i*b/k), and ``RootOfUnity(k, j)``
denotes e^(2*pi*i*j/k).

Numeric evaluation works bottom-up in mpmath complex arithmetic with an
interval-style error radius, retrying at doubled precision until the radius
certifies the requested number of bits.  One pragmatic convention: a root
radicand that lands on the negative real axis within a sliver of the working
precision is treated as exactly real (argument pi), so branch choices stay
stable across precisions; see ``eval_numeric``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from mpmath import mp, mpc, mpf
import mpmath

ExprLike = Union["RadicalExpr", int, Fraction]

MIN_PRECISION_BITS = 32
_LADDER_DOUBLINGS = 4  # precision retries before giving up


class DivisionNearZero(ArithmeticError):
    """An Inv child cannot be certified nonzero at any tried precision."""


@dataclass(frozen=True)
class RadicalExpr:
    """Base class for expression tree nodes; all nodes are immutable."""

    __slots__ = ()


@dataclass(frozen=True)
class Const(RadicalExpr):
    value: Fraction

    def __init__(self, value: Union[int, Fraction]):
        object.__setattr__(self, "value", Fraction(value))


@dataclass(frozen=True)
class RootOfUnity(RadicalExpr):
    """e^(2*pi*i*power/order); power is stored reduced mod order."""

    order: int
    power: int

    def __init__(self, order: int, power: int):
        if order < 1:
            raise ValueError("root of unity order must be >= 1")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "power", power % order)


@dataclass(frozen=True)
class Add(RadicalExpr):
    terms: tuple[RadicalExpr, ...]

    def __init__(self, terms: Iterable[RadicalExpr]):
        object.__setattr__(self, "terms", tuple(terms))


@dataclass(frozen=True)
class Mul(RadicalExpr):
    factors: tuple[RadicalExpr, ...]

    def __init__(self, factors: Iterable[RadicalExpr]):
        object.__setattr__(self, "factors", tuple(factors))


@dataclass(frozen=True)
class Neg(RadicalExpr):
    child: RadicalExpr


@dataclass(frozen=True)
class Inv(RadicalExpr):
    child: RadicalExpr

    def __post_init__(self):
        if self.child == Const(0):
            raise ZeroDivisionError("inverse of a literal zero")


@dataclass(frozen=True)
class Root(RadicalExpr):
    radicand: RadicalExpr
    index: int
    branch: int = 0

    def __post_init__(self):
        if self.index < 2:
            raise ValueError("root index must be >= 2")
        if not 0 <= self.branch < self.index:
            raise ValueError("branch must lie in [0, index)")


# -- construction helpers --------------------------------------------------


def const(x: Union[int, Fraction]) -> Const:
    return Const(x)


def _as_expr(x: ExprLike) -> RadicalExpr:
    return x if isinstance(x, RadicalExpr) else Const(x)


def add(*terms: ExprLike) -> Add:
    return Add(_as_expr(t) for t in terms)


def mul(*factors: ExprLike) -> Mul:
    return Mul(_as_expr(f) for f in factors)


def neg(x: ExprLike) -> Neg:
    return Neg(_as_expr(x))


def inv(x: ExprLike) -> Inv:
    return Inv(_as_expr(x))


def root(x: ExprLike, index: int, branch: int = 0) -> Root:
    return Root(_as_expr(x), index, branch)


def sqrt(x: ExprLike) -> Root:
    return Root(_as_expr(x), 2, 0)


# -- simplification ---------------------------------------------------------


def _rational_kth_root(value: Fraction, k: int) -> Fraction | None:
    """Exact nonnegative k-th root of a nonnegative rational, if one exists."""
    if value < 0:
        return None
    num = _int_kth_root(value.numerator, k)
    den = _int_kth_root(value.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _int_kth_root(n: int, k: int) -> int | None:
    if n == 0:
        return 0
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


def simplify(e: RadicalExpr) -> RadicalExpr:
    """Fold rational arithmetic and strip identities; value-preserving.

    The rule set is deliberately small: constant folding through the four
    field operations, exact rational roots of constants on the principal
    branch, flattening of nested sums/products, dropping additive zeros and
    multiplicative ones, double-negation removal, and canonicalization of
    roots of unity (including combining products of them).  No denesting of
    radicals is attempted.
    """
    if isinstance(e, (Const,)):
        return e
    if isinstance(e, RootOfUnity):
        return _simplify_unity(e)
    if isinstance(e, Neg):
        return _rewrite_neg(simplify(e.child))
    if isinstance(e, Inv):
        child = simplify(e.child)
        if child == Const(0):
            return Inv(e.child)  # keep the original; cannot build Inv(0)
        return _rewrite_inv(child)
    if isinstance(e, Root):
        return _rewrite_root(simplify(e.radicand), e.index, e.branch)
    if isinstance(e, Add):
        return _rewrite_add([simplify(t) for t in e.terms])
    if isinstance(e, Mul):
        return _rewrite_mul([simplify(f) for f in e.factors])
    raise TypeError(f"not a radical expression: {e!r}")


def _simplify_unity(e: RootOfUnity) -> RadicalExpr:
    g = gcd(e.power, e.order) if e.power else e.order
    k, j = e.order // g, e.power // g
    if k == 1:
        return Const(1)
    if k == 2:
        return Const(-1)
    return RootOfUnity(k, j)


def _rewrite_neg(child: RadicalExpr) -> RadicalExpr:
    if isinstance(child, Const):
        return Const(-child.value)
    if isinstance(child, Neg):
        return child.child
    if isinstance(child, Mul) and child.factors and isinstance(child.factors[0], Const):
        head = Const(-child.factors[0].value)
        return _rewrite_mul([head, *child.factors[1:]])
    return Neg(child)


def _rewrite_inv(child: RadicalExpr) -> RadicalExpr:
    if isinstance(child, Const):
        return Const(1 / child.value)
    if isinstance(child, Inv):
        return child.child
    return Inv(child)


def _rewrite_root(radicand: RadicalExpr, k: int, b: int) -> RadicalExpr:
    if isinstance(radicand, Const):
        v = radicand.value
        if v == 0:
            return Const(0)
        if v > 0 and b == 0:
            exact = _rational_kth_root(v, k)
            if exact is not None:
                return Const(exact)
        if v < 0 and k % 2 == 1 and b == (k - 1) // 2:
            # the middle branch of an odd root of a negative rational is real
            exact = _rational_kth_root(-v, k)
            if exact is not None:
                return Const(-exact)
    return Root(radicand, k, b)


def _rewrite_add(terms: list[RadicalExpr]) -> RadicalExpr:
    flat: list[RadicalExpr] = []
    total = Fraction(0)
    for t in terms:
        if isinstance(t, Add):
            inner_terms = list(t.terms)
        else:
            inner_terms = [t]
        for u in inner_terms:
            if isinstance(u, Const):
                total += u.value
            else:
                flat.append(u)
    if total != 0:
        flat.append(Const(total))
    if not flat:
        return Const(0)
    if len(flat) == 1:
        return flat[0]
    return Add(flat)


def _rewrite_mul(factors: list[RadicalExpr]) -> RadicalExpr:
    flat: list[RadicalExpr] = []
    coeff = Fraction(1)
    unity: RootOfUnity | None = None
    for f in factors:
        inner = list(f.factors) if isinstance(f, Mul) else [f]
        for u in inner:
            if isinstance(u, Const):
                coeff *= u.value
            elif isinstance(u, RootOfUnity):
                unity = u if unity is None else _combine_unity(unity, u)
            else:
                flat.append(u)
    if coeff == 0:
        return Const(0)
    if unity is not None:
        folded = _simplify_unity(unity)
        if isinstance(folded, Const):
            coeff *= folded.value
        else:
            flat.insert(0, folded)
    if coeff == 0:
        return Const(0)
    if not flat:
        return Const(coeff)
    if coeff == -1:
        return _rewrite_neg(flat[0] if len(flat) == 1 else Mul(flat))
    if coeff != 1:
        flat.insert(0, Const(coeff))
    if len(flat) == 1:
        return flat[0]
    return Mul(flat)


def _combine_unity(a: RootOfUnity, b: RootOfUnity) -> RootOfUnity:
    order = lcm(a.order, b.order)
    power = a.power * (order // a.order) + b.power * (order // b.order)
    return RootOfUnity(order, power)


# -- rendering ---------------------------------------------------------------


def render(e: RadicalExpr, fmt: str = "text") -> str:
    """Deterministic infix rendering; ``fmt`` is "text" or "latex"."""
    if fmt == "text":
        return _render_text(e)
    if fmt == "latex":
        return _render_latex(e)
    raise ValueError(f"unknown format {fmt!r} (expected 'text' or 'latex')")


def _is_negative_const(e: RadicalExpr) -> bool:
    return isinstance(e, Const) and e.value < 0


def _render_text(e: RadicalExpr) -> str:
    if isinstance(e, Const):
        return str(e.value)
    if isinstance(e, RootOfUnity):
        return f"w({e.order})^{e.power}"
    if isinstance(e, Root):
        inner = _render_text(e.radicand)
        if e.branch == 0:
            return f"sqrt({inner})" if e.index == 2 else f"root({e.index}, {inner})"
        return f"root({e.index}, {inner}, {e.branch})"
    if isinstance(e, Inv):
        return f"1/({_render_text(e.child)})"
    if isinstance(e, Neg):
        body = _render_text(e.child)
        if isinstance(e.child, (Add, Mul, Neg)) or body.startswith("-"):
            return f"-({body})"
        return f"-{body}"
    if isinstance(e, Mul):
        return "*".join(_text_mul_operand(f, first=(i == 0)) for i, f in enumerate(e.factors))
    if isinstance(e, Add):
        return _render_sum(e.terms, _render_text, _text_add_operand)
    raise TypeError(f"not a radical expression: {e!r}")


def _text_mul_operand(f: RadicalExpr, first: bool) -> str:
    body = _render_text(f)
    if isinstance(f, (Add, Neg)):
        return f"({body})"
    if body.startswith("-") and not first:
        return f"({body})"
    return body


def _text_add_operand(t: RadicalExpr) -> str:
    body = _render_text(t)
    return f"({body})" if isinstance(t, Add) else body


def _render_sum(terms: Sequence[RadicalExpr], rend, operand) -> str:
    if not terms:
        return "0"
    pieces: list[str] = []
    for i, t in enumerate(terms):
        sign = "+"
        show = t
        if isinstance(t, Neg):
            sign, show = "-", t.child
        elif _is_negative_const(t):
            sign, show = "-", Const(-t.value)  # type: ignore[union-attr]
        elif isinstance(t, Mul) and t.factors and _is_negative_const(t.factors[0]):
            head = Const(-t.factors[0].value)  # type: ignore[union-attr]
            sign, show = "-", Mul((head, *t.factors[1:]))
        body = operand(show)
        if i == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f"{sign}{body}")
    return "".join(pieces)


def _render_latex(e: RadicalExpr) -> str:
    if isinstance(e, Const):
        v = e.value
        if v.denominator == 1:
            return str(v.numerator)
        sign = "-" if v < 0 else ""
        return f"{sign}\\frac{{{abs(v.numerator)}}}{{{v.denominator}}}"
    if isinstance(e, RootOfUnity):
        return f"\\omega_{{{e.order}}}^{{{e.power}}}"
    if isinstance(e, Root):
        inner = _render_latex(e.radicand)
        base = f"\\sqrt{{{inner}}}" if e.index == 2 else f"\\sqrt[{e.index}]{{{inner}}}"
        if e.branch == 0:
            return base
        return f"{base}^{{({e.branch})}}"
    if isinstance(e, Inv):
        return f"\\frac{{1}}{{{_render_latex(e.child)}}}"
    if isinstance(e, Neg):
        body = _render_latex(e.child)
        if isinstance(e.child, (Add, Neg)) or body.startswith("-"):
            return f"-({body})"
        return f"-{body}"
    if isinstance(e, Mul):
        return " \\cdot ".join(
            _latex_mul_operand(f, first=(i == 0)) for i, f in enumerate(e.factors)
        )
    if isinstance(e, Add):
        return _render_sum(e.terms, _render_latex, _latex_add_operand)
    raise TypeError(f"not a radical expression: {e!r}")


def _latex_mul_operand(f: RadicalExpr, first: bool) -> str:
    body = _render_latex(f)
    if isinstance(f, (Add, Neg)):
        return f"({body})"
    if body.startswith("-") and not first:
        return f"({body})"
    return body


def _latex_add_operand(t: RadicalExpr) -> str:
    body = _render_latex(t)
    return f"({body})" if isinstance(t, Add) else body


# -- numeric evaluation -------------------------------------------------------


@dataclass(frozen=True)
class ComplexApprox:
    """A complex value with a certified error radius.

    Whenever the inputs met their own bounds, the true value lies within
    ``error_radius`` of ``real + imag*i``.
    """

    real: mpf
    imag: mpf
    error_radius: mpf

    def as_mpc(self) -> mpc:
        return mpc(self.real, self.imag)

    def magnitude(self) -> mpf:
        return abs(self.as_mpc())

    def distance(self, other: "ComplexApprox") -> mpf:
        return abs(self.as_mpc() - other.as_mpc())

    def __str__(self) -> str:
        return f"{mpmath.nstr(self.as_mpc(), 12)} (err<={mpmath.nstr(self.error_radius, 3)})"


class _NotCertified(Exception):
    """Internal: retry at a higher working precision."""


def eval_numeric(e: RadicalExpr, precision_bits: int = 128) -> ComplexApprox:
    """Evaluate a tree to ``precision_bits`` certified bits."""
    return eval_many([e], precision_bits)[0]


def eval_many(exprs: Sequence[RadicalExpr], precision_bits: int = 128) -> list[ComplexApprox]:
    """Evaluate several trees at once, sharing work across common subtrees.

    Evaluation runs at a working precision of 4x the request with an
    interval-style radius propagated through every node, then doubles the
    working precision (up to four times) whenever a radius fails to certify
    the requested bits or an Inv child cannot be certified nonzero.  A
    radicand whose computed value lies on the negative real axis within a
    sliver (2^(-3w/4) relatively) of the working precision is snapped to
    argument pi before a root is taken, so nested branch choices are stable
    instead of flapping with rounding noise; solution sets built with the
    pairing constraints are invariant under that convention, and the numeric
    oracle cross-checks the results independently.
    """
    if precision_bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}")
    work = 4 * precision_bits
    failure: Exception | None = None
    for _ in range(_LADDER_DOUBLINGS + 1):
        try:
            with mp.workprec(work + 20):
                target = mpf(2) ** (-precision_bits)
                memo: dict[RadicalExpr, tuple[mpc, mpf]] = {}
                out: list[tuple[mpc, mpf]] = [_eval(x, memo, work) for x in exprs]
                if all(r <= target * (1 + abs(v)) for v, r in out):
                    return [
                        ComplexApprox(real=v.real, imag=v.imag, error_radius=r)
                        for v, r in out
                    ]
                failure = _NotCertified("error radius above target")
        except _NotCertified as exc:
            failure = exc
        work *= 2
    raise DivisionNearZero(f"could not certify evaluation: {failure}")


def _eval(e: RadicalExpr, memo: dict, work: int) -> tuple[mpc, mpf]:
    cached = memo.get(e)
    if cached is not None:
        return cached
    slop = mpf(2) ** (6 - work)

    def rnd(v: mpc) -> mpf:
        return (abs(v) + 1) * slop

    if isinstance(e, Const):
        v = mpc(mpf(e.value.numerator) / e.value.denominator)
        res = (v, rnd(v))
    elif isinstance(e, RootOfUnity):
        t = mpf(2 * e.power) / e.order
        v = mpc(mpmath.cospi(t), mpmath.sinpi(t))
        res = (v, rnd(v))
    elif isinstance(e, Add):
        v, r = mpc(0), mpf(0)
        for term in e.terms:
            tv, tr = _eval(term, memo, work)
            v, r = v + tv, r + tr
        res = (v, r + rnd(v))
    elif isinstance(e, Mul):
        v, r = mpc(1), mpf(0)
        for factor in e.factors:
            fv, fr = _eval(factor, memo, work)
            v, r = v * fv, abs(v) * fr + abs(fv) * r + r * fr
        res = (v, r + rnd(v))
    elif isinstance(e, Neg):
        cv, cr = _eval(e.child, memo, work)
        res = (-cv, cr)
    elif isinstance(e, Inv):
        cv, cr = _eval(e.child, memo, work)
        mag = abs(cv)
        if mag <= 2 * cr:
            raise _NotCertified("Inv child not certified nonzero")
        v = 1 / cv
        res = (v, cr / (mag * (mag - cr)) + rnd(v))
    elif isinstance(e, Root):
        res = _eval_root(e, memo, work)
    else:
        raise TypeError(f"not a radical expression: {e!r}")
    memo[e] = res
    return res


def _eval_root(e: Root, memo: dict, work: int) -> tuple[mpc, mpf]:
    cv, cr = _eval(e.radicand, memo, work)
    k = e.index
    slop = mpf(2) ** (6 - work)
    mag = abs(cv)
    if mag <= cr:
        # the disk around the radicand contains zero: bound by magnitudes
        v = mpmath.root(cv, k) if mag > 0 else mpc(0)
        outer = (mag + cr) ** (mpf(1) / k)
        r = abs(v) + outer + slop
    else:
        snap = (mag + 1) * mpf(2) ** (-(3 * work) // 4)
        if cv.real < 0 and cv.imag != 0 and abs(cv.imag) <= snap:
            cv = mpc(cv.real, 0)  # sit exactly on the branch cut
        v = mpmath.root(cv, k)
        # |d(root)/dz| <= |root| / (k * (|z| - r)) over the disk
        r = abs(v) * cr / (k * (mag - cr)) * 2 + (abs(v) + 1) * slop
    if e.branch:
        t = mpf(2 * e.branch) / k
        unit = mpc(mpmath.cospi(t), mpmath.sinpi(t))
        v = v * unit
        r = r + (abs(v) + 1) * slop
    return (v, r)

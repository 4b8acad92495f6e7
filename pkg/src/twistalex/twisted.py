"""Twisted Alexander polynomials of 2-bridge knots.

For ``G = <x, y | R>`` with ``R = W x W^-1 y^-1`` and a parabolic
representation ``rho`` over ``Z[z]/(theta)``, let ``Phi(g) = rho(g) t^ab(g)``.
The twisted Alexander polynomial is

    det Phi(dR/dx) / det(Phi(y) - I) = det Phi(dR/dx) / (t - 1)^2,

well defined up to a factor ``+-t^(2k)``.  ``dR/dx`` is the Fox derivative.

Two routes compute ``Phi(dR/dx)``: a streaming scan over the letters of
``R`` that never materialises the group-ring element (used everywhere), and
the textbook one through :class:`GroupRingElement` (kept for cross-checks on
short words).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import IntPoly, LaurentPoly, Mat2, QuotientRing, RingElement
from .contfrac import is_p_admissible, validate_rational
from .errors import NotARepresentation, NotInHp, NotInvertible
from .parabolic import (
    X_LETTER,
    bridge_word,
    chi,
    free_reduce,
    relator,
    rep_poly,
    word_matrix,
    xy_entries,
)

__all__ = [
    "GroupRingElement",
    "fox_derivative",
    "phi_image",
    "fox_phi",
    "TwistedResult",
    "twisted_alexander",
    "twisted_alexander_via_group_ring",
    "lambda_poly",
    "LambdaResult",
    "torus_lambda",
    "twisted_alexander_torus",
    "classical_alexander_torus",
    "resolve_sign",
]


# ---------------------------------------------------------------------------
# free group ring


class GroupRingElement:
    """Finite integer combination of reduced words in the free group on ``x, y``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[tuple[int, ...], int] = {}
        for w, c in (terms or {}).items():
            if c:
                w = free_reduce(w)
                self.terms[w] = self.terms.get(w, 0) + c
        self.terms = {w: c for w, c in self.terms.items() if c}

    @classmethod
    def word(cls, w, coeff: int = 1) -> "GroupRingElement":
        return cls({tuple(w): coeff})

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        out: dict[tuple[int, ...], int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = free_reduce(w1 + w2)
                out[w] = out.get(w, 0) + c1 * c2
        return GroupRingElement(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"GroupRingElement({self.terms})"


def fox_derivative(word, gen: int) -> GroupRingElement:
    """Fox derivative of a word with respect to the generator ``gen`` (1 or 2).

    ``d(u v) = du + u dv``, ``d(g) = 1`` and ``d(g^-1) = -g^-1``.
    """
    terms: dict[tuple[int, ...], int] = {}
    prefix: list[int] = []
    for g in word:
        if g == gen:
            key = free_reduce(prefix)
            terms[key] = terms.get(key, 0) + 1
        elif g == -gen:
            key = free_reduce(prefix + [g])
            terms[key] = terms.get(key, 0) - 1
        prefix.append(g)
    return GroupRingElement(terms)


def phi_image(elem: GroupRingElement, ring: QuotientRing) -> Mat2:
    """``Phi`` of a group-ring element, as a 2x2 matrix of Laurent polynomials."""
    zero = LaurentPoly(ring, ())
    acc = Mat2(zero, zero, zero, zero)
    for w, c in elem.terms.items():
        m = word_matrix(w, ring)
        e = sum(1 if g > 0 else -1 for g in w)
        acc = acc + m.map(lambda v: LaurentPoly(ring, [(v * c).c], e))
    return acc


# ---------------------------------------------------------------------------
# streaming Fox derivative


def _times_s(ring: QuotientRing):
    d = ring.d
    tail = ring._tail
    if d == 1:
        c = -tail[0]
        return lambda v: (c * v[0],)

    def f(v):
        top = v[-1]
        if not top:
            return (0,) + v[:-1]
        return (-top * tail[0],) + tuple(v[j - 1] - top * tail[j] for j in range(1, d))

    return f


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def fox_phi(word, ring: QuotientRing, gen: int = X_LETTER) -> tuple[Mat2, Mat2]:
    """``Phi(d word / d gen)`` together with ``rho(word)``.

    A single left-to-right pass keeps the image of the current prefix and its
    ``t``-degree, adding the prefix image whenever ``gen`` is read and
    subtracting it (after the letter) when ``gen^-1`` is read.
    """
    zero = ring._zero
    one = ring.one.c
    times_s = _times_s(ring)
    a, b, c, d = one, zero, zero, one
    e = 0
    acc: dict[int, list] = {}

    def bump(sign: int):
        slot = acc.get(e)
        if slot is None:
            slot = acc[e] = [list(zero), list(zero), list(zero), list(zero)]
        for entry, val in zip(slot, (a, b, c, d)):
            for j, v in enumerate(val):
                if v:
                    entry[j] += sign * v

    for g in word:
        if g == gen:
            bump(1)
        if g == 1:
            b, d = _add(b, a), _add(d, c)
            e += 1
        elif g == -1:
            b, d = _sub(b, a), _sub(d, c)
            e -= 1
        elif g == 2:
            a, c = _add(a, times_s(b)), _add(c, times_s(d))
            e += 1
        elif g == -2:
            a, c = _sub(a, times_s(b)), _sub(c, times_s(d))
            e -= 1
        else:
            raise ValueError(f"bad letter {g}")
        if g == -gen:
            bump(-1)

    def entry(i: int) -> LaurentPoly:
        return LaurentPoly.from_dict(ring, {k: tuple(v[i]) for k, v in acc.items()})

    fox = Mat2(entry(0), entry(1), entry(2), entry(3))
    rho = Mat2(*(RingElement(ring, v) for v in (a, b, c, d)))
    return fox, rho


# ---------------------------------------------------------------------------
# twisted Alexander polynomial


@dataclass(frozen=True)
class TwistedResult:
    """Twisted Alexander polynomial of ``K(r)`` over ``ring``.

    ``raw`` is the quotient exactly as computed from the presentation; its
    class modulo ``t^(2k)`` is meaningful, so values at ``t = -1`` are taken
    from it.  ``delta`` is ``raw`` shifted to start at ``t^0``.
    ``sign_epsilon`` is the sign with ``epsilon * raw(1) = -2 / s`` when
    one exists, else None.
    """

    r: Fraction
    ring: QuotientRing
    raw: LaurentPoly
    delta: LaurentPoly
    sign_epsilon: int | None = field(default=None)

    def at(self, x: int) -> RingElement:
        return self.raw.evaluate(x)


def _ring_for(r: Fraction, theta) -> QuotientRing:
    if theta is None:
        return QuotientRing(rep_poly(r))
    if isinstance(theta, QuotientRing):
        return theta
    return QuotientRing(theta if isinstance(theta, IntPoly) else IntPoly(theta))


def _t_minus_1_squared(ring: QuotientRing) -> LaurentPoly:
    return LaurentPoly.from_ints(ring, [1, -2, 1])


def resolve_sign(value: RingElement, target: RingElement) -> int | None:
    if value == target:
        return 1
    if value == -target:
        return -1
    return None


def _epsilon(raw: LaurentPoly) -> int | None:
    ring = raw.ring
    try:
        target = ring.gen.inverse() * -2
    except NotInvertible:
        return None
    return resolve_sign(raw.evaluate(1), target)


def twisted_alexander(r, theta=None) -> TwistedResult:
    """Twisted Alexander polynomial of ``K(r)`` for the parabolic representation over
    ``Z[z]/(theta)``; ``theta`` defaults to the Riley polynomial of ``K(r)``.

    Raises :class:`NotARepresentation` when ``theta`` does not make ``rho`` kill
    the relator.
    """
    r = validate_rational(r)
    ring = _ring_for(r, theta)
    word = relator(bridge_word(r))
    fox, rho = fox_phi(word, ring)
    one, zero = ring.one, ring.zero
    if (rho.a, rho.b, rho.c, rho.d) != (one, zero, zero, one):
        raise NotARepresentation(
            f"{ring.modulus.format('z')} does not give a representation of K({r})"
        )
    raw = fox.det().exact_div(_t_minus_1_squared(ring))
    return TwistedResult(r, ring, raw, raw.canonical(), _epsilon(raw))


def twisted_alexander_via_group_ring(r, theta=None) -> TwistedResult:
    """Same polynomial through an explicit Fox derivative; quadratic, for short words."""
    r = validate_rational(r)
    ring = _ring_for(r, theta)
    word = relator(bridge_word(r))
    fox = phi_image(fox_derivative(word, X_LETTER), ring)
    raw = fox.det().exact_div(_t_minus_1_squared(ring))
    return TwistedResult(r, ring, raw, raw.canonical(), _epsilon(raw))


# ---------------------------------------------------------------------------
# the quotient lambda


@dataclass(frozen=True)
class LambdaResult:
    """``lambda = Delta(K(r)) / Delta(K(1/p))`` over ``Z[z]/chi_q``.

    The sign makes ``raw(1) = 1`` when ``raw(1)`` is a unit ``+-1``.  ``raw``
    keeps the exponents produced by the division, ``poly`` starts at ``t^0``.
    """

    r: Fraction
    p: int
    q: int
    raw: LaurentPoly
    poly: LaurentPoly
    numerator: TwistedResult
    denominator: TwistedResult


def lambda_poly(r, p: int, q: int | None = None) -> LambdaResult:
    r = validate_rational(r)
    q = p if q is None else q
    if p % q or q < 3:
        raise ValueError(f"q = {q} must be a divisor >= 3 of p = {p}")
    if not is_p_admissible(r, p):
        raise NotInHp(f"{r} is not {p}-admissible")
    ring = QuotientRing(chi(q))
    num = twisted_alexander(r, ring)
    den = twisted_alexander(Fraction(1, p), ring)
    raw = num.raw.exact_div(den.raw)
    if raw.evaluate(1) == -1:
        raw = -raw
    return LambdaResult(r, p, q, raw, raw.canonical(), num, den)


def torus_lambda(p: int, q: int) -> IntPoly:
    """``sum_(k=0)^(q-1) (-1)^k t^(2pk)``, the quotient for ``K(1/pq)`` in H(p)."""
    coeffs = [0] * (2 * p * (q - 1) + 1)
    for k in range(q):
        coeffs[2 * p * k] = (-1) ** k
    return IntPoly(coeffs)


def twisted_alexander_torus(p: int, ring: QuotientRing) -> LaurentPoly:
    """``b_1 + b_2 t^2 + ... + b_n t^(2n-2) + b_n t^(2n) + ... + b_1 t^(4n-2)`` for ``K(1/p)``.

    ``b_k`` is the (1,2) entry of ``(XY)^k`` in ``ring``; ``p = 2n + 1``.
    """
    n = (p - 1) // 2
    coeffs = [ring.zero] * (4 * n - 1)
    for k in range(1, n + 1):
        b = xy_entries(k, ring).b
        coeffs[2 * k - 2] = b
        coeffs[4 * n - 2 * k] = b
    return LaurentPoly(ring, coeffs)


def classical_alexander_torus(q: int) -> IntPoly:
    """``1 - t + t^2 - ... + t^(q-1)``, the Alexander polynomial of ``K(1/q)``."""
    return IntPoly([(-1) ** k for k in range(q)])

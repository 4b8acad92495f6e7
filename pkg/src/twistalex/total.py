"""Total twisted Alexander polynomials.

For a squarefree monic ``theta`` of degree ``d`` dividing the Riley polynomial,
replace ``s`` by the companion matrix ``C`` of ``theta``.  That gives a
representation ``Psi`` into ``GL(2d, Z)`` and

    D(t) = det Psi(dR/dx) / (t - 1)^(2d),

the product of the twisted Alexander polynomials over the ``d`` roots of
``theta``.  It has integer coefficients.  ``|D(1)| = 2^d`` and ``|D(-1)|``
is ``2^d`` times a perfect square.

Two routes are offered.  ``"psi"`` runs the Fox derivative directly on the
``2d x 2d`` integer matrices.  ``"reduced"`` computes the polynomial over
``Z[z]/(theta)`` first and then substitutes ``C`` into each coefficient, which
leaves a ``d x d`` determinant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import IntPoly, QuotientRing, bareiss_det
from .contfrac import validate_rational
from .errors import NotARepresentation
from .parabolic import bridge_word, chi, chi_tower, divisors_from_3, relator, rep_poly
from .twisted import TwistedResult, torus_lambda, twisted_alexander

__all__ = [
    "TotalResult",
    "SilverWilliams",
    "total_twisted",
    "total_from_twisted",
    "silver_williams_check",
    "total_torus",
    "torus_product",
]


@dataclass(frozen=True)
class TotalResult:
    r: Fraction
    theta: IntPoly
    d: int
    D: IntPoly
    route: str

    @property
    def at_1(self) -> int:
        return self.D(1)

    @property
    def at_neg1(self) -> int:
        return self.D(-1)


@dataclass(frozen=True)
class SilverWilliams:
    pow2_ok: bool
    square_ok: bool
    N: int | None

    @property
    def ok(self) -> bool:
        return self.pow2_ok and self.square_ok


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _psi_scan(word, C: list[list[int]]):
    """Fox derivative in x under Psi.  Returns ``({t-exponent: 2d x 2d matrix}, final Psi(word))``."""
    d = len(C)
    n = 2 * d
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    e = 0
    acc: dict[int, list[list[int]]] = {}

    def bump(sign: int):
        slot = acc.get(e)
        if slot is None:
            acc[e] = [[sign * v for v in row] for row in P]
        else:
            for srow, prow in zip(slot, P):
                for j, v in enumerate(prow):
                    if v:
                        srow[j] += sign * v

    for g in word:
        if g == 1:
            bump(1)
        if g == 1 or g == -1:
            sg = 1 if g == 1 else -1
            for row in P:
                for j in range(d):
                    row[d + j] += sg * row[j]
            e += sg
        elif g == 2 or g == -2:
            sg = 1 if g == 2 else -1
            right = [row[d:] for row in P]
            prod = _matmul(right, C)
            for row, pr in zip(P, prod):
                for j in range(d):
                    row[j] += sg * pr[j]
            e += sg
        else:
            raise ValueError(f"bad letter {g}")
        if g == -1:
            bump(-1)
    return acc, P


def _poly_matrix(acc: dict[int, list[list[int]]], size: int) -> list[list[IntPoly]]:
    lo = min(acc)
    hi = max(acc)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            row.append(IntPoly([acc[k][i][j] if k in acc else 0 for k in range(lo, hi + 1)]))
        out.append(row)
    return out


def _det(mat: list[list[IntPoly]]) -> IntPoly:
    return bareiss_det(mat, div=lambda a, b: a.exact_div(b), zero=IntPoly(), one=IntPoly([1]))


def _finish(det: IntPoly, d: int) -> IntPoly:
    D = det.exact_div(IntPoly([-1, 1]) ** (2 * d)).strip_low()
    return -D if D(1) < 0 or (D(1) == 0 and D.lead < 0) else D


def total_twisted(r, theta=None, route: str = "psi") -> TotalResult:
    """Total twisted Alexander polynomial of ``K(r)`` for ``theta``.

    ``theta`` defaults to the Riley polynomial of ``K(r)``.  The result is
    shifted to start at ``t^0`` and signed so that ``D(1) > 0``.
    """
    r = validate_rational(r)
    if theta is None:
        theta = rep_poly(r)
    ring = theta if isinstance(theta, QuotientRing) else QuotientRing(theta)
    ring.require_squarefree()
    d = ring.d
    C = ring.companion()
    if route == "psi":
        acc, final = _psi_scan(relator(bridge_word(r)), C)
        if final != [[int(i == j) for j in range(2 * d)] for i in range(2 * d)]:
            raise NotARepresentation(
                f"{ring.modulus.format('z')} does not give a representation of K({r})"
            )
        D = _finish(_det(_poly_matrix(acc, 2 * d)), d)
    elif route == "reduced":
        return total_from_twisted(twisted_alexander(r, ring))
    else:
        raise ValueError(f"unknown route {route!r}")
    return TotalResult(r, ring.modulus, d, D, route)


def total_from_twisted(tw: TwistedResult) -> TotalResult:
    """The total polynomial from a twisted polynomial already known over ``Z[z]/(theta)``."""
    ring = tw.ring
    ring.require_squarefree()
    d = ring.d
    C = ring.companion()
    powers = [[[int(i == j) for j in range(d)] for i in range(d)]]
    for _ in range(d - 1):
        powers.append(_matmul(powers[-1], C))
    acc = {}
    for k, c in tw.raw.terms():
        m = [[0] * d for _ in range(d)]
        for ci, pw in zip(c.c, powers):
            if ci:
                for i in range(d):
                    for j in range(d):
                        m[i][j] += ci * pw[i][j]
        acc[k] = m
    D = _det(_poly_matrix(acc, d)).strip_low()
    D = -D if D(1) < 0 or (D(1) == 0 and D.lead < 0) else D
    return TotalResult(tw.r, ring.modulus, d, D, "reduced")


def silver_williams_check(res: TotalResult) -> SilverWilliams:
    """``|D(1)| = 2^d`` and ``|D(-1)| = 2^d N^2``; ``N`` is None when not a square."""
    two_d = 1 << res.d
    pow2 = abs(res.at_1) == two_d
    v = abs(res.at_neg1)
    if v % two_d:
        return SilverWilliams(pow2, False, None)
    root = math.isqrt(v // two_d)
    if root * root != v // two_d:
        return SilverWilliams(pow2, False, None)
    return SilverWilliams(pow2, True, root)


def total_torus(p: int, q: int) -> IntPoly:
    """Closed form of the total polynomial of ``K(1/p)`` over ``chi_q`` for ``q | p``.

    With ``p = v q``, it is ``(sum_(k<v) (-1)^k t^(2kq))^deg(chi_q)`` times the
    ``q = p`` value for ``K(1/q)``, and that one is
    ``(1 + t^2)(1 + t^(2q))^((q-3)/2)`` divided by the values for the proper
    divisors ``u >= 3`` of ``q``.
    """
    if p % q or q < 3 or p % 2 == 0:
        raise ValueError(f"need odd p with divisor q >= 3, got p={p}, q={q}")
    if q != p:
        dq = chi(q).degree
        return torus_lambda(q, p // q) ** dq * total_torus(q, q)
    n = (p - 1) // 2
    full = IntPoly([1, 0, 1]) * IntPoly([1] + [0] * (2 * p - 1) + [1]) ** (n - 1)
    for u in divisors_from_3(p):
        if u < p:
            full = full.exact_div(total_torus(p, u))
    return full


def torus_product(p: int, route: str = "psi") -> tuple[IntPoly, IntPoly]:
    """``(prod over q | p of total(K(1/p), chi_q), (1 + t^2)(1 + t^(2p))^(n-1))``."""
    prod = IntPoly([1])
    for q, theta in chi_tower(p).items():
        prod = prod * total_twisted(Fraction(1, p), theta, route).D
    n = (p - 1) // 2
    return prod, IntPoly([1, 0, 1]) * IntPoly([1] + [0] * (2 * p - 1) + [1]) ** (n - 1)

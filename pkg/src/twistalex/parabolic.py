"""Parabolic SL(2) representations of 2-bridge knot groups.

The group of ``K(beta/alpha)`` has the presentation ``<x, y | W x = y W>``
with ``W = x^e1 y^e2 x^e3 ... y^e_(alpha-1)`` and ``e_k = (-1)^floor(k beta/alpha)``.
Sending

    x -> X = [[1, 1], [0, 1]],      y -> Y = [[1, 0], [s, 1]]

is a representation exactly when ``s`` is a root of the Riley polynomial
``a(z)``, the (1, 1) entry of the image of ``W``.  For the torus knot
``K(1/p)``, ``p = 2n + 1``, that polynomial is ``a_n(z)``, which factors as the
product of the ``chi_u`` over the divisors ``u >= 3`` of ``p``.

Words are tuples of nonzero ints: ``1`` is ``x``, ``-1`` is ``x^-1``, ``2`` is
``y`` and ``-2`` is ``y^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import _kernels
from .arith import IntPoly, Mat2, QuotientRing, RingElement
from .contfrac import validate_rational

__all__ = [
    "X_LETTER",
    "Y_LETTER",
    "BridgeWord",
    "bridge_word",
    "relator",
    "free_reduce",
    "invert_word",
    "rep_poly",
    "a_poly",
    "chi_tower",
    "chi",
    "divisors_from_3",
    "xy_power",
    "xy_entries",
    "xy_power_table",
    "b_closed_form",
    "generator_matrices",
    "word_matrix",
    "xy_identities",
]

X_LETTER = 1
Y_LETTER = 2


@dataclass(frozen=True)
class BridgeWord:
    """The word ``W`` of ``K(beta/alpha)``."""

    beta: int
    alpha: int
    letters: tuple[int, ...]

    @property
    def rational(self) -> Fraction:
        return Fraction(self.beta, self.alpha)


def bridge_word(r) -> BridgeWord:
    r = validate_rational(r)
    beta, alpha = r.numerator, r.denominator
    if alpha < 2**62 // max(abs(beta), 1):
        eps = [int(e) for e in _kernels.word_exponents(beta, alpha)]
    else:
        eps = [1 - 2 * ((k * beta // alpha) & 1) for k in range(1, alpha)]
    letters = tuple(
        e * (X_LETTER if k % 2 == 0 else Y_LETTER) for k, e in enumerate(eps)
    )
    return BridgeWord(beta, alpha, letters)


def invert_word(word: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-g for g in reversed(word))


def free_reduce(word) -> tuple[int, ...]:
    stack: list[int] = []
    for g in word:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return tuple(stack)


def relator(word: BridgeWord) -> tuple[int, ...]:
    """``R = W x W^-1 y^-1``."""
    w = word.letters
    return w + (X_LETTER,) + invert_word(w) + (-Y_LETTER,)


def rep_poly(r) -> IntPoly:
    """Riley polynomial ``a(z)`` of ``K(r)``: monic, degree ``(alpha - 1)/2``."""
    word = bridge_word(r)
    # only the first row of rho(W) is needed
    u, v = IntPoly([1]), IntPoly()
    for g in word.letters:
        if abs(g) == X_LETTER:
            v = v + u if g > 0 else v - u
        else:
            sv = v.shift(1)
            u = u + sv if g > 0 else u - sv
    if u.lead < 0:
        u = -u
    if u.lead != 1 or u.degree != (word.alpha - 1) // 2:
        raise AssertionError(f"unexpected Riley polynomial {u} for {word.rational}")
    return u


def a_poly(n: int) -> IntPoly:
    """``a_n(z) = sum_k C(n + k, 2k) z^k``, the (1, 1) entry of ``(XY)^n`` with ``s = z``."""
    return IntPoly([comb(n + k, 2 * k) for k in range(n + 1)])


def divisors_from_3(p: int) -> list[int]:
    return [u for u in range(3, p + 1) if p % u == 0]


def chi_tower(p: int) -> dict[int, IntPoly]:
    """``chi_u`` for every divisor ``u >= 3`` of the odd number ``p``.

    ``chi_u = a_((u-1)/2) / prod(chi_v : v | u, 3 <= v < u)``.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and >= 3, got {p}")
    tower: dict[int, IntPoly] = {}
    for u in divisors_from_3(p):
        poly = a_poly((u - 1) // 2)
        for v in divisors_from_3(u):
            if v < u:
                poly = poly.exact_div(tower[v])
        tower[u] = poly
    return tower


def chi(q: int) -> IntPoly:
    return chi_tower(q)[q]


def generator_matrices(ring: QuotientRing) -> tuple[Mat2, Mat2]:
    one, zero, s = ring.one, ring.zero, ring.gen
    return Mat2(one, one, zero, one), Mat2(one, zero, s, one)


def word_matrix(word, ring: QuotientRing) -> Mat2:
    """Image of a word under the parabolic representation over ``ring``."""
    X, Y = generator_matrices(ring)
    Xi = Mat2(X.d, -X.b, -X.c, X.a)
    Yi = Mat2(Y.d, -Y.b, -Y.c, Y.a)
    table = {1: X, -1: Xi, 2: Y, -2: Yi}
    m = Mat2(ring.one, ring.zero, ring.zero, ring.one)
    for g in word:
        m = m @ table[g]
    return m


def xy_power(k: int, ring: QuotientRing) -> Mat2:
    """``(XY)^k`` by the first-order recursion."""
    return xy_power_table(k, ring)[k]


def xy_entries(k: int, ring: QuotientRing) -> Mat2:
    """``(a_k, b_k, c_k, d_k)``, the entries of ``(XY)^k``, as a :class:`Mat2`."""
    return xy_power(k, ring)


def xy_power_table(k: int, ring: QuotientRing) -> list[Mat2]:
    """``[(XY)^0, ..., (XY)^k]``.

    ``a' = (1+s)a + s b``, ``b' = a + b``, ``c' = (1+s)c + s d``, ``d' = c + d``.
    """
    s = ring.gen
    one_s = s + 1
    m = Mat2(ring.one, ring.zero, ring.zero, ring.one)
    out = [m]
    for _ in range(k):
        m = Mat2(one_s * m.a + s * m.b, m.a + m.b, one_s * m.c + s * m.d, m.c + m.d)
        out.append(m)
    return out


def b_closed_form(k: int, ring: QuotientRing) -> RingElement:
    """``b_k = sum_(j=0)^(k-1) C(k + j, 2j + 1) s^j``."""
    return ring(IntPoly([comb(k + j, 2 * j + 1) for j in range(k)]))


def xy_identities(p: int, q: int) -> dict[str, bool]:
    """Check the standard identities for ``(XY)^k`` over ``Z[z]/chi_q``, ``q | p``.

    Here ``p = 2n + 1``; every identity uses ``a_n = 0``, which holds because
    ``chi_q`` divides ``a_n``.  Group-ring identities are checked on their
    matrix images, with ``1 -> I``.  Returns a name -> passed mapping.
    """
    if p % q:
        raise ValueError(f"{q} does not divide {p}")
    n = (p - 1) // 2
    ring = QuotientRing(chi(q))
    s = ring.gen
    zero, one = ring.zero, ring.one
    I = Mat2(one, zero, zero, one)
    X, Y = generator_matrices(ring)
    table = xy_power_table(max(3 * n + 2, p), ring)
    a = [m.a for m in table]
    b = [m.b for m in table]
    c = [m.c for m in table]
    d = [m.d for m in table]
    res: dict[str, bool] = {}

    res["a_n = 0"] = a[n].is_zero()
    res["initial values"] = (
        a[0] == 1 and d[0] == 1 and b[0] == 0 and c[0] == 0
        and a[1] == s + 1 and b[1] == 1 and c[1] == s and d[1] == 1
    )
    rng2 = range(2, n + 2)
    rng1 = range(1, n + 2)
    res["a_k = (2+s) a_(k-1) - a_(k-2)"] = all(a[k] == (s + 2) * a[k - 1] - a[k - 2] for k in rng2)
    res["s b_k = (1+s) a_(k-1) - a_(k-2)"] = all(s * b[k] == (s + 1) * a[k - 1] - a[k - 2] for k in rng2)
    res["s b_k = a_k - a_(k-1)"] = all(s * b[k] == a[k] - a[k - 1] for k in rng1)
    res["s b_k = c_k"] = all(s * b[k] == c[k] for k in rng1)
    res["a_k = s b_k + d_k"] = all(a[k] == s * b[k] + d[k] for k in rng1)
    res["d_k = a_(k-1)"] = all(d[k] == a[k - 1] for k in rng1)
    res["b_k = b_(k-1) + a_(k-1)"] = all(b[k] == b[k - 1] + a[k - 1] for k in rng1)
    res["c_k + d_k = a_k"] = all(c[k] + d[k] == a[k] for k in rng1)
    res["a_0 + ... + a_(k-1) = b_k"] = all(sum(a[:k], zero) == b[k] for k in rng1)
    res["b_k = sum_(i+j=k-1) a_i a_j - sum_(i+j=k) b_i c_j"] = all(
        b[k] == sum((a[i] * a[k - 1 - i] for i in range(k)), zero)
        - sum((b[i] * c[k - i] for i in range(k + 1)), zero)
        for k in range(1, n + 1)
    )
    res["b_k closed form"] = all(b[k] == b_closed_form(k, ring) for k in range(len(b)))

    yn = Y @ table[n]
    res["(XY)^n X = Y (XY)^n = [[0, b_n], [c_n, 0]]"] = (
        table[n] @ X == yn and yn == Mat2(zero, b[n], c[n], zero)
    )
    res["(XY)^p = -I"] = table[p] == -I
    bsum = sum(b[1 : n + 1], zero)
    res["a_0 + ... + a_(n-1) = b_n"] = sum(a[:n], zero) == b[n]
    res["s (b_1 + ... + b_n) = -1"] = s * bsum == -1
    res["b_1 + ... + b_n = b_n^2"] = bsum == b[n] * b[n]
    res["d_0 + ... + d_n = 1 + a_0 + ... + a_(n-1)"] = sum(d[: n + 1], zero) == sum(a[:n], one)
    res["c_1 + ... + c_n = -1"] = sum(c[1 : n + 1], zero) == -1

    # (YX)^k = Y (XY)^k Y^-1 = [[d_k, b_k], [c_k, a_k]]
    Yi = Mat2(one, zero, -s, one)
    yx = [Mat2(m.d, m.b, m.c, m.a) for m in table]
    res["(YX)^k = [[d_k, b_k], [c_k, a_k]]"] = all(
        yx[k] == Y @ table[k] @ Yi for k in range(3 * n + 3)
    )

    def Q(k: int) -> Mat2:
        acc = Mat2(zero, zero, zero, zero)
        for j in range(k + 1):
            acc = acc + yx[j]
        return acc

    Qn, Q2n, Q3n1 = Q(n), Q(2 * n), Q(3 * n + 1)
    res["Q_(3n+1) = Q_(2n) - Q_n"] = Q3n1 == Q2n - Qn
    one_m_y, one_m_x = I - Y, I - X
    one_p_y, one_p_x = I + Y, I + X
    res["(1-y) Q_n y (1-x) = -(yx)^(n+1) (1-x)"] = (
        one_m_y @ Qn @ Y @ one_m_x == -(yx[n + 1] @ one_m_x)
    )
    res["(1-y) Q_2n y (1-x) = 0"] = one_m_y @ Q2n @ Y @ one_m_x == Mat2(zero, zero, zero, zero)
    res["(1-y) Q_(3n+1) y (1-x) = -(yx)^(3n+2) (1-x)"] = (
        one_m_y @ Q3n1 @ Y @ one_m_x == -(yx[3 * n + 2] @ one_m_x)
    )
    bn = b[n]
    xyn_x = table[n] @ X
    yxn_y = yx[n] @ Y
    lhs1 = one_p_y @ Qn @ Y @ one_p_x
    res["(1+y) Q_n y (1+x) = (yx)^(n+1) (1+x) + 4 b_n (y + (yx)^(n+1))"] = (
        lhs1 == yx[n + 1] @ one_p_x + (Y + yx[n + 1]).scale(bn * 4)
    )
    res["(1+y) Q_n y (1+x) (1 + (xy)^n x) = (yx)^(n+1) (1+x) (1 + (xy)^n x) + 8 b_n (yx)^(n+1)"] = (
        lhs1 @ (I + xyn_x)
        == yx[n + 1] @ one_p_x @ (I + xyn_x) + yx[n + 1].scale(bn * 8)
    )
    lhs3 = one_p_y @ Q2n @ Y @ one_p_x
    res["(1+y) Q_2n y (1+x) = 8 b_n (yx)^(n+1)"] = lhs3 == yx[n + 1].scale(bn * 8)
    res["(1+y) Q_2n y (1+x) (1 + (yx)^n y) = -8 b_n (y - (yx)^(n+1))"] = (
        lhs3 @ (I + yxn_y) == (Y - yx[n + 1]).scale(bn * -8)
    )
    res["(1+y) Q_(3n+1) y (1+x) + (yx)^(n+1) (1+x) = -4 b_n (y - (yx)^(n+1))"] = (
        one_p_y @ Q3n1 @ Y @ one_p_x + yx[n + 1] @ one_p_x
        == (Y - yx[n + 1]).scale(bn * -4)
    )
    return res

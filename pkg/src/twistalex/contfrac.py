"""Continued fractions for 2-bridge knots.

All fractions use the subtractive convention

    [c1, c2, ..., cm] = 1 / (c1 - [c2, ..., cm]),   [] = 0,

so ``[2, 3] = 3/5``.  A knot ``K(beta/alpha)`` is given by a reduced rational
with ``alpha`` and ``beta`` odd and ``0 < |beta| < alpha``.

A *p-expansion* is an odd-length fraction ``[p*k1, 2*m1, p*k2, ..., p*k_(q+1)]``
with nonzero integers ``k_i`` and ``m_i``.  The knots admitting one form the
set H(p), the knots with an epimorphism onto the torus knot group of type
``(2, p)``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _kernels
from .errors import DegenerateFraction, InvalidRational, NotInHp

__all__ = [
    "ContinuedFraction",
    "parse_rational",
    "validate_rational",
    "cf_eval",
    "even_cf",
    "is_p_admissible",
    "to_p_expansion",
    "p_expansion",
    "merge_zeros",
    "normalize_mod4",
    "expansion_parity_odd",
    "enumerate_hp",
]


@dataclass(frozen=True)
class ContinuedFraction:
    """Entries of a continued fraction plus what kind of expansion they form.

    ``kind`` is ``"even"`` for the even continued fraction, ``"p"`` for a
    p-expansion (``p`` set) and ``"plain"`` otherwise.
    """

    entries: tuple[int, ...]
    kind: str = "plain"
    p: int | None = None

    def value(self) -> Fraction:
        return cf_eval(self.entries)

    @property
    def ks(self) -> tuple[int, ...]:
        """The ``k_i`` of a p-expansion."""
        self._need_p()
        return tuple(e // self.p for e in self.entries[0::2])

    @property
    def ms(self) -> tuple[int, ...]:
        """The ``m_i`` of a p-expansion."""
        self._need_p()
        return tuple(e // 2 for e in self.entries[1::2])

    @classmethod
    def from_km(cls, ks: Sequence[int], ms: Sequence[int], p: int) -> "ContinuedFraction":
        if len(ks) != len(ms) + 1:
            raise ValueError("need exactly one more k than m")
        out: list[int] = []
        for i, k in enumerate(ks):
            out.append(p * k)
            if i < len(ms):
                out.append(2 * ms[i])
        return cls(tuple(out), "p", p)

    def _need_p(self) -> None:
        if self.p is None:
            raise ValueError("not a p-expansion")

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "[" + ", ".join(str(e) for e in self.entries) + "]"


def parse_rational(value) -> Fraction:
    """Read ``"19/45"``, ``(19, 45)``, or a Fraction, rejecting non-coprime strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, tuple) and len(value) == 2:
        num, den = int(value[0]), int(value[1])
    elif isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                a, b = text.split("/", 1)
                num, den = int(a), int(b)
            else:
                num, den = int(text), 1
        except ValueError as exc:
            raise InvalidRational(f"cannot parse {value!r} as a rational") from exc
    else:
        raise InvalidRational(f"cannot interpret {value!r} as a rational")
    if den == 0:
        raise InvalidRational("zero denominator")
    if math.gcd(num, den) != 1:
        raise InvalidRational(f"{num}/{den} is not in lowest terms")
    return Fraction(num, den)


def validate_rational(value) -> Fraction:
    """Parse and check that the rational names a 2-bridge knot."""
    r = parse_rational(value)
    beta, alpha = r.numerator, r.denominator
    if alpha % 2 == 0 or beta % 2 == 0:
        raise InvalidRational(f"{r} needs odd numerator and denominator")
    if not 0 < abs(beta) < alpha:
        raise InvalidRational(f"{r} needs 0 < |beta| < alpha")
    return r


def cf_eval(entries: Sequence[int]) -> Fraction:
    """Value of ``[c1, ..., cm]``.

    Evaluation is projective, so an intermediate infinity (as in a trailing
    zero entry) is harmless; only an infinite final value is an error.
    """
    num, den = 0, 1
    for c in reversed(entries):
        num, den = den, c * den - num
    if den == 0:
        raise DegenerateFraction(f"{list(entries)} evaluates to infinity")
    return Fraction(num, den)


def even_cf(r) -> ContinuedFraction:
    """The unique continued fraction of ``r`` with even entries except an odd last one."""
    r = validate_rational(r)
    entries = tuple(_even_cf_bigint(r.numerator, r.denominator))
    return ContinuedFraction(entries, "even")


def _even_cf_bigint(beta: int, alpha: int) -> list[int]:
    num, den = alpha, beta
    out = []
    while True:
        if den < 0:
            num, den = -num, -den
        if den == 1:
            out.append(num)
            return out
        f = num // den
        c = f if f % 2 == 0 else f + 1
        out.append(c)
        num, den = den, c * den - num


def _check_p(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd integer >= 3, got {p}")


def is_p_admissible(r, p: int) -> bool:
    """Membership of ``K(r)`` in H(p), decided on the even continued fraction."""
    _check_p(p)
    return _expand(list(even_cf(r).entries), p) is not None


def _expand(seq: list[int], p: int) -> list[int] | None:
    """A p-expansion (possibly with zero entries) with the same value as ``seq``,
    or None when ``seq`` is not admissible.

    The front of ``seq`` is peeled two entries at a time; the pieces are then
    reassembled from the back.  ``[a, 2, b] = [a - 1, -2, b - 1]`` turns the
    odd-residue cases into multiples of ``p``.
    """
    two_p = 2 * p
    n = len(seq)
    ops: list[tuple[int, int, int]] = []
    first = seq[0]
    i = 0
    while True:
        rem = n - i
        if rem == 1:
            if first % two_p != p:
                return None
            break
        if rem == 2:
            return None
        a2 = seq[i + 1]
        res = first % two_p
        if res == 0:
            ops.append((0, first, a2))
            first = seq[i + 2]
        elif res == p + 1 and a2 == 2:
            ops.append((1, first, a2))
            first = seq[i + 2] - (p + 1)
        elif res == p - 1 and a2 == -2:
            ops.append((-1, first, a2))
            first = seq[i + 2] - (p - 1)
        else:
            return None
        i += 2
    rev = [first]
    for kind, a1, a2 in reversed(ops):
        if kind == 0:
            rev += [a2, a1]
        else:
            rev[-1] += p
            rev += [-2 * kind, a1 - kind]
    rev.reverse()
    return rev


def merge_zeros(entries: Sequence[int]) -> tuple[int, ...]:
    """Remove zero entries by value-preserving merges.

    ``[.., a, 0, b, ..] = [.., a + b, ..]`` for an interior zero, and a
    trailing ``[.., x, y, 0]`` collapses to ``[.., x]``.  A leading zero is
    left alone since dropping it changes the value.
    """
    out = list(entries)
    changed = True
    while changed:
        changed = False
        for i in range(1, len(out)):
            if out[i] != 0:
                continue
            if i < len(out) - 1:
                out[i - 1 : i + 2] = [out[i - 1] + out[i + 1]]
            elif len(out) >= 3:
                del out[-2:]
            else:
                continue
            changed = True
            break
    return tuple(out)


def to_p_expansion(r, p: int) -> ContinuedFraction:
    """A p-expansion of ``r``; raises :class:`NotInHp` when none exists."""
    _check_p(p)
    r = validate_rational(r)
    raw = _expand(list(even_cf(r).entries), p)
    if raw is None:
        raise NotInHp(f"{r} is not {p}-admissible")
    entries = merge_zeros(raw)
    if cf_eval(entries) != r:
        raise AssertionError(f"p-expansion {entries} does not evaluate to {r}")
    for i, e in enumerate(entries):
        if e == 0 or e % (p if i % 2 == 0 else 2):
            raise AssertionError(f"malformed p-expansion {entries}")
    return ContinuedFraction(entries, "p", p)


def p_expansion(entries, p: int) -> ContinuedFraction:
    """Check user-supplied entries ``[p k_1, 2 m_1, ..., p k_(q+1)]`` naming a knot.

    ``entries`` may be a sequence or text such as ``"[3,-4,3,2,3]"``.
    """
    _check_p(p)
    if isinstance(entries, str):
        try:
            entries = json.loads(entries)
        except ValueError as exc:
            raise InvalidRational(f"cannot parse {entries!r} as an expansion") from exc
    if not isinstance(entries, (list, tuple)) or not all(isinstance(e, int) for e in entries):
        raise InvalidRational(f"expected a list of integers, got {entries!r}")
    entries = tuple(entries)
    if len(entries) % 2 == 0:
        raise InvalidRational("a p-expansion has an odd number of entries")
    for i, e in enumerate(entries):
        if e == 0 or e % (p if i % 2 == 0 else 2):
            raise InvalidRational(f"{list(entries)} is not of the form [{p}k, 2m, ..., {p}k]")
    validate_rational(cf_eval(entries))
    return ContinuedFraction(entries, "p", p)


def normalize_mod4(cf: ContinuedFraction) -> ContinuedFraction:
    """Reduce a p-expansion to ``k_i`` in ``{0, 1, 2, 3}`` with no zero ``m`` or interior zero ``k``.

    Replacing ``k`` by ``k mod 4`` keeps the knot.  Zeros are then cleared:
    ``m = 0`` merges the neighbouring ``k``, an interior ``k = 0`` merges the
    neighbouring ``m``, a trailing ``(2m, 0)`` is dropped and so is a leading
    ``(0, 2m)``.  The last move changes the fraction but not the knot.  The
    steps repeat until nothing changes.
    """
    p = cf.p
    if p is None:
        raise ValueError("normalize_mod4 needs a p-expansion")
    ks = [k % 4 for k in cf.ks]
    ms = list(cf.ms)
    while True:
        if len(ks) == 1:
            break
        step = None
        for j in range(len(ms)):
            if ks[j] == 0 and (0 < j):
                step = ("k", j)
                break
            if ks[j] == 0 and j == 0:
                step = ("lead", 0)
                break
            if ms[j] == 0:
                step = ("m", j)
                break
        if step is None and ks[-1] == 0:
            step = ("trail", len(ks) - 1)
        if step is None:
            break
        kind, j = step
        if kind == "m":
            ks[j : j + 2] = [(ks[j] + ks[j + 1]) % 4]
            del ms[j]
        elif kind == "k":
            ms[j - 1 : j + 1] = [ms[j - 1] + ms[j]]
            del ks[j]
        elif kind == "lead":
            del ks[0]
            del ms[0]
        else:
            del ks[-1]
            del ms[-1]
    return ContinuedFraction.from_km(ks, ms, p)


def expansion_parity_odd(cf: ContinuedFraction) -> bool:
    """Whether a p-expansion evaluates to an odd/odd fraction: odd length and odd ``sum k``."""
    return len(cf.entries) % 2 == 1 and sum(cf.ks) % 2 == 1


def enumerate_hp(p: int, max_alpha: int) -> list[Fraction]:
    """Every ``beta/alpha`` in H(p) with ``0 < beta < alpha <= max_alpha``."""
    _check_p(p)
    betas, alphas = _kernels.scan_admissible(int(max_alpha), int(p))
    return [Fraction(int(b), int(a)) for b, a in zip(betas, alphas)]

"""The invariant ``mu`` of a knot in H(p).

``mu`` is a polynomial in ``b_n`` (the (1, 2) entry of ``(XY)^n``,
``p = 2n + 1``) determined by a recursion on p-expansions.  For

    r   = [p k1, 2 m1, ..., 2 mq, p k_(q+1)],
    r'  = [p k1, 2 m1, ..., 2 m_(q-1), p kq],
    r^  = [p k1, 2 m1, ..., 2 m_(q-1), p (kq + k_(q+1))],

we have ``mu(r) = nu mu(r') + mu(r^)`` with ``nu = mq b_n sigma(k_(q+1), M)``
and ``M = sum k mod 4``, starting from ``mu[0] = 0`` and
``mu[p] = mu[2p] = mu[3p] = -1``.  Every fraction is reduced by
:func:`normalize_mod4` before it is used, so ``k_(q+1)`` is always 1, 2 or 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import QuotientRing, RingElement
from .contfrac import ContinuedFraction, enumerate_hp, normalize_mod4, to_p_expansion
from .parabolic import chi, xy_entries

__all__ = [
    "SIGMA",
    "sigma",
    "mu",
    "mu_with_trace",
    "MuTrace",
    "mu_ring",
    "ClosedFormReport",
    "mu_closed_forms_check",
    "mu_minus_one_scan",
    "TheoremAReport",
    "theorem_a_check",
]

SIGMA = {
    1: (4, -8, -4, -8),
    2: (8, 8, -8, -8),
    3: (4, 8, 4, -8),
}


def sigma(k: int, m: int) -> int:
    return SIGMA[k][m]


@dataclass
class MuTrace:
    """One node of the recursion tree."""

    ks: tuple[int, ...]
    ms: tuple[int, ...]
    value: RingElement
    M: int | None = None
    nu: RingElement | None = None
    children: list["MuTrace"] = field(default_factory=list)

    def to_dict(self) -> dict:
        out: dict = {"k": list(self.ks), "m": list(self.ms), "value": list(self.value.c)}
        if self.M is not None:
            out["M"] = self.M
            out["nu"] = list(self.nu.c)
            out["children"] = [c.to_dict() for c in self.children]
        return out


def mu_ring(p: int, q: int | None = None) -> QuotientRing:
    return QuotientRing(chi(p if q is None else q))


class _Evaluator:
    def __init__(self, p: int, ring: QuotientRing, trace: bool):
        self.p = p
        self.ring = ring
        self.bn = xy_entries((p - 1) // 2, ring).b
        self.trace = trace
        self.memo: dict = {}

    def run(self, ks: tuple[int, ...], ms: tuple[int, ...]):
        norm = normalize_mod4(ContinuedFraction.from_km(ks, ms, self.p))
        ks, ms = norm.ks, norm.ms
        key = (ks, ms)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if len(ks) == 1:
            val = self.ring.zero if ks[0] == 0 else -self.ring.one
            node = MuTrace(ks, ms, val) if self.trace else None
            self.memo[key] = (val, node)
            return val, node
        M = sum(ks) % 4
        nu = self.bn * (ms[-1] * sigma(ks[-1], M))
        v1, n1 = self.run(ks[:-1], ms[:-1])
        v2, n2 = self.run(ks[:-2] + (ks[-2] + ks[-1],), ms[:-1])
        val = nu * v1 + v2
        node = MuTrace(ks, ms, val, M, nu, [n1, n2]) if self.trace else None
        self.memo[key] = (val, node)
        return val, node


def _expansion(r, p: int) -> ContinuedFraction:
    if isinstance(r, ContinuedFraction):
        if r.kind != "p" or r.p != p:
            raise ValueError("expected a p-expansion for the same p")
        return r
    return to_p_expansion(r, p)


def mu(r, p: int, q: int | None = None) -> RingElement:
    """``mu`` of ``K(r)`` in ``Z[z]/chi_q`` (``q`` defaults to ``p``).

    ``r`` is a rational in H(p) or a p-expansion.
    """
    return mu_with_trace(r, p, q, trace=False)[0]


def mu_with_trace(r, p: int, q: int | None = None, trace: bool = True) -> tuple[RingElement, MuTrace | None]:
    cf = _expansion(r, p)
    ev = _Evaluator(p, mu_ring(p, q), trace)
    return ev.run(cf.ks, cf.ms)


@dataclass(frozen=True)
class ClosedFormReport:
    """Outcome of :func:`mu_closed_forms_check`; falsy when anything failed."""

    checked: int
    failures: list[str]

    def __bool__(self) -> bool:
        return not self.failures


def mu_closed_forms_check(p: int, q: int | None = None, m_range: int = 3) -> ClosedFormReport:
    """Compare the recursion with the closed forms for expansions of length 3 and 5.

    With ``b = b_n``:  ``[p,2m,p] -> 4mb - 1``, ``[p,2m,2p] -> 8mb - 1``,
    ``[p,2m,3p] -> -4mb``, ``[2p,2m,2p] -> -8mb``, ``[2p,2m,3p] -> -8mb - 1``,
    ``[3p,2m,3p] -> -4mb - 1``, ``[p,2m1,p,2m2,p] -> -32 m1 m2 b^2 + 8(m1 + m2) b - 1``
    and ``[p,2m1,2p,2m2,2p] -> 64 m1 m2 b^2 - 8 m2 b - 1``.
    """
    ring = mu_ring(p, q)
    b = xy_entries((p - 1) // 2, ring).b
    ev = _Evaluator(p, ring, False)
    ms = [m for m in range(-m_range, m_range + 1) if m]
    cases = []
    for m in ms:
        cases += [
            ((1, 1), (m,), b * (4 * m) - 1),
            ((1, 2), (m,), b * (8 * m) - 1),
            ((1, 3), (m,), b * (-4 * m)),
            ((2, 2), (m,), b * (-8 * m)),
            ((2, 3), (m,), b * (-8 * m) - 1),
            ((3, 3), (m,), b * (-4 * m) - 1),
        ]
        for m2 in ms:
            cases += [
                ((1, 1, 1), (m, m2), b * b * (-32 * m * m2) + b * (8 * m + 8 * m2) - 1),
                ((1, 2, 2), (m, m2), b * b * (64 * m * m2) - b * (8 * m2) - 1),
            ]
    failures = []
    for ks, ms_, want in cases:
        got = ev.run(ks, ms_)[0]
        if got != want:
            cf = ContinuedFraction.from_km(ks, ms_, p)
            failures.append(f"{cf}: recursion {got}, closed form {want}")
    return ClosedFormReport(len(cases), failures)


def mu_minus_one_scan(p: int, max_alpha: int) -> list[tuple]:
    """Knots in H(p) with ``alpha <= max_alpha`` and ``mu = -1``, each with its mod-4 normal form."""
    ring = mu_ring(p)
    ev = _Evaluator(p, ring, False)
    hits = []
    for r in enumerate_hp(p, max_alpha):
        cf = to_p_expansion(r, p)
        if ev.run(cf.ks, cf.ms)[0] == -ring.one:
            hits.append((r, normalize_mod4(cf)))
    return hits


@dataclass(frozen=True)
class TheoremAReport:
    """Consistency of ``Delta``, ``lambda`` and ``mu`` for one knot in H(p), over ``chi_q``.

    ``checks`` maps a check name to whether it held.
    """

    r: object
    p: int
    q: int
    delta: "TwistedResult"
    lam: "LambdaResult"
    mu: RingElement
    epsilon: int | None
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def theorem_a_check(r, p: int, q: int | None = None) -> TheoremAReport:
    """Check ``eps Delta(1) = -2/s``, ``eps Delta(-1) = -2 mu^2 / s``,
    ``lambda(1) = 1``, ``lambda(-1) = mu^2`` and ``mu = -1 mod 4``."""
    from .twisted import lambda_poly

    q = p if q is None else q
    lam = lambda_poly(r, p, q)
    delta = lam.numerator
    ring = delta.ring
    m = mu(r, p, q)
    target = ring.gen.inverse() * -2
    eps = delta.sign_epsilon
    checks = {
        "eps Delta(1) = -2/s": eps is not None,
        "eps Delta(-1) = -2 mu^2/s": eps is not None and delta.at(-1) * eps == target * m * m,
        "lambda(1) = 1": lam.raw.evaluate(1) == 1,
        "lambda(-1) = mu^2": lam.raw.evaluate(-1) == m * m,
        "mu = -1 mod 4": all(c % 4 == 0 for c in (m + 1).c),
    }
    return TheoremAReport(lam.r, p, q, delta, lam, m, eps, checks)

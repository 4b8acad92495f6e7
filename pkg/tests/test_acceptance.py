"""Acceptance criteria, one test each, at zero tolerance.

Every test prints a single ``PASS``/``FAIL`` line so that ``pytest -s`` or
``pytest -v`` output doubles as a report.
"""

import random
from fractions import Fraction

import pytest

from oracles import cf_value, classical_alexander, knot_from_expansion, p_expandable, random_knot_rational, random_p_expansion
from twistalex.arith import IntPoly, LaurentPoly, QuotientRing
from twistalex.contfrac import enumerate_hp, even_cf, is_p_admissible, to_p_expansion
from twistalex.mu import mu, theorem_a_check
from twistalex.parabolic import chi, divisors_from_3, xy_identities
from twistalex.total import silver_williams_check, torus_product, total_torus, total_twisted
from twistalex.twisted import lambda_poly, twisted_alexander

SAMPLE = 50
MAX_ALPHA = 5000


@pytest.fixture
def report(capsys):
    def emit(n, text, failures):
        with capsys.disabled():
            status = "PASS" if not failures else "FAIL"
            print(f"\n{status} criterion {n}: {text}" + (f"  {failures[:3]}" if failures else ""))
        assert not failures

    return emit


def _t_power(k):
    return IntPoly([0] * k + [1])


def _ints(lam):
    return [lam.poly.coeff(k).c[0] if lam.poly.coeff(k).is_scalar() else None for k in range(lam.poly.span + 1)]


@pytest.fixture(scope="module")
def corpus():
    """50 knots from each of H(3), H(5), H(7) with alpha <= 5000, seeded."""
    out = {}
    for p in (3, 5, 7):
        members = enumerate_hp(p, MAX_ALPHA)
        out[p] = random.Random(1000 + p).sample(members, SAMPLE)
    return out


def test_criterion_1_delta_golden(report):
    failures = []
    for r, want in [("1/3", [1, 0, 1]), ("3/5", [1, -4, 1])]:
        d = twisted_alexander(r).delta
        if not d.equal_up_to_unit_shift(LaurentPoly.from_ints(d.ring, want)):
            failures.append(r)
    d = twisted_alexander("3/7").delta
    ring = d.ring
    c = ring(IntPoly([-4, 0, -1]))
    if not d.equal_up_to_unit_shift(LaurentPoly(ring, [c, ring(4), c])):
        failures.append("3/7")
    report(1, "twisted Alexander golden values for 1/3, 3/5, 3/7", failures)


def test_criterion_2_lambda_golden(report):
    failures = []
    lam = lambda_poly("19/45", 3)
    if _ints(lam) != [25, -72, 95, -72, 25]:
        failures.append(("19/45", _ints(lam)))
    if lam.raw.evaluate(1).c != (1,) or lam.raw.evaluate(-1).c != (289,):
        failures.append("19/45 values")
    lam = lambda_poly("37/213", 3)
    want = [4, -16, 28, -32, 28, -16, 8, -8, 4, 0, -8, 16, -15, 16, -8, 0, 4, -8, 8, -16, 28, -32, 28, -16, 4]
    if _ints(lam) != want:
        failures.append(("37/213", _ints(lam)))
    if lam.raw.evaluate(1).c != (1,) or lam.raw.evaluate(-1).c != (225,):
        failures.append("37/213 values")
    report(2, "lambda golden values for 19/45 and 37/213, lambda(1)=1, lambda(-1) in {289, 225}", failures)


def test_criterion_3_mu_golden(report):
    from twistalex.contfrac import p_expansion

    failures = []
    if mu(p_expansion([3, -4, 3, 2, 3], 3), 3) != 55:
        failures.append("[3,-4,3,2,3]")
    if mu(p_expansion([6, 2, 6, -2, 9], 3), 3) != -57:
        failures.append("[6,2,6,-2,9]")
    r5 = QuotientRing(chi(5))
    if mu(p_expansion([5, 2, 10], 5), 5) != r5(IntPoly([15, 8])):
        failures.append("[5,2,10]")
    r7 = QuotientRing(chi(7))
    if mu(p_expansion([7, -2, 14], 7), 7) != r7(IntPoly([-25, -32, -8])):
        failures.append("[7,-2,14]")
    report(3, "mu golden values 55, -57, 8s+15, -25-32s-8s^2", failures)


def test_criterion_4_consistency(report, corpus):
    failures = []
    for p, rs in corpus.items():
        for r in rs:
            rep = theorem_a_check(r, p)
            if not rep.ok:
                failures.append((p, str(r), rep.checks))
    report(4, f"Delta, lambda and mu consistency on {SAMPLE} knots from each of H(3), H(5), H(7), alpha <= {MAX_ALPHA}", failures)


def test_criterion_5_total_golden(report):
    golden = {
        "3/5": (IntPoly([1, -4, 1]) ** 2, 2, 3),
        "3/7": (IntPoly([25, -104, 219, -272, 219, -104, 25]), 3, 11),
        "5/9": (IntPoly([41, -376, 1428, -2984, 3798, -2984, 1428, -376, 41]), 4, 29),
    }
    failures = []
    for r, (D, d, n) in golden.items():
        res = total_twisted(r)
        sw = silver_williams_check(res)
        if res.D != D or res.d != d or not sw.ok or sw.N != n:
            failures.append((r, res.d, sw))
    report(5, "total polynomials of 3/5, 3/7, 5/9 with (d, N) = (2,3), (3,11), (4,29)", failures)


def test_criterion_6_torus_totals(report):
    one = IntPoly([1])
    t = _t_power
    cases = {
        (9, 3): (one + t(2)) * (one - t(6) + t(12)),
        (9, 9): (one + t(18)) ** 2 * (one + t(6)),
        (15, 15): (one - t(2) + t(4)) * (one + t(10)) * (one + t(30)) ** 3,
    }
    failures = []
    for (p, q), want in cases.items():
        if total_torus(p, q) != want:
            failures.append(("closed form", p, q))
        if total_twisted(Fraction(1, p), chi(q)).D != want:
            failures.append(("computed", p, q))
    for p in (9, 15):
        prod, want = torus_product(p)
        if prod != want:
            failures.append(("product", p))
    report(6, "torus knot totals for (9,3), (9,9), (15,15) and the product identity for p = 9, 15", failures)


def test_criterion_7_xy_identities(report):
    failures = []
    count = 0
    for p in (3, 5, 7, 9, 15):
        for q in divisors_from_3(p):
            res = xy_identities(p, q)
            count += len(res)
            failures += [(p, q, name) for name, ok in res.items() if not ok]
    report(7, f"{count} (XY)^k identity checks over every chi_q, q | p, p in 3, 5, 7, 9, 15", failures)


def test_criterion_8_continued_fractions(report):
    failures = []
    r = Fraction(12225937, 33493827)
    if even_cf(r).entries != (2, -2, -2, -2, 6, 2, 2, 2, 10, 6, 18, -2, -4, -2, -2, -2, 5):
        failures.append("even continued fraction")
    if to_p_expansion(r, 3).entries != (3, 4, 6, -4, 9, 6, 18, -2, -3, 4, 6):
        failures.append("3-expansion")

    positives = 0
    for p in (3, 5, 7):
        rng = random.Random(200 + p)
        for _ in range(1000):
            q = random_knot_rational(rng, 2001)
            if is_p_admissible(q, p) != p_expandable(q, p):
                failures.append(("admissible vs expandable", p, str(q)))
        seen = 0
        while seen < 100:
            q = knot_from_expansion(random_p_expansion(rng, p), max_alpha=10**6)
            if q is None:
                continue
            seen += 1
            positives += is_p_admissible(q, p)
            if not is_p_admissible(q, p) or not p_expandable(q, p):
                failures.append(("expansion not admissible", p, str(q)))

    rng = random.Random(9)
    checked = 0
    while checked < 500:
        k = rng.randint(1, 6)
        head = [rng.choice([-6, -4, -2, 2, 4, 6, 8]) for _ in range(rng.randint(0, 4))]
        tail = [rng.choice([-6, -4, -2, 3, 4, 5, 6]) for _ in range(rng.randint(0, 4))]
        a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        lhs = cf_value(head + [a] + [2] * k + [b] + tail)
        rhs = cf_value(head + [a - 1, -(k + 1), b - 1] + tail)
        if lhs is None or rhs is None:
            continue
        checked += 1
        if lhs != rhs:
            failures.append(("two-run rewrite", head, a, k, b, tail))
    report(8, f"expansion example, admissible = expandable on 3000 random + {positives} expansion rationals,"
              " two-run rewrites on 500 contexts", failures)


def test_criterion_9_torus_cables(report):
    failures = []
    for p, q in [(3, 3), (3, 5), (5, 3), (3, 7)]:
        lam = lambda_poly(Fraction(1, p * q), p)
        alex = classical_alexander(1, q)
        stretched = [0] * (2 * p * (len(alex) - 1) + 1)
        for i, c in enumerate(alex):
            stretched[2 * p * i] = c
        got = _ints(lam)
        if got != stretched and got != [-c for c in stretched]:
            failures.append((p, q, got))
    report(9, "lambda(1/pq) = Alexander polynomial of K(1/q) at t^(2p)", failures)


def test_criterion_10_lambda_degree(report, corpus):
    failures = []
    knots = set(enumerate_hp(3, 400)) | set(corpus[3])
    for r in sorted(knots):
        span = lambda_poly(r, 3).poly.span
        if span % 4:
            failures.append((str(r), span))
    report(10, f"deg lambda divisible by 4 on {len(knots)} knots in H(3)", failures)

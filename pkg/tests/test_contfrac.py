import os
import random
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import cf_value, knot_from_expansion, p_expandable, random_knot_rational, random_p_expansion
from twistalex import _kernels
from twistalex.contfrac import (
    ContinuedFraction,
    cf_eval,
    enumerate_hp,
    even_cf,
    expansion_parity_odd,
    is_p_admissible,
    merge_zeros,
    normalize_mod4,
    p_expansion,
    parse_rational,
    to_p_expansion,
    validate_rational,
)
from twistalex.errors import DegenerateFraction, InvalidRational, NotInHp


@st.composite
def knot_rationals(draw, max_alpha=4001):
    alpha = draw(st.integers(1, (max_alpha - 1) // 2)) * 2 + 1
    beta = draw(st.integers(0, (alpha - 3) // 2)) * 2 + 1
    sign = draw(st.sampled_from([1, -1]))
    assume(np.gcd(alpha, beta) == 1)
    return Fraction(sign * beta, alpha)


def test_cf_eval_values():
    assert cf_eval([2, 3]) == Fraction(3, 5)
    assert cf_eval([3, 2, 3, 2, -3]) == Fraction(29, 69)
    assert cf_eval([3, 4, 6, -4, 9, 6, 18, -2, -3, 4, 6]) == Fraction(12225937, 33493827)
    assert cf_eval([]) == 0
    with pytest.raises(DegenerateFraction):
        cf_eval([0])


@given(st.lists(st.integers(-12, 12), min_size=1, max_size=10))
def test_cf_eval_matches_top_down(entries):
    ref = cf_value(entries)
    if ref is None:
        return  # projective evaluation may still be finite here
    assert cf_eval(entries) == ref


def test_even_cf_examples():
    assert even_cf("3/5").entries == (2, 3)
    assert even_cf("1/3").entries == (3,)
    assert even_cf(Fraction(12225937, 33493827)).entries == (
        2, -2, -2, -2, 6, 2, 2, 2, 10, 6, 18, -2, -4, -2, -2, -2, 5,
    )


@given(knot_rationals())
def test_even_cf_shape_and_value(r):
    entries = even_cf(r).entries
    assert cf_eval(entries) == r
    assert all(c % 2 == 0 and c != 0 for c in entries[:-1])
    assert entries[-1] % 2 == 1 and abs(entries[-1]) >= 3


def test_validation():
    for bad in ["2/5", "3/4", "5/3", "0/1", "3/9", "a/b", "3/0"]:
        with pytest.raises(InvalidRational):
            validate_rational(bad)
    assert validate_rational("-19/45") == Fraction(-19, 45)
    assert parse_rational((19, 45)) == Fraction(19, 45)


def test_example_expansion():
    r = Fraction(12225937, 33493827)
    cf = to_p_expansion(r, 3)
    assert cf.entries == (3, 4, 6, -4, 9, 6, 18, -2, -3, 4, 6)
    assert cf.ks == (1, 2, 3, 6, -1, 2)
    assert cf.ms == (2, -2, 3, -1, 2)


def test_known_membership():
    assert is_p_admissible("19/45", 3)
    assert not is_p_admissible("19/85", 3)
    assert is_p_admissible("19/85", 5)
    assert is_p_admissible("29/217", 7)
    assert to_p_expansion("19/85", 5).entries == (5, 2, 10)
    assert to_p_expansion("29/217", 7).entries == (7, -2, 14)
    with pytest.raises(NotInHp):
        to_p_expansion("3/5", 3)


@pytest.mark.parametrize("p", [3, 5, 7, 9])
def test_admissible_equals_expandable(p):
    rng = random.Random(100 + p)
    for _ in range(300):
        r = random_knot_rational(rng, 1500)
        assert is_p_admissible(r, p) == p_expandable(r, p), r


@pytest.mark.parametrize("p", [3, 5, 7])
def test_random_expansions_round_trip(p):
    rng = random.Random(p)
    seen = 0
    while seen < 200:
        entries = random_p_expansion(rng, p)
        r = knot_from_expansion(entries)
        if r is None:
            continue
        seen += 1
        assert is_p_admissible(r, p)
        cf = to_p_expansion(r, p)
        assert cf.value() == r
        assert all(k != 0 for k in cf.ks) and all(m != 0 for m in cf.ms)
        assert expansion_parity_odd(ContinuedFraction(tuple(entries), "p", p))


def test_parity_rule():
    rng = random.Random(9)
    for _ in range(500):
        p = rng.choice([3, 5, 7])
        entries = random_p_expansion(rng, p)
        v = cf_value(entries)
        if v is None or v == 0:
            continue
        odd = v.numerator % 2 == 1 and v.denominator % 2 == 1
        assert odd == expansion_parity_odd(ContinuedFraction(tuple(entries), "p", p))


def test_two_run_rewrites():
    rng = random.Random(4)
    checked = 0
    while checked < 300:
        k = rng.randint(1, 5)
        head = [rng.choice([-6, -4, 4, 6, 8]) for _ in range(rng.randint(0, 3))]
        tail = [rng.choice([-6, -4, 3, 4, 5, 6]) for _ in range(rng.randint(0, 3))]
        a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        lhs = cf_value(head + [a] + [2] * k + [b] + tail)
        rhs = cf_value(head + [a - 1, -(k + 1), b - 1] + tail)
        if lhs is None or rhs is None:
            continue
        checked += 1
        assert lhs == rhs


def test_merge_zeros():
    for entries in [(3, 2, 6, 0, 3), (3, 4, 0, 2, 3), (3, 2, 6, 4, 0), (9, -2, 0, 2, 3, 4, 3)]:
        merged = merge_zeros(entries)
        assert 0 not in merged[1:]
        assert cf_eval(merged) == cf_eval(entries)


def test_normalize_mod4():
    p = 3
    assert normalize_mod4(ContinuedFraction.from_km([1, 4, 2], [1, -1], p)).entries == (9,)
    assert normalize_mod4(ContinuedFraction.from_km([7, 1], [1], p)).entries == (9, 2, 3)
    assert normalize_mod4(ContinuedFraction.from_km([4, 1, 1], [3, 2], p)).entries == (3, 4, 3)
    assert normalize_mod4(ContinuedFraction.from_km([1, 2], [0], p)).entries == (9,)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6), st.lists(st.integers(-4, 4), min_size=5, max_size=5))
def test_normalize_mod4_is_fixpoint(ks, ms):
    cf = ContinuedFraction.from_km(ks, ms[: len(ks) - 1], 3)
    norm = normalize_mod4(cf)
    assert all(0 <= k <= 3 for k in norm.ks)
    assert normalize_mod4(norm) == norm
    if len(norm.ks) > 1:
        assert all(norm.ks[1:-1]) and norm.ks[0] and norm.ks[-1] and all(norm.ms)


# kernels -------------------------------------------------------------------


def _py(f):
    return getattr(f, "py_func", f)


def test_kernel_even_cf_matches_python():
    rng = random.Random(7)
    buf = np.empty(5003, dtype=np.int64)
    for _ in range(300):
        r = random_knot_rational(rng, 5001)
        n = _kernels.even_cf_into(r.numerator, r.denominator, buf)
        assert tuple(int(x) for x in buf[:n]) == even_cf(r).entries


@pytest.mark.parametrize("p", [3, 5, 7])
def test_kernel_admissibility_matches_python(p):
    rng = random.Random(p)
    rs = [random_knot_rational(rng, 3001) for _ in range(400)]
    betas = np.array([r.numerator for r in rs], dtype=np.int64)
    alphas = np.array([r.denominator for r in rs], dtype=np.int64)
    got = _kernels.admissible_batch(betas, alphas, p)
    interp = _py(_kernels.admissible_batch)(betas, alphas, p)
    want = np.array([is_p_admissible(r, p) for r in rs])
    assert (got == want).all() and (interp == want).all()


def test_scan_compiled_and_interpreted_agree():
    b1, a1 = _kernels.scan_admissible(151, 3)
    total = _py(_kernels.count_admissible)(151, 3)
    b2 = np.empty(total, dtype=np.int64)
    a2 = np.empty(total, dtype=np.int64)
    _py(_kernels._fill_admissible)(151, 3, b2, a2)
    assert (b1 == b2).all() and (a1 == a2).all()


def test_enumerate_hp_brute_force():
    got = set(enumerate_hp(5, 201))
    want = {
        Fraction(b, a)
        for a in range(3, 202, 2)
        for b in range(1, a, 2)
        if np.gcd(a, b) == 1 and p_expandable(Fraction(b, a), 5)
    }
    assert got == want


def test_word_exponents():
    e = _kernels.word_exponents(3, 7)
    assert list(e) == [1 - 2 * ((k * 3 // 7) % 2) for k in range(1, 7)]


def test_disable_flag_falls_back_to_python():
    env = dict(os.environ, TWISTALEX_DISABLE_NUMBA="1")
    code = (
        "from twistalex import _kernels as k\n"
        "from twistalex.contfrac import enumerate_hp\n"
        "print(k.NUMBA_ENABLED, len(enumerate_hp(3, 101)))"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", str(len(enumerate_hp(3, 101)))]


def test_p_expansion_input():
    cf = p_expansion("[3,-4,3,2,3]", 3)
    assert cf.ks == (1, 1, 1) and cf.ms == (-2, 1)
    assert p_expansion((5, 2, 10), 5).value() == Fraction(19, 85)
    for bad in ["[3,-4,3,2]", "[3,-3,3]", "[3,4,3]", "[0]", "3/5", "[3, 2.0, 3]"]:
        with pytest.raises(ValueError):
            p_expansion(bad, 3)

from math import comb

import pytest

from twistalex.arith import IntPoly, Mat2, QuotientRing
from twistalex.parabolic import (
    a_poly,
    b_closed_form,
    bridge_word,
    chi,
    chi_tower,
    divisors_from_3,
    free_reduce,
    generator_matrices,
    relator,
    rep_poly,
    word_matrix,
    xy_entries,
    xy_identities,
    xy_power,
)


def test_bridge_word():
    w = bridge_word("3/7")
    assert w.letters == (1, 2, -1, -2, 1, 2)
    assert len(bridge_word("19/45").letters) == 44


def test_free_reduce():
    assert free_reduce((1, 2, -2, -1, 2)) == (2,)
    assert free_reduce(relator(bridge_word("1/3"))) == (1, 2, 1, -2, -1, -2)


@pytest.mark.parametrize(
    "r, coeffs",
    [("3/5", [1, -1, 1]), ("3/7", [1, 2, 1, 1]), ("1/3", [1, 1]), ("1/5", [1, 3, 1])],
)
def test_rep_poly_examples(r, coeffs):
    assert rep_poly(r) == IntPoly(coeffs)


@pytest.mark.parametrize("r", ["3/5", "3/7", "5/9", "7/17", "19/45"])
def test_rep_poly_root_gives_representation(r):
    ring = QuotientRing(rep_poly(r))
    w = bridge_word(r)
    X, Y = generator_matrices(ring)
    W = word_matrix(w.letters, ring)
    assert W @ X == Y @ W
    assert rep_poly(r).degree == (w.alpha - 1) // 2


def test_a_poly_matches_xy_power():
    for n in range(1, 9):
        ring = QuotientRing(IntPoly([0] * (n + 2) + [1]))  # large enough to be exact
        assert xy_power(n, ring).a.to_poly() == a_poly(n)
        assert a_poly(n) == IntPoly([comb(n + k, 2 * k) for k in range(n + 1)])


def test_chi_values():
    assert chi(3) == IntPoly([1, 1])
    assert chi(9) == IntPoly([1, 9, 6, 1])
    assert chi(15) == IntPoly([1, 24, 26, 9, 1])
    assert chi(21) == IntPoly([1, 48, 148, 146, 64, 13, 1])


@pytest.mark.parametrize("p", [3, 5, 7, 9, 15, 21, 25])
def test_chi_tower_product(p):
    prod = IntPoly([1])
    for f in chi_tower(p).values():
        prod = prod * f
    assert prod == a_poly((p - 1) // 2)
    assert sum(f.degree for f in chi_tower(p).values()) == (p - 1) // 2


def test_b_closed_form_matches_recursion():
    ring = QuotientRing(IntPoly([0] * 12 + [1]))
    for k in range(10):
        assert xy_power(k, ring).b == b_closed_form(k, ring)


@pytest.mark.parametrize("p", [3, 5, 7, 9, 15])
def test_xy_identities(p):
    for q in divisors_from_3(p):
        res = xy_identities(p, q)
        assert all(res.values()), [k for k, v in res.items() if not v]


def test_xy_identities_rejects_non_divisor():
    with pytest.raises(ValueError):
        xy_identities(9, 5)


def test_word_matrix_inverse():
    ring = QuotientRing([1, 1])
    m = word_matrix((1, 2, -1, -2), ring)
    inv = word_matrix((2, 1, -2, -1), ring)
    one, zero = ring.one, ring.zero
    assert m @ inv == Mat2(one, zero, zero, one)


def test_xy_entries_examples():
    ring = QuotientRing(chi(7))
    s, one = ring.gen, ring.one
    assert xy_entries(0, ring) == Mat2(one, ring.zero, ring.zero, one)
    assert xy_entries(1, ring) == Mat2(s + 1, one, s, one)
    assert xy_entries(2, ring) == Mat2(s * s + s * 3 + 1, s + 2, s * s + s * 2, s + 1)
    X, Y = generator_matrices(ring)
    assert xy_entries(3, ring) == (X @ Y) @ (X @ Y) @ (X @ Y)

import cmath
from fractions import Fraction

import numpy as np
import pytest

from twistalex.arith import IntPoly
from twistalex.errors import NonSquarefreeTheta, NotARepresentation
from twistalex.parabolic import chi, rep_poly
from twistalex.total import silver_williams_check, torus_product, total_torus, total_twisted
from twistalex.twisted import twisted_alexander


def _t_power(k):
    return IntPoly([0] * k + [1])


GOLDEN = {
    "3/5": (2, [1, -8, 18, -8, 1], 3),
    "3/7": (3, [25, -104, 219, -272, 219, -104, 25], 11),
    "5/9": (4, [41, -376, 1428, -2984, 3798, -2984, 1428, -376, 41], 29),
}


@pytest.mark.parametrize("r", sorted(GOLDEN))
def test_golden_totals(r):
    d, coeffs, n = GOLDEN[r]
    res = total_twisted(r)
    assert res.d == d and res.D == IntPoly(coeffs)
    sw = silver_williams_check(res)
    assert sw.ok and sw.N == n


def test_figure_eight_is_square():
    assert total_twisted("3/5").D == IntPoly([1, -4, 1]) ** 2


@pytest.mark.parametrize("r", ["1/3", "1/5", "3/5", "3/7", "5/9", "7/17", "5/11", "9/23"])
def test_routes_agree(r):
    psi = total_twisted(r, route="psi")
    red = total_twisted(r, route="reduced")
    assert psi.D == red.D
    assert silver_williams_check(psi).ok


@pytest.mark.parametrize("r", ["3/7", "5/9", "7/17"])
def test_norm_over_complex_roots(r):
    """On the unit circle the total polynomial has the modulus of the product of
    the twisted polynomial over every complex root of the Riley polynomial."""
    tw = twisted_alexander(r)
    D = total_twisted(r).D
    roots = np.roots(list(reversed(tw.ring.modulus.coeffs)))
    for angle in (0.3, 1.1, 2.0):
        t0 = cmath.exp(1j * angle)
        prod = 1
        for s in roots:
            prod *= sum(
                sum(c * s**j for j, c in enumerate(coef.c)) * t0**k for k, coef in tw.raw.terms()
            )
        want = sum(c * t0**k for k, c in enumerate(D.coeffs))
        # the coefficients are large and cancel, so scale the tolerance by their size
        assert abs(abs(prod) - abs(want)) < 1e-12 * sum(abs(c) for c in D.coeffs)


def test_torus_closed_forms():
    t2, t6, t10, t12, t18, t30 = (_t_power(k) for k in (2, 6, 10, 12, 18, 30))
    one = IntPoly([1])
    assert total_torus(9, 3) == (one + t2) * (one - t6 + t12)
    assert total_torus(9, 9) == (one + t18) ** 2 * (one + t6)
    assert total_torus(15, 15) == (one - t2 + _t_power(4)) * (one + t10) * (one + t30) ** 3
    with pytest.raises(ValueError):
        total_torus(9, 5)


@pytest.mark.parametrize("p, q", [(9, 3), (9, 9), (15, 3), (15, 5), (15, 15), (21, 7)])
def test_torus_closed_form_matches_computation(p, q):
    assert total_twisted(Fraction(1, p), chi(q)).D == total_torus(p, q)


@pytest.mark.parametrize("p", [9, 15])
def test_torus_product(p):
    prod, want = torus_product(p)
    assert prod == want


def test_errors():
    with pytest.raises(NonSquarefreeTheta):
        total_twisted("3/7", IntPoly([1, 1]) ** 2)
    with pytest.raises(NotARepresentation):
        total_twisted("3/7", IntPoly([1, 1]))
    with pytest.raises(ValueError):
        total_twisted("3/7", route="other")


def test_default_modulus_is_riley():
    assert total_twisted("5/9").theta == rep_poly("5/9")

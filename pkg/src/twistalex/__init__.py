"""Twisted Alexander polynomials, the quotient lambda and the invariant mu
for 2-bridge knots admitting an epimorphism onto a (2, p) torus knot group."""

from .arith import IntPoly, LaurentPoly, Mat2, QuotientRing, RingElement
from .contfrac import (
    ContinuedFraction,
    cf_eval,
    enumerate_hp,
    even_cf,
    is_p_admissible,
    normalize_mod4,
    p_expansion,
    to_p_expansion,
)
from .errors import (
    DegenerateFraction,
    InexactDivision,
    InternalVerificationFailure,
    InvalidRational,
    NonSquarefreeTheta,
    NotARepresentation,
    NotInHp,
    NotInvertible,
    TwistAlexError,
)
from .mu import mu, mu_closed_forms_check, mu_minus_one_scan, theorem_a_check
from .parabolic import chi, chi_tower, rep_poly
from .total import silver_williams_check, total_from_twisted, total_torus, total_twisted
from .twisted import classical_alexander_torus, lambda_poly, twisted_alexander, twisted_alexander_torus

__version__ = "0.1.0"

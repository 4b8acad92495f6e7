"""Exact arithmetic.

Integer polynomials, quotient rings ``Z[z]/(theta)`` with ``theta`` monic,
Laurent polynomials in ``t`` over such rings, a generic 2x2 matrix and a
fraction-free (Bareiss) determinant.  Everything is built on Python integers,
so no value ever overflows.

Long products go through Kronecker substitution: a coefficient sequence is
packed into one big integer, multiplied once, and unpacked with balanced
digits.  CPython's big-int multiply is subquadratic, which keeps the
degree-10^4 polynomials met on large knots affordable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import InexactDivision, NonSquarefreeTheta, NotInvertible

__all__ = [
    "convolve",
    "IntPoly",
    "QuotientRing",
    "RingElement",
    "LaurentPoly",
    "Mat2",
    "bareiss_det",
    "rational_poly_gcd",
]

_SCHOOLBOOK_CUTOFF = 40


# ---------------------------------------------------------------------------
# integer sequences


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _bias_block(nbytes: int, count: int) -> int:
    bias = 1 << (8 * nbytes - 1)
    return int.from_bytes(bias.to_bytes(nbytes, "little") * count, "little")


def _pack(seq: Sequence[int], nbytes: int) -> int:
    bias = 1 << (8 * nbytes - 1)
    data = b"".join((x + bias).to_bytes(nbytes, "little") for x in seq)
    return int.from_bytes(data, "little") - _bias_block(nbytes, len(seq))


def _unpack(value: int, nbytes: int, count: int) -> list[int]:
    bias = 1 << (8 * nbytes - 1)
    raw = (value + _bias_block(nbytes, count)).to_bytes(nbytes * count, "little")
    return [
        int.from_bytes(raw[i : i + nbytes], "little") - bias
        for i in range(0, nbytes * count, nbytes)
    ]


def _nbytes_for(bound: int) -> int:
    # digits must satisfy |c| < 2^(8*nbytes - 1)
    return (bound.bit_length() + 2 + 7) // 8


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Coefficient sequence of the product of two integer polynomials."""
    la, lb = len(a), len(b)
    if not la or not lb:
        return []
    if min(la, lb) < _SCHOOLBOOK_CUTOFF:
        if la < lb:
            a, b, la, lb = b, a, lb, la
        out = [0] * (la + lb - 1)
        for j, bj in enumerate(b):
            if bj:
                for i, ai in enumerate(a):
                    if ai:
                        out[i + j] += ai * bj
        return out
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    if not ma or not mb:
        return [0] * (la + lb - 1)
    nbytes = _nbytes_for(ma * mb * min(la, lb))
    prod = _pack(a, nbytes) * _pack(b, nbytes)
    return _unpack(prod, nbytes, la + lb - 1)


# ---------------------------------------------------------------------------
# Z[t]


def _format_terms(terms: Iterable[tuple[int, str]], var: str) -> str:
    """Render ``(exponent, coefficient-string)`` pairs as ``c0 + c1*var + ...``."""
    out: list[str] = []
    for k, cs in terms:
        neg = cs.startswith("-") and not cs.startswith("(")
        body = cs[1:] if neg else cs
        if k == 0:
            mono = body
        else:
            power = var if k == 1 else f"{var}^{k}"
            mono = power if body == "1" else f"{body}*{power}"
        if not out:
            out.append(f"-{mono}" if neg else mono)
        else:
            out.append(f"- {mono}" if neg else f"+ {mono}")
    return " ".join(out) if out else "0"


class IntPoly:
    """Immutable polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs: tuple[int, ...] = _trim([int(c) for c in coeffs])

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

    @classmethod
    def _coerce(cls, x) -> "IntPoly":
        if isinstance(x, IntPoly):
            return x
        if isinstance(x, int):
            return cls([x])
        return NotImplemented

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        other = IntPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other) -> "IntPoly":
        other = IntPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        other = IntPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        other = IntPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return IntPoly(convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, k: int) -> "IntPoly":
        """Multiply by ``t^k`` (``k >= 0``)."""
        if not self.coeffs:
            return self
        return IntPoly([0] * k + list(self.coeffs))

    def low_degree(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def strip_low(self) -> "IntPoly":
        """Divide out the largest power of the variable."""
        lo = self.low_degree()
        return IntPoly(self.coeffs[lo:]) if lo > 0 else self

    def exact_div(self, other: "IntPoly | int") -> "IntPoly":
        """Quotient of an exact division; raises :class:`InexactDivision` otherwise."""
        other = IntPoly._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return self
        if len(other.coeffs) == 1:
            c = other.coeffs[0]
            if any(x % c for x in self.coeffs):
                raise InexactDivision("coefficient not divisible by the constant")
            return IntPoly([x // c for x in self.coeffs])
        n, m = len(self.coeffs), len(other.coeffs)
        if n < m:
            raise InexactDivision("divisor has larger degree")
        if n - m < _SCHOOLBOOK_CUTOFF or m < 4:
            return self._long_div(other)
        return self._kronecker_div(other)

    def _long_div(self, other: "IntPoly") -> "IntPoly":
        num = list(self.coeffs)
        den = other.coeffs
        m = len(den)
        lead = den[-1]
        q = [0] * (len(num) - m + 1)
        for i in range(len(q) - 1, -1, -1):
            top = num[i + m - 1]
            if top:
                qi, rem = divmod(top, lead)
                if rem:
                    raise InexactDivision("leading coefficient does not divide")
                q[i] = qi
                for j, dj in enumerate(den):
                    if dj:
                        num[i + j] -= qi * dj
        if any(num[: m - 1]):
            raise InexactDivision("nonzero remainder")
        return IntPoly(q)

    def _kronecker_div(self, other: "IntPoly") -> "IntPoly":
        n, m = len(self.coeffs), len(other.coeffs)
        count = n - m + 1
        # any integer factor of self has sup-norm at most 2^deg * ||self||_2
        norm2 = sum(c * c for c in self.coeffs)
        bound = max(1 << (n + (norm2.bit_length() + 1) // 2), max(abs(c) for c in other.coeffs))
        nbytes = _nbytes_for(bound)
        a = _pack(self.coeffs, nbytes)
        b = _pack(other.coeffs, nbytes)
        qv, rem = divmod(a, b)
        if rem:
            raise InexactDivision("nonzero remainder")
        try:
            q = IntPoly(_unpack(qv, nbytes, count))
        except OverflowError as exc:
            raise InexactDivision("nonzero remainder") from exc
        if q * other != self:
            raise InexactDivision("nonzero remainder")
        return q

    def divmod_monic(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division with remainder by a polynomial with leading coefficient ``+-1``."""
        if other.lead not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        num = list(self.coeffs)
        den = other.coeffs
        m = len(den)
        if len(num) < m:
            return IntPoly(), self
        q = [0] * (len(num) - m + 1)
        for i in range(len(q) - 1, -1, -1):
            top = num[i + m - 1]
            if top:
                qi = top * other.lead
                q[i] = qi
                for j, dj in enumerate(den):
                    num[i + j] -= qi * dj
        return IntPoly(q), IntPoly(num[: m - 1])

    def format(self, var: str = "t") -> str:
        return _format_terms(((k, str(c)) for k, c in enumerate(self.coeffs) if c), var)

    def __str__(self) -> str:
        return self.format("t")

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


def rational_poly_gcd(a: IntPoly, b: IntPoly) -> list[Fraction]:
    """Monic gcd of two integer polynomials computed over the rationals."""
    x = [Fraction(c) for c in a.coeffs]
    y = [Fraction(c) for c in b.coeffs]
    while y:
        while x and len(x) >= len(y):
            shift = len(x) - len(y)
            f = x[-1] / y[-1]
            for i, c in enumerate(y):
                x[i + shift] -= f * c
            while x and x[-1] == 0:
                x.pop()
        x, y = y, x
    if not x:
        return []
    lead = x[-1]
    return [c / lead for c in x]


# ---------------------------------------------------------------------------
# Z[z]/(theta)


class QuotientRing:
    """The ring ``Z[z]/(theta)`` for a monic ``theta`` of degree ``d >= 1``.

    Elements are stored as coefficient tuples of length ``d`` on the basis
    ``1, z, ..., z^(d-1)``.
    """

    def __init__(self, modulus: "IntPoly | Sequence[int]", var: str = "s"):
        theta = modulus if isinstance(modulus, IntPoly) else IntPoly(modulus)
        if theta.degree < 1:
            raise ValueError("modulus must have positive degree")
        if theta.lead == -1:
            theta = -theta
        if theta.lead != 1:
            raise ValueError("modulus must be monic")
        self.modulus = theta
        self.d = theta.degree
        self.var = var
        self._tail = theta.coeffs[: self.d]
        self._zero = (0,) * self.d

    def __eq__(self, other) -> bool:
        return isinstance(other, QuotientRing) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("QuotientRing", self.modulus.coeffs))

    def __repr__(self) -> str:
        return f"QuotientRing({self.modulus.format('z')})"

    def reduce(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        d = self.d
        n = len(coeffs)
        if n <= d:
            return tuple(coeffs) + (0,) * (d - n)
        c = list(coeffs)
        tail = self._tail
        for i in range(n - 1, d - 1, -1):
            ci = c[i]
            if ci:
                base = i - d
                for j, tj in enumerate(tail):
                    if tj:
                        c[base + j] -= ci * tj
        return tuple(c[:d])

    def mul_raw(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        if self.d == 1:
            return (a[0] * b[0],)
        return self.reduce(convolve(a, b))

    def __call__(self, value) -> "RingElement":
        if isinstance(value, RingElement):
            if value.ring != self:
                raise ValueError("element belongs to a different ring")
            return value
        if isinstance(value, int):
            return RingElement(self, (value,) + (0,) * (self.d - 1))
        if isinstance(value, IntPoly):
            return RingElement(self, self.reduce(value.coeffs))
        return RingElement(self, self.reduce([int(c) for c in value]))

    @property
    def zero(self) -> "RingElement":
        return RingElement(self, self._zero)

    @property
    def one(self) -> "RingElement":
        return self(1)

    @property
    def gen(self) -> "RingElement":
        """The class of ``z``."""
        return self(IntPoly([0, 1]))

    def is_squarefree(self) -> bool:
        return len(rational_poly_gcd(self.modulus, self.modulus.derivative())) == 1

    def require_squarefree(self) -> None:
        if not self.is_squarefree():
            raise NonSquarefreeTheta(f"{self.modulus.format('z')} has a repeated factor")

    def companion(self) -> list[list[int]]:
        """Companion matrix of the modulus: subdiagonal ones, last column ``-theta_i``."""
        d = self.d
        m = [[0] * d for _ in range(d)]
        for i in range(1, d):
            m[i][i - 1] = 1
        for i in range(d):
            m[i][d - 1] = -self._tail[i]
        return m

    def _solve(self, b: tuple[int, ...], rhs: tuple[int, ...]) -> tuple[int, ...]:
        """Solve ``b * x = rhs``; ``NotInvertible`` if ``b`` is a zero divisor,
        ``InexactDivision`` if the solution is not integral."""
        d = self.d
        cols = []
        cur = b
        for _ in range(d):
            cols.append(cur)
            cur = self.reduce((0,) + cur)
        rows = [[Fraction(cols[j][i]) for j in range(d)] + [Fraction(rhs[i])] for i in range(d)]
        for col in range(d):
            piv = next((r for r in range(col, d) if rows[r][col] != 0), None)
            if piv is None:
                raise NotInvertible("element is a zero divisor")
            rows[col], rows[piv] = rows[piv], rows[col]
            pv = rows[col][col]
            rows[col] = [v / pv for v in rows[col]]
            for r in range(d):
                if r != col and rows[r][col] != 0:
                    f = rows[r][col]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
        out = []
        for r in range(d):
            v = rows[r][d]
            if v.denominator != 1:
                raise InexactDivision("quotient is not integral")
            out.append(v.numerator)
        return tuple(out)


class RingElement:
    """Element of a :class:`QuotientRing`."""

    __slots__ = ("ring", "c")

    def __init__(self, ring: QuotientRing, coeffs: tuple[int, ...]):
        self.ring = ring
        self.c = coeffs

    def _other(self, x) -> tuple[int, ...]:
        if isinstance(x, RingElement):
            if x.ring != self.ring:
                raise ValueError("elements of different rings")
            return x.c
        if isinstance(x, int):
            return (x,) + (0,) * (self.ring.d - 1)
        return NotImplemented

    def __add__(self, other) -> "RingElement":
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, tuple(a + b for a, b in zip(self.c, o)))

    __radd__ = __add__

    def __sub__(self, other) -> "RingElement":
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, tuple(a - b for a, b in zip(self.c, o)))

    def __rsub__(self, other) -> "RingElement":
        return (-self) + other

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, tuple(-a for a in self.c))

    def __mul__(self, other) -> "RingElement":
        if isinstance(other, int):
            return RingElement(self.ring, tuple(a * other for a in self.c))
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.mul_raw(self.c, o))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingElement":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.c == other.c
        if isinstance(other, int):
            return self.c == self._other(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.c))

    def __bool__(self) -> bool:
        return any(self.c)

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_scalar(self) -> bool:
        return not any(self.c[1:])

    def inverse(self) -> "RingElement":
        one = self.ring.one.c
        try:
            return RingElement(self.ring, self.ring._solve(self.c, one))
        except InexactDivision as exc:
            raise NotInvertible("element is not a unit") from exc

    def is_unit(self) -> bool:
        try:
            self.inverse()
        except NotInvertible:
            return False
        return True

    def exact_div(self, other) -> "RingElement":
        o = self._other(other)
        if o is NotImplemented:
            raise TypeError("cannot divide by this value")
        if not any(o):
            raise ZeroDivisionError("division by zero in the quotient ring")
        if not any(self.c):
            return self
        if not any(o[1:]):
            c = o[0]
            if any(a % c for a in self.c):
                raise InexactDivision("coefficient not divisible by the constant")
            return RingElement(self.ring, tuple(a // c for a in self.c))
        return RingElement(self.ring, self.ring._solve(o, self.c))

    def to_poly(self) -> IntPoly:
        return IntPoly(self.c)

    def format(self, var: str | None = None) -> str:
        return self.to_poly().format(var or self.ring.var)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RingElement({list(self.c)} mod {self.ring.modulus.format('z')})"


# ---------------------------------------------------------------------------
# Laurent polynomials over Z[z]/(theta)


class LaurentPoly:
    """Laurent polynomial in ``t`` with coefficients in a :class:`QuotientRing`.

    ``low`` is the exponent of ``coeffs[0]``; both ends are trimmed so the
    outer coefficients are nonzero.  The zero polynomial has ``low == 0`` and
    no coefficients.
    """

    __slots__ = ("ring", "low", "coeffs")

    def __init__(self, ring: QuotientRing, coeffs: Sequence, low: int = 0):
        self.ring = ring
        zero = ring._zero
        cs = [c if isinstance(c, tuple) else ring(c).c for c in coeffs]
        lo, hi = 0, len(cs)
        while hi > lo and cs[hi - 1] == zero:
            hi -= 1
        while lo < hi and cs[lo] == zero:
            lo += 1
        self.coeffs: tuple[tuple[int, ...], ...] = tuple(cs[lo:hi])
        self.low = low + lo if self.coeffs else 0

    @classmethod
    def from_dict(cls, ring: QuotientRing, terms: dict) -> "LaurentPoly":
        if not terms:
            return cls(ring, ())
        lo, hi = min(terms), max(terms)
        zero = ring._zero
        cs = [zero] * (hi - lo + 1)
        for k, v in terms.items():
            cs[k - lo] = v.c if isinstance(v, RingElement) else ring(v).c
        return cls(ring, cs, lo)

    @classmethod
    def from_ints(cls, ring: QuotientRing, ints: Sequence[int], low: int = 0) -> "LaurentPoly":
        return cls(ring, [ring(int(c)).c for c in ints], low)

    # -- basic properties ---------------------------------------------------

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """``high - low``; ``-1`` for zero."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, k: int) -> RingElement:
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return RingElement(self.ring, self.coeffs[i])
        return self.ring.zero

    def terms(self) -> list[tuple[int, RingElement]]:
        return [
            (self.low + i, RingElement(self.ring, c))
            for i, c in enumerate(self.coeffs)
            if any(c)
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.low, self.coeffs))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise ValueError("Laurent polynomials over different rings")
            return other
        if isinstance(other, (int, RingElement)):
            return LaurentPoly(self.ring, [self.ring(other).c])
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [list(self.ring._zero) for _ in range(hi - lo + 1)]
        for src in (self, other):
            off = src.low - lo
            for i, c in enumerate(src.coeffs):
                row = out[off + i]
                for j, v in enumerate(c):
                    row[j] += v
        return LaurentPoly(self.ring, [tuple(r) for r in out], lo)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ring, [tuple(-v for v in c) for c in self.coeffs], self.low)

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def scale(self, c) -> "LaurentPoly":
        """Multiply every coefficient by a ring element or integer."""
        r = self.ring
        if isinstance(c, int):
            return LaurentPoly(r, [tuple(v * c for v in x) for x in self.coeffs], self.low)
        cc = r(c).c
        return LaurentPoly(r, [r.mul_raw(x, cc) for x in self.coeffs], self.low)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, RingElement)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LaurentPoly(self.ring, ())
        d = self.ring.d
        if d == 1:
            prod = convolve([c[0] for c in self.coeffs], [c[0] for c in other.coeffs])
            return LaurentPoly(self.ring, [(v,) for v in prod], self.low + other.low)
        stride = 2 * d - 1
        pad = (0,) * (d - 1)
        fa = [v for c in self.coeffs for v in c + pad]
        fb = [v for c in other.coeffs for v in c + pad]
        flat = convolve(fa, fb)
        n = len(self.coeffs) + len(other.coeffs) - 1
        flat.extend([0] * (n * stride - len(flat)))
        red = self.ring.reduce
        out = [red(flat[k * stride : k * stride + stride]) for k in range(n)]
        return LaurentPoly(self.ring, out, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        result = LaurentPoly(self.ring, [self.ring.one.c])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.ring, self.coeffs, self.low + k)

    def canonical(self) -> "LaurentPoly":
        """Shift so that the lowest exponent is 0."""
        return self.shift(-self.low)

    def evaluate(self, x: int) -> RingElement:
        """Value at an integer ``t``; negative exponents need ``x = +-1``."""
        if not self.coeffs:
            return self.ring.zero
        if x == 1 or x == -1:
            acc = [0] * self.ring.d
            sign = 1 if x == 1 or self.low % 2 == 0 else -1
            for c in self.coeffs:
                for j, v in enumerate(c):
                    acc[j] += sign * v
                if x == -1:
                    sign = -sign
            return RingElement(self.ring, tuple(acc))
        if self.low < 0:
            raise ValueError("negative exponents can only be evaluated at +-1")
        acc = [0] * self.ring.d
        for c in reversed(self.coeffs):
            acc = [a * x + v for a, v in zip(acc, c)]
        acc = [a * x**self.low for a in acc]
        return RingElement(self.ring, tuple(acc))

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact Laurent quotient; raises :class:`InexactDivision` on a remainder."""
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self.coeffs:
            return self
        ring = self.ring
        d = ring.d
        n, m = len(self.coeffs), len(other.coeffs)
        if n < m:
            raise InexactDivision("divisor has larger span")
        den = other.coeffs
        lead = RingElement(ring, den[-1])
        try:
            lead_inv = lead.inverse()
        except NotInvertible:
            lead_inv = None
        num = [list(c) for c in self.coeffs]
        q: list[tuple[int, ...]] = [ring._zero] * (n - m + 1)
        scalar_den = [c[0] if not any(c[1:]) else None for c in den]
        for i in range(n - m, -1, -1):
            top = tuple(num[i + m - 1])
            if not any(top):
                continue
            if lead_inv is not None:
                qi = ring.mul_raw(top, lead_inv.c)
            else:
                qi = RingElement(ring, top).exact_div(lead).c
            q[i] = qi
            for j, dj in enumerate(den):
                row = num[i + j]
                s = scalar_den[j]
                if s is not None:
                    if s:
                        for k in range(d):
                            row[k] -= qi[k] * s
                else:
                    prod = ring.mul_raw(qi, dj)
                    for k in range(d):
                        row[k] -= prod[k]
        for row in num[: m - 1]:
            if any(row):
                raise InexactDivision("nonzero remainder")
        return LaurentPoly(ring, q, self.low - other.low)

    # -- symmetry -----------------------------------------------------------

    def is_symmetric(self) -> bool:
        """``c_k = c_(n-k)`` or ``c_k = -c_(n-k)`` about the centre of the span."""
        cs = self.coeffs
        if cs == cs[::-1]:
            return True
        neg = tuple(tuple(-v for v in c) for c in cs[::-1])
        return cs == neg

    def equal_up_to_unit_shift(self, other: "LaurentPoly") -> bool:
        """True when ``self = +-t^k * other`` for some integer ``k``."""
        if self.ring != other.ring or len(self.coeffs) != len(other.coeffs):
            return False
        if self.coeffs == other.coeffs:
            return True
        return self.coeffs == (-other).coeffs

    # -- presentation -------------------------------------------------------

    def format(self, var: str = "t", coeff_var: str | None = None) -> str:
        cv = coeff_var or self.ring.var
        terms = []
        for k, c in self.terms():
            p = c.to_poly()
            s = p.format(cv)
            if len([x for x in p.coeffs if x]) > 1:
                s = f"({s})"
            terms.append((k, s))
        return _format_terms(terms, var)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()}, low={self.low})"


# ---------------------------------------------------------------------------
# matrices


class Mat2:
    """2x2 matrix over any ring whose elements support ``+ - *``."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, k) -> "Mat2":
        return Mat2(self.a * k, self.b * k, self.c * k, self.d * k)

    def det(self):
        return self.a * self.d - self.b * self.c

    def map(self, f: Callable) -> "Mat2":
        return Mat2(f(self.a), f(self.b), f(self.c), f(self.d))

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, o) -> bool:
        if not isinstance(o, Mat2):
            return NotImplemented
        return self.entries() == o.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __repr__(self) -> str:
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def bareiss_det(matrix: Sequence[Sequence], div: Callable | None = None, zero=0, one=1):
    """Determinant by fraction-free Gaussian elimination.

    ``div(a, b)`` must return the exact quotient ``a / b``; the default is
    integer floor division, which is exact here.  Row swaps handle zero pivots.
    """
    n = len(matrix)
    if n == 0:
        return one
    if div is None:
        div = lambda a, b: a // b  # noqa: E731
    m = [list(row) for row in matrix]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return zero
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = div(pivot * m[i][j] - mik * m[k][j], prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det

"""int64 kernels for enumerating 2-bridge knots.

These loops run over millions of fractions when scanning, so they are
compiled with numba.  Setting ``TWISTALEX_DISABLE_NUMBA=1`` (or running
without numba installed) leaves them as plain Python; every compiled
function also keeps its interpreted twin in ``.py_func``.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("TWISTALEX_DISABLE_NUMBA", "").strip() not in ("", "0")

try:
    if _DISABLED:
        raise ImportError("numba disabled by TWISTALEX_DISABLE_NUMBA")
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:
    NUMBA_ENABLED = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


__all__ = [
    "NUMBA_ENABLED",
    "even_cf_into",
    "admissible_pair",
    "admissible_batch",
    "count_admissible",
    "scan_admissible",
    "word_exponents",
]


@njit(cache=True)
def _gcd(a, b):
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def even_cf_into(beta, alpha, out):
    """Write the even continued fraction of ``beta/alpha`` into ``out``; return its length."""
    num = alpha
    den = beta
    n = 0
    while True:
        if den < 0:
            num = -num
            den = -den
        if den == 1:
            out[n] = num
            return n + 1
        f = num // den
        c = f if f % 2 == 0 else f + 1
        out[n] = c
        n += 1
        num, den = den, c * den - num


@njit(cache=True)
def _admissible_seq(buf, n, p):
    two_p = 2 * p
    i = 0
    first = buf[0]
    while True:
        rem = n - i
        if rem == 1:
            return first % two_p == p
        if rem == 2:
            return False
        a1 = first % two_p
        a2 = buf[i + 1]
        if a1 == 0:
            first = buf[i + 2]
        elif a1 == p + 1 and a2 == 2:
            first = buf[i + 2] - (p + 1)
        elif a1 == p - 1 and a2 == -2:
            first = buf[i + 2] - (p - 1)
        else:
            return False
        i += 2


@njit(cache=True)
def admissible_pair(beta, alpha, p):
    buf = np.empty(alpha + 2, dtype=np.int64)
    n = even_cf_into(beta, alpha, buf)
    return _admissible_seq(buf, n, p)


@njit(cache=True)
def admissible_batch(betas, alphas, p):
    out = np.zeros(betas.shape[0], dtype=np.bool_)
    if betas.shape[0] == 0:
        return out
    buf = np.empty(alphas.max() + 2, dtype=np.int64)
    for i in range(betas.shape[0]):
        n = even_cf_into(betas[i], alphas[i], buf)
        out[i] = _admissible_seq(buf, n, p)
    return out


@njit(cache=True)
def count_admissible(max_alpha, p):
    """Number of ``beta/alpha`` with odd ``0 < beta < alpha <= max_alpha`` in H(p)."""
    buf = np.empty(max_alpha + 2, dtype=np.int64)
    total = 0
    for alpha in range(3, max_alpha + 1, 2):
        for beta in range(1, alpha, 2):
            if _gcd(alpha, beta) == 1:
                n = even_cf_into(beta, alpha, buf)
                if _admissible_seq(buf, n, p):
                    total += 1
    return total


@njit(cache=True)
def _fill_admissible(max_alpha, p, betas, alphas):
    buf = np.empty(max_alpha + 2, dtype=np.int64)
    k = 0
    for alpha in range(3, max_alpha + 1, 2):
        for beta in range(1, alpha, 2):
            if _gcd(alpha, beta) == 1:
                n = even_cf_into(beta, alpha, buf)
                if _admissible_seq(buf, n, p):
                    betas[k] = beta
                    alphas[k] = alpha
                    k += 1
    return k


def scan_admissible(max_alpha: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    """All ``(beta, alpha)`` with odd ``0 < beta < alpha <= max_alpha``, coprime, in H(p).

    Sorted by ``alpha`` and then ``beta``.
    """
    total = count_admissible(max_alpha, p)
    betas = np.empty(total, dtype=np.int64)
    alphas = np.empty(total, dtype=np.int64)
    _fill_admissible(max_alpha, p, betas, alphas)
    return betas, alphas


def word_exponents(beta: int, alpha: int) -> np.ndarray:
    """Signs ``(-1)^floor(k*beta/alpha)`` for ``k = 1 .. alpha-1``."""
    k = np.arange(1, alpha, dtype=np.int64)
    return 1 - 2 * (np.floor_divide(k * beta, alpha) & 1)

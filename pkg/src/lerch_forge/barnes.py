"""Unit-weight Barnes multiple zeta functions by reduction to Hurwitz zeta.

The N-fold sum over m_1..m_N collapses to a single sum weighted by the
number of compositions of n,

    zeta_N(s, x) = sum_n C(n+N-1, N-1) (x+n)^-s.

The weight is a polynomial of degree N-1 in n.  Rewriting it as a
polynomial in (x+n), sum_j a_j (x+n)^j, turns the series into

    zeta_N(s, x) = sum_j a_j zeta(s-j, x),

which carries the continuation to every s except the simple poles at
s = 1..N.  The alternating family reduces the same way to zeta_E(s-j, x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import PoleError, ValidationError
from .hurwitz import (
    POLE_GUARD,
    _check_x,
    alt_hurwitz_zeta,
    alt_hurwitz_zeta_ds,
    hurwitz_zeta,
    hurwitz_zeta_ds,
)
from .params import EMParams, ValueWithError, as_complex

MAX_ORDER = 12


@dataclass(frozen=True)
class ReductionCoeffs:
    order: int
    base: complex
    coeffs: tuple[complex, ...]


def check_order(N, lo: int = 1) -> int:
    if isinstance(N, bool) or not isinstance(N, int) or not lo <= N <= MAX_ORDER:
        raise ValidationError(f"order N must be an integer in [{lo}, {MAX_ORDER}], got {N!r}")
    return N


def _gauss_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


@lru_cache(maxsize=1024)
def _coeffs(N: int, x: complex) -> tuple[complex, ...]:
    # Exact arithmetic on the binary value of x: prod_{i=1}^{N-1} (y + i - x)
    xr, xi = Fraction(x.real), Fraction(x.imag)
    poly = [(Fraction(1), Fraction(0))]
    for i in range(1, N):
        c = (i - xr, -xi)
        nxt = [(Fraction(0), Fraction(0))] * (len(poly) + 1)
        for k, a in enumerate(poly):
            ca = _gauss_mul(c, a)
            nxt[k] = (nxt[k][0] + ca[0], nxt[k][1] + ca[1])
            nxt[k + 1] = (nxt[k + 1][0] + a[0], nxt[k + 1][1] + a[1])
        poly = nxt
    f = math.factorial(N - 1)
    return tuple(complex(float(re / f), float(im / f)) for re, im in poly)


def reduction_coeffs(N: int, x) -> ReductionCoeffs:
    """Coefficients a_0..a_{N-1} with sum_j a_j (x+n)^j = C(n+N-1, N-1).

    Computed exactly from the binary value of ``x`` and rounded once, so
    a_{N-1} is exactly the double nearest 1/(N-1)!.
    """
    check_order(N)
    x = as_complex(x)
    return ReductionCoeffs(N, x, _coeffs(N, x))


def _check_poles(N: int, s: complex) -> None:
    for k in range(1, N + 1):
        if abs(s - k) <= POLE_GUARD:
            raise PoleError(f"s = {s!r} lies within {POLE_GUARD:g} of the pole at s = {k}", k)


def _combine(coeffs, terms) -> ValueWithError:
    total = 0j
    err = 0.0
    for a, t in zip(coeffs, terms):
        total += a * t.value
        err += abs(a) * t.err_estimate
    return ValueWithError(total, err)


def barnes_zeta(N: int, s, x, p: Optional[EMParams] = None) -> ValueWithError:
    """zeta_N(s, x) = sum over m_1..m_N >= 0 of (x + m_1 + ... + m_N)^-s."""
    check_order(N)
    s, x = as_complex(s), as_complex(x)
    _check_x(x)
    _check_poles(N, s)
    a = _coeffs(N, x)
    # a_j == 0 removes the j-th term together with its pole at s = j+1
    pairs = [(aj, hurwitz_zeta(s - j, x, p)) for j, aj in enumerate(a) if aj != 0]
    return _combine(*zip(*pairs))


def barnes_zeta_ds0(N: int, x, p: Optional[EMParams] = None) -> ValueWithError:
    """d/ds zeta_N(s, x) at s = 0, i.e. log Gamma_N(x)."""
    check_order(N)
    x = as_complex(x)
    _check_x(x)
    a = _coeffs(N, x)
    pairs = [(aj, hurwitz_zeta_ds(-j, x, p)) for j, aj in enumerate(a) if aj != 0]
    return _combine(*zip(*pairs))


def alt_barnes_zeta(N: int, s, x, p: Optional[EMParams] = None) -> ValueWithError:
    """Alternating Barnes zeta, sum of (-1)^(m_1+...+m_N) (x+m_1+...+m_N)^-s.

    Entire in s; there is no pole guard.
    """
    check_order(N)
    s, x = as_complex(s), as_complex(x)
    _check_x(x)
    a = _coeffs(N, x)
    pairs = [(aj, alt_hurwitz_zeta(s - j, x, p)) for j, aj in enumerate(a) if aj != 0]
    return _combine(*zip(*pairs))


def alt_barnes_zeta_ds0(N: int, x, p: Optional[EMParams] = None) -> ValueWithError:
    check_order(N)
    x = as_complex(x)
    _check_x(x)
    a = _coeffs(N, x)
    pairs = [(aj, alt_hurwitz_zeta_ds(-j, x, p)) for j, aj in enumerate(a) if aj != 0]
    return _combine(*zip(*pairs))

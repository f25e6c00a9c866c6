"""Hurwitz zeta and alternating Hurwitz zeta via Euler-Maclaurin summation.

For Re(x) > 0 and a shift M,

    zeta(s, x) = sum_{n<M} (x+n)^-s + (x+M)^(1-s)/(s-1) + (x+M)^-s / 2
                 + sum_{k=1}^{K} B_2k/(2k)! (s)_{2k-1} (x+M)^(-s-2k+1)

where (s)_j is the rising factorial.  Every term is differentiated in s in
closed form, so the derivative never relies on finite differences.

The alternating function uses the half-argument split

    zeta_E(s, x) = 2^-s (zeta(s, x/2) - zeta(s, (x+1)/2))

with both halves sharing the shift M, so their (s-1)^-1 tail terms can be
merged into one expression that is regular at s = 1.
"""

from __future__ import annotations

import cmath
import math
import sys
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Optional

from .errors import ConvergenceError, DomainError, PoleError, ValidationError
from .params import EMParams, ValueWithError, as_complex

__all__ = [
    "POLE_GUARD",
    "bernoulli_numbers",
    "hurwitz_zeta",
    "hurwitz_zeta_ds",
    "alt_hurwitz_zeta",
    "alt_hurwitz_zeta_ds",
]

POLE_GUARD = 1e-8
_EPS = sys.float_info.epsilon
_LOG2 = math.log(2.0)
_MAX_SHIFT = 8192

# ---------------------------------------------------------------------------
# Bernoulli numbers (exact, shared)

_bern_lock = threading.Lock()
_bern_exact: list[Fraction] = [Fraction(1)]
# B_2k / (2k)! as floats, index k (index 0 unused)
_bern_scaled: list[float] = [1.0]


def _extend_bernoulli(n: int) -> None:
    """Make B_0..B_n available, using sum_{j<=m} C(m+1, j) B_j = 0."""
    with _bern_lock:
        for m in range(len(_bern_exact), n + 1):
            acc = sum((comb(m + 1, j) * _bern_exact[j] for j in range(m)), Fraction(0))
            _bern_exact.append(-acc / (m + 1))
        while 2 * len(_bern_scaled) <= len(_bern_exact) - 1:
            k = len(_bern_scaled)
            _bern_scaled.append(float(_bern_exact[2 * k] / math.factorial(2 * k)))


def _bernoulli_scaled(kmax: int) -> list[float]:
    if len(_bern_scaled) <= kmax:
        _extend_bernoulli(2 * kmax)
    return _bern_scaled


def bernoulli_numbers(K: int) -> tuple[float, ...]:
    """Return (B_2, B_4, ..., B_2K) rounded to double.

    The values are generated in exact rational arithmetic and rounded only at
    the end.  ``K`` must lie in [1, 30].
    """
    if not isinstance(K, int) or not 1 <= K <= 30:
        raise ValidationError(f"K must be an integer in [1, 30], got {K!r}")
    _extend_bernoulli(2 * K)
    return tuple(float(_bern_exact[2 * k]) for k in range(1, K + 1))


def bernoulli_exact(n: int) -> Fraction:
    """B_n as an exact fraction (B_1 = -1/2 convention)."""
    _extend_bernoulli(n)
    return _bern_exact[n]


# ---------------------------------------------------------------------------
# Euler-Maclaurin pieces


@dataclass
class _Parts:
    # body excludes the (x+M)^(1-s)/(s-1) term
    body: complex
    body_d: complex
    trunc: float
    trunc_d: float
    mag: float
    mag_d: float
    nterms: int


def _em_parts(s: complex, x: complex, M: int, K: int) -> _Parts:
    bern = _bernoulli_scaled(K + 1)
    body = 0j
    body_d = 0j
    mag = 0.0
    mag_d = 0.0
    for n in range(M):
        lw = cmath.log(x + n)
        t = cmath.exp(-s * lw)
        td = -lw * t
        body += t
        body_d += td
        mag += abs(t)
        mag_d += abs(td)

    W = x + M
    L = cmath.log(W)
    wpow = cmath.exp(-s * L)
    half = 0.5 * wpow
    body += half
    body_d -= L * half
    mag += abs(half)
    mag_d += abs(L * half)

    y = 1.0 / W
    y2 = y * y
    yp = y * wpow  # (x+M)^(-s-2k+1) for k = 1
    r, rd = s, 1.0 + 0j  # (s)_{2k-1} and its s-derivative
    trunc = trunc_d = 0.0
    for k in range(1, K + 2):
        c = bern[k] * yp
        term = c * r
        term_d = c * (rd - L * r)
        if k <= K:
            body += term
            body_d += term_d
            mag += abs(term)
            mag_d += abs(term_d)
        else:
            trunc = abs(term)
            trunc_d = abs(term_d)
        a = s + (2 * k - 1)
        r, rd = r * a, rd * a + r
        a = s + 2 * k
        r, rd = r * a, rd * a + r
        yp *= y2
    return _Parts(body, body_d, trunc, trunc_d, mag, mag_d, M + K + 2)


def _pole_term(s: complex, x: complex, M: int) -> tuple[complex, complex]:
    """(x+M)^(1-s)/(s-1) and its s-derivative."""
    W = x + M
    L = cmath.log(W)
    inv = 1.0 / (s - 1.0)
    pole = cmath.exp((1.0 - s) * L) * inv
    return pole, -pole * (L + inv)


def _phi(z: complex) -> tuple[complex, complex]:
    """(e^z - 1)/z and its derivative, accurate near z = 0."""
    if abs(z) < 0.5:
        f = 0j
        fd = 0j
        zk = 1.0 + 0j  # z^k
        fact = 1.0  # (k+1)!
        for k in range(0, 24):
            fact *= k + 1
            f += zk / fact
            if k + 1 < 24:
                fd += (k + 1) * zk / (fact * (k + 2))
            zk *= z
        return f, fd
    ez = cmath.exp(z)
    return (ez - 1.0) / z, (ez * (z - 1.0) + 1.0) / (z * z)


def _log1p(w: complex) -> complex:
    return 2.0 * cmath.atanh(w / (2.0 + w))


def _merged_pole(s: complex, A: complex, M: int) -> tuple[complex, complex]:
    """[(A+M)^(1-s) - (A+M+1/2)^(1-s)] / (s-1) and its s-derivative.

    Regular at s = 1; written through (e^z - 1)/z so that nothing is divided
    by s - 1.
    """
    WA = A + M
    eps = s - 1.0
    d = -_log1p(0.5 / WA)  # log(WA) - log(WA + 1/2)
    b = cmath.log(WA + 0.5)
    eb = cmath.exp(-eps * b)
    f, fd = _phi(-eps * d)
    g = -d * eb * f
    g_d = d * eb * (b * f + d * fd)
    return g, g_d


# ---------------------------------------------------------------------------
# Adaptive driver


@dataclass
class _Eval:
    value: complex
    deriv: complex
    trunc: float
    trunc_d: float
    round_v: float
    round_d: float


def _shifts(p: EMParams, x: complex):
    if p.M is not None:
        yield p.M
        return
    m = max(0, math.ceil(1.0 - x.real))
    while m <= _MAX_SHIFT:
        yield m
        m += max(2, m // 2)


def _roundoff(mag: float, nterms: int) -> float:
    return 2.0 * _EPS * mag * math.sqrt(nterms + 8)


def _drive(evaluate: Callable[[int], _Eval], p: EMParams, x: complex, want_deriv: bool, what: str):
    """Grow the shift until the omitted Bernoulli term is negligible."""
    ev = None
    for M in _shifts(p, x):
        ev = evaluate(M)
        if want_deriv:
            ok = ev.trunc_d <= max(0.01 * p.tol * abs(ev.deriv), ev.round_d)
        else:
            ok = ev.trunc <= max(0.01 * p.tol * abs(ev.value), ev.round_v)
        if ok:
            break
    assert ev is not None
    if want_deriv:
        val, trunc, rnd = ev.deriv, ev.trunc_d, ev.round_d
    else:
        val, trunc, rnd = ev.value, ev.trunc, ev.round_v
    if not (cmath.isfinite(val)):
        raise ConvergenceError(f"{what}: non-finite result", float("inf"))
    if trunc > max(p.tol * abs(val), rnd):
        raise ConvergenceError(
            f"{what}: tail estimate {trunc:.3e} exceeds tol {p.tol:.1e} relative",
            trunc + rnd,
        )
    return val, trunc + rnd


def _check_x(x: complex) -> None:
    if not x.real > 0.0:
        raise DomainError(f"Re(x) must be positive, got x = {x!r}")


def _check_pole(s: complex) -> None:
    if abs(s - 1.0) <= POLE_GUARD:
        raise PoleError(f"s = {s!r} lies within {POLE_GUARD:g} of the pole at s = 1", 1)


def _hurwitz_eval(s: complex, x: complex, K: int) -> Callable[[int], _Eval]:
    def evaluate(M: int) -> _Eval:
        pt = _em_parts(s, x, M, K)
        pole, pole_d = _pole_term(s, x, M)
        mag = pt.mag + abs(pole)
        mag_d = pt.mag_d + abs(pole_d)
        return _Eval(
            pt.body + pole,
            pt.body_d + pole_d,
            pt.trunc,
            pt.trunc_d,
            _roundoff(mag, pt.nterms),
            _roundoff(mag_d, pt.nterms),
        )

    return evaluate


def _alt_eval(s: complex, x: complex, K: int) -> Callable[[int], _Eval]:
    lo = 0.5 * x
    hi = 0.5 * (x + 1.0)
    scale = cmath.exp(-s * _LOG2)
    ascale = abs(scale)

    def evaluate(M: int) -> _Eval:
        p1 = _em_parts(s, lo, M, K)
        p2 = _em_parts(s, hi, M, K)
        g, g_d = _merged_pole(s, lo, M)
        inner = p1.body - p2.body + g
        inner_d = p1.body_d - p2.body_d + g_d
        value = scale * inner
        deriv = -_LOG2 * value + scale * inner_d
        trunc = ascale * (p1.trunc + p2.trunc)
        trunc_d = ascale * (p1.trunc_d + p2.trunc_d) + _LOG2 * trunc
        n = p1.nterms + p2.nterms
        mag = ascale * (p1.mag + p2.mag + abs(g))
        mag_d = ascale * (p1.mag_d + p2.mag_d + abs(g_d)) + _LOG2 * mag
        return _Eval(value, deriv, trunc, trunc_d, _roundoff(mag, n), _roundoff(mag_d, n))

    return evaluate


# ---------------------------------------------------------------------------
# Public operations


def hurwitz_zeta(s, x, p: Optional[EMParams] = None) -> ValueWithError:
    """zeta(s, x) = sum_{n>=0} (n+x)^-s and its continuation to s != 1."""
    p = p or EMParams()
    s, x = as_complex(s), as_complex(x)
    _check_x(x)
    _check_pole(s)
    v, e = _drive(_hurwitz_eval(s, x, p.K), p, x, False, "hurwitz_zeta")
    return ValueWithError(v, e)


def hurwitz_zeta_ds(s, x, p: Optional[EMParams] = None) -> ValueWithError:
    """d/ds zeta(s, x)."""
    p = p or EMParams()
    s, x = as_complex(s), as_complex(x)
    _check_x(x)
    _check_pole(s)
    v, e = _drive(_hurwitz_eval(s, x, p.K), p, x, True, "hurwitz_zeta_ds")
    return ValueWithError(v, e)


def alt_hurwitz_zeta(s, x, p: Optional[EMParams] = None) -> ValueWithError:
    """zeta_E(s, x) = sum_{n>=0} (-1)^n (n+x)^-s, entire in s."""
    p = p or EMParams()
    s, x = as_complex(s), as_complex(x)
    _check_x(x)
    v, e = _drive(_alt_eval(s, x, p.K), p, 0.5 * x, False, "alt_hurwitz_zeta")
    return ValueWithError(v, e)


def alt_hurwitz_zeta_ds(s, x, p: Optional[EMParams] = None) -> ValueWithError:
    """d/ds zeta_E(s, x)."""
    p = p or EMParams()
    s, x = as_complex(s), as_complex(x)
    _check_x(x)
    v, e = _drive(_alt_eval(s, x, p.K), p, 0.5 * x, True, "alt_hurwitz_zeta_ds")
    return ValueWithError(v, e)

"""Euler's gamma function and the multiple gamma functions Gamma_N, Gamma*_N."""

from __future__ import annotations

import cmath
import math
import sys
from typing import Optional

from .barnes import alt_barnes_zeta_ds0, barnes_zeta_ds0, check_order
from .errors import GammaOverflowError, PoleError
from .hurwitz import _check_x
from .params import EMParams, GammaValue, as_complex

__all__ = ["euler_gamma", "gamma_multiple", "gamma_multiple_star"]

# Lanczos approximation, g = 7, n = 9
_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_EXP_LIMIT = 709.0
# documented relative accuracy of the approximation on Re(z) >= 1/2
_LANCZOS_REL = 2e-15
_EPS = sys.float_info.epsilon


def _log_gamma_right(z: complex) -> complex:
    """log Gamma(z) for Re(z) >= 1/2 (not on the principal branch)."""
    z = z - 1.0
    acc = _LANCZOS[0] + 0j
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _G + 0.5
    return _LOG_SQRT_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(acc)


def _exp_checked(logv: complex, what: str) -> complex:
    if logv.real > _EXP_LIMIT:
        raise GammaOverflowError(f"{what} overflows double precision", logv)
    return cmath.exp(logv)


def euler_gamma(z) -> GammaValue:
    """Gamma(z) for complex z off the nonpositive integers.

    Lanczos approximation on Re(z) >= 1/2 and the reflection formula
    Gamma(z) Gamma(1-z) = pi / sin(pi z) elsewhere.
    """
    z = as_complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f"Gamma has a pole at z = {z.real:g}", int(z.real))
    if z.real >= 0.5:
        lg = _log_gamma_right(z)
        v = _exp_checked(lg, "Gamma(z)")
        # exp of a log of size |lg| loses about |lg| eps in relative terms
        err = abs(v) * (_LANCZOS_REL + 4.0 * _EPS * (abs(lg) + 1.0))
        if z.imag == 0.0:
            v = complex(v.real, 0.0)
        return GammaValue(v, err)
    w = 1.0 - z
    lg = _log_gamma_right(w)
    sinpz = cmath.sin(math.pi * z)
    if sinpz == 0:
        raise PoleError(f"Gamma has a pole near z = {z!r}", round(z.real))
    v = math.pi / (sinpz * _exp_checked(lg, "Gamma(1-z)"))
    err = abs(v) * (_LANCZOS_REL + 4.0 * _EPS * (abs(lg) + abs(z) + 1.0))
    if z.imag == 0.0:
        v = complex(v.real, 0.0)
    return GammaValue(v, err)


def _exp_value(lv, what: str) -> GammaValue:
    v = _exp_checked(lv.value, what)
    return GammaValue(v, abs(v) * lv.err_estimate)


def gamma_multiple(N: int, x, p: Optional[EMParams] = None) -> GammaValue:
    """Gamma_N(x) = exp(d/ds zeta_N(s, x) at s = 0).

    N = 0 is accepted and returns 1/x, which is what the recurrence
    Gamma_1(x+1) Gamma_0(x) = Gamma_1(x) requires.
    """
    check_order(N, lo=0)
    x = as_complex(x)
    _check_x(x)
    if N == 0:
        return GammaValue(1.0 / x, 2.2e-16 / abs(x))
    return _exp_value(barnes_zeta_ds0(N, x, p), f"Gamma_{N}(x)")


def gamma_multiple_star(N: int, x, p: Optional[EMParams] = None) -> GammaValue:
    """Gamma*_N(x) = exp(d/ds zeta_{E,N}(s, x) at s = 0); N = 0 gives 1/x."""
    check_order(N, lo=0)
    x = as_complex(x)
    _check_x(x)
    if N == 0:
        return GammaValue(1.0 / x, 2.2e-16 / abs(x))
    return _exp_value(alt_barnes_zeta_ds0(N, x, p), f"Gamma*_{N}(x)")

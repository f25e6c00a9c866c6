"""Independent cross-checks: Mellin quadrature, brute-force sums, integrals.

Nothing in the primary evaluation path imports this module.  The integrals
are computed with QUADPACK (scipy.integrate.quad) and the reciprocal gamma
factor with scipy.special, so an agreement with the Euler-Maclaurin route
does not share any code with it.
"""

from __future__ import annotations

import cmath
import math
import sys
import warnings
from typing import Callable, Optional

import numpy as np
from scipy import integrate, special

from .barnes import check_order
from .errors import ConvergenceError, DomainError, ValidationError
from .params import QuadParams, ValueWithError, as_complex

__all__ = [
    "mellin_barnes",
    "mellin_alt_barnes",
    "direct_multisum",
    "miller_integral",
    "euler_gamma_integral",
]

_EPS = sys.float_info.epsilon


def _quad_real(f: Callable[[float], float], a: float, b: float, q: QuadParams, **kw) -> tuple[float, float]:
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            v, e = integrate.quad(f, a, b, epsabs=q.abs_tol, epsrel=q.rel_tol, limit=q.max_subdivisions, **kw)
        except integrate.IntegrationWarning as exc:
            raise ConvergenceError(f"quadrature on [{a:g}, {b:g}] did not converge: {exc}", float("inf")) from exc
    return v, e


def _quad(f: Callable[[float], complex], a: float, b: float, q: QuadParams, real_only: bool) -> tuple[complex, float]:
    vr, er = _quad_real(lambda t: f(t).real, a, b, q)
    if real_only:
        return complex(vr), er
    vi, ei = _quad_real(lambda t: f(t).imag, a, b, q)
    return complex(vr, vi), math.hypot(er, ei)


def _tail_cutoff(envelope: Callable[[float], float], start: float, rate: float, target: float) -> float:
    """First t >= start past which the exponentially decaying tail is < target."""
    t = max(start, 1.0)
    for _ in range(200):
        if envelope(t) / rate < target:
            return t
        t *= 1.25
    raise ConvergenceError("could not bound the integrand tail", float("inf"))


def _mellin(N: int, s: complex, x: complex, q: QuadParams, alternating: bool) -> ValueWithError:
    sigma = s.real
    c = q.split_point
    real_only = s.imag == 0.0 and x.imag == 0.0
    sm1 = s - 1.0
    sign = 1.0 if alternating else -1.0

    if alternating:
        def kernel_small(t):
            # t^(s-1) e^-xt (1 + e^-t)^-N
            return cmath.exp(sm1 * math.log(t) - x * t) * (1.0 + math.exp(-t)) ** (-N)
    else:
        def kernel_small(t):
            # t^(s-1-N) (t / (1 - e^-t))^N keeps t -> 0 free of overflow
            return cmath.exp((sm1 - N) * math.log(t) - x * t) * (t / -math.expm1(-t)) ** N

    def kernel_large(t):
        return cmath.exp(sm1 * math.log(t) - x * t) * (1.0 + sign * math.exp(-t)) ** (-N)

    rate = 0.5 * x.real
    envelope = lambda t: abs(kernel_large(t))  # noqa: E731
    # past t > 2(sigma-1)/Re(x) the integrand decays at least like e^(-Re(x) t / 2)
    start = max(c, 2.0 * max(sigma - 1.0, 0.0) / x.real)
    t_end = _tail_cutoff(envelope, start, rate, 0.01 * q.abs_tol)
    tail = envelope(t_end) / rate

    v1, e1 = _quad(kernel_small, 0.0, c, q, real_only)
    v2, e2 = _quad(kernel_large, c, t_end, q, real_only)
    inv_gamma = special.rgamma(s) if not real_only else complex(special.rgamma(s.real))
    value = (v1 + v2) * inv_gamma
    err = abs(inv_gamma) * (e1 + e2 + tail) + 4 * _EPS * abs(value)
    return ValueWithError(value, err)


def mellin_barnes(N: int, s, x, q: Optional[QuadParams] = None) -> ValueWithError:
    """zeta_N(s, x) = Gamma(s)^-1 int_0^inf t^(s-1) e^(-xt) (1 - e^-t)^-N dt, Re(s) > N."""
    check_order(N)
    s, x, q = as_complex(s), as_complex(x), q or QuadParams()
    if not s.real > N:
        raise DomainError(f"Mellin representation needs Re(s) > N = {N}, got s = {s!r}")
    if not x.real > 0.0:
        raise DomainError(f"Re(x) must be positive, got x = {x!r}")
    return _mellin(N, s, x, q, alternating=False)


def mellin_alt_barnes(N: int, s, x, q: Optional[QuadParams] = None) -> ValueWithError:
    """zeta_{E,N}(s, x) through the kernel (1 + e^-t)^-N, Re(s) > 0."""
    check_order(N)
    s, x, q = as_complex(s), as_complex(x), q or QuadParams()
    if not s.real > 0.0:
        raise DomainError(f"alternating Mellin representation needs Re(s) > 0, got s = {s!r}")
    if not x.real > 0.0:
        raise DomainError(f"Re(x) must be positive, got x = {x!r}")
    return _mellin(N, s, x, q, alternating=True)


def _binomial_weights(N: int, n: np.ndarray) -> np.ndarray:
    w = np.ones(len(n))
    for i in range(1, N):
        w *= (n + i) / i
    return w


def _fsum_complex(terms: np.ndarray) -> complex:
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def direct_multisum(N: int, s, x, T: int, alternating: bool = False) -> ValueWithError:
    """Brute-force truncation of the N-fold (alternating) Barnes sum.

    The N-fold sum is collapsed by multiplicity: the number of tuples
    m_1..m_N >= 0 with sum n is C(n+N-1, N-1), so all tuples with total
    n <= N*T are summed exactly.  The plain case reports an integral bound
    for the omitted tail.  The alternating case returns the mean of two
    consecutive partial sums, which is what the pairwise-grouped series
    converges to once the half of the last term is restored; its error is
    bounded by half the size of the next difference of terms.
    """
    if isinstance(N, bool) or not isinstance(N, int) or not 1 <= N <= 3:
        raise ValidationError(f"direct_multisum supports N in [1, 3], got {N!r}")
    if isinstance(T, bool) or not isinstance(T, int) or not 1 <= T <= 2000:
        raise ValidationError(f"T must be an integer in [1, 2000], got {T!r}")
    s, x = as_complex(s), as_complex(x)
    if not x.real > 0.0:
        raise DomainError(f"Re(x) must be positive, got x = {x!r}")
    sigma = s.real
    if alternating and not sigma > 1.0:
        raise DomainError(f"alternating multisum needs Re(s) > 1, got s = {s!r}")
    if not alternating and not sigma > N:
        raise DomainError(f"multisum needs Re(s) > N = {N}, got s = {s!r}")

    L = N * T
    n = np.arange(L + 3, dtype=np.float64)
    terms = _binomial_weights(N, n) * np.exp(-s * np.log(x + n))
    if s.imag == 0.0 and x.imag == 0.0:
        terms = terms.real.astype(complex)
    rounding = 4 * _EPS * float(np.sum(np.abs(terms[: L + 2])))

    if not alternating:
        value = _fsum_complex(terms[: L + 1])
        # C(n+N-1, N-1) <= r^(N-1) (x+n)^(N-1)/(N-1)! for n >= L, and the
        # sum of (Re(x)+n)^-(sigma-N+1) over n > L is below the integral from L
        xr = x.real
        r = max(1.0, (L + N - 1) / (xr + L))
        phase = math.exp(abs(s.imag) * abs(math.atan2(x.imag, x.real)))
        tail = phase * r ** (N - 1) / math.factorial(N - 1) * (xr + L) ** (N - sigma) / (sigma - N)
        return ValueWithError(value, tail + rounding)

    signs = np.where(np.arange(L + 3) % 2 == 0, 1.0, -1.0)
    partial = _fsum_complex(signs[: L + 1] * terms[: L + 1])
    value = partial + 0.5 * signs[L + 1] * terms[L + 1]
    bound = 0.5 * abs(terms[L + 1] - terms[L + 2])
    return ValueWithError(value, bound + rounding)


def miller_integral(x: float, q: Optional[QuadParams] = None) -> ValueWithError:
    """Gamma*_1(x) = (2 pi x)^-1/2 int_R (1 + t^2/x)^(-(x+1)/2) dt for real x > 0."""
    q = q or QuadParams()
    if isinstance(x, complex) or not math.isfinite(float(x)) or not float(x) > 0.0:
        raise DomainError(f"x must be a positive real number, got {x!r}")
    x = float(x)
    expo = -0.5 * (x + 1.0)

    def h(t):
        return math.exp(expo * math.log1p(t * t / x))

    if x <= 2.0:
        # t = x u / (1 - u) maps [0, inf) onto [0, 1); the transformed
        # integrand is (1-u)^(x-1) x ((1-u)^2 + x u^2)^expo, and the endpoint
        # power is handed to QUADPACK as an algebraic weight
        def g(u):
            om = 1.0 - u
            return x * math.exp(expo * math.log(om * om + x * u * u))

        half, err = _quad_real(g, 0.0, 1.0, q, weight="alg", wvar=(0.0, x - 1.0))
        tail = 0.0
    else:
        target = max(q.abs_tol, 1e-3 * q.rel_tol)
        # int_T^inf (t^2/x)^expo dt = x^((x+1)/2) T^-x / x
        t_end = math.exp((0.5 * (x + 1.0) * math.log(x) - math.log(x * target)) / x)
        edges = [0.0]
        b = 4.0 * math.sqrt(x)
        while b < t_end:
            edges.append(b)
            b *= 8.0
        edges.append(t_end)
        half = err = 0.0
        for a, b in zip(edges[:-1], edges[1:]):
            v, e = _quad_real(h, a, b, q)
            half += v
            err += e
        tail = x ** (0.5 * (x + 1.0)) * t_end ** (-x) / x
    scale = 2.0 / math.sqrt(2.0 * math.pi * x)
    value = scale * (half + 0.5 * tail)
    return ValueWithError(value, scale * (err + 0.5 * tail) + 4 * _EPS * abs(value))


def euler_gamma_integral(s, q: Optional[QuadParams] = None) -> ValueWithError:
    """Gamma(s) = int_0^inf e^-t t^(s-1) dt for Re(s) > 0."""
    s, q = as_complex(s), q or QuadParams()
    if not s.real > 0.0:
        raise DomainError(f"Euler's integral needs Re(s) > 0, got s = {s!r}")
    real_only = s.imag == 0.0
    sm1 = s - 1.0

    def f(t):
        return cmath.exp(sm1 * math.log(t) - t)

    c = q.split_point
    envelope = lambda t: abs(f(t))  # noqa: E731
    start = max(c, 2.0 * max(s.real - 1.0, 0.0))
    t_end = _tail_cutoff(envelope, start, 0.5, 0.01 * q.abs_tol)
    tail = envelope(t_end) / 0.5
    v1, e1 = _quad(f, 0.0, c, q, real_only)
    v2, e2 = _quad(f, c, t_end, q, real_only)
    value = v1 + v2
    return ValueWithError(value, e1 + e2 + tail + 4 * _EPS * abs(value))

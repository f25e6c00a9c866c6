"""Zeta-regularized products, partial-product traces and identity reports.

A product prod_n a_n whose Dirichlet series sum_n a_n^-s continues to s = 0
is assigned the value exp(-zeta_a'(0)).  The weight families handled here
are C(n+N-1, N-1), optionally with alternating signs, over a_n = x + n; for
those the regularized product is 1/Gamma_N(x) or 1/Gamma*_N(x).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .barnes import alt_barnes_zeta_ds0, barnes_zeta_ds0, check_order
from .errors import ValidationError
from .gamma import _exp_checked, euler_gamma, gamma_multiple, gamma_multiple_star
from .hurwitz import _check_x, alt_hurwitz_zeta_ds, hurwitz_zeta_ds
from .params import EMParams, GammaValue, as_complex

__all__ = [
    "WeightSpec",
    "ProductTrace",
    "IdentityReport",
    "IDENTITIES",
    "reg_product",
    "lerch_partials",
    "wallis_partials",
    "identity_report",
    "relative_error",
]

SQRT_2PI = math.sqrt(2.0 * math.pi)
MAX_LERCH_TERMS = 10**7
MAX_WALLIS_TERMS = 10**8


@dataclass(frozen=True)
class WeightSpec:
    """Exponent family w_n = (+-1)^n C(n+N-1, N-1) of the product over x+n."""

    order: int
    alternating: bool = False

    def __post_init__(self):
        check_order(self.order)


@dataclass
class ProductTrace:
    """Partial products with a smoothed sequence and its limit.

    ``averaged[k]`` is built from ``partials[k]``, ``partials[k+1]`` and
    ``partials[k+2]`` (the trace computes two extra partials for this).
    """

    start: int
    partials: np.ndarray
    averaged: np.ndarray
    limit_estimate: complex
    limit_reference: complex

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.start, self.start + len(self.partials))


@dataclass
class IdentityReport:
    name: str
    tol: float
    inputs: list = field(default_factory=list)
    lhs: list = field(default_factory=list)
    rhs: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    @property
    def max_error(self) -> float:
        return max(self.errors) if self.errors else 0.0

    @property
    def passed(self) -> bool:
        return bool(self.errors) and self.max_error <= self.tol


def relative_error(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


# ---------------------------------------------------------------------------
# Regularized products


def reg_product(w: WeightSpec, x, p: Optional[EMParams] = None) -> GammaValue:
    """exp(-zeta_a'(0)) for zeta_a(s) = sum_n w_n (x+n)^-s."""
    x = as_complex(x)
    _check_x(x)
    if w.alternating:
        lv = alt_barnes_zeta_ds0(w.order, x, p)
    else:
        lv = barnes_zeta_ds0(w.order, x, p)
    v = _exp_checked(-lv.value, "regularized product")
    return GammaValue(v, abs(v) * lv.err_estimate)


# ---------------------------------------------------------------------------
# Classical partial products


def _smooth(logs: np.ndarray) -> np.ndarray:
    """Two rounds of pairwise means on log-partials, exponentiated.

    One round (a geometric mean of neighbours) removes the oscillation but
    leaves an O(1/m) bias; the second round brings it to O(1/m^2).
    """
    once = 0.5 * (logs[:-1] + logs[1:])
    twice = 0.5 * (once[:-1] + once[1:])
    return np.exp(twice)


def lerch_partials(x: float, m: int) -> ProductTrace:
    """Partials P_k = prod_{n=0}^{k} (x+n)^((-1)^(n+1)) for k = 0..m.

    The raw partials do not converge: even ones tend to 0 and odd ones
    grow without bound, bracketing the regularized value Gamma*_1(x).
    """
    if isinstance(x, complex) or not math.isfinite(float(x)) or not float(x) > 0.0:
        raise ValidationError(f"x must be a positive real number, got {x!r}")
    if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= MAX_LERCH_TERMS:
        raise ValidationError(f"m must be an integer in [1, {MAX_LERCH_TERMS}], got {m!r}")
    x = float(x)
    top = m + 2
    npairs = top // 2 + 1
    even = x + 2.0 * np.arange(npairs)
    # odd partials: products of (x+2j+1)/(x+2j)
    ratio_prod = np.cumprod((even + 1.0) / even)
    log_odd = np.cumsum(np.log1p(1.0 / even))

    partials = np.empty(top + 1)
    logs = np.empty(top + 1)
    partials[1::2] = ratio_prod[: len(partials[1::2])]
    logs[1::2] = log_odd[: len(logs[1::2])]
    partials[0] = 1.0 / x
    logs[0] = -math.log(x)
    n_even = len(partials[0::2])
    partials[2::2] = ratio_prod[: n_even - 1] / even[1:n_even]
    logs[2::2] = log_odd[: n_even - 1] - np.log(even[1:n_even])

    averaged = _smooth(logs)
    ref = gamma_multiple_star(1, x).value
    return ProductTrace(0, partials[: m + 1], averaged, complex(averaged[m]), ref)


def wallis_partials(m: int) -> ProductTrace:
    """W_k = prod_{j=1}^{k} (2j)^2 / ((2j-1)(2j+1)) for k = 1..m."""
    if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= MAX_WALLIS_TERMS:
        raise ValidationError(f"m must be an integer in [1, {MAX_WALLIS_TERMS}], got {m!r}")
    j = np.arange(1, m + 3, dtype=np.float64)
    logs = np.cumsum(np.log1p(1.0 / (4.0 * j * j - 1.0)))
    partials = np.exp(logs)
    averaged = _smooth(logs)
    return ProductTrace(1, partials[:m], averaged, complex(partials[m - 1]), complex(math.pi / 2))


# ---------------------------------------------------------------------------
# Identity reports

_DEFAULT_GRID = tuple(0.5 * k for k in range(1, 11))


def _lerch(grid, p, orders, terms):
    for x in grid:
        lhs = cmath.exp(-hurwitz_zeta_ds(0, x, p).value)
        yield {"x": x}, lhs, SQRT_2PI / euler_gamma(x).value


def _infty_factorial(grid, p, orders, terms):
    yield {"x": 1.0}, cmath.exp(-hurwitz_zeta_ds(0, 1.0, p).value), SQRT_2PI


def _lerch_n(grid, p, orders, terms):
    # Gamma_N is defined through the same derivative, so this is a
    # definition-level consistency check
    for N in orders:
        for x in grid:
            lhs = reg_product(WeightSpec(N), x, p).value * gamma_multiple(N, x, p).value
            yield {"N": N, "x": x}, lhs, 1.0


def _lerch_alt_n(grid, p, orders, terms):
    for N in orders:
        for x in grid:
            lhs = reg_product(WeightSpec(N, True), x, p).value * gamma_multiple_star(N, x, p).value
            yield {"N": N, "x": x}, lhs, 1.0


def _prop1(grid, p, orders, terms):
    for x in grid:
        yield {"x": x}, gamma_multiple(1, x, p).value, euler_gamma(x).value / SQRT_2PI


def _prop2(grid, p, orders, terms):
    for x in grid:
        rhs = euler_gamma(0.5 * x).value / (math.sqrt(2.0) * euler_gamma(0.5 * (x + 1.0)).value)
        yield {"x": x}, gamma_multiple_star(1, x, p).value, rhs


def _recurrence(grid, p, orders, terms):
    for N in orders:
        for x in grid:
            lhs = gamma_multiple(N, x + 1.0, p).value * gamma_multiple(N - 1, x, p).value
            yield {"N": N, "x": x}, lhs, gamma_multiple(N, x, p).value


def _recurrence_alt(grid, p, orders, terms):
    for N in orders:
        for x in grid:
            lhs = gamma_multiple_star(N, x + 1.0, p).value * gamma_multiple_star(N, x, p).value
            yield {"N": N, "x": x}, lhs, gamma_multiple_star(N - 1, x, p).value


def _williams_zhang(grid, p, orders, terms):
    for x in grid:
        lhs = alt_hurwitz_zeta_ds(0, x, p).value
        g = euler_gamma(0.5 * x).value / euler_gamma(0.5 * (x + 1.0)).value
        yield {"x": x}, lhs, cmath.log(g) - 0.5 * math.log(2.0)


def _wallis(grid, p, orders, terms):
    m = terms or 100_000
    yield {"m": m}, complex(wallis_partials(m).limit_estimate), math.pi / 2


IDENTITIES: dict[str, Callable] = {
    "lerch": _lerch,
    "lerch-N": _lerch_n,
    "lerch-alt-N": _lerch_alt_n,
    "prop1": _prop1,
    "prop2": _prop2,
    "recurrence": _recurrence,
    "recurrence-alt": _recurrence_alt,
    "williams-zhang": _williams_zhang,
    "wallis": _wallis,
    "infty-factorial": _infty_factorial,
}


def identity_report(
    name: str,
    grid: Optional[Sequence] = None,
    tol: float = 1e-10,
    p: Optional[EMParams] = None,
    *,
    orders: Iterable[int] = (1, 2, 3, 4),
    terms: Optional[int] = None,
) -> IdentityReport:
    """Evaluate both sides of a named identity on a grid.

    ``grid`` is ignored by "wallis" (which uses ``terms``) and by
    "infty-factorial" (fixed at x = 1).  ``orders`` applies to the
    identities that range over N.
    """
    if name not in IDENTITIES:
        raise ValidationError(f"unknown identity {name!r}; choose from {sorted(IDENTITIES)}")
    if grid is None:
        grid = _DEFAULT_GRID
    grid = [as_complex(x) for x in grid]
    if not grid:
        raise ValidationError("grid must not be empty")
    for x in grid:
        _check_x(x)
    grid = [x.real if x.imag == 0.0 else x for x in grid]
    orders = [check_order(N) for N in orders]
    report = IdentityReport(name, tol)
    for inputs, lhs, rhs in IDENTITIES[name](grid, p, orders, terms):
        report.inputs.append(inputs)
        report.lhs.append(complex(lhs))
        report.rhs.append(complex(rhs))
        report.errors.append(relative_error(complex(lhs), complex(rhs)))
    return report

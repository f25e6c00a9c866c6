"""Parameter and result containers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import ConvergenceError, ValidationError

DEFAULT_TOL = 1e-13


@dataclass(frozen=True)
class EMParams:
    """Euler-Maclaurin controls.

    ``M`` is the number of series terms summed directly before the
    asymptotic tail takes over.  ``None`` lets the evaluator pick the
    smallest shift meeting ``tol``; an explicit value is used as given.
    """

    M: Optional[int] = None
    K: int = 15
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.M is not None and (not isinstance(self.M, int) or self.M < 1):
            raise ValidationError(f"M must be a positive integer, got {self.M!r}")
        if not isinstance(self.K, int) or not 1 <= self.K <= 60:
            raise ValidationError(f"K must be an integer in [1, 60], got {self.K!r}")
        if not 0.0 < self.tol < 1.0:
            raise ValidationError(f"tol must lie in (0, 1), got {self.tol!r}")


@dataclass(frozen=True)
class QuadParams:
    abs_tol: float = 1e-14
    rel_tol: float = 1e-12
    max_subdivisions: int = 1000
    split_point: float = 1.0

    def __post_init__(self):
        for name in ("abs_tol", "rel_tol"):
            v = getattr(self, name)
            if not 0.0 < v < 1.0:
                raise ValidationError(f"{name} must lie in (0, 1), got {v!r}")
        if not 1 <= self.max_subdivisions <= 100_000:
            raise ValidationError("max_subdivisions must lie in [1, 100000]")
        if not self.split_point > 0.0:
            raise ValidationError("split_point must be positive")


@dataclass(frozen=True)
class ValueWithError:
    """A complex value with a nonnegative error estimate."""

    value: complex
    err_estimate: float

    def __post_init__(self):
        v = complex(self.value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ConvergenceError(f"non-finite value {v!r}", float("inf"))
        object.__setattr__(self, "value", v)
        object.__setattr__(self, "err_estimate", float(self.err_estimate))

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag


# Multiple gamma values carry the same shape.
GammaValue = ValueWithError


def as_complex(z) -> complex:
    try:
        c = complex(z)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"not a number: {z!r}") from exc
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise ValidationError(f"non-finite input {z!r}")
    return c

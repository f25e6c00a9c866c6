import cmath
import math
from fractions import Fraction
from math import comb

import mpmath
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lerch_forge import (
    ConvergenceError,
    DomainError,
    EMParams,
    PoleError,
    ValidationError,
    alt_hurwitz_zeta,
    alt_hurwitz_zeta_ds,
    bernoulli_numbers,
    hurwitz_zeta,
    hurwitz_zeta_ds,
)
from lerch_forge.hurwitz import bernoulli_exact

from oracle_helpers import abel_alternating_s0, direct_alternating, direct_hurwitz

PI = math.pi


def rel(a, b):
    return abs(a - b) / abs(b)


# ---------------------------------------------------------------------------
# Bernoulli numbers


class TestBernoulli:
    def test_recurrence_exact(self):
        # sum_{j<=m} C(m+1, j) B_j = 0 in exact arithmetic, up to B_60
        for m in range(1, 61):
            assert sum(comb(m + 1, j) * bernoulli_exact(j) for j in range(m + 1)) == 0

    def test_small_values(self):
        b = bernoulli_numbers(3)
        assert b[0] == 1 / 6
        assert b[1] == -1 / 30
        assert b[2] == 1 / 42
        assert bernoulli_exact(6) == Fraction(1, 42)

    def test_values_rounded_once(self):
        table = bernoulli_numbers(30)
        assert len(table) == 30
        for k, v in enumerate(table, start=1):
            assert v == float(bernoulli_exact(2 * k))
        # B_60 from the exact generator
        assert table[-1] == float(Fraction(mpmath.bernfrac(60)[0], mpmath.bernfrac(60)[1]))

    @pytest.mark.parametrize("K", [0, 31, -1, 2.0])
    def test_out_of_range(self, K):
        with pytest.raises(ValidationError):
            bernoulli_numbers(K)


# ---------------------------------------------------------------------------
# Hurwitz zeta


class TestHurwitzValues:
    def test_zeta2_at_1(self):
        ref, bound = direct_hurwitz(2.0, 1.0)
        assert abs(ref - PI**2 / 6) <= bound
        v = hurwitz_zeta(2, 1)
        assert abs(v.value - ref) <= bound + 1e-15
        assert rel(v.value, 1.6449340668482264) < 1e-14

    def test_zeta2_at_half(self):
        ref, bound = direct_hurwitz(2.0, 0.5)
        assert abs(ref - PI**2 / 2) <= bound
        v = hurwitz_zeta(2, 0.5)
        assert abs(v.value - ref) <= bound + v.err_estimate
        assert rel(v.value, 4.934802200544679) < 1e-14

    def test_reindex_s3(self):
        assert hurwitz_zeta(3, 2).value == pytest.approx(hurwitz_zeta(3, 1).value - 1.0, rel=1e-15, abs=0)

    @pytest.mark.parametrize("s,x", [(1.5, 0.3), (3.7, 2.2), (5.0, 0.05), (2.5, 7.0)])
    def test_against_direct_series(self, s, x):
        ref, bound = direct_hurwitz(s, x)
        v = hurwitz_zeta(s, x)
        assert abs(v.value - ref) <= bound + v.err_estimate

    @pytest.mark.parametrize(
        "s,x",
        [(0.5, 0.3), (-1.5, 2.2), (-3, 1.3), (2 + 3j, 0.7 + 1j), (5 - 20j, 1), (-2.5 + 1j, 0.4 - 2j), (0.2, 9.0)],
    )
    def test_continuation_against_mpmath(self, s, x):
        ref = complex(mpmath.zeta(s, x))
        v = hurwitz_zeta(s, x)
        assert rel(v.value, ref) < 1e-12
        assert abs(v.value - ref) <= 10 * v.err_estimate + 1e-300

    def test_trivial_zero(self):
        v = hurwitz_zeta(-2, 1)
        assert abs(v.value) < 1e-14

    def test_err_estimate_relative(self):
        v = hurwitz_zeta(2.5, 1.5)
        assert v.err_estimate <= 1e-13 * abs(v.value)


class TestHurwitzDerivative:
    def test_zeta_prime_zero(self):
        v = hurwitz_zeta_ds(0, 1)
        assert v.value.real == pytest.approx(-0.5 * math.log(2 * PI), rel=1e-14)

    def test_difference_equation(self):
        d = hurwitz_zeta_ds(0, 3).value - hurwitz_zeta_ds(0, 2).value
        assert d.real == pytest.approx(math.log(2), rel=1e-13)

    def test_zeta_prime_minus_one(self):
        v = hurwitz_zeta_ds(-1, 1)
        # independent: fixed shift/order versus doubled shift/order
        a = hurwitz_zeta_ds(-1, 1, EMParams(M=12, K=12))
        b = hurwitz_zeta_ds(-1, 1, EMParams(M=24, K=24))
        assert abs(a.value - b.value) <= a.err_estimate + b.err_estimate
        assert abs(v.value - b.value) <= v.err_estimate + b.err_estimate
        assert v.value.real == pytest.approx(-0.1654211437004509, rel=1e-13)
        assert rel(v.value, complex(mpmath.zeta(-1, 1, 1))) < 1e-13

    @pytest.mark.parametrize("s,x", [(0.5, 0.3), (2 + 1j, 1.7), (-3, 0.05), (-11, 1.0), (4, 2.5 + 3j)])
    def test_against_mpmath(self, s, x):
        ref = complex(mpmath.zeta(s, x, 1))
        v = hurwitz_zeta_ds(s, x)
        assert abs(v.value - ref) <= max(v.err_estimate, 1e-14 * abs(ref))

    @pytest.mark.parametrize(
        "s,x", [(2.0, 1.0), (0.0, 0.5), (-1.5, 2.0), (0.3 + 2j, 1.2), (3.5, 0.2), (-4 + 1j, 3.3), (0.7, 5.0)]
    )
    def test_finite_difference(self, s, x):
        h = 1e-5
        fd = (hurwitz_zeta(s + h, x).value - hurwitz_zeta(s - h, x).value) / (2 * h)
        assert abs(hurwitz_zeta_ds(s, x).value - fd) <= 1e-6


class TestHurwitzErrors:
    def test_pole(self):
        with pytest.raises(PoleError) as info:
            hurwitz_zeta(1 + 1e-9, 1)
        assert info.value.pole == 1
        with pytest.raises(PoleError):
            hurwitz_zeta_ds(1, 2)

    def test_just_outside_guard(self):
        v = hurwitz_zeta(1 + 1e-7, 1)
        assert v.value.real == pytest.approx(1e7, rel=1e-6)

    @pytest.mark.parametrize("x", [0, -0.5, -1 + 1j])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            hurwitz_zeta(2, x)
        with pytest.raises(DomainError):
            alt_hurwitz_zeta(2, x)

    def test_convergence_error_with_tiny_shift(self):
        # a fixed shift of 1 cannot resolve a large imaginary part
        with pytest.raises(ConvergenceError) as info:
            hurwitz_zeta(2 + 60j, 1, EMParams(M=1, K=4))
        assert info.value.estimate > 0

    def test_bad_params(self):
        with pytest.raises(ValidationError):
            EMParams(K=61)
        with pytest.raises(ValidationError):
            EMParams(M=0)
        with pytest.raises(ValidationError):
            EMParams(tol=1.0)


# ---------------------------------------------------------------------------
# Alternating Hurwitz zeta


class TestAlternating:
    def test_log2(self):
        ref = direct_alternating(1.0, 1.0)
        assert abs(ref - math.log(2)) < 1e-14
        v = alt_hurwitz_zeta(1, 1)
        assert v.value.real == pytest.approx(0.6931471805599453, rel=1e-14)

    def test_eta2(self):
        ref = direct_alternating(2.0, 1.0)
        assert abs(ref - PI**2 / 12) < 1e-14
        assert alt_hurwitz_zeta(2, 1).value.real == pytest.approx(0.8224670334241132, rel=1e-14)

    def test_abel_s0(self):
        ref = abel_alternating_s0()
        assert abs(ref - 0.5) < 1e-7
        assert alt_hurwitz_zeta(0, 0.7).value.real == pytest.approx(0.5, rel=1e-14)

    @pytest.mark.parametrize("s", [1.5, 2.0, 3.0])
    def test_reduces_to_eta(self, s):
        ref = direct_alternating(s, 1.0)
        assert rel(alt_hurwitz_zeta(s, 1).value, ref) <= 1e-10

    @pytest.mark.parametrize("eps", [0.0, 1e-12, 1e-9, -3e-8, 1e-5, 1e-3j])
    def test_regular_at_one(self, eps):
        x = 1.3
        v = alt_hurwitz_zeta(1 + eps, x)
        ref = complex(mpmath.nsum(lambda n: (-1) ** n * (n + x) ** (-(1 + mpmath.mpmathify(eps))), [0, mpmath.inf]))
        assert rel(v.value, ref) < 1e-13

    @pytest.mark.parametrize("s,x", [(-3.5, 2.0), (2 + 1j, 0.4 + 2j), (-11, 0.8), (0.5, 0.1)])
    def test_continuation(self, s, x):
        s_mp, x_mp = mpmath.mpmathify(s), mpmath.mpmathify(x)
        ref = complex(2 ** (-s_mp) * (mpmath.zeta(s_mp, x_mp / 2) - mpmath.zeta(s_mp, (x_mp + 1) / 2)))
        v = alt_hurwitz_zeta(s, x)
        assert abs(v.value - ref) <= max(v.err_estimate, 1e-13 * abs(ref))

    def test_derivative_williams_zhang_points(self):
        assert alt_hurwitz_zeta_ds(0, 1).value.real == pytest.approx(0.5 * math.log(PI / 2), rel=1e-13)
        ref = -math.log(math.gamma(1.5)) - 0.5 * math.log(2)
        assert ref == pytest.approx(-0.22579135264472744, rel=1e-15)
        assert alt_hurwitz_zeta_ds(0, 2).value.real == pytest.approx(ref, rel=1e-13)

    @pytest.mark.parametrize("x", [0.25, 0.5, 1.0, 1.7, 3.5, 7.0, 12.0])
    def test_williams_zhang_grid(self, x):
        ref = math.lgamma(x / 2) - math.lgamma((x + 1) / 2) - 0.5 * math.log(2)
        assert rel(alt_hurwitz_zeta_ds(0, x).value, ref) <= 1e-10

    @pytest.mark.parametrize("s,x", [(1.0, 1.0), (0.0, 0.3), (2.5 + 1j, 2.0), (-2.0, 1.5)])
    def test_derivative_finite_difference(self, s, x):
        h = 1e-5
        fd = (alt_hurwitz_zeta(s + h, x).value - alt_hurwitz_zeta(s - h, x).value) / (2 * h)
        assert abs(alt_hurwitz_zeta_ds(s, x).value - fd) <= 1e-6


# ---------------------------------------------------------------------------
# Properties

s_strategy = st.builds(complex, st.floats(-4.0, 8.0), st.floats(-8.0, 8.0))
wide_s_strategy = st.builds(complex, st.floats(-8.0, 8.0), st.floats(-8.0, 8.0))
x_strategy = st.tuples(st.floats(0.1, 10.0), st.floats(-3.0, 3.0))


@settings(max_examples=50, deadline=None)
@given(s=s_strategy, xr=x_strategy)
def test_reindexing(s, xr):
    assume(abs(s - 1) > 0.05)
    x = complex(*xr)
    a = hurwitz_zeta(s, x).value
    b = hurwitz_zeta(s, x + 1).value
    assert abs(a - b - cmath.exp(-s * cmath.log(x))) <= 1e-11 * (1 + abs(a))


@settings(max_examples=50, deadline=None)
@given(s=wide_s_strategy, xr=x_strategy)
def test_reindexing_within_estimate(s, xr):
    # far left in s the powers (x+n)^-s are large next to the result and each
    # carries a rounding error of order eps |s log(x+n)|; the estimate covers it
    assume(abs(s - 1) > 0.05)
    x = complex(*xr)
    a = hurwitz_zeta(s, x)
    b = hurwitz_zeta(s, x + 1)
    gap = abs(a.value - b.value - cmath.exp(-s * cmath.log(x)))
    assert gap <= a.err_estimate + b.err_estimate + 1e-15 * (1 + abs(a.value) + abs(b.value))


def test_reindexing_far_left_exceeds_fixed_bound():
    # documents the precision floor: this point misses 1e-11 (1 + |zeta|)
    s, x = -7.676340420638615 + 7.1296109007776955j, 1.4373698388417289 + 0.600661713177606j
    ref = complex(mpmath.zeta(s, x))
    v = hurwitz_zeta(s, x)
    assert abs(v.value - ref) <= v.err_estimate
    assert v.err_estimate > 1e-12 * (1 + abs(ref))


@settings(max_examples=30, deadline=None)
@given(s=s_strategy, xr=x_strategy)
def test_alternating_reindexing(s, xr):
    # zeta_E(s, x) + zeta_E(s, x+1) = x^-s
    x = complex(*xr)
    a = alt_hurwitz_zeta(s, x)
    b = alt_hurwitz_zeta(s, x + 1)
    gap = abs(a.value + b.value - cmath.exp(-s * cmath.log(x)))
    assert gap <= a.err_estimate + b.err_estimate + 1e-13 * (1 + abs(a.value) + abs(b.value))


@pytest.mark.parametrize("x", [0.5, 1.0, 2.3])
@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_pole_residue(x, k):
    eps = 10.0**-k
    r = eps * hurwitz_zeta(1 + eps, x).value
    assert abs(r - 1) <= 10.0 ** (-k + 1)


@pytest.mark.parametrize(
    "s,x",
    [(2.0, 1.0), (0.5, 0.3), (-1.5, 2.2), (3 + 2j, 0.8), (0.0, 4.0), (-4.5, 1.1), (-0.5 + 5j, 2.0)],
)
@pytest.mark.parametrize("M,K", [(12, 8), (20, 12), (40, 15)])
def test_parameter_robustness(s, x, M, K):
    # the doubled run carries more rounding when Re(s) < 0 (its head sum is
    # longer), so its own estimate is part of the admissible difference
    for f in (hurwitz_zeta, hurwitz_zeta_ds, alt_hurwitz_zeta, alt_hurwitz_zeta_ds):
        base = f(s, x, EMParams(M=M, K=K))
        doubled = f(s, x, EMParams(M=2 * M, K=min(2 * K, 60)))
        assert abs(doubled.value - base.value) <= base.err_estimate + doubled.err_estimate, f.__name__


@pytest.mark.parametrize("s,x", [(2.0, 1.0), (0.5, 0.3), (3 + 2j, 0.8), (0.0, 4.0), (1.5 + 5j, 2.0)])
@pytest.mark.parametrize("M,K", [(12, 8), (20, 12), (40, 15)])
def test_parameter_robustness_strict(s, x, M, K):
    # where the head sum does not grow, the base estimate alone must cover it
    for f in (hurwitz_zeta, hurwitz_zeta_ds, alt_hurwitz_zeta, alt_hurwitz_zeta_ds):
        base = f(s, x, EMParams(M=M, K=K))
        doubled = f(s, x, EMParams(M=2 * M, K=min(2 * K, 60)))
        assert abs(doubled.value - base.value) <= base.err_estimate, f.__name__


@pytest.mark.parametrize("s,x", [(2.0, 1.0), (-1.5, 2.2), (3 + 2j, 0.8), (-6.5, 0.5)])
def test_default_vs_doubled_explicit(s, x):
    base = hurwitz_zeta_ds(s, x)
    doubled = hurwitz_zeta_ds(s, x, EMParams(M=80, K=30))
    assert abs(doubled.value - base.value) <= base.err_estimate + doubled.err_estimate

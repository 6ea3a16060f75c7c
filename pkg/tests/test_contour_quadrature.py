import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from weberpcf import (
    DEFAULT_CONFIG,
    EvalConfig,
    EvalResult,
    IntegrandSpec,
    NonconvergentRayError,
    PowerFactor,
    RayPath,
    SingularRayError,
    gamma,
    laplace_ray,
    segment_singular,
)


def quad_complex(f, a, b, **kw):
    re = integrate.quad(lambda t: f(t).real, a, b, epsabs=0, epsrel=2e-14, limit=400, **kw)[0]
    im = integrate.quad(lambda t: f(t).imag, a, b, epsabs=0, epsrel=2e-14, limit=400, **kw)[0]
    return complex(re, im)


def test_exponential_moment():
    r = laplace_ray(IntegrandSpec(1.0), 2.0)
    assert abs(r.value - 0.5) <= 1e-14
    assert "direct" in r.path_flags


def test_half_exponent():
    r = laplace_ray(IntegrandSpec(0.5), 1.0)
    assert abs(r.value - math.sqrt(math.pi)) <= 1e-13


def quartic_substitution_oracle(alpha, beta, y):
    # p = t^4 turns p^(alpha-1) dp into 4 t^(4 alpha - 1) dt, smooth for alpha = 1/4
    f = lambda t: 4.0 * t ** (4 * alpha - 1) * (1 + 2 * t ** 4) ** beta * math.exp(-y * t ** 4)
    return sum(integrate.quad(f, lo, hi, epsabs=0, epsrel=2e-14, limit=400)[0]
               for lo, hi in ((0, 0.5), (0.5, 1.0), (1.0, 2.0), (2.0, np.inf)))


def test_weber_kernel_against_substitution_oracle():
    spec = IntegrandSpec(0.25, (PowerFactor(2.0, -0.75),))
    r = laplace_ray(spec, 4.0)
    ref = quartic_substitution_oracle(0.25, -0.75, 4.0)
    assert abs(r.value - ref) <= 1e-12 * abs(ref)
    assert abs(r.value - ref) <= 10 * max(r.abs_err_estimate, 1e-16 * abs(ref))


def test_beta_segment():
    r = segment_singular(IntegrandSpec(0.5), IntegrandSpec(0.5), 0.0, (0.0, 1.0))
    assert abs(r.value - math.pi) <= 1e-13


def test_elementary_segment():
    r = segment_singular(IntegrandSpec(1.0), IntegrandSpec(1.0), 2.0, (0.0, 0.5))
    assert abs(r.value - (1 - math.exp(-1)) / 2) <= 1e-14


def test_half_interval_segment_against_weighted_quadrature():
    # q^(-3/4) (1 - 2q)^(-3/4) e^(-3q) on (0, 1/2); (1-2q)^b = 2^b (1/2 - q)^b
    c = 2.0 ** -0.75
    r = segment_singular(IntegrandSpec(0.25), IntegrandSpec(0.25, const=c), 3.0, (0.0, 0.5))
    ref = c * integrate.quad(lambda q: math.exp(-3 * q), 0, 0.5, weight="alg",
                             wvar=(-0.75, -0.75), epsabs=0, epsrel=2e-14)[0]
    assert abs(r.value - ref) <= 1e-11 * ref


def test_rejects_growing_ray():
    with pytest.raises(NonconvergentRayError):
        laplace_ray(IntegrandSpec(1.0), -1.0)
    with pytest.raises(NonconvergentRayError):
        laplace_ray(IntegrandSpec(1.0), 1.0, RayPath(theta=math.pi / 2))


def test_rejects_branch_point_on_ray():
    spec = IntegrandSpec(0.5, (PowerFactor(2.0, -0.5),))
    with pytest.raises(SingularRayError):
        laplace_ray(spec, -1.0, RayPath(theta=math.pi))


def test_rejects_divergent_exponent():
    with pytest.raises(ValueError):
        laplace_ray(IntegrandSpec(-0.5), 1.0)


def test_truncated_ray():
    r = laplace_ray(IntegrandSpec(1.0), 1.0, RayPath(truncation=2.0))
    assert abs(r.value - (1 - math.exp(-2.0))) <= 1e-14


def test_config_validation():
    for kw in ({"rel_tol": 0.0}, {"split_radius": 0.5}, {"series_order": 0}, {"max_quad_level": 2}):
        with pytest.raises(ValueError):
            EvalConfig(**kw)
    with pytest.raises(ValueError):
        EvalResult(1.0, -1.0)


def test_deterministic():
    spec = IntegrandSpec(0.3 + 0.2j, (PowerFactor(2.0, -0.8 + 0.1j),))
    assert laplace_ray(spec, 1.5 + 0.4j) == laplace_ray(spec, 1.5 + 0.4j)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.05, 3.0), st.floats(-2, 2), st.floats(0.1, 6), st.floats(-6, 6))
def test_power_scaling(ar, ai, yr, yi):
    alpha, y = complex(ar, ai), complex(yr, yi)
    r = laplace_ray(IntegrandSpec(alpha), y, RayPath(theta=-math.atan2(y.imag, y.real)))
    ref = gamma(alpha) * cmath.exp(-alpha * cmath.log(y))
    assert abs(r.value - ref) <= 1e-11 * abs(ref)


def test_power_scaling_unrotated():
    for alpha, y in ((0.4, 2.0), (1.7 - 0.5j, 1.0 + 0.8j), (2.5j + 0.3, 3.0 - 1.0j)):
        r = laplace_ray(IntegrandSpec(alpha), y)
        ref = gamma(alpha) * cmath.exp(-alpha * cmath.log(y))
        assert abs(r.value - ref) <= 1e-12 * abs(ref)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.1, 2.5), st.floats(-1, 1), st.floats(0.5, 5), st.floats(-0.3, 0.3),
       st.floats(-0.6, 0.6))
def test_ray_rotation_independence(ar, beta, yr, yarg, theta):
    # branch point at -1/2; any ray with Re(y e^{i theta}) > 0 in the right half-plane is admissible
    y = cmath.rect(yr, yarg)
    spec = IntegrandSpec(complex(ar, 0.3), (PowerFactor(2.0, beta),))
    r0 = laplace_ray(spec, y, RayPath(theta=0.0))
    r1 = laplace_ray(spec, y, RayPath(theta=theta))
    assert abs(r0.value - r1.value) <= 2e-12 * abs(r0.value) + 1e-15


def test_error_estimate_is_honest_on_oracles():
    cases = [(0.25, -0.75, 4.0), (0.7, -1.1, 1.0), (1.3, 0.4, 0.6)]
    for alpha, beta, y in cases:
        r = laplace_ray(IntegrandSpec(alpha, (PowerFactor(2.0, beta),)), y)
        f = lambda p: p ** (alpha - 1) * (1 + 2 * p) ** beta * math.exp(-y * p)
        ref = integrate.quad(f, 0, 1, epsabs=0, epsrel=2e-14, limit=400)[0] + \
            integrate.quad(f, 1, np.inf, epsabs=0, epsrel=2e-14, limit=400)[0]
        assert abs(r.value - ref) <= 10 * max(r.abs_err_estimate, 2e-16 * abs(ref))


def test_power_factor_taylor_matches_callable():
    f = PowerFactor(2j, -0.7 + 0.2j)
    c = f.taylor(60)
    for p in (0.1, -0.2j, 0.2 + 0.1j):
        assert abs(np.polyval(c[::-1], p) - f(p)) <= 1e-12


def test_default_config_values():
    assert DEFAULT_CONFIG.rel_tol == 1e-12
    assert DEFAULT_CONFIG.split_radius == 0.25
    assert DEFAULT_CONFIG.series_order == 40
    assert DEFAULT_CONFIG.max_quad_level == 12

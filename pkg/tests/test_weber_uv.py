import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import solve_ivp

from weberpcf import U, V, connection_matrix_uv, recip_gamma, u_minus, u_plus
from weberpcf.complex_gamma import sinpi
from weberpcf.verify import ode_residual, wronskian
from weberpcf.weber_uv import (
    half_line_integrals,
    scaled_u_minus,
    scaled_u_plus,
    u_plus_segment,
    u_plus_two_ray,
    values_at_zero,
)

SQRT_2_OVER_PI = math.sqrt(2 / math.pi)


def mp_u(a, z):
    return complex(mpmath.pcfu(a, z))


def mp_v(a, z):
    return complex(mpmath.pcfv(a, z))


def rel(x, ref):
    return abs(x - ref) / max(abs(ref), 1e-300) if ref != 0 else abs(x)


def outward_ode(a, z_end, w0, dw0):
    """Integrate w'' = (z^2/4 + a) w on the real axis from 0 to z_end."""
    def rhs(z, y):
        return [y[1], (z * z / 4 + a) * y[0]]
    sol = solve_ivp(rhs, (0.0, z_end), [w0, dw0], method="DOP853", rtol=1e-13, atol=1e-15)
    return sol.y[0, -1]


def test_u_minus_exact_cases():
    assert rel(u_minus(-0.5, 4).value, math.exp(-1)) <= 1e-13
    r = u_minus(-1.5, 1)
    assert rel(r.value, math.exp(-0.25)) <= 1e-13
    assert "finite_part" in r.path_flags


def test_u_minus_against_oracle():
    assert rel(u_minus(0, 1).value, mp_u(0, 1)) <= 1e-12


def test_u_plus_removable_point():
    r = u_plus(0.5, 1.0)
    assert np.isfinite(r.value) and "medianized" in r.path_flags
    assert rel(r.value * SQRT_2_OVER_PI, mp_v(0.5, 1)) <= 1e-12


@pytest.mark.parametrize("a, y", [(0.3, 2.0), (-0.2, 3.0), (0.0, 2.0), (1 + 0.5j, 1.5)])
def test_u_plus_segment_matches_two_ray_average(a, y):
    seg = u_plus_segment(a, y).value
    two = u_plus_two_ray(a, y).value
    assert rel(seg, two) <= 1e-10


def test_u_plus_against_two_ray_at_tight_tolerance():
    from weberpcf import DEFAULT_CONFIG
    tight = DEFAULT_CONFIG.with_(rel_tol=1e-14)
    assert rel(u_plus(0, 2).value, u_plus_two_ray(0, 2, tight, angle=0.5).value) <= 1e-12


@pytest.mark.parametrize("a, y", [(0.3, 2.0), (-0.2, 3.0), (1.2 - 0.4j, 1.0)])
def test_half_line_identities(a, y):
    i_up, i_lo = half_line_integrals(a, y)
    um = scaled_u_minus(a, y).value
    s = sinpi(a / 2 - 0.75)
    diff = i_up.value - i_lo.value
    ref = -2 ** (a + 1) * 1j * s * um
    assert abs(diff - ref) <= 1e-10 * max(abs(ref), abs(i_up.value))
    up = scaled_u_plus(a, y).value
    assert abs(up - (i_up.value + 1j * 2 ** a * s * um)) <= 1e-10 * abs(up)


@pytest.mark.parametrize("z, expected", [(2, math.exp(-1)), (1, math.exp(-0.25))])
def test_gaussian_solution(z, expected):
    assert rel(U(-0.5, z).value, expected) <= 1e-12


def test_polynomial_class_solutions():
    assert rel(U(-2.5, 2).value, 3 * math.exp(-1)) <= 1e-12
    assert rel(U(-1.5, 1).value, math.exp(-0.25)) <= 1e-12


def test_reflection_at_zero_parameter():
    assert rel(U(0, -1).value, math.sqrt(math.pi) * V(0, 1).value) <= 1e-12
    assert rel(V(0, -1.3).value, U(0, 1.3).value / math.sqrt(math.pi)) <= 1e-10


def test_v_half_against_outward_ode():
    (_, _), (v0, dv0) = values_at_zero(0.5)
    ref = outward_ode(0.5, 1.0, v0.real, dv0.real)
    assert rel(V(0.5, 1).value, ref) <= 1e-11
    assert rel(V(0.5, 1).value, mp_v(0.5, 1)) <= 1e-12


def test_v_one_against_outward_ode():
    (_, _), (v0, dv0) = values_at_zero(1.0)
    ref = outward_ode(1.0, 2.0, v0.real, dv0.real)
    assert rel(V(1, 2).value, ref) <= 1e-11


def test_values_at_zero_against_mpmath():
    for a in (0.0, 0.3, -1.7, 1 + 1j, -0.4):
        (u0, du0), (v0, dv0) = values_at_zero(a)
        assert abs(u0 - mp_u(a, 0)) <= 1e-13 * max(1, abs(u0))
        assert abs(v0 - mp_v(a, 0)) <= 1e-13 * max(1, abs(v0))
        assert abs(du0 - complex(mpmath.diff(lambda t: mpmath.pcfu(a, t), 0))) <= 1e-10 * max(1, abs(du0))
        assert abs(dv0 - complex(mpmath.diff(lambda t: mpmath.pcfv(a, t), 0))) <= 1e-10 * max(1, abs(dv0))
    # cos(pi/2) kills V at the origin for a = -1/2 and a = 3/2
    assert values_at_zero(-0.5)[1][0] == 0 and values_at_zero(1.5)[1][0] == 0


@pytest.mark.parametrize("a, z", [
    (0.3 + 0.2j, 1.5), (-1.7, 2.5 + 1j), (2j, -1.2 + 0.4j), (1.1, 3j), (0.4, -2j),
    (-0.9 - 0.6j, -0.8), (1.5, 0.0), (-3.5, 1.1), (0.5, -2.0),
])
def test_against_mpmath(a, z):
    assert rel(U(a, z).value, mp_u(a, z)) <= 1e-11
    assert rel(V(a, z).value, mp_v(a, z)) <= 1e-11


def test_matrix_special_values():
    m = connection_matrix_uv(0)
    assert np.allclose(m.as_array(), [[0, math.sqrt(math.pi)], [1 / math.sqrt(math.pi), 0]], rtol=0, atol=1e-14)
    m = connection_matrix_uv(0.5)
    assert m.m21 == 0 and abs(m.m11 + 1) <= 1e-15 and abs(m.m22 - 1) <= 1e-15


complex_a = st.builds(complex, st.floats(-4, 4), st.floats(-2, 2))


@settings(max_examples=200, deadline=None)
@given(complex_a)
def test_matrix_entries_and_determinant(a):
    m = connection_matrix_uv(a)
    assert abs(m.m11 + sinpi(a)) <= 1e-13 * max(1, abs(m.m11))
    assert abs(m.m12 - math.pi * recip_gamma(0.5 + a)) <= 1e-13 * max(1, abs(m.m12))
    assert abs(m.det + 1) <= 1e-12 * max(1, abs(m.m11) ** 2)


@settings(max_examples=200, deadline=None)
@given(complex_a)
def test_matrix_squares_to_identity(a):
    m = connection_matrix_uv(a)
    sq = (m @ m).as_array()
    scale = max(1.0, np.abs(m.as_array()).max() ** 2)
    assert np.abs(sq - np.eye(2)).max() <= 1e-11 * scale


@settings(max_examples=25, deadline=None)
@given(st.floats(0, 2), st.floats(-math.pi, math.pi), st.floats(0.5, 3), st.floats(-math.pi, math.pi))
def test_ode_residual_random(ar, aphi, zr, zphi):
    a, z = cmath.rect(ar, aphi), cmath.rect(zr, zphi)
    assert ode_residual("U", a, z) <= 1e-8
    assert ode_residual("V", a, z) <= 1e-8


def test_wronskian_value():
    ws = [wronskian("U", "V", 0.3 + 0.1j, z) for z in (0.7, 1.5, 3.0)]
    for w in ws:
        assert abs(w - SQRT_2_OVER_PI) <= 1e-9


def test_removable_point_continuity():
    # difference quotients at 1e-4 and 1e-5 agree to O(delta): linear approach, bounded slope
    base = U(-0.5, 1.3).value
    for side in (1, -1):
        q1 = (U(-0.5 + side * 1e-4, 1.3).value - base) / 1e-4
        q2 = (U(-0.5 + side * 1e-5, 1.3).value - base) / 1e-5
        assert abs(q1) <= 10 and abs(q1 - q2) <= 1e-3


def test_large_argument_against_mpmath():
    for a in (0.0, 0.7, -1 + 0.5j):
        assert rel(U(a, 10).value, mp_u(a, 10)) <= 1e-11
        assert rel(V(a, 10).value, mp_v(a, 10)) <= 1e-11

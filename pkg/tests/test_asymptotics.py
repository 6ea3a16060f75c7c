import cmath
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weberpcf import DomainError, E_minus, E_plus, U, V, asym_E, asym_U, asym_V, optimal_truncation
from weberpcf.asymptotics import AsymptoticSum

# the first omitted term at |z| >= 10 is far below double rounding; this is the floor
ROUNDING_FLOOR = 1e-13


def test_gaussian_series_terminates():
    for S in (0, 3, 10):
        r = asym_U(-0.5, 3 + 0.5j, S)
        assert abs(r.value - cmath.exp(-(3 + 0.5j) ** 2 / 4)) <= 1e-15
        assert r.last_term_magnitude == 0.0


def test_u_leading_term():
    assert abs(asym_U(1, 2, 0).value - math.exp(-1) * 2 ** -1.5) <= 1e-16


def test_partial_sums_differ_by_one_term():
    r5, r6 = asym_U(0, 10, 5), asym_U(0, 10, 6)
    assert abs(abs(r6.value - r5.value) - r5.last_term_magnitude) <= 4e-16 * abs(r5.value)


def test_v_series_terminates():
    z = 4.0
    r = asym_V(0.5, z, 7)
    assert abs(r.value - math.sqrt(2 / math.pi) * math.exp(z * z / 4)) <= 1e-15 * r.value.real


def test_v_leading_term():
    ref = math.sqrt(2 / math.pi) * math.exp(9 / 4) / math.sqrt(3)
    assert abs(asym_V(0, 3, 0).value - ref) <= 1e-15 * ref


def test_e_series_terminates_and_leading_term():
    x = 3.0
    assert abs(asym_E(0.5j, x, 9, 1).value - cmath.exp(0.25j * x * x)) <= 1e-15
    assert abs(asym_E(0, x, 0, 1).value - cmath.exp(2.25j) / math.sqrt(3)) <= 1e-15


def test_sector_discipline():
    with pytest.raises(DomainError):
        asym_U(0, cmath.rect(5, 0.8 * math.pi), 3)
    with pytest.raises(DomainError):
        asym_V(0, cmath.rect(5, 0.3 * math.pi), 3)
    with pytest.raises(DomainError):
        asym_E(0, cmath.rect(5, -0.3 * math.pi), 3, -1)
    with pytest.raises(DomainError):
        asym_U(0, 0, 3)
    with pytest.raises(DomainError):
        optimal_truncation(0, 0)


def test_optimal_truncation_values():
    assert optimal_truncation(-0.5, 7) == 0
    # exhaustive scan of |t_{S+1}| for a = 0, z = 10
    mags = []
    for S in range(201):
        t = mpmath.rf(0.5, 2 * S + 2) / (mpmath.factorial(S + 1) * mpmath.mpf(200) ** (S + 1))
        mags.append(abs(t))
    assert optimal_truncation(0, 10) == min(range(201), key=lambda S: mags[S])


def test_optimal_truncation_grows_like_square():
    s1, s2 = optimal_truncation(0.3, 4), optimal_truncation(0.3, 8)
    assert 3.0 <= s2 / s1 <= 5.0


@pytest.mark.parametrize("kind, fn, asym", [
    ("U", U, lambda a, z, S: asym_U(a, z, S)),
    ("V", V, lambda a, z, S: asym_V(a, z, S)),
    ("E+", E_plus, lambda a, z, S: asym_E(a, z, S, 1)),
    ("E-", E_minus, lambda a, z, S: asym_E(a, z, S, -1)),
])
@pytest.mark.parametrize("a", [0.0, 0.3, -0.7 + 0.4j, 1j, -1.0])
@pytest.mark.parametrize("r", [8.0, 10.0, 14.0])
def test_matches_quadrature(kind, fn, asym, a, r):
    S = optimal_truncation(a, r, kind)
    s = asym(a, r, S)
    q = fn(a, r).value
    assert abs(s.value - q) <= 2 * s.last_term_magnitude + ROUNDING_FLOOR * abs(q)
    if r == 10.0:
        assert abs(s.value - q) <= 1e-9 * abs(q)


@settings(max_examples=100, deadline=None)
@given(st.builds(complex, st.floats(-1, 1), st.floats(-1, 1)), st.floats(1, 30),
       st.floats(-0.7, 0.7), st.integers(0, 40))
def test_sum_invariants(a, r, th, S):
    s = asym_U(a, cmath.rect(r, th), S)
    assert isinstance(s, AsymptoticSum)
    assert s.terms_used == S + 1 and s.last_term_magnitude >= 0


def test_invalid_inputs():
    with pytest.raises(ValueError):
        asym_U(0, 2, -1)
    with pytest.raises(ValueError):
        asym_E(0, 2, 1, 0)
    with pytest.raises(ValueError):
        optimal_truncation(0, 2, kind="W")

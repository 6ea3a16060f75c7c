import cmath
import json
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weberpcf import StencilError, SuiteReport, ode_residual, run_suite, wronskian
from weberpcf.verify import SUITES, maclaurin_solution, random_grid, richardson


def gaussian(a, z):
    return cmath.exp(-z * z / 4)


def test_residual_of_exact_solution():
    assert ode_residual(gaussian, -0.5, 1.0, h=1e-3) <= 1e-8


def test_residual_of_non_solution():
    # (1 - z^2/4 - a) e^z at z = 1 over the norm |z^2 w/4| + |w''|
    r = ode_residual(lambda a, z: cmath.exp(z), 0.0, 1.0)
    assert abs(r - 0.75 / 1.25) <= 1e-8


def test_residual_of_u():
    assert ode_residual("U", 0.3 + 0.2j, 1.5) <= 1e-8


def test_residual_with_fine_spacing():
    assert ode_residual("U", 0.3 + 0.2j, 1.5, h=1e-3) <= 1e-7


def test_wronskian_antisymmetry_and_values():
    assert abs(wronskian("U", "U", 0.3, 1.5)) <= 1e-10
    vals = [wronskian("U", "V", 0.0, z) for z in (0.7, 1.5, 3.0)]
    assert max(abs(v - vals[0]) for v in vals) <= 1e-9
    assert abs(vals[0] - math.sqrt(2 / math.pi)) <= 1e-9
    assert abs(wronskian("E+", "E-", 0.2, 1.1) + 1j) <= 1e-9


def test_stencil_errors():
    with pytest.raises(StencilError):
        ode_residual("U", 0, 1.0, h=0.0)
    with pytest.raises(StencilError):
        ode_residual("U", 0, 1.0, h=0.5)
    with pytest.raises(ValueError):
        ode_residual("W", 0, 1.0)


def test_richardson_removes_leading_term():
    f = lambda h: 2.0 + 3 * h ** 4
    assert abs(richardson(f(0.1), f(0.05), 4) - 2.0) <= 1e-15


@settings(max_examples=50, deadline=None)
@given(st.builds(complex, st.floats(-2, 2), st.floats(-2, 2)), st.builds(complex, st.floats(-2, 2), st.floats(-2, 2)))
def test_maclaurin_solution_matches_mpmath(a, z):
    w0 = complex(mpmath.pcfu(a, 0))
    dw0 = complex(mpmath.diff(lambda t: mpmath.pcfu(a, t), 0))
    ref = complex(mpmath.pcfu(a, z))
    assert abs(maclaurin_solution(a, z, w0, dw0) - ref) <= 1e-10 * max(1, abs(ref))


def test_random_grid_is_seeded_and_in_range():
    g1, g2 = random_grid(20, 7), random_grid(20, 7)
    assert g1 == g2 and g1 != random_grid(20, 8)
    for a, z in g1:
        assert abs(a) <= 2 and 0.5 <= abs(z) <= 3


@settings(max_examples=100)
@given(st.lists(st.tuples(st.floats(0, 1, allow_nan=False), st.floats(0, 1)), min_size=0, max_size=10))
def test_report_invariants(rows):
    rep = SuiteReport("x")
    for i, (res, tol) in enumerate(rows):
        rep.add({"i": i}, res, tol)
    assert all(c.passed == (c.residual <= c.tolerance) for c in rep.cases)
    assert rep.worst_residual == max((r for r, _ in rows), default=0.0)
    assert rep.passed == all(r <= t for r, t in rows)


def test_nan_residual_fails():
    rep = SuiteReport("x")
    rep.add({}, float("nan"), 1.0)
    assert not rep.passed


@pytest.mark.parametrize("suite, grid", [
    ("lemma", None), ("exact", None), ("link", None), ("medianization", None),
    ("connection_uv", {"a": [0, 0.5, 1 + 1j, -0.7j], "z": [1.3]}),
    ("ode", {"n": 4}),
])
def test_suites_pass(suite, grid):
    rep = run_suite(suite, grid)
    assert rep.cases and rep.passed, rep.to_dict()


def test_deterministic_reports():
    g = {"n": 3}
    r1 = json.dumps(run_suite("ode", g).to_dict())
    r2 = json.dumps(run_suite("ode", g).to_dict())
    assert r1 == r2


def test_run_suite_errors():
    with pytest.raises(ValueError):
        run_suite("bogus")
    with pytest.raises(ValueError):
        run_suite("connection_uv", {"a": []})


def test_suite_registry():
    expected = {"lemma", "connection_uv", "connection_e", "eestar", "link", "asymptotic", "ode", "wronskian"}
    assert expected <= set(SUITES)


@pytest.mark.parametrize("seed", [None, 7])
def test_all_suites_worst_residual(seed):
    rep = run_suite("all") if seed is None else run_suite("all", seed=seed)
    assert rep.passed
    assert rep.worst_residual <= 1e-8

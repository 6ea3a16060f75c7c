"""Numerical verification: ODE residuals, Wronskians and identity suites.

Every suite returns a ``SuiteReport`` whose cases carry the measured
residual, the tolerance and the verdict.  Values at ``-z`` that would
otherwise come from the connection formulas themselves are computed
independently by summing the Maclaurin series of the ODE solution from the
closed-form data at the origin.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Union

import numpy as np

from .asymptotics import asym_E, asym_U, asym_V, optimal_truncation
from .config import DEFAULT_CONFIG, EvalConfig, EvalResult
from .errors import PCFError, StencilError
from .finite_part import TaylorSeries, finite_part_laplace, gamma_normalized_fp
from .complex_gamma import log_gamma, recip_gamma
from .contour_quadrature import PowerFactor
from .weber_e import (
    E_minus,
    E_plus,
    classical_connection,
    classical_E,
    classical_Estar,
    classical_phases,
    connection_matrix_E,
    raw_continuation_coefficients,
    u_e_link,
    values_at_zero_E,
    whittaker_W,
)
from .weber_uv import (
    U,
    V,
    connection_matrix_uv,
    half_line_integrals,
    scaled_u_minus,
    scaled_u_plus,
    u_plus_ray,
    u_plus_segment,
    u_plus_two_ray,
    values_at_zero,
)

__all__ = [
    "CaseResult",
    "SuiteReport",
    "SUITES",
    "DEFAULT_SEED",
    "FUNCTIONS",
    "ode_residual",
    "wronskian",
    "second_derivative",
    "first_derivative",
    "maclaurin_solution",
    "richardson",
    "run_suite",
]

DEFAULT_SEED = 20240611
ODE_TOL = 1e-8


def _val(r) -> complex:
    return complex(r.value) if isinstance(r, EvalResult) else complex(r)


def _wrap(f):
    return lambda a, z, cfg=DEFAULT_CONFIG: _val(f(a, z, cfg))


#: evaluators by id, each ``f(a, z, cfg) -> complex``
FUNCTIONS: Dict[str, Callable] = {
    "U": _wrap(U),
    "V": _wrap(V),
    "E+": _wrap(E_plus),
    "E-": _wrap(E_minus),
}

# sign s in w'' = (s z^2/4 + a) w
_EQUATION = {"U": 1.0, "V": 1.0, "E+": -1.0, "E-": -1.0}


@dataclass(frozen=True)
class CaseResult:
    inputs: dict
    residual: float
    tolerance: float
    passed: bool


@dataclass
class SuiteReport:
    suite_id: str
    cases: List[CaseResult] = field(default_factory=list)

    @property
    def worst_residual(self) -> float:
        return max((c.residual for c in self.cases), default=0.0)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def add(self, inputs: dict, residual: float, tolerance: float):
        residual = float(residual)
        if not math.isfinite(residual):
            residual = math.inf
        self.cases.append(CaseResult(inputs, residual, tolerance, residual <= tolerance))

    def to_dict(self) -> dict:
        return {
            "suite_id": self.suite_id,
            "passed": self.passed,
            "worst_residual": self.worst_residual,
            "cases": [asdict(c) for c in self.cases],
        }


def _resolve(fn) -> Callable:
    if isinstance(fn, str):
        try:
            return FUNCTIONS[fn]
        except KeyError:
            raise ValueError(f"unknown function id {fn!r}") from None
    return lambda a, z, cfg=DEFAULT_CONFIG: _val(fn(a, z))


def _default_h(z: complex, order: int = 2) -> float:
    # balances O(h^6) truncation against noise/h^order
    return (3e-2 if order == 2 else 1e-2) * max(1.0, abs(z))


def _stencil(f, a, z, h, cfg):
    if not (h > 0 and math.isfinite(h)):
        raise StencilError(f"stencil spacing must be positive, got {h!r}")
    if h > 0.25 * max(1.0, abs(z)):
        raise StencilError(f"stencil spacing {h:.3g} too coarse at |z| = {abs(z):.3g}")
    try:
        return [f(a, z + k * h, cfg) for k in (-2, -1, 0, 1, 2)]
    except PCFError as exc:
        raise StencilError(f"stencil leaves the evaluable region: {exc}") from exc


def richardson(coarse: complex, fine: complex, order: int) -> complex:
    """Eliminate the ``h^order`` error term from values at ``h`` and ``h/2``."""
    q = 2.0 ** order
    return fine + (fine - coarse) / (q - 1.0)


def second_derivative(f, a, z, h, cfg=DEFAULT_CONFIG, refine=True):
    """5-point central second difference, Richardson-refined with ``h/2``.

    Returns ``(w(z), w''(z))``.
    """
    def d2(hh):
        v = _stencil(f, a, z, hh, cfg)
        return v[2], (-v[0] + 16 * v[1] - 30 * v[2] + 16 * v[3] - v[4]) / (12 * hh * hh)

    w, c = d2(h)
    if not refine:
        return w, c
    _, f2 = d2(0.5 * h)
    return w, richardson(c, f2, 4)


def first_derivative(f, a, z, h, cfg=DEFAULT_CONFIG, refine=True):
    """5-point central first difference, Richardson-refined with ``h/2``."""
    def d1(hh):
        v = _stencil(f, a, z, hh, cfg)
        return v[2], (v[0] - 8 * v[1] + 8 * v[3] - v[4]) / (12 * hh)

    w, c = d1(h)
    if not refine:
        return w, c
    _, f2 = d1(0.5 * h)
    return w, richardson(c, f2, 4)


def ode_residual(fn: Union[str, Callable], a: complex, z: complex, h: Optional[float] = None,
                 cfg: EvalConfig = DEFAULT_CONFIG, equation: Optional[str] = None,
                 refine: bool = True) -> float:
    """Relative residual of the Weber equation for ``fn`` at ``z``.

    ``fn`` is a function id (``U``, ``V``, ``E+``, ``E-``) or a callable
    ``f(a, z)``.  ``U``/``V`` satisfy ``w'' = (z^2/4 + a) w`` and ``E+-``
    satisfy ``w'' = (a - z^2/4) w``; a callable uses the first form unless
    ``equation`` names another function id.  The residual is normalised by
    ``|z^2 w/4| + |a w| + |w''|``.
    """
    a = complex(a)
    z = complex(z)
    f = _resolve(fn)
    key = equation or (fn if isinstance(fn, str) else "U")
    s = _EQUATION[key]
    h = _default_h(z) if h is None else float(h)
    w, d2 = second_derivative(f, a, z, h, cfg, refine)
    q = s * z * z / 4.0
    res = abs(d2 - (q + a) * w)
    norm = abs(q * w) + abs(a * w) + abs(d2)
    return res / norm if norm > 0 else res


def wronskian(fn1, fn2, a: complex, z: complex, h: Optional[float] = None,
              cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """``f1 f2' - f1' f2`` with Richardson-refined central differences."""
    a = complex(a)
    z = complex(z)
    f1, f2 = _resolve(fn1), _resolve(fn2)
    h = _default_h(z, 1) if h is None else float(h)
    w1, d1 = first_derivative(f1, a, z, h, cfg)
    w2, d2 = first_derivative(f2, a, z, h, cfg)
    return w1 * d2 - d1 * w2


def maclaurin_solution(a: complex, z: complex, w0: complex, dw0: complex, sign: float = 1.0,
                       tol: float = 1e-18, max_terms: int = 4000) -> complex:
    """Solution of ``w'' = (sign z^2/4 + a) w`` with ``w(0) = w0``, ``w'(0) = dw0``.

    Sums the Maclaurin series from the recurrence
    ``(n+2)(n+1) c_{n+2} = a c_n + sign c_{n-2} / 4``.
    """
    a = complex(a)
    z = complex(z)
    c = [complex(w0), complex(dw0)]
    total = c[0] + c[1] * z
    zn = z
    small = 0
    for n in range(0, max_terms):
        prev = c[n - 2] if n >= 2 else 0j
        c.append((a * c[n] + sign * 0.25 * prev) / ((n + 2) * (n + 1)))
        zn = zn * z
        term = c[-1] * zn
        total += term
        scale = max(abs(total), 1e-300)
        small = small + 1 if abs(term) <= tol * scale else 0
        if small >= 4:
            return total
    raise ArithmeticError("Maclaurin series did not converge")


def _rel(x: complex, ref: complex) -> float:
    return abs(x - ref) / max(abs(ref), 1e-300)


def _crec(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


# ---------------------------------------------------------------- lemma

def _cofactor_taylor(beta: complex, c: complex, y: complex, n: int) -> np.ndarray:
    """Maclaurin coefficients of ``e^{-p y} (1 + c p)^beta``."""
    out = np.empty(n, dtype=complex)
    exp_c = np.empty(n, dtype=complex)
    b = 1 + 0j
    e = 1 + 0j
    for k in range(n):
        out[k] = b
        exp_c[k] = e
        b = b * c * (beta - k) / (k + 1)
        e = e * (-y) / (k + 1)
    return np.convolve(out, exp_c)[:n]


def _neville_zero(xs: Sequence[float], ys: Sequence[complex]) -> complex:
    """Polynomial extrapolation of ``ys(xs)`` to ``x = 0``."""
    p = [complex(v) for v in ys]
    n = len(xs)
    for m in range(1, n):
        for i in range(n - m):
            p[i] = (xs[i + m] * p[i] - xs[i] * p[i + 1]) / (xs[i + m] - xs[i])
    return p[0]


_LEMMA_COFACTORS = (
    {"beta": -1.1, "c": 2.0, "y": 1.0},
    {"beta": 0.5 + 0.3j, "c": 1.0, "y": 2.0 - 0.5j},
)
_DELTAS = (1e-2, 1e-3, 1e-4)


def _lemma(report: SuiteReport, cfg: EvalConfig, grid: dict):
    ks = grid.get("k", (0, 1, 2, 3))
    deltas = grid.get("deltas", _DELTAS)
    for cf in grid.get("cofactors", _LEMMA_COFACTORS):
        pf = PowerFactor(cf["c"], cf["beta"])
        y = complex(cf["y"])
        phi = TaylorSeries(coeff_fn=pf.taylor, radius=1.0 / abs(cf["c"]))
        taylor = _cofactor_taylor(cf["beta"], cf["c"], y, 8)
        for k in ks:
            # normalized finite part at alpha = -k: (-1)^k phi~^(k)(0)
            exact = (-1) ** k * math.factorial(k) * taylor[k]
            g0 = gamma_normalized_fp(-k, phi, y, cfg, phi_fn=pf).value
            rec = {"k": k, "beta": _crec(cf["beta"]), "y": _crec(y)}
            report.add({**rec, "check": "limit path"}, _rel(g0, exact) if exact != 0 else abs(g0),
                       1e-11)
            sym = [0.5 * (gamma_normalized_fp(-k + d, phi, y, cfg, phi_fn=pf).value
                          + gamma_normalized_fp(-k - d, phi, y, cfg, phi_fn=pf).value)
                   for d in deltas]
            ext = _neville_zero([d * d for d in deltas], sym)
            report.add({**rec, "check": "delta limit"}, abs(ext - g0) / max(1.0, abs(g0)), 1e-8)
            # eps * FP int p^(-k-1+eps) phi -> phi~^(k)(0)/k!
            epsf = [0.5 * (d * finite_part_laplace(-k + d, phi, y, cfg, phi_fn=pf).value
                           - d * finite_part_laplace(-k - d, phi, y, cfg, phi_fn=pf).value)
                    for d in deltas]
            ext1 = _neville_zero([d * d for d in deltas], epsf)
            report.add({**rec, "check": "epsilon scaling"},
                       abs(ext1 - taylor[k]) / max(1.0, abs(taylor[k])), 1e-8)
    exp_series = TaylorSeries(coeff_fn=lambda n: np.array(
        [(-1.0) ** j / math.factorial(j) for j in range(n)], dtype=complex))
    for al in grid.get("unit_alphas", (2.3, -1.0, -3.0)):
        g = gamma_normalized_fp(al, exp_series, 0.0, cfg, phi_fn=lambda p: np.exp(-p)).value
        report.add({"alpha": _crec(al), "check": "exp cofactor"}, abs(g - 1.0), 1e-11)


# ---------------------------------------------------------------- connections

def _uv_reflected(a: complex, z: complex):
    """``U(a,-z), V(a,-z)`` from the Maclaurin series (independent of the matrix)."""
    (u0, du0), (v0, dv0) = values_at_zero(a)
    return (maclaurin_solution(a, -z, u0, du0), maclaurin_solution(a, -z, v0, dv0))


def _e_reflected(a: complex, x: complex):
    """``E_-(a,-x), E_+(a,-x)`` from the Maclaurin series."""
    (m0, dm0), (p0, dp0) = values_at_zero_E(a)
    return (maclaurin_solution(a, -x, m0, dm0, sign=-1.0),
            maclaurin_solution(a, -x, p0, dp0, sign=-1.0))


def _connection_uv(report: SuiteReport, cfg: EvalConfig, grid: dict):
    for a in grid.get("a", (0, 0.5, -0.5 + 1e-3, 1 + 1j, -0.7j)):
        a = complex(a)
        m = connection_matrix_uv(a)
        M = m.as_array()
        report.add({"a": _crec(a), "check": "M^2 = I"}, float(np.abs(M @ M - np.eye(2)).max()), 1e-11)
        report.add({"a": _crec(a), "check": "det M = -1"}, abs(m.det + 1.0), 1e-12)
        for z in grid.get("z", (1.3, 2.1)):
            u = U(a, z, cfg).value
            v = V(a, z, cfg).value
            ur, vr = _uv_reflected(a, z)
            rec = {"a": _crec(a), "z": _crec(z)}
            report.add({**rec, "check": "U(a,-z)"}, _rel(m.m11 * u + m.m12 * v, ur), 1e-9)
            report.add({**rec, "check": "V(a,-z)"}, _rel(m.m21 * u + m.m22 * v, vr), 1e-9)


def _connection_e(report: SuiteReport, cfg: EvalConfig, grid: dict):
    for a in grid.get("a", (0, 0.3, 0.5j - 1e-3j, 0.4 - 0.3j)):
        a = complex(a)
        m = connection_matrix_E(a)
        M = m.as_array()
        report.add({"a": _crec(a), "check": "M^2 = I"}, float(np.abs(M @ M - np.eye(2)).max()), 1e-11)
        c1, c2 = raw_continuation_coefficients(a)
        al_p, al_m = 0.25 + 0.5j * a, 0.25 - 0.5j * a
        m12_raw = c2 * cmath.exp(log_gamma(al_p)) * recip_gamma(al_m)
        report.add({"a": _crec(a), "check": "raw coefficients"},
                   max(_rel(c1, m.m11), _rel(m12_raw, m.m12)), 1e-11)
        for x in grid.get("x", (1.2, 1.7)):
            em = E_minus(a, x, cfg).value
            ep = E_plus(a, x, cfg).value
            rm, rp = _e_reflected(a, x)
            rec = {"a": _crec(a), "x": _crec(x)}
            report.add({**rec, "check": "E-(a,-x)"}, _rel(m.m11 * em + m.m12 * ep, rm), 1e-9)
            report.add({**rec, "check": "E+(a,-x)"}, _rel(m.m21 * em + m.m22 * ep, rp), 1e-9)
            ph = classical_phases(a)
            cE, cS = classical_connection(a)
            c_e = math.sqrt(2.0) * cmath.exp(0.25j * math.pi) * ph.half_phase
            c_s = math.sqrt(2.0) * cmath.exp(-0.25j * math.pi) / ph.half_phase
            lhs = c_s * rm
            rhs = cE * c_e * ep + cS * c_s * em
            report.add({**rec, "check": "E*(a,-x) classical"}, _rel(rhs, lhs), 1e-9)


def _eestar(report: SuiteReport, cfg: EvalConfig, grid: dict):
    for a in grid.get("a_real", (0.0, 0.5, -0.8, 1.3)):
        for x in grid.get("x", (1.0, 2.0, -1.5)):
            e = classical_E(a, x, cfg).value
            es = classical_Estar(a, x, cfg).value
            rec = {"a": _crec(a), "x": _crec(x)}
            report.add({**rec, "check": "E* = conj E"}, _rel(es, e.conjugate()), 1e-11)
            wp, wn = whittaker_W(a, x, cfg)
            report.add({**rec, "check": "W real"},
                       max(abs(wp.value.imag) / max(abs(wp.value), 1e-300),
                           abs(wn.value.imag) / max(abs(wn.value), 1e-300)), 1e-11)
            ph = classical_phases(a)
            # k (k + 2 e^{pi a}) = 1
            report.add({"a": _crec(a), "check": "k identity"},
                       abs(ph.k * (ph.k + 2 * math.exp(math.pi * a)) - 1.0), 1e-12)
    ph = classical_phases(0.0)
    report.add({"a": _crec(0), "check": "k(0) = sqrt2 - 1"}, abs(ph.k - (math.sqrt(2) - 1)), 1e-14)
    report.add({"a": _crec(0), "check": "rho(0) = pi/8"}, abs(ph.rho - math.pi / 8), 1e-14)


def _link(report: SuiteReport, cfg: EvalConfig, grid: dict):
    for a in grid.get("a", (0.0, 0.6)):
        for x in grid.get("x", (1.5, 2.0)):
            r1, r2 = u_e_link(a, x, cfg)
            rec = {"a": _crec(a), "x": _crec(x)}
            report.add({**rec, "check": "U(ia, x e^{-i pi/4})"}, r1, 1e-9)
            report.add({**rec, "check": "U(-ia, x e^{i pi/4})"}, r2, 1e-9)
            e = classical_E(a, x, cfg).value
            es = classical_Estar(a, x, cfg).value
            report.add({**rec, "check": "E* = conj E"}, _rel(es, e.conjugate()), 1e-11)


# ---------------------------------------------------------------- asymptotics

_ASYM = {
    "U": (FUNCTIONS["U"], lambda a, z, S: asym_U(a, z, S)),
    "V": (FUNCTIONS["V"], lambda a, z, S: asym_V(a, z, S)),
    "E+": (FUNCTIONS["E+"], lambda a, z, S: asym_E(a, z, S, 1)),
    "E-": (FUNCTIONS["E-"], lambda a, z, S: asym_E(a, z, S, -1)),
}


def _asymptotic(report: SuiteReport, cfg: EvalConfig, grid: dict):
    for a in grid.get("a", (0.0, 0.3, -0.7, 0.5j, 0.6 - 0.6j, -1.0)):
        for z in grid.get("z", (10.0, 10.0 * cmath.exp(0.15j), 10.0 * cmath.exp(-0.15j))):
            for kind, (f, series) in _ASYM.items():
                S = optimal_truncation(a, z, kind)
                s = series(a, z, S)
                q = f(a, z, cfg)
                report.add({"a": _crec(a), "z": _crec(z), "function": kind, "terms": S + 1},
                           _rel(s.value, q), 1e-9)


# ---------------------------------------------------------------- ODE / Wronskian

def random_grid(n: int, seed: int = DEFAULT_SEED, a_max: float = 2.0, r_min: float = 0.5,
                r_max: float = 3.0):
    """``n`` reproducible ``(a, z)`` pairs with ``|a| <= a_max`` and ``r_min <= |z| <= r_max``."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        a = a_max * math.sqrt(rng.uniform()) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        z = rng.uniform(r_min, r_max) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        out.append((complex(a), complex(z)))
    return out


def _ode(report: SuiteReport, cfg: EvalConfig, grid: dict, seed: int):
    pts = random_grid(grid.get("n", 50), seed)
    for name in grid.get("functions", ("U", "V", "E+", "E-")):
        for a, z in pts:
            report.add({"function": name, "a": _crec(a), "z": _crec(z)},
                       ode_residual(name, a, z, cfg=cfg), ODE_TOL)


def _wronskian(report: SuiteReport, cfg: EvalConfig, grid: dict):
    ref_uv = math.sqrt(2.0 / math.pi)
    for a in grid.get("a", (0.0, 0.3 + 0.2j, -1.2, 0.8j)):
        zs = grid.get("z", (0.7, 1.5, 3.0))
        w_uv = [wronskian("U", "V", a, z, cfg=cfg) for z in zs]
        w_e = [wronskian("E+", "E-", a, z, cfg=cfg) for z in zs]
        for z, w in zip(zs, w_uv):
            report.add({"pair": "U,V", "a": _crec(a), "z": _crec(z)}, abs(w - ref_uv) / ref_uv, 1e-9)
        for z, w in zip(zs, w_e):
            report.add({"pair": "E+,E-", "a": _crec(a), "z": _crec(z)}, abs(w + 1j), 1e-9)
        report.add({"pair": "U,V", "a": _crec(a), "check": "constant"},
                   max(abs(p - q) for p in w_uv for q in w_uv) / ref_uv, 1e-9)
        report.add({"pair": "E+,E-", "a": _crec(a), "check": "constant"},
                   max(abs(p - q) for p in w_e for q in w_e), 1e-9)
        report.add({"pair": "U,U", "a": _crec(a), "z": _crec(zs[0])},
                   abs(wronskian("U", "U", a, zs[0], cfg=cfg)), 1e-10)


# ---------------------------------------------------------------- extras

def _exact(report: SuiteReport, cfg: EvalConfig, grid: dict):
    cases = [
        ("U", -0.5, 2.0, math.exp(-1.0)),
        ("U", -1.5, 1.0, math.exp(-0.25)),
        ("U", -2.5, 2.0, 3.0 * math.exp(-1.0)),
        ("E+", 0.5j, 2.0, cmath.exp(1j)),
        ("E-", -0.5j, 2.0, cmath.exp(-1j)),
    ]
    for name, a, z, ref in cases:
        report.add({"function": name, "a": _crec(a), "z": _crec(z)},
                   _rel(FUNCTIONS[name](a, z, cfg), ref), 1e-10)
    # E+((n + 1/2) i, x) e^{-ix^2/4} is a polynomial of degree n
    for n in grid.get("poly_degrees", (0, 1, 2)):
        a = (n + 0.5) * 1j
        xs = np.linspace(0.6, 2.4, 2 * n + 3)
        ys = np.array([E_plus(a, x, cfg).value * cmath.exp(-0.25j * x * x) for x in xs])
        V_ = np.vander(xs, n + 1)
        coef, *_ = np.linalg.lstsq(V_.astype(complex), ys, rcond=None)
        res = float(np.abs(V_ @ coef - ys).max() / np.abs(ys).max())
        report.add({"function": "E+", "a": _crec(a), "check": f"degree-{n} polynomial"}, res, 1e-9)


def _medianization(report: SuiteReport, cfg: EvalConfig, grid: dict):
    for a, y in grid.get("points", ((0.3, 2.0), (-0.2, 3.0))):
        rec = {"a": _crec(a), "y": _crec(y)}
        seg = u_plus_segment(a, y, cfg).value
        two = u_plus_two_ray(a, y, cfg).value
        report.add({**rec, "check": "segment vs two rays"}, _rel(seg, two), 1e-10)
        for th in (0.6, -0.6):
            report.add({**rec, "check": f"single ray at {th:+g} with jump"},
                       _rel(u_plus_ray(a, y, th, cfg).value, two), 1e-10)
        up, lo = half_line_integrals(a, y, cfg)
        um = scaled_u_minus(a, y, cfg).value
        sn = cmath.sin(math.pi * (0.5 * a - 0.75))
        rhs = -(2.0 ** (a + 1)) * 1j * sn * um
        report.add({**rec, "check": "difference of half-line integrals"},
                   _rel(up.value - lo.value, rhs), 1e-10)
        sp = scaled_u_plus(a, y, cfg).value
        report.add({**rec, "check": "upper ray plus jump"},
                   _rel(up.value + 1j * 2.0 ** a * sn * um, sp), 1e-10)


_LOCI = (
    ("U", -0.5, 2.0),
    ("U", -2.5, 1.5),
    ("V", 0.5, 1.0),
    ("V", 2.5, 1.2),
    ("E+", 0.5j, 1.5),
    ("E-", -0.5j, 1.5),
)


def _analyticity(report: SuiteReport, cfg: EvalConfig, grid: dict):
    deltas = grid.get("deltas", _DELTAS)
    for name, a0, z in grid.get("loci", _LOCI):
        f = FUNCTIONS[name]
        f0 = f(a0, z, cfg)
        sym = [0.5 * (f(a0 + d, z, cfg) + f(a0 - d, z, cfg)) for d in deltas]
        ext = _neville_zero([d * d for d in deltas], sym)
        rec = {"function": name, "a": _crec(a0), "z": _crec(z)}
        report.add({**rec, "check": "Richardson limit"}, _rel(ext, f0), 1e-8)
        # one-sided quotients, linear in delta, reach the central-difference derivative
        slopes = [(f(a0 + d, z, cfg) - f0) / d for d in deltas]
        central = [(f(a0 + d, z, cfg) - f(a0 - d, z, cfg)) / (2 * d) for d in deltas]
        d_one = _neville_zero(list(deltas), slopes)
        d_two = _neville_zero([d * d for d in deltas], central)
        report.add({**rec, "check": "linear approach"}, _rel(d_one, d_two), 1e-8)


SUITES = {
    "lemma": _lemma,
    "connection_uv": _connection_uv,
    "connection_e": _connection_e,
    "eestar": _eestar,
    "link": _link,
    "asymptotic": _asymptotic,
    "ode": _ode,
    "wronskian": _wronskian,
    "exact": _exact,
    "medianization": _medianization,
    "analyticity": _analyticity,
}


def run_suite(suite: str, grid: Optional[dict] = None, cfg: EvalConfig = DEFAULT_CONFIG,
              seed: int = DEFAULT_SEED) -> SuiteReport:
    """Run one suite (or ``all``) and return its report.

    ``grid`` overrides the default sample points of a suite (keys depend on
    the suite, e.g. ``{"n": 10}`` for ``ode`` or ``{"a": [...]}``).
    """
    grid = {} if grid is None else dict(grid)
    if suite == "all":
        report = SuiteReport("all")
        for name in SUITES:
            sub = run_suite(name, grid.get(name), cfg, seed)
            for c in sub.cases:
                report.cases.append(CaseResult({"suite": name, **c.inputs}, c.residual,
                                               c.tolerance, c.passed))
        return report
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES) + ['all']}")
    for key, val in grid.items():
        if isinstance(val, (list, tuple)) and len(val) == 0:
            raise ValueError(f"grid entry {key!r} is empty")
    report = SuiteReport(suite)
    runner = SUITES[suite]
    if suite == "ode":
        runner(report, cfg, grid, seed)
    else:
        runner(report, cfg, grid)
    return report

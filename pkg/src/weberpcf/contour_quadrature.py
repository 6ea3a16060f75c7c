"""Laplace-type integrals along rays and segments with algebraic endpoint singularities.

Everything is reduced to integrals over a real variable ``t >= 0``.  On the
ray ``p = t e^{i theta}`` the integrand ``p^(alpha-1) psi(p) exp(-p y)``
becomes ``e^{i theta alpha} t^(alpha-1) psi(t e^{i theta}) exp(-lambda t)``
with ``lambda = y e^{i theta}``.  The ray is cut into geometric panels and
each panel is integrated with the tanh-sinh rule; panels touching an
algebraic endpoint singularity get a longer transformed range so that nodes
reach ``~1e-300`` of the endpoint.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from . import kernels
from .config import DEFAULT_CONFIG, EvalConfig, EvalResult
from .complex_gamma import phase
from .errors import NonconvergentRayError, QuadratureError, SingularRayError

__all__ = [
    "PowerFactor",
    "IntegrandSpec",
    "RayPath",
    "laplace_ray",
    "segment_singular",
    "ray_panels",
    "ts_integrate",
    "endpoint_tail",
]

_TWO_PI = 2.0 * math.pi
_TAU_SMOOTH = 3.625
_TAU_SINGULAR = 6.0
_L0 = 3
_MIN_LEVEL = 5
_TAIL_DECADES = 46.0


# ---------------------------------------------------------------------------
# integrand description


@dataclass(frozen=True)
class PowerFactor:
    """``(1 + c p)^beta`` evaluated as ``exp(beta (Log(1 + c p) + 2 pi i winding))``."""

    c: complex
    beta: complex
    winding: int = 0

    def __call__(self, p):
        lg = np.log(1.0 + self.c * np.asarray(p, dtype=complex))
        if self.winding:
            lg = lg + 2j * math.pi * self.winding
        return np.exp(self.beta * lg)

    @property
    def branch_point(self) -> Optional[complex]:
        if self.c == 0:
            return None
        return -1.0 / complex(self.c)

    def taylor(self, n: int) -> np.ndarray:
        """First ``n`` Maclaurin coefficients, by the binomial recurrence."""
        out = np.empty(n, dtype=complex)
        b = cmath.exp(2j * math.pi * self.beta * self.winding) if self.winding else 1 + 0j
        c = complex(self.c)
        beta = complex(self.beta)
        for k in range(n):
            out[k] = b
            b = b * c * (beta - k) / (k + 1)
        return out

    def rotated(self, omega: complex) -> "PowerFactor":
        return PowerFactor(complex(self.c) * omega, self.beta, self.winding)


@dataclass(frozen=True)
class IntegrandSpec:
    """Integrand ``p^(alpha-1) psi(p)`` with an endpoint singularity at ``p = 0``.

    ``psi`` is ``const * prod(factors)`` unless ``psi_fn`` is given; in that
    case ``taylor_fn(n)`` must return the first ``n`` Maclaurin coefficients
    and ``radius`` the radius of analyticity at 0.
    """

    alpha: complex
    factors: tuple = ()
    const: complex = 1.0
    psi_fn: Optional[Callable] = field(default=None, compare=False)
    taylor_fn: Optional[Callable[[int], np.ndarray]] = field(default=None, compare=False)
    radius: Optional[float] = None

    def psi(self, p):
        if self.psi_fn is not None:
            return self.psi_fn(p)
        out = np.full(np.shape(p), complex(self.const), dtype=complex)
        for f in self.factors:
            out = out * f(p)
        return out

    def taylor(self, n: int) -> np.ndarray:
        if self.psi_fn is not None:
            if self.taylor_fn is None:
                raise ValueError("IntegrandSpec with psi_fn needs taylor_fn")
            gen = getattr(self.taylor_fn, "take", self.taylor_fn)
            return np.asarray(gen(n), dtype=complex)[:n]
        out = np.zeros(n, dtype=complex)
        out[0] = complex(self.const)
        for f in self.factors:
            out = np.convolve(out, f.taylor(n))[:n]
        return out

    def analytic_radius(self) -> float:
        if self.psi_fn is not None:
            return math.inf if self.radius is None else float(self.radius)
        r = math.inf
        for f in self.factors:
            bp = f.branch_point
            if bp is not None:
                r = min(r, abs(bp))
        return r

    def branch_points(self) -> list:
        return [f.branch_point for f in self.factors if f.branch_point is not None]

    @property
    def fast(self) -> bool:
        return self.psi_fn is None


@dataclass(frozen=True)
class RayPath:
    theta: float = 0.0
    truncation: Optional[float] = None


# ---------------------------------------------------------------------------
# tanh-sinh rule


@lru_cache(maxsize=None)
def _level_nodes(level: int, sing_left: bool, sing_right: bool):
    """Nodes of level ``level`` on [0, 1] (only the new ones above level ``_L0``).

    Returns fractional distances from the left and right ends and weights that
    already include the step ``h``.
    """
    h = 2.0 ** (-level)
    kmin = -int((_TAU_SINGULAR if sing_left else _TAU_SMOOTH) / h)
    kmax = int((_TAU_SINGULAR if sing_right else _TAU_SMOOTH) / h)
    k = np.arange(kmin, kmax + 1)
    if level > _L0:
        k = k[k % 2 != 0]
    tau = k * h
    u = 0.5 * math.pi * np.sinh(tau)
    e = np.exp(-2.0 * np.abs(u))
    s_left = np.where(u >= 0, 1.0 / (1.0 + e), e / (1.0 + e))
    s_right = np.where(u >= 0, e / (1.0 + e), 1.0 / (1.0 + e))
    w = h * 0.5 * math.pi * np.cosh(tau) * 2.0 * e / (1.0 + e) ** 2
    keep = (s_left > 0) & (s_right > 0) & (w > 0)

    for arr in (s_left, s_right, w):
        arr.setflags(write=False)
    return s_left[keep], s_right[keep], w[keep]


def ts_integrate(fsum, panels, cfg: EvalConfig = DEFAULT_CONFIG, scale: float = 0.0,
                 endpoint_tails=None):
    """Tanh-sinh over a list of panels ``(a, b, singular_left, singular_right)``.

    ``fsum(x, dl, dr, w)`` returns ``sum w f(x)`` where ``dl = x - a`` and
    ``dr = b - x`` are accurate endpoint distances.  ``endpoint_tails(cuts)``,
    if given, returns the analytic contribution of the excluded end pieces;
    ``cuts`` is a list of ``(panel_index, side, width, level)``; see
    ``endpoint_tail``.

    Returns ``(value, error_estimate, converged)``.
    """
    trap = 0j
    prev = None
    err = math.inf
    for level in range(_L0, cfg.max_quad_level + 1):
        xs, dls, drs, ws = [], [], [], []
        cuts = []
        for idx, (a, b, sl, sr) in enumerate(panels):
            s_l, s_r, w = _level_nodes(level, bool(sl), bool(sr))
            width = b - a
            dl = width * s_l
            dr = width * s_r
            xs.append(np.where(s_l <= s_r, a + dl, b - dr))
            dls.append(dl)
            drs.append(dr)
            ws.append(w * width)
            if sl:
                cuts.append((idx, "left", width, level))
            if sr:
                cuts.append((idx, "right", width, level))
        new = fsum(np.concatenate(xs), np.concatenate(dls), np.concatenate(drs),
                   np.concatenate(ws))
        trap = new if level == _L0 else 0.5 * trap + new
        total = trap
        if endpoint_tails is not None and cuts:
            total = total + endpoint_tails(cuts)
        if prev is not None:
            err = abs(total - prev)
            tol = max(cfg.abs_tol, cfg.rel_tol * max(abs(total), scale))
            if level >= _MIN_LEVEL and err <= tol:
                return total, err, True
        prev = total
    return prev, err, False


def endpoint_tail(alpha: complex, coef: complex, width: float, level: int) -> complex:
    """Trapezoid terms beyond the last singular-end node, for ``coef * t^(alpha-1)``.

    Past ``tau = -6`` the nodes sit within ``1e-300`` of the endpoint, where the
    cofactor equals its endpoint value; the sum is done in log space so the
    underflowing distances never materialise.
    """
    alpha = complex(alpha)
    if alpha.real <= 0:
        return 0j
    h = 2.0 ** (-level)
    k = -int(_TAU_SINGULAR / h) - 1
    acc = 0j
    logw = math.log(width)
    while True:
        tau = k * h
        u = 0.5 * math.pi * math.sinh(tau)
        if u < -1e6:
            break
        log_s = 2.0 * u - math.log1p(math.exp(2.0 * u))
        dlog = 2.0 * 0.5 * math.pi * math.cosh(tau) / (1.0 + math.exp(2.0 * u))
        term = cmath.exp(alpha * (logw + log_s)) * dlog
        acc += term
        if abs(term) < 1e-20 * max(abs(acc), 1e-300):
            break
        k -= 1
    return coef * h * acc


# ---------------------------------------------------------------------------
# rays


def ray_panels(t0: float, lam: complex, first: float, magnitude, breaks_extra=(),
               upper: float = math.inf):
    """Geometric panel breaks on ``[t0, T]`` with ``T`` past the exponential tail.

    ``magnitude(t)`` returns ``|f(t)|`` for the tail test.
    """
    lr = complex(lam).real
    if math.isfinite(upper):
        end = upper
    else:
        if lr < 0:
            raise NonconvergentRayError(f"Re(lambda)={lr} < 0: no decay along the ray")
        start = max(t0, first)
        ref = max(magnitude(start) * start, 1e-300)
        end = start + (_TAIL_DECADES / lr if lr > 0 else start)
        for _ in range(200):
            m = magnitude(end) * end
            if m <= 1e-21 * ref or m == 0.0:
                break
            ref = max(ref, m)
            end = end + 0.5 * (end - t0) + (10.0 / lr if lr > 0 else end)
        else:
            raise QuadratureError("could not locate the decay of the integrand")
    pts = [t0]
    b = first if t0 == 0.0 else 2.0 * t0
    while b < end:
        pts.append(b)
        b *= 2.0
    pts.append(end)
    for e in breaks_extra:
        if pts[0] < e < end:
            pts.append(e)
    pts = sorted(set(pts))
    merged = [pts[0]]
    for p in pts[1:]:
        if p - merged[-1] > 1e-3 * p:
            merged.append(p)
        else:
            merged[-1] = p if p == end else merged[-1]
    if merged[-1] != end:
        merged[-1] = end
    return merged


def _check_ray(spec: IntegrandSpec, y: complex, theta: float, strict: bool = True):
    omega = cmath.exp(1j * theta)
    lam = complex(y) * omega
    # a real part at rounding level of |lambda| counts as zero
    if lam.real < 0 or (strict and lam.real <= 1e-14 * abs(lam)):
        raise NonconvergentRayError(
            f"Re(y e^(i theta)) = {lam.real:.3g} <= 0 for y={y!r}, theta={theta:.6g}")
    for bp in spec.branch_points():
        d = abs(phase(bp * omega.conjugate()))
        if d < 1e-8:
            raise SingularRayError(f"branch point {bp!r} lies on the ray theta={theta}")
    return omega, lam


def _ray_fsum(spec: IntegrandSpec, omega: complex, lam: complex, alpha: complex):
    if spec.fast:
        facs = [f.rotated(omega) for f in spec.factors]
        cs = [f.c for f in facs]
        bs = [f.beta for f in facs]
        ks = [f.winding for f in facs]

        def fsum(x, dl, dr, w):
            return kernels.weighted_sum(x, w, alpha, lam, cs, bs, ks)

        def mag(t):
            return abs(kernels.weighted_sum(np.array([t]), np.array([1.0]), alpha, lam, cs, bs, ks))

        return fsum, mag, complex(spec.const)

    def fvals(x):
        x = np.asarray(x, dtype=float)
        return np.exp((alpha - 1.0) * np.log(x) - lam * x) * spec.psi(x * omega)

    def fsum(x, dl, dr, w):
        return complex(np.dot(w, fvals(x)))

    def mag(t):
        return float(abs(fvals(np.array([t]))[0]))

    return fsum, mag, 1.0


def laplace_ray(spec: IntegrandSpec, y: complex, path: RayPath = RayPath(),
                cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """``int_0^{inf e^{i theta}} exp(-p y) p^(alpha-1) psi(p) dp`` for ``Re alpha > 0``.

    The power ``p^(alpha-1)`` takes ``arg p = theta`` on the ray.
    """
    alpha = complex(spec.alpha)
    if alpha.real <= 0:
        raise ValueError("laplace_ray needs Re(alpha) > 0; use finite_part for the rest")
    theta = float(path.theta)
    omega, lam = _check_ray(spec, y, theta)
    fsum, mag, const = _ray_fsum(spec, omega, lam, alpha)
    radius = spec.analytic_radius()
    first = min(0.25, 0.5 * radius, 1.0 / abs(lam))
    extra = []
    for bp in spec.branch_points():
        proj = (bp * omega.conjugate()).real
        if proj > 0:
            extra.append(proj)
    upper = math.inf if path.truncation is None else float(path.truncation)
    pts = ray_panels(0.0, lam, first, mag, extra, upper=upper)
    panels = [(pts[0], pts[1], True, False)] + [
        (a, b, False, False) for a, b in zip(pts[1:-1], pts[2:])]
    psi0 = complex(spec.taylor(1)[0]) if spec.fast else complex(spec.psi(np.array([0.0]))[0])
    if spec.fast:
        psi0 = psi0 / const

    def tails(cuts):
        acc = 0j
        for idx, side, width, level in cuts:
            if idx == 0 and side == "left":
                acc += endpoint_tail(alpha, psi0, width, level)
        return acc

    val, err, ok = ts_integrate(fsum, panels, cfg, endpoint_tails=tails)
    if not ok:
        raise QuadratureError(f"laplace_ray did not converge (last difference {err:.3g})")
    pref = const * cmath.exp(1j * theta * alpha)
    value = pref * val
    err = abs(pref) * err + 1e-16 * abs(value)
    return EvalResult(value, err, frozenset({"direct"}))


# ---------------------------------------------------------------------------
# segments


def segment_singular(spec0: IntegrandSpec, spec1: IntegrandSpec, y: complex,
                     endpoints: Sequence[float] = (0.0, 1.0),
                     cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """``int_{q0}^{q1} (q-q0)^(a0-1) (q1-q)^(a1-1) psi0(q) psi1(q) e^{-q y} dq``.

    Both exponents must have positive real part; ``psi0`` and ``psi1`` are the
    analytic cofactors of the two specs, evaluated at ``q``.
    """
    a0 = complex(spec0.alpha)
    a1 = complex(spec1.alpha)
    if a0.real <= 0 or a1.real <= 0:
        raise ValueError("segment_singular is the convergent case: Re(alpha) > 0 at both ends")
    q0, q1 = (float(e.real if isinstance(e, complex) else e) for e in endpoints)
    if not q1 > q0:
        raise ValueError("segment endpoints must satisfy q0 < q1")
    y = complex(y)
    width = q1 - q0

    def psi(q):
        return spec0.psi(q) * spec1.psi(q) * np.exp(-y * q)

    def fsum(x, dl, dr, w):
        f = np.exp((a0 - 1.0) * np.log(dl) + (a1 - 1.0) * np.log(dr)) * psi(x)
        return complex(np.dot(w, f))

    psi_l = complex(psi(np.array([q0]))[0])
    psi_r = complex(psi(np.array([q1]))[0])

    def tails(cuts):
        acc = 0j
        for _, side, w, level in cuts:
            if side == "left":
                acc += endpoint_tail(a0, psi_l * cmath.exp((a1 - 1.0) * math.log(width)), w, level)
            else:
                acc += endpoint_tail(a1, psi_r * cmath.exp((a0 - 1.0) * math.log(width)), w, level)
        return acc

    val, err, ok = ts_integrate(fsum, [(q0, q1, True, True)], cfg, endpoint_tails=tails)
    if not ok:
        raise QuadratureError(f"segment_singular did not converge (last difference {err:.3g})")
    return EvalResult(val, err + 1e-16 * abs(val), frozenset({"direct"}))

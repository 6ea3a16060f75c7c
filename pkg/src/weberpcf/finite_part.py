"""Hadamard finite parts of endpoint-divergent Laplace integrals.

For ``phi`` analytic at 0 the finite part of ``int_0^R t^(alpha-1) phi(t) dt``
is ``sum_n phi_n R^(n+alpha) / (n+alpha)``; past ``R`` the integral is an
ordinary one.  Dividing by ``Gamma(alpha)`` turns every moment into

    R^(n+alpha) * alpha (alpha+1) ... (alpha+n-1) / Gamma(alpha+n+1),

which is entire in ``alpha``, so the normalised integral

    g(alpha) = (1/Gamma(alpha)) FP int_0^inf p^(alpha-1) phi(p) dp

is evaluated by one formula for every complex ``alpha``, including the
points ``alpha = -k`` where it reduces to ``(-1)^k phi^(k)(0)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig, EvalResult
from .errors import FinitePartPoleError, QuadratureError, SeriesTruncationError
from .complex_gamma import recip_gamma
from .contour_quadrature import (
    IntegrandSpec,
    _check_ray,
    _ray_fsum,
    ray_panels,
    ts_integrate,
)

__all__ = [
    "TaylorSeries",
    "moment_coefficient",
    "finite_part_segment",
    "gamma_normalized_fp",
    "fp_ray",
    "pole_distance",
]

_POLE_EPS = 1e-12
_EPS = 2.2e-16


@dataclass(frozen=True)
class TaylorSeries:
    """Maclaurin data of an analytic cofactor.

    Either a fixed coefficient sequence or a generator ``coeff_fn(n)``
    returning the first ``n`` coefficients.
    """

    coefficients: Sequence[complex] = ()
    radius: float = math.inf
    coeff_fn: Optional[Callable[[int], Sequence[complex]]] = None

    def take(self, n: int) -> np.ndarray:
        if self.coeff_fn is not None:
            return np.asarray(self.coeff_fn(n), dtype=complex)[:n]
        c = np.asarray(self.coefficients, dtype=complex)
        if n > c.size:
            raise SeriesTruncationError(
                f"{n} Taylor coefficients requested, {c.size} available")
        return c[:n]

    @property
    def available(self) -> float:
        return math.inf if self.coeff_fn is not None else len(self.coefficients)

    def __call__(self, p, n: Optional[int] = None):
        if n is None:
            n = 60 if self.coeff_fn is not None else len(self.coefficients)
        c = self.take(n)
        return np.polyval(c[::-1], np.asarray(p, dtype=complex))


def pole_distance(alpha: complex) -> float:
    """Distance from ``alpha`` to the nearest point of ``{0, -1, -2, ...}``."""
    alpha = complex(alpha)
    k = min(0, round(alpha.real))
    return abs(alpha - k)


def moment_coefficient(alpha: complex, n: int, R: float) -> complex:
    """``R^(n+alpha) / ((n+alpha) Gamma(alpha))`` in its entire product form."""
    alpha = complex(alpha)
    prod = 1 + 0j
    for j in range(n):
        prod *= alpha + j
    return cmath.exp((n + alpha) * math.log(R)) * prod * recip_gamma(alpha + n + 1)


def _normalized_moments(alpha: complex, N: int, R: float) -> np.ndarray:
    """``moment_coefficient(alpha, n, R)`` for ``n < N`` without overflow."""
    out = np.empty(N, dtype=complex)
    q = None
    logr = math.log(R)
    ra = cmath.exp(alpha * logr)
    rn = 1.0
    # direct evaluation until Re(alpha + n) >= 1, then a ratio recurrence
    nstar = max(0, math.ceil(1.0 - alpha.real))
    prod = 1 + 0j
    for n in range(N):
        if n <= nstar:
            if n > 0:
                prod *= alpha + n - 1
            q = prod * recip_gamma(alpha + n + 1)
        else:
            q = q * (alpha + n - 1) / (alpha + n)
        out[n] = ra * rn * q
        rn *= R
    return out


def _plain_moments(alpha: complex, N: int, R: float) -> np.ndarray:
    n = np.arange(N)
    den = n + alpha
    if np.min(np.abs(den)) < _POLE_EPS:
        raise FinitePartPoleError(
            f"finite part has a pole at alpha={alpha!r}; use the normalised form")
    return np.exp((n + alpha) * math.log(R)) / den


def _series_head(alpha: complex, coeffs_fn, R: float, cfg: EvalConfig, normalized: bool,
                 available=math.inf):
    """Sum ``sum_n d_n m_n`` until the terms are negligible.

    Returns ``(value, error, n_used)``.
    """
    n = max(cfg.series_order, 24)
    if available < n:
        n = int(available)
    while True:
        d = coeffs_fn(n)
        m = _normalized_moments(alpha, n, R) if normalized else _plain_moments(alpha, n, R)
        terms = d * m
        mags = np.abs(terms)
        scale = float(mags.max()) if mags.size else 0.0
        tail = float(mags[-4:].sum()) if n >= 4 else math.inf
        if scale == 0.0 or tail <= 1e-17 * scale:
            return complex(terms.sum()), tail + 1e-16 * scale, n
        if n >= cfg.max_series_order or n >= available:
            raise SeriesTruncationError(
                f"Taylor head not converged with {n} terms at R={R:.3g} "
                f"(tail/scale={tail / scale:.2e})")
        n = min(2 * n, cfg.max_series_order, available)


def fp_ray(spec: IntegrandSpec, y: complex, theta: float = 0.0,
           cfg: EvalConfig = DEFAULT_CONFIG, normalized: bool = True,
           upper: float = math.inf) -> EvalResult:
    """Finite part of ``int_0^{upper e^{i theta}} e^{-p y} p^(alpha-1) psi(p) dp``.

    With ``normalized`` the result is divided by ``Gamma(alpha)`` (entire in
    ``alpha``).  ``upper`` is measured along the ray; ``inf`` needs
    ``Re(y e^{i theta}) > 0``.
    """
    alpha = complex(spec.alpha)
    y = complex(y)
    omega = cmath.exp(1j * theta)
    lam = y * omega
    if math.isinf(upper):
        omega, lam = _check_ray(spec, y, theta, strict=False)
    fsum, mag, const = _ray_fsum(spec, omega, lam, alpha)

    radius = spec.analytic_radius()
    R = cfg.split_radius
    if math.isfinite(radius):
        R = min(R, 0.5 * radius)
    if lam != 0:
        R = min(R, 1.0 / abs(lam))
    R = min(R, upper)

    rot = omega
    lam_c = lam

    available = math.inf
    if not spec.fast and isinstance(spec.taylor_fn, TaylorSeries):
        available = spec.taylor_fn.available

    def coeffs(n):
        # a finite coefficient list is a polynomial: pad with zeros
        psi = np.zeros(n, dtype=complex)
        m = int(min(n, available))
        psi[:m] = spec.taylor(m)
        if spec.fast:
            psi = psi / const
        k = np.arange(n)
        psi = psi * rot ** k
        ex = np.empty(n, dtype=complex)
        ex[0] = 1.0
        for j in range(1, n):
            ex[j] = ex[j - 1] * (-lam_c) / j
        return np.convolve(psi, ex)[:n]

    flags = {"direct"}
    if alpha.real <= 0:
        flags.add("finite_part")
    rg = recip_gamma(alpha) if normalized else 1.0
    if normalized and pole_distance(alpha) < _POLE_EPS:
        flags.add("limit")

    head, herr, _ = _series_head(alpha, coeffs, R, cfg, normalized)

    tail = 0j
    terr = 0.0
    if upper > R and rg != 0:
        extra = []
        for bp in spec.branch_points():
            proj = (bp * omega.conjugate()).real
            if proj > 0:
                extra.append(proj)
        pts = ray_panels(R, lam, 2.0 * R, mag, extra, upper=upper)
        panels = [(a, b, False, False) for a, b in zip(pts[:-1], pts[1:])]
        tail, terr, ok = ts_integrate(fsum, panels, cfg, scale=abs(head) / max(abs(rg), 1e-300))
        if not ok:
            raise QuadratureError(f"finite-part tail did not converge (difference {terr:.3g})")
    pref = const * cmath.exp(1j * theta * alpha)
    value = pref * (head + rg * tail)
    # rounding in exp(-lambda t), t^alpha and the prefactors grows with |lambda|, |alpha|
    err = abs(pref) * (herr + abs(rg) * terr) + _EPS * (4.0 + abs(lam) + abs(alpha)) * abs(value)
    return EvalResult(value, err, frozenset(flags))


def finite_part_segment(alpha: complex, phi: TaylorSeries, R: float,
                        cfg: EvalConfig = DEFAULT_CONFIG,
                        phi_fn: Optional[Callable] = None) -> complex:
    """``FP int_0^R t^(alpha-1) phi(t) dt`` for ``alpha`` off ``{0, -1, -2, ...}``.

    Uses ``N = cfg.series_order`` Taylor terms (fewer if ``phi`` has fewer)
    and, when ``phi_fn`` is given, adds the ordinary integral of the
    ``N``-times-subtracted integrand.
    """
    alpha = complex(alpha)
    if pole_distance(alpha) < _POLE_EPS:
        raise FinitePartPoleError(f"finite part has a pole at alpha={alpha!r}")
    if R > 0.5 * phi.radius:
        raise ValueError("finite_part_segment needs R <= radius/2")
    N = int(min(cfg.series_order + 1, phi.available))
    c = phi.take(N)
    head = complex(np.dot(c, _plain_moments(alpha, N, R)))
    if phi_fn is None:
        return head
    # the subtracted remainder is O(t^N); skip the stretch where it is below rounding
    cn = abs(c[-1]) if c[-1] != 0 else max(np.abs(c).max(), 1e-300)
    t_lo = R * min(1.0, (1e-18 / max(cn * R ** N, 1e-300)) ** (1.0 / N)) if N > 0 else 0.0
    if t_lo >= R:
        return head
    coeffs_rev = c[::-1]

    def fsum(x, dl, dr, w):
        r = np.asarray(phi_fn(x), dtype=complex) - np.polyval(coeffs_rev, x)
        return complex(np.dot(w, np.exp((alpha - 1.0) * np.log(x)) * r))

    rem, err, ok = ts_integrate(fsum, [(t_lo, R, False, False)], cfg, scale=abs(head))
    if not ok:
        raise QuadratureError("finite_part_segment remainder did not converge")
    return head + rem


def gamma_normalized_fp(alpha: complex, phi: TaylorSeries, y: complex,
                        cfg: EvalConfig = DEFAULT_CONFIG,
                        phi_fn: Optional[Callable] = None) -> EvalResult:
    """``(1/Gamma(alpha)) FP int_0^inf p^(alpha-1) phi(p) e^{-p y} dp`` along ``R_+``.

    Entire in ``alpha``; needs ``Re y > 0``.  ``phi_fn`` is the pointwise
    cofactor (defaults to the partial sums of ``phi``, which then must be
    entire or the tail must stay inside its radius).
    """
    fn = phi_fn if phi_fn is not None else (lambda p: phi(p))
    spec = IntegrandSpec(alpha, psi_fn=fn, taylor_fn=phi, radius=phi.radius)
    return fp_ray(spec, y, 0.0, cfg, normalized=True)


def finite_part_laplace(alpha: complex, phi: TaylorSeries, y: complex,
                        cfg: EvalConfig = DEFAULT_CONFIG,
                        phi_fn: Optional[Callable] = None) -> EvalResult:
    """Unnormalised ``FP int_0^inf p^(alpha-1) phi(p) e^{-p y} dp``; poles at ``-N_0``."""
    fn = phi_fn if phi_fn is not None else (lambda p: phi(p))
    spec = IntegrandSpec(alpha, psi_fn=fn, taylor_fn=phi, radius=phi.radius)
    return fp_ray(spec, y, 0.0, cfg, normalized=False)

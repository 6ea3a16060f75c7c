"""Parabolic cylinder functions U(a, z) and V(a, z) for complex a and z.

With ``y = z^2`` both functions are Laplace transforms of Borel-plane
functions with algebraic singularities:

    u_-(a, y) = e^{-y/4} / Gamma(al_-) FP int_0^inf e^{-py} p^(al_- - 1) (1+2p)^(-al_- - 1/2) dp
    u_+(a, y) = e^{ y/4} / Gamma(al_+) med int_0^inf e^{-qy} q^(al_+ - 1) (1-2q)^(al_- - 1) dq

with ``al_- = a/2 + 1/4`` and ``al_+ = 1/4 - a/2``.  ``U(a, z) = u_-(a, z^2)``
and ``V(a, z) = sqrt(2/pi) u_+(a, z^2)``.  The second integrand has a branch
point at ``q = 1/2`` on the positive axis; ``med`` is the average of the
integrals just above and just below it.  Away from the real y-axis a single
rotated ray is used and the Stokes jump, an entire multiple of ``u_-``, is
added back in closed form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig, EvalResult, combine
from .errors import DomainError
from .finite_part import fp_ray
from .complex_gamma import cospi, phase, recip_gamma, sinpi
from .contour_quadrature import IntegrandSpec, PowerFactor

__all__ = [
    "ConnectionCoefficients",
    "connection_matrix_uv",
    "u_minus",
    "u_plus",
    "u_plus_ray",
    "u_plus_segment",
    "u_plus_two_ray",
    "half_line_integrals",
    "scaled_u_minus",
    "scaled_u_plus",
    "U",
    "V",
    "direct_half_plane",
    "values_at_zero",
]

_EPS = 2.2e-16
_SQRT_PI = math.sqrt(math.pi)
_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)
_SQRT_PI_OVER_2 = math.sqrt(math.pi / 2.0)

# rays stay this far (radians) from the branch direction of the integrand
RAY_MARGIN = 0.1
# near the real y-axis u_+ is the plain average of the rays at +-MEDIAN_ANGLE
MEDIAN_ANGLE = 0.3
MEDIAN_SECTOR = 0.2


@dataclass(frozen=True)
class ConnectionCoefficients:
    """2x2 matrix ``M`` with ``(f1(-z), f2(-z)) = M (f1(z), f2(z))``."""

    m11: complex
    m12: complex
    m21: complex
    m22: complex

    def as_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]], dtype=complex)

    @property
    def det(self) -> complex:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __matmul__(self, other: "ConnectionCoefficients") -> "ConnectionCoefficients":
        p = self.as_array() @ other.as_array()
        return ConnectionCoefficients(p[0, 0], p[0, 1], p[1, 0], p[1, 1])

    def apply(self, f1: EvalResult, f2: EvalResult):
        """Return the reflected pair as two ``EvalResult`` objects."""
        r1 = combine([(self.m11, f1), (self.m12, f2)], extra_flags=("connection",))
        r2 = combine([(self.m21, f1), (self.m22, f2)], extra_flags=("connection",))
        return r1, r2


def connection_matrix_uv(a: complex) -> ConnectionCoefficients:
    """``(U(a,-z), V(a,-z)) = M (U(a,z), V(a,z))``, entire in ``a``."""
    a = complex(a)
    s = sinpi(a)
    return ConnectionCoefficients(
        -s,
        math.pi * recip_gamma(0.5 + a),
        cospi(a) * recip_gamma(0.5 - a),
        s,
    )


def _alphas(a: complex):
    return 0.5 * a + 0.25, 0.25 - 0.5 * a


def _minus_spec(a: complex) -> IntegrandSpec:
    al_m, _ = _alphas(a)
    return IntegrandSpec(al_m, (PowerFactor(2.0, -al_m - 0.5),))


def _plus_spec(a: complex) -> IntegrandSpec:
    al_m, al_p = _alphas(a)
    return IntegrandSpec(al_p, (PowerFactor(-2.0, al_m - 1.0),))


def _arg(y: complex, arg_y) -> float:
    return phase(y) if arg_y is None else float(arg_y)


def _clip(x: float, lo: float, hi: float) -> float:
    return min(max(x, lo), hi)


# e^{|y|/4} overflows double precision past this
MAX_ABS_Y = 2800.0


def _check_size(y: complex):
    if abs(y) > MAX_ABS_Y:
        raise DomainError(f"|y| = {abs(y):.4g} exceeds {MAX_ABS_Y:g}: e^(y/4) is outside double range")


def _check_sector(arg_y: float):
    # the clipped ray still decays as long as |arg(y e^{i theta})| < pi/2
    limit = 1.5 * math.pi - RAY_MARGIN - 0.2
    if abs(arg_y) > limit:
        raise DomainError(f"arg y = {arg_y:.4g} outside the continuable sector |arg y| < {limit:.4g}")


def u_minus(a: complex, y: complex, cfg: EvalConfig = DEFAULT_CONFIG, arg_y=None) -> EvalResult:
    """Recessive solution ``u_-(a, y) = U(a, sqrt(y))``.

    ``arg_y`` selects the sheet when ``y`` sits on the negative axis (for
    ``y = z^2`` pass ``2 arg z``).
    """
    a = complex(a)
    y = complex(y)
    _check_size(y)
    th_y = _arg(y, arg_y)
    _check_sector(th_y)
    theta = _clip(-th_y, -math.pi + RAY_MARGIN, math.pi - RAY_MARGIN)
    r = fp_ray(_minus_spec(a), y, theta, cfg)
    r = r.scaled(cmath.exp(-0.25 * y))
    return r.with_rel_floor(_EPS * (4.0 + abs(y) + abs(a)))


def _stokes_coefficient(a: complex) -> complex:
    # jump of the half-line integral across q = 1/2, in units of u_-
    return 1j * _SQRT_PI_OVER_2 * recip_gamma(0.5 - a)


def u_plus(a: complex, y: complex, cfg: EvalConfig = DEFAULT_CONFIG, arg_y=None) -> EvalResult:
    """Dominant solution ``u_+(a, y) = sqrt(pi/2) V(a, sqrt(y))`` (medianized)."""
    a = complex(a)
    y = complex(y)
    _check_size(y)
    th_y = _arg(y, arg_y)
    _check_sector(th_y)
    spec = _plus_spec(a)
    ey = cmath.exp(0.25 * y)
    if abs(th_y) < MEDIAN_SECTOR:
        up = fp_ray(spec, y, MEDIAN_ANGLE, cfg)
        lo = fp_ray(spec, y, -MEDIAN_ANGLE, cfg)
        r = combine([(0.5 * ey, up), (0.5 * ey, lo)], extra_flags=("medianized",))
        return r.with_rel_floor(_EPS * (4.0 + abs(y) + abs(a)))
    theta = -th_y
    if abs(theta) < RAY_MARGIN:
        theta = math.copysign(RAY_MARGIN, theta)
    theta = _clip(theta, -math.pi + RAY_MARGIN, math.pi - RAY_MARGIN)
    r = u_plus_ray(a, y, theta, cfg, arg_y=th_y)
    return r.with_rel_floor(_EPS * (4.0 + abs(y) + abs(a)))


def u_plus_ray(a: complex, y: complex, theta: float, cfg: EvalConfig = DEFAULT_CONFIG,
               arg_y=None) -> EvalResult:
    """``u_+`` from the single ray at angle ``theta`` plus the closed-form jump.

    A ray above ``q = 1/2`` (``theta > 0``) overshoots the median by half the
    jump; one below undershoots it by the same amount.
    """
    a = complex(a)
    y = complex(y)
    g = fp_ray(_plus_spec(a), y, theta, cfg)
    c = _stokes_coefficient(a)
    terms = [(cmath.exp(0.25 * y), g)]
    if c != 0:
        um = u_minus(a, y, cfg, arg_y=arg_y)
        terms.append((-c if theta > 0 else c, um))
    return combine(terms, extra_flags=("medianized",))


def u_plus_two_ray(a: complex, y: complex, cfg: EvalConfig = DEFAULT_CONFIG,
                   angle: float = MEDIAN_ANGLE) -> EvalResult:
    """``u_+`` as the plain average of the rays at ``+-angle`` (needs ``Re y > 0``)."""
    a = complex(a)
    y = complex(y)
    spec = _plus_spec(a)
    ey = cmath.exp(0.25 * y)
    up = fp_ray(spec, y, angle, cfg)
    lo = fp_ray(spec, y, -angle, cfg)
    return combine([(0.5 * ey, up), (0.5 * ey, lo)], extra_flags=("medianized",))


def scaled_u_minus(a: complex, y: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """``e^{-y/2} FP int_0^inf e^{-py} p^(al_- - 1)(1+2p)^(-al_- - 1/2) dp``.

    Equals ``e^{-y/4} Gamma(al_-) u_-``; poles at ``al_- = 0, -1, ...``.
    """
    r = fp_ray(_minus_spec(complex(a)), complex(y), 0.0, cfg, normalized=False)
    return r.scaled(cmath.exp(-0.5 * complex(y)))


def half_line_integrals(a: complex, y: complex, cfg: EvalConfig = DEFAULT_CONFIG,
                        angle: float = MEDIAN_ANGLE):
    """Unnormalized integrals of ``e^{-qy} q^(al_+ - 1)(1-2q)^(al_- - 1)``
    along the rays just above and just below ``q = 1/2``."""
    spec = _plus_spec(complex(a))
    up = fp_ray(spec, complex(y), angle, cfg, normalized=False)
    lo = fp_ray(spec, complex(y), -angle, cfg, normalized=False)
    return up, lo


def segment_integral(a: complex, y: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """Finite part of ``int_0^{1/2} e^{-qy} q^(al_+ - 1)(1-2q)^(al_- - 1) dq``.

    Split at ``q = 1/4``; the right half is written in ``s = 1/2 - q`` so that
    each piece has its singular endpoint at 0.
    """
    a = complex(a)
    y = complex(y)
    al_m, al_p = _alphas(a)
    left = fp_ray(_plus_spec(a), y, 0.0, cfg, normalized=False, upper=0.25)
    right_spec = IntegrandSpec(al_m, (PowerFactor(-2.0, al_p - 1.0),))
    right = fp_ray(right_spec, -y, 0.0, cfg, normalized=False, upper=0.25)
    c = cmath.exp(-0.5 * y) * cmath.exp((al_m - al_p) * math.log(2.0))
    return combine([(1.0, left), (c, right)], extra_flags=("finite_part",) if
                   (al_m.real <= 0 or al_p.real <= 0) else ())


def u_plus_segment(a: complex, y: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """``u_+`` from the segment ``[0, 1/2]`` plus a multiple of ``u_-``.

    Valid away from the poles of ``Gamma(al_-)``; used as an independent
    check of the ray evaluation.
    """
    a = complex(a)
    y = complex(y)
    _, al_p = _alphas(a)
    J = segment_integral(a, y, cfg)
    um = scaled_u_minus(a, y, cfg)
    c = cmath.exp(a * math.log(2.0)) * cospi(0.5 * a - 0.75)
    scaled = combine([(1.0, J), (c, um)])
    return scaled.scaled(recip_gamma(al_p) * cmath.exp(0.25 * y), ("medianized",))


def scaled_u_plus(a: complex, y: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """``e^{-y/4} Gamma(al_+) u_+``, the average of the two half-line integrals."""
    up, lo = half_line_integrals(a, y, cfg)
    return combine([(0.5, up), (0.5, lo)], extra_flags=("medianized",))


def direct_half_plane(z: complex) -> bool:
    """True where ``z`` is evaluated directly (``Re z > 0`` or the upper imaginary axis)."""
    z = complex(z)
    return z.real > 0 or (z.real == 0 and z.imag > 0)


def _u_at_zero(a: complex) -> EvalResult:
    al_m, _ = _alphas(a)
    v = _SQRT_PI * cmath.exp(-al_m * math.log(2.0)) * recip_gamma(0.75 + 0.5 * a)
    return EvalResult(v, 1e-15 * abs(v), frozenset({"direct"}))


def _v_at_zero(a: complex) -> EvalResult:
    al_m, _ = _alphas(a)
    v = cmath.exp(al_m * math.log(2.0)) * cospi(0.25 - 0.5 * a) * recip_gamma(0.75 - 0.5 * a)
    return EvalResult(v, 1e-15 * abs(v), frozenset({"direct"}))


def values_at_zero(a: complex):
    """Closed forms ``((U, U'), (V, V'))`` at ``z = 0``, entire in ``a``."""
    a = complex(a)
    l2 = math.log(2.0)
    u0 = _u_at_zero(a).value
    du0 = -_SQRT_PI * cmath.exp(-(0.5 * a - 0.25) * l2) * recip_gamma(0.25 + 0.5 * a)
    v0 = _v_at_zero(a).value
    dv0 = (math.pi * cmath.exp((0.5 * a + 0.75) * l2) * recip_gamma(0.25 - 0.5 * a) ** 2
           * recip_gamma(0.75 + 0.5 * a))
    return (u0, du0), (v0, dv0)


def U(a: complex, z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """``U(a, z)``: recessive as ``z -> +inf``, entire in ``a`` and ``z``."""
    a = complex(a)
    z = complex(z)
    if z == 0:
        return _u_at_zero(a)
    if direct_half_plane(z):
        return u_minus(a, z * z, cfg, arg_y=2.0 * phase(z))
    w = -z
    m = connection_matrix_uv(a)
    return combine([(m.m11, U(a, w, cfg)), (m.m12, V(a, w, cfg))], extra_flags=("connection",))


def V(a: complex, z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """``V(a, z)``: dominant as ``z -> +inf``, entire in ``a`` and ``z``."""
    a = complex(a)
    z = complex(z)
    if z == 0:
        return _v_at_zero(a)
    if direct_half_plane(z):
        return u_plus(a, z * z, cfg, arg_y=2.0 * phase(z)).scaled(_SQRT_2_OVER_PI)
    w = -z
    m = connection_matrix_uv(a)
    return combine([(m.m21, U(a, w, cfg)), (m.m22, V(a, w, cfg))], extra_flags=("connection",))

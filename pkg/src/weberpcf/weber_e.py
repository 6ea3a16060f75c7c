"""Complex Weber functions E+(a, x), E-(a, x) and the classical E, E*, W.

E+- solve ``u'' + (x^2/4 - a) u = 0`` and behave like
``exp(+-i x^2/4) (x^2)^(-+ia/2 - 1/4)`` as ``x -> +inf``.  With ``s = x^2``

    v_+(a, s) = e^{ is/4} / Gamma(al) FP int_0^inf e^{-ps} p^(al-1) (1+2ip)^(-al-1/2) dp,  al = ia/2 + 1/4
    v_-(a, s) = e^{-is/4} / Gamma(al) FP int_0^inf e^{-ps} p^(al-1) (1-2ip)^(-al-1/2) dp,  al = 1/4 - ia/2

and ``E+-(a, x) = v_+-(a, x^2)``.  Where the Laplace ray would have to cross
the branch point at ``p = -+i/2`` the evaluation goes through ``U`` instead.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .config import DEFAULT_CONFIG, EvalConfig, EvalResult, combine
from .finite_part import fp_ray
from .complex_gamma import log_gamma, phase, recip_gamma
from .contour_quadrature import IntegrandSpec, PowerFactor
from .weber_uv import RAY_MARGIN, ConnectionCoefficients, U, direct_half_plane, values_at_zero

__all__ = [
    "ClassicalPhases",
    "classical_phases",
    "v_plus",
    "v_minus",
    "E_plus",
    "E_minus",
    "connection_matrix_E",
    "raw_continuation_coefficients",
    "classical_E",
    "classical_Estar",
    "classical_connection",
    "whittaker_W",
    "u_e_link",
    "values_at_zero_E",
]

_EPS = 2.2e-16
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_SQRT_PI = math.sqrt(math.pi)
# |arg| of the rotated Laplace exponent allowed before switching to the U route
_DECAY_MARGIN = 0.2


def _spec(a: complex, sign: int) -> IntegrandSpec:
    al = 0.25 + sign * 0.5j * a
    return IntegrandSpec(al, (PowerFactor(sign * 2j, -al - 0.5),))


def _ray_angle(arg_s: float, sign: int):
    """Ray angle for ``v_sign`` or ``None`` when the ray would cross the branch point.

    The branch point of ``v_+`` lies in direction ``pi/2``, so admissible rays
    are ``theta in (-3pi/2, pi/2)``; mirrored for ``v_-``.
    """
    theta = -arg_s
    if sign > 0:
        theta = min(max(theta, -math.pi + RAY_MARGIN), 0.5 * math.pi - RAY_MARGIN)
    else:
        theta = min(max(theta, -0.5 * math.pi + RAY_MARGIN), math.pi - RAY_MARGIN)
    if abs(arg_s + theta) > 0.5 * math.pi - _DECAY_MARGIN:
        return None
    return theta


def _v(a: complex, s: complex, sign: int, cfg: EvalConfig, arg_s=None) -> EvalResult:
    a = complex(a)
    s = complex(s)
    th = phase(s) if arg_s is None else float(arg_s)
    theta = _ray_angle(th, sign)
    if theta is None:
        x = cmath.rect(math.sqrt(abs(s)), 0.5 * th)
        return _e_via_u(a, x, sign, cfg)
    r = fp_ray(_spec(a, sign), s, theta, cfg)
    r = r.scaled(cmath.exp(sign * 0.25j * s))
    return r.with_rel_floor(_EPS * (4.0 + abs(s) + abs(a)))


def v_plus(a: complex, s: complex, cfg: EvalConfig = DEFAULT_CONFIG, arg_s=None) -> EvalResult:
    """``v_+(a, s) = E_+(a, sqrt(s))``; ``arg_s`` selects the sheet on the negative axis."""
    return _v(a, s, 1, cfg, arg_s)


def v_minus(a: complex, s: complex, cfg: EvalConfig = DEFAULT_CONFIG, arg_s=None) -> EvalResult:
    """``v_-(a, s) = E_-(a, sqrt(s))``."""
    return _v(a, s, -1, cfg, arg_s)


def _e_via_u(a: complex, x: complex, sign: int, cfg: EvalConfig) -> EvalResult:
    # E_+-(a, x) = e^{pi a/4} e^{-+i pi/8} U(+-ia, x e^{-+i pi/4})
    c = cmath.exp(0.25 * math.pi * a - sign * 0.125j * math.pi)
    r = U(sign * 1j * a, x * cmath.exp(-sign * 0.25j * math.pi), cfg)
    return r.scaled(c, ("connection",))


def values_at_zero_E(a: complex):
    """Closed forms ``((E_-, E_-'), (E_+, E_+'))`` at ``x = 0`` through the link to ``U``."""
    a = complex(a)
    out = []
    for sign in (-1, 1):
        c = cmath.exp(0.25 * math.pi * a - sign * 0.125j * math.pi)
        rot = cmath.exp(-sign * 0.25j * math.pi)
        (u0, du0), _ = values_at_zero(sign * 1j * a)
        out.append((c * u0, c * rot * du0))
    return tuple(out)


def connection_matrix_E(a: complex) -> ConnectionCoefficients:
    """``(E_-(a,-x), E_+(a,-x)) = M (E_-(a,x), E_+(a,x))``, entire in ``a``."""
    a = complex(a)
    e = cmath.exp(math.pi * a)
    h = cmath.exp(0.5 * math.pi * a)
    return ConnectionCoefficients(
        1j * e,
        _SQRT_2PI * recip_gamma(0.5 - 1j * a) * h,
        _SQRT_2PI * recip_gamma(0.5 + 1j * a) * h,
        -1j * e,
    )


def raw_continuation_coefficients(a: complex):
    """Coefficients ``(c1, c2)`` of ``AC v~_- = c1 v~_- + c2 v~_+``.

    ``v~_+-`` are the integrals without the ``1/Gamma`` normalisation and
    ``AC`` is the continuation ``x -> -x``.
    """
    a = complex(a)
    e = cmath.exp(math.pi * a)
    return 1j * e, (1j * e + 1.0) * cmath.exp(1j * a * math.log(2.0)) * cmath.exp(-0.25j * math.pi)


def _E(a: complex, x: complex, sign: int, cfg: EvalConfig) -> EvalResult:
    a = complex(a)
    x = complex(x)
    if x == 0:
        return _e_via_u(a, x, sign, cfg)
    if direct_half_plane(x):
        return _v(a, x * x, sign, cfg, arg_s=2.0 * phase(x))
    if direct_half_plane(x * cmath.exp(-sign * 0.25j * math.pi)):
        # the closed-form link to U avoids the e^{pi a} growth of the matrix
        return _e_via_u(a, x, sign, cfg)
    w = -x
    m = connection_matrix_E(a)
    em = _E(a, w, -1, cfg)
    ep = _E(a, w, 1, cfg)
    if sign < 0:
        return combine([(m.m11, em), (m.m12, ep)], extra_flags=("connection",))
    return combine([(m.m21, em), (m.m22, ep)], extra_flags=("connection",))


def E_plus(a: complex, x: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """``E_+(a, x)``, entire in ``a`` and ``x``."""
    return _E(a, x, 1, cfg)


def E_minus(a: complex, x: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """``E_-(a, x)``, entire in ``a`` and ``x``."""
    return _E(a, x, -1, cfg)


@dataclass(frozen=True)
class ClassicalPhases:
    """Constants tying ``E+-`` to the classical ``E, E*, W``.

    ``half_phase`` is ``e^{i phi2/2}``; for real ``a`` ``phi2 = ph Gamma(1/2 + ia)``.
    """

    k: complex
    rho: complex
    phi2: complex
    half_phase: complex
    sqrt_one_plus: complex  # sqrt(1 + e^{2 pi a})


def classical_phases(a: complex) -> ClassicalPhases:
    """Phases for complex ``a``: ``e^{i phi2} = Gamma(1/2+ia) sqrt(cosh pi a)/sqrt(pi)``.

    Both square roots are principal; for real ``a`` this is the classical
    ``phi2`` in ``(-pi, pi]``.  Fails where ``Gamma(1/2 + ia)`` has a pole.
    """
    a = complex(a)
    sc = cmath.sqrt(cmath.cosh(math.pi * a))
    log_p = log_gamma(0.5 + 1j * a) + cmath.log(sc) - math.log(_SQRT_PI)
    p = cmath.exp(log_p)
    half = cmath.sqrt(p)
    phi2 = -1j * cmath.log(p)
    e = cmath.exp(math.pi * a)
    root = cmath.exp(0.5 * math.pi * a) * math.sqrt(2.0) * sc
    # root^2 - e^2 = 1, so k = root - e without the cancellation
    k = 1.0 / (root + e)
    return ClassicalPhases(k, math.pi / 8 + 0.5 * phi2, phi2, half, root)


def classical_E(a: complex, x: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """``E(a, x) = sqrt(2) e^{i pi/4} e^{i phi2/2} E_+(a, x)``."""
    ph = classical_phases(a)
    c = math.sqrt(2.0) * cmath.exp(0.25j * math.pi) * ph.half_phase
    return E_plus(a, x, cfg).scaled(c)


def classical_Estar(a: complex, x: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """``E*(a, x) = sqrt(2) e^{-i pi/4} e^{-i phi2/2} E_-(a, x)``."""
    ph = classical_phases(a)
    c = math.sqrt(2.0) * cmath.exp(-0.25j * math.pi) / ph.half_phase
    return E_minus(a, x, cfg).scaled(c)


def classical_connection(a: complex):
    """``(c_E, c_Estar)`` with ``E*(a,-x) = c_E E(a,x) + c_Estar E*(a,x)``."""
    ph = classical_phases(a)
    return -1j * ph.sqrt_one_plus, 1j * cmath.exp(math.pi * complex(a))


def whittaker_W(a: complex, x: complex, cfg: EvalConfig = DEFAULT_CONFIG):
    """``(W(a, x), W(a, -x))`` from ``E`` and ``E*``.

    The classical definition is for real ``a``; complex ``a`` uses the same
    formulas with the principal-branch phases of ``classical_phases``.
    """
    ph = classical_phases(a)
    e = classical_E(a, x, cfg)
    es = classical_Estar(a, x, cfg)
    rk = cmath.sqrt(ph.k)
    w_pos = combine([(0.5 * rk, e), (0.5 * rk, es)])
    c = 1.0 / (2j * rk)
    w_neg = combine([(c, e), (-c, es)])
    return w_pos, w_neg


def u_e_link(a: complex, x: float, cfg: EvalConfig = DEFAULT_CONFIG):
    """Relative residuals of ``U(+-ia, x e^{-+i pi/4}) = e^{-pi a/4} e^{+-i pi/8} E_+-(a, x)``."""
    a = complex(a)
    out = []
    for sign in (1, -1):
        lhs = U(sign * 1j * a, x * cmath.exp(-sign * 0.25j * math.pi), cfg).value
        e = (E_plus if sign > 0 else E_minus)(a, x, cfg).value
        rhs = cmath.exp(-0.25 * math.pi * a + sign * 0.125j * math.pi) * e
        out.append(abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300))
    return tuple(out)

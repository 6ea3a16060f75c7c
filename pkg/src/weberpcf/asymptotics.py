"""Large-argument Poincare series for U, V and E+-.

Used as cross-checks of the integral evaluations and as starting data for
ODE integration.  The error heuristic is the first omitted term.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .complex_gamma import phase
from .errors import DomainError

__all__ = ["AsymptoticSum", "asym_U", "asym_V", "asym_E", "optimal_truncation", "MAX_TERMS"]

MAX_TERMS = 200
_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


@dataclass(frozen=True)
class AsymptoticSum:
    value: complex
    terms_used: int
    last_term_magnitude: float

    def __post_init__(self):
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")
        if not self.last_term_magnitude >= 0:
            raise ValueError("last_term_magnitude must be >= 0")


def _series_params(kind: str, a: complex, z: complex):
    """``(shift, base, sign)`` with terms ``sign^s (shift)_{2s} / (s! base^s)``."""
    z2 = z * z
    if kind == "U":
        return 0.5 + a, 2.0 * z2, -1.0
    if kind == "V":
        return 0.5 - a, 2.0 * z2, 1.0
    if kind == "E+":
        return 0.5 + 1j * a, -2j * z2, -1.0
    if kind == "E-":
        return 0.5 - 1j * a, 2j * z2, -1.0
    raise ValueError(f"unknown series kind {kind!r}")


def _terms(kind: str, a: complex, z: complex, n: int):
    """First ``n`` series terms (term 0 is 1)."""
    shift, base, sign = _series_params(kind, complex(a), complex(z))
    out = [1.0 + 0j]
    t = 1.0 + 0j
    for s in range(n - 1):
        t = t * sign * (shift + 2 * s) * (shift + 2 * s + 1) / ((s + 1) * base)
        out.append(t)
    return out


def _check(z: complex, limit: float, name: str):
    if z == 0:
        raise DomainError(f"{name}: argument must be nonzero")
    if not abs(phase(z)) < limit:
        raise DomainError(f"{name}: |arg| = {abs(phase(z)):.4g} outside the sector |arg| < {limit:.4g}")


def _sum(kind: str, a: complex, z: complex, S: int, lead: complex) -> AsymptoticSum:
    if S < 0:
        raise ValueError("S must be >= 0")
    t = _terms(kind, a, z, S + 2)
    return AsymptoticSum(lead * sum(t[: S + 1]), S + 1, abs(lead * t[S + 1]))


def asym_U(a: complex, z: complex, S: int) -> AsymptoticSum:
    """``e^{-z^2/4} z^(-a-1/2) sum_{s<=S} (-1)^s (1/2+a)_{2s} / (s! (2z^2)^s)``, ``|arg z| < 3pi/4``."""
    a, z = complex(a), complex(z)
    _check(z, 0.75 * math.pi, "asym_U")
    lead = cmath.exp(-0.25 * z * z - (a + 0.5) * cmath.log(z))
    return _sum("U", a, z, S, lead)


def asym_V(a: complex, z: complex, S: int) -> AsymptoticSum:
    """``sqrt(2/pi) e^{z^2/4} z^(a-1/2) sum_{s<=S} (1/2-a)_{2s} / (s! (2z^2)^s)``, ``|arg z| < pi/4``."""
    a, z = complex(a), complex(z)
    _check(z, 0.25 * math.pi, "asym_V")
    lead = _SQRT_2_OVER_PI * cmath.exp(0.25 * z * z + (a - 0.5) * cmath.log(z))
    return _sum("V", a, z, S, lead)


def asym_E(a: complex, x: complex, S: int, sign: int = 1) -> AsymptoticSum:
    """Series of ``E_+`` (``sign=+1``) or ``E_-`` (``sign=-1``), ``|arg x| < pi/4``.

    ``E_+- ~ e^{+-ix^2/4} (x^2)^(-+ia/2-1/4) sum_s (-1)^s (1/2+-ia)_{2s} / (s! (-+2ix^2)^s)``.
    """
    a, x = complex(a), complex(x)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    _check(x, 0.25 * math.pi, "asym_E")
    x2 = x * x
    lead = cmath.exp(sign * 0.25j * x2 + (-sign * 0.5j * a - 0.25) * cmath.log(x2))
    return _sum("E+" if sign > 0 else "E-", a, x, S, lead)


def optimal_truncation(a: complex, z: complex, kind: str = "U") -> int:
    """``S`` in ``[0, 200]`` minimising the first omitted term ``|t_{S+1}|``."""
    if complex(z) == 0:
        raise DomainError("optimal_truncation: argument must be nonzero")
    mags = [abs(t) for t in _terms(kind, a, z, MAX_TERMS + 2)]
    best = 0
    for S in range(MAX_TERMS + 1):
        if mags[S + 1] < mags[best + 1]:
            best = S
    return best

"""Complex gamma function, its entire reciprocal, and Pochhammer symbols.

``log_gamma`` uses Stirling's series after shifting the argument to
``Re z >= 15`` with the upward recurrence; the sum of principal logarithms
picked up by the shift fixes the branch (continuous off the negative axis,
real on the positive axis).  ``recip_gamma`` goes through the reflection
formula with an exact ``sin(pi z)`` so that it vanishes exactly at the
non-positive integers.
"""

from __future__ import annotations

import cmath
import math

from .errors import GammaPoleError

__all__ = [
    "log_gamma",
    "gamma",
    "recip_gamma",
    "pochhammer",
    "sinpi",
    "cospi",
    "phase",
]

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_SHIFT = 15.0
_POLE_TOL = 1e-14

# B_{2k} / (2k (2k-1)), k = 1..10
_STIRLING = tuple(
    b / ((2 * k) * (2 * k - 1))
    for k, b in enumerate(
        (
            1.0 / 6.0,
            -1.0 / 30.0,
            1.0 / 42.0,
            -1.0 / 30.0,
            5.0 / 66.0,
            -691.0 / 2730.0,
            7.0 / 6.0,
            -3617.0 / 510.0,
            43867.0 / 798.0,
            -174611.0 / 330.0,
        ),
        start=1,
    )
)


def phase(z: complex) -> float:
    """``arg z`` in ``(-pi, pi]``; unlike ``cmath.phase`` it never overflows on subnormal parts."""
    z = complex(z)
    return math.atan2(z.imag, z.real)


def _sinpi_real(x: float) -> float:
    # exact zeros at integers, exact +-1 at half-integers
    r = math.fmod(x, 2.0)
    if r < 0.0:
        r += 2.0
    if r == 0.0 or r == 1.0:
        return 0.0
    if r == 0.5:
        return 1.0
    if r == 1.5:
        return -1.0
    if r > 1.0:
        return -math.sin(math.pi * (r - 1.0))
    return math.sin(math.pi * r)


def _cospi_real(x: float) -> float:
    return _sinpi_real(x + 0.5)


def sinpi(z: complex) -> complex:
    """``sin(pi z)`` with exact zeros on the integers."""
    z = complex(z)
    x, y = z.real, z.imag
    if y == 0.0:
        return complex(_sinpi_real(x), 0.0)
    return complex(
        _sinpi_real(x) * math.cosh(math.pi * y),
        _cospi_real(x) * math.sinh(math.pi * y),
    )


def cospi(z: complex) -> complex:
    """``cos(pi z)`` with exact zeros on the half-integers."""
    z = complex(z)
    x, y = z.real, z.imag
    if y == 0.0:
        return complex(_cospi_real(x), 0.0)
    return complex(
        _cospi_real(x) * math.cosh(math.pi * y),
        -_sinpi_real(x) * math.sinh(math.pi * y),
    )


def _near_pole(z: complex, tol: float = _POLE_TOL) -> bool:
    if z.real > 0.5:
        return False
    n = round(z.real)
    return abs(z - n) < tol


def _stirling(z: complex) -> complex:
    zinv = 1.0 / z
    zinv2 = zinv * zinv
    acc = 0j
    for c in reversed(_STIRLING):
        acc = acc * zinv2 + c
    return (z - 0.5) * cmath.log(z) - z + _HALF_LOG_2PI + acc * zinv


def log_gamma(z: complex) -> complex:
    """Principal branch of ``log Gamma(z)``.

    Raises
    ------
    GammaPoleError
        If ``z`` lies within 1e-14 of a non-positive integer.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite argument {z!r}")
    if _near_pole(z):
        raise GammaPoleError(f"log_gamma: pole of Gamma at z={z!r}")
    shift = 0j
    w = z
    while w.real < _SHIFT:
        shift += cmath.log(w)
        w += 1.0
    return _stirling(w) - shift


def gamma(z: complex) -> complex:
    """``Gamma(z)``; raises ``GammaPoleError`` at the poles."""
    z = complex(z)
    if z.real >= 0.5:
        return cmath.exp(log_gamma(z))
    if _near_pole(z):
        raise GammaPoleError(f"gamma: pole at z={z!r}")
    return math.pi / (sinpi(z) * cmath.exp(log_gamma(1.0 - z)))


def recip_gamma(z: complex) -> complex:
    """Entire function ``1/Gamma(z)``, exactly zero at 0, -1, -2, ..."""
    z = complex(z)
    if z.real >= 0.5:
        lg = log_gamma(z)
        if lg.real > 700.0:
            return 0j
        return cmath.exp(-lg)
    s = sinpi(z)
    if s == 0:
        return 0j
    return s * cmath.exp(log_gamma(1.0 - z)) / math.pi


def pochhammer(x: complex, n: int) -> complex:
    """Rising factorial ``x (x+1) ... (x+n-1)``; the empty product is 1."""
    if n < 0:
        raise ValueError("pochhammer: n must be non-negative")
    x = complex(x)
    acc = 1 + 0j
    for j in range(n):
        acc *= x + j
    return acc

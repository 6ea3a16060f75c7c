"""Evaluation configuration and result records."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

__all__ = ["EvalConfig", "EvalResult", "FLAGS"]

#: Provenance flags that may appear in ``EvalResult.path_flags``.
FLAGS = frozenset({"direct", "finite_part", "limit", "connection", "medianized"})


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and discretisation knobs, immutable per call.

    ``split_radius`` is an upper bound: the Taylor head is never taken past
    ``1/|lambda|`` (size of the exponential rate) or half the distance to the
    nearest branch point.  ``series_order`` is the minimum number of Taylor
    terms; more are added until the head converges.
    """

    rel_tol: float = 1e-12
    abs_tol: float = 1e-300
    split_radius: float = 0.25
    series_order: int = 40
    max_quad_level: int = 12
    max_series_order: int = 600

    def __post_init__(self):
        if not (self.rel_tol > 0 and math.isfinite(self.rel_tol)):
            raise ValueError("rel_tol must be positive")
        if self.abs_tol < 0:
            raise ValueError("abs_tol must be non-negative")
        if not (0.0 < self.split_radius < 0.5):
            raise ValueError("split_radius must lie in (0, 1/2)")
        if self.series_order < 1:
            raise ValueError("series_order must be >= 1")
        if self.max_quad_level < 3:
            raise ValueError("max_quad_level must be >= 3")

    def with_(self, **kw) -> "EvalConfig":
        return replace(self, **kw)


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_err_estimate: float = 0.0
    path_flags: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.abs_err_estimate >= 0:
            raise ValueError("abs_err_estimate must be >= 0")
        unknown = set(self.path_flags) - FLAGS
        if unknown:
            raise ValueError(f"unknown path flags {sorted(unknown)}")

    def scaled(self, c: complex, extra_flags=()) -> "EvalResult":
        return EvalResult(
            complex(c) * self.value,
            abs(c) * self.abs_err_estimate,
            frozenset(self.path_flags) | frozenset(extra_flags),
        )

    def with_rel_floor(self, rel: float) -> "EvalResult":
        """Raise the error estimate to at least ``rel * |value|``."""
        return EvalResult(self.value, max(self.abs_err_estimate, rel * abs(self.value)),
                          self.path_flags)

    def __complex__(self) -> complex:
        return complex(self.value)


def combine(terms, extra_flags=()) -> EvalResult:
    """Linear combination ``sum c_i r_i`` of ``(c_i, r_i)`` pairs."""
    value = 0j
    err = 0.0
    flags = set(extra_flags)
    for c, r in terms:
        c = complex(c)
        if c == 0:
            continue
        value += c * r.value
        err += abs(c) * r.abs_err_estimate
        flags |= set(r.path_flags)
    # rounding floor of the combination itself
    err += 4e-16 * sum(abs(complex(c) * r.value) for c, r in terms)
    return EvalResult(value, err, frozenset(flags))

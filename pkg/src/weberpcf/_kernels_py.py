"""Pure numpy implementation of the quadrature kernels (fallback backend)."""

from __future__ import annotations

import numpy as np

_TWO_PI_I = 2j * np.pi


def weighted_sum(t, w, alpha, lam, cs, betas, windings):
    """``sum_j w_j t_j^(alpha-1) prod_k (1 + c_k t_j)^beta_k exp(-lam t_j)``.

    ``t`` are positive reals.  Each power factor uses the principal logarithm
    shifted by ``2 pi i * winding``.
    """
    t = np.asarray(t, dtype=float)
    w = np.asarray(w, dtype=float)
    expo = (alpha - 1.0) * np.log(t) - lam * t
    for c, b, k in zip(cs, betas, windings):
        lg = np.log(1.0 + c * t)
        if k:
            lg = lg + _TWO_PI_I * k
        expo = expo + b * lg
    return complex(np.dot(w, np.exp(expo)))

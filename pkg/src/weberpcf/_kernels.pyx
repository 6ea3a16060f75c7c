# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled quadrature kernels."""

from libc.math cimport log, exp, cos, sin, atan2, hypot, M_PI

import numpy as np


def weighted_sum(t, w, alpha, lam, cs, betas, windings):
    """``sum_j w_j t_j^(alpha-1) prod_k (1 + c_k t_j)^beta_k exp(-lam t_j)``."""
    cdef double[::1] tv = np.ascontiguousarray(t, dtype=np.float64)
    cdef double[::1] wv = np.ascontiguousarray(w, dtype=np.float64)
    cdef Py_ssize_t n = tv.shape[0]
    cdef Py_ssize_t nf = len(cs)
    cdef double[::1] cr = np.array([complex(c).real for c in cs] or [0.0])
    cdef double[::1] ci = np.array([complex(c).imag for c in cs] or [0.0])
    cdef double[::1] br = np.array([complex(b).real for b in betas] or [0.0])
    cdef double[::1] bi = np.array([complex(b).imag for b in betas] or [0.0])
    cdef double[::1] wk = np.array([2.0 * M_PI * k for k in windings] or [0.0])
    cdef double ar = complex(alpha).real - 1.0
    cdef double ai = complex(alpha).imag
    cdef double lr = complex(lam).real
    cdef double li = complex(lam).imag
    cdef double sr = 0.0, si = 0.0
    cdef double tj, lt, er, ei, ur, ui, lm, la, mag
    cdef Py_ssize_t j, k
    for j in range(n):
        tj = tv[j]
        lt = log(tj)
        er = ar * lt - lr * tj
        ei = ai * lt - li * tj
        for k in range(nf):
            ur = 1.0 + cr[k] * tj
            ui = ci[k] * tj
            lm = log(hypot(ur, ui))
            la = atan2(ui, ur) + wk[k]
            er += br[k] * lm - bi[k] * la
            ei += br[k] * la + bi[k] * lm
        mag = wv[j] * exp(er)
        sr += mag * cos(ei)
        si += mag * sin(ei)
    return complex(sr, si)

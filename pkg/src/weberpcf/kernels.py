"""Backend selection for the hot quadrature kernel.

The compiled extension ``_kernels`` is used when it was built; otherwise the
numpy implementation in ``_kernels_py`` is used.  Setting the environment
variable ``WEBERPCF_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
weighted_sum = _kernels_py.weighted_sum

if os.environ.get("WEBERPCF_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    else:
        weighted_sum = _compiled.weighted_sum
        BACKEND = "cython"
else:
    _compiled = None

__all__ = ["BACKEND", "weighted_sum"]

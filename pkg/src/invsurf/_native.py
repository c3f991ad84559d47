"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
kernels are loaded.  Setting ``INVSURF_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("INVSURF_PURE_PYTHON", "") not in ("", "0"):
    from invsurf._kernels_py import BACKEND, int_echelon, mq_mul, normalize, poly_mul
else:
    try:
        from invsurf._kernels_c import BACKEND, int_echelon, mq_mul, normalize, poly_mul
    except ImportError:
        from invsurf._kernels_py import BACKEND, int_echelon, mq_mul, normalize, poly_mul

__all__ = ["BACKEND", "int_echelon", "mq_mul", "normalize", "poly_mul"]

"""Backend selection for the monomial kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Setting ``TERMFAN_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels

if os.environ.get("TERMFAN_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

mono_mul = _impl.mono_mul
mono_divides = _impl.mono_divides
mono_quotient = _impl.mono_quotient
mono_lcm = _impl.mono_lcm
matrix_key = _impl.matrix_key
first_divisor = _impl.first_divisor
lcm_degree_profile = _impl.lcm_degree_profile

__all__ = [
    "BACKEND",
    "mono_mul",
    "mono_divides",
    "mono_quotient",
    "mono_lcm",
    "matrix_key",
    "first_divisor",
    "lcm_degree_profile",
]

"""Kernel backend selection.

SELFINPAINT_BACKEND=numba selects the jitted kernels (the default when numba
imports cleanly); SELFINPAINT_BACKEND=numpy forces the pure-numpy path.
`benchmarks/bench_kernels.py` compares the two on the reference workload.
"""

import os

from . import kernels_numpy

_FORCED = os.environ.get("SELFINPAINT_BACKEND", "").strip().lower()

if _FORCED not in ("", "numpy", "numba"):
    raise ValueError(
        f"SELFINPAINT_BACKEND must be 'numpy' or 'numba', got {_FORCED!r}"
    )

if _FORCED == "numpy":
    _impl = kernels_numpy
    BACKEND = "numpy"
else:
    try:
        from . import kernels_numba as _impl

        BACKEND = "numba"
    except ImportError:
        if _FORCED == "numba":
            raise
        _impl = kernels_numpy
        BACKEND = "numpy"

conv2d_forward = _impl.conv2d_forward
conv2d_backward_input = _impl.conv2d_backward_input
conv2d_backward_weights = _impl.conv2d_backward_weights

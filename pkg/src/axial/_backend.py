"""Kernel backend selection.

The compiled extension is preferred when it imports; set AXIAL_PURE_KERNELS=1
to force the pure-Python twin (used by the parity tests and the benchmark).
"""

import os

if os.environ.get("AXIAL_PURE_KERNELS"):
    from axial import _kernels_py as kernels
else:
    try:
        from axial import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from axial import _kernels_py as kernels  # type: ignore[no-redef]


def kernel_backend() -> str:
    """Name of the active kernel implementation: 'compiled' or 'pure'."""
    return kernels.IMPLEMENTATION

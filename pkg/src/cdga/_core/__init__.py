"""Row-reduction kernel selection.

The compiled extension is preferred when present; set CDGA_PURE_PYTHON=1 to
force the pure-Python fallback (used by the benchmark and the kernel tests).
"""

import os

if os.environ.get("CDGA_PURE_PYTHON"):
    from .rref_py import rref_int
    BACKEND = "python"
else:
    try:
        from ._rref_cy import rref_int  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        from .rref_py import rref_int  # type: ignore[no-redef]
        BACKEND = "python"

__all__ = ["rref_int", "BACKEND"]

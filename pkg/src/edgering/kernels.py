"""Select the compiled search kernel when available.

Set ``EDGERING_PURE_PYTHON=1`` to force the pure-Python fallback.
"""
import os

if os.environ.get("EDGERING_PURE_PYTHON"):
    from ._kernels_py import CombinationSearch

    BACKEND = "python"
else:
    try:
        from ._kernels import CombinationSearch

        BACKEND = "cython"
    except ImportError:  # extension not built
        from ._kernels_py import CombinationSearch

        BACKEND = "python"

__all__ = ["CombinationSearch", "BACKEND"]

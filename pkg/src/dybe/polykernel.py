"""Backend selection for the dense polynomial kernels.

The compiled extension ``_poly_cy`` is used when it was built; otherwise
the pure-Python reference ``_poly_py`` is loaded.  Setting the environment
variable ``DYBE_PURE_PYTHON=1`` forces the fallback.
"""
import os

if os.environ.get("DYBE_PURE_PYTHON", "") not in ("", "0"):
    from ._poly_py import *  # noqa: F401,F403
    BACKEND = "python"
else:
    try:
        from ._poly_cy import *  # noqa: F401,F403
        BACKEND = "cython"
    except ImportError:
        from ._poly_py import *  # noqa: F401,F403
        BACKEND = "python"

__all__ = [
    "BACKEND", "trim", "add", "sub", "neg", "scale", "mul", "divmod_", "exquo",
    "monic", "gcd", "evaluate", "taylor_shift", "compose_linear",
]

"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``TROPDUAL_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
kernels = _kernels_py

if os.environ.get("TROPDUAL_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        pass
    else:
        kernels = _compiled
        BACKEND = "cython"

IINF = _kernels_py.IINF
LIMIT = _kernels_py.LIMIT


def available_backends():
    """Map of backend name to kernel module, for benchmarks and parity tests."""
    found = {"python": _kernels_py}
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        found["cython"] = _compiled
    return found

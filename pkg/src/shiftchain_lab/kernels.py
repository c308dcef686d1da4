"""Search kernel selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise
the pure-Python ``_pykernels`` twin is loaded. Set
``SHIFTCHAIN_LAB_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels as python_kernels

compiled_kernels = None
if os.environ.get("SHIFTCHAIN_LAB_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_kernels
    except ImportError:
        compiled_kernels = None

active = compiled_kernels if compiled_kernels is not None else python_kernels
BACKEND = active.BACKEND
exhaustive = active.exhaustive
backtrack = active.backtrack


def available_backends():
    """Backend modules keyed by name, for benchmarks and equivalence tests."""
    found = {"python": python_kernels}
    if compiled_kernels is not None:
        found["cython"] = compiled_kernels
    return found

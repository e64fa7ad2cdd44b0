"""Backend selection for the candidate prefilter.

The compiled extension is used when it was built; setting the environment
variable ``UAT_PURE_PYTHON=1`` forces the numpy implementation.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

_compiled = None
if os.environ.get("UAT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _compiled  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "numpy"


def available_backends():
    out = ["numpy"]
    try:
        from . import _ckernels  # noqa: F401

        out.insert(0, "cython")
    except ImportError:
        pass
    return out


def survivors(vals, anchor, modulus, backend: str | None = None):
    """Odometer indices of candidates passing every point check, ascending."""
    vals = np.ascontiguousarray(vals, dtype=np.int64)
    anchor = np.ascontiguousarray(anchor, dtype=np.int64)
    backend = backend or BACKEND
    if backend == "cython":
        from . import _ckernels

        return _ckernels.survivors(vals, anchor, int(modulus))
    if backend == "numpy":
        return _kernels_py.survivors(vals, anchor, int(modulus))
    raise ValueError(f"unknown kernel backend {backend!r}")

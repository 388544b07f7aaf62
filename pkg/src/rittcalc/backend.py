"""Eigensolver backend selection.

The compiled Cython kernel is preferred when built; the pure NumPy twin is
selected when the extension is missing or when the environment variable
``RITTCALC_PURE`` is set (useful for benchmarking and debugging).  Both run
the same algorithm, so results agree to rounding.
"""

from __future__ import annotations

import os

from . import _eigen_py

if os.environ.get("RITTCALC_PURE"):
    _impl = _eigen_py
    BACKEND = "python"
else:
    try:
        from . import _eigen_cy as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _eigen_py
        BACKEND = "python"

hessenberg = _impl.hessenberg
hessenberg_eigvals = _impl.hessenberg_eigvals
eigvals = _impl.eigvals


def backend_name() -> str:
    """Active kernel: ``"cython"`` or ``"python"``."""
    return BACKEND

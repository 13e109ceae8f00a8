"""Backend selection for the hot loops.

``SEGRECODES_BACKEND`` picks the implementation at import time:
``numba`` (default when numba imports) or ``numpy``.  Both produce
identical results; the numpy path exists for platforms without numba and
as a cross-check.
"""

from __future__ import annotations

import logging
import os

from . import _kernels_numpy

log = logging.getLogger(__name__)

BACKENDS = ("numba", "numpy")


def _load(name: str):
    if name == "numpy":
        return _kernels_numpy
    try:
        from . import _kernels_numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        log.warning("numba unavailable, falling back to numpy kernels")
        return _kernels_numpy
    return _kernels_numba


def backend_module(name: str):
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")
    return _load(name)


BACKEND = os.environ.get("SEGRECODES_BACKEND", "numba").strip().lower() or "numba"
if BACKEND not in BACKENDS:
    raise ValueError(f"SEGRECODES_BACKEND={BACKEND!r}; expected one of {BACKENDS}")
_impl = _load(BACKEND)
if _impl is _kernels_numpy:
    BACKEND = "numpy"

rref = _impl.rref
min_weight = _impl.min_weight
min_support = _impl.min_support

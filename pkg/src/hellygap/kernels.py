"""Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
numpy/pure-Python ``_pykernels`` twin is used. Set ``HELLYGAP_PURE_PYTHON=1``
to force the fallback.
"""
import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("HELLYGAP_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend
BACKEND_NAME = "compiled" if compiled_backend is not None else "python"

apsp = backend.apsp
enumerate_extremal = backend.enumerate_extremal
chebyshev_edges = backend.chebyshev_edges
chebyshev_matrix = backend.chebyshev_matrix
oracle_gap = backend.oracle_gap
two_delta = backend.two_delta
interval_thinness = backend.interval_thinness
alpha_i = backend.alpha_i
max_subset_gap = backend.max_subset_gap
peripheral = backend.peripheral
path_extension_failure = backend.path_extension_failure

__all__ = [
    "BACKEND_NAME",
    "alpha_i",
    "apsp",
    "backend",
    "chebyshev_edges",
    "chebyshev_matrix",
    "compiled_backend",
    "enumerate_extremal",
    "interval_thinness",
    "max_subset_gap",
    "oracle_gap",
    "path_extension_failure",
    "peripheral",
    "python_backend",
    "two_delta",
]

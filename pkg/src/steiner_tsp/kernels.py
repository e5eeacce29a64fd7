"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the pure-Python
twins run. Set ``STEINER_TSP_PURE_PYTHON=1`` to force the fallback.
"""

import importlib
import os

from . import _pykernels

_FORCE_PURE = os.environ.get("STEINER_TSP_PURE_PYTHON", "") not in ("", "0")


def load_backend(name):
    """Return the kernel module called ``name`` ("cython" or "python")."""
    if name == "python":
        return _pykernels
    if name == "cython":
        return importlib.import_module("steiner_tsp._ckernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends():
    names = ["python"]
    try:
        load_backend("cython")
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


if _FORCE_PURE:
    _impl = _pykernels
else:
    try:
        _impl = load_backend("cython")
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND
bfs_all_pairs = _impl.bfs_all_pairs
held_karp = _impl.held_karp
shortest_steiner_cycle = _impl.shortest_steiner_cycle

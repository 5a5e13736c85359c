"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
module is a drop-in replacement producing identical output.  Set
``CRITDIGRAPH_PURE=1`` to force the fallback (used by the benchmark and
by backend-equivalence tests).
"""

from __future__ import annotations

import importlib
import os


def load_backend(name: str):
    """Return the kernel module for ``name`` ("cython" or "python")."""
    if name == "python":
        return importlib.import_module("critdigraph._kernels.pykernels")
    if name == "cython":
        return importlib.import_module("critdigraph._kernels._speedups")
    raise ValueError(f"unknown kernel backend: {name!r}")


def available_backends() -> list[str]:
    names = []
    try:
        load_backend("cython")
        names.append("cython")
    except ImportError:
        pass
    names.append("python")
    return names


if os.environ.get("CRITDIGRAPH_PURE", "") not in ("", "0"):
    _impl = load_backend("python")
else:
    try:
        _impl = load_backend("cython")
    except ImportError:
        _impl = load_backend("python")

BACKEND = _impl.BACKEND_NAME
tarjan_components = _impl.tarjan_components
explore_digraph = _impl.explore_digraph
count_cycles = _impl.count_cycles
largest_component_size = _impl.largest_component_size

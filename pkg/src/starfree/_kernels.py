"""Kernel backend selection.

The compiled module is used when it imports; ``STARFREE_BACKEND=python``
forces the pure-Python twin.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels


def _load_compiled() -> ModuleType | None:
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


_compiled = _load_compiled()


def get_backend(name: str | None = None) -> ModuleType:
    """Return the kernel module called ``name`` ("c" or "python")."""
    if name is None:
        name = os.environ.get("STARFREE_BACKEND", "c" if _compiled is not None else "python")
    if name == "python":
        return _pykernels
    if name == "c":
        if _compiled is None:
            raise ImportError("compiled kernels are not built; run `pip install -e .`")
        return _compiled
    raise ValueError(f"unknown kernel backend {name!r}")


def compiled_available() -> bool:
    return _compiled is not None


active = get_backend()


def use_backend(name: str | None) -> ModuleType:
    """Switch the process-wide kernel backend; returns the new module."""
    global active
    active = get_backend(name)
    return active


def max_independent(rows, allowed, lb=-1, target=0):
    return active.max_independent(rows, allowed, lb, target)


def k_dominating(rows, need, cand, budget):
    return active.k_dominating(rows, need, cand, budget)


def max_k_independent(rows, k, alive, forced=0, lb=-1, target=0):
    return active.max_k_independent(rows, k, alive, forced, lb, target)

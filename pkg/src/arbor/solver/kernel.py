"""Kernel selection: compiled ``_csearch`` when importable, else ``_pysearch``.

Set ``ARBOR_PURE_PYTHON=1`` to force the fallback. The compiled kernel works
on 64-bit masks, so graphs above 64 vertices or requests above 64 parts
always run in Python.
"""
from __future__ import annotations

import os

from . import _pysearch

try:
    if os.environ.get("ARBOR_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _csearch
except ImportError:
    _csearch = None

MASK_BITS = 64
DEFAULT = "cython" if _csearch is not None else "python"


def available() -> list[str]:
    return ["python"] + (["cython"] if _csearch is not None else [])


def get(name: str | None, n: int, k: int):
    """The search function for kernel ``name`` (None = best available)."""
    if name not in (None, "python", "cython"):
        raise ValueError(f"unknown kernel {name!r}")
    if name == "python":
        return _pysearch.search
    fits = n <= MASK_BITS and k <= MASK_BITS
    if _csearch is not None and fits:
        return _csearch.search
    if name == "cython":
        raise RuntimeError("compiled kernel unavailable for this request")
    return _pysearch.search

"""Selects the compiled search kernel when available, else the pure-Python one.

Set ``KNOTHODGE_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _canon_py

if os.environ.get("KNOTHODGE_PURE_PYTHON", "") not in ("", "0"):
    search = _canon_py.search
    BACKEND = "python"
else:
    try:
        from ._canon import search  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        search = _canon_py.search
        BACKEND = "python"

__all__ = ["search", "BACKEND"]

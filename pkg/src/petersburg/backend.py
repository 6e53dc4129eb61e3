"""Core backend selection: compiled extension if built, numpy fallback otherwise.

The choice happens once at import.  Set ``PETERSBURG_BACKEND=py`` to force
the fallback, or ``PETERSBURG_BACKEND=c`` to require the extension (import
fails if it is missing).  Both cores expose the same ``Mt19937`` class and
produce bit-identical streams; the benchmark in ``benchmarks/`` loads both
side by side through :func:`core_module`.
"""

from __future__ import annotations

import os


def core_module(kind: str):
    """Return the core module for ``kind``: 'compiled' or 'python'."""
    if kind == "compiled":
        from . import _mtcore

        return _mtcore
    if kind == "python":
        from . import _mtpy

        return _mtpy
    raise ValueError(f"unknown backend kind: {kind!r}")


def compiled_available() -> bool:
    try:
        core_module("compiled")
    except ImportError:
        return False
    return True


def _select():
    forced = os.environ.get("PETERSBURG_BACKEND", "").strip().lower()
    if forced in ("py", "python", "fallback"):
        return core_module("python"), "python"
    if forced in ("c", "ext", "compiled"):
        return core_module("compiled"), "compiled"
    try:
        return core_module("compiled"), "compiled"
    except ImportError:
        return core_module("python"), "python"


_core, BACKEND = _select()
USING_EXTENSION = BACKEND == "compiled"
Mt19937 = _core.Mt19937


def make_core(seed: int, kind: str | None = None):
    """A fresh core generator; ``kind`` overrides the import-time choice."""
    if kind is None:
        return Mt19937(seed)
    return core_module(kind).Mt19937(seed)

"""Kernel selection: compiled extension when available, pure Python otherwise.

Set EXTPH_BACKEND=python (or =native) to force a choice; compute functions
also accept an explicit backend argument.
"""

from __future__ import annotations

import os

from . import _kernel_py

try:
    from . import _kernel as _native
except ImportError:  # pragma: no cover - depends on build environment
    _native = None

HAVE_NATIVE = _native is not None


def available_backends():
    return ("native", "python") if HAVE_NATIVE else ("python",)


def get_impl(name: str | None = None):
    name = name or os.environ.get("EXTPH_BACKEND")
    if name in (None, "", "auto"):
        return _native if HAVE_NATIVE else _kernel_py
    if name == "native":
        if not HAVE_NATIVE:
            raise RuntimeError("compiled kernel not available in this install")
        return _native
    if name == "python":
        return _kernel_py
    raise ValueError(f"unknown backend {name!r}")


def active_backend(name: str | None = None) -> str:
    return get_impl(name).NAME

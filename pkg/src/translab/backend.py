"""Scan-kernel backend selection.

The TRANSLAB_BACKEND environment variable forces "numba" or "numpy";
when unset, numba is used if importable.  Resolution is dynamic so the
benchmark can flip backends at runtime.
"""

from __future__ import annotations

import os

ENV_VAR = "TRANSLAB_BACKEND"

_numba_ok: bool | None = None


def numba_available() -> bool:
    global _numba_ok
    if _numba_ok is None:
        try:
            import numba  # noqa: F401

            _numba_ok = True
        except ImportError:
            _numba_ok = False
    return _numba_ok


def backend_name() -> str:
    choice = os.environ.get(ENV_VAR, "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not numba_available():
            raise RuntimeError(f"{ENV_VAR}=numba requested but numba is not importable")
        return "numba"
    if choice:
        raise RuntimeError(f"unknown {ENV_VAR} value {choice!r} (use 'numba' or 'numpy')")
    return "numba" if numba_available() else "numpy"

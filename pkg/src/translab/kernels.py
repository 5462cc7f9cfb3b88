"""Backend dispatch for the pair-coloring scan kernels.

A coloring is passed to kernels as a plain parameter tuple
``(kind, s1, s2, ell, table)`` where ``kind`` is one of the code constants
below, ``s1``/``s2`` are derived 64-bit hash seeds and ``table`` is a uint8
matrix for stored-graph colorings (a 1x1 dummy otherwise).

``color_bits`` is the scalar reference rule; both kernel backends must
agree with it bit for bit (covered by tests).
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from . import _kernels_numpy
from . import backend

ALL_ONE = 0
MATCHING = 1
BIPARTITE = 2
SEEDED = 3
ALL_ZERO = 4
TABLE = 5

KERNEL_MAX_ELL = 62

_M64 = (1 << 64) - 1
_SIDE_SALT = 0xD1B54A32D192ED03
_EDGE_SALT = 0x8CB92BA72F3D8DD7

DUMMY_TABLE = np.zeros((1, 1), np.uint8)


def derive_seeds(seed: int) -> tuple[int, int]:
    """Stretch a user seed into independent side/edge hash seeds."""
    s = seed & _M64
    return (s * 2 + 1) * _SIDE_SALT & _M64, (s * 2 + 1) * _EDGE_SALT & _M64


def _mix_scalar(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def color_bits(params: tuple, a: int, b: int) -> int:
    """Scalar reference coloring of the unordered pair {a, b}."""
    kind, s1, s2, ell, table = params
    if kind == ALL_ONE:
        return 1
    if kind == MATCHING:
        return 0 if (a ^ b) == (1 << ell) - 1 else 1
    if kind == BIPARTITE:
        return 1 - ((a ^ b) & 1)
    if kind == SEEDED:
        sa = _mix_scalar(a ^ s1) & 1
        sb = _mix_scalar(b ^ s1) & 1
        if sa == sb:
            return 1
        u, v = (a, b) if a < b else (b, a)
        e = _mix_scalar(_mix_scalar(u ^ s2) ^ v) & 1
        return 0 if e == 1 else 1
    if kind == ALL_ZERO:
        return 0
    if kind == TABLE:
        return int(table[a, b])
    raise ValueError(f"unknown coloring kind code {kind}")


def _impl():
    if backend.backend_name() == "numba":
        from . import _kernels_numba

        return _kernels_numba
    return _kernels_numpy


def _check_ell(ell: int) -> None:
    if ell > KERNEL_MAX_ELL:
        raise ValueError(f"kernel path supports word length <= {KERNEL_MAX_ELL}, got {ell}")


def _norm(params: tuple) -> tuple:
    # Seeds must reach numba as uint64: a large-vs-small Python int would
    # otherwise type as uint64 vs int64, and uint64 ^ int64 promotes to float.
    kind, s1, s2, ell, table = params
    return kind, np.uint64(s1), np.uint64(s2), ell, table


def pair_colors(params: tuple, av: np.ndarray, bv: np.ndarray) -> np.ndarray:
    kind, s1, s2, ell, table = _norm(params)
    _check_ell(ell)
    return _impl().pair_colors(kind, s1, s2, ell, table, av, bv)


def find_nonhom_pair(params: tuple, ws: np.ndarray) -> Optional[tuple[int, int]]:
    """First index pair colored 0 within ws, scanning i < j row-major."""
    kind, s1, s2, ell, table = _norm(params)
    _check_ell(ell)
    i, j = _impl().first_nonhom_pair(kind, s1, s2, ell, table, ws)
    return None if i < 0 else (int(i), int(j))

def scan_triangles_exhaustive(params: tuple) -> Optional[tuple[int, int, int]]:
    """First zero-monochromatic value triple over the whole length-ell space."""
    kind, s1, s2, ell, table = _norm(params)
    _check_ell(ell)
    i, j, k = _impl().triangle_exhaustive(kind, s1, s2, ell, table)
    return None if i < 0 else (int(i), int(j), int(k))


def scan_triangle_batch(
    params: tuple, av: np.ndarray, bv: np.ndarray, cv: np.ndarray
) -> Optional[int]:
    """Index of the first all-zero-colored triple in the batch, None if clean."""
    kind, s1, s2, ell, table = _norm(params)
    _check_ell(ell)
    idx = _impl().triangle_batch(kind, s1, s2, ell, table, av, bv, cv)
    return None if idx < 0 else int(idx)


def zero_set_bits(params: tuple, a: int) -> np.ndarray:
    """Values x != a with color(a, x) = 0, ascending by value."""
    kind, s1, s2, ell, table = _norm(params)
    _check_ell(ell)
    return _impl().zero_set(kind, s1, s2, ell, table, np.uint64(a))

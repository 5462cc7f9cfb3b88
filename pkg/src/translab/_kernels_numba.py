"""Numba JIT scan kernels; entry points mirror _kernels_numpy bit for bit.

All word values and hash state are uint64.  Signed intermediates are avoided
entirely: numba int64 overflow is LLVM poison, not wraparound.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint64


@njit(cache=True, inline="always")
def _mix(z):
    z = z + uint64(0x9E3779B97F4A7C15)
    z = (z ^ (z >> uint64(30))) * uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> uint64(27))) * uint64(0x94D049BB133111EB)
    return z ^ (z >> uint64(31))


@njit(cache=True, inline="always")
def _color(kind, s1, s2, ell, table, a, b):
    if kind == 0:
        return 1
    if kind == 1:
        mask = (uint64(1) << uint64(ell)) - uint64(1)
        return 0 if (a ^ b) == mask else 1
    if kind == 2:
        return 0 if (a ^ b) & uint64(1) == uint64(1) else 1
    if kind == 3:
        sa = _mix(a ^ s1) & uint64(1)
        sb = _mix(b ^ s1) & uint64(1)
        if sa == sb:
            return 1
        u = a if a < b else b
        v = b if a < b else a
        e = _mix(_mix(u ^ s2) ^ v) & uint64(1)
        return 0 if e == uint64(1) else 1
    if kind == 4:
        return 0
    return int(table[a, b])


@njit(cache=True)
def pair_colors(kind, s1, s2, ell, table, av, bv):
    out = np.empty(av.size, np.uint8)
    for i in range(av.size):
        out[i] = _color(kind, s1, s2, ell, table, av[i], bv[i])
    return out


@njit(cache=True)
def first_nonhom_pair(kind, s1, s2, ell, table, ws):
    n = ws.size
    for i in range(n):
        wi = ws[i]
        for j in range(i + 1, n):
            if _color(kind, s1, s2, ell, table, wi, ws[j]) == 0:
                return i, j
    return -1, -1


@njit(cache=True)
def triangle_exhaustive(kind, s1, s2, ell, table):
    m = 1 << ell
    zero = np.zeros((m, m), np.uint8)
    for i in range(m):
        for j in range(i + 1, m):
            if _color(kind, s1, s2, ell, table, uint64(i), uint64(j)) == 0:
                zero[i, j] = 1
    for i in range(m):
        for j in range(i + 1, m):
            if zero[i, j]:
                for k in range(j + 1, m):
                    if zero[i, k] and zero[j, k]:
                        return i, j, k
    return -1, -1, -1


@njit(cache=True)
def triangle_batch(kind, s1, s2, ell, table, av, bv, cv):
    for i in range(av.size):
        a = av[i]
        b = bv[i]
        c = cv[i]
        if (
            _color(kind, s1, s2, ell, table, a, b) == 0
            and _color(kind, s1, s2, ell, table, a, c) == 0
            and _color(kind, s1, s2, ell, table, b, c) == 0
        ):
            return i
    return -1


@njit(cache=True)
def zero_set(kind, s1, s2, ell, table, a):
    m = 1 << ell
    count = 0
    for x in range(m):
        ux = uint64(x)
        if ux != a and _color(kind, s1, s2, ell, table, a, ux) == 0:
            count += 1
    out = np.empty(count, np.uint64)
    pos = 0
    for x in range(m):
        ux = uint64(x)
        if ux != a and _color(kind, s1, s2, ell, table, a, ux) == 0:
            out[pos] = ux
            pos += 1
    return out

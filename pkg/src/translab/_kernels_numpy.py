"""Pure-numpy scan kernels.

Same entry points as _kernels_numba; everything runs in uint64 so the two
backends (and the scalar Python rule in kernels.py) are bit-identical.
"""

from __future__ import annotations

import numpy as np

_U = np.uint64


def _mix(z: np.ndarray) -> np.ndarray:
    z = z + _U(0x9E3779B97F4A7C15)
    z = (z ^ (z >> _U(30))) * _U(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> _U(27))) * _U(0x94D049BB133111EB)
    return z ^ (z >> _U(31))


def pair_colors(kind, s1, s2, ell, table, av, bv):
    """Elementwise pair colors as uint8; av and bv may broadcast."""
    shape = np.broadcast_shapes(av.shape, bv.shape)
    if kind == 0:  # all-one
        return np.ones(shape, np.uint8)
    if kind == 1:  # matching
        mask = _U((1 << ell) - 1)
        return np.where((av ^ bv) == mask, 0, 1).astype(np.uint8)
    if kind == 2:  # bipartite
        return (((av ^ bv) & _U(1)) ^ _U(1)).astype(np.uint8)
    if kind == 3:  # seeded-triangle-free
        sa = _mix(av ^ _U(s1)) & _U(1)
        sb = _mix(bv ^ _U(s1)) & _U(1)
        u = np.minimum(av, bv)
        v = np.maximum(av, bv)
        e = _mix(_mix(u ^ _U(s2)) ^ v) & _U(1)
        zero = (sa != sb) & (e == _U(1))
        return np.where(zero, 0, 1).astype(np.uint8)
    if kind == 4:  # all-zero
        return np.zeros(shape, np.uint8)
    if kind == 5:  # table
        return table[av.astype(np.int64), bv.astype(np.int64)]
    raise ValueError(f"unknown coloring kind code {kind}")


def first_nonhom_pair(kind, s1, s2, ell, table, ws):
    """First (i, j), i < j in row-major order, with color 0; (-1, -1) if none.

    Row blocks are checked against the columns strictly past the block
    start; pair_colors broadcasts the (rows, 1) x (1, cols) views directly,
    so no index rectangles are materialized.
    """
    n = ws.size
    block = 128
    for i0 in range(0, n, block):
        hi = min(i0 + block, n)
        b = hi - i0
        cols = ws[i0 + 1 :]
        if cols.size == 0:
            break
        colors = pair_colors(kind, s1, s2, ell, table, ws[i0:hi, None], cols[None, :])
        # column j (global i0+1+jc) pairs with row i0+r only when jc >= r
        valid = np.arange(cols.size)[None, :] >= np.arange(b)[:, None]
        zeros = (colors == 0) & valid
        hit_rows = np.flatnonzero(zeros.any(axis=1))
        if hit_rows.size:
            r = int(hit_rows[0])
            c = int(np.flatnonzero(zeros[r])[0])
            return i0 + r, i0 + 1 + c
    return -1, -1


def triangle_exhaustive(kind, s1, s2, ell, table):
    """First value triple (i, j, k), i < j < k, monochromatic in color 0."""
    m = 1 << ell
    vals = np.arange(m, dtype=np.uint64)
    av = np.broadcast_to(vals[:, None], (m, m)).ravel()
    bv = np.broadcast_to(vals[None, :], (m, m)).ravel()
    colors = pair_colors(kind, s1, s2, ell, table, av, bv).reshape(m, m)
    zero = colors == 0
    np.fill_diagonal(zero, False)
    idx = np.arange(m)
    for i in range(m):
        nbrs = np.flatnonzero(zero[i] & (idx > i))
        if nbrs.size < 2:
            continue
        sub = zero[np.ix_(nbrs, nbrs)]
        ju, ku = np.triu_indices(nbrs.size, k=1)
        hits = sub[ju, ku]
        if hits.any():
            h = int(np.flatnonzero(hits)[0])
            return i, int(nbrs[ju[h]]), int(nbrs[ku[h]])
    return -1, -1, -1


def triangle_batch(kind, s1, s2, ell, table, av, bv, cv):
    """Index of the first triple whose three pair colors are all 0, else -1."""
    c0 = pair_colors(kind, s1, s2, ell, table, av, bv)
    c1 = pair_colors(kind, s1, s2, ell, table, av, cv)
    c2 = pair_colors(kind, s1, s2, ell, table, bv, cv)
    viol = np.flatnonzero((c0 | c1 | c2) == 0)
    return int(viol[0]) if viol.size else -1


def zero_set(kind, s1, s2, ell, table, a):
    """All word values x != a with color(a, x) = 0, ascending by value."""
    m = 1 << ell
    vals = np.arange(m, dtype=np.uint64)
    av = np.full(m, a, dtype=np.uint64)
    colors = pair_colors(kind, s1, s2, ell, table, av, vals)
    return vals[(colors == 0) & (vals != _U(a))]

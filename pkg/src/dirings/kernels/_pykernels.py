"""Vectorized numpy implementation of the candidate-scan kernels.

Strategy: prefilter each side by the laws that touch only one table
(D1 for the left product, D5 for the right; M3a for lact, M5a/M5b for
ract), then check the mixed laws on the survivor cross product in
chunks along the pair axis.
"""

from __future__ import annotations

import numpy as np

PAIR_CHUNK = 1 << 15


def _pairs_array(li, rj):
    out = np.stack([li.astype(np.int64), rj.astype(np.int64)], axis=1)
    order = np.lexsort((out[:, 1], out[:, 0]))
    return out[order]


def _gather_xy(T, U):
    """[c,x,y,z] = T[c, x, U[c,y,z]] for batched square tables."""
    k, n, _ = T.shape
    ci = np.arange(k)[:, None, None, None]
    xi = np.arange(n)[None, :, None, None]
    return T[ci, xi, U[:, None, :, :]]


def _gather_fix(T, U):
    """[c,x,y,z] = T[c, U[c,x,y], z]."""
    k, n, _ = T.shape
    ci = np.arange(k)[:, None, None, None]
    zi = np.arange(n)[None, None, None, :]
    return T[ci, U[:, :, :, None], zi]


def _assoc_ok(cands):
    """D1-style batched check: T[T[x,y],z] == T[x,T[y,z]]."""
    lhs = _gather_fix(cands, cands)
    rhs = _gather_xy(cands, cands)
    return (lhs == rhs).all(axis=(1, 2, 3))


def scan_product_pairs(lcands, rcands):
    lcands = np.ascontiguousarray(lcands, dtype=np.uint8)
    rcands = np.ascontiguousarray(rcands, dtype=np.uint8)
    lok = np.nonzero(_assoc_ok(lcands))[0]
    rok = np.nonzero(_assoc_ok(rcands))[0]
    keep_i: list[np.ndarray] = []
    keep_j: list[np.ndarray] = []
    pl, pr = np.meshgrid(lok, rok, indexing="ij")
    pl, pr = pl.ravel(), pr.ravel()
    for s in range(0, len(pl), PAIR_CHUNK):
        li, rj = pl[s:s + PAIR_CHUNK], pr[s:s + PAIR_CHUNK]
        L, R = lcands[li], rcands[rj]
        ok = (_gather_xy(L, R) == _gather_xy(L, L)).all(axis=(1, 2, 3))       # D2
        ok &= (_gather_fix(L, R) == _gather_xy(R, L)).all(axis=(1, 2, 3))     # D3
        ok &= (_gather_fix(R, L) == _gather_fix(R, R)).all(axis=(1, 2, 3))    # D4
        keep_i.append(li[ok])
        keep_j.append(rj[ok])
    if not keep_i:
        return np.empty((0, 2), dtype=np.int64)
    return _pairs_array(np.concatenate(keep_i), np.concatenate(keep_j))


def _action_left_ok(lprod, cands):
    """M3a: A[lprod[a,b], x] == A[a, A[b,x]]."""
    lhs = cands[:, lprod, :]
    k, nr = cands.shape[0], cands.shape[1]
    ci = np.arange(k)[:, None, None, None]
    ai = np.arange(nr)[None, :, None, None]
    rhs = cands[ci, ai, cands[:, None, :, :]]
    return (lhs == rhs).all(axis=(1, 2, 3))


def _action_right_ok(lprod, rprod, cands):
    """M5a and M5b: B[prod[a,b], x] == B[a, B[b,x]] for both products."""
    k, nr = cands.shape[0], cands.shape[1]
    ci = np.arange(k)[:, None, None, None]
    ai = np.arange(nr)[None, :, None, None]
    rhs = cands[ci, ai, cands[:, None, :, :]]
    return ((cands[:, lprod, :] == rhs).all(axis=(1, 2, 3))
            & (cands[:, rprod, :] == rhs).all(axis=(1, 2, 3)))


def scan_action_pairs(lprod, rprod, lcands, rcands):
    lprod = np.asarray(lprod, dtype=np.int64)
    rprod = np.asarray(rprod, dtype=np.int64)
    lcands = np.ascontiguousarray(lcands, dtype=np.uint8)
    rcands = np.ascontiguousarray(rcands, dtype=np.uint8)
    lok = np.nonzero(_action_left_ok(lprod, lcands))[0]
    rok = np.nonzero(_action_right_ok(lprod, rprod, rcands))[0]
    keep_i: list[np.ndarray] = []
    keep_j: list[np.ndarray] = []
    pl, pr = np.meshgrid(lok, rok, indexing="ij")
    pl, pr = pl.ravel(), pr.ravel()
    nr = lcands.shape[1]
    for s in range(0, len(pl), PAIR_CHUNK):
        li, rj = pl[s:s + PAIR_CHUNK], pr[s:s + PAIR_CHUNK]
        L, R = lcands[li], rcands[rj]
        k = L.shape[0]
        ci = np.arange(k)[:, None, None, None]
        ai = np.arange(nr)[None, :, None, None]
        # M3b: L[lprod[a,b], x] == L[a, R[b,x]]
        ok = (L[:, lprod, :] == L[ci, ai, R[:, None, :, :]]).all(axis=(1, 2, 3))
        # M4: L[rprod[a,b], x] == R[a, L[b,x]]
        ok &= (L[:, rprod, :] == R[ci, ai, L[:, None, :, :]]).all(axis=(1, 2, 3))
        keep_i.append(li[ok])
        keep_j.append(rj[ok])
    if not keep_i:
        return np.empty((0, 2), dtype=np.int64)
    return _pairs_array(np.concatenate(keep_i), np.concatenate(keep_j))

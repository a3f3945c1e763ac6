# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled candidate-scan kernels (same contract as _pykernels)."""

import numpy as np


cdef bint _assoc_ok(const unsigned char[:, ::1] t, int n) nogil:
    cdef int x, y, z
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if t[t[x, y], z] != t[x, t[y, z]]:
                    return False
    return True


cdef bint _mixed_product_ok(const unsigned char[:, ::1] l,
                            const unsigned char[:, ::1] r, int n) nogil:
    cdef int x, y, z
    for x in range(n):
        for y in range(n):
            for z in range(n):
                # D2: x -* (y *- z) == x -* (y -* z)
                if l[x, r[y, z]] != l[x, l[y, z]]:
                    return False
                # D3: (x *- y) -* z == x *- (y -* z)
                if l[r[x, y], z] != r[x, l[y, z]]:
                    return False
                # D4: (x -* y) *- z == (x *- y) *- z
                if r[l[x, y], z] != r[r[x, y], z]:
                    return False
    return True


def scan_product_pairs(lcands, rcands):
    lc = np.ascontiguousarray(lcands, dtype=np.uint8)
    rc = np.ascontiguousarray(rcands, dtype=np.uint8)
    cdef const unsigned char[:, :, ::1] L = lc
    cdef const unsigned char[:, :, ::1] R = rc
    cdef int kl = L.shape[0], kr = R.shape[0], n = L.shape[1]
    cdef int i, j
    lok_np = np.zeros(kl, dtype=np.uint8)
    rok_np = np.zeros(kr, dtype=np.uint8)
    cdef unsigned char[::1] lok = lok_np
    cdef unsigned char[::1] rok = rok_np
    for i in range(kl):
        lok[i] = _assoc_ok(L[i], n)
    for j in range(kr):
        rok[j] = _assoc_ok(R[j], n)
    out = []
    for i in range(kl):
        if not lok[i]:
            continue
        for j in range(kr):
            if not rok[j]:
                continue
            if _mixed_product_ok(L[i], R[j], n):
                out.append((i, j))
    if not out:
        return np.empty((0, 2), dtype=np.int64)
    return np.array(out, dtype=np.int64)


cdef bint _action_rep_ok(const long long[:, ::1] prod,
                         const unsigned char[:, ::1] t,
                         int nr, int nm) nogil:
    cdef int a, b, x
    for a in range(nr):
        for b in range(nr):
            for x in range(nm):
                if t[prod[a, b], x] != t[a, t[b, x]]:
                    return False
    return True


cdef bint _mixed_action_ok(const long long[:, ::1] lprod,
                           const long long[:, ::1] rprod,
                           const unsigned char[:, ::1] L,
                           const unsigned char[:, ::1] R,
                           int nr, int nm) nogil:
    cdef int a, b, x
    for a in range(nr):
        for b in range(nr):
            for x in range(nm):
                # M3b: L[a -* b, x] == L[a, R[b, x]]
                if L[lprod[a, b], x] != L[a, R[b, x]]:
                    return False
                # M4: L[a *- b, x] == R[a, L[b, x]]
                if L[rprod[a, b], x] != R[a, L[b, x]]:
                    return False
    return True


def scan_action_pairs(lprod, rprod, lcands, rcands):
    lp = np.ascontiguousarray(lprod, dtype=np.int64)
    rp = np.ascontiguousarray(rprod, dtype=np.int64)
    lc = np.ascontiguousarray(lcands, dtype=np.uint8)
    rc = np.ascontiguousarray(rcands, dtype=np.uint8)
    cdef const long long[:, ::1] LP = lp
    cdef const long long[:, ::1] RP = rp
    cdef const unsigned char[:, :, ::1] L = lc
    cdef const unsigned char[:, :, ::1] R = rc
    cdef int kl = L.shape[0], kr = R.shape[0]
    cdef int nr = L.shape[1], nm = L.shape[2]
    cdef int i, j
    lok_np = np.zeros(kl, dtype=np.uint8)
    rok_np = np.zeros(kr, dtype=np.uint8)
    cdef unsigned char[::1] lok = lok_np
    cdef unsigned char[::1] rok = rok_np
    for i in range(kl):
        lok[i] = _action_rep_ok(LP, L[i], nr, nm)       # M3a
    for j in range(kr):
        rok[j] = (_action_rep_ok(LP, R[j], nr, nm)       # M5a
                  and _action_rep_ok(RP, R[j], nr, nm))  # M5b
    out = []
    for i in range(kl):
        if not lok[i]:
            continue
        for j in range(kr):
            if not rok[j]:
                continue
            if _mixed_action_ok(LP, RP, L[i], R[j], nr, nm):
                out.append((i, j))
    if not out:
        return np.empty((0, 2), dtype=np.int64)
    return np.array(out, dtype=np.int64)

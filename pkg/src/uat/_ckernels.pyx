# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled candidate prefilter; same contract as ``_kernels_py.survivors``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def survivors(cnp.int64_t[:, :, :, ::1] vals, cnp.int64_t[::1] anchor, long long modulus):
    cdef Py_ssize_t P = vals.shape[0], s = vals.shape[1], K = vals.shape[2], D = vals.shape[3]
    cdef long long total = 1
    cdef Py_ssize_t j
    for j in range(s):
        total *= K
    if P == 0:
        return np.arange(total, dtype=np.int64)
    cdef cnp.int64_t[::1] digits = np.zeros(s, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] w = np.zeros((P, D), dtype=np.int64)
    out = np.empty(min(total, 1 << 16), dtype=np.int64)
    cdef cnp.int64_t[::1] outv = out
    cdef Py_ssize_t n_out = 0, p, d
    cdef long long idx, acc, a
    cdef bint ok, nonzero
    for idx in range(total):
        ok = True
        for p in range(P):
            nonzero = False
            for d in range(D):
                acc = 0
                for j in range(s):
                    acc += vals[p, j, digits[j], d]
                if modulus:
                    acc %= modulus
                    if acc < 0:
                        acc += modulus
                w[p, d] = acc
                if acc != 0:
                    nonzero = True
            if not nonzero:
                ok = False
                break
            a = anchor[p]
            if a != p:
                for d in range(D):
                    if w[p, d] != w[a, d]:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            if n_out == outv.shape[0]:
                out = np.resize(out, 2 * n_out)
                outv = out
            outv[n_out] = idx
            n_out += 1
        # advance the odometer (last digit fastest)
        j = s - 1
        while j >= 0:
            digits[j] += 1
            if digits[j] < K:
                break
            digits[j] = 0
            j -= 1
    return out[:n_out].copy()

"""Numpy implementation of the candidate prefilter (used when the compiled
extension is unavailable or disabled)."""

from __future__ import annotations

import numpy as np

CHUNK = 1 << 15


def _digits(start, stop, K, s):
    """Odometer digits of indices ``start..stop-1`` (first digit slowest)."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, s), dtype=np.int64)
    for j in range(s - 1, -1, -1):
        out[:, j] = idx % K
        idx //= K
    return out


def survivors(vals, anchor, modulus):
    """Indices of coefficient choices that pass every point check.

    ``vals`` has shape ``(P, s, K, D)``.  A candidate is a choice of one of
    the K coefficients for each of the s monomials, numbered in odometer
    order.  It survives when its value is nonzero at every point and equals
    the value at the anchor point of its group.
    """
    P, s, K, D = vals.shape
    total = K**s
    if P == 0:
        return np.arange(total, dtype=np.int64)
    keep = []
    cols = np.arange(s)
    for start in range(0, total, CHUNK):
        stop = min(total, start + CHUNK)
        dig = _digits(start, stop, K, s)
        alive = np.arange(start, stop, dtype=np.int64)
        anchor_vals = {}
        for p in range(P):
            if alive.size == 0:
                break
            w = vals[p][cols, dig].sum(axis=1)
            if modulus:
                w %= modulus
            ok = w.any(axis=1)
            a = anchor[p]
            if a != p:
                ok &= (w == anchor_vals[a]).all(axis=1)
            alive, dig = alive[ok], dig[ok]
            for key in list(anchor_vals):
                anchor_vals[key] = anchor_vals[key][ok]
            if a == p:
                anchor_vals[p] = w[ok]
        keep.append(alive)
    return np.concatenate(keep) if keep else np.zeros(0, dtype=np.int64)

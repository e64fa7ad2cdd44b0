"""Exact linear algebra on raw field values, just enough for minimal polynomials."""

from __future__ import annotations

from .ideals import Ideal, quotient_basis
from .poly import MultiPoly


def coordinates(f: MultiPoly, index: dict) -> list:
    """Coordinates of a normal form in the staircase basis ``index``."""
    F = f.ring.field
    v = [F.zero] * len(index)
    for e, c in f.items():
        v[index[e]] = c
    return v


def minimal_polynomial(h: MultiPoly, J: Ideal, basis=None) -> list:
    """Monic minimal polynomial (low to high) of multiplication by ``h``
    on k[X]/J, which must be zero-dimensional."""
    F = J.ring.field
    basis = basis if basis is not None else quotient_basis(J)
    index = {m: i for i, m in enumerate(basis)}
    rows = []  # (pivot, vec, comb) with vec[pivot] == 1
    power = J.reduce(J.ring.one())
    k = 0
    while True:
        vec = coordinates(power, index)
        comb = {k: F.one}
        for pivot, rv, rc in rows:
            c = vec[pivot]
            if F.is_zero(c):
                continue
            vec = [F.sub(x, F.mul(c, y)) for x, y in zip(vec, rv)]
            for j, v in rc.items():
                comb[j] = F.sub(comb.get(j, F.zero), F.mul(c, v))
        pivot = next((i for i, x in enumerate(vec) if not F.is_zero(x)), None)
        if pivot is None:
            coeffs = [comb.get(j, F.zero) for j in range(k + 1)]
            return coeffs
        inv = F.inv(vec[pivot])
        vec = [F.mul(inv, x) for x in vec]
        comb = {j: F.mul(inv, v) for j, v in comb.items()}
        rows.append((pivot, vec, comb))
        k += 1
        power = J.reduce(power * h)


def substitute(coeffs, h: MultiPoly, J: Ideal) -> MultiPoly:
    """Normal form of coeffs(h) modulo J (Horner)."""
    ring = J.ring
    acc = ring.zero()
    for c in reversed(coeffs):
        acc = J.reduce(acc * h + ring.constant(c))
    return acc

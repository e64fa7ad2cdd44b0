"""Coefficient pools and the bounded candidate enumeration shared by the
unit-additivity, UU and fundamentality refuters.

Candidates are the nonzero polynomials whose monomials are normal (outside
the leading-term ideal) of degree at most the bound, with coefficients in a
finite pool.  They are enumerated by support size, then by support in
descending monomial order, then by coefficient tuple in pool order, so every
normal form appears exactly once and the first witness is reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .fields import FieldTower
from .ideals import Ideal, normal_monomials
from .points import build_tensor, sample


@dataclass(frozen=True)
class CoefficientPool:
    field: FieldTower
    values: tuple  # raw values, 0 first, no duplicates
    description: str

    @property
    def nonzero(self):
        return self.values[1:]

    def __len__(self):
        return len(self.values)

    def texts(self):
        return [self.field.format(v) for v in self.values]

    def enlarged(self, extra, label) -> CoefficientPool:
        return make_pool(self.field, list(self.values) + list(extra), f"{self.description}+{label}")


def make_pool(F: FieldTower, raws, description: str) -> CoefficientPool:
    seen, vals = set(), [F.zero]
    seen.add(F.zero)
    for r in raws:
        if r not in seen:
            seen.add(r)
            vals.append(r)
    return CoefficientPool(F, tuple(vals), description)


def _gauss(F: FieldTower):
    if len(F.levels) < 2:
        raise ValueError("the gauss pool needs a field with an adjoined generator")
    g = F.embed(F.levels[1].generator_raw, F.levels[1])
    one = F.one
    return [one, F.neg(one), g, F.neg(g), F.add(one, g), F.sub(one, g), F.sub(g, one), F.neg(F.add(one, g))]


def default_pool(F: FieldTower) -> CoefficientPool:
    if F.is_finite:
        return parse_pool("all", F)
    if len(F.levels) > 1:
        return parse_pool("gauss", F)
    return parse_pool("small", F)


def parse_pool(spec: str | None, F: FieldTower) -> CoefficientPool:
    """``small``, ``gauss``, ``all`` or ``list:a,b,...`` (field-element expressions)."""
    if spec is None or spec == "default":
        return default_pool(F)
    spec = spec.strip()
    if spec == "small":
        return make_pool(F, [F.from_int(k) for k in (1, -1, 2, -2)], "small")
    if spec == "gauss":
        return make_pool(F, _gauss(F), "gauss")
    if spec == "all":
        if not F.is_finite:
            raise ValueError("the 'all' pool needs a finite coefficient field")
        return make_pool(F, list(F.elements()), "all")
    if spec.startswith("list:"):
        items = [t for t in spec[5:].split(",") if t.strip()]
        return make_pool(F, [F.parse(t).raw for t in items], spec)
    raise ValueError(f"unknown coefficient pool {spec!r}")


def candidate_count(n_monomials: int, pool_size: int) -> int:
    """Number of nonzero candidates: every monomial gets any pool value."""
    return pool_size**n_monomials - 1


def enumerate_candidates(I: Ideal, degree: int, pool: CoefficientPool):
    """Reference enumeration without any filtering."""
    ring = I.ring
    monos = normal_monomials(I, degree)
    nz = pool.nonzero
    for s in range(1, len(monos) + 1):
        for support in itertools.combinations(monos, s):
            for coeffs in itertools.product(nz, repeat=s):
                yield ring.from_coefficients(dict(zip(support, coeffs)))


class CandidateSearch:
    """Iterate over candidates that pass the point/line prefilter.

    Yields ``(ordinal, polynomial)`` where ``ordinal`` is the 0-based position
    in the full enumeration.  ``enumerated`` counts every candidate visited,
    filtered or not.
    """

    def __init__(self, I: Ideal, degree: int, pool: CoefficientPool, *, prefilter=True, backend=None, seed=0):
        self.ideal = I
        self.degree = degree
        self.pool = pool
        self.monomials = normal_monomials(I, degree)
        self.total = candidate_count(len(self.monomials), len(pool))
        self.enumerated = 0
        self.backend = backend or kernels.BACKEND
        if prefilter and self.monomials:
            groups = sample(I, degree, seed=seed)
            self.vals, self.anchor, self.modulus = build_tensor(groups, I.ring, self.monomials, pool.nonzero)
        else:
            K = len(pool.nonzero)
            self.vals = np.zeros((0, len(self.monomials), K, 1), dtype=np.int64)
            self.anchor = np.zeros(0, dtype=np.int64)
            self.modulus = I.ring.field.characteristic
        self.points_used = int(self.vals.shape[0])

    def __iter__(self):
        ring = self.ideal.ring
        m = len(self.monomials)
        nz = self.pool.nonzero
        K = len(nz)
        if K == 0:
            return
        ordinal = 0
        for s in range(1, m + 1):
            block = K**s
            for support in itertools.combinations(range(m), s):
                sub = np.ascontiguousarray(self.vals[:, list(support), :, :])
                keep = kernels.survivors(sub, self.anchor, self.modulus, self.backend)
                mons = [self.monomials[j] for j in support]
                for idx in keep:
                    idx = int(idx)
                    digits = []
                    r = idx
                    for _ in range(s):
                        digits.append(r % K)
                        r //= K
                    digits.reverse()
                    self.enumerated = ordinal + idx + 1
                    yield ordinal + idx, ring.from_coefficients({mo: nz[d] for mo, d in zip(mons, digits)})
                ordinal += block
                self.enumerated = ordinal
        self.enumerated = self.total

    def describe(self) -> dict:
        return {
            "degree_bound": self.degree,
            "coefficient_pool": self.pool.description,
            "pool": self.pool.texts(),
            "monomials": len(self.monomials),
            "candidates": self.total,
            "sample_points": self.points_used,
            "kernel": self.backend,
        }

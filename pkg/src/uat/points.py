"""Exact sample points and lines on V(I), packed into integer tensors.

Units of k[X]/I vanish nowhere on V over the algebraic closure, so they are
nonzero at every sampled point and constant along every line contained in
V.  Both conditions are necessary, which makes them a sound prefilter for
candidate searches: survivors are always re-checked exactly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from . import univariate as up
from .errors import BudgetExceeded, UATError
from .fields import FieldTower
from .ideals import Ideal
from .poly import evaluate_raw

INT_BOUND = 2**62

_SMALL_RATIONALS = [
    Fraction(v)
    for v in (
        0, 1, -1, 2, -2, "1/2", "-1/2", 3, -3, "3/5", "4/5", "-3/5", "-4/5",
        "3/4", "4/3", "5/3", "5/4", "1/3", "-1/3", 5, "7/3",
    )
]


def flatten(T: FieldTower, raw) -> list:
    """Coordinates of a raw value over the prime field or QQ."""
    if T.parent is None:
        return [raw]
    out = []
    for c in raw:
        out.extend(flatten(T.parent, c))
    return out


def sample_values(T: FieldTower, limit: int = 32, seed: int = 0) -> list:
    """A deterministic list of distinct raw values of ``T``, simplest first."""
    if T.is_finite:
        if T.size <= limit:
            vals = list(T.elements())
        else:
            rng = random.Random(seed)
            vals = [T.zero, T.one]
            seen = set(vals)
            while len(vals) < limit:
                v = T.random(rng)
                if v not in seen:
                    seen.add(v)
                    vals.append(v)
        zero = [v for v in vals if T.is_zero(v)]
        return zero + [v for v in vals if not T.is_zero(v)]
    base = [T.from_fraction(q) for q in _SMALL_RATIONALS]
    if T.parent is None:
        return base
    g = T.embed(T.levels[1].generator_raw, T.levels[1]) if len(T.levels) > 1 else None
    extra = [T.mul(g, b) for b in base[1:8]]
    extra += [T.add(T.one, g), T.sub(T.one, g), T.add(T.from_int(2), g)]
    seen, out = set(), []
    for v in base + extra:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def point_towers(F: FieldTower) -> list:
    """The coefficient tower plus a small extension, to reach more points."""
    towers = [F]
    if F.is_rational:
        towers.append(F.extend("_i", [F.one, F.zero, F.one]))
    elif F.is_finite and F.size <= 64:
        quad = _irreducible_quadratic(F)
        if quad is not None:
            towers.append(F.extend("_w", quad))
    return towers


def _irreducible_quadratic(F: FieldTower):
    elems = list(F.elements())
    for b in elems:
        for a in elems:
            if F.is_zero(b):
                continue
            # monic t^2 + a t + b is irreducible iff it has no root in F
            if all(not F.is_zero(F.add(F.add(F.mul(x, x), F.mul(a, x)), b)) for x in elems):
                return [b, a, F.one]
    return None


@dataclass
class PointGroup:
    """Points of V over ``tower``; if ``line`` is set they lie on one line
    of V and a unit must take a single value on all of them."""

    tower: FieldTower
    points: list
    line: bool = False


def _specialize(f, T, coords, last):
    """Coefficients (low first) of f with all variables but ``last`` fixed."""
    F = f.ring.field
    out = {}
    for e, c in f.items():
        term = c if T == F else T.embed(c, F)
        for i, k in enumerate(e):
            if k and i != last:
                term = T.mul(term, T.pow(coords[i], k))
        d = e[last]
        out[d] = T.add(out.get(d, T.zero), term)
    deg = max(out) if out else -1
    return up.trim(T, [out.get(j, T.zero) for j in range(deg + 1)])


def _roots(T, g, values):
    if up.degree(g) == 1:
        g = up.monic(T, g)
        return [T.neg(g[0])]
    roots = []
    if T.is_rational or (T.is_finite and T.size <= 4096):
        try:
            _, facs = up.factor(T, g)
            roots = [T.neg(up.monic(T, h)[0]) for h, _ in facs if up.degree(h) == 1]
        except (BudgetExceeded, UATError):
            roots = []
    if not roots:
        roots = [v for v in values if T.is_zero(up.evaluate(T, g, v))]
    return roots


def _assignments(nfree, size):
    if nfree == 0:
        yield ()
        return
    for r in range(1, size + 1):
        for tup in itertools.product(range(r), repeat=nfree):
            if max(tup) == r - 1:
                yield tup


def sample_points(I: Ideal, T: FieldTower, *, max_points: int = 16, max_tries: int = 300, seed: int = 0):
    """Exact points of V(I) with coordinates in ``T``, verified on every generator."""
    ring = I.ring
    n = ring.nvars
    gens = list(I.basis)
    if I.is_unit_ideal or n == 0:
        return []
    values = sample_values(T, seed=seed)
    found, seen = [], set()

    def add(pt):
        key = tuple(pt)
        if key in seen:
            return
        if all(T.is_zero(evaluate_raw(g, T, pt)) for g in gens):
            seen.add(key)
            found.append(list(pt))

    for last in reversed(range(n)):
        tries = 0
        for tup in _assignments(n - 1, len(values)):
            if len(found) >= max_points or tries >= max_tries:
                break
            tries += 1
            coords = [None] * n
            it = iter(tup)
            for i in range(n):
                if i != last:
                    coords[i] = values[next(it)]
            g = []
            for f in gens:
                g = up.gcd(T, g, _specialize(f, T, coords, last)) if g else up.trim(T, _specialize(f, T, coords, last))
                if g and up.degree(g) == 0:
                    break
            if g and up.degree(g) == 0:
                continue
            cands = values[:3] if not g else _roots(T, g, values)
            for r in cands:
                coords[last] = r
                add(list(coords))
        if len(found) >= max_points:
            break
    return found


def _directions(n):
    dirs = []
    for i in range(n):
        dirs.append(tuple(1 if k == i else 0 for k in range(n)))
    for i, j in itertools.combinations(range(n), 2):
        for s in (1, -1):
            dirs.append(tuple(1 if k == i else (s if k == j else 0) for k in range(n)))
    return dirs


def find_lines(I: Ideal, T: FieldTower, points, *, max_lines: int = 12, per_point: int = 2):
    """Lines ``p + t d`` contained in V, with d from a small direction set.

    At most ``per_point`` lines are taken through any one point so that the
    lines spread over different parts of V.
    """
    gens = list(I.basis)
    n = I.ring.nvars
    degs = max((g.total_degree() for g in gens), default=0)
    ts = [T.from_int(k) for k in range(int(degs) + 1)] if not T.is_finite else list(sample_values(T, int(degs) + 1))
    lines = []
    used_dirs = {}
    for p in points:
        here = 0
        # directions used least so far come first
        for d in sorted(_directions(n), key=lambda d: used_dirs.get(d, 0)):
            if len(lines) >= max_lines:
                return lines
            if here >= per_point:
                break
            ok = True
            for t in ts:
                q = [T.add(x, T.mul(t, T.from_int(di))) for x, di in zip(p, d)]
                if not all(T.is_zero(evaluate_raw(g, T, q)) for g in gens):
                    ok = False
                    break
            if ok and len(ts) > int(degs):
                lines.append((p, d))
                used_dirs[d] = used_dirs.get(d, 0) + 1
                here += 1
    return lines


def sample(I: Ideal, degree_bound: int, *, max_points: int = 16, max_lines: int = 12, seed: int = 0):
    """Point groups over the coefficient tower and a small extension."""
    groups = []
    for T in point_towers(I.ring.field):
        pts = sample_points(I, T, max_points=max_points, seed=seed)
        lines = find_lines(I, T, pts, max_lines=max_lines) if degree_bound > 0 else []
        if T.is_finite:
            ts = sample_values(T, degree_bound + 1)[: degree_bound + 1]
        else:
            ts = [T.from_int(k) for k in range(degree_bound + 1)]
        for p, d in lines:
            on = [[T.add(x, T.mul(t, T.from_int(di))) for x, di in zip(p, d)] for t in ts]
            groups.append(PointGroup(T, on, line=True))
        groups.extend(PointGroup(T, [p]) for p in pts)
    # lines are the strongest constraint; check them first
    groups.sort(key=lambda g: not g.line)
    return groups


def build_tensor(groups, ring, monomials, pool_raws):
    """Integer tensor ``vals[P, m, K, D]`` with an anchor index per point.

    ``vals[p, j, k]`` holds the base coordinates of ``mono_j(p) * pool_k``,
    scaled by one common denominator per group so that equality and
    nonvanishing are preserved exactly.  Groups whose entries do not fit in
    64-bit arithmetic are dropped (a weaker but still sound filter).
    """
    F = ring.field
    modulus = F.characteristic
    m, K = len(monomials), len(pool_raws)
    D = max((g.tower.absolute_degree for g in groups), default=1)
    blocks, anchors = [], []
    for grp in groups:
        T = grp.tower
        pool_T = [T.embed(c, F) for c in pool_raws]
        block = []
        for pt in grp.points:
            rows = []
            for mono in monomials:
                mv = T.one
                for x, k in zip(pt, mono):
                    if k:
                        mv = T.mul(mv, T.pow(x, k))
                rows.append([flatten(T, T.mul(mv, c)) for c in pool_T])
            block.append(rows)
        if modulus:
            arr = np.zeros((len(block), m, K, D), dtype=np.int64)
            for a, rows in enumerate(block):
                for j, row in enumerate(rows):
                    for k, coords in enumerate(row):
                        arr[a, j, k, : len(coords)] = [int(c) % modulus for c in coords]
        else:
            den = 1
            for rows in block:
                for row in rows:
                    for coords in row:
                        for c in coords:
                            den = lcm(den, c.denominator)
            ints = [[[[int(c * den) for c in coords] for coords in row] for row in rows] for rows in block]
            biggest = max((abs(c) for rows in ints for row in rows for coords in row for c in coords), default=0)
            if biggest * max(m, 1) >= INT_BOUND:
                continue
            arr = np.zeros((len(block), m, K, D), dtype=np.int64)
            for a, rows in enumerate(ints):
                for j, row in enumerate(rows):
                    for k, coords in enumerate(row):
                        arr[a, j, k, : len(coords)] = coords
        start = sum(len(b) for b in blocks)
        blocks.append(arr)
        anchors.extend([start] * len(block) if grp.line else range(start, start + len(block)))
    if not blocks:
        return np.zeros((0, m, K, D), dtype=np.int64), np.zeros(0, dtype=np.int64), modulus
    return np.concatenate(blocks), np.asarray(anchors, dtype=np.int64), modulus

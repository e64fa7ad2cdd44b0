"""Buchberger engine and ideal-level predicates.

The engine works on plain dicts (exponent tuple -> raw coefficient) and keeps
basis elements monic. Pairs are processed in (lcm degree, i, j) order with
the coprime-leading-monomial and chain criteria.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import BudgetExceeded, NotZeroDimensional
from .poly import MonomialOrder, MultiPoly, PolyRing


@dataclass(frozen=True)
class Budget:
    """Resource caps for one Gröbner run."""

    max_pairs: int = 50_000
    max_degree: int = 60


DEFAULT_BUDGET = Budget()


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


class _Elt:
    __slots__ = ("lm", "poly", "cof")

    def __init__(self, lm, poly, cof=None):
        self.lm = lm
        self.poly = poly
        self.cof = cof


class _Engine:
    def __init__(self, ring: PolyRing, budget: Budget | None):
        self.ring = ring
        self.F = ring.field
        self.budget = budget or DEFAULT_BUDGET
        self.pairs_done = 0

    def negkey(self, m):
        return tuple(-x for x in self.ring.key(m))

    def lead(self, p):
        return max(p, key=self.ring.key)

    def make_monic(self, p, cof=None):
        F = self.F
        lm = self.lead(p)
        c = p[lm]
        if c == F.one:
            return lm, p, cof
        inv = F.inv(c)
        p = {e: F.mul(inv, v) for e, v in p.items()}
        if cof is not None:
            cof = [{e: F.mul(inv, v) for e, v in q.items()} for q in cof]
        return lm, p, cof

    def _sub_scaled(self, p, g, c, shift, heap=None, inheap=None):
        """p -= c * x^shift * g, skipping g's leading term when heap is given."""
        F = self.F
        for e, v in g.items():
            m = tuple(a + b for a, b in zip(e, shift))
            old = p.get(m)
            t = F.mul(c, v)
            if old is None:
                p[m] = F.neg(t)
                if heap is not None and m not in inheap:
                    heapq.heappush(heap, (self.negkey(m), m))
                    inheap.add(m)
            else:
                new = F.sub(old, t)
                if F.is_zero(new):
                    del p[m]
                else:
                    p[m] = new

    def reduce(self, p, basis, cof=None, full=True):
        """Normal form of ``p`` modulo ``basis`` (monic elements).

        With ``cof`` the cofactor vector is updated in place so that
        ``remainder = sum cof_i f_i`` stays true.
        """
        F = self.F
        p = dict(p)
        rem = {}
        heap = [(self.negkey(m), m) for m in p]
        heapq.heapify(heap)
        inheap = set(p)
        while heap:
            _, m = heapq.heappop(heap)
            inheap.discard(m)
            c = p.get(m)
            if c is None:
                continue
            for g in basis:
                if _divides(g.lm, m):
                    shift = tuple(a - b for a, b in zip(m, g.lm))
                    del p[m]
                    gp = g.poly
                    for e, v in gp.items():
                        if e == g.lm:
                            continue
                        mm = tuple(a + b for a, b in zip(e, shift))
                        t = F.mul(c, v)
                        old = p.get(mm)
                        if old is None:
                            p[mm] = F.neg(t)
                            if mm not in inheap:
                                heapq.heappush(heap, (self.negkey(mm), mm))
                                inheap.add(mm)
                        else:
                            new = F.sub(old, t)
                            if F.is_zero(new):
                                del p[mm]
                            else:
                                p[mm] = new
                    if cof is not None:
                        for i, q in enumerate(g.cof):
                            if q:
                                self._sub_scaled(cof[i], q, c, shift)
                    break
            else:
                rem[m] = p.pop(m)
                if not full:
                    rem.update(p)
                    return rem
        return rem

    def spoly(self, f: _Elt, g: _Elt, track):
        F = self.F
        L = _lcm(f.lm, g.lm)
        sf = tuple(a - b for a, b in zip(L, f.lm))
        sg = tuple(a - b for a, b in zip(L, g.lm))
        s = {}
        for e, v in f.poly.items():
            if e != f.lm:
                s[tuple(a + b for a, b in zip(e, sf))] = v
        self._sub_scaled(s, {e: v for e, v in g.poly.items() if e != g.lm}, F.one, sg)
        cof = None
        if track:
            cof = [dict() for _ in f.cof]
            for i, q in enumerate(f.cof):
                if q:
                    self._sub_scaled(cof[i], q, F.neg(F.one), sf)
            for i, q in enumerate(g.cof):
                if q:
                    self._sub_scaled(cof[i], q, F.one, sg)
        return s, cof

    def run(self, polys, track=False):
        """Buchberger loop. Returns the (non-reduced) basis, or in tracking
        mode stops at the first nonzero constant and returns it alone."""
        ring = self.ring
        G: list[_Elt] = []
        n = len(polys)
        for idx, p in enumerate(polys):
            if not p:
                continue
            cof = None
            if track:
                cof = [dict() for _ in range(n)]
                cof[idx][ring._zero_exp] = self.F.one
            lm, mp, cof = self.make_monic(p, cof)
            G.append(_Elt(lm, mp, cof))
            if sum(lm) == 0:
                return [G[-1]]
        B = set()
        heap = []

        def add_pairs(j):
            for i in range(j):
                key = (sum(_lcm(G[i].lm, G[j].lm)), i, j)
                B.add((i, j))
                heapq.heappush(heap, key)

        for j in range(1, len(G)):
            add_pairs(j)
        while heap:
            _, i, j = heapq.heappop(heap)
            if (i, j) not in B:
                continue
            B.discard((i, j))
            fi, fj = G[i], G[j]
            L = _lcm(fi.lm, fj.lm)
            if all(a == 0 or b == 0 for a, b in zip(fi.lm, fj.lm)):
                continue
            if self._chain(i, j, L, G, B):
                continue
            self.pairs_done += 1
            if self.pairs_done > self.budget.max_pairs:
                raise BudgetExceeded(
                    "S-pair budget exceeded",
                    pairs=self.pairs_done,
                    basis_size=len(G),
                    pending=len(B),
                )
            s, cof = self.spoly(fi, fj, track)
            r = self.reduce(s, G, cof) if s else {}
            if not r:
                continue
            lm, r, cof = self.make_monic(r, cof)
            if sum(lm) > self.budget.max_degree:
                raise BudgetExceeded(
                    "degree budget exceeded",
                    degree=sum(lm),
                    pairs=self.pairs_done,
                    basis_size=len(G),
                )
            G.append(_Elt(lm, r, cof))
            if sum(lm) == 0:
                return [G[-1]]
            add_pairs(len(G) - 1)
        return G

    @staticmethod
    def _chain(i, j, L, G, B):
        for k, g in enumerate(G):
            if k == i or k == j:
                continue
            if not _divides(g.lm, L):
                continue
            if (min(i, k), max(i, k)) in B or (min(j, k), max(j, k)) in B:
                continue
            return True
        return False

    def reduced(self, G):
        if any(sum(g.lm) == 0 for g in G):
            return [{self.ring._zero_exp: self.F.one}]
        keep = []
        for i, g in enumerate(G):
            dominated = False
            for j, h in enumerate(G):
                if i != j and _divides(h.lm, g.lm) and (h.lm != g.lm or j < i):
                    dominated = True
                    break
            if not dominated:
                keep.append(g)
        out = []
        for i, g in enumerate(keep):
            others = [h for k, h in enumerate(keep) if k != i]
            tail = {e: v for e, v in g.poly.items() if e != g.lm}
            r = self.reduce(tail, others)
            r[g.lm] = self.F.one
            out.append(r)
        out.sort(key=lambda p: self.ring.key(self.lead(p)), reverse=True)
        return out


def groebner(gens, ring: PolyRing | None = None, budget: Budget | None = None) -> list[MultiPoly]:
    """Reduced Gröbner basis of ``gens`` under the ring's order.

    Deterministic for fixed input. The zero ideal gives ``[]``; the unit
    ideal gives ``[1]``.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    gens = [ring.coerce(g) for g in gens]
    eng = _Engine(ring, budget)
    G = eng.run([g.raw_terms() for g in gens if g])
    return [MultiPoly(ring, p) for p in eng.reduced(G)] if G else []


def unit_cofactors(gens, ring: PolyRing | None = None, budget: Budget | None = None):
    """Return ``[c_i]`` with ``sum c_i * gens[i] == 1``, or ``None`` if 1 is not
    in the ideal. The identity is checked before returning."""
    gens = list(gens)
    ring = ring or gens[0].ring
    gens = [ring.coerce(g) for g in gens]
    eng = _Engine(ring, budget)
    G = eng.run([g.raw_terms() for g in gens], track=True)
    if not G or sum(G[-1].lm) != 0 or len(G) != 1:
        return None
    cofs = [MultiPoly(ring, dict(q)) for q in G[0].cof]
    total = ring.zero()
    for c, g in zip(cofs, gens):
        total = total + c * g
    if total != ring.one():
        from .errors import InternalInconsistency

        raise InternalInconsistency("cofactor tracking produced a wrong identity")
    return cofs


def normal_form(f: MultiPoly, basis) -> MultiPoly:
    """Remainder of ``f`` on division by a (monic) Gröbner basis."""
    ring = f.ring
    if not basis:
        return f
    eng = _Engine(ring, None)
    elts = [_Elt(g.leading_monomial, g.raw_terms()) for g in basis]
    return MultiPoly(ring, eng.reduce(f.raw_terms(), elts))


class Ideal:
    """An ideal with its reduced Gröbner basis, computed at construction."""

    def __init__(self, ring: PolyRing, generators=(), budget: Budget | None = None):
        self.ring = ring
        self.budget = budget or DEFAULT_BUDGET
        self.generators = tuple(ring.coerce(g) for g in generators)
        self.basis = tuple(groebner(self.generators, ring, self.budget))
        self._elts = [_Elt(g.leading_monomial, g.raw_terms()) for g in self.basis]

    @classmethod
    def parse(cls, ring, texts, budget=None) -> Ideal:
        return cls(ring, [ring.parse(t) for t in texts], budget)

    def reduce(self, f) -> MultiPoly:
        f = self.ring.coerce(f)
        if not self._elts:
            return f
        eng = _Engine(self.ring, None)
        return MultiPoly(self.ring, eng.reduce(f.raw_terms(), self._elts))

    def contains(self, f) -> bool:
        return self.reduce(f).is_zero()

    __contains__ = contains

    @property
    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    @property
    def is_zero_ideal(self) -> bool:
        return not self.basis

    def leading_monomials(self):
        return [g.leading_monomial for g in self.basis]

    def with_generators(self, extra) -> Ideal:
        return Ideal(self.ring, list(self.basis) + [self.ring.coerce(e) for e in extra], self.budget)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and self.basis == other.basis

    def __hash__(self):
        return hash((self.ring, self.basis))

    def basis_text(self) -> list[str]:
        return [str(g) for g in self.basis]

    def __repr__(self):
        return f"Ideal({self.basis_text()})"


# -- operations ------------------------------------------------------------


def _extended_ring(ring: PolyRing, front=(), back=(), order=None) -> PolyRing:
    return PolyRing(ring.field, tuple(front) + ring.variables + tuple(back), order or ring.order)


def member(f, I: Ideal) -> bool:
    return I.contains(f)


def radical_member(f, I: Ideal, budget: Budget | None = None) -> bool:
    """``f`` in the radical of ``I``, via 1 in I + (1 - y f)."""
    f = I.ring.coerce(f)
    if f.is_zero() or I.contains(f):
        return True
    y = I.ring.fresh_name("_y")
    big = _extended_ring(I.ring, back=(y,), order="grevlex")
    gens = [g.to_ring(big) for g in I.basis]
    gens.append(big.one() - big.var(y) * f.to_ring(big))
    G = groebner(gens, big, budget or I.budget)
    return len(G) == 1 and G[0].is_constant()


def rabinowitsch_basis(f, I: Ideal, budget: Budget | None = None) -> list[MultiPoly]:
    """Reduced basis of I + (1 - y f) in one extra variable (evidence data)."""
    f = I.ring.coerce(f)
    y = I.ring.fresh_name("_y")
    big = _extended_ring(I.ring, back=(y,), order="grevlex")
    gens = [g.to_ring(big) for g in I.basis] + [big.one() - big.var(y) * f.to_ring(big)]
    return groebner(gens, big, budget or I.budget)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same(I, J)
    return Ideal(I.ring, list(I.basis) + list(J.basis), I.budget)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating t from t*I + (1 - t)*J."""
    _same(I, J)
    ring = I.ring
    if I.is_unit_ideal:
        return J
    if J.is_unit_ideal:
        return I
    if I.is_zero_ideal or J.is_zero_ideal:
        return Ideal(ring, [], I.budget)
    t = ring.fresh_name("_t")
    big = _extended_ring(ring, front=(t,), order=MonomialOrder("block", 1))
    tv = big.var(t)
    gens = [tv * g.to_ring(big) for g in I.basis] + [(big.one() - tv) * g.to_ring(big) for g in J.basis]
    G = groebner(gens, big, I.budget)
    keep = [g.to_ring(ring) for g in G if g.degree_in(t) <= 0]
    return Ideal(ring, keep, I.budget)


def eliminate(I: Ideal, front: int) -> Ideal:
    """Intersect ``I`` with the subring in all but the first ``front``
    variables; the result lives in that smaller ring."""
    ring = I.ring
    if not 0 < front < ring.nvars:
        raise ValueError("front block must be a proper nonempty prefix of the variables")
    blk = PolyRing(ring.field, ring.variables, MonomialOrder("block", front))
    G = groebner([g.to_ring(blk) for g in I.basis], blk, I.budget)
    sub = PolyRing(ring.field, ring.variables[front:], ring.order)
    keep = [g.to_ring(sub) for g in G if all(sum(e[:front]) == 0 for e, _ in g.items())]
    return Ideal(sub, keep, I.budget)


def quotient(I: Ideal, f) -> Ideal:
    """Colon ideal ``I : f``."""
    f = I.ring.coerce(f)
    if f.is_zero():
        return Ideal(I.ring, [I.ring.one()], I.budget)
    inter = intersect(I, Ideal(I.ring, [f], I.budget))
    gens = []
    for g in inter.basis:
        q, r = divide(g, f)
        if not r.is_zero():
            from .errors import InternalInconsistency

            raise InternalInconsistency("intersection element not divisible by f")
        gens.append(q)
    return Ideal(I.ring, gens, I.budget)


def divide(f: MultiPoly, g: MultiPoly):
    """Exact-or-not division of ``f`` by a single polynomial ``g``."""
    eng = _Engine(f.ring, None)
    lm, gp, _ = eng.make_monic(g.raw_terms())
    F = f.ring.field
    lc = g.terms()[0][1]
    p = dict(f.raw_terms())
    q = {}
    r = {}
    while p:
        m = eng.lead(p)
        c = p[m]
        if _divides(lm, m):
            shift = tuple(a - b for a, b in zip(m, lm))
            q[shift] = F.add(q.get(shift, F.zero), c)
            eng._sub_scaled(p, gp, c, shift)
        else:
            r[m] = p.pop(m)
    inv = F.inv(lc)
    q = {e: F.mul(inv, v) for e, v in q.items() if not F.is_zero(v)}
    return MultiPoly(f.ring, q), MultiPoly(f.ring, r)


def saturate(I: Ideal, f, max_rounds: int = 64) -> Ideal:
    """``I : f^∞`` by iterating colon ideals until two successive ones agree."""
    J = I
    for _ in range(max_rounds):
        K = quotient(J, f)
        if K == J:
            return J
        J = K
    raise BudgetExceeded("saturation did not stabilize", rounds=max_rounds)


def equal(I: Ideal, J: Ideal) -> bool:
    _same(I, J)
    return I.basis == J.basis


def is_zero_dimensional(I: Ideal) -> bool:
    if I.is_unit_ideal:
        return True
    n = I.ring.nvars
    pure = set()
    for m in I.leading_monomials():
        nz = [i for i, k in enumerate(m) if k]
        if len(nz) == 1:
            pure.add(nz[0])
    return len(pure) == n


def quotient_basis(I: Ideal):
    """Staircase monomials (ascending in the order); finite iff zero-dimensional."""
    if not is_zero_dimensional(I):
        raise NotZeroDimensional("quotient basis requested for a positive-dimensional ideal")
    if I.is_unit_ideal:
        return []
    lms = I.leading_monomials()
    n = I.ring.nvars
    start = (0,) * n
    seen = {start}
    stack = [start]
    while stack:
        m = stack.pop()
        for i in range(n):
            nm = m[:i] + (m[i] + 1,) + m[i + 1 :]
            if nm in seen or any(_divides(l, nm) for l in lms):
                continue
            seen.add(nm)
            stack.append(nm)
    return sorted(seen, key=I.ring.key)


def normal_monomials(I: Ideal, max_degree: int):
    """Monomials of degree <= max_degree outside the leading-term ideal,
    descending in the order."""
    lms = I.leading_monomials()
    return [m for m in I.ring.monomials_up_to(max_degree) if not any(_divides(l, m) for l in lms)]


def _same(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")

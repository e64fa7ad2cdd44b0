"""Brute-force ground truth for finite commutative rings.

A :class:`FiniteRing` stores complete addition and multiplication tables
over element indices ``0..n-1`` (index 0 is zero).  Every property is then
decided by exhaustive enumeration with numpy, independently of the Groebner
machinery.  Rings are written as roster strings::

    Zmod(8)
    GFpoly(2, x^2+x)
    prod(Zmod(4), GFpoly(2, x^2+x+1))
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceeded, InternalInconsistency, ParseError

DEFAULT_MAX_SIZE = 4096


@dataclass(eq=False)
class FiniteRing:
    name: str
    add: np.ndarray
    mul: np.ndarray
    labels: list | None = None
    factors: list = field(default_factory=list)
    one: int | None = None

    def __post_init__(self):
        self.add = np.asarray(self.add, dtype=np.int32)
        self.mul = np.asarray(self.mul, dtype=np.int32)
        self.size = self.add.shape[0]
        if self.one is None:
            ar = np.arange(self.size)
            ones = np.flatnonzero((self.mul == ar[None, :]).all(axis=1))
            if len(ones) != 1:
                raise InternalInconsistency(f"{self.name}: expected exactly one multiplicative identity")
            self.one = int(ones[0])
        elif not (self.mul[self.one] == np.arange(self.size)).all():
            raise InternalInconsistency(f"{self.name}: element {self.one} is not the identity")
        self.neg_one = int(np.flatnonzero(self.add[:, self.one] == 0)[0])

    # constructors ------------------------------------------------------
    @classmethod
    def mod_n(cls, n: int) -> FiniteRing:
        if n < 2:
            raise ValueError("Zmod needs n >= 2")
        ar = np.arange(n)
        return cls(f"Zmod({n})", (ar[:, None] + ar[None, :]) % n, (ar[:, None] * ar[None, :]) % n,
                   labels=[str(i) for i in range(n)])

    @classmethod
    def from_structure(cls, p: int, C: np.ndarray, name: str, labels=None) -> FiniteRing:
        """F_p-algebra with basis b_0..b_{D-1} and b_r b_s = sum_t C[r,s,t] b_t.

        Element index = sum_t v_t p^t for the coordinate vector v.
        """
        D = C.shape[0]
        n = p**D
        if n > DEFAULT_MAX_SIZE * 4:
            raise BudgetExceeded(f"{name} has {n} elements", size=n)
        weights = p ** np.arange(D)
        vecs = (np.arange(n)[:, None] // weights[None, :]) % p
        add_vec = (vecs[:, None, :] + vecs[None, :, :]) % p
        add = add_vec @ weights
        mul = np.empty((n, n), dtype=np.int64)
        Cf = C.reshape(D, D * D)
        for i in range(n):
            tmp = (vecs[i] @ Cf).reshape(D, D) % p  # row s, coordinate t
            mul[i] = ((vecs @ tmp) % p) @ weights
        return cls(name, add, mul, labels=labels)

    @classmethod
    def gf_poly(cls, p: int, coeffs) -> FiniteRing:
        """F_p[x]/(f) for a monic f given low-to-high (f need not be irreducible)."""
        coeffs = [c % p for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        d = len(coeffs) - 1
        if d < 1 or coeffs[-1] != 1:
            raise ValueError("GFpoly needs a monic polynomial of degree at least 1")
        # coordinates of x^k mod f for k < 2d - 1
        powers = []
        cur = [1] + [0] * (d - 1)
        for _ in range(2 * d - 1):
            powers.append(cur)
            top = cur[-1]
            cur = [0] + cur[:-1]
            cur = [(c - top * coeffs[i]) % p for i, c in enumerate(cur)]
        C = np.array([[powers[r + s] for s in range(d)] for r in range(d)], dtype=np.int64)
        name = f"GFpoly({p}, {_poly_text(coeffs)})"
        return cls.from_structure(p, C, name)

    @classmethod
    def product(cls, rings) -> FiniteRing:
        rings = list(rings)
        if not rings:
            raise ValueError("empty product")
        if len(rings) == 1:
            return rings[0]
        A, B = rings[0], cls.product(rings[1:]) if len(rings) > 2 else rings[1]
        na, nb = A.size, B.size
        if na * nb > DEFAULT_MAX_SIZE * 4:
            raise BudgetExceeded("product ring too large", size=na * nb)

        def combine(TA, TB):
            t = TA[:, None, :, None] * nb + TB[None, :, None, :]
            return t.reshape(na * nb, na * nb)

        name = "prod(" + ", ".join(r.name for r in rings) + ")"
        return cls(name, combine(A.add, B.add), combine(A.mul, B.mul), factors=rings, one=A.one * nb + B.one)

    # element-level ---------------------------------------------------------
    def constant(self, c: int) -> int:
        x = 0
        for _ in range(c % (self.characteristic or self.size)):
            x = int(self.add[x, self.one])
        return x

    @property
    def characteristic(self) -> int:
        x, k = self.one, 1
        while x != 0:
            x = int(self.add[x, self.one])
            k += 1
        return k

    def units(self) -> np.ndarray:
        return np.flatnonzero((self.mul == self.one).any(axis=1))

    def unit_mask(self) -> np.ndarray:
        return (self.mul == self.one).any(axis=1)

    def inverse(self, x: int) -> int | None:
        hit = np.flatnonzero(self.mul[x] == self.one)
        return int(hit[0]) if len(hit) else None

    def nilpotent_mask(self) -> np.ndarray:
        sq = self.mul[np.arange(self.size), np.arange(self.size)]
        x = np.arange(self.size)
        for _ in range(math.ceil(math.log2(self.size)) + 1):
            x = sq[x]
        return x == 0

    def nilpotents(self) -> np.ndarray:
        return np.flatnonzero(self.nilpotent_mask())

    def idempotents(self) -> np.ndarray:
        ar = np.arange(self.size)
        return np.flatnonzero(self.mul[ar, ar] == ar)

    def sub_one(self, x):
        return self.add[x, self.neg_one]

    def classify(self, x: int) -> str:
        if self.unit_mask()[x]:
            return "unit"
        if self.nilpotent_mask()[x]:
            return "nilpotent"
        return "neither"

    # decisions -------------------------------------------------------------
    def _check_size(self, max_size):
        if self.size > max_size:
            raise BudgetExceeded(f"{self.name} has {self.size} elements", size=self.size)

    def decide_ua(self, max_size: int = DEFAULT_MAX_SIZE) -> bool:
        """Every sum of two units is a unit or nilpotent (all pairs)."""
        self._check_size(max_size)
        units = self.units()
        good = self.unit_mask() | self.nilpotent_mask()
        sums = self.add[np.ix_(units, units)]
        return bool(good[sums].all())

    def decide_ua_via_plus_one(self, max_size: int = DEFAULT_MAX_SIZE) -> bool:
        """For every unit u, u + 1 is a unit or nilpotent."""
        self._check_size(max_size)
        good = self.unit_mask() | self.nilpotent_mask()
        return bool(good[self.add[self.units(), self.one]].all())

    def decide_uu(self, max_size: int = DEFAULT_MAX_SIZE) -> bool:
        """For every unit u, u - 1 is nilpotent."""
        self._check_size(max_size)
        return bool(self.nilpotent_mask()[self.sub_one(self.units())].all())

    def primitive_idempotents(self) -> list:
        idem = [int(e) for e in self.idempotents() if e != 0]
        prim = []
        for e in idem:
            below = [f for f in idem if f != e and self.mul[f, e] == f]
            if not below:
                prim.append(e)
        return prim

    def factor_ring(self, e: int) -> FiniteRing:
        """The ring eR with identity e."""
        elems = np.unique(self.mul[e])
        index = {int(x): i for i, x in enumerate(elems)}
        remap = np.vectorize(lambda x: index[int(x)])
        add = remap(self.add[np.ix_(elems, elems)])
        mul = remap(self.mul[np.ix_(elems, elems)])
        # put zero first
        order = np.argsort(elems != 0, kind="stable")
        inv = np.empty_like(order)
        inv[order] = np.arange(len(order))
        add = inv[add[np.ix_(order, order)]]
        mul = inv[mul[np.ix_(order, order)]]
        return FiniteRing(f"{self.name}*e{e}", add, mul)

    def decide_locally_ua(self, max_size: int = DEFAULT_MAX_SIZE) -> bool:
        """Split along all primitive idempotents and check each factor for UA."""
        self._check_size(max_size)
        return all(self.factor_ring(e).decide_ua(max_size) for e in self.primitive_idempotents())

    def component_count(self) -> int:
        return len(self.primitive_idempotents())

    def check_axioms(self, sample: int | None = None, seed: int = 0) -> bool:
        """Ring axioms on all triples (or a seeded sample of them)."""
        n = self.size
        rng = np.random.default_rng(seed)
        if sample is None and n <= 64:
            a, b, c = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
            a, b, c = a.ravel(), b.ravel(), c.ravel()
        else:
            k = sample or 20000
            a, b, c = rng.integers(0, n, k), rng.integers(0, n, k), rng.integers(0, n, k)
        A, M = self.add, self.mul
        return bool(
            (A[A[a, b], c] == A[a, A[b, c]]).all()
            and (M[M[a, b], c] == M[a, M[b, c]]).all()
            and (M[a, A[b, c]] == A[M[a, b], M[a, c]]).all()
            and (A[a, b] == A[b, a]).all()
            and (M[a, b] == M[b, a]).all()
        )

    def __repr__(self):
        return f"FiniteRing({self.name}, size={self.size})"


def _poly_text(coeffs) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return "+".join(terms) or "0"


# -- roster strings -----------------------------------------------------------


def parse_ring(text: str) -> FiniteRing:
    text = text.strip()
    m = re.fullmatch(r"Zmod\(\s*(\d+)\s*\)", text)
    if m:
        return FiniteRing.mod_n(int(m.group(1)))
    m = re.fullmatch(r"GFpoly\(\s*(\d+)\s*,(.*)\)", text, re.S)
    if m:
        from .fields import GF
        from .poly import PolyRing

        p = int(m.group(1))
        f = PolyRing(GF(p), ("x",)).parse(m.group(2))
        d = int(f.total_degree())
        coeffs = [0] * (d + 1)
        for (e,), c in f.items():
            coeffs[e] = int(c)
        return FiniteRing.gf_poly(p, coeffs)
    m = re.fullmatch(r"prod\((.*)\)", text, re.S)
    if m:
        return FiniteRing.product([parse_ring(part) for part in _split_args(m.group(1))])
    raise ParseError(f"unrecognized ring {text!r}")


def _split_args(text: str):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    parts.append("".join(cur))
    return [p for p in parts if p.strip()]


def monic_polynomials(p: int, degree: int):
    """All monic coefficient lists (low to high) of the given degree over F_p."""
    import itertools

    for tail in itertools.product(range(p), repeat=degree):
        yield list(tail) + [1]


def roster(max_size: int = 32):
    """Rings used by the product-rule checks: Zmod(n) and F_p[x]/(f)."""
    out = [FiniteRing.mod_n(n) for n in range(2, max_size + 1)]
    for p in (2, 3, 5):
        for d in (1, 2, 3):
            if p**d > max_size:
                continue
            out.extend(FiniteRing.gf_poly(p, f) for f in monic_polynomials(p, d))
    return out


# -- bridge to the Groebner side ---------------------------------------------


def quotient_ring(I):
    """FiniteRing for k[X]/I over a finite field, with the element map.

    Returns ``(ring, elements)`` where ``elements[i]`` is the
    :class:`~uat.quotient.QuotientElement` of oracle index ``i``.
    """
    from .ideals import is_zero_dimensional, quotient_basis
    from .points import flatten
    from .quotient import element

    ring = I.ring
    F = ring.field
    if not F.is_finite:
        raise ValueError("the oracle needs a finite coefficient field")
    if not is_zero_dimensional(I) or I.is_unit_ideal:
        raise ValueError("the oracle needs a nonzero finite quotient")
    p = F.characteristic
    stair = quotient_basis(I)
    kdeg = F.absolute_degree
    field_basis = [_unflatten(F, [1 if t == r else 0 for t in range(kdeg)]) for r in range(kdeg)]
    basis = [ring.from_coefficients({m: c}) for m in stair for c in field_basis]
    index = {m: i for i, m in enumerate(stair)}
    D = len(basis)

    def coords(f):
        v = [0] * D
        for e, c in I.reduce(f).items():
            flat = flatten(F, c)
            for r, x in enumerate(flat):
                v[index[e] * kdeg + r] = int(x) % p
        return v

    C = np.array([[coords(basis[r] * basis[s]) for s in range(D)] for r in range(D)], dtype=np.int64)
    R = FiniteRing.from_structure(p, C, f"{F.spec}[{','.join(ring.variables)}]/{I.basis_text()}")
    weights = [p**t for t in range(D)]
    elements = []
    for idx in range(R.size):
        v = [(idx // w) % p for w in weights]
        f = ring.zero()
        for coef, b in zip(v, basis):
            if coef:
                f = f + b.scalar_mul(F.from_int(coef))
        elements.append(element(I, f))
    return R, elements


def _unflatten(F, vec):
    if F.parent is None:
        return F.from_int(vec[0])
    P = F.parent
    step = P.absolute_degree
    return tuple(_unflatten(P, vec[i * step:(i + 1) * step]) for i in range(F.degree))


@dataclass
class CrossCheckReport:
    ring: str
    size: int
    agree: bool
    mismatches: list
    ua_groebner: str
    ua_oracle: bool
    counts: dict

    def to_json(self) -> dict:
        return {
            "ring": self.ring,
            "size": self.size,
            "agree": self.agree,
            "mismatches": self.mismatches,
            "ua_groebner": self.ua_groebner,
            "ua_oracle": self.ua_oracle,
            "counts": self.counts,
        }


def cross_check(I, reference: FiniteRing | None = None) -> CrossCheckReport:
    """Compare Groebner-side classification with the oracle element by element."""
    from .quotient import classify
    from .unit_additivity import UA, zero_dim_ua_decide

    R, elements = quotient_ring(I)
    mismatches = []
    units, nils = R.unit_mask(), R.nilpotent_mask()
    for i, u in enumerate(elements):
        expect = "unit" if units[i] else ("nilpotent" if nils[i] else "neither")
        got = classify(u)
        if got.verdict != expect:
            mismatches.append({"element": str(u), "groebner": got.verdict, "oracle": expect})
        elif expect == "unit":
            j = R.inverse(i)
            if elements[j] != got.inverse:
                mismatches.append({"element": str(u), "inverse_groebner": str(got.inverse), "inverse_oracle": str(elements[j])})
    verdict = zero_dim_ua_decide(I)
    ua_oracle = R.decide_ua()
    if (verdict.status == UA) != ua_oracle:
        mismatches.append({"decision": "unit_additive", "groebner": verdict.status, "oracle": ua_oracle})
    counts = {"units": int(units.sum()), "nilpotents": int(nils.sum()), "idempotents": len(R.idempotents())}
    if reference is not None:
        if reference.size != R.size:
            raise InternalInconsistency(f"size mismatch: {R.size} versus reference {reference.size}")
        ref = {
            "units": len(reference.units()),
            "nilpotents": len(reference.nilpotents()),
            "idempotents": len(reference.idempotents()),
        }
        if ref != counts:
            mismatches.append({"reference_counts": ref, "counts": counts})
        if reference.decide_ua() != ua_oracle:
            mismatches.append({"reference_ua": reference.decide_ua(), "oracle": ua_oracle})
    return CrossCheckReport(R.name, R.size, not mismatches, mismatches, verdict.status, ua_oracle, counts)

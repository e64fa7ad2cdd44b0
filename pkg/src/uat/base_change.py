"""Scalar extension by simple field extensions, geometric unit-additivity
probes, and checks that units are constant modulo nilpotents.

R tensor L for L = k[a]/(m(a)) is presented by the same generators read over
the larger tower, so probing a list of finite extensions amounts to running
the UA refuter once per tower.  A witness in any extension shows that R is
not geometrically unit-additive; exhaustion everywhere is only evidence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import InapplicableOperation, MalformedExtension
from .fields import FieldElement, FieldTower
from .ideals import Budget, Ideal
from .poly import PolyRing
from .quotient import QuotientElement, is_constant_mod, is_nilpotent, is_unit, pth_power_constant
from .search import CoefficientPool, parse_pool
from .unit_additivity import ua_refute

DEFAULT_NAMES = ("a", "b", "c", "d", "e", "g", "h")
_NAMED = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+)\Z", re.S)


def _minpoly_coeffs(F: FieldTower, minpoly):
    """Coefficient list (low first) from a list or a string in ``t``."""
    if not isinstance(minpoly, str):
        return list(minpoly)
    ring = PolyRing(F, ("t",))
    f = ring.parse(minpoly)
    if f.is_zero():
        raise MalformedExtension("extension polynomial must be nonzero")
    deg = int(f.total_degree())
    coeffs = [F.zero] * (deg + 1)
    for (e,), c in f.items():
        coeffs[e] = c
    return coeffs


def parse_extension_list(text: str):
    """``"t^2+1;t^3-2"`` or ``"i=t^2+1; r=t^3-2"`` into (name or None, poly) pairs."""
    out = []
    for part in text.split(";"):
        if not part.strip():
            continue
        m = _NAMED.match(part)
        out.append((m.group(1), m.group(2).strip()) if m else (None, part.strip()))
    return out


def _fresh_generator(ring: PolyRing, name: str | None) -> str:
    taken = set(ring.variables) | set(ring.field.generator_names)
    if name is not None:
        if name in taken:
            raise MalformedExtension(f"generator name {name!r} is already in use")
        return name
    for cand in DEFAULT_NAMES:
        if cand not in taken:
            return cand
    k = 1
    while f"a{k}" in taken:
        k += 1
    return f"a{k}"


def extend_scalars(I: Ideal, minpoly, name: str | None = None) -> Ideal:
    """The same generators over ``k[name]/(minpoly)``."""
    ring = I.ring
    gen = _fresh_generator(ring, name)
    L = ring.field.extend(gen, _minpoly_coeffs(ring.field, minpoly))
    big = ring.with_field(L)
    return Ideal(big, [g.to_ring(big) for g in I.generators], I.budget)


def same_leading_monomials(I: Ideal, J: Ideal) -> bool:
    """Whether two reduced bases share their leading monomials (variables
    matched by name)."""
    if I.ring.variables != J.ring.variables:
        return False
    return sorted(I.leading_monomials()) == sorted(J.leading_monomials())


def _generator_powers(L: FieldTower):
    """``+-a^j`` for 1 <= j < deg, a the newest generator."""
    a = L.embed(L.generator_raw, L)
    out, power = [], L.one
    for _ in range(1, L.degree):
        power = L.mul(power, a)
        out.extend([power, L.neg(power)])
    return out


@dataclass
class ExtensionProbe:
    extension_polys: list
    per_extension: list = field(default_factory=list)  # (tower, ideal, WitnessReport)

    @property
    def found(self) -> bool:
        return any(rep.found for _, _, rep in self.per_extension)

    @property
    def witness(self):
        for _, _, rep in self.per_extension:
            if rep.found:
                return rep.witness
        return None

    @property
    def status(self) -> str:
        if self.found:
            return "not_geometrically_unit_additive"
        return "no_witness_found"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "extensions": [
                {"field": T.spec, "ideal": J.basis_text(), "report": rep.to_json()} for T, J, rep in self.per_extension
            ],
            "note": "a witness in any extension is a proof; exhaustion is consistency evidence only",
        }


def geometric_ua_refute(I: Ideal, extension_polys, degree_bound: int = 1, coeff_pool=None, *,
                        budget: Budget | None = None, max_checks: int = 200_000, prefilter: bool = True,
                        backend: str | None = None, seed: int = 0) -> ExtensionProbe:
    """Run the UA refuter over each listed extension.

    ``extension_polys`` holds polynomials in ``t`` (strings or coefficient
    lists) or ``(name, poly)`` pairs.  The pool is the requested pool read
    over the extension, enlarged by the powers of the new generator.
    """
    probe = ExtensionProbe([])
    for item in extension_polys:
        name, poly = item if isinstance(item, tuple) else (None, item)
        probe.extension_polys.append(poly if isinstance(poly, str) else str(poly))
        J = extend_scalars(I, poly, name)
        L = J.ring.field
        base_spec = coeff_pool.description if isinstance(coeff_pool, CoefficientPool) else coeff_pool
        if base_spec in (None, "default"):
            base_spec = "all" if L.is_finite else "small"
        pool = parse_pool(base_spec, L).enlarged(_generator_powers(L), f"+-{L.name}^j")
        report = ua_refute(J, degree_bound, pool, budget=budget, max_checks=max_checks, prefilter=prefilter,
                           backend=backend, seed=seed)
        probe.per_extension.append((L, J, report))
    return probe


# -- units modulo nilpotents ----------------------------------------------


@dataclass
class ConstancyVerdict:
    status: str  # yes / no_for_all_candidates / not_within_bound / unknown
    constant: FieldElement | None = None
    source: str = ""
    exponent: int | None = None
    tried: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"status": self.status, "source": self.source}
        if self.constant is not None:
            out["constant"] = str(self.constant)
        if self.exponent is not None:
            out["exponent"] = self.exponent
        if self.tried:
            out["tried"] = list(self.tried)
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _require_unit(u: QuotientElement, budget=None):
    ok, _ = is_unit(u, budget)
    if not ok:
        raise ValueError(f"{u} is not a unit")


def units_in_L_mod_nilpotents_check(u: QuotientElement, rational_point=None, coeff_pool=None,
                                    budget: Budget | None = None) -> ConstancyVerdict:
    """Look for a constant c with u - c nilpotent.

    A supplied point of V gives the only possible candidate c = u(point),
    since nilpotents vanish at points; the pool is swept afterwards.
    """
    _require_unit(u, budget)
    I = u.ideal
    ring = I.ring
    F = ring.field
    c = is_constant_mod(u)
    if c is not None:
        return ConstancyVerdict("yes", c, "normal form")
    tried, notes = [], []
    conclusive = False
    if rational_point is not None:
        pt = [F(x) if not isinstance(x, FieldElement) else x for x in rational_point]
        if not all(g.evaluate(pt).is_zero() for g in I.basis):
            raise ValueError("the supplied point does not lie on V")
        cval = u.rep.evaluate(pt)
        tried.append(f"{cval} (point)")
        if is_nilpotent(u - ring.constant(cval.raw), budget)[0]:
            return ConstancyVerdict("yes", F.element(cval.raw), "rational point", tried=tried)
        conclusive = True
        notes.append("the value at a point of V is the only possible constant, so no constant works")
    pool = coeff_pool if isinstance(coeff_pool, CoefficientPool) else parse_pool(coeff_pool, F)
    for raw in pool.nonzero:
        tried.append(F.format(raw))
        if is_nilpotent(u - ring.constant(raw), budget)[0]:
            return ConstancyVerdict("yes", F.element(raw), "pool", tried=tried)
    if not conclusive:
        notes.append("only the pool was searched")
    return ConstancyVerdict("no_for_all_candidates", source="pool", tried=tried, notes=notes)


def purely_inseparable_unit_check(u: QuotientElement, e_max: int = 4, budget: Budget | None = None) -> ConstancyVerdict:
    """Is u^(p^e) a constant for some e <= e_max?"""
    if u.ring.field.characteristic == 0:
        raise InapplicableOperation("purely inseparable checks need positive characteristic")
    _require_unit(u, budget)
    res = pth_power_constant(u, e_max)
    if res is None:
        return ConstancyVerdict("not_within_bound", source="frobenius", notes=[f"e_max = {e_max}"])
    e, c = res
    return ConstancyVerdict("yes", c, "frobenius", exponent=e)

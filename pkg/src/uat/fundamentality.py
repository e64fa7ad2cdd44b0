"""Fundamentality of affine algebraic sets.

V is fundamental when every polynomial that is not constant on V vanishes
somewhere on the closure of V over the algebraic closure; locally
fundamental weakens "not constant" to "not locally constant".  Working with
an ideal I that the caller asserts is I(V):

* "f vanishes nowhere on the closure" is decided exactly as ``1 in I + (f)``
  (the weak Nullstellensatz, after a field-independent Groebner computation);
* "f constant on V" is read as "the normal form of f mod I is a constant".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import HypothesisViolation, NotZeroDimensional, WitnessRejected
from .fields import FieldElement, FieldTower
from .ideals import Budget, Ideal, intersect, is_zero_dimensional
from .poly import PolyRing, evaluate_raw
from .quotient import element, is_constant_mod, is_unit
from .spectrum import DecompositionCertificate, zero_dim_components, zero_dim_radical
from .unit_additivity import (
    LOCALLY_UA, NOT_LOCALLY_UA, NOT_UA, UA, UAVerdict, WitnessReport, _run_search, locally_ua_from_decomposition,
    structural_verdict, zero_dim_ua_decide,
)

ASSUMPTION = "the ideal is treated as the full vanishing ideal I(V); constancy on V is read as constancy mod I"

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass
class Decision:
    value: str
    route: str = ""
    witness: str | None = None
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"value": self.value, "route": self.route}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.evidence:
            out["evidence"] = self.evidence
        return out


@dataclass
class FundamentalityVerdict:
    fundamental: Decision
    locally_fundamental: Decision
    bridge_notes: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)
    search: WitnessReport | None = None

    def to_json(self) -> dict:
        out = {
            "fundamental": self.fundamental.to_json(),
            "locally_fundamental": self.locally_fundamental.to_json(),
        }
        if self.bridge_notes:
            out["bridge_notes"] = list(self.bridge_notes)
        if self.assumptions:
            out["assumptions"] = list(self.assumptions)
        if self.search is not None:
            out["search"] = self.search.to_json()
        return out


@dataclass
class PointSet:
    """Finitely many distinct points of k^n, stored as raw coordinates."""

    field: FieldTower
    points: list
    variables: tuple = ()

    def __post_init__(self):
        pts = [tuple(_coerce(self.field, c) for c in p) for p in self.points]
        if pts and len({len(p) for p in pts}) != 1:
            raise ValueError("points have different numbers of coordinates")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        self.points = pts
        n = len(pts[0]) if pts else len(self.variables)
        if not self.variables:
            self.variables = default_variables(n)
        if len(self.variables) != n:
            raise ValueError("variable count does not match the points")

    @property
    def dimension(self) -> int:
        return len(self.variables)

    @property
    def ring(self) -> PolyRing:
        return PolyRing(self.field, self.variables)

    def formatted(self):
        return [tuple(self.field.format(c) for c in p) for p in self.points]


def _coerce(F: FieldTower, c):
    if isinstance(c, (FieldElement, int, Fraction, str)):
        return F(c).raw
    return c  # already a raw value of F


def default_variables(n: int):
    if n <= 3:
        return ("X", "Y", "Z")[:n]
    return tuple(f"X{i}" for i in range(1, n + 1))


def vanishing_ideal(V: PointSet) -> Ideal:
    """I(V) as the intersection of the maximal ideals of the points."""
    ring = V.ring
    if not V.points:
        return Ideal(ring, [ring.one()])
    result = None
    for p in V.points:
        m = Ideal(ring, [ring.var(x) - ring.constant(c) for x, c in zip(V.variables, p)])
        result = m if result is None else intersect(result, m)
    return result


def nonvanishing_on_closure(f, I: Ideal, budget: Budget | None = None) -> bool:
    """True iff f has no zero on the closure of V, i.e. 1 in I + (f)."""
    f = I.ring.coerce(f)
    return is_unit(element(I, f), budget)[0]


def verify_fundamental_witness(u, pool_values=(), budget: Budget | None = None) -> dict:
    I = u.ideal
    if is_constant_mod(u) is not None:
        raise WitnessRejected(f"claimed witness {u} is constant mod I")
    for c in pool_values:
        if I.contains(u.rep - I.ring.constant(c)):
            raise WitnessRejected(f"claimed witness {u} is congruent to a constant")
    if not nonvanishing_on_closure(u.rep, I, budget):
        raise WitnessRejected(f"claimed witness {u} vanishes on the closure")
    return {"nonconstant_mod_I": True, "unit_ideal_with_f": True, "normal_form": str(u.rep)}


def fundamental_refute(I: Ideal, degree_bound: int = 1, coeff_pool=None, *, budget: Budget | None = None,
                       max_checks: int = 200_000, prefilter: bool = True, backend: str | None = None,
                       seed: int = 0) -> FundamentalityVerdict:
    """Search for f that is nonconstant mod I and vanishes nowhere on the closure."""

    def test(u):
        return not u.rep.is_constant()

    def verify(u, budget):
        return verify_fundamental_witness(u, report_pool, budget)

    from .unit_additivity import _pool

    report_pool = _pool(I, coeff_pool).values
    report = _run_search("fundamental", I, degree_bound, _pool(I, coeff_pool), test, verify, budget=budget,
                         max_checks=max_checks, prefilter=prefilter, backend=backend, seed=seed)
    if report.found:
        fund = Decision(NO, "nonconstant function without zeros", witness=str(report.witness), evidence=report.evidence)
    else:
        fund = Decision(UNKNOWN, f"search {report.outcome}", evidence={"note": "no witness within the bound"})
    return FundamentalityVerdict(fund, Decision(UNKNOWN, "not examined"), assumptions=[ASSUMPTION], search=report)


def _indicator(V: PointSet, ring: PolyRing, j: int):
    """Polynomial equal to 1 at point j and 0 at the other points, built from
    one separating coordinate per other point."""
    F = V.field
    p = V.points[j]
    f = ring.one()
    for k, q in enumerate(V.points):
        if k == j:
            continue
        i = next(i for i in range(len(p)) if p[i] != q[i])
        scale = F.inv(F.sub(p[i], q[i]))
        f = f * (ring.var(V.variables[i]) - ring.constant(q[i])).scalar_mul(scale)
    return f


def _other_value(F: FieldTower):
    """An element outside {0, 1}, or None for the two-element field."""
    if F.is_finite and F.size == 2:
        return None
    if F.characteristic != 2:
        return F.from_int(2)
    return F.embed(F.levels[1].generator_raw, F.levels[1])


def _oracle_check(V: PointSet):
    """Exhaustive check over a finite prime field: every nowhere-zero
    function V -> k is constant iff fundamental."""
    from .oracle import FiniteRing

    F = V.field
    if not (F.is_finite and F.parent is None) or not V.points:
        return None
    R = FiniteRing.product([FiniteRing.mod_n(F.characteristic)] * len(V.points))
    if R.size > 4096:
        return None
    units = R.units()
    consts = {R.constant(c) for c in range(1, F.characteristic)}
    return {"ring": R.name, "units": len(units), "all_units_constant": set(units) <= consts}


def finite_set_decide(V: PointSet) -> FundamentalityVerdict:
    """Exact decision for a finite set of k-points."""
    ring = V.ring
    F = V.field
    if not V.points:
        d = Decision(YES, "empty set (vacuous)")
        return FundamentalityVerdict(d, Decision(YES, "empty set (vacuous)"), bridge_notes=["empty point set"])
    local = Decision(YES, "a finite set is discrete, so every function on it is locally constant")
    oracle = _oracle_check(V)
    if len(V.points) == 1:
        fund = Decision(YES, "single point: every function is constant")
    else:
        c = _other_value(F)
        if c is None:
            fund = Decision(YES, "the only nowhere-zero value is 1, so nowhere-zero functions are constant")
        else:
            f = ring.one() + _indicator(V, ring, 0).scalar_mul(F.sub(c, F.one))
            values = [evaluate_raw(f, F, p) for p in V.points]
            if any(F.is_zero(v) for v in values) or len(set(values)) < 2:
                raise AssertionError("interpolated witness failed its own check")
            fund = Decision(NO, "interpolated function with two distinct nonzero values", witness=str(f),
                            evidence={"values": [F.format(v) for v in values]})
    if oracle is not None:
        fund.evidence["oracle"] = oracle
        if oracle["all_units_constant"] != (fund.value == YES):
            raise AssertionError("finite-ring oracle disagrees with the direct decision")
    return FundamentalityVerdict(fund, local)


def bridge_report(I: Ideal, ua: UAVerdict) -> FundamentalityVerdict:
    """Translate a UA verdict for k[X]/I(V) into fundamentality of V (k infinite)."""
    if I.ring.field.is_finite:
        raise HypothesisViolation("the correspondence with unit-additivity needs an infinite field")
    notes = [f"from unit-additivity verdict {ua.status} ({ua.route})"]
    ev = {"ua": ua.status}
    if ua.status == UA:
        fund = Decision(YES, "coordinate ring is unit-additive", evidence=ev)
        local = Decision(YES, "unit-additive implies locally unit-additive", evidence=ev)
    elif ua.status == NOT_UA:
        w = str(ua.witness) if ua.witness is not None else None
        fund = Decision(NO, "coordinate ring is not unit-additive", witness=w, evidence=ev)
        local = Decision(UNKNOWN, "not determined by this verdict")
    elif ua.status == LOCALLY_UA:
        fund = Decision(UNKNOWN, "not determined by this verdict")
        local = Decision(YES, "coordinate ring is locally unit-additive", evidence=ev)
    elif ua.status == NOT_LOCALLY_UA:
        fund = Decision(NO, "not locally unit-additive, hence not unit-additive", evidence=ev)
        local = Decision(NO, "coordinate ring is not locally unit-additive", evidence=ev)
    else:
        fund = Decision(UNKNOWN, "unit-additivity unknown")
        local = Decision(UNKNOWN, "unit-additivity unknown")
    return FundamentalityVerdict(fund, local, bridge_notes=notes, assumptions=[ASSUMPTION])


def locally_constant_mod(f, cert: DecompositionCertificate) -> bool:
    """True iff f is constant modulo every component of the certificate."""
    cert.require_verified()
    f = cert.ring.coerce(f)
    return all(comp.reduce(f).is_constant() for comp in cert.components)


def zero_dim_fundamental(I: Ideal, budget: Budget | None = None, oracle_limit: int = 4096) -> FundamentalityVerdict:
    """Exact answer for a zero-dimensional I(V).

    Over an infinite field both properties follow from the unit-additivity
    verdicts of k[X]/I and of its components.  Over a finite field the
    quotient is enumerated (up to ``oracle_limit`` elements) and every unit
    is tested for being constant, or constant on each component.
    """
    if not is_zero_dimensional(I):
        raise NotZeroDimensional("zero_dim_fundamental needs a zero-dimensional ideal")
    F = I.ring.field
    if I.is_unit_ideal:
        d = Decision(YES, "empty set (vacuous)")
        return FundamentalityVerdict(d, Decision(YES, "empty set (vacuous)"), assumptions=[ASSUMPTION])
    v = _zero_dim_fundamental(I, F, budget, oracle_limit)
    if zero_dim_radical(I) != I:
        v.bridge_notes.append("the ideal is not radical, so it is not I(V) for any V; the answers describe k[X]/I")
    return v


def _zero_dim_fundamental(I, F, budget, oracle_limit):
    if not F.is_finite:
        ua = zero_dim_ua_decide(I, budget)
        v = bridge_report(I, ua)
        if ua.certificate is not None:
            cert = ua.certificate
            loc = locally_ua_from_decomposition(cert, [structural_verdict(c, budget) for c in cert.components])
            if loc.status in (UA, LOCALLY_UA):
                v.locally_fundamental = Decision(YES, "every component is local, hence unit-additive",
                                                 evidence={"components": len(cert.components)})
        return v
    from .oracle import quotient_ring

    size = F.size ** len(_staircase(I))
    if size > oracle_limit:
        unknown = Decision(UNKNOWN, f"finite quotient has {size} elements, above the enumeration limit")
        return FundamentalityVerdict(unknown, Decision(UNKNOWN, unknown.route), assumptions=[ASSUMPTION])
    R, elements = quotient_ring(I)
    units = [elements[int(i)] for i in R.units()]
    cert = zero_dim_components(I, budget)
    ev = {"oracle": R.name, "units": len(units)}
    bad = next((u for u in units if is_constant_mod(u) is None), None)
    if bad is None:
        fund = Decision(YES, "every unit of the finite quotient is constant", evidence=ev)
    else:
        fund = Decision(NO, "nonconstant unit of the finite quotient", witness=str(bad),
                        evidence={**ev, **verify_fundamental_witness(bad, budget=budget)})
    bad_local = next((u for u in units if not locally_constant_mod(u.rep, cert)), None)
    if bad_local is None:
        local = Decision(YES, "every unit is constant on each component", evidence={"components": len(cert.components)})
    else:
        local = Decision(NO, "unit that is not constant on some component", witness=str(bad_local))
    return FundamentalityVerdict(fund, local, assumptions=[ASSUMPTION])


def _staircase(I: Ideal):
    from .ideals import quotient_basis

    return quotient_basis(I)

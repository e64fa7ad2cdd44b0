"""Deciding and refuting unit-additivity (UA) and the UU property.

A ring is unit-additive when a sum of two units is always a unit or
nilpotent; equivalently, ``u + 1`` is a unit or nilpotent for every unit
``u``.  It is UU when ``u - 1`` is nilpotent for every unit ``u``.

Refuters search bounded candidates; a witness proves the negative, while an
exhausted search is reported as consistency evidence only.  Positive
verdicts come from structural rules (local Artinian rings, polynomial rings,
products of UU rings, minimal-prime inference), each tagged with its route.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceeded, NotZeroDimensional, UATError, WitnessRejected
from .ideals import Budget, Ideal, _extended_ring, is_zero_dimensional, quotient_basis, radical_member, rabinowitsch_basis
from .poly import MultiPoly
from .quotient import QuotientElement, classify, element, is_nilpotent, is_unit
from .search import CandidateSearch, CoefficientPool, parse_pool
from .spectrum import DecompositionCertificate, verify_minimal_primes, zero_dim_components, zero_dim_radical

UA = "unit_additive"
NOT_UA = "not_unit_additive"
LOCALLY_UA = "locally_unit_additive"
NOT_LOCALLY_UA = "not_locally_unit_additive"
UNKNOWN = "unknown"

UU = "uu"
NOT_UU = "not_uu"


# -- reports ------------------------------------------------------------------


@dataclass
class WitnessReport:
    """Outcome of a bounded search: ``witness``, ``exhausted`` or ``aborted``."""

    kind: str
    outcome: str
    search: dict
    witness: QuotientElement | None = None
    evidence: dict = field(default_factory=dict)
    tried: int = 0
    exact_checks: int = 0
    units_found: int = 0
    unit_samples: list = field(default_factory=list)
    diagnostics: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.outcome == "witness"

    @property
    def only_constant_units(self) -> bool:
        return all(u.rep.is_constant() for u in self.unit_samples)

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "outcome": self.outcome,
            "search": self.search,
            "tried": self.tried,
            "exact_checks": self.exact_checks,
            "units_found": self.units_found,
            "unit_samples": [str(u) for u in self.unit_samples],
        }
        if self.witness is not None:
            out["witness"] = str(self.witness)
        if self.evidence:
            out["evidence"] = self.evidence
        if self.diagnostics:
            out["diagnostics"] = self.diagnostics
        if self.outcome == "exhausted":
            out["note"] = "exhaustion within the bound is consistency evidence, not a proof"
        return out


@dataclass
class UAVerdict:
    status: str
    route: str
    witness: QuotientElement | None = None
    evidence: dict = field(default_factory=dict)
    certificate: DecompositionCertificate | None = None
    components: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def decided(self) -> bool:
        return self.status != UNKNOWN

    def to_json(self) -> dict:
        out = {"status": self.status, "route": self.route}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        if self.evidence:
            out["evidence"] = self.evidence
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.components:
            out["components"] = [c.to_json() for c in self.components]
        if self.notes:
            out["notes"] = list(self.notes)
        return out


# -- searches -------------------------------------------------------------


def _pool(I: Ideal, coeff_pool) -> CoefficientPool:
    if isinstance(coeff_pool, CoefficientPool):
        return coeff_pool
    return parse_pool(coeff_pool, I.ring.field)


def verify_ua_witness(u: QuotientElement, budget: Budget | None = None) -> dict:
    """Independently re-check that u is a unit and u + 1 is neither a unit
    nor nilpotent; return the evidence or raise."""
    ok, inv = is_unit(u, budget)
    if not ok:
        raise WitnessRejected(f"claimed witness {u} is not a unit")
    cls = classify(u + 1, budget)
    if cls.verdict != "neither":
        raise WitnessRejected(f"claimed witness {u}: u + 1 is {cls.verdict}")
    return {"inverse": str(inv), "successor": cls.to_json()}


def verify_uu_witness(u: QuotientElement, budget: Budget | None = None) -> dict:
    ok, inv = is_unit(u, budget)
    if not ok:
        raise WitnessRejected(f"claimed witness {u} is not a unit")
    nil, _ = is_nilpotent(u - 1, budget)
    if nil:
        raise WitnessRejected(f"claimed witness {u}: u - 1 is nilpotent")
    return {
        "inverse": str(inv),
        "predecessor": str(u - 1),
        "non_nilpotent_basis": [str(g) for g in rabinowitsch_basis((u - 1).rep, u.ideal, budget)],
    }


def _run_search(kind, I, degree_bound, coeff_pool, test, verify, *, budget, max_checks, prefilter, backend, seed):
    pool = _pool(I, coeff_pool)
    if I.is_unit_ideal:
        return WitnessReport(kind, "exhausted", {"degree_bound": degree_bound, "coefficient_pool": pool.description},
                             diagnostics={"note": "the ideal is the unit ideal (zero ring); vacuous"})
    search = CandidateSearch(I, degree_bound, pool, prefilter=prefilter, backend=backend, seed=seed)
    report = WitnessReport(kind, "exhausted", search.describe())
    unknown = 0
    for _, f in search:
        report.tried = search.enumerated
        if report.exact_checks >= max_checks:
            report.outcome = "aborted"
            report.diagnostics = {"reason": "exact-check budget exhausted", "max_checks": max_checks}
            return report
        report.exact_checks += 1
        u = element(I, f)
        try:
            ok, _ = is_unit(u, budget)
            if not ok:
                continue
            report.units_found += 1
            if len(report.unit_samples) < 20:
                report.unit_samples.append(u)
            if test(u):
                report.witness = u
                report.evidence = verify(u, budget)
                report.outcome = "witness"
                return report
        except BudgetExceeded as exc:
            unknown += 1
            report.diagnostics.setdefault("undecided", []).append({"candidate": str(f), "reason": str(exc)})
    report.tried = search.total
    if unknown:
        report.outcome = "aborted"
        report.diagnostics["reason"] = f"{unknown} candidates exceeded the Groebner budget"
    return report


def ua_refute(I: Ideal, degree_bound: int = 1, coeff_pool=None, *, budget: Budget | None = None,
              max_checks: int = 200_000, prefilter: bool = True, backend: str | None = None,
              seed: int = 0) -> WitnessReport:
    """Search for a unit u with u + 1 neither a unit nor nilpotent."""

    def test(u):
        return classify(u + 1, budget).verdict == "neither"

    return _run_search("ua", I, degree_bound, coeff_pool, test, verify_ua_witness, budget=budget,
                       max_checks=max_checks, prefilter=prefilter, backend=backend, seed=seed)


def uu_refute(I: Ideal, degree_bound: int = 1, coeff_pool=None, *, budget: Budget | None = None,
              max_checks: int = 200_000, prefilter: bool = True, backend: str | None = None,
              seed: int = 0) -> WitnessReport:
    """Search for a unit u with u - 1 not nilpotent."""

    def test(u):
        return not is_nilpotent(u - 1, budget)[0]

    return _run_search("uu", I, degree_bound, coeff_pool, test, verify_uu_witness, budget=budget,
                       max_checks=max_checks, prefilter=prefilter, backend=backend, seed=seed)


# -- structural rules ---------------------------------------------------------


def polynomial_ring_variables(I: Ideal):
    """If k[X]/I is visibly a polynomial ring, return its free variables.

    That is the case when every element of the reduced basis has a single
    variable to the first power as leading monomial: each such variable is
    then a polynomial in the remaining (free) variables.
    """
    if I.is_unit_ideal:
        return None
    bound = set()
    for m in I.leading_monomials():
        nz = [i for i, k in enumerate(m) if k]
        if len(nz) != 1 or m[nz[0]] != 1:
            return None
        bound.add(nz[0])
    return [v for i, v in enumerate(I.ring.variables) if i not in bound]


def _is_f2(F) -> bool:
    return F.is_finite and F.size == 2


def axiom_class_verdict(I: Ideal) -> UAVerdict | None:
    """Polynomial rings over a field are unit-additive (units are constants)."""
    free = polynomial_ring_variables(I)
    if free is None:
        return None
    F = I.ring.field
    what = f"{F.spec}[{', '.join(free)}]" if free else F.spec
    return UAVerdict(UA, "polynomial ring over a field", evidence={"isomorphic_to": what, "uu": _is_f2(F)})


def uu_verdict(I: Ideal, budget: Budget | None = None) -> UAVerdict:
    """Decide UU where a structural rule applies; otherwise unknown."""
    F = I.ring.field
    if I.is_unit_ideal:
        return UAVerdict(UU, "zero ring")
    if polynomial_ring_variables(I) is not None:
        if _is_f2(F):
            return UAVerdict(UU, "polynomial ring over the two-element field")
        c = F.from_int(-1) if F.characteristic != 2 else F.embed(F.levels[1].generator_raw, F.levels[1])
        u = element(I, I.ring.constant(c))
        return UAVerdict(NOT_UU, "constant unit", witness=u, evidence=verify_uu_witness(u, budget))
    if is_zero_dimensional(I):
        try:
            cert = zero_dim_components(I, budget)
        except BudgetExceeded as exc:
            return UAVerdict(UNKNOWN, "decomposition budget", evidence={"reason": str(exc)})
        bad = [j for j, info in enumerate(cert.component_info) if not (_is_f2(F) and info["residue_degree"] == 1)]
        if not bad:
            return UAVerdict(UU, "every residue field has two elements", certificate=cert)
        u = _component_unit(cert, bad[0], residue_witness=True)
        return UAVerdict(NOT_UU, "residue field with more than two elements", witness=u,
                         evidence=verify_uu_witness(u, budget), certificate=cert)
    return UAVerdict(UNKNOWN, "no structural rule applies")


def _residue_element(comp: Ideal) -> MultiPoly:
    """An element of the component whose residue is not in the prime field's
    {0, 1, -1}: a constant when the field allows it, else a nonconstant
    staircase monomial of the reduced component."""
    F = comp.ring.field
    ring = comp.ring
    if F.characteristic != 2:
        return ring.constant(F.from_int(-1))
    if len(F.levels) > 1:
        return ring.constant(F.embed(F.levels[1].generator_raw, F.levels[1]))
    red = zero_dim_radical(comp)
    for m in quotient_basis(red):
        if any(m):
            return ring.monomial(m)
    raise UATError("component residue field is the two-element field")


def _component_unit(cert: DecompositionCertificate, j: int, residue_witness=False) -> QuotientElement:
    """``u = -1 + e_j (1 - v)``: u is -v on component j and -1 elsewhere.

    With v a unit of component j such that v - 1 is not nilpotent, u is a
    unit and u + 1 is zero on the other components but not nilpotent on j.
    When ``residue_witness`` is set the returned element is ``e_j v + (1 - e_j)``
    instead, a unit whose difference with 1 is not nilpotent.
    """
    I = cert.ambient
    ring = I.ring
    v = _residue_element(cert.components[j])
    e = cert.idempotent(j)
    if residue_witness:
        return element(I, e * v + (ring.one() - e))
    return element(I, -ring.one() + e * (ring.one() - v))


def zero_dim_ua_decide(I: Ideal, budget: Budget | None = None) -> UAVerdict:
    """Decide UA for a finite-dimensional algebra k[X]/I.

    The algebra is a product of local Artinian rings, one per component.
    One component: unit-additive.  Several: unit-additive exactly when every
    residue field is the two-element field; otherwise an explicit witness.
    """
    if not is_zero_dimensional(I):
        raise NotZeroDimensional("zero_dim_ua_decide needs a zero-dimensional ideal")
    if I.is_unit_ideal:
        return UAVerdict(UA, "zero ring")
    try:
        cert = zero_dim_components(I, budget)
    except BudgetExceeded as exc:
        return UAVerdict(UNKNOWN, "decomposition budget", evidence={"reason": str(exc), **exc.progress})
    F = I.ring.field
    reduced = all(info["reduced"] for info in cert.component_info)
    notes = [] if reduced else ["the algebra has nilpotents; verdict is for its reduction, which has the same answer"]
    if len(cert.components) == 1:
        info = cert.component_info[0]
        route = "field" if info["reduced"] else "local Artinian ring"
        return UAVerdict(UA, route, certificate=cert, notes=notes)
    bad = [j for j, info in enumerate(cert.component_info) if not (_is_f2(F) and info["residue_degree"] == 1)]
    if not bad:
        return UAVerdict(UA, "product of rings with two-element residue fields", certificate=cert, notes=notes)
    u = _component_unit(cert, bad[0])
    evidence = verify_ua_witness(u, budget)
    return UAVerdict(NOT_UA, "product with a residue field of more than two elements", witness=u,
                     evidence=evidence, certificate=cert, notes=notes)


def structural_verdict(I: Ideal, budget: Budget | None = None) -> UAVerdict:
    """UA verdict from the first structural rule that applies."""
    if I.is_unit_ideal:
        return UAVerdict(UA, "zero ring")
    v = axiom_class_verdict(I)
    if v is not None:
        return v
    if is_zero_dimensional(I):
        return zero_dim_ua_decide(I, budget)
    return UAVerdict(UNKNOWN, "no structural rule applies")


def locally_ua_from_decomposition(cert: DecompositionCertificate, per_component, *, connected=None) -> UAVerdict:
    """Combine per-component UA verdicts over a verified decomposition.

    All components unit-additive gives locally unit-additive.  A component
    that is not unit-additive rules it out only when that component is
    known to be connected (``connected[j]``, or a local component of a
    zero-dimensional split).
    """
    cert.require_verified()
    per_component = list(per_component)
    if len(per_component) != len(cert.components):
        raise ValueError("one verdict per component is required")
    if connected is None:
        connected = [bool(info) for info in cert.component_info] or [False] * len(per_component)
    if len(per_component) == 1:
        v = per_component[0]
        return UAVerdict(v.status, "single component", witness=v.witness, certificate=cert, components=[v])
    statuses = [v.status for v in per_component]
    if all(s == UA for s in statuses):
        return UAVerdict(LOCALLY_UA, "every component unit-additive", certificate=cert, components=per_component)
    for j, v in enumerate(per_component):
        if v.status == NOT_UA and connected[j]:
            return UAVerdict(NOT_LOCALLY_UA, "connected component not unit-additive", certificate=cert,
                             components=per_component, evidence={"component": j})
    return UAVerdict(UNKNOWN, "component verdicts undecided", certificate=cert, components=per_component)


def product_rule(cert: DecompositionCertificate, per_component_uu, budget: Budget | None = None) -> UAVerdict:
    """A product of at least two rings is unit-additive iff every factor is UU."""
    cert.require_verified()
    per_component_uu = list(per_component_uu)
    if len(cert.components) < 2:
        raise ValueError("the product rule needs at least two components")
    if all(v.status == UU for v in per_component_uu):
        return UAVerdict(UA, "product of UU rings", certificate=cert, components=per_component_uu)
    for j, v in enumerate(per_component_uu):
        if v.status == NOT_UU and v.witness is not None:
            I = cert.ambient
            ring = I.ring
            e = cert.idempotent(j)
            w = v.witness.rep.to_ring(ring)
            u = element(I, -ring.one() + e * (ring.one() - w))
            return UAVerdict(NOT_UA, "product with a factor that is not UU", witness=u,
                             evidence=verify_ua_witness(u, budget), certificate=cert, components=per_component_uu)
    return UAVerdict(UNKNOWN, "UU status of some factor undecided", certificate=cert, components=per_component_uu)


def infer_ua_from_min_primes(I: Ideal, claimed_primes, per_quotient, connectedness="compute") -> UAVerdict:
    """Unit-additive if R is connected and R/p is unit-additive for each
    claimed minimal prime p.

    ``connectedness`` is ``"asserted"`` (caller's word, recorded) or
    ``"compute"``; zero-dimensional inputs are always checked.  The rule is
    one-directional and never concludes that R is not unit-additive.
    """
    claimed_primes = list(claimed_primes)
    per_quotient = list(per_quotient)
    report = verify_minimal_primes(I, claimed_primes)
    notes = [report.note]
    if not report.passed:
        return UAVerdict(UNKNOWN, "minimal-prime checks failed", evidence=report.to_json(), notes=notes)
    if is_zero_dimensional(I):
        try:
            cert = zero_dim_components(I)
        except BudgetExceeded as exc:
            return UAVerdict(UNKNOWN, "connectedness undecided", evidence={"reason": str(exc)})
        if len(cert.components) > 1:
            return UAVerdict(UNKNOWN, "spectrum is disconnected", certificate=cert,
                             evidence={"components": len(cert.components)}, notes=notes)
        notes.append("connectedness computed: single component")
    elif connectedness == "asserted":
        notes.append("connectedness asserted by the caller")
    else:
        return UAVerdict(UNKNOWN, "connectedness not established", notes=notes)
    if len(per_quotient) != len(claimed_primes):
        raise ValueError("one verdict per claimed prime is required")
    if all(v.status == UA for v in per_quotient):
        return UAVerdict(UA, "minimal-prime inference", evidence=report.to_json(), components=per_quotient, notes=notes)
    notes.append("inference inapplicable: some quotient is not known to be unit-additive; "
                 "this says nothing about R itself")
    return UAVerdict(UNKNOWN, "minimal-prime inference inapplicable", evidence=report.to_json(),
                     components=per_quotient, notes=notes)


def localize(I: Ideal, a) -> Ideal:
    """Presentation of the localization at ``a``: add a variable y and a*y - 1.

    If ``a`` lies in the radical the result is the unit ideal (zero ring).
    """
    ring = I.ring
    a = ring.coerce(a)
    y = ring.fresh_name("Y", "Z", "W", "V", "U")
    big = _extended_ring(ring, back=(y,))
    gens = [g.to_ring(big) for g in I.basis] + [a.to_ring(big) * big.var(y) - big.one()]
    return Ideal(big, gens, I.budget)


def localizes_to_zero(I: Ideal, a) -> bool:
    return radical_member(I.ring.coerce(a), I)

"""Elements of R = k[X]/I: units with inverses, nilpotents, idempotents, constants."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceeded, InapplicableOperation, InternalInconsistency
from .fields import FieldElement
from .ideals import Budget, Ideal, groebner, quotient_basis, is_zero_dimensional, rabinowitsch_basis, unit_cofactors

DEFAULT_EXPONENT_CAP = 64


class QuotientElement:
    """A residue class, stored as its normal form modulo the reduced basis."""

    __slots__ = ("ideal", "rep")

    def __init__(self, ideal: Ideal, f):
        self.ideal = ideal
        self.rep = ideal.reduce(f)

    @property
    def ring(self):
        return self.ideal.ring

    def _lift(self, other):
        if isinstance(other, QuotientElement):
            return other.rep
        return self.ring.coerce(other)

    def __add__(self, other):
        return QuotientElement(self.ideal, self.rep + self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return QuotientElement(self.ideal, self.rep - self._lift(other))

    def __rsub__(self, other):
        return QuotientElement(self.ideal, self._lift(other) - self.rep)

    def __mul__(self, other):
        return QuotientElement(self.ideal, self.rep * self._lift(other))

    __rmul__ = __mul__

    def __neg__(self):
        return QuotientElement(self.ideal, -self.rep)

    def __pow__(self, e: int):
        result = QuotientElement(self.ideal, self.ring.one())
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, QuotientElement):
            return self.ideal == other.ideal and self.rep == other.rep
        return self.rep == self.ideal.reduce(self._lift(other))

    def __hash__(self):
        return hash(self.rep)

    def is_zero(self):
        return self.rep.is_zero()

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return f"QuotientElement({str(self.rep)!r})"


def element(I: Ideal, f) -> QuotientElement:
    return QuotientElement(I, f)


@dataclass
class ElementClassification:
    """Unit / nilpotent / neither / unknown, with the evidence for each."""

    verdict: str
    element: QuotientElement
    inverse: QuotientElement | None = None
    exponent: int | None = None
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "element": str(self.element)}
        if self.inverse is not None:
            out["inverse"] = str(self.inverse)
        if self.exponent is not None:
            out["exponent"] = self.exponent
        for k, v in self.evidence.items():
            out[k] = [str(g) for g in v] if isinstance(v, (list, tuple)) else v
        return out


def _as_element(u, I=None) -> QuotientElement:
    if isinstance(u, QuotientElement):
        return u
    if I is None:
        raise TypeError("need an ideal to interpret a bare polynomial")
    return QuotientElement(I, u)


def is_unit(u: QuotientElement, budget: Budget | None = None):
    """Return ``(True, inverse)`` or ``(False, None)``.

    Decides 1 in I + (u); the inverse is read off the tracked cofactor of u
    and verified before it is returned.
    """
    I = u.ideal
    if u.rep.is_zero():
        return False, None
    if u.rep.is_constant():
        F = u.ring.field
        return True, QuotientElement(I, u.ring.constant(F.inv(u.rep.constant_raw())))
    basis = list(I.basis)
    G = groebner(basis + [u.rep], u.ring, budget or I.budget)
    if not (len(G) == 1 and G[0].is_constant()):
        return False, None
    cofs = unit_cofactors(basis + [u.rep], u.ring, budget or I.budget)
    if cofs is None:
        raise InternalInconsistency("unit detected but no cofactor representation found")
    inv = QuotientElement(I, cofs[-1])
    if not (u * inv).rep == u.ring.one():
        raise InternalInconsistency("extracted inverse failed verification")
    return True, inv


def _exponent_cap(I: Ideal) -> int:
    if is_zero_dimensional(I) and not I.is_unit_ideal:
        return max(1, len(quotient_basis(I)))
    return DEFAULT_EXPONENT_CAP


def is_nilpotent(u: QuotientElement, budget: Budget | None = None, cap: int | None = None):
    """Return ``(True, e)`` with the least e such that u^e is in I, else ``(False, None)``."""
    I = u.ideal
    if u.rep.is_zero():
        return True, 1
    from .ideals import radical_member

    if not radical_member(u.rep, I, budget):
        return False, None
    cap = cap or _exponent_cap(I)
    # doubling, then bisection on the monotone predicate u^e in I
    prev, e, power = 0, 1, u
    while not power.is_zero():
        if e >= cap:
            raise InternalInconsistency(
                f"radical membership holds but no power up to {cap} vanishes"
            )
        prev, e = e, min(2 * e, cap)
        power = u**e
    lo, hi = prev, e  # u^lo != 0, u^hi == 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if (u**mid).is_zero():
            hi = mid
        else:
            lo = mid
    return True, hi


def classify(u: QuotientElement, budget: Budget | None = None) -> ElementClassification:
    """Unit, nilpotent, or neither; every verdict carries checkable evidence."""
    I = u.ideal
    try:
        unit, inv = is_unit(u, budget)
        if unit:
            return ElementClassification("unit", u, inverse=inv)
        nil, e = is_nilpotent(u, budget)
        if nil:
            return ElementClassification("nilpotent", u, exponent=e)
        ev = {
            "non_unit_basis": groebner(list(I.basis) + [u.rep], u.ring, budget or I.budget),
            "non_nilpotent_basis": rabinowitsch_basis(u.rep, I, budget),
        }
        return ElementClassification("neither", u, evidence=ev)
    except BudgetExceeded as exc:
        return ElementClassification("unknown", u, evidence={"budget": str(exc), **exc.progress})


def is_idempotent(u: QuotientElement) -> bool:
    return (u * u) == u


def is_constant_mod(u) -> FieldElement | None:
    """The constant c with u - c in I, if there is one."""
    if u.rep.is_constant():
        return u.rep.constant_value()
    return None


def pth_power_constant(u: QuotientElement, e_max: int):
    """Smallest ``(e, c)`` with e <= e_max and u^(p^e) = c constant, else None."""
    F = u.ring.field
    p = F.characteristic
    if p == 0:
        raise InapplicableOperation("p-th powers need positive characteristic")
    v = u
    for e in range(e_max + 1):
        c = is_constant_mod(v)
        if c is not None:
            return e, c
        v = v**p
    return None

"""CRT decompositions: idempotent splits, certificate verification,
zero-dimensional component splitting, and checks on claimed minimal primes.

A :class:`DecompositionCertificate` records an ambient ideal ``I`` and
component ideals ``I_j`` together with everything a third party needs to
re-check the product decomposition of ``k[X]/I`` up to nilpotents:

* ``I`` is contained in every ``I_j``;
* each pair of components is comaximal, witnessed by ``a + b = 1``;
* the intersection of the components lies in the radical of ``I``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from . import univariate as up
from .errors import (
    BudgetExceeded,
    ComaximalityFailure,
    ContainmentFailure,
    IntersectionNotInRadical,
    NotAnIdempotent,
    NotZeroDimensional,
    TrivialIdempotent,
    UnverifiedCertificate,
)
from .ideals import Budget, Ideal, intersect, is_zero_dimensional, quotient_basis, radical_member, unit_cofactors
from .linalg import minimal_polynomial, substitute
from .poly import MultiPoly


@dataclass
class DecompositionCertificate:
    ambient: Ideal
    components: list
    cofactors: dict = field(default_factory=dict)  # (j, k) with j < k -> (a in I_j, b in I_k)
    radical_checks: list = field(default_factory=list)
    verified: bool = False
    component_info: list = field(default_factory=list)

    @property
    def ring(self):
        return self.ambient.ring

    def __len__(self):
        return len(self.components)

    def require_verified(self):
        if not self.verified:
            raise UnverifiedCertificate("certificate has not passed verify_crt")

    def idempotent(self, j: int) -> MultiPoly:
        """The element that is 1 modulo ``I_j`` and 0 modulo every other component."""
        self.require_verified()
        e = self.ring.one()
        for k in range(len(self.components)):
            if k == j:
                continue
            if j < k:
                _, b = self.cofactors[(j, k)]
                e = e * b
            else:
                a, _ = self.cofactors[(k, j)]
                e = e * a
            e = self.ambient.reduce(e)
        return e

    def dimensions(self):
        return [len(quotient_basis(c)) for c in self.components]

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.basis_text(),
            "components": [c.basis_text() for c in self.components],
            "cofactors": [
                {"pair": [j, k], "a": str(a), "b": str(b)} for (j, k), (a, b) in sorted(self.cofactors.items())
            ],
            "radical_checks": list(self.radical_checks),
            "component_info": list(self.component_info),
            "verified": self.verified,
        }


def verify_crt(cert: DecompositionCertificate) -> DecompositionCertificate:
    """Check every certificate invariant; return a copy stamped verified.

    Raises the first failing check with the offending polynomial attached.
    """
    if not cert.components:
        raise ValueError("a decomposition needs at least one component")
    I = cert.ambient
    ring = I.ring
    for j, comp in enumerate(cert.components):
        if comp.ring != ring:
            raise ValueError("component lives in a different ring")
        for g in I.basis:
            if not comp.contains(g):
                raise ContainmentFailure(
                    f"generator {g} of the ambient ideal is not in component {j}", component=j, generator=str(g)
                )
    cofactors = {}
    for j, k in itertools.combinations(range(len(cert.components)), 2):
        Ij, Ik = cert.components[j], cert.components[k]
        pair = cert.cofactors.get((j, k))
        if pair is not None:
            a, b = pair
            if not (Ij.contains(a) and Ik.contains(b) and (a + b) == ring.one()):
                raise ComaximalityFailure(f"recorded cofactors for components {j},{k} do not verify", pair=(j, k))
        else:
            gens = list(Ij.basis) + list(Ik.basis)
            cof = unit_cofactors(gens, ring, I.budget)
            if cof is None:
                raise ComaximalityFailure(
                    f"components {j} and {k} are not comaximal", pair=(j, k), sum_basis=[str(g) for g in Ideal(ring, gens).basis]
                )
            n = len(Ij.basis)
            a = sum((c * g for c, g in zip(cof[:n], Ij.basis)), ring.zero())
            b = sum((c * g for c, g in zip(cof[n:], Ik.basis)), ring.zero())
            if not (a + b) == ring.one():
                raise ComaximalityFailure(f"cofactor recombination failed for {j},{k}", pair=(j, k))
            pair = (a, b)
        cofactors[(j, k)] = pair
    inter = cert.components[0]
    for comp in cert.components[1:]:
        inter = intersect(inter, comp)
    checks = []
    for g in inter.basis:
        if not radical_member(g, I):
            raise IntersectionNotInRadical(f"{g} lies in every component but not in the radical", witness=str(g))
        checks.append(f"{g} in rad(I)")
    return replace(cert, cofactors=cofactors, radical_checks=checks, verified=True)


def split_by_idempotent(I: Ideal, e) -> DecompositionCertificate:
    """Split along an idempotent: components ``I + (e)`` and ``I + (e - 1)``.

    The returned certificate is verified; its cofactors are ``(e, 1 - e)``.
    """
    ring = I.ring
    e = ring.coerce(e)
    if not I.contains(e * e - e):
        raise NotAnIdempotent(f"{e} is not idempotent modulo the ideal")
    if I.contains(e) or I.contains(e - 1):
        raise TrivialIdempotent(f"{e} is 0 or 1 modulo the ideal")
    first = I.with_generators([e])
    second = I.with_generators([e - 1])
    cert = DecompositionCertificate(I, [first, second], cofactors={(0, 1): (e, ring.one() - e)})
    return verify_crt(cert)


# -- zero-dimensional splitting -------------------------------------------


def zero_dim_radical(I: Ideal) -> Ideal:
    """Radical of a zero-dimensional ideal over a perfect field: add the
    squarefree part of each variable's minimal polynomial."""
    ring = I.ring
    F = ring.field
    extra = []
    for v in ring.gens():
        mu = minimal_polynomial(v, I)
        sq = up.squarefree_part(F, mu)
        if len(sq) < len(mu):
            extra.append(_univariate_in(sq, v))
    return I.with_generators(extra) if extra else I


def _univariate_in(coeffs, h: MultiPoly) -> MultiPoly:
    ring = h.ring
    acc = ring.zero()
    for c in reversed(coeffs):
        acc = acc * h + ring.constant(c)
    return acc


def _candidates(J: Ideal, basis, max_coeff: int):
    """Deterministic sweep: staircase monomials, then integer combinations
    ordered by max coefficient and then lexicographically."""
    ring = J.ring
    F = ring.field
    mons = [m for m in basis if any(m)]
    for m in mons:
        yield ring.monomial(m)
    if len(mons) < 2:
        return
    seen = set()
    p = F.characteristic
    for M in range(1, max_coeff + 1):
        values = [0] + [s * c for c in range(1, M + 1) for s in (1, -1)]
        for vec in itertools.product(values, repeat=len(mons)):
            if max(abs(c) for c in vec) != M or sum(1 for c in vec if c) < 2:
                continue
            key = tuple(c % p for c in vec) if p else vec
            if key in seen:
                continue
            seen.add(key)
            yield ring.from_coefficients({m: c for m, c in zip(mons, vec) if c})


@dataclass
class _Split:
    parts: list | None = None
    local: dict | None = None


def _split_or_certify(J: Ideal, max_candidates: int, max_coeff: int, degree_budget: int, seed: int) -> _Split:
    F = J.ring.field
    red = zero_dim_radical(J)
    red_basis = quotient_basis(red)
    d_red = len(red_basis)
    info = {"dimension": len(quotient_basis(J)), "residue_degree": d_red, "reduced": red == J}
    if d_red == 1:
        return _Split(local=info)
    for n, h in enumerate(_candidates(red, red_basis, max_coeff)):
        if n >= max_candidates:
            break
        mu = minimal_polynomial(h, red, red_basis)
        _, facs = up.factor(F, mu, degree_budget=degree_budget, seed=seed)
        if len(facs) >= 2:
            mu_full = minimal_polynomial(h, J)
            _, full = up.factor(F, mu_full, degree_budget=degree_budget, seed=seed)
            parts = [J.with_generators([substitute(up.power(F, g, e), h, J)]) for g, e in full]
            return _Split(parts=parts)
        if up.degree(facs[0][0]) == d_red:
            info["primitive_element"] = str(h)
            return _Split(local=info)
    return _Split()


def zero_dim_components(
    I: Ideal,
    budget: Budget | None = None,
    *,
    max_candidates: int = 400,
    max_coeff: int = 3,
    degree_budget: int = 8,
    seed: int = 0,
) -> DecompositionCertificate:
    """Split ``k[X]/I`` into local factors by minimal polynomials of
    separating elements, and return a verified certificate.

    Raises :class:`BudgetExceeded` (``unknown``) with the partial split if a
    factorization exceeds its budget or no candidate decides a component.
    """
    if not is_zero_dimensional(I):
        raise NotZeroDimensional("component splitting needs a zero-dimensional ideal")
    if I.is_unit_ideal:
        raise ValueError("the unit ideal presents the zero ring, which has no components")
    work = [I]
    done, infos = [], []
    while work:
        J = work.pop()
        try:
            res = _split_or_certify(J, max_candidates, max_coeff, degree_budget, seed)
        except BudgetExceeded as exc:
            raise BudgetExceeded(
                f"decomposition stopped: {exc}",
                partial=[c.basis_text() for c in done + work + [J]],
            ) from exc
        if res.parts is not None:
            work.extend(res.parts)
        elif res.local is not None:
            done.append(J)
            infos.append(res.local)
        else:
            raise BudgetExceeded(
                "no separating element found within the candidate budget",
                partial=[c.basis_text() for c in done + work + [J]],
            )
    order = sorted(range(len(done)), key=lambda i: str(done[i].basis_text()))
    cert = DecompositionCertificate(
        I,
        [done[i] for i in order],
        component_info=[infos[i] for i in order],
    )
    return verify_crt(cert)


# -- claimed minimal primes ------------------------------------------------


@dataclass
class MinimalPrimesReport:
    passed: bool
    containment: list
    intersection_in_radical: list
    failures: list
    note: str = "primality of the claimed ideals is not verified"

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "containment": self.containment,
            "intersection_in_radical": self.intersection_in_radical,
            "failures": self.failures,
            "note": self.note,
        }


def verify_minimal_primes(I: Ideal, claimed) -> MinimalPrimesReport:
    """Check the radical identities relating ``I`` to claimed minimal primes.

    Verified: every generator of ``I`` lies in each claimed prime, and every
    generator of their intersection lies in the radical of ``I``.
    """
    claimed = list(claimed)
    if not claimed:
        raise ValueError("at least one claimed prime is required")
    containment, failures = [], []
    for j, P in enumerate(claimed):
        for g in I.basis:
            ok = P.contains(g)
            containment.append({"prime": j, "generator": str(g), "ok": ok})
            if not ok:
                failures.append({"check": "containment", "prime": j, "witness": str(g)})
    inter = claimed[0]
    for P in claimed[1:]:
        inter = intersect(inter, P)
    radical = []
    for g in inter.basis:
        ok = radical_member(g, I)
        radical.append({"generator": str(g), "ok": ok})
        if not ok:
            failures.append({"check": "intersection_in_radical", "witness": str(g)})
    return MinimalPrimesReport(not failures, containment, radical, failures)

"""Worked examples run end to end from the bundled ideal files.

Each example returns an :class:`ExampleResult` holding named checks.  A
check is a boolean computed by the library together with a short exact-text
detail, so the same objects drive the ``paper-examples`` command, the
acceptance tests and the README walkthrough.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .files import load_ideal, load_points
from .fundamentality import PointSet, finite_set_decide, fundamental_refute, verify_fundamental_witness
from .ideals import Ideal, equal, ideal_sum, intersect
from .quotient import classify, element
from .spectrum import split_by_idempotent, verify_crt, verify_minimal_primes, zero_dim_components
from .unit_additivity import (
    LOCALLY_UA, UA, UU, infer_ua_from_min_primes, locally_ua_from_decomposition, product_rule,
    structural_verdict, ua_refute, uu_verdict,
)


@dataclass
class ExampleResult:
    name: str
    checks: list = field(default_factory=list)  # (label, ok, detail)
    seconds: float = 0.0

    def check(self, label: str, ok: bool, detail: str = "") -> bool:
        self.checks.append((label, bool(ok), detail))
        return bool(ok)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": [{"label": lab, "ok": ok, "detail": det} for lab, ok, det in self.checks],
        }


def _timed(fn):
    def run(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def circle(backend: str | None = None) -> ExampleResult:
    """Unit circle: a nonconstant unit over QQ(i), only constants over QQ."""
    res = ExampleResult("circle")
    Ii = load_ideal("circle_qi.ideal").ideal()
    rep = ua_refute(Ii, 1, "gauss", backend=backend)
    ring = Ii.ring
    if res.check("QQ(i): degree-1 gauss search finds a witness", rep.found, str(rep.witness)):
        u = rep.witness
        res.check("witness is X + i*Y", u == element(Ii, ring.parse("X + i*Y")), str(u))
        cl = classify(u)
        res.check("inverse is X - i*Y", cl.inverse == element(Ii, ring.parse("X - i*Y")), str(cl.inverse))
        nxt = classify(u + element(Ii, ring.one()))
        res.check("X + i*Y + 1 is neither unit nor nilpotent", nxt.verdict == "neither", nxt.verdict)
    Iq = load_ideal("circle_q.ideal").ideal()
    rep = ua_refute(Iq, 2, "small", backend=backend)
    res.check("QQ: degree-2 search over {0, +-1, +-2} exhausts", rep.outcome == "exhausted",
              f"{rep.tried} candidates, {rep.exact_checks} exact checks")
    res.check("QQ: every unit met is constant", rep.only_constant_units and rep.units_found > 0,
              ", ".join(str(u) for u in rep.unit_samples))
    return res


def phi_psi_table(n_max: int):
    """``phi_n, psi_n`` in QQ(i)[Y, X] for 1 <= n <= n_max from the recursion
    phi' = X phi + (X^2 - 1) psi, psi' = X psi + phi."""
    ring = load_ideal("circle_q_yx.ideal").ring()
    X = ring.var("X")
    phi, psi = X, ring.one()
    out = [(phi, psi)]
    for _ in range(n_max - 1):
        phi, psi = X * phi + (X * X - ring.one()) * psi, X * psi + phi
        out.append((phi, psi))
    return out


@_timed
def phi_psi(n: int = 50) -> ExampleResult:
    """Powers of X + i*Y on the circle against the phi/psi recursion."""
    res = ExampleResult(f"phi-psi (n <= {n})")
    I = load_ideal("circle_q_yx.ideal").ideal()
    ring = I.ring
    F = ring.field
    i = ring.constant(F.gen("i").raw)
    Y = ring.var("Y")
    base = ring.parse("X + i*Y")
    power = ring.one()
    bad = []
    for k, (phi, psi) in enumerate(phi_psi_table(n), start=1):
        power = I.reduce(power * base)
        if power != phi + i * psi * Y:
            bad.append(f"n={k}: power mismatch")
        if phi.degree_in("X") != k or psi.degree_in("X") != k - 1:
            bad.append(f"n={k}: degrees {phi.degree_in('X')}, {psi.degree_in('X')}")
        if phi.leading_coefficient != psi.leading_coefficient:
            bad.append(f"n={k}: leading coefficients differ")
        if phi.degree_in("Y") > 0 or psi.degree_in("Y") > 0:
            bad.append(f"n={k}: Y appears in phi or psi")
    res.check("(X + i*Y)^n = phi_n + i*psi_n*Y mod the circle", not any("power" in b for b in bad))
    res.check("deg phi_n = n and deg psi_n = n - 1", not any("degrees" in b for b in bad))
    res.check("phi_n and psi_n share leading coefficients", not any("leading" in b for b in bad))
    phi_n, psi_n = phi_psi_table(n)[-1]
    res.check("leading coefficient is 2^(n-1)", phi_n.leading_coefficient == F(2 ** (n - 1)),
              str(phi_n.leading_coefficient))
    if bad:
        res.check("all n", False, "; ".join(bad[:5]))
    return res


@_timed
def cant_descend(backend: str | None = None) -> ExampleResult:
    """(XYZ - Z): a plane and a cylinder glued along a curve."""
    res = ExampleResult("cant-descend")
    I = load_ideal("xyz_z.ideal").ideal()
    P1 = load_ideal("z_plane.ideal").ideal()
    P2 = load_ideal("xy_1.ideal").ideal()
    res.check("(XYZ - Z) = (Z) meet (XY - 1)", equal(I, intersect(P1, P2)))
    report = verify_minimal_primes(I, [P1, P2])
    res.check("minimal-prime radical checks pass", report.passed, report.note)
    s = ideal_sum(P1, P2)
    res.check("(Z) + (XY - 1) is proper", not s.is_unit_ideal, str(s.basis_text()))
    rep = ua_refute(P2, 1, "small", backend=backend)
    res.check("k[X,Y,Z]/(XY - 1): degree-1 witness X", rep.found and str(rep.witness) == "X", str(rep.witness))
    rep = ua_refute(I, 2, "small", backend=backend)
    res.check("k[X,Y,Z]/(XYZ - Z): degree-2 search exhausts", rep.outcome == "exhausted",
              f"{rep.tried} candidates, {rep.exact_checks} exact checks")
    res.check("only constant units met", rep.only_constant_units, ", ".join(str(u) for u in rep.unit_samples))
    return res


@_timed
def finite_set(backend: str | None = None) -> ExampleResult:
    """The two-point set {0, 1} over QQ and over GF(2)."""
    res = ExampleResult("finite-set")
    pts = load_points("points_01_Q.pts")
    V = PointSet(pts.field, [[c.raw for c in p] for p in pts.points], pts.variables)
    v = finite_set_decide(V)
    res.check("{0, 1} over QQ is not fundamental", v.fundamental.value == "no", str(v.fundamental.witness))
    res.check("{0, 1} over QQ is locally fundamental", v.locally_fundamental.value == "yes")
    I = load_ideal("two_points_q.ideal").ideal()
    ring = I.ring
    fr = fundamental_refute(I, 1, "small", backend=backend)
    w = fr.search.witness if fr.search is not None else None
    linear = w is not None and w.rep.total_degree() == 1 and w.rep.leading_coefficient == ring.field.one
    res.check("(X^2 - X): degree-1 search finds a witness X - c", linear, str(w))
    try:
        ev = verify_fundamental_witness(element(I, ring.parse("X - 2")))
        res.check("X - 2 verifies as a witness", ev["unit_ideal_with_f"])
    except ValueError as exc:
        res.check("X - 2 verifies as a witness", False, str(exc))
    pts2 = load_points("points_01_F2.pts")
    V2 = PointSet(pts2.field, [[c.raw for c in p] for p in pts2.points], pts2.variables)
    v2 = finite_set_decide(V2)
    oracle = v2.fundamental.evidence.get("oracle", {})
    res.check("{0, 1} over GF(2) is fundamental", v2.fundamental.value == "yes")
    res.check("finite-ring oracle agrees", oracle.get("all_units_constant") is True, str(oracle.get("ring")))
    return res


@_timed
def refconn() -> ExampleResult:
    """Decomposition of a disconnected algebra over GF(2) and over QQ."""
    res = ExampleResult("refconn")
    I = load_ideal("idempotent_f2.ideal").ideal()
    ring = I.ring
    cert = split_by_idempotent(I, ring.parse("U"))
    texts = sorted(tuple(c.basis_text()) for c in cert.components)
    expect = sorted([tuple(Ideal(ring, [ring.parse("U"), ring.parse("T")]).basis_text()),
                     tuple(Ideal(ring, [ring.parse("U - 1")]).basis_text())])
    res.check("components {U, T} and {U - 1}", texts == expect, str(texts))
    res.check("CRT certificate verifies", verify_crt(cert).verified)
    per = [structural_verdict(c) for c in cert.components]
    loc = locally_ua_from_decomposition(cert, per)
    res.check("locally unit-additive", loc.status == LOCALLY_UA, loc.route)
    uu = [uu_verdict(c) for c in cert.components]
    pr = product_rule(cert, uu)
    res.check("both factors UU", all(v.status == UU for v in uu), ", ".join(v.route for v in uu))
    res.check("product rule gives unit-additive", pr.status == UA, pr.route)
    J = load_ideal("two_points_q.ideal").ideal()
    zc = zero_dim_components(J)
    dims = zc.dimensions()
    res.check("(X^2 - X) over QQ has two components", len(zc.components) == 2, str([c.basis_text() for c in zc.components]))
    res.check("staircase dimensions 1 + 1 = 2", dims == [1, 1] and sum(dims) == 2, str(dims))
    return res


@_timed
def axes(backend: str | None = None) -> ExampleResult:
    """(XY) over QQ: unit-additive by minimal primes."""
    res = ExampleResult("axes")
    I = load_ideal("xy_axes.ideal").ideal()
    ring = I.ring
    primes = [Ideal(ring, [ring.parse("X")]), Ideal(ring, [ring.parse("Y")])]
    v = infer_ua_from_min_primes(I, primes, [structural_verdict(P) for P in primes], connectedness="asserted")
    res.check("minimal-prime inference gives unit-additive", v.status == UA, v.route)
    rep = ua_refute(I, 3, "small", backend=backend)
    res.check("degree-3 search exhausts", rep.outcome == "exhausted", f"{rep.tried} candidates")
    return res


EXAMPLES = {
    "circle": circle,
    "phi-psi": phi_psi,
    "cant-descend": cant_descend,
    "finite-set": finite_set,
    "refconn": refconn,
    "axes": axes,
}

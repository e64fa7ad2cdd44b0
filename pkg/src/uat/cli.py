"""The ``uat`` command.

Exit codes: 0 decided (or a search that completed without a witness),
1 input error, 2 witness found or claim refuted, 3 unknown or budget
exhausted, 4 audit failure.  ``--json`` prints a versioned report whose
witnesses and certificates ``uat self-audit`` can re-verify.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from . import kernels
from .base_change import geometric_ua_refute, parse_extension_list
from .errors import BudgetExceeded, CertificateError, HypothesisViolation, NotZeroDimensional, ParseError, UATError
from .files import IdealFile, bundled_files, load_ideal, load_points
from .fundamentality import (
    FundamentalityVerdict, PointSet, bridge_report, finite_set_decide, fundamental_refute,
    verify_fundamental_witness, zero_dim_fundamental,
)
from .ideals import Budget, Ideal, is_zero_dimensional, quotient_basis, radical_member
from .oracle import cross_check, parse_ring
from .poly import evaluate_raw
from .quotient import classify, element
from .spectrum import DecompositionCertificate, split_by_idempotent, verify_crt, verify_minimal_primes, zero_dim_components
from .unit_additivity import (
    NOT_UA, UNKNOWN, infer_ua_from_min_primes, locally_ua_from_decomposition, localize,
    product_rule, structural_verdict, ua_refute, uu_refute, uu_verdict, verify_ua_witness, verify_uu_witness,
    zero_dim_ua_decide,
)
from . import worked

SCHEMA = 1
EXIT_DECIDED, EXIT_INPUT, EXIT_WITNESS, EXIT_UNKNOWN, EXIT_AUDIT = 0, 1, 2, 3, 4


class Report:
    """Accumulates the JSON report and the human-readable lines in step."""

    def __init__(self, command: str, params: dict):
        self.data = {"schema": SCHEMA, "command": command, "params": params}
        self.data["witnesses"] = []
        self.data["certificates"] = []
        self.data["assumptions"] = []
        self.lines = []

    def say(self, text: str = ""):
        self.lines.append(text)

    def set(self, key, value):
        self.data[key] = value

    def witness(self, kind: str, ideal: Ideal | None, elem, **extra):
        entry = {"kind": kind, "element": str(elem)}
        if ideal is not None:
            entry["input"] = IdealFile.from_ideal(ideal).to_json()
        entry.update(extra)
        self.data["witnesses"].append(entry)

    def certificate(self, cert: DecompositionCertificate):
        self.data["certificates"].append(
            {"input": IdealFile.from_ideal(cert.ambient).to_json(), "certificate": cert.to_json()}
        )

    def assume(self, text: str):
        if text not in self.data["assumptions"]:
            self.data["assumptions"].append(text)

    def finish(self, as_json: bool, code: int) -> int:
        self.data["exit_code"] = code
        if as_json:
            click.echo(json.dumps(self.data, indent=2, sort_keys=False))
        else:
            for line in self.lines:
                click.echo(line)
        return code


# -- option bundles ------------------------------------------------------------

def json_option(f):
    return click.option("--json", "as_json", is_flag=True, help="Print the JSON report.")(f)


def budget_options(f):
    f = click.option("--budget", "max_pairs", type=click.IntRange(1), default=50_000, show_default=True,
                     help="Cap on Groebner pair reductions.")(f)
    f = click.option("--max-gb-degree", type=click.IntRange(1), default=60, show_default=True,
                     help="Cap on the total degree of intermediate polynomials.")(f)
    return f


def search_options(f):
    f = click.option("--max-deg", type=click.IntRange(0), default=1, show_default=True,
                     help="Total-degree bound on candidate normal forms.")(f)
    f = click.option("--coeff-pool", default="default", show_default=True,
                     help="small, gauss, all or list:a,b,...")(f)
    f = click.option("--max-checks", type=click.IntRange(1), default=200_000, show_default=True,
                     help="Cap on exact checks of prefilter survivors.")(f)
    f = click.option("--seed", type=int, default=0, show_default=True, help="Seed for sampling and factoring.")(f)
    f = click.option("--backend", type=click.Choice(["auto", "cython", "numpy"]), default="auto", show_default=True,
                     help="Prefilter kernel.")(f)
    f = click.option("--no-prefilter", is_flag=True, help="Check every candidate exactly.")(f)
    return budget_options(f)


def _budget(kw) -> Budget:
    return Budget(kw.pop("max_pairs"), kw.pop("max_gb_degree"))


def _search_kwargs(kw) -> dict:
    backend = kw.pop("backend")
    return {
        "budget": _budget(kw),
        "max_checks": kw.pop("max_checks"),
        "prefilter": not kw.pop("no_prefilter"),
        "backend": None if backend == "auto" else backend,
        "seed": kw.pop("seed"),
    }


def handled(fn):
    """Map library errors onto the exit-code contract."""

    @functools.wraps(fn)
    def run(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            code = fn(*args, **kwargs)
        except (ParseError, FileNotFoundError, NotZeroDimensional, HypothesisViolation) as exc:
            click.echo(f"error: {exc}", err=True)
            code = EXIT_INPUT
        except BudgetExceeded as exc:
            click.echo(f"unknown: budget exceeded ({exc})", err=True)
            code = EXIT_UNKNOWN
        except (ValueError, UATError) as exc:
            click.echo(f"error: {exc}", err=True)
            code = EXIT_INPUT
        ctx.exit(code or 0)

    return run


def _load(ctx, path) -> IdealFile:
    return load_ideal(path, ctx.obj.get("max_tower_depth"))


def _ideal(ctx, path, budget=None):
    spec = _load(ctx, path)
    return spec, spec.ideal(budget)


def _exit_for_search(rep) -> int:
    return {"witness": EXIT_WITNESS, "exhausted": EXIT_DECIDED}.get(rep.outcome, EXIT_UNKNOWN)


def _describe_search(r: Report, rep):
    r.say(f"outcome: {rep.outcome}")
    if rep.found:
        r.say(f"witness: {rep.witness}")
        for k, v in rep.evidence.items():
            r.say(f"  {k}: {v}")
    r.say(f"candidates tried: {rep.tried}; exact checks: {rep.exact_checks}; units met: {rep.units_found}")
    if rep.unit_samples:
        r.say(f"units met: {', '.join(str(u) for u in rep.unit_samples)}")
    if rep.outcome == "exhausted":
        r.say("note: exhaustion within the bound is evidence, not a proof")


class UatGroup(click.Group):
    """Keeps usage errors on exit code 1 so that 2 always means a witness."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            code = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.ClickException as exc:
            exc.show()
            code = EXIT_INPUT
        except click.Abort:
            click.echo("aborted", err=True)
            code = EXIT_INPUT
        code = code if isinstance(code, int) else 0
        if standalone_mode:
            sys.exit(code)
        return code


@click.group(cls=UatGroup)
@click.option("--max-tower-depth", type=click.IntRange(0), default=3, show_default=True,
              help="Reject field towers deeper than this.")
@click.version_option(package_name="uat")
@click.pass_context
def cli(ctx, max_tower_depth):
    """Exact unit-additivity and fundamentality computations."""
    ctx.ensure_object(dict)
    ctx.obj["max_tower_depth"] = max_tower_depth


# -- basic ideal operations ------------------------------------------------------

@cli.command()
@click.argument("file")
@json_option
@budget_options
@click.pass_context
@handled
def gb(ctx, file, as_json, **kw):
    """Reduced Groebner basis of the ideal in FILE."""
    spec, I = _ideal(ctx, file, _budget(kw))
    r = Report("gb", {"file": file})
    r.set("input", spec.to_json())
    zd = is_zero_dimensional(I)
    dim = len(quotient_basis(I)) if zd and not I.is_unit_ideal else (0 if I.is_unit_ideal else None)
    r.set("result", {"basis": I.basis_text(), "order": str(I.ring.order), "zero_dimensional": zd,
                     "quotient_dimension": dim})
    r.say(f"reduced basis ({I.ring.order}):")
    for g in I.basis_text():
        r.say(f"  {g}")
    if zd:
        r.say(f"zero-dimensional; quotient dimension {dim}")
    return r.finish(as_json, EXIT_DECIDED)


@cli.command()
@click.argument("file")
@click.argument("poly")
@click.option("--radical", is_flag=True, help="Also test membership in the radical.")
@json_option
@budget_options
@click.pass_context
@handled
def member(ctx, file, poly, radical, as_json, **kw):
    """Is POLY in the ideal (and its radical)?"""
    spec, I = _ideal(ctx, file, _budget(kw))
    f = I.ring.parse(poly)
    r = Report("member", {"file": file, "poly": poly})
    r.set("input", spec.to_json())
    res = {"member": I.contains(f), "normal_form": str(I.reduce(f))}
    r.say(f"member: {'yes' if res['member'] else 'no'} (normal form {res['normal_form']})")
    if radical:
        res["radical_member"] = radical_member(f, I)
        r.say(f"radical member: {'yes' if res['radical_member'] else 'no'}")
    r.set("result", res)
    return r.finish(as_json, EXIT_DECIDED)


@cli.command("classify")
@click.argument("file")
@click.argument("poly")
@json_option
@budget_options
@click.pass_context
@handled
def classify_cmd(ctx, file, poly, as_json, **kw):
    """Unit, nilpotent or neither, with evidence."""
    budget = _budget(kw)
    spec, I = _ideal(ctx, file, budget)
    u = element(I, I.ring.parse(poly))
    c = classify(u, budget)
    r = Report("classify", {"file": file, "poly": poly})
    r.set("input", spec.to_json())
    r.set("result", c.to_json())
    r.say(f"{u}: {c.verdict}")
    if c.inverse is not None:
        r.say(f"inverse: {c.inverse}")
        r.witness("inverse", I, u, inverse=str(c.inverse))
    if c.exponent is not None:
        r.say(f"nilpotency index: {c.exponent}")
    return r.finish(as_json, EXIT_UNKNOWN if c.verdict == "unknown" else EXIT_DECIDED)


# -- searches --------------------------------------------------------------------

def _probe(r: Report, I: Ideal, extend: str, max_deg, pool, skw) -> int:
    probe = geometric_ua_refute(I, parse_extension_list(extend), max_deg, pool, **skw)
    r.set("result", probe.to_json())
    for (L, J, rep), text in zip(probe.per_extension, probe.extension_polys):
        r.say(f"extension {text} -> {L.spec}:")
        _describe_search(r, rep)
        if rep.found:
            r.witness("ua", J, rep.witness)
    r.say(f"verdict: {probe.status}")
    if probe.found:
        return EXIT_WITNESS
    if any(rep.outcome == "aborted" for _, _, rep in probe.per_extension):
        return EXIT_UNKNOWN
    return EXIT_DECIDED


@cli.command("ua-refute")
@click.argument("file")
@click.option("--extend", default=None, help='Also adjoin roots, e.g. "t^2+1;t^3-2".')
@search_options
@json_option
@click.pass_context
@handled
def ua_refute_cmd(ctx, file, extend, max_deg, coeff_pool, as_json, **kw):
    """Search for a unit u with u + 1 neither unit nor nilpotent."""
    skw = _search_kwargs(kw)
    spec, I = _ideal(ctx, file, skw["budget"])
    r = Report("ua-refute", {"file": file, "max_deg": max_deg, "coeff_pool": coeff_pool, "extend": extend})
    r.set("input", spec.to_json())
    if extend:
        return r.finish(as_json, _probe(r, I, extend, max_deg, coeff_pool, skw))
    rep = ua_refute(I, max_deg, coeff_pool, **skw)
    r.set("result", rep.to_json())
    _describe_search(r, rep)
    if rep.found:
        r.witness("ua", I, rep.witness)
    return r.finish(as_json, _exit_for_search(rep))


@cli.command("uu-refute")
@click.argument("file")
@search_options
@json_option
@click.pass_context
@handled
def uu_refute_cmd(ctx, file, max_deg, coeff_pool, as_json, **kw):
    """Search for a unit u with u - 1 not nilpotent."""
    skw = _search_kwargs(kw)
    spec, I = _ideal(ctx, file, skw["budget"])
    r = Report("uu-refute", {"file": file, "max_deg": max_deg, "coeff_pool": coeff_pool})
    r.set("input", spec.to_json())
    rep = uu_refute(I, max_deg, coeff_pool, **skw)
    r.set("result", rep.to_json())
    _describe_search(r, rep)
    if rep.found:
        r.witness("uu", I, rep.witness)
    return r.finish(as_json, _exit_for_search(rep))


@cli.command("extend-probe")
@click.argument("file")
@click.option("--extend", required=True, help='Extension polynomials in t, e.g. "t^2+1;i=t^2+1".')
@search_options
@json_option
@click.pass_context
@handled
def extend_probe(ctx, file, extend, max_deg, coeff_pool, as_json, **kw):
    """Run the UA refuter after adjoining each listed root."""
    skw = _search_kwargs(kw)
    spec, I = _ideal(ctx, file, skw["budget"])
    r = Report("extend-probe", {"file": file, "extend": extend, "max_deg": max_deg, "coeff_pool": coeff_pool})
    r.set("input", spec.to_json())
    return r.finish(as_json, _probe(r, I, extend, max_deg, coeff_pool, skw))


# -- structural decisions -----------------------------------------------------------

def _verdict_code(status: str) -> int:
    if status == UNKNOWN:
        return EXIT_UNKNOWN
    return EXIT_WITNESS if status == NOT_UA else EXIT_DECIDED


@cli.command("zerodim-ua")
@click.argument("file")
@json_option
@budget_options
@click.pass_context
@handled
def zerodim_ua(ctx, file, as_json, **kw):
    """Decide unit-additivity of a finite-dimensional algebra."""
    budget = _budget(kw)
    spec, I = _ideal(ctx, file, budget)
    v = zero_dim_ua_decide(I, budget)
    r = Report("zerodim-ua", {"file": file})
    r.set("input", spec.to_json())
    r.set("result", v.to_json())
    r.say(f"verdict: {v.status} ({v.route})")
    if v.certificate is not None:
        r.certificate(v.certificate)
        r.say(f"components: {len(v.certificate.components)}")
    if v.witness is not None:
        r.say(f"witness: {v.witness}")
        r.witness("ua", I, v.witness)
    for note in v.notes:
        r.say(f"note: {note}")
    return r.finish(as_json, _verdict_code(v.status))


@cli.command()
@click.argument("file")
@click.option("--idempotent", default=None, help="Split along this idempotent instead of the zero-dimensional splitter.")
@json_option
@budget_options
@click.pass_context
@handled
def decompose(ctx, file, idempotent, as_json, **kw):
    """Verified CRT decomposition with per-component verdicts."""
    budget = _budget(kw)
    spec, I = _ideal(ctx, file, budget)
    if idempotent:
        cert = split_by_idempotent(I, I.ring.parse(idempotent))
    else:
        if not is_zero_dimensional(I):
            raise NotZeroDimensional("decompose needs a zero-dimensional ideal or --idempotent")
        cert = zero_dim_components(I, budget)
    r = Report("decompose", {"file": file, "idempotent": idempotent})
    r.set("input", spec.to_json())
    r.certificate(cert)
    per = [structural_verdict(c, budget) for c in cert.components]
    result = {"components": [c.basis_text() for c in cert.components], "verdicts": [v.to_json() for v in per]}
    r.say(f"{len(cert.components)} components (certificate verified: {cert.verified})")
    for j, (c, v) in enumerate(zip(cert.components, per)):
        r.say(f"  [{j}] {'; '.join(c.basis_text())}  ->  {v.status}")
    if len(cert.components) >= 1:
        loc = locally_ua_from_decomposition(cert, per)
        result["locally_ua"] = loc.status
        r.say(f"locally unit-additive: {loc.status} ({loc.route})")
    if len(cert.components) >= 2:
        pr = product_rule(cert, [uu_verdict(c, budget) for c in cert.components], budget)
        result["product_rule"] = pr.to_json()
        r.say(f"product rule: {pr.status} ({pr.route})")
        if pr.witness is not None:
            r.witness("ua", I, pr.witness)
    r.set("result", result)
    return r.finish(as_json, EXIT_DECIDED)


@cli.command("verify-primes")
@click.argument("file")
@click.option("--prime", "primes", multiple=True, required=True,
              help='Generators of one claimed minimal prime, separated by ";".')
@click.option("--infer-ua", is_flag=True, help="Also infer unit-additivity from the quotients.")
@click.option("--assume-connected", is_flag=True, help="Assert that Spec R is connected.")
@json_option
@budget_options
@click.pass_context
@handled
def verify_primes(ctx, file, primes, infer_ua, assume_connected, as_json, **kw):
    """Check claimed minimal primes against the radical."""
    budget = _budget(kw)
    spec, I = _ideal(ctx, file, budget)
    ring = I.ring
    claimed = [Ideal(ring, [ring.parse(g) for g in p.split(";") if g.strip()], budget) for p in primes]
    rep = verify_minimal_primes(I, claimed)
    r = Report("verify-primes", {"file": file, "primes": list(primes)})
    r.set("input", spec.to_json())
    result = {"checks": rep.to_json()}
    r.say(f"radical checks: {'passed' if rep.passed else 'FAILED'}")
    r.say(f"note: {rep.note}")
    for f in rep.failures:
        r.say(f"  failure: {f}")
    code = EXIT_DECIDED if rep.passed else EXIT_WITNESS
    if infer_ua and rep.passed:
        v = infer_ua_from_min_primes(I, claimed, [structural_verdict(P, budget) for P in claimed],
                                     connectedness="asserted" if assume_connected else "compute")
        result["ua"] = v.to_json()
        if assume_connected:
            r.assume("Spec R is connected (asserted)")
        r.say(f"unit-additivity: {v.status} ({v.route})")
        code = EXIT_UNKNOWN if v.status == UNKNOWN else EXIT_DECIDED
    r.set("result", result)
    return r.finish(as_json, code)


@cli.command("localize")
@click.argument("file")
@click.argument("poly")
@click.option("--write", "out", type=click.Path(dir_okay=False), default=None, help="Save the new ideal file here.")
@json_option
@budget_options
@click.pass_context
@handled
def localize_cmd(ctx, file, poly, out, as_json, **kw):
    """Presentation of the localization at POLY."""
    spec, I = _ideal(ctx, file, _budget(kw))
    a = I.ring.parse(poly)
    J = localize(I, a)
    r = Report("localize", {"file": file, "poly": poly})
    r.set("input", spec.to_json())
    new = IdealFile.from_ideal(J)
    r.set("result", {"ideal": new.to_json(), "basis": J.basis_text(), "zero_ring": J.is_unit_ideal})
    r.say(f"variables: {', '.join(J.ring.variables)}")
    r.say("reduced basis:")
    for g in J.basis_text():
        r.say(f"  {g}")
    if J.is_unit_ideal:
        r.say(f"{poly} is nilpotent, so the localization is the zero ring")
    if out:
        Path(out).write_text(new.to_text())
        r.say(f"written to {out}")
    return r.finish(as_json, EXIT_DECIDED)


# -- fundamentality ---------------------------------------------------------------

def _say_fundamental(r: Report, v: FundamentalityVerdict):
    r.say(f"fundamental: {v.fundamental.value} ({v.fundamental.route})")
    if v.fundamental.witness:
        r.say(f"  witness: {v.fundamental.witness}")
    r.say(f"locally fundamental: {v.locally_fundamental.value} ({v.locally_fundamental.route})")
    for note in v.bridge_notes:
        r.say(f"note: {note}")
    for a in v.assumptions:
        r.assume(a)
        r.say(f"assumption: {a}")


def _fund_code(v: FundamentalityVerdict) -> int:
    return {"yes": EXIT_DECIDED, "no": EXIT_WITNESS}.get(v.fundamental.value, EXIT_UNKNOWN)


@cli.command()
@click.argument("file")
@search_options
@json_option
@click.pass_context
@handled
def fundamental(ctx, file, max_deg, coeff_pool, as_json, **kw):
    """Fundamentality of V, with the ideal taken as I(V)."""
    skw = _search_kwargs(kw)
    spec, I = _ideal(ctx, file, skw["budget"])
    r = Report("fundamental", {"file": file, "max_deg": max_deg, "coeff_pool": coeff_pool})
    r.set("input", spec.to_json())
    v = None
    if is_zero_dimensional(I):
        v = zero_dim_fundamental(I, skw["budget"])
    elif not I.ring.field.is_finite:
        sv = structural_verdict(I, skw["budget"])
        if sv.status != UNKNOWN:
            v = bridge_report(I, sv)
    if v is None or v.fundamental.value == "unknown":
        found = fundamental_refute(I, max_deg, coeff_pool, **skw)
        if v is None:
            v = found
        else:
            v.fundamental, v.search = found.fundamental, found.search
    if v.fundamental.value == "no" and v.fundamental.witness:
        r.witness("fundamental", I, v.fundamental.witness)
    r.set("result", v.to_json())
    _say_fundamental(r, v)
    return r.finish(as_json, _fund_code(v))


@cli.command("finite-decide")
@click.argument("file")
@json_option
@click.pass_context
@handled
def finite_decide(ctx, file, as_json):
    """Decide fundamentality of a finite point set."""
    pts = load_points(file)
    V = PointSet(pts.field, [[c.raw for c in p] for p in pts.points], pts.variables)
    v = finite_set_decide(V)
    r = Report("finite-decide", {"file": file})
    r.set("input", {"field": pts.field_spec, "vars": list(V.variables),
                    "points": [list(p) for p in V.formatted()]})
    r.set("result", v.to_json())
    if v.fundamental.witness:
        r.witness("finite_set", None, v.fundamental.witness, field=pts.field_spec, vars=list(V.variables),
                  points=[list(p) for p in V.formatted()])
    r.say(f"{len(V.points)} points over {pts.field_spec}")
    _say_fundamental(r, v)
    return r.finish(as_json, _fund_code(v))


# -- oracle ----------------------------------------------------------------------

@cli.command()
@click.argument("ring", required=False)
@click.option("--ideal", "ideal_file", default=None, help="Cross-check this finite quotient against the oracle.")
@json_option
@click.pass_context
@handled
def oracle(ctx, ring, ideal_file, as_json):
    """Brute-force decisions for a small finite ring.

    RING is e.g. Zmod(8), GFpoly(2, x^2+x) or prod(Zmod(4), GFpoly(2, x^2+x+1)).
    """
    if (ring is None) == (ideal_file is None):
        raise click.UsageError("give exactly one of RING or --ideal")
    r = Report("oracle", {"ring": ring, "ideal": ideal_file})
    if ideal_file:
        spec, I = _ideal(ctx, ideal_file)
        r.set("input", spec.to_json())
        rep = cross_check(I)
        r.set("result", rep.to_json())
        r.say(f"{rep.ring}: {rep.size} elements; agreement: {'yes' if rep.agree else 'NO'}")
        r.say(f"counts: {rep.counts}")
        r.say(f"UA (Groebner side): {rep.ua_groebner}; UA (oracle): {rep.ua_oracle}")
        for m in rep.mismatches[:10]:
            r.say(f"  mismatch: {m}")
        return r.finish(as_json, EXIT_DECIDED if rep.agree else EXIT_AUDIT)
    R = parse_ring(ring)
    res = {
        "ring": R.name, "size": R.size, "units": int(len(R.units())), "nilpotents": int(len(R.nilpotents())),
        "idempotents": int(len(R.idempotents())), "components": R.component_count(),
        "ua": R.decide_ua(), "ua_via_plus_one": R.decide_ua_via_plus_one(), "uu": R.decide_uu(),
        "locally_ua": R.decide_locally_ua(),
    }
    r.set("result", res)
    for k, v in res.items():
        r.say(f"{k}: {v}")
    return r.finish(as_json, EXIT_DECIDED)


# -- examples and audit -------------------------------------------------------------

@cli.command("paper-examples")
@click.option("--name", "names", multiple=True, type=click.Choice(sorted(worked.EXAMPLES)),
              help="Run only these examples (repeatable).")
@click.option("--n", "n", type=click.IntRange(1), default=50, show_default=True, help="Largest n for phi-psi.")
@click.option("--backend", type=click.Choice(["auto", "cython", "numpy"]), default="auto")
@json_option
@handled
def paper_examples(names, n, backend, as_json):
    """Run the bundled worked examples and check every claim."""
    names = names or tuple(worked.EXAMPLES)
    backend = None if backend == "auto" else backend
    r = Report("paper-examples", {"names": list(names), "n": n})
    results = []
    for name in names:
        fn = worked.EXAMPLES[name]
        res = fn(n) if name == "phi-psi" else (fn() if name == "refconn" else fn(backend=backend))
        results.append(res)
        r.say(f"{'PASS' if res.passed else 'FAIL'}  {res.name}  ({res.seconds:.2f} s)")
        for label, ok, detail in res.checks:
            r.say(f"    [{'ok' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else ""))
    r.set("result", [res.to_json() for res in results])
    return r.finish(as_json, EXIT_DECIDED if all(res.passed for res in results) else EXIT_AUDIT)


def _audit_witness(w: dict):
    kind = w["kind"]
    if kind == "finite_set":
        from .fields import parse_field
        from .poly import PolyRing

        F = parse_field(w["field"])
        ring = PolyRing(F, tuple(w["vars"]))
        f = ring.parse(w["element"])
        vals = [evaluate_raw(f, F, [F.parse(c).raw for c in p]) for p in w["points"]]
        if any(F.is_zero(v) for v in vals) or len(set(vals)) < 2:
            raise CertificateError("finite-set witness is zero somewhere or constant")
        return
    spec = IdealFile.from_json(w["input"])
    I = spec.ideal()
    u = element(I, I.ring.parse(w["element"]))
    if kind == "ua":
        verify_ua_witness(u)
    elif kind == "uu":
        verify_uu_witness(u)
    elif kind == "fundamental":
        verify_fundamental_witness(u)
    elif kind == "inverse":
        inv = element(I, I.ring.parse(w["inverse"]))
        if not (u * inv).rep == I.ring.one():
            raise CertificateError("claimed inverse does not multiply to 1")
    else:
        raise CertificateError(f"unknown witness kind {kind!r}")


def _audit_certificate(c: dict):
    spec = IdealFile.from_json(c["input"])
    I = spec.ideal()
    ring = I.ring
    data = c["certificate"]
    comps = [Ideal(ring, [ring.parse(g) for g in gens]) for gens in data["components"]]
    cofactors = {}
    for entry in data["cofactors"]:
        j, k = entry["pair"]
        a, b = ring.parse(entry["a"]), ring.parse(entry["b"])
        if not (comps[j].contains(a) and comps[k].contains(b) and a + b == ring.one()):
            raise CertificateError(f"cofactors for components {j}, {k} do not check")
        cofactors[(j, k)] = (a, b)
    expected = {(j, k) for j in range(len(comps)) for k in range(j + 1, len(comps))}
    if set(cofactors) != expected:
        raise CertificateError("cofactors are missing for some pair of components")
    if Ideal(ring, [ring.parse(g) for g in data["ambient"]]) != I:
        raise CertificateError("certificate ambient ideal differs from its input")
    verify_crt(DecompositionCertificate(I, comps))


@cli.command("self-audit")
@click.argument("report", type=click.Path(exists=True, dir_okay=False))
@json_option
@handled
def self_audit(report, as_json):
    """Re-verify every witness and certificate in a JSON report."""
    try:
        data = json.loads(Path(report).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{report}: not JSON ({exc.msg})", exc.lineno, exc.colno) from None
    if data.get("schema") != SCHEMA:
        raise ParseError(f"{report}: unsupported schema {data.get('schema')!r}")
    r = Report("self-audit", {"report": report})
    outcomes = []
    for w in data.get("witnesses", []):
        try:
            _audit_witness(w)
            outcomes.append({"item": f"witness {w['kind']} {w['element']}", "ok": True})
        except (UATError, ValueError, KeyError) as exc:
            outcomes.append({"item": f"witness {w.get('kind')} {w.get('element')}", "ok": False, "error": str(exc)})
    for c in data.get("certificates", []):
        try:
            _audit_certificate(c)
            outcomes.append({"item": "certificate", "ok": True})
        except (UATError, ValueError, KeyError) as exc:
            outcomes.append({"item": "certificate", "ok": False, "error": str(exc)})
    r.set("result", {"checked": len(outcomes), "failures": sum(not o["ok"] for o in outcomes), "items": outcomes})
    for o in outcomes:
        r.say(f"[{'ok' if o['ok'] else 'FAIL'}] {o['item']}" + ("" if o["ok"] else f": {o['error']}"))
    r.say(f"{len(outcomes)} items checked")
    return r.finish(as_json, EXIT_DECIDED if all(o["ok"] for o in outcomes) else EXIT_AUDIT)


@cli.command("data")
@handled
def data_cmd():
    """List the bundled example files (usable by bare name)."""
    for name in bundled_files():
        if name.endswith((".ideal", ".pts")):
            click.echo(name)
    return EXIT_DECIDED


@cli.command("backends")
@handled
def backends_cmd():
    """Show the prefilter kernel backends."""
    click.echo(f"active: {kernels.BACKEND}")
    click.echo(f"available: {', '.join(kernels.available_backends())}")
    return EXIT_DECIDED


def main(argv=None):
    return cli.main(args=argv, prog_name="uat")


if __name__ == "__main__":  # pragma: no cover
    main()

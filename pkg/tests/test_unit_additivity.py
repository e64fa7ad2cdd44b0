import pytest

from uat.errors import NotZeroDimensional, WitnessRejected
from uat.fields import GF, QQ
from uat.ideals import Ideal
from uat.quotient import element
from uat.spectrum import split_by_idempotent
from uat.unit_additivity import (
    LOCALLY_UA, NOT_UA, NOT_UU, UA, UNKNOWN, UU, axiom_class_verdict, infer_ua_from_min_primes,
    locally_ua_from_decomposition, localize, localizes_to_zero, product_rule, structural_verdict, ua_refute,
    uu_refute, uu_verdict, verify_ua_witness, zero_dim_ua_decide,
)

from conftest import make_ideal


def test_circle_witness_over_qi(circle_qi):
    rep = ua_refute(circle_qi, 1, "gauss")
    assert rep.found
    assert rep.witness == element(circle_qi, circle_qi.ring.parse("X + i*Y"))
    assert rep.evidence["inverse"] == "X - i*Y"


def test_circle_over_q_exhausts(circle_q):
    rep = ua_refute(circle_q, 2, "small")
    assert rep.outcome == "exhausted"
    assert rep.tried == 5**5 - 1  # staircase 1, X, Y, XY, Y^2
    assert rep.only_constant_units


def test_verify_rejects_fake_witness(circle_q):
    with pytest.raises(WitnessRejected):
        verify_ua_witness(element(circle_q, circle_q.ring.parse("X")))
    with pytest.raises(WitnessRejected):
        verify_ua_witness(element(circle_q, circle_q.ring.parse("2")))  # 2 + 1 is a unit


def test_zero_ring_search_is_vacuous():
    I = make_ideal(QQ, "X", ["1"])
    rep = ua_refute(I, 1)
    assert rep.outcome == "exhausted" and rep.tried == 0


def test_aborts_on_check_cap(circle_qi):
    rep = ua_refute(circle_qi, 2, "gauss", max_checks=1, prefilter=False)
    assert rep.outcome in ("aborted", "witness")


@pytest.mark.parametrize("field,gens,status", [
    (QQ, ["X^2 - X"], NOT_UA),
    (GF(2), ["X^2 - X"], UA),
    (QQ, ["X^2 + 1"], UA),
    (GF(3), ["X^2 - X"], NOT_UA),
    (GF(2), ["X^3 + X"], UA),
    (GF(2), ["X^2"], UA),
    (GF(2), ["X^3 + 1"], NOT_UA),
    (QQ, ["X^3"], UA),
])
def test_zero_dim_decisions(field, gens, status):
    I = make_ideal(field, "X", gens)
    v = zero_dim_ua_decide(I)
    assert v.status == status
    if status == NOT_UA:
        verify_ua_witness(v.witness)


def test_zero_dim_requires_zero_dim():
    with pytest.raises(NotZeroDimensional):
        zero_dim_ua_decide(make_ideal(QQ, "XY", ["X*Y"]))


def test_product_and_locally_ua_rules():
    I = make_ideal(GF(2), "UT", ["U^2 - U", "T*(U - 1)"])
    cert = split_by_idempotent(I, I.ring.parse("U"))
    loc = locally_ua_from_decomposition(cert, [structural_verdict(c) for c in cert.components])
    assert loc.status == LOCALLY_UA
    uu = [uu_verdict(c) for c in cert.components]
    assert [v.status for v in uu] == [UU, UU]
    assert product_rule(cert, uu).status == UA


def test_product_rule_builds_witness_over_q():
    I = make_ideal(QQ, "UT", ["U^2 - U", "T*(U - 1)"])
    cert = split_by_idempotent(I, I.ring.parse("U"))
    uu = [uu_verdict(c) for c in cert.components]
    assert all(v.status == NOT_UU for v in uu)
    v = product_rule(cert, uu)
    assert v.status == NOT_UA
    verify_ua_witness(v.witness)


def test_min_prime_inference_never_refutes():
    I = make_ideal(QQ, "XY", ["X*Y"])
    R = I.ring
    primes = [Ideal(R, [R.parse("X")]), Ideal(R, [R.parse("Y")])]
    v = infer_ua_from_min_primes(I, primes, [structural_verdict(P) for P in primes], connectedness="asserted")
    assert v.status == UA
    v = infer_ua_from_min_primes(I, primes, [structural_verdict(P) for P in primes])
    assert v.status == UNKNOWN
    fake = [structural_verdict(P) for P in primes]
    fake[0].status = NOT_UA
    assert infer_ua_from_min_primes(I, primes, fake, connectedness="asserted").status == UNKNOWN


def test_uu_refute():
    I = make_ideal(QQ, "X", [])
    rep = uu_refute(I, 0, "list:0,1,-1,2")
    assert rep.found and str(rep.witness) == "-1"
    rep = uu_refute(make_ideal(GF(2), "X", []), 1)
    assert rep.outcome == "exhausted"


def test_axiom_class():
    assert axiom_class_verdict(make_ideal(QQ, "ZXY", ["Z - X*Y"], "lex")).status == UA
    assert axiom_class_verdict(make_ideal(QQ, "XY", ["X*Y - 1"])) is None


def test_localization():
    I = make_ideal(QQ, "T", [])
    L = localize(I, I.ring.parse("T"))
    assert L.basis_text() == ["T*Y - 1"]
    assert ua_refute(L, 1, "small").found
    N = make_ideal(QQ, "X", ["X^2"])
    assert localizes_to_zero(N, N.ring.parse("X"))
    assert localize(N, N.ring.parse("X")).is_unit_ideal

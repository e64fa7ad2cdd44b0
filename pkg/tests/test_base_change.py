import pytest

from uat.base_change import (
    extend_scalars, geometric_ua_refute, parse_extension_list, purely_inseparable_unit_check, same_leading_monomials,
    units_in_L_mod_nilpotents_check,
)
from uat.errors import InapplicableOperation, MalformedExtension
from uat.fields import GF, QQ
from uat.quotient import element
from uat.unit_additivity import localize

from conftest import make_ideal


def test_extension_list_parsing():
    assert parse_extension_list("t^2+1; t^3-2") == [(None, "t^2+1"), (None, "t^3-2")]
    assert parse_extension_list("i=t^2+1") == [("i", "t^2+1")]


def test_extend_scalars_keeps_leading_monomials(circle_q):
    J = extend_scalars(circle_q, "t^2+1", "i")
    assert J.ring.field.spec.startswith("QQ[i]")
    assert same_leading_monomials(circle_q, J)
    with pytest.raises(MalformedExtension):
        extend_scalars(circle_q, "t^2+1", "X")


def test_geometric_probe(circle_q):
    probe = geometric_ua_refute(circle_q, ["t^2+1"])
    assert probe.found and str(probe.witness) == "X + a*Y"
    probe = geometric_ua_refute(circle_q, ["t-1"])
    assert not probe.found and probe.per_extension[0][2].outcome == "exhausted"


def test_geometric_probe_on_zero_ring():
    I = make_ideal(QQ, "XY", ["1"])
    probe = geometric_ua_refute(I, ["t^2+1"])
    assert not probe.found and probe.per_extension[0][2].tried == 0


def test_units_mod_nilpotents(qi):
    J = make_ideal(qi, "XY", ["X^2 + Y^2 - 1"])
    v = units_in_L_mod_nilpotents_check(element(J, J.ring.parse("X + i*Y")), [1, 0])
    assert v.status == "no_for_all_candidates"
    assert "1 (point)" in v.tried
    N = make_ideal(QQ, "X", ["X^2"])
    v = units_in_L_mod_nilpotents_check(element(N, N.ring.parse("3 + X")), [0])
    assert v.status == "yes" and v.constant == QQ(3)
    with pytest.raises(ValueError):
        units_in_L_mod_nilpotents_check(element(N, N.ring.parse("X")))


def test_purely_inseparable_check():
    I = make_ideal(GF(2), "T", [])
    L = localize(I, I.ring.parse("T"))
    v = purely_inseparable_unit_check(element(L, L.ring.parse("T")), 3)
    assert v.status == "not_within_bound"
    D = make_ideal(GF(2), "X", ["X^2"])
    v = purely_inseparable_unit_check(element(D, D.ring.parse("1 + X")), 3)
    assert v.status == "yes" and v.exponent == 1
    with pytest.raises(InapplicableOperation):
        purely_inseparable_unit_check(element(make_ideal(QQ, "X", ["X^2"]), QQ(1)), 2)

import random

import pytest

from uat.errors import HypothesisViolation, WitnessRejected
from uat.fields import GF, QQ
from uat.fundamentality import (
    PointSet, bridge_report, finite_set_decide, fundamental_refute, nonvanishing_on_closure, vanishing_ideal,
    verify_fundamental_witness, zero_dim_fundamental,
)
from uat.ideals import Ideal
from uat.poly import PolyRing
from uat.quotient import element
from uat.unit_additivity import zero_dim_ua_decide

from conftest import make_ideal


def test_two_points_over_q():
    v = finite_set_decide(PointSet(QQ, [[0], [1]]))
    assert v.fundamental.value == "no" and v.locally_fundamental.value == "yes"
    assert v.fundamental.witness == "-X + 2"


def test_two_points_over_f2_uses_oracle():
    v = finite_set_decide(PointSet(GF(2), [[0], [1]]))
    assert v.fundamental.value == "yes"
    assert v.fundamental.evidence["oracle"]["all_units_constant"] is True


def test_single_point_and_empty_set():
    assert finite_set_decide(PointSet(QQ, [[3, 4]])).fundamental.value == "yes"
    assert finite_set_decide(PointSet(QQ, [], ("X",))).fundamental.value == "yes"


def test_points_in_plane_over_f5():
    v = finite_set_decide(PointSet(GF(5), [[0, 1], [1, 1], [2, 3]]))
    assert v.fundamental.value == "no"
    assert v.fundamental.evidence["oracle"]["all_units_constant"] is False


def test_duplicate_points_rejected():
    with pytest.raises(ValueError):
        PointSet(QQ, [[1], [1]])


def test_vanishing_ideal_of_points():
    assert vanishing_ideal(PointSet(QQ, [[0], [1]])).basis_text() == ["X^2 - X"]
    I = vanishing_ideal(PointSet(QQ, [[0, 0], [1, 2]]))
    assert all(g.evaluate([QQ(1), QQ(2)]) == QQ(0) for g in I.basis)


def test_fundamental_refute_two_points():
    I = make_ideal(QQ, "X", ["X^2 - X"])
    v = fundamental_refute(I, 1, "small")
    assert v.fundamental.value == "no"
    w = v.search.witness
    assert w.rep.total_degree() == 1
    ev = verify_fundamental_witness(element(I, I.ring.parse("X - 2")))
    assert ev["unit_ideal_with_f"]
    with pytest.raises(WitnessRejected):
        verify_fundamental_witness(element(I, I.ring.parse("X")))


def test_nonvanishing_on_closure_random():
    rng = random.Random(5)
    R = PolyRing(QQ, ("X", "Y"))
    zero = Ideal(R, [])
    assert not nonvanishing_on_closure(R.parse("X^2 + 4"), zero)
    for _ in range(10):
        f = R.from_coefficients({(rng.randint(0, 2), rng.randint(1, 2)): QQ.from_int(rng.randint(1, 5)),
                                 (0, 0): QQ.from_int(rng.randint(1, 5))})
        assert not nonvanishing_on_closure(f, zero)
    assert nonvanishing_on_closure(R.parse("3"), zero)


def test_bridge_requires_infinite_field():
    I = make_ideal(GF(3), "X", ["X^2 - X"])
    with pytest.raises(HypothesisViolation):
        bridge_report(I, zero_dim_ua_decide(I))


def test_zero_dim_fundamental_routes():
    v = zero_dim_fundamental(make_ideal(QQ, "X", ["X^2 - X"]))
    assert (v.fundamental.value, v.locally_fundamental.value) == ("no", "yes")
    v = zero_dim_fundamental(make_ideal(GF(2), "X", ["X^2 - X"]))
    assert (v.fundamental.value, v.locally_fundamental.value) == ("yes", "yes")
    v = zero_dim_fundamental(make_ideal(GF(2), "X", ["X^2"]))
    assert v.fundamental.value == "no"
    assert any("not radical" in n for n in v.bridge_notes)

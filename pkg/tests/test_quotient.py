import random

import pytest

from uat import univariate as up
from uat.fields import GF, QQ
from uat.ideals import Ideal
from uat.oracle import monic_polynomials, quotient_ring
from uat.poly import PolyRing
from uat.quotient import classify, element, is_idempotent, is_nilpotent, is_unit, pth_power_constant

from conftest import make_ideal


def test_circle_unit_and_inverse(circle_qi):
    R = circle_qi.ring
    u = element(circle_qi, R.parse("X + i*Y"))
    ok, inv = is_unit(u)
    assert ok and inv == element(circle_qi, R.parse("X - i*Y"))
    assert (u * inv).rep == R.one()
    c = classify(u + element(circle_qi, R.one()))
    assert c.verdict == "neither"
    assert c.evidence["non_unit_basis"]


def test_nilpotency_index():
    I = make_ideal(QQ, "X", ["X^5"])
    R = I.ring
    assert is_nilpotent(element(I, R.parse("X^2"))) == (True, 3)
    assert is_nilpotent(element(I, R.parse("X"))) == (True, 5)
    assert is_nilpotent(element(I, R.parse("X + 1")))[0] is False
    ok, inv = is_unit(element(I, R.parse("1 + X")))
    assert ok and inv.rep == R.parse("1 - X + X^2 - X^3 + X^4")


def test_idempotents():
    I = make_ideal(QQ, "X", ["X^2 - X"])
    R = I.ring
    assert is_idempotent(element(I, R.parse("X")))
    assert is_idempotent(element(I, R.parse("1 - X")))
    assert not is_idempotent(element(I, R.parse("2*X")))


def test_pth_power_constant():
    I = make_ideal(GF(2), "X", ["X^2"])
    R = I.ring
    e, c = pth_power_constant(element(I, R.parse("1 + X")), 3)
    assert e == 1 and c == GF(2)(1)
    J = make_ideal(GF(2), "X", ["X^2 + X + 1"])
    assert pth_power_constant(element(J, J.ring.parse("X")), 3) is None


def _sampled_quotients():
    rng = random.Random(2024)
    out = []
    for p in (2, 3, 5):
        for deg in (1, 2, 3, 4):
            polys = list(monic_polynomials(p, deg))
            rng.shuffle(polys)
            out.extend((p, f) for f in polys[:3])
    return out


@pytest.mark.parametrize("p,coeffs", _sampled_quotients())
def test_classify_agrees_with_oracle(p, coeffs):
    """Every element of F_p[X]/(f) gets the same label from both sides."""
    F = GF(p)
    ring = PolyRing(F, ("X",))
    I = Ideal(ring, [ring.from_coefficients({(k,): F.from_int(c) for k, c in enumerate(coeffs) if c % p})])
    R, elements = quotient_ring(I)
    units, nils = R.unit_mask(), R.nilpotent_mask()
    for idx, u in enumerate(elements):
        expect = "unit" if units[idx] else ("nilpotent" if nils[idx] else "neither")
        assert classify(u).verdict == expect, (coeffs, str(u))

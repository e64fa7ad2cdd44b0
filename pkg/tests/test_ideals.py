import random

import pytest
import sympy

from uat.errors import BudgetExceeded
from uat.fields import GF, QQ
from uat.ideals import (
    Budget, Ideal, eliminate, equal, ideal_sum, intersect, is_zero_dimensional, member, normal_monomials,
    quotient, quotient_basis, radical_member, saturate, unit_cofactors,
)
from uat.poly import PolyRing

from conftest import make_ideal


def _canon(polys, names):
    return sorted(str(sympy.expand(sympy.sympify(p.replace("^", "**")))) for p in polys)


CASES = [
    (["X^2 + Y^2 - 1", "X*Y - 1"], "XY"),
    (["X*Y*Z - Z", "X^2 - Y"], "XYZ"),
    (["X^3 - 2*X*Y", "X^2*Y - 2*Y^2 + X"], "XY"),
    (["X*Y - Z^2", "Y^2 - X*Z"], "XYZ"),
]


@pytest.mark.parametrize("gens,names", CASES)
@pytest.mark.parametrize("order", ["grevlex", "lex"])
def test_reduced_basis_matches_sympy(gens, names, order):
    I = make_ideal(QQ, names, gens, order)
    ours = _canon(I.basis_text(), names)
    syms = sympy.symbols(" ".join(names))
    G = sympy.groebner([sympy.sympify(g.replace("^", "**")) for g in gens], *syms, order=order)
    theirs = sorted(str(sympy.expand(g / sympy.Poly(g, *syms).LC(order=order))) for g in G.exprs)
    assert ours == theirs


def test_reduced_basis_mod_p_matches_sympy():
    gens = ["X^2 + Y^2 - 1", "X*Y + 1"]
    I = make_ideal(GF(5), "XY", gens)
    syms = sympy.symbols("X Y")
    G = sympy.groebner([sympy.sympify(g.replace("^", "**")) for g in gens], *syms, order="grevlex", modulus=5)
    assert len(G.exprs) == len(I.basis)
    lms = sorted(sympy.Poly(g, *syms).monoms(order="grevlex")[0] for g in G.exprs)
    assert lms == sorted(I.leading_monomials())


def test_membership_and_radical():
    I = make_ideal(QQ, "XY", ["X^2", "Y^3"])
    R = I.ring
    assert member(R.parse("X^2*Y + Y^4"), I)
    assert not member(R.parse("X*Y"), I)
    assert radical_member(R.parse("X + Y"), I)
    assert not radical_member(R.parse("X + 1"), I)


def test_unit_cofactors_reconstruct_one():
    R = PolyRing(QQ, ("X", "Y"))
    gens = [R.parse("X*Y - 1"), R.parse("X")]
    cof = unit_cofactors(gens, R)
    total = R.zero()
    for c, g in zip(cof, gens):
        total = total + c * g
    assert total == R.one()
    assert unit_cofactors([R.parse("X"), R.parse("Y")], R) is None


def test_intersection_and_sum():
    I = make_ideal(QQ, "XYZ", ["X*Y*Z - Z"])
    R = I.ring
    P1, P2 = Ideal(R, [R.parse("Z")]), Ideal(R, [R.parse("X*Y - 1")])
    assert equal(intersect(P1, P2), I)
    assert not ideal_sum(P1, P2).is_unit_ideal
    assert ideal_sum(Ideal(R, [R.parse("X")]), Ideal(R, [R.parse("X - 1")])).is_unit_ideal


def test_elimination_twisted_cubic():
    I = make_ideal(QQ, ["T", "X", "Y", "Z"], ["X - T", "Y - T^2", "Z - T^3"], "lex")
    E = eliminate(I, 1)
    R = E.ring
    assert E.contains(R.parse("Y - X^2")) and E.contains(R.parse("Z - X*Y"))
    assert not E.contains(R.parse("Z - X"))


def test_quotient_and_saturation():
    I = make_ideal(QQ, "XY", ["X^2*Y", "X*Y^2"])
    R = I.ring
    Q = quotient(I, R.parse("X"))
    assert Q.contains(R.parse("X*Y")) and not Q.contains(R.parse("Y"))
    S = saturate(I, R.parse("X"))
    assert S.contains(R.parse("Y"))


def test_zero_dimensional_staircase():
    I = make_ideal(QQ, "XY", ["X^2 - 1", "Y^3 - X"])
    assert is_zero_dimensional(I)
    assert len(quotient_basis(I)) == 6
    assert not is_zero_dimensional(make_ideal(QQ, "XY", ["X*Y"]))
    monos = normal_monomials(make_ideal(QQ, "XY", ["X^2 + Y^2 - 1"]), 2)
    assert (2, 0) not in monos and (0, 2) in monos and len(monos) == 5


def test_budget_exceeded_is_typed():
    with pytest.raises(BudgetExceeded):
        R = PolyRing(QQ, ("X", "Y", "Z"))
        Ideal(R, [R.parse("X^5 + Y^4 + Z^3 - 1"), R.parse("X^3 + Y^3 + Z^2 - 1"), R.parse("X*Y*Z - 2")],
              Budget(max_pairs=3))


def test_random_membership_property():
    rng = random.Random(3)
    I = make_ideal(GF(7), "XY", ["X^2 + Y^2 - 1", "X^3 - Y"])
    R = I.ring
    g1, g2 = I.generators
    for _ in range(10):
        a = R.from_coefficients({(rng.randint(0, 2), rng.randint(0, 2)): R.field.from_int(rng.randint(1, 6))})
        b = R.from_coefficients({(rng.randint(0, 2), rng.randint(0, 2)): R.field.from_int(rng.randint(1, 6))})
        assert I.contains(a * g1 + b * g2)

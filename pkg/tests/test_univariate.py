import random

import pytest
import sympy
from hypothesis import given, strategies as st

from uat import univariate as up
from uat.fields import GF, QQ
from uat.errors import FactorizationBudgetExceeded

x = sympy.symbols("x")


def to_sympy(F, f):
    return sympy.Poly(list(reversed([int(c) if F.characteristic else sympy.Rational(c.numerator, c.denominator)
                                     for c in f])), x)


def sympy_factor_degrees(F, f):
    P = to_sympy(F, f)
    if F.characteristic:
        P = sympy.Poly(P.as_expr(), x, modulus=F.characteristic)
    _, facs = P.factor_list()
    return sorted((f.degree(), e) for f, e in facs)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_factor_matches_sympy_mod_p(p):
    F = GF(p)
    rng = random.Random(p)
    for _ in range(25):
        deg = rng.randint(1, 8)
        f = [F.random(rng) for _ in range(deg)] + [F.one]
        lc, facs = up.factor(F, f)
        assert sorted((up.degree(g), e) for g, e in facs) == sympy_factor_degrees(F, f)
        prod = [lc]
        for g, e in facs:
            prod = up.mul(F, prod, up.power(F, g, e))
        assert up.trim(F, prod) == up.trim(F, f)


def test_factor_matches_sympy_over_q():
    rng = random.Random(11)
    for _ in range(20):
        a = [QQ.from_int(rng.randint(-3, 3)) for _ in range(rng.randint(2, 4))]
        b = [QQ.from_int(rng.randint(-3, 3)) for _ in range(rng.randint(2, 4))]
        f = up.trim(QQ, up.mul(QQ, a, b))
        if up.degree(f) < 1:
            continue
        lc, facs = up.factor(QQ, f)
        assert sorted((up.degree(g), e) for g, e in facs) == sympy_factor_degrees(QQ, f)


def test_irreducible_over_extension():
    F = GF(2).extend("w", [GF(2).one, GF(2).one, GF(2).one])
    # t^2 + t + 1 splits over GF(4)
    _, facs = up.factor(F, [F.one, F.one, F.one])
    assert [up.degree(g) for g, _ in facs] == [1, 1]


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_xgcd_bezout(a, b):
    F = QQ
    A = up.trim(F, [F.from_int(c) for c in a])
    B = up.trim(F, [F.from_int(c) for c in b])
    if not A and not B:
        return
    g, s, t = up.xgcd(F, A, B)
    assert up.trim(F, up.add(F, up.mul(F, s, A), up.mul(F, t, B))) == g


def test_squarefree_decomposition_char_p():
    F = GF(3)
    # (x+1)^3 * x^2 in GF(3)
    f = up.mul(F, up.power(F, [F.one, F.one], 3), [F.zero, F.zero, F.one])
    dec = up.squarefree_decomposition(F, f)
    assert sorted(i for _, i in dec) == [2, 3]


def test_budget_is_typed():
    F = QQ
    # Swinnerton-Dyer style polynomial with many modular factors
    f = [F.from_int(c) for c in (576, 0, -960, 0, 352, 0, -40, 0, 1)]
    try:
        _, facs = up.factor(F, f, combo_budget=1)
    except FactorizationBudgetExceeded:
        return
    assert sum(up.degree(g) * e for g, e in facs) == 8

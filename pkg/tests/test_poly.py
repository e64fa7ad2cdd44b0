import pytest
import sympy
from hypothesis import given, strategies as st

from uat.errors import ParseError, UnknownSymbol
from uat.fields import GF, QQ
from uat.poly import MonomialOrder, PolyRing

R = PolyRing(QQ, ("X", "Y", "Z"))
X, Y, Z = sympy.symbols("X Y Z")

terms = st.lists(
    st.tuples(st.integers(-4, 4), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), min_size=0, max_size=5
)


def build(ts):
    f = R.zero()
    e = sympy.Integer(0)
    for c, a, b, d in ts:
        f = f + R.monomial((a, b, d)).scalar_mul(QQ.from_int(c))
        e += c * X**a * Y**b * Z**d
    return f, sympy.expand(e)


def to_sympy(f):
    return sympy.expand(sympy.sympify(str(f).replace("^", "**")))


@given(terms, terms)
def test_arithmetic_matches_sympy(a, b):
    f, fe = build(a)
    g, ge = build(b)
    assert to_sympy(f * g) == sympy.expand(fe * ge)
    assert to_sympy(f - g) == sympy.expand(fe - ge)


@given(terms)
def test_parse_format_round_trip(a):
    f, _ = build(a)
    assert R.parse(str(f)) == f


def test_orders():
    lex = PolyRing(QQ, ("X", "Y"), "lex")
    grev = PolyRing(QQ, ("X", "Y"), "grevlex")
    assert lex.parse("X + Y^3").leading_monomial == (1, 0)
    assert grev.parse("X + Y^3").leading_monomial == (0, 3)
    blk = PolyRing(QQ, ("T", "X", "Y"), MonomialOrder.parse("block(1)"))
    assert blk.parse("T + X^5").leading_monomial == (1, 0, 0)


def test_parse_errors_carry_columns():
    with pytest.raises(UnknownSymbol):
        R.parse("X + W")
    with pytest.raises(ParseError) as info:
        R.parse("X + * Y")
    assert info.value.column >= 3


def test_field_generators_in_polynomials(qi):
    ring = PolyRing(qi, ("X", "Y"))
    f = ring.parse("(X + i*Y)*(X - i*Y)")
    assert f == ring.parse("X^2 + Y^2")


def test_finite_field_coefficients_reduce():
    ring = PolyRing(GF(3), ("X",))
    assert ring.parse("4*X + 3") == ring.parse("X")
    assert ring.parse("X")**3 == ring.parse("X^3")


def test_evaluate_and_to_ring(qi):
    f = R.parse("X^2 - 2*Y*Z + 1/2")
    assert f.evaluate([QQ(1), QQ(2), QQ(3)]) == QQ(1) - 12 + QQ(1) / 2
    big = R.with_field(qi)
    assert str(f.to_ring(big)) == str(f)

import pytest

from uat.errors import (
    ComaximalityFailure, ContainmentFailure, NotAnIdempotent, NotZeroDimensional, TrivialIdempotent,
    UnverifiedCertificate,
)
from uat.fields import GF, QQ
from uat.ideals import Ideal, intersect
from uat.spectrum import (
    DecompositionCertificate, split_by_idempotent, verify_crt, verify_minimal_primes, zero_dim_components,
    zero_dim_radical,
)

from conftest import make_ideal


def test_split_by_idempotent_components():
    I = make_ideal(GF(2), "UT", ["U^2 - U", "T*(U - 1)"])
    R = I.ring
    cert = split_by_idempotent(I, R.parse("U"))
    assert cert.verified
    texts = sorted(tuple(c.basis_text()) for c in cert.components)
    assert texts == [("U", "T"), ("U + 1",)]
    e0 = cert.idempotent(0)
    assert I.reduce(e0 * e0 - e0).is_zero()


def test_split_rejects_bad_idempotents():
    I = make_ideal(QQ, "X", ["X^2 - X"])
    R = I.ring
    with pytest.raises(NotAnIdempotent):
        split_by_idempotent(I, R.parse("2*X"))
    with pytest.raises(TrivialIdempotent):
        split_by_idempotent(I, R.one())


@pytest.mark.parametrize("gens,count", [
    (["X^2 - X"], 2),
    (["X^2 + 1"], 1),
    (["X^3*(X - 2)^2*(X^2 + 1)"], 3),
    (["X^2 - 1", "Y^2 - 4"], 4),
    (["X^2 - 2", "Y^2 - 2"], 2),
])
def test_zero_dim_components_over_q(gens, count):
    names = "XY" if any("Y" in g for g in gens) else "X"
    I = make_ideal(QQ, names, gens)
    cert = zero_dim_components(I)
    assert cert.verified and len(cert.components) == count
    meet = cert.components[0]
    for c in cert.components[1:]:
        meet = intersect(meet, c)
    # the components cut out the same set: their intersection has the same radical
    rad = zero_dim_radical(I)
    assert all(rad.contains(g) for g in zero_dim_radical(meet).basis)


def test_dimensions_add_up():
    I = make_ideal(QQ, "X", ["X^3*(X - 2)^2*(X^2 + 1)"])
    cert = zero_dim_components(I)
    assert sum(cert.dimensions()) == 7


def test_not_zero_dimensional():
    with pytest.raises(NotZeroDimensional):
        zero_dim_components(make_ideal(QQ, "XY", ["X*Y"]))


def test_verify_crt_failures():
    I = make_ideal(QQ, "X", ["X^2"])
    R = I.ring
    with pytest.raises(ComaximalityFailure):
        verify_crt(DecompositionCertificate(I, [Ideal(R, [R.parse("X")]), Ideal(R, [R.parse("X")])]))
    with pytest.raises(ContainmentFailure):
        verify_crt(DecompositionCertificate(I, [Ideal(R, [R.parse("X - 1")]), Ideal(R, [R.parse("X")])]))
    with pytest.raises(UnverifiedCertificate):
        DecompositionCertificate(I, [Ideal(R, [R.parse("X")])]).idempotent(0)


def test_minimal_primes():
    I = make_ideal(QQ, "XYZ", ["X*Y*Z - Z"])
    R = I.ring
    good = verify_minimal_primes(I, [Ideal(R, [R.parse("Z")]), Ideal(R, [R.parse("X*Y - 1")])])
    assert good.passed
    bad = verify_minimal_primes(I, [Ideal(R, [R.parse("Z")])])
    assert not bad.passed
    wrong = verify_minimal_primes(I, [Ideal(R, [R.parse("X")]), Ideal(R, [R.parse("Z")])])
    assert not wrong.passed

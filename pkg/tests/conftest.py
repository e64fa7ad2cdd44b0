import os

import pytest
from hypothesis import HealthCheck, settings

from uat.fields import GF, QQ, parse_field
from uat.ideals import Ideal
from uat.poly import PolyRing

settings.register_profile("uat", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "uat"))


def make_ideal(field, variables, gens, order="grevlex"):
    F = parse_field(field) if isinstance(field, str) else field
    ring = PolyRing(F, tuple(variables), order)
    return Ideal(ring, [ring.parse(g) for g in gens])


@pytest.fixture
def qi():
    return parse_field("QQ[i]/(i^2+1)")


@pytest.fixture
def circle_qi():
    return make_ideal("QQ[i]/(i^2+1)", "XY", ["X^2 + Y^2 - 1"])


@pytest.fixture
def circle_q():
    return make_ideal(QQ, "XY", ["X^2 + Y^2 - 1"])


@pytest.fixture
def f2():
    return GF(2)

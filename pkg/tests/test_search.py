import numpy as np
import pytest
from hypothesis import given, strategies as st

from uat import kernels
from uat._kernels_py import survivors as numpy_survivors
from uat.fields import GF, QQ
from uat.ideals import normal_monomials
from uat.points import build_tensor, sample, sample_points
from uat.quotient import element, is_unit
from uat.search import CandidateSearch, candidate_count, enumerate_candidates, parse_pool

from conftest import make_ideal

BACKENDS = kernels.available_backends()


@pytest.mark.parametrize("m,k", [(1, 2), (3, 5), (6, 5), (4, 9)])
def test_candidate_count_formula(m, k):
    assert candidate_count(m, k) == k**m - 1


@pytest.mark.parametrize("spec,deg", [("small", 1), ("small", 2), ("list:1,-1", 3)])
def test_enumeration_matches_count(circle_q, spec, deg):
    pool = parse_pool(spec, QQ)
    monos = normal_monomials(circle_q, deg)
    listed = list(enumerate_candidates(circle_q, deg, pool))
    assert len(listed) == candidate_count(len(monos), len(pool))
    assert len(set(listed)) == len(listed)


@pytest.mark.parametrize("backend", BACKENDS)
def test_unfiltered_search_visits_everything(circle_q, backend):
    pool = parse_pool("small", QQ)
    search = CandidateSearch(circle_q, 1, pool, prefilter=False, backend=backend)
    got = [f for _, f in search]
    assert got == list(enumerate_candidates(circle_q, 1, pool))
    assert search.enumerated == search.total


def test_pools():
    assert len(parse_pool("small", QQ)) == 5
    assert len(parse_pool("all", GF(5))) == 5
    assert len(parse_pool("gauss", QQ.extend("i", [QQ.one, QQ.zero, QQ.one]))) == 9
    assert parse_pool("list:0,1,1,2", QQ).texts() == ["0", "1", "2"]
    with pytest.raises(ValueError):
        parse_pool("all", QQ)
    with pytest.raises(ValueError):
        parse_pool("nope", QQ)


def test_sample_points_lie_on_v(circle_q):
    pts = sample_points(circle_q, QQ)
    assert len(pts) >= 2
    for x, y in pts:
        assert QQ.add(QQ.mul(x, x), QQ.mul(y, y)) == QQ.one


@pytest.mark.parametrize("gens,names,field,deg,spec", [
    (["X^2 + Y^2 - 1"], "XY", QQ, 2, "small"),
    (["X*Y*Z - Z"], "XYZ", QQ, 1, "small"),
    (["X*Y - 1"], "XY", GF(3), 2, "all"),
    (["X^2"], "X", GF(5), 1, "all"),
])
def test_prefilter_keeps_every_unit(gens, names, field, deg, spec):
    """Soundness: no true unit is ever filtered out."""
    I = make_ideal(field, names, gens)
    pool = parse_pool(spec, field)
    kept = {f for _, f in CandidateSearch(I, deg, pool)}
    for f in enumerate_candidates(I, deg, pool):
        if is_unit(element(I, f))[0]:
            assert f in kept, str(f)


def _random_tensor(draw, modulus):
    P = draw(st.integers(0, 5))
    m = draw(st.integers(1, 3))
    K = draw(st.integers(1, 4))
    D = draw(st.integers(1, 2))
    hi = modulus if modulus else 4
    lo = 0 if modulus else -3
    vals = np.array(draw(st.lists(st.integers(lo, hi - 1), min_size=P * m * K * D, max_size=P * m * K * D)),
                    dtype=np.int64).reshape(P, m, K, D)
    anchor = []
    for p in range(P):
        anchor.append(draw(st.integers(0, p)) if p and draw(st.booleans()) else p)
    # anchors must point at themselves or at an earlier self-anchored row
    anchor = [a if anchor[a] == a else p for p, a in enumerate(anchor)]
    return vals, np.array(anchor, dtype=np.int64)


def _brute(vals, anchor, modulus):
    P, m, K, D = vals.shape
    keep = []
    for idx in range(K**m):
        digits, r = [], idx
        for _ in range(m):
            digits.append(r % K)
            r //= K
        digits.reverse()
        ok = True
        sums = []
        for p in range(P):
            s = sum(vals[p, j, digits[j]] for j in range(m))
            if modulus:
                s = s % modulus
            sums.append(tuple(int(v) for v in s))
        for p in range(P):
            if anchor[p] == p:
                if all(v == 0 for v in sums[p]):
                    ok = False
            elif sums[p] != sums[anchor[p]]:
                ok = False
        if ok:
            keep.append(idx)
    return keep


@pytest.mark.parametrize("modulus", [0, 2, 7])
@given(data=st.data())
def test_kernels_agree_with_brute_force(modulus, data):
    vals, anchor = _random_tensor(data.draw, modulus)
    expect = _brute(vals, anchor, modulus)
    assert list(numpy_survivors(vals, anchor, modulus)) == expect
    for backend in BACKENDS:
        assert list(kernels.survivors(vals, anchor, modulus, backend)) == expect


def test_build_tensor_shapes(circle_q):
    groups = sample(circle_q, 1)
    monos = normal_monomials(circle_q, 1)
    pool = parse_pool("small", QQ).nonzero
    vals, anchor, modulus = build_tensor(groups, circle_q.ring, monos, pool)
    assert vals.shape[1:3] == (len(monos), len(pool))
    assert vals.shape[0] == len(anchor) and modulus == 0
    assert (anchor <= np.arange(len(anchor))).all()

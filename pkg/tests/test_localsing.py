import random

import pytest
from hypothesis import given, settings, strategies as st

from freecurves.errors import NotSingularAtOrigin, PointNotOnCurve, PointNotSingular
from freecurves.localsing import (
    LocalInvariants,
    classify_local,
    local_intersection_multiplicity,
    local_invariants_at,
    local_milnor,
    local_tjurina,
)
from freecurves.numfield import QQ
from freecurves.polyring import BivariatePoly, parse_poly


def biv(terms):
    return BivariatePoly(QQ, {k: QQ(v) for k, v in terms.items()})


@pytest.mark.parametrize("a,b", [(2, 2), (2, 5), (3, 3), (3, 4), (4, 4), (3, 7), (5, 5)])
def test_brieskorn_pham(a, b):
    # Milnor-Orlik: mu = (a-1)(b-1) for x^a + y^b, quasi-homogeneous so tau = mu
    g = biv({(a, 0): 1, (0, b): 1})
    assert local_milnor(g) == (a - 1) * (b - 1)
    assert local_tjurina(g) == (a - 1) * (b - 1)


def test_semi_quasi_homogeneous_drop():
    g = biv({(4, 0): 1, (0, 5): 1, (2, 3): 1})
    assert local_milnor(g) == 12
    assert local_tjurina(g) == 11


def test_smooth_point_rejected():
    with pytest.raises(NotSingularAtOrigin):
        local_milnor(biv({(1, 0): 1, (0, 2): 1}))


def test_intersection_multiplicity():
    # parabola v = u^2 against the tangent v = 0
    assert local_intersection_multiplicity(biv({(0, 1): 1, (2, 0): -1}), biv({(0, 1): 1})) == 2
    assert local_intersection_multiplicity(biv({(1, 0): 1}), biv({(0, 1): 1})) == 1


def test_projective_point_checks():
    f = parse_poly("x*y*z")
    with pytest.raises(PointNotOnCurve):
        local_invariants_at(f, (1, 1, 1))
    with pytest.raises(PointNotSingular):
        local_invariants_at(f, (1, 1, 0))
    inv = local_invariants_at(f, (0, 0, 1))
    assert classify_local(inv).key == "A1"


def test_naive_terao_point():
    p = (0, 0, 1)
    one = local_invariants_at(parse_poly("x*y*(y^2+x*z)*(y^2+x^2+2*x*z)"), p, 4)
    two = local_invariants_at(parse_poly("x*(x-13*y)*(y^2+x*z)*(y^2+x^2+2*x*z)"), p, 4)
    assert (one.mu, one.tau, one.multiplicity) == (15, 15, 4)
    assert (two.mu, two.tau) == (15, 14)
    assert not two.quasi_homogeneous


def test_labels():
    assert classify_local(LocalInvariants(3, 3, 2, 2)).key == "A3"
    assert classify_local(LocalInvariants(4, 4, 3, 3)).key == "D4"
    assert classify_local(LocalInvariants(9, 9, 4, 4)).key == "X9"
    assert classify_local(LocalInvariants(25, 25, 6, 6)).key == "OrdinaryM(6)"
    lab = classify_local(LocalInvariants(16, 15, 5, 5))
    assert lab.key == "OrdinaryM(5)" and "not quasi-homogeneous" in lab.note
    assert classify_local(LocalInvariants(15, 14, 4, 4)).key == "Other(mu=15,tau=14,mult=4,branches=4)"


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_ordinary_points_of_lines(seed):
    rng = random.Random(seed)
    m = rng.randint(2, 5)
    slopes = rng.sample(range(-20, 21), m)
    g = BivariatePoly(QQ, {(0, 0): QQ(1)})
    for s in slopes:
        g = g * biv({(0, 1): 1, (1, 0): -s})
    assert local_milnor(g) == (m - 1) ** 2
    assert local_tjurina(g) == (m - 1) ** 2


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=7), st.integers(min_value=0, max_value=10 ** 6))
def test_a_k_under_linear_change(k, seed):
    # v^2 - u^(k+1) after (u, v) -> (u + c v, v + e u) keeps mu = tau = k
    rng = random.Random(seed)
    c, e = rng.randint(-3, 3), rng.randint(-3, 3)
    if 1 - c * e == 0:
        return
    U = biv({(1, 0): 1, (0, 1): c})
    V = biv({(0, 1): 1, (1, 0): e})
    g = V * V
    p = BivariatePoly(QQ, {(0, 0): QQ(1)})
    for _ in range(k + 1):
        p = p * U
    g = g - p
    assert local_milnor(g) == k
    assert local_tjurina(g) == k

import random

import pytest
from hypothesis import given, settings, strategies as st

from freecurves.errors import NotASyzygy, NotReduced
from freecurves.numfield import QQ, adjoin_root
from freecurves.polyring import HomogPoly, parse_poly, substitute_linear
from freecurves.syzygy import (
    Resolution,
    SyzygyVector,
    ar_basis,
    ar_contains,
    ar_dimension,
    classify,
    is_free,
    is_nearly_free,
    koszul_relations,
    mdr,
    minimal_generators,
    resolution,
    saito_check,
    saito_constant,
    total_tjurina,
)

from oracles import ar_dimension_naive, milnor_algebra_dim

SMALL = [
    "x*y*z",
    "x*y",
    "x*y*(x+y)",
    "x*y*z*(x+y+z)",
    "x^2+y^2+z^2",
    "x^3+y^3+z^3",
    "y^2*z-x^3-x^2*z",
    "(x^2-y*z)*(x^2+z^2-y*z)",
    "x*y*(y^2+x*z)",
    "y^2*z-x^3",
]


@pytest.mark.parametrize("text", SMALL)
def test_ar_dimension_matches_naive_elimination(text):
    f = parse_poly(text)
    for r in range(0, f.degree + 1):
        assert ar_dimension(f, r) == ar_dimension_naive(f, r), r


@pytest.mark.parametrize("text", SMALL)
def test_tau_matches_groebner(text):
    f = parse_poly(text)
    d = f.degree
    assert total_tjurina(f) == milnor_algebra_dim(f, 3 * d - 5)


def test_triangle_saito():
    f = parse_poly("x*y*z")
    g1, g2 = minimal_generators(f)
    assert saito_check(f, g1, g2)
    assert saito_constant(f, g1, g2) == 3


def test_saito_rejects_non_relation():
    f = parse_poly("x*y*z")
    x = HomogPoly.variable(QQ, "x")
    bad = SyzygyVector(1, x, x, x)
    with pytest.raises(NotASyzygy):
        saito_check(f, bad, bad)


def test_classification_small_cases():
    c = classify(parse_poly("x"))
    assert c.class_name == "Smooth"
    c = classify(parse_poly("x^2+y^2+z^2"))
    assert (c.class_name, c.exponents, c.tau) == ("NearlyFree", (1, 1, 1), 0)
    c = classify(parse_poly("x^3+y^3+z^3"))
    assert (c.class_name, c.exponents, c.subtype) == ("MSyzygy(3)", (2, 2, 2), "2A")
    assert is_free(parse_poly("x*y*z"))
    assert is_nearly_free(parse_poly("x^2+y^2+z^2"))
    assert not is_free(parse_poly("x^3+y^3+z^3"))


def test_non_reduced_rejected():
    with pytest.raises(NotReduced):
        mdr(parse_poly("x^2*y"))


def test_ar_basis_vectors_are_relations():
    f = parse_poly("x*y*(y^2+x*z)*(y^2+x^2+2*x*z)")
    for v in ar_basis(f, 3):
        assert v.check(f)
    assert len(ar_basis(f, 3)) == ar_dimension(f, 3)


def test_resolution_display():
    R = Resolution((4, 5, 5, 6), (6, 7))
    assert R.display() == "0 -> S(-7)+S(-6) -> S(-6)+S(-5)^2+S(-4) -> AR(f)"
    assert Resolution((0, 1), ()).display() == "0 -> S(-1)+S -> AR(f)"


def test_extension_field_curve():
    F = adjoin_root([1, 0, 1], "i")
    f = parse_poly("x*y*z*(x-i*y)*(x+i*y)", F)
    c = classify(f)
    assert c.exponents[0] + c.exponents[1] >= f.degree - 1
    assert c.tau == total_tjurina(f)


def random_arrangement(rng, n):
    forms = []
    while len(forms) < n:
        a, b, c = (rng.randint(-3, 3) for _ in range(3))
        L = HomogPoly.linear(QQ, QQ(a), QQ(b), QQ(c))
        if L.is_zero() or any(L.is_proportional(M) for M in forms):
            continue
        forms.append(L)
    f = forms[0]
    for L in forms[1:]:
        f = f * L
    return f


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_koszul_membership(seed):
    rng = random.Random(seed)
    f = random_arrangement(rng, rng.randint(2, 5))
    for v in koszul_relations(f):
        assert v.check(f)
        assert ar_contains(f, v)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_projective_invariance(seed):
    rng = random.Random(seed)
    f = random_arrangement(rng, rng.randint(3, 6))
    while True:
        M = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        try:
            g = substitute_linear(f, M)
            break
        except Exception:
            continue
    a, b = classify(f), classify(g)
    assert (a.mdr, a.tau, a.exponents) == (b.mdr, b.tau, b.exponents)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_resolution_euler_characteristic(seed):
    rng = random.Random(seed)
    f = random_arrangement(rng, rng.randint(3, 6))
    R = resolution(f)
    for r in range(0, 2 * f.degree):
        assert R.hilbert(r) == ar_dimension(f, r)

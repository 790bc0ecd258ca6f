import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from freecurves.errors import NotHomogeneous, PolySyntaxError, SingularMatrix, UnknownSymbol
from freecurves.numfield import QQ, adjoin_root
from freecurves.polyring import (
    HomogPoly,
    dehomogenize,
    graded_basis,
    is_reduced,
    parse_field_poly,
    parse_poly,
    substitute_linear,
)

X, Y, Z = sympy.symbols("x y z")
SQRT3 = adjoin_root([-3, 0, 1], "a")


def to_sympy(p: HomogPoly):
    return sum(sympy.Rational(c.to_rational().numerator, c.to_rational().denominator) * X ** i * Y ** j * Z ** k
               for (i, j, k), c in p.terms.items())


def test_graded_basis_order():
    assert graded_basis(1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert len(graded_basis(4)) == 15


def test_parse_and_print():
    p = parse_poly("(x - 3*z)^2 + (y - 4*z)^2 - 25*z^2")
    assert p.degree == 2
    assert str(p) == "x^2 - 6*x*z + y^2 - 8*y*z"
    assert parse_poly(str(p)) == p


def test_parse_with_generator():
    p = parse_poly("x + a*y", SQRT3)
    q = parse_poly("x - a*y", SQRT3)
    assert p * q == parse_poly("x^2 - 3*y^2", SQRT3)


def test_parse_errors_report_position():
    with pytest.raises(PolySyntaxError) as exc:
        parse_poly("x + * y", line=3)
    assert exc.value.line == 3 and exc.value.col == 5
    with pytest.raises(NotHomogeneous):
        parse_poly("x^2 + y")
    with pytest.raises(UnknownSymbol) as exc:
        parse_poly("x + w")
    assert exc.value.col == 5
    with pytest.raises(PolySyntaxError):
        parse_poly("x/0")


def test_field_poly_parse():
    assert parse_field_poly("a^2 - 5", "a") == [-5, 0, 1]
    with pytest.raises(UnknownSymbol):
        parse_field_poly("x^2 - 5", "x")


def test_dehomogenize_chart():
    p = parse_poly("x^2*z + y^3")
    g = dehomogenize(p, "z")
    assert g.order() == 2


def test_substitution_singular_matrix():
    with pytest.raises(SingularMatrix):
        substitute_linear(parse_poly("x*y"), [[1, 0, 0], [1, 0, 0], [0, 0, 1]])


def test_is_reduced_examples():
    assert is_reduced(parse_poly("x*y*z"))
    assert not is_reduced(parse_poly("x^2*y"))
    assert not is_reduced(parse_poly("(x+y+z)^2*(x-y)"))
    assert is_reduced(parse_poly("x^2 + y^2", SQRT3))


def random_poly(rng, d, terms=6):
    mons = list(graded_basis(d))
    return HomogPoly(QQ, d, {rng.choice(mons): QQ(rng.randint(-5, 5)) for _ in range(terms)})


@settings(max_examples=120, deadline=None)
@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=10 ** 6))
def test_euler_relation(d, seed):
    p = random_poly(random.Random(seed), d)
    x, y, z = (HomogPoly.variable(QQ, v) for v in "xyz")
    fx, fy, fz = p.gradient()
    assert x * fx + y * fy + z * fz == p.scale(d)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=0, max_value=10 ** 6))
def test_multiplication_matches_sympy(d, seed):
    rng = random.Random(seed)
    p, q = random_poly(rng, d), random_poly(rng, 5 - d)
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_squarefree_matches_sympy(seed):
    rng = random.Random(seed)
    factors = [random_poly(rng, rng.randint(1, 2), 3) for _ in range(rng.randint(1, 3))]
    factors = [f for f in factors if not f.is_zero()]
    if not factors:
        return
    if rng.random() < 0.4:
        factors.append(factors[0])
    p = factors[0]
    for f in factors[1:]:
        p = p * f
    sp = sympy.Poly(to_sympy(p), X, Y, Z)
    expected = all(m == 1 for _, m in sp.factor_list()[1])
    assert is_reduced(p) == expected


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_substitution_composes(seed):
    rng = random.Random(seed)
    p = random_poly(rng, 3)
    M = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
    N = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
    if sympy.Matrix(M).det() == 0 or sympy.Matrix(N).det() == 0:
        return
    MN = [[sum(M[i][k] * N[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    # p(M N v) = (p∘M)(N v)
    assert substitute_linear(substitute_linear(p, M), N) == substitute_linear(p, MN)

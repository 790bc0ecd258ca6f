from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from freecurves.errors import DegreeUnsupported, DivisionByZero, MixedFields, ProvablyReducible
from freecurves.numfield import (
    QQ,
    adjoin_root,
    cyclotomic_field,
    factor_univariate,
    rational_sqrt,
    roots_in_field,
)

SQRT5 = adjoin_root([-5, 0, 1], "a")
Z5, ZETA5 = cyclotomic_field(5, "e")

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def elements(F):
    return st.lists(rationals, min_size=F.degree, max_size=F.degree).map(F.from_coeffs)


def test_sqrt5_squares_to_5():
    a = SQRT5.gen()
    assert a * a == 5
    assert str(SQRT5) == "QQ(a), a^2 - 5 = 0"


def test_cyclotomic_minpolys():
    for n, deg in [(3, 2), (4, 2), (5, 4), (6, 2), (8, 4), (10, 4), (12, 4)]:
        F, z = cyclotomic_field(n)
        assert F.degree == deg
        assert z ** n == 1
        assert all(z ** k != 1 for k in range(1, n))
    F, z = cyclotomic_field(2)
    assert F is QQ and z == -1


def test_sixth_root_relation():
    F, e = cyclotomic_field(6, "e")
    assert e * e - e + 1 == 0


def test_reducible_quadratic_rejected():
    with pytest.raises(ProvablyReducible):
        adjoin_root([-4, 0, 1])


def test_degree_limit():
    with pytest.raises(DegreeUnsupported):
        adjoin_root([1, 0, 0, 0, 0, 1])


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        SQRT5.one() / SQRT5.zero()
    with pytest.raises(DivisionByZero):
        ZETA5.field.zero().inverse()


def test_mixed_fields():
    with pytest.raises(MixedFields):
        SQRT5.gen() + ZETA5


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None


def test_factor_matches_sympy_over_qq():
    u = sympy.Symbol("u")
    poly = (u - 1) ** 2 * (u ** 2 + 1) * (3 * u + 2)
    coeffs = [QQ(Fraction(int(c))) for c in reversed(sympy.Poly(poly, u).all_coeffs())]
    facs = factor_univariate(QQ, coeffs)
    got = sorted((len(f) - 1, m) for f, m in facs)
    assert got == [(1, 1), (1, 2), (2, 1)]


def test_roots_in_extension():
    # u^2 - 5 splits over QQ(sqrt 5)
    roots, rest = roots_in_field(SQRT5, [SQRT5(-5), SQRT5(0), SQRT5(1)])
    assert rest == []
    a = SQRT5.gen()
    assert {r for r, _ in roots} == {a, -a}
    # u^4 + u^3 + u^2 + u + 1 splits over QQ(zeta_5)
    roots, rest = roots_in_field(Z5, [Z5(1)] * 5)
    assert len(roots) == 4 and not rest
    for r, m in roots:
        assert m == 1 and r ** 5 == 1


@settings(max_examples=150, deadline=None)
@given(elements(Z5), elements(Z5), elements(Z5))
def test_field_axioms_quartic(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    if b:
        assert (a / b) * b == a
        assert b * b.inverse() == 1


@settings(max_examples=120, deadline=None)
@given(elements(SQRT5), st.integers(min_value=0, max_value=6))
def test_power_matches_repeated_product(a, n):
    p = SQRT5.one()
    for _ in range(n):
        p = p * a
    assert a ** n == p


@settings(max_examples=100, deadline=None)
@given(elements(SQRT5))
def test_string_round_trip(a):
    from freecurves.polyring import parse_poly

    p = parse_poly(str(a), SQRT5)
    assert p.degree == 0
    assert p.coefficient((0, 0, 0)) == a if a else p.is_zero()

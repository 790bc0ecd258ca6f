from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from freecurves.arrangements import LINE, Arrangement, levi_graph, graph_isomorphism
from freecurves.catalog import (
    CATALOG,
    CyclicModel,
    conic_line_examples,
    cyclic_model,
    full_monomial,
    get_entry,
    misc,
    orchard10,
    orchard12,
    serialize,
)
from freecurves.cli import parse_input
from freecurves.errors import ConstraintViolated, DegeneratePoint, DegreeUnsupported, UnknownName
from freecurves.numfield import adjoin_root
from freecurves.syzygy import ar_dimension, resolution

from helpers import ALL_BUILT, GOLDEN, analysis, arrangement, points, weak


@pytest.mark.parametrize("name", GOLDEN)
def test_golden(name):
    exp = CATALOG[name].expected
    ca = analysis(name)
    if exp.curve_class is not None:
        assert ca.class_name == exp.curve_class
    if exp.exponents is not None:
        assert ca.exponents == exp.exponents
    if exp.relations is not None:
        assert ca.relation_degrees == exp.relations
    if exp.tau is not None:
        assert ca.tau == exp.tau
    if exp.mdr is not None:
        assert ca.mdr == exp.mdr
    if exp.subtype is not None:
        assert ca.subtype == exp.subtype
    wc = weak(name)
    if exp.degrees is not None:
        assert wc.degree_counts == exp.degrees
    if exp.singularities is not None:
        assert wc.singularities == exp.singularities


@pytest.mark.parametrize("name", ALL_BUILT)
def test_tau_is_sum_of_local_tjurina(name):
    recs = points(name)
    assert analysis(name).tau == sum(r.local.tau * r.count for r in recs)
    if CATALOG[name].all_quasi_homogeneous:
        assert analysis(name).tau == sum(r.local.mu * r.count for r in recs)


@pytest.mark.parametrize("name", ALL_BUILT)
def test_resolution_certificate(name):
    f = arrangement(name).polynomial()
    R = analysis(name).resolution
    top = max(R.generator_degrees + R.relation_degrees)
    for r in (R.generator_degrees[0], R.generator_degrees[-1], top + 1):
        assert R.hilbert(r) == ar_dimension(f, r)


@pytest.mark.parametrize("name", ["orchard10-a", "orchard10-b", "orchard12-a", "orchard12-b"])
def test_orchard_point_structure(name):
    n = arrangement(name).degree
    model = cyclic_model(n)
    mults = [r.multiplicity for r in points(name)]
    assert set(mults) == {2, 3}
    assert mults.count(3) == len(model.triples) == CyclicModel.expected_triples(n)
    assert mults.count(2) == len(model.doubles)
    assert graph_isomorphism(levi_graph(arrangement(name)), model.levi_graph()) is not None


def test_cyclic_model_small_cases():
    assert cyclic_model(3).triples == ((0, 1, 2),)
    assert len(cyclic_model(10).triples) == 12
    assert len(cyclic_model(12).triples) == 19
    with pytest.raises(ValueError):
        cyclic_model(2)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=3, max_value=30))
def test_cyclic_model_brute_force(n):
    brute = sum(1 for a, b, c in combinations(range(n), 3) if (a + b + c) % n == 0)
    M = cyclic_model(n)
    assert len(M.triples) == brute == n * (n - 3) // 6 + 1
    # any two labels lie in at most one block
    seen = set()
    for blk in M.triples + M.doubles:
        for p in combinations(blk, 2):
            assert p not in seen
            seen.add(p)
    assert len(seen) == n * (n - 1) // 2


def test_orchard_errors():
    with pytest.raises(DegeneratePoint):
        orchard10(1, 1)
    with pytest.raises(DegeneratePoint):
        orchard10("1/2", 0)
    with pytest.raises(ConstraintViolated):
        orchard10(5, 4)
    with pytest.raises(ConstraintViolated):
        orchard12(1, 1)
    with pytest.raises(ConstraintViolated):
        orchard12(0, 2)
    with pytest.raises(ConstraintViolated):
        orchard12(-3, 2)


def test_orchard10_golden_ratio_excluded():
    F = adjoin_root([-1, -1, 1], "w")
    with pytest.raises(DegeneratePoint):
        orchard10(0, "w", F)
    with pytest.raises(DegeneratePoint):
        orchard10(0, "1-w", F)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_full_monomial_counts(n):
    A = full_monomial(n)
    assert len(A) == 3 * n + 3
    assert A.is_line_arrangement()
    from freecurves.arrangements import singular_points

    mults = {}
    for r in singular_points(A):
        mults[r.multiplicity] = mults.get(r.multiplicity, 0) + 1
    # n^2 triple points, 3n double points, three points of multiplicity n + 2
    assert mults.get(3, 0) == n * n
    assert mults.get(n + 2, 0) == 3
    assert mults.get(2, 0) == 3 * n
    with pytest.raises(DegreeUnsupported):
        full_monomial(7)


def test_lookup_errors():
    with pytest.raises(UnknownName):
        get_entry("no-such-thing")
    with pytest.raises(UnknownName):
        misc("Pentagon")
    with pytest.raises(UnknownName):
        conic_line_examples("Nope")
    assert len(CATALOG) >= 12


@pytest.mark.parametrize("name", ["triangle", "wzz-1", "dual-hesse", "orchard10-b", "schenck-tohaneanu-1"])
def test_serialize_round_trip(name):
    A = arrangement(name)
    parsed = parse_input(serialize(A, name))
    assert parsed.arrangement is not None
    assert parsed.field == A.field
    assert [c.poly for c in parsed.arrangement.components] == [c.poly for c in A.components]
    assert [c.kind for c in parsed.arrangement.components] == [c.kind for c in A.components]

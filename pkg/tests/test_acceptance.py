"""One test per acceptance criterion; the outcome table is printed at the end of the run."""

import time
from contextlib import contextmanager

import pytest

from freecurves.arrangements import AR_MODULE, MDR, lattice_isomorphic, weak_ziegler_pair, ziegler_pair
from freecurves.catalog import CATALOG, conic_line_examples, cyclic_model, misc, triangular_pair
from freecurves.localsing import local_invariants_at
from freecurves.polyring import parse_poly
from freecurves.syzygy import classify, is_free, mdr, minimal_generators, saito_determinant

import test_catalog
import test_exactla
import test_polyring
import test_syzygy
from helpers import ALL_BUILT, analysis, arrangement, points, weak


@contextmanager
def recorded(criterion, number, budget):
    """Run a criterion body; record PASS only if every check holds within the budget."""
    notes = []
    t0 = time.perf_counter()
    try:
        yield notes
    except BaseException as exc:
        criterion(number, False, f"{type(exc).__name__}: {exc}")
        raise
    elapsed = time.perf_counter() - t0
    ok = elapsed <= budget
    criterion(number, ok, f"{'; '.join(notes)} ({elapsed:.1f} s, budget {budget} s)")
    assert ok, f"criterion {number} exceeded its {budget} s budget"


def multiplicities(name):
    out = {}
    for r in points(name):
        out[r.multiplicity] = out.get(r.multiplicity, 0) + r.count
    return out


def test_criterion_1_triangle(criterion):
    with recorded(criterion, 1, 1) as notes:
        f = parse_poly("x*y*z")
        ca = classify(f)
        assert ca.class_name == "Free" and ca.exponents == (1, 1)
        g1, g2 = minimal_generators(f)
        assert saito_determinant(f, g1, g2) == parse_poly("3*x*y*z")
        assert ca.tau == 3
        notes.append("Free (1,1), det = 3xyz, tau 3")


def test_criterion_2_mdr(criterion):
    with recorded(criterion, 2, 1) as notes:
        assert mdr(parse_poly("x*y")) == 0
        g = parse_poly("(x^2-y*z)*(x^2+z^2-y*z)")
        ca = classify(g)
        assert ca.mdr == 1
        assert is_free(g)
        assert ca.exponents == (1, 2) and ca.relation_degrees == ()
        notes.append(f"mdr(xy)=0, mdr(G)=1, G free {ca.exponents}, {ca.resolution.display()}")


def test_criterion_3_naive_terao(criterion):
    with recorded(criterion, 3, 10) as notes:
        c1 = classify(conic_line_examples("NaiveTerao1").polynomial())
        c2 = classify(conic_line_examples("NaiveTerao2").polynomial())
        assert (c1.class_name, c1.exponents) == ("Free", (2, 3))
        assert (c2.class_name, c2.exponents) == ("NearlyFree", (3, 3, 3))
        p = (0, 0, 1)
        l1 = local_invariants_at(conic_line_examples("NaiveTerao1").polynomial(), p)
        l2 = local_invariants_at(conic_line_examples("NaiveTerao2").polynomial(), p)
        assert l1.mu == l1.tau == 15
        assert l2.mu != l2.tau
        notes.append(f"CL1 Free (2,3), CL2 NearlyFree (3,3,3), mu/tau {l1.mu}/{l1.tau} vs {l2.mu}/{l2.tau}")


@pytest.mark.extended
def test_criterion_4_triangular_pair(criterion):
    with recorded(criterion, 4, 1800) as notes:
        L1, L2 = triangular_pair()
        assert L1.field.degree == 2 and L2.field.degree == 4
        c1, c2 = classify(L1.polynomial()), classify(L2.polynomial())
        assert (c1.class_name, c1.exponents) == ("Free", (7, 7))
        assert (c2.class_name, c2.exponents) == ("NearlyFree", (6, 9, 9))
        w1, w2 = weak("triangular-1"), CATALOG["triangular-2"].arrangement()
        from freecurves.arrangements import weak_combinatorics

        w2 = weak_combinatorics(w2, True)
        assert w1 == w2
        assert w1.degree_counts == (15,) and w1.n_vector(6) == (24, 12, 0, 0, 3)
        v = weak_ziegler_pair(L1, L2, MDR)
        assert v.is_pair and v.details["mdr"] == (7, 6)
        notes.append(f"{v}, n-vector {w1.n_vector(6)}")


def test_criterion_5_schenck_tohaneanu(criterion):
    with recorded(criterion, 5, 600) as notes:
        c1, c2 = analysis("schenck-tohaneanu-1"), analysis("schenck-tohaneanu-2")
        assert arrangement("schenck-tohaneanu-1").field.generator_name == "i"
        assert (c1.class_name, c1.exponents) == ("Free", (6, 6))
        assert (c2.class_name, c2.exponents) == ("MSyzygy(4)", (7, 7, 7, 7))
        for name in ("SchenckTohaneanuConics1", "SchenckTohaneanuConics2"):
            inv = local_invariants_at(conic_line_examples(name).polynomial(), (0, 0, 1))
            assert (inv.multiplicity, inv.mu, inv.tau) == (5, 16, 15)
            assert inv.quasi_homogeneous is False
        notes.append("CL1 Free (6,6), CL2 4-syzygy (7,7,7,7), quintuple point mu 16 tau 15")


def test_criterion_6_wzz(criterion):
    with recorded(criterion, 6, 120) as notes:
        expected = {"A1": 12, "D4": 3, "X9": 1}
        for name in ("wzz-1", "wzz-2"):
            w = weak(name)
            assert w.degree_counts == (6, 1) and w.singularities == expected
        c1, c2 = analysis("wzz-1"), analysis("wzz-2")
        assert c1.resolution.display() == "0 -> S(-7)+S(-6) -> S(-6)+S(-5)^2+S(-4) -> AR(f)"
        assert c2.resolution.display() == "0 -> S(-7) -> S(-5)^2+S(-4) -> AR(f)"
        assert (c1.subtype, c2.subtype) == ("2B", "2A")
        v = weak_ziegler_pair(arrangement("wzz-1"), arrangement("wzz-2"), AR_MODULE)
        assert v.is_pair
        oracle = sum((r.multiplicity - 1) ** 2 * r.count for r in points("wzz-1"))
        assert c1.tau == c2.tau == oracle == 33
        notes.append(f"{v}; tau 33 both")


def _orchard(criterion, number, budget, a, b, res_a, res_b, triples, doubles):
    with recorded(criterion, number, budget) as notes:
        ca, cb = analysis(a), analysis(b)
        assert ca.resolution.display() == res_a and ca.subtype == "2A"
        assert cb.resolution.display() == res_b and cb.subtype == "2B"
        A, B = arrangement(a), arrangement(b)
        assert lattice_isomorphic(A, B)
        v = ziegler_pair(A, B, AR_MODULE)
        assert v.is_pair
        for name in (a, b):
            m = multiplicities(name)
            assert m.get(3, 0) == triples == len(cyclic_model(A.degree).triples)
            if doubles is not None:
                assert m.get(2, 0) == doubles
        notes.append(f"{v}; {triples} triple points")


def test_criterion_7_orchard10(criterion):
    _orchard(criterion, 7, 300, "orchard10-a", "orchard10-b",
             "0 -> S(-8) -> S(-6)^2+S(-5) -> AR(f)",
             "0 -> S(-8)+S(-7) -> S(-7)+S(-6)^2+S(-5) -> AR(f)", 12, 9)


def test_criterion_8_orchard12(criterion):
    _orchard(criterion, 8, 600, "orchard12-a", "orchard12-b",
             "0 -> S(-10) -> S(-8)+S(-7)+S(-6) -> AR(f)",
             "0 -> S(-10)+S(-9) -> S(-9)+S(-8)+S(-7)+S(-6) -> AR(f)", 19, None)


def test_criterion_9_dual_hesse(criterion):
    with recorded(criterion, 9, 30) as notes:
        ca = classify(misc("DualHesse").polynomial())
        assert (ca.class_name, ca.exponents, ca.tau) == ("Free", (4, 4), 48)
        m = multiplicities("dual-hesse")
        assert m.get(3, 0) == 12 and m.get(2, 0) == 0
        notes.append("Free (4,4), tau 48, 12 triple points, no nodes")


def test_criterion_10_properties(criterion):
    with recorded(criterion, 10, 300) as notes:
        suites = [
            test_polyring.test_euler_relation,
            test_syzygy.test_koszul_membership,
            test_exactla.test_rank_nullity_against_sympy,
            test_syzygy.test_resolution_euler_characteristic,
            test_syzygy.test_projective_invariance,
            test_catalog.test_cyclic_model_brute_force,
        ]
        for suite in suites:
            suite()
        for name in ALL_BUILT:
            test_catalog.test_resolution_certificate(name)
            if CATALOG[name].all_quasi_homogeneous:
                assert analysis(name).tau == sum(r.local.mu * r.count for r in points(name))
        notes.append(f"{len(suites)} randomized suites, certificates for {len(ALL_BUILT)} catalog curves")

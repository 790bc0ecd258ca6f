"""Named arrangements and families with their expected invariants.

Each entry keeps its golden data next to a provenance tag: PUBLISHED for values
printed in the source literature, DERIVED for values computed here and
confirmed by an independent check (local Tjurina sums, du Plessis-Wall,
brute-force counts).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .arrangements import (
    CONIC,
    LINE,
    Arrangement,
    LeviGraph,
    graph_isomorphism,
    levi_graph,
)
from .errors import (
    ConstraintViolated,
    DegeneratePoint,
    DegreeUnsupported,
    DuplicateLines,
    UnknownName,
)
from .numfield import QQ, FieldElement, NumberField, adjoin_root, cyclotomic_field
from .polyring import HomogPoly, parse_poly


def _lin(F: NumberField, a, b, c) -> HomogPoly:
    return HomogPoly.linear(F, F.coerce(a), F.coerce(b), F.coerce(c))


def _arr(F: NumberField, polys) -> Arrangement:
    return Arrangement.from_polys([parse_poly(p, F) if isinstance(p, str) else p for p in polys], F)


# --- full monomial and triangular pair -------------------------------------------------------

def _full_monomial_forms(n: int):
    if n < 2 or n > 6:
        raise DegreeUnsupported(f"full monomial arrangement needs 2 <= n <= 6, got {n}")
    F, z = cyclotomic_field(n, "e")
    forms = [_lin(F, 1, 0, 0), _lin(F, 0, 1, 0), _lin(F, 0, 0, 1)]
    o, zero = F.one(), F.zero()
    for k in range(n):
        w = z ** k
        forms.append(_lin(F, o, -w, zero))   # x - w y
        forms.append(_lin(F, zero, o, -w))   # y - w z
        forms.append(_lin(F, o, zero, -w))   # x - w z
    return F, forms


def full_monomial(n: int) -> Arrangement:
    """xyz(x^n - y^n)(y^n - z^n)(x^n - z^n) over QQ(zeta_n)."""
    F, forms = _full_monomial_forms(n)
    return Arrangement.from_polys(forms, F)


def _remove(F: NumberField, forms, removed) -> list:
    removed = [parse_poly(r, F) for r in removed]
    keep = [L for L in forms if not any(L.is_proportional(r) for r in removed)]
    if len(keep) != len(forms) - len(removed):
        raise AssertionError("a removed line is missing from the arrangement")
    return keep


TRIANGULAR_REMOVED_6 = ("x - z", "x - e*z", "y - z", "y - e*z", "x - e^2*y", "x - e^4*y")
TRIANGULAR_REMOVED_5 = ("x - z", "x - y", "y - z")


def triangular_pair() -> tuple:
    """Fifteen-line arrangements cut from the full monomial ones for n = 6 and n = 5."""
    F6, forms6 = _full_monomial_forms(6)
    F5, forms5 = _full_monomial_forms(5)
    L1 = Arrangement.from_polys(_remove(F6, forms6, TRIANGULAR_REMOVED_6), F6)
    L2 = Arrangement.from_polys(_remove(F5, forms5, TRIANGULAR_REMOVED_5), F5)
    return L1, L2


# --- conic-line examples --------------------------------------------------------------------

_CIRCLES_1 = (
    "(x-3*z)^2+(y-4*z)^2-25*z^2",
    "(x-4*z)^2+(y-3*z)^2-25*z^2",
    "(x+3*z)^2+(y-4*z)^2-25*z^2",
    "(x+4*z)^2+(y-3*z)^2-25*z^2",
    "(x-5*z)^2+y^2-25*z^2",
)
_CONICS_2 = (
    "x^2+8*y^2+21*x*y-x*z-8*y*z",
    "x^2+5*y^2+13*x*y-x*z-5*y*z",
    "x^2+9*y^2-4*x*y-x*z-9*y*z",
    "x^2+11*y^2+x*y-x*z-11*y*z",
    "x^2+17*y^2-5*x*y-x*z-17*y*z",
)
_WZZ_CONIC = "-24*x^2-23*y^2+76*y*z+195*z^2"
_INSCRIBED = "x^2+y^2+z^2-2*x*y-2*y*z-2*x*z"
_CIRCUMSCRIBED = "x*y+y*z+x*z"


def _gaussian():
    return cyclotomic_field(4, "i")[0]


_CONIC_LINE = {
    "NaiveTerao1": (lambda: QQ, ("x", "y", "y^2+x*z", "y^2+x^2+2*x*z")),
    "NaiveTerao2": (lambda: QQ, ("x", "x-13*y", "y^2+x*z", "y^2+x^2+2*x*z")),
    "SchenckTohaneanuConics1": (_gaussian, _CIRCLES_1),
    "SchenckTohaneanuConics2": (lambda: QQ, _CONICS_2),
    "SchenckTohaneanu1": (_gaussian, _CIRCLES_1 + ("z", "x-i*y", "x+i*y")),
    "SchenckTohaneanu2": (lambda: QQ, _CONICS_2 + ("x", "y", "x+y-z")),
    "WZZ1": (lambda: QQ, (_WZZ_CONIC, "y-3*x-5*z", "y+3*x-5*z", "y+z", "y-3*z", "x", "x+y+z")),
    "WZZ2": (lambda: QQ, (_WZZ_CONIC, "y-2*x-3*z", "y+2*x-3*z", "y+z", "y-3*z", "x", "x+y+z")),
    "TangentConicLine": (lambda: QQ, ("y*z-x^2", "y")),
    "ConicTwoTangents": (lambda: QQ, ("y*z-x^2", "y", "z")),
    "ConicInscribedTriangle": (lambda: QQ, ("x", "y", "z", _INSCRIBED)),
    "ConicCircumscribedTriangle": (lambda: QQ, ("x", "y", "z", _CIRCUMSCRIBED)),
    "TriangleTwoConics": (lambda: QQ, ("x", "y", "z", _INSCRIBED, _CIRCUMSCRIBED)),
}


def conic_line_examples(name: str) -> Arrangement:
    if name not in _CONIC_LINE:
        raise UnknownName(f"unknown conic-line example {name!r}; known: {', '.join(sorted(_CONIC_LINE))}")
    make_field, polys = _CONIC_LINE[name]
    return _arr(make_field(), polys)


# --- miscellaneous ---------------------------------------------------------------------------

def _dual_hesse() -> Arrangement:
    F, w = cyclotomic_field(3, "w")
    o, z = F.one(), F.zero()
    forms = []
    for k in range(3):
        c = w ** k
        forms += [_lin(F, o, -c, z), _lin(F, z, o, -c), _lin(F, o, z, -c)]
    return Arrangement.from_polys(forms, F)


_MISC = {
    "Triangle": lambda: _arr(QQ, ("x", "y", "z")),
    "TwoLines": lambda: _arr(QQ, ("x", "y")),
    "ThreeConcurrentLines": lambda: _arr(QQ, ("x", "y", "x+y")),
    "DualHesse": _dual_hesse,
    "TwoTangentConics": lambda: _arr(QQ, ("y*z-x^2", "-x^2+x*y+y^2-y*z")),
    "TwoConicsOnePoint": lambda: _arr(QQ, ("x^2-y*z", "x^2+z^2-y*z")),
}


def misc(name: str) -> Arrangement:
    if name not in _MISC:
        raise UnknownName(f"unknown example {name!r}; known: {', '.join(sorted(_MISC))}")
    return _MISC[name]()


# --- cyclic model and orchard families -------------------------------------------------------

@dataclass(frozen=True)
class CyclicModel:
    """Lines labelled by Z/nZ; three distinct labels are concurrent iff they sum to 0."""

    n: int
    triples: tuple
    doubles: tuple

    @staticmethod
    def expected_triples(n: int) -> int:
        return n * (n - 3) // 6 + 1

    def levi_graph(self) -> LeviGraph:
        edges = []
        for k, blk in enumerate(self.triples + self.doubles):
            edges.extend((k, c) for c in blk)
        return LeviGraph(len(self.triples) + len(self.doubles), self.n, tuple(edges), (1,) * self.n)


def cyclic_model(n: int) -> CyclicModel:
    if n < 3:
        raise ValueError("the cyclic model needs at least three lines")
    triples = tuple(t for t in combinations(range(n), 3) if sum(t) % n == 0)
    covered = {p for t in triples for p in combinations(t, 2)}
    doubles = tuple(p for p in combinations(range(n), 2) if p not in covered)
    return CyclicModel(n, triples, doubles)


def _coerce_params(F: NumberField, s, t):
    def conv(v):
        if isinstance(v, str):
            p = parse_poly(v, F)
            if p.degree != 0:
                raise ConstraintViolated(f"parameter {v!r} is not a constant")
            return p.coefficient((0, 0, 0))
        return F.coerce(v)
    return conv(s), conv(t)


def _validate_lines(F: NumberField, forms, n: int) -> Arrangement:
    for k, L in enumerate(forms):
        if L.is_zero():
            raise DegeneratePoint(f"linear factor {k + 1} vanishes identically")
    for (i, a), (j, b) in combinations(enumerate(forms), 2):
        if a.is_proportional(b):
            raise DuplicateLines(f"linear factors {i + 1} and {j + 1} coincide")
    A = Arrangement.from_polys(forms, F)
    model = cyclic_model(n)
    if graph_isomorphism(levi_graph(A), model.levi_graph()) is None:
        raise DegeneratePoint("realization does not have the cyclic incidence structure")
    return A


def orchard10_forms(F: NumberField, s: FieldElement, t: FieldElement) -> list:
    return [
        _lin(F, 1, 0, 0), _lin(F, 0, 1, 0), _lin(F, 0, 0, 1),
        _lin(F, t, s, t),
        _lin(F, 0, 1, 1),
        _lin(F, 1, 1, 1),
        _lin(F, 1, s, t),
        _lin(F, -s + t + 1, 0, -s + t),
        _lin(F, 1, s - t, 0),
        _lin(F, -s * t ** 2 + s * t + t ** 3 - t, -s * t + t ** 2, -s * t ** 2 + t ** 3),
    ]


def orchard10(s, t, field: NumberField = QQ) -> Arrangement:
    """Ten-line realization of the cyclic model on the hyperbola st - 2s - t^2 + t + 1 = 0."""
    F = field
    s, t = _coerce_params(F, s, t)
    if s * t - 2 * s - t * t + t + 1:
        raise ConstraintViolated(f"(s, t) = ({s}, {t}) is off the hyperbola st - 2s - t^2 + t + 1 = 0")
    half = F(Fraction(1, 2))
    if (s == half and t.is_zero()) or (s == 1 and t == 1) or (s.is_zero() and (t * t - t - 1).is_zero()):
        raise DegeneratePoint(f"(s, t) = ({s}, {t}) is an excluded parameter")
    return _validate_lines(F, orchard10_forms(F, s, t), 10)


def orchard12_forms(F: NumberField, s: FieldElement, t: FieldElement) -> list:
    return [
        _lin(F, 1, 0, 0), _lin(F, 0, 1, 0), _lin(F, 0, 0, 1),
        _lin(F, 1, 1, 1),
        _lin(F, 1, 1, t),
        _lin(F, t, s, t),
        _lin(F, 0, 1, 1),
        _lin(F, 1, s - t, 0),
        _lin(F, -s + t + 1, 0, -s + t),
        _lin(F, 1, s, t),
        _lin(F, -s * t ** 2 + s * t + t ** 3 - t, -s * t + t ** 2, -s * t ** 2 + t ** 3),
        _lin(F,
             s * s * t - s * t * t - 2 * s * t + t * t + t,
             s ** 3 * t - s ** 3 - 2 * s * s * t * t + s * s * t + s * s + s * t ** 3 - s * t,
             s * s * t - 2 * s * t * t + t ** 3),
    ]


def orchard12(s, t, field: NumberField = QQ) -> Arrangement:
    """Twelve-line realization with s = t(2 - t)."""
    F = field
    s, t = _coerce_params(F, s, t)
    if s != t * (2 - t):
        raise ConstraintViolated(f"s = {s} differs from t(2 - t) for t = {t}")
    if t.is_zero() or t == 1 or t == 2:
        raise ConstraintViolated(f"t = {t} is excluded")
    if (t * t - t + 1).is_zero() or (t * t - 2 * t + 2).is_zero():
        raise ConstraintViolated(f"t = {t} is a root of an excluded quadratic")
    return _validate_lines(F, orchard12_forms(F, s, t), 12)


# --- registry --------------------------------------------------------------------------------

@dataclass(frozen=True)
class Expected:
    """Golden data; ``provenance`` maps a field name to PUBLISHED or DERIVED."""

    curve_class: str | None = None
    exponents: tuple | None = None
    relations: tuple | None = None
    tau: int | None = None
    subtype: str | None = None
    mdr: int | None = None
    degrees: tuple | None = None
    singularities: dict | None = None
    provenance: dict = dc_field(default_factory=dict)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    build: Callable[..., Arrangement]
    expected: Expected | None = None
    params: dict = dc_field(default_factory=dict)
    extended: bool = False
    all_quasi_homogeneous: bool = True

    def arrangement(self, **overrides) -> Arrangement:
        kw = dict(self.params)
        kw.update(overrides)
        return self.build(**kw)


def _sqrt_field(n: int) -> NumberField:
    return adjoin_root([-n, 0, 1], "a")


P, D = "PUBLISHED", "DERIVED"
_Z10 = "Other(mu=15,tau=15,mult=4,branches=4)"
_Z10_PERTURBED = "Other(mu=15,tau=14,mult=4,branches=4)"


def _entries() -> list:
    E = Expected
    tri = {"A1": 24, "D4": 12, "OrdinaryM(6)": 3}
    wzz = {"A1": 12, "D4": 3, "X9": 1}
    orch10 = {"A1": 9, "D4": 12}
    st = {"A1": 10, "OrdinaryM(7)": 3}
    return [
        CatalogEntry("triangle", "the coordinate triangle xyz", lambda: misc("Triangle"),
                     E("Free", (1, 1), (), 3, mdr=1, degrees=(3,), singularities={"A1": 3},
                       provenance={"exponents": P, "tau": D, "singularities": D})),
        CatalogEntry("two-lines", "two lines xy", lambda: misc("TwoLines"),
                     E("Free", (0, 1), (), 1, mdr=0, degrees=(2,), singularities={"A1": 1},
                       provenance={"mdr": P, "tau": D})),
        CatalogEntry("three-concurrent-lines", "pencil of three lines", lambda: misc("ThreeConcurrentLines"),
                     E("Free", (0, 2), (), 4, mdr=0, degrees=(3,), singularities={"D4": 1},
                       provenance={"exponents": D, "tau": D})),
        CatalogEntry("two-conics-one-point", "two conics meeting in a single point",
                     lambda: misc("TwoConicsOnePoint"),
                     E("Free", (1, 2), (), 7, mdr=1, degrees=(0, 2), singularities={"A7": 1},
                       provenance={"mdr": P, "exponents": D, "tau": D})),
        CatalogEntry("two-tangent-conics", "two conics with two nodes and a tacnode",
                     lambda: misc("TwoTangentConics"),
                     E("MSyzygy(3)", (2, 2, 3), (4,), 5, mdr=2, degrees=(0, 2), singularities={"A1": 2, "A3": 1},
                       provenance={"singularities": P, "exponents": D, "relations": D, "tau": D})),
        CatalogEntry("naive-terao-1", "conic-line arrangement xy(y^2+xz)(y^2+x^2+2xz)",
                     lambda: conic_line_examples("NaiveTerao1"),
                     E("Free", (2, 3), (), 19, degrees=(2, 2), singularities={"A1": 4, _Z10: 1},
                       provenance={"exponents": P, "tau": D, "singularities": D})),
        CatalogEntry("naive-terao-2", "perturbed line x - 13y", lambda: conic_line_examples("NaiveTerao2"),
                     E("NearlyFree", (3, 3, 3), (4,), 18, degrees=(2, 2), singularities={"A1": 4, _Z10_PERTURBED: 1},
                       provenance={"exponents": P, "tau": D, "singularities": D}), all_quasi_homogeneous=False),
        CatalogEntry("schenck-tohaneanu-1", "five circles and three lines over QQ(i)",
                     lambda: conic_line_examples("SchenckTohaneanu1"),
                     E("Free", (6, 6), (), 108, degrees=(3, 5), singularities=st,
                       provenance={"exponents": P, "tau": D, "singularities": D}), all_quasi_homogeneous=False),
        CatalogEntry("schenck-tohaneanu-2", "five conics and three lines, not free",
                     lambda: conic_line_examples("SchenckTohaneanu2"),
                     E("MSyzygy(4)", (7, 7, 7, 7), (8, 8), 106, "2B", degrees=(3, 5), singularities=st,
                       provenance={"exponents": P, "subtype": P, "relations": D, "tau": D,
                                   "singularities": D}), all_quasi_homogeneous=False),
        CatalogEntry("wzz-1", "conic and six lines, first realization", lambda: conic_line_examples("WZZ1"),
                     E("MSyzygy(4)", (4, 5, 5, 6), (6, 7), 33, "2B", degrees=(6, 1), singularities=wzz,
                       provenance={"exponents": P, "relations": P, "subtype": P, "tau": D,
                                   "singularities": P})),
        CatalogEntry("wzz-2", "conic and six lines, second realization", lambda: conic_line_examples("WZZ2"),
                     E("MSyzygy(3)", (4, 5, 5), (7,), 33, "2A", degrees=(6, 1), singularities=wzz,
                       provenance={"exponents": P, "relations": P, "subtype": P, "tau": D,
                                   "singularities": P})),
        CatalogEntry("tangent-conic-line", "smooth conic and a tangent line",
                     lambda: conic_line_examples("TangentConicLine"),
                     E("Free", (1, 1), (), 3, degrees=(1, 1), singularities={"A3": 1},
                       provenance={"curve_class": P, "singularities": P, "exponents": D})),
        CatalogEntry("conic-two-tangents", "smooth conic and two tangent lines",
                     lambda: conic_line_examples("ConicTwoTangents"),
                     E("Free", (1, 2), (), 7, degrees=(2, 1), singularities={"A1": 1, "A3": 2},
                       provenance={"curve_class": P, "singularities": P, "exponents": D})),
        CatalogEntry("conic-inscribed-triangle", "conic inscribed in a triangle",
                     lambda: conic_line_examples("ConicInscribedTriangle"),
                     E("Free", (2, 2), (), 12, degrees=(3, 1), singularities={"A1": 3, "A3": 3},
                       provenance={"curve_class": P, "singularities": P, "exponents": D})),
        CatalogEntry("conic-circumscribed-triangle", "conic through the vertices of a triangle",
                     lambda: conic_line_examples("ConicCircumscribedTriangle"),
                     E("Free", (2, 2), (), 12, degrees=(3, 1), singularities={"D4": 3},
                       provenance={"curve_class": P, "singularities": P, "exponents": D})),
        CatalogEntry("triangle-two-conics", "triangle with inscribed and circumscribed conics",
                     lambda: conic_line_examples("TriangleTwoConics"),
                     E("Free", (3, 3), (), 27, degrees=(3, 2), singularities={"A3": 5, "D4": 3},
                       provenance={"curve_class": P, "singularities": P, "exponents": D})),
        CatalogEntry("dual-hesse", "nine lines with twelve triple points", lambda: misc("DualHesse"),
                     E("Free", (4, 4), (), 48, degrees=(9,), singularities={"D4": 12},
                       provenance={"exponents": P, "tau": P, "singularities": P})),
        CatalogEntry("orchard10", "ten-line orchard family, parameters s and t",
                     orchard10, params={"s": 5, "t": 3}),
        CatalogEntry("orchard10-a", "ten-line orchard arrangement at (5, 3)",
                     lambda: orchard10(5, 3),
                     E("MSyzygy(3)", (5, 6, 6), (8,), 57, "2A", degrees=(10,), singularities=orch10,
                       provenance={"exponents": P, "relations": P, "subtype": P, "tau": D,
                                   "singularities": P})),
        CatalogEntry("orchard10-b", "ten-line orchard arrangement over QQ(sqrt 5)",
                     lambda: orchard10("5/4*a+15/4", "a+3", _sqrt_field(5)),
                     E("MSyzygy(4)", (5, 6, 6, 7), (7, 8), 57, "2B", degrees=(10,), singularities=orch10,
                       provenance={"exponents": P, "relations": P, "subtype": P, "tau": D,
                                   "singularities": P})),
        CatalogEntry("orchard12", "twelve-line orchard family, parameters s and t",
                     orchard12, params={"s": -3, "t": 3}),
        CatalogEntry("orchard12-a", "twelve-line orchard arrangement at (-3, 3)",
                     lambda: orchard12(-3, 3),
                     E("MSyzygy(3)", (6, 7, 8), (10,), 85, "2A", degrees=(12,),
                       singularities={"A1": 9, "D4": 19},
                       provenance={"exponents": P, "relations": P, "subtype": P, "tau": D,
                                   "singularities": D})),
        CatalogEntry("orchard12-b", "twelve-line orchard arrangement over QQ(sqrt 3)",
                     lambda: orchard12("4*a-6", "a-1", _sqrt_field(3)),
                     E("MSyzygy(4)", (6, 7, 8, 9), (9, 10), 85, "2B", degrees=(12,),
                       singularities={"A1": 9, "D4": 19},
                       provenance={"exponents": P, "relations": P, "subtype": P, "tau": D,
                                   "singularities": D})),
        CatalogEntry("full-monomial", "xyz(x^n-y^n)(y^n-z^n)(x^n-z^n), parameter n",
                     full_monomial, params={"n": 3}),
        CatalogEntry("triangular-1", "fifteen lines cut from the n = 6 full monomial arrangement",
                     lambda: triangular_pair()[0],
                     E("Free", (7, 7), (), 147, mdr=7, degrees=(15,), singularities=tri,
                       provenance={"exponents": P, "singularities": P, "tau": D})),
        CatalogEntry("triangular-2", "fifteen lines cut from the n = 5 full monomial arrangement",
                     lambda: triangular_pair()[1],
                     E("NearlyFree", (6, 9, 9), (10,), 147, mdr=6, degrees=(15,), singularities=tri,
                       provenance={"exponents": P, "singularities": P, "tau": D}),
                     extended=True),
    ]


CATALOG = {e.name: e for e in _entries()}


def get_entry(name: str) -> CatalogEntry:
    if name not in CATALOG:
        raise UnknownName(f"unknown catalog entry {name!r}; try 'catalog list'")
    return CATALOG[name]


def serialize(A: Arrangement, title: str | None = None) -> str:
    """Arrangement in the line-oriented input format."""
    out = []
    if title:
        out.append(f"# {title}")
    F = A.field
    if not F.is_rational:
        out.append(f"field {F.generator_name} : {F.minpoly_str()}")
    kinds = {LINE: "line", CONIC: "conic"}
    for c in A.components:
        out.append(f"component {kinds.get(c.kind, 'curve')} : {c.poly}")
    return "\n".join(out) + "\n"

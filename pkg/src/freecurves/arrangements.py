"""Arrangements of smooth plane curves and their combinatorics.

Singular points of an arrangement of smooth components are exactly the
pairwise intersection points, so the singular locus is assembled from
pairwise intersections: cross products for two lines, a parametrised
restriction for a line and a curve, and a resultant after a generic linear
change of coordinates for two curves.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations

from .errors import (
    FieldTowerUnsupported,
    InvalidComponent,
    NotLineArrangement,
    NotReduced,
)
from .exactla import Matrix, determinant
from .localsing import (
    LocalInvariants,
    SingTypeLabel,
    classify_local,
    local_intersection_multiplicity,
    local_invariants_at,
    move_to_origin,
)
from .numfield import QQ, FieldElement, NumberField, adjoin_root, roots_in_field
from .polyring import HomogPoly, det3, product, substitute_linear, ugcd

LINE, CONIC, OTHER = "Line", "Conic", "OtherSmooth"
EXTENSION_NAME = "r"


# --- components ---------------------------------------------------------------------------

def conic_matrix(q: HomogPoly) -> list:
    """Symmetric matrix of a ternary quadratic form."""
    F = q.field
    half = F(1) / 2
    c = q.coefficient
    return [
        [c((2, 0, 0)), c((1, 1, 0)) * half, c((1, 0, 1)) * half],
        [c((1, 1, 0)) * half, c((0, 2, 0)), c((0, 1, 1)) * half],
        [c((1, 0, 1)) * half, c((0, 1, 1)) * half, c((0, 0, 2))],
    ]


@dataclass(frozen=True)
class Component:
    kind: str
    poly: HomogPoly

    def __post_init__(self):
        p = self.poly
        if self.kind == LINE:
            if p.degree != 1 or p.is_zero():
                raise InvalidComponent(f"a line needs a nonzero linear form, got degree {p.degree}")
        elif self.kind == CONIC:
            if p.degree != 2:
                raise InvalidComponent(f"a conic needs degree 2, got {p.degree}")
            if not det3(conic_matrix(p)):
                raise InvalidComponent(f"conic {p} is singular")
        elif self.kind == OTHER:
            if p.degree < 1:
                raise InvalidComponent("component of degree 0")
            if p.degree >= 2:
                from .syzygy import total_tjurina

                try:
                    tau = total_tjurina(p)
                except Exception as exc:
                    raise InvalidComponent(f"curve {p} is not reduced") from exc
                if tau:
                    raise InvalidComponent(f"curve {p} is singular (tau = {tau})")
        else:
            raise InvalidComponent(f"unknown component kind {self.kind!r}")

    @classmethod
    def auto(cls, poly: HomogPoly) -> "Component":
        kind = {1: LINE, 2: CONIC}.get(poly.degree, OTHER)
        return cls(kind, poly)

    @property
    def degree(self) -> int:
        return self.poly.degree

    def change_field(self, F: NumberField) -> "Component":
        return Component(self.kind, self.poly.change_field(F))

    def __str__(self) -> str:
        return f"{self.kind.lower()}: {self.poly}"


@dataclass(frozen=True)
class Arrangement:
    """Ordered smooth components over a common field.

    Smooth components are irreducible, so pairwise non-proportionality is
    enough for the product to be reduced.
    """

    components: tuple
    field: NumberField = QQ

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise InvalidComponent("empty arrangement")
        F = self.field
        comps = tuple(c if c.poly.field == F else c.change_field(F) for c in comps)
        object.__setattr__(self, "components", comps)
        for (i, a), (j, b) in combinations(enumerate(comps), 2):
            if a.poly.degree == b.poly.degree and a.poly.is_proportional(b.poly):
                raise NotReduced(f"components {i} and {j} define the same curve")

    @classmethod
    def from_polys(cls, polys, field: NumberField | None = None) -> "Arrangement":
        polys = list(polys)
        F = field or polys[0].field
        return cls(tuple(Component.auto(p.change_field(F) if p.field != F else p) for p in polys), F)

    def __len__(self) -> int:
        return len(self.components)

    def polynomial(self) -> HomogPoly:
        return product([c.poly for c in self.components], self.field)

    @property
    def degree(self) -> int:
        return sum(c.degree for c in self.components)

    def is_line_arrangement(self) -> bool:
        return all(c.kind == LINE for c in self.components)

    def change_field(self, F: NumberField) -> "Arrangement":
        return Arrangement(tuple(c.change_field(F) for c in self.components), F)


# --- singular points ----------------------------------------------------------------------

@dataclass(frozen=True)
class ConjugateCluster:
    """Points defined over an extension the field cannot host.

    ``factor`` is the irreducible polynomial (low degree first) whose roots
    parametrise the points along the projection used for the pair.
    """

    pair: tuple
    factor: tuple
    intersection_multiplicity: int

    @property
    def size(self) -> int:
        return len(self.factor) - 1


@dataclass(frozen=True)
class SingularPointRecord:
    point: tuple | None
    incident: tuple
    tangency: tuple
    local: LocalInvariants
    label: SingTypeLabel
    conjugate: ConjugateCluster | None = None

    @property
    def count(self) -> int:
        return 1 if self.conjugate is None else self.conjugate.size

    @property
    def multiplicity(self) -> int:
        return len(self.incident)

    def point_str(self) -> str:
        if self.point is None:
            c = self.conjugate
            return f"conjugate points of components {c.pair} (x{c.size})"
        return "(" + " : ".join(str(v) for v in self.point) + ")"


class _NeedExtension(Exception):
    def __init__(self, factor):
        super().__init__("quadratic extension required")
        self.factor = factor


def normalize_point(p) -> tuple:
    j = next(i for i, v in enumerate(p) if v)
    inv = p[j].inverse()
    return tuple(v * inv for v in p)


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _line_coeffs(L: HomogPoly):
    return tuple(L.coefficient(m) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def _line_frame(L: HomogPoly):
    """Two points P, Q spanning the line and a third vector R off it."""
    F = L.field
    a, b, c = _line_coeffs(L)
    o, z = F.one(), F.zero()
    if a:
        P, Q, R = (-b, a, z), (-c, z, a), (o, z, z)
    elif b:
        P, Q, R = (o, z, z), (z, -c, b), (z, o, z)
    else:
        P, Q, R = (o, z, z), (z, o, z), (z, z, o)
    return P, Q, R


def _binary_restriction(C: HomogPoly, P, Q, R) -> list:
    """Coefficients of C(tP + Q), low degree first, padded to deg C + 1."""
    M = [[P[i], Q[i], R[i]] for i in range(3)]
    G = substitute_linear(C, M)
    coeffs = [C.field.zero()] * (C.degree + 1)
    for (i, j, k), v in G.terms.items():
        if k == 0:
            coeffs[i] = v
    return coeffs


def _combine(t, P, Q):
    return tuple(t * P[i] + Q[i] for i in range(3))


class _Collector:
    def __init__(self, F: NumberField, aggregate: bool):
        self.F = F
        self.aggregate = aggregate
        self.points: dict = {}
        self.clusters: list = []

    def add(self, p):
        self.points.setdefault(normalize_point(p), None)

    def unsplit(self, factor, make_cluster):
        if len(factor) == 3 and self.F.is_rational:
            raise _NeedExtension(factor)
        if not self.aggregate:
            raise FieldTowerUnsupported(
                f"intersection points need a root of a degree {len(factor) - 1} polynomial over {self.F}; "
                "rerun with aggregated conjugate points")
        self.clusters.append(make_cluster())


def _line_line(A, i, j, col):
    col.add(_cross(_line_coeffs(A.components[i].poly), _line_coeffs(A.components[j].poly)))


def _line_curve(A, i, j, col):
    F = A.field
    L, C = A.components[i].poly, A.components[j].poly
    P, Q, R = _line_frame(L)
    coeffs = _binary_restriction(C, P, Q, R)
    e = C.degree
    deg = max((k for k, v in enumerate(coeffs) if v), default=-1)
    if deg < 0:
        raise InvalidComponent(f"line {L} is contained in {C}")
    if deg < e:
        col.add(P)  # the parameter value t = infinity
    if deg <= 0:
        return
    roots, rest = roots_in_field(F, coeffs[: deg + 1])
    for t, _ in roots:
        col.add(_combine(t, P, Q))
    for fac, mult in rest:
        def cluster(fac=fac, mult=mult):
            for k, comp in enumerate(A.components):
                if k in (i, j):
                    continue
                other = _binary_restriction(comp.poly, P, Q, R)
                if _divides(F, fac, other):
                    raise FieldTowerUnsupported(
                        f"conjugate intersection points of components {i}, {j} also lie on component {k}")
            return ConjugateCluster((i, j), tuple(fac), mult)
        col.unsplit(fac, cluster)


def _udivmod_rem(F, a, b):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    inv = b[-1].inverse()
    while len(a) >= len(b):
        c = a[-1] * inv
        s = len(a) - len(b)
        for k, bk in enumerate(b):
            a[s + k] = a[s + k] - c * bk
        a.pop()
        while a and not a[-1]:
            a.pop()
    return a


def _divides(F, fac, poly) -> bool:
    if not any(poly):
        return True
    return not _udivmod_rem(F, poly, fac)


def _z_poly(G: HomogPoly, x0, y0) -> list:
    F = G.field
    out = [F.zero()] * (G.degree + 1)
    for (i, j, k), v in G.terms.items():
        out[k] = out[k] + v * x0 ** i * y0 ** j
    return out


def _sylvester_resultant(F, a, b) -> FieldElement:
    """Res(a, b) for coefficient lists of exact formal degrees len-1."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for s in range(n):
        row = [F.zero()] * size
        for k, v in enumerate(reversed(a)):
            row[s + k] = v
        rows.append(row)
    for s in range(m):
        row = [F.zero()] * size
        for k, v in enumerate(reversed(b)):
            row[s + k] = v
        rows.append(row)
    return determinant(Matrix.from_rows(F, rows))


def _interpolate(F, xs, ys) -> list:
    """Newton interpolation; coefficients low degree first."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [F.zero()] * n
    for k in range(n - 1, -1, -1):
        # poly = poly * (u - xs[k]) + coef[k]
        new = [F.zero()] * n
        for d, v in enumerate(poly):
            if not v:
                continue
            if d + 1 < n:
                new[d + 1] = new[d + 1] + v
            new[d] = new[d] - v * xs[k]
        new[0] = new[0] + coef[k]
        poly = new
    return poly


def _projection_resultant(G1: HomogPoly, G2: HomogPoly) -> list:
    """Res_z(G1, G2)(t, 1) as coefficients, for G_i monic-in-z up to constants."""
    F = G1.field
    n = G1.degree * G2.degree
    xs = [F(k) for k in range(n + 1)]
    ys = [_sylvester_resultant(F, _z_poly(G1, x, F.one()), _z_poly(G2, x, F.one())) for x in xs]
    return _interpolate(F, xs, ys)


def _frames(seed: int = 20240611):
    rng = random.Random(seed)
    yield [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    while True:
        yield [[rng.randint(-6, 6) for _ in range(3)] for _ in range(3)]


def _curve_curve(A, i, j, col):
    F = A.field
    C1, C2 = A.components[i].poly, A.components[j].poly
    for frame in _frames():
        M = [[F(v) for v in row] for row in frame]
        if not det3(M):
            continue
        e3 = [M[r][2] for r in range(3)]
        if C1.evaluate(e3).is_zero() or C2.evaluate(e3).is_zero():
            continue
        G1, G2 = substitute_linear(C1, M), substitute_linear(C2, M)
        res = _projection_resultant(G1, G2)
        if not any(res):
            raise InvalidComponent(f"components {i} and {j} share a common factor")
        deg = max(k for k, v in enumerate(res) if v)
        found = []
        ok = True
        if deg < len(res) - 1:
            g = ugcd(_z_poly(G1, F.one(), F.zero()), _z_poly(G2, F.one(), F.zero()))
            if len(g) != 2:
                ok = False
            else:
                found.append((F.one(), F.zero(), -g[0]))
        roots, rest = roots_in_field(F, res[: deg + 1]) if deg > 0 else ([], [])
        for t, _ in roots:
            if not ok:
                break
            g = ugcd(_z_poly(G1, t, F.one()), _z_poly(G2, t, F.one()))
            if len(g) != 2:
                ok = False
                break
            found.append((t, F.one(), -g[0]))
        if not ok:
            continue  # two intersection points share a projection line
        if any(len(fac) > 2 for fac, _ in rest) and any(
                comp.poly.evaluate(e3).is_zero() for k, comp in enumerate(A.components) if k not in (i, j)):
            continue  # incidence of conjugate points is read off away from the centre
        for v in found:
            col.add(tuple(sum((M[r][k] * v[k] for k in range(3)), F.zero()) for r in range(3)))
        for fac, mult in rest:
            def cluster(fac=fac, mult=mult, M=M):
                for k, comp in enumerate(A.components):
                    if k in (i, j):
                        continue
                    Gk = substitute_linear(comp.poly, M)
                    if all(_divides(F, fac, _projection_resultant(G, Gk)) for G in (G1, G2)):
                        raise FieldTowerUnsupported(
                            f"conjugate intersection points of components {i}, {j} may lie on component {k}")
                return ConjugateCluster((i, j), tuple(fac), mult)
            col.unsplit(fac, cluster)
        return
    raise AssertionError("unreachable")


def _collect(A: Arrangement, aggregate: bool) -> _Collector:
    col = _Collector(A.field, aggregate)
    comps = A.components
    for i, j in combinations(range(len(comps)), 2):
        a, b = comps[i], comps[j]
        if a.kind == LINE and b.kind == LINE:
            _line_line(A, i, j, col)
        elif a.kind == LINE:
            _line_curve(A, i, j, col)
        elif b.kind == LINE:
            _line_curve(A, j, i, col)
        else:
            _curve_curve(A, i, j, col)
    return col


def split_field(A: Arrangement, aggregate: bool = False) -> Arrangement:
    """A itself, or A over the quadratic field its intersection points need."""
    return _locus(A, aggregate)[0]


def _squarefree_discriminant(factor) -> int:
    """Squarefree integer n with QQ(sqrt(n)) the splitting field of a rational quadratic."""
    from sympy import factorint

    c, b, _ = (v.to_rational() for v in factor)
    disc = b * b - 4 * c
    n = disc.numerator * disc.denominator
    out = -1 if n < 0 else 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            out *= p
    return out


@lru_cache(maxsize=64)
def _locus(A: Arrangement, aggregate: bool):
    while True:
        try:
            col = _collect(A, aggregate)
            break
        except _NeedExtension as ext:
            A = A.change_field(adjoin_root([-_squarefree_discriminant(ext.factor), 0, 1], EXTENSION_NAME))
    return A, col


def _tangency(A: Arrangement, p, incident) -> tuple:
    out = []
    for i, j in combinations(incident, 2):
        ci, cj = A.components[i].poly, A.components[j].poly
        if ci.degree == 1 and cj.degree == 1:
            out.append(((i, j), 1))
            continue
        gi = [g.evaluate(p) for g in ci.gradient()]
        gj = [g.evaluate(p) for g in cj.gradient()]
        if any(_cross(gi, gj)):
            out.append(((i, j), 1))
        else:
            m = local_intersection_multiplicity(move_to_origin(ci, p), move_to_origin(cj, p))
            out.append(((i, j), m))
    return tuple(out)


@lru_cache(maxsize=64)
def _records(A: Arrangement, aggregate: bool, with_local: bool):
    B, col = _locus(A, aggregate)
    comps = B.components
    out = []
    for p in sorted(col.points, key=lambda q: tuple(v.sort_key() for v in q)):
        incident = tuple(k for k, c in enumerate(comps) if c.poly.evaluate(p).is_zero())
        if with_local:
            f = product([comps[k].poly for k in incident], B.field)
            inv = local_invariants_at(f, p, branches=len(incident))
            tang = _tangency(B, p, incident)
        else:
            m = len(incident)
            inv = LocalInvariants((m - 1) ** 2, (m - 1) ** 2, m, m)
            tang = ()
        out.append(SingularPointRecord(p, incident, tang, inv, classify_local(inv)))
    for cl in sorted(col.clusters, key=lambda c: (c.pair, [v.sort_key() for v in c.factor])):
        k = 2 * cl.intersection_multiplicity - 1
        inv = LocalInvariants(k, k, 2, 2)
        out.append(SingularPointRecord(None, cl.pair, ((cl.pair, cl.intersection_multiplicity),),
                                       inv, classify_local(inv), cl))
    return B, tuple(out)


def singular_points(A: Arrangement, aggregate: bool = False) -> list:
    """Singular points of the arrangement with incidence and local data.

    Coordinates live in ``split_field(A)``, which adjoins one square root
    when A is over QQ and some intersection point needs it.
    """
    return list(_records(A, aggregate, True)[1])


def incidence_points(A: Arrangement, aggregate: bool = False) -> list:
    """Like singular_points but without local invariants (ordinary-point placeholders)."""
    return list(_records(A, aggregate, False)[1])


# --- weak combinatorics -------------------------------------------------------------------

@dataclass(frozen=True)
class WeakCombinatorics:
    degree_counts: tuple
    sing_counts: tuple  # sorted (label key, count) pairs
    multiplicity_counts: tuple = dc_field(default=(), compare=False)

    @property
    def singularities(self) -> dict:
        return dict(self.sing_counts)

    @property
    def total_degree(self) -> int:
        return sum((i + 1) * d for i, d in enumerate(self.degree_counts))

    def n_vector(self, top: int | None = None) -> tuple:
        """(n_2, ..., n_top): number of points of each multiplicity."""
        mc = dict(self.multiplicity_counts)
        top = top or max(mc, default=2)
        return tuple(mc.get(k, 0) for k in range(2, top + 1))

    def __str__(self) -> str:
        degs = ", ".join(str(v) for v in self.degree_counts)
        sings = ", ".join(f"{c}x{k}" for k, c in self.sing_counts)
        return f"({degs}; {sings})"


def weak_combinatorics(A: Arrangement, aggregate: bool = False) -> WeakCombinatorics:
    top = max(c.degree for c in A.components)
    degs = [0] * top
    for c in A.components:
        degs[c.degree - 1] += 1
    counts: dict = {}
    mults: dict = {}
    for r in singular_points(A, aggregate):
        counts[r.label.key] = counts.get(r.label.key, 0) + r.count
        mults[r.local.multiplicity] = mults.get(r.local.multiplicity, 0) + r.count
    return WeakCombinatorics(tuple(degs), tuple(sorted(counts.items())), tuple(sorted(mults.items())))


# --- Levi graph and lattice isomorphism ----------------------------------------------------

@dataclass(frozen=True)
class LeviGraph:
    n_points: int
    n_components: int
    edges: tuple  # (point index, component index)
    component_degrees: tuple = ()

    def adjacency(self) -> tuple:
        """Neighbour sets; vertices 0..n_points-1 are points, then components."""
        adj = [set() for _ in range(self.n_points + self.n_components)]
        for p, c in self.edges:
            adj[p].add(self.n_points + c)
            adj[self.n_points + c].add(p)
        return tuple(frozenset(s) for s in adj)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        for p in range(self.n_points):
            g.add_node(("p", p), kind="point")
        for c in range(self.n_components):
            g.add_node(("c", c), kind="component")
        g.add_edges_from((("p", p), ("c", c)) for p, c in self.edges)
        return g


def levi_graph(A: Arrangement, aggregate: bool = False) -> LeviGraph:
    edges = []
    k = 0
    for r in incidence_points(A, aggregate):
        for _ in range(r.count):
            edges.extend((k, c) for c in r.incident)
            k += 1
    return LeviGraph(k, len(A.components), tuple(edges), tuple(c.degree for c in A.components))


def _refine(adj, colors):
    """1-dimensional Weisfeiler-Leman colour refinement to a stable partition."""
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        table = {s: k for k, s in enumerate(sorted(set(sig)))}
        new = [table[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _initial_colors(G: LeviGraph, use_degrees: bool):
    cols = [("p", 0)] * G.n_points
    for c in range(G.n_components):
        cols.append(("c", G.component_degrees[c] if use_degrees and G.component_degrees else 0))
    return cols


def graph_isomorphism(G: LeviGraph, H: LeviGraph, use_degrees: bool = False) -> dict | None:
    """Colour-preserving isomorphism between Levi graphs, or None.

    Colours separate points from components (and optionally component
    degrees); refinement is run on the disjoint union so colour classes are
    comparable, then a depth-first search extends partial maps along
    already-mapped neighbours.
    """
    if (G.n_points, G.n_components, len(G.edges)) != (H.n_points, H.n_components, len(H.edges)):
        return None
    a, b = G.adjacency(), H.adjacency()
    n = len(a)
    union = list(a) + [frozenset(u + n for u in s) for s in b]
    init = _initial_colors(G, use_degrees) + _initial_colors(H, use_degrees)
    table = {c: k for k, c in enumerate(sorted(set(init)))}
    colors = _refine(union, [table[c] for c in init])
    cg, ch = colors[:n], colors[n:]
    if sorted(cg) != sorted(ch):
        return None

    order = []
    seen = set()
    by_class: dict = {}
    for v in range(n):
        by_class.setdefault(cg[v], []).append(v)
    starts = sorted(range(n), key=lambda v: (len(by_class[cg[v]]), -len(a[v]), v))
    for s in starts:
        if s in seen:
            continue
        queue = [s]
        seen.add(s)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(a[v], key=lambda u: (len(by_class[cg[u]]), u)):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    candidates = {}
    for w in range(n):
        candidates.setdefault(ch[w], []).append(w)

    phi: dict = {}
    used: set = set()

    def consistent(v, w):
        for u in a[v]:
            if u in phi and phi[u] not in b[w]:
                return False
        mapped_nb = sum(1 for u in a[v] if u in phi)
        return mapped_nb == sum(1 for x in b[w] if x in used)

    def extend(k):
        if k == n:
            return True
        v = order[k]
        anchor = next((u for u in a[v] if u in phi), None)
        pool = b[phi[anchor]] if anchor is not None else candidates[cg[v]]
        for w in sorted(pool):
            if w in used or ch[w] != cg[v] or not consistent(v, w):
                continue
            phi[v] = w
            used.add(w)
            if extend(k + 1):
                return True
            del phi[v]
            used.discard(w)
        return False

    import sys

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 100))
    try:
        return dict(phi) if extend(0) else None
    finally:
        sys.setrecursionlimit(limit)


def lattice_isomorphic(A: Arrangement, B: Arrangement) -> bool:
    return graph_isomorphism(levi_graph(A, True), levi_graph(B, True)) is not None


# --- Ziegler pairs ------------------------------------------------------------------------

MDR, AR_MODULE = "Mdr", "ArModule"


@dataclass(frozen=True)
class PairVerdict:
    is_pair: bool
    reason: str
    details: dict = dc_field(default_factory=dict, compare=False, hash=False)

    def __bool__(self) -> bool:
        return self.is_pair

    def __str__(self) -> str:
        return ("IsPair" if self.is_pair else "NotPair") + f"({self.reason})"


def _compare_modules(A: Arrangement, B: Arrangement, variant: str, details: dict) -> PairVerdict:
    from .syzygy import classify

    if variant not in (MDR, AR_MODULE):
        raise ValueError(f"unknown variant {variant!r}")
    ca, cb = classify(A.polynomial()), classify(B.polynomial())
    details.update(mdr=(ca.mdr, cb.mdr),
                   generator_degrees=(ca.exponents, cb.exponents),
                   relation_degrees=(ca.relation_degrees, cb.relation_degrees))
    if variant == MDR:
        if ca.mdr != cb.mdr:
            return PairVerdict(True, f"mdr {ca.mdr} vs {cb.mdr}", details)
        return PairVerdict(False, f"same mdr {ca.mdr}", details)
    da = (ca.exponents, ca.relation_degrees)
    db = (cb.exponents, cb.relation_degrees)
    if da != db:
        return PairVerdict(True, f"AR data {da} vs {db}", details)
    return PairVerdict(False, "same AR data", details)


def ziegler_pair(A: Arrangement, B: Arrangement, variant: str = MDR) -> PairVerdict:
    if not (A.is_line_arrangement() and B.is_line_arrangement()):
        raise NotLineArrangement("Ziegler pairs are defined for line arrangements")
    if not lattice_isomorphic(A, B):
        return PairVerdict(False, "intersection lattices differ")
    return _compare_modules(A, B, variant, {"lattice_isomorphic": True})


def weak_ziegler_pair(A: Arrangement, B: Arrangement, variant: str = MDR,
                      aggregate: bool = True) -> PairVerdict:
    wa, wb = weak_combinatorics(A, aggregate), weak_combinatorics(B, aggregate)
    details = {"weak_combinatorics": (str(wa), str(wb))}
    if wa.degree_counts != wb.degree_counts:
        return PairVerdict(False, "different weak-combinatorics: degree vectors differ", details)
    if wa.sing_counts != wb.sing_counts:
        return PairVerdict(False, "different weak-combinatorics: singularity counts differ", details)
    return _compare_modules(A, B, variant, details)

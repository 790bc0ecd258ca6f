"""Jacobian syzygies AR(f), their minimal resolution, and curve classification.

Everything is computed degree by degree on the graded pieces

    AR(f)_r = ker( S_r^3 -> S_{r+d-1},  (a, b, c) -> a f_x + b f_y + c f_z ).

Vectors of S_r^3 are coordinatised by (component, monomial of degree r) and,
after realification over Q, by an extra power-basis index s.  A Q-basis of
AR(f)_r comes from an exact integer kernel; new generators in degree r are the
echelon-complement rows of AR(f)_r over the span of x, y, z times AR(f)_{r-1}.
Relations among the generators are found the same way from the kernel of the
generator map F_r -> AR(f)_r.  AR(f) is reflexive of rank 2, hence has
projective dimension <= 1, so the relation module is free and the
Euler-characteristic identity has to hold in every degree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence

from .errors import (
    BudgetExceeded,
    NotASyzygy,
    NotReduced,
    RankMismatch,
    ShapeContradiction,
)
from .exactla import IntMatrix, field_block, int_nullspace, int_rank, int_rref
from .numfield import FieldElement
from .polyring import HomogPoly, dim_S, graded_basis, is_reduced, monomial_index

PROBES = 3


@dataclass(frozen=True)
class SyzygyVector:
    """(a, b, c) with a f_x + b f_y + c f_z = 0, all of degree ``degree``."""

    degree: int
    a: HomogPoly
    b: HomogPoly
    c: HomogPoly

    @property
    def components(self) -> tuple:
        return (self.a, self.b, self.c)

    def check(self, f: HomogPoly) -> bool:
        fx, fy, fz = f.gradient()
        s = self.a * fx + self.b * fy + self.c * fz
        return s.is_zero()

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


def koszul_relations(f: HomogPoly) -> tuple:
    fx, fy, fz = f.gradient()
    z = HomogPoly.zero(f.field, f.degree - 1)
    return (
        SyzygyVector(f.degree - 1, fy, -fx, z),
        SyzygyVector(f.degree - 1, fz, z, -fx),
        SyzygyVector(f.degree - 1, z, fz, -fy),
    )


def _binom_sum(r: int, degs: Sequence[int]) -> int:
    return sum(dim_S(r - a) for a in degs)


@dataclass(frozen=True)
class Resolution:
    """Shape of 0 -> (+) S(-e_j) -> (+) S(-d_i) -> AR(f) -> 0 (AR grading)."""

    generator_degrees: tuple
    relation_degrees: tuple

    @property
    def m(self) -> int:
        return len(self.generator_degrees)

    def hilbert(self, r: int) -> int:
        return _binom_sum(r, self.generator_degrees) - _binom_sum(r, self.relation_degrees)

    def tau(self, d: int) -> int:
        """Constant of the Hilbert polynomial of M(f) implied by this resolution."""
        r = max(self.generator_degrees + self.relation_degrees + (0,)) + 2
        return self.hilbert(r) - 3 * dim_S(r) + dim_S(r + d - 1)

    def display(self) -> str:
        def summand(degs):
            parts = []
            for a, mult in sorted(Counter(degs).items(), reverse=True):
                term = f"S(-{a})" if a else "S"
                parts.append(term if mult == 1 else f"{term}^{mult}")
            return "+".join(parts)

        gens = summand(self.generator_degrees)
        if self.relation_degrees:
            return f"0 -> {summand(self.relation_degrees)} -> {gens} -> AR(f)"
        return f"0 -> {gens} -> AR(f)"

    def __str__(self) -> str:
        return self.display()


@dataclass
class CurveAnalysis:
    d: int
    mdr: int
    tau: int
    resolution: Resolution
    curve_class: str  # Smooth | Free | NearlyFree | MSyzygy
    m: int
    type_k: int
    subtype: str | None  # None | "2A" | "2B"
    generators: tuple = ()
    warnings: list = dc_field(default_factory=list)

    @property
    def exponents(self) -> tuple:
        return self.resolution.generator_degrees

    @property
    def relation_degrees(self) -> tuple:
        return self.resolution.relation_degrees

    @property
    def class_name(self) -> str:
        return f"MSyzygy({self.m})" if self.curve_class == "MSyzygy" else self.curve_class


@dataclass(frozen=True)
class Verdict:
    """Boolean answer with an optional witness."""

    value: bool
    exponents: tuple | None = None

    def __bool__(self) -> bool:
        return self.value


# --- the engine -------------------------------------------------------------------------

class _Engine:
    """Per-curve caches for the graded computations."""

    def __init__(self, f: HomogPoly):
        self.f = f
        self.F = f.field
        self.k = f.field.degree
        self.d = f.degree
        self.partials = f.gradient()
        coeffs = [c for p in self.partials for c in p.terms.values()]
        D = 1
        from math import lcm

        for c in coeffs:
            for row in field_block(c):
                for v in row:
                    D = lcm(D, v.denominator)
        self.scale = D
        # integer blocks for each term of each partial
        self.pterms = [
            [(m, tuple(tuple(int(v * D) for v in row) for row in field_block(c))) for m, c in p.terms.items()]
            for p in self.partials
        ]
        self._ar_rank: dict = {}
        self._ar_q: dict = {}
        self._resolution = None
        self._generators = None
        self._tau = None

    # S_r^3 -> S_{r+d-1}
    def jacobian_matrix(self, r: int) -> IntMatrix:
        k = self.k
        src = graded_basis(r)
        n = len(src)
        tgt = monomial_index(r + self.d - 1)
        M = IntMatrix(dim_S(r + self.d - 1) * k, 3 * n * k)
        data = M.data
        for v in range(3):
            for (a, b, c), blk in self.pterms[v]:
                for mi, (x, y, z) in enumerate(src):
                    row0 = tgt[(x + a, y + b, z + c)] * k
                    col0 = (v * n + mi) * k
                    for t in range(k):
                        brow = blk[t]
                        for s in range(k):
                            if brow[s]:
                                data[(row0 + t, col0 + s)] = brow[s]
        return M

    def ar_dim(self, r: int) -> int:
        if r < 0:
            return 0
        if r in self._ar_q:
            return len(self._ar_q[r]) // self.k
        if r not in self._ar_rank:
            if self.d == 0:
                raise NotReduced("constant polynomial")
            rk = int_rank(self.jacobian_matrix(r))
            self._ar_rank[r] = rk
        return 3 * dim_S(r) - self._ar_rank[r] // self.k

    def ar_qbasis(self, r: int) -> list:
        if r not in self._ar_q:
            M = self.jacobian_matrix(r)
            self._ar_q[r] = int_nullspace(M) if M.ncols else []
        return self._ar_q[r]

    def mdr(self) -> int:
        if self._resolution is not None:
            return self._resolution.generator_degrees[0]
        for r in range(0, self.d + 1):
            if self.ar_dim(r) > 0:
                return r
        raise RankMismatch("no relation up to degree d-1; Koszul relations missing")

    # --- shifting helpers
    @staticmethod
    def _shift_vectors(vecs, layout_from, layout_to, k):
        """Multiply Q-vectors by x, y, z.  A layout is a list of
        (offset, source degree) blocks; coordinates inside a block are
        (monomial index, s)."""
        out = []
        maps = []
        for (off_f, deg_f), (off_t, deg_t) in zip(layout_from, layout_to):
            src = graded_basis(deg_f)
            idx = monomial_index(deg_t)
            per_var = []
            for var in range(3):
                per_var.append([idx[tuple(e + (i == var) for i, e in enumerate(m))] for m in src])
            maps.append((off_f, off_t, len(src), per_var))
        size_to = layout_to[-1][0] + dim_S(layout_to[-1][1]) * k if layout_to else 0
        for v in vecs:
            for var in range(3):
                w = [0] * size_to
                for off_f, off_t, n, per_var in maps:
                    pv = per_var[var]
                    for mi in range(n):
                        base = off_f + mi * k
                        for s in range(k):
                            val = v[base + s]
                            if val:
                                w[off_t + pv[mi] * k + s] = val
                out.append(w)
        return out

    def _ar_layout(self, r):
        n = dim_S(r)
        return [(v * n * self.k, r) for v in range(3)]

    def _gen_layout(self, r, gens):
        out, off = [], 0
        for dg in gens:
            out.append((off, r - dg))
            off += dim_S(r - dg) * self.k
        return out

    def _vector_from_qrow(self, row, r) -> SyzygyVector:
        k = self.k
        n = dim_S(r)
        comps = []
        for v in range(3):
            coeffs = [self.F.from_coeffs(row[(v * n + mi) * k:(v * n + mi + 1) * k]) for mi in range(n)]
            comps.append(HomogPoly.from_vector(self.F, r, coeffs))
        return SyzygyVector(r, *comps)

    def _realified_generator(self, g: SyzygyVector):
        """For s < k: sparse integer list of (component, monomial, t, value) for a^s g."""
        k = self.k
        from math import lcm

        rows = []
        for s in range(k):
            entries = []
            for v, p in enumerate(g.components):
                for m, c in p.terms.items():
                    blk = field_block(c)
                    for t in range(k):
                        if blk[t][s]:
                            entries.append((v, m, t, blk[t][s]))
            L = 1
            for e in entries:
                L = lcm(L, e[3].denominator)
            rows.append([(v, m, t, int(val * L)) for v, m, t, val in entries])
        return rows

    def _generator_map(self, r, gen_degs, gen_rows) -> IntMatrix:
        k = self.k
        n = dim_S(r)
        idx = monomial_index(r)
        layout = self._gen_layout(r, gen_degs)
        ncols = (layout[-1][0] + dim_S(r - gen_degs[-1]) * k) if gen_degs else 0
        M = IntMatrix(3 * n * k, ncols)
        data = M.data
        for (off, dm), rows in zip(layout, gen_rows):
            for mi, (x, y, z) in enumerate(graded_basis(dm)):
                for s, entries in enumerate(rows):
                    col = off + mi * k + s
                    for v, (a, b, c), t, val in entries:
                        data[(((v * n) + idx[(a + x, b + y, c + z)]) * k + t, col)] = val
        return M

    # --- the resolution
    def resolution(self):
        if self._resolution is not None:
            return self._resolution, self._generators
        if not is_reduced(self.f):
            raise NotReduced("polynomial is not squarefree")
        k, d = self.k, self.d
        gen_degs: list = []
        gens: list = []
        gen_rows: list = []
        rel_degs: list = []
        prev_ar = None
        prev_ker = None
        prev_layout = None
        last_event = -1
        for r in range(0, 3 * d + 1):
            ar_q = self.ar_qbasis(r)
            ncoord = 3 * dim_S(r) * k
            if prev_ar:
                U = self._shift_vectors(prev_ar, self._ar_layout(r - 1), self._ar_layout(r), k)
                rank_u = int_rank(U)
            else:
                U, rank_u = [], 0
            if len(ar_q) > rank_u:
                _, piv_u = int_rref(U, ncoord) if U else ([], [])
                pset = set(piv_u)
                rows, piv = int_rref(ar_q, ncoord)
                found = 0
                for row, p in zip(rows, piv):
                    if p % k == 0 and p not in pset:
                        g = self._vector_from_qrow(row, r)
                        if not g.check(self.f):
                            raise RankMismatch("generator failed the syzygy check")
                        gens.append(g)
                        gen_degs.append(r)
                        gen_rows.append(self._realified_generator(g))
                        found += 1
                if found * k != len(ar_q) - rank_u:
                    raise RankMismatch(f"degree {r}: generator count {found} vs rank jump")
                last_event = r
            # relations among generators in degree r
            if gen_degs:
                G = self._generator_map(r, gen_degs, gen_rows)
                ker = int_nullspace(G) if G.ncols else []
                if G.ncols - len(ker) != len(ar_q):
                    raise RankMismatch(f"degree {r}: generators do not span AR(f)_{r}")
                layout = self._gen_layout(r, gen_degs)
                if prev_ker:
                    V = self._shift_vectors(prev_ker, prev_layout, layout[:len(prev_layout)], k)
                    # shifted vectors must live in the full degree-r coordinate space
                    width = G.ncols
                    V = [w + [0] * (width - len(w)) for w in V]
                    rank_v = int_rank(V)
                else:
                    rank_v = 0
                new_rel = len(ker) - rank_v
                if new_rel % k:
                    raise RankMismatch("relation count not divisible by field degree")
                if new_rel:
                    rel_degs.extend([r] * (new_rel // k))
                    last_event = r
                prev_ker = ker
                prev_layout = layout
            # Euler characteristic in this degree
            expect = _binom_sum(r, gen_degs) - _binom_sum(r, rel_degs)
            if expect != len(ar_q) // k:
                raise RankMismatch(f"Euler characteristic fails in degree {r}")
            prev_ar = ar_q
            if (
                gen_degs
                and len(gen_degs) - len(rel_degs) == 2
                and r >= last_event + PROBES
                and r >= d - 1
                and sum(gen_degs) - sum(rel_degs) == d - 1
            ):
                res = Resolution(tuple(gen_degs), tuple(rel_degs))
                self._resolution, self._generators = res, tuple(gens)
                return res, self._generators
        raise BudgetExceeded(f"no resolution certificate up to degree {3 * d}")

    def total_tjurina(self) -> int:
        if self._tau is not None:
            return self._tau
        if not is_reduced(self.f):
            raise NotReduced("polynomial is not squarefree")
        d = self.d
        if d <= 1:
            self._tau = 0
            return 0

        # the Hilbert function of M(f) equals tau from degree 3(d - 2) + 1 on
        kk = 3 * d - 5
        self._tau = dim_S(kk) - 3 * dim_S(kk - d + 1) + self.ar_dim(kk - d + 1)
        return self._tau


@lru_cache(maxsize=64)
def _engine(f: HomogPoly) -> _Engine:
    return _Engine(f)


def _checked(f: HomogPoly) -> _Engine:
    if f.is_zero() or f.degree < 1:
        raise NotReduced("need a nonconstant polynomial")
    if not _reduced(f):
        raise NotReduced("polynomial is not squarefree")
    return _engine(f)


@lru_cache(maxsize=256)
def _reduced(f: HomogPoly) -> bool:
    return is_reduced(f)


# --- public operations -----------------------------------------------------------------

def ar_dimension(f: HomogPoly, r: int) -> int:
    """dim AR(f)_r = 3 dim S_r - rank of the Jacobian map in degree r."""
    return _checked(f).ar_dim(r)


def ar_basis(f: HomogPoly, r: int) -> list:
    """Echelon K-basis of AR(f)_r as SyzygyVectors."""
    e = _checked(f)
    q = e.ar_qbasis(r)
    if not q:
        return []
    rows, piv = int_rref(q, 3 * dim_S(r) * e.k)
    return [e._vector_from_qrow(row, r) for row, p in zip(rows, piv) if p % e.k == 0]


def ar_contains(f: HomogPoly, v: SyzygyVector) -> bool:
    """Membership of v in the computed span of AR(f)_{deg v}."""
    e = _checked(f)
    r = v.degree
    q = e.ar_qbasis(r)
    n = dim_S(r)
    vec = []
    for p in v.components:
        vec.extend(p.change_field(e.F).vector() if p.degree == r else [e.F.zero()] * n)
    from .exactla import realify_vectors

    extra = realify_vectors(e.F, [vec])
    return int_rank(q + extra) == len(q) if q else not any(any(row) for row in extra)


def mdr(f: HomogPoly) -> int:
    return _checked(f).mdr()


def resolution(f: HomogPoly) -> Resolution:
    return _checked(f).resolution()[0]


def minimal_generators(f: HomogPoly) -> tuple:
    return _checked(f).resolution()[1]


def minimal_generator_degrees(f: HomogPoly) -> tuple:
    return resolution(f).generator_degrees


def syzygy_degrees(f: HomogPoly) -> tuple:
    res = resolution(f)
    if res.m - len(res.relation_degrees) != 2:
        raise RankMismatch("generator count minus relation count is not 2")
    return res.relation_degrees


def total_tjurina(f: HomogPoly) -> int:
    return _checked(f).total_tjurina()


def is_free(f: HomogPoly, cross_check: bool = True) -> Verdict:
    """du Plessis-Wall: with r = mdr <= (d-1)/2, free iff (d-1)^2 - r(d-r-1) = tau."""
    e = _checked(f)
    d = e.d
    r = e.mdr()
    if 2 * r > d - 1:
        verdict = Verdict(False)
    else:
        ok = (d - 1) ** 2 - r * (d - r - 1) == e.total_tjurina()
        verdict = Verdict(ok, (r, d - 1 - r) if ok else None)
    if cross_check:
        res = e.resolution()[0]
        if verdict.value != (res.m == 2):
            raise ShapeContradiction(f"du Plessis-Wall says {verdict.value}, resolution has m={res.m}")
    return verdict


def is_nearly_free(f: HomogPoly, cross_check: bool = True) -> Verdict:
    """Dimca: nearly free iff (d-1)^2 - d1(d-d1-1) = tau + 1 with d1 = mdr."""
    e = _checked(f)
    d = e.d
    r = e.mdr()
    ok = (d - 1) ** 2 - r * (d - r - 1) == e.total_tjurina() + 1
    verdict = Verdict(ok, (r, d - r, d - r) if ok else None)
    if cross_check:
        g = e.resolution()[0].generator_degrees
        shape = len(g) == 3 and g[0] + g[1] == d and g[1] == g[2]
        if shape != ok:
            raise ShapeContradiction(f"nearly-free criterion says {ok}, resolution shape says {shape}")
    return verdict


def saito_determinant(f: HomogPoly, r1: SyzygyVector, r2: SyzygyVector) -> HomogPoly:
    F = f.field
    x, y, z = (HomogPoly.variable(F, v) for v in "xyz")
    a1, b1, c1 = r1.components
    a2, b2, c2 = r2.components
    return x * (b1 * c2 - c1 * b2) - a1 * (y * c2 - z * b2) + a2 * (y * c1 - z * b1)


def saito_check(f: HomogPoly, r1: SyzygyVector, r2: SyzygyVector) -> bool:
    """True iff det[(x,y,z), r1, r2] = c f for a nonzero constant c."""
    for v in (r1, r2):
        if not v.check(f):
            raise NotASyzygy(f"{v} is not a relation of f")
    det = saito_determinant(f, r1, r2)
    if det.is_zero() or det.degree != f.degree:
        return False
    return det.is_proportional(f)


def saito_constant(f: HomogPoly, r1: SyzygyVector, r2: SyzygyVector) -> FieldElement | None:
    if not saito_check(f, r1, r2):
        return None
    det = saito_determinant(f, r1, r2)
    m = f.monomials()[0]
    return det.coefficient(m) / f.coefficient(m)


SUBTYPE_WARNING = "subtype 2A/2B assigned by the inferred rule m=3 -> 2A, m=4 -> 2B"


def classify(f: HomogPoly) -> CurveAnalysis:
    e = _checked(f)
    d = e.d
    res, gens = e.resolution()
    tau = e.total_tjurina()
    if res.tau(d) != tau:
        raise RankMismatch(f"tau from resolution {res.tau(d)} differs from Milnor algebra {tau}")
    g = res.generator_degrees
    m = res.m
    warnings = []
    if d == 1:
        cls = "Smooth"
    elif m == 2:
        if g[0] + g[1] != d - 1:
            raise ShapeContradiction("2-syzygy curve with d1 + d2 != d - 1")
        cls = "Free"
    elif m == 3 and g[0] + g[1] == d and g[1] == g[2]:
        cls = "NearlyFree"
    else:
        cls = "MSyzygy"
    if d > 1:
        is_free(f)
        if 2 * g[0] <= d:
            is_nearly_free(f)
        else:
            numeric = (d - 1) ** 2 - g[0] * (d - g[0] - 1) == tau + 1
            if numeric != (cls == "NearlyFree"):
                warnings.append(
                    f"nearly-free numeric criterion ({numeric}) disagrees with resolution shape "
                    f"at mdr={g[0]} > d/2; resolution shape used"
                )
    type_k = g[0] + g[1] - (d - 1)
    subtype = None
    if type_k == 2:
        if m == 3:
            subtype = "2A"
        elif m == 4:
            subtype = "2B"
        else:
            warnings.append(f"type 2 curve with m={m}: no 2A/2B label")
        if subtype:
            warnings.append(SUBTYPE_WARNING)
    return CurveAnalysis(
        d=d, mdr=g[0], tau=tau, resolution=res, curve_class=cls, m=m,
        type_k=type_k, subtype=subtype, generators=gens, warnings=warnings,
    )

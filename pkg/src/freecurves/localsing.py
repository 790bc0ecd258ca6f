"""Local invariants of plane curve singularities.

Milnor and Tjurina numbers are dimensions of K[u,v]/I localised at the
origin.  For an ideal I with isolated zero there, the truncations
K[u,v]/(I + m^N) grow with N and become constant from the first N with
m^N inside I + m^(N+1); by Nakayama that N already satisfies m^N ⊂ I locally,
so two consecutive equal values give the exact local dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    FieldTooSmall,
    NonIsolated,
    NotSingularAtOrigin,
    PointNotOnCurve,
    PointNotSingular,
)
from .exactla import Matrix, rank
from .numfield import FieldElement
from .polyring import BivariatePoly, HomogPoly, dehomogenize, substitute_linear


@dataclass(frozen=True)
class LocalInvariants:
    mu: int
    tau: int
    multiplicity: int
    branches: int | None = None
    quasi_homogeneous: bool = True

    def __post_init__(self):
        if self.tau > self.mu:
            raise ValueError("tau exceeds mu")
        object.__setattr__(self, "quasi_homogeneous", self.tau == self.mu)


@dataclass(frozen=True)
class SingTypeLabel:
    """name is one of A, D4, X9, OrdinaryM, Other."""

    name: str
    params: tuple = ()
    note: str = ""

    @property
    def key(self) -> str:
        if self.name == "A":
            return f"A{self.params[0]}"
        if self.name == "OrdinaryM":
            return f"OrdinaryM({self.params[0]})"
        if self.name == "Other":
            mu, tau, mult, br = self.params
            return f"Other(mu={mu},tau={tau},mult={mult},branches={br})"
        return self.name

    def __str__(self) -> str:
        return self.key


def _monomials_below(N: int) -> list:
    return [(i, t - i) for t in range(N) for i in range(t, -1, -1)]


def truncated_quotient_dim(gens, N: int) -> int:
    """dim K[u,v] / (gens + m^N)."""
    F = gens[0].field
    basis = _monomials_below(N)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    z = F.zero()
    for g in gens:
        if g.is_zero():
            continue
        o = g.order()
        for (a, b) in _monomials_below(N - o):
            row = [z] * len(basis)
            for (i, j), c in g.terms.items():
                pos = index.get((i + a, j + b))
                if pos is not None:
                    row[pos] = c
            rows.append(row)
    if not rows:
        return len(basis)
    return len(basis) - rank(Matrix.from_rows(F, rows))


def stabilized_dim(gens, cap: int) -> int:
    prev = None
    N = 1
    while N <= cap + 1:
        cur = truncated_quotient_dim(gens, N)
        if cur == prev:
            return cur
        prev = cur
        N += 1
    raise NonIsolated(f"local algebra still growing at truncation order {cap}")


def _check_singular(g: BivariatePoly):
    if g.constant_term():
        raise NotSingularAtOrigin("g(0,0) != 0")
    for i in range(2):
        if g.derivative(i).constant_term():
            raise NotSingularAtOrigin("a partial derivative does not vanish at the origin")


def _cap(g: BivariatePoly) -> int:
    return 4 * g.total_degree() + 8


def local_milnor(g: BivariatePoly) -> int:
    _check_singular(g)
    return stabilized_dim([g.derivative(0), g.derivative(1)], _cap(g))


def local_tjurina(g: BivariatePoly) -> int:
    _check_singular(g)
    return stabilized_dim([g, g.derivative(0), g.derivative(1)], _cap(g))


def local_intersection_multiplicity(g1: BivariatePoly, g2: BivariatePoly) -> int:
    """(g1 . g2) at the origin; both must vanish there and share no component through it."""
    if g1.constant_term() or g2.constant_term():
        return 0
    return stabilized_dim([g1, g2], 4 * (g1.total_degree() + g2.total_degree()) + 8)


def move_to_origin(f: HomogPoly, p) -> BivariatePoly:
    """Dehomogenised f∘M where M sends (0:0:1) to p."""
    F = f.field
    try:
        pt = [F.coerce(v) for v in p]
    except Exception as exc:  # MixedFields from a foreign extension
        raise FieldTooSmall(f"point coordinates not in {F}") from exc
    j0 = next(j for j in range(3) if pt[j])
    others = [j for j in range(3) if j != j0]
    cols = []
    for j in others:
        cols.append([F.one() if i == j else F.zero() for i in range(3)])
    cols.append(pt)
    M = [[cols[c][r] for c in range(3)] for r in range(3)]
    return dehomogenize(substitute_linear(f, M), "z")


def local_invariants_at(f: HomogPoly, p, branches: int | None = None) -> LocalInvariants:
    F = f.field
    try:
        pt = [F.coerce(v) for v in p]
    except Exception as exc:
        raise FieldTooSmall(f"point coordinates not in {F}") from exc
    if not any(pt):
        raise ValueError("(0:0:0) is not a projective point")
    if f.evaluate(pt):
        raise PointNotOnCurve(f"f does not vanish at {tuple(map(str, pt))}")
    if any(d.evaluate(pt) for d in f.gradient()):
        raise PointNotSingular(f"f is smooth at {tuple(map(str, pt))}")
    g = move_to_origin(f, pt)
    mu = local_milnor(g)
    tau = local_tjurina(g)
    return LocalInvariants(mu=mu, tau=tau, multiplicity=g.order(), branches=branches,
                           quasi_homogeneous=mu == tau)


def classify_local(inv: LocalInvariants) -> SingTypeLabel:
    """Table lookup on (mu, tau, multiplicity, branches).

    mu >= (m-1)^2 for a point of multiplicity m with equality exactly for
    ordinary points, and multiplicity 2 forces an A_k point with k = mu.
    """
    mu, tau, m, b = inv.mu, inv.tau, inv.multiplicity, inv.branches
    raw = (mu, tau, m, b)
    if mu == 1:
        return SingTypeLabel("A", (1,))
    if m == 2 and tau == mu and (b is None or b == (2 if mu % 2 else 1)):
        return SingTypeLabel("A", (mu,))
    if mu == (m - 1) ** 2 and (b is None or b == m):
        # ordinary points share one topological type whatever tau is
        note = "" if tau == mu else "not quasi-homogeneous"
        if m == 3:
            return SingTypeLabel("D4", (), note)
        if m == 4:
            return SingTypeLabel("X9", (), note)
        return SingTypeLabel("OrdinaryM", (m,), note)
    note = "quasi-homogeneous" if tau == mu else "not quasi-homogeneous"
    if m == 4 and mu == 15 and tau == 15:
        note = "quasi-homogeneous, Z_{1,0}-like invariants"
    return SingTypeLabel("Other", raw, note)

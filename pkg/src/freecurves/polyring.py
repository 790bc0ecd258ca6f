"""Sparse homogeneous polynomials in x, y, z over a NumberField, plus the parser."""

from __future__ import annotations

import random
import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .errors import (
    DegreeMismatch,
    MixedFields,
    NotHomogeneous,
    PolySyntaxError,
    SingularMatrix,
    UnknownSymbol,
)
from .numfield import QQ, FieldElement, NumberField

Monomial = tuple  # (a, b, c) for x^a y^b z^c
VARS = ("x", "y", "z")


@lru_cache(maxsize=None)
def graded_basis(r: int) -> tuple:
    """All monomials of degree r, lexicographic with x > y > z (x^r first)."""
    if r < 0:
        return ()
    return tuple((a, b, r - a - b) for a in range(r, -1, -1) for b in range(r - a, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(r: int) -> dict:
    return {m: i for i, m in enumerate(graded_basis(r))}


def dim_S(r: int) -> int:
    """dim of the degree r piece of K[x,y,z]; zero for negative r."""
    return comb(r + 2, 2) if r >= 0 else 0


def _lex_key(m):
    return tuple(-e for e in m)


class HomogPoly:
    """Homogeneous polynomial; ``terms`` maps exponent triples to nonzero coefficients."""

    __slots__ = ("field", "degree", "terms", "_hash")

    def __init__(self, field: NumberField, degree: int, terms: dict | None = None):
        self.field = field
        self.degree = degree
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        for m in self.terms:
            if sum(m) != degree:
                raise NotHomogeneous(f"monomial {m} has degree {sum(m)}, expected {degree}")
        self._hash = None

    @classmethod
    def _raw(cls, field, degree, terms):
        p = cls.__new__(cls)
        p.field, p.degree, p.terms, p._hash = field, degree, terms, None
        return p

    @classmethod
    def zero(cls, field: NumberField, degree: int) -> "HomogPoly":
        return cls._raw(field, degree, {})

    @classmethod
    def constant(cls, field: NumberField, value) -> "HomogPoly":
        return cls(field, 0, {(0, 0, 0): field.coerce(value)})

    @classmethod
    def variable(cls, field: NumberField, name: str) -> "HomogPoly":
        i = VARS.index(name)
        return cls._raw(field, 1, {tuple(int(j == i) for j in range(3)): field.one()})

    @classmethod
    def linear(cls, field: NumberField, a, b, c) -> "HomogPoly":
        return cls(field, 1, {(1, 0, 0): field.coerce(a), (0, 1, 0): field.coerce(b), (0, 0, 1): field.coerce(c)})

    # --- basic protocol ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, m) -> FieldElement:
        return self.terms.get(tuple(m), self.field.zero())

    def monomials(self) -> list:
        return sorted(self.terms, key=_lex_key)

    def __eq__(self, other):
        if isinstance(other, HomogPoly):
            if self.is_zero() and other.is_zero():
                return self.degree == other.degree
            return self.field == other.field and self.degree == other.degree and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self.terms.items())))
        return self._hash

    def _check(self, other: "HomogPoly"):
        if other.field != self.field:
            raise MixedFields(f"{self.field!r} vs {other.field!r}")

    # --- arithmetic ----------------------------------------------------------
    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        if not isinstance(other, HomogPoly):
            return NotImplemented
        self._check(other)
        if other.degree != self.degree and other.terms and self.terms:
            raise DegreeMismatch(f"cannot add degrees {self.degree} and {other.degree}")
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return HomogPoly._raw(self.field, self.degree, out)

    def __neg__(self) -> "HomogPoly":
        return HomogPoly._raw(self.field, self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HomogPoly":
        c = self.field.coerce(c)
        if not c:
            return HomogPoly.zero(self.field, self.degree)
        return HomogPoly._raw(self.field, self.degree, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(other)
        if not isinstance(other, HomogPoly):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for (a1, b1, c1), v1 in self.terms.items():
            for (a2, b2, c2), v2 in other.terms.items():
                m = (a1 + a2, b1 + b2, c1 + c2)
                p = v1 * v2
                q = out.get(m)
                out[m] = p if q is None else q + p
        return HomogPoly._raw(self.field, self.degree + other.degree, {m: v for m, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HomogPoly":
        result = HomogPoly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def times_monomial(self, m) -> "HomogPoly":
        a, b, c = m
        return HomogPoly._raw(
            self.field, self.degree + a + b + c,
            {(x + a, y + b, z + c): v for (x, y, z), v in self.terms.items()},
        )

    def derivative(self, var) -> "HomogPoly":
        i = VARS.index(var) if isinstance(var, str) else var
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * m[i]
        return HomogPoly._raw(self.field, max(self.degree - 1, 0), out)

    def gradient(self) -> tuple:
        return tuple(self.derivative(i) for i in range(3))

    def evaluate(self, point: Sequence) -> FieldElement:
        F = self.field
        pt = [F.coerce(v) for v in point]
        pows = [[F.one()] for _ in range(3)]
        for i in range(3):
            for _ in range(self.degree):
                pows[i].append(pows[i][-1] * pt[i])
        total = F.zero()
        for (a, b, c), v in self.terms.items():
            total = total + v * pows[0][a] * pows[1][b] * pows[2][c]
        return total

    def vector(self) -> list:
        """Coefficients in graded_basis(degree) order."""
        z = self.field.zero()
        return [self.terms.get(m, z) for m in graded_basis(self.degree)]

    @classmethod
    def from_vector(cls, field: NumberField, degree: int, vec: Sequence) -> "HomogPoly":
        return cls._raw(field, degree, {m: v for m, v in zip(graded_basis(degree), vec) if v})

    def change_field(self, field: NumberField) -> "HomogPoly":
        return HomogPoly._raw(field, self.degree, {m: field.coerce(c) for m, c in self.terms.items()})

    def content_normalized(self) -> "HomogPoly":
        """Scale so that the leading coefficient (lex order) is 1."""
        if not self.terms:
            return self
        lead = self.terms[self.monomials()[0]]
        return self.scale(lead.inverse())

    def is_proportional(self, other: "HomogPoly") -> bool:
        if self.degree != other.degree or self.is_zero() or other.is_zero():
            return False
        return self.content_normalized() == other.content_normalized()

    # --- printing ---------------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m in self.monomials():
            c = self.terms[m]
            mon = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, m) if e
            )
            neg = c.is_rational() and c.c[0] < 0
            a = -c if neg else c
            if not mon:
                body = str(a)
            elif a == 1:
                body = mon
            else:
                body = f"{a}*{mon}"
            pieces.append(("-" if neg else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for s, b in pieces[1:]:
            out += f" {s} {b}"
        return out

    def __repr__(self) -> str:
        return f"HomogPoly({self})"


def product(polys: Iterable[HomogPoly], field: NumberField | None = None) -> HomogPoly:
    polys = list(polys)
    F = field or (polys[0].field if polys else QQ)
    result = HomogPoly.constant(F, 1)
    for p in polys:
        result = result * p
    return result


def partial_derivative(p: HomogPoly, var) -> HomogPoly:
    return p.derivative(var)


def poly_arith(p: HomogPoly, q, op: str) -> HomogPoly:
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown op {op!r}")


# --- linear substitutions -------------------------------------------------------

def det3(M) -> FieldElement:
    return (
        M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
        - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
        + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
    )


def matmul3(A, B) -> list:
    return [[sum((A[i][k] * B[k][j] for k in range(1, 3)), A[i][0] * B[0][j]) for j in range(3)] for i in range(3)]


def inverse3(M) -> list:
    d = det3(M)
    if not d:
        raise SingularMatrix("matrix is not invertible")
    inv = d.inverse()
    cof = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            minor = M[r[0]][c[0]] * M[r[1]][c[1]] - M[r[0]][c[1]] * M[r[1]][c[0]]
            cof[i][j] = minor if (i + j) % 2 == 0 else -minor
    return [[cof[j][i] * inv for j in range(3)] for i in range(3)]


def substitute_linear(p: HomogPoly, M) -> HomogPoly:
    """Return p∘M, i.e. p evaluated at M·(x, y, z)."""
    F = p.field
    M = [[F.coerce(v) for v in row] for row in M]
    if not det3(M):
        raise SingularMatrix("substitution matrix is singular")
    forms = [HomogPoly(F, 1, {(1, 0, 0): M[i][0], (0, 1, 0): M[i][1], (0, 0, 1): M[i][2]}) for i in range(3)]
    pw = [[HomogPoly.constant(F, 1)] for _ in range(3)]
    for i in range(3):
        for _ in range(p.degree):
            pw[i].append(pw[i][-1] * forms[i])
    by_a: dict = {}
    for (a, b, c), v in p.terms.items():
        by_a.setdefault(a, []).append((b, c, v))
    total = HomogPoly.zero(F, p.degree)
    for a, rest in by_a.items():
        inner = HomogPoly.zero(F, p.degree - a)
        for b, c, v in rest:
            inner = inner + (pw[1][b] * pw[2][c]).scale(v)
        total = total + pw[0][a] * inner
    return total


# --- bivariate (local chart) polynomials -----------------------------------------------

class BivariatePoly:
    """Polynomial in two variables (u, v); terms map (i, j) -> coefficient."""

    __slots__ = ("field", "terms")

    def __init__(self, field: NumberField, terms: dict | None = None):
        self.field = field
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, BivariatePoly):
            return self.field == other.field and self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return BivariatePoly(self.field, out)

    def __neg__(self):
        return BivariatePoly(self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            c = self.field.coerce(other)
            return BivariatePoly(self.field, {m: v * c for m, v in self.terms.items()})
        out: dict = {}
        for (a1, b1), v1 in self.terms.items():
            for (a2, b2), v2 in other.terms.items():
                m = (a1 + a2, b1 + b2)
                out[m] = out[m] + v1 * v2 if m in out else v1 * v2
        return BivariatePoly(self.field, out)

    __rmul__ = __mul__

    def derivative(self, i: int) -> "BivariatePoly":
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * m[i]
        return BivariatePoly(self.field, out)

    def order(self) -> int:
        """Lowest total degree of a nonzero term (multiplicity at the origin)."""
        if not self.terms:
            raise ValueError("zero polynomial has no order")
        return min(a + b for a, b in self.terms)

    def total_degree(self) -> int:
        return max((a + b for a, b in self.terms), default=0)

    def constant_term(self) -> FieldElement:
        return self.terms.get((0, 0), self.field.zero())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, key=lambda m: (-(m[0] + m[1]), -m[0])):
            c = self.terms[(a, b)]
            mon = "*".join(s for s in (("u" if a == 1 else f"u^{a}") if a else "", ("v" if b == 1 else f"v^{b}") if b else "") if s)
            parts.append(f"{c}*{mon}" if mon else str(c))
        return " + ".join(parts)

    __repr__ = __str__


def dehomogenize(p: HomogPoly, chart: str = "z") -> BivariatePoly:
    """Set the chart variable to 1; the remaining two variables keep their order."""
    i = VARS.index(chart[0])
    keep = [j for j in range(3) if j != i]
    out: dict = {}
    for m, c in p.terms.items():
        k = (m[keep[0]], m[keep[1]])
        out[k] = out[k] + c if k in out else c
    return BivariatePoly(p.field, out)


# --- univariate helpers over a NumberField (lists, low degree first) -------------------

def _utrim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _umod(a: list, b: list) -> list:
    a = list(a)
    inv = b[-1].inverse()
    while len(_utrim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv
        for i, bi in enumerate(b):
            if bi:
                a[shift + i] = a[shift + i] - c * bi
        a.pop()
    return a


def ugcd(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> list:
    """Monic gcd of two univariate polynomials over a field."""
    a, b = _utrim(list(a)), _utrim(list(b))
    while b:
        a, b = b, _umod(a, b)
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def uderiv(a: Sequence[FieldElement]) -> list:
    return [a[i] * i for i in range(1, len(a))]


def is_reduced(p: HomogPoly, rng: random.Random | None = None) -> bool:
    """Squarefreeness of p over its (perfect) base field.

    After moving a point off the curve to (1:0:0) the x-degree of every factor
    equals its total degree with constant leading coefficient.  A square
    factor then survives every specialisation (y, z) = (y0, 1), whereas a
    squarefree p has nonzero discriminant in y, so some of at most
    d(d-1)+1 distinct y0 gives a squarefree univariate polynomial.
    """
    if p.is_zero():
        return False
    d = p.degree
    if d <= 1:
        return True
    F = p.field
    rng = rng or random.Random(1729)
    # a point (1 : a : b) off the curve
    cands = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 3)]
    while True:
        a, b = cands.pop(0) if cands else (rng.randint(-50, 50), rng.randint(-50, 50))
        if p.evaluate((1, a, b)):
            break
    M = [[F.one(), F.zero(), F.zero()], [F(a), F.one(), F.zero()], [F(b), F.zero(), F.one()]]
    q = substitute_linear(p, M)
    # collect coefficients of x^i as binary forms in (y, z)
    byx: dict = {}
    for (i, j, k), c in q.terms.items():
        byx.setdefault(i, []).append((j, c))
    tried = set()
    limit = d * (d - 1) + 1
    y0 = 0
    while len(tried) < limit:
        if y0 in tried:
            y0 = rng.randint(-10 * limit, 10 * limit)
            continue
        tried.add(y0)
        Y = F(y0)
        uni = []
        for i in range(d + 1):
            s = F.zero()
            for j, c in byx.get(i, []):
                s = s + c * Y ** j
            uni.append(s)
        if len(ugcd(uni, uderiv(uni))) == 1:
            return True
        y0 = len(tried)
    return False


# --- parser ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class _Parser:
    def __init__(self, text: str, field: NumberField, line: int | None = None, col_offset: int = 0,
                 aliases: dict | None = None):
        self.text = text
        self.aliases = aliases or {}
        self.F = field
        self.line = line
        self.col_offset = col_offset
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            if m.group(1) is not None:
                self.toks.append(("num", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.toks.append(("id", m.group(2), m.start(2)))
            elif m.group(3) is not None:
                if m.group(3).strip():
                    self.toks.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.toks.append(("end", "", len(text.rstrip())))
        self.i = 0

    def err(self, cls, msg, tok=None):
        tok = tok or self.toks[self.i]
        return cls(msg, self.line, tok[2] + 1 + self.col_offset)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self) -> dict:
        p = self.expr()
        if self.peek()[0] != "end":
            raise self.err(PolySyntaxError, f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self) -> dict:
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = _padd(p, q, -1 if op == "-" else 1)
        return p

    def term(self) -> dict:
        p = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            p = _pmul(p, self.factor())
        return p

    def factor(self) -> dict:
        t = self.peek()
        if t[0] == "op" and t[1] in ("-", "+"):
            self.take()
            p = self.factor()
            return {m: -c for m, c in p.items()} if t[1] == "-" else p
        b = self.base()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "num":
                raise self.err(PolySyntaxError, "exponent must be a non-negative integer", e)
            r = {(0, 0, 0): self.F.one()}
            for _ in range(int(e[1])):
                r = _pmul(r, b)
            return r
        return b

    def base(self) -> dict:
        t = self.take()
        F = self.F
        if t[0] == "num":
            val = Fraction(int(t[1]))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num":
                    raise self.err(PolySyntaxError, "expected an unsigned integer denominator", den)
                if int(den[1]) == 0:
                    raise self.err(PolySyntaxError, "zero denominator", den)
                val /= int(den[1])
            return {(0, 0, 0): F.coerce(val)} if val else {}
        if t[0] == "id":
            if t[1] in self.aliases:
                return {tuple(int(v == self.aliases[t[1]]) for v in VARS): F.one()}
            if t[1] in VARS and self.aliases:
                raise self.err(UnknownSymbol, f"unknown symbol {t[1]!r}", t)
            if t[1] in VARS:
                return {tuple(int(v == t[1]) for v in VARS): F.one()}
            if F.generator_name is not None and t[1] == F.generator_name:
                return {(0, 0, 0): F.gen()}
            raise self.err(UnknownSymbol, f"unknown symbol {t[1]!r}", t)
        if t[0] == "op" and t[1] == "(":
            p = self.expr()
            close = self.take()
            if close[1] != ")":
                raise self.err(PolySyntaxError, "expected ')'", close)
            return p
        if t[0] == "end":
            raise self.err(PolySyntaxError, "unexpected end of input", t)
        raise self.err(PolySyntaxError, f"unexpected {t[1]!r}", t)


def _padd(p: dict, q: dict, sign: int) -> dict:
    out = dict(p)
    for m, c in q.items():
        if sign < 0:
            c = -c
        v = out[m] + c if m in out else c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _pmul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (a1, b1, c1), v1 in p.items():
        for (a2, b2, c2), v2 in q.items():
            m = (a1 + a2, b1 + b2, c1 + c2)
            out[m] = out[m] + v1 * v2 if m in out else v1 * v2
    return {m: v for m, v in out.items() if v}


def parse_poly(text: str, field: NumberField = QQ, line: int | None = None, col_offset: int = 0) -> HomogPoly:
    """Parse the explicit-operator grammar into a HomogPoly, checking homogeneity."""
    terms = _Parser(text, field, line, col_offset).parse()
    degrees = {sum(m) for m in terms}
    if len(degrees) > 1:
        raise NotHomogeneous(f"terms of degrees {sorted(degrees)}", line, None)
    degree = degrees.pop() if degrees else 0
    return HomogPoly(field, degree, terms)


def parse_field_poly(text: str, name: str, line: int | None = None, col_offset: int = 0) -> list:
    """Parse a univariate rational polynomial in ``name``; coefficients low degree first."""
    if name in VARS:
        raise UnknownSymbol(f"field generator may not be named {name!r}", line, None)
    terms = _Parser(text, QQ, line, col_offset, aliases={name: "x"}).parse()
    deg = max((m[0] for m in terms), default=0)
    out = [Fraction(0)] * (deg + 1)
    for m, c in terms.items():
        if m[1] or m[2]:
            raise UnknownSymbol("field polynomial may only use its generator", line, None)
        out[m[0]] = c.c[0]
    return out

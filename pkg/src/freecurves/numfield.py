"""Exact arithmetic in Q and in simple extensions Q(a) = Q[t]/(m(t)), deg m <= 4.

Elements are stored in the power basis 1, a, ..., a^(k-1) with Fraction
coordinates and are always fully reduced, so equality is coordinate equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .errors import (
    DegreeUnsupported,
    DivisionByZero,
    MixedFields,
    ProvablyReducible,
    ReducibleMinpoly,
)

Rational = Fraction

MAX_DEGREE = 4


# --- univariate helpers over Q (coefficient lists, low degree first) ---------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod_q(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = list(a)
    b = _trim(list(b))
    if not b:
        raise DivisionByZero("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
        a.pop()
    return _trim(q), a


def _xgcd_q(a: Sequence[Fraction], b: Sequence[Fraction]):
    """Return (g, s) with s*a = g mod b, g the monic gcd."""
    r0, r1 = _trim(list(a)), _trim(list(b))
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _divmod_q(r0, r1)
        # s2 = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1)) if s1 and q else []
        for i, qi in enumerate(q):
            for j, sj in enumerate(s1):
                prod[i + j] += qi * sj
        n = max(len(s0), len(prod))
        s2 = [(s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0) for i in range(n)]
        r0, r1 = r1, r
        s0, s1 = s1, _trim([Fraction(v) for v in s2])
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0]


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def rational_sqrt(q: Fraction) -> Fraction | None:
    q = Fraction(q)
    if not _is_rational_square(q):
        return None
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


# --- fields -----------------------------------------------------------------

@dataclass(frozen=True)
class NumberField:
    """Q[t]/(minpoly).  ``minpoly`` holds coefficients low degree first, monic."""

    minpoly: tuple
    generator_name: str | None = None

    def __post_init__(self):
        mp = tuple(Fraction(c) for c in self.minpoly)
        object.__setattr__(self, "minpoly", mp)
        k = len(mp) - 1
        if k < 1 or k > MAX_DEGREE:
            raise DegreeUnsupported(f"minimal polynomial degree {k} outside 1..{MAX_DEGREE}")
        if mp[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        # a^j for j = k .. 2k-2 expressed in the power basis
        red = []
        cur = [-c for c in mp[:-1]]  # a^k
        for _ in range(k - 1):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            cur = [cur[i] - top * mp[i] for i in range(k)]
        red.append(tuple(cur))
        object.__setattr__(self, "_red", tuple(red))

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def __call__(self, value) -> "FieldElement":
        return self.coerce(value)

    def coerce(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                if value.is_rational():
                    return self.from_coeffs([value.c[0]])
                raise MixedFields(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, (int, Fraction)):
            return FieldElement(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))
        if isinstance(value, str):
            return FieldElement(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def from_coeffs(self, coeffs: Iterable) -> "FieldElement":
        c = [Fraction(v) for v in coeffs]
        k = self.degree
        if len(c) > k:
            c = _reduce(self, c)
        c += [Fraction(0)] * (k - len(c))
        return FieldElement(self, tuple(c))

    def zero(self) -> "FieldElement":
        return self.coerce(0)

    def one(self) -> "FieldElement":
        return self.coerce(1)

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self.coerce(-self.minpoly[0])
        return FieldElement(self, tuple(Fraction(int(i == 1)) for i in range(self.degree)))

    def minpoly_str(self, var: str | None = None) -> str:
        var = var or self.generator_name or "t"
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.minpoly[e]
            if c == 0:
                continue
            mon = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mon and a == 1:
                body = mon
            elif mon:
                body = f"{a}*{mon}"
            else:
                body = str(a)
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    def __str__(self) -> str:
        if self.is_rational:
            return "QQ"
        return f"QQ({self.generator_name or 't'}), {self.minpoly_str()} = 0"

    def __repr__(self) -> str:
        return f"NumberField({self.minpoly_str()!r}, {self.generator_name!r})"


def _reduce(F: NumberField, c: list) -> list:
    k = F.degree
    out = list(c[:k]) + [Fraction(0)] * max(0, k - len(c))
    for j in range(k, len(c)):
        cj = c[j]
        if cj:
            for i, r in enumerate(F._red[j - k]):
                if r:
                    out[i] += cj * r
    return out


QQ = NumberField((Fraction(0), Fraction(1)), None)


class FieldElement:
    """Immutable element of a NumberField in canonical power-basis form."""

    __slots__ = ("field", "c", "_hash")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.c = coeffs
        self._hash = None

    # construction helpers
    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise MixedFields(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def __bool__(self) -> bool:
        return any(self.c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.c))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.c))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        k = len(self.c)
        if k == 1:
            return FieldElement(self.field, (self.c[0] * o.c[0],))
        prod = [Fraction(0)] * (2 * k - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        return FieldElement(self.field, tuple(_reduce(self.field, prod)))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if len(self.c) == 1:
            return FieldElement(self.field, (1 / self.c[0],))
        g, s = _xgcd_q(self.c, self.field.minpoly)
        if len(g) > 1:
            raise ReducibleMinpoly(
                f"{self.field.minpoly_str()} has a proper factor of degree {len(g) - 1}"
            )
        return self.field.from_coeffs(s)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c[0] == other and not any(self.c[1:])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.c[0]) if self.is_rational() else hash(self.c)
        return self._hash

    def bit_size(self) -> int:
        return sum(a.numerator.bit_length() + a.denominator.bit_length() for a in self.c)

    def sort_key(self) -> tuple:
        return self.c

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def denominator_lcm(self) -> int:
        from math import lcm

        return lcm(*(a.denominator for a in self.c))

    # printing in the input grammar: rationals bare, others parenthesised
    def __str__(self) -> str:
        name = self.field.generator_name or "t"
        terms = []
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                mon = name if i == 1 else f"{name}^{i}"
                terms.append(mon if a == 1 else ("-" + mon if a == -1 else f"{a}*{mon}"))
        if not terms:
            return "0"
        s = terms[0]
        for t in terms[1:]:
            s += " - " + t[1:] if t.startswith("-") else " + " + t
        if len(terms) > 1 or (terms and self.c[0] == 0 and len(self.c) > 1):
            return f"({s})"
        return s

    def __repr__(self) -> str:
        return f"FieldElement({self})"


def adjoin_root(minpoly: Sequence, name: str | None = "a") -> NumberField:
    """Build Q(a) for a monic minimal polynomial given low degree first.

    Degree 2 polynomials are checked for rational roots; degrees 3 and 4 are
    trusted and a bad assertion surfaces later as ReducibleMinpoly.
    """
    mp = [Fraction(c) for c in minpoly]
    _trim(mp)
    k = len(mp) - 1
    if k > MAX_DEGREE:
        raise DegreeUnsupported(f"degree {k} > {MAX_DEGREE}")
    if k < 1:
        raise DegreeUnsupported("constant minimal polynomial")
    if mp[-1] != 1:
        raise ValueError("minimal polynomial must be monic")
    if k == 2:
        disc = mp[1] * mp[1] - 4 * mp[0]
        if _is_rational_square(disc):
            raise ProvablyReducible(f"{NumberField(tuple(mp), name).minpoly_str()} has a rational root")
    return NumberField(tuple(mp), name)


def cyclotomic_field(n: int, name: str = "e") -> tuple[NumberField, FieldElement]:
    """Q(zeta_n) with a primitive n-th root of unity, for phi(n) <= 4."""
    table = {
        1: [-1, 1],
        2: [1, 1],
        3: [1, 1, 1],
        4: [1, 0, 1],
        5: [1, 1, 1, 1, 1],
        6: [1, -1, 1],
        8: [1, 0, 0, 0, 1],
        10: [1, -1, 1, -1, 1],
        12: [1, 0, -1, 0, 1],
    }
    if n not in table:
        raise DegreeUnsupported(f"Q(zeta_{n}) has degree > {MAX_DEGREE}")
    if n <= 2:
        return QQ, QQ(1 if n == 1 else -1)
    F = NumberField(tuple(Fraction(c) for c in table[n]), name)
    return F, F.gen()


# --- factoring univariate polynomials over a field (delegated to sympy) ------

def _sympy_domain(F: NumberField):
    from sympy import CRootOf, Poly, QQ as SQQ, Symbol

    if F.is_rational:
        return SQQ, None
    t = Symbol("t")
    mp = Poly([F.minpoly[i] for i in range(F.degree, -1, -1)], t, domain=SQQ)
    dom = SQQ.algebraic_field(CRootOf(mp, 0))
    mod = [Fraction(int(v.numerator), int(v.denominator)) for v in dom.mod.to_list()]
    if mod != list(F.minpoly[::-1]):
        raise ReducibleMinpoly(f"{F.minpoly_str()} is not the minimal polynomial of its root")
    return dom, dom


def _to_sympy(F: NumberField, dom, e: FieldElement):
    if dom is None or F.is_rational:
        from sympy import QQ as SQQ

        return SQQ(e.c[0].numerator, e.c[0].denominator)
    return dom([_q(c) for c in reversed(e.c)])


def _q(c: Fraction):
    from sympy import QQ as SQQ

    return SQQ(c.numerator, c.denominator)


def _from_sympy(F: NumberField, dom, v) -> FieldElement:
    if F.is_rational:
        return F.coerce(Fraction(int(v.numerator), int(v.denominator)))
    coeffs = list(v.to_list())[::-1]
    return F.from_coeffs(Fraction(int(c.numerator), int(c.denominator)) for c in coeffs)


def factor_univariate(F: NumberField, coeffs: Sequence[FieldElement]):
    """Factor a univariate polynomial over F (coefficients low degree first).

    Returns a list of (monic factor coefficients low first, multiplicity).
    """
    from sympy import Poly, Symbol

    dom, _ = _sympy_domain(F)
    u = Symbol("u")
    c = [F.coerce(v) for v in coeffs]
    while c and c[-1].is_zero():
        c.pop()
    if len(c) <= 1:
        return []
    P = Poly([_to_sympy(F, dom, v) for v in reversed(c)], u, domain=dom)
    _, facs = P.factor_list()
    out = []
    for fac, mult in facs:
        rep = fac.rep.to_list()
        lead = rep[0]
        fe = [_from_sympy(F, dom, dom.quo(v, lead) if not F.is_rational else v / lead) for v in rep]
        out.append((fe[::-1], mult))
    out.sort(key=lambda fm: (len(fm[0]), [x.sort_key() for x in fm[0]], fm[1]))
    return out


def roots_in_field(F: NumberField, coeffs: Sequence[FieldElement]):
    """Roots of a univariate polynomial lying in F, plus its nonlinear factors.

    Returns (roots, rest): roots is a list of (root, multiplicity) and rest a
    list of (monic factor coefficients, multiplicity) of degree >= 2.
    """
    roots, rest = [], []
    for fac, mult in factor_univariate(F, coeffs):
        if len(fac) == 2:
            roots.append((-fac[0], mult))
        else:
            rest.append((fac, mult))
    roots.sort(key=lambda rm: rm[0].sort_key())
    return roots, rest

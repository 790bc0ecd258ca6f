"""Exact dense linear algebra over a NumberField.

Two pure-Python strategies:

* fraction-free (Bareiss) elimination on integer-scaled rows over Q,
* plain field elimination with eager canonicalisation over extensions.

Both choose the pivot of smallest bit size (ties: lowest row).  Large
problems are handed to FLINT's exact integer matrices after "realifying":
an element c of Q(a) acts on the power basis by a k x k rational block, so a
K-matrix becomes a Q-matrix with k times as many rows and columns.  Ranks
over K are Q-ranks divided by k, and a K-kernel is read off the Q-echelon
form of the Q-kernel (pivots of a K-subspace come in whole blocks).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .numfield import FieldElement, NumberField

try:  # optional fast backend
    import flint
except ImportError:  # pragma: no cover - exercised only without python-flint
    flint = None

# problems with more scalar entries than this go to the FLINT backend
FLINT_THRESHOLD = 3000


class Matrix:
    """Dense row-major matrix of FieldElements."""

    __slots__ = ("rows", "cols", "field", "entries")

    def __init__(self, field: NumberField, rows: int, cols: int, entries: Sequence | None = None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if entries is None:
            z = field.zero()
            entries = [z] * (rows * cols)
        else:
            entries = [field.coerce(e) for e in entries]
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.entries = entries

    @classmethod
    def from_rows(cls, field: NumberField, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(field, len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, field: NumberField, n: int) -> "Matrix":
        return cls(field, n, n, [field.one() if i == j else field.zero() for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    def apply(self, v: Sequence) -> list:
        z = self.field.zero()
        out = []
        for i in range(self.rows):
            s = z
            for a, b in zip(self.row(i), v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __repr__(self):
        return "Matrix(" + "; ".join(" ".join(str(e) for e in r) for r in self.to_rows()) + ")"


# --- pure Python elimination ---------------------------------------------------------

def _bits(v) -> int:
    if isinstance(v, int):
        return abs(v).bit_length()
    return v.bit_size()


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    prev = 1
    r = 0
    for c in range(n):
        best, bestbits = None, None
        for i in range(r, m):
            v = A[i][c]
            if v:
                b = abs(v).bit_length()
                if best is None or b < bestbits:
                    best, bestbits = i, b
        if best is None:
            continue
        A[r], A[best] = A[best], A[r]
        p = A[r][c]
        prow = A[r]
        for i in range(r + 1, m):
            row = A[i]
            a = row[c]
            if a:
                for j in range(c + 1, n):
                    row[j] = (p * row[j] - a * prow[j]) // prev
            else:
                for j in range(c + 1, n):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list:
    out = []
    for r in rows:
        L = lcm(*(Fraction(v).denominator for v in r)) if r else 1
        out.append([int(Fraction(v) * L) for v in r])
    return out


def _field_rref(field: NumberField, rows: Sequence[Sequence[FieldElement]], cols: int):
    """Reduced row echelon form by field elimination; returns (rows, pivots)."""
    A = [list(r) for r in rows]
    m = len(A)
    pivots = []
    r = 0
    for c in range(cols):
        best, bestbits = None, None
        for i in range(r, m):
            v = A[i][c]
            if v:
                b = v.bit_size()
                if best is None or b < bestbits:
                    best, bestbits = i, b
        if best is None:
            continue
        A[r], A[best] = A[best], A[r]
        inv = A[r][c].inverse()
        A[r] = [v * inv if v else v for v in A[r]]
        prow = A[r]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                row = A[i]
                for j in range(c, cols):
                    if prow[j]:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


# --- realification and the FLINT backend -------------------------------------------------

_block_cache: dict = {}


def field_block(c: FieldElement) -> tuple:
    """k x k rational matrix of multiplication by c; column s holds coords of c*a^s."""
    key = (c.field, c.c)
    blk = _block_cache.get(key)
    if blk is None:
        F = c.field
        k = F.degree
        cols = []
        cur = c
        g = F.gen() if k > 1 else None
        for s in range(k):
            cols.append(cur.c)
            if s + 1 < k:
                cur = cur * g
        blk = tuple(tuple(cols[s][t] for s in range(k)) for t in range(k))
        if len(_block_cache) > 200000:
            _block_cache.clear()
        _block_cache[key] = blk
    return blk


class IntMatrix:
    """Sparse integer matrix under construction, convertible to FLINT or lists."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, nrows: int, ncols: int):
        self.nrows = nrows
        self.ncols = ncols
        self.data: dict = {}

    def set(self, i: int, j: int, v: int):
        if v:
            self.data[(i, j)] = v

    def to_flint(self):
        M = flint.fmpz_mat(self.nrows, self.ncols)
        for (i, j), v in self.data.items():
            M[i, j] = v
        return M

    def to_lists(self) -> list:
        A = [[0] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.data.items():
            A[i][j] = v
        return A


def _scale_for(values: Iterable[FieldElement]) -> int:
    """Common denominator clearing every realified block of the given values."""
    D = 1
    seen = set()
    for c in values:
        if c.c in seen:
            continue
        seen.add(c.c)
        for row in field_block(c):
            for v in row:
                if v.denominator != 1:
                    D = lcm(D, v.denominator)
    return D


def realify_operator(M: Matrix) -> IntMatrix:
    """Integer matrix R with R·phi(v) = D·phi(M v) for all v in K^cols."""
    k = M.field.degree
    D = _scale_for(e for e in M.entries if e)
    R = IntMatrix(M.rows * k, M.cols * k)
    for i in range(M.rows):
        for j in range(M.cols):
            c = M.entries[i * M.cols + j]
            if c:
                blk = field_block(c)
                for t in range(k):
                    for s in range(k):
                        v = blk[t][s]
                        if v:
                            R.set(i * k + t, j * k + s, int(v * D))
    return R


def realify_vectors(field: NumberField, vecs: Sequence[Sequence[FieldElement]]) -> list:
    """Rows phi(a^s v) for every v and s; spans phi of the K-span of vecs."""
    k = field.degree
    out = []
    for v in vecs:
        blocks = [field_block(e) if e else None for e in v]
        for s in range(k):
            row = []
            for b in blocks:
                if b is None:
                    row.extend([Fraction(0)] * k)
                else:
                    row.extend(b[t][s] for t in range(k))
            out.append(row)
    return _integer_rows(out)


def int_rank(A) -> int:
    """Rank of an integer matrix (IntMatrix or list of lists)."""
    if isinstance(A, IntMatrix):
        if A.nrows == 0 or A.ncols == 0:
            return 0
        if flint is not None and A.nrows * A.ncols > FLINT_THRESHOLD:
            return A.to_flint().rank()
        return bareiss_rank(A.to_lists())
    if not A or not A[0]:
        return 0
    if flint is not None and len(A) * len(A[0]) > FLINT_THRESHOLD:
        return flint.fmpz_mat(A).rank()
    return bareiss_rank(A)


def int_nullspace(A) -> list:
    """Basis of the rational right kernel of an integer matrix, as integer vectors."""
    if isinstance(A, IntMatrix):
        nrows, ncols = A.nrows, A.ncols
    else:
        nrows, ncols = len(A), (len(A[0]) if A else 0)
    if ncols == 0:
        return []
    if nrows == 0:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    if flint is not None:
        FM = A.to_flint() if isinstance(A, IntMatrix) else flint.fmpz_mat(A)
        N, nul = FM.nullspace()
        return [[int(N[i, j]) for i in range(ncols)] for j in range(nul)]
    rows = A.to_lists() if isinstance(A, IntMatrix) else A
    return _fraction_nullspace(rows, ncols)


def _fraction_nullspace(rows, ncols) -> list:
    from .numfield import QQ

    R, piv = _field_rref(QQ, [[QQ(v) for v in r] for r in rows], ncols)
    basis = []
    pivset = set(piv)
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(R, piv):
            v[p] = -row[free].c[0]
        basis.append(v)
    return _integer_rows(basis)


def int_rref(rows: Sequence[Sequence[int]], ncols: int):
    """Rational reduced row echelon form of integer rows; returns (rows, pivots)
    with rows as lists of Fractions."""
    if not rows:
        return [], []
    if flint is not None and len(rows) * ncols > FLINT_THRESHOLD // 4:
        Rm, den, rk = flint.fmpz_mat(rows).rref()
        out, piv = [], []
        den = int(den)
        for i in range(rk):
            row = [int(Rm[i, j]) for j in range(ncols)]
            nz = next((j for j, v in enumerate(row) if v), None)
            if nz is None:
                break
            piv.append(nz)
            out.append([Fraction(v, den) for v in row])
        return out, piv
    from .numfield import QQ

    R, piv = _field_rref(QQ, [[QQ(v) for v in r] for r in rows], ncols)
    return [[e.c[0] for e in r] for r in R], piv


def k_rref_from_q_rows(field: NumberField, rows: Sequence[Sequence[int]], n: int):
    """K-reduced echelon basis of a K-subspace given by Q-spanning rows of phi-vectors.

    Returns (K-vectors, pivot positions)."""
    k = field.degree
    R, piv = int_rref(rows, n * k)
    vecs, kpiv = [], []
    for row, p in zip(R, piv):
        if p % k == 0:
            vecs.append([field.from_coeffs(row[j * k:(j + 1) * k]) for j in range(n)])
            kpiv.append(p // k)
    return vecs, kpiv


# --- public API --------------------------------------------------------------------------

def _use_flint(M: Matrix) -> bool:
    k = M.field.degree
    return flint is not None and M.rows * M.cols * k * k > FLINT_THRESHOLD


def rank(M: Matrix, method: str = "auto") -> int:
    """Rank over the exact field.  ``method`` in {auto, bareiss, field, flint}."""
    if M.rows == 0 or M.cols == 0:
        return 0
    if method == "auto":
        method = "flint" if _use_flint(M) else ("bareiss" if M.field.is_rational else "field")
    if method == "flint":
        R = realify_operator(M)
        k = M.field.degree
        if flint is not None:
            return R.to_flint().rank() // k
        return bareiss_rank(R.to_lists()) // k
    if method == "bareiss":
        if M.field.is_rational:
            return bareiss_rank(_integer_rows([[e.c[0] for e in r] for r in M.to_rows()]))
        return bareiss_rank(realify_operator(M).to_lists()) // M.field.degree
    if method == "field":
        return len(_field_rref(M.field, M.to_rows(), M.cols)[1])
    raise ValueError(f"unknown method {method!r}")


def rref(M: Matrix, method: str = "auto") -> Matrix:
    """Reduced row echelon form (zero rows appended to keep the shape)."""
    if method == "auto":
        method = "flint" if _use_flint(M) else "field"
    if method == "flint":
        vecs, _ = k_rref_from_q_rows(M.field, realify_vectors(M.field, M.to_rows()), M.cols)
    else:
        vecs, _ = _field_rref(M.field, M.to_rows(), M.cols)
    z = M.field.zero()
    vecs = [list(v) for v in vecs] + [[z] * M.cols for _ in range(M.rows - len(vecs))]
    return Matrix.from_rows(M.field, vecs) if vecs else Matrix(M.field, 0, M.cols)


def kernel_basis(M: Matrix, method: str = "auto") -> list:
    """Basis of {v : M v = 0}, in K-reduced echelon form; each vector is verified."""
    F = M.field
    if M.cols == 0:
        return []
    if method == "auto":
        method = "flint" if _use_flint(M) else "field"
    if method == "flint":
        qk = int_nullspace(realify_operator(M))
        basis, _ = k_rref_from_q_rows(F, qk, M.cols) if qk else ([], [])
    else:
        R, piv = _field_rref(F, M.to_rows(), M.cols)
        pivset = set(piv)
        basis = []
        for free in range(M.cols):
            if free in pivset:
                continue
            v = [F.zero()] * M.cols
            v[free] = F.one()
            for row, p in zip(R, piv):
                v[p] = -row[free]
            basis.append(v)
        if basis:
            basis, _ = _field_rref(F, basis, M.cols)
    for v in basis:
        if any(M.apply(v)):
            raise ArithmeticError("kernel vector failed verification")
    return basis


def determinant(M: Matrix) -> FieldElement:
    """Determinant by field elimination (square matrices)."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    F = M.field
    A = [list(r) for r in M.to_rows()]
    n = M.rows
    det = F.one()
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return F.zero()
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        p = A[c][c]
        det = det * p
        inv = p.inverse()
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                for j in range(c, n):
                    if A[c][j]:
                        A[i][j] = A[i][j] - f * A[c][j]
    return det

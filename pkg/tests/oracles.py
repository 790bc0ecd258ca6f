"""Independent reference computations built on sympy."""

import sympy

X, Y, Z = sympy.symbols("x y z")


def to_sympy(p):
    out = 0
    for (i, j, k), c in p.terms.items():
        q = c.to_rational()
        out += sympy.Rational(q.numerator, q.denominator) * X ** i * Y ** j * Z ** k
    return out


def monomials(r):
    return [X ** i * Y ** j * Z ** (r - i - j) for i in range(r, -1, -1) for j in range(r - i, -1, -1)]


def ar_dimension_naive(f, r):
    """dim of {(a,b,c) in S_r^3 : a f_x + b f_y + c f_z = 0} by a dense sympy nullspace."""
    F = to_sympy(f)
    grads = [sympy.diff(F, v) for v in (X, Y, Z)]
    d = f.degree
    target = monomials(r + d - 1)
    index = {m: i for i, m in enumerate(target)}
    cols = []
    for g in grads:
        for m in monomials(r):
            col = [0] * len(target)
            for term, coeff in sympy.Poly(sympy.expand(g * m), X, Y, Z).terms():
                if coeff != 0:
                    col[index[X ** term[0] * Y ** term[1] * Z ** term[2]]] = coeff
            cols.append(col)
    M = sympy.Matrix(cols).T
    return M.shape[1] - M.rank()


def milnor_algebra_dim(f, k):
    """dim (S / J_f)_k from standard monomials of a grevlex Groebner basis."""
    F = to_sympy(f)
    G = sympy.groebner([sympy.diff(F, v) for v in (X, Y, Z)], X, Y, Z, order="grevlex")
    leads = [sympy.Poly(g, X, Y, Z).monoms(order="grevlex")[0] for g in G.exprs]
    count = 0
    for i in range(k, -1, -1):
        for j in range(k - i, -1, -1):
            m = (i, j, k - i - j)
            if not any(all(m[t] >= l[t] for t in range(3)) for l in leads):
                count += 1
    return count

"""Exact integer and rational linear algebra over lattices.

Vectors are tuples of Python ints (lattice points) or ``Fraction``s
(rational points); matrices are row-major tuples of int tuples. Python's
arbitrary-precision integers keep every result exact, so nothing in this
module (or anything built on it) ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction

IntVec = tuple[int, ...]
QVec = tuple[Fraction, ...]
IntMat = tuple[tuple[int, ...], ...]


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(c, u):
    return tuple(c * a for a in u)


def zero_vector(rank: int) -> IntVec:
    return (0,) * rank


def unit_vector(rank: int, i: int) -> IntVec:
    return tuple(1 if j == i else 0 for j in range(rank))


def content(v: Iterable[int]) -> int:
    """gcd of the coordinates; 0 for the zero vector."""
    g = 0
    for a in v:
        g = gcd(g, a)
    return g


def is_primitive(v: Iterable[int]) -> bool:
    return content(v) == 1


def primitive_vector(v: Sequence[int]) -> IntVec:
    """Divide an integer vector by the gcd of its coordinates."""
    g = content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return tuple(a // g for a in v)


def primitive_from_rational(v: Sequence) -> IntVec:
    """Primitive integer vector pointing along a rational vector."""
    d = 1
    for c in v:
        d = lcm(d, Fraction(c).denominator)
    return primitive_vector(tuple(int(c * d) for c in v))


def is_lex_positive(v: Sequence[int]) -> bool:
    for a in v:
        if a:
            return a > 0
    return False


def lex_positive(v: Sequence[int]) -> IntVec:
    """The vector or its negative, whichever has positive leading entry."""
    return tuple(v) if is_lex_positive(v) else vneg(v)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# -- matrices ---------------------------------------------------------------


def identity_matrix(n: int) -> IntMat:
    return tuple(unit_vector(n, i) for i in range(n))


def transpose(a):
    return tuple(zip(*a))


def mat_vec(a, v):
    return tuple(dot(row, v) for row in a)


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def matrix_from_columns(cols: Sequence[Sequence]) -> IntMat:
    return transpose(cols)


def matrix_columns(a) -> tuple:
    return transpose(a)


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix given by its rows (int or Fraction entries)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        for r in range(row + 1, len(m)):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == len(m):
            break
    return rank


def determinant(a: Sequence[Sequence[int]]) -> int:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    if det.denominator != 1:
        raise AssertionError("integer determinant came out fractional")
    return int(det)


def is_unimodular(a) -> bool:
    try:
        return abs(determinant(a)) == 1
    except ValueError:
        return False


def inverse_unimodular(a: Sequence[Sequence[int]]) -> IntMat:
    """Exact inverse of a matrix with determinant +/-1."""
    n = len(a)
    if abs(determinant(a)) != 1:
        raise ValueError("matrix is not unimodular")
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    out = tuple(tuple(int(x) for x in row[n:]) for row in m)
    return out


# -- Smith decomposition ----------------------------------------------------


def smith_decomposition(mat: Sequence[Sequence[int]]) -> tuple[IntMat, IntMat, IntMat]:
    """(U, D, V) with U*mat*V = D diagonal, U and V unimodular.

    Diagonal entries are nonnegative and each divides the next; zero
    entries come last. Works for any rectangular integer matrix.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if rows == 0 or cols == 0:
        raise ValueError("smith_decomposition needs a nonempty matrix")
    d = [list(row) for row in mat]
    if any(len(row) != cols for row in d):
        raise ValueError("ragged matrix")
    u = [list(row) for row in identity_matrix(rows)]
    v = [list(row) for row in identity_matrix(cols)]

    def row_op(i1, i2, a, b, c, e):
        # rows i1, i2 <- a*r1 + b*r2, c*r1 + e*r2 with a*e - b*c = +/-1
        for x in (d, u):
            r1, r2 = x[i1], x[i2]
            x[i1] = [a * p + b * q for p, q in zip(r1, r2)]
            x[i2] = [c * p + e * q for p, q in zip(r1, r2)]

    def col_op(j1, j2, a, b, c, e):
        for x in (d, v):
            for r in x:
                p, q = r[j1], r[j2]
                r[j1] = a * p + b * q
                r[j2] = c * p + e * q

    def clear_at(t):
        # Plain eliminations when the pivot divides the target leave the
        # pivot row/column alone; the gcd op only fires when it strictly
        # shrinks |pivot|, so the alternation terminates.
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    a, b = d[t][t], d[i][t]
                    if b % a == 0:
                        row_op(t, i, 1, 0, -(b // a), 1)
                    else:
                        g, x, y = xgcd(a, b)
                        row_op(t, i, x, y, -(b // g), a // g)
                    dirty = True
            for j in range(t + 1, cols):
                if d[t][j]:
                    a, b = d[t][t], d[t][j]
                    if b % a == 0:
                        col_op(t, j, 1, 0, -(b // a), 1)
                    else:
                        g, x, y = xgcd(a, b)
                        col_op(t, j, x, y, -(b // g), a // g)
                    dirty = True
            if not dirty:
                return

    limit = min(rows, cols)
    for t in range(limit):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        if i != t:
            d[t], d[i] = d[i], d[t]
            u[t], u[i] = u[i], u[t]
        if j != t:
            for x in (d, v):
                for r in x:
                    r[t], r[j] = r[j], r[t]
        clear_at(t)

    # divisibility chain d_i | d_{i+1}
    done = False
    while not done:
        done = True
        for t in range(limit - 1):
            a, b = d[t][t], d[t + 1][t + 1]
            if a and b % a:
                col_op(t, t + 1, 1, 1, 0, 1)
                clear_at(t)
                done = False
    for t in range(limit):
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]

    to_mat = lambda x: tuple(tuple(row) for row in x)
    return to_mat(u), to_mat(d), to_mat(v)


def adapted_basis(u: Sequence[int]) -> tuple[IntVec, tuple[IntVec, ...]]:
    """Splitting of the lattice along a primitive functional u.

    Returns (w, kernel) where u(w) = 1, the kernel vectors span
    ker u, and [kernel..., w] is a unimodular basis. Deterministic:
    built by folding coordinates with xgcd, kernel vectors normalized
    lex-positive.
    """
    u = tuple(u)
    if content(u) != 1:
        raise ValueError("adapted basis requires a primitive functional")
    n = len(u)
    g = 0
    g_col: IntVec | None = None
    kernel: list[IntVec] = []
    for i, b in enumerate(u):
        e_i = unit_vector(n, i)
        if b == 0:
            kernel.append(e_i)
        elif g == 0:
            g = abs(b)
            g_col = e_i if b > 0 else vneg(e_i)
        else:
            g2, x, y = xgcd(g, b)
            kernel.append(vsub(vscale(b // g2, g_col), vscale(g // g2, e_i)))
            g_col = vadd(vscale(x, g_col), vscale(y, e_i))
            g = g2
    assert g == 1 and g_col is not None
    kernel = [lex_positive(k) for k in kernel]
    return g_col, tuple(kernel)

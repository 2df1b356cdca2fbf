"""Exact dense linear algebra over Q and Q(zeta_m).

Matrices are lists of rows.  Entries may be ``int``, ``Fraction`` or
``CyclotomicScalar``; nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import canon


def _is_integral(rows):
    for row in rows:
        for x in row:
            if isinstance(x, int):
                continue
            if isinstance(x, Fraction) and x.denominator == 1:
                continue
            return False
    return True


def _bareiss(rows, ncols):
    """In-place fraction-free forward elimination. Returns (rank, sign, last pivot)."""
    integral = _is_integral(rows)
    if integral:
        for row in rows:
            for j, x in enumerate(row):
                row[j] = int(x)
    nrows = len(rows)
    prev = 1
    r = 0
    sign = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        p = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[c]
            for j in range(c + 1, ncols):
                v = p * row[j] - f * prow[j]
                if integral:
                    q, rem = divmod(v, prev)
                    assert rem == 0, "Bareiss division not exact"
                    row[j] = q
                else:
                    row[j] = v / prev if prev != 1 else v
            row[c] = 0
        prev = p
        r += 1
    return r, sign, prev


def rank(matrix) -> int:
    """Rank by fraction-free (Bareiss) elimination."""
    if not matrix or not matrix[0]:
        return 0
    rows = [list(r) for r in matrix]
    return _bareiss(rows, len(rows[0]))[0]


def det(matrix):
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in matrix]
    rk, sign, last = _bareiss(rows, n)
    if rk < n:
        return Fraction(0)
    return canon(last * sign)


def rref(matrix):
    """Reduced row echelon form over the field. Returns (rows, pivot columns)."""
    rows = [[canon(x) for x in r] for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        if p != 1:
            inv = 1 / p
            rows[r] = [canon(x * inv) if x else x for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [canon(a - f * b) if b else a for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(matrix, ncols: int | None = None):
    """Basis of {v : M v = 0}, one vector per free column (RREF-normalized)."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            if row[f]:
                v[pc] = canon(-row[f])
        basis.append(v)
    return basis


def row_space_basis(vectors):
    """Independent rows spanning the same space (RREF rows)."""
    if not vectors:
        return []
    return rref(vectors)[0]


def inverse(matrix):
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def solve(matrix, rhs):
    """One solution x of M x = rhs, or None if inconsistent."""
    n = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    return x


def matmul(a, b):
    bt = list(zip(*b))
    return [[canon(sum((x * y for x, y in zip(row, col) if x and y), Fraction(0))) for col in bt] for row in a]


def matvec(a, v):
    return [canon(sum((x * y for x, y in zip(row, v) if x and y), Fraction(0))) for row in a]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(r) for r in zip(*a)]


def is_identity(a) -> bool:
    return all((x == 1) if i == j else (not x) for i, row in enumerate(a) for j, x in enumerate(row))

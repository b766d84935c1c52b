"""Exact rational linear algebra: rank, nullspace, RREF.

All matrices are lists of rows; entries are ints or Fractions. Ranks are
computed by fraction-free integer elimination (row contents get cleared to
integers first), so results are exact and reproducible bit-for-bit.
"""

from fractions import Fraction
from math import gcd


def _clear_row(row):
    """Scale a row of ints/Fractions to a primitive integer row."""
    denom = 1
    for x in row:
        if isinstance(x, Fraction):
            denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) if isinstance(x, Fraction) else x * denom for x in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def rank(rows):
    """Exact rank of a matrix given as a list of rows."""
    mat = [_clear_row(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    col = 0
    while col < ncols and r < len(mat):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pr = mat[r]
        pv = pr[col]
        for i in range(r + 1, len(mat)):
            v = mat[i][col]
            if v == 0:
                continue
            row = [pv * a - v * b for a, b in zip(mat[i], pr)]
            g = 0
            for x in row:
                g = gcd(g, x)
            if g > 1:
                row = [x // g for x in row]
            mat[i] = row
        r += 1
        col += 1
    return r


def rref(rows):
    """Reduced row echelon form over Q.

    Returns (rref_rows, pivot_columns). Input rows are not modified.
    """
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][col]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows, ncols=None):
    """Basis of the right kernel of the matrix, as Fraction vectors.

    `ncols` must be given when `rows` is empty (the kernel is then all of
    the column space).
    """
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        basis = []
        for j in range(ncols):
            v = [Fraction(0)] * ncols
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    ncols = len(rows[0])
    red, pivots = rref(rows)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for j in free:
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][j]
        basis.append(v)
    return basis


def rank_sparse(columns, nrows=None):
    """Exact rank from sparse columns ({row_index: value} dicts).

    Incremental: each column is reduced against the pivots found so far,
    which keeps large, mostly-empty matrices (multiplication and
    differential operators in monomial bases) cheap.
    """
    pivots = {}  # leading row index -> reduced column
    for col in columns:
        vec = {}
        denom = 1
        for i, x in col.items():
            if x:
                f = Fraction(x)
                vec[i] = f
                denom = denom * f.denominator // gcd(denom, f.denominator)
        if denom > 1:
            vec = {i: x * denom for i, x in vec.items()}
        vec = {i: int(x) for i, x in vec.items()}
        while vec:
            lead = min(vec)
            if lead not in pivots:
                g = 0
                for x in vec.values():
                    g = gcd(g, x)
                if g > 1:
                    vec = {i: x // g for i, x in vec.items()}
                pivots[lead] = vec
                break
            piv = pivots[lead]
            a, b = piv[lead], vec[lead]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {}
            for i in set(vec) | set(piv):
                val = fa * vec.get(i, 0) - fb * piv.get(i, 0)
                if val:
                    new[i] = val
            vec = new
    return len(pivots)


def matrix_to_triplets(rows):
    """Sparse triplet text lines (row, col, value) for external checks."""
    lines = []
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x != 0:
                lines.append(f"{i}\t{j}\t{Fraction(x)}")
    return lines

"""Homogeneous polynomials over Q in n variables, exact coefficients.

Monomials are exponent tuples ordered graded-lexicographically, giving
every space S^d a canonical basis. The quadratic form q, multiplication
by q, the q-Laplacian, harmonic dimensions and restriction to 2-planes
live here.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from . import linalg


def monomials(n, d):
    """Canonical (grlex-sorted) list of exponent tuples of total degree d."""
    if d == 0:
        return [(0,) * n]
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


class Poly:
    """Homogeneous polynomial; coeffs maps exponent tuples to Fractions."""

    def __init__(self, n, degree, coeffs=None):
        self.n = n
        self.degree = degree
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c == 0:
                    continue
                if len(e) != n or sum(e) != degree or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent {e} for degree {degree}")
                self.coeffs[tuple(e)] = c

    @classmethod
    def monomial(cls, n, exponents, coeff=1):
        return cls(n, sum(exponents), {tuple(exponents): Fraction(coeff)})

    @classmethod
    def variable(cls, n, i):
        e = [0] * n
        e[i] = 1
        return cls.monomial(n, e)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return Poly(self.n, self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return Poly(self.n, self.degree, {e: v * c for e, v in self.coeffs.items()})

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("variable-count mismatch")
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly(self.n, self.degree + other.degree, out)

    def diff(self, i):
        out = {}
        for e, c in self.coeffs.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c * e[i]
        return Poly(self.n, max(self.degree - 1, 0), out)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            terms.append(f"{self.coeffs[e]}*z^{e}")
        return " + ".join(terms)

    def coeff_vector(self, basis=None):
        basis = basis if basis is not None else monomials(self.n, self.degree)
        return [self.coeffs.get(e, Fraction(0)) for e in basis]

    def to_json(self):
        return [
            {"exponents": list(e), "coeff": str(self.coeffs[e])}
            for e in sorted(self.coeffs, reverse=True)
        ]

    def _check(self, other):
        if self.n != other.n or (
            self.coeffs and other.coeffs and self.degree != other.degree
        ):
            raise ValueError("incompatible polynomials")


class QuadraticForm:
    """Nondegenerate symmetric n x n rational matrix."""

    def __init__(self, matrix):
        mat = [[Fraction(x) for x in row] for row in matrix]
        n = len(mat)
        if any(len(row) != n for row in mat):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(n):
                if mat[i][j] != mat[j][i]:
                    raise ValueError("matrix must be symmetric")
        self.n = n
        self.matrix = mat
        self._inverse = _invert(mat)  # raises on degeneracy

    @classmethod
    def standard(cls, n):
        """Sum of squares: the identity Gram matrix."""
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def inverse(self):
        return self._inverse

    def as_poly(self):
        """q as the polynomial z^T A z."""
        out = {}
        n = self.n
        for i in range(n):
            for j in range(n):
                e = [0] * n
                e[i] += 1
                e[j] += 1
                e = tuple(e)
                out[e] = out.get(e, Fraction(0)) + self.matrix[i][j]
        return Poly(n, 2, out)

    def restrict(self, e1, e2):
        """2 x 2 Gram matrix of q on the plane spanned by e1, e2."""
        vecs = [[Fraction(x) for x in e1], [Fraction(x) for x in e2]]
        gram = [[Fraction(0)] * 2 for _ in range(2)]
        for a in range(2):
            for b in range(2):
                gram[a][b] = sum(
                    vecs[a][i] * self.matrix[i][j] * vecs[b][j]
                    for i in range(self.n)
                    for j in range(self.n)
                )
        return gram

    def to_json(self):
        return [[str(x) for x in row] for row in self.matrix]


def _invert(mat):
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    red, pivots = linalg.rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("quadratic form is degenerate")
    return [row[n:] for row in red]


def mult_by_q(f, q):
    """q * f, homogeneous of degree f.degree + 2."""
    if f.n != q.n:
        raise ValueError("variable-count mismatch")
    return q.as_poly() * f


def laplacian_q(f, q):
    """Delta_q f = sum_{i,j} q^{ij} d_i d_j f."""
    if f.n != q.n:
        raise ValueError("variable-count mismatch")
    n = f.n
    out = Poly(n, max(f.degree - 2, 0))
    qinv = q.inverse
    for i in range(n):
        fi = f.diff(i)
        if fi.is_zero():
            continue
        for j in range(n):
            if qinv[i][j] == 0:
                continue
            out = out + fi.diff(j).scale(qinv[i][j])
    return out


def laplacian_matrix(n, d, q):
    """Matrix of Delta_q : S^d -> S^{d-2} in the canonical bases."""
    if d < 2:
        return [], monomials(n, d)
    src = monomials(n, d)
    dst = monomials(n, d - 2)
    cols = []
    for e in src:
        img = laplacian_q(Poly.monomial(n, e), q)
        cols.append(img.coeff_vector(dst))
    rows = [[cols[j][i] for j in range(len(src))] for i in range(len(dst))]
    return rows, src


def laplacian_columns(n, d, q):
    """Sparse columns of Delta_q : S^d -> S^{d-2}."""
    src = monomials(n, d)
    dst = {e: i for i, e in enumerate(monomials(n, max(d - 2, 0)))}
    cols = []
    for e in src:
        img = laplacian_q(Poly.monomial(n, e), q)
        cols.append({dst[k]: c for k, c in img.coeffs.items()})
    return cols, src


def mult_by_q_columns(n, d, q):
    """Sparse columns of multiplication by q : S^d -> S^{d+2}."""
    src = monomials(n, d)
    dst = {e: i for i, e in enumerate(monomials(n, d + 2))}
    cols = []
    for e in src:
        img = mult_by_q(Poly.monomial(n, e), q)
        cols.append({dst[k]: c for k, c in img.coeffs.items()})
    return cols, src


def harmonic_dim(n, d, q=None):
    """Exact dimension of ker(Delta_q) on S^d."""
    q = q if q is not None else QuadraticForm.standard(n)
    if d < 2:
        return len(monomials(n, d))
    cols, src = laplacian_columns(n, d, q)
    return len(src) - linalg.rank_sparse(cols)


def harmonic_basis(n, d, q=None):
    """Basis of harmonic polynomials in S^d."""
    q = q if q is not None else QuadraticForm.standard(n)
    src = monomials(n, d)
    if d < 2:
        return [Poly.monomial(n, e) for e in src]
    rows, _ = laplacian_matrix(n, d, q)
    basis = []
    for v in linalg.nullspace(rows, ncols=len(src)):
        basis.append(Poly(n, d, dict(zip(src, v))))
    return basis


def restrict_to_plane(f, e1, e2):
    """Restrict f to the plane s*e1 + t*e2.

    Returns a degree-d Poly in the 2 variables (s, t). The two vectors must
    be linearly independent.
    """
    if linalg.rank([list(e1), list(e2)]) < 2:
        raise ValueError("plane basis vectors are linearly dependent")
    n = f.n
    vecs = [[Fraction(x) for x in e1], [Fraction(x) for x in e2]]
    s = Poly.variable(2, 0)
    t = Poly.variable(2, 1)
    # z_i restricted = e1_i * s + e2_i * t
    lin = [
        Poly(2, 1, {(1, 0): vecs[0][i], (0, 1): vecs[1][i]})
        for i in range(n)
    ]
    del s, t
    out = Poly(2, f.degree)
    for e, c in f.coeffs.items():
        term = Poly(2, 0, {(0, 0): c})
        for i in range(n):
            for _ in range(e[i]):
                term = term * lin[i]
        out = out + term
    return out


def restricted_form(q, e1, e2):
    """q|_E as a QuadraticForm in 2 variables."""
    return QuadraticForm(q.restrict(e1, e2))

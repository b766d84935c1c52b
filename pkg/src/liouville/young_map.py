"""The vertical Young multiplication S^d(M*) -> Sigma^{d,2}(M*).

Sigma^{d,2} is realized inside the space of bihomogeneous polynomials of
bidegree (d,2) in two vector variables x, y as an isotypic component cut
out by a quadratic-Casimir polynomial projector. The map itself sends
f to the projection of f(x)*q(y). A Young-symmetrizer realization in
V^{tensor (d+2)} is kept as a small-scale independent oracle.
"""

import random
from fractions import Fraction
from itertools import permutations

from . import linalg, polyspaces
from .polyspaces import Poly, QuadraticForm, monomials
from .weights import pad, weyl_dim


class BiPoly:
    """Bihomogeneous polynomial in x (degree d) and y (degree e)."""

    def __init__(self, n, bidegree, coeffs=None):
        self.n = n
        self.bidegree = tuple(bidegree)
        self.coeffs = {}
        if coeffs:
            d, e = self.bidegree
            for (ex, ey), c in coeffs.items():
                c = Fraction(c)
                if c == 0:
                    continue
                if sum(ex) != d or sum(ey) != e:
                    raise ValueError(f"bad bidegree for {(ex, ey)}")
                self.coeffs[(tuple(ex), tuple(ey))] = c

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, Fraction(0)) + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return BiPoly(self.n, self.bidegree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return BiPoly(self.n, self.bidegree,
                      {k: v * c for k, v in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def coeff_vector(self, basis):
        return [self.coeffs.get(k, Fraction(0)) for k in basis]

    def substitute(self, mat):
        """Simultaneous linear substitution x -> R x, y -> R y."""
        n = self.n
        out = BiPoly(n, self.bidegree)
        # linear forms: (R x)_i = sum_j R[i][j] x_j
        for (ex, ey), c in self.coeffs.items():
            terms = {((0,) * n, (0,) * n): c}
            for i in range(n):
                for _ in range(ex[i]):
                    terms = _mul_linear(terms, mat[i], n, 0)
                for _ in range(ey[i]):
                    terms = _mul_linear(terms, mat[i], n, 1)
            out = out + BiPoly(n, self.bidegree, terms)
        return out


def _mul_linear(terms, row, n, which):
    out = {}
    for (ex, ey), c in terms.items():
        for j in range(n):
            if row[j] == 0:
                continue
            if which == 0:
                e2 = list(ex)
                e2[j] += 1
                k = (tuple(e2), ey)
            else:
                e2 = list(ey)
                e2[j] += 1
                k = (ex, tuple(e2))
            out[k] = out.get(k, Fraction(0)) + c * Fraction(row[j])
    return {k: v for k, v in out.items() if v != 0}


def bipoly_basis(n, d, e):
    """Canonical basis of bidegree-(d,e) space: pairs of exponent tuples."""
    return [(ex, ey) for ex in monomials(n, d) for ey in monomials(n, e)]


def _e_op(F, i, j):
    """E_ij F where E_ij = x_i d/dx_j + y_i d/dy_j."""
    out = {}
    for (ex, ey), c in F.coeffs.items():
        if ex[j]:
            e2 = list(ex)
            e2[j] -= 1
            e2[i] += 1
            k = (tuple(e2), ey)
            out[k] = out.get(k, Fraction(0)) + c * ex[j]
        if ey[j]:
            e2 = list(ey)
            e2[j] -= 1
            e2[i] += 1
            k = (ex, tuple(e2))
            out[k] = out.get(k, Fraction(0)) + c * ey[j]
    return BiPoly(F.n, F.bidegree, out)


def casimir_apply(F):
    """Quadratic Casimir: Omega F = sum_{i,j} E_ij E_ji F."""
    n = F.n
    out = BiPoly(n, F.bidegree)
    for j in range(n):
        for i in range(n):
            inner = _e_op(F, j, i)
            if inner.is_zero():
                continue
            out = out + _e_op(inner, i, j)
    return out


def casimir_scalar(lam, n):
    """Casimir eigenvalue on the irreducible of highest weight lam."""
    lam = pad(lam, n)
    return sum(x * (x + n + 1 - 2 * (i + 1)) for i, x in enumerate(lam))


class IsotypicProjector:
    """Polynomial-in-Casimir projector onto one isotypic component."""

    def __init__(self, n, target, competitors):
        self.n = n
        self.target = pad(target, n)
        self.competitors = [pad(m, n) for m in competitors]
        c_t = casimir_scalar(self.target, n)
        scalars = [casimir_scalar(m, n) for m in self.competitors]
        if len(set(scalars + [c_t])) != len(scalars) + 1:
            raise ValueError("Casimir scalars collide; projector undefined")
        self.scalars = scalars
        self.c_target = c_t

    def apply(self, F):
        for c_mu in self.scalars:
            F = (casimir_apply(F) - F.scale(c_mu)).scale(
                Fraction(1, self.c_target - c_mu)
            )
        return F


def projector_d2(n, d):
    """Projector onto Sigma^{d,2} inside bidegree (d,2); d >= 2, n >= 2."""
    if d < 2:
        raise ValueError("shape (d,2) needs d >= 2")
    competitors = [(d + 2,), (d + 1, 1)] if n >= 2 else [(d + 2,)]
    return IsotypicProjector(n, (d, 2), competitors)


def project_isotypic(F, d=None):
    """Project a bidegree-(d,2) element onto its Sigma^{d,2} component."""
    d = F.bidegree[0] if d is None else d
    if F.bidegree != (d, 2):
        raise ValueError(f"bidegree {F.bidegree} is not ({d}, 2)")
    return projector_d2(F.n, d).apply(F)


def y_dq(f, q):
    """Vertical Young multiplication by q applied to f, as a BiPoly."""
    d = f.degree
    if d < 2:
        raise ValueError("y_dq needs degree >= 2")
    if f.n != q.n:
        raise ValueError("variable-count mismatch")
    n = f.n
    qp = q.as_poly()
    prod = {}
    for ex, cx in f.coeffs.items():
        for ey, cy in qp.coeffs.items():
            prod[(ex, ey)] = cx * cy
    return project_isotypic(BiPoly(n, (d, 2), prod))


def casimir_eigenspace_dims(n, d):
    """Exact eigenspace dimensions of Omega on bidegree (d,2).

    Returns {lam: dim} over the three Pieri constituents. The dims are
    nullities of Omega - c(lam); if they exhaust the space, Omega is
    diagonalizable there and the Casimir projector is exactly the
    isotypic projection.
    """
    basis = bipoly_basis(n, d, 2)
    index = {k: i for i, k in enumerate(basis)}
    omega_cols = []
    for k in basis:
        img = casimir_apply(BiPoly(n, (d, 2), {k: 1}))
        omega_cols.append({index[kk]: c for kk, c in img.coeffs.items()})
    out = {}
    shapes = [(d + 2,), (d + 1, 1), (d, 2)]
    for lam in shapes:
        lam_p = pad(lam, n)
        if lam_p != tuple(sorted(lam_p, reverse=True)):
            continue
        c = casimir_scalar(lam_p, n)
        shifted = []
        for j, col in enumerate(omega_cols):
            col2 = dict(col)
            col2[j] = col2.get(j, Fraction(0)) - c
            shifted.append(col2)
        out[lam_p] = len(basis) - linalg.rank_sparse(shifted)
    return out


def y_dq_columns(n, d, q=None):
    """Sparse columns of y_dq : S^d -> bidegree-(d,2) space."""
    q = q if q is not None else QuadraticForm.standard(n)
    src = monomials(n, d)
    index = {k: i for i, k in enumerate(bipoly_basis(n, d, 2))}
    cols = []
    for e in src:
        img = y_dq(Poly.monomial(n, e), q)
        cols.append({index[k]: c for k, c in img.coeffs.items()})
    return cols, src


def y_dq_matrix(n, d, q=None):
    """Matrix of y_dq : S^d -> bidegree-(d,2) space, canonical bases."""
    q = q if q is not None else QuadraticForm.standard(n)
    src = monomials(n, d)
    dst = bipoly_basis(n, d, 2)
    index = {k: i for i, k in enumerate(dst)}
    cols = []
    for e in src:
        img = y_dq(Poly.monomial(n, e), q)
        col = [Fraction(0)] * len(dst)
        for k, c in img.coeffs.items():
            col[index[k]] = c
        cols.append(col)
    rows = [[cols[j][i] for j in range(len(src))] for i in range(len(dst))]
    return rows, src, dst


def y_dq_kernel(n, d, q=None):
    """Exact kernel basis of y_dq on S^d, as Polys."""
    rows, src, _ = y_dq_matrix(n, d, q)
    return [Poly(n, d, dict(zip(src, v)))
            for v in linalg.nullspace(rows, ncols=len(src))]


def kernel_cokernel_dims(n, d, q=None):
    """(ker, coker) of y_dq via exact rank; coker relative to Sigma^{d,2}."""
    if d < 2 or n < 2:
        raise ValueError("need d >= 2 and n >= 2")
    cols, src = y_dq_columns(n, d, q)
    r = linalg.rank_sparse(cols)
    target = weyl_dim(pad((d, 2), n))
    return len(src) - r, target - r


# ---------------------------------------------------------------------------
# Young-symmetrizer oracle (desk-scale tensor realization)
# ---------------------------------------------------------------------------

def _shape_cells(lam):
    return [(r, c) for r, row in enumerate(lam) for c in range(row)]


def _row_col_groups(lam):
    """Permutations of tensor slots preserving rows (resp. columns)."""
    cells = _shape_cells(lam)
    pos = {cell: i for i, cell in enumerate(cells)}
    k = len(cells)
    rows = {}
    cols = {}
    for (r, c), i in pos.items():
        rows.setdefault(r, []).append(i)
        cols.setdefault(c, []).append(i)

    def group(blocks):
        perms = [tuple(range(k))]
        for block in blocks.values():
            new = []
            for sigma in permutations(block):
                for p in perms:
                    q = list(p)
                    for slot, tgt in zip(block, sigma):
                        q[slot] = p[tgt]
                    new.append(tuple(q))
            perms = new
        return perms

    return group(rows), group(cols)


def _perm_sign(p):
    """Sign of a permutation via cycle decomposition."""
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def young_symmetrizer_matrix(lam, n):
    """Matrix of the Young symmetrizer c_lam = a_lam b_lam on V^{tensor k}.

    Columns indexed by tensor basis words; guarded to n^k <= 243.
    """
    lam = tuple(x for x in lam if x)
    k = sum(lam)
    if n ** k > 243:
        raise ValueError("tensor space too large for the oracle")
    row_perms, col_perms = _row_col_groups(lam)
    words = _tensor_words(n, k)
    index = {w: i for i, w in enumerate(words)}
    dim = len(words)
    mat = [[0] * dim for _ in range(dim)]
    signed_cols = [(p, _perm_sign(p)) for p in col_perms]
    for j, w in enumerate(words):
        # b_lam then a_lam acting by permuting tensor slots
        acc = {}
        for p, s in signed_cols:
            w2 = tuple(w[p[i]] for i in range(k))
            acc[w2] = acc.get(w2, 0) + s
        for w2, c in acc.items():
            for p in row_perms:
                w3 = tuple(w2[p[i]] for i in range(k))
                mat[index[w3]][j] += c
    return mat, words


def _tensor_words(n, k):
    words = [()]
    for _ in range(k):
        words = [w + (i,) for w in words for i in range(n)]
    return words


def young_symmetrizer_rank(lam, n):
    """Exact rank of the Young symmetrizer on V^{tensor |lam|}."""
    mat, _ = young_symmetrizer_matrix(lam, n)
    return linalg.rank(mat)


def symmetrizer_ydq_matrix(n, d, q=None):
    """Oracle realization of y_dq: f -> c_{(d,2)}(sym(f) tensor q).

    Returns the matrix S^d -> V^{tensor (d+2)} (columns over the monomial
    basis of S^d) for comparison of ranks and kernels with y_dq_matrix.
    """
    q = q if q is not None else QuadraticForm.standard(n)
    lam = (d, 2)
    mat, words = young_symmetrizer_matrix(lam, n)
    index = {w: i for i, w in enumerate(words)}
    k = d + 2
    src = monomials(n, d)
    # q as a symmetric 2-tensor
    qt = {}
    for i in range(n):
        for j in range(n):
            if q.matrix[i][j]:
                qt[(i, j)] = q.matrix[i][j]
    cols = []
    for e in src:
        # symmetrization of the monomial as a tensor: sum over all words
        # with content e, each with coefficient 1
        vec = {}
        for w in _words_with_content(e):
            for (qi, qj), qc in qt.items():
                vec_key = w + (qi, qj)
                vec[vec_key] = vec.get(vec_key, Fraction(0)) + qc
        col = [Fraction(0)] * len(words)
        for w, c in vec.items():
            # apply the symmetrizer column-by-column
            i = index[w]
            for r in range(len(words)):
                if mat[r][i]:
                    col[r] += c * mat[r][i]
        cols.append(col)
    rows = [[cols[j][i] for j in range(len(src))] for i in range(len(words))]
    return rows, src


def _words_with_content(e):
    letters = []
    for i, m in enumerate(e):
        letters.extend([i] * m)
    return set(permutations(letters))


def young_symmetrizer_oracle(lam, n, q=None):
    """Rank of the symmetrizer; for shape (d,2) also the oracle y-map rank."""
    lam = tuple(x for x in lam if x)
    r = young_symmetrizer_rank(lam, n)
    y_rank = None
    if len(lam) == 2 and lam[1] == 2 and lam[0] >= 2:
        rows, _ = symmetrizer_ydq_matrix(n, lam[0], q)
        y_rank = linalg.rank(rows)
    return r, y_rank


# ---------------------------------------------------------------------------
# Plane-harmonicity probe
# ---------------------------------------------------------------------------

def plane_harmonicity_test(f, q=None, trials=20, seed=0):
    """Probe: does f restrict harmonically to random rational 2-planes?

    Necessary condition for membership in ker(y_{d,q}). Returns True iff
    Delta_{q|_E}(f|_E) vanishes exactly on every sampled plane.
    """
    q = q if q is not None else QuadraticForm.standard(f.n)
    n = f.n
    if n == 2:
        rest = polyspaces.laplacian_q(f, q)
        return rest.is_zero()
    rng = random.Random(seed)
    done = 0
    while done < trials:
        e1 = [rng.randint(-5, 5) for _ in range(n)]
        e2 = [rng.randint(-5, 5) for _ in range(n)]
        if linalg.rank([e1, e2]) < 2:
            continue
        try:
            qe = polyspaces.restricted_form(q, e1, e2)
        except ValueError:
            continue  # degenerate restriction; resample
        fe = polyspaces.restrict_to_plane(f, e1, e2)
        if not polyspaces.laplacian_q(fe, qe).is_zero():
            return False
        done += 1
    return True

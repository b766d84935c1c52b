"""Conformal Killing fields on flat C^n and the so(n+2) identification.

The conformal Killing operator is the traceless symmetrized gradient
(with the 2/n trace normalization); its kernel per polynomial degree is
computed as an exact nullspace. The degree-(0,1,2) kernel carries the
usual conformal algebra, which is matched generator-by-generator against
antisymmetric endomorphisms of C^{n+2} with a split extension of q.
"""

from fractions import Fraction

from . import linalg, polyspaces
from .polyspaces import Poly, QuadraticForm, monomials


class PolyVectorField:
    """n polynomial components, each homogeneous of the same degree."""

    def __init__(self, components):
        comps = list(components)
        self.n = len(comps)
        degs = {c.degree for c in comps if not c.is_zero()}
        if len(degs) > 1:
            raise ValueError("components must share one degree")
        self.degree = degs.pop() if degs else 0
        self.components = comps

    @classmethod
    def zero(cls, n, degree=0):
        return cls([Poly(n, degree) for _ in range(n)])

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __add__(self, other):
        return PolyVectorField(
            [a + b for a, b in zip(self.components, other.components)]
        )

    def scale(self, c):
        return PolyVectorField([p.scale(c) for p in self.components])

    def coeff_vector(self, degree=None):
        """Coefficients over the canonical basis of (S^degree)^n."""
        d = self.degree if degree is None else degree
        basis = monomials(self.n, d)
        out = []
        for comp in self.components:
            out.extend(comp.coeff_vector(basis))
        return out


def divergence(xi):
    out = Poly(xi.n, max(xi.degree - 1, 0))
    for i in range(xi.n):
        out = out + xi.components[i].diff(i)
    return out


def ck_operator(xi, q=None):
    """Traceless symmetrized gradient of xi with indices lowered by q.

    Returns {(i, j): Poly} over i <= j; xi is conformal Killing iff every
    entry is zero.
    """
    n = xi.n
    q = q if q is not None else QuadraticForm.standard(n)
    # lower the index: xi_flat_j = sum_k q_jk xi_k
    flat = []
    for j in range(n):
        acc = Poly(n, xi.degree)
        for k in range(n):
            if q.matrix[j][k]:
                acc = acc + xi.components[k].scale(q.matrix[j][k])
        flat.append(acc)
    div = divergence(xi)
    out = {}
    for i in range(n):
        for j in range(i, n):
            t = flat[j].diff(i) + flat[i].diff(j)
            tr = div.scale(Fraction(2, n) * q.matrix[i][j])
            out[(i, j)] = t - tr
    return out


def ck_matrix(n, d, q=None):
    """Matrix of the conformal Killing operator on degree-d fields."""
    q = q if q is not None else QuadraticForm.standard(n)
    src = monomials(n, d)
    out_basis = monomials(n, max(d - 1, 0))
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    cols = []
    for comp in range(n):
        for e in src:
            field = PolyVectorField(
                [Poly.monomial(n, e) if k == comp else Poly(n, d)
                 for k in range(n)]
            )
            tensor = ck_operator(field, q)
            col = []
            for p in pairs:
                col.extend(tensor[p].coeff_vector(out_basis))
            cols.append(col)
    rows = [[cols[j][i] for j in range(len(cols))]
            for i in range(len(pairs) * len(out_basis))]
    return rows, src


def ck_kernel(n, d, q=None):
    """Basis of degree-d homogeneous conformal Killing fields."""
    if n < 2 or d < 0:
        raise ValueError("need n >= 2, d >= 0")
    rows, src = ck_matrix(n, d, q)
    ncols = n * len(src)
    basis = []
    for v in linalg.nullspace(rows, ncols=ncols):
        comps = []
        for comp in range(n):
            chunk = v[comp * len(src):(comp + 1) * len(src)]
            comps.append(Poly(n, d, dict(zip(src, chunk))))
        basis.append(PolyVectorField(comps))
    return basis


def bracket(xi, eta):
    """Lie bracket of vector fields, componentwise."""
    n = xi.n
    deg = max(xi.degree + eta.degree - 1, 0)
    comps = []
    for m in range(n):
        acc = Poly(n, deg)
        for j in range(n):
            acc = acc + xi.components[j] * eta.components[m].diff(j)
            acc = acc - eta.components[j] * xi.components[m].diff(j)
        comps.append(acc)
    return PolyVectorField(comps)


# ---------------------------------------------------------------------------
# Named conformal basis and the so(n+2) comparison
# ---------------------------------------------------------------------------

def named_conformal_basis(n):
    """Translations, rotations, dilation, special conformal (standard q)."""
    basis = []
    zero = lambda d: Poly(n, d)
    for i in range(n):
        basis.append((f"P{i+1}",
                      PolyVectorField([Poly(n, 0, {(0,) * n: 1}) if k == i
                                       else zero(0) for k in range(n)])))
    for i in range(n):
        for j in range(i + 1, n):
            comps = [zero(1) for _ in range(n)]
            comps[j] = Poly.variable(n, i)
            comps[i] = Poly.variable(n, j).scale(-1)
            basis.append((f"R{i+1}{j+1}", PolyVectorField(comps)))
    basis.append(("D", PolyVectorField([Poly.variable(n, k)
                                        for k in range(n)])))
    r2 = QuadraticForm.standard(n).as_poly()
    for i in range(n):
        comps = []
        for m in range(n):
            t = Poly.variable(n, i) * Poly.variable(n, m)
            t = t.scale(2)
            if m == i:
                t = t - r2
            comps.append(t)
        basis.append((f"K{i+1}", PolyVectorField(comps)))
    return basis


def _field_coords(field, n):
    """Coordinates of a degree <= 2 field over the stacked monomial bases."""
    out = []
    for d in range(3):
        if field.degree == d and not field.is_zero():
            out.extend(field.coeff_vector(d))
        else:
            out.extend([Fraction(0)] * (n * len(monomials(n, d))))
    return out


def structure_constants(named_basis):
    """Exact structure constants of the conformal basis under the bracket.

    Returns a dict {(a, b): {c: coeff}} over basis indices a < b.
    """
    n = named_basis[0][1].n
    coords = [_field_coords(f, n) for _, f in named_basis]
    # columns of the change-of-basis matrix
    mat = [[coords[j][i] for j in range(len(coords))]
           for i in range(len(coords[0]))]
    out = {}
    for a in range(len(named_basis)):
        for b in range(a + 1, len(named_basis)):
            br = bracket(named_basis[a][1], named_basis[b][1])
            target = _field_coords(br, n) if not br.is_zero() else None
            if br.is_zero() or br.degree > 2:
                out[(a, b)] = {}
                continue
            coeffs = _solve(mat, target)
            out[(a, b)] = {c: v for c, v in enumerate(coeffs) if v != 0}
    return out


def _solve(mat, target):
    """Solve mat * x = target exactly (unique solution expected)."""
    aug = [row + [t] for row, t in zip(mat, target)]
    red, pivots = linalg.rref(aug)
    ncols = len(mat[0])
    if ncols in pivots:
        raise ArithmeticError("bracket left the span of the basis")
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = red[i][ncols]
    return x


def so_matrix_form(n):
    """Gram matrix of the split extension of the standard q on C^{n+2}.

    Basis order: u, e_1..e_n, v with <u,v> = 1 and the identity block in
    the middle.
    """
    size = n + 2
    g = [[Fraction(0)] * size for _ in range(size)]
    g[0][size - 1] = g[size - 1][0] = Fraction(1)
    for i in range(n):
        g[i + 1][i + 1] = Fraction(1)
    return g


def _x_ab(n, a, b, gram):
    """Generator X_ab: v -> e_a <e_b, v> - e_b <e_a, v>."""
    size = n + 2
    m = [[Fraction(0)] * size for _ in range(size)]
    for c in range(size):
        m[a][c] += gram[b][c]
        m[b][c] -= gram[a][c]
    return m


def conformal_to_so_matrices(n):
    """The explicit images of the named conformal generators in so(n+2).

    P_i -> X_{u,i}, R_ij -> X_{i,j}, D -> -X_{u,v}, K_i -> 2 X_{v,i},
    in the u, e_1..e_n, v basis of so_matrix_form.
    """
    gram = so_matrix_form(n)
    u, v = 0, n + 1
    out = []
    for i in range(n):
        out.append((f"P{i+1}", _x_ab(n, u, i + 1, gram)))
    for i in range(n):
        for j in range(i + 1, n):
            out.append((f"R{i+1}{j+1}", _x_ab(n, i + 1, j + 1, gram)))
    out.append(("D", _mat_scale(_x_ab(n, u, v, gram), -1)))
    for i in range(n):
        out.append((f"K{i+1}", _mat_scale(_x_ab(n, v, i + 1, gram), 2)))
    return out


def _mat_scale(m, c):
    return [[x * c for x in row] for row in m]


def _mat_comm(a, b):
    size = len(a)
    ab = [[sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size)]
          for i in range(size)]
    ba = [[sum(b[i][k] * a[k][j] for k in range(size)) for j in range(size)]
          for i in range(size)]
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def so_structure_constants(n):
    """Structure constants of the so(n+2) images of the conformal basis."""
    mats = conformal_to_so_matrices(n)
    flat = [[x for row in m for x in row] for _, m in mats]
    mat = [[flat[j][i] for j in range(len(flat))]
           for i in range(len(flat[0]))]
    out = {}
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            comm = _mat_comm(mats[a][1], mats[b][1])
            target = [x for row in comm for x in row]
            if not any(target):
                out[(a, b)] = {}
                continue
            coeffs = _solve(mat, target)
            out[(a, b)] = {c: v for c, v in enumerate(coeffs) if v != 0}
    return out


def check_jacobi(constants, dim):
    """Exact Jacobi identity on antisymmetrized structure constants."""

    def c(a, b):
        if a == b:
            return {}
        if a < b:
            return constants[(a, b)]
        return {k: -v for k, v in constants[(b, a)].items()}

    for a in range(dim):
        for b in range(a + 1, dim):
            for cc in range(b + 1, dim):
                acc = {}
                for x, y, z in ((a, b, cc), (b, cc, a), (cc, a, b)):
                    for m, v in c(x, y).items():
                        for t, w in c(m, z).items():
                            acc[t] = acc.get(t, Fraction(0)) + v * w
                if any(acc.values()):
                    return False, (a, b, cc)
    return True, None


def so_np2_isomorphism(n):
    """Compare conformal and so(n+2) structure constants exactly.

    Returns a report dict; raises ArithmeticError on any mismatch, naming
    the offending basis pair.
    """
    if n < 3:
        raise ValueError("the identification is stated for n >= 3")
    basis = named_conformal_basis(n)
    q = QuadraticForm.standard(n)
    for name, f in basis:
        tensor = ck_operator(f, q)
        if any(not p.is_zero() for p in tensor.values()):
            raise ArithmeticError(f"{name} is not conformal Killing")
    conf_c = structure_constants(basis)
    so_c = so_structure_constants(n)
    names = [name for name, _ in basis]
    for key in conf_c:
        if conf_c[key] != so_c[key]:
            a, b = key
            raise ArithmeticError(
                f"structure constants differ on [{names[a]}, {names[b]}]: "
                f"{conf_c[key]} vs {so_c[key]}"
            )
    dim = len(basis)
    ok, triple = check_jacobi(conf_c, dim)
    if not ok:
        raise ArithmeticError(f"Jacobi identity fails on triple {triple}")
    expected = (n + 2) * (n + 1) // 2
    if dim != expected:
        raise ArithmeticError(f"basis has {dim} elements, not {expected}")
    return {
        "n": n,
        "dimension": dim,
        "generators": names,
        "jacobi": "exact",
        "structure_constants_match": True,
    }


def basis_to_json(named_basis):
    return [
        {"name": name, "components": [c.to_json() for c in f.components]}
        for name, f in named_basis
    ]

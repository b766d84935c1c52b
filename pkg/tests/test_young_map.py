import random
from fractions import Fraction

import pytest

from liouville import linalg, polyspaces, young_map as ym
from liouville.polyspaces import Poly, QuadraticForm, monomials
from liouville.weights import pad, weyl_dim


def power_of_linear_form(n, d):
    """(x_1)^d (y_1)^2: the highest-weight vector of the S^{d+2} piece."""
    ex = (d,) + (0,) * (n - 1)
    ey = (2,) + (0,) * (n - 1)
    return ym.BiPoly(n, (d, 2), {(ex, ey): 1})


class TestCasimir:
    def test_calibration_eigenvalue(self):
        # full symmetrization of a power of a linear form lies in the
        # S^{d+2} component; eigenvalue (d+2)(d+n+1)
        for n in (2, 3, 4):
            for d in (2, 3, 4):
                F = power_of_linear_form(n, d)
                assert ym.casimir_apply(F) == F.scale((d + 2) * (d + n + 1))

    def test_linearity_on_zero(self):
        F = ym.BiPoly(3, (4, 2))
        assert ym.casimir_apply(F).is_zero()

    def test_scalar_table(self):
        # the three Pieri constituents of S^d x S^2
        for n in range(2, 6):
            for d in range(2, 7):
                assert ym.casimir_scalar((d + 2,), n) == (d + 2) * (d + n + 1)
                assert ym.casimir_scalar((d + 1, 1), n) == \
                    (d + 1) * (d + n) + (n - 2)
                assert ym.casimir_scalar((d, 2), n) == \
                    d * (d + n - 1) + 2 * (n - 1)

    @pytest.mark.parametrize("n,dmax", [(2, 5), (3, 5), (4, 5)])
    def test_eigenspace_dimensions(self, n, dmax):
        # nullities of Omega - c(lam) match the Weyl dimensions and
        # exhaust the bidegree space: Omega is diagonalizable there, so
        # the Casimir projector is exactly the isotypic projection
        for d in range(2, dmax + 1):
            dims = ym.casimir_eigenspace_dims(n, d)
            expected = {}
            for lam in [(d + 2,), (d + 1, 1), (d, 2)]:
                lam_p = pad(lam, n)
                expected[lam_p] = weyl_dim(lam_p)
            assert dims == expected
            space = len(monomials(n, d)) * len(monomials(n, 2))
            assert sum(dims.values()) == space


class TestProjector:
    def test_collision_guard(self):
        with pytest.raises(ValueError):
            ym.IsotypicProjector(3, (2, 2), [(2, 2)])

    @pytest.mark.parametrize("n,dmax", [(2, 4), (3, 3)])
    def test_idempotent_directly(self, n, dmax):
        for d in range(2, dmax + 1):
            for key in ym.bipoly_basis(n, d, 2):
                v = ym.BiPoly(n, (d, 2), {key: 1})
                once = ym.project_isotypic(v)
                assert ym.project_isotypic(once) == once

    def test_annihilates_symmetrization(self):
        for n in (2, 3, 4):
            for d in (2, 3):
                F = power_of_linear_form(n, d)
                assert ym.project_isotypic(F).is_zero()

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_rank_is_weyl_dim(self, n):
        # rank of the projector = trace, valid since the eigenspace
        # decomposition above certifies idempotence
        for d in range(2, 6):
            basis = ym.bipoly_basis(n, d, 2)
            trace = Fraction(0)
            for key in basis:
                img = ym.project_isotypic(ym.BiPoly(n, (d, 2), {key: 1}))
                trace += img.coeffs.get(key, Fraction(0))
            assert trace == weyl_dim(pad((d, 2), n))


class TestYdq:
    def test_rejects_low_degree(self):
        q = QuadraticForm.standard(3)
        with pytest.raises(ValueError):
            ym.y_dq(Poly.variable(3, 0), q)

    def test_injective_n_ge_3(self):
        for n, dmax in ((3, 5), (4, 4), (5, 2)):
            for d in range(2, dmax + 1):
                ker, _ = ym.kernel_cokernel_dims(n, d)
                assert ker == 0

    def test_n2_kernel_dimension_2(self):
        for d in range(2, 7):
            ker, coker = ym.kernel_cokernel_dims(2, d)
            assert (ker, coker) == (2, 0)

    def test_n2_kernel_is_harmonic(self):
        q = QuadraticForm.standard(2)
        for d in range(2, 6):
            kernel = ym.y_dq_kernel(2, d, q)
            harmonic = polyspaces.harmonic_basis(2, d, q)
            assert len(kernel) == len(harmonic) == 2
            # equal spans: stacking either basis over the other adds no rank
            kv = [f.coeff_vector() for f in kernel]
            hv = [f.coeff_vector() for f in harmonic]
            assert linalg.rank(kv) == linalg.rank(hv) == linalg.rank(kv + hv)

    def test_named_dims(self):
        assert ym.kernel_cokernel_dims(3, 2) == (0, 0)
        assert ym.kernel_cokernel_dims(4, 2) == (0, 10)
        assert ym.kernel_cokernel_dims(3, 3) == (0, 5)

    def test_scaling_q_invariance(self):
        q = QuadraticForm.standard(3)
        q_scaled = QuadraticForm([[Fraction(5, 3) * x for x in row]
                                  for row in q.matrix])
        for d in (2, 3):
            assert ym.kernel_cokernel_dims(3, d, q) == \
                ym.kernel_cokernel_dims(3, d, q_scaled)

    def test_equivariance_under_rotation(self):
        # R from the Cayley transform of an antisymmetric rational matrix
        rng = random.Random(99)
        for n, d in ((2, 3), (3, 3), (4, 2), (4, 4), (3, 4)):
            R = cayley_rotation(n, rng)
            q = QuadraticForm.standard(n)
            coeffs = {e: Fraction(rng.randint(-3, 3))
                      for e in monomials(n, d)}
            f = Poly(n, d, coeffs)
            f_rot = rotate_poly(f, R)
            lhs = ym.y_dq(f_rot, q)
            rhs = ym.y_dq(f, q).substitute(R)
            assert lhs == rhs


def cayley_rotation(n, rng):
    """(I - A)(I + A)^{-1} for a random antisymmetric rational A."""
    while True:
        A = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                A[i][j] = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
                A[j][i] = -A[i][j]
        eye = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        try:
            inv = polyspaces._invert(
                [[eye[i][j] + A[i][j] for j in range(n)] for i in range(n)])
        except ValueError:
            continue
        R = [[sum((eye[i][k] - A[i][k]) * inv[k][j] for k in range(n))
              for j in range(n)] for i in range(n)]
        # orthogonality: R^T R = I
        for i in range(n):
            for j in range(n):
                got = sum(R[k][i] * R[k][j] for k in range(n))
                assert got == (1 if i == j else 0)
        return R


def rotate_poly(f, R):
    """f(R x) by substituting each variable with a linear form."""
    n = f.n
    lin = [Poly(n, 1, {tuple(int(k == j) for k in range(n)): R[i][j]
                       for j in range(n)}) for i in range(n)]
    out = Poly(n, f.degree)
    for e, c in f.coeffs.items():
        term = Poly(n, 0, {(0,) * n: c})
        for i in range(n):
            for _ in range(e[i]):
                term = term * lin[i]
        out = out + term
    return out


class TestSymmetrizerOracle:
    def test_wedge_rank(self):
        assert ym.young_symmetrizer_rank((1, 1), 3) == 3

    def test_riemann_rank(self):
        assert ym.young_symmetrizer_rank((2, 2), 3) == 6

    def test_size_guard(self):
        with pytest.raises(ValueError):
            ym.young_symmetrizer_rank((4, 2), 3)  # 3^6 = 729 > 243

    def test_rank_matches_weyl_dim(self):
        for n in (2, 3):
            for lam in [(1,), (2,), (3,), (1, 1), (2, 1), (2, 2), (3, 1),
                        (4, 1), (3, 2), (5,), (2, 2, 1), (3, 1, 1)]:
                if len(lam) > n or n ** sum(lam) > 243:
                    continue
                assert ym.young_symmetrizer_rank(lam, n) == \
                    weyl_dim(pad(lam, n))

    @pytest.mark.parametrize("n", [2, 3])
    def test_ydq_oracle_equivalence(self, n):
        for d in (2, 3):
            if n ** (d + 2) > 243:
                continue
            rank_sym, rank_y = ym.young_symmetrizer_oracle((d, 2), n)
            ker, coker = ym.kernel_cokernel_dims(n, d)
            dim_sd = len(monomials(n, d))
            assert dim_sd - rank_y == ker
            assert rank_sym - rank_y == coker


class TestPlaneHarmonicity:
    def test_n2_harmonics_pass(self):
        q = QuadraticForm.standard(2)
        for d in (2, 3, 4):
            for f in polyspaces.harmonic_basis(2, d, q):
                assert ym.plane_harmonicity_test(f, q)

    def test_multiple_of_q_fails(self):
        q = QuadraticForm.standard(3)
        g = Poly.variable(3, 0)
        f = polyspaces.mult_by_q(g, q)
        assert not ym.plane_harmonicity_test(f, q, trials=20, seed=3)

    def test_nonzero_quadratic_fails(self):
        q = QuadraticForm.standard(3)
        rng = random.Random(17)
        for _ in range(20):
            coeffs = {e: Fraction(rng.randint(-4, 4))
                      for e in monomials(3, 2)}
            f = Poly(3, 2, coeffs)
            if f.is_zero():
                continue
            assert not ym.plane_harmonicity_test(f, q, trials=30, seed=7)

    def test_kernel_members_pass(self):
        q = QuadraticForm.standard(2)
        for d in (2, 3, 4):
            for f in ym.y_dq_kernel(2, d, q):
                assert ym.plane_harmonicity_test(f, q)


def test_triplet_export():
    cols, src = ym.y_dq_columns(2, 2)
    rows_dense, _, _ = ym.y_dq_matrix(2, 2)
    lines = linalg.matrix_to_triplets(rows_dense)
    assert lines
    for line in lines:
        i, j, val = line.split("\t")
        assert rows_dense[int(i)][int(j)] == Fraction(val)

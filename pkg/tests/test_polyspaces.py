import random
from fractions import Fraction

import pytest

from liouville import linalg, polyspaces
from liouville.polyspaces import (Poly, QuadraticForm, harmonic_dim,
                                  laplacian_q, monomials, mult_by_q,
                                  restrict_to_plane)


def test_quadratic_form_rejects_degenerate_and_asymmetric():
    with pytest.raises(ValueError):
        QuadraticForm([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        QuadraticForm([[1, 2], [3, 1]])


class TestMultByQ:
    def test_constant(self):
        q = QuadraticForm.standard(3)
        one = Poly(3, 0, {(0, 0, 0): 1})
        assert mult_by_q(one, q) == q.as_poly()

    def test_linear(self):
        q = QuadraticForm.standard(2)
        z1 = Poly.variable(2, 0)
        assert mult_by_q(z1, q) == Poly(2, 3, {(3, 0): 1, (1, 2): 1})

    def test_injective_on_all_degrees(self):
        for n in range(1, 6):
            q = QuadraticForm.standard(n)
            for d in range(9):
                cols, src = polyspaces.mult_by_q_columns(n, d, q)
                assert linalg.rank_sparse(cols) == len(src)


class TestLaplacian:
    def test_of_q_itself_is_2n(self):
        for n in (2, 3, 4):
            q = QuadraticForm.standard(n)
            out = laplacian_q(q.as_poly(), q)
            assert out == Poly(n, 0, {(0,) * n: 2 * n})

    def test_mixed_monomial_harmonic(self):
        q = QuadraticForm.standard(3)
        f = Poly(3, 2, {(1, 1, 0): 1})
        assert laplacian_q(f, q).is_zero()

    def test_difference_of_squares_harmonic(self):
        q = QuadraticForm.standard(3)
        f = Poly(3, 2, {(2, 0, 0): 1, (0, 2, 0): -1})
        assert laplacian_q(f, q).is_zero()

    def test_sl2_commutation(self):
        # Delta(q f) - q Delta(f) == (4d + 2n) f, exactly
        rng = random.Random(5)
        for n in range(1, 5):
            q = QuadraticForm.standard(n)
            for d in range(7):
                coeffs = {e: Fraction(rng.randint(-4, 4))
                          for e in monomials(n, d)}
                f = Poly(n, d, coeffs)
                lhs = laplacian_q(mult_by_q(f, q), q) - mult_by_q(
                    laplacian_q(f, q), q)
                assert lhs == f.scale(4 * d + 2 * n)


class TestHarmonicDim:
    def test_n2_all_degrees(self):
        for d in range(1, 9):
            assert harmonic_dim(2, d) == 2

    def test_n3_d2(self):
        assert harmonic_dim(3, 2) == 5

    def test_constants(self):
        for n in range(1, 5):
            assert harmonic_dim(n, 0) == 1

    def test_decomposition_sum(self):
        # dim S^d == sum_k harmonic_dim(n, d - 2k)
        for n in range(1, 6):
            for d in range(9):
                total = sum(harmonic_dim(n, d - 2 * k)
                            for k in range(d // 2 + 1))
                assert total == len(monomials(n, d))

    def test_non_standard_form(self):
        q = QuadraticForm([[2, 1], [1, 3]])
        for d in range(1, 6):
            assert harmonic_dim(2, d, q) == 2

    def test_harmonic_basis_is_annihilated(self):
        q = QuadraticForm.standard(3)
        basis = polyspaces.harmonic_basis(3, 3, q)
        assert len(basis) == 7
        for f in basis:
            assert laplacian_q(f, q).is_zero()


class TestRestrictToPlane:
    def test_coordinate_plane(self):
        f = Poly(3, 2, {(2, 0, 0): 1})
        got = restrict_to_plane(f, (1, 0, 0), (0, 1, 0))
        assert got == Poly(2, 2, {(2, 0): 1})

    def test_q_restricts_to_gram(self):
        q = QuadraticForm.standard(3)
        got = restrict_to_plane(q.as_poly(), (1, 0, 0), (0, 1, 0))
        assert got == Poly(2, 2, {(2, 0): 1, (0, 2): 1})
        gram = polyspaces.restricted_form(q, (1, 0, 0), (0, 1, 0))
        assert gram.matrix == QuadraticForm.standard(2).matrix

    def test_rejects_dependent_vectors(self):
        f = Poly(3, 1, {(1, 0, 0): 1})
        with pytest.raises(ValueError):
            restrict_to_plane(f, (1, 2, 0), (2, 4, 0))

    def test_commutes_with_mult_by_q(self):
        rng = random.Random(11)
        n = 4
        q = QuadraticForm.standard(n)
        for _ in range(10):
            e1 = [rng.randint(-3, 3) for _ in range(n)]
            e2 = [rng.randint(-3, 3) for _ in range(n)]
            if linalg.rank([e1, e2]) < 2:
                continue
            f = Poly(n, 3, {e: Fraction(rng.randint(-3, 3))
                            for e in monomials(n, 3)})
            lhs = restrict_to_plane(mult_by_q(f, q), e1, e2)
            q_e = polyspaces.restricted_form(q, e1, e2)
            rhs = q_e.as_poly() * restrict_to_plane(f, e1, e2)
            assert lhs == rhs

"""Scalar kernels and 2x2 matrix types."""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from teichkit import (
    IntMatrix2,
    InvalidInputError,
    Matrix2C,
    NotUnimodularError,
    SingularMatrixError,
    arg_unit_interval,
    eigen2,
    order_by_modulus,
    quadratic_roots,
)
from oracles import random_conjugator, random_unimodular

coords = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False)
scalars = st.builds(complex, coords, coords)


def approx_c(z, tol=1e-9):
    return pytest.approx(z, abs=tol)


class TestArgAndOrdering:
    def test_argument_range(self):
        assert arg_unit_interval(1) == 0.0
        assert arg_unit_interval(1j) == approx_c(math.pi / 2)
        assert arg_unit_interval(-1j) == approx_c(3 * math.pi / 2)

    def test_descending_modulus(self):
        assert order_by_modulus(0.25, 0.5) == (0.5, 0.25)
        assert order_by_modulus(0.5, 0.25) == (0.5, 0.25)

    def test_tie_broken_by_argument(self):
        # equal moduli: ascending argument in [0, 2*pi)
        assert order_by_modulus(-1.0 + 0j, 1.0 + 0j) == (1.0 + 0j, -1.0 + 0j)
        assert order_by_modulus(-1j, 1j) == (1j, -1j)

    def test_near_tie_uses_argument(self):
        a, b = cmath.rect(0.5, 2.0), cmath.rect(0.5 + 1e-12, 1.0)
        assert order_by_modulus(a, b) == (b, a)


class TestQuadraticRoots:
    def test_perfect_square(self):
        r1, r2 = quadratic_roots(0.25, 1.0)
        assert r1 == approx_c(0.5) and r2 == approx_c(0.5)

    def test_zero_product(self):
        assert quadratic_roots(0.0, 1.0) == (1.0, 0.0)

    def test_distinct_real(self):
        r1, r2 = quadratic_roots(0.125, 0.75)
        assert r1 == approx_c(0.5) and r2 == approx_c(0.25)

    def test_small_root_no_cancellation(self):
        # naive formula loses the small root to cancellation here
        r1, r2 = quadratic_roots(1e-14, 1.0)
        assert abs(r2 - 1e-14) < 1e-17

    def test_rejects_non_finite(self):
        with pytest.raises(InvalidInputError):
            quadratic_roots(complex(float("nan"), 0.0), 1.0)
        with pytest.raises(InvalidInputError):
            quadratic_roots(0.25, complex(float("inf"), 0.0))

    @given(d=scalars, t=scalars)
    @settings(max_examples=200)
    def test_vieta(self, d, t):
        r1, r2 = quadratic_roots(d, t)
        assert r1 + r2 == approx_c(t, tol=1e-8)
        assert r1 * r2 == approx_c(d, tol=1e-8)

    @given(d=scalars, t=scalars)
    @settings(max_examples=200)
    def test_canonical_order(self, d, t):
        r1, r2 = quadratic_roots(d, t)
        if abs(abs(r1) - abs(r2)) > 1e-9:
            assert abs(r1) > abs(r2)
        else:
            assert arg_unit_interval(r1) <= arg_unit_interval(r2)


class TestMatrix2C:
    def test_constructors(self):
        assert Matrix2C.identity().entries() == (1.0, 0.0, 0.0, 1.0)
        assert Matrix2C.diag(2.0, 3.0).entries() == (2.0, 0.0, 0.0, 3.0)

    def test_det_trace(self):
        m = Matrix2C(1.0, 2.0, 3.0, 4.0)
        assert m.det == 1.0 * 4.0 - 2.0 * 3.0
        assert m.trace == 5.0

    def test_matmul(self):
        a = Matrix2C(1.0, 2.0, 3.0, 4.0)
        b = Matrix2C(0.0, 1.0, 1.0, 0.0)
        assert (a @ b).entries() == (2.0, 1.0, 4.0, 3.0)

    def test_inverse(self):
        m = Matrix2C.diag(2.0, 1.0)
        assert m.inverse().entries() == (0.5, 0.0, 0.0, 1.0)

    def test_inverse_singular(self):
        with pytest.raises(SingularMatrixError):
            Matrix2C(1.0, 2.0, 2.0, 4.0).inverse()

    def test_inverse_eps_widens_rejection(self):
        m = Matrix2C.diag(1e-3, 1e-3)
        assert m.inverse() is not None
        with pytest.raises(SingularMatrixError):
            m.inverse(eps=1e-2)

    def test_rejects_non_finite_entry(self):
        with pytest.raises(InvalidInputError):
            Matrix2C(float("inf"), 0.0, 0.0, 1.0)

    def test_max_norm_and_close_to(self):
        m = Matrix2C(1.0, -3.0, 0.5, 0.0)
        assert m.max_norm() == 3.0
        assert m.close_to(Matrix2C(1.0, -3.0 + 1e-12, 0.5, 0.0), 1e-9)
        assert not m.close_to(Matrix2C.identity(), 1e-9)

    @given(st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=60)
    def test_inverse_roundtrip(self, seed):
        import random

        m = random_conjugator(random.Random(seed))
        assert (m @ m.inverse()).close_to(Matrix2C.identity(), 1e-10)
        assert (m.inverse() @ m).close_to(Matrix2C.identity(), 1e-10)


class TestEigen2:
    def test_diagonal(self):
        assert eigen2(Matrix2C.diag(0.5, 0.25)) == ((0.5 + 0j), (0.25 + 0j), True)

    def test_jordan_block(self):
        l1, l2, diagonalizable = eigen2(Matrix2C(0.5, 1.0, 0.0, 0.5))
        assert l1 == 0.5 and l2 == 0.5
        assert not diagonalizable

    def test_scalar(self):
        assert eigen2(Matrix2C.diag(0.5, 0.5))[2] is True

    def test_near_scalar_within_eps(self):
        # off-diagonal below tolerance: still treated as the scalar matrix
        m = Matrix2C(0.5, 1e-12, 0.0, 0.5)
        assert eigen2(m)[2] is True
        assert eigen2(m, eps=1e-15)[2] is False

    @given(st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=100)
    def test_similarity_invariance(self, seed):
        import random

        rng = random.Random(seed)
        lam1 = cmath.rect(rng.uniform(0.2, 0.9), rng.uniform(0, 2 * math.pi))
        lam2 = cmath.rect(rng.uniform(0.2, 0.9), rng.uniform(0, 2 * math.pi))
        if abs(lam1 - lam2) < 1e-3:
            return
        basis = random_conjugator(rng)
        m = basis @ (Matrix2C.diag(lam1, lam2) @ basis.inverse())
        got1, got2, diagonalizable = eigen2(m)
        want1, want2 = order_by_modulus(lam1, lam2)
        assert diagonalizable
        assert got1 == approx_c(want1, tol=1e-7)
        assert got2 == approx_c(want2, tol=1e-7)


class TestIntMatrix2:
    def test_exact_ops(self):
        s = IntMatrix2(0, -1, 1, 0)
        assert s.det() == 1 and s.trace() == 0
        assert (s @ s).rows() == ((-1, 0), (0, -1))
        assert s.inverse().rows() == ((0, 1), (-1, 0))

    def test_inverse_det_minus_one(self):
        swap = IntMatrix2(0, 1, 1, 0)
        assert swap.det() == -1
        assert (swap @ swap.inverse()).rows() == ((1, 0), (0, 1))

    def test_inverse_rejects_singular(self):
        with pytest.raises(SingularMatrixError):
            IntMatrix2(1, 2, 2, 4).inverse()

    def test_inverse_rejects_non_unimodular(self):
        with pytest.raises(NotUnimodularError):
            IntMatrix2(2, 0, 0, 1).inverse()

    def test_rejects_non_integer_entries(self):
        with pytest.raises(InvalidInputError):
            IntMatrix2(1.0, 0, 0, 1)
        with pytest.raises(InvalidInputError):
            IntMatrix2(True, 0, 0, 1)

    def test_to_complex(self):
        assert IntMatrix2(1, -5, 0, 1).to_complex().entries() == (1.0, -5.0, 0.0, 1.0)

    @given(st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=100)
    def test_unimodular_words_stay_unimodular(self, seed):
        import random

        m = random_unimodular(random.Random(seed))
        assert m.det() == 1
        assert (m @ m.inverse()).rows() == ((1, 0), (0, 1))

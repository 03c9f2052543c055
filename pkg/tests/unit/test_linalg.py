"""
Unit tests for the exact linear algebra layer.

Tests field parsing, row-vector matrix conventions, subspaces and solving.
"""

import random
from fractions import Fraction

import pytest


class TestFieldSpec:
    """Ground fields: QQ and GF(p)."""

    def test_rejects_composite_characteristic(self):
        """Characteristic 4 is refused."""
        from clusterforge.algebra.linalg import FieldSpec
        from clusterforge.core.errors import FieldError

        with pytest.raises(FieldError) as exc_info:
            FieldSpec(4)
        assert "prime" in str(exc_info.value)

    def test_rejects_negative_characteristic(self):
        """Negative characteristics are refused."""
        from clusterforge.algebra.linalg import FieldSpec
        from clusterforge.core.errors import FieldError

        with pytest.raises(FieldError):
            FieldSpec(-3)

    def test_parses_rational_strings(self):
        """"3/4" becomes an exact rational and formats back."""
        from clusterforge.algebra.linalg import RATIONALS

        x = RATIONALS.element("3/4")
        assert RATIONALS.format(x) == "3/4"
        assert RATIONALS.format(RATIONALS.element(Fraction(-6, 3))) == "-2"

    def test_finite_field_reduces(self):
        """Over GF(5), 7 is 2 and 1/2 is 3."""
        from clusterforge.algebra.linalg import FieldSpec

        f = FieldSpec(5)
        assert f.format(f.element(7)) == "2"
        assert f.format(f.element("1/2")) == "3"
        assert f.format(f.element(-1)) == "4"

    def test_denominator_divisible_by_p(self):
        """1/5 has no value in GF(5)."""
        from clusterforge.algebra.linalg import FieldSpec
        from clusterforge.core.errors import InputError

        with pytest.raises(InputError) as exc_info:
            FieldSpec(5).element("1/5")
        assert "GF(5)" in str(exc_info.value)

    def test_booleans_are_not_scalars(self):
        """True is not silently read as 1."""
        from clusterforge.algebra.linalg import RATIONALS
        from clusterforge.core.errors import InputError

        with pytest.raises(InputError):
            RATIONALS.element(True)


class TestMatrix:
    """Dense matrices acting on row vectors."""

    def test_composition_order(self):
        """F then G is F @ G."""
        from clusterforge.algebra.linalg import RATIONALS, Matrix

        f = Matrix.from_values(RATIONALS, [[1, 2]])        # k -> k^2
        g = Matrix.from_values(RATIONALS, [[1], [1]])      # k^2 -> k
        assert (f @ g).to_strings() == [["3"]]

    def test_shape_mismatch(self):
        """Multiplying incompatible shapes raises."""
        from clusterforge.algebra.linalg import RATIONALS, Matrix
        from clusterforge.core.errors import DimensionMismatchError

        with pytest.raises(DimensionMismatchError):
            Matrix.identity(RATIONALS, 2) @ Matrix.identity(RATIONALS, 3)

    def test_empty_products(self):
        """0 x n times n x m is the 0 x m zero matrix."""
        from clusterforge.algebra.linalg import RATIONALS, Matrix

        product = Matrix.zeros(RATIONALS, 0, 3) @ Matrix.zeros(RATIONALS, 3, 2)
        assert product.shape == (0, 2)
        product = Matrix.zeros(RATIONALS, 2, 0) @ Matrix.zeros(RATIONALS, 0, 4)
        assert product.shape == (2, 4)
        assert product.is_zero()

    def test_inverse(self):
        """M @ M⁻¹ is the identity."""
        from clusterforge.algebra.linalg import RATIONALS, Matrix

        m = Matrix.from_values(RATIONALS, [[2, 1], [1, 1]])
        assert m @ m.inverse() == Matrix.identity(RATIONALS, 2)

    def test_rank_nullity(self):
        """rank + dim ker = number of rows, over QQ and GF(3)."""
        from clusterforge.algebra.linalg import RATIONALS, FieldSpec, Matrix, kernel_basis

        rng = random.Random(7)
        for field in (RATIONALS, FieldSpec(3)):
            for nrows, ncols in ((4, 3), (3, 5), (5, 5)):
                m = Matrix.random(field, nrows, ncols, rng, bound=2)
                ker = kernel_basis(m)
                assert m.rank() + ker.dim == nrows
                assert (ker.basis @ m).is_zero()

    def test_power(self):
        """Nilpotent shift matrix squares to zero."""
        from clusterforge.algebra.linalg import RATIONALS, Matrix

        n = Matrix.from_values(RATIONALS, [[0, 1], [0, 0]])
        assert n.power(2).is_zero()
        assert n.power(0) == Matrix.identity(RATIONALS, 2)


class TestSubspace:
    """Subspaces in reduced echelon form."""

    def test_equal_spans_are_equal(self):
        """Different spanning sets of one subspace give equal objects."""
        from clusterforge.algebra.linalg import RATIONALS, Subspace

        f = RATIONALS
        one = f.one
        a = Subspace.span(f, 3, [[one, one, f.zero], [f.zero, one, one]])
        b = Subspace.span(f, 3, [[one, f.zero, -one], [one, 2 * one, one]])
        assert a == b

    def test_intersection(self):
        """Two planes in k^3 meet in a line."""
        from clusterforge.algebra.linalg import RATIONALS, Subspace

        f = RATIONALS
        z, o = f.zero, f.one
        xy = Subspace.span(f, 3, [[o, z, z], [z, o, z]])
        yz = Subspace.span(f, 3, [[z, o, z], [z, z, o]])
        meet = xy.intersection(yz)
        assert meet.dim == 1
        assert meet.contains([z, 5 * o, z])

    def test_quotient_map_kernel(self):
        """The quotient map has exactly the subspace as kernel."""
        from clusterforge.algebra.linalg import RATIONALS, Subspace, kernel_basis, quotient_map

        f = RATIONALS
        z, o = f.zero, f.one
        sub = Subspace.span(f, 3, [[o, o, z]])
        q = quotient_map(3, sub)
        assert q.shape == (3, 2)
        assert kernel_basis(q) == sub


class TestSolveLeft:
    """X·a = b."""

    def test_solvable(self):
        """A solution is returned and checks out."""
        from clusterforge.algebra.linalg import RATIONALS, Matrix, solve_left

        a = Matrix.from_values(RATIONALS, [[1, 0, 1], [0, 1, 1]])
        b = Matrix.from_values(RATIONALS, [[2, 3, 5]])
        x = solve_left(a, b)
        assert x is not None
        assert x @ a == b

    def test_unsolvable(self):
        """A vector outside the row space gives None."""
        from clusterforge.algebra.linalg import RATIONALS, Matrix, solve_left

        a = Matrix.from_values(RATIONALS, [[1, 0, 1]])
        b = Matrix.from_values(RATIONALS, [[0, 1, 0]])
        assert solve_left(a, b) is None


class TestCharpoly:
    """Factoring characteristic polynomials."""

    def test_two_factors(self):
        """diag(1, 2) has two linear factors."""
        from clusterforge.algebra.linalg import RATIONALS, Matrix, factor_charpoly, linear_root

        m = Matrix.from_values(RATIONALS, [[1, 0], [0, 2]])
        factors = factor_charpoly(m)
        assert len(factors) == 2
        roots = sorted(RATIONALS.format(linear_root(c)) for c, _ in factors)
        assert roots == ["1", "2"]

    def test_nilpotent_single_factor(self):
        """A nilpotent matrix has charpoly t^n."""
        from clusterforge.algebra.linalg import RATIONALS, Matrix, factor_charpoly

        m = Matrix.from_values(RATIONALS, [[0, 1], [0, 0]])
        factors = factor_charpoly(m)
        assert len(factors) == 1
        assert factors[0][1] == 2

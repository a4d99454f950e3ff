import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratmeasure import lattice
from ratmeasure.lattice import (
    denominator,
    det,
    gcd_maximal_minors,
    homogenize,
    integer_kernel_basis,
    lattice_points_half_open,
    make_point,
    parallelepiped_has_nonzero_point,
    primitive_vector,
    smith_normal_form,
    unimodular_inverse,
)

import oracles


class TestDenominator:
    def test_half_third(self):
        assert denominator(make_point("1/2", "1/3")) == 6

    def test_integer_point(self):
        assert denominator(make_point(0, 0)) == 1

    def test_single(self):
        assert denominator(make_point("1/5")) == 5


class TestHomogenize:
    def test_half_third(self):
        assert homogenize(make_point("1/2", "1/3")) == (3, 2, 6)

    def test_integer(self):
        assert homogenize(make_point(0)) == (0, 1)

    def test_two_fifths(self):
        v = homogenize(make_point("2/5"))
        assert v == (2, 5)
        assert math.gcd(*v) == 1

    @given(st.lists(st.fractions(max_denominator=50), min_size=1, max_size=4))
    def test_primitive_and_last_entry(self, coords):
        p = tuple(coords)
        v = homogenize(p)
        assert v[-1] == denominator(p)
        g = 0
        for c in v:
            g = math.gcd(g, c)
        assert g == 1
        assert lattice.dehomogenize(v) == p


class TestPrimitive:
    def test_divide_by_gcd(self):
        assert primitive_vector((4, 6, 2)) == (2, 3, 1)

    def test_already_primitive(self):
        assert primitive_vector((3, 2, 6)) == (3, 2, 6)

    def test_sign_preserved(self):
        assert primitive_vector((0, -5)) == (0, -1)

    def test_zero_rejected(self):
        with pytest.raises(ValueError, match="zero ray"):
            primitive_vector((0, 0))

    @given(
        st.lists(st.integers(-30, 30), min_size=1, max_size=5).filter(
            lambda v: any(v)
        ),
        st.integers(1, 9),
    )
    def test_idempotent_and_scale_invariant(self, v, k):
        p = primitive_vector(v)
        assert primitive_vector(p) == p
        assert primitive_vector([k * x for x in v]) == p


class TestGcdMaximalMinors:
    def test_regular_triangle_lift(self):
        assert gcd_maximal_minors([(0, 0, 1), (1, 0, 1), (0, 1, 1)]) == 1

    def test_two_segment(self):
        assert gcd_maximal_minors([(0, 1), (2, 1)]) == 2

    def test_identity(self):
        assert gcd_maximal_minors([(1, 0), (0, 1)]) == 1

    def test_dependent_rows_give_zero(self):
        assert gcd_maximal_minors([(1, 2, 3), (2, 4, 6)]) == 0

    @given(
        st.integers(1, 3),
        st.integers(1, 4),
        st.data(),
    )
    def test_matches_enumeration_oracle(self, r, c, data):
        rows = [
            [data.draw(st.integers(-4, 4)) for _ in range(c)] for _ in range(r)
        ]
        assert gcd_maximal_minors(rows) == abs(oracles.gcd_minors_enumerated(rows))


class TestSmithNormalForm:
    def assert_snf(self, m):
        u, d, v = smith_normal_form(m)
        assert abs(det(u)) == 1
        assert abs(det(v)) == 1
        prod = lattice.mat_mul(lattice.mat_mul(u, m), v)
        assert prod == d
        diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
        for i, x in enumerate(d):
            for j, e in enumerate(x):
                if i != j:
                    assert e == 0
        for a, b in zip(diag, diag[1:]):
            if a:
                assert b % a == 0
            else:
                assert b == 0
        assert all(x >= 0 for x in diag)
        return diag

    def test_identity(self):
        u, d, v = smith_normal_form([(1, 0), (0, 1)])
        assert d == ((1, 0), (0, 1))

    def test_diag_2_3(self):
        # invariant factors of diag(2,3): gcd of entries 1, det 6
        diag = self.assert_snf([(2, 0), (0, 3)])
        assert diag == [1, 6]

    def test_0_1_2_1(self):
        diag = self.assert_snf([(0, 1), (2, 1)])
        assert diag == [1, 2]

    @given(
        st.integers(1, 3),
        st.integers(1, 3),
        st.data(),
    )
    @settings(max_examples=150)
    def test_round_trip_random(self, r, c, data):
        m = [[data.draw(st.integers(-6, 6)) for _ in range(c)] for _ in range(r)]
        diag = self.assert_snf(m)
        # determinantal divisors pin the invariant factors independently
        g1 = 0
        for row in m:
            for e in row:
                g1 = math.gcd(g1, e)
        assert (diag[0] if diag else None) == g1 or (g1 == 0 and diag[0] == 0)


class TestKernel:
    def test_kernel_of_projection(self):
        basis = integer_kernel_basis([(1, 0, 0)])
        assert len(basis) == 2
        for b in basis:
            assert b[0] == 0

    def test_kernel_is_saturated(self):
        # 2x + 2y = 0 has primitive kernel generator (1, -1)
        basis = integer_kernel_basis([(2, 2)])
        assert len(basis) == 1
        assert basis[0] in ((1, -1), (-1, 1))


class TestLatticePointsHalfOpen:
    def test_unimodular_pair(self):
        pts = lattice_points_half_open([(0, 1), (1, 1)])
        assert pts == [((0, 0), (Fraction(0), Fraction(0)))]

    def test_index_two(self):
        pts = lattice_points_half_open([(0, 1), (2, 1)])
        assert [p for p, _ in pts] == [(0, 0), (1, 1)]
        coeffs = dict(pts)[(1, 1)]
        assert coeffs == (Fraction(1, 2), Fraction(1, 2))

    def test_axis_stretch(self):
        pts = lattice_points_half_open([(2, 0), (0, 1)])
        assert [p for p, _ in pts] == [(0, 0), (1, 0)]
        assert dict(pts)[(1, 0)] == (Fraction(1, 2), Fraction(0))

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError, match="degenerate"):
            lattice_points_half_open([(1, 1), (2, 2)])

    def test_count_equals_minor_gcd_exhaustive_2d(self):
        rng = range(-3, 4)
        import itertools

        for g0 in itertools.product(rng, rng):
            for g1 in itertools.product(rng, rng):
                if g0[0] * g1[1] - g0[1] * g1[0] == 0:
                    continue
                pts = lattice_points_half_open([g0, g1])
                assert len(pts) == gcd_maximal_minors([g0, g1])
                assert (parallelepiped_has_nonzero_point([g0, g1])) == (len(pts) > 1)

    def test_matches_box_scan_oracle_random(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 3)
            k = rng.randint(1, n)
            gens = [
                tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(k)
            ]
            if gcd_maximal_minors(gens) == 0:
                continue
            assert lattice_points_half_open(gens) == oracles.box_scan_parallelepiped(
                gens
            )


class TestUnimodularInverse:
    def test_round_trip(self):
        m = ((1, 2), (0, 1))
        inv = unimodular_inverse(m)
        assert lattice.mat_mul(m, inv) == lattice.identity_matrix(2)

    def test_rejects_non_unimodular(self):
        with pytest.raises(ValueError, match="det = 2"):
            unimodular_inverse(((2, 0), (0, 1)))

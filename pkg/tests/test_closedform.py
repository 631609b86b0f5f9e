from fractions import Fraction

import numpy as np
import pytest

import geoent as ge
from geoent.errors import DomainError


class TestGhz:
    @pytest.mark.parametrize("n,k", [(3, 2), (4, 3), (8, 5)])
    def test_constant_half(self, n, k):
        value = ge.ghz_egk(n, k)
        assert value.exact == Fraction(1, 2)
        assert value.e_g == 0.5

    @pytest.mark.parametrize("n,k", [(3, 1), (3, 4)])
    def test_k_range(self, n, k):
        with pytest.raises(DomainError):
            ge.ghz_egk(n, k)


class TestWFullSeparable:
    def test_exact_values(self):
        assert ge.w_full_separable(3).exact == Fraction(5, 9)
        assert ge.w_full_separable(4).exact == Fraction(37, 64)
        assert ge.w_full_separable(2).exact == Fraction(1, 2)

    def test_asymptote(self):
        assert ge.w_full_separable(2000).e_g == pytest.approx(1 - np.exp(-1), abs=3e-4)

    def test_lambda_formula(self):
        for n in range(2, 9):
            assert 1 - ge.w_full_separable(n).lambda2 == pytest.approx(
                1 - ((n - 1) / n) ** (n - 1), abs=1e-14
            )


class TestWBisep:
    @pytest.mark.parametrize("m,n,expected", [
        (1, 4, Fraction(1, 4)), (2, 5, Fraction(2, 5)), (3, 6, Fraction(1, 2)),
        (1, 3, Fraction(1, 3)),
    ])
    def test_values(self, m, n, expected):
        value = ge.w_bisep(m, n)
        assert value.exact == expected
        assert Fraction(1) - value.exact == Fraction(n - m, n)

    def test_larger_half_rejected(self):
        with pytest.raises(DomainError):
            ge.w_bisep(3, 5)


class TestWTrisep:
    @pytest.mark.parametrize("sizes,expected", [
        ((1, 2, 2), Fraction(19, 35)),
        ((2, 2, 2), Fraction(5, 9)),
        ((1, 1, 4), Fraction(1, 3)),
        ((1, 1, 3), Fraction(2, 5)),
        ((1, 2, 3), Fraction(1, 2)),
    ])
    def test_values(self, sizes, expected):
        assert ge.w_trisep(*sizes).exact == expected

    @pytest.mark.parametrize("m1,m2", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)])
    def test_branch_continuity(self, m1, m2):
        # both branch formulas, written out independently, at m3 = m1 + m2
        m3 = m1 + m2
        n = m1 + m2 + m3
        big_block = Fraction(1) - Fraction(m3, n)
        sigma = 2 * (m1 * m2 + m1 * m3 + m2 * m3) - m1 ** 2 - m2 ** 2 - m3 ** 2
        interior = Fraction(1) - Fraction(4 * m1 * m2 * m3, n * sigma)
        assert big_block == interior
        assert ge.w_trisep(m1, m2, m3).exact == big_block

    def test_ordering_enforced(self):
        with pytest.raises(DomainError):
            ge.w_trisep(2, 1, 3)


class TestWKsepReduced:
    @pytest.mark.parametrize("sizes,expected", [
        ((1, 1, 1), Fraction(5, 9)),
        ((1, 1, 1, 1), Fraction(37, 64)),
        ((1, 1, 1, 3), Fraction(1, 2)),
        ((2, 2, 2), Fraction(5, 9)),
    ])
    def test_matches_exact_routes(self, sizes, expected):
        value = ge.w_ksep_reduced(ge.Shape(sizes))
        assert value.e_g == pytest.approx(float(expected), abs=1e-9)

    @pytest.mark.parametrize("sizes,printed", [
        ((1, 1, 1, 2), 0.559),
        ((1, 1, 2, 2), 0.567),
        ((1, 1, 1, 1, 2), 0.580),
        ((1, 1, 1, 1, 1), 0.590),
    ])
    def test_three_decimal_targets(self, sizes, printed):
        assert ge.w_ksep_reduced(ge.Shape(sizes)).e_g == pytest.approx(printed, abs=5e-4)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_bipartition_shape_reduces_to_bisep(self, n):
        reduced = ge.w_ksep_reduced(ge.Shape((1, n - 1)))
        assert reduced.e_g == pytest.approx(ge.w_bisep(1, n).e_g, abs=1e-9)

    def test_k_cap(self):
        with pytest.raises(DomainError):
            ge.w_ksep_reduced(ge.Shape((1,) * 13))


class TestMagnon2:
    @pytest.mark.parametrize("m,n,expected", [
        (1, 4, Fraction(1, 2)), (2, 4, Fraction(1, 3)),
    ])
    def test_values(self, m, n, expected):
        assert ge.magnon2_bisep(m, n).exact == expected

    @pytest.mark.parametrize("n", range(5, 9))
    def test_single_site_cut(self, n):
        assert ge.magnon2_bisep(1, n).exact == Fraction(2, n)

    def test_small_n_rejected(self):
        with pytest.raises(DomainError):
            ge.magnon2_bisep(1, 3)

    @pytest.mark.parametrize("n", range(4, 11))
    def test_matches_schmidt_oracle(self, n):
        for m in range(1, n // 2 + 1):
            assert ge.magnon2_bisep(m, n).exact == ge.magnon_bisep_schmidt(m, n, 2).exact


class TestAsymWBisep:
    def test_uniform(self):
        assert ge.asym_w_bisep((1, 1, 1), {1}).exact == Fraction(1, 3)

    def test_product_state(self):
        assert ge.asym_w_bisep((1, 0, 0), {1}).exact == 0

    def test_mixed_weights(self):
        gamma = (Fraction(1, 2), Fraction(1, 2), Fraction(2, 3), Fraction(1, 6))
        value = ge.asym_w_bisep(gamma, {1, 2})
        assert value.lambda2 == pytest.approx(18 / 35, abs=1e-15)
        assert value.exact == Fraction(17, 35)

    def test_block_side_symmetric(self):
        gamma = (0.9, 0.4, 0.3, 0.7)
        a = ge.asym_w_bisep(gamma, {1, 3})
        b = ge.asym_w_bisep(gamma, {2, 4})
        assert a.e_g == b.e_g

    @pytest.mark.parametrize("block", [set(), {1, 2, 3}])
    def test_degenerate_blocks(self, block):
        with pytest.raises(DomainError):
            ge.asym_w_bisep((1, 1, 1), block)


class TestAsymWKsepReduced:
    @pytest.mark.parametrize("sizes", [(1, 2), (1, 1, 2), (2, 2), (1, 1, 1, 1)])
    def test_uniform_reduces_to_w(self, sizes):
        shape = ge.Shape(sizes)
        uniform = ge.asym_w_ksep_reduced(np.ones(shape.n), shape)
        assert uniform.e_g == pytest.approx(ge.w_ksep_reduced(shape).e_g, abs=1e-12)

    def test_bipartition_agrees_with_closed_form(self):
        rng = np.random.default_rng(5)
        for _ in range(5):
            gamma = rng.uniform(0.1, 1.0, 5)
            reduced = ge.asym_w_ksep_reduced(gamma, ge.Shape((2, 3)))
            direct = ge.asym_w_bisep(gamma, {1, 2})
            assert reduced.e_g == pytest.approx(direct.e_g, abs=1e-10)

    def test_non_contiguous_partition(self):
        gamma = np.array([0.9, 0.2, 0.7, 0.4, 0.6])
        partition = ge.Partition(((1, 3), (2, 4, 5)))
        reduced = ge.asym_w_ksep_reduced(gamma, partition)
        direct = ge.asym_w_bisep(gamma, {1, 3})
        assert reduced.e_g == pytest.approx(direct.e_g, abs=1e-10)

    def test_uniform_full_separability(self):
        value = ge.asym_w_ksep_reduced((1, 1, 1), ge.Shape((1, 1, 1)))
        assert value.e_g == pytest.approx(5 / 9, abs=1e-9)

    def test_block_mismatch(self):
        with pytest.raises(DomainError):
            ge.asym_w_ksep_reduced((1, 1, 1), ge.Shape((1, 3)))


class TestWghzBisepReduced:
    @pytest.mark.parametrize("m1,m2", [(1, 3), (2, 2), (2, 4), (1, 1)])
    def test_pure_ghz_endpoint(self, m1, m2):
        assert ge.wghz_bisep_reduced(np.pi / 2, m1, m2).e_g == pytest.approx(0.5, abs=1e-12)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_pure_w_endpoint(self, n):
        assert ge.wghz_bisep_reduced(0.0, 1, n - 1).e_g == pytest.approx(1 / n, abs=1e-12)

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_monotone_for_single_site_cut(self, n):
        etas = np.linspace(0.0, np.pi / 2, 41)
        values = [ge.wghz_bisep_reduced(eta, 1, n - 1).e_g for eta in etas]
        assert all(b >= a - 1e-9 for a, b in zip(values, values[1:]))

    def test_scale_invariant_when_blocks_not_single(self):
        eta = np.pi / 6
        base = ge.wghz_bisep_reduced(eta, 2, 2).lambda2
        assert ge.wghz_bisep_reduced(eta, 4, 4).lambda2 == pytest.approx(base, abs=1e-9)
        assert ge.wghz_bisep_reduced(eta, 6, 6).lambda2 == pytest.approx(base, abs=1e-9)

    def test_eta_range(self):
        with pytest.raises(DomainError):
            ge.wghz_bisep_reduced(2.0, 1, 2)


class TestCascade:
    @pytest.mark.parametrize("m", range(1, 7))
    def test_max_value(self, m):
        value, angles = ge.cascade_max_f(m)
        assert abs(value ** 2 - m) <= 1e-12
        assert ge.cascade_f(angles) == pytest.approx(value, abs=1e-12)

    def test_m1(self):
        value, angles = ge.cascade_max_f(1)
        assert value == 1.0
        assert angles == pytest.approx([0.0])

    def test_m2(self):
        value, angles = ge.cascade_max_f(2)
        assert value == pytest.approx(np.sqrt(2), abs=1e-15)
        assert angles == pytest.approx([np.pi / 4, 0.0], abs=1e-15)

    def test_argmax_formula(self):
        _, angles = ge.cascade_max_f(5)
        for i, angle in enumerate(angles, start=1):
            h = 5 - i
            assert angle == pytest.approx(np.arcsin(np.sqrt(h / (1 + h))), abs=1e-15)

    def test_grid_never_exceeds(self):
        rng = np.random.default_rng(1)
        samples = rng.uniform(0.0, np.pi / 2, (2000, 4))
        assert np.max(ge.cascade_f(samples)) <= 2.0 + 1e-12


class TestLineMax:
    @pytest.mark.parametrize("x,y,value,angle", [
        (1.0, 0.0, 1.0, 0.0),
        (1.0, 1.0, np.sqrt(2), np.pi / 4),
        (3.0, 4.0, 5.0, np.arctan2(4, 3)),
    ])
    def test_examples(self, x, y, value, angle):
        got_value, got_angle = ge.line_max(x, y)
        assert got_value == pytest.approx(value, abs=1e-15)
        assert got_angle == pytest.approx(angle, abs=1e-15)


class TestClosedFormValueInvariants:
    def _values(self):
        yield ge.ghz_egk(5, 3)
        yield ge.w_full_separable(6)
        yield ge.w_bisep(2, 6)
        yield ge.w_trisep(1, 2, 2)
        yield ge.w_ksep_reduced(ge.Shape((1, 1, 2)))
        yield ge.magnon2_bisep(2, 5)
        yield ge.asym_w_bisep((0.3, 0.8, 0.5), {2})
        yield ge.asym_w_ksep_reduced((0.3, 0.8, 0.5), ge.Shape((1, 2)))
        yield ge.wghz_bisep_reduced(0.4, 1, 3)

    def test_bounds_and_consistency(self):
        for value in self._values():
            assert 0.0 <= value.lambda2 <= 1.0
            assert abs(value.e_g - (1.0 - value.lambda2)) <= 1e-15
            if value.exact is not None:
                assert abs(float(value.exact) - value.e_g) <= 1e-15

    def test_rationality_where_promised(self):
        rationals = [
            ge.ghz_egk(4, 2),
            ge.w_full_separable(5),
            ge.w_bisep(1, 5),
            ge.w_trisep(1, 1, 3),
            ge.magnon2_bisep(1, 4),
            ge.asym_w_bisep((1, 1, 1, 1), {1, 2}),
        ]
        assert all(v.exact is not None for v in rationals)


class TestScaleInvarianceOfClosedForms:
    @pytest.mark.parametrize("l", [1, 2, 3])
    def test_w_bisep(self, l):
        assert ge.w_bisep(1 * l, 4 * l).exact == ge.w_bisep(1, 4).exact

    @pytest.mark.parametrize("l", [1, 2])
    def test_w_trisep(self, l):
        assert ge.w_trisep(1 * l, 2 * l, 2 * l).exact == ge.w_trisep(1, 2, 2).exact

    @pytest.mark.parametrize("sizes", [(1, 2), (1, 1, 1), (1, 1, 2)])
    def test_w_ksep_reduced(self, sizes):
        base = ge.w_ksep_reduced(ge.Shape(sizes)).e_g
        scaled = ge.w_ksep_reduced(ge.Shape(sizes).scaled(2)).e_g
        assert scaled == pytest.approx(base, abs=1e-9)

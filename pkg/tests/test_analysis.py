"""Tests for the floating-point verification layer.

The Bessel routines are checked against mpmath and against a frozen
40-term extended-precision series value, quadrature rules against exact
monomial moments, the brute-force Fourier integral against the closed
transform, and the inner-product paths against each other and the
closed norm formula.
"""

import dataclasses
import itertools
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffleg.analysis import (
    BESSEL_MAX_ARG,
    BESSEL_MAX_ORDER,
    BesselOrder,
    ball_inner,
    ball_inner_exact,
    bessel_j,
    build_rule,
    gram_report,
    numeric_fourier,
    plancherel_radial_check,
)
from cliffleg.legendre import (
    clifford_legendre,
    fourier_transform,
    norm_sq,
    normalize,
)
from cliffleg.monogenics import sphere_moment
from cliffleg.radial import SqrtScale

mpmath.mp.dps = 40


def series_oracle_j1_2pi() -> float:
    """40-term ascending series for the order-1 function at 2 pi.

    Evaluated in 40-digit arithmetic so the cancellation in the
    alternating sum costs nothing; the tail term is far below double
    precision.
    """
    x = 2 * mpmath.pi
    total = mpmath.mpf(0)
    term = x / 2
    for s in range(40):
        total += term
        term *= -((x / 2) ** 2) / ((s + 1) * (s + 2))
    return float(total)


# Frozen output of series_oracle_j1_2pi(), re-derived by the test below.
J1_AT_2PI = -0.21238253007636906


def reference_j(nu: Fraction, x: float) -> float:
    return float(mpmath.besselj(mpmath.mpf(nu.numerator) / nu.denominator, x))


def bessel_tolerance(ref: float, x: float) -> float:
    # Near a zero the relative error is naturally measured against the
    # local oscillation amplitude, not the vanishing value.
    envelope = math.sqrt(2.0 / (math.pi * max(x, 1.0)))
    return 1e-12 * max(abs(ref), envelope)


class TestBesselOrder:
    def test_integer_and_half_integer_accepted(self):
        assert BesselOrder(Fraction(3)).nu == 3
        assert BesselOrder(Fraction(7, 2)).is_half_integer()
        assert not BesselOrder(Fraction(4)).is_half_integer()

    def test_third_integer_rejected(self):
        with pytest.raises(ValueError):
            BesselOrder(Fraction(1, 3))

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            BesselOrder(Fraction(-1, 2))
        with pytest.raises(ValueError):
            BesselOrder(Fraction(BESSEL_MAX_ORDER) + 1)

    def test_from_indices(self):
        assert BesselOrder.from_indices(0, 0, 2).nu == 1
        assert BesselOrder.from_indices(2, 1, 3).nu == Fraction(9, 2)


class TestBesselRoutes:
    def test_named_values(self):
        assert bessel_j(0, 0.0) == 1.0
        assert bessel_j(3, 0.0) == 0.0
        assert bessel_j(Fraction(1, 2), 0.0) == 0.0
        assert abs(bessel_j(Fraction(1, 2), math.pi)) < 1e-15

    def test_order_one_at_two_pi_vs_series_oracle(self):
        oracle = series_oracle_j1_2pi()
        assert oracle == pytest.approx(J1_AT_2PI, abs=1e-16)
        assert bessel_j(1, 2 * math.pi) == pytest.approx(oracle, rel=1e-13)

    @pytest.mark.parametrize(
        "nu, x, frozen",
        [
            (Fraction(0), 0.3, 0.97762624653829608922),
            (Fraction(5), 1.0, 0.00024975773021123443138),
            (Fraction(3), 20.0, -0.098901394560449675613),
            (Fraction(2), 500.0, 0.034142447334613487437),
            (Fraction(3, 2), 10.0, 0.1979824927558931048),
            (Fraction(39, 2), 12.0, 0.00043999916948544655562),
            (Fraction(21, 2), 950.0, -0.024922702231343752178),
        ],
    )
    def test_frozen_regime_samples(self, nu, x, frozen):
        value = bessel_j(nu, x)
        assert abs(value - frozen) <= bessel_tolerance(frozen, x)
        assert value == pytest.approx(reference_j(nu, x), abs=bessel_tolerance(frozen, x))

    def test_sweep_against_mpmath(self):
        orders = [Fraction(v) for v in (0, 1, 2, 3, 5, 10, 20, 40)]
        orders += [Fraction(v, 2) for v in (1, 3, 7, 21, 79)]
        args = [1e-8, 0.3, 1.0, 3.0, 8.9, 9.1, 12.0, 25.0, 60.0, 150.0, 299.0, 301.0, 500.0, 1000.0]
        for nu in orders:
            for x in args:
                ref = reference_j(nu, x)
                if abs(ref) < 1e-250:
                    continue
                assert abs(bessel_j(nu, x) - ref) <= bessel_tolerance(ref, x), (nu, x)

    def test_argument_range_enforced(self):
        with pytest.raises(ValueError):
            bessel_j(1, -0.1)
        with pytest.raises(ValueError):
            bessel_j(1, BESSEL_MAX_ARG + 1.0)

    @settings(max_examples=120, deadline=None)
    @given(
        nu=st.integers(min_value=1, max_value=BESSEL_MAX_ORDER - 1),
        x=st.floats(min_value=1.0, max_value=float(BESSEL_MAX_ARG)),
    )
    def test_three_term_recurrence(self, nu, x):
        below = bessel_j(nu - 1, x)
        here = bessel_j(nu, x)
        above = bessel_j(nu + 1, x)
        residual = below + above - (2.0 * nu / x) * here
        envelope = math.sqrt(2.0 / (math.pi * x))
        scale = max(abs(below), abs(above), abs((2.0 * nu / x) * here), envelope)
        assert abs(residual) <= 2e-11 * (1.0 + 2.0 * nu / x) * scale


class TestQuadratureRules:
    def test_dimension_and_exactness_validated(self):
        with pytest.raises(ValueError):
            build_rule(4, 6)
        with pytest.raises(ValueError):
            build_rule(2, 0)

    @pytest.mark.parametrize("m", [2, 3])
    def test_weights_sum_to_ball_volume(self, m):
        rule = build_rule(m, 10)
        _, weights = rule.ball_points()
        volume = math.pi if m == 2 else 4.0 * math.pi / 3.0
        assert float(np.sum(weights)) == pytest.approx(volume, rel=1e-14)

    @pytest.mark.parametrize("m, exactness", [(2, 4), (2, 9), (3, 4), (3, 9)])
    def test_monomials_up_to_declared_degree(self, m, exactness):
        rule = build_rule(m, exactness)
        pts, weights = rule.ball_points()
        for degree in range(rule.exactness + 1):
            for expo in itertools.product(range(degree + 1), repeat=m):
                if sum(expo) != degree:
                    continue
                approx = float(np.dot(weights, np.prod(pts ** np.array(expo), axis=1)))
                moment = sphere_moment(expo)
                exact = float(moment.rational) * math.pi**moment.pi_power / (degree + m)
                assert abs(approx - exact) <= 1e-12, expo

    def test_rules_are_deterministic(self):
        a = build_rule(3, 12)
        b = build_rule(3, 12)
        assert np.array_equal(a.radial_weights, b.radial_weights)
        assert np.array_equal(a.sphere_points, b.sphere_points)


@pytest.fixture(scope="module")
def plane_rule():
    return build_rule(2, 100)


@pytest.fixture(scope="module")
def coarse_plane_rule():
    return build_rule(2, 30)


@pytest.fixture(scope="module")
def space_rule():
    return build_rule(3, 40)


class TestNumericFourier:
    def test_zero_frequency_is_ball_integral(self, plane_rule):
        constant = normalize(clifford_legendre(0, 0, 2))
        value = numeric_fourier(constant, (0.0, 0.0), plane_rule)
        # The plane's degree-0 member is the constant 1/sqrt(pi) on the
        # blade e_1, so its disk integral is sqrt(pi) there.
        assert value.re.coeffs[1] == pytest.approx(math.sqrt(math.pi), rel=1e-13)
        assert abs(value.re.coeffs[0]) < 1e-14
        assert max(abs(c) for c in value.im.coeffs) < 1e-14
        higher = normalize(clifford_legendre(2, 0, 2))
        gone = numeric_fourier(higher, (0.0, 0.0), plane_rule)
        assert max(abs(c) for c in gone.re.coeffs + gone.im.coeffs) < 1e-13

    def test_matches_closed_transform_plane(self, plane_rule):
        worst = 0.0
        for n in range(4):
            for k in range(3):
                p = clifford_legendre(n, k, 2)
                for radius in (0.5, 1.0, 2.0, 5.0):
                    xi = (0.6 * radius, 0.8 * radius)
                    closed = fourier_transform(p, xi)
                    numeric = numeric_fourier(p, xi, plane_rule)
                    scale = max(
                        max(abs(c) for c in closed.re.coeffs),
                        max(abs(c) for c in closed.im.coeffs),
                    )
                    err = max(
                        max(abs(a - b) for a, b in zip(closed.re.coeffs, numeric.re.coeffs)),
                        max(abs(a - b) for a, b in zip(closed.im.coeffs, numeric.im.coeffs)),
                    )
                    worst = max(worst, err / scale)
        assert worst <= 1e-6

    def test_matches_closed_transform_space(self, space_rule):
        for n in range(3):
            p = clifford_legendre(n, 1, 3)
            xi = (0.3, -0.5, 0.7)
            closed = fourier_transform(p, xi)
            numeric = numeric_fourier(p, xi, space_rule)
            err = max(
                max(abs(a - b) for a, b in zip(closed.re.coeffs, numeric.re.coeffs)),
                max(abs(a - b) for a, b in zip(closed.im.coeffs, numeric.im.coeffs)),
            )
            assert err <= 1e-8

    def test_conjugate_symmetry(self, plane_rule):
        p = clifford_legendre(2, 1, 2)
        plus = numeric_fourier(p, (0.4, -0.7), plane_rule)
        minus = numeric_fourier(p, (-0.4, 0.7), plane_rule)
        assert plus.re.coeffs == minus.re.coeffs
        assert all(a == -b for a, b in zip(plus.im.coeffs, minus.im.coeffs))

    def test_scaling_linearity(self, coarse_plane_rule):
        p = clifford_legendre(1, 1, 2)
        doubled = dataclasses.replace(p, scale=p.scale * 2)
        single = numeric_fourier(p, (0.5, 0.2), coarse_plane_rule)
        double = numeric_fourier(doubled, (0.5, 0.2), coarse_plane_rule)
        for a, b in zip(single.re.coeffs + single.im.coeffs, double.re.coeffs + double.im.coeffs):
            assert b == pytest.approx(2.0 * a, abs=1e-15)

    def test_repeated_runs_identical(self, coarse_plane_rule):
        p = clifford_legendre(2, 0, 2)
        first = numeric_fourier(p, (1.0, -0.5), coarse_plane_rule)
        second = numeric_fourier(p, (1.0, -0.5), coarse_plane_rule)
        assert first.re.coeffs == second.re.coeffs
        assert first.im.coeffs == second.im.coeffs

    def test_coarse_rule_rejected(self, coarse_plane_rule):
        p = clifford_legendre(0, 0, 2)
        with pytest.raises(ValueError, match="coarse"):
            numeric_fourier(p, (5.0, 5.0), coarse_plane_rule)

    def test_frequency_radius_capped(self, plane_rule):
        p = clifford_legendre(0, 0, 2)
        with pytest.raises(ValueError):
            numeric_fourier(p, (8.0, 8.0), plane_rule)

    def test_dimension_mismatch_rejected(self, plane_rule):
        p = clifford_legendre(0, 0, 3)
        with pytest.raises(ValueError):
            numeric_fourier(p, (0.1, 0.2, 0.3), plane_rule)


class TestBallInner:
    def test_self_inner_is_exact_norm(self):
        for m in (2, 3, 4, 5):
            for n in range(5):
                p = clifford_legendre(n, 1, m)
                mv, scale = ball_inner_exact(p, p)
                assert scale.radical == 1
                assert mv.coeffs[0] * scale.rational == norm_sq(n, 1, m)
                assert all(c == 0 for c in mv.coeffs[1:])

    def test_cross_degree_vanishes_exactly(self):
        for m in (2, 3, 5):
            for n in range(4):
                for n2 in range(n + 1, 5):
                    p = clifford_legendre(n, 2, m)
                    q = clifford_legendre(n2, 2, m)
                    mv, _ = ball_inner_exact(p, q)
                    assert mv.is_zero()

    def test_mixed_parity_vanishes_exactly(self):
        p = clifford_legendre(0, 1, 3)
        q = clifford_legendre(1, 1, 3)
        mv, _ = ball_inner_exact(p, q)
        assert mv.is_zero()

    @pytest.mark.parametrize("m", [2, 3])
    def test_quadrature_agrees_with_exact(self, m, coarse_plane_rule):
        rule = coarse_plane_rule if m == 2 else build_rule(3, 30)
        for n in range(4):
            for n2 in range(4):
                p = normalize(clifford_legendre(n, 1, m))
                q = normalize(clifford_legendre(n2, 1, m))
                exact = ball_inner(p, q)
                approx = ball_inner(p, q, rule)
                assert max(abs(a - b) for a, b in zip(exact.coeffs, approx.coeffs)) <= 1e-12

    def test_quadrature_agrees_unnormalized(self, coarse_plane_rule):
        p = clifford_legendre(3, 1, 2)
        exact = ball_inner(p, p)
        approx = ball_inner(p, p, coarse_plane_rule)
        magnitude = max(1.0, abs(exact.coeffs[0]))
        assert abs(exact.coeffs[0] - approx.coeffs[0]) <= 1e-12 * magnitude

    def test_dimension_mismatch_rejected(self, coarse_plane_rule):
        p = clifford_legendre(0, 0, 2)
        q = clifford_legendre(0, 0, 3)
        with pytest.raises(ValueError):
            ball_inner_exact(p, q)
        with pytest.raises(ValueError):
            ball_inner(p, clifford_legendre(0, 0, 3), coarse_plane_rule)


class TestGramReport:
    def test_normalized_family_is_identity_exact_path(self):
        family = [normalize(clifford_legendre(n, 1, 4)) for n in range(7)]
        report = gram_report(family)
        assert report.max_off_diagonal == 0.0
        assert report.max_diagonal_deviation <= 1e-15
        assert len(report.matrix) == 7

    def test_normalized_family_identity_quadrature(self, coarse_plane_rule):
        family = [normalize(clifford_legendre(n, 1, 2)) for n in range(7)]
        report = gram_report(family, coarse_plane_rule)
        assert report.max_off_diagonal <= 1e-10
        assert report.max_diagonal_deviation <= 1e-10

    def test_unnormalized_diagonal_uses_norm_formula(self):
        family = [clifford_legendre(n, 0, 2) for n in range(4)]
        report = gram_report(family)
        assert report.max_off_diagonal == 0.0
        assert report.max_diagonal_deviation <= 1e-12 * float(norm_sq(3, 0, 2))

    def test_mis_scaled_member_detected(self):
        family = [normalize(clifford_legendre(n, 0, 2)) for n in range(3)]
        family[1] = dataclasses.replace(family[1], scale=family[1].scale * 2)
        report = gram_report(family)
        assert report.matrix[1][1] == pytest.approx(4.0, rel=1e-13)
        assert report.max_diagonal_deviation == pytest.approx(3.0, rel=1e-13)

    def test_empty_family(self):
        report = gram_report([])
        assert report.matrix == ()
        assert report.max_off_diagonal == 0.0
        assert report.max_diagonal_deviation == 0.0

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(ValueError):
            gram_report([clifford_legendre(0, 0, 2), clifford_legendre(0, 0, 3)])


class TestPlancherel:
    @pytest.mark.parametrize("n", [0, 1, 2])
    @pytest.mark.parametrize("k", [0, 1])
    def test_truncated_parseval_reproduces_norm(self, n, k):
        estimate, exact = plancherel_radial_check(n, k, 2)
        assert abs(estimate - exact) <= 1e-4 * max(1.0, exact)

"""Joint number-phase function: direct sum, grids, closed forms, covariance."""

import math

import numpy as np
import pytest
from hypothesis import given, settings

from diskphase import (
    IDENTITY,
    SpecError,
    WeylElement,
    chebyshev_u,
    closed_form,
    make_bg,
    make_blaschke_state,
    make_number,
    make_pi_superposition,
    make_su11_cs,
    midpoint_grid,
    number_distribution,
    phase_distribution,
    shift_covariance_check,
    superpose,
    wigner,
    wigner_grid,
)
from tests.conftest import boundary_direct, normalized_states


def integral_form(state, n, theta, quad_points=512):
    """Independent oracle: the circle-integral form evaluated by trapezoid.

    The integrand is a trigonometric polynomial, so the periodic trapezoid
    rule is exact once the grid beats its bandwidth.
    """
    phi = -np.pi + 2 * np.pi * np.arange(quad_points) / quad_points
    left = boundary_direct(state, theta - phi)
    right = boundary_direct(state, theta + phi)
    integrand = (1 + np.exp(1j * phi)) * np.exp(-2j * n * phi) * np.conj(left) * right
    return float(np.real(np.mean(integrand) / (2 * np.pi)))


class TestDirectSum:
    def test_number_state_band(self):
        s = make_number(2, 8)
        for n in range(5):
            val = wigner(s, n, 0.37)
            assert val == pytest.approx((1.0 if n == 2 else 0.0) / (2 * np.pi))

    def test_vacuum_vanishes_at_high_levels(self):
        assert wigner(make_number(0, 4), 3, 0.1) == 0.0

    def test_vacuum_plus_number_display(self):
        m = 4
        s = superpose([make_number(0, 12), make_number(m, 12)], [1, 1])
        theta = np.linspace(-3, 3, 7)
        k = (m + 1) // 2 if m % 2 else m // 2
        for n in range(7):
            expected = (
                (n == 0) + (n == m) + 2 * (n == k) * np.cos(m * theta)
            ) / (4 * np.pi)
            np.testing.assert_allclose(wigner(s, n, theta), expected, atol=1e-13)

    @given(normalized_states(max_size=24))
    @settings(max_examples=30)
    def test_real_valued(self, state):
        theta = np.linspace(-np.pi, np.pi, 9)
        for n in (0, 1, 5):
            vals = wigner(state, n, theta)
            assert np.all(np.isreal(vals))

    @given(normalized_states(max_size=20))
    @settings(max_examples=15, deadline=None)
    def test_against_integral_oracle(self, state):
        rng = np.random.default_rng(hash(state.truncation) % 2**32)
        for _ in range(5):
            n = int(rng.integers(0, 10))
            theta = float(rng.uniform(-np.pi, np.pi))
            direct = wigner(state, n, theta)
            assert direct == pytest.approx(
                integral_form(state, n, theta), abs=1e-11
            )


class TestGrid:
    def test_matches_pointwise_evaluation(self):
        s = make_su11_cs(0.5, 24)
        grid = wigner_grid(s, n_max=10, grid_size=128)
        for n in (0, 3, 10):
            np.testing.assert_allclose(
                grid.values[n], wigner(s, n, grid.theta), atol=1e-13
            )

    def test_number_marginal_exact(self):
        s = make_pi_superposition(0.6, 1.2, 32)
        grid = wigner_grid(s, n_max=32, grid_size=256)
        expected = np.zeros(33)
        expected[:32] = number_distribution(s)
        np.testing.assert_allclose(grid.number_marginal(), expected, atol=1e-8)

    def test_phase_marginal_exact(self):
        s = make_blaschke_state(0.4 + 0.3j, 32)
        grid = wigner_grid(s, n_max=32, grid_size=256)
        np.testing.assert_allclose(
            grid.phase_marginal(), phase_distribution(s, 256), atol=1e-6
        )

    def test_grid_too_small_rejected(self):
        with pytest.raises(SpecError):
            wigner_grid(make_number(0, 16), n_max=16, grid_size=32)

    def test_negative_values_allowed(self):
        # quasi-probability: the vacuum-plus-number state dips below zero
        s = superpose([make_number(0, 8), make_number(1, 8)], [1, 1])
        grid = wigner_grid(s, n_max=4, grid_size=64)
        assert grid.values.min() < -1e-3


class TestChebyshev:
    def test_base_cases(self):
        assert chebyshev_u(-2, 0.3) == 0.0
        assert chebyshev_u(-1, 0.3) == 0.0
        assert chebyshev_u(0, 0.3) == 1.0
        assert chebyshev_u(1, 0.3) == pytest.approx(0.6)

    def test_angle_identity(self):
        theta = 0.813
        for k in range(8):
            expected = math.sin((k + 1) * theta) / math.sin(theta)
            assert chebyshev_u(k, math.cos(theta)) == pytest.approx(expected)


class TestClosedForms:
    theta = midpoint_grid(64)

    def check(self, kind, params, state, n_top=16, atol=1e-10):
        for n in range(n_top):
            direct = wigner(state, n, self.theta)
            closed = closed_form(kind, params, n, self.theta)
            np.testing.assert_allclose(direct, closed, atol=atol)

    def test_coherent(self):
        z = 0.5 * np.exp(0.7j)
        self.check("su11_cs", {"z": z}, make_su11_cs(z, 64))

    def test_factorial_state(self):
        u = np.exp(0.3j)
        self.check("bg", {"u": u}, make_bg(u, 40))

    def test_blaschke(self):
        z = 0.5 * np.exp(0.4j)
        self.check("blaschke", {"z": z}, make_blaschke_state(z, 96))

    def test_superposition(self):
        z, tau = 0.6 * np.exp(0.9j), 3 * math.pi / 4
        self.check(
            "pi_superposition", {"z": z, "tau": tau},
            make_pi_superposition(z, tau, 96),
        )

    def test_number(self):
        self.check("number", {"m": 3}, make_number(3, 32))

    @pytest.mark.parametrize("m", [1, 2, 5, 8])
    def test_vacuum_plus(self, m):
        # the cosine row sits at m/2 for even m, (m+1)/2 for odd m
        self.check(
            "number_out",
            {"m": m},
            superpose([make_number(0, 32), make_number(m, 32)], [1, 1]),
        )

    def test_coherent_n0_omits_second_term(self):
        # at the lowest level only the even-harmonic term survives
        val = closed_form("su11_cs", {"z": 0.0}, 0, 0.3)
        assert val == pytest.approx(1.0 / (2 * np.pi))

    def test_factorial_quarter_turn(self):
        # vanishing cosine wipes out every level above the lowest
        u = 1.0
        assert closed_form("bg", {"u": u}, 0, np.pi / 2) == pytest.approx(
            1.0 / (2 * np.pi * np.i0(2.0))
        )
        for n in (1, 2, 5):
            assert closed_form("bg", {"u": u}, n, np.pi / 2) == pytest.approx(0.0)

    def test_unknown_tag(self):
        with pytest.raises(SpecError):
            closed_form("squeezed", {}, 0, 0.0)


class TestOuterDetermination:
    def test_outer_regime_function_from_outer_part(self):
        """In the zero-free regime the lattice function is fully rebuilt from
        the minimum-phase coefficients (global phase drops out of S)."""
        from diskphase import factorize, raw_state

        state = make_pi_superposition(0.5, 2.0, 64)  # |cot(tau/2)| > 0.5
        fac = factorize(state, grid_size=512)
        assert fac.outer_defect < 1e-8
        rebuilt = raw_state(np.conj(fac.outer_coeffs))
        theta = midpoint_grid(64)
        for n in range(12):
            np.testing.assert_allclose(
                wigner(rebuilt, n, theta), wigner(state, n, theta), atol=1e-8
            )

    def test_identical_inputs_identical_lattice(self):
        state = make_su11_cs(0.45 + 0.3j, 32)
        a = wigner_grid(state, n_max=12, grid_size=128)
        b = wigner_grid(state, n_max=12, grid_size=128)
        np.testing.assert_array_equal(a.values, b.values)


class TestShiftCovariance:
    def test_pure_shift(self):
        res = shift_covariance_check(make_su11_cs(0.5, 48), WeylElement(2), n_max=20)
        assert res < 1e-10

    def test_rotation(self):
        res = shift_covariance_check(
            make_bg(1.0, 40), WeylElement(0, 0.9), n_max=20
        )
        assert res < 1e-10

    def test_identity(self):
        res = shift_covariance_check(make_blaschke_state(0.5, 32), IDENTITY, n_max=12)
        assert res == 0.0

    def test_full_element(self):
        res = shift_covariance_check(
            make_pi_superposition(0.5, 2.0, 40), WeylElement(3, -1.2, 0.8), n_max=24
        )
        assert res < 1e-10

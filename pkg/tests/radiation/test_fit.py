# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
import math
import unittest

import numpy as np

from hexfar.common import GridMismatchError, InvalidParameterError, UndefinedPowerError
from hexfar.mode import DipoleArray, impedance, wavenumber
from hexfar.radiation import DEFAULT_THETA_MAX, FarFieldGrid, SphericalGrid, alpha_fit, apply_alpha, \
    dipole_farfield
from hexfar.settings import SettingsManager


def x_dipole(grid: SphericalGrid) -> FarFieldGrid:
    dipole = DipoleArray([(0, 0, 0)], [(1, 0, 0)], 0.01, impedance(1.4), wavenumber(1.4))
    return dipole_farfield(dipole, grid)


class AlphaFitTestCase(unittest.TestCase):
    def setUp(self) -> None:
        SettingsManager.init()
        self.model = x_dipole(SphericalGrid.uniform(5, 5))

    def test_recovers_scale(self):
        for c in (0.5, 1.0, 2.5):
            with self.subTest(c=c):
                fit = alpha_fit(self.model, self.model.scaled(math.sqrt(c)))

                self.assertAlmostEqual(fit.alpha, c, places=12)
                self.assertLess(fit.rmse, 1e-12)
                self.assertEqual(fit.theta_max, DEFAULT_THETA_MAX)

    def test_noisy_reference(self):
        grid = self.model.grid
        rows = grid.rows_up_to(DEFAULT_THETA_MAX)
        noise = 0.05 * self.model.s_r.max() * np.random.default_rng(5).uniform(-1, 1, grid.shape)
        noise[rows:] = 0.0
        reference = FarFieldGrid(grid, self.model.e_theta, self.model.e_phi, self.model.eta_med, self.model.k,
                                 s_r=self.model.s_r + noise)

        fit = alpha_fit(self.model, reference)
        noise_rms = math.sqrt(float(np.mean(noise[:rows] ** 2)))
        self.assertAlmostEqual(fit.alpha, 1.0, delta=0.05)
        self.assertAlmostEqual(fit.rmse, noise_rms, delta=0.05 * noise_rms)

    def test_ignores_directions_outside_fit_region(self):
        e_theta = self.model.e_theta.copy()
        e_theta[self.model.grid.theta > math.radians(80)] *= 5
        reference = FarFieldGrid(self.model.grid, e_theta, self.model.e_phi, self.model.eta_med, self.model.k)

        fit = alpha_fit(self.model, reference)
        self.assertAlmostEqual(fit.alpha, 1.0, places=12)
        self.assertLess(fit.rmse, 1e-12)

        wide = alpha_fit(self.model, reference, theta_max=math.pi)
        self.assertGreater(wide.alpha, 1.0)
        self.assertGreater(wide.rmse, 0.0)

    def test_normalized_fit_ignores_overall_scale(self):
        fit = alpha_fit(self.model, self.model.scaled(2.0), normalize=True)

        self.assertAlmostEqual(fit.alpha, 1.0, places=12)

    def test_fit_on_truncated_reference(self):
        reference = x_dipole(SphericalGrid.uniform(5, 5, theta_max_deg=90)).scaled(2.0)

        self.assertAlmostEqual(alpha_fit(self.model, reference).alpha, 4.0, places=12)

    def test_grid_mismatch(self):
        self.assertRaises(GridMismatchError, alpha_fit, self.model, x_dipole(SphericalGrid.uniform(2, 5)))
        self.assertRaises(GridMismatchError, alpha_fit, self.model,
                          x_dipole(SphericalGrid.uniform(5, 5, theta_max_deg=30)))

    def test_zero_model(self):
        grid = self.model.grid
        zero = FarFieldGrid(grid, np.zeros(grid.shape), np.zeros(grid.shape), self.model.eta_med, self.model.k)

        self.assertRaises(UndefinedPowerError, alpha_fit, zero, self.model)
        self.assertRaises(UndefinedPowerError, alpha_fit, self.model, zero, normalize=True)

    def test_zero_reference_gives_zero_alpha(self):
        grid = self.model.grid
        zero = FarFieldGrid(grid, np.zeros(grid.shape), np.zeros(grid.shape), self.model.eta_med, self.model.k)

        self.assertEqual(alpha_fit(self.model, zero).alpha, 0.0)

    def test_invalid_theta_max(self):
        self.assertRaises(InvalidParameterError, alpha_fit, self.model, self.model, 0.0)
        self.assertRaises(InvalidParameterError, alpha_fit, self.model, self.model, 4.0)

    def test_to_dict(self):
        fit = alpha_fit(self.model, self.model.scaled(2.0))

        self.assertEqual(set(fit.to_dict()), {'alpha', 'rmse', 'theta_max_deg'})
        self.assertAlmostEqual(fit.to_dict()['theta_max_deg'], 70.0)


class ApplyAlphaTestCase(unittest.TestCase):
    def setUp(self) -> None:
        SettingsManager.init()
        self.model = x_dipole(SphericalGrid.uniform(5, 5))

    def test_scales_poynting_vector(self):
        scaled = apply_alpha(self.model, 1.69)

        np.testing.assert_allclose(scaled.s_r, 1.69 * self.model.s_r, rtol=1e-12, atol=1e-15 * self.model.s_r.max())
        self.assertEqual(scaled.eta_med, self.model.eta_med)

    def test_negative_alpha(self):
        self.assertRaises(InvalidParameterError, apply_alpha, self.model, -0.1)

# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
import math
import unittest

import numpy as np

from hexfar.common import InvalidParameterError
from hexfar.mode import DipoleArray, impedance, wavenumber
from hexfar.radiation import SphericalGrid, SurfaceCurrents, box_surface, dipole_farfield, equivalent_currents, \
    hertzian_dipole_fields, ntf_surface
from hexfar.settings import SettingsManager


class NtfSurfaceTestCase(unittest.TestCase):
    def setUp(self) -> None:
        SettingsManager.init()
        self.grid = SphericalGrid.uniform(10, 30, theta_max_deg=90)
        self.points, self.normals, self.area = box_surface(1.0, 16)

    def _dipole_currents(self, current) -> SurfaceCurrents:
        e, h = hertzian_dipole_fields(self.points, (0, 0, 0), current)
        j_s, m_s = equivalent_currents(e, h, self.normals)
        return SurfaceCurrents(self.points, j_s, m_s, self.area)

    def test_closed_box_reproduces_dipole_pattern(self):
        for current in ((1, 0, 0), (0, 0, 1)):
            with self.subTest(current=current):
                projected = ntf_surface(self._dipole_currents(current), self.grid).s_r
                dipole = DipoleArray([(0, 0, 0)], [current], 0.01, impedance(1.0), wavenumber(1.0))
                expected = dipole_farfield(dipole, self.grid).s_r

                rms = math.sqrt(float(np.mean((projected - expected) ** 2)))
                self.assertLess(rms / expected.max(), 0.02)

    def test_zero_currents(self):
        zeros = np.zeros_like(self.points)
        ff = ntf_surface(SurfaceCurrents(self.points, zeros, zeros, self.area), self.grid)

        np.testing.assert_array_equal(ff.s_r, 0)

    def test_scaling_is_quadratic(self):
        sc = self._dipole_currents((1, 0, 0))
        base = ntf_surface(sc, self.grid).s_r
        tripled = ntf_surface(sc.scaled(3), self.grid).s_r

        np.testing.assert_allclose(tripled, 9 * base, rtol=1e-12, atol=1e-15 * base.max())

    def test_medium_carried(self):
        sc = SurfaceCurrents(self.points, np.zeros_like(self.points), np.zeros_like(self.points), self.area, 1.4)
        ff = ntf_surface(sc, self.grid)

        self.assertEqual(ff.eta_med, impedance(1.4))
        self.assertEqual(ff.k, wavenumber(1.4))
        self.assertAlmostEqual(sc.eta, math.sqrt(sc.mu / sc.epsilon), delta=1e-6 * sc.eta)

    def test_thread_count_does_not_change_result(self):
        sc = self._dipole_currents((0, 1, 0))

        single_thread = ntf_surface(sc, self.grid, threads=1)
        multi_thread = ntf_surface(sc, self.grid, threads=3)
        np.testing.assert_array_equal(single_thread.e_theta, multi_thread.e_theta)
        np.testing.assert_array_equal(single_thread.e_phi, multi_thread.e_phi)

    def test_empty_set(self):
        empty = SurfaceCurrents(np.zeros((0, 3)), np.zeros((0, 3)), np.zeros((0, 3)), 0.01)

        self.assertRaises(InvalidParameterError, ntf_surface, empty, self.grid)

    def test_invalid_currents(self):
        points = np.zeros((2, 3))
        self.assertRaises(InvalidParameterError, SurfaceCurrents, points, np.zeros((3, 3)), np.zeros((2, 3)), 0.01)
        self.assertRaises(InvalidParameterError, SurfaceCurrents, points, np.full((2, 3), np.nan),
                          np.zeros((2, 3)), 0.01)
        self.assertRaises(InvalidParameterError, SurfaceCurrents, points, np.zeros((2, 3)), np.zeros((2, 3)), 0.0)


class HertzianFieldsTestCase(unittest.TestCase):
    def setUp(self) -> None:
        SettingsManager.init()

    def test_far_zone_limit(self):
        r = 200.0
        e, h = hertzian_dipole_fields([(0, r, 0)], (0, 0, 0), (1, 0, 0))
        k, eta = wavenumber(1.0), impedance(1.0)
        expected = -1j * eta * k * 0.01 / (4 * math.pi * r) * np.exp(-1j * k * r)

        np.testing.assert_allclose(e[0], (expected, 0, 0), rtol=1e-2, atol=1e-3 * abs(expected))
        self.assertAlmostEqual(abs(h[0, 2]) * eta / abs(expected), 1.0, delta=1e-2)
        self.assertLess(abs(h[0, 0]) + abs(h[0, 1]), 1e-12 * abs(h[0, 2]))

    def test_point_on_dipole(self):
        self.assertRaises(InvalidParameterError, hertzian_dipole_fields, [(0, 0, 0)], (0, 0, 0), (1, 0, 0))

    def test_invalid_length(self):
        self.assertRaises(InvalidParameterError, hertzian_dipole_fields, [(1, 0, 0)], (0, 0, 0), (1, 0, 0), 0.0)


class SurfaceHelpersTestCase(unittest.TestCase):
    def setUp(self) -> None:
        SettingsManager.init()

    def test_box_surface(self):
        points, normals, area = box_surface(0.5, 4, center=(1, 2, 3))

        self.assertEqual(points.shape, (96, 3))
        self.assertAlmostEqual(area, 0.0625)
        np.testing.assert_allclose(np.linalg.norm(normals, axis=1), 1.0)
        np.testing.assert_allclose(np.sum((points - (1, 2, 3)) * normals, axis=1), 0.5)
        np.testing.assert_allclose(np.sum(normals, axis=0), 0, atol=1e-12)

    def test_box_surface_invalid(self):
        self.assertRaises(InvalidParameterError, box_surface, 1.0, 0)
        self.assertRaises(InvalidParameterError, box_surface, 1.0, 2.5)
        self.assertRaises(InvalidParameterError, box_surface, 0.0, 4)

    def test_equivalent_currents_single_normal(self):
        rng = np.random.default_rng(1)
        e = rng.normal(size=(5, 3)) + 1j * rng.normal(size=(5, 3))
        h = rng.normal(size=(5, 3)) + 1j * rng.normal(size=(5, 3))

        j_single, m_single = equivalent_currents(e, h, (0, 0, 2))
        j_each, m_each = equivalent_currents(e, h, np.tile((0, 0, 1.0), (5, 1)))
        np.testing.assert_allclose(j_single, j_each)
        np.testing.assert_allclose(m_single, m_each)
        np.testing.assert_allclose(j_single[:, 2], 0)
        np.testing.assert_allclose(m_single[:, :2], np.stack([e[:, 1], -e[:, 0]], axis=1))

# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
import math
import unittest

from hexfar.common import InvalidParameterError
from hexfar.geometry import BASIS, canonicalize_alignment, in_reduced_domain, point_group_images, \
    reduced_domain, resolve_alignment, symmetry_points
from hexfar.settings import SettingsManager


class SymmetryPointsTestCase(unittest.TestCase):
    def setUp(self) -> None:
        SettingsManager.init()

    def test_alignment_a_is_centered(self):
        self.assertEqual(symmetry_points(0.52)['A'], (0.0, 0.0))

    def test_resolve_is_case_insensitive(self):
        self.assertEqual(resolve_alignment('b', 0.52), symmetry_points(0.52)['B'])

    def test_unknown_alignment(self):
        with self.assertRaises(InvalidParameterError):
            resolve_alignment('C', 0.52)

    def test_domain_corners_are_inside(self):
        for u, v in reduced_domain(1.0):
            self.assertTrue(in_reduced_domain(u, v, 1.0))

    def test_outside_domain(self):
        self.assertFalse(in_reduced_domain(0.3, 0.0, 1.0))
        self.assertFalse(in_reduced_domain(0.1, 0.1, 1.0))
        self.assertFalse(in_reduced_domain(0.1, -0.01, 1.0))


class CanonicalizeAlignmentTestCase(unittest.TestCase):
    def setUp(self) -> None:
        SettingsManager.init()

    def test_domain_point_unchanged(self):
        u, v = canonicalize_alignment(0.1, 0.02, 1.0)

        self.assertAlmostEqual(u, 0.1, delta=1e-15)
        self.assertAlmostEqual(v, 0.02, delta=1e-15)

    def test_point_group_images_collapse(self):
        for image in point_group_images(0.1, 0.02):
            u, v = canonicalize_alignment(*image, 1.0)
            self.assertAlmostEqual(u, 0.1, delta=1e-12)
            self.assertAlmostEqual(v, 0.02, delta=1e-12)

    def test_lattice_translations_collapse(self):
        a = 0.52
        for n1, n2 in ((1, 0), (0, 1), (-2, 1), (3, -4)):
            shift = a * (n1 * BASIS[0] + n2 * BASIS[1])
            u, v = canonicalize_alignment(0.07 + shift[0], 0.01 + shift[1], a)
            self.assertAlmostEqual(u, 0.07, delta=1e-12)
            self.assertAlmostEqual(v, 0.01, delta=1e-12)

    def test_result_lies_in_wedge(self):
        a = 0.52
        for u0, v0 in ((0.3, 0.4), (-0.21, 0.05), (1.7, -0.9), (0.26, 0.0)):
            u, v = canonicalize_alignment(u0, v0, a)
            self.assertGreaterEqual(v, 0.0)
            self.assertLessEqual(v, u * math.tan(math.pi / 6) + 1e-12)
            self.assertLessEqual(math.hypot(u, v), a / math.sqrt(3) + 1e-12)

    def test_lattice_point_maps_to_origin(self):
        u, v = canonicalize_alignment(0.52 * 0.5, 0.52 * math.sqrt(3) / 2, 0.52)

        self.assertAlmostEqual(u, 0.0, delta=1e-12)
        self.assertAlmostEqual(v, 0.0, delta=1e-12)

# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
import math
import unittest

import numpy as np

from hexfar.common import InvalidParameterError
from hexfar.geometry import BASIS, LatticeSpec, generate_lattice, hex_trace, positions_of
from hexfar.settings import SettingsManager


def brute_force_trace(n: int, a: float) -> set:
    points = set()
    for n1 in range(-n - 1, n + 2):
        for n2 in range(-n - 1, n + 2):
            if max(abs(n1), abs(n2), abs(n1 + n2)) == n:
                xy = a * (n1 * BASIS[0] + n2 * BASIS[1])
                points.add((round(float(xy[0]), 9), round(float(xy[1]), 9)))
    return points


def brute_force_lattice(spec: LatticeSpec, extent: float) -> np.ndarray:
    points = []
    for n1 in range(-10, 11):
        for n2 in range(-10, 11):
            xy = spec.a * (n1 * BASIS[0] + n2 * BASIS[1]) - (spec.u, spec.v)
            if math.hypot(*xy) <= extent:
                points.append(xy)
    return np.array(points).reshape(-1, 2)


def same_point_set(first: np.ndarray, second: np.ndarray, tolerance: float = 1e-9) -> bool:
    if first.shape != second.shape:
        return False
    gaps = np.hypot(*(first[:, None, :] - second[None, :, :]).transpose(2, 0, 1))
    return bool(np.all(gaps.min(axis=1) < tolerance) and np.all(gaps.min(axis=0) < tolerance))


class HexTraceTestCase(unittest.TestCase):
    def setUp(self) -> None:
        SettingsManager.init()

    def test_trace_has_6n_points(self):
        for n in range(1, 11):
            self.assertEqual(len(hex_trace(n, 0.52)), 6 * n)

    def test_trace_1_is_nearest_neighbour_ring(self):
        holes = hex_trace(1, 1.0)

        for hole in holes:
            self.assertAlmostEqual(hole.distance, 1.0, delta=1e-12)

    def test_trace_3_distances(self):
        a = 0.5168
        distances = np.array([h.distance for h in hex_trace(3, a)])

        self.assertEqual(np.count_nonzero(np.abs(distances - math.sqrt(7) * a) < 1e-9), 12)
        self.assertEqual(np.count_nonzero(np.abs(distances - 3 * a) < 1e-9), 6)

    def test_trace_matches_brute_force(self):
        for n in (1, 2, 3, 5, 8):
            holes = hex_trace(n, 0.7)
            actual = {(round(h.x, 9), round(h.y, 9)) for h in holes}
            self.assertEqual(actual, brute_force_trace(n, 0.7))

    def test_trace_is_counterclockwise_from_x_axis(self):
        holes = hex_trace(2, 1.0)
        angles = [h.angle for h in holes]

        self.assertAlmostEqual(holes[0].x, 2.0)
        self.assertAlmostEqual(holes[0].y, 0.0)
        self.assertEqual(angles, sorted(angles))

    def test_trace_carries_index(self):
        self.assertTrue(all(h.trace_index == 4 for h in hex_trace(4, 1.0)))

    def test_invalid_trace_index(self):
        for n in (0, -1, 2.5):
            with self.assertRaises(InvalidParameterError):
                hex_trace(n, 1.0)

    def test_invalid_lattice_constant(self):
        with self.assertRaises(InvalidParameterError):
            hex_trace(3, 0.0)


class GenerateLatticeTestCase(unittest.TestCase):
    def setUp(self) -> None:
        SettingsManager.init()

    def test_centered_lattice_contains_traces(self):
        holes = generate_lattice(LatticeSpec(1.0, 0.2, 0.3), 3.0 + 1e-6)

        self.assertEqual(len(holes), 1 + 6 + 12 + 18)
        self.assertEqual(holes[0].trace_index, 0)
        self.assertAlmostEqual(holes[0].distance, 0.0)

    def test_nearest_neighbour_shell(self):
        holes = generate_lattice(LatticeSpec(1.0, 0.2, 0.3), 1.1)

        self.assertEqual(len(holes), 7)
        for hole in holes[1:]:
            self.assertAlmostEqual(hole.distance, 1.0, delta=1e-12)

    def test_matches_brute_force(self):
        cases = [
            (LatticeSpec(1.0, 0.2, 0.3), 2.3),
            (LatticeSpec(1.0, 0.2, 0.3), 4.9),
            (LatticeSpec(0.5168, 0.2, 0.3, 0.1, 0.03), 2.5),
            (LatticeSpec(1.0, 0.2, 0.3, 0.25, 0.25 * math.tan(math.pi / 6)), 4.7),
        ]
        for spec, extent in cases:
            with self.subTest(u=spec.u, extent=extent):
                actual = positions_of(generate_lattice(spec, extent))
                self.assertTrue(same_point_set(actual, brute_force_lattice(spec, extent)))

    def test_centered_lattice_has_six_fold_symmetry(self):
        xy = positions_of(generate_lattice(LatticeSpec(0.5168, 0.2, 0.3), 2.0))
        c, s = math.cos(math.pi / 3), math.sin(math.pi / 3)
        rotated = xy @ np.array([[c, s], [-s, c]])

        self.assertTrue(same_point_set(rotated, xy))

    def test_nearest_hole_at_alignment_b(self):
        holes = generate_lattice(LatticeSpec(1.0, 0.2, 0.3, 0.25, 0.25 * math.tan(math.pi / 6)), 0.5)

        self.assertAlmostEqual(holes[0].distance, 1 / (2 * math.sqrt(3)), delta=1e-12)
        self.assertAlmostEqual(holes[0].distance, 0.288675, delta=1e-6)

    def test_points_within_extent(self):
        extent = 2.2
        holes = generate_lattice(LatticeSpec(0.5, 0.2, 0.3, 0.1, 0.03), extent)

        self.assertTrue(all(h.distance <= extent + 1e-9 for h in holes))
        self.assertTrue(all(h.trace_index is None for h in holes))

    def test_offset_shifts_holes(self):
        spec = LatticeSpec(1.0, 0.2, 0.3, 0.2, 0.1)
        holes = generate_lattice(spec, 4.0)

        self.assertIn((-0.2, -0.1), {(round(h.x, 12), round(h.y, 12)) for h in holes})

    def test_ordered_by_distance(self):
        holes = generate_lattice(LatticeSpec(0.52, 0.2, 0.3, 0.05, 0.01), 3.0)
        distances = [h.distance for h in holes]

        self.assertTrue(all(d2 >= d1 - 1e-9 for d1, d2 in zip(distances, distances[1:])))

    def test_positions_of_empty(self):
        self.assertEqual(positions_of([]).shape, (0, 2))

    def test_overlapping_holes(self):
        with self.assertRaises(InvalidParameterError):
            LatticeSpec(0.4, 0.2, 0.3)

    def test_invalid_extent(self):
        with self.assertRaises(InvalidParameterError):
            generate_lattice(LatticeSpec(0.5, 0.2, 0.3), 0.0)

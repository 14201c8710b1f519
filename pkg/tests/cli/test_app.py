# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
import csv
import io
import json
import math
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from hexfar.app import App
from hexfar.console import Console
from hexfar.settings import SettingsManager

COARSE = {
    'disk': {'r_d': 1.5427, 't': 0.9411, 'r_u': 1.45},
    'lattice': {'a': 0.5168, 'r_h': 0.2, 'd': 0.2931, 'u': 0.0, 'v': 0.0},
    'mode': {'m': 18},
    'grid': {'dtheta_deg': 5.0, 'dphi_deg': 5.0},
    'na': [0.5, 0.7],
    'n_collect': 1.4,
}


class AppTestCase(unittest.TestCase):
    def setUp(self) -> None:
        SettingsManager.init()
        self._tmp = tempfile.TemporaryDirectory()
        self.config = self._write_config('coarse.json')

    def tearDown(self) -> None:
        self._tmp.cleanup()

    def _path(self, *parts: str) -> str:
        return os.path.join(self._tmp.name, *parts)

    def _write_config(self, name: str, **changes) -> str:
        data = dict(COARSE, **changes)
        with open(self._path(name), 'wt') as f:
            json.dump(data, f)
        return self._path(name)

    def _run(self, *argv: str) -> tuple[int, str]:
        stdout, stderr = io.StringIO(), io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(stderr):
            with self.assertRaises(SystemExit) as ctx:
                App().run(list(argv))
        return ctx.exception.code, stdout.getvalue()

    def _read_json(self, *parts: str) -> dict:
        with open(self._path(*parts), 'rt') as f:
            return json.load(f)

    def _read_bytes(self, *parts: str) -> bytes:
        with open(self._path(*parts), 'rb') as f:
            return f.read()

    def _read_csv(self, *parts: str) -> list[list[str]]:
        with open(self._path(*parts), 'rt', newline='') as f:
            return list(csv.reader(f))

    def _simulate(self, out: str, *extra: str) -> int:
        code, _ = self._run('--config', self.config, '--out', self._path(out), *extra, 'simulate')
        return code

    def test_simulate(self):
        self.assertEqual(self._simulate('out'), 0)

        for name in ('farfield.csv', 'report.json', 'timing.json'):
            self.assertTrue(os.path.isfile(self._path('out', name)), name)

        report = self._read_json('out', 'report.json')
        self.assertEqual(report['command'], 'simulate')
        self.assertEqual(len(report['config_hash']), 64)
        self.assertGreater(report['dipole_count'], 0)
        self.assertIsNone(report['alpha_fit'])
        self.assertEqual([r['na'] for r in report['reports']], [0.5, 0.7])
        for r in report['reports']:
            self.assertAlmostEqual(r['eta'], r['eta_zpl'] * r['eta_col'], places=12)
            self.assertTrue(0 < r['eta_col'] <= report['upper_fraction'] + 1e-12)
        self.assertLess(report['reports'][0]['eta_col'], report['reports'][1]['eta_col'])

    def test_simulate_is_reproducible(self):
        self.assertEqual(self._simulate('first'), 0)
        self.assertEqual(self._simulate('second', '--threads', '3'), 0)

        for name in ('farfield.csv', 'report.json'):
            self.assertEqual(self._read_bytes('first', name), self._read_bytes('second', name), name)

    def test_na_override(self):
        self.assertEqual(self._simulate('out', '--na', '0.9'), 0)

        report = self._read_json('out', 'report.json')
        self.assertEqual([r['na'] for r in report['reports']], [0.9])

    def test_simulate_with_reference(self):
        self.assertEqual(self._simulate('reference'), 0)
        reference = self._path('reference', 'farfield.csv')
        self.assertEqual(self._simulate('out', '--reference', reference), 0)

        report = self._read_json('out', 'report.json')
        self.assertAlmostEqual(report['alpha_fit']['alpha'], 1.0, places=9)
        self.assertTrue(all(math.isclose(r['alpha'], 1.0, rel_tol=1e-9) for r in report['reports']))

    def test_fit_alpha(self):
        self.assertEqual(self._simulate('reference'), 0)
        reference = self._path('reference', 'farfield.csv')

        code, _ = self._run('--config', self.config, '--out', self._path('fit'), '--reference', reference,
                            'fit-alpha')
        self.assertEqual(code, 0)
        result = self._read_json('fit', 'alpha.json')
        self.assertAlmostEqual(result['alpha'], 1.0, places=9)
        self.assertAlmostEqual(result['theta_max_deg'], 70.0, places=9)
        self.assertFalse(result['normalize'])

    def test_fit_alpha_without_reference(self):
        code, _ = self._run('--config', self.config, '--out', self._path('fit'), 'fit-alpha')

        self.assertEqual(code, 2)

    def test_trace_info(self):
        code, _ = self._run('--config', self.config, '--out', self._path('out'), '--trace', '3', 'trace-info')
        self.assertEqual(code, 0)

        info = self._read_json('out', 'trace_info.json')
        self.assertEqual(info['count'], 18)
        self.assertEqual([s['count'] for s in info['shells']], [12, 6])
        self.assertAlmostEqual(info['shells'][0]['radius'], math.sqrt(7) * 0.5168, places=9)
        self.assertAlmostEqual(info['shells'][1]['radius'], 3 * 0.5168, places=9)
        self.assertTrue(all(p['overlap'] >= 0 for p in info['points']))

    def test_first_trace(self):
        code, _ = self._run('--config', self.config, '--out', self._path('out'), '--trace', '1', 'trace-info')
        self.assertEqual(code, 0)

        info = self._read_json('out', 'trace_info.json')
        self.assertEqual(info['count'], 6)
        self.assertEqual(info['shells'], [{'radius': info['shells'][0]['radius'], 'count': 6}])
        self.assertAlmostEqual(info['shells'][0]['radius'], 0.5168, places=9)

    def test_shifted_trace_has_no_index(self):
        code, _ = self._run('--config', self.config, '--out', self._path('centered'), 'trace-info')
        self.assertEqual(code, 0)
        self.assertTrue(all(p['trace_index'] == 3 for p in self._read_json('centered', 'trace_info.json')['points']))

        lattice = dict(COARSE['lattice'], u=0.05, v=0.02)
        config = self._write_config('shifted.json', lattice=lattice)
        code, _ = self._run('--config', config, '--out', self._path('shifted'), 'trace-info')
        self.assertEqual(code, 0)

        info = self._read_json('shifted', 'trace_info.json')
        self.assertEqual(info['count'], 18)
        self.assertTrue(all(p['trace_index'] is None for p in info['points']))

    def test_runs_release_output_buffers(self):
        argv = ('--config', self.config, '--out', self._path('out'), '--trace', '1', 'trace-info')
        self.assertEqual(self._run(*argv)[0], 0)
        registered = len(Console.buffers)

        for _ in range(3):
            self.assertEqual(self._run(*argv)[0], 0)
        self.assertEqual(len(Console.buffers), registered)

    def test_invalid_trace(self):
        code, _ = self._run('--config', self.config, '--out', self._path('out'), '--trace', '0', 'trace-info')

        self.assertEqual(code, 2)

    def test_sweep(self):
        config = self._write_config('sweep.json', sweep={'param': 'a', 'lo': 0.44, 'hi': 0.60, 'count': 5})
        code, _ = self._run('--config', config, '--out', self._path('out'), '--refine', 'sweep')
        self.assertEqual(code, 0)

        rows = self._read_csv('out', 'sweep.csv')
        self.assertEqual(rows[0], ['param', 'value', 'metric'])
        self.assertEqual(len(rows), 6)
        self.assertTrue(all(row[0] == 'a' for row in rows[1:]))

        summary = self._read_json('out', 'sweep_summary.json')
        self.assertTrue(summary['sweep']['refine'])
        self.assertEqual(summary['failures'], 0)
        self.assertTrue(0.44 < summary['refined']['value'] < 0.60)
        self.assertGreaterEqual(summary['refined']['metric'], summary['argmax']['metric'])

    def test_sweep_without_section(self):
        code, _ = self._run('--config', self.config, '--out', self._path('out'), 'sweep')

        self.assertEqual(code, 2)

    def test_robustness(self):
        config = self._write_config('robustness.json', robustness={
            'seed': 3,
            'count': 4,
            'distributions': {'alignment': {'kind': 'cell'}},
            'thresholds': {'lo': 0.0, 'hi': 0.5, 'count': 6},
        })
        code, _ = self._run('--config', config, '--out', self._path('out'), '--seed', '11', 'robustness')
        self.assertEqual(code, 0)

        samples = self._read_csv('out', 'robustness_samples.csv')
        self.assertEqual(samples[0], ['index', 'u', 'v', 'eta_col', 'error'])
        self.assertEqual(len(samples), 5)
        cumulative = self._read_csv('out', 'robustness_cumulative.csv')
        self.assertEqual(cumulative[0], ['threshold', 'fraction'])
        self.assertEqual(len(cumulative), 7)

        summary = self._read_json('out', 'robustness_summary.json')
        self.assertEqual(summary['seed'], 11)
        self.assertEqual(summary['robustness']['seed'], 11)
        self.assertEqual(summary['evaluated'] + summary['failures'], 4)

    def test_robustness_without_section(self):
        code, _ = self._run('--config', self.config, '--out', self._path('out'), 'robustness')

        self.assertEqual(code, 2)

    def test_version_and_help(self):
        code, stdout = self._run('--version')
        self.assertEqual(code, 0)
        self.assertIn('hexfar', stdout)
        self.assertIn('numpy', stdout)

        code, stdout = self._run('--help')
        self.assertEqual(code, 0)
        self.assertIn('simulate', stdout)

    def test_argument_errors(self):
        cases = {
            'no command': ['--config', self.config],
            'unknown command': ['--config', self.config, 'render'],
            'missing config': ['--config', self._path('absent.json'), 'simulate'],
            'bad na list': ['--config', self.config, '--na', 'wide', 'simulate'],
        }
        for name, argv in cases.items():
            with self.subTest(name):
                code, _ = self._run('--out', self._path('out'), *argv)
                self.assertEqual(code, 2)

    def test_numeric_error(self):
        config = self._write_config('dark.json', mode={'m': 18, 'amplitude': 0.0})
        code, stdout = self._run('--config', config, '--out', self._path('out'), '--error-json', 'simulate')

        self.assertEqual(code, 3)
        error = json.loads(stdout.strip().splitlines()[-1])
        self.assertEqual(error['error'], 'UndefinedPowerError')
        self.assertEqual(error['exit_status'], 3)

    def test_error_json(self):
        code, stdout = self._run('--config', self._path('absent.json'), '--error-json', 'simulate')

        self.assertEqual(code, 2)
        error = json.loads(stdout.strip().splitlines()[-1])
        self.assertEqual(sorted(error), ['error', 'exit_status', 'message'])
        self.assertEqual(error['error'], 'ConfigError')
        self.assertIn('absent.json', error['message'])

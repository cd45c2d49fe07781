import tempfile
import unittest
import sys
from pathlib import Path

import numpy as np
from click.testing import CliRunner

sys.path.insert(0, str(Path(__file__).parent.parent))
from src.cli.commands import cli
from src.errors import SweepIoError
from src.geometry.mahler import CYLINDER_BOUND, SANTALO_CONE_BOUND
from src.models.certificate import Terminal
from src.models.polygon import UnconditionalPolygon
from src.models.sweep import SweepConfig, SweepMode
from src.reduction import reduce_to_terminal
from src.sweeps import RevolutionSweep, make_sweep, run_sweep, sample_axial_profile, sample_polygon
from src.sweeps.orchestrator import SweepOrchestrator, summary_path
from src.utils.formatters import CSV_HEADER, SweepFormatter

DATA_DIR = Path(__file__).parent.parent / 'data'


class TestSamplers(unittest.TestCase):
    """Tests for the seeded random inputs."""

    def setUp(self):
        """Set up test fixtures."""
        self.rng = np.random.default_rng(11)

    def test_two_vertices_give_diamond(self):
        """Test a chain with only the anchors is the diamond."""
        self.assertTrue(sample_polygon(self.rng, 2).is_diamond())

    def test_too_few_vertices(self):
        """Test fewer than two vertices is rejected."""
        with self.assertRaises(ValueError):
            sample_polygon(self.rng, 1)

    def test_chains_are_normalized(self):
        """Test sampled chains are anchored at (-1, 0) and (0, 1) with at most n points."""
        for n in (3, 5, 12):
            p = sample_polygon(self.rng, n)
            self.assertLessEqual(len(p.chain), n)
            self.assertAlmostEqual(p.half_width, 1.0, places=14)
            self.assertAlmostEqual(p.height, 1.0, places=14)

    def test_axial_profile(self):
        """Test sampled profiles span [0, h] and stay positive."""
        profile = sample_axial_profile(self.rng, 5, height=2.0)
        self.assertEqual(len(profile.breakpoints), 5)
        self.assertEqual(profile.breakpoints[0][0], 0.0)
        self.assertEqual(profile.breakpoints[-1][0], 2.0)
        low = min(f for _, f in profile.breakpoints)
        self.assertGreaterEqual(low, 0.05)
        self.assertLess(low, 0.5)

    def test_same_seed_same_row(self):
        """Test a row depends only on the seed and its index."""
        sweep = make_sweep(SweepMode.REVOLUTION, 8)
        self.assertEqual(sweep.process(3, 7), sweep.process(3, 7))


class MislabelledRevolutionSweep(RevolutionSweep):
    """Revolution sweep whose certificates name the wrong terminal."""

    def certify(self, polygon):
        certificate = super().certify(polygon)
        other = Terminal.BICONE if certificate.terminal == Terminal.CYLINDER else Terminal.CYLINDER
        return certificate.model_copy(update={'terminal': other})


class TestCertificateChecks(unittest.TestCase):
    """Tests for certificate verification inside the revolution sweep."""

    def setUp(self):
        """Set up test fixtures."""
        self.tmp = tempfile.TemporaryDirectory()
        config = SweepConfig(samples=1, max_vertices=6, seed=7, out_path=Path(self.tmp.name) / 'sweep.csv')
        self.orchestrator = SweepOrchestrator(config)

    def tearDown(self):
        self.tmp.cleanup()

    def test_honest_certificate(self):
        """Test a genuine certificate is verified and the slack stays product minus bound."""
        row = RevolutionSweep(6).process(0, 7)
        certificate = reduce_to_terminal(UnconditionalPolygon(chain=row.chain))
        self.assertTrue(row.verified)
        self.assertEqual(row.slack, row.product - CYLINDER_BOUND)
        self.assertAlmostEqual(row.product, certificate.initial_product, delta=1e-9 * row.product)
        self.assertEqual(self.orchestrator.summarize([row]).violations, 0)

    def test_tampered_certificate_is_a_violation(self):
        """Test a certificate failing verification counts as a violation despite positive slack."""
        row = MislabelledRevolutionSweep(6).process(0, 7)
        self.assertFalse(row.verified)
        self.assertGreaterEqual(row.slack, -1e-9)
        self.assertEqual(self.orchestrator.summarize([row]).violations, 1)


class TestSweepRuns(unittest.TestCase):
    """Tests for complete sweeps and their output files."""

    def setUp(self):
        """Set up test fixtures."""
        self.tmp = tempfile.TemporaryDirectory()
        self.out_dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def config(self, name: str, mode: SweepMode = SweepMode.REVOLUTION, samples: int = 12,
               jobs: int = 1) -> SweepConfig:
        return SweepConfig(samples=samples, max_vertices=6, seed=7, mode=mode,
                           out_path=self.out_dir / name, jobs=jobs)

    def test_identical_configs_give_identical_files(self):
        """Test two runs with the same inputs write byte-identical CSV files."""
        first = run_sweep(self.config('a.csv'))
        second = run_sweep(self.config('b.csv'))
        self.assertEqual((self.out_dir / 'a.csv').read_bytes(), (self.out_dir / 'b.csv').read_bytes())
        self.assertEqual(first, second)

    def test_parallel_matches_serial(self):
        """Test the rows do not depend on the number of workers."""
        run_sweep(self.config('serial.csv'))
        run_sweep(self.config('parallel.csv', jobs=2))
        self.assertEqual((self.out_dir / 'serial.csv').read_bytes(),
                         (self.out_dir / 'parallel.csv').read_bytes())

    def test_thousand_sample_determinism(self):
        """Test a thousand-sample run with seed 7 is reproduced byte for byte by a parallel run."""
        first = run_sweep(self.config('serial.csv', samples=1000))
        second = run_sweep(self.config('parallel.csv', samples=1000, jobs=2))
        self.assertEqual((self.out_dir / 'serial.csv').read_bytes(),
                         (self.out_dir / 'parallel.csv').read_bytes())
        self.assertEqual(first.violations, 0)
        self.assertEqual(first, second)

    def test_output_layout(self):
        """Test the header comment, the columns and the summary file."""
        summary = run_sweep(self.config('sweep.csv'))
        out = self.out_dir / 'sweep.csv'
        self.assertEqual(out.read_text(encoding='utf-8').splitlines()[0], CSV_HEADER)
        frame = SweepFormatter.read_csv(out)
        self.assertEqual(list(frame['id']), list(range(12)))
        self.assertTrue(set(frame['terminal']) <= {'Cylinder', 'Bicone'})
        self.assertTrue(summary_path(out).exists())
        self.assertEqual(summary.violations, 0)
        self.assertEqual(summary.samples, 12)

    def test_santalo_cone_first_sample(self):
        """Test the first santalo-cone sample is the cone at its best axis point."""
        summary = run_sweep(self.config('cone.csv', SweepMode.SANTALO_CONE, samples=1))
        self.assertAlmostEqual(summary.min_product, SANTALO_CONE_BOUND, delta=1e-4)
        self.assertEqual(summary.violations, 0)

    def test_psh_and_lemma_grid(self):
        """Test the parallel-sections and lemma-grid modes stay above their bounds."""
        for mode in (SweepMode.PSH, SweepMode.LEMMA_GRID):
            summary = run_sweep(self.config(f'{mode.value}.csv', mode))
            self.assertEqual(summary.violations, 0, mode.value)
            self.assertGreaterEqual(summary.min_product, summary.bound - 1e-9)

    def test_unwritable_output(self):
        """Test a file in place of the output directory raises SweepIoError."""
        blocker = self.out_dir / 'blocker'
        blocker.write_text('x', encoding='utf-8')
        orchestrator = SweepOrchestrator(self.config('blocker/sweep.csv', samples=1))
        with self.assertRaises(SweepIoError):
            orchestrator.run()


class TestCommandLine(unittest.TestCase):
    """Tests for exit codes of the command line."""

    def setUp(self):
        """Set up test fixtures."""
        self.runner = CliRunner()

    def test_golden(self):
        """Test the golden table passes."""
        result = self.runner.invoke(cli, ['golden'])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('PASS', result.output)

    def test_grid_below_minimum(self):
        """Test verify-lemma refuses grids below 50 rows."""
        result = self.runner.invoke(cli, ['verify-lemma', '--grid', '10'])
        self.assertEqual(result.exit_code, 2)

    def test_mahler_cylinder(self):
        """Test the cylinder meets its bound without a violation."""
        result = self.runner.invoke(cli, ['mahler', '--in', str(DATA_DIR / 'cylinder.json')])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('"product"', result.output)

    def test_reduce_octagon(self):
        """Test the octagon certificate verifies."""
        result = self.runner.invoke(cli, ['reduce', '--in', str(DATA_DIR / 'octagon.json')])
        self.assertEqual(result.exit_code, 0, result.output)

    def test_psh_cube(self):
        """Test the cube meets the parallel-sections bound."""
        result = self.runner.invoke(cli, ['psh', '--in', str(DATA_DIR / 'psh_cube.json')])
        self.assertEqual(result.exit_code, 0, result.output)

    def test_bad_json(self):
        """Test malformed input exits with code 2 and a one-line message."""
        with self.runner.isolated_filesystem():
            Path('bad.json').write_text('{"chain": [[-1, 0],', encoding='utf-8')
            result = self.runner.invoke(cli, ['mahler', '--in', 'bad.json'])
        self.assertEqual(result.exit_code, 2)
        self.assertIn('error:', result.output)

    def test_sweep_command(self):
        """Test a small sweep writes its files and exits cleanly."""
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(cli, ['sweep', '--samples', '5', '--seed', '3', '--jobs', '1',
                                              '--max-vertices', '5', '--out', 'out/sweep.csv'])
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertTrue(Path('out/sweep.csv').exists())
            self.assertTrue(Path('out/sweep.csv.summary.json').exists())


if __name__ == '__main__':
    unittest.main()

import os
import tempfile
import unittest
import sys
from pathlib import Path
from unittest.mock import patch

sys.path.insert(0, str(Path(__file__).parent.parent))
from src.utils.config import Config

SETTINGS = ('MAHLER_SEED', 'MAHLER_JOBS', 'MAHLER_TOLERANCE', 'MAHLER_QUAD_TOL', 'MAHLER_QUAD_MAX_DEPTH',
            'MAHLER_GOLDEN_TOL', 'MAHLER_MAX_VERTICES', 'LOG_LEVEL')


class TestConfig(unittest.TestCase):
    """Tests for environment-backed settings."""

    def setUp(self):
        """Set up test fixtures."""
        self.env = patch.dict(os.environ, {})
        self.env.start()
        for name in SETTINGS:
            os.environ.pop(name, None)
        self.tmp = tempfile.TemporaryDirectory()
        self.missing_env = str(Path(self.tmp.name) / 'none.env')

    def tearDown(self):
        self.env.stop()
        self.tmp.cleanup()

    def test_defaults(self):
        """Test the built-in defaults."""
        config = Config(self.missing_env)
        self.assertEqual(config.seed, 7)
        self.assertEqual(config.jobs, 1)
        self.assertEqual(config.tolerance, 1e-9)
        self.assertEqual(config.quad_max_depth, 40)
        self.assertEqual(config.max_vertices, 12)
        self.assertEqual(config.log_level, 'INFO')

    def test_environment_overrides(self):
        """Test values come from the environment."""
        os.environ['MAHLER_SEED'] = '42'
        os.environ['MAHLER_JOBS'] = '4'
        config = Config(self.missing_env)
        self.assertEqual(config.seed, 42)
        self.assertEqual(config.jobs, 4)

    def test_env_file(self):
        """Test a .env file fills unset values."""
        env_file = Path(self.tmp.name) / 'sweep.env'
        env_file.write_text('MAHLER_MAX_VERTICES=20\n', encoding='utf-8')
        self.assertEqual(Config(str(env_file)).max_vertices, 20)

    def test_invalid_values_warn(self):
        """Test unusable settings are logged, not raised."""
        os.environ['MAHLER_JOBS'] = '0'
        with self.assertLogs('src.utils.config', level='WARNING') as logs:
            Config(self.missing_env)
        self.assertTrue(any('MAHLER_JOBS' in line for line in logs.output))

    def test_create_example_env(self):
        """Test the example file lists the settings."""
        path = Path(self.tmp.name) / '.env.example'
        Config.create_example_env(str(path))
        content = path.read_text(encoding='utf-8')
        for name in SETTINGS:
            self.assertIn(name, content)


if __name__ == '__main__':
    unittest.main()

import json
import tempfile
import unittest
import sys
from pathlib import Path

from pydantic import ValidationError

sys.path.insert(0, str(Path(__file__).parent.parent))
from src.errors import InputFormatError
from src.models.profile import GeneratingFunction
from src.utils.loaders import load_body, load_generator, load_lemma_config, load_polygon, read_json
from src.utils.validators import ChainValidator, ProfileValidator


class TestLoaders(unittest.TestCase):
    """Tests for reading input files."""

    def setUp(self):
        """Set up test fixtures."""
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name: str, text: str) -> Path:
        path = self.dir / name
        path.write_text(text, encoding='utf-8')
        return path

    def test_syntax_error_position(self):
        """Test malformed JSON reports path, line and column."""
        path = self.write('bad.json', '{\n  "chain": [[-1, 0],\n')
        with self.assertRaises(InputFormatError) as ctx:
            read_json(path)
        message = str(ctx.exception)
        self.assertTrue(message.startswith(f"{path}:"))
        self.assertRegex(message, r':\d+:\d+: ')

    def test_missing_file(self):
        """Test an unreadable path becomes an input error."""
        with self.assertRaises(InputFormatError):
            read_json(self.dir / 'missing.json')

    def test_field_error(self):
        """Test a malformed chain entry names the failing field."""
        path = self.write('chain.json', json.dumps({'chain': [[-1, 0], [1]]}))
        with self.assertRaises(InputFormatError) as ctx:
            load_polygon(path)
        self.assertIn('field chain', str(ctx.exception))

    def test_generator_from_chain(self):
        """Test a bare chain is accepted where a generating function is expected."""
        path = self.write('square.json', json.dumps({'chain': [[-1, 0], [-1, 1], [0, 1]]}))
        f = load_generator(path)
        self.assertTrue(f.is_piecewise_linear)
        self.assertEqual(f.value(0.0), 1.0)
        self.assertEqual(f.value(1.0), 1.0)

    def test_analytic_body(self):
        """Test a named analytic profile loads as a body."""
        path = self.write('ball.json', json.dumps({'a': 1.0, 'analytic': 'unit-disk'}))
        body = load_body(path)
        self.assertFalse(body.generator.is_piecewise_linear)
        self.assertAlmostEqual(body.generator.value(0.6), 0.8, places=12)

    def test_lemma_config(self):
        """Test lemma points load with their optional fields."""
        path = self.write('lemma.json', json.dumps({'x0': -0.6, 'y0': 0.7, 't': 0.1}))
        cfg = load_lemma_config(path)
        self.assertEqual(cfg.x0, -0.6)
        self.assertIsNone(cfg.k)


class TestValidators(unittest.TestCase):
    """Tests for chain and profile validation."""

    def test_valid_chain(self):
        """Test the octagon chain passes."""
        is_valid, errors = ChainValidator.validate_chain([(-1.0, 0.0), (-1.0, 0.4), (-0.4, 1.0), (0.0, 1.0)])
        self.assertTrue(is_valid)
        self.assertEqual(errors, [])

    def test_reflex_vertex(self):
        """Test a vertex below the segment DB is rejected."""
        is_valid, errors = ChainValidator.validate_chain([(-1.0, 0.0), (-0.6, 0.2), (0.0, 1.0)])
        self.assertFalse(is_valid)
        self.assertTrue(any('convex' in e for e in errors))

    def test_missing_anchor(self):
        """Test chains must start on the negative x-axis."""
        is_valid, errors = ChainValidator.validate_chain([(-1.0, 0.5), (0.0, 1.0)])
        self.assertFalse(is_valid)
        self.assertTrue(any('chain[0]' in e for e in errors))

    def test_non_concave_profile(self):
        """Test a profile with a dip is rejected."""
        with self.assertRaises(ValidationError):
            GeneratingFunction(a=1.0, breakpoints=[(0.0, 1.0), (0.5, 0.2), (1.0, 0.8)])
        is_valid, errors = ProfileValidator.validate_breakpoints(1.0, [(0.0, 1.0), (0.5, 0.2), (1.0, 0.8)])
        self.assertFalse(is_valid)
        self.assertTrue(any('not concave' in e for e in errors))

    def test_rising_profile(self):
        """Test the even extension must not have a peak away from 0."""
        is_valid, errors = ProfileValidator.validate_breakpoints(1.0, [(0.0, 0.5), (0.5, 1.0), (1.0, 0.0)])
        self.assertFalse(is_valid)


if __name__ == '__main__':
    unittest.main()

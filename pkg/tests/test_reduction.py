import math
import unittest
import sys
from pathlib import Path

import numpy as np
from hypothesis import given, settings

sys.path.insert(0, str(Path(__file__).parent.parent))
from src.errors import NotReducible
from src.geometry.mahler import CYLINDER_BOUND
from src.models.certificate import StepKind, Terminal
from src.models.polygon import UnconditionalPolygon
from src.reduction import polar_swap, reduce_once, reduce_to_terminal, verify_certificate
from src.reduction.reducer import chain_product, slide_target
from src.sweeps.samplers import sample_polygon
from tests.strategies import polygon_strategy


class TestReduceOnce(unittest.TestCase):
    """Tests for a single elimination step."""

    def setUp(self):
        """Set up test fixtures."""
        self.triangle_top = UnconditionalPolygon(chain=[(-1.0, 0.0), (-0.5, 1.0), (0.0, 1.0)])
        self.no_top = UnconditionalPolygon(chain=[(-1.0, 0.0), (-0.8, 0.8), (0.0, 1.0)])

    def test_tie_prefers_drop(self):
        """Test equal candidate products keep the drop step."""
        (dropped, slid), step = reduce_once(self.triangle_top)
        self.assertTrue(dropped.is_diamond())
        self.assertTrue(slid.is_square())
        self.assertEqual(step.kind, StepKind.DROP_VERTEX)
        self.assertAlmostEqual(step.product_after, CYLINDER_BOUND, delta=1e-9)

    def test_slide_target_on_vertical_edge(self):
        """Test a vertical edge A3A2 slides A1 to the corner above it."""
        chain = [(-1.0, 0.0), (-1.0, 0.5), (-0.5, 1.0), (0.0, 1.0)]
        target, clamped = slide_target(chain, 1.0, 1.0)
        self.assertEqual(target, (-1.0, 1.0))
        self.assertFalse(clamped)

    def test_slide_target_general(self):
        """Test the line through A3 and A2 meets the top edge at x = -5/6."""
        chain = [(-1.0, 0.0), (-0.9, 0.6), (-0.5, 1.0), (0.0, 1.0)]
        (x, y), clamped = slide_target(chain, 1.0, 1.0)
        self.assertAlmostEqual(x, -5.0 / 6.0, places=12)
        self.assertEqual(y, 1.0)
        self.assertFalse(clamped)

    def test_slide_target_from_anchor(self):
        """Test a three-point chain slides to the corner (-a, b)."""
        target, clamped = slide_target(self.triangle_top.pairs(), 1.0, 1.0)
        self.assertEqual(target, (-1.0, 1.0))
        self.assertFalse(clamped)

    def test_horizontal_edge_below_top_vertex_is_merged(self):
        """Test a horizontal A3A2 edge on the top line is merged, so slide targets never divide by zero."""
        p = UnconditionalPolygon.from_points([(-1.0, 0.0), (-0.8, 1.0), (-0.5, 1.0), (0.0, 1.0)])
        self.assertEqual(p.pairs(), [(-1.0, 0.0), (-0.8, 1.0), (0.0, 1.0)])
        target, clamped = slide_target(p.pairs(), 1.0, 1.0)
        self.assertEqual(target, (-1.0, 1.0))
        self.assertFalse(clamped)

    def test_not_reducible(self):
        """Test chains without a top vertex and terminal chains are refused."""
        with self.assertRaises(NotReducible):
            reduce_once(self.no_top)
        with self.assertRaises(NotReducible):
            reduce_once(UnconditionalPolygon.square())

    def test_polar_swap(self):
        """Test the polar swap keeps the product and creates a top vertex."""
        step = polar_swap(self.no_top)
        self.assertEqual(step.kind, StepKind.POLAR_SWAP)
        self.assertAlmostEqual(step.product_after, step.product_before, delta=1e-9)
        expected = [(-1.0, 0.0), (-1.0, 0.25), (-0.25, 1.0), (0.0, 1.0)]
        self.assertEqual(len(step.chain_after.chain), 4)
        for (x, y), (ex, ey) in zip(step.chain_after.pairs(), expected):
            self.assertAlmostEqual(x, ex, places=12)
            self.assertAlmostEqual(y, ey, places=12)


class TestReduceToTerminal(unittest.TestCase):
    """Tests for full reductions and their certificates."""

    def setUp(self):
        """Set up test fixtures."""
        r = math.sqrt(2.0) - 1.0
        self.octagon = UnconditionalPolygon(chain=[(-1.0, 0.0), (-1.0, r), (-r, 1.0), (0.0, 1.0)])

    def test_terminal_inputs(self):
        """Test the square and the diamond need no steps."""
        square = reduce_to_terminal(UnconditionalPolygon.square())
        diamond = reduce_to_terminal(UnconditionalPolygon.diamond())
        self.assertEqual(len(square.steps), 0)
        self.assertEqual(square.terminal, Terminal.CYLINDER)
        self.assertEqual(len(diamond.steps), 0)
        self.assertEqual(diamond.terminal, Terminal.BICONE)

    def test_octagon(self):
        """Test the octagon reduces with a valid certificate."""
        certificate = reduce_to_terminal(self.octagon)
        self.assertGreater(len(certificate.steps), 0)
        self.assertTrue(verify_certificate(certificate))
        self.assertGreater(certificate.initial_product, CYLINDER_BOUND)
        self.assertAlmostEqual(certificate.min_product, CYLINDER_BOUND, delta=1e-9)

    def test_input_is_normalized(self):
        """Test a stretched chain is normalized before reduction."""
        stretched = UnconditionalPolygon(chain=[(-2.0, 0.0), (-1.6, 2.4), (0.0, 3.0)])
        certificate = reduce_to_terminal(stretched)
        self.assertAlmostEqual(certificate.initial.half_width, 1.0, places=15)
        self.assertAlmostEqual(certificate.initial.height, 1.0, places=15)
        self.assertTrue(verify_certificate(certificate))

    def test_tampered_certificate(self):
        """Test a wrong minimum product fails verification."""
        certificate = reduce_to_terminal(self.octagon)
        tampered = certificate.model_copy(update={'min_product': certificate.min_product - 0.5})
        self.assertFalse(verify_certificate(tampered))

    def test_tampered_terminal(self):
        """Test a terminal label that does not match the final chain fails verification."""
        certificate = reduce_to_terminal(self.octagon)
        other = Terminal.BICONE if certificate.terminal == Terminal.CYLINDER else Terminal.CYLINDER
        tampered = certificate.model_copy(update={'terminal': other})
        self.assertFalse(verify_certificate(tampered))

    def test_final_chain(self):
        """Test the final chain is the terminal shape, and the input itself when no step is needed."""
        certificate = reduce_to_terminal(self.octagon)
        final = certificate.final_chain
        if certificate.terminal == Terminal.CYLINDER:
            self.assertTrue(final.is_square())
        else:
            self.assertTrue(final.is_diamond())
        self.assertIs(final, certificate.steps[-1].chain_after)

        square = reduce_to_terminal(UnconditionalPolygon.square())
        self.assertEqual(square.steps, [])
        self.assertIs(square.final_chain, square.initial)

    def test_seeded_certificates(self):
        """Test a thousand seeded random chains reduce monotonically and verify."""
        for i in range(1000):
            rng = np.random.default_rng([7, i])
            n = int(rng.integers(2, 12, endpoint=True))
            certificate = reduce_to_terminal(sample_polygon(rng, n))
            self.assertTrue(verify_certificate(certificate), f"sample {i}")
            self.assertGreaterEqual(certificate.min_product, CYLINDER_BOUND - 1e-9)

    def test_certificate_dict(self):
        """Test the JSON form names the terminal and every step."""
        certificate = reduce_to_terminal(self.octagon)
        data = certificate.to_dict()
        self.assertIn(data['terminal'], ('Cylinder', 'Bicone'))
        self.assertEqual(len(data['steps']), len(certificate.steps))

    @given(polygon_strategy())
    @settings(deadline=None, max_examples=40)
    def test_random_certificates(self, p):
        """Test random chains reduce monotonically and verify."""
        certificate = reduce_to_terminal(p)
        self.assertTrue(verify_certificate(certificate))
        self.assertGreaterEqual(certificate.min_product, CYLINDER_BOUND - 1e-9)
        self.assertAlmostEqual(certificate.initial_product, chain_product(certificate.initial),
                               delta=1e-9 * certificate.initial_product)


if __name__ == '__main__':
    unittest.main()

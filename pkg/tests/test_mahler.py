import math
import unittest
import sys
from pathlib import Path

import numpy as np
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))
from src.geometry.geom2d import polar_polygon
from src.geometry.mahler import (
    BALL_PRODUCT,
    CYLINDER_BOUND,
    PSH_BOUND,
    SANTALO_CONE_BOUND,
    axial_product,
    functional_product,
    mahler_product,
    mahler_product_psh,
    santalo_axis_search,
)
from src.geometry.revolve import approximate, normalize
from src.models.body import BodyOfRevolution, ParallelSectionsBody
from src.models.polygon import UnconditionalPolygon
from src.models.profile import AxialProfile, GeneratingFunction
from src.sweeps.samplers import sample_axial_profile
from tests.strategies import polygon_strategy


class TestMahlerProduct(unittest.TestCase):
    """Tests for Mahler products of bodies of revolution."""

    def setUp(self):
        """Set up test fixtures."""
        self.constant = GeneratingFunction(a=1.0, breakpoints=[(0.0, 1.0), (1.0, 1.0)])
        self.tent = GeneratingFunction(a=1.0, breakpoints=[(0.0, 1.0), (1.0, 0.0)])

    def test_cylinder_and_bicone(self):
        """Test both equality cases reach 4 pi^2 / 3."""
        for body in (BodyOfRevolution.cylinder(), BodyOfRevolution.bicone()):
            report = mahler_product(body)
            self.assertAlmostEqual(report.product, CYLINDER_BOUND, delta=1e-9)
            self.assertAlmostEqual(report.slack, 0.0, delta=1e-9)

    def test_affine_invariance(self):
        """Test stretching the cylinder keeps its product."""
        body = BodyOfRevolution.from_polygon(UnconditionalPolygon.square(2.0, 0.5))
        self.assertAlmostEqual(mahler_product(body).product, CYLINDER_BOUND, delta=1e-9)

    @given(polygon_strategy(), st.floats(min_value=0.1, max_value=10.0), st.floats(min_value=0.1, max_value=10.0))
    @settings(deadline=None, max_examples=200)
    def test_random_affine_invariance(self, p, sx, sy):
        """Test stretched random bodies keep their product and normalization does not change it."""
        product = mahler_product(BodyOfRevolution.from_polygon(p)).product
        stretched = BodyOfRevolution.from_polygon(p.scaled(sx, sy))
        self.assertAlmostEqual(mahler_product(stretched).product, product, delta=1e-9 * product)
        normalized, _ = normalize(stretched)
        self.assertAlmostEqual(mahler_product(normalized).product, product, delta=1e-9 * product)

    @given(polygon_strategy())
    @settings(deadline=None, max_examples=30)
    def test_scale_invariance(self, p):
        """Test uniform scaling by 0.1, 3 and 10 keeps the product."""
        body = BodyOfRevolution.from_polygon(p)
        product = mahler_product(body).product
        for factor in (0.1, 3.0, 10.0):
            scaled = BodyOfRevolution(generator=body.generator.scaled(factor, factor))
            self.assertAlmostEqual(mahler_product(scaled).product, product, delta=1e-9 * product, msg=str(factor))

    def test_ball(self):
        """Test the self-dual ball gives 16 pi^2 / 9."""
        self.assertAlmostEqual(mahler_product(BodyOfRevolution.ball()).product, BALL_PRODUCT, delta=1e-6)

    def test_ball_approximation_converges(self):
        """Test polygonal approximations of the ball approach its product."""
        product = mahler_product(approximate(BodyOfRevolution.ball(), 200)).product
        self.assertAlmostEqual(product, BALL_PRODUCT, delta=0.05)

    def test_functional_equality_cases(self):
        """Test constant and tent profiles give exactly 4/3."""
        self.assertAlmostEqual(functional_product(self.constant), 4.0 / 3.0, delta=1e-12)
        self.assertAlmostEqual(functional_product(self.tent), 4.0 / 3.0, delta=1e-12)
        wide = GeneratingFunction(a=2.0, breakpoints=[(0.0, 3.0), (2.0, 3.0)])
        self.assertAlmostEqual(functional_product(wide), 4.0 / 3.0, delta=1e-12)

    def test_cube_and_octahedron(self):
        """Test parallel-sections products of the cube and the octahedron."""
        cube = ParallelSectionsBody(generator=self.constant, cross_section=UnconditionalPolygon.square())
        octahedron = ParallelSectionsBody(generator=self.tent, cross_section=UnconditionalPolygon.diamond())
        self.assertAlmostEqual(mahler_product_psh(cube).product, PSH_BOUND, delta=1e-9)
        self.assertAlmostEqual(mahler_product_psh(octahedron).product, PSH_BOUND, delta=1e-9)

    @given(polygon_strategy())
    @settings(deadline=None, max_examples=30)
    def test_bound_and_polar_symmetry(self, p):
        """Test random bodies stay above the bound and share the product with their polar."""
        product = mahler_product(BodyOfRevolution.from_polygon(p)).product
        dual = mahler_product(BodyOfRevolution.from_polygon(polar_polygon(p))).product
        self.assertGreaterEqual(product, CYLINDER_BOUND - 1e-9)
        self.assertAlmostEqual(product, dual, delta=1e-9 * product)


class TestSantaloSearch(unittest.TestCase):
    """Tests for the axis search on non-symmetric profiles."""

    def setUp(self):
        """Set up test fixtures."""
        self.cone = AxialProfile.cone()

    def test_cone_at_known_point(self):
        """Test the cone product with the origin a quarter of the height above the base."""
        self.assertAlmostEqual(axial_product(self.cone, -0.25), SANTALO_CONE_BOUND, delta=1e-9)
        self.assertAlmostEqual(axial_product(self.cone, -0.5), 16.0 * math.pi ** 2 / 9.0, delta=1e-9)

    def test_cone_search(self):
        """Test the search finds the cone minimum and the apex ratio 3/4."""
        result = santalo_axis_search(self.cone)
        self.assertAlmostEqual(result.best_product, SANTALO_CONE_BOUND, delta=1e-4)
        self.assertAlmostEqual(result.apex_ratio, 0.75, delta=1e-3)
        self.assertAlmostEqual(result.best_shift, -0.25, delta=1e-3)

    def test_reversed_cone(self):
        """Test a cone with its apex at x = 0 gives the same ratio."""
        result = santalo_axis_search(AxialProfile(h=1.0, breakpoints=[(0.0, 0.0), (1.0, 1.0)]))
        self.assertAlmostEqual(result.best_product, SANTALO_CONE_BOUND, delta=1e-4)
        self.assertAlmostEqual(result.apex_ratio, 0.75, delta=1e-3)

    def assertStationary(self, profile: AxialProfile):
        """Assert the central difference of the product vanishes at the best shift."""
        shift = santalo_axis_search(profile).best_shift
        h = 1e-5
        slope = (axial_product(profile, shift + h) - axial_product(profile, shift - h)) / (2 * h)
        self.assertLess(abs(slope), 1e-4, f"slope {slope} at shift {shift}")

    def test_best_shift_is_stationary(self):
        """Test the product is flat at the best shift for the cone, a frustum and random profiles."""
        self.assertStationary(self.cone)
        self.assertStationary(AxialProfile(h=1.0, breakpoints=[(0.0, 1.0), (1.0, 0.5)]))
        for i in range(20):
            rng = np.random.default_rng([5, i])
            self.assertStationary(sample_axial_profile(rng, int(rng.integers(2, 6, endpoint=True))))

    def test_symmetric_profile(self):
        """Test the centered cylinder is optimal at its center."""
        result = santalo_axis_search(AxialProfile(h=2.0, breakpoints=[(0.0, 1.0), (2.0, 1.0)]))
        self.assertAlmostEqual(result.best_product, CYLINDER_BOUND, delta=1e-6)
        self.assertAlmostEqual(result.best_shift, -1.0, delta=1e-3)


if __name__ == '__main__':
    unittest.main()

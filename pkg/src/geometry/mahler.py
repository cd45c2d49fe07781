"""Mahler products of revolution and parallel-sections bodies."""
import math
import logging

import numpy as np

from src.errors import DegeneratePolygon, NoInteriorBracket
from src.geometry.geom2d import area, conjugate, polar_axial, polar_polygon
from src.geometry.numerics import golden_section_minimize
from src.geometry.revolve import polar_body, square_integral, volume, volume_axial
from src.models.body import BodyOfRevolution, ParallelSectionsBody
from src.models.profile import AxialProfile, GeneratingFunction
from src.models.reports import MahlerReport, SantaloSearchResult

logger = logging.getLogger(__name__)

# Conjectured minima: cylinder and bicone, cube and octahedron, cone at its Santalo point.
CYLINDER_BOUND = 4.0 * math.pi ** 2 / 3.0
PSH_BOUND = 32.0 / 3.0
SANTALO_CONE_BOUND = 4.0 ** 4 * math.pi ** 2 / 3.0 ** 5
BALL_PRODUCT = 16.0 * math.pi ** 2 / 9.0


def mahler_product(body: BodyOfRevolution, tol: float = 1e-10, max_depth: int = 40) -> MahlerReport:
    """
    Volume of a body of revolution times the volume of its polar.

    Piecewise-linear generators use exact frustum sums on the primal and
    the polar generating domains; analytic generators integrate f^2 and
    (f*)^2 by quadrature.
    """
    f = body.generator
    if f.is_piecewise_linear:
        primal = volume(body)
        polar = volume(polar_body(body))
    else:
        primal = math.pi * square_integral(f, tol, max_depth)
        polar = math.pi * square_integral(conjugate(f), tol, max_depth)
    return MahlerReport.build(primal, polar, CYLINDER_BOUND)


def functional_product(f: GeneratingFunction, tol: float = 1e-10, max_depth: int = 40) -> float:
    """Integral of f^2 times the integral of its conjugate squared."""
    return square_integral(f, tol, max_depth) * square_integral(conjugate(f), tol, max_depth)


def mahler_product_psh(body: ParallelSectionsBody, tol: float = 1e-10, max_depth: int = 40) -> MahlerReport:
    """
    Mahler product of a parallel-sections homothety body.

    V(K) = area(C) * int f^2 and V(K*) = area(C*) * int (f*)^2, so the
    product splits into the planar product of C and the functional product.
    """
    section = body.cross_section
    primal = area(section) * square_integral(body.generator, tol, max_depth)
    polar = area(polar_polygon(section)) * square_integral(conjugate(body.generator), tol, max_depth)
    return MahlerReport.build(primal, polar, PSH_BOUND)


def axial_product(profile: AxialProfile, shift: float) -> float:
    """Mahler product with the origin placed at -shift along the profile's axis."""
    primal = volume_axial(profile.upper_chain(0.0))
    return primal * volume_axial(polar_axial(profile.upper_chain(shift)))


def santalo_axis_search(profile: AxialProfile, tol: float = 1e-10, scan: int = 1024) -> SantaloSearchResult:
    """
    Minimize the Mahler product over translations along the axis.

    A uniform pre-scan over the open interval of admissible shifts picks
    the best bracket, which golden-section search then refines.

    Args:
        profile: Concave profile on [0, h]
        tol: Final bracket width of the golden-section search
        scan: Number of pre-scan shifts

    Returns:
        SantaloSearchResult with the best shift, its product and |AO|/|AD|

    Raises:
        NoInteriorBracket: If no shift keeps the origin strictly inside
    """
    h = profile.height
    eps = 1e-6 * h
    lo, hi = -h + eps, -eps
    primal = volume_axial(profile.upper_chain(0.0))

    def product(shift: float) -> float:
        try:
            return primal * volume_axial(polar_axial(profile.upper_chain(shift)))
        except DegeneratePolygon:
            return math.inf

    shifts = np.linspace(lo, hi, scan)
    values = np.array([product(float(s)) for s in shifts])
    j = int(np.argmin(values))
    if not math.isfinite(values[j]):
        raise NoInteriorBracket(f"no shift in ({lo}, {hi}) keeps the origin interior")

    left = float(shifts[max(j - 1, 0)])
    right = float(shifts[min(j + 1, scan - 1)])
    logger.debug(f"Santalo pre-scan minimum {values[j]:.10f} at shift {shifts[j]:.6f}, bracket [{left}, {right}]")
    best_shift, best_product = golden_section_minimize(product, left, right, tol)
    if values[j] < best_product:
        best_shift, best_product = float(shifts[j]), float(values[j])

    origin = -best_shift
    apex_ratio = (h - origin) / h if profile.apex_at_end() else origin / h
    logger.info(f"Santalo search: product {best_product:.8f} at shift {best_shift:.8f}, apex ratio {apex_ratio:.6f}")
    return SantaloSearchResult(best_shift=best_shift, best_product=best_product,
                               apex_ratio=apex_ratio, bound=SANTALO_CONE_BOUND)

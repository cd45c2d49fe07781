"""Bodies of revolution about the X-axis: volumes, polars and normalization."""
import math
from typing import List, Sequence, Tuple
import logging

import numpy as np

from src.errors import AnalyticUnsupported, InvalidInterval
from src.geometry.geom2d import polar_polygon, simplify_path
from src.geometry.numerics import adaptive_simpson
from src.models.body import AffineNormalization, BodyOfRevolution
from src.models.polygon import UnconditionalPolygon
from src.models.profile import GeneratingFunction
from src.models.reports import DirectionDeviation, SliceDualityReport

logger = logging.getLogger(__name__)

Pair = Tuple[float, float]


def frustum_volume(x0: float, x1: float, r0: float, r1: float) -> float:
    """
    Volume of the solid swept by a linear profile segment.

    Args:
        x0: Left end of the segment on the axis
        x1: Right end of the segment on the axis
        r0: Radius at x0
        r1: Radius at x1

    Returns:
        (pi/3) (x1 - x0) (r0^2 + r0 r1 + r1^2)
    """
    if not x1 > x0:
        raise InvalidInterval(f"frustum needs x1 > x0, got [{x0}, {x1}]")
    return math.pi / 3.0 * (x1 - x0) * (r0 * r0 + r0 * r1 + r1 * r1)


def square_integral(f: GeneratingFunction, tol: float = 1e-10, max_depth: int = 40) -> float:
    """Integral of f^2 over [-a, a]; exact for piecewise-linear profiles."""
    if f.is_piecewise_linear:
        total = 0.0
        for (xa, fa), (xb, fb) in zip(f.breakpoints[:-1], f.breakpoints[1:]):
            total += (xb - xa) * (fa * fa + fa * fb + fb * fb) / 3.0
        return 2.0 * total
    a = f.half_width
    return adaptive_simpson(lambda x: f.value(x) ** 2, -a, a, tol=tol, max_depth=max_depth)


def volume(body: BodyOfRevolution, tol: float = 1e-10, max_depth: int = 40) -> float:
    """
    Volume of a body of revolution.

    Piecewise-linear generators give an exact frustum sum, doubled by
    evenness; analytic generators integrate pi f^2 adaptively.
    """
    f = body.generator
    if f.is_piecewise_linear:
        half = sum(frustum_volume(xa, xb, fa, fb)
                   for (xa, fa), (xb, fb) in zip(f.breakpoints[:-1], f.breakpoints[1:]))
        return 2.0 * half
    return math.pi * square_integral(f, tol / math.pi, max_depth)


def quadrature_volume(body: BodyOfRevolution, tol: float = 1e-10, max_depth: int = 40) -> float:
    """pi times the adaptive Simpson integral of f^2, split at the kinks."""
    f = body.generator
    a = f.half_width
    return math.pi * adaptive_simpson(lambda x: f.value(x) ** 2, -a, a,
                                      tol=tol / math.pi, max_depth=max_depth, breaks=f.kinks())


def volume_axial(upper: Sequence[Pair]) -> float:
    """Volume of the revolution of an X-axis-symmetric domain given by its upper chain."""
    path = simplify_path(upper)
    total = 0.0
    for (xa, ra), (xb, rb) in zip(path[:-1], path[1:]):
        if xb > xa:
            total += frustum_volume(xa, xb, ra, rb)
    return total


def polar_body(body: BodyOfRevolution) -> BodyOfRevolution:
    """
    Polar body, obtained by revolving the polar of the generating domain.

    Raises:
        AnalyticUnsupported: If the generator is not piecewise linear
    """
    if not body.generator.is_piecewise_linear:
        raise AnalyticUnsupported("polar body needs a polygonal generating domain, use conjugate()")
    return BodyOfRevolution.from_polygon(polar_polygon(body.generator.to_polygon()))


def normalize(body: BodyOfRevolution) -> Tuple[BodyOfRevolution, AffineNormalization]:
    """
    Map the body by diag(b, c, c) so that a = 1 and f(0) = 1.

    Returns:
        Tuple of (normalized body, the applied AffineNormalization)
    """
    f = body.generator
    b = 1.0 / f.half_width
    c = 1.0 / f.value(0.0)
    logger.debug(f"Normalizing with b={b:.6g}, c={c:.6g}")
    return BodyOfRevolution(generator=f.scaled(b, c)), AffineNormalization(b=b, c=c)


def normalize_polygon(p: UnconditionalPolygon) -> UnconditionalPolygon:
    """Scale the chain so that its anchors become (-1, 0) and (0, 1)."""
    return p.scaled(1.0 / p.half_width, 1.0 / p.height)


def approximate(body: BodyOfRevolution, segments: int) -> BodyOfRevolution:
    """Piecewise-linear interpolant of the generator on a uniform grid of [0, a]."""
    if segments < 1:
        raise ValueError(f"segments must be positive, got {segments}")
    f = body.generator
    xs = np.linspace(0.0, f.half_width, segments + 1)
    breakpoints = [(float(x), f.value(float(x))) for x in xs]
    return BodyOfRevolution(generator=GeneratingFunction(a=f.half_width, breakpoints=breakpoints))


def _generator_radial(g: GeneratingFunction, ax: float, r: float) -> float:
    """Radial function of the revolution of g in a direction with axial part ax >= 0 and radial part r >= 0."""
    best = g.half_width / ax if ax > 0 else math.inf
    # A concave piecewise-linear profile is the minimum of its affine pieces.
    for (xa, fa), (xb, fb) in zip(g.breakpoints[:-1], g.breakpoints[1:]):
        slope = (fb - fa) / (xb - xa)
        intercept = fa - slope * xa
        denominator = r - slope * ax
        if denominator > 0:
            best = min(best, intercept / denominator)
    return best


def _projection_support(f: GeneratingFunction, ax: float, r: float) -> float:
    return max(ax * x + r * fx for x, fx in f.breakpoints)


def _orthonormal_pair(u: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    helper = np.eye(3)[int(np.argmin(np.abs(u)))]
    e1 = np.cross(u, helper)
    e1 /= np.linalg.norm(e1)
    return e1, np.cross(u, e1)


def verify_slice_projection_duality(body: BodyOfRevolution,
                                    directions: Sequence[Sequence[float]],
                                    angles: int = 256) -> SliceDualityReport:
    """
    Compare the polar body's central slices with the polarized projections.

    For each direction u, the radial function of polarBody(body) restricted
    to the plane orthogonal to u is evaluated from the polar generator,
    and the radial function of the polar of the projection is taken as
    1 / h_body(w). Both are sampled on ``angles`` directions w of that plane.

    Args:
        body: Body with a piecewise-linear generator
        directions: Plane normals in R^3
        angles: Angular samples per plane

    Returns:
        SliceDualityReport with the largest absolute deviation
    """
    f = body.generator
    if not f.is_piecewise_linear:
        raise AnalyticUnsupported("slice duality check needs a piecewise-linear generator")
    g = polar_body(body).generator

    per_direction: List[DirectionDeviation] = []
    thetas = np.linspace(0.0, 2.0 * math.pi, angles, endpoint=False)
    for direction in directions:
        u = np.asarray(direction, dtype=float)
        norm = np.linalg.norm(u)
        if norm == 0.0:
            raise ValueError("slice direction must be nonzero")
        u = u / norm
        e1, e2 = _orthonormal_pair(u)

        worst = 0.0
        for theta in thetas:
            w = math.cos(theta) * e1 + math.sin(theta) * e2
            ax = abs(float(w[0]))
            r = math.hypot(float(w[1]), float(w[2]))
            slice_radial = _generator_radial(g, ax, r)
            projection_radial = 1.0 / _projection_support(f, ax, r)
            worst = max(worst, abs(slice_radial - projection_radial))

        per_direction.append(DirectionDeviation(direction=tuple(float(c) for c in u), max_deviation=worst))

    max_deviation = max((d.max_deviation for d in per_direction), default=0.0)
    logger.info(f"Slice/projection duality over {len(per_direction)} directions: max deviation {max_deviation:.3e}")
    return SliceDualityReport(max_deviation=max_deviation, per_direction=per_direction)

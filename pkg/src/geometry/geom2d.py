"""Planar primitives on 1-unconditional polygons and generating functions."""
import functools
import math
from typing import List, Sequence, Tuple, Union
import logging

from src.errors import DegeneratePolygon, ZeroProfile
from src.geometry.numerics import golden_section_minimize
from src.models.polygon import Point2, UnconditionalPolygon
from src.models.profile import GeneratingFunction
from src.models.reports import PolarResult2D
from src.utils.validators import EPS

logger = logging.getLogger(__name__)

Pair = Tuple[float, float]
Direction = Union[Point2, Sequence[float]]

# Support values below this are treated as an edge through the origin.
SUPPORT_FLOOR = 1e-14


def _as_pair(direction: Direction) -> Pair:
    if isinstance(direction, Point2):
        return direction.as_pair()
    return (float(direction[0]), float(direction[1]))


def simplify_path(points: Sequence[Pair], tol: float = EPS) -> List[Pair]:
    """Merge near-duplicate points and drop collinear interior points; endpoints stay."""
    merged: List[Pair] = [(float(points[0][0]), float(points[0][1]))]
    for p in points[1:]:
        if abs(p[0] - merged[-1][0]) <= tol and abs(p[1] - merged[-1][1]) <= tol:
            continue
        merged.append((float(p[0]), float(p[1])))
    last = (float(points[-1][0]), float(points[-1][1]))
    if len(merged) >= 2:
        merged[-1] = last

    i = 1
    while i < len(merged) - 1:
        (ax, ay), (bx, by), (cx, cy) = merged[i - 1], merged[i], merged[i + 1]
        if abs((bx - ax) * (cy - by) - (by - ay) * (cx - bx)) <= tol:
            del merged[i]
            i = max(1, i - 1)
        else:
            i += 1
    return merged


def dual_vertices(path: Sequence[Pair]) -> List[Pair]:
    """
    Map each edge of a clockwise boundary path to its dual vertex n/h.

    The outward normal of edge (p, q) is n = (-(q-p).y, (q-p).x) and its
    support value is h = n . p.

    Raises:
        DegeneratePolygon: If an edge passes through or behind the origin
    """
    duals = []
    for (px, py), (qx, qy) in zip(path[:-1], path[1:]):
        nx, ny = -(qy - py), qx - px
        if nx == 0.0 and ny == 0.0:
            continue
        h = nx * px + ny * py
        if h <= SUPPORT_FLOOR * math.hypot(nx, ny):
            raise DegeneratePolygon(f"edge ({px}, {py}) -> ({qx}, {qy}) does not keep the origin interior")
        duals.append((nx / h, ny / h))
    return duals


def polar_polygon(p: UnconditionalPolygon) -> UnconditionalPolygon:
    """
    Polar dual of a 1-unconditional polygon, in chain form.

    Args:
        p: Valid polygon

    Returns:
        Chain of the dual domain from (-1/a, 0) to (0, 1/b)
    """
    points = [(-1.0 / p.half_width, 0.0)]
    points.extend(dual_vertices(p.pairs()))
    points.append((0.0, 1.0 / p.height))
    return UnconditionalPolygon.from_points(points)


def polar_with_check(p: UnconditionalPolygon) -> PolarResult2D:
    """Polar together with the Hausdorff error of applying it twice."""
    dual = polar_polygon(p)
    error = hausdorff_distance(polar_polygon(dual), p)
    logger.debug(f"Polar involution error {error:.3e} for chain of {len(p.chain)} points")
    return PolarResult2D(polygon=dual, involution_error=error)


def polar_axial(upper: Sequence[Pair]) -> List[Pair]:
    """
    Polar of a domain symmetric about the X-axis only.

    Args:
        upper: Upper boundary from (xl, 0) over the top to (xr, 0), xl < 0 < xr

    Returns:
        Upper boundary of the polar domain, from (1/xl, 0) to (1/xr, 0)
    """
    path = simplify_path(upper)
    xl, xr = path[0][0], path[-1][0]
    if not (xl < 0.0 < xr):
        raise DegeneratePolygon(f"axis extent [{xl}, {xr}] does not contain the origin")
    points = [(1.0 / xl, 0.0)]
    points.extend(dual_vertices(path))
    points.append((1.0 / xr, 0.0))
    return simplify_path(points)


def full_ring(p: UnconditionalPolygon) -> List[Pair]:
    """Counter-clockwise boundary of the reflected polygon (no repeated closing point)."""
    chain = p.pairs()
    quarter1 = [(-x, y) for x, y in chain]
    quarter2 = list(reversed(chain))
    quarter3 = [(x, -y) for x, y in chain]
    quarter4 = [(-x, -y) for x, y in reversed(chain)]
    ring = quarter1 + quarter2[1:] + quarter3[1:] + quarter4[1:-1]
    return ring


def area(p: UnconditionalPolygon) -> float:
    ring = full_ring(p)
    total = 0.0
    for (x0, y0), (x1, y1) in zip(ring, ring[1:] + ring[:1]):
        total += x0 * y1 - x1 * y0
    return 0.5 * total


def _edges(p: UnconditionalPolygon):
    """Second-quadrant edges as (outward normal, support value)."""
    chain = p.pairs()
    for (px, py), (qx, qy) in zip(chain[:-1], chain[1:]):
        nx, ny = -(qy - py), qx - px
        yield (nx, ny), nx * px + ny * py


def support_value(p: UnconditionalPolygon, direction: Direction) -> float:
    """Max over the reflected vertex set of v . dir."""
    dx, dy = _as_pair(direction)
    return max(abs(dx) * (-x) + abs(dy) * y for x, y in p.pairs())


def radial_value(p: UnconditionalPolygon, direction: Direction) -> float:
    """Largest lambda >= 0 with lambda * dir inside the polygon (dir is not normalized)."""
    dx, dy = _as_pair(direction)
    if dx == 0.0 and dy == 0.0:
        raise ValueError("direction must be nonzero")
    ux, uy = -abs(dx), abs(dy)
    best = math.inf
    for (nx, ny), h in _edges(p):
        s = nx * ux + ny * uy
        if s > 0:
            best = min(best, h / s)
    return best


def contains_point(p: UnconditionalPolygon, z: Direction, tol: float = 1e-12) -> bool:
    zx, zy = _as_pair(z)
    ux, uy = -abs(zx), abs(zy)
    for (nx, ny), h in _edges(p):
        if nx * ux + ny * uy > h + tol * max(1.0, math.hypot(nx, ny)):
            return False
    return True


def contains_polygon(p: UnconditionalPolygon, q: UnconditionalPolygon, tol: float = 1e-12) -> bool:
    """True when q is a subset of p (vertex containment)."""
    return all(contains_point(p, v, tol) for v in q.pairs())


def _segment_distance(z: Pair, a: Pair, b: Pair) -> float:
    ex, ey = b[0] - a[0], b[1] - a[1]
    wx, wy = z[0] - a[0], z[1] - a[1]
    length2 = ex * ex + ey * ey
    s = 0.0 if length2 == 0.0 else min(1.0, max(0.0, (wx * ex + wy * ey) / length2))
    return math.hypot(wx - s * ex, wy - s * ey)


def _distance_to(q: UnconditionalPolygon, z: Pair) -> float:
    if contains_point(q, z, tol=0.0):
        return 0.0
    ring = full_ring(q)
    return min(_segment_distance(z, a, b) for a, b in zip(ring, ring[1:] + ring[:1]))


def hausdorff_distance(p: UnconditionalPolygon, q: UnconditionalPolygon) -> float:
    """
    Exact Hausdorff distance between two unconditional polygons.

    The distance to a convex set is convex, so each one-sided maximum is
    attained at a vertex; symmetry reduces the vertices to the chains.
    """
    forward = max(_distance_to(q, v) for v in p.pairs())
    backward = max(_distance_to(p, w) for w in q.pairs())
    return max(forward, backward)


def conjugate_value(f: GeneratingFunction, x_prime: float, tol: float = 1e-12) -> float:
    """inf over x in [-a, a] with f(x) > 0 of (1 - x' x) / f(x)."""
    def objective(x: float) -> float:
        fx = f.value(x)
        return (1.0 - x_prime * x) / fx if fx > 0 else math.inf

    _, value = golden_section_minimize(objective, -f.half_width, f.half_width, tol)
    return value


def _conjugate_eval(f: GeneratingFunction, tol: float, x_prime: float) -> float:
    if abs(x_prime) > (1.0 + EPS) / f.half_width:
        return 0.0
    return conjugate_value(f, x_prime, tol)


def conjugate(f: GeneratingFunction, tol: float = 1e-12) -> GeneratingFunction:
    """
    Generating function of the polar body.

    Piecewise-linear input goes through the polar polygon of its
    generating domain; analytic input is evaluated pointwise with a
    golden-section minimizer.

    Raises:
        ZeroProfile: If f vanishes inside (-a, a)
    """
    if f.is_piecewise_linear:
        return GeneratingFunction.from_polygon(polar_polygon(f.to_polygon()))

    a = f.half_width
    samples = [a * (-1.0 + 2.0 * j / 64) for j in range(1, 64)]
    if any(f.value(x) <= 0 for x in samples):
        raise ZeroProfile(f"profile {f.analytic!r} vanishes inside (-{a}, {a})")
    return GeneratingFunction(a=1.0 / a,
                              analytic=f"conjugate({f.analytic})",
                              evaluator=functools.partial(_conjugate_eval, f, tol))

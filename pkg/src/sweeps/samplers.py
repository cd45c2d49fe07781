"""Seeded random inputs for the sweep modes."""
import math
from typing import List, Tuple

import numpy as np

from src.geometry.revolve import normalize_polygon
from src.models.lemma import LemmaConfig
from src.models.polygon import UnconditionalPolygon
from src.models.profile import AxialProfile

Pair = Tuple[float, float]

TURN_TOL = 1e-12


def _cross(o: Pair, a: Pair, b: Pair) -> float:
    return (a[0] - o[0]) * (b[1] - a[1]) - (a[1] - o[1]) * (b[0] - a[0])


def _triangle_points(rng: np.random.Generator, count: int) -> List[Pair]:
    """Uniform points of the open triangle x in (-1, 0), y in (0, 1), y > x + 1."""
    points: List[Pair] = []
    while len(points) < count:
        batch = rng.random((2 * (count - len(points)), 2))
        for u, v in batch:
            x, y = float(u) - 1.0, float(v)
            if 0.0 < y and x < 0.0 and y > x + 1.0:
                points.append((x, y))
                if len(points) == count:
                    break
    return points


def sample_polygon(rng: np.random.Generator, n_vertices: int) -> UnconditionalPolygon:
    """
    Random normalized chain with at most n_vertices points.

    The anchors (-1, 0) and (0, 1) are joined by n_vertices - 2 points
    drawn inside the triangle above the segment between them, sorted by
    decreasing polar angle and convexified with a Graham scan around the
    origin.

    Raises:
        ValueError: If n_vertices < 2
    """
    if n_vertices < 2:
        raise ValueError(f"n_vertices must be at least 2, got {n_vertices}")

    interior = sorted(_triangle_points(rng, n_vertices - 2), key=lambda p: -math.atan2(p[1], p[0]))
    hull: List[Pair] = [(-1.0, 0.0)]
    for p in interior + [(0.0, 1.0)]:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) >= -TURN_TOL:
            hull.pop()
        hull.append(p)
    return normalize_polygon(UnconditionalPolygon.from_points(hull))


def sample_axial_profile(rng: np.random.Generator, n_breakpoints: int, height: float = 1.0) -> AxialProfile:
    """
    Random concave profile on [0, height].

    Slopes are drawn and sorted in decreasing order, segment lengths are a
    floor plus a Dirichlet share, and the profile is lifted so that its
    smaller end value lies in [0.05, 0.5).
    """
    if n_breakpoints < 2:
        raise ValueError(f"n_breakpoints must be at least 2, got {n_breakpoints}")

    segments = n_breakpoints - 1
    slopes = np.sort(rng.uniform(-2.0, 2.0, segments))[::-1]
    dx = height * (0.5 / segments + 0.5 * rng.dirichlet(np.ones(segments)))
    xs = np.concatenate(([0.0], np.cumsum(dx)))
    xs[-1] = height
    fs = np.concatenate(([0.0], np.cumsum(slopes * np.diff(xs))))
    fs += rng.uniform(0.05, 0.5) - fs.min()
    return AxialProfile(h=height, breakpoints=[(float(x), float(f)) for x, f in zip(xs, fs)])


def sample_lemma_config(rng: np.random.Generator) -> LemmaConfig:
    """Feasible point with y0 in (0.05, 0.95), x0 in [-1, y0 - 1] and t in [0, t_end]."""
    y0 = float(rng.uniform(0.05, 0.95))
    x0 = -1.0 + y0 * float(rng.random())
    cfg = LemmaConfig(x0=x0, y0=y0)
    return cfg.at(cfg.t_end * float(rng.random())).check()

"""Grid verification of the sign claims the elimination lemmas rely on."""
from typing import List, Sequence, Tuple
import logging

import numpy as np

from src.lemma.lemma_engine import (
    PI2_9,
    _f1,
    _f2,
    _g_fun,
    _h_fun,
    _i_slope,
    _j_slope,
    _l1,
    _pole,
    _slide_prime,
    _t_end,
    l1_prime_at_upper,
    l1_second_at_upper,
    region_masks,
)
from src.models.lemma import ClaimResult, SignClaimReport

logger = logging.getLogger(__name__)

MIN_GRID = 50
T_SAMPLES = 20
K_SAMPLES = 8
PERTURBATIONS = (0.0, 0.05, 0.1)
POLE_GUARD = 1e-9


def triangle_grid(grid: int, include_base: bool = False) -> Tuple[np.ndarray, np.ndarray]:
    """
    Nodes of the closed triangle {-1 <= x <= y - 1, 0 <= y <= 1}.

    Row i sits at y = i / grid and holds grid + 1 evenly spaced x values
    from -1 to y - 1. The degenerate row y = 0 is skipped unless asked for.
    """
    rows = np.arange(0 if include_base else 1, grid + 1) / grid
    cols = np.arange(grid + 1) / grid
    y = np.repeat(rows[:, None], grid + 1, axis=1)
    x = -1.0 + y * cols[None, :]
    return x, y


def _summarize(name: str, region: str, grid: int, excess: np.ndarray, mask: np.ndarray,
               points: Sequence[np.ndarray], tol: float) -> ClaimResult:
    """A node violates the claim when its excess is above tol."""
    selected = mask & np.isfinite(excess)
    evaluated = int(selected.sum())
    if evaluated == 0:
        return ClaimResult(name=name, region=region, grid=grid, evaluated=0, violations=0,
                           max_violation=0.0, argmax=None)

    masked = np.where(selected, excess, -np.inf)
    index = np.unravel_index(int(np.argmax(masked)), masked.shape)
    worst = float(masked[index])
    argmax = tuple(float(np.broadcast_to(p, masked.shape)[index]) for p in points)
    violations = int((masked > tol).sum())
    logger.debug(f"Claim {name} on {region}: {evaluated} nodes, worst excess {worst:.3e} at {argmax}")
    return ClaimResult(name=name, region=region, grid=grid, evaluated=evaluated,
                       violations=violations, max_violation=max(worst, 0.0), argmax=argmax)


def verify_sign_claims(grid: int = 100, tol: float = 1e-9) -> SignClaimReport:
    """
    Evaluate every endpoint-sign claim on its region of a triangle grid.

    Args:
        grid: Rows of the triangle grid, at least 50
        tol: Excess allowed before a node counts as a violation

    Returns:
        SignClaimReport with one ClaimResult per claim
    """
    if grid < MIN_GRID:
        raise ValueError(f"grid must be at least {MIN_GRID}, got {grid}")

    x, y = triangle_grid(grid)
    in_d1, in_d2 = region_masks(x, y)
    claims: List[ClaimResult] = []

    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        t_end = _t_end(x, y)

        # The endpoint value of F' is pi^2 G / (9 y0^2); of F'' it is (pi^2/9) H / (y0 (1 - y0)).
        slope_end = PI2_9 * _g_fun(x, y) / y ** 2
        claims.append(_summarize("endpoint-slope", "D1", grid, slope_end, in_d1, (x, y), tol))

        curvature_end = PI2_9 * _h_fun(x, y) / (y * (1.0 - y))
        claims.append(_summarize("endpoint-curvature", "D2", grid, curvature_end,
                                 in_d2 & (y < 1.0), (x, y), tol))

        fractions = np.linspace(0.0, 1.0, T_SAMPLES)
        t = t_end[..., None] * fractions
        xs, ys = x[..., None], y[..., None]
        f = _f1(xs, ys, t) * _f2(xs, ys, t)
        chord = 0.5 * (f[..., :-2] + f[..., 2:])
        concavity = (chord - f[..., 1:-1]) / np.maximum(1.0, np.abs(f[..., 1:-1]))
        claims.append(_summarize("concavity", "D2", grid, concavity,
                                 np.broadcast_to(in_d2[..., None], concavity.shape),
                                 (xs, ys, t[..., 1:-1]), tol))

        triangle = np.ones_like(x, dtype=bool)
        claims.append(_summarize("i-slope-positive", "triangle", grid, -_i_slope(x, y), triangle, (x, y), tol))

        deltas = np.asarray(PERTURBATIONS)
        v = _f1(xs, ys, 0.0) * (1.0 + deltas)
        v_polar = _f2(xs, ys, 0.0) * (1.0 - deltas)
        te = t_end[..., None]
        slide_end = _slide_prime(xs, ys, te, v, v_polar)
        usable = (np.abs(_pole(x, y, t_end)) > POLE_GUARD) & (np.abs(x) > POLE_GUARD)
        claims.append(_summarize("slide-endpoint-slope", "D1", grid, slide_end,
                                 np.broadcast_to((in_d1 & usable)[..., None], slide_end.shape),
                                 (xs, ys, np.broadcast_to(deltas, slide_end.shape)), tol))

        claims.append(_summarize("j-slope-positive", "triangle", grid, -_j_slope(xs, ys, v),
                                 np.broadcast_to((np.abs(x) > POLE_GUARD)[..., None], v.shape),
                                 (xs, ys, np.broadcast_to(deltas, v.shape)), tol))

        interior = in_d2 & (x > -1.0) & (x < 0.0)
        k_lo = ((1.0 - y) / (-x))[..., None]
        k_hi = (y / (x + 1.0))[..., None]
        k = k_lo + (k_hi - k_lo) * (np.arange(K_SAMPLES) + 0.5) / K_SAMPLES
        l1 = _l1(xs, ys, k)
        claims.append(_summarize("l1-nonpositive", "D2", grid, l1,
                                 np.broadcast_to(interior[..., None], l1.shape) & (k_lo < k_hi),
                                 (xs, ys, k), tol))
        claims.append(_summarize("l1-prime-at-upper", "D2", grid, -l1_prime_at_upper(x, y),
                                 interior, (x, y), tol))
        claims.append(_summarize("l1-second-at-upper", "D2", grid, l1_second_at_upper(x, y),
                                 interior, (x, y), tol))

    cx, cy = triangle_grid(grid, include_base=True)
    cover_d1, cover_d2 = region_masks(cx, cy)
    uncovered = np.where(cover_d1 | cover_d2, 0.0, 1.0)
    claims.append(_summarize("region-cover", "triangle", grid, uncovered,
                             np.ones_like(cx, dtype=bool), (cx, cy), tol))

    report = SignClaimReport(grid=grid, tolerance=tol, claims=claims)
    logger.info(f"Verified {len(claims)} sign claims on a {grid}x{grid} grid: "
                f"{report.total_violations} violations")
    return report

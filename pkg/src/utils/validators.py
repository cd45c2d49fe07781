import math
from typing import Callable, List, Optional, Sequence, Tuple
import logging

logger = logging.getLogger(__name__)

# Absolute tolerance shared by chain and profile checks.
EPS = 1e-12


def _cross(ax: float, ay: float, bx: float, by: float) -> float:
    return ax * by - ay * bx


class ChainValidator:
    """Validate second-quadrant vertex chains of 1-unconditional polygons."""

    @staticmethod
    def validate_chain(points: Sequence[Tuple[float, float]]) -> Tuple[bool, List[str]]:
        """
        Validate a chain running from D=(-a,0) to B=(0,b).

        Args:
            points: Chain vertices as (x, y) pairs

        Returns:
            Tuple of (is_valid, list of error messages)
        """
        errors = []

        if len(points) < 2:
            return (False, ["chain needs at least the two axis anchors"])

        for i, (x, y) in enumerate(points):
            if not (math.isfinite(x) and math.isfinite(y)):
                errors.append(f"chain[{i}] has a non-finite coordinate")
        if errors:
            return (False, errors)

        first_x, first_y = points[0]
        last_x, last_y = points[-1]
        if abs(first_y) > EPS or first_x >= 0:
            errors.append(f"chain[0] must be an axis point (-a, 0) with a > 0, got ({first_x}, {first_y})")
        if abs(last_x) > EPS or last_y <= 0:
            errors.append(f"chain[-1] must be an axis point (0, b) with b > 0, got ({last_x}, {last_y})")

        for i, (x, y) in enumerate(points[1:-1], start=1):
            if x >= 0 or y <= 0:
                errors.append(f"chain[{i}] = ({x}, {y}) is not in the open second quadrant")

        ChainValidator._check_ordering(points, errors)
        ChainValidator._check_convexity(points, errors)

        return (len(errors) == 0, errors)

    @staticmethod
    def _check_ordering(points: Sequence[Tuple[float, float]], errors: List[str]):
        """Polar angle must strictly decrease from D to B."""
        for i in range(len(points) - 1):
            (x0, y0), (x1, y1) = points[i], points[i + 1]
            if _cross(x0, y0, x1, y1) >= 0:
                errors.append(f"chain[{i}] -> chain[{i + 1}] breaks the angular ordering")

    @staticmethod
    def _check_convexity(points: Sequence[Tuple[float, float]], errors: List[str]):
        for i in range(1, len(points) - 1):
            (xa, ya), (xb, yb), (xc, yc) = points[i - 1], points[i], points[i + 1]
            turn = _cross(xb - xa, yb - ya, xc - xb, yc - yb)
            if turn >= 0:
                errors.append(f"chain[{i}] is not a strictly convex vertex (turn {turn:.3e})")

        # Reflection across the axes must not create a reflex angle at the anchors.
        if len(points) >= 3:
            a = -points[0][0]
            b = points[-1][1]
            if points[1][0] < -a - EPS:
                errors.append(f"chain[1].x = {points[1][0]} extends past the anchor x = {-a}")
            if points[-2][1] > b + EPS:
                errors.append(f"chain[-2].y = {points[-2][1]} extends past the anchor y = {b}")


class ProfileValidator:
    """Validate generating functions."""

    SAMPLE_COUNT = 65

    @staticmethod
    def validate_breakpoints(half_width: float,
                             breakpoints: Sequence[Tuple[float, float]]) -> Tuple[bool, List[str]]:
        """
        Validate a piecewise-linear profile stored on [0, a].

        Args:
            half_width: Half-width a of the support interval
            breakpoints: (x, f) pairs from x = 0 to x = a

        Returns:
            Tuple of (is_valid, list of error messages)
        """
        errors = []

        if not (math.isfinite(half_width) and half_width > 0):
            return (False, [f"half-width must be positive, got {half_width}"])
        if len(breakpoints) < 2:
            return (False, ["profile needs at least two breakpoints"])

        scale = max(1.0, half_width)
        if abs(breakpoints[0][0]) > EPS:
            errors.append(f"first breakpoint must sit at x = 0, got {breakpoints[0][0]}")
        if abs(breakpoints[-1][0] - half_width) > EPS * scale:
            errors.append(f"last breakpoint must sit at x = a = {half_width}, got {breakpoints[-1][0]}")

        for i, (x, f) in enumerate(breakpoints):
            if not (math.isfinite(x) and math.isfinite(f)):
                errors.append(f"breakpoints[{i}] has a non-finite value")
            elif f < 0:
                errors.append(f"breakpoints[{i}] has negative value {f}")
        if errors:
            return (False, errors)

        if breakpoints[0][1] <= 0:
            errors.append("f(0) must be positive")

        slopes = []
        for i in range(len(breakpoints) - 1):
            dx = breakpoints[i + 1][0] - breakpoints[i][0]
            if dx <= 0:
                errors.append(f"breakpoints[{i + 1}] does not increase in x")
                continue
            slopes.append((breakpoints[i + 1][1] - breakpoints[i][1]) / dx)

        if slopes and slopes[0] > EPS:
            errors.append(f"profile rises away from 0 (slope {slopes[0]}), even extension is not concave")
        for i in range(len(slopes) - 1):
            if slopes[i + 1] > slopes[i] + EPS * max(1.0, abs(slopes[i])):
                errors.append(f"slope increases after breakpoints[{i + 1}], profile is not concave")

        return (len(errors) == 0, errors)

    @staticmethod
    def validate_samples(half_width: float,
                         evaluator: Callable[[float], float]) -> Tuple[bool, List[str]]:
        """Chord test for analytic profiles on sampled triples."""
        errors = []
        n = ProfileValidator.SAMPLE_COUNT - 1
        xs = [half_width * (-1.0 + 2.0 * j / n) for j in range(n + 1)]
        values = [evaluator(x) for x in xs]

        if evaluator(0.0) <= 0:
            errors.append("f(0) must be positive")
        for x, v in zip(xs[1:-1], values[1:-1]):
            if not v > 0:
                errors.append(f"f({x:.6g}) = {v} vanishes inside the support")
                break
        for j in range(1, n):
            if values[j] < 0.5 * (values[j - 1] + values[j + 1]) - EPS:
                errors.append(f"chord test fails near x = {xs[j]:.6g}")
                break
        for x, v in zip(xs, values):
            if abs(v - evaluator(-x)) > EPS:
                errors.append(f"profile is not even at x = {x:.6g}")
                break

        return (len(errors) == 0, errors)

    @staticmethod
    def validate_axial(height: float,
                       breakpoints: Sequence[Tuple[float, float]]) -> Tuple[bool, List[str]]:
        """Validate a non-even concave profile on [0, h]."""
        errors = []

        if not (math.isfinite(height) and height > 0):
            return (False, [f"height must be positive, got {height}"])
        if len(breakpoints) < 2:
            return (False, ["profile needs at least two breakpoints"])
        if abs(breakpoints[0][0]) > EPS:
            errors.append("first breakpoint must sit at x = 0")
        if abs(breakpoints[-1][0] - height) > EPS * max(1.0, height):
            errors.append(f"last breakpoint must sit at x = h = {height}")
        if any(f < 0 for _, f in breakpoints):
            errors.append("profile must be nonnegative")
        if max(f for _, f in breakpoints) <= 0:
            errors.append("profile encloses no area")

        slopes = []
        for i in range(len(breakpoints) - 1):
            dx = breakpoints[i + 1][0] - breakpoints[i][0]
            if dx <= 0:
                errors.append(f"breakpoints[{i + 1}] does not increase in x")
                continue
            slopes.append((breakpoints[i + 1][1] - breakpoints[i][1]) / dx)
        for i in range(len(slopes) - 1):
            if slopes[i + 1] > slopes[i] + EPS * max(1.0, abs(slopes[i])):
                errors.append(f"slope increases after breakpoints[{i + 1}], profile is not concave")

        return (len(errors) == 0, errors)


class LemmaValidator:
    """Feasibility checks for lemma parameter points."""

    POLE_GUARD = 1e-9
    TOL = 1e-12

    @staticmethod
    def validate_config(x0: float, y0: float, t: float,
                        k: Optional[float] = None) -> Tuple[bool, List[str]]:
        """
        Check (x0, y0) lies in the closed triangle ABD and t, k in range.

        Returns:
            Tuple of (is_valid, list of error messages)
        """
        tol = LemmaValidator.TOL
        if not all(math.isfinite(v) for v in (x0, y0, t)):
            return (False, ["parameters must be finite"])

        errors = LemmaValidator.triangle_errors(x0, y0)
        if y0 <= 0:
            errors.append(f"y0 = {y0} must be positive")
        if errors:
            return (False, errors)

        t_max = (-x0 + y0 - 1.0) / y0
        if k is not None:
            if not math.isfinite(k) or k <= 0:
                errors.append(f"k = {k} must be positive")
                return (False, errors)
            k_lo = (1.0 - y0) / (-x0) if x0 < 0 else math.inf
            k_hi = y0 / (x0 + 1.0) if x0 > -1.0 else math.inf
            if not (k_lo < k < k_hi):
                errors.append(f"k = {k} outside ({k_lo}, {k_hi})")
            else:
                t_max = (-x0 * k + y0 - 1.0) / k

        if t < -tol or t > t_max + tol:
            errors.append(f"t = {t} outside [0, {t_max}]")
        if abs(t * y0 + x0) <= LemmaValidator.POLE_GUARD:
            errors.append(f"t*y0 + x0 = {t * y0 + x0} too close to the pole")

        return (len(errors) == 0, errors)

    @staticmethod
    def triangle_errors(x0: float, y0: float) -> List[str]:
        """Membership in the closed triangle {-1 <= x <= y-1, 0 <= y <= 1}."""
        tol = LemmaValidator.TOL
        errors = []
        if y0 < -tol or y0 > 1.0 + tol:
            errors.append(f"y0 = {y0} outside [0, 1]")
        if x0 < -1.0 - tol:
            errors.append(f"x0 = {x0} left of the edge x = -1")
        if x0 > y0 - 1.0 + tol:
            errors.append(f"x0 = {x0} right of the edge x = y0 - 1")
        return errors

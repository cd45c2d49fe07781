"""Equality cases of the Mahler bounds, checked against their closed forms."""
from typing import Callable, List, Tuple
import logging

from src.geometry.mahler import (
    BALL_PRODUCT,
    CYLINDER_BOUND,
    PSH_BOUND,
    SANTALO_CONE_BOUND,
    functional_product,
    mahler_product,
    mahler_product_psh,
    santalo_axis_search,
)
from src.models.body import BodyOfRevolution, ParallelSectionsBody
from src.models.polygon import UnconditionalPolygon
from src.models.profile import AxialProfile, GeneratingFunction
from src.models.reports import GoldenItem, GoldenReport

logger = logging.getLogger(__name__)

FUNCTIONAL_BOUND = 4.0 / 3.0
CONE_APEX_RATIO = 0.75


def _constant() -> GeneratingFunction:
    return GeneratingFunction(a=1.0, breakpoints=[(0.0, 1.0), (1.0, 1.0)])


def _tent() -> GeneratingFunction:
    return GeneratingFunction(a=1.0, breakpoints=[(0.0, 1.0), (1.0, 0.0)])


def _item(name: str, expected: float, actual: float, tolerance: float) -> GoldenItem:
    error = abs(actual - expected)
    return GoldenItem(name=name, expected=expected, actual=actual, abs_error=error,
                      tolerance=tolerance, passed=error < tolerance)


def golden_check() -> GoldenReport:
    """
    Evaluate every equality case and compare with its constant.

    Returns:
        GoldenReport with one pass/fail item per constant
    """
    cone = santalo_axis_search(AxialProfile.cone())
    checks: List[Tuple[str, float, Callable[[], float], float]] = [
        ("cylinder", CYLINDER_BOUND, lambda: mahler_product(BodyOfRevolution.cylinder()).product, 1e-9),
        ("bicone", CYLINDER_BOUND, lambda: mahler_product(BodyOfRevolution.bicone()).product, 1e-9),
        ("ball", BALL_PRODUCT, lambda: mahler_product(BodyOfRevolution.ball(), tol=1e-9).product, 1e-6),
        ("cone", SANTALO_CONE_BOUND, lambda: cone.best_product, 1e-4),
        ("cone apex ratio", CONE_APEX_RATIO, lambda: cone.apex_ratio, 1e-3),
        ("cube", PSH_BOUND, lambda: mahler_product_psh(ParallelSectionsBody(
            generator=_constant(), cross_section=UnconditionalPolygon.square())).product, 1e-9),
        ("octahedron", PSH_BOUND, lambda: mahler_product_psh(ParallelSectionsBody(
            generator=_tent(), cross_section=UnconditionalPolygon.diamond())).product, 1e-9),
        ("functional constant", FUNCTIONAL_BOUND, lambda: functional_product(_constant()), 1e-12),
        ("functional bicone", FUNCTIONAL_BOUND, lambda: functional_product(_tent()), 1e-12),
    ]

    items = [_item(name, expected, compute(), tolerance) for name, expected, compute, tolerance in checks]
    report = GoldenReport(items=items)
    for item in items:
        if not item.passed:
            logger.warning(f"Golden item {item.name}: |{item.actual} - {item.expected}| = {item.abs_error:.3e}")
    logger.info(f"Golden check: {sum(i.passed for i in items)}/{len(items)} items passed")
    return report

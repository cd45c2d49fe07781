"""
Vertex elimination down to the cylinder or the bicone.

A chain is in the slide shape when its last interior vertex A1 sits on the
top edge y = b. Then A1 is either dropped or slid to C, the point where the
line A2A3 meets the top edge, whichever lowers the Mahler product more.
A chain whose top vertex is B itself is replaced by its polar, which has
the same product and the slide shape.
"""
import math
from typing import List, Tuple
import logging

from src.errors import NonTerminating, NotReducible
from src.geometry.geom2d import full_ring, polar_polygon
from src.geometry.mahler import CYLINDER_BOUND, mahler_product
from src.geometry.revolve import normalize_polygon
from src.models.body import BodyOfRevolution
from src.models.certificate import ReductionCertificate, ReductionStep, StepKind, Terminal
from src.models.polygon import UnconditionalPolygon

logger = logging.getLogger(__name__)

TOP_TOL = 1e-10
TIE_TOL = 1e-12
TERMINAL_TOL = 1e-6

Pair = Tuple[float, float]


def chain_product(p: UnconditionalPolygon) -> float:
    """Mahler product of the body generated by the polygon."""
    return mahler_product(BodyOfRevolution.from_polygon(p)).product


def terminal_of(p: UnconditionalPolygon, tol: float = 1e-9):
    if p.is_diamond():
        return Terminal.BICONE
    if p.is_square(tol):
        return Terminal.CYLINDER
    return None


def has_top_vertex(p: UnconditionalPolygon) -> bool:
    """True when the last interior vertex lies on the top edge y = b."""
    return len(p.chain) >= 3 and p.chain[-2].y >= p.height - TOP_TOL


def slide_target(chain: List[Pair], a: float, b: float) -> Tuple[Pair, bool]:
    """
    Point C where line A2A3 meets y = b, with a flag set when C had to be clamped.

    When A2 is the anchor D itself the target is the corner (-a, b).
    """
    if len(chain) == 3:
        return (-a, b), False

    (x2, y2), (x3, y3) = chain[-3], chain[-4]
    # y strictly increases from A3 to A2 on a canonical chain.
    if abs(x2 - x3) <= TIE_TOL:
        cx = x2
    else:
        cx = x2 + (b - y2) * (x2 - x3) / (y2 - y3)

    clamped = not (-a <= cx <= 0.0)
    if clamped:
        cx = min(0.0, max(-a, cx))
    return (cx, b), clamped


def reduce_once(p: UnconditionalPolygon) -> Tuple[Tuple[UnconditionalPolygon, UnconditionalPolygon], ReductionStep]:
    """
    Build both candidates of one elimination step and keep the cheaper one.

    Args:
        p: Chain whose vertex before B lies on the top edge

    Returns:
        ((dropped, slid), chosen step)

    Raises:
        NotReducible: If p is terminal or lacks a vertex on the top edge
    """
    if terminal_of(p) is not None or not has_top_vertex(p):
        raise NotReducible(f"chain {p.to_dict()['chain']} has no vertex on the open top edge")

    chain = p.pairs()
    a, b = p.half_width, p.height
    before = chain_product(p)

    dropped = UnconditionalPolygon.from_points(chain[:-2] + chain[-1:])
    target, clamped = slide_target(chain, a, b)
    if clamped:
        logger.warning(f"Slide target clamped to {target} for chain {chain}")
    # A2 lies on segment A3C and is dropped with A1, unless A2 is the anchor D.
    kept = chain[:-2] if len(chain) == 3 else chain[:-3]
    slid = UnconditionalPolygon.from_points(kept + [target] + chain[-1:])

    drop_product = chain_product(dropped)
    slide_product = chain_product(slid)
    if drop_product <= slide_product + TIE_TOL:
        step = ReductionStep(kind=StepKind.DROP_VERTEX, chain_before=p, chain_after=dropped,
                             product_before=before, product_after=drop_product)
    else:
        step = ReductionStep(kind=StepKind.SLIDE_TO_C, chain_before=p, chain_after=slid,
                             product_before=before, product_after=slide_product, clamped=clamped)

    logger.debug(f"{step.kind.value}: {before:.12f} -> {step.product_after:.12f} "
                 f"(drop {drop_product:.12f}, slide {slide_product:.12f})")
    return (dropped, slid), step


def polar_swap(p: UnconditionalPolygon) -> ReductionStep:
    before = chain_product(p)
    swapped = normalize_polygon(polar_polygon(p))
    step = ReductionStep(kind=StepKind.POLAR_SWAP, chain_before=p, chain_after=swapped,
                         product_before=before, product_after=chain_product(swapped))
    logger.debug(f"PolarSwap: {before:.12f} -> {step.product_after:.12f}")
    return step


def reduce_to_terminal(p: UnconditionalPolygon) -> ReductionCertificate:
    """
    Reduce a polygon to the square or the diamond with non-increasing products.

    The input is normalized first. Drop and slide steps lower the vertex
    count of the full polygon and polar swaps keep it, so twice that count
    plus four bounds the number of steps.

    Raises:
        NonTerminating: If the step budget runs out
    """
    current = normalize_polygon(p)
    initial = current
    initial_product = chain_product(current)
    budget = 2 * len(full_ring(current)) + 4
    steps: List[ReductionStep] = []

    terminal = terminal_of(current)
    while terminal is None:
        if len(steps) >= budget:
            logger.error(f"Reduction of {initial.to_dict()['chain']} exceeded {budget} steps")
            raise NonTerminating(f"reduction did not terminate within {budget} steps")
        if has_top_vertex(current):
            _, step = reduce_once(current)
        else:
            step = polar_swap(current)
        steps.append(step)
        current = step.chain_after
        terminal = terminal_of(current)

    products = [initial_product] + [s.product_after for s in steps]
    certificate = ReductionCertificate(initial=initial, initial_product=initial_product, steps=steps,
                                       terminal=terminal, min_product=min(products))
    logger.info(f"Reduced chain of {len(initial.chain)} points in {len(steps)} steps to {terminal.value}, "
                f"min product {certificate.min_product:.12f}")
    return certificate


def verify_certificate(cert: ReductionCertificate, tol: float = 1e-9) -> bool:
    """
    Recompute every product of a certificate and re-check its claims.

    Checks recorded products, step continuity, monotone descent, product
    equality across polar swaps, the terminal shape and product, and the
    lower bound.
    """
    def close(x: float, y: float) -> bool:
        return abs(x - y) <= tol * max(1.0, abs(y))

    problems = []
    previous_chain = cert.initial
    previous_product = chain_product(cert.initial)
    if not close(cert.initial_product, previous_product):
        problems.append("initial product does not match its chain")

    products = [previous_product]
    for i, step in enumerate(cert.steps):
        if not step.chain_before.matches(previous_chain, tol):
            problems.append(f"step {i} does not start where step {i - 1} ended")
        before = chain_product(step.chain_before)
        after = chain_product(step.chain_after)
        if not (close(step.product_before, before) and close(step.product_after, after)):
            problems.append(f"step {i} records products that do not match its chains")
        if after > before + tol:
            problems.append(f"step {i} ({step.kind.value}) increases the product")
        if step.kind == StepKind.POLAR_SWAP and not close(after, before):
            problems.append(f"step {i} polar swap changes the product")
        previous_chain = step.chain_after
        products.append(after)

    if terminal_of(cert.final_chain) != cert.terminal:
        problems.append(f"final chain is not a {cert.terminal.value} chain")
    if abs(products[-1] - CYLINDER_BOUND) > TERMINAL_TOL:
        problems.append(f"terminal product {products[-1]} differs from {CYLINDER_BOUND}")
    if not close(cert.min_product, min(products)):
        problems.append("minProduct does not match the recomputed products")
    if min(products) < CYLINDER_BOUND - tol:
        problems.append(f"product {min(products)} falls below the bound {CYLINDER_BOUND}")
    if any(not math.isfinite(x) for x in products):
        problems.append("non-finite product")

    for problem in problems:
        logger.warning(f"Certificate check failed: {problem}")
    return not problems

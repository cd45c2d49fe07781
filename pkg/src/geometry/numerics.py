import math
from typing import Callable, Optional, Sequence, Tuple
import logging

from src.errors import InvalidInterval

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQUARED = (3 - math.sqrt(5)) / 2


def golden_section_search(func: Callable[[float], float], a: float, b: float,
                          tol: float = 1e-12) -> Tuple[float, float]:
    """
    Shrink [a, b] around the minimum of a unimodal function.

    The interior evaluation is reused each iteration, so every step costs
    one call of ``func``.

    Args:
        func: Unimodal function on [a, b]
        a: Left end of the bracket
        b: Right end of the bracket
        tol: Final bracket width

    Returns:
        Bracket (c, d) with d - c <= tol containing the minimizer
    """
    (a, b) = (min(a, b), max(a, b))
    h = b - a
    if h <= tol:
        return a, b

    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARED * h
    d = a + INV_PHI * h
    yc = func(c)
    yd = func(d)

    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARED * h
            yc = func(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = func(d)

    if yc < yd:
        return a, d
    return c, b


def golden_section_minimize(func: Callable[[float], float], a: float, b: float,
                            tol: float = 1e-12) -> Tuple[float, float]:
    """Return (argmin, min) for a unimodal function on [a, b]."""
    lo, hi = golden_section_search(func, a, b, tol)
    x = 0.5 * (lo + hi)
    return x, func(x)


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h * (fa + 4.0 * fm + fb) / 6.0


def _adaptive(func, a, fa, m, fm, b, fb, whole, tol, depth, max_depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = func(lm)
    frm = func(rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    delta = left + right - whole
    if depth >= max_depth or abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    return (_adaptive(func, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1, max_depth)
            + _adaptive(func, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1, max_depth))


def adaptive_simpson(func: Callable[[float], float], a: float, b: float,
                     tol: float = 1e-10, max_depth: int = 40,
                     breaks: Optional[Sequence[float]] = None) -> float:
    """
    Integrate func over [a, b] by Simpson's rule with interval bisection.

    Args:
        func: Integrand
        a: Lower limit
        b: Upper limit
        tol: Absolute tolerance for the whole integral
        max_depth: Bisection depth limit per sub-interval
        breaks: Known kinks of the integrand; each piece is integrated separately

    Returns:
        Approximate integral
    """
    if b <= a:
        raise InvalidInterval(f"integration interval [{a}, {b}] is empty")

    nodes = [a]
    if breaks:
        nodes.extend(x for x in sorted(breaks) if a < x < b)
    nodes.append(b)

    total = 0.0
    piece_tol = tol / (len(nodes) - 1)
    for lo, hi in zip(nodes[:-1], nodes[1:]):
        mid = 0.5 * (lo + hi)
        flo, fmid, fhi = func(lo), func(mid), func(hi)
        whole = _simpson(flo, fmid, fhi, hi - lo)
        total += _adaptive(func, lo, flo, mid, fmid, hi, fhi, whole, piece_tol, 0, max_depth)
    return total

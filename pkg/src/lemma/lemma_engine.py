"""
Closed forms behind the two vertex-elimination lemmas.

The polygon under study has the second-quadrant chain D=(-1,0), A2=(x0,y0),
A1=(-t,1), B=(0,1). F1 and F2 are half the volumes of the body it generates
and of the polar body; F = F1 F2 is a quarter of the Mahler product. The
sliding family replaces the fixed part of the polygon by
arbitrary half-volumes V and V0 and tracks A1 up to the line A2A3 of slope k.

Private helpers take plain floats or numpy arrays so the sign-claim grids
can evaluate them in bulk; public functions take a validated LemmaConfig.
"""
import math
from typing import Optional, Tuple
import logging

import numpy as np

from src.errors import OutOfRegion, OutsideTriangle
from src.geometry.geom2d import polar_polygon
from src.geometry.revolve import volume
from src.models.body import BodyOfRevolution
from src.models.lemma import CoefficientBundle, LemmaConfig, RegionTag
from src.models.polygon import UnconditionalPolygon
from src.utils.validators import LemmaValidator

logger = logging.getLogger(__name__)

PI3 = math.pi / 3.0
PI2_9 = math.pi ** 2 / 9.0
# Split of the first region; root of y^2 + y - 1.
REGION_SPLIT = (math.sqrt(5.0) - 1.0) / 2.0


def _pole(x0, y0, t):
    return t * y0 + x0


# Fixed-polygon family

def _deltas(x0, y0):
    d1 = y0 ** 3 * (x0 ** 2 + 3 * x0 + 3)
    d2 = y0 ** 2 * (3 * x0 ** 3 + 9 * x0 ** 2 + 9 * x0 + y0 ** 3 - 3 * y0 + 2)
    d3 = 3 * y0 * (x0 ** 4 + 3 * x0 ** 3 + 3 * x0 ** 2 + x0 * (y0 ** 3 - y0 ** 2 - y0 + 1))
    d4 = x0 ** 2 * (x0 ** 3 + 3 * x0 ** 2 + 3 * x0 + 2 * y0 ** 3 - 3 * y0 ** 2 + 1)
    return d1, d2, d3, d4


def _lambdas(x0, y0):
    c = -y0 ** 2 - y0 + 2
    l1 = y0 ** 4 * c * (x0 ** 2 + 3 * x0 + 3)
    l2 = y0 ** 3 * c * (4 * x0 ** 3 + 12 * x0 ** 2 + 12 * x0)
    l3 = y0 ** 2 * (c * (6 * x0 ** 4 + 18 * x0 ** 3 + 18 * x0 ** 2)
                    + x0 * (y0 ** 5 - 2 * y0 ** 4 + 8 * y0 ** 2 - 13 * y0 + 6)
                    + (-y0 ** 6 + 3 * y0 ** 4 - 2 * y0 ** 3))
    l4 = y0 * (c * (4 * x0 ** 5 + 12 * x0 ** 4 + 12 * x0 ** 3)
               + x0 ** 2 * (2 * y0 ** 5 - 4 * y0 ** 4 + 4 * y0 ** 3 + 4 * y0 ** 2 - 14 * y0 + 8)
               + x0 * (-4 * y0 ** 6 + 6 * y0 ** 5 - 2 * y0 ** 3))
    l5 = (c * (x0 ** 6 + 3 * x0 ** 5 + 3 * x0 ** 4)
          + x0 ** 3 * (y0 ** 5 - 2 * y0 ** 4 + 4 * y0 ** 3 - 4 * y0 ** 2 - y0 + 2)
          + x0 ** 2 * (-3 * y0 ** 6 + 6 * y0 ** 5 - 3 * y0 ** 4))
    return l1, l2, l3, l4, l5


def _gammas(x0, y0):
    g1 = (-2 * x0 * y0 ** 3 * (y0 ** 5 - 2 * y0 ** 4 + 8 * y0 ** 2 - 13 * y0 + 6)
          - 2 * y0 ** 6 * (-y0 ** 3 + 3 * y0 - 2))
    g2 = (x0 ** 2 * y0 ** 2 * (-4 * y0 ** 5 + 8 * y0 ** 4 - 12 * y0 ** 3 + 4 * y0 ** 2 + 16 * y0 - 12)
          + x0 * y0 ** 5 * (10 * y0 ** 3 - 18 * y0 ** 2 + 6 * y0 + 2))
    g3 = (x0 ** 3 * y0 ** 2 * (-2 * y0 ** 4 + 4 * y0 ** 3 - 12 * y0 ** 2 + 20 * y0 - 10)
          + x0 ** 2 * y0 ** 4 * (8 * y0 ** 3 - 18 * y0 ** 2 + 12 * y0 - 2))
    return g1, g2, g3


def _f1(x0, y0, t):
    return PI3 * (-y0 ** 2 - y0 + 2) * t + PI3 * (y0 ** 2 - x0 * y0 - x0)


def _f1_slope(y0):
    return PI3 * (-y0 ** 2 - y0 + 2)


def _f2(x0, y0, t):
    d1, d2, d3, d4 = _deltas(x0, y0)
    u = _pole(x0, y0, t)
    return PI3 * (((d1 * t + d2) * t + d3) * t + d4) / (y0 ** 2 * u ** 3)


def _f2_prime(x0, y0, t):
    u = _pole(x0, y0, t)
    quadratic = -y0 * (y0 + 2) * t ** 2 - 2 * x0 * (2 * y0 + 1) * t - 3 * x0 ** 2
    return PI3 * (y0 - 1) ** 2 * quadratic / u ** 4


def _f_prime(x0, y0, t):
    q = x0 ** 2 + 3 * x0 + 3
    cubic = (q * y0 ** 3 * t ** 3
             + 3 * x0 * q * y0 ** 2 * t ** 2
             + (3 * x0 ** 4 + 9 * x0 ** 3 + 9 * x0 ** 2 + x0 * (-y0 ** 3 + 3 * y0 ** 2 - 5 * y0 + 3)
                + y0 ** 3 * (y0 - 1)) * y0 * t
             + x0 ** 5 + 3 * x0 ** 4 + 3 * x0 ** 3
             + x0 ** 2 * (-y0 ** 4 + y0 ** 3 - 3 * y0 ** 2 + y0 + 2) / (y0 + 2)
             + x0 * (3 * y0 ** 5 - 3 * y0 ** 4) / (y0 + 2))
    u = _pole(x0, y0, t)
    return PI2_9 * (-y0 ** 2 - y0 + 2) * cubic / (y0 ** 2 * u ** 3)


def _i_slope(x0, y0):
    return -2 * x0 * (y0 + 2) * (y0 ** 2 - 2 * y0 + 3) + 2 * y0 ** 3 * (y0 + 2)


def _i_fun(x0, y0, t):
    return _i_slope(x0, y0) * t + x0 ** 2 * (-2 * y0 ** 2 - 10) + x0 * y0 ** 2 * (8 * y0 - 2)


def _f_second(x0, y0, t):
    u = _pole(x0, y0, t)
    return PI2_9 * (y0 - 1) ** 2 / u ** 4 * _i_fun(x0, y0, t)


def _g_fun(x0, y0):
    return (x0 ** 2 * (2 - y0) * (y0 + 3)
            - x0 * (y0 ** 3 + 3 * y0 ** 2 + 4 * y0 - 12)
            - (y0 + 2) * (y0 ** 3 + 3 * y0 - 3))


def _h_fun(x0, y0):
    return 12 * x0 ** 2 - x0 * (4 * y0 ** 3 + 2 * y0 - 12) - 2 * y0 ** 3 * (y0 + 2)


def _t_end(x0, y0):
    return (-x0 + y0 - 1) / y0


def f1(cfg: LemmaConfig) -> float:
    """Half the volume of the body generated by conv{O, D, A2, A1, B}."""
    cfg.check()
    return _f1(cfg.x0, cfg.y0, cfg.t)


def f1_frustums(cfg: LemmaConfig) -> float:
    """F1 as the sum of the three frustums D-A2, A2-A1 and A1-B."""
    cfg.check()
    x0, y0, t = cfg.x0, cfg.y0, cfg.t
    return PI3 * ((x0 + 1) * y0 ** 2 + (-t - x0) * (y0 ** 2 + y0 + 1) + 3 * t)


def f2(cfg: LemmaConfig) -> float:
    """Half the volume of the polar body, via the Delta coefficients."""
    cfg.check()
    return _f2(cfg.x0, cfg.y0, cfg.t)


def f2_geometric(cfg: LemmaConfig) -> float:
    """
    F2 from the polar vertices M and E.

    M = ((1 - y0)/u, (x0 + t)/u) is dual to edge A2A1 and E = (-1, (x0+1)/y0)
    is dual to edge DA2, with u = t y0 + x0.
    """
    cfg.check()
    x0, y0, t = cfg.x0, cfg.y0, cfg.t
    u = _pole(x0, y0, t)
    xm, ym = (1 - y0) / u, (x0 + t) / u
    ye = (x0 + 1) / y0
    return PI3 * ((xm + 1) * (ye ** 2 + ye * ym + ym ** 2) + (-xm) * (ym ** 2 + ym + 1))


def f_product(cfg: LemmaConfig) -> float:
    cfg.check()
    return _f1(cfg.x0, cfg.y0, cfg.t) * _f2(cfg.x0, cfg.y0, cfg.t)


def f_prime(cfg: LemmaConfig) -> float:
    """dF/dt in factored form."""
    cfg.check()
    return _f_prime(cfg.x0, cfg.y0, cfg.t)


def f_prime_lambda(cfg: LemmaConfig) -> float:
    """dF/dt as a quartic in t over y0^2 u^4."""
    cfg.check()
    x0, y0, t = cfg.x0, cfg.y0, cfg.t
    l1, l2, l3, l4, l5 = _lambdas(x0, y0)
    u = _pole(x0, y0, t)
    return PI2_9 * ((((l1 * t + l2) * t + l3) * t + l4) * t + l5) / (y0 ** 2 * u ** 4)


def f_prime_chain(cfg: LemmaConfig) -> float:
    """Product rule F1' F2 + F1 F2'."""
    cfg.check()
    x0, y0, t = cfg.x0, cfg.y0, cfg.t
    return _f1_slope(y0) * _f2(x0, y0, t) + _f1(x0, y0, t) * _f2_prime(x0, y0, t)


def f_second(cfg: LemmaConfig) -> float:
    """d2F/dt2 = (pi^2/9) (y0 - 1)^2 I(t) / u^4."""
    cfg.check()
    return _f_second(cfg.x0, cfg.y0, cfg.t)


def f_second_gamma(cfg: LemmaConfig) -> float:
    cfg.check()
    x0, y0, t = cfg.x0, cfg.y0, cfg.t
    g1, g2, g3 = _gammas(x0, y0)
    u = _pole(x0, y0, t)
    return PI2_9 * ((g1 * t + g2) * t + g3) / (y0 ** 2 * u ** 5)


def g_fun(x0: float, y0: float) -> float:
    """Quadratic in x0 with F'(t_end) = (pi^2 / (9 y0^2)) G."""
    return _g_fun(x0, y0)


def h_fun(x0: float, y0: float) -> float:
    """Quadratic in x0 with F''(t_end) = (pi^2/9) H / (y0 (1 - y0))."""
    return _h_fun(x0, y0)


def i_fun(cfg: LemmaConfig) -> float:
    cfg.check()
    return _i_fun(cfg.x0, cfg.y0, cfg.t)


def i_slope(x0: float, y0: float) -> float:
    return _i_slope(x0, y0)


def region_curve(y: float) -> float:
    """Boundary x(y) between the two regions below the split height."""
    return (y ** 3 + 2 * y ** 2 + 3 * y - 6) / ((2 - y) * (y + 3))


def h_on_curve(y: float) -> float:
    """H restricted to the region curve, as a rational function of y."""
    numerator = (2 * y ** 8 + 4 * y ** 7 + 24 * y ** 6 + 50 * y ** 5
                 - 38 * y ** 4 - 18 * y ** 3 - 48 * y ** 2 - 72 * y)
    return numerator / ((2 - y) ** 2 * (y + 3) ** 2)


# Sliding family

def _phis(x0, y0, v, v_polar):
    p1 = y0 * (-PI3 * (1 - y0) ** 2 * (2 * y0 + 1) / x0 + v_polar * y0 ** 2)
    p2 = -math.pi * (1 - y0) ** 2 * (2 * y0 + 1) + 3 * v_polar * x0 * y0 ** 2
    p3 = -2 * math.pi * (1 - y0) ** 2 * x0 + 3 * v_polar * x0 ** 2 * y0 + (y0 - 1) * v
    p4 = v_polar * x0 ** 3 - 3 * x0 * (1 - y0) * v / (y0 + 2)
    return p1, p2, p3, p4


def _thetas(x0, y0):
    th1 = -PI3 * x0 * (x0 + 1) ** 3 * (y0 - 1) ** 2
    th2 = PI3 * (x0 + 1) ** 2 * y0 * (y0 - 1) * (4 * x0 * y0 - x0 + y0 + 2)
    th3 = PI3 * (y0 - 1) * (-5 * x0 ** 2 * y0 ** 3 - 9 * x0 * y0 ** 3 - 3 * x0 ** 2 * y0 ** 2
                            - 9 * x0 * y0 ** 2 - x0 ** 2 - 3 * y0 ** 3 - 6 * y0 ** 2)
    th4 = PI3 * (y0 - 1) * (y0 + 2) * (2 * x0 * y0 ** 3 + 3 * y0 ** 3 - x0 * y0 ** 2 + 2 * x0 * y0 - 3 * x0)
    return th1, th2, th3, th4


def _upsilons(x0, y0, k):
    m = x0 * k - y0
    u1 = (1 - y0) * (y0 + 2)
    u2 = k ** 2 * (-x0 * k + y0 + 2) / m ** 3
    bracket = (k ** 3 * x0 ** 3 * (y0 - 1) * (-2 * y0 + 3)
               + 3 * k ** 2 * x0 ** 2 * y0 * (y0 - 1) * (2 * y0 - 3)
               + 3 * k * x0 * (1 - y0) ** 3 * (2 * y0 + 1)
               + y0 * (2 * y0 + 1) * (y0 - 1) ** 3)
    u3 = -PI3 * (y0 + 2) / (x0 * m ** 3) * bracket
    return u1, u2, u3


def _slide(x0, y0, t, v, v_polar):
    u = _pole(x0, y0, t)
    s = (t + x0) / u
    return (v + PI3 * (2 - y0 - y0 ** 2) * t) * (v_polar - PI3 * ((y0 - 1) / x0) * (2 - s - s ** 2))


def _slide_prime(x0, y0, t, v, v_polar):
    p1, p2, p3, p4 = _phis(x0, y0, v, v_polar)
    u = _pole(x0, y0, t)
    return PI3 * (2 - y0 - y0 ** 2) * (((p1 * t + p2) * t + p3) * t + p4) / u ** 3


def _j_slope(x0, y0, v):
    return (y0 + 2) * (v * y0 + math.pi * x0 * (y0 - 1))


def _j_fun(x0, y0, t, v):
    return _j_slope(x0, y0, v) * t + x0 * (v * (4 * y0 - 1) + math.pi * x0 * (y0 ** 2 + y0 - 2))


def _slide_second(x0, y0, t, v):
    u = _pole(x0, y0, t)
    return 2 * PI3 * (1 - y0) ** 2 / u ** 4 * _j_fun(x0, y0, t, v)


def _l1(x0, y0, k):
    th1, th2, th3, th4 = _thetas(x0, y0)
    return ((th1 * k + th2) * k + th3) * k + th4


def slide_product(cfg: LemmaConfig, v: float, v_polar: float) -> float:
    """
    Quarter Mahler product while A1 slides, for fixed half-volumes V and V0.

    Args:
        cfg: Parameter point; cfg.k bounds t when present
        v: Half-volume of the body before A1 moves
        v_polar: Half-volume of its polar

    Returns:
        F(t) of the second elimination lemma
    """
    cfg.check()
    return _slide(cfg.x0, cfg.y0, cfg.t, v, v_polar)


def slide_prime(cfg: LemmaConfig, v: float, v_polar: float) -> float:
    cfg.check()
    return _slide_prime(cfg.x0, cfg.y0, cfg.t, v, v_polar)


def slide_second(cfg: LemmaConfig, v: float, v_polar: float) -> float:
    """(2 pi / 3) (1 - y0)^2 J(t) / u^4; does not depend on v_polar."""
    cfg.check()
    return _slide_second(cfg.x0, cfg.y0, cfg.t, v)


def j_fun(cfg: LemmaConfig, v: float) -> float:
    cfg.check()
    return _j_fun(cfg.x0, cfg.y0, cfg.t, v)


def j_slope(x0: float, y0: float, v: float) -> float:
    return _j_slope(x0, y0, v)


def _check_slope(x0: float, y0: float, k: float):
    """k must lie in the closed interval [(1 - y0)/(-x0), y0/(x0 + 1)]."""
    errors = LemmaValidator.triangle_errors(x0, y0)
    if not errors and not (y0 > 0 and x0 < 0):
        errors.append(f"slope range is empty at ({x0}, {y0})")
    if not errors:
        k_lo = (1.0 - y0) / (-x0)
        k_hi = y0 / (x0 + 1.0) if x0 > -1.0 else math.inf
        tol = LemmaValidator.TOL * max(1.0, abs(k))
        if not (k > 0 and k_lo - tol <= k <= k_hi + tol):
            errors.append(f"k = {k} outside [{k_lo}, {k_hi}]")
    if errors:
        raise OutOfRegion('; '.join(errors))


def slide_endpoint_slope(x0: float, y0: float, k: float, v: float, v_polar: float) -> float:
    """F'(t0) at t0 = (-x0 k + y0 - 1)/k through the Upsilon coefficients."""
    _check_slope(x0, y0, k)
    u1, u2, u3 = _upsilons(x0, y0, k)
    return PI3 * (u1 * v_polar + u2 * v + u3)


def half_volume_extended(x0: float, y0: float, k: float) -> float:
    """Half-volume of the body generated by the chain D, G, A2, B with G = (-1, y0 - k (x0 + 1))."""
    g = y0 - k * (x0 + 1)
    return PI3 * (x0 + 1) * (g ** 2 + g * y0 + y0 ** 2) + PI3 * (-x0) * (y0 ** 2 + y0 + 1)


def l1_fun(x0: float, y0: float, k: float) -> float:
    _check_slope(x0, y0, k)
    return _l1(x0, y0, k)


def l_fun(x0: float, y0: float, k: float) -> float:
    """J at t0(k) with V set to half_volume_extended(k)."""
    return l1_fun(x0, y0, k) / k


def l1_prime_at_upper(x0: float, y0: float) -> float:
    """dL1/dk at k = y0 / (x0 + 1)."""
    return PI3 * (1 - y0) * (x0 ** 2 * (2 * y0 ** 2 + 1) + x0 * (2 * y0 ** 3 + 4 * y0 ** 2) + y0 ** 3 + 2 * y0 ** 2)


def l1_second_at_upper(x0: float, y0: float) -> float:
    return 2 * PI3 * (x0 + 1) ** 3 * y0 * (y0 - 1) * (y0 + 2)


def coefficient_bundle(x0: float, y0: float, v: Optional[float] = None,
                       v_polar: Optional[float] = None, k: Optional[float] = None) -> CoefficientBundle:
    """
    Polynomial coefficients of every closed form at one (x0, y0).

    Phi needs both half-volumes; Upsilon needs k. Theta is included
    whenever x0 is strictly inside (-1, 0).
    """
    LemmaConfig(x0=x0, y0=y0, k=k).check()
    phis = _phis(x0, y0, v, v_polar) if v is not None and v_polar is not None else None
    thetas = _thetas(x0, y0) if -1.0 < x0 < 0.0 else None
    upsilons = _upsilons(x0, y0, k) if k is not None else None
    return CoefficientBundle(deltas=_deltas(x0, y0), lambdas=_lambdas(x0, y0), gammas=_gammas(x0, y0),
                             phis=phis, thetas=thetas, upsilons=upsilons)


# Regions and oracles

def region_masks(x0, y0) -> Tuple[np.ndarray, np.ndarray]:
    """Boolean membership arrays of the two closed regions."""
    x0 = np.asarray(x0, dtype=float)
    y0 = np.asarray(y0, dtype=float)
    curve = region_curve(y0)
    in_d1 = (y0 >= REGION_SPLIT) | (x0 <= curve)
    in_d2 = (y0 <= REGION_SPLIT) & (x0 >= curve)
    return in_d1, in_d2


def region_membership(x0: float, y0: float) -> RegionTag:
    """
    Classify a point of the closed triangle.

    Raises:
        OutsideTriangle: If (x0, y0) is not in {-1 <= x <= y - 1, 0 <= y <= 1}
    """
    errors = LemmaValidator.triangle_errors(x0, y0)
    if errors:
        raise OutsideTriangle('; '.join(errors))
    in_d1, in_d2 = region_masks(x0, y0)
    return RegionTag(in_d1=bool(in_d1), in_d2=bool(in_d2))


def lemma_polygon(cfg: LemmaConfig) -> UnconditionalPolygon:
    """Generating domain with chain D, A2, A1, B."""
    cfg.check()
    return UnconditionalPolygon.from_points([(-1.0, 0.0), (cfg.x0, cfg.y0), (-cfg.t, 1.0), (0.0, 1.0)])


def oracle_half_volumes(cfg: LemmaConfig) -> Tuple[float, float]:
    """F1 and F2 recomputed by revolving the lemma polygon and its polar."""
    polygon = lemma_polygon(cfg)
    primal = volume(BodyOfRevolution.from_polygon(polygon))
    polar = volume(BodyOfRevolution.from_polygon(polar_polygon(polygon)))
    return 0.5 * primal, 0.5 * polar

import functools
import math
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

from src.errors import AnalyticUnsupported
from src.models.polygon import UnconditionalPolygon
from src.utils.validators import EPS, ProfileValidator


def _unit_disk(x: float) -> float:
    return math.sqrt(max(0.0, 1.0 - x * x))


def _parabola(x: float) -> float:
    return max(0.0, 1.0 - x * x)


ANALYTIC_PROFILES: Dict[str, Callable[[float], float]] = {
    'unit-disk': _unit_disk,
    'parabola': _parabola,
}


def _scaled_value(profile: 'GeneratingFunction', b: float, c: float, x: float) -> float:
    return c * profile.value(x / b)


class GeneratingFunction(BaseModel):
    """Concave even nonnegative profile f on [-a, a]."""
    half_width: float = Field(alias='a', gt=0)
    breakpoints: Optional[Tuple[Tuple[float, float], ...]] = None
    analytic: Optional[str] = None
    evaluator: Optional[Callable[[float], float]] = Field(default=None, exclude=True, repr=False)

    class Config:
        frozen = True
        populate_by_name = True
        allow_inf_nan = False
        json_schema_extra = {
            "example": {
                "a": 1.0,
                "breakpoints": [[0.0, 1.0], [0.8, 0.8], [1.0, 0.0]]
            }
        }

    @model_validator(mode='before')
    @classmethod
    def _resolve_named_profile(cls, data):
        if isinstance(data, dict) and data.get('analytic') and data.get('evaluator') is None:
            name = data['analytic']
            if name not in ANALYTIC_PROFILES:
                raise ValueError(f"unknown analytic profile {name!r}, expected one of {sorted(ANALYTIC_PROFILES)}")
            data = dict(data)
            data['evaluator'] = ANALYTIC_PROFILES[name]
        return data

    @model_validator(mode='after')
    def _check_profile(self):
        if (self.breakpoints is None) == (self.evaluator is None):
            raise ValueError("exactly one of 'breakpoints' or 'analytic' is required")
        if self.breakpoints is not None:
            is_valid, errors = ProfileValidator.validate_breakpoints(self.half_width, self.breakpoints)
        elif self.analytic in ANALYTIC_PROFILES:
            is_valid, errors = ProfileValidator.validate_samples(self.half_width, self.evaluator)
        else:
            # Derived evaluators (conjugates, rescalings) are concave by construction.
            is_valid, errors = True, []
        if not is_valid:
            raise ValueError('; '.join(errors))
        return self

    @property
    def is_piecewise_linear(self) -> bool:
        return self.breakpoints is not None

    @property
    def a(self) -> float:
        return self.half_width

    def value(self, x: float) -> float:
        """Evaluate f(x); zero outside [-a, a]."""
        ax = abs(x)
        if ax > self.half_width * (1.0 + EPS):
            return 0.0
        if self.breakpoints is not None:
            xs = [p[0] for p in self.breakpoints]
            fs = [p[1] for p in self.breakpoints]
            return float(np.interp(ax, xs, fs))
        return float(self.evaluator(x))

    def kinks(self) -> List[float]:
        """Breakpoint abscissae over [-a, a] (empty for analytic profiles)."""
        if self.breakpoints is None:
            return []
        xs = sorted({-p[0] for p in self.breakpoints} | {p[0] for p in self.breakpoints})
        return xs

    def to_polygon(self) -> UnconditionalPolygon:
        """Generating domain {|y| <= f(x)} as an unconditional polygon."""
        if self.breakpoints is None:
            raise AnalyticUnsupported("analytic profiles have no polygonal generating domain")
        chain = [(-self.half_width, 0.0)]
        chain.extend((-x, f) for x, f in reversed(self.breakpoints))
        return UnconditionalPolygon.from_points(chain)

    @classmethod
    def from_polygon(cls, polygon: UnconditionalPolygon) -> 'GeneratingFunction':
        pairs = polygon.pairs()
        a = polygon.half_width
        breakpoints = [(-x, y) for x, y in reversed(pairs[1:])]
        breakpoints[0] = (0.0, breakpoints[0][1])
        if pairs[1][0] > -a + EPS:
            breakpoints.append((a, 0.0))
        else:
            breakpoints[-1] = (a, breakpoints[-1][1])
        return cls(a=a, breakpoints=breakpoints)

    def scaled(self, b: float, c: float) -> 'GeneratingFunction':
        """Profile F(x) = c * f(x / b) on [-a*b, a*b]."""
        if self.breakpoints is not None:
            return GeneratingFunction(a=self.half_width * b,
                                      breakpoints=[(b * x, c * f) for x, f in self.breakpoints])
        return GeneratingFunction(a=self.half_width * b,
                                  analytic=f"{self.analytic}|scaled",
                                  evaluator=functools.partial(_scaled_value, self, b, c))

    def to_dict(self):
        """Convert to the generating-function JSON shape."""
        if self.breakpoints is not None:
            return {'a': self.half_width, 'breakpoints': [list(p) for p in self.breakpoints]}
        return {'a': self.half_width, 'analytic': self.analytic}


class AxialProfile(BaseModel):
    """Concave nonnegative profile on [0, h]; the body need not be origin-symmetric."""
    height: float = Field(alias='h', gt=0)
    breakpoints: Tuple[Tuple[float, float], ...]

    class Config:
        frozen = True
        populate_by_name = True
        allow_inf_nan = False
        json_schema_extra = {
            "example": {
                "h": 1.0,
                "breakpoints": [[0.0, 1.0], [1.0, 0.0]]
            }
        }

    @model_validator(mode='after')
    def _check_profile(self):
        is_valid, errors = ProfileValidator.validate_axial(self.height, self.breakpoints)
        if not is_valid:
            raise ValueError('; '.join(errors))
        return self

    @classmethod
    def cone(cls, height: float = 1.0, radius: float = 1.0) -> 'AxialProfile':
        return cls(h=height, breakpoints=[(0.0, radius), (height, 0.0)])

    def upper_chain(self, shift: float = 0.0) -> List[Tuple[float, float]]:
        """Upper boundary of the domain translated by ``shift`` along the axis."""
        chain = [(shift, 0.0)]
        chain.extend((x + shift, f) for x, f in self.breakpoints)
        chain.append((self.height + shift, 0.0))
        return chain

    def apex_at_end(self) -> bool:
        """True when the narrow end of the profile is at x = h."""
        return self.breakpoints[-1][1] <= self.breakpoints[0][1]

    def to_dict(self):
        return {'h': self.height, 'breakpoints': [list(p) for p in self.breakpoints]}

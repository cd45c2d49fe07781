from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from src.errors import OutOfRegion
from src.utils.validators import LemmaValidator


class LemmaConfig(BaseModel):
    """Parameter point with A2 = (x0, y0), A1 = (-t, 1) and slope k of line A2A3."""
    x0: float
    y0: float
    t: float = 0.0
    k: Optional[float] = None

    class Config:
        frozen = True
        allow_inf_nan = False
        json_schema_extra = {
            "example": {"x0": -0.6, "y0": 0.7, "t": 0.1}
        }

    @property
    def t_end(self) -> float:
        """Largest t for which A2 stays extreme; A1 reaches C here."""
        if self.k is not None:
            return (-self.x0 * self.k + self.y0 - 1.0) / self.k
        return (-self.x0 + self.y0 - 1.0) / self.y0

    def at(self, t: float) -> 'LemmaConfig':
        return self.model_copy(update={'t': t})

    def check(self) -> 'LemmaConfig':
        """Raise OutOfRegion unless the point is feasible."""
        is_valid, errors = LemmaValidator.validate_config(self.x0, self.y0, self.t, self.k)
        if not is_valid:
            raise OutOfRegion('; '.join(errors))
        return self


class CoefficientBundle(BaseModel):
    """Polynomial coefficients of the closed forms at one (x0, y0)."""
    deltas: Tuple[float, float, float, float]
    lambdas: Tuple[float, float, float, float, float]
    gammas: Tuple[float, float, float]
    phis: Optional[Tuple[float, float, float, float]] = None
    thetas: Optional[Tuple[float, float, float, float]] = None
    upsilons: Optional[Tuple[float, float, float]] = None

    class Config:
        frozen = True

    def to_dict(self):
        return self.model_dump()


class RegionTag(BaseModel):
    in_d1: bool = Field(alias='inD1')
    in_d2: bool = Field(alias='inD2')

    class Config:
        frozen = True
        populate_by_name = True


class ClaimResult(BaseModel):
    """Outcome of one sign claim checked over a region grid."""
    name: str
    region: str
    grid: int
    evaluated: int
    violations: int
    max_violation: float = Field(alias='maxViolation')
    argmax: Optional[Tuple[float, ...]] = None

    class Config:
        frozen = True
        populate_by_name = True


class SignClaimReport(BaseModel):
    grid: int
    tolerance: float
    claims: List[ClaimResult]

    class Config:
        frozen = True

    @property
    def total_violations(self) -> int:
        return sum(c.violations for c in self.claims)

    def to_dict(self):
        return {
            'grid': self.grid,
            'tolerance': self.tolerance,
            'claims': [c.model_dump(by_alias=True) for c in self.claims],
            'totalViolations': self.total_violations
        }

from typing import List, Tuple

from pydantic import BaseModel, Field

from src.models.polygon import UnconditionalPolygon


class MahlerReport(BaseModel):
    """Volumes of a body and its polar together with the product slack."""
    primal_volume: float = Field(alias='primalVolume', gt=0)
    polar_volume: float = Field(alias='polarVolume', gt=0)
    product: float = Field(gt=0)
    bound: float
    slack: float

    class Config:
        frozen = True
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "primalVolume": 6.283185307179586,
                "polarVolume": 2.0943951023931953,
                "product": 13.15947253478581,
                "bound": 13.15947253478581,
                "slack": 0.0
            }
        }

    @classmethod
    def build(cls, primal_volume: float, polar_volume: float, bound: float) -> 'MahlerReport':
        product = primal_volume * polar_volume
        return cls(primal_volume=primal_volume, polar_volume=polar_volume,
                   product=product, bound=bound, slack=product - bound)

    def to_dict(self):
        return self.model_dump(by_alias=True)


class PolarResult2D(BaseModel):
    """Dual domain of a polygon and the measured involution error."""
    polygon: UnconditionalPolygon
    involution_error: float = Field(alias='involutionError', ge=0)

    class Config:
        frozen = True
        populate_by_name = True

    def to_dict(self):
        return {**self.polygon.to_dict(), 'involutionError': self.involution_error}


class DirectionDeviation(BaseModel):
    direction: Tuple[float, float, float]
    max_deviation: float = Field(alias='maxDeviation')

    class Config:
        frozen = True
        populate_by_name = True


class SliceDualityReport(BaseModel):
    """Radial mismatch between polar slices and polarized projections."""
    max_deviation: float = Field(alias='maxDeviation')
    per_direction: List[DirectionDeviation] = Field(alias='perDirection')

    class Config:
        frozen = True
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "maxDeviation": 2.2e-16,
                "perDirection": [{"direction": [1.0, 0.0, 0.0], "maxDeviation": 2.2e-16}]
            }
        }

    def to_dict(self):
        return self.model_dump(by_alias=True)


class SantaloSearchResult(BaseModel):
    """Optimal axis position of the origin for a non-symmetric revolution body."""
    best_shift: float = Field(alias='bestShift')
    best_product: float = Field(alias='bestProduct', gt=0)
    apex_ratio: float = Field(alias='apexRatio', gt=0, lt=1)
    bound: float

    class Config:
        frozen = True
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "bestShift": -0.25,
                "bestProduct": 10.398947,
                "apexRatio": 0.75,
                "bound": 10.398947
            }
        }

    def to_dict(self):
        return self.model_dump(by_alias=True)


class GoldenItem(BaseModel):
    name: str
    expected: float
    actual: float
    abs_error: float = Field(alias='absError')
    tolerance: float
    passed: bool

    class Config:
        frozen = True
        populate_by_name = True


class GoldenReport(BaseModel):
    """Pass/fail table for the equality-case constants."""
    items: List[GoldenItem]

    class Config:
        frozen = True

    @property
    def all_passed(self) -> bool:
        return all(item.passed for item in self.items)

    def to_dict(self):
        return {'items': [item.model_dump(by_alias=True) for item in self.items],
                'allPassed': self.all_passed}

from pydantic import BaseModel, Field

from src.models.polygon import UnconditionalPolygon
from src.models.profile import GeneratingFunction


class BodyOfRevolution(BaseModel):
    """Body generated by revolving {|y| <= f(x)} about the X-axis."""
    generator: GeneratingFunction

    class Config:
        frozen = True
        json_schema_extra = {
            "example": {
                "generator": {"a": 1.0, "breakpoints": [[0.0, 1.0], [1.0, 1.0]]}
            }
        }

    @classmethod
    def from_polygon(cls, polygon: UnconditionalPolygon) -> 'BodyOfRevolution':
        return cls(generator=GeneratingFunction.from_polygon(polygon))

    @classmethod
    def cylinder(cls) -> 'BodyOfRevolution':
        return cls.from_polygon(UnconditionalPolygon.square())

    @classmethod
    def bicone(cls) -> 'BodyOfRevolution':
        return cls.from_polygon(UnconditionalPolygon.diamond())

    @classmethod
    def ball(cls) -> 'BodyOfRevolution':
        return cls(generator=GeneratingFunction(a=1.0, analytic='unit-disk'))

    def to_dict(self):
        return self.generator.to_dict()


class AffineNormalization(BaseModel):
    """Diagonal map diag(b, c, c) taking a body into the unit cube."""
    b: float = Field(gt=0)
    c: float = Field(gt=0)

    class Config:
        frozen = True
        json_schema_extra = {
            "example": {"b": 0.5, "c": 0.25}
        }

    def to_dict(self):
        return self.model_dump()


class ParallelSectionsBody(BaseModel):
    """Union over x of the scaled sections f(x) * C stacked along the X-axis."""
    generator: GeneratingFunction
    cross_section: UnconditionalPolygon = Field(alias='crossSection')

    class Config:
        frozen = True
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "generator": {"a": 1.0, "breakpoints": [[0.0, 1.0], [1.0, 1.0]]},
                "crossSection": {"chain": [[-1.0, 0.0], [-1.0, 1.0], [0.0, 1.0]]}
            }
        }

    def to_dict(self):
        return {
            'generator': self.generator.to_dict(),
            'crossSection': self.cross_section.to_dict()
        }

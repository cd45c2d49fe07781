from enum import Enum
from typing import List

from pydantic import BaseModel, Field

from src.models.polygon import UnconditionalPolygon


class StepKind(str, Enum):
    DROP_VERTEX = 'DropVertex'
    SLIDE_TO_C = 'SlideToC'
    POLAR_SWAP = 'PolarSwap'


class Terminal(str, Enum):
    CYLINDER = 'Cylinder'
    BICONE = 'Bicone'


class ReductionStep(BaseModel):
    """One move of the reduction with the products on either side."""
    kind: StepKind
    chain_before: UnconditionalPolygon = Field(alias='chainBefore')
    chain_after: UnconditionalPolygon = Field(alias='chainAfter')
    product_before: float = Field(alias='productBefore')
    product_after: float = Field(alias='productAfter')
    clamped: bool = False

    class Config:
        frozen = True
        populate_by_name = True

    def to_dict(self):
        return {
            'kind': self.kind.value,
            'chainBefore': self.chain_before.to_dict()['chain'],
            'chainAfter': self.chain_after.to_dict()['chain'],
            'productBefore': self.product_before,
            'productAfter': self.product_after,
            'clamped': self.clamped
        }


class ReductionCertificate(BaseModel):
    """Monotone sequence of generating domains ending at the square or diamond."""
    initial: UnconditionalPolygon
    initial_product: float = Field(alias='initialProduct')
    steps: List[ReductionStep]
    terminal: Terminal
    min_product: float = Field(alias='minProduct')

    class Config:
        frozen = True
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "initial": {"chain": [[-1.0, 0.0], [-0.7071, 0.7071], [0.0, 1.0]]},
                "initialProduct": 14.2,
                "steps": [],
                "terminal": "Cylinder",
                "minProduct": 13.159472534785811
            }
        }

    @property
    def final_chain(self) -> UnconditionalPolygon:
        return self.steps[-1].chain_after if self.steps else self.initial

    def to_dict(self):
        return {
            'initial': self.initial.to_dict()['chain'],
            'initialProduct': self.initial_product,
            'steps': [s.to_dict() for s in self.steps],
            'terminal': self.terminal.value,
            'minProduct': self.min_product
        }

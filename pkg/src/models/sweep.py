from enum import Enum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field


class SweepMode(str, Enum):
    REVOLUTION = 'revolution'
    PSH = 'psh'
    SANTALO_CONE = 'santalo-cone'
    LEMMA_GRID = 'lemma-grid'


class SweepConfig(BaseModel):
    """Inputs that fully determine a sweep's output rows."""
    samples: int = Field(gt=0)
    max_vertices: int = Field(default=12, ge=3, le=32)
    seed: int = Field(default=7, ge=0, lt=2 ** 64)
    mode: SweepMode = SweepMode.REVOLUTION
    out_path: Path
    jobs: int = Field(default=1, ge=1)

    class Config:
        frozen = True
        json_schema_extra = {
            "example": {
                "samples": 1000,
                "max_vertices": 12,
                "seed": 7,
                "mode": "revolution",
                "out_path": "data/output/sweep.csv",
                "jobs": 4
            }
        }


class SweepRow(BaseModel):
    id: int
    chain_digest: str = Field(alias='chainDigest')
    product: float
    slack: float
    terminal: Optional[str] = None
    chain: Optional[List[List[float]]] = Field(default=None, exclude=True)
    verified: bool = Field(default=True, exclude=True)

    class Config:
        frozen = True
        populate_by_name = True

    def to_dict(self):
        return self.model_dump(by_alias=True)


class SweepSummary(BaseModel):
    mode: SweepMode
    samples: int
    bound: float
    min_product: float = Field(alias='minProduct')
    argmin_chain: Optional[List[List[float]]] = Field(default=None, alias='argminChain')
    violations: int

    class Config:
        frozen = True
        populate_by_name = True

    def to_dict(self):
        data = self.model_dump(by_alias=True)
        data['mode'] = self.mode.value
        return data

import hashlib
import json
from typing import Iterable, List, Sequence, Tuple

from pydantic import BaseModel, field_validator, model_validator

from src.errors import DegeneratePolygon
from src.utils.validators import EPS, ChainValidator

Pair = Tuple[float, float]


class Point2(BaseModel):
    """A point of the generating plane."""
    x: float
    y: float

    class Config:
        frozen = True
        allow_inf_nan = False
        json_schema_extra = {
            "example": {"x": -0.6, "y": 0.7}
        }

    def as_pair(self) -> Pair:
        return (self.x, self.y)


def _turn(a: Pair, b: Pair, c: Pair) -> float:
    return (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])


def canonical_chain(points: Iterable[Sequence[float]], tol: float = EPS) -> List[Pair]:
    """
    Bring a raw D-to-B chain into canonical form.

    Anchors are kept, points closer than ``tol`` are merged and interior
    points within ``tol`` of their neighbours' line are dropped.

    Args:
        points: Chain from (-a, 0) to (0, b)
        tol: Merge and collinearity tolerance

    Returns:
        Canonical chain as (x, y) pairs
    """
    raw = [(float(p[0]), float(p[1])) for p in points]
    if len(raw) < 2:
        raise DegeneratePolygon("chain needs at least two points")

    first, last = raw[0], raw[-1]
    first = (first[0], 0.0) if abs(first[1]) <= tol else first
    last = (0.0, last[1]) if abs(last[0]) <= tol else last

    merged = [first]
    for p in raw[1:-1]:
        if abs(p[0] - merged[-1][0]) <= tol and abs(p[1] - merged[-1][1]) <= tol:
            continue
        merged.append(p)
    while len(merged) > 1 and abs(merged[-1][0] - last[0]) <= tol and abs(merged[-1][1] - last[1]) <= tol:
        merged.pop()
    merged.append(last)

    changed = True
    while changed and len(merged) > 2:
        changed = False
        for i in range(1, len(merged) - 1):
            if abs(_turn(merged[i - 1], merged[i], merged[i + 1])) <= tol:
                del merged[i]
                changed = True
                break

    return merged


def chain_digest(pairs: Iterable[Sequence[float]]) -> str:
    """64-bit blake2b hash of the compact JSON serialization of a point list."""
    payload = json.dumps([[float(x), float(y)] for x, y in pairs], separators=(',', ':'))
    return hashlib.blake2b(payload.encode('utf-8'), digest_size=8).hexdigest()


class UnconditionalPolygon(BaseModel):
    """1-unconditional polygon stored as its second-quadrant chain D -> B."""
    chain: Tuple[Point2, ...]

    class Config:
        frozen = True
        json_schema_extra = {
            "example": {
                "chain": [[-1.0, 0.0], [-0.8, 0.8], [0.0, 1.0]]
            }
        }

    @field_validator('chain', mode='before')
    @classmethod
    def _coerce_pairs(cls, value):
        coerced = []
        for p in value:
            if isinstance(p, (list, tuple)):
                if len(p) != 2:
                    raise ValueError(f"chain entries must be [x, y] pairs, got {p!r}")
                coerced.append({'x': p[0], 'y': p[1]})
            else:
                coerced.append(p)
        return coerced

    @model_validator(mode='after')
    def _check_chain(self):
        is_valid, errors = ChainValidator.validate_chain(self.pairs())
        if not is_valid:
            raise ValueError('; '.join(errors))
        return self

    @classmethod
    def from_points(cls, points: Iterable[Sequence[float]], tol: float = EPS) -> 'UnconditionalPolygon':
        """Canonicalize and build; failures surface as DegeneratePolygon."""
        chain = canonical_chain(points, tol)
        is_valid, errors = ChainValidator.validate_chain(chain)
        if not is_valid:
            raise DegeneratePolygon('; '.join(errors))
        return cls(chain=chain)

    @classmethod
    def square(cls, a: float = 1.0, b: float = 1.0) -> 'UnconditionalPolygon':
        return cls(chain=[(-a, 0.0), (-a, b), (0.0, b)])

    @classmethod
    def diamond(cls, a: float = 1.0, b: float = 1.0) -> 'UnconditionalPolygon':
        return cls(chain=[(-a, 0.0), (0.0, b)])

    @property
    def half_width(self) -> float:
        return -self.chain[0].x

    @property
    def height(self) -> float:
        return self.chain[-1].y

    def pairs(self) -> List[Pair]:
        return [p.as_pair() for p in self.chain]

    def scaled(self, sx: float, sy: float) -> 'UnconditionalPolygon':
        return UnconditionalPolygon(chain=[(sx * x, sy * y) for x, y in self.pairs()])

    def matches(self, other: 'UnconditionalPolygon', tol: float = 1e-9) -> bool:
        """Canonical chains agree pointwise within tol."""
        if len(self.chain) != len(other.chain):
            return False
        return all(abs(p.x - q.x) <= tol and abs(p.y - q.y) <= tol
                   for p, q in zip(self.chain, other.chain))

    def is_square(self, tol: float = 1e-9) -> bool:
        return self.matches(UnconditionalPolygon.square(self.half_width, self.height), tol)

    def is_diamond(self, tol: float = 1e-9) -> bool:
        return len(self.chain) == 2

    def digest(self) -> str:
        """64-bit hash of the canonical chain serialization."""
        return chain_digest(self.pairs())

    def to_dict(self):
        """Convert to the chain JSON shape."""
        return {'chain': [[p.x, p.y] for p in self.chain]}

"""Readers for the JSON input files of the command line."""
import json
from pathlib import Path
from typing import Any, Type, TypeVar
import logging

from pydantic import BaseModel, ValidationError

from src.errors import InputFormatError
from src.models.body import BodyOfRevolution, ParallelSectionsBody
from src.models.lemma import LemmaConfig
from src.models.polygon import UnconditionalPolygon
from src.models.profile import AxialProfile, GeneratingFunction

logger = logging.getLogger(__name__)

M = TypeVar('M', bound=BaseModel)


def read_json(path: Path) -> Any:
    """
    Parse a JSON file.

    Raises:
        InputFormatError: ``path:line:col: message`` for syntax errors
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        logger.error(f"Cannot read {path}: {e}")
        raise InputFormatError(f"{path}: {e.strerror or e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from e


def _describe(path: Path, error: ValidationError) -> str:
    lines = []
    for item in error.errors():
        location = '.'.join(str(part) for part in item['loc']) or '<root>'
        lines.append(f"{path}: field {location}: {item['msg']}")
    return '\n'.join(lines)


def load_model(path: Path, model: Type[M]) -> M:
    """
    Read and validate one model from a JSON file.

    Raises:
        InputFormatError: With one line per failing field
    """
    data = read_json(path)
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise InputFormatError(_describe(Path(path), e)) from e


def load_polygon(path: Path) -> UnconditionalPolygon:
    return load_model(path, UnconditionalPolygon)


def load_generator(path: Path) -> GeneratingFunction:
    """Accept either a generating function or a bare polygon chain."""
    data = read_json(path)
    model = UnconditionalPolygon if isinstance(data, dict) and 'chain' in data else GeneratingFunction
    try:
        parsed = model.model_validate(data)
    except ValidationError as e:
        raise InputFormatError(_describe(Path(path), e)) from e
    if isinstance(parsed, UnconditionalPolygon):
        return GeneratingFunction.from_polygon(parsed)
    return parsed


def load_body(path: Path) -> BodyOfRevolution:
    return BodyOfRevolution(generator=load_generator(path))


def load_psh(path: Path) -> ParallelSectionsBody:
    return load_model(path, ParallelSectionsBody)


def load_axial(path: Path) -> AxialProfile:
    return load_model(path, AxialProfile)


def load_lemma_config(path: Path) -> LemmaConfig:
    return load_model(path, LemmaConfig)

from .config import Config
from .validators import ChainValidator, LemmaValidator, ProfileValidator

__all__ = [
    'Config',
    'ChainValidator',
    'LemmaValidator',
    'ProfileValidator'
]

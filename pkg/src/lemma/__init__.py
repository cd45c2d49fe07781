from .lemma_engine import (
    coefficient_bundle,
    f1,
    f2,
    f_prime,
    f_product,
    f_second,
    lemma_polygon,
    oracle_half_volumes,
    region_membership,
)
from .sign_claims import verify_sign_claims

__all__ = [
    'coefficient_bundle', 'f1', 'f2', 'f_prime', 'f_product', 'f_second',
    'lemma_polygon', 'oracle_half_volumes', 'region_membership', 'verify_sign_claims',
]

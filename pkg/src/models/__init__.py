from .polygon import Point2, UnconditionalPolygon, canonical_chain, chain_digest
from .profile import ANALYTIC_PROFILES, AxialProfile, GeneratingFunction
from .body import AffineNormalization, BodyOfRevolution, ParallelSectionsBody
from .reports import (
    DirectionDeviation,
    GoldenItem,
    GoldenReport,
    MahlerReport,
    PolarResult2D,
    SantaloSearchResult,
    SliceDualityReport,
)
from .lemma import ClaimResult, CoefficientBundle, LemmaConfig, RegionTag, SignClaimReport
from .certificate import ReductionCertificate, ReductionStep, StepKind, Terminal
from .sweep import SweepConfig, SweepMode, SweepRow, SweepSummary

__all__ = [
    'Point2', 'UnconditionalPolygon', 'canonical_chain', 'chain_digest',
    'ANALYTIC_PROFILES', 'AxialProfile', 'GeneratingFunction',
    'AffineNormalization', 'BodyOfRevolution', 'ParallelSectionsBody',
    'DirectionDeviation', 'GoldenItem', 'GoldenReport', 'MahlerReport',
    'PolarResult2D', 'SantaloSearchResult', 'SliceDualityReport',
    'ClaimResult', 'CoefficientBundle', 'LemmaConfig', 'RegionTag', 'SignClaimReport',
    'ReductionCertificate', 'ReductionStep', 'StepKind', 'Terminal',
    'SweepConfig', 'SweepMode', 'SweepRow', 'SweepSummary',
]

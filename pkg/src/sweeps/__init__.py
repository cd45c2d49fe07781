from .base_sweep import BaseSweep
from .golden import golden_check
from .mode_sweeps import LemmaGridSweep, PshSweep, RevolutionSweep, SantaloConeSweep, make_sweep
from .orchestrator import SweepOrchestrator, run_sweep
from .samplers import sample_axial_profile, sample_lemma_config, sample_polygon

__all__ = [
    'BaseSweep', 'golden_check',
    'LemmaGridSweep', 'PshSweep', 'RevolutionSweep', 'SantaloConeSweep', 'make_sweep',
    'SweepOrchestrator', 'run_sweep',
    'sample_axial_profile', 'sample_lemma_config', 'sample_polygon',
]

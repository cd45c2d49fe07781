"""One BaseSweep per sweep mode."""
from typing import Dict, Type
import logging

import numpy as np

from src.geometry.mahler import CYLINDER_BOUND, PSH_BOUND, SANTALO_CONE_BOUND, mahler_product_psh, santalo_axis_search
from src.lemma.lemma_engine import f_product, lemma_polygon
from src.models.body import ParallelSectionsBody
from src.models.certificate import ReductionCertificate
from src.models.polygon import UnconditionalPolygon, chain_digest
from src.models.profile import AxialProfile, GeneratingFunction
from src.models.sweep import SweepMode, SweepRow
from src.reduction.reducer import reduce_to_terminal, verify_certificate
from src.sweeps.base_sweep import BaseSweep
from src.sweeps.samplers import sample_axial_profile, sample_lemma_config, sample_polygon

logger = logging.getLogger(__name__)


class RevolutionSweep(BaseSweep):
    """Random generating polygons, each reduced to the cylinder or the bicone."""

    bound = CYLINDER_BOUND

    def __init__(self, max_vertices: int = 12):
        super().__init__("revolution", max_vertices)

    def certify(self, polygon: UnconditionalPolygon) -> ReductionCertificate:
        return reduce_to_terminal(polygon)

    def evaluate(self, sample_id: int, rng: np.random.Generator) -> SweepRow:
        n = int(rng.integers(2, self.max_vertices, endpoint=True))
        certificate = self.certify(sample_polygon(rng, n))
        polygon = certificate.initial
        verified = verify_certificate(certificate)
        if not verified:
            logger.warning(f"Sample {sample_id}: reduction certificate of {polygon.digest()} failed verification")
        return self.row(sample_id, polygon.digest(), certificate.initial_product,
                        terminal=certificate.terminal.value, chain=polygon.to_dict()["chain"],
                        verified=verified)

    def validate_config(self) -> bool:
        return self.max_vertices >= 2


class PshSweep(BaseSweep):
    """Parallel-sections bodies with a random section and a random generator."""

    bound = PSH_BOUND

    def __init__(self, max_vertices: int = 12):
        super().__init__("psh", max_vertices)

    def evaluate(self, sample_id: int, rng: np.random.Generator) -> SweepRow:
        section = sample_polygon(rng, int(rng.integers(2, self.max_vertices, endpoint=True)))
        profile = sample_polygon(rng, int(rng.integers(2, self.max_vertices, endpoint=True)))
        body = ParallelSectionsBody(generator=GeneratingFunction.from_polygon(profile), cross_section=section)
        report = mahler_product_psh(body)
        digest = chain_digest(section.pairs() + profile.pairs())
        return self.row(sample_id, digest, report.product, chain=section.to_dict()['chain'])

    def validate_config(self) -> bool:
        return self.max_vertices >= 2


class SantaloConeSweep(BaseSweep):
    """Concave axial profiles placed at their best axis point; sample 0 is the cone."""

    bound = SANTALO_CONE_BOUND

    def __init__(self, max_vertices: int = 12):
        super().__init__("santalo-cone", max_vertices)

    def evaluate(self, sample_id: int, rng: np.random.Generator) -> SweepRow:
        if sample_id == 0:
            profile = AxialProfile.cone()
        else:
            profile = sample_axial_profile(rng, int(rng.integers(2, self.max_vertices, endpoint=True)))
        result = santalo_axis_search(profile)
        breakpoints = [list(p) for p in profile.breakpoints]
        return self.row(sample_id, chain_digest(profile.breakpoints), result.best_product, chain=breakpoints)

    def validate_config(self) -> bool:
        return self.max_vertices >= 2


class LemmaGridSweep(BaseSweep):
    """Random lemma parameter points; 4F is the Mahler product of the lemma polygon's body."""

    bound = CYLINDER_BOUND

    def __init__(self, max_vertices: int = 12):
        super().__init__("lemma-grid", max_vertices)

    def evaluate(self, sample_id: int, rng: np.random.Generator) -> SweepRow:
        cfg = sample_lemma_config(rng)
        polygon = lemma_polygon(cfg)
        return self.row(sample_id, polygon.digest(), 4.0 * f_product(cfg), chain=polygon.to_dict()['chain'])

    def validate_config(self) -> bool:
        return True


SWEEPS: Dict[SweepMode, Type[BaseSweep]] = {
    SweepMode.REVOLUTION: RevolutionSweep,
    SweepMode.PSH: PshSweep,
    SweepMode.SANTALO_CONE: SantaloConeSweep,
    SweepMode.LEMMA_GRID: LemmaGridSweep,
}


def make_sweep(mode: SweepMode, max_vertices: int = 12) -> BaseSweep:
    sweep = SWEEPS[SweepMode(mode)](max_vertices)
    if not sweep.validate_config():
        logger.warning(f"Sweep {sweep.get_name()} has an unusable configuration (max_vertices={max_vertices})")
    return sweep

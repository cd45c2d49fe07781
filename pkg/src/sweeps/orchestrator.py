from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple
import logging

from src.errors import SweepIoError
from src.models.sweep import SweepConfig, SweepMode, SweepRow, SweepSummary
from src.sweeps.mode_sweeps import make_sweep
from src.utils.formatters import ReportFormatter, SweepFormatter

logger = logging.getLogger(__name__)

Task = Tuple[str, int, int, int]


def _evaluate(task: Task) -> SweepRow:
    """Worker entry point; rebuilds the sweep so only plain values cross processes."""
    mode, max_vertices, seed, sample_id = task
    return make_sweep(SweepMode(mode), max_vertices).process(sample_id, seed)


def summary_path(out_path: Path) -> Path:
    return out_path.with_name(out_path.name + '.summary.json')


class SweepOrchestrator:
    """
    Runs one sweep end to end.

    Flow:
    1. Evaluates every sample, serially or over a process pool
    2. Collects rows in sample order
    3. Aggregates the minimum product and the violations
    4. Writes the CSV and the JSON summary next to it
    """

    def __init__(self, config: SweepConfig, tolerance: float = 1e-9):
        self.config = config
        self.tolerance = tolerance
        self.sweep = make_sweep(config.mode, config.max_vertices)
        self.rows: List[SweepRow] = []

    def collect_rows(self) -> List[SweepRow]:
        cfg = self.config
        tasks = [(cfg.mode.value, cfg.max_vertices, cfg.seed, i) for i in range(cfg.samples)]
        if cfg.jobs == 1:
            rows = [_evaluate(task) for task in tasks]
        else:
            chunksize = max(1, cfg.samples // (4 * cfg.jobs))
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                rows = list(pool.map(_evaluate, tasks, chunksize=chunksize))
        self.rows = sorted(rows, key=lambda r: r.id)
        return self.rows

    def summarize(self, rows: Optional[List[SweepRow]] = None) -> SweepSummary:
        rows = self.rows if rows is None else rows
        best = min(rows, key=lambda r: r.product)
        violations = sum(1 for r in rows if r.slack < -self.tolerance or not r.verified)
        if violations:
            logger.warning(f"Sweep {self.sweep.get_name()} found {violations} rows below the bound or unverified")
        return SweepSummary(mode=self.config.mode, samples=len(rows), bound=self.sweep.bound,
                            min_product=best.product, argmin_chain=best.chain, violations=violations)

    def write(self, summary: SweepSummary):
        """
        Write rows and summary.

        Raises:
            SweepIoError: If either file cannot be written
        """
        out_path = Path(self.config.out_path)
        try:
            out_path.parent.mkdir(parents=True, exist_ok=True)
            SweepFormatter.export_csv(self.rows, out_path)
            ReportFormatter.export_json(summary.to_dict(), summary_path(out_path))
        except OSError as e:
            logger.error(f"Cannot write sweep output to {out_path}: {e}")
            raise SweepIoError(f"cannot write sweep output to {out_path}: {e}") from e

    def run(self) -> SweepSummary:
        logger.info(f"Sweep {self.sweep.get_name()}: {self.config.samples} samples, "
                    f"seed {self.config.seed}, {self.config.jobs} job(s)")
        self.collect_rows()
        summary = self.summarize()
        self.write(summary)
        logger.info(f"Sweep {self.sweep.get_name()} finished: min product {summary.min_product:.12f}, "
                    f"{summary.violations} violations")
        return summary


def run_sweep(config: SweepConfig, tolerance: float = 1e-9) -> SweepSummary:
    """
    Evaluate a sweep and write its CSV and JSON summary.

    Args:
        config: Sweep inputs; identical configs give byte-identical CSV files
        tolerance: Negative slack allowed before a row counts as a violation

    Returns:
        SweepSummary of the run
    """
    return SweepOrchestrator(config, tolerance).run()

from abc import ABC, abstractmethod

import numpy as np

from src.models.sweep import SweepRow


class BaseSweep(ABC):
    """Base class for all sweep modes. Allows pluggable sample evaluators."""

    bound: float = 0.0

    def __init__(self, name: str, max_vertices: int = 12):
        self.name = name
        self.max_vertices = max_vertices

    def process(self, sample_id: int, seed: int) -> SweepRow:
        """
        Evaluate one sample on its own generator.

        Sample i always draws from default_rng([seed, i]), so a row does not
        depend on which worker evaluates it or in what order.
        """
        rng = np.random.default_rng([seed, sample_id])
        return self.evaluate(sample_id, rng)

    @abstractmethod
    def evaluate(self, sample_id: int, rng: np.random.Generator) -> SweepRow:
        """
        Draw one sample and measure it against the mode's bound.

        Args:
            sample_id: Row index within the sweep
            rng: Generator seeded for this row only

        Returns:
            SweepRow with slack = product - bound
        """
        pass

    @abstractmethod
    def validate_config(self) -> bool:
        """
        Validate that the sweep is properly configured.

        Returns:
            True if configuration is valid, False otherwise
        """
        pass

    def get_name(self) -> str:
        return self.name

    def row(self, sample_id: int, digest: str, product: float, terminal=None, chain=None,
            verified: bool = True) -> SweepRow:
        """A row with verified=False counts as a violation whatever its slack."""
        return SweepRow(id=sample_id, chain_digest=digest, product=product, slack=product - self.bound,
                        terminal=terminal, chain=chain, verified=verified)

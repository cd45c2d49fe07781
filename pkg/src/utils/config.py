import os
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv
import logging

logger = logging.getLogger(__name__)


class Config:
    """Numeric and runtime settings, read from the environment or a .env file."""

    def __init__(self, env_file: Optional[str] = None):
        """
        Initialize configuration.

        Args:
            env_file: Path to .env file (optional)
        """
        if env_file:
            load_dotenv(env_file)
        else:
            load_dotenv()

        self._validate_config()

    @property
    def seed(self) -> int:
        """Base seed of the per-sample generators."""
        return int(os.getenv('MAHLER_SEED', '7'))

    @property
    def jobs(self) -> int:
        """Worker processes used by sweeps."""
        return int(os.getenv('MAHLER_JOBS', '1'))

    @property
    def tolerance(self) -> float:
        """Slack below the bound that still counts as no violation."""
        return float(os.getenv('MAHLER_TOLERANCE', '1e-9'))

    @property
    def quad_tol(self) -> float:
        return float(os.getenv('MAHLER_QUAD_TOL', '1e-10'))

    @property
    def quad_max_depth(self) -> int:
        return int(os.getenv('MAHLER_QUAD_MAX_DEPTH', '40'))

    @property
    def golden_tol(self) -> float:
        """Final bracket width of the Santalo axis search."""
        return float(os.getenv('MAHLER_GOLDEN_TOL', '1e-12'))

    @property
    def max_vertices(self) -> int:
        return int(os.getenv('MAHLER_MAX_VERTICES', '12'))

    @property
    def project_root(self) -> Path:
        """Get project root directory."""
        return Path(__file__).parent.parent.parent

    @property
    def data_dir(self) -> Path:
        """Get data directory."""
        return self.project_root / 'data'

    @property
    def output_dir(self) -> Path:
        """Get output directory."""
        output_path = self.data_dir / 'output'
        output_path.mkdir(parents=True, exist_ok=True)
        return output_path

    @property
    def log_level(self) -> str:
        """Get logging level."""
        return os.getenv('LOG_LEVEL', 'INFO')

    def _validate_config(self):
        """Warn about settings that the numerics cannot use."""
        try:
            problems = []
            if self.jobs < 1:
                problems.append(f"MAHLER_JOBS={self.jobs} must be at least 1")
            for name, value in (('MAHLER_TOLERANCE', self.tolerance), ('MAHLER_QUAD_TOL', self.quad_tol),
                                ('MAHLER_GOLDEN_TOL', self.golden_tol)):
                if not value > 0:
                    problems.append(f"{name}={value} must be positive")
            if self.quad_max_depth < 1:
                problems.append(f"MAHLER_QUAD_MAX_DEPTH={self.quad_max_depth} must be positive")
            if not 3 <= self.max_vertices <= 32:
                problems.append(f"MAHLER_MAX_VERTICES={self.max_vertices} outside [3, 32]")
            if self.seed < 0:
                problems.append(f"MAHLER_SEED={self.seed} must be non-negative")
        except ValueError as e:
            problems = [f"unreadable setting: {e}"]

        for problem in problems:
            logger.warning(f"Configuration validation warning: {problem}")
        if not problems:
            logger.debug("Configuration validated successfully")

    @classmethod
    def create_example_env(cls, output_path: str = '.env.example'):
        """
        Create an example .env file.

        Args:
            output_path: Path to save the example file
        """
        example_content = """# Sweep defaults
MAHLER_SEED=7
MAHLER_JOBS=1
MAHLER_MAX_VERTICES=12

# Numerics
MAHLER_TOLERANCE=1e-9
MAHLER_QUAD_TOL=1e-10
MAHLER_QUAD_MAX_DEPTH=40
MAHLER_GOLDEN_TOL=1e-12

# Logging
LOG_LEVEL=INFO
"""
        with open(output_path, 'w') as f:
            f.write(example_content)

        logger.info(f"Example .env file created at: {output_path}")

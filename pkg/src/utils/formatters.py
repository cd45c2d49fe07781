import json
from pathlib import Path
from typing import Any, Dict, List
import logging

import pandas as pd
from tabulate import tabulate

from src.models.certificate import ReductionCertificate
from src.models.lemma import SignClaimReport
from src.models.reports import GoldenReport
from src.models.sweep import SweepRow, SweepSummary

logger = logging.getLogger(__name__)

CSV_COLUMNS = ['id', 'chainDigest', 'product', 'slack', 'terminal']
CSV_HEADER = f"# mahlerrev-sweep v1 columns={','.join(CSV_COLUMNS)}"


class SweepFormatter:
    """Format sweep rows for export."""

    @staticmethod
    def to_frame(rows: List[SweepRow]) -> pd.DataFrame:
        frame = pd.DataFrame([row.to_dict() for row in rows], columns=CSV_COLUMNS)
        return frame.sort_values('id', kind='stable').reset_index(drop=True)

    @staticmethod
    def export_csv(rows: List[SweepRow], output_path: Path):
        """
        Export sweep rows as CSV under a versioned header comment.

        Args:
            rows: One row per sample
            output_path: Path to save CSV file
        """
        try:
            frame = SweepFormatter.to_frame(rows)
            with open(output_path, 'w', newline='', encoding='utf-8') as f:
                f.write(CSV_HEADER + '\n')
                frame.to_csv(f, index=False, float_format='%.17g', lineterminator='\n', na_rep='')

            logger.info(f"Sweep rows exported to: {output_path}")

        except Exception as e:
            logger.error(f"Error exporting sweep rows: {str(e)}")
            raise

    @staticmethod
    def read_csv(path: Path) -> pd.DataFrame:
        """Read a sweep CSV back, skipping the header comment."""
        return pd.read_csv(path, comment='#', dtype={'chainDigest': str, 'terminal': str},
                           keep_default_na=False)


class ReportFormatter:
    """Format reports for files and the console."""

    @staticmethod
    def export_json(data: Dict[str, Any], output_path: Path):
        """
        Export a report dictionary as JSON.

        Args:
            data: JSON-ready dictionary
            output_path: Path to save the JSON file
        """
        try:
            output_path.write_text(json.dumps(data, indent=2) + '\n', encoding='utf-8')
            logger.info(f"Report exported to: {output_path}")

        except Exception as e:
            logger.error(f"Error exporting report: {str(e)}")
            raise

    @staticmethod
    def format_golden_table(report: GoldenReport) -> str:
        rows = [[item.name, f"{item.expected:.12f}", f"{item.actual:.12f}", f"{item.abs_error:.2e}",
                 f"{item.tolerance:.0e}", 'PASS' if item.passed else 'FAIL'] for item in report.items]
        return tabulate(rows, headers=['Item', 'Expected', 'Actual', 'Abs error', 'Tolerance', 'Status'])

    @staticmethod
    def format_claims(report: SignClaimReport) -> str:
        rows = []
        for claim in report.claims:
            argmax = ', '.join(f"{v:.4f}" for v in claim.argmax) if claim.argmax else '-'
            rows.append([claim.name, claim.region, claim.evaluated, claim.violations,
                         f"{claim.max_violation:.2e}", argmax])
        return tabulate(rows, headers=['Claim', 'Region', 'Nodes', 'Violations', 'Max excess', 'At'])

    @staticmethod
    def format_certificate(certificate: ReductionCertificate) -> str:
        rows = [['start', len(certificate.initial.chain), f"{certificate.initial_product:.12f}", '']]
        for step in certificate.steps:
            rows.append([step.kind.value, len(step.chain_after.chain), f"{step.product_after:.12f}",
                         'clamped' if step.clamped else ''])
        table = tabulate(rows, headers=['Step', 'Points', 'Product', 'Note'])
        return f"{table}\n\nTerminal: {certificate.terminal.value}, min product {certificate.min_product:.12f}"

    @staticmethod
    def format_summary(summary: SweepSummary) -> str:
        """
        Format a brief sweep summary for console output.

        Args:
            summary: Aggregated sweep result

        Returns:
            Formatted summary string
        """
        text = f"\n{'=' * 60}\n"
        text += f"  Sweep {summary.mode.value} - Summary\n"
        text += f"{'=' * 60}\n\n"
        text += f"Samples: {summary.samples}\n"
        text += f"Bound: {summary.bound:.12f}\n"
        text += f"Min product: {summary.min_product:.12f}\n"
        text += f"Violations: {summary.violations}\n"
        if summary.argmin_chain:
            text += f"Argmin: {summary.argmin_chain}\n"
        return text

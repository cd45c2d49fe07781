import unittest
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))
from src.sweeps.golden import golden_check
from src.utils.formatters import ReportFormatter


class TestGolden(unittest.TestCase):
    """Tests for the equality-case table."""

    @classmethod
    def setUpClass(cls):
        """Set up one shared report."""
        cls.report = golden_check()

    def test_all_items_pass(self):
        """Test every equality case matches its constant."""
        self.assertEqual(len(self.report.items), 9)
        for item in self.report.items:
            self.assertTrue(item.passed, f"{item.name}: {item.actual} vs {item.expected}")
        self.assertTrue(self.report.all_passed)

    def test_table(self):
        """Test the console table lists every item."""
        table = ReportFormatter.format_golden_table(self.report)
        for item in self.report.items:
            self.assertIn(item.name, table)


if __name__ == '__main__':
    unittest.main()

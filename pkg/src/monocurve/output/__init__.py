"""Report models and writers."""

from monocurve.output.markdown_writer import MarkdownWriter
from monocurve.output.report import ClassificationModel, SweepSummary

__all__ = ["MarkdownWriter", "ClassificationModel", "SweepSummary"]

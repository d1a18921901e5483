"""Markdown output writer."""

from pathlib import Path
from typing import Optional

from jinja2 import Environment, FileSystemLoader

from monocurve.output.report import ClassificationModel, SweepSummary
from monocurve.utils.config import get_templates_dir
from monocurve.utils.logger import get_logger

logger = get_logger()


class MarkdownWriter:
    """Render classification and sweep reports through the report templates."""

    def __init__(self, output_dir: Path, templates_dir: Optional[Path] = None):
        """Initialize markdown writer.

        Args:
            output_dir: Output directory
            templates_dir: Directory holding the report templates
        """
        self.output_dir = output_dir
        self.templates_dir = templates_dir or get_templates_dir() / "report"
        self.env = Environment(
            loader=FileSystemLoader(str(self.templates_dir)),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    def render_classification(self, model: ClassificationModel) -> str:
        template = self.env.get_template("classification.md.j2")
        return template.render(report=model)

    def render_sweep(self, summary: SweepSummary, reports: list[ClassificationModel]) -> str:
        template = self.env.get_template("sweep.md.j2")
        return template.render(summary=summary, reports=reports)

    def _write(self, filename: str, content: str) -> Path:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        output_path = self.output_dir / filename
        output_path.write_text(content, encoding="utf-8")
        logger.info(f"Wrote Markdown to: {output_path}")
        return output_path

    def write_classification(self, model: ClassificationModel, filename: Optional[str] = None) -> Path:
        """Write one classification; the default name is built from A."""
        name = filename or "classification_" + "_".join(str(a) for a in model.generators) + ".md"
        return self._write(name, self.render_classification(model))

    def write_sweep(
        self, summary: SweepSummary, reports: list[ClassificationModel], filename: str = "sweep.md"
    ) -> Path:
        return self._write(filename, self.render_sweep(summary, reports))

import json

import pytest

from monocurve.analysis.classify4 import classify
from monocurve.output.markdown_writer import MarkdownWriter
from monocurve.output.report import ClassificationModel, SweepSummary


@pytest.fixture(scope="module")
def ci_model():
    return ClassificationModel.from_report(classify((14, 21, 10, 25), check_invariants=True))


def test_json_uses_short_keys(ci_model):
    data = json.loads(ci_model.to_json())
    assert data["A"] == [14, 21, 10, 25]
    assert data["case"] == "2c"
    assert data["I"] == ["x1*x2 - x3*x4"]
    assert data["R"] == []
    assert data["mu_IA"] == 3
    assert data["betti"] == [[35, 1], [42, 1], [50, 1]]
    assert list(data) == sorted(data)


def test_json_round_trip(ci_model):
    again = ClassificationModel.from_json(ci_model.to_json())
    assert again == ci_model
    assert again.to_json() == ci_model.to_json()


def test_tail_alternatives_use_one_based_names():
    model = ClassificationModel.from_report(classify((6, 8, 17, 19), check_invariants=False))
    assert model.tail_alternatives["x4"] == ["x1*x2^4", "x1^5*x2"]
    assert model.tail_alternatives["x3"] == ["x1^3*x2^2"]


def test_markdown_classification(ci_model, tmp_path):
    writer = MarkdownWriter(tmp_path)
    text = writer.render_classification(ci_model)
    assert text.startswith("# Classification of A = (14, 21, 10, 25)")
    assert "`x1*x2 - x3*x4`" in text
    assert "| 35 | 1 |" in text

    path = writer.write_classification(ci_model)
    assert path.name == "classification_14_21_10_25.md"
    assert path.read_text(encoding="utf-8") == text


def test_sweep_summary_and_markdown(ci_model, tmp_path):
    summary = SweepSummary(count=1, seed=7, min_value=3, max_value=30, unique=1, cases={"2c": 1})
    assert summary.clean
    assert not summary.model_copy(update={"errors": ["(1, 2, 3, 4): boom"]}).clean

    path = MarkdownWriter(tmp_path).write_sweep(summary, [ci_model])
    text = path.read_text(encoding="utf-8")
    assert "# Sweep of 1 quadruples" in text
    assert "| (14, 21, 10, 25) | 2c | 3 | yes |" in text

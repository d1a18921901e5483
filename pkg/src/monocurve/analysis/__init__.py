"""Fiber graphs, critical binomials and the classification of curves in 4-space."""

from monocurve.analysis.classify4 import ClassificationReport, classify, decompose_minimal_system
from monocurve.analysis.critical import CaseLabel, classify_critical_case
from monocurve.analysis.fibergraph import FiberGraph, fiber_graph, minimal_generating_set

__all__ = [
    "ClassificationReport",
    "classify",
    "decompose_minimal_system",
    "CaseLabel",
    "classify_critical_case",
    "FiberGraph",
    "fiber_graph",
    "minimal_generating_set",
]

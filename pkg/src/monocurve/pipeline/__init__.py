"""Batch sweeps over random quadruples."""

from monocurve.pipeline.sweep import SweepConfig, SweepOrchestrator

__all__ = ["SweepOrchestrator", "SweepConfig"]

"""Random sweeps over quadruples with the differential checks."""

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import Iterator, Optional

from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn

from monocurve.algebra.semigroup import critical_exponents
from monocurve.analysis.classify4 import check_report, classify
from monocurve.analysis.critical import circuit, circuit_in_reduced_gb, circuit_indispensable
from monocurve.output.report import ClassificationModel, SweepSummary
from monocurve.utils.config import Settings, get_settings
from monocurve.utils.errors import ComputationRejected, MonocurveError
from monocurve.utils.logger import console, get_logger

logger = get_logger()

Quadruple = tuple[int, int, int, int]


@dataclass
class SweepConfig:
    """Sweep configuration."""

    min_value: int = 3
    max_value: int = 60
    count: int = 100
    seed: int = 0
    workers: int = 1
    out_path: Optional[Path] = None
    check_circuits: bool = True

    @classmethod
    def from_settings(cls, settings: Settings, **overrides: object) -> "SweepConfig":
        values = settings.sweep.model_dump()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass
class InstanceResult:
    A: Quadruple
    model: Optional[ClassificationModel] = None
    circuit_disagreements: int = 0
    violation: Optional[str] = None
    error: Optional[str] = None


@dataclass
class SweepState:
    """Sweep execution state."""

    current_stage: str = "initialized"
    results: list[InstanceResult] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    uniqueness_disagreements: int = 0
    mu_ca_violations: int = 0
    circuit_disagreements: int = 0
    gorenstein_violations: int = 0

    @property
    def reports(self) -> list[ClassificationModel]:
        return [r.model for r in self.results if r.model is not None]


def sample_quadruples(config: SweepConfig) -> list[Quadruple]:
    """``count`` quadruples drawn uniformly from [min_value, max_value]^4, gcd 1 only.

    The generator is Python's Mersenne Twister seeded with ``seed``; each draw
    is four ``randint`` calls, so equal seeds give equal lists everywhere.
    """
    if config.min_value < 1 or config.max_value < config.min_value:
        raise ComputationRejected(f"bad sampling range [{config.min_value}, {config.max_value}]")
    if config.min_value == config.max_value and config.min_value != 1:
        raise ComputationRejected(f"no quadruple with gcd 1 in [{config.min_value}, {config.max_value}]")
    rng = random.Random(config.seed)
    out: list[Quadruple] = []
    while len(out) < config.count:
        A = tuple(rng.randint(config.min_value, config.max_value) for _ in range(4))
        if gcd(*A) == 1:
            out.append(A)  # type: ignore[arg-type]
    return out


def _circuit_disagreements(A: Quadruple) -> int:
    """Pairs where the two circuit tests disagree or an indispensable circuit misses (c_i, c_j)."""
    c = critical_exponents(A)
    misses = 0
    for i in range(4):
        for j in range(i + 1, 4):
            indispensable = circuit_indispensable(A, i, j)
            if indispensable != circuit_in_reduced_gb(A, i, j):
                misses += 1
            elif indispensable:
                f = circuit(A, i, j)
                if (f.lhs[i], f.rhs[j]) != (c[i], c[j]):
                    misses += 1
    return misses


def run_instance(A: Quadruple, check_circuits: bool = True) -> InstanceResult:
    """Classify one quadruple; failures are recorded, not raised."""
    result = InstanceResult(A)
    try:
        report = classify(A, check_invariants=False)
        result.model = ClassificationModel.from_report(report)
        try:
            check_report(report)
        except MonocurveError as e:
            result.violation = str(e)
        if check_circuits:
            result.circuit_disagreements = _circuit_disagreements(A)
    except MonocurveError as e:
        result.error = f"{A}: {e}"
    return result


class SweepOrchestrator:
    """Classify a batch of random quadruples and tally the differential checks."""

    def __init__(self, config: SweepConfig, settings: Optional[Settings] = None):
        """Initialize sweep orchestrator.

        Args:
            config: Sweep configuration
            settings: Application settings
        """
        self.config = config
        self.settings = settings or get_settings()
        self.state = SweepState()

    def _results(self, quadruples: list[Quadruple]) -> Iterator[InstanceResult]:
        checks = [self.config.check_circuits] * len(quadruples)
        if self.config.workers > 1:
            with ProcessPoolExecutor(max_workers=self.config.workers) as pool:
                yield from pool.map(run_instance, quadruples, checks)
        else:
            yield from map(run_instance, quadruples, checks)

    def _tally(self, result: InstanceResult) -> None:
        self.state.results.append(result)
        if result.error:
            self.state.errors.append(result.error)
            logger.warning(result.error)
            return
        model = result.model
        assert model is not None
        if model.unique != model.exact_unique:
            self.state.uniqueness_disagreements += 1
        if model.mu_ca > 4:
            self.state.mu_ca_violations += 1
        if min(model.c) > 1 and model.gorenstein and model.mu_ia != 3 and not model.unique:
            self.state.gorenstein_violations += 1
        self.state.circuit_disagreements += result.circuit_disagreements
        if result.violation:
            self.state.errors.append(f"{result.A}: {result.violation}")
            logger.warning(f"{result.A}: {result.violation}")

    def run(self) -> SweepState:
        """Run the sweep, writing JSON lines in input order when ``out_path`` is set."""
        self.state.current_stage = "sampling"
        quadruples = sample_quadruples(self.config)
        logger.info(
            f"Sweeping {len(quadruples)} quadruples in [{self.config.min_value}, "
            f"{self.config.max_value}] (seed {self.config.seed}, {self.config.workers} worker(s))"
        )

        self.state.current_stage = "classifying"
        progress = Progress(
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=console,
            transient=True,
        )
        with progress:
            task = progress.add_task("Classifying", total=len(quadruples))
            for result in self._results(quadruples):
                self._tally(result)
                progress.advance(task)

        if self.config.out_path is not None:
            self.state.current_stage = "writing"
            self.write_jsonl(self.config.out_path)

        self.state.current_stage = "done"
        logger.info(f"Sweep finished: {len(self.state.reports)} classified, {len(self.state.errors)} problem(s)")
        return self.state

    def write_jsonl(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = [model.to_json() for model in self.state.reports]
        path.write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")
        logger.info(f"Wrote {len(lines)} reports to: {path}")
        return path

    def summary(self) -> SweepSummary:
        reports = self.state.reports
        return SweepSummary(
            count=len(self.state.results),
            seed=self.config.seed,
            min_value=self.config.min_value,
            max_value=self.config.max_value,
            unique=sum(m.unique for m in reports),
            complete_intersections=sum(m.complete_intersection for m in reports),
            gorenstein=sum(m.gorenstein for m in reports),
            cases=dict(sorted(Counter(m.case for m in reports).items())),
            uniqueness_disagreements=self.state.uniqueness_disagreements,
            mu_ca_violations=self.state.mu_ca_violations,
            circuit_disagreements=self.state.circuit_disagreements,
            gorenstein_violations=self.state.gorenstein_violations,
            errors=list(self.state.errors),
        )

"""Serializable classification reports."""

import json
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from monocurve.algebra.exponents import format_binomial, format_monomial
from monocurve.analysis.classify4 import ClassificationReport


class ClassificationModel(BaseModel):
    """The JSON form of a ClassificationReport.

    Binomials and monomials are strings in the x1^2*x2 grammar; variables are
    numbered in the caller's order, the permutation is 0-based.
    """

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    generators: list[int] = Field(alias="A")
    permutation: list[int]
    c: list[int]
    case: str
    s_system: list[str] = Field(alias="S")
    i_system: list[str] = Field(alias="I")
    r_system: list[str] = Field(alias="R")
    mu_ia: int = Field(alias="mu_IA")
    mu_ca: int = Field(alias="mu_CA")
    unique: bool
    critical_unique: bool
    exact_unique: bool
    gorenstein: bool
    complete_intersection: bool
    betti: list[tuple[int, int]]
    tail_alternatives: dict[str, list[str]] = Field(default_factory=dict)
    bresinsky_form: Optional[list[int]] = None
    r_reading_sensitive: bool = False
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: ClassificationReport) -> "ClassificationModel":
        return cls(
            generators=list(report.A),
            permutation=list(report.permutation),
            c=list(report.c),
            case=report.label,
            s_system=[format_binomial(f) for f in report.S],
            i_system=[format_binomial(f) for f in report.I],
            r_system=[format_binomial(f) for f in report.R],
            mu_ia=report.mu_IA,
            mu_ca=report.mu_CA,
            unique=report.unique,
            critical_unique=report.critical_unique,
            exact_unique=report.exact_unique,
            gorenstein=report.gorenstein,
            complete_intersection=report.complete_intersection,
            betti=list(report.betti),
            tail_alternatives={
                f"x{i + 1}": [format_monomial(v) for v in tails]
                for i, tails in sorted(report.tail_alternatives.items())
            },
            bresinsky_form=list(report.bresinsky_form) if report.bresinsky_form else None,
            r_reading_sensitive=report.r_reading_sensitive,
            notes=list(report.notes),
        )

    def to_json(self) -> str:
        """Canonical JSON: sorted keys, no whitespace."""
        return json.dumps(self.model_dump(by_alias=True, mode="json"), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "ClassificationModel":
        return cls.model_validate_json(text)


class SweepSummary(BaseModel):
    """Counters of a sweep; every disagreement count is expected to be zero."""

    count: int
    seed: int
    min_value: int
    max_value: int
    unique: int = 0
    complete_intersections: int = 0
    gorenstein: int = 0
    cases: dict[str, int] = Field(default_factory=dict)
    uniqueness_disagreements: int = 0
    mu_ca_violations: int = 0
    circuit_disagreements: int = 0
    gorenstein_violations: int = 0
    errors: list[str] = Field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not (
            self.uniqueness_disagreements
            or self.mu_ca_violations
            or self.circuit_disagreements
            or self.gorenstein_violations
            or self.errors
        )

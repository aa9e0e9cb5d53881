"""
Verdict labels, check results and report rendering.

Checks return small report objects with a ``verdict`` and a ``to_dict()``
payload; a suite collects them into :class:`CheckResult` cells keyed by
``(condition, H, K, generator, seed)`` and renders them through Jinja2
templates.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader

DOMAINS = ["reports", "verdicts"]

PASS = "PASS"
FAIL = "FAIL"
EVIDENCE_PASS = "EVIDENCE_PASS"
EVIDENCE_FAIL = "EVIDENCE_FAIL"
NONEXACT = "NONEXACT"

VERDICTS = (PASS, FAIL, EVIDENCE_PASS, EVIDENCE_FAIL, NONEXACT)
POSITIVE_VERDICTS = frozenset({PASS, EVIDENCE_PASS})


def is_positive(verdict: str) -> bool:
    return verdict in POSITIVE_VERDICTS


@dataclass
class CheckResult:
    """One cell of a check matrix."""

    condition: str
    verdict: str
    H: str = ""  # noqa: N815
    K: str = ""  # noqa: N815
    generator: str = ""
    seed: int | None = None
    evidence: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def key(self) -> tuple[str, str, str, str, int]:
        return (self.condition, self.H, self.K, self.generator, -1 if self.seed is None else self.seed)

    @property
    def passed(self) -> bool:
        return is_positive(self.verdict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "condition": self.condition,
            "H": self.H,
            "K": self.K,
            "generator": self.generator,
            "seed": self.seed,
            "verdict": self.verdict,
            "evidence": self.evidence,
            "notes": list(self.notes),
        }


@dataclass
class SuiteReport:
    """All cells of a check run, ordered by cell key."""

    model: str
    group: str
    trunc: int
    results: list[CheckResult] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.results = sorted(self.results, key=lambda r: r.key)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def first_failure(self) -> CheckResult | None:
        return next((r for r in self.results if not r.passed), None)

    @property
    def budget_exhausted(self) -> bool:
        """Whether the only non-positive cells are the ones that ran out of search budget."""
        failing = [r for r in self.results if not r.passed]
        return bool(failing) and all(r.evidence.get("budget_exceeded") for r in failing)

    def counts(self) -> dict[str, int]:
        tally = dict.fromkeys(VERDICTS, 0)
        for r in self.results:
            tally[r.verdict] = tally.get(r.verdict, 0) + 1
        return tally

    def to_dict(self) -> dict[str, Any]:
        failure = self.first_failure
        return {
            "model": self.model,
            "group": self.group,
            "trunc": self.trunc,
            "passed": self.passed,
            "budget_exhausted": self.budget_exhausted,
            "counts": self.counts(),
            "first_failure": failure.to_dict() if failure else None,
            "results": [r.to_dict() for r in self.results],
        }


class ReportRenderer:
    """Text rendering of reports using the templates shipped with the package."""

    def __init__(self) -> None:
        template_dir = Path(__file__).parent / "templates"
        self._jinja_env = Environment(
            loader=FileSystemLoader(str(template_dir)),
            trim_blocks=True,
            lstrip_blocks=True,
        )

    @property
    def jinja_env(self) -> Environment:
        """Public read-only access to the Jinja environment."""
        return self._jinja_env

    def render_suite(self, report: SuiteReport) -> str:
        template = self._jinja_env.get_template("suite_report.txt.j2")
        return str(template.render(report=report.to_dict()))

    def render_homology(self, name: str, payload: dict[str, Any]) -> str:
        template = self._jinja_env.get_template("homology.txt.j2")
        return str(template.render(name=name, homology=payload))

    def render_summary(self, title: str, payload: dict[str, Any]) -> str:
        """Generic key/value rendering for single-check reports."""
        template = self._jinja_env.get_template("summary.txt.j2")
        return str(template.render(title=title, items=sorted(payload.items())))

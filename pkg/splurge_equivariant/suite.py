"""
Check-suite matrix runner.

A suite expands a ``CheckSuiteConfig`` into independent cells keyed by
(condition, H, K, generator, seed), evaluates them on a thread pool and
merges the results by key, so the report does not depend on scheduling.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Callable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from . import presheaf
from .bisimp import SegalPrecategory, build_pq, check_sm6, folded_transpose, projective_generator, transpose
from .config import DEFAULT_CONFIG, MODEL_SC, MODEL_SECAT_C, MODEL_SECAT_F, CheckSuiteConfig
from .elmendorf import check_elmendorf_adjunction, fixed_point_diagram
from .equivariant import (
    check_fixed_point_adjunction,
    check_cellularity_1,
    check_cellularity_2,
    check_cellularity_2_scat,
    check_cellularity_3,
    replay_two_squares,
)
from .exceptions import SplurgeEquivariantSearchBudgetExceededError
from .file_utils import JsonDocumentReader
from .fingroup import FiniteGroup, FSubgroupFamily, Subgroup, group_by_name, group_from_json
from .generators import Generator, generating_cofibrations
from .random_objects import (
    KIND_PRECAT,
    MODEL_KINDS,
    random_attach,
    random_chain,
    random_gobject,
    random_sset,
    random_value,
)
from .reports import EVIDENCE_PASS, FAIL, NONEXACT, PASS, CheckResult, SuiteReport
from .scat import UK, point_scategory
from .simpset import boundary, standard_simplex
from .utils import derive_seed

DOMAINS = ["suite", "check"]

_LOGGER = logging.getLogger(__name__)

COND_1 = "cellularity-1"
COND_2 = "cellularity-2"
COND_3 = "cellularity-3"
ADJUNCTION = "adjunction"
PQ_IDENTITY = "pq-identity"
SM6 = "sm6"
ORBIT_ADJUNCTION = "orbit-adjunction"

P1N_NOTE = (
    "P_{1,n} is the defining pushout; it agrees with the transpose of Δ[n] for n = 0 "
    "and with two copies of it glued along the vertices for n >= 1"
)

Outcome = tuple[str, dict[str, Any], list[str]]


@dataclass(frozen=True)
class SuiteCell:
    """One independent unit of work in the check matrix."""

    condition: str
    H: str  # noqa: N815
    K: str  # noqa: N815
    generator: str
    seed: int | None
    run: Callable[[], Outcome]

    def evaluate(self) -> CheckResult:
        try:
            verdict, evidence, notes = self.run()
        except SplurgeEquivariantSearchBudgetExceededError as e:
            _LOGGER.warning(f"Cell {self.condition} {self.H} {self.K} {self.generator} ran out of budget: {e.message}")
            verdict, evidence, notes = NONEXACT, {"budget_exceeded": True}, [e.message]
        return CheckResult(self.condition, verdict, self.H, self.K, self.generator, self.seed, evidence, notes)


def load_group(spec: str) -> FiniteGroup:
    """
    A built-in group by name, or a group table from a JSON file.

    Raises:
        SplurgeEquivariantValueError: If the name is unknown
        SplurgeEquivariantParsingError: If the JSON file is malformed
    """
    if spec.endswith(".json"):
        return group_from_json(JsonDocumentReader().read(spec), name=Path(spec).stem)
    return group_by_name(spec)


def resolve_family(G: FiniteGroup, family: str | list[list[str]]) -> FSubgroupFamily:
    """
    Raises:
        SplurgeEquivariantConfigurationError: If a member list is not a subgroup
    """
    if family == "all":
        return FSubgroupFamily.all_subgroups(G)
    return FSubgroupFamily.from_member_lists(G, family)  # type: ignore[arg-type]


def _outcome(report: Any) -> Outcome:
    payload = report.to_dict()
    payload.pop("verdict", None)
    notes = list(payload.pop("notes", []))
    return report.verdict, payload, notes


class CheckSuite:
    """The check matrix for one model structure, group and subgroup family."""

    def __init__(self, config: CheckSuiteConfig, *, group: FiniteGroup | None = None) -> None:
        """
        Args:
            config: Validated suite configuration
            group: Preloaded group; loaded from ``config.group`` when omitted

        Raises:
            SplurgeEquivariantConfigurationError: If the family is invalid, or lacks the
                trivial subgroup while the orbit comparison is requested
        """
        config.validate()
        self._config = config
        self._group = group or load_group(config.group)
        self._family = resolve_family(self._group, config.family)
        if config.orbit_comparison:
            self._family.require_trivial()
        self._kind = MODEL_KINDS[config.model]
        self._generators = generating_cofibrations(config.model, min(config.max_dim, config.trunc), config.trunc)
        self._logger = logging.getLogger(__name__)

    @property
    def group(self) -> FiniteGroup:
        return self._group

    @property
    def family(self) -> FSubgroupFamily:
        return self._family

    def _rng(self, *key: Any) -> random.Random:
        return random.Random(derive_seed(self._config.seed, *key))

    def cells(self) -> Iterator[SuiteCell]:
        """Every cell of the matrix, in key order of construction."""
        cfg = self._config
        seeds = range(cfg.seeds)
        for H in self._family:
            for K in self._family:
                for gen in self._generators:
                    yield SuiteCell(COND_3, H.label(), K.label(), gen.name, None, self._cond3(K, H, gen))
                    for s in seeds:
                        yield SuiteCell(COND_2, H.label(), K.label(), gen.name, s, self._cond2(K, H, gen, s))
            for s in seeds:
                yield SuiteCell(COND_1, H.label(), "", "", s, self._cond1(H, s))
                yield SuiteCell(ADJUNCTION, H.label(), "", "", s, self._adjunction(H, s))
        if cfg.model in (MODEL_SECAT_C, MODEL_SECAT_F):
            for n in range(cfg.trunc):
                yield SuiteCell(PQ_IDENTITY, "", "", f"P1,{n}", None, self._p1n(n))
            for m in range(2, cfg.trunc + 1):
                for n in range(cfg.trunc + 1 - m):
                    yield SuiteCell(PQ_IDENTITY, "", "", f"i{m},{n}", None, self._pq_square(m, n))
            for s in seeds:
                yield SuiteCell(SM6, "", "", "", s, self._sm6(s))
        if cfg.orbit_comparison:
            for s in seeds:
                yield SuiteCell(ORBIT_ADJUNCTION, "", "", "", s, self._orbit(s))

    def run(self, *, workers: int | None = None) -> SuiteReport:
        """
        Evaluate every cell; results are ordered by cell key.

        Args:
            workers: Thread count (defaults to the library configuration)
        """
        cells = list(self.cells())
        count = workers or DEFAULT_CONFIG.workers
        self._logger.info(f"Running {len(cells)} cells for {self._config.model} over {self._group.name}")
        if count > 1:
            with ThreadPoolExecutor(max_workers=count) as pool:
                results = list(pool.map(SuiteCell.evaluate, cells))
        else:
            results = [cell.evaluate() for cell in cells]
        report = SuiteReport(self._config.model, self._group.name, self._config.trunc, results)
        self._logger.info(f"Suite finished: {report.counts()}")
        return report

    # Cells

    def _cond3(self, K: Subgroup, H: Subgroup, gen: Generator) -> Callable[[], Outcome]:
        def run() -> Outcome:
            trunc = self._config.trunc
            if gen.model == MODEL_SC:
                A = point_scategory(trunc) if gen.is_object else UK(boundary(gen.cell_dim or 0, trunc))
            else:
                A = gen.morphism.target  # type: ignore[union-attr]
            # (G/K)^H ⊗ A -> (G/K ⊗ A)^H
            return _outcome(check_cellularity_3(self._group, K, H, A))

        return run

    def _cond2(self, K: Subgroup, H: Subgroup, gen: Generator, s: int) -> Callable[[], Outcome]:
        def run() -> Outcome:
            cfg, G = self._config, self._group
            rng = self._rng(COND_2, H.label(), K.label(), gen.name, s)
            X = random_gobject(rng, G, self._kind, cfg.trunc)
            if gen.model == MODEL_SC:
                if gen.is_object:
                    return _outcome(check_cellularity_2_scat(G, K, H, X, budget=cfg.attach_budget))
                source = UK(boundary(gen.cell_dim or 0, cfg.trunc))
                X, functor = random_attach(rng, G, K, source, X, budget=cfg.budget, attach_budget=cfg.attach_budget)
                report = check_cellularity_2_scat(
                    G, K, H, X, dim=gen.cell_dim, attach=functor, budget=cfg.attach_budget
                )
                return _outcome(report)
            generator = gen.morphism
            X, attach = random_attach(rng, G, K, generator.source, X, budget=cfg.budget)  # type: ignore[union-attr]
            if gen.square is not None:
                return _outcome(replay_two_squares(G, K, H, gen.square, attach, X))
            return _outcome(check_cellularity_2(G, K, H, generator, attach, X))  # type: ignore[arg-type]

        return run

    def _cond1(self, H: Subgroup, s: int) -> Callable[[], Outcome]:
        def run() -> Outcome:
            rng = self._rng(COND_1, H.label(), s)
            chain = random_chain(rng, self._group, self._kind, self._config.trunc)
            return _outcome(check_cellularity_1(self._group, H, chain))

        return run

    def _adjunction(self, H: Subgroup, s: int) -> Callable[[], Outcome]:
        def run() -> Outcome:
            rng = self._rng(ADJUNCTION, H.label(), s)
            A = random_value(rng, self._kind, self._config.trunc)
            B = random_gobject(rng, self._group, self._kind, self._config.trunc, pieces=1)
            return _outcome(check_fixed_point_adjunction(self._group, H, A, B, budget=self._config.budget))

        return run

    def _p1n(self, n: int) -> Callable[[], Outcome]:
        def run() -> Outcome:
            trunc, budget = self._config.trunc, self._config.budget
            P = build_pq(1, n, trunc).P
            simplex_t = transpose(standard_simplex(n, trunc))
            as_transpose = presheaf.find_isomorphism(P, simplex_t, budget=budget) is not None
            as_folded = presheaf.find_isomorphism(P, folded_transpose(n, trunc), budget=budget) is not None
            expected = as_transpose if n == 0 else as_folded and not as_transpose
            evidence = {"transpose": as_transpose, "folded": as_folded, "n": n}
            return (PASS if expected else FAIL), evidence, [P1N_NOTE]

        return run

    def _pq_square(self, m: int, n: int) -> Callable[[], Outcome]:
        def run() -> Outcome:
            pq = build_pq(m, n, self._config.trunc)
            commutes = pq.i_mn.compose(pq.p_leg).key == pq.q_leg.compose(pq.projective).key
            same_generator = pq.projective.key == projective_generator(m, n, self._config.trunc).key
            reduced = isinstance(pq.P, SegalPrecategory) and isinstance(pq.Q, SegalPrecategory)
            evidence = {"commutes": commutes, "projective_generator": same_generator, "precategories": reduced}
            return (PASS if commutes and same_generator and reduced else FAIL), evidence, []

        return run

    def _sm6(self, s: int) -> Callable[[], Outcome]:
        def run() -> Outcome:
            rng = self._rng(SM6, s)
            trunc = self._config.trunc
            X = random_value(rng, KIND_PRECAT, trunc)
            K = random_sset(rng, trunc, max_dim=1)
            Y = random_value(rng, KIND_PRECAT, trunc)
            return _outcome(check_sm6(X, K, Y, budget=self._config.budget))

        return run

    def _orbit(self, s: int) -> Callable[[], Outcome]:
        def run() -> Outcome:
            rng = self._rng(ORBIT_ADJUNCTION, s)
            G, trunc = self._group, self._config.trunc
            X = random_gobject(rng, G, self._kind, trunc, pieces=1)
            F = fixed_point_diagram(random_gobject(rng, G, self._kind, trunc, pieces=1))
            report = check_elmendorf_adjunction(X, F, budget=self._config.budget)
            verdict, payload, notes = _outcome(report)
            # The Kan extension is strict; a positive result is evidence for the derived statement.
            return (EVIDENCE_PASS if verdict == PASS else verdict), payload, notes

        return run


def run_suite(config: CheckSuiteConfig, *, workers: int | None = None) -> SuiteReport:
    """Build and run the suite for a configuration."""
    return CheckSuite(config).run(workers=workers)

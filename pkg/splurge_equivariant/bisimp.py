"""
Finite truncated bisimplicial sets (simplicial spaces).

Cells ``X_{m,n}`` are indexed by a horizontal level ``m`` (the space-level
direction, operators ``dh``/``sh``) and a vertical level ``n`` (operators
``dv``/``sv``). The simplicial set ``W_m`` of a simplicial space is the vertical
slice at horizontal level ``m``.

This module holds the Segal and completeness checks, Segal precategories and
their reduction, the generating maps of the Reedy and projective structures,
the P/Q constructions, the comparison functors to simplicial sets, and the
mapping space, tensor and cotensor.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Hashable, Sequence
from dataclasses import dataclass, field
from typing import Any

from . import presheaf
from .categories import FiniteCategory, walking_isomorphism
from .exceptions import (
    SplurgeEquivariantSegalFailureError,
    SplurgeEquivariantStructureError,
    SplurgeEquivariantValueError,
)
from .homology import map_evidence
from .presheaf import (
    BiSimplexShape,
    Cocone,
    Cone,
    Presheaf,
    PresheafMap,
    SimplexShape,
    find_isomorphism,
    hom_set,
    identity,
    iter_maps,
    map_from_empty,
    pullback,
    pushout,
)
from .reports import EVIDENCE_FAIL, EVIDENCE_PASS, FAIL, PASS
from .simpset import (
    TruncSSet,
    boundary_inclusion,
    discrete_sset,
    nerve,
    pi0,
    simplex_operator,
    sset_from_elements,
    standard_simplex,
)
from .utils import InputValidator

DOMAINS = ["bisimplicial", "segal", "reduction"]

_LOGGER = logging.getLogger(__name__)

BiMap = PresheafMap


@dataclass(frozen=True, eq=False)
class TruncBiSSet(Presheaf):
    """An N-truncated bisimplicial set; levels are ``(m, n)`` with m horizontal."""

    def cells(self, m: int, n: int) -> range:
        return range(self.sizes[(m, n)])

    def cell_count(self, m: int, n: int) -> int:
        return self.sizes[(m, n)]

    def dh(self, i: int, m: int, n: int, x: int) -> int:
        return self.structure[("dh", i, (m, n))][x]

    def sh(self, i: int, m: int, n: int, x: int) -> int:
        return self.structure[("sh", i, (m, n))][x]

    def dv(self, i: int, m: int, n: int, x: int) -> int:
        return self.structure[("dv", i, (m, n))][x]

    def sv(self, i: int, m: int, n: int, x: int) -> int:
        return self.structure[("sv", i, (m, n))][x]

    def grid(self) -> list[list[int]]:
        """Cell counts as ``grid[m][n]``."""
        N = self.trunc
        return [[self.sizes[(m, n)] for n in range(N + 1)] for m in range(N + 1)]

    def horizontal_vertex(self, m: int, n: int, x: int, i: int) -> int:
        """The ``i``-th horizontal vertex of a cell, a cell of ``X_{0,n}``."""
        return keep_horizontal(self, m, n, x, (i,))

    def vertical_vertex(self, m: int, n: int, x: int) -> int:
        """The vertical vertex 0 of a cell, a cell of ``X_{m,0}``."""
        for level in range(n, 0, -1):
            x = self.dv(level, m, level, x)
        return x

    def total_vertical_degeneracy(self, m: int, n: int, x: int) -> int:
        """``sv_0^n`` applied to a cell of ``X_{m,0}``."""
        for level in range(n):
            x = self.sv(0, m, level, x)
        return x

    def total_horizontal_degeneracy(self, m: int, n: int, x: int) -> int:
        """``sh_0^m`` applied to a cell of ``X_{0,n}``."""
        for level in range(m):
            x = self.sh(0, level, n, x)
        return x


@dataclass(frozen=True, eq=False)
class SegalPrecategory(TruncBiSSet):
    """A simplicial space whose level-0 simplicial set is discrete."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for n in range(self.trunc):
            table = self.structure[("sv", 0, (0, n))]
            if len(set(table)) != self.sizes[(0, n + 1)]:
                raise SplurgeEquivariantStructureError(
                    f"Level-0 space is not discrete: sv_0 at (0,{n}) is not a bijection",
                    details={"level": [0, n]},
                )


def keep_horizontal(X: TruncBiSSet, m: int, n: int, x: int, keep: Sequence[int]) -> int:
    """Restrict a cell of ``X_{m,n}`` to the horizontal vertices in ``keep`` by deleting the others."""
    level = m
    for v in sorted(set(range(m + 1)) - set(keep), reverse=True):
        x = X.dh(v, level, n, x)
        level -= 1
    return x


def bisset(  # type: ignore[no-untyped-def]
    trunc: int, sizes, structure, labels, *, kind: type[TruncBiSSet] = TruncBiSSet
) -> TruncBiSSet:
    return presheaf.make_like(kind, BiSimplexShape(trunc), sizes, structure, labels)


def as_precategory(X: TruncBiSSet) -> SegalPrecategory:
    """
    Re-type a bisimplicial set as a Segal precategory.

    Raises:
        SplurgeEquivariantStructureError: If the level-0 space is not discrete
    """
    if isinstance(X, SegalPrecategory):
        return X
    return presheaf.make_like(SegalPrecategory, X.shape, X.sizes, X.structure, X.labels)


def is_precategory(X: TruncBiSSet) -> bool:
    try:
        as_precategory(X)
    except SplurgeEquivariantStructureError:
        return False
    return True


def empty_bisset(trunc: int, *, kind: type[TruncBiSSet] = SegalPrecategory) -> TruncBiSSet:
    return presheaf.empty_like(BiSimplexShape(trunc), kind)


def terminal_bisset(trunc: int) -> SegalPrecategory:
    return presheaf.terminal_like(BiSimplexShape(trunc), SegalPrecategory)


def const_space(K: TruncSSet) -> TruncBiSSet:
    """The constant simplicial space: every slice is K, horizontal operators are identities."""
    N = K.trunc
    shape = BiSimplexShape(N)
    sizes, structure, labels = {}, {}, {}
    for m, n in shape.levels():
        sizes[(m, n)] = K.size((n,))
        labels[(m, n)] = K.labels[(n,)]
    for op in shape.operators:
        m, n = op.source
        if op.family in ("dh", "sh"):
            structure[op.key] = tuple(range(K.size((n,))))
        else:
            structure[op.key] = K.structure[(op.family[0], op.index, (n,))]
    kind = SegalPrecategory if _is_discrete(K) else TruncBiSSet
    return bisset(N, sizes, structure, labels, kind=kind)


def transpose(K: TruncSSet) -> SegalPrecategory:
    """The levelwise-discrete simplicial space with ``X_{m,n} = K_m``."""
    N = K.trunc
    shape = BiSimplexShape(N)
    sizes, structure, labels = {}, {}, {}
    for m, n in shape.levels():
        sizes[(m, n)] = K.size((m,))
        labels[(m, n)] = K.labels[(m,)]
    for op in shape.operators:
        m, n = op.source
        if op.family in ("dv", "sv"):
            structure[op.key] = tuple(range(K.size((m,))))
        else:
            structure[op.key] = K.structure[(op.family[0], op.index, (m,))]
    return bisset(N, sizes, structure, labels, kind=SegalPrecategory)  # type: ignore[return-value]


def _is_discrete(K: TruncSSet) -> bool:
    return all(len(set(K.structure[("s", 0, (n,))])) == K.size((n + 1,)) for n in range(K.trunc))


def const_map(f: PresheafMap, source: TruncBiSSet | None = None, target: TruncBiSSet | None = None) -> BiMap:
    """``const_space`` applied to a simplicial map."""
    src = source or const_space(f.source)  # type: ignore[arg-type]
    tgt = target or const_space(f.target)  # type: ignore[arg-type]
    return PresheafMap(src, tgt, {(m, n): f.components[(n,)] for m, n in src.shape.levels()})


def transpose_map(f: PresheafMap, source: TruncBiSSet | None = None, target: TruncBiSSet | None = None) -> BiMap:
    """``transpose`` applied to a simplicial map."""
    src = source or transpose(f.source)  # type: ignore[arg-type]
    tgt = target or transpose(f.target)  # type: ignore[arg-type]
    return PresheafMap(src, tgt, {(m, n): f.components[(m,)] for m, n in src.shape.levels()})


def vertical_slice(X: TruncBiSSet, m: int) -> TruncSSet:
    """The simplicial set ``X_m`` (horizontal level m, vertical structure)."""
    N = X.trunc
    InputValidator.in_range(m, 0, N, "horizontal level")
    shape = SimplexShape(N)
    structure = {}
    for op in shape.operators:
        (n,) = op.source
        structure[op.key] = X.structure[(op.family + "v", op.index, (m, n))]
    return presheaf.make_like(
        TruncSSet,
        shape,
        {(n,): X.sizes[(m, n)] for n in range(N + 1)},
        structure,
        {(n,): X.labels[(m, n)] for n in range(N + 1)},
    )


def horizontal_row(X: TruncBiSSet, n: int) -> TruncSSet:
    """The simplicial set ``m ↦ X_{m,n}`` with the horizontal structure."""
    N = X.trunc
    InputValidator.in_range(n, 0, N, "vertical level")
    shape = SimplexShape(N)
    structure = {}
    for op in shape.operators:
        (m,) = op.source
        structure[op.key] = X.structure[(op.family + "h", op.index, (m, n))]
    return presheaf.make_like(
        TruncSSet,
        shape,
        {(m,): X.sizes[(m, n)] for m in range(N + 1)},
        structure,
        {(m,): X.labels[(m, n)] for m in range(N + 1)},
    )


def row0(X: TruncBiSSet) -> TruncSSet:
    return horizontal_row(X, 0)


def p_star(W: TruncBiSSet) -> TruncSSet:
    """Level m is ``(W_m)_0``; the comparison from complete Segal spaces to quasi-categories."""
    return horizontal_row(W, 0)


def j_star(X: TruncBiSSet) -> TruncSSet:
    """Level m is ``(X_m)_0``; the comparison from Segal precategories to quasi-categories."""
    return horizontal_row(X, 0)


def slice_operator(X: TruncBiSSet, family: str, i: int, m: int, source: TruncSSet, target: TruncSSet) -> PresheafMap:
    """A horizontal operator ``dh_i``/``sh_i`` out of slice m as a simplicial map between slices."""
    return PresheafMap(source, target, {(n,): X.structure[(family, i, (m, n))] for n in range(X.trunc + 1)})


def diagonal(X: TruncBiSSet) -> TruncSSet:
    """Level n is ``X_{n,n}``; ``d_i = dh_i dv_i`` and ``s_i = sh_i sv_i``."""
    N = X.trunc
    shape = SimplexShape(N)
    structure = {}
    for op in shape.operators:
        (n,) = op.source
        if op.family == "d":
            first = X.structure[("dv", op.index, (n, n))]
            second = X.structure[("dh", op.index, (n, n - 1))]
        else:
            first = X.structure[("sv", op.index, (n, n))]
            second = X.structure[("sh", op.index, (n, n + 1))]
        structure[op.key] = tuple(second[y] for y in first)
    return presheaf.make_like(
        TruncSSet,
        shape,
        {(n,): X.sizes[(n, n)] for n in range(N + 1)},
        structure,
        {(n,): X.labels[(n, n)] for n in range(N + 1)},
    )


def total(X: TruncBiSSet) -> TruncSSet:
    """
    The codiagonal (Artin–Mazur total simplicial set).

    An n-simplex is a tuple ``(x_0, ..., x_n)`` with ``x_i ∈ X_{i,n-i}`` and
    ``dv_0 x_i = dh_{i+1} x_{i+1}``. Faces and degeneracies:

    - ``d_j x = (dv_j x_0, ..., dv_1 x_{j-1}, dh_j x_{j+1}, ..., dh_j x_n)``
    - ``s_j x = (sv_j x_0, ..., sv_0 x_j, sh_j x_j, ..., sh_j x_n)``
    """
    N = X.trunc
    elements: dict[int, list[tuple[int, ...]]] = {}
    for n in range(N + 1):
        by_face: dict[tuple[int, int], list[int]] = {}
        for i in range(n):
            for x in X.cells(i, n - i):
                by_face.setdefault((i, X.dv(0, i, n - i, x)), []).append(x)
        tuples: list[tuple[int, ...]] = [(x,) for x in X.cells(n, 0)]
        for i in range(n - 1, -1, -1):
            tuples = [
                (x,) + t for t in tuples for x in by_face.get((i, X.dh(i + 1, i + 1, n - i - 1, t[0])), ())
            ]
        elements[n] = sorted(tuples)

    def face(j: int, n: int, t: tuple[int, ...]) -> tuple[int, ...]:
        front = tuple(X.dv(j - i, i, n - i, t[i]) for i in range(j))
        back = tuple(X.dh(j, i, n - i, t[i]) for i in range(j + 1, n + 1))
        return front + back

    def degen(j: int, n: int, t: tuple[int, ...]) -> tuple[int, ...]:
        front = tuple(X.sv(j - i, i, n - i, t[i]) for i in range(j + 1))
        back = tuple(X.sh(j, i, n - i, t[i]) for i in range(j, n + 1))
        return front + back

    return sset_from_elements(N, elements, face=face, degen=degen)


# Segal maps


def spine_edge_map(W: TruncBiSSet, k: int, j: int, source: TruncSSet, target: TruncSSet) -> PresheafMap:
    """The map ``W_k -> W_1`` picking the spine edge between horizontal vertices ``j-1`` and ``j``."""
    return PresheafMap(
        source,
        target,
        {(n,): tuple(keep_horizontal(W, k, n, x, (j - 1, j)) for x in W.cells(k, n)) for n in range(W.trunc + 1)},
    )


@dataclass(frozen=True)
class SegalMap:
    """The Segal map ``W_k -> W_1 ×_{W_0} ... ×_{W_0} W_1`` with its target cone."""

    k: int
    source: TruncSSet
    fiber_product: TruncSSet
    map: PresheafMap
    projections: tuple[PresheafMap, ...]


def segal_map(W: TruncBiSSet, k: int) -> SegalMap:
    """
    Build the iterated fiber product of k copies of ``W_1`` over ``W_0`` and the Segal map.

    Raises:
        SplurgeEquivariantValueError: If ``k`` is outside ``1..trunc``
    """
    InputValidator.in_range(k, 1, W.trunc, "Segal index")
    w0, w1, wk = vertical_slice(W, 0), vertical_slice(W, 1), vertical_slice(W, k)
    start = slice_operator(W, "dh", 1, 1, w1, w0)
    end = slice_operator(W, "dh", 0, 1, w1, w0)
    edges = [spine_edge_map(W, k, j, wk, w1) for j in range(1, k + 1)]
    apex: TruncSSet = w1
    projections = [identity(w1)]
    segal = edges[0]
    last_end = end
    for j in range(1, k):
        cone = pullback(last_end, start, kind=TruncSSet)
        segal = cone.induced(wk, [segal, edges[j]])
        projections = [p.compose(cone.legs[0]) for p in projections] + [cone.legs[1]]
        last_end = end.compose(cone.legs[1])
        apex = cone.apex  # type: ignore[assignment]
    return SegalMap(k, wk, apex, segal, tuple(projections))


@dataclass
class SegalReport:
    """Exact and evidence-level comparison of a Segal map."""

    k: int
    isomorphism: bool
    pi0_bijection: bool
    homology_agreement: list[bool] = field(default_factory=list)
    source_sizes: list[int] = field(default_factory=list)
    target_sizes: list[int] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if self.isomorphism:
            return PASS
        if self.pi0_bijection and all(self.homology_agreement):
            return EVIDENCE_PASS
        return FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "verdict": self.verdict,
            "isomorphism": self.isomorphism,
            "pi0_bijection": self.pi0_bijection,
            "homology_agreement": self.homology_agreement,
            "source_sizes": self.source_sizes,
            "target_sizes": self.target_sizes,
        }


def segal_check(W: TruncBiSSet, k: int) -> SegalReport:
    """
    Compare ``W_k`` with the k-fold fiber product exactly and by π0/homology.

    Raises:
        SplurgeEquivariantValueError: If ``k`` is outside ``2..trunc``
    """
    InputValidator.in_range(k, 2, W.trunc, "Segal index")
    built = segal_map(W, k)
    pi0_ok, agreement = map_evidence(built.map)
    N = W.trunc
    report = SegalReport(
        k,
        built.map.is_isomorphism(),
        pi0_ok,
        agreement,
        [built.source.size((n,)) for n in range(N + 1)],
        [built.fiber_product.size((n,)) for n in range(N + 1)],
    )
    _LOGGER.debug(f"Segal check k={k}: {report.verdict}")
    return report


def is_segal_category(X: TruncBiSSet, max_k: int | None = None) -> tuple[bool, list[SegalReport]]:
    """Whether X is a Segal precategory whose Segal maps pass (exactly or on evidence) up to ``max_k``."""
    top = min(max_k or X.trunc, X.trunc)
    reports = [segal_check(X, k) for k in range(2, top + 1)]
    ok = is_precategory(X) and all(r.verdict in (PASS, EVIDENCE_PASS) for r in reports)
    return ok, reports


# Mapping spaces


def product_with(X: TruncBiSSet, K: TruncSSet) -> Cone:
    """``X × const_space(K)``."""
    return presheaf.product(X, const_space(K), kind=TruncBiSSet)


def _coface(b: int, i: int) -> tuple[int, ...]:
    return tuple(v for v in range(b + 1) if v != i)


def _codegeneracy(b: int, i: int) -> tuple[int, ...]:
    return tuple(v if v <= i else v - 1 for v in range(b + 2))


@dataclass(frozen=True)
class MappingSpace:
    """``Map(X, Y)`` together with the products ``X × const Δ[b]`` and hom lists behind its simplices."""

    space: TruncSSet
    cones: tuple[Cone, ...]
    homs: tuple[tuple[PresheafMap, ...], ...]

    def index(self, b: int) -> dict[tuple[tuple[int, ...], ...], int]:
        return {h.key: i for i, h in enumerate(self.homs[b])}


def _const_simplex_move(cones: Sequence[Cone], f: tuple[int, ...], b: int, target_b: int, trunc: int) -> BiMap:
    """``id × const(f): X × Δ[target_b] -> X × Δ[b]`` for a monotone ``f: [target_b] -> [b]``."""
    lower, upper = cones[target_b], cones[b]
    cmap = const_map(simplex_operator(f, b, trunc))
    return upper.induced(lower.apex, [lower.legs[0], cmap.compose(lower.legs[1])])


def mapping_space_data(X: TruncBiSSet, Y: TruncBiSSet, *, budget: int | None = None) -> MappingSpace:
    """
    ``Map(X, Y)_b = hom(X × const Δ[b], Y)``; faces and degeneracies precompose with ``id × const(δ, σ)``.

    Raises:
        SplurgeEquivariantSearchBudgetExceededError: If a hom enumeration exceeds the budget
    """
    N = presheaf.require_same_shape(X, Y).trunc
    cones = tuple(product_with(X, standard_simplex(b, N)) for b in range(N + 1))
    homs = tuple(tuple(hom_set(cone.apex, Y, budget=budget)) for cone in cones)
    index = [{h.key: i for i, h in enumerate(hs)} for hs in homs]
    shape = SimplexShape(N)
    structure = {}
    for op in shape.operators:
        (b,) = op.source
        if op.family == "d":
            f, target_b = _coface(b, op.index), b - 1
        else:
            f, target_b = _codegeneracy(b, op.index), b + 1
        move = _const_simplex_move(cones, f, b, target_b, N)
        structure[op.key] = tuple(index[target_b][h.compose(move).key] for h in homs[b])
    sizes = {(b,): len(homs[b]) for b in range(N + 1)}
    space = presheaf.make_like(TruncSSet, shape, sizes, structure, {})
    return MappingSpace(space, cones, homs)


def mapping_space(X: TruncBiSSet, Y: TruncBiSSet, *, budget: int | None = None) -> TruncSSet:
    return mapping_space_data(X, Y, budget=budget).space


def precomposition(g: BiMap, source: MappingSpace, target: MappingSpace) -> PresheafMap:
    """``g^*: Map(X, Y) -> Map(X', Y)`` for ``g: X' -> X``."""
    comps = {}
    for b, (big, small) in enumerate(zip(source.cones, target.cones, strict=True)):
        move = big.induced(small.apex, [g.compose(small.legs[0]), small.legs[1]])
        index = target.index(b)
        comps[(b,)] = tuple(index[h.compose(move).key] for h in source.homs[b])
    return PresheafMap(source.space, target.space, comps)


@dataclass
class CompletenessReport:
    """Evidence comparison of ``W_0 -> Map(E^t, W)``; never a verdict on completeness."""

    isomorphism: bool
    pi0_bijection: bool
    homology_agreement: list[bool]
    source_pi0: int
    target_pi0: int
    label: str = "EVIDENCE"

    @property
    def verdict(self) -> str:
        return EVIDENCE_PASS if self.pi0_bijection and all(self.homology_agreement) else EVIDENCE_FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "verdict": self.verdict,
            "isomorphism": self.isomorphism,
            "pi0_bijection": self.pi0_bijection,
            "homology_agreement": self.homology_agreement,
            "source_pi0": self.source_pi0,
            "target_pi0": self.target_pi0,
        }


def walking_isomorphism_space(trunc: int) -> SegalPrecategory:
    """E^t, the transpose of the nerve of the walking isomorphism."""
    return transpose(nerve(walking_isomorphism(), trunc))


def completeness_evidence(W: TruncBiSSet, *, budget: int | None = None) -> CompletenessReport:
    """
    Compare ``W_0 ≅ Map(Δ[0]^t, W)`` with ``Map(E^t, W)`` along precomposition with ``E^t -> Δ[0]^t``.

    The result is labelled EVIDENCE: W need not be Reedy fibrant.
    """
    N = W.trunc
    Et = walking_isomorphism_space(N)
    point = terminal_bisset(N)
    source = mapping_space_data(point, W, budget=budget)
    target = mapping_space_data(Et, W, budget=budget)
    comparison = precomposition(presheaf.map_to_terminal(Et, point), source, target)
    pi0_ok, agreement = map_evidence(comparison)
    report = CompletenessReport(
        comparison.is_isomorphism(), pi0_ok, agreement, len(pi0(source.space)), len(pi0(target.space))
    )
    _LOGGER.info(f"Completeness evidence: {report.verdict} (pi0 {report.source_pi0} vs {report.target_pi0})")
    return report


# Reduction


@dataclass(frozen=True)
class Reduction:
    """``X_r`` with its unit ``X -> X_r`` and the collapse of ``X_0`` onto its components."""

    source: TruncBiSSet
    cocone: Cocone
    components: tuple[int, ...]
    """Component index of each vertex of ``X_{0,0}``"""
    representatives: tuple[int, ...]
    """One vertex of ``X_{0,0}`` per component"""

    @property
    def reduced(self) -> SegalPrecategory:
        return self.cocone.apex  # type: ignore[return-value]

    @property
    def unit(self) -> BiMap:
        return self.cocone.legs[0]

    def extend(self, h: BiMap) -> BiMap:
        """
        The map ``X_r -> Z`` through which ``h: X -> Z`` factors (Z a Segal precategory).

        Raises:
            SplurgeEquivariantValueError: If h does not collapse the components of ``X_0``
        """
        X = self.source
        collapse = {}
        for m, n in X.shape.levels():
            row = []
            for v in self.representatives:
                cell = X.total_horizontal_degeneracy(m, n, X.total_vertical_degeneracy(0, n, v))
                row.append(h((m, n), cell))
            collapse[(m, n)] = tuple(row)
        points = self.cocone.legs[1].source
        return self.cocone.induced(h.target, [h, PresheafMap(points, h.target, collapse)])


def _zero_space_inclusion(X: TruncBiSSet) -> tuple[BiMap, TruncSSet]:
    """``const(X_0) -> X`` by total horizontal degeneracy."""
    x0 = vertical_slice(X, 0)
    c = const_space(x0)
    comps = {
        (m, n): tuple(X.total_horizontal_degeneracy(m, n, x) for x in range(X.sizes[(0, n)]))
        for m, n in X.shape.levels()
    }
    return PresheafMap(c, X, comps), x0


def reduction(X: TruncBiSSet) -> Reduction:
    """
    The levelwise pushout ``X ⊔_{const X_0} const π0(X_0)``.

    Each connected component of the space ``X_0`` is collapsed to a point.
    """
    inclusion, x0 = _zero_space_inclusion(X)
    components = pi0(x0)
    points = const_space(discrete_sset(list(range(len(components))), X.trunc))
    collapse = PresheafMap(
        inclusion.source,
        points,
        {
            (m, n): tuple(components.component_of[x0.vertex(n, x, 0)] for x in range(x0.size((n,))))
            for m, n in X.shape.levels()
        },
    )
    cocone = pushout(inclusion, collapse, kind=SegalPrecategory)
    reps = tuple(cls[0] for cls in components.classes)
    _LOGGER.debug(f"Reduced {X.describe()} to {cocone.apex.describe()}")
    return Reduction(X, cocone, components.component_of, reps)


def reduce(X: TruncBiSSet) -> SegalPrecategory:
    """The reduction ``X_r``, left adjoint to the inclusion of Segal precategories."""
    return reduction(X).reduced


def reduce_map(f: BiMap) -> BiMap:
    """Functorial action of reduction: ``X_r -> Y_r``."""
    source = reduction(f.source)  # type: ignore[arg-type]
    target = reduction(f.target)  # type: ignore[arg-type]
    return source.extend(target.unit.compose(f))


@dataclass
class UniversalPropertyReport:
    """Precomposition with a unit as a bijection of hom-sets."""

    reduced_count: int
    original_count: int
    bijective: bool

    @property
    def verdict(self) -> str:
        return PASS if self.bijective else FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "reduced_count": self.reduced_count,
            "original_count": self.original_count,
        }


def check_reduce_universal(
    X: TruncBiSSet, Y: SegalPrecategory, *, budget: int | None = None
) -> UniversalPropertyReport:
    """Verify that ``h ↦ h ∘ unit`` is a bijection ``hom(X_r, Y) -> hom(X, Y)``."""
    red = reduction(X)
    reduced = hom_set(red.reduced, Y, budget=budget)
    original = {h.key for h in hom_set(X, Y, budget=budget)}
    images = {h.compose(red.unit).key for h in reduced}
    return UniversalPropertyReport(len(reduced), len(original), images == original and len(images) == len(reduced))


def coreflect(X: TruncBiSSet) -> Cone:
    """
    The largest Segal sub-precategory of X; the single leg is the inclusion.

    A cell is kept when each of its horizontal vertices is a total vertical
    degeneracy of a vertex of ``X_{0,0}``.
    """

    def keep(level: tuple[int, ...], x: int) -> bool:
        m, n = level
        for i in range(m + 1):
            v = X.horizontal_vertex(m, n, x, i)
            if X.total_vertical_degeneracy(0, n, X.vertical_vertex(0, n, v)) != v:
                return False
        return True

    return presheaf.restrict(X, keep, kind=SegalPrecategory)


# Generators and the P/Q constructions


def _inclusion_product(inner: PresheafMap, small: Cone, large: Cone) -> BiMap:
    """``const(inner) × id_T`` between two products with T."""
    cmap = const_map(inner, small.legs[0].target, large.legs[0].target)  # type: ignore[arg-type]
    return large.induced(small.apex, [cmap.compose(small.legs[0]), small.legs[1]])


def projective_generator(m: int, n: int, trunc: int) -> BiMap:
    """``∂Δ[m] × Δ[n]^t -> Δ[m] × Δ[n]^t``."""
    T = transpose(standard_simplex(n, trunc))
    inclusion = boundary_inclusion(m, trunc)
    small = presheaf.product(const_space(inclusion.source), T, kind=TruncBiSSet)  # type: ignore[arg-type]
    large = presheaf.product(const_space(inclusion.target), T, kind=TruncBiSSet)  # type: ignore[arg-type]
    return _inclusion_product(inclusion, small, large)


def reedy_generator(m: int, n: int, trunc: int) -> BiMap:
    """
    ``∂Δ[m] × Δ[n]^t ∪ Δ[m] × ∂Δ[n]^t -> Δ[m] × Δ[n]^t``.

    The union is the pushout of the two pieces over their intersection.
    """
    InputValidator.non_negative(m, "m")
    InputValidator.non_negative(n, "n")
    dm = boundary_inclusion(m, trunc)
    dn = boundary_inclusion(n, trunc)
    Dm, Tn = const_space(dm.target), transpose(dn.target)  # type: ignore[arg-type]
    big = presheaf.product(Dm, Tn, kind=TruncBiSSet)
    left = presheaf.product(const_space(dm.source), Tn, kind=TruncBiSSet)  # type: ignore[arg-type]
    right = presheaf.product(Dm, transpose(dn.source), kind=TruncBiSSet)  # type: ignore[arg-type]
    left_in = big.induced(left.apex, [const_map(dm, left.legs[0].target, Dm).compose(left.legs[0]), left.legs[1]])
    right_in = big.induced(
        right.apex, [right.legs[0], transpose_map(dn, right.legs[1].target, Tn).compose(right.legs[1])]
    )
    meet = pullback(left_in, right_in, kind=TruncBiSSet)
    union = pushout(meet.legs[0], meet.legs[1], kind=TruncBiSSet)
    return union.induced(big.apex, [left_in, right_in])


@dataclass(frozen=True)
class PQConstruction:
    """P_{m,n}, Q_{m,n}, the induced map and the projective generator they come from."""

    m: int
    n: int
    projective: BiMap
    p_leg: BiMap
    q_leg: BiMap
    i_mn: BiMap

    @property
    def P(self) -> SegalPrecategory:  # noqa: N802
        return self.p_leg.target  # type: ignore[return-value]

    @property
    def Q(self) -> SegalPrecategory:  # noqa: N802
        return self.q_leg.target  # type: ignore[return-value]


def _vertex_collapse(product_cone: Cone, T0: TruncBiSSet, t0_in: BiMap) -> Cocone:
    """Pushout collapsing ``L × T_0 ⊂ L × T`` onto ``T_0``."""
    L = product_cone.legs[0].target
    zero = presheaf.product(L, T0, kind=TruncBiSSet)
    inclusion = product_cone.induced(zero.apex, [zero.legs[0], t0_in.compose(zero.legs[1])])
    return pushout(inclusion, zero.legs[1], kind=SegalPrecategory)


def vertex_space(n: int, trunc: int) -> tuple[SegalPrecategory, SegalPrecategory, BiMap]:
    """``Δ[n]^t``, its vertex part ``Δ[n]^t_0`` and the inclusion by total degeneracy."""
    simplex = standard_simplex(n, trunc)
    T = transpose(simplex)
    T0 = transpose(discrete_sset(list(simplex.labels[(0,)]), trunc))
    comps = {
        (a, b): tuple(T.index_of((a, b), label * (a + 1)) for label in T0.labels[(a, b)])
        for a, b in T.shape.levels()
    }
    return T, T0, PresheafMap(T0, T, comps)


def build_pq(m: int, n: int, trunc: int) -> PQConstruction:
    """
    Both pushouts of the P/Q construction and the induced ``i_{m,n}: P -> Q``.

    ``P_{0,n}`` is empty; otherwise P collapses ``∂Δ[m] × Δ[n]^t_0`` and Q
    collapses ``Δ[m] × Δ[n]^t_0`` onto ``Δ[n]^t_0``.
    """
    InputValidator.non_negative(m, "m")
    InputValidator.non_negative(n, "n")
    T, T0, t0_in = vertex_space(n, trunc)
    inclusion = boundary_inclusion(m, trunc)
    small = presheaf.product(const_space(inclusion.source), T, kind=TruncBiSSet)  # type: ignore[arg-type]
    large = presheaf.product(const_space(inclusion.target), T, kind=TruncBiSSet)  # type: ignore[arg-type]
    projective = _inclusion_product(inclusion, small, large)
    q = _vertex_collapse(large, T0, t0_in)
    if m == 0:
        empty = empty_bisset(trunc)
        p_leg = PresheafMap(small.apex, empty, {})
        i_mn = map_from_empty(empty, q.apex)
    else:
        p = _vertex_collapse(small, T0, t0_in)
        p_leg = p.legs[0]
        i_mn = p.induced(q.apex, [q.legs[0].compose(projective), q.legs[1]])
    _LOGGER.debug(f"P/Q construction ({m},{n}): {p_leg.target.describe()} -> {q.apex.describe()}")
    return PQConstruction(m, n, projective, p_leg, q.legs[0], i_mn)


def build_P(m: int, n: int, trunc: int) -> SegalPrecategory:  # noqa: N802
    return build_pq(m, n, trunc).P


def build_Q(m: int, n: int, trunc: int) -> SegalPrecategory:  # noqa: N802
    return build_pq(m, n, trunc).Q


def i_mn(m: int, n: int, trunc: int) -> BiMap:
    return build_pq(m, n, trunc).i_mn


def folded_transpose(n: int, trunc: int) -> SegalPrecategory:
    """Two copies of ``Δ[n]^t`` glued along ``Δ[n]^t_0``, the pushout the fold-map rewriting of P_{1,n} yields."""
    _, _, t0_in = vertex_space(n, trunc)
    return pushout(t0_in, t0_in, kind=SegalPrecategory).apex  # type: ignore[return-value]


# Tensor, cotensor and the SM6 triangle


def tensor(X: SegalPrecategory, K: TruncSSet) -> SegalPrecategory:
    """``X ⊗ K = (X × const K)_r``."""
    return reduce(product_with(X, K).apex)  # type: ignore[arg-type]


def cotensor(Y: TruncBiSSet, K: TruncSSet, *, budget: int | None = None) -> SegalPrecategory:
    """
    ``(Y^K)_{a,b} = hom(K × Δ[b], Y_a)``.

    Horizontal operators postcompose with the slice maps of Y; vertical
    operators precompose with ``id_K × δ`` and ``id_K × σ``.

    Raises:
        SplurgeEquivariantStructureError: If the level-0 space of the result is not discrete
    """
    N = presheaf.require_same_shape(Y, const_space(K)).trunc
    slices = [vertical_slice(Y, a) for a in range(N + 1)]
    cones = [presheaf.product(K, standard_simplex(b, N), kind=TruncSSet) for b in range(N + 1)]
    homs = {(a, b): hom_set(cones[b].apex, slices[a], budget=budget) for a in range(N + 1) for b in range(N + 1)}
    index = {level: {h.key: i for i, h in enumerate(hs)} for level, hs in homs.items()}
    shape = BiSimplexShape(N)
    structure = {}
    for op in shape.operators:
        a, b = op.source
        ta, tb = op.target
        maps = homs[(a, b)]
        if op.family in ("dh", "sh"):
            post = slice_operator(Y, op.family, op.index, a, slices[a], slices[ta])
            structure[op.key] = tuple(index[(ta, tb)][post.compose(h).key] for h in maps)
        else:
            f = _coface(b, op.index) if op.family == "dv" else _codegeneracy(b, op.index)
            op_map = simplex_operator(f, b, N)
            move = cones[b].induced(cones[tb].apex, [cones[tb].legs[0], op_map.compose(cones[tb].legs[1])])
            structure[op.key] = tuple(index[(ta, tb)][h.compose(move).key] for h in maps)
    sizes = {level: len(hs) for level, hs in homs.items()}
    return presheaf.make_like(SegalPrecategory, shape, sizes, structure, {})


@dataclass
class TriangleReport:
    """Hom cardinalities of the tensor / mapping-space / cotensor adjunctions."""

    tensor_side: int
    mapping_side: int
    cotensor_side: int

    @property
    def verdict(self) -> str:
        return PASS if self.tensor_side == self.mapping_side == self.cotensor_side else FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "tensor_side": self.tensor_side,
            "mapping_side": self.mapping_side,
            "cotensor_side": self.cotensor_side,
        }


def check_sm6(X: SegalPrecategory, K: TruncSSet, Y: SegalPrecategory, *, budget: int | None = None) -> TriangleReport:
    """Compare ``|hom(X ⊗ K, Y)|``, ``|hom(K, Map(X, Y))|`` and ``|hom(X, Y^K)|``."""
    return TriangleReport(
        presheaf.count_maps(tensor(X, K), Y, budget=budget),
        presheaf.count_maps(K, mapping_space(X, Y, budget=budget), budget=budget),
        presheaf.count_maps(X, cotensor(Y, K, budget=budget), budget=budget),
    )


# Segal precategory mapping spaces and the homotopy category


def precat_mapping_space(X: TruncBiSSet, x: int, y: int) -> TruncSSet:
    """
    The fiber of ``(d_1, d_0): X_1 -> X_0 × X_0`` over the vertices ``(x, y)``.

    Raises:
        SplurgeEquivariantValueError: If x or y is not a vertex
    """
    for v in (x, y):
        if not 0 <= v < X.sizes[(0, 0)]:
            raise SplurgeEquivariantValueError(f"Vertex {v} out of range")
    w1 = vertical_slice(X, 1)

    def over(level: tuple[int, ...], e: int) -> bool:
        (n,) = level
        src = X.vertical_vertex(0, n, X.dh(1, 1, n, e))
        tgt = X.vertical_vertex(0, n, X.dh(0, 1, n, e))
        return src == x and tgt == y

    return presheaf.restrict(w1, over).apex  # type: ignore[return-value]


def ho_category(X: TruncBiSSet, *, seed: int | None = None) -> FiniteCategory:
    """
    The homotopy category of a Segal precategory.

    Objects are the vertices; morphisms ``x -> y`` are the components of the
    mapping space; composition is read off 2-cells. Every representative
    2-cell is checked, so the table does not depend on a chosen section.

    Args:
        X: Segal precategory with π0-bijective Segal maps for k = 2, 3
        seed: Optional shuffle of the order in which representatives are visited

    Raises:
        SplurgeEquivariantSegalFailureError: If the Segal maps are not π0-bijective
            or composition is not well defined
    """
    for k in range(2, min(3, X.trunc) + 1):
        report = segal_check(X, k)
        if not report.pi0_bijection:
            raise SplurgeEquivariantSegalFailureError(
                f"Segal map at k={k} is not a bijection on components", details={"k": k}
            )
    n_obj = X.sizes[(0, 0)]
    morphisms: list[tuple[int, int, int]] = []
    class_of: dict[int, int] = {}
    for x in range(n_obj):
        for y in range(n_obj):
            fiber = precat_mapping_space(X, x, y)
            comps = pi0(fiber)
            base = len(morphisms)
            morphisms.extend((x, y, c) for c in range(len(comps)))
            for label_index, edge_label in enumerate(fiber.labels[(0,)]):
                class_of[X.index_of((1, 0), edge_label)] = base + comps.component_of[label_index]
    identities = [class_of[X.sh(0, 0, 0, x)] for x in range(n_obj)]
    order = list(X.cells(2, 0))
    if seed is not None:
        random.Random(seed).shuffle(order)
    table: dict[tuple[int, int], int] = {}
    for sigma in order:
        first = class_of[X.dh(2, 2, 0, sigma)]
        second = class_of[X.dh(0, 2, 0, sigma)]
        composite = class_of[X.dh(1, 2, 0, sigma)]
        previous = table.setdefault((second, first), composite)
        if previous != composite:
            raise SplurgeEquivariantSegalFailureError("Composition in the homotopy category is not well defined")
    for f, (x, y, _) in enumerate(morphisms):
        for g, (y2, _z, _) in enumerate(morphisms):
            if y2 == y and (g, f) not in table:
                raise SplurgeEquivariantSegalFailureError("A composable pair has no composing 2-cell")
    labels: list[Hashable] = [
        (X.label((0, 0), x), X.label((0, 0), y), c) for x, y, c in morphisms
    ]
    return FiniteCategory(
        tuple(X.label((0, 0), x) for x in range(n_obj)),
        tuple(labels),
        tuple(x for x, _, _ in morphisms),
        tuple(y for _, y, _ in morphisms),
        tuple(identities),
        table,
    )


def categories_isomorphic(C: FiniteCategory, D: FiniteCategory) -> bool:
    """Exhaustive isomorphism test of small categories via their nerves at level 2."""
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return False
    return find_isomorphism(nerve(C, 2), nerve(D, 2)) is not None


@dataclass
class CornerReport:
    """Level 0 of the pullback-corner map: squares from i to p and how many admit lifts."""

    squares: int
    liftable: int

    @property
    def surjective(self) -> bool:
        return self.squares == self.liftable

    @property
    def verdict(self) -> str:
        return PASS if self.surjective else FAIL

    def to_dict(self) -> dict[str, Any]:
        return {"verdict": self.verdict, "squares": self.squares, "liftable": self.liftable}


def pullback_corner(i: PresheafMap, p: PresheafMap, *, budget: int | None = None) -> CornerReport:
    """
    Whether every commutative square from ``i: A -> B`` to ``p: X -> Y`` has a diagonal lift.

    This is level 0 of ``Map(B,X) -> Map(A,X) ×_{Map(A,Y)} Map(B,Y)``.
    """
    squares = 0
    liftable = 0
    lifts = {(p.compose(h).key, h.compose(i).key) for h in iter_maps(i.target, p.source, budget=budget)}
    bottoms = hom_set(i.target, p.target, budget=budget)
    for top in iter_maps(i.source, p.source, budget=budget):
        pa = p.compose(top).key
        for bottom in bottoms:
            if bottom.compose(i).key != pa:
                continue
            squares += 1
            if (bottom.key, top.key) in lifts:
                liftable += 1
    return CornerReport(squares, liftable)



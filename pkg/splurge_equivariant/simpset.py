"""
Finite truncated simplicial sets.

A :class:`TruncSSet` stores every simplex up to its truncation level together
with total face and degeneracy tables. Standard objects (simplices, boundaries,
horns, nerves, circles) are built with labelled simplices so that maps between
them can be written down by label.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Hashable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Any

import networkx as nx

from . import presheaf
from .categories import FiniteCategory, walking_isomorphism
from .exceptions import SplurgeEquivariantValueError
from .presheaf import (
    Cocone,
    Cone,
    Operator,
    Presheaf,
    PresheafMap,
    SimplexShape,
    coequalizer,
    coproduct,
    equalizer,
    find_isomorphism,
    generated_subobject,
    hom_set,
    identity,
    iter_maps,
    product,
    pullback,
    pushout,
)
from .utils import InputValidator

DOMAINS = ["simplicial", "nerve", "horn"]

_LOGGER = logging.getLogger(__name__)

SSetMap = PresheafMap

__all__ = [
    "SSetMap",
    "TruncSSet",
    "boundary",
    "boundary_inclusion",
    "chain_colimit",
    "circle",
    "coequalizer",
    "coproduct",
    "discrete_sset",
    "E",
    "empty_sset",
    "equalizer",
    "hom_set",
    "horn",
    "horn_inclusion",
    "identity",
    "is_isomorphic",
    "is_quasicategory",
    "nerve",
    "pi0",
    "point",
    "product",
    "pullback",
    "pushout",
    "simplex_operator",
    "standard_simplex",
    "sub_sset",
    "subdivided_circle",
]


@dataclass(frozen=True, eq=False)
class TruncSSet(Presheaf):
    """An N-truncated simplicial set with all simplices stored explicitly."""

    def level_size(self, n: int) -> int:
        return self.sizes[(n,)]

    def simplices(self, n: int) -> range:
        return range(self.sizes[(n,)])

    def face(self, i: int, n: int, x: int) -> int:
        return self.structure[("d", i, (n,))][x]

    def degen(self, i: int, n: int, x: int) -> int:
        return self.structure[("s", i, (n,))][x]

    def vertex(self, n: int, x: int, i: int) -> int:
        """The ``i``-th vertex of the ``n``-simplex ``x``."""
        for top in range(n, i, -1):
            x = self.face(top, top, x)
        for dim in range(i, 0, -1):
            x = self.face(0, dim, x)
        return x

    def vertices(self, n: int, x: int) -> tuple[int, ...]:
        return tuple(self.vertex(n, x, i) for i in range(n + 1))

    def nondegenerate_simplices(self, n: int) -> tuple[int, ...]:
        return self.nondegenerate((n,))


def sset_from_elements(
    trunc: int,
    elements: Mapping[int, Sequence[Hashable]],
    *,
    face: Callable[[int, int, Any], Hashable],
    degen: Callable[[int, int, Any], Hashable],
) -> TruncSSet:
    """
    Build a truncated simplicial set from labelled simplices.

    Args:
        trunc: Truncation level N
        elements: Labels of the n-simplices for each n in 0..N
        face: ``face(i, n, label)`` is the label of ``d_i`` of an n-simplex
        degen: ``degen(i, n, label)`` is the label of ``s_i`` of an n-simplex
    """
    shape = SimplexShape(trunc)

    def action(op: Operator, label: Hashable) -> Hashable:
        (n,) = op.source
        return face(op.index, n, label) if op.family == "d" else degen(op.index, n, label)

    return presheaf.from_elements(
        TruncSSet, shape, {(n,): list(elements.get(n, ())) for n in range(trunc + 1)}, action
    )


def _delete(t: tuple[Any, ...], i: int) -> tuple[Any, ...]:
    return t[:i] + t[i + 1 :]


def _repeat(t: tuple[Any, ...], i: int) -> tuple[Any, ...]:
    return t[: i + 1] + t[i:]


def standard_simplex(n: int, trunc: int) -> TruncSSet:
    """
    Δ[n]: the k-simplices are the monotone tuples of length k+1 over ``0..n``.

    Examples:
        >>> standard_simplex(1, 2).level_size(1)
        3
    """
    InputValidator.non_negative(n, "simplex dimension")
    InputValidator.non_negative(trunc, "truncation level")
    elements = {k: list(combinations_with_replacement(range(n + 1), k + 1)) for k in range(trunc + 1)}
    return sset_from_elements(trunc, elements, face=lambda i, k, t: _delete(t, i), degen=lambda i, k, t: _repeat(t, i))


def _sub_simplex(n: int, trunc: int, keep: Callable[[Any], bool]) -> Cone:
    simplex = standard_simplex(n, trunc)
    return presheaf.restrict(simplex, lambda level, x: keep(simplex.label(level, x)))


def boundary_inclusion(n: int, trunc: int) -> SSetMap:
    """The inclusion ∂Δ[n] ↪ Δ[n] (the simplices that miss some vertex)."""
    InputValidator.non_negative(n, "simplex dimension")
    full = set(range(n + 1))
    return _sub_simplex(n, trunc, lambda t: set(t) != full).legs[0]


def boundary(n: int, trunc: int) -> TruncSSet:
    """
    ∂Δ[n].

    Examples:
        >>> boundary(1, 2).level_size(0)
        2
    """
    return boundary_inclusion(n, trunc).source  # type: ignore[return-value]


def horn_inclusion(n: int, k: int, trunc: int) -> SSetMap:
    """
    The inclusion V[n,k] ↪ Δ[n]: simplices missing some vertex other than ``k``.

    Raises:
        SplurgeEquivariantValueError: If ``n < 1`` or ``k`` is outside ``0..n``
    """
    InputValidator.in_range(n, 1, 10**6, "horn dimension")
    InputValidator.in_range(k, 0, n, "horn index")
    full = set(range(n + 1))
    return _sub_simplex(n, trunc, lambda t: (set(t) | {k}) != full).legs[0]


def horn(n: int, k: int, trunc: int) -> TruncSSet:
    return horn_inclusion(n, k, trunc).source  # type: ignore[return-value]


def simplex_operator(f: Sequence[int], m: int, trunc: int) -> SSetMap:
    """
    The map Δ[n] -> Δ[m] induced by a monotone function ``f: [n] -> [m]``.

    Raises:
        SplurgeEquivariantValueError: If ``f`` is not monotone or leaves ``[m]``
    """
    f = tuple(f)
    n = len(f) - 1
    if n < 0 or any(not 0 <= v <= m for v in f) or any(a > b for a, b in zip(f, f[1:])):
        raise SplurgeEquivariantValueError(f"Not a monotone map [{n}] -> [{m}]: {list(f)}")
    source = standard_simplex(n, trunc)
    target = standard_simplex(m, trunc)
    comps = {
        (k,): tuple(target.index_of((k,), tuple(f[i] for i in t)) for t in source.labels[(k,)])
        for k in range(trunc + 1)
    }
    return PresheafMap(source, target, comps)


def empty_sset(trunc: int) -> TruncSSet:
    return presheaf.empty_like(SimplexShape(trunc), TruncSSet)


def point(trunc: int) -> TruncSSet:
    """Δ[0], the terminal simplicial set."""
    return standard_simplex(0, trunc)


def discrete_sset(points: Sequence[Hashable], trunc: int) -> TruncSSet:
    """The constant simplicial set on a finite set (every simplex totally degenerate)."""
    pts = list(points)
    return sset_from_elements(
        trunc, {k: pts for k in range(trunc + 1)}, face=lambda i, k, p: p, degen=lambda i, k, p: p
    )


def sub_sset(X: TruncSSet, generators: Sequence[tuple[int, int]]) -> Cone:
    """The simplicial subset generated by ``(dimension, simplex)`` pairs; the leg is the inclusion."""
    return generated_subobject(X, [((n,), x) for n, x in generators])


def subdivided_circle(k: int, trunc: int) -> TruncSSet:
    """
    A circle with ``k`` vertices and ``k`` edges, glued as a finite colimit.

    Raises:
        SplurgeEquivariantValueError: If ``k < 1``
    """
    InputValidator.in_range(k, 1, 10**6, "circle subdivision")
    start = simplex_operator((0,), 1, trunc)
    edge, vertex = start.target, start.source
    end = PresheafMap(vertex, edge, simplex_operator((1,), 1, trunc).components)
    objects: list[Presheaf] = [edge] * k + [vertex] * k
    arrows = []
    for j in range(k):
        arrows.append((k + j, j, end))
        arrows.append((k + j, (j + 1) % k, start))
    return presheaf.colimit(objects, arrows, kind=TruncSSet).apex  # type: ignore[return-value]


def circle(trunc: int) -> TruncSSet:
    """Δ[1]/∂Δ[1]: one vertex and one nondegenerate edge."""
    return subdivided_circle(1, trunc)


def nerve(C: FiniteCategory, trunc: int) -> TruncSSet:
    """
    Ordinary nerve: n-simplices are composable strings ``(f_1, ..., f_n)``.

    Vertices are object indices; higher simplices are tuples of morphism
    indices. ``d_0`` drops the first morphism, ``d_n`` the last, inner faces
    compose neighbours and ``s_i`` inserts the identity at vertex ``i``.

    Examples:
        >>> nerve(walking_isomorphism(), 3).level_size(2)
        8
    """
    InputValidator.non_negative(trunc, "truncation level")
    elements: dict[int, list[Any]] = {0: list(range(len(C.objects)))}
    if trunc >= 1:
        elements[1] = [(f,) for f in range(len(C.morphisms))]
    for n in range(2, trunc + 1):
        elements[n] = [s + (g,) for s in elements[n - 1] for g in C.out_of(C.target[s[-1]])]

    def vertex_at(s: tuple[int, ...], i: int) -> int:
        return C.source[s[i]] if i < len(s) else C.target[s[-1]]

    def face(i: int, n: int, s: Any) -> Any:
        if n == 1:
            return C.target[s[0]] if i == 0 else C.source[s[0]]
        if i == 0:
            return s[1:]
        if i == n:
            return s[:-1]
        return s[: i - 1] + (C.compose(s[i], s[i - 1]),) + s[i + 1 :]

    def degen(i: int, n: int, s: Any) -> Any:
        if n == 0:
            return (C.identities[s],)
        return s[:i] + (C.identities[vertex_at(s, i)],) + s[i:]

    X = sset_from_elements(trunc, elements, face=face, degen=degen)
    _LOGGER.debug(f"Nerve of {C.describe()}: {X.describe()}")
    return X


def E(trunc: int) -> TruncSSet:  # noqa: N802
    """Nerve of the walking isomorphism; ``|E_n| = 2^(n+1)``."""
    return nerve(walking_isomorphism(), trunc)


def chain_colimit(chain: Sequence[SSetMap]) -> Cocone:
    return presheaf.chain_colimit(chain, kind=TruncSSet)


def is_isomorphic(X: TruncSSet, Y: TruncSSet, *, budget: int | None = None) -> SSetMap | None:
    """A levelwise bijective simplicial map ``X -> Y`` if one exists, else None."""
    return find_isomorphism(X, Y, budget=budget)


@dataclass(frozen=True)
class Components:
    """Connected components of a simplicial set."""

    classes: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    exact: bool = True
    """False when the object has no edges stored (truncation 0)"""

    def __len__(self) -> int:
        return len(self.classes)


def pi0(X: TruncSSet) -> Components:
    """
    Vertices modulo the equivalence generated by edges.

    At truncation 0 no edges are stored; the components are the vertices and the
    result is flagged inexact.
    """
    graph = nx.Graph()
    graph.add_nodes_from(X.simplices(0))
    exact = X.trunc >= 1
    if exact:
        graph.add_edges_from((X.face(1, 1, e), X.face(0, 1, e)) for e in X.simplices(1))
    else:
        _LOGGER.warning("pi0 of a 0-truncated simplicial set: components are the vertices")
    classes = tuple(sorted(tuple(sorted(c)) for c in nx.connected_components(graph)))
    component_of = [0] * X.level_size(0)
    for c, members in enumerate(classes):
        for v in members:
            component_of[v] = c
    return Components(classes, tuple(component_of), exact)


def pi0_map(f: SSetMap) -> tuple[int, ...]:
    """The induced function on components."""
    src, tgt = pi0(f.source), pi0(f.target)  # type: ignore[arg-type]
    return tuple(tgt.component_of[f((0,), cls[0])] for cls in src.classes)


@dataclass(frozen=True)
class HornFailure:
    """An inner horn ``V[n,k] -> X`` with no filler."""

    n: int
    k: int
    vertices: tuple[Hashable, ...]
    """Labels of the images of the horn's vertices"""


@dataclass
class QuasicategoryReport:
    """Result of an inner-horn filling check."""

    max_dim: int
    horns_checked: dict[tuple[int, int], int] = field(default_factory=dict)
    failures: list[HornFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_dim": self.max_dim,
            "passed": self.passed,
            "horns_checked": [[n, k, c] for (n, k), c in sorted(self.horns_checked.items())],
            "failures": [{"n": f.n, "k": f.k, "vertices": list(f.vertices)} for f in self.failures],
        }


def is_quasicategory(
    X: TruncSSet, max_dim: int, *, budget: int | None = None, stop_at_first: bool = False
) -> QuasicategoryReport:
    """
    Check inner-horn filling for every ``2 <= n <= max_dim`` and ``0 < k < n``.

    Every map ``V[n,k] -> X`` is enumerated and an extension along
    ``V[n,k] ↪ Δ[n]`` is searched for with the horn fixed.

    Args:
        X: Simplicial set under test
        max_dim: Largest horn dimension (at most ``X.trunc``)
        budget: Search-node budget per enumeration
        stop_at_first: Return as soon as one unfillable horn is found

    Raises:
        SplurgeEquivariantValueError: If ``max_dim`` exceeds the truncation level
    """
    if max_dim > X.trunc:
        raise SplurgeEquivariantValueError(f"max_dim {max_dim} exceeds truncation level {X.trunc}")
    report = QuasicategoryReport(max_dim)
    for n in range(2, max_dim + 1):
        simplex = standard_simplex(n, X.trunc)
        for k in range(1, n):
            inclusion = horn_inclusion(n, k, X.trunc)
            count = 0
            for h in iter_maps(inclusion.source, X, budget=budget):
                count += 1
                fixed = {
                    level: {inclusion.components[level][x]: y for x, y in enumerate(comp)}
                    for level, comp in h.components.items()
                }
                if next(iter_maps(simplex, X, fixed=fixed, budget=budget), None) is None:
                    horn_vertices = tuple(
                        X.label((0,), h((0,), inclusion.source.index_of((0,), (v,)))) for v in range(n + 1)
                    )
                    report.failures.append(HornFailure(n, k, horn_vertices))
                    _LOGGER.info(f"Unfillable horn V[{n},{k}] with vertices {horn_vertices}")
                    if stop_at_first:
                        report.horns_checked[(n, k)] = count
                        return report
            report.horns_checked[(n, k)] = count
    return report

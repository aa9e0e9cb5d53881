"""
Finite presheaves on truncated simplex categories.

Simplicial sets and bisimplicial sets are both presheaves on a finite shape: a
set of levels, a family of face and degeneracy operators between them, and the
simplicial identities relating those operators. This module stores such
presheaves extensionally (every element at every level, with total operator
tables) and computes limits, colimits and hom-sets levelwise.

Elements are integers ``0..size-1`` at each level. Every element also carries a
hashable label that is unique within its level, so constructions can name their
elements (pairs for products, tagged labels for coproducts) and serialization
can round-trip them.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

import logging
import math
from abc import ABC, abstractmethod
from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, TypeVar

import networkx as nx

from .exceptions import (
    SplurgeEquivariantSearchBudgetExceededError,
    SplurgeEquivariantStructureError,
    SplurgeEquivariantValueError,
)
from .config import DEFAULT_CONFIG
from .utils import InputValidator

DOMAINS = ["presheaf", "limits", "colimits", "search"]

_LOGGER = logging.getLogger(__name__)

Level = tuple[int, ...]
OpKey = tuple[str, int, Level]


@dataclass(frozen=True)
class Operator:
    """A structure map between two levels of a shape."""

    family: str
    index: int
    source: Level
    target: Level
    degeneracy: bool

    @property
    def key(self) -> OpKey:
        return (self.family, self.index, self.source)


class Shape(ABC):
    """A finite truncated index category given by levels, operators and relations."""

    def __init__(self, trunc: int) -> None:
        self._trunc = InputValidator.non_negative(trunc, "truncation level")

    @property
    def trunc(self) -> int:
        return self._trunc

    @abstractmethod
    def levels(self) -> tuple[Level, ...]:
        """All levels, ordered by total dimension then lexicographically."""

    @abstractmethod
    def operator(self, family: str, index: int, source: Level) -> Operator | None:
        """The operator with the given family and index out of ``source``, or None if truncated away."""

    @abstractmethod
    def families(self) -> tuple[str, ...]:
        """Operator family names."""

    @abstractmethod
    def relations(self) -> Iterator[tuple[Level, tuple[tuple[str, int], ...], tuple[tuple[str, int], ...]]]:
        """Relations ``(source, path_a, path_b)``: both paths, applied left to right, agree."""

    @cached_property
    def operators(self) -> tuple[Operator, ...]:
        ops: list[Operator] = []
        for level in self.levels():
            for family in self.families():
                index = 0
                while True:
                    op = self.operator(family, index, level)
                    if op is None:
                        break
                    ops.append(op)
                    index += 1
        return tuple(ops)

    @cached_property
    def operators_from(self) -> dict[Level, tuple[Operator, ...]]:
        table: dict[Level, list[Operator]] = {level: [] for level in self.levels()}
        for op in self.operators:
            table[op.source].append(op)
        return {level: tuple(ops) for level, ops in table.items()}

    @cached_property
    def degeneracies_into(self) -> dict[Level, tuple[Operator, ...]]:
        table: dict[Level, list[Operator]] = {level: [] for level in self.levels()}
        for op in self.operators:
            if op.degeneracy:
                table[op.target].append(op)
        return {level: tuple(ops) for level, ops in table.items()}

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self.trunc == other.trunc  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._trunc))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._trunc})"


def _simplicial_relations(
    n: int, trunc: int, face: str, degen: str
) -> Iterator[tuple[tuple[tuple[str, int], ...], tuple[tuple[str, int], ...]]]:
    """Simplicial identities out of level ``n`` for one direction, as operator paths."""
    # d_i d_j = d_{j-1} d_i for i < j: apply d_j then d_i, or d_i then d_{j-1}.
    if n >= 2:
        for j in range(n + 1):
            for i in range(j):
                yield ((face, j), (face, i)), ((face, i), (face, j - 1))
    if n + 1 <= trunc:
        for j in range(n + 1):
            for i in range(n + 2):
                first = (degen, j)
                if i < j:
                    yield (first, (face, i)), ((face, i), (degen, j - 1))
                elif i in (j, j + 1):
                    yield (first, (face, i)), ()
                else:
                    yield (first, (face, i)), ((face, i - 1), (degen, j))
    if n + 2 <= trunc:
        for j in range(n + 1):
            for i in range(j + 1):
                yield ((degen, j), (degen, i)), ((degen, i), (degen, j + 1))


class SimplexShape(Shape):
    """Truncated simplex category: levels ``(n,)`` for ``0 <= n <= trunc``."""

    def levels(self) -> tuple[Level, ...]:
        return tuple((n,) for n in range(self.trunc + 1))

    def families(self) -> tuple[str, ...]:
        return ("d", "s")

    def operator(self, family: str, index: int, source: Level) -> Operator | None:
        (n,) = source
        if index < 0 or index > n:
            return None
        if family == "d":
            return Operator("d", index, source, (n - 1,), False) if n >= 1 else None
        if family == "s":
            return Operator("s", index, source, (n + 1,), True) if n + 1 <= self.trunc else None
        raise SplurgeEquivariantValueError(f"Unknown simplicial operator family: {family}")

    def relations(self) -> Iterator[tuple[Level, tuple[tuple[str, int], ...], tuple[tuple[str, int], ...]]]:
        for n in range(self.trunc + 1):
            for path_a, path_b in _simplicial_relations(n, self.trunc, "d", "s"):
                yield (n,), path_a, path_b


class BiSimplexShape(Shape):
    """Truncated product of two simplex categories: levels ``(m, n)``.

    ``m`` is the horizontal (space-level) index acted on by ``dh``/``sh``;
    ``n`` is the vertical index acted on by ``dv``/``sv``.
    """

    def levels(self) -> tuple[Level, ...]:
        span = range(self.trunc + 1)
        return tuple(sorted(((m, n) for m in span for n in span), key=lambda lv: (lv[0] + lv[1], lv)))

    def families(self) -> tuple[str, ...]:
        return ("dh", "sh", "dv", "sv")

    def operator(self, family: str, index: int, source: Level) -> Operator | None:
        m, n = source
        top = self.trunc
        if family in ("dh", "sh"):
            if index < 0 or index > m:
                return None
            if family == "dh":
                return Operator(family, index, source, (m - 1, n), False) if m >= 1 else None
            return Operator(family, index, source, (m + 1, n), True) if m + 1 <= top else None
        if family in ("dv", "sv"):
            if index < 0 or index > n:
                return None
            if family == "dv":
                return Operator(family, index, source, (m, n - 1), False) if n >= 1 else None
            return Operator(family, index, source, (m, n + 1), True) if n + 1 <= top else None
        raise SplurgeEquivariantValueError(f"Unknown bisimplicial operator family: {family}")

    def relations(self) -> Iterator[tuple[Level, tuple[tuple[str, int], ...], tuple[tuple[str, int], ...]]]:
        top = self.trunc
        for m, n in self.levels():
            for path_a, path_b in _simplicial_relations(m, top, "dh", "sh"):
                yield (m, n), path_a, path_b
            for path_a, path_b in _simplicial_relations(n, top, "dv", "sv"):
                yield (m, n), path_a, path_b
            # Horizontal and vertical operators commute.
            for h_family, h_count in (("dh", m + 1 if m >= 1 else 0), ("sh", m + 1 if m + 1 <= top else 0)):
                for v_family, v_count in (("dv", n + 1 if n >= 1 else 0), ("sv", n + 1 if n + 1 <= top else 0)):
                    for i in range(h_count):
                        for j in range(v_count):
                            yield (m, n), ((h_family, i), (v_family, j)), ((v_family, j), (h_family, i))


@dataclass(frozen=True, eq=False)
class Presheaf:
    """A finite presheaf on a truncated shape, stored with all elements and operator tables."""

    shape: Shape
    sizes: Mapping[Level, int]
    structure: Mapping[OpKey, tuple[int, ...]]
    labels: Mapping[Level, tuple[Hashable, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        sizes = {level: int(self.sizes.get(level, 0)) for level in self.shape.levels()}
        object.__setattr__(self, "sizes", sizes)
        labels = {
            level: tuple(self.labels[level]) if level in self.labels else tuple(range(sizes[level]))
            for level in self.shape.levels()
        }
        object.__setattr__(self, "labels", labels)
        structure = {key: tuple(self.structure.get(key, ())) for key in (op.key for op in self.shape.operators)}
        object.__setattr__(self, "structure", structure)
        self._check_tables()

    def _check_tables(self) -> None:
        for level, size in self.sizes.items():
            if size < 0:
                raise SplurgeEquivariantStructureError(f"Negative level size at {level}")
            level_labels = self.labels[level]
            if len(level_labels) != size:
                raise SplurgeEquivariantStructureError(
                    f"Level {level} has {size} elements but {len(level_labels)} labels"
                )
            if len(set(level_labels)) != size:
                raise SplurgeEquivariantStructureError(f"Labels at level {level} are not unique")
        for op in self.shape.operators:
            table = self.structure[op.key]
            if len(table) != self.sizes[op.source]:
                raise SplurgeEquivariantStructureError(
                    f"Operator {op.family}_{op.index} at {op.source} has {len(table)} entries, "
                    f"expected {self.sizes[op.source]}",
                    details={"operator": list(op.key[:2]), "level": list(op.source)},
                )
            bound = self.sizes[op.target]
            if any(not 0 <= value < bound for value in table):
                raise SplurgeEquivariantStructureError(
                    f"Operator {op.family}_{op.index} at {op.source} leaves level {op.target}"
                )

    @property
    def trunc(self) -> int:
        return self.shape.trunc

    def size(self, level: Level) -> int:
        return self.sizes[level]

    def elements(self, level: Level) -> range:
        return range(self.sizes[level])

    def act(self, family: str, index: int, level: Level, x: int) -> int:
        """Apply the operator ``family_index`` to element ``x`` of ``level``."""
        return self.structure[(family, index, level)][x]

    def apply_path(self, level: Level, path: Sequence[tuple[str, int]], x: int) -> tuple[Level, int]:
        """Apply a sequence of operators, first entry first."""
        for family, index in path:
            op = self.shape.operator(family, index, level)
            if op is None:
                raise SplurgeEquivariantValueError(f"Operator {family}_{index} is not defined at {level}")
            x = self.structure[op.key][x]
            level = op.target
        return level, x

    def label(self, level: Level, x: int) -> Hashable:
        return self.labels[level][x]

    @cached_property
    def _label_index(self) -> dict[Level, dict[Hashable, int]]:
        return {level: {lbl: i for i, lbl in enumerate(lbls)} for level, lbls in self.labels.items()}

    def index_of(self, level: Level, label: Hashable) -> int:
        """Index of the element with the given label at ``level``."""
        try:
            return self._label_index[level][label]
        except KeyError as e:
            raise SplurgeEquivariantValueError(f"No element labelled {label!r} at level {level}") from e

    def total_size(self) -> int:
        return sum(self.sizes.values())

    def is_empty(self) -> bool:
        return self.total_size() == 0

    @cached_property
    def degenerate_sets(self) -> dict[Level, frozenset[int]]:
        """Elements at each level that lie in the image of some degeneracy."""
        result: dict[Level, set[int]] = {level: set() for level in self.shape.levels()}
        for op in self.shape.operators:
            if op.degeneracy:
                result[op.target].update(self.structure[op.key])
        return {level: frozenset(members) for level, members in result.items()}

    def is_degenerate(self, level: Level, x: int) -> bool:
        return x in self.degenerate_sets[level]

    def nondegenerate(self, level: Level) -> tuple[int, ...]:
        degenerate = self.degenerate_sets[level]
        return tuple(x for x in self.elements(level) if x not in degenerate)

    def validate(self) -> None:
        """
        Check every relation of the shape on every stored element.

        Raises:
            SplurgeEquivariantStructureError: If an identity fails or a degeneracy is not injective
        """
        for level, path_a, path_b in self.shape.relations():
            for x in self.elements(level):
                if self.apply_path(level, path_a, x) != self.apply_path(level, path_b, x):
                    raise SplurgeEquivariantStructureError(
                        f"Identity {path_a} = {path_b} fails at level {level} on element {self.label(level, x)!r}",
                        details={"level": list(level), "element": x},
                    )
        for op in self.shape.operators:
            if op.degeneracy:
                table = self.structure[op.key]
                if len(set(table)) != len(table):
                    raise SplurgeEquivariantStructureError(
                        f"Degeneracy {op.family}_{op.index} at {op.source} is not injective"
                    )

    def describe(self) -> str:
        sizes = ", ".join(f"{level}:{self.sizes[level]}" for level in self.shape.levels())
        return f"{type(self).__name__}(trunc={self.trunc}; {sizes})"


P = TypeVar("P", bound=Presheaf)


def make_like(kind: type[P], shape: Shape, sizes, structure, labels) -> P:  # type: ignore[no-untyped-def]
    """Construct a presheaf of the given class; subclasses may validate extra invariants."""
    return kind(shape=shape, sizes=sizes, structure=structure, labels=labels)


def common_kind(*objects: Presheaf) -> type[Presheaf]:
    """Most specific class shared by all objects (used for results of constructions)."""
    kinds = [type(obj) for obj in objects]
    for candidate in kinds[0].__mro__:
        if isinstance(candidate, type) and issubclass(candidate, Presheaf) and all(
            issubclass(k, candidate) for k in kinds
        ):
            return candidate
    return Presheaf


def require_same_shape(*objects: Presheaf) -> Shape:
    InputValidator.same_trunc(*(obj.trunc for obj in objects))
    shape = objects[0].shape
    for obj in objects[1:]:
        if obj.shape != shape:
            raise SplurgeEquivariantValueError(f"Shape mismatch: {shape!r} vs {obj.shape!r}")
    return shape


@dataclass(frozen=True, eq=False)
class PresheafMap:
    """A natural transformation between presheaves of the same shape."""

    source: Presheaf
    target: Presheaf
    components: Mapping[Level, tuple[int, ...]]

    def __post_init__(self) -> None:
        require_same_shape(self.source, self.target)
        comps = {level: tuple(self.components.get(level, ())) for level in self.source.shape.levels()}
        for level, comp in comps.items():
            if len(comp) != self.source.size(level):
                raise SplurgeEquivariantStructureError(
                    f"Map component at {level} has {len(comp)} entries, expected {self.source.size(level)}"
                )
            bound = self.target.size(level)
            if any(not 0 <= y < bound for y in comp):
                raise SplurgeEquivariantStructureError(f"Map component at {level} leaves the target")
        object.__setattr__(self, "components", comps)

    def __call__(self, level: Level, x: int) -> int:
        return self.components[level][x]

    @cached_property
    def key(self) -> tuple[tuple[int, ...], ...]:
        """Hashable identity of the map (components in level order)."""
        return tuple(self.components[level] for level in self.source.shape.levels())

    def same_as(self, other: PresheafMap) -> bool:
        return self.source is other.source and self.target is other.target and self.key == other.key

    def is_natural(self) -> bool:
        for op in self.source.shape.operators:
            src_table = self.source.structure[op.key]
            tgt_table = self.target.structure[op.key]
            here = self.components[op.source]
            there = self.components[op.target]
            if any(there[src_table[x]] != tgt_table[here[x]] for x in range(len(here))):
                return False
        return True

    def validate(self) -> None:
        """
        Raises:
            SplurgeEquivariantStructureError: If the map does not commute with some operator
        """
        if not self.is_natural():
            raise SplurgeEquivariantStructureError("Map does not commute with the structure operators")

    def compose(self, first: PresheafMap) -> PresheafMap:
        """``self ∘ first``."""
        if first.target.sizes != self.source.sizes:
            raise SplurgeEquivariantValueError("Maps are not composable")
        return PresheafMap(
            first.source,
            self.target,
            {level: tuple(self.components[level][y] for y in comp) for level, comp in first.components.items()},
        )

    def is_injective(self) -> bool:
        return all(len(set(comp)) == len(comp) for comp in self.components.values())

    def is_surjective(self) -> bool:
        return all(len(set(comp)) == self.target.size(level) for level, comp in self.components.items())

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self) -> PresheafMap:
        if not self.is_isomorphism():
            raise SplurgeEquivariantValueError("Only bijective maps can be inverted")
        comps = {}
        for level, comp in self.components.items():
            inv = [0] * len(comp)
            for x, y in enumerate(comp):
                inv[y] = x
            comps[level] = tuple(inv)
        return PresheafMap(self.target, self.source, comps)

    def retarget(self, target: Presheaf) -> PresheafMap:
        """Same components into an object with identical level sizes (e.g. a relabelled copy)."""
        return PresheafMap(self.source, target, self.components)

    def corestrict(self, inclusion: PresheafMap) -> PresheafMap:
        """
        Factor this map through an injective ``inclusion`` into the same target.

        Raises:
            SplurgeEquivariantValueError: If some element misses the image of the inclusion
        """
        comps = {}
        for level, comp in self.components.items():
            back = {y: x for x, y in enumerate(inclusion.components[level])}
            try:
                comps[level] = tuple(back[y] for y in comp)
            except KeyError as e:
                raise SplurgeEquivariantValueError(f"Map does not factor through the subobject at {level}") from e
        return PresheafMap(self.source, inclusion.source, comps)


def identity(obj: Presheaf) -> PresheafMap:
    return PresheafMap(obj, obj, {level: tuple(obj.elements(level)) for level in obj.shape.levels()})


def empty_like(shape: Shape, kind: type[P]) -> P:
    return make_like(kind, shape, {}, {}, {})


def terminal_like(shape: Shape, kind: type[P]) -> P:
    levels = shape.levels()
    return make_like(
        kind,
        shape,
        {level: 1 for level in levels},
        {op.key: (0,) for op in shape.operators},
        {level: ((),) for level in levels},
    )


def map_to_terminal(obj: Presheaf, terminal: Presheaf) -> PresheafMap:
    return PresheafMap(obj, terminal, {level: (0,) * obj.size(level) for level in obj.shape.levels()})


def map_from_empty(empty: Presheaf, target: Presheaf) -> PresheafMap:
    return PresheafMap(empty, target, {})


def from_elements(
    kind: type[P],
    shape: Shape,
    elements: Mapping[Level, Sequence[Hashable]],
    action: Callable[[Operator, Hashable], Hashable],
) -> P:
    """
    Build a presheaf from labelled elements and an operator action on labels.

    Args:
        kind: Presheaf class to construct
        shape: Index shape
        elements: Labels per level (order fixes the element indices)
        action: Function returning the label of ``op`` applied to a label

    Returns:
        The constructed presheaf (tables checked for range, not yet for identities)
    """
    index = {level: {lbl: i for i, lbl in enumerate(lbls)} for level, lbls in elements.items()}
    structure = {}
    for op in shape.operators:
        structure[op.key] = tuple(index[op.target][action(op, lbl)] for lbl in elements.get(op.source, ()))
    return make_like(
        kind, shape, {lv: len(v) for lv, v in elements.items()}, structure, {lv: tuple(v) for lv, v in elements.items()}
    )


@dataclass(frozen=True)
class Cone:
    """A limit: apex with one leg per diagram object."""

    apex: Presheaf
    legs: tuple[PresheafMap, ...]

    def lookup(self, level: Level, *components: int) -> int:
        """Apex element whose legs hit the given components."""
        return self._lookup[level][components]

    @cached_property
    def _lookup(self) -> dict[Level, dict[tuple[int, ...], int]]:
        table: dict[Level, dict[tuple[int, ...], int]] = {}
        for level in self.apex.shape.levels():
            table[level] = {
                tuple(leg.components[level][x] for leg in self.legs): x for x in self.apex.elements(level)
            }
        return table

    def induced(self, source: Presheaf, maps: Sequence[PresheafMap]) -> PresheafMap:
        """
        The map into the apex determined by a compatible family of maps.

        Raises:
            SplurgeEquivariantValueError: If the family does not factor through the limit
        """
        comps = {}
        for level in source.shape.levels():
            try:
                comps[level] = tuple(
                    self._lookup[level][tuple(m.components[level][x] for m in maps)] for x in source.elements(level)
                )
            except KeyError as e:
                raise SplurgeEquivariantValueError(f"Maps do not form a cone at level {level}") from e
        return PresheafMap(source, self.apex, comps)


@dataclass(frozen=True)
class Cocone:
    """A colimit: apex with one leg per diagram object and the equivalence classes behind it."""

    apex: Presheaf
    legs: tuple[PresheafMap, ...]
    members: Mapping[Level, tuple[tuple[tuple[int, int], ...], ...]]
    """For each level and apex element, the (diagram object, element) pairs that land on it."""

    def induced(self, target: Presheaf, maps: Sequence[PresheafMap]) -> PresheafMap:
        """
        The map out of the apex determined by a compatible family of maps.

        Raises:
            SplurgeEquivariantValueError: If the family is not compatible with the colimit
        """
        if len(maps) != len(self.legs):
            raise SplurgeEquivariantValueError(f"Expected {len(self.legs)} maps, got {len(maps)}")
        comps = {}
        for level in self.apex.shape.levels():
            values = []
            for cls in self.members[level]:
                images = {maps[obj].components[level][x] for obj, x in cls}
                if len(images) != 1:
                    raise SplurgeEquivariantValueError(
                        f"Maps disagree on an identified class at level {level}", details={"images": sorted(images)}
                    )
                values.append(images.pop())
            comps[level] = tuple(values)
        return PresheafMap(self.apex, target, comps)


def colimit(
    objects: Sequence[Presheaf],
    arrows: Sequence[tuple[int, int, PresheafMap]],
    *,
    kind: type[Presheaf] | None = None,
    tag_labels: bool = True,
) -> Cocone:
    """
    Colimit of a finite diagram, computed levelwise as a quotient of the disjoint union.

    Args:
        objects: Diagram objects
        arrows: ``(source_index, target_index, map)`` triples
        kind: Result class; defaults to the common class of the objects
        tag_labels: Label classes by ``(object, label)`` of their representative

    Returns:
        Cocone with apex, legs and the identified classes
    """
    if not objects:
        raise SplurgeEquivariantValueError("A colimit needs at least one diagram object")
    shape = require_same_shape(*objects)
    kind = kind or common_kind(*objects)
    for src, tgt, arrow in arrows:
        if arrow.source.sizes != objects[src].sizes or arrow.target.sizes != objects[tgt].sizes:
            raise SplurgeEquivariantValueError(f"Arrow {src}->{tgt} does not match its diagram objects")

    sizes: dict[Level, int] = {}
    labels: dict[Level, tuple[Hashable, ...]] = {}
    members: dict[Level, tuple[tuple[tuple[int, int], ...], ...]] = {}
    class_of: dict[Level, dict[tuple[int, int], int]] = {}
    for level in shape.levels():
        graph = nx.Graph()
        for i, obj in enumerate(objects):
            graph.add_nodes_from((i, x) for x in obj.elements(level))
        for src, tgt, arrow in arrows:
            graph.add_edges_from(((src, x), (tgt, y)) for x, y in enumerate(arrow.components[level]))
        classes = sorted(tuple(sorted(component)) for component in nx.connected_components(graph))
        sizes[level] = len(classes)
        members[level] = tuple(classes)
        class_of[level] = {node: c for c, cls in enumerate(classes) for node in cls}
        if tag_labels:
            labels[level] = tuple((cls[0][0], objects[cls[0][0]].label(level, cls[0][1])) for cls in classes)
        else:
            labels[level] = tuple(objects[cls[0][0]].label(level, cls[0][1]) for cls in classes)

    structure = {}
    for op in shape.operators:
        table = []
        for cls in members[op.source]:
            obj, x = cls[0]
            table.append(class_of[op.target][(obj, objects[obj].structure[op.key][x])])
        structure[op.key] = tuple(table)
    apex = make_like(kind, shape, sizes, structure, labels)
    legs = tuple(
        PresheafMap(
            obj,
            apex,
            {level: tuple(class_of[level][(i, x)] for x in obj.elements(level)) for level in shape.levels()},
        )
        for i, obj in enumerate(objects)
    )
    _LOGGER.debug(f"Colimit of {len(objects)} objects and {len(arrows)} arrows: {apex.describe()}")
    return Cocone(apex, legs, members)


def coproduct(*objects: Presheaf, kind: type[Presheaf] | None = None) -> Cocone:
    """Disjoint union; labels are ``(summand, label)``."""
    return colimit(objects, (), kind=kind)


def pushout(f: PresheafMap, g: PresheafMap, *, kind: type[Presheaf] | None = None) -> Cocone:
    """
    Pushout of ``B <-f- A -g-> C``; legs are ``(B -> P, C -> P)``.

    Raises:
        SplurgeEquivariantValueError: If f and g do not share a source
    """
    if f.source is not g.source and f.source.sizes != g.source.sizes:
        raise SplurgeEquivariantValueError("Pushout maps must share their source")
    cocone = colimit(
        (f.target, g.target, f.source),
        ((2, 0, f), (2, 1, g)),
        kind=kind or common_kind(f.target, g.target),
    )
    return _drop_apex_leg(cocone, keep=(0, 1))


def coequalizer(f: PresheafMap, g: PresheafMap, *, kind: type[Presheaf] | None = None) -> Cocone:
    """Coequalizer of two parallel maps ``A ⇉ B``; the single leg is ``B -> Q``."""
    cocone = colimit((f.target, f.source), ((1, 0, f), (1, 0, g)), kind=kind or type(f.target))
    return _drop_apex_leg(cocone, keep=(0,))


def chain_colimit(chain: Sequence[PresheafMap], *, kind: type[Presheaf] | None = None) -> Cocone:
    """Colimit of a finite chain ``X_0 -> X_1 -> ... -> X_k``; one leg per stage."""
    if not chain:
        raise SplurgeEquivariantValueError("A chain needs at least one map")
    objects = [chain[0].source] + [m.target for m in chain]
    arrows = [(i, i + 1, m) for i, m in enumerate(chain)]
    return colimit(objects, arrows, kind=kind)


def _drop_apex_leg(cocone: Cocone, *, keep: tuple[int, ...]) -> Cocone:
    """Forget legs from auxiliary diagram objects, keeping classes reindexed to kept objects."""
    members = {}
    for level, classes in cocone.members.items():
        members[level] = tuple(tuple((keep.index(o), x) for o, x in cls if o in keep) for cls in classes)
    return Cocone(cocone.apex, tuple(cocone.legs[i] for i in keep), members)


def product(*objects: Presheaf, kind: type[Presheaf] | None = None) -> Cone:
    """Levelwise cartesian product; labels are tuples of factor labels."""
    if not objects:
        raise SplurgeEquivariantValueError("A product needs at least one factor")
    shape = require_same_shape(*objects)
    kind = kind or common_kind(*objects)
    tuples: dict[Level, list[tuple[int, ...]]] = {}
    for level in shape.levels():
        acc: list[tuple[int, ...]] = [()]
        for obj in objects:
            acc = [t + (x,) for t in acc for x in obj.elements(level)]
        tuples[level] = acc
    return _cone_from_tuples(objects, tuples, kind, shape)


def _cone_from_tuples(
    factors: Sequence[Presheaf],
    tuples: Mapping[Level, Sequence[tuple[int, ...]]],
    kind: type[Presheaf],
    shape: Shape,
) -> Cone:
    index = {level: {t: i for i, t in enumerate(ts)} for level, ts in tuples.items()}
    structure = {}
    for op in shape.operators:
        structure[op.key] = tuple(
            index[op.target][tuple(f.structure[op.key][c] for f, c in zip(factors, t, strict=True))]
            for t in tuples[op.source]
        )
    labels = {
        level: tuple(tuple(f.label(level, c) for f, c in zip(factors, t, strict=True)) for t in ts)
        for level, ts in tuples.items()
    }
    apex = make_like(kind, shape, {lv: len(ts) for lv, ts in tuples.items()}, structure, labels)
    legs = tuple(
        PresheafMap(apex, f, {level: tuple(t[i] for t in tuples[level]) for level in shape.levels()})
        for i, f in enumerate(factors)
    )
    return Cone(apex, legs)


def pullback(f: PresheafMap, g: PresheafMap, *, kind: type[Presheaf] | None = None) -> Cone:
    """
    Pullback of ``B -f-> D <-g- C``; legs are ``(P -> B, P -> C)``.

    Raises:
        SplurgeEquivariantValueError: If f and g do not share a target
    """
    if f.target.sizes != g.target.sizes:
        raise SplurgeEquivariantValueError("Pullback maps must share their target")
    shape = require_same_shape(f.source, g.source)
    kind = kind or common_kind(f.source, g.source)
    tuples: dict[Level, list[tuple[int, ...]]] = {}
    for level in shape.levels():
        by_image: dict[int, list[int]] = {}
        for y, d in enumerate(g.components[level]):
            by_image.setdefault(d, []).append(y)
        tuples[level] = [(x, y) for x, d in enumerate(f.components[level]) for y in by_image.get(d, ())]
    return _cone_from_tuples((f.source, g.source), tuples, kind, shape)


def equalizer(f: PresheafMap, g: PresheafMap) -> Cone:
    """Equalizer of ``A ⇉ B`` as the subobject where both maps agree."""
    return restrict(f.source, lambda level, x: f(level, x) == g(level, x))


def restrict(obj: Presheaf, predicate: Callable[[Level, int], bool], *, kind: type[Presheaf] | None = None) -> Cone:
    """
    Subobject of elements satisfying ``predicate``; the single leg is the inclusion.

    Raises:
        SplurgeEquivariantStructureError: If the selected elements are not closed under the operators
    """
    shape = obj.shape
    kept = {level: [x for x in obj.elements(level) if predicate(level, x)] for level in shape.levels()}
    position = {level: {x: i for i, x in enumerate(xs)} for level, xs in kept.items()}
    structure = {}
    for op in shape.operators:
        table = []
        for x in kept[op.source]:
            y = obj.structure[op.key][x]
            if y not in position[op.target]:
                raise SplurgeEquivariantStructureError(
                    f"Selected elements are not closed under {op.family}_{op.index} at {op.source}"
                )
            table.append(position[op.target][y])
        structure[op.key] = tuple(table)
    labels = {level: tuple(obj.label(level, x) for x in xs) for level, xs in kept.items()}
    sub = make_like(kind or type(obj), shape, {lv: len(xs) for lv, xs in kept.items()}, structure, labels)
    return Cone(sub, (PresheafMap(sub, obj, {level: tuple(xs) for level, xs in kept.items()}),))


def generated_subobject(obj: Presheaf, generators: Iterable[tuple[Level, int]]) -> Cone:
    """Smallest subobject containing the given elements; single leg is the inclusion."""
    closed: dict[Level, set[int]] = {level: set() for level in obj.shape.levels()}
    stack = list(generators)
    while stack:
        level, x = stack.pop()
        if x in closed[level]:
            continue
        closed[level].add(x)
        for op in obj.shape.operators_from[level]:
            stack.append((op.target, obj.structure[op.key][x]))
    return restrict(obj, lambda level, x: x in closed[level])


def image(f: PresheafMap) -> Cone:
    """Image of a map as a subobject of its target."""
    hit = {level: set(comp) for level, comp in f.components.items()}
    return restrict(f.target, lambda level, x: x in hit[level])


def relabel(obj: Presheaf, labeller: Callable[[Level, int], Hashable], *, kind: type[P] | None = None) -> Presheaf:
    """Copy of ``obj`` with new labels (and optionally a new class)."""
    labels = {level: tuple(labeller(level, x) for x in obj.elements(level)) for level in obj.shape.levels()}
    return make_like(kind or type(obj), obj.shape, obj.sizes, obj.structure, labels)


class _Search:
    """Backtracking search for natural transformations with propagation along operators."""

    def __init__(
        self,
        source: Presheaf,
        target: Presheaf,
        *,
        injective: bool,
        budget: int | None,
        profile: bool,
    ) -> None:
        self.source = source
        self.target = target
        self.injective = injective
        self.budget = budget
        self.profile = profile
        self.nodes = 0
        self.assignment: dict[Level, list[int]] = {lv: [-1] * source.size(lv) for lv in source.shape.levels()}
        self.used: dict[Level, dict[int, int]] = {lv: {} for lv in source.shape.levels()}
        self.trail: list[tuple[Level, int]] = []

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SplurgeEquivariantSearchBudgetExceededError(
                f"Hom search exceeded budget of {self.budget} nodes",
                details={"source": self.source.describe(), "target": self.target.describe()},
            )

    def assign(self, level: Level, x: int, y: int) -> bool:
        """Assign ``x -> y`` and propagate; returns False on conflict (caller must undo)."""
        stack = [(level, x, y)]
        while stack:
            lv, a, b = stack.pop()
            current = self.assignment[lv][a]
            if current >= 0:
                if current != b:
                    return False
                continue
            if self.profile and self.source.is_degenerate(lv, a) != self.target.is_degenerate(lv, b):
                return False
            if self.injective:
                owner = self.used[lv].get(b)
                if owner is not None and owner != a:
                    return False
                self.used[lv][b] = a
            self.assignment[lv][a] = b
            self.trail.append((lv, a))
            for op in self.source.shape.operators_from[lv]:
                stack.append((op.target, self.source.structure[op.key][a], self.target.structure[op.key][b]))
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            lv, a = self.trail.pop()
            b = self.assignment[lv][a]
            self.assignment[lv][a] = -1
            if self.injective and self.used[lv].get(b) == a:
                del self.used[lv][b]

    def order(self) -> list[tuple[Level, int]]:
        """Nondegenerate elements first, highest total dimension first."""
        src = self.source
        levels = sorted(src.shape.levels(), key=lambda lv: (-sum(lv), lv))
        first = [(lv, x) for lv in levels for x in src.nondegenerate(lv)]
        rest = [(lv, x) for lv in levels for x in src.elements(lv) if src.is_degenerate(lv, x)]
        return first + rest

    def run(self) -> Iterator[PresheafMap]:
        order = self.order()
        levels = self.source.shape.levels()

        def recurse(position: int) -> Iterator[PresheafMap]:
            while position < len(order) and self.assignment[order[position][0]][order[position][1]] >= 0:
                position += 1
            if position == len(order):
                yield PresheafMap(self.source, self.target, {lv: tuple(self.assignment[lv]) for lv in levels})
                return
            level, x = order[position]
            for y in self.target.elements(level):
                self._tick()
                mark = len(self.trail)
                if self.assign(level, x, y):
                    yield from recurse(position + 1)
                self.undo(mark)

        yield from recurse(0)


def iter_maps(
    source: Presheaf,
    target: Presheaf,
    *,
    fixed: Mapping[Level, Mapping[int, int]] | None = None,
    injective: bool = False,
    budget: int | None = None,
    warning_threshold: int | None = None,
) -> Iterator[PresheafMap]:
    """
    Enumerate all maps ``source -> target`` exhaustively.

    Generating (nondegenerate) elements are assigned first and every assignment
    is propagated along all operators, so degenerate elements are almost always
    forced.

    Args:
        source: Domain presheaf
        target: Codomain presheaf
        fixed: Partial assignment every enumerated map must extend
        injective: Only enumerate levelwise injective maps
        budget: Maximum number of search nodes (None for unbounded)
        warning_threshold: Log a warning when the naive candidate space exceeds this size
            (default: ``DEFAULT_CONFIG.hom_warning_threshold``)

    Yields:
        Each natural transformation exactly once

    Raises:
        SplurgeEquivariantSearchBudgetExceededError: When the budget is exhausted
    """
    require_same_shape(source, target)
    generators = sum(len(source.nondegenerate(lv)) for lv in source.shape.levels())
    estimate = math.prod(
        target.size(lv) ** len(source.nondegenerate(lv)) for lv in source.shape.levels()
    )
    threshold = DEFAULT_CONFIG.hom_warning_threshold if warning_threshold is None else warning_threshold
    if estimate > threshold:
        _LOGGER.warning(
            f"Hom enumeration over {generators} generators has a candidate space of {estimate}; "
            "search may be slow"
        )
    search = _Search(source, target, injective=injective, budget=budget, profile=False)
    if fixed:
        for level, pairs in fixed.items():
            for x, y in pairs.items():
                if not search.assign(level, x, y):
                    return
    yield from search.run()


def hom_set(source: Presheaf, target: Presheaf, *, budget: int | None = None) -> list[PresheafMap]:
    """All maps ``source -> target`` as a list."""
    return list(iter_maps(source, target, budget=budget))


def count_maps(source: Presheaf, target: Presheaf, *, budget: int | None = None) -> int:
    return sum(1 for _ in iter_maps(source, target, budget=budget))


def find_isomorphism(source: Presheaf, target: Presheaf, *, budget: int | None = None) -> PresheafMap | None:
    """
    A levelwise bijective map if one exists, else None.

    Level sizes and degenerate-element counts are compared first; the search
    then only pairs degenerate with degenerate elements.
    """
    require_same_shape(source, target)
    for level in source.shape.levels():
        if source.size(level) != target.size(level):
            return None
        if len(source.degenerate_sets[level]) != len(target.degenerate_sets[level]):
            return None
    search = _Search(source, target, injective=True, budget=budget, profile=True)
    return next(iter(search.run()), None)


def fixed_subobject(obj: Presheaf, automorphisms: Iterable[PresheafMap]) -> Cone:
    """Elements fixed by every given automorphism; single leg is the inclusion."""
    autos = list(automorphisms)
    return restrict(obj, lambda level, x: all(a.components[level][x] == x for a in autos))


def describe_map(f: PresheafMap) -> dict[str, Any]:
    return {
        "source": f.source.describe(),
        "target": f.target.describe(),
        "injective": f.is_injective(),
        "surjective": f.is_surjective(),
    }

"""
Finite simplicial categories.

A simplicial category here has finitely many objects and, for every ordered
pair, a truncated simplicial set of maps with levelwise composition tables.
The module covers component categories, the simplicial nerve, simplicial
functor enumeration, Dwyer-Kan evidence, bounded pushouts along the
generating cofibrations and the homotopy coherent nerve over the cube
resolution.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Hashable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable

import networkx as nx

from . import presheaf
from .bisimp import TruncBiSSet
from .categories import FiniteCategory, FiniteFunctor
from .exceptions import (
    SplurgeEquivariantSearchBudgetExceededError,
    SplurgeEquivariantStructureError,
    SplurgeEquivariantValueError,
)
from .homology import map_evidence
from .presheaf import BiSimplexShape, PresheafMap, identity, iter_maps
from .reports import EVIDENCE_PASS, FAIL, NONEXACT, PASS
from .simpset import (
    TruncSSet,
    boundary,
    discrete_sset,
    empty_sset,
    pi0,
    point,
    sset_from_elements,
    standard_simplex,
)
from .utils import InputValidator

DOMAINS = ["simplicial-category", "nerve", "attach"]

_LOGGER = logging.getLogger(__name__)

Pair = tuple[int, int]
UNDEFINED = -1


@dataclass(frozen=True, eq=False)
class SCategory:
    """
    A finite simplicial category truncated at ``trunc``.

    ``composition[(x, y, z, n)]`` is a flat table of ``g ∘ f`` for
    ``g ∈ Map(y,z)_n`` and ``f ∈ Map(x,y)_n``, stored at position
    ``g * |Map(x,y)_n| + f``. Categories built with ``exact=False`` may hold
    ``UNDEFINED`` entries for composites beyond a word budget.
    """

    trunc: int
    objects: tuple[Hashable, ...]
    maps: Mapping[Pair, TruncSSet]
    composition: Mapping[tuple[int, int, int, int], tuple[int, ...]]
    units: tuple[int, ...]
    exact: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "maps", dict(self.maps))
        object.__setattr__(self, "composition", dict(self.composition))
        object.__setattr__(self, "units", tuple(self.units))
        n_obj = len(self.objects)
        if len(set(self.objects)) != n_obj:
            raise SplurgeEquivariantStructureError("Object labels must be unique")
        for pair in self.pairs():
            space = self.maps.get(pair)
            if space is None:
                raise SplurgeEquivariantStructureError(f"Missing mapping space for {pair}")
            if space.trunc != self.trunc:
                raise SplurgeEquivariantStructureError(f"Mapping space {pair} has truncation {space.trunc}")
        if len(self.units) != n_obj:
            raise SplurgeEquivariantStructureError("One unit per object is required")

    def pairs(self) -> Iterator[Pair]:
        return itertools.product(range(len(self.objects)), repeat=2)  # type: ignore[return-value]

    def map_space(self, x: int, y: int) -> TruncSSet:
        return self.maps[(x, y)]

    def compose(self, x: int, y: int, z: int, n: int, g: int, f: int) -> int:
        """``g ∘ f`` at level n for ``f: x -> y`` and ``g: y -> z``."""
        return self.composition[(x, y, z, n)][g * self.maps[(x, y)].size((n,)) + f]

    def unit(self, x: int, n: int = 0) -> int:
        """The identity of x as a (degenerate) n-simplex."""
        u = self.units[x]
        space = self.maps[(x, x)]
        for level in range(n):
            u = space.degen(0, level, u)
        return u

    def object_index(self, label: Hashable) -> int:
        try:
            return self.objects.index(label)
        except ValueError as e:
            raise SplurgeEquivariantValueError(f"Unknown object {label!r}") from e

    def validate(self) -> None:
        """
        Check unit laws, associativity and compatibility of composition with faces and degeneracies.

        Raises:
            SplurgeEquivariantStructureError: If some law fails
        """
        n_obj = len(self.objects)
        N = self.trunc
        for x, y, z in itertools.product(range(n_obj), repeat=3):
            Mxy, Myz = self.maps[(x, y)], self.maps[(y, z)]
            for n in range(N + 1):
                table = self.composition.get((x, y, z, n))
                if table is None or len(table) != Mxy.size((n,)) * Myz.size((n,)):
                    raise SplurgeEquivariantStructureError(f"Composition table ({x},{y},{z}) level {n} is malformed")
        for x, y in self.pairs():
            M = self.maps[(x, y)]
            for n in range(N + 1):
                for f in M.simplices(n):
                    if self.compose(x, y, y, n, self.unit(y, n), f) != f:
                        raise SplurgeEquivariantStructureError(f"Left unit law fails on Map({x},{y})_{n}")
                    if self.compose(x, x, y, n, f, self.unit(x, n)) != f:
                        raise SplurgeEquivariantStructureError(f"Right unit law fails on Map({x},{y})_{n}")
        for x, y, z in itertools.product(range(n_obj), repeat=3):
            Mxy, Myz = self.maps[(x, y)], self.maps[(y, z)]
            for n in range(N + 1):
                for g, f in itertools.product(Myz.simplices(n), Mxy.simplices(n)):
                    h = self.compose(x, y, z, n, g, f)
                    if h == UNDEFINED:
                        if self.exact:
                            raise SplurgeEquivariantStructureError(
                                "Exact simplicial category has an undefined composite"
                            )
                        continue
                    for i in range(n + 1):
                        if n > 0:
                            dg, df = Myz.face(i, n, g), Mxy.face(i, n, f)
                            if self._defined(x, y, z, n - 1, dg, df) and self.compose(
                                x, y, z, n - 1, dg, df
                            ) != self.maps[(x, z)].face(i, n, h):
                                raise SplurgeEquivariantStructureError("Composition does not commute with faces")
                        if n < N:
                            sg, sf = Myz.degen(i, n, g), Mxy.degen(i, n, f)
                            if self._defined(x, y, z, n + 1, sg, sf) and self.compose(
                                x, y, z, n + 1, sg, sf
                            ) != self.maps[(x, z)].degen(i, n, h):
                                raise SplurgeEquivariantStructureError("Composition does not commute with degeneracies")
        for w, x, y, z in itertools.product(range(n_obj), repeat=4):
            for n in range(N + 1):
                for f in self.maps[(w, x)].simplices(n):
                    for g in self.maps[(x, y)].simplices(n):
                        gf = self.compose(w, x, y, n, g, f)
                        for h in self.maps[(y, z)].simplices(n):
                            hg = self.compose(x, y, z, n, h, g)
                            if UNDEFINED in (gf, hg):
                                continue
                            left, right = self.compose(w, y, z, n, h, gf), self.compose(w, x, z, n, hg, f)
                            if left != right:
                                raise SplurgeEquivariantStructureError("Composition is not associative")

    def _defined(self, x: int, y: int, z: int, n: int, g: int, f: int) -> bool:
        return self.exact or self.compose(x, y, z, n, g, f) != UNDEFINED

    def is_discrete(self) -> bool:
        """Whether every mapping space is discrete (constant in the simplicial direction)."""
        return all(
            len(set(M.structure[("s", 0, (n,))])) == M.size((n + 1,))
            for M in self.maps.values()
            for n in range(self.trunc)
        )

    def total_size(self) -> int:
        return sum(M.total_size() for M in self.maps.values())

    def describe(self) -> str:
        flag = "" if self.exact else ", NONEXACT"
        return f"SCategory({len(self.objects)} objects, {self.total_size()} map simplices, N={self.trunc}{flag})"


def scategory_from_tables(
    trunc: int,
    objects: Sequence[Hashable],
    maps: Mapping[Pair, TruncSSet],
    compose: Callable[[int, int, int, int, int, int], int],
    units: Sequence[int],
    *,
    exact: bool = True,
    validate: bool = True,
) -> SCategory:
    """
    Build a simplicial category from mapping spaces and a composition function.

    Args:
        trunc: Truncation level
        objects: Object labels
        maps: Mapping space for every ordered pair of object indices
        compose: ``compose(x, y, z, n, g, f)`` returning the index of ``g ∘ f``
        units: Index of the identity 0-simplex of each ``Map(x, x)``
        exact: Whether every composite is defined
        validate: Run the full law check

    Raises:
        SplurgeEquivariantStructureError: If validation fails
    """
    n_obj = len(objects)
    table = {}
    for x, y, z in itertools.product(range(n_obj), repeat=3):
        Mxy, Myz = maps[(x, y)], maps[(y, z)]
        for n in range(trunc + 1):
            table[(x, y, z, n)] = tuple(
                compose(x, y, z, n, g, f) for g in range(Myz.size((n,))) for f in range(Mxy.size((n,)))
            )
    C = SCategory(trunc, tuple(objects), maps, table, tuple(units), exact)
    if validate:
        C.validate()
    return C


@dataclass(frozen=True, eq=False)
class SFunctor:
    """A simplicial functor: an object map and a simplicial map per ordered pair."""

    source: SCategory
    target: SCategory
    on_objects: tuple[int, ...]
    on_maps: Mapping[Pair, PresheafMap]

    @cached_property
    def key(self) -> tuple[Any, ...]:
        return (self.on_objects, tuple(self.on_maps[p].key for p in sorted(self.on_maps)))

    def __call__(self, x: int, y: int, n: int, f: int) -> int:
        return self.on_maps[(x, y)]((n,), f)

    def validate(self) -> None:
        """
        Raises:
            SplurgeEquivariantStructureError: If units, composition or simplicial structure are not preserved
        """
        C, D = self.source, self.target
        F = self.on_objects
        for (x, y), m in self.on_maps.items():
            if m.target is not D.maps[(F[x], F[y])] and m.target.sizes != D.maps[(F[x], F[y])].sizes:
                raise SplurgeEquivariantStructureError(f"Map component {x},{y} has the wrong target")
            m.validate()
        for x in range(len(C.objects)):
            if self(x, x, 0, C.units[x]) != D.units[F[x]]:
                raise SplurgeEquivariantStructureError("Simplicial functor does not preserve units")
        for x, y, z in itertools.product(range(len(C.objects)), repeat=3):
            for n in range(C.trunc + 1):
                for g in C.maps[(y, z)].simplices(n):
                    for f in C.maps[(x, y)].simplices(n):
                        h = C.compose(x, y, z, n, g, f)
                        if h == UNDEFINED:
                            continue
                        image = D.compose(F[x], F[y], F[z], n, self(y, z, n, g), self(x, y, n, f))
                        if image != UNDEFINED and image != self(x, z, n, h):
                            raise SplurgeEquivariantStructureError("Simplicial functor does not preserve composition")

    def compose(self, first: SFunctor) -> SFunctor:
        """``self ∘ first``."""
        F, G = first.on_objects, self.on_objects
        return SFunctor(
            first.source,
            self.target,
            tuple(G[F[x]] for x in range(len(first.source.objects))),
            {(x, y): self.on_maps[(F[x], F[y])].compose(m) for (x, y), m in first.on_maps.items()},
        )

    def is_isomorphism(self) -> bool:
        if len(set(self.on_objects)) != len(self.target.objects) or len(self.on_objects) != len(self.target.objects):
            return False
        return all(m.is_isomorphism() for m in self.on_maps.values())

    def same_as(self, other: SFunctor) -> bool:
        return self.key == other.key

    def corestrict(self, inclusion: SFunctor) -> SFunctor:
        """
        Factor through a subcategory inclusion with the same target.

        Raises:
            SplurgeEquivariantValueError: If some object or simplex misses the subcategory
        """
        back = {y: x for x, y in enumerate(inclusion.on_objects)}
        try:
            objects = tuple(back[y] for y in self.on_objects)
        except KeyError as e:
            raise SplurgeEquivariantValueError("Functor does not factor through the subcategory on objects") from e
        maps = {
            (x, y): m.corestrict(inclusion.on_maps[(objects[x], objects[y])]) for (x, y), m in self.on_maps.items()
        }
        return SFunctor(self.source, inclusion.source, objects, maps)


def identity_sfunctor(C: SCategory) -> SFunctor:
    return SFunctor(C, C, tuple(range(len(C.objects))), {p: identity(C.maps[p]) for p in C.pairs()})


# Standard simplicial categories


def discrete_scategory(C: FiniteCategory, trunc: int) -> SCategory:
    """A category as a simplicial category with discrete mapping spaces."""
    n_obj = len(C.objects)
    homs = {(x, y): C.hom(x, y) for x in range(n_obj) for y in range(n_obj)}
    position = {pair: {f: i for i, f in enumerate(fs)} for pair, fs in homs.items()}
    maps = {pair: discrete_sset([C.morphisms[f] for f in fs], trunc) for pair, fs in homs.items()}

    def compose(x: int, y: int, z: int, n: int, g: int, f: int) -> int:
        return position[(x, z)][C.compose(homs[(y, z)][g], homs[(x, y)][f])]

    units = [position[(x, x)][C.identities[x]] for x in range(n_obj)]
    return scategory_from_tables(trunc, C.objects, maps, compose, units)


def discrete_sfunctor(F: FiniteFunctor, source: SCategory, target: SCategory) -> SFunctor:
    """A functor between categories as a simplicial functor between their discrete simplicial categories."""
    C, D = F.source, F.target
    maps = {}
    for x, y in source.pairs():
        fx, fy = F.on_objects[x], F.on_objects[y]
        images = D.hom(fx, fy)
        row = tuple(images.index(F.on_morphisms[f]) for f in C.hom(x, y))
        maps[(x, y)] = PresheafMap(
            source.maps[(x, y)], target.maps[(fx, fy)], {(n,): row for n in range(source.trunc + 1)}
        )
    return SFunctor(source, target, tuple(F.on_objects), maps)


def point_scategory(trunc: int) -> SCategory:
    return scategory_from_tables(trunc, ["*"], {(0, 0): point(trunc)}, lambda *args: 0, [0])


def empty_scategory(trunc: int) -> SCategory:
    return SCategory(trunc, (), {}, {}, ())


def UK(K: TruncSSet) -> SCategory:  # noqa: N802
    """
    Two objects x and y with ``Map(x,y) = K``, ``Map(y,x) = ∅`` and points as endomorphisms.

    Examples:
        >>> from splurge_equivariant.simpset import standard_simplex
        >>> UK(standard_simplex(0, 2)).map_space(0, 1).level_size(0)
        1
    """
    N = K.trunc
    maps = {(0, 0): point(N), (1, 1): point(N), (0, 1): K, (1, 0): empty_sset(N)}

    def compose(x: int, y: int, z: int, n: int, g: int, f: int) -> int:
        if x == y:
            return g
        return f

    return scategory_from_tables(N, ["x", "y"], maps, compose, [0, 0])


def U_map(f: PresheafMap, source: SCategory | None = None, target: SCategory | None = None) -> SFunctor:  # noqa: N802
    """``U(f): U(K) -> U(L)`` for a simplicial map ``f: K -> L``."""
    src = source or UK(f.source)  # type: ignore[arg-type]
    tgt = target or UK(f.target)  # type: ignore[arg-type]
    maps = {
        (0, 0): identity(src.maps[(0, 0)]).retarget(tgt.maps[(0, 0)]),
        (1, 1): identity(src.maps[(1, 1)]).retarget(tgt.maps[(1, 1)]),
        (0, 1): PresheafMap(src.maps[(0, 1)], tgt.maps[(0, 1)], f.components),
        (1, 0): PresheafMap(src.maps[(1, 0)], tgt.maps[(1, 0)], {}),
    }
    return SFunctor(src, tgt, (0, 1), maps)


@dataclass(frozen=True)
class CoproductSCategory:
    """A coproduct of simplicial categories with its injections."""

    category: SCategory
    injections: tuple[SFunctor, ...]
    offsets: tuple[int, ...]

    def copair(self, target: SCategory, functors: Sequence[SFunctor]) -> SFunctor:
        """
        The functor out of the coproduct restricting to ``functors[i]`` on summand i.

        Raises:
            SplurgeEquivariantValueError: If the number of functors does not match the summands
        """
        if len(functors) != len(self.injections):
            raise SplurgeEquivariantValueError("One functor per summand is required")
        C = self.category
        owner = [(s, x - self.offsets[s]) for s, inj in enumerate(self.injections) for x in inj.on_objects]
        objects = tuple(functors[s].on_objects[x] for s, x in owner)
        maps = {}
        for u, v in C.pairs():
            (su, xu), (sv, xv) = owner[u], owner[v]
            if su == sv:
                maps[(u, v)] = PresheafMap(
                    C.maps[(u, v)], target.maps[(objects[u], objects[v])], functors[su].on_maps[(xu, xv)].components
                )
            else:
                maps[(u, v)] = PresheafMap(C.maps[(u, v)], target.maps[(objects[u], objects[v])], {})
        return SFunctor(C, target, objects, maps)


def coproduct_scategories(*categories: SCategory, trunc: int | None = None) -> CoproductSCategory:
    """
    Disjoint union; objects are labelled ``(summand, label)``.

    Raises:
        SplurgeEquivariantValueError: If truncations differ or no truncation is known
    """
    truncs = {C.trunc for C in categories}
    if trunc is not None:
        truncs.add(trunc)
    if len(truncs) != 1:
        raise SplurgeEquivariantValueError(f"Cannot combine truncations {sorted(truncs)}")
    N = truncs.pop()
    owner = [(s, x) for s, C in enumerate(categories) for x in range(len(C.objects))]
    objects = [(s, categories[s].objects[x]) for s, x in owner]
    empty = empty_sset(N)
    maps = {}
    for u, v in itertools.product(range(len(owner)), repeat=2):
        (su, xu), (sv, xv) = owner[u], owner[v]
        maps[(u, v)] = categories[su].maps[(xu, xv)] if su == sv else empty

    def compose(x: int, y: int, z: int, n: int, g: int, f: int) -> int:
        s, _ = owner[x]
        return categories[s].compose(owner[x][1], owner[y][1], owner[z][1], n, g, f)

    units = [categories[s].units[x] for s, x in owner]
    C = scategory_from_tables(N, objects, maps, compose, units, validate=False)
    offsets, start = [], 0
    for D in categories:
        offsets.append(start)
        start += len(D.objects)
    injections = tuple(
        SFunctor(
            D,
            C,
            tuple(offsets[s] + x for x in range(len(D.objects))),
            {
                (x, y): PresheafMap(
                    D.maps[(x, y)], C.maps[(offsets[s] + x, offsets[s] + y)], identity(D.maps[(x, y)]).components
                )
                for x, y in D.pairs()
            },
        )
        for s, D in enumerate(categories)
    )
    return CoproductSCategory(C, injections, tuple(offsets))


def fixed_subcategory(C: SCategory, automorphisms: Sequence[SFunctor]) -> tuple[SCategory, SFunctor]:
    """
    Objects and levelwise simplices fixed by every given automorphism, with the inclusion.

    Composition and units restrict because automorphisms preserve them.
    """
    objects = [x for x in range(len(C.objects)) if all(a.on_objects[x] == x for a in automorphisms)]
    inclusions: dict[Pair, PresheafMap] = {}
    maps: dict[Pair, TruncSSet] = {}
    for i, x in enumerate(objects):
        for j, y in enumerate(objects):
            cone = presheaf.fixed_subobject(C.maps[(x, y)], [a.on_maps[(x, y)] for a in automorphisms])
            maps[(i, j)] = cone.apex  # type: ignore[assignment]
            inclusions[(i, j)] = cone.legs[0]
    position = {
        pair: [{x: k for k, x in enumerate(inc.components[(n,)])} for n in range(C.trunc + 1)]
        for pair, inc in inclusions.items()
    }

    def compose(i: int, j: int, k: int, n: int, g: int, f: int) -> int:
        x, y, z = objects[i], objects[j], objects[k]
        h = C.compose(x, y, z, n, inclusions[(j, k)]((n,), g), inclusions[(i, j)]((n,), f))
        return UNDEFINED if h == UNDEFINED else position[(i, k)][n][h]

    units = [position[(i, i)][0][C.units[x]] for i, x in enumerate(objects)]
    sub = scategory_from_tables(
        C.trunc, [C.objects[x] for x in objects], maps, compose, units, exact=C.exact, validate=False
    )
    inclusion = SFunctor(
        sub,
        C,
        tuple(objects),
        {(i, j): inc.retarget(C.maps[(objects[i], objects[j])]) for (i, j), inc in inclusions.items()},
    )
    return sub, inclusion


# Component category and nerves


@dataclass(frozen=True)
class ComponentCategory:
    """π0 of a simplicial category with the component of every vertex of every mapping space."""

    category: FiniteCategory
    morphism_of: Mapping[Pair, tuple[int, ...]]
    """For each pair, the morphism index of each 0-simplex of the mapping space"""


def component_category(C: SCategory) -> ComponentCategory:
    """
    Build π0C, checking that composition is well defined on components.

    Raises:
        SplurgeEquivariantStructureError: If composition does not respect components
    """
    n_obj = len(C.objects)
    morphisms: list[tuple[Hashable, int, int]] = []
    morphism_of: dict[Pair, tuple[int, ...]] = {}
    for x, y in C.pairs():
        comps = pi0(C.maps[(x, y)])
        base = len(morphisms)
        morphisms.extend(((C.objects[x], C.objects[y], c), x, y) for c in range(len(comps)))
        morphism_of[(x, y)] = tuple(base + c for c in comps.component_of)
    table: dict[tuple[int, int], int] = {}
    for x, y, z in itertools.product(range(n_obj), repeat=3):
        for g in C.maps[(y, z)].simplices(0):
            for f in C.maps[(x, y)].simplices(0):
                h = C.compose(x, y, z, 0, g, f)
                if h == UNDEFINED:
                    continue
                key = (morphism_of[(y, z)][g], morphism_of[(x, y)][f])
                value = morphism_of[(x, z)][h]
                if table.setdefault(key, value) != value:
                    raise SplurgeEquivariantStructureError("Composition is not well defined on components")
    category = FiniteCategory(
        tuple(C.objects),
        tuple(m[0] for m in morphisms),
        tuple(m[1] for m in morphisms),
        tuple(m[2] for m in morphisms),
        tuple(morphism_of[(x, x)][C.units[x]] for x in range(n_obj)),
        table,
    )
    return ComponentCategory(category, morphism_of)


def pi0_category(C: SCategory) -> FiniteCategory:
    """The category of components: same objects, morphisms are π0 of mapping spaces."""
    return component_category(C).category


def simplicial_nerve(C: SCategory) -> TruncBiSSet:
    """
    ``N(C)_{m,n}``: composable strings of m n-simplices of mapping spaces.

    Labels are ``(objects, simplices)`` tuples; horizontal faces compose or drop
    end letters, horizontal degeneracies insert units, vertical operators act
    letterwise.
    """
    N = C.trunc
    shape = BiSimplexShape(N)
    elements: dict[tuple[int, ...], list[Hashable]] = {}
    for n in range(N + 1):
        strings: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((x,), ()) for x in range(len(C.objects))]
        elements[(0, n)] = list(strings)
        for m in range(1, N + 1):
            strings = [
                (objs + (y,), fs + (f,))
                for objs, fs in strings
                for y in range(len(C.objects))
                for f in C.maps[(objs[-1], y)].simplices(n)
            ]
            elements[(m, n)] = list(strings)

    def action(op: presheaf.Operator, label: Any) -> Any:
        objs, fs = label
        m, n = op.source
        i = op.index
        if op.family == "dh":
            if i == 0:
                return objs[1:], fs[1:]
            if i == m:
                return objs[:-1], fs[:-1]
            composite = C.compose(objs[i - 1], objs[i], objs[i + 1], n, fs[i], fs[i - 1])
            return objs[:i] + objs[i + 1 :], fs[: i - 1] + (composite,) + fs[i + 1 :]
        if op.family == "sh":
            return objs[: i + 1] + objs[i:], fs[:i] + (C.unit(objs[i], n),) + fs[i:]
        spaces = [C.maps[(objs[j], objs[j + 1])] for j in range(m)]
        if op.family == "dv":
            return objs, tuple(M.face(i, n, f) for M, f in zip(spaces, fs, strict=True))
        return objs, tuple(M.degen(i, n, f) for M, f in zip(spaces, fs, strict=True))

    X = presheaf.from_elements(TruncBiSSet, shape, elements, action)
    _LOGGER.debug(f"Simplicial nerve of {C.describe()}: {X.describe()}")
    return X


# Simplicial functor enumeration


def iter_sfunctors(
    C: SCategory,
    D: SCategory,
    *,
    budget: int | None = None,
    pair_order: Sequence[Pair] | None = None,
) -> Iterator[SFunctor]:
    """
    Enumerate all simplicial functors ``C -> D``.

    For each object map, pairs are assigned in order; composites of assigned
    pairs and units fix values of later pairs before the simplicial-map search.

    Args:
        C: Source
        D: Target
        budget: Maximum number of search nodes across the enumeration
        pair_order: Assignment order of pairs (default: endomorphism pairs first)

    Raises:
        SplurgeEquivariantSearchBudgetExceededError: If the budget is exhausted
    """
    if C.trunc != D.trunc:
        raise SplurgeEquivariantValueError(f"Truncation mismatch: {C.trunc} vs {D.trunc}")
    n_c = len(C.objects)
    order = list(pair_order) if pair_order is not None else sorted(C.pairs(), key=lambda p: (p[0] != p[1], p))
    nodes = 0

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise SplurgeEquivariantSearchBudgetExceededError(
                f"Simplicial functor enumeration exceeded budget {budget}", details={"budget": budget}
            )

    for F in itertools.product(range(len(D.objects)), repeat=n_c):
        assigned: dict[Pair, PresheafMap] = {}

        def fixed_for(x: int, y: int) -> dict[tuple[int, ...], dict[int, int]] | None:
            fixed: dict[tuple[int, ...], dict[int, int]] = {}

            def put(level: tuple[int, ...], h: int, value: int) -> bool:
                row = fixed.setdefault(level, {})
                return row.setdefault(h, value) == value

            if x == y and not put((0,), C.units[x], D.units[F[x]]):
                return None
            for w in range(n_c):
                if (x, w) not in assigned or (w, y) not in assigned:
                    continue
                first, second = assigned[(x, w)], assigned[(w, y)]
                for n in range(C.trunc + 1):
                    for g in C.maps[(w, y)].simplices(n):
                        for f in C.maps[(x, w)].simplices(n):
                            h = C.compose(x, w, y, n, g, f)
                            value = D.compose(F[x], F[w], F[y], n, second((n,), g), first((n,), f))
                            if UNDEFINED in (h, value):
                                continue
                            if not put((n,), h, value):
                                return None
            return fixed

        def consistent(x: int, y: int) -> bool:
            m = assigned[(x, y)]
            for z in range(n_c):
                if (y, z) in assigned and (x, z) in assigned:
                    if not _preserves(C, D, F, x, y, z, m, assigned[(y, z)], assigned[(x, z)]):
                        return False
                if (z, x) in assigned and (z, y) in assigned:
                    if not _preserves(C, D, F, z, x, y, assigned[(z, x)], m, assigned[(z, y)]):
                        return False
            return True

        def recurse(position: int) -> Iterator[SFunctor]:
            if position == len(order):
                yield SFunctor(C, D, F, dict(assigned))
                return
            x, y = order[position]
            fixed = fixed_for(x, y)
            if fixed is None:
                return
            for m in iter_maps(C.maps[(x, y)], D.maps[(F[x], F[y])], fixed=fixed, budget=budget):
                tick()
                assigned[(x, y)] = m
                if consistent(x, y):
                    yield from recurse(position + 1)
                del assigned[(x, y)]

        yield from recurse(0)


def _preserves(
    C: SCategory,
    D: SCategory,
    F: Sequence[int],
    x: int,
    y: int,
    z: int,
    first: PresheafMap,
    second: PresheafMap,
    composite: PresheafMap,
) -> bool:
    for n in range(C.trunc + 1):
        for g in C.maps[(y, z)].simplices(n):
            for f in C.maps[(x, y)].simplices(n):
                h = C.compose(x, y, z, n, g, f)
                value = D.compose(F[x], F[y], F[z], n, second((n,), g), first((n,), f))
                if UNDEFINED not in (h, value) and composite((n,), h) != value:
                    return False
    return True


def sfunctor_set(C: SCategory, D: SCategory, *, budget: int | None = None) -> list[SFunctor]:
    return list(iter_sfunctors(C, D, budget=budget))


@dataclass
class PairEvidence:
    pair: tuple[Hashable, Hashable]
    isomorphism: bool
    pi0_bijection: bool
    homology_agreement: list[bool]

    @property
    def positive(self) -> bool:
        return self.pi0_bijection and all(self.homology_agreement)

    def to_dict(self) -> dict[str, Any]:
        return {
            "pair": list(self.pair),
            "isomorphism": self.isomorphism,
            "pi0_bijection": self.pi0_bijection,
            "homology_agreement": self.homology_agreement,
        }


@dataclass
class DKReport:
    """Dwyer-Kan evidence: mapping-space comparisons plus the exact check of π0 of the functor."""

    pairs: list[PairEvidence] = field(default_factory=list)
    pi0_fully_faithful: bool = False
    pi0_essentially_surjective: bool = False

    @property
    def verdict(self) -> str:
        if not self.pi0_essentially_surjective:
            return FAIL
        if all(p.isomorphism for p in self.pairs):
            return PASS
        if all(p.positive for p in self.pairs) and self.pi0_fully_faithful:
            return EVIDENCE_PASS
        return FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "pi0_fully_faithful": self.pi0_fully_faithful,
            "pi0_essentially_surjective": self.pi0_essentially_surjective,
            "pairs": [p.to_dict() for p in self.pairs],
        }


def pi0_functor(F: SFunctor) -> FiniteFunctor:
    """π0 of a simplicial functor."""
    source, target = component_category(F.source), component_category(F.target)
    C = F.source
    on_morphisms = [0] * len(source.category.morphisms)
    for (x, y), comps in source.morphism_of.items():
        for v, mor in enumerate(comps):
            on_morphisms[mor] = target.morphism_of[(F.on_objects[x], F.on_objects[y])][F(x, y, 0, v)]
    functor = FiniteFunctor(source.category, target.category, F.on_objects, tuple(on_morphisms))
    functor.validate()
    return functor


def dk_equivalence_evidence(F: SFunctor) -> DKReport:
    """Per-pair evidence on ``Map(x,y) -> Map(Fx,Fy)`` and the exact check of π0F."""
    C = F.source
    report = DKReport()
    for x, y in C.pairs():
        m = F.on_maps[(x, y)]
        pi0_ok, agreement = map_evidence(m)
        report.pairs.append(PairEvidence((C.objects[x], C.objects[y]), m.is_isomorphism(), pi0_ok, agreement))
    functor = pi0_functor(F)
    report.pi0_fully_faithful = functor.is_fully_faithful()
    report.pi0_essentially_surjective = functor.is_essentially_surjective()
    _LOGGER.info(f"DK evidence over {len(report.pairs)} pairs: {report.verdict}")
    return report


@dataclass
class FullyFaithfulReport:
    functors: int
    nerve_maps: int

    @property
    def verdict(self) -> str:
        return PASS if self.functors == self.nerve_maps else FAIL

    def to_dict(self) -> dict[str, Any]:
        return {"verdict": self.verdict, "functors": self.functors, "nerve_maps": self.nerve_maps}


def check_nerve_fully_faithful(C: SCategory, D: SCategory, *, budget: int | None = None) -> FullyFaithfulReport:
    """Compare the number of simplicial functors with the number of maps of simplicial nerves."""
    functors = sum(1 for _ in iter_sfunctors(C, D, budget=budget))
    nerve_maps = presheaf.count_maps(simplicial_nerve(C), simplicial_nerve(D), budget=budget)
    return FullyFaithfulReport(functors, nerve_maps)


# Attaching cells


@dataclass(frozen=True)
class Cell:
    """An n-simplex of morphisms ``source -> target`` glued along ``boundary: ∂Δ[n] -> Map(source, target)``."""

    source: int
    target: int
    dim: int
    boundary: PresheafMap


@dataclass(frozen=True)
class AttachResult:
    """
    A pushout along copies of ``∅ -> {x}`` and ``U∂Δ[n] -> UΔ[n]``.

    Objects of the base keep their indices; new objects follow them.
    """

    base: SCategory
    category: SCategory
    cells: tuple[Cell, ...]
    new_objects: int
    max_letters: int

    @property
    def exact(self) -> bool:
        return self.category.exact

    @property
    def verdict(self) -> str:
        return PASS if self.exact else NONEXACT

    def new_object(self, i: int) -> int:
        return len(self.base.objects) + i

    @cached_property
    def inclusion(self) -> SFunctor:
        """The functor from the base category."""
        B, P = self.base, self.category
        maps = {
            (x, y): PresheafMap(
                B.maps[(x, y)],
                P.maps[(x, y)],
                {
                    (n,): tuple(P.maps[(x, y)].index_of((n,), (w,)) for w in B.maps[(x, y)].simplices(n))
                    for n in range(B.trunc + 1)
                },
            )
            for x, y in B.pairs()
        }
        return SFunctor(B, P, tuple(range(len(B.objects))), maps)

    def unit_label(self, x: int, n: int) -> Hashable:
        if x >= len(self.base.objects):
            return ("id",)
        return (self.base.unit(x, n),)

    def induced_functor(
        self,
        target: AttachResult,
        base_map: SFunctor,
        cell_map: Sequence[int],
        new_object_map: Sequence[int] = (),
    ) -> SFunctor:
        """
        The functor between pushouts induced by compatible attaching data.

        Args:
            target: Pushout receiving the functor
            base_map: Functor between the base categories
            cell_map: Target cell index of each cell
            new_object_map: Target object index of each new object

        Raises:
            SplurgeEquivariantValueError: If the data are not compatible or a word is missing (NONEXACT target)
        """
        F = base_map.on_objects
        for j, cell in enumerate(self.cells):
            other = target.cells[cell_map[j]]
            if (other.source, other.target, other.dim) != (F[cell.source], F[cell.target], cell.dim):
                raise SplurgeEquivariantValueError(f"Cell {j} does not match its image")
            moved = base_map.on_maps[(cell.source, cell.target)].compose(cell.boundary)
            if moved.key != other.boundary.key:
                raise SplurgeEquivariantValueError(f"Cell {j} boundary does not match its image")
        n_base = len(self.base.objects)
        objects = tuple(F) + tuple(new_object_map)
        P, Q = self.category, target.category
        maps = {}
        for u, v in P.pairs():
            M, T = P.maps[(u, v)], Q.maps[(objects[u], objects[v])]
            comps = {}
            for n in range(P.trunc + 1):
                row = []
                for label in M.labels[(n,)]:
                    if label == ("id",):
                        image = target.unit_label(objects[u], n)
                    else:
                        image = self._map_word(label, u, v, n, base_map, cell_map, n_base)
                    try:
                        row.append(T.index_of((n,), image))
                    except SplurgeEquivariantValueError as e:
                        raise SplurgeEquivariantValueError("Image word is missing from the target pushout") from e
                comps[(n,)] = tuple(row)
            maps[(u, v)] = PresheafMap(M, T, comps)
        return SFunctor(P, Q, objects, maps)

    def _map_word(
        self, word: tuple[Any, ...], u: int, v: int, n: int, base_map: SFunctor, cell_map: Sequence[int], n_base: int
    ) -> tuple[Any, ...]:
        endpoints = _word_pairs(self.cells, word, u, v)
        out: list[Any] = []
        for i, letter in enumerate(word):
            if i % 2 == 0:
                x, y = endpoints[i // 2]
                out.append(base_map(x, y, n, letter))
            else:
                j, t = letter
                out.append((cell_map[j], t))
        return tuple(out)


def _word_pairs(cells: Sequence[Cell], word: Sequence[Any], u: int, v: int) -> list[Pair]:
    """Endpoints of the base letters of a word from u to v."""
    letters = [word[i][0] for i in range(1, len(word), 2)]
    stops = [u] + [cells[j].target for j in letters]
    ends = [cells[j].source for j in letters] + [v]
    return list(zip(stops, ends, strict=True))


def letter_bound(C: SCategory, ends: Sequence[Pair]) -> int | None:
    """
    Longest chain of cell letters in a word, or None when letters can repeat without bound.

    Args:
        C: Base simplicial category
        ends: ``(source, target)`` objects of each cell
    """
    if not ends:
        return 0
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(ends)))
    for j, (_, a_target) in enumerate(ends):
        for k, (b_source, _) in enumerate(ends):
            if C.maps[(a_target, b_source)].size((0,)) > 0:
                graph.add_edge(j, k)
    if not nx.is_directed_acyclic_graph(graph):
        return None
    return int(nx.dag_longest_path_length(graph)) + 1


def attach_cells(
    C: SCategory,
    cells: Sequence[Cell] = (),
    *,
    new_objects: Sequence[Hashable] = (),
    budget: int = 6,
    allow_nonexact: bool = False,
) -> AttachResult:
    """
    Pushout of C along coproducts of ``∅ -> {x}`` and ``U∂Δ[n] -> UΔ[n]``.

    New mapping-space simplices are alternating words
    ``w_0, (j_1, t_1), w_1, ..., (j_k, t_k), w_k`` where the ``w`` are simplices
    of C and ``t_i`` is a simplex of ``Δ[dim]`` that meets every vertex.
    Faces that land in the boundary are replaced through the attaching map and
    merged with their neighbours by composition in C.

    Args:
        C: Base simplicial category
        cells: Cells to attach
        new_objects: Labels of disjoint objects to adjoin
        budget: Maximum number of cell letters in a word
        allow_nonexact: Truncate words at the budget instead of raising

    Returns:
        The pushout, flagged NONEXACT when truncated

    Raises:
        SplurgeEquivariantSearchBudgetExceededError: If words exceed the budget and truncation is not allowed
    """
    InputValidator.in_range(budget, 0, 10**6, "attach budget")
    N = C.trunc
    n_base = len(C.objects)
    for cell in cells:
        if not (0 <= cell.source < n_base and 0 <= cell.target < n_base):
            raise SplurgeEquivariantValueError("Cells must be attached between objects of the base category")
        if (
            cell.boundary.source.sizes != boundary(cell.dim, N).sizes
            or cell.boundary.target.sizes != C.maps[(cell.source, cell.target)].sizes
        ):
            raise SplurgeEquivariantValueError("Cell boundary map has the wrong source or target")
    bound = letter_bound(C, [(cell.source, cell.target) for cell in cells])
    exact = True
    if bound is None or bound > budget:
        details = {"budget": budget, "required": bound}
        if not allow_nonexact:
            raise SplurgeEquivariantSearchBudgetExceededError(
                "Attaching creates composite words beyond the budget", details=details
            )
        _LOGGER.warning(f"Attach result truncated at {budget} letters (NONEXACT)")
        exact = False
        bound = budget
    simplices = [standard_simplex(cell.dim, N) for cell in cells]
    surjective = [
        [[t for t in S.labels[(n,)] if len(set(t)) == cell.dim + 1] for n in range(N + 1)]
        for S, cell in zip(simplices, cells, strict=True)
    ]
    n_obj = n_base + len(new_objects)

    def words(u: int, v: int, n: int) -> list[tuple[Any, ...]]:
        result: list[tuple[Any, ...]] = [(w,) for w in C.maps[(u, v)].simplices(n)]
        partial: list[tuple[tuple[Any, ...], int]] = [
            ((w,), j) for j, cell in enumerate(cells) for w in C.maps[(u, cell.source)].simplices(n)
        ]
        for _ in range(bound):
            grown: list[tuple[tuple[Any, ...], int]] = []
            for prefix, j in partial:
                for t in surjective[j][n]:
                    stem = prefix + ((j, t),)
                    b = cells[j].target
                    result.extend(stem + (w,) for w in C.maps[(b, v)].simplices(n))
                    grown.extend(
                        (stem + (w,), k) for k, nxt in enumerate(cells) for w in C.maps[(b, nxt.source)].simplices(n)
                    )
            partial = grown
        return result

    def normalize(pieces: list[Any], u: int, v: int, n: int) -> tuple[Any, ...]:
        """Fold collapsed letters ``("phi", j, value)`` into their neighbours."""
        out: list[Any] = [pieces[0]]
        src = u
        for i in range(1, len(pieces), 2):
            letter, w = pieces[i], pieces[i + 1]
            if letter[0] == "phi":
                _, j, value = letter
                cell = cells[j]
                merged = C.compose(src, cell.source, cell.target, n, value, out[-1])
                end = _segment_end(pieces, i + 1, cells, v)
                out[-1] = C.compose(src, cell.target, end, n, w, merged)
            else:
                out.extend([letter, w])
                src = cells[letter[0]].target
        return tuple(out)

    def face(i: int, n: int, label: Any, u: int, v: int) -> Any:
        if label == ("id",):
            return label
        pairs = _word_pairs(cells, label, u, v)
        pieces: list[Any] = []
        for pos, letter in enumerate(label):
            if pos % 2 == 0:
                x, y = pairs[pos // 2]
                pieces.append(C.maps[(x, y)].face(i, n, letter))
            else:
                j, t = letter
                t2 = t[:i] + t[i + 1 :]
                if len(set(t2)) == cells[j].dim + 1:
                    pieces.append((j, t2))
                else:
                    bd = cells[j].boundary
                    value = bd((n - 1,), bd.source.index_of((n - 1,), t2))
                    pieces.append(("phi", j, value))
        return normalize(pieces, u, v, n - 1)

    def degen(i: int, n: int, label: Any, u: int, v: int) -> Any:
        if label == ("id",):
            return label
        pairs = _word_pairs(cells, label, u, v)
        out: list[Any] = []
        for pos, letter in enumerate(label):
            if pos % 2 == 0:
                x, y = pairs[pos // 2]
                out.append(C.maps[(x, y)].degen(i, n, letter))
            else:
                j, t = letter
                out.append((j, t[: i + 1] + t[i:]))
        return tuple(out)

    maps: dict[Pair, TruncSSet] = {}
    for u, v in itertools.product(range(n_obj), repeat=2):
        if u >= n_base or v >= n_base:
            maps[(u, v)] = discrete_sset([("id",)], N) if u == v else empty_sset(N)
            continue
        elements = {n: words(u, v, n) for n in range(N + 1)}
        maps[(u, v)] = sset_from_elements(
            N,
            elements,
            face=lambda i, n, lbl, u=u, v=v: face(i, n, lbl, u, v),
            degen=lambda i, n, lbl, u=u, v=v: degen(i, n, lbl, u, v),
        )

    def compose(x: int, y: int, z: int, n: int, g: int, f: int) -> int:
        if x >= n_base or y >= n_base or z >= n_base:
            return 0
        first = maps[(x, y)].label((n,), f)
        second = maps[(y, z)].label((n,), g)
        src = x if len(first) == 1 else cells[first[-2][0]].target
        end = z if len(second) == 1 else cells[second[1][0]].source
        joined = first[:-1] + (C.compose(src, y, end, n, second[0], first[-1]),) + second[1:]
        try:
            return maps[(x, z)].index_of((n,), joined)
        except SplurgeEquivariantValueError:
            if exact:
                raise
            return UNDEFINED

    units = [maps[(x, x)].index_of((0,), (C.units[x],)) if x < n_base else 0 for x in range(n_obj)]
    objects = list(C.objects) + [("new", label) for label in new_objects]
    P = scategory_from_tables(N, objects, maps, compose, units, exact=exact and C.exact, validate=exact)
    _LOGGER.debug(f"Attached {len(cells)} cells and {len(new_objects)} objects: {P.describe()}")
    return AttachResult(C, P, tuple(cells), len(new_objects), bound)


def _segment_end(pieces: Sequence[Any], position: int, cells: Sequence[Cell], v: int) -> int:
    """Target object of the base letter at ``position`` in a partially collapsed word."""
    if position + 1 >= len(pieces):
        return v
    letter = pieces[position + 1]
    return cells[letter[1] if letter[0] == "phi" else letter[0]].source


def attach_objects(C: SCategory, labels: Sequence[Hashable]) -> AttachResult:
    """Pushout along copies of ``∅ -> {x}``: disjoint objects with only identities."""
    return attach_cells(C, (), new_objects=labels)


def boundary_cell(C: SCategory, source: int, target: int, dim: int, boundary_map: PresheafMap | None = None) -> Cell:
    """
    A cell with the given boundary; for ``dim == 0`` the boundary is the empty map.

    Raises:
        SplurgeEquivariantValueError: If ``dim > 0`` and no boundary map is given
    """
    if boundary_map is None:
        if dim != 0:
            raise SplurgeEquivariantValueError("A boundary map is required for cells of positive dimension")
        boundary_map = PresheafMap(boundary(0, C.trunc), C.maps[(source, target)], {})
    return Cell(source, target, dim, boundary_map)


# Cube resolution and the homotopy coherent nerve


def _chains(elements: Sequence[tuple[int, ...]], length: int) -> list[tuple[tuple[int, ...], ...]]:
    """Weakly increasing chains (by inclusion) of the given length."""
    chains: list[tuple[tuple[int, ...], ...]] = [(s,) for s in elements]
    for _ in range(length - 1):
        chains = [c + (s,) for c in chains for s in elements if set(c[-1]) <= set(s)]
    return chains


def cube_resolution(n: int, trunc: int) -> SCategory:
    """
    The resolution of ``[n]`` by cube posets.

    ``Map(i, j)`` for ``i <= j`` is the nerve of the poset of subsets of
    ``{i, ..., j}`` containing both ends, ordered by inclusion; composition is
    union of chains; ``Map(i, j)`` is empty for ``i > j``.
    """
    InputValidator.non_negative(n, "resolution dimension")
    maps: dict[Pair, TruncSSet] = {}
    for i, j in itertools.product(range(n + 1), repeat=2):
        if i > j:
            maps[(i, j)] = empty_sset(trunc)
            continue
        inner = list(range(i + 1, j))
        subsets = [
            tuple(sorted({i, j} | set(extra)))
            for r in range(len(inner) + 1)
            for extra in itertools.combinations(inner, r)
        ]
        maps[(i, j)] = sset_from_elements(
            trunc,
            {p: _chains(subsets, p + 1) for p in range(trunc + 1)},
            face=lambda k, p, c: c[:k] + c[k + 1 :],
            degen=lambda k, p, c: c[: k + 1] + c[k:],
        )

    def compose(x: int, y: int, z: int, p: int, g: int, f: int) -> int:
        first, second = maps[(x, y)].label((p,), f), maps[(y, z)].label((p,), g)
        union = tuple(tuple(sorted(set(a) | set(b))) for a, b in zip(first, second, strict=True))
        return maps[(x, z)].index_of((p,), union)

    units = [maps[(i, i)].index_of((0,), ((i,),)) for i in range(n + 1)]
    return scategory_from_tables(trunc, list(range(n + 1)), maps, compose, units)


def cube_functor(f: Sequence[int], source: SCategory, target: SCategory) -> SFunctor:
    """The functor between cube resolutions induced by a monotone map of ordinals."""
    f = tuple(f)
    maps = {}
    for i, j in source.pairs():
        M, T = source.maps[(i, j)], target.maps[(f[i], f[j])]
        maps[(i, j)] = PresheafMap(
            M,
            T,
            {
                (p,): tuple(
                    T.index_of((p,), tuple(tuple(sorted({f[s] for s in S})) for S in chain)) for chain in M.labels[(p,)]
                )
                for p in range(M.trunc + 1)
            },
        )
    return SFunctor(source, target, f, maps)


def coherent_nerve(C: SCategory, up_to: int = 3, *, budget: int | None = None) -> TruncSSet:
    """
    The homotopy coherent nerve: k-simplices are simplicial functors from the cube resolution of ``[k]``.

    Raises:
        SplurgeEquivariantSearchBudgetExceededError: If functor enumeration exceeds the budget
    """
    InputValidator.in_range(up_to, 0, 6, "coherent nerve level")
    N = C.trunc
    cubes = [cube_resolution(k, N) for k in range(up_to + 1)]
    simplices: list[list[SFunctor]] = []
    for k, cube in enumerate(cubes):
        order = sorted(cube.pairs(), key=lambda p: (p[1] - p[0], p))
        simplices.append(list(iter_sfunctors(cube, C, budget=budget, pair_order=order)))
        _LOGGER.debug(f"Coherent nerve level {k}: {len(simplices[-1])} simplices")
    index = [{F.key: i for i, F in enumerate(level)} for level in simplices]
    shape = presheaf.SimplexShape(up_to)
    structure = {}
    for op in shape.operators:
        (k,) = op.source
        if op.family == "d":
            f = tuple(v for v in range(k + 1) if v != op.index)
            move = cube_functor(f, cubes[k - 1], cubes[k])
            structure[op.key] = tuple(index[k - 1][F.compose(move).key] for F in simplices[k])
        else:
            f = tuple(v if v <= op.index else v - 1 for v in range(k + 2))
            move = cube_functor(f, cubes[k + 1], cubes[k])
            structure[op.key] = tuple(index[k + 1][F.compose(move).key] for F in simplices[k])
    labels = {(0,): tuple(C.objects[F.on_objects[0]] for F in simplices[0])}
    sizes = {(k,): len(level) for k, level in enumerate(simplices)}
    return presheaf.make_like(TruncSSet, shape, sizes, structure, labels)

"""
Finite categories and functors between them.

These are the inputs to the ordinary nerve and the outputs of component
categories (π0 of a simplicial category, the homotopy category of a Segal
precategory).

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

import itertools
from collections.abc import Hashable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from .exceptions import SplurgeEquivariantStructureError, SplurgeEquivariantValueError
from .fingroup import FiniteGroup

DOMAINS = ["category"]


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    """
    A finite category with morphisms as indices.

    ``composition[(g, f)]`` is ``g ∘ f`` and is defined exactly when
    ``target[f] == source[g]``.
    """

    objects: tuple[Hashable, ...]
    morphisms: tuple[Hashable, ...]
    source: tuple[int, ...]
    target: tuple[int, ...]
    identities: tuple[int, ...]
    composition: Mapping[tuple[int, int], int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "composition", dict(self.composition))
        self.validate()

    def validate(self) -> None:
        """
        Raises:
            SplurgeEquivariantStructureError: If identity, closure or associativity laws fail
        """
        n_obj, n_mor = len(self.objects), len(self.morphisms)
        if len(set(self.objects)) != n_obj or len(set(self.morphisms)) != n_mor:
            raise SplurgeEquivariantStructureError("Object and morphism labels must be unique")
        if len(self.source) != n_mor or len(self.target) != n_mor or len(self.identities) != n_obj:
            raise SplurgeEquivariantStructureError("Category tables have inconsistent lengths")
        for x, i in enumerate(self.identities):
            if self.source[i] != x or self.target[i] != x:
                raise SplurgeEquivariantStructureError(f"Identity of {self.objects[x]!r} is not an endomorphism")
        for f in range(n_mor):
            for g in self.out_of(self.target[f]):
                h = self.composition.get((g, f))
                if h is None:
                    raise SplurgeEquivariantStructureError(
                        f"Composite {self.morphisms[g]!r}∘{self.morphisms[f]!r} is undefined"
                    )
                if self.source[h] != self.source[f] or self.target[h] != self.target[g]:
                    raise SplurgeEquivariantStructureError("Composite has the wrong endpoints")
            if self.composition[(f, self.identities[self.source[f]])] != f:
                raise SplurgeEquivariantStructureError(f"Right identity law fails for {self.morphisms[f]!r}")
            if self.composition[(self.identities[self.target[f]], f)] != f:
                raise SplurgeEquivariantStructureError(f"Left identity law fails for {self.morphisms[f]!r}")
        for f in range(n_mor):
            for g in self.out_of(self.target[f]):
                for h in self.out_of(self.target[g]):
                    if self.compose(h, self.compose(g, f)) != self.compose(self.compose(h, g), f):
                        raise SplurgeEquivariantStructureError("Composition is not associative")

    @cached_property
    def _out(self) -> dict[int, tuple[int, ...]]:
        table: dict[int, list[int]] = {x: [] for x in range(len(self.objects))}
        for f, s in enumerate(self.source):
            table[s].append(f)
        return {x: tuple(fs) for x, fs in table.items()}

    def out_of(self, x: int) -> tuple[int, ...]:
        return self._out[x]

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        return tuple(f for f in self._out[x] if self.target[f] == y)

    def compose(self, g: int, f: int) -> int:
        try:
            return self.composition[(g, f)]
        except KeyError as e:
            raise SplurgeEquivariantValueError("Morphisms are not composable") from e

    def is_isomorphism(self, f: int) -> bool:
        x, y = self.source[f], self.target[f]
        return any(
            self.composition[(g, f)] == self.identities[x] and self.composition[(f, g)] == self.identities[y]
            for g in self.hom(y, x)
        )

    def isomorphic_objects(self, x: int, y: int) -> bool:
        return any(self.is_isomorphism(f) for f in self.hom(x, y))

    def is_discrete(self) -> bool:
        return len(self.morphisms) == len(self.objects)

    def describe(self) -> str:
        return f"FiniteCategory({len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    def to_dict(self) -> dict[str, Any]:
        return {
            "objects": list(self.objects),
            "morphisms": [
                {"label": m, "source": s, "target": t}
                for m, s, t in zip(self.morphisms, self.source, self.target, strict=True)
            ],
            "identities": list(self.identities),
            "composition": sorted([g, f, h] for (g, f), h in self.composition.items()),
        }


@dataclass(frozen=True)
class FiniteFunctor:
    """A functor between finite categories given on objects and morphisms."""

    source: FiniteCategory
    target: FiniteCategory
    on_objects: tuple[int, ...]
    on_morphisms: tuple[int, ...]

    def validate(self) -> None:
        """
        Raises:
            SplurgeEquivariantStructureError: If identities, endpoints or composites are not preserved
        """
        C, D = self.source, self.target
        for x, i in enumerate(C.identities):
            if self.on_morphisms[i] != D.identities[self.on_objects[x]]:
                raise SplurgeEquivariantStructureError("Functor does not preserve identities")
        for f in range(len(C.morphisms)):
            Ff = self.on_morphisms[f]
            if D.source[Ff] != self.on_objects[C.source[f]] or D.target[Ff] != self.on_objects[C.target[f]]:
                raise SplurgeEquivariantStructureError("Functor does not preserve endpoints")
        for (g, f), h in C.composition.items():
            if D.compose(self.on_morphisms[g], self.on_morphisms[f]) != self.on_morphisms[h]:
                raise SplurgeEquivariantStructureError("Functor does not preserve composition")

    def is_fully_faithful(self) -> bool:
        C, D = self.source, self.target
        for x, y in itertools.product(range(len(C.objects)), repeat=2):
            images = [self.on_morphisms[f] for f in C.hom(x, y)]
            if len(set(images)) != len(images) or len(images) != len(D.hom(self.on_objects[x], self.on_objects[y])):
                return False
        return True

    def is_essentially_surjective(self) -> bool:
        D = self.target
        hit = set(self.on_objects)
        return all(any(D.isomorphic_objects(y, z) for z in hit) for y in range(len(D.objects)))

    def is_equivalence(self) -> bool:
        return self.is_fully_faithful() and self.is_essentially_surjective()


def category_from_composition(
    objects: Sequence[Hashable],
    morphisms: Sequence[tuple[Hashable, int, int]],
    identities: Sequence[int],
    compose: Any,
) -> FiniteCategory:
    """
    Build a category from ``(label, source, target)`` triples and a composition function.

    Args:
        objects: Object labels
        morphisms: Morphism labels with endpoints
        identities: Identity morphism index per object
        compose: ``compose(g, f) -> h`` on indices, called on composable pairs only
    """
    source = tuple(m[1] for m in morphisms)
    target = tuple(m[2] for m in morphisms)
    table = {}
    for f in range(len(morphisms)):
        for g in range(len(morphisms)):
            if source[g] == target[f]:
                table[(g, f)] = compose(g, f)
    return FiniteCategory(tuple(objects), tuple(m[0] for m in morphisms), source, target, tuple(identities), table)


def poset_category(elements: Sequence[Hashable], leq: Any) -> FiniteCategory:
    """
    The category with one morphism ``x -> y`` whenever ``leq(x, y)``.

    Raises:
        SplurgeEquivariantStructureError: If ``leq`` is not reflexive and transitive
    """
    n = len(elements)
    pairs = [(a, b) for a in range(n) for b in range(n) if leq(elements[a], elements[b])]
    index = {p: i for i, p in enumerate(pairs)}
    if any((a, a) not in index for a in range(n)):
        raise SplurgeEquivariantStructureError("Order relation is not reflexive")

    def compose(g: int, f: int) -> int:
        key = (pairs[f][0], pairs[g][1])
        if key not in index:
            raise SplurgeEquivariantStructureError("Order relation is not transitive")
        return index[key]

    return category_from_composition(
        list(elements), [((a, b), a, b) for a, b in pairs], [index[(a, a)] for a in range(n)], compose
    )


def ordinal(n: int) -> FiniteCategory:
    """The ordinal ``[n] = {0 < 1 < ... < n}``."""
    return poset_category(list(range(n + 1)), lambda a, b: a <= b)


def discrete_category(objects: Sequence[Hashable]) -> FiniteCategory:
    return poset_category(list(objects), lambda a, b: a == b)


def group_category(G: FiniteGroup) -> FiniteCategory:
    """One object whose endomorphisms are the elements of G; ``g ∘ f = g·f``."""
    return category_from_composition(
        ["*"], [(name, 0, 0) for name in G.names], [G.identity], lambda g, f: G.mul[g][f]
    )


def codiscrete_category(objects: Sequence[Hashable]) -> FiniteCategory:
    """Exactly one morphism between any two objects (a contractible groupoid)."""
    return poset_category(list(objects), lambda a, b: True)


def walking_isomorphism() -> FiniteCategory:
    """Two objects and a single isomorphism between them."""
    return codiscrete_category([0, 1])


def product_categories(C: FiniteCategory, D: FiniteCategory) -> FiniteCategory:
    objects = [(a, b) for a in C.objects for b in D.objects]
    obj_index = {(a, b): a * len(D.objects) + b for a in range(len(C.objects)) for b in range(len(D.objects))}
    pairs = [(f, g) for f in range(len(C.morphisms)) for g in range(len(D.morphisms))]
    index = {p: i for i, p in enumerate(pairs)}
    morphisms = [
        (
            (C.morphisms[f], D.morphisms[g]),
            obj_index[(C.source[f], D.source[g])],
            obj_index[(C.target[f], D.target[g])],
        )
        for f, g in pairs
    ]
    identities = [
        index[(C.identities[a], D.identities[b])] for a in range(len(C.objects)) for b in range(len(D.objects))
    ]
    return category_from_composition(
        objects,
        morphisms,
        identities,
        lambda h, k: index[(C.compose(pairs[h][0], pairs[k][0]), D.compose(pairs[h][1], pairs[k][1]))],
    )


def coproduct_categories(*categories: FiniteCategory) -> FiniteCategory:
    objects: list[Hashable] = []
    morphisms: list[tuple[Hashable, int, int]] = []
    identities: list[int] = []
    offsets = []
    obj_offset = mor_offset = 0
    for tag, C in enumerate(categories):
        offsets.append((obj_offset, mor_offset))
        objects.extend((tag, x) for x in C.objects)
        morphisms.extend(
            ((tag, m), s + obj_offset, t + obj_offset)
            for m, s, t in zip(C.morphisms, C.source, C.target, strict=True)
        )
        identities.extend(i + mor_offset for i in C.identities)
        obj_offset += len(C.objects)
        mor_offset += len(C.morphisms)
    owner = [(tag, m) for tag, C in enumerate(categories) for m in range(len(C.morphisms))]

    def compose(g: int, f: int) -> int:
        tag, gl = owner[g]
        _, fl = owner[f]
        return categories[tag].compose(gl, fl) + offsets[tag][1]

    return category_from_composition(objects, morphisms, identities, compose)


def category_from_json(data: Mapping[str, Any]) -> FiniteCategory:
    """Inverse of :meth:`FiniteCategory.to_dict` (labels already frozen by the caller)."""
    morphisms = data["morphisms"]
    return FiniteCategory(
        tuple(data["objects"]),
        tuple(m["label"] for m in morphisms),
        tuple(int(m["source"]) for m in morphisms),
        tuple(int(m["target"]) for m in morphisms),
        tuple(int(i) for i in data["identities"]),
        {(int(g), int(f)): int(h) for g, f, h in data["composition"]},
    )

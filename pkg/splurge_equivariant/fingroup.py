"""
Finite groups, subgroups, G-sets and the orbit category.

Groups are given by explicit multiplication tables over named elements. Every
operation here is exhaustive: subgroups are enumerated by closure, equivariant
maps by orbit representatives, and the orbit category stores its hom-sets as
explicit point maps.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from .exceptions import (
    SplurgeEquivariantConfigurationError,
    SplurgeEquivariantInvalidSubgroupError,
    SplurgeEquivariantParsingError,
    SplurgeEquivariantStructureError,
    SplurgeEquivariantValueError,
)

DOMAINS = ["group", "orbit"]

_LOGGER = logging.getLogger(__name__)

# Largest symmetric group offered by name.
_MAX_SYMMETRIC_DEGREE = 4


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by a multiplication table over element indices."""

    names: tuple[str, ...]
    mul: tuple[tuple[int, ...], ...]
    identity: int
    name: str = "G"

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(str(n) for n in self.names))
        object.__setattr__(self, "mul", tuple(tuple(row) for row in self.mul))
        self._check_axioms()

    def _check_axioms(self) -> None:
        n = len(self.names)
        if n == 0:
            raise SplurgeEquivariantStructureError("A group needs at least one element")
        if len(set(self.names)) != n:
            raise SplurgeEquivariantStructureError("Group element names must be unique")
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise SplurgeEquivariantStructureError(f"Multiplication table must be {n}x{n}")
        if any(not 0 <= v < n for row in self.mul for v in row):
            raise SplurgeEquivariantStructureError("Multiplication table entries out of range")
        if not 0 <= self.identity < n:
            raise SplurgeEquivariantStructureError(f"Identity index {self.identity} out of range")
        e = self.identity
        for g in range(n):
            if self.mul[e][g] != g or self.mul[g][e] != g:
                raise SplurgeEquivariantStructureError(
                    f"Element {self.names[e]} is not a two-sided identity", details={"element": self.names[g]}
                )
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                raise SplurgeEquivariantStructureError(
                    "Multiplication is not associative",
                    details={"triple": [self.names[a], self.names[b], self.names[c]]},
                )
        for g in range(n):
            if e not in self.mul[g]:
                raise SplurgeEquivariantStructureError(f"Element {self.names[g]} has no inverse")

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    @cached_property
    def inv(self) -> tuple[int, ...]:
        return tuple(row.index(self.identity) for row in self.mul)

    def multiply(self, *factors: int) -> int:
        result = self.identity
        for g in factors:
            result = self.mul[result][g]
        return result

    def element(self, name: str) -> int:
        try:
            return self.names.index(str(name))
        except ValueError as e:
            raise SplurgeEquivariantValueError(f"Unknown element {name!r} of group {self.name}") from e

    @cached_property
    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, frozenset({self.identity}))

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, frozenset(self.elements))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup, stored as its member indices."""

    parent: FiniteGroup = field(compare=False)
    members: frozenset[int]

    def __post_init__(self) -> None:
        G = self.parent
        if G.identity not in self.members:
            raise SplurgeEquivariantInvalidSubgroupError("Subgroup must contain the identity")
        for a in self.members:
            if G.inv[a] not in self.members:
                raise SplurgeEquivariantInvalidSubgroupError(
                    f"Subgroup is not closed under inverses ({G.names[a]})"
                )
            for b in self.members:
                if G.mul[a][b] not in self.members:
                    raise SplurgeEquivariantInvalidSubgroupError(
                        f"Subgroup is not closed under multiplication ({G.names[a]}*{G.names[b]})"
                    )

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.members), tuple(sorted(self.members)))

    @property
    def member_names(self) -> list[str]:
        return [self.parent.names[g] for g in sorted(self.members)]

    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def contains(self, other: Subgroup) -> bool:
        return other.members <= self.members

    def label(self) -> str:
        if self.is_trivial():
            return "e"
        if len(self.members) == self.parent.order:
            return self.parent.name
        return "<" + ",".join(self.member_names) + ">"

    def __contains__(self, g: object) -> bool:
        return g in self.members

    def __lt__(self, other: Subgroup) -> bool:
        return self.sort_key < other.sort_key

    def __repr__(self) -> str:
        return f"Subgroup({self.label()})"


def subgroup_closure(G: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``generators``."""
    members = {G.identity}
    frontier = set(generators)
    while frontier:
        members |= frontier
        frontier = {G.mul[a][b] for a in members for b in members} - members
    return Subgroup(G, frozenset(members))


def subgroup_from_names(G: FiniteGroup, names: Sequence[str]) -> Subgroup:
    """
    Subgroup given by a member list of element names.

    Raises:
        SplurgeEquivariantInvalidSubgroupError: If the members do not form a subgroup
    """
    try:
        members = frozenset(G.element(n) for n in names)
    except SplurgeEquivariantValueError as e:
        raise SplurgeEquivariantInvalidSubgroupError(e.message) from e
    return Subgroup(G, members)


def subgroups(G: FiniteGroup) -> list[Subgroup]:
    """
    Every subgroup of G exactly once, ordered by (order, sorted members).

    Subgroups are found as closures of joins, starting from the cyclic ones.

    Examples:
        >>> len(subgroups(symmetric_group(3)))
        6
    """
    found: set[frozenset[int]] = {subgroup_closure(G, [g]).members for g in G.elements}
    frontier = set(found)
    while frontier:
        new: set[frozenset[int]] = set()
        for a in frontier:
            for b in found:
                joined = subgroup_closure(G, a | b).members
                if joined not in found:
                    new.add(joined)
        found |= new
        frontier = new
    result = sorted(Subgroup(G, members) for members in found)
    _LOGGER.debug(f"Group {G.name} has {len(result)} subgroups")
    return result


def conjugate_subgroup(H: Subgroup, g: int) -> Subgroup:
    """``g H g^-1``."""
    G = H.parent
    return Subgroup(G, frozenset(G.multiply(g, h, G.inv[g]) for h in H.members))


def normalizer(H: Subgroup) -> Subgroup:
    G = H.parent
    return Subgroup(G, frozenset(g for g in G.elements if conjugate_subgroup(H, g).members == H.members))


def require_subgroup(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """
    Raises:
        SplurgeEquivariantInvalidSubgroupError: If H belongs to another group
    """
    if H.parent is not G and (H.parent.names != G.names or H.parent.mul != G.mul):
        raise SplurgeEquivariantInvalidSubgroupError(f"{H!r} is not a subgroup of {G!r}")
    return H


@dataclass(frozen=True, eq=False)
class GSet:
    """A finite G-set: ``act[g][x]`` is the image of point ``x`` under ``g``."""

    group: FiniteGroup
    points: tuple[Any, ...]
    act: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        G = self.group
        n = len(self.points)
        if len(self.act) != G.order or any(len(row) != n for row in self.act):
            raise SplurgeEquivariantStructureError("G-set action table has the wrong shape")
        if any(self.act[G.identity][x] != x for x in range(n)):
            raise SplurgeEquivariantStructureError("Identity does not act trivially")
        for g, h in itertools.product(G.elements, repeat=2):
            gh = G.mul[g][h]
            if any(self.act[g][self.act[h][x]] != self.act[gh][x] for x in range(n)):
                raise SplurgeEquivariantStructureError(
                    f"Action is not compatible with multiplication ({G.names[g]}, {G.names[h]})"
                )

    @property
    def size(self) -> int:
        return len(self.points)

    def __call__(self, g: int, x: int) -> int:
        return self.act[g][x]

    def stabilizer(self, x: int) -> Subgroup:
        return Subgroup(self.group, frozenset(g for g in self.group.elements if self.act[g][x] == x))

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits as sorted point tuples, ordered by their smallest point."""
        seen: set[int] = set()
        result = []
        for x in range(self.size):
            if x in seen:
                continue
            orbit = tuple(sorted({self.act[g][x] for g in self.group.elements}))
            seen.update(orbit)
            result.append(orbit)
        return result

    def is_transitive(self) -> bool:
        return len(self.orbits()) <= 1


def coset_gset(G: FiniteGroup, H: Subgroup) -> GSet:
    """
    The orbit G/H of left cosets with ``g'·(gH) = (g'g)H``.

    Cosets are ordered by their smallest member; each point is labelled by the
    sorted member names of its coset.

    Raises:
        SplurgeEquivariantInvalidSubgroupError: If H is not a subgroup of G
    """
    require_subgroup(G, H)
    cosets: list[tuple[int, ...]] = []
    coset_of: dict[int, int] = {}
    for g in G.elements:
        if g in coset_of:
            continue
        coset = tuple(sorted(G.mul[g][h] for h in H.members))
        for member in coset:
            coset_of[member] = len(cosets)
        cosets.append(coset)
    act = tuple(tuple(coset_of[G.mul[a][coset[0]]] for coset in cosets) for a in G.elements)
    points = tuple(tuple(G.names[m] for m in coset) for coset in cosets)
    return GSet(G, points, act)


def coset_index(G: FiniteGroup, H: Subgroup, g: int) -> int:
    """Index in ``coset_gset(G, H)`` of the coset ``gH``."""
    reps = sorted(min(G.mul[x][h] for h in H.members) for x in G.elements)
    ordered = list(dict.fromkeys(reps))
    return ordered.index(min(G.mul[g][h] for h in H.members))


def fixed_points_gset(X: GSet, K: Subgroup) -> tuple[int, ...]:
    """Points fixed by every element of K."""
    require_subgroup(X.group, K)
    return tuple(x for x in range(X.size) if all(X.act[k][x] == x for k in K.members))


def equivariant_maps(X: GSet, Y: GSet) -> list[tuple[int, ...]]:
    """
    All G-equivariant maps ``X -> Y`` as point tuples.

    A map is fixed by choosing, for each orbit representative x, an image y
    whose stabilizer contains the stabilizer of x.
    """
    G = X.group
    reps = [orbit[0] for orbit in X.orbits()]
    choices = []
    for x in reps:
        stab = X.stabilizer(x).members
        choices.append([y for y in range(Y.size) if all(Y.act[g][y] == y for g in stab)])
    result = []
    for picks in itertools.product(*choices):
        image = [-1] * X.size
        for x, y in zip(reps, picks, strict=True):
            for g in G.elements:
                image[X.act[g][x]] = Y.act[g][y]
        result.append(tuple(image))
    return sorted(result)


@dataclass(frozen=True, eq=False)
class OrbitCategory:
    """The orbit category: one object G/H per subgroup, homs are equivariant point maps."""

    group: FiniteGroup
    objects: tuple[Subgroup, ...]
    orbits: tuple[GSet, ...]
    homs: dict[tuple[int, int], tuple[tuple[int, ...], ...]]

    def hom(self, i: int, j: int) -> tuple[tuple[int, ...], ...]:
        return self.homs[(i, j)]

    def object_index(self, H: Subgroup) -> int:
        for i, K in enumerate(self.objects):
            if K.members == H.members:
                return i
        raise SplurgeEquivariantInvalidSubgroupError(f"{H!r} is not an object of the orbit category")

    @cached_property
    def trivial_index(self) -> int:
        return self.object_index(self.group.trivial_subgroup)

    def identity(self, i: int) -> int:
        return self.homs[(i, i)].index(tuple(range(self.orbits[i].size)))

    def compose(self, i: int, j: int, k: int, second: int, first: int) -> int:
        """Index of ``homs[j,k][second] ∘ homs[i,j][first]`` in ``homs[i,k]``."""
        b = self.homs[(j, k)][second]
        a = self.homs[(i, j)][first]
        return self._hom_index[(i, k)][tuple(b[x] for x in a)]

    @cached_property
    def _hom_index(self) -> dict[tuple[int, int], dict[tuple[int, ...], int]]:
        return {pair: {m: n for n, m in enumerate(maps)} for pair, maps in self.homs.items()}

    def map_index(self, i: int, j: int, points: Sequence[int]) -> int:
        return self._hom_index[(i, j)][tuple(points)]

    def right_translation(self, g: int) -> int:
        """Index in hom(G/e, G/e) of the map ``x ↦ xg``."""
        G = self.group
        e = self.trivial_index
        orbit = self.orbits[e]
        where = {point: n for n, point in enumerate(orbit.points)}
        points = tuple(where[(G.names[G.mul[G.element(p[0])][g]],)] for p in orbit.points)
        return self._hom_index[(e, e)][points]

    def validate(self) -> None:
        """
        Check equivariance, identities, closure under composition and associativity.

        Raises:
            SplurgeEquivariantStructureError: If a stored map or composite is invalid
        """
        G = self.group
        n = len(self.objects)
        for (i, j), maps in self.homs.items():
            X, Y = self.orbits[i], self.orbits[j]
            for m in maps:
                if any(m[X.act[g][x]] != Y.act[g][m[x]] for g in G.elements for x in range(X.size)):
                    raise SplurgeEquivariantStructureError(f"Stored map {i}->{j} is not equivariant")
        for i in range(n):
            self.identity(i)
        for i, j, k in itertools.product(range(n), repeat=3):
            for b in range(len(self.homs[(j, k)])):
                for a in range(len(self.homs[(i, j)])):
                    try:
                        self.compose(i, j, k, b, a)
                    except KeyError as e:
                        raise SplurgeEquivariantStructureError(f"Composite {i}->{j}->{k} is not stored") from e

    def to_dict(self) -> dict[str, Any]:
        return {
            "group": self.group.name,
            "objects": [H.member_names for H in self.objects],
            "homs": [
                {"source": i, "target": j, "maps": [list(m) for m in maps]}
                for (i, j), maps in sorted(self.homs.items())
            ],
        }


def orbit_category(G: FiniteGroup) -> OrbitCategory:
    """
    Build the orbit category of G with exhaustively enumerated hom-sets.

    Examples:
        >>> O = orbit_category(cyclic_group(2))
        >>> [len(O.hom(i, j)) for i in range(2) for j in range(2)]
        [2, 1, 0, 1]
    """
    objects = tuple(subgroups(G))
    orbits = tuple(coset_gset(G, H) for H in objects)
    homs = {
        (i, j): tuple(equivariant_maps(orbits[i], orbits[j]))
        for i in range(len(objects))
        for j in range(len(objects))
    }
    category = OrbitCategory(G, objects, orbits, homs)
    category.validate()
    _LOGGER.debug(f"Orbit category of {G.name}: {len(objects)} objects, {sum(map(len, homs.values()))} maps")
    return category


@dataclass(frozen=True)
class FSubgroupFamily:
    """A set of subgroups over which equivariant evidence is collected."""

    group: FiniteGroup = field(compare=False)
    members: tuple[Subgroup, ...]

    @classmethod
    def all_subgroups(cls, G: FiniteGroup) -> FSubgroupFamily:
        return cls(G, tuple(subgroups(G)))

    @classmethod
    def from_member_lists(cls, G: FiniteGroup, lists: Sequence[Sequence[str]]) -> FSubgroupFamily:
        """
        Raises:
            SplurgeEquivariantConfigurationError: If a member list is not a subgroup
        """
        members = []
        for names in lists:
            try:
                members.append(subgroup_from_names(G, names))
            except SplurgeEquivariantInvalidSubgroupError as e:
                raise SplurgeEquivariantConfigurationError(
                    f"Unknown subgroup in family: {list(names)}", details={"details": e.message}
                ) from e
        unique = {H.members: H for H in members}
        return cls(G, tuple(sorted(unique.values())))

    def contains_trivial(self) -> bool:
        return any(H.is_trivial() for H in self.members)

    def require_trivial(self) -> None:
        """
        Raises:
            SplurgeEquivariantConfigurationError: If the trivial subgroup is missing
        """
        if not self.contains_trivial():
            raise SplurgeEquivariantConfigurationError(
                "The orbit comparison needs the trivial subgroup in the family"
            )

    def __iter__(self) -> Iterator[Subgroup]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _group_from_rule(name: str, labels: Sequence[str], rule: Any, identity: int = 0) -> FiniteGroup:
    n = len(labels)
    return FiniteGroup(tuple(labels), tuple(tuple(rule(a, b) for b in range(n)) for a in range(n)), identity, name)


def trivial_group() -> FiniteGroup:
    return FiniteGroup(("e",), ((0,),), 0, "trivial")


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n with elements named ``0..n-1``."""
    if n < 1:
        raise SplurgeEquivariantValueError(f"Cyclic group order must be positive, got {n}")
    return _group_from_rule(f"Z{n}", [str(k) for k in range(n)], lambda a, b: (a + b) % n)


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on ``0..n-1``; elements named by one-line notation, ``(στ)(i) = σ(τ(i))``."""
    if not 1 <= n <= _MAX_SYMMETRIC_DEGREE:
        raise SplurgeEquivariantValueError(f"Symmetric group degree must lie in [1, {_MAX_SYMMETRIC_DEGREE}]")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    return _group_from_rule(
        f"S{n}",
        ["".join(map(str, p)) for p in perms],
        lambda a, b: index[tuple(perms[a][perms[b][i]] for i in range(n))],
    )


def dihedral_group(n: int) -> FiniteGroup:
    """D_n of order 2n; ``r<k>`` are rotations and ``s<k>`` reflections ``r^k s``."""
    if n < 1:
        raise SplurgeEquivariantValueError(f"Dihedral group parameter must be positive, got {n}")
    elements = [(k, 0) for k in range(n)] + [(k, 1) for k in range(n)]
    index = {x: i for i, x in enumerate(elements)}

    def rule(a: int, b: int) -> int:
        (k1, f1), (k2, f2) = elements[a], elements[b]
        return index[((k1 + (-k2 if f1 else k2)) % n, (f1 + f2) % 2)]

    return _group_from_rule(f"D{n}", [("s" if f else "r") + str(k) for k, f in elements], rule)


def group_by_name(name: str) -> FiniteGroup:
    """
    Built-in group by name: ``trivial``, ``Z<n>``, ``D<n>`` or ``S<n>`` (``Z/n`` also accepted).

    Raises:
        SplurgeEquivariantValueError: If the name is not recognized
    """
    key = name.strip().replace("/", "")
    if key.lower() in ("trivial", "e", "1"):
        return trivial_group()
    prefix, digits = key[:1].upper(), key[1:]
    if digits.isdigit():
        if prefix == "Z":
            return cyclic_group(int(digits))
        if prefix == "D":
            return dihedral_group(int(digits))
        if prefix == "S":
            return symmetric_group(int(digits))
    raise SplurgeEquivariantValueError(f"Unknown built-in group: {name}")


def group_from_json(data: dict[str, Any], *, name: str = "G") -> FiniteGroup:
    """
    Parse ``{"elements": [...], "mul": [[...]], "id": i}``.

    ``mul`` entries may be element indices or element names.

    Raises:
        SplurgeEquivariantParsingError: If a field is missing or malformed
        SplurgeEquivariantStructureError: If the table fails the group axioms
    """
    for key in ("elements", "mul", "id"):
        if key not in data:
            raise SplurgeEquivariantParsingError(f"Group payload is missing field: {key}", details={"field": key})
    elements = [str(e) for e in data["elements"]]
    lookup = {e: i for i, e in enumerate(elements)}

    def resolve(value: Any, where: str) -> int:
        if isinstance(value, bool):
            raise SplurgeEquivariantParsingError(f"Invalid group entry at {where}", details={"field": where})
        if isinstance(value, int):
            return value
        if str(value) in lookup:
            return lookup[str(value)]
        raise SplurgeEquivariantParsingError(f"Unknown element {value!r} at {where}", details={"field": where})

    rows = data["mul"]
    if not isinstance(rows, list):
        raise SplurgeEquivariantParsingError("Group field 'mul' must be a list of rows", details={"field": "mul"})
    mul = tuple(
        tuple(resolve(v, f"mul[{i}][{j}]") for j, v in enumerate(row)) for i, row in enumerate(rows)
    )
    return FiniteGroup(tuple(elements), mul, resolve(data["id"], "id"), str(data.get("name", name)))


def group_to_json(G: FiniteGroup) -> dict[str, Any]:
    return {"name": G.name, "elements": list(G.names), "mul": [list(row) for row in G.mul], "id": G.identity}

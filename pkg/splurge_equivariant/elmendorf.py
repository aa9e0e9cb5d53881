"""
Orbit diagrams and the comparison between G-objects and diagrams over the orbit category.

An orbit diagram assigns a carrier value to every orbit ``G/H`` and a map
``F(G/H_j) -> F(G/H_i)`` to every equivariant map ``G/H_i -> G/H_j``.
Restriction to ``G/e`` gives a G-object; the strict pointwise left Kan
extension goes back. Only the underlying adjunction is computed: derived
functors and cofibrant replacement are not.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from . import presheaf
from .equivariant import Carrier, GObject, carrier_for, equivariant_homs, fixed_points, is_equivariant
from .exceptions import (
    SplurgeEquivariantSearchBudgetExceededError,
    SplurgeEquivariantStructureError,
    SplurgeEquivariantUnsupportedCarrierError,
    SplurgeEquivariantValueError,
)
from .fingroup import OrbitCategory, coset_index, orbit_category
from .presheaf import Cocone, Presheaf
from .reports import FAIL, PASS
from .scat import SCategory, SFunctor, empty_scategory

DOMAINS = ["equivariant", "orbit-diagram"]

_LOGGER = logging.getLogger(__name__)

STRICT_NOTE = "strict pointwise Kan extension; derived functors are not computed"

# (source orbit, target orbit, hom index)
Arrow = tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class OrbitDiagram:
    """
    A contravariant functor on the orbit category.

    ``maps[(i, j, k)]`` is the value of the k-th map ``G/H_i -> G/H_j``, a
    carrier morphism ``values[j] -> values[i]``.
    """

    orbits: OrbitCategory
    values: tuple[Any, ...]
    maps: Mapping[Arrow, Any]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(self, "maps", dict(self.maps))
        if len(self.values) != len(self.orbits.objects):
            raise SplurgeEquivariantStructureError("One value per orbit is required")

    @property
    def carrier(self) -> Carrier:
        return carrier_for(self.values[self.orbits.trivial_index])

    def arrows(self) -> Iterator[Arrow]:
        for (i, j), homs in sorted(self.orbits.homs.items()):
            for k in range(len(homs)):
                yield (i, j, k)

    def validate(self) -> None:
        """
        Raises:
            SplurgeEquivariantStructureError: If a map is missing or functoriality fails
        """
        C, O = self.carrier, self.orbits
        for i, j, k in self.arrows():
            if (i, j, k) not in self.maps:
                raise SplurgeEquivariantStructureError(f"Missing map for arrow {i}->{j} #{k}")
        for i in range(len(O.objects)):
            ident = C.key(C.identity(self.values[i]))
            if C.key(self.maps[(i, i, O.identity(i))]) != ident:
                raise SplurgeEquivariantStructureError(f"Identity of orbit {i} is not sent to an identity")
        n = len(O.objects)
        for i in range(n):
            for j in range(n):
                for a in range(len(O.hom(i, j))):
                    for k in range(n):
                        for b in range(len(O.hom(j, k))):
                            ba = O.compose(i, j, k, b, a)
                            left = C.key(self.maps[(i, k, ba)])
                            right = C.key(C.compose(self.maps[(i, j, a)], self.maps[(j, k, b)]))
                            if left != right:
                                raise SplurgeEquivariantStructureError(
                                    f"Functoriality fails on {i}->{j}->{k}"
                                )

    def describe(self) -> str:
        return f"OrbitDiagram({self.orbits.group.name}, {len(self.values)} orbits)"


# Orbit diagrams from G-objects


def constant_diagram(orbits: OrbitCategory, value: Any) -> OrbitDiagram:
    """Every orbit sent to ``value`` and every map to the identity."""
    C = carrier_for(value)
    ident = C.identity(value)
    values = tuple(value for _ in orbits.objects)
    skeleton = OrbitDiagram(orbits, values, {})
    return OrbitDiagram(orbits, values, {arrow: ident for arrow in skeleton.arrows()})


def fixed_point_diagram(X: GObject, orbits: OrbitCategory | None = None) -> OrbitDiagram:
    """
    ``G/H ↦ X^H``.

    A map ``f: G/H_i -> G/H_j`` with ``f(eH_i) = gH_j`` acts as ``x ↦ g·x``.
    """
    G = X.group
    O = orbits or orbit_category(G)
    C = X.carrier
    fixed = [fixed_points(X, H) for H in O.objects]
    base = [coset_index(G, H, G.identity) for H in O.objects]
    maps = {}
    for (i, j), homs in O.homs.items():
        for k, f in enumerate(homs):
            g = G.element(O.orbits[j].points[f[base[i]]][0])
            moved = C.compose(X.action[g], fixed[j].inclusion)
            maps[(i, j, k)] = C.corestrict(moved, fixed[i].inclusion)
    return OrbitDiagram(O, tuple(F.value for F in fixed), maps)


# Restriction and left Kan extension


def elmendorf_restrict(F: OrbitDiagram) -> GObject:
    """The value at ``G/e`` with g acting by ``F(x ↦ xg)``."""
    O = F.orbits
    e = O.trivial_index
    action = tuple(F.maps[(e, e, O.right_translation(g))] for g in O.group.elements)
    return GObject(O.group, F.values[e], action)


@dataclass(frozen=True, eq=False)
class KanExtension:
    """
    ``i_* X`` with the colimit data needed to map out of it.

    At orbit i the value is the colimit over ``u: G/H_i -> G/e`` of copies of X,
    where ``g`` identifies copy ``r_g ∘ u'`` with copy ``u'`` through ``g·``.
    """

    source: GObject
    diagram: OrbitDiagram
    copies: tuple[tuple[int, ...], ...]
    cocones: tuple[Cocone | None, ...]
    translations: Mapping[int, int] = field(default_factory=dict)

    def leg(self, i: int, u: int) -> Any:
        """The map from copy u into the value at orbit i."""
        cocone = self.cocones[i]
        if cocone is not None:
            return cocone.legs[self.copies[i].index(u)]
        return self.source.action[self.translations[u]]

    def induced(self, i: int, target: Any, maps: Mapping[int, Any]) -> Any:
        """
        The map out of the value at orbit i restricting to ``maps[u]`` on copy u.

        Raises:
            SplurgeEquivariantValueError: If the maps are not compatible with the identifications
        """
        value = self.diagram.values[i]
        us = self.copies[i]
        if not us:
            if isinstance(value, SCategory):
                return SFunctor(value, target, (), {})
            return presheaf.map_from_empty(value, target)
        cocone = self.cocones[i]
        if cocone is not None:
            return cocone.induced(target, [maps[u] for u in us])
        C = self.source.carrier
        identity_copy = self.diagram.orbits.identity(i)
        result = maps[identity_copy]
        for u in us:
            expected = C.compose(result, self.source.action[self.translations[u]])
            if C.key(expected) != C.key(maps[u]):
                raise SplurgeEquivariantValueError("Maps disagree on identified copies")
        return result


def elmendorf_lan(X: GObject, orbits: OrbitCategory | None = None) -> KanExtension:
    """
    The pointwise left Kan extension of X along ``G -> O_G^op``.

    Orbits with no map to ``G/e`` receive the initial object. Simplicial
    categories only meet this case and the codiscrete one at ``G/e``, where the
    colimit is X itself.
    """
    G = X.group
    O = orbits or orbit_category(G)
    e = O.trivial_index
    n = len(O.objects)
    C = X.carrier
    r = [O.right_translation(g) for g in G.elements]
    copies = tuple(tuple(range(len(O.hom(i, e)))) for i in range(n))
    values: list[Any] = []
    cocones: list[Cocone | None] = []
    translations: dict[int, int] = {}

    if isinstance(X.value, SCategory):
        for i in range(n):
            if copies[i] and i != e:
                raise SplurgeEquivariantUnsupportedCarrierError(
                    "Kan extension of simplicial categories needs empty comma categories off G/e"
                )
            values.append(X.value if i == e else empty_scategory(X.value.trunc))
            cocones.append(None)
        translations = {r[g]: g for g in G.elements}
    elif isinstance(X.value, Presheaf):
        for i in range(n):
            if not copies[i]:
                values.append(presheaf.empty_like(X.value.shape, type(X.value)))
                cocones.append(None)
                continue
            arrows = []
            for u2 in copies[i]:
                for g in G.elements:
                    u = O.compose(i, e, e, r[g], u2)
                    arrows.append((u, u2, X.action[g]))
            cocone = presheaf.colimit([X.value] * len(copies[i]), arrows)
            values.append(cocone.apex)
            cocones.append(cocone)
    else:
        raise SplurgeEquivariantUnsupportedCarrierError(f"Unsupported carrier value: {type(X.value).__name__}")

    skeleton = OrbitDiagram(O, tuple(values), {})
    partial = KanExtension(X, skeleton, copies, tuple(cocones), translations)
    maps = {}
    for i, j, k in skeleton.arrows():
        maps[(i, j, k)] = partial.induced(
            j, values[i], {u: partial.leg(i, O.compose(i, j, e, u, k)) for u in copies[j]}
        )
    diagram = OrbitDiagram(O, tuple(values), maps)
    _LOGGER.debug(f"Kan extension over {G.name}: copies per orbit {[len(c) for c in copies]}")
    return KanExtension(X, diagram, copies, tuple(cocones), translations)


def unit(lan: KanExtension) -> Any:
    """``η: X -> i^* i_* X``, the leg at the identity copy."""
    O = lan.diagram.orbits
    e = O.trivial_index
    return lan.leg(e, O.identity(e))


def counit(lan: KanExtension, F: OrbitDiagram) -> tuple[Any, ...]:
    """
    ``ε: i_* i^* F -> F`` componentwise; ``lan`` must extend ``elmendorf_restrict(F)``.

    Copy u at orbit i goes to ``F(u)``.
    """
    O = F.orbits
    e = O.trivial_index
    return tuple(
        lan.induced(i, F.values[i], {u: F.maps[(i, e, u)] for u in lan.copies[i]})
        for i in range(len(O.objects))
    )


def lan_map(source: KanExtension, target: KanExtension, f: Any) -> tuple[Any, ...]:
    """``i_* f`` componentwise for an equivariant map ``f``."""
    C = source.source.carrier
    return tuple(
        source.induced(i, target.diagram.values[i], {u: C.compose(target.leg(i, u), f) for u in source.copies[i]})
        for i in range(len(source.copies))
    )


# Natural transformations


def is_natural(source: OrbitDiagram, target: OrbitDiagram, components: Sequence[Any]) -> bool:
    C = source.carrier
    return all(
        C.key(C.compose(components[i], source.maps[(i, j, k)]))
        == C.key(C.compose(target.maps[(i, j, k)], components[j]))
        for i, j, k in source.arrows()
    )


def diagram_homs(source: OrbitDiagram, target: OrbitDiagram, *, budget: int | None = None) -> Iterator[tuple[Any, ...]]:
    """
    All natural transformations, assigned orbit by orbit.

    Each new component is checked against every arrow between already assigned orbits.
    """
    C = source.carrier
    n = len(source.values)
    candidates = [list(C.homs(source.values[i], target.values[i], budget=budget)) for i in range(n)]
    arrows = list(source.arrows())
    chosen: list[Any] = []

    def consistent(upto: int) -> bool:
        for i, j, k in arrows:
            if max(i, j) != upto:
                continue
            left = C.compose(chosen[i], source.maps[(i, j, k)])
            right = C.compose(target.maps[(i, j, k)], chosen[j])
            if C.key(left) != C.key(right):
                return False
        return True

    def recurse(i: int) -> Iterator[tuple[Any, ...]]:
        if i == n:
            yield tuple(chosen)
            return
        for m in candidates[i]:
            chosen.append(m)
            if consistent(i):
                yield from recurse(i + 1)
            chosen.pop()

    yield from recurse(0)


# Checks


@dataclass
class ElmendorfReport:
    """``hom(i_* X, F) ≅ hom_G(X, i^* F)`` with the triangle identities."""

    left_count: int
    right_count: int
    bijective: bool
    inverse_natural: bool
    triangle_restrict: bool
    triangle_lan: bool
    notes: list[str] = field(default_factory=lambda: [STRICT_NOTE])

    @property
    def verdict(self) -> str:
        ok = self.bijective and self.inverse_natural and self.triangle_restrict and self.triangle_lan
        return PASS if ok else FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "left_count": self.left_count,
            "right_count": self.right_count,
            "bijective": self.bijective,
            "inverse_natural": self.inverse_natural,
            "triangle_restrict": self.triangle_restrict,
            "triangle_lan": self.triangle_lan,
            "notes": list(self.notes),
        }


def check_triangles(X: GObject, F: OrbitDiagram) -> tuple[bool, bool]:
    """
    ``ε_{i^*F} ∘ η_{i^*F} = id`` at ``G/e`` and ``ε_{i_*X} ∘ i_*η_X = id`` at every orbit.
    """
    O = F.orbits
    e = O.trivial_index
    C = X.carrier

    restricted = elmendorf_restrict(F)
    lan_r = elmendorf_lan(restricted, O)
    first = C.compose(counit(lan_r, F)[e], unit(lan_r))
    restrict_ok = C.key(first) == C.key(C.identity(F.values[e]))

    lan_x = elmendorf_lan(X, O)
    round_trip = elmendorf_restrict(lan_x.diagram)
    lan_rt = elmendorf_lan(round_trip, O)
    pushed = lan_map(lan_x, lan_rt, unit(lan_x))
    collapse = counit(lan_rt, lan_x.diagram)
    lan_ok = all(
        C.key(C.compose(collapse[i], pushed[i])) == C.key(C.identity(lan_x.diagram.values[i]))
        for i in range(len(O.objects))
    )
    return restrict_ok, lan_ok


def check_elmendorf_adjunction(X: GObject, F: OrbitDiagram, *, budget: int | None = None) -> ElmendorfReport:
    """
    Enumerate both hom-sets and verify ``θ ↦ θ_e ∘ η`` is a bijection with inverse
    ``φ ↦ (copy u ↦ F(u) ∘ φ)``.

    Raises:
        SplurgeEquivariantSearchBudgetExceededError: If an enumeration exceeds the budget
    """
    O = F.orbits
    e = O.trivial_index
    C = X.carrier
    lan = elmendorf_lan(X, O)
    restricted = elmendorf_restrict(F)
    eta = unit(lan)

    left = list(diagram_homs(lan.diagram, F, budget=budget))
    right = list(equivariant_homs(X, restricted, budget=budget))
    images = [C.key(C.compose(theta[e], eta)) for theta in left]
    right_keys = {C.key(phi) for phi in right}
    bijective = len(set(images)) == len(images) and set(images) == right_keys

    left_keys = {tuple(C.key(c) for c in theta) for theta in left}
    inverse_natural = True
    for phi in right:
        if not is_equivariant(phi, X, restricted):
            inverse_natural = False
            break
        try:
            theta = tuple(
                lan.induced(i, F.values[i], {u: C.compose(F.maps[(i, e, u)], phi) for u in lan.copies[i]})
                for i in range(len(O.objects))
            )
        except SplurgeEquivariantValueError:
            inverse_natural = False
            break
        if not is_natural(lan.diagram, F, theta) or tuple(C.key(c) for c in theta) not in left_keys:
            inverse_natural = False
            break

    restrict_ok, lan_ok = check_triangles(X, F)
    report = ElmendorfReport(len(left), len(right), bijective, inverse_natural, restrict_ok, lan_ok)
    _LOGGER.info(f"Orbit-diagram adjunction over {O.group.name}: {report.left_count} maps, {report.verdict}")
    return report


def budget_safe_elmendorf(X: GObject, F: OrbitDiagram, budget: int) -> ElmendorfReport | None:
    """The adjunction report, or None when an enumeration runs out of budget."""
    try:
        return check_elmendorf_adjunction(X, F, budget=budget)
    except SplurgeEquivariantSearchBudgetExceededError as e:
        _LOGGER.warning(f"Orbit-diagram adjunction skipped: {e}")
        return None

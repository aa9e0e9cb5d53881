"""
G-objects, fixed points, orbit tensors and the cellularity checks.

A G-object is a carrier value (truncated simplicial set, simplicial space,
Segal precategory or simplicial category) with one automorphism per group
element. A :class:`Carrier` supplies the categorical operations each check
needs, so the checks below are written once for every carrier.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections.abc import Callable, Hashable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Any

from . import presheaf
from .bisimp import TruncBiSSet, reduction, vertical_slice
from .exceptions import (
    SplurgeEquivariantSearchBudgetExceededError,
    SplurgeEquivariantStructureError,
    SplurgeEquivariantUnsupportedCarrierError,
    SplurgeEquivariantValueError,
)
from .fingroup import (
    FiniteGroup,
    FSubgroupFamily,
    GSet,
    Subgroup,
    coset_gset,
    fixed_points_gset,
    require_subgroup,
)
from .homology import map_evidence
from .presheaf import Presheaf, PresheafMap, Shape
from .reports import EVIDENCE_FAIL, EVIDENCE_PASS, FAIL, NONEXACT, PASS
from .scat import (
    UK,
    Cell,
    SCategory,
    SFunctor,
    attach_cells,
    coproduct_scategories,
    dk_equivalence_evidence,
    fixed_subcategory,
    identity_sfunctor,
    iter_sfunctors,
)
from .simpset import TruncSSet, boundary

DOMAINS = ["equivariant", "fixed-points", "cellularity"]

_LOGGER = logging.getLogger(__name__)

FINITE_APPROXIMATION = (
    "FINITE-APPROXIMATION: filtered colimits are tested on finite chains only; "
    "a passing cell is evidence, not a proof"
)


# Carriers


@dataclass(frozen=True)
class CarrierCoproduct:
    """A finite coproduct in a carrier category with its injections and copairing."""

    apex: Any
    injections: tuple[Any, ...]
    copair: Callable[[Any, Sequence[Any]], Any]


class Carrier(ABC):
    """Categorical operations on one carrier category."""

    name: str = ""

    @abstractmethod
    def identity(self, value: Any) -> Any: ...

    @abstractmethod
    def compose(self, second: Any, first: Any) -> Any:
        """``second ∘ first``."""

    def key(self, morphism: Any) -> Hashable:
        return morphism.key  # type: ignore[no-any-return]

    def is_isomorphism(self, morphism: Any) -> bool:
        return bool(morphism.is_isomorphism())

    @abstractmethod
    def fixed(self, value: Any, automorphisms: Sequence[Any]) -> tuple[Any, Any]:
        """The fixed subobject and its inclusion."""

    @abstractmethod
    def coproduct(self, values: Sequence[Any]) -> CarrierCoproduct:
        """Coproduct of finitely many values; zero values give the initial object."""

    @abstractmethod
    def homs(self, source: Any, target: Any, *, budget: int | None = None) -> Iterator[Any]: ...

    def corestrict(self, morphism: Any, inclusion: Any) -> Any:
        return morphism.corestrict(inclusion)

    @abstractmethod
    def evidence(self, morphism: Any) -> tuple[str, dict[str, Any]]:
        """Weak-equivalence verdict and payload for a morphism."""

    def describe(self, value: Any) -> str:
        return str(value.describe())


class PresheafCarrier(Carrier):
    """Simplicial sets, simplicial spaces and Segal precategories."""

    def __init__(self, shape: Shape, kind: type[Presheaf]) -> None:
        self.shape = shape
        self.kind = kind
        self.name = kind.__name__

    def identity(self, value: Presheaf) -> PresheafMap:
        return presheaf.identity(value)

    def compose(self, second: PresheafMap, first: PresheafMap) -> PresheafMap:
        return second.compose(first)

    def fixed(self, value: Presheaf, automorphisms: Sequence[PresheafMap]) -> tuple[Presheaf, PresheafMap]:
        cone = presheaf.fixed_subobject(value, automorphisms)
        return cone.apex, cone.legs[0]

    def coproduct(self, values: Sequence[Presheaf]) -> CarrierCoproduct:
        if not values:
            apex = presheaf.empty_like(self.shape, self.kind)
            return CarrierCoproduct(apex, (), lambda target, maps: presheaf.map_from_empty(apex, target))
        cocone = presheaf.coproduct(*values)
        return CarrierCoproduct(cocone.apex, cocone.legs, cocone.induced)

    def homs(self, source: Presheaf, target: Presheaf, *, budget: int | None = None) -> Iterator[PresheafMap]:
        return presheaf.iter_maps(source, target, budget=budget)

    def evidence(self, morphism: PresheafMap) -> tuple[str, dict[str, Any]]:
        if morphism.is_isomorphism():
            return PASS, {"isomorphism": True}
        if isinstance(morphism.source, TruncSSet):
            slices = [morphism]
        elif isinstance(morphism.source, TruncBiSSet):
            slices = [_slice_map(morphism, m) for m in range(morphism.source.trunc + 1)]
        else:
            raise SplurgeEquivariantUnsupportedCarrierError(f"No weak-equivalence evidence for {self.name}")
        payload: dict[str, Any] = {"isomorphism": False, "levels": []}
        positive = True
        for level, f in enumerate(slices):
            pi0_ok, agreement = map_evidence(f)
            payload["levels"].append({"level": level, "pi0_bijection": pi0_ok, "homology_agreement": agreement})
            positive = positive and pi0_ok and all(agreement)
        return (EVIDENCE_PASS if positive else EVIDENCE_FAIL), payload


def _slice_map(f: PresheafMap, m: int) -> PresheafMap:
    """The simplicial map between vertical slices at horizontal level m."""
    source = vertical_slice(f.source, m)  # type: ignore[arg-type]
    target = vertical_slice(f.target, m)  # type: ignore[arg-type]
    return PresheafMap(source, target, {(n,): f.components[(m, n)] for n in range(f.source.trunc + 1)})


class SCategoryCarrier(Carrier):
    """Finite simplicial categories and simplicial functors."""

    name = "SCategory"

    def __init__(self, trunc: int) -> None:
        self.trunc = trunc

    def identity(self, value: SCategory) -> SFunctor:
        return identity_sfunctor(value)

    def compose(self, second: SFunctor, first: SFunctor) -> SFunctor:
        return second.compose(first)

    def fixed(self, value: SCategory, automorphisms: Sequence[SFunctor]) -> tuple[SCategory, SFunctor]:
        return fixed_subcategory(value, automorphisms)

    def coproduct(self, values: Sequence[SCategory]) -> CarrierCoproduct:
        result = coproduct_scategories(*values, trunc=self.trunc)
        return CarrierCoproduct(result.category, result.injections, result.copair)

    def homs(self, source: SCategory, target: SCategory, *, budget: int | None = None) -> Iterator[SFunctor]:
        return iter_sfunctors(source, target, budget=budget)

    def evidence(self, morphism: SFunctor) -> tuple[str, dict[str, Any]]:
        report = dk_equivalence_evidence(morphism)
        return report.verdict, report.to_dict()


def carrier_for(value: Any) -> Carrier:
    """
    The carrier of a value.

    Raises:
        SplurgeEquivariantUnsupportedCarrierError: For values outside the supported carriers
    """
    if isinstance(value, SCategory):
        return SCategoryCarrier(value.trunc)
    if isinstance(value, Presheaf):
        return PresheafCarrier(value.shape, type(value))
    raise SplurgeEquivariantUnsupportedCarrierError(f"Unsupported carrier value: {type(value).__name__}")


# G-objects


@dataclass(frozen=True, eq=False)
class GObject:
    """A carrier value with ``action[g]`` an automorphism for every group element index g."""

    group: FiniteGroup
    value: Any
    action: tuple[Any, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "action", tuple(self.action))
        if len(self.action) != self.group.order:
            raise SplurgeEquivariantStructureError(
                f"Expected {self.group.order} action maps, got {len(self.action)}"
            )

    @property
    def carrier(self) -> Carrier:
        return carrier_for(self.value)

    def validate(self) -> None:
        """
        Raises:
            SplurgeEquivariantStructureError: If the action is not a homomorphism into automorphisms
        """
        G, C = self.group, self.carrier
        identity_key = C.key(C.identity(self.value))
        if C.key(self.action[G.identity]) != identity_key:
            raise SplurgeEquivariantStructureError("The identity element does not act trivially")
        for g in G.elements:
            a = self.action[g]
            if not C.is_isomorphism(a):
                raise SplurgeEquivariantStructureError(f"Action of {G.names[g]} is not an automorphism")
        for g in G.elements:
            for h in G.elements:
                if C.key(C.compose(self.action[g], self.action[h])) != C.key(self.action[G.mul[g][h]]):
                    raise SplurgeEquivariantStructureError(
                        f"Action is not compatible with multiplication ({G.names[g]}, {G.names[h]})"
                    )

    def describe(self) -> str:
        return f"GObject({self.group.name}, {self.carrier.describe(self.value)})"


@dataclass(frozen=True, eq=False)
class GMap:
    """An equivariant carrier morphism between G-objects."""

    source: GObject
    target: GObject
    morphism: Any

    def validate(self) -> None:
        """
        Raises:
            SplurgeEquivariantStructureError: If the morphism does not commute with the actions
        """
        if not is_equivariant(self.morphism, self.source, self.target):
            raise SplurgeEquivariantStructureError("Map does not commute with the group actions")


def is_equivariant(morphism: Any, source: GObject, target: GObject) -> bool:
    C = source.carrier
    return all(
        C.key(C.compose(target.action[g], morphism)) == C.key(C.compose(morphism, source.action[g]))
        for g in source.group.elements
    )


def trivial_gobject(G: FiniteGroup, value: Any) -> GObject:
    """A value with the trivial action."""
    ident = carrier_for(value).identity(value)
    return GObject(G, value, tuple(ident for _ in G.elements))


def induced_action(G: FiniteGroup, cocone: Any, pieces: Sequence[GObject]) -> GObject:
    """The action on a colimit apex induced from G-objects on the diagram pieces."""
    apex = cocone.apex
    action = tuple(
        cocone.induced(apex, [leg.compose(piece.action[g]) for leg, piece in zip(cocone.legs, pieces, strict=True)])
        for g in G.elements
    )
    return GObject(G, apex, action)


def gobject_coproduct(objects: Sequence[GObject]) -> tuple[GObject, CarrierCoproduct]:
    """
    Coproduct of G-objects with the summandwise action.

    Raises:
        SplurgeEquivariantValueError: If no objects are given
    """
    if not objects:
        raise SplurgeEquivariantValueError("A G-object coproduct needs at least one summand")
    G = objects[0].group
    C = objects[0].carrier
    cop = C.coproduct([X.value for X in objects])
    action = tuple(
        cop.copair(cop.apex, [C.compose(inj, X.action[g]) for inj, X in zip(cop.injections, objects, strict=True)])
        for g in G.elements
    )
    return GObject(G, cop.apex, action), cop


# Fixed points


@dataclass(frozen=True)
class FixedPoints:
    """``X^H`` with its inclusion into the underlying value."""

    subgroup: Subgroup
    value: Any
    inclusion: Any


def fixed_points(X: GObject, H: Subgroup) -> FixedPoints:
    """
    Levelwise H-fixed elements (H-fixed objects and simplices for simplicial categories).

    Raises:
        SplurgeEquivariantInvalidSubgroupError: If H is not a subgroup of the acting group
    """
    require_subgroup(X.group, H)
    value, inclusion = X.carrier.fixed(X.value, [X.action[h] for h in sorted(H.members)])
    return FixedPoints(H, value, inclusion)


def fixed_map(f: GMap, H: Subgroup, source: FixedPoints | None = None, target: FixedPoints | None = None) -> Any:
    """``f^H: X^H -> Y^H``."""
    C = f.source.carrier
    source = source or fixed_points(f.source, H)
    target = target or fixed_points(f.target, H)
    return C.corestrict(C.compose(f.morphism, source.inclusion), target.inclusion)


# Orbit tensors


@dataclass(frozen=True, eq=False)
class OrbitTensor:
    """``G/H ⊗ A``: one copy of A per coset, permuted by the group."""

    orbit: GSet
    base: Any
    coproduct: CarrierCoproduct
    gobject: GObject

    @property
    def value(self) -> Any:
        return self.gobject.value

    def injection(self, c: int) -> Any:
        return self.coproduct.injections[c]

    def representative(self, c: int) -> int:
        """The smallest group element of coset c."""
        return self.orbit.group.element(self.orbit.points[c][0])


def tensor_gset(X: GSet, A: Any) -> OrbitTensor:
    """``X ⊗ A = ∐_X A`` with the permutation action."""
    G = X.group
    C = carrier_for(A)
    cop = C.coproduct([A] * X.size)
    action = tuple(cop.copair(cop.apex, [cop.injections[X.act[g][c]] for c in range(X.size)]) for g in G.elements)
    return OrbitTensor(X, A, cop, GObject(G, cop.apex, action))


def tensor_orbit(G: FiniteGroup, H: Subgroup, A: Any) -> OrbitTensor:
    """
    ``G/H ⊗ A``.

    Examples:
        >>> from splurge_equivariant.fingroup import cyclic_group
        >>> from splurge_equivariant.simpset import point
        >>> G = cyclic_group(2)
        >>> tensor_orbit(G, G.trivial_subgroup, point(1)).value.level_size(0)
        2
    """
    return tensor_gset(coset_gset(G, H), A)


def tensor_map(source: OrbitTensor, target: OrbitTensor, f: Any) -> Any:
    """``X ⊗ f`` between tensors over the same G-set."""
    C = carrier_for(source.base)
    return source.coproduct.copair(
        target.value, [C.compose(target.injection(c), f) for c in range(source.orbit.size)]
    )


def fixed_copies(T: OrbitTensor, H: Subgroup) -> tuple[tuple[int, ...], CarrierCoproduct, Any]:
    """
    The coproduct over ``(G/K)^H`` and its canonical map into the tensor.

    Returns:
        Fixed coset indices, their coproduct of copies and the map into ``T.value``
    """
    cosets = fixed_points_gset(T.orbit, H)
    C = carrier_for(T.base)
    cop = C.coproduct([T.base] * len(cosets))
    into = cop.copair(T.value, [T.injection(c) for c in cosets])
    return cosets, cop, into


# Equivariant hom enumeration


def adjunct(T: OrbitTensor, B: GObject, f: Any) -> Any:
    """
    The equivariant map ``G/H ⊗ A -> B`` that is ``β_g ∘ f`` on the copy ``gH``.

    ``f: A -> B`` must land in ``B^H``.
    """
    C = carrier_for(T.base)
    return T.coproduct.copair(B.value, [C.compose(B.action[T.representative(c)], f) for c in range(T.orbit.size)])


def equivariant_homs(X: GObject, Y: GObject, *, budget: int | None = None) -> Iterator[Any]:
    """All equivariant morphisms ``X -> Y`` by filtering the carrier hom-set."""
    C = X.carrier
    for m in C.homs(X.value, Y.value, budget=budget):
        if is_equivariant(m, X, Y):
            yield m


def tensor_equivariant_homs(T: OrbitTensor, Y: GObject, *, budget: int | None = None) -> Iterator[Any]:
    """
    All equivariant morphisms out of an orbit tensor.

    Copies are assigned in coset order; once a copy is chosen, copies in the
    same orbit must be its translates, so each candidate is checked against
    the already assigned copies before descending.
    """
    G = T.orbit.group
    C = carrier_for(T.base)
    candidates = list(C.homs(T.base, Y.value, budget=budget))
    n = T.orbit.size
    chosen: list[Any] = []

    def consistent(c: int, m: Any) -> bool:
        key = C.key(m)
        for g in G.elements:
            other = T.orbit.act[g][c]
            # F_{g c} = β_g ∘ F_c
            if other < c and C.key(C.compose(Y.action[g], m)) != C.key(chosen[other]):
                return False
            if other == c and C.key(C.compose(Y.action[g], m)) != key:
                return False
        return True

    def recurse(c: int) -> Iterator[Any]:
        if c == n:
            yield T.coproduct.copair(Y.value, list(chosen))
            return
        for m in candidates:
            if consistent(c, m):
                chosen.append(m)
                yield from recurse(c + 1)
                chosen.pop()

    yield from recurse(0)


# Reports


@dataclass
class AdjunctionReport:
    """The canonical bijection ``hom_G(G/H ⊗ A, B) ≅ hom(A, B^H)``."""

    left_count: int
    right_count: int
    well_defined: bool
    bijective: bool
    inverse_equivariant: bool

    @property
    def verdict(self) -> str:
        ok = self.well_defined and self.bijective and self.inverse_equivariant
        return PASS if ok and self.left_count == self.right_count else FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "left_count": self.left_count,
            "right_count": self.right_count,
            "well_defined": self.well_defined,
            "bijective": self.bijective,
            "inverse_equivariant": self.inverse_equivariant,
        }


@dataclass
class ComparisonReport:
    """Whether a canonical comparison morphism is an isomorphism."""

    isomorphism: bool
    source_size: int
    target_size: int
    exact: bool = True
    notes: list[str] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if not self.exact:
            return NONEXACT
        return PASS if self.isomorphism else FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "isomorphism": self.isomorphism,
            "source_size": self.source_size,
            "target_size": self.target_size,
            "exact": self.exact,
            "notes": list(self.notes),
            **self.extra,
        }


@dataclass
class WeakEquivalenceReport:
    """Per-subgroup evidence on the fixed-point maps of an equivariant morphism."""

    entries: list[dict[str, Any]] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        verdicts = [e["verdict"] for e in self.entries]
        if all(v == PASS for v in verdicts):
            return PASS
        if all(v in (PASS, EVIDENCE_PASS) for v in verdicts):
            return EVIDENCE_PASS
        return FAIL if FAIL in verdicts else EVIDENCE_FAIL

    def to_dict(self) -> dict[str, Any]:
        return {"verdict": self.verdict, "subgroups": list(self.entries)}


def _size(value: Any) -> int:
    if isinstance(value, SCategory):
        return len(value.objects) + value.total_size()
    return int(value.total_size())


# The fixed-point adjunction


def check_fixed_point_adjunction(
    G: FiniteGroup, H: Subgroup, A: Any, B: GObject, *, budget: int | None = None
) -> AdjunctionReport:
    """
    Verify that ``F ↦ F ∘ ι_{eH}`` is a bijection ``hom_G(G/H ⊗ A, B) -> hom(A, B^H)``.

    The inverse sends ``f`` to the map that is ``β_g ∘ f`` on the copy ``gH``.

    Raises:
        SplurgeEquivariantSearchBudgetExceededError: If an enumeration exceeds the budget
    """
    require_subgroup(G, H)
    C = carrier_for(A)
    T = tensor_orbit(G, H, A)
    fixed = fixed_points(B, H)
    left = list(tensor_equivariant_homs(T, B, budget=budget))
    right = list(C.homs(A, fixed.value, budget=budget))
    base_copy = _identity_coset(T)

    well_defined = True
    forward_keys = []
    for F in left:
        try:
            forward_keys.append(C.key(C.corestrict(C.compose(F, T.injection(base_copy)), fixed.inclusion)))
        except SplurgeEquivariantValueError:
            well_defined = False
    right_keys = {C.key(f) for f in right}
    bijective = well_defined and len(set(forward_keys)) == len(forward_keys) and set(forward_keys) == right_keys

    inverse_ok = True
    left_keys = {C.key(F) for F in left}
    for f in right:
        inverse = adjunct(T, B, C.compose(fixed.inclusion, f))
        if not is_equivariant(inverse, T.gobject, B) or C.key(inverse) not in left_keys:
            inverse_ok = False
            break
    report = AdjunctionReport(len(left), len(right), well_defined, bijective, inverse_ok)
    _LOGGER.debug(f"Adjunction over {G.name}/{H.label()}: {report.left_count} vs {report.right_count}")
    return report


def _identity_coset(T: OrbitTensor) -> int:
    G = T.orbit.group
    identity_name = G.names[G.identity]
    return next(c for c, point in enumerate(T.orbit.points) if identity_name in point)


# Cellularity conditions


def check_cellularity_3(G: FiniteGroup, H: Subgroup, K: Subgroup, A: Any) -> ComparisonReport:
    """The canonical map ``(G/H)^K ⊗ A -> (G/H ⊗ A)^K`` is an isomorphism."""
    C = carrier_for(A)
    T = tensor_orbit(G, H, A)
    fixed = fixed_points(T.gobject, K)
    cosets, cop, into = fixed_copies(T, K)
    comparison = C.corestrict(into, fixed.inclusion)
    return ComparisonReport(
        C.is_isomorphism(comparison),
        _size(cop.apex),
        _size(fixed.value),
        extra={"fixed_cosets": len(cosets), "copies": T.orbit.size},
    )


def check_cellularity_1(G: FiniteGroup, H: Subgroup, chain: Sequence[GMap]) -> ComparisonReport:
    """
    ``(-)^H`` commutes with the colimit of a finite chain of G-maps.

    Simplicial categories are compared at the last stage, which is the colimit
    of a finite chain of simplicial categories only when the maps are isomorphisms
    onto their image at the top; the report carries the finite-approximation note.

    Raises:
        SplurgeEquivariantValueError: If the chain is empty
    """
    if not chain:
        raise SplurgeEquivariantValueError("A chain needs at least one map")
    stages = [chain[0].source] + [f.target for f in chain]
    C = stages[0].carrier
    notes = [FINITE_APPROXIMATION]
    if isinstance(C, SCategoryCarrier):
        fixed_stages = [fixed_points(X, H) for X in stages]
        for i, f in enumerate(chain):
            fixed_map(f, H, fixed_stages[i], fixed_stages[i + 1])
        last = fixed_stages[-1]
        notes.append("simplicial categories: colimit taken as the last stage")
        return ComparisonReport(True, _size(last.value), _size(last.value), notes=notes)

    cocone = presheaf.chain_colimit([f.morphism for f in chain])
    colim = induced_action(G, cocone, stages)
    colim_fixed = fixed_points(colim, H)
    fixed_stages = [fixed_points(X, H) for X in stages]
    fixed_chain = [
        fixed_map(f, H, fixed_stages[i], fixed_stages[i + 1]) for i, f in enumerate(chain)
    ]
    fixed_cocone = presheaf.chain_colimit(fixed_chain)
    comparison = fixed_cocone.induced(
        colim_fixed.value,
        [
            C.corestrict(C.compose(leg, stage.inclusion), colim_fixed.inclusion)
            for leg, stage in zip(cocone.legs, fixed_stages, strict=True)
        ],
    )
    return ComparisonReport(
        comparison.is_isomorphism(), _size(fixed_cocone.apex), _size(colim_fixed.value), notes=notes
    )


@dataclass(frozen=True)
class GeneratorSquare:
    """
    A generator ``a2_to_b2`` presented through an unreduced map.

    ``b2 = B ⊔_A a2`` holds in Segal precategories: the left square of the
    two-square argument.
    """

    a_to_b: PresheafMap
    a_to_a2: PresheafMap
    b_to_b2: PresheafMap
    a2_to_b2: PresheafMap


@dataclass
class PushoutCheck:
    """Equivariant pushout data shared by the comparison and the two-square replay."""

    pushout: GObject
    legs: tuple[PresheafMap, PresheafMap]
    fixed_pushout: FixedPoints
    report: ComparisonReport


def equivariant_pushout(
    G: FiniteGroup, K: Subgroup, H: Subgroup, generator: PresheafMap, attach: GMap, X: GObject
) -> PushoutCheck:
    """
    Pushout of ``X <- G/K ⊗ A -> G/K ⊗ B`` with its H-fixed comparison (presheaf carriers).

    The fixed side is the pushout of ``X^H <- (G/K)^H ⊗ A -> (G/K)^H ⊗ B``.
    """
    C = carrier_for(generator.source)
    TA = tensor_orbit(G, K, generator.source)
    TB = tensor_orbit(G, K, generator.target)
    if attach.source.value.sizes != TA.value.sizes:
        raise SplurgeEquivariantValueError("Attaching map must start at G/K ⊗ source(generator)")
    cocone = presheaf.pushout(tensor_map(TA, TB, generator), attach.morphism)
    P = induced_action(G, cocone, [TB.gobject, X])
    P_fixed = fixed_points(P, H)
    X_fixed = fixed_points(X, H)
    cosets, copies_a, into_a = fixed_copies(TA, H)
    _, copies_b, into_b = fixed_copies(TB, H)
    copied = copies_a.copair(
        copies_b.apex, [C.compose(inj, generator) for inj in copies_b.injections]
    )
    psi = C.corestrict(C.compose(attach.morphism, into_a), X_fixed.inclusion)
    fixed_cocone = presheaf.pushout(copied, psi)
    comparison = fixed_cocone.induced(
        P_fixed.value,
        [
            C.corestrict(C.compose(cocone.legs[0], into_b), P_fixed.inclusion),
            C.corestrict(C.compose(cocone.legs[1], X_fixed.inclusion), P_fixed.inclusion),
        ],
    )
    report = ComparisonReport(
        comparison.is_isomorphism(),
        _size(fixed_cocone.apex),
        _size(P_fixed.value),
        extra={"fixed_cosets": len(cosets), "pushout_size": _size(P.value)},
    )
    return PushoutCheck(P, (cocone.legs[0], cocone.legs[1]), P_fixed, report)


def check_cellularity_2(
    G: FiniteGroup, K: Subgroup, H: Subgroup, generator: PresheafMap, attach: GMap, X: GObject
) -> ComparisonReport:
    """``(-)^H`` preserves the pushout along ``G/K ⊗ generator`` (simplicial sets and spaces)."""
    return equivariant_pushout(G, K, H, generator, attach, X).report


def check_cellularity_2_scat(
    G: FiniteGroup,
    K: Subgroup,
    H: Subgroup,
    X: GObject,
    *,
    dim: int | None = None,
    attach: SFunctor | None = None,
    budget: int = 6,
) -> ComparisonReport:
    """
    ``(-)^H`` preserves a cell attachment along ``G/K`` in simplicial categories.

    With ``dim`` None the generator is ``∅ -> {x}`` and one object is adjoined per
    coset. Otherwise ``attach`` is a functor ``G/K ⊗ U∂Δ[dim] -> X`` and one
    ``dim``-cell is glued per coset. Pushouts truncated at the word budget give a
    NONEXACT report.

    Raises:
        SplurgeEquivariantValueError: If a cell generator comes without its attaching functor
    """
    require_subgroup(G, K)
    orbit = coset_gset(G, K)
    base = X.value
    n_base = len(base.objects)
    fixed_x = fixed_points(X, H)
    inclusion = fixed_x.inclusion
    position = {x: i for i, x in enumerate(inclusion.on_objects)}
    cosets = fixed_points_gset(orbit, H)

    if dim is None:
        cells: list[Cell] = []
        new_objects = [("coset", point) for point in orbit.points]
    else:
        if attach is None:
            raise SplurgeEquivariantValueError("A cell generator needs an attaching functor")
        T = tensor_orbit(G, K, UK(boundary(dim, base.trunc)))
        if attach.source is not T.value and attach.source.objects != T.value.objects:
            raise SplurgeEquivariantValueError("Attaching functor must start at G/K ⊗ U∂Δ[n]")
        if not is_equivariant(attach, T.gobject, X):
            raise SplurgeEquivariantValueError("Attaching functor is not equivariant")
        cells = [
            Cell(attach.on_objects[2 * c], attach.on_objects[2 * c + 1], dim, attach.on_maps[(2 * c, 2 * c + 1)])
            for c in range(orbit.size)
        ]
        new_objects = []

    pushout = attach_cells(base, cells, new_objects=new_objects, budget=budget, allow_nonexact=True)
    notes: list[str] = []
    if not pushout.exact:
        notes.append(f"composite words truncated at {budget} cell letters")
    objects_of = [n_base + c for c in range(len(new_objects))]
    try:
        action = tuple(
            pushout.induced_functor(
                pushout,
                X.action[g],
                [orbit.act[g][c] for c in range(len(cells))],
                [objects_of[orbit.act[g][c]] for c in range(len(new_objects))],
            )
            for g in G.elements
        )
    except SplurgeEquivariantValueError as e:
        _LOGGER.warning(f"Group action does not extend to the truncated pushout: {e}")
        return ComparisonReport(False, 0, _size(pushout.category), exact=False, notes=[*notes, str(e)])
    P = GObject(G, pushout.category, action)
    fixed_p = fixed_points(P, H)

    fixed_cells = [
        Cell(
            position[cells[c].source],
            position[cells[c].target],
            cells[c].dim,
            cells[c].boundary.corestrict(
                inclusion.on_maps[(position[cells[c].source], position[cells[c].target])]
            ),
        )
        for c in cosets
        if cells
    ]
    fixed_new = [new_objects[c] for c in cosets if new_objects]
    fixed_pushout = attach_cells(fixed_x.value, fixed_cells, new_objects=fixed_new, budget=budget, allow_nonexact=True)
    try:
        comparison = fixed_pushout.induced_functor(
            pushout,
            inclusion,
            list(cosets) if cells else [],
            [objects_of[c] for c in cosets] if new_objects else [],
        ).corestrict(fixed_p.inclusion)
        isomorphism = comparison.is_isomorphism()
    except SplurgeEquivariantValueError as e:
        notes.append(str(e))
        isomorphism = False
    return ComparisonReport(
        isomorphism,
        _size(fixed_pushout.category),
        _size(fixed_p.value),
        exact=pushout.exact and fixed_pushout.exact,
        notes=notes,
        extra={"fixed_cosets": len(cosets), "cells": len(cells), "new_objects": len(new_objects)},
    )


def replay_two_squares(
    G: FiniteGroup, K: Subgroup, H: Subgroup, square: GeneratorSquare, attach: GMap, X: GObject
) -> ComparisonReport:
    """
    The pushout comparison for Segal precategory generators, replayed through two squares.

    With ``c = |(G/K)^H|`` copies the outer rectangle
    ``X^H <- ∐A -> ∐B`` and the left square ``∐A' <- ∐A -> ∐B`` are pushouts
    in Segal precategories (reductions of the levelwise pushouts), checked
    against ``P^H`` and ``∐B'``; the verdict rests on the right square
    ``X^H <- ∐A' -> ∐B'``, which is compared with ``P^H`` directly.
    """
    check = equivariant_pushout(G, K, H, square.a2_to_b2, attach, X)
    P_fixed = check.fixed_pushout
    C = carrier_for(square.a2_to_b2.source)
    TA2 = tensor_orbit(G, K, square.a2_to_b2.source)
    TB2 = tensor_orbit(G, K, square.a2_to_b2.target)
    X_fixed = fixed_points(X, H)
    cosets = fixed_points_gset(TA2.orbit, H)
    count = len(cosets)

    def copies(f: PresheafMap) -> tuple[CarrierCoproduct, CarrierCoproduct, PresheafMap]:
        src = C.coproduct([f.source] * count)
        tgt = C.coproduct([f.target] * count)
        return src, tgt, src.copair(tgt.apex, [C.compose(inj, f) for inj in tgt.injections])

    _, _, a_to_b = copies(square.a_to_b)
    _, cA2, a_to_a2 = copies(square.a_to_a2)
    _, cB2, b_to_b2 = copies(square.b_to_b2)
    into_a2 = fixed_copies(TA2, H)[2]
    into_b2 = fixed_copies(TB2, H)[2]
    psi = C.corestrict(C.compose(attach.morphism, into_a2), X_fixed.inclusion).compose(a_to_a2)

    # Outer rectangle.
    outer = presheaf.pushout(a_to_b, psi)
    outer_red = reduction(outer.apex)  # type: ignore[arg-type]
    leg_b, leg_x = check.legs
    cocone_b = C.corestrict(C.compose(leg_b, C.compose(into_b2, b_to_b2)), P_fixed.inclusion)
    cocone_x = C.corestrict(C.compose(leg_x, X_fixed.inclusion), P_fixed.inclusion)
    outer_map = outer_red.extend(outer.induced(P_fixed.value, [cocone_b, cocone_x]))

    # Left square.
    left = presheaf.pushout(a_to_b, a_to_a2)
    left_red = reduction(left.apex)  # type: ignore[arg-type]
    a2_to_b2 = cA2.copair(cB2.apex, [C.compose(inj, square.a2_to_b2) for inj in cB2.injections])
    left_map = left_red.extend(left.induced(cB2.apex, [b_to_b2, a2_to_b2]))

    report = check.report
    report.extra.update(
        {
            "right_square": report.isomorphism,
            "outer_rectangle": outer_map.is_isomorphism(),
            "left_square": left_map.is_isomorphism(),
            "fixed_copies": count,
        }
    )
    return report


# Weak equivalences


def g_weak_equivalence_evidence(f: GMap, family: FSubgroupFamily) -> WeakEquivalenceReport:
    """Carrier evidence on ``f^H`` for every H in the family."""
    C = f.source.carrier
    report = WeakEquivalenceReport()
    for H in family:
        verdict, payload = C.evidence(fixed_map(f, H))
        report.entries.append({"subgroup": H.label(), "verdict": verdict, "evidence": payload})
    _LOGGER.info(f"G-weak-equivalence evidence over {len(report.entries)} subgroups: {report.verdict}")
    return report


def budgeted(call: Callable[[], Any]) -> tuple[Any, bool]:
    """Run a check, reporting budget exhaustion instead of raising."""
    try:
        return call(), True
    except SplurgeEquivariantSearchBudgetExceededError:
        return None, False

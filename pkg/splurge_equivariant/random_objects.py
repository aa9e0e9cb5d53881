"""
Seeded random instances for the check suite and the property tests.

Every generator takes a ``random.Random``; the same seed always yields the
same object, so a failing suite cell can be replayed from its key.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

import logging
import random
from typing import Any

from . import presheaf
from .bisimp import const_space, transpose
from .categories import FiniteCategory, FiniteFunctor, codiscrete_category, group_category, ordinal, poset_category
from .config import DEFAULT_CONFIG, MODEL_CSS, MODEL_QCAT, MODEL_SC, MODEL_SECAT_C, MODEL_SECAT_F
from .equivariant import (
    FixedPoints,
    GMap,
    GObject,
    OrbitTensor,
    adjunct,
    carrier_for,
    fixed_points,
    gobject_coproduct,
    tensor_orbit,
    trivial_gobject,
)
from .exceptions import SplurgeEquivariantSearchBudgetExceededError, SplurgeEquivariantValueError
from .fingroup import FiniteGroup, Subgroup, coset_gset, cyclic_group, subgroups
from .presheaf import Presheaf
from .scat import UK, SCategory, SFunctor, discrete_scategory, discrete_sfunctor, letter_bound, point_scategory
from .simpset import TruncSSet, discrete_sset, standard_simplex, sub_sset

DOMAINS = ["random", "testing"]

_LOGGER = logging.getLogger(__name__)

KIND_SSET = "sset"
KIND_BISSET = "bisset"
KIND_PRECAT = "precat"
KIND_SCAT = "scat"

MODEL_KINDS = {
    MODEL_QCAT: KIND_SSET,
    MODEL_CSS: KIND_BISSET,
    MODEL_SC: KIND_SCAT,
    MODEL_SECAT_C: KIND_PRECAT,
    MODEL_SECAT_F: KIND_PRECAT,
}


def random_sset(rng: random.Random, trunc: int, *, max_dim: int = 2) -> TruncSSet:
    """A simplicial subset of a small standard simplex generated by random simplices."""
    k = rng.randint(0, min(max_dim, trunc))
    simplex = standard_simplex(k, trunc)
    generators = []
    for n in range(k + 1):
        for x in simplex.nondegenerate((n,)):
            if rng.random() < 0.4:
                generators.append((n, x))
    if not generators:
        generators.append((0, 0))
    return sub_sset(simplex, generators).apex  # type: ignore[return-value]


def random_value(rng: random.Random, kind: str, trunc: int) -> Any:
    """A random carrier value of the given kind."""
    if kind == KIND_SSET:
        return random_sset(rng, trunc)
    if kind == KIND_BISSET:
        K = random_sset(rng, trunc)
        return const_space(K) if rng.random() < 0.5 else transpose(K)
    if kind == KIND_PRECAT:
        if rng.random() < 0.3:
            return const_space(discrete_sset(list(range(rng.randint(1, 2))), trunc))
        return transpose(random_sset(rng, trunc))
    if kind == KIND_SCAT:
        return UK(random_sset(rng, trunc))
    raise SplurgeEquivariantValueError(f"Unknown carrier kind: {kind}")


def random_category(rng: random.Random) -> FiniteCategory:
    """A small category: an ordinal, a cyclic group, a codiscrete groupoid or a two-rank poset."""
    kind = rng.randrange(4)
    if kind == 0:
        return ordinal(rng.randint(0, 2))
    if kind == 1:
        return group_category(cyclic_group(rng.randint(2, 3)))
    if kind == 2:
        return codiscrete_category(list(range(rng.randint(1, 3))))
    rank = {x: rng.randint(0, 1) for x in range(3)}
    return poset_category(list(rank), lambda a, b: a == b or rank[a] < rank[b])


def random_subgroup(rng: random.Random, G: FiniteGroup) -> Subgroup:
    return rng.choice(subgroups(G))


def random_gposet(rng: random.Random, G: FiniteGroup, trunc: int) -> GObject:
    """
    Two ranks of cosets ``G/H_0`` below ``G/H_1``, every lower point below every upper one.

    The group permutes each rank, which preserves the order.
    """
    ranks = [coset_gset(G, random_subgroup(rng, G)) for _ in range(2)]
    elements = [(r, p) for r, orbit in enumerate(ranks) for p in orbit.points]
    P = poset_category(elements, lambda a, b: a == b or (a[0] == 0 and b[0] == 1))
    S = discrete_scategory(P, trunc)
    offset = [0, ranks[0].size]
    morphism_index = {label: i for i, label in enumerate(P.morphisms)}
    action = []
    for g in G.elements:
        objects = tuple(offset[r] + ranks[r].act[g][i] for r, orbit in enumerate(ranks) for i in range(orbit.size))
        morphisms = tuple(morphism_index[(objects[a], objects[b])] for a, b in P.morphisms)
        action.append(discrete_sfunctor(FiniteFunctor(P, P, objects, morphisms), S, S))
    return GObject(G, S, tuple(action))


def random_gobject(rng: random.Random, G: FiniteGroup, kind: str, trunc: int, *, pieces: int = 2) -> GObject:
    """
    A coproduct of orbit tensors and trivially acted summands.

    Simplicial categories start from a random G-poset so fixed objects vary with the subgroup.
    """
    summands: list[GObject] = []
    if kind == KIND_SCAT:
        summands.append(random_gposet(rng, G, trunc))
    for _ in range(rng.randint(1, pieces)):
        value = random_value(rng, kind, trunc)
        if rng.random() < 0.3:
            summands.append(trivial_gobject(G, value))
        else:
            summands.append(tensor_orbit(G, random_subgroup(rng, G), value).gobject)
    if len(summands) == 1:
        return summands[0]
    return gobject_coproduct(summands)[0]


def random_chain(rng: random.Random, G: FiniteGroup, kind: str, trunc: int, *, stages: int = 4) -> list[GMap]:
    """A chain of summand inclusions ``X_0 -> X_0 ⊔ Y_1 -> ...``."""
    current = random_gobject(rng, G, kind, trunc, pieces=1)
    chain = []
    for _ in range(stages - 1):
        piece = random_gobject(rng, G, kind, trunc, pieces=1)
        bigger, cop = gobject_coproduct([current, piece])
        chain.append(GMap(current, bigger, cop.injections[0]))
        current = bigger
    return chain


def _terminal(value: Any) -> Any:
    if isinstance(value, SCategory):
        return point_scategory(value.trunc)
    return presheaf.terminal_like(value.shape, type(value))


def random_attach(
    rng: random.Random,
    G: FiniteGroup,
    K: Subgroup,
    source: Any,
    X: GObject,
    *,
    budget: int | None = None,
    attach_budget: int = DEFAULT_CONFIG.attach_budget,
) -> tuple[GObject, GMap | Any]:
    """
    A random equivariant map ``G/K ⊗ source -> X`` built as the adjunct of a map into ``X^K``.

    When ``X^K`` receives no map from ``source`` a trivially acted terminal summand is added to X.
    For simplicial categories only functors whose glued cells chain into at most
    ``attach_budget`` letters are drawn. If there are none, a trivially acted
    copy of ``source`` is added to X and the cells are glued onto it.

    Returns:
        The (possibly enlarged) target and the attaching map; a GMap for presheaf
        carriers, a simplicial functor for simplicial categories
    """
    T = tensor_orbit(G, K, source)
    C = carrier_for(source)
    fixed = fixed_points(X, K)
    if isinstance(source, SCategory):
        return _scat_attach(rng, T, fixed, X, budget=budget, attach_budget=attach_budget)
    candidates = _bounded(C.homs(source, fixed.value, budget=budget))
    if not candidates:
        X = gobject_coproduct([X, trivial_gobject(G, _terminal(X.value))])[0]
        fixed = fixed_points(X, K)
        candidates = _bounded(C.homs(source, fixed.value, budget=budget))
    f = rng.choice(candidates)
    return X, GMap(T.gobject, X, adjunct(T, X, C.compose(fixed.inclusion, f)))


def _scat_attach(
    rng: random.Random, T: OrbitTensor, fixed: FixedPoints, X: GObject, *, budget: int | None, attach_budget: int
) -> tuple[GObject, SFunctor]:
    """Random attaching functor among those whose cells chain into the fewest letters."""
    scored: list[tuple[int, SFunctor]] = []
    for f in _bounded(carrier_for(T.base).homs(T.base, fixed.value, budget=budget)):
        F = adjunct(T, X, fixed.inclusion.compose(f)).on_objects
        bound = letter_bound(X.value, [(F[2 * c], F[2 * c + 1]) for c in range(T.orbit.size)])
        if bound is not None and bound <= attach_budget:
            scored.append((bound, f))
    if scored:
        fewest = min(bound for bound, _ in scored)
        f = rng.choice([f for bound, f in scored if bound == fewest])
        return X, adjunct(T, X, fixed.inclusion.compose(f))
    _LOGGER.debug("No loop-free attaching functor, gluing onto a trivially acted copy of the boundary")
    X, cop = gobject_coproduct([X, trivial_gobject(T.orbit.group, T.base)])
    return X, adjunct(T, X, cop.injections[1])


def _bounded(maps: Any, limit: int = 64) -> list[Any]:
    """The first ``limit`` maps of an enumeration, or what was found before the budget ran out."""
    found: list[Any] = []
    try:
        for m in maps:
            found.append(m)
            if len(found) >= limit:
                break
    except SplurgeEquivariantSearchBudgetExceededError:
        _LOGGER.debug(f"Random attach candidates cut at {len(found)} by the search budget")
    return found

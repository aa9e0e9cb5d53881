"""
Canonical JSON codecs for groups, simplicial sets, simplicial spaces, categories,
simplicial categories and G-objects.

Encoding is deterministic (element order as stored, labels as nested lists) so
that build, load and re-serialize round-trips byte for byte through
``dumps_canonical``. Decoding raises ParsingError naming the offending field.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

from .bisimp import SegalPrecategory, TruncBiSSet
from .categories import FiniteCategory, category_from_json
from .equivariant import GObject
from .exceptions import (
    SplurgeEquivariantParsingError,
    SplurgeEquivariantStructureError,
    SplurgeEquivariantValueError,
)
from .fingroup import FiniteGroup, group_from_json, group_to_json
from .presheaf import BiSimplexShape, OpKey, Presheaf, PresheafMap, SimplexShape, make_like
from .scat import SCategory, SFunctor
from .simpset import TruncSSet
from .utils import freeze, thaw

DOMAINS = ["serialization", "json"]

KIND_SSET = "sset"
KIND_BISSET = "bisset"
KIND_PRECAT = "precat"
KIND_CATEGORY = "category"
KIND_SCAT = "scat"
KIND_GOBJECT = "gobject"
KIND_GROUP = "group"


def _field(data: Any, key: str, where: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise SplurgeEquivariantParsingError(f"Missing field: {where}{key}", details={"field": f"{where}{key}"})
    return data[key]


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SplurgeEquivariantParsingError(f"Expected an integer at {where}", details={"field": where})
    return value


def _table(value: Any, where: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise SplurgeEquivariantParsingError(f"Expected a list of indices at {where}", details={"field": where})
    return tuple(_int(v, f"{where}[{i}]") for i, v in enumerate(value))


def _built(where: str, build: Callable[[], Any]) -> Any:
    """Run a constructor, reporting structural failures as parse errors at ``where``."""
    try:
        return build()
    except (SplurgeEquivariantStructureError, SplurgeEquivariantValueError) as e:
        raise SplurgeEquivariantParsingError(
            f"Invalid payload at {where or '$'}: {e.message}", details={"field": where or "$"}
        ) from e


# Simplicial sets


def encode_sset(X: TruncSSet) -> dict[str, Any]:
    N = X.trunc
    return {
        "kind": KIND_SSET,
        "trunc": N,
        "levels": [X.size((n,)) for n in range(N + 1)],
        "labels": [thaw(list(X.labels[(n,)])) for n in range(N + 1)],
        "d": [[list(X.structure[("d", i, (n,))]) for i in range(n + 1)] for n in range(1, N + 1)],
        "s": [[list(X.structure[("s", i, (n,))]) for i in range(n + 1)] for n in range(N)],
    }


def decode_sset(data: dict[str, Any], where: str = "") -> TruncSSet:
    """
    Raises:
        SplurgeEquivariantParsingError: If a field is missing, malformed or violates the simplicial identities
    """
    N = _int(_field(data, "trunc", where), f"{where}trunc")
    levels = _field(data, "levels", where)
    if not isinstance(levels, list) or len(levels) != N + 1:
        raise SplurgeEquivariantParsingError(
            f"Field {where}levels must list {N + 1} sizes", details={"field": f"{where}levels"}
        )
    sizes = {(n,): _int(v, f"{where}levels[{n}]") for n, v in enumerate(levels)}
    labels = {}
    if "labels" in data:
        for n, row in enumerate(data["labels"]):
            labels[(n,)] = tuple(freeze(row))
    structure: dict[OpKey, tuple[int, ...]] = {}
    for family, first in (("d", 1), ("s", 0)):
        rows = _field(data, family, where)
        for offset, tables in enumerate(rows):
            n = first + offset
            for i, table in enumerate(tables):
                structure[(family, i, (n,))] = _table(table, f"{where}{family}[{offset}][{i}]")
    X = _built(where, lambda: make_like(TruncSSet, SimplexShape(N), sizes, structure, labels))
    _built(where, X.validate)
    return X  # type: ignore[no-any-return]


# Simplicial spaces


def encode_bisset(X: TruncBiSSet) -> dict[str, Any]:
    N = X.trunc
    payload: dict[str, Any] = {
        "kind": KIND_PRECAT if isinstance(X, SegalPrecategory) else KIND_BISSET,
        "trunc": N,
        "grid": [[X.size((m, n)) for n in range(N + 1)] for m in range(N + 1)],
        "labels": [[thaw(list(X.labels[(m, n)])) for n in range(N + 1)] for m in range(N + 1)],
    }
    for family in X.shape.families():
        entries = []
        for level in X.shape.levels():
            tables = []
            index = 0
            while (op := X.shape.operator(family, index, level)) is not None:
                tables.append(list(X.structure[op.key]))
                index += 1
            if tables:
                entries.append({"level": list(level), "tables": tables})
        payload[family] = entries
    return payload


def decode_bisset(data: dict[str, Any], where: str = "") -> TruncBiSSet:
    """
    Raises:
        SplurgeEquivariantParsingError: If a field is missing, malformed or violates the bisimplicial identities
    """
    N = _int(_field(data, "trunc", where), f"{where}trunc")
    grid = _field(data, "grid", where)
    if not isinstance(grid, list) or len(grid) != N + 1 or any(
        not isinstance(r, list) or len(r) != N + 1 for r in grid
    ):
        raise SplurgeEquivariantParsingError(
            f"Field {where}grid must be a {N + 1}x{N + 1} table", details={"field": f"{where}grid"}
        )
    sizes = {(m, n): _int(grid[m][n], f"{where}grid[{m}][{n}]") for m in range(N + 1) for n in range(N + 1)}
    labels = {}
    if "labels" in data:
        for m, row in enumerate(data["labels"]):
            for n, cell in enumerate(row):
                labels[(m, n)] = tuple(freeze(cell))
    shape = BiSimplexShape(N)
    structure: dict[OpKey, tuple[int, ...]] = {}
    for family in shape.families():
        for k, entry in enumerate(_field(data, family, where)):
            level = tuple(_table(_field(entry, "level", f"{where}{family}[{k}]."), f"{where}{family}[{k}].level"))
            for i, table in enumerate(_field(entry, "tables", f"{where}{family}[{k}].")):
                structure[(family, i, level)] = _table(table, f"{where}{family}[{k}].tables[{i}]")
    kind = SegalPrecategory if data.get("kind") == KIND_PRECAT else TruncBiSSet
    X = _built(where, lambda: make_like(kind, shape, sizes, structure, labels))
    _built(where, X.validate)
    return X  # type: ignore[no-any-return]


# Maps


def encode_map(f: PresheafMap) -> dict[str, Any]:
    return {"components": [list(f.components[level]) for level in f.source.shape.levels()]}


def decode_map(data: dict[str, Any], source: Presheaf, target: Presheaf, where: str = "") -> PresheafMap:
    rows = _field(data, "components", where)
    levels = source.shape.levels()
    if not isinstance(rows, list) or len(rows) != len(levels):
        raise SplurgeEquivariantParsingError(
            f"Field {where}components must have one row per level", details={"field": f"{where}components"}
        )
    comps = {level: _table(rows[i], f"{where}components[{i}]") for i, level in enumerate(levels)}
    f = _built(where, lambda: PresheafMap(source, target, comps))
    _built(where, f.validate)
    return f  # type: ignore[no-any-return]


# Categories and simplicial categories


def encode_category(C: FiniteCategory) -> dict[str, Any]:
    payload = C.to_dict()
    payload["objects"] = thaw(payload["objects"])
    payload["morphisms"] = [{**m, "label": thaw(m["label"])} for m in payload["morphisms"]]
    return {"kind": KIND_CATEGORY, **payload}


def decode_category(data: dict[str, Any], where: str = "") -> FiniteCategory:
    for key in ("objects", "morphisms", "identities", "composition"):
        _field(data, key, where)
    frozen = {
        "objects": [freeze(x) for x in data["objects"]],
        "morphisms": [{**m, "label": freeze(_field(m, "label", f"{where}morphisms."))} for m in data["morphisms"]],
        "identities": data["identities"],
        "composition": data["composition"],
    }
    return _built(where, lambda: category_from_json(frozen))  # type: ignore[no-any-return]


def encode_scategory(C: SCategory) -> dict[str, Any]:
    return {
        "kind": KIND_SCAT,
        "trunc": C.trunc,
        "exact": C.exact,
        "objects": thaw(list(C.objects)),
        "units": list(C.units),
        "maps": [{"source": x, "target": y, "space": encode_sset(C.maps[(x, y)])} for x, y in C.pairs()],
        "composition": [
            {"x": x, "y": y, "z": z, "n": n, "table": list(table)}
            for (x, y, z, n), table in sorted(C.composition.items())
        ],
    }


def decode_scategory(data: dict[str, Any], where: str = "") -> SCategory:
    N = _int(_field(data, "trunc", where), f"{where}trunc")
    objects = tuple(freeze(x) for x in _field(data, "objects", where))
    maps = {}
    for k, entry in enumerate(_field(data, "maps", where)):
        at = f"{where}maps[{k}]."
        pair = (_int(_field(entry, "source", at), f"{at}source"), _int(_field(entry, "target", at), f"{at}target"))
        maps[pair] = decode_sset(_field(entry, "space", at), f"{at}space.")
    composition = {}
    for k, entry in enumerate(_field(data, "composition", where)):
        at = f"{where}composition[{k}]."
        key = tuple(_int(_field(entry, name, at), f"{at}{name}") for name in ("x", "y", "z", "n"))
        composition[key] = _table(_field(entry, "table", at), f"{at}table")
    units = _table(_field(data, "units", where), f"{where}units")
    exact = bool(data.get("exact", True))
    C = _built(where, lambda: SCategory(N, objects, maps, composition, units, exact))  # type: ignore[arg-type]
    if exact:
        _built(where, C.validate)
    return C  # type: ignore[no-any-return]


def encode_sfunctor(F: SFunctor) -> dict[str, Any]:
    return {
        "objects": list(F.on_objects),
        "maps": [
            {"source": x, "target": y, "components": encode_map(F.on_maps[(x, y)])["components"]}
            for x, y in sorted(F.on_maps)
        ],
    }


def decode_sfunctor(data: dict[str, Any], source: SCategory, target: SCategory, where: str = "") -> SFunctor:
    objects = _table(_field(data, "objects", where), f"{where}objects")
    if len(objects) != len(source.objects) or any(not 0 <= y < len(target.objects) for y in objects):
        raise SplurgeEquivariantParsingError(
            f"Invalid object map at {where}objects", details={"field": f"{where}objects"}
        )
    maps = {}
    for k, entry in enumerate(_field(data, "maps", where)):
        at = f"{where}maps[{k}]."
        x, y = _int(_field(entry, "source", at), f"{at}source"), _int(_field(entry, "target", at), f"{at}target")
        maps[(x, y)] = decode_map(entry, source.maps[(x, y)], target.maps[(objects[x], objects[y])], at)
    F = SFunctor(source, target, objects, maps)
    _built(where, F.validate)
    return F


# G-objects


def encode_gobject(X: GObject) -> dict[str, Any]:
    if isinstance(X.value, SCategory):
        action = [encode_sfunctor(a) for a in X.action]
    else:
        action = [encode_map(a) for a in X.action]
    return {"kind": KIND_GOBJECT, "group": group_to_json(X.group), "value": encode(X.value), "action": action}


def decode_gobject(data: dict[str, Any], where: str = "", group: FiniteGroup | None = None) -> GObject:
    G = group or group_from_json(_field(data, "group", where))
    value = decode(_field(data, "value", where), f"{where}value.")
    rows = _field(data, "action", where)
    if not isinstance(rows, list) or len(rows) != G.order:
        raise SplurgeEquivariantParsingError(
            f"Field {where}action must hold {G.order} automorphisms", details={"field": f"{where}action"}
        )
    if isinstance(value, SCategory):
        action = [decode_sfunctor(row, value, value, f"{where}action[{g}].") for g, row in enumerate(rows)]
    else:
        action = [decode_map(row, value, value, f"{where}action[{g}].") for g, row in enumerate(rows)]
    X = GObject(G, value, tuple(action))
    _built(where, X.validate)
    return X


# Dispatch


def encode(value: Any) -> dict[str, Any]:
    """
    Canonical payload of any supported value.

    Raises:
        SplurgeEquivariantValueError: For unsupported values
    """
    if isinstance(value, GObject):
        return encode_gobject(value)
    if isinstance(value, SCategory):
        return encode_scategory(value)
    if isinstance(value, FiniteCategory):
        return encode_category(value)
    if isinstance(value, FiniteGroup):
        return {"kind": KIND_GROUP, **group_to_json(value)}
    if isinstance(value, TruncBiSSet):
        return encode_bisset(value)
    if isinstance(value, TruncSSet):
        return encode_sset(value)
    raise SplurgeEquivariantValueError(f"Cannot serialize {type(value).__name__}")


def decode(data: dict[str, Any], where: str = "") -> Any:
    """
    Load a payload according to its ``kind`` (``levels`` implies sset, ``grid`` implies bisset).

    Raises:
        SplurgeEquivariantParsingError: If the kind is unknown or the payload is invalid
    """
    if not isinstance(data, dict):
        raise SplurgeEquivariantParsingError(f"Expected an object at {where or '$'}", details={"field": where or "$"})
    kind = data.get("kind")
    if kind is None:
        kind = KIND_SSET if "levels" in data else KIND_BISSET if "grid" in data else None
    if kind == KIND_SSET:
        return decode_sset(data, where)
    if kind in (KIND_BISSET, KIND_PRECAT):
        return decode_bisset(data, where)
    if kind == KIND_CATEGORY:
        return decode_category(data, where)
    if kind == KIND_SCAT:
        return decode_scategory(data, where)
    if kind == KIND_GOBJECT:
        return decode_gobject(data, where)
    if kind == KIND_GROUP:
        return group_from_json(data)
    raise SplurgeEquivariantParsingError(f"Unknown payload kind: {kind!r}", details={"field": f"{where}kind"})

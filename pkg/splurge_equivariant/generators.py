"""
Generating cofibrations per model structure.

The cellularity checks run over these catalogs: boundary inclusions for
quasicategories, Reedy generators for complete Segal spaces, object and cell
attachments for simplicial categories, and the reduced Reedy and P/Q squares
for Segal precategories.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .bisimp import build_pq, reduction, reedy_generator
from .config import MODEL_CSS, MODEL_QCAT, MODEL_SC, MODEL_SECAT_C, MODEL_SECAT_F, MODELS
from .equivariant import GeneratorSquare
from .exceptions import SplurgeEquivariantConfigurationError
from .presheaf import PresheafMap
from .simpset import boundary_inclusion
from .utils import InputValidator

DOMAINS = ["generators", "cellularity"]


@dataclass(frozen=True)
class Generator:
    """
    One generating cofibration.

    Presheaf models carry ``morphism``; Segal precategory models also carry the
    square presenting it through an unreduced map; simplicial categories carry
    ``cell_dim`` (None for ``∅ -> {x}``).
    """

    model: str
    name: str
    degree: tuple[int, ...]
    morphism: PresheafMap | None = None
    square: GeneratorSquare | None = None
    cell_dim: int | None = None

    @property
    def is_object(self) -> bool:
        return self.model == MODEL_SC and self.cell_dim is None

    def to_dict(self) -> dict[str, Any]:
        return {"model": self.model, "name": self.name, "degree": list(self.degree)}


def _pairs(max_dim: int) -> list[tuple[int, int]]:
    return [(m, n) for m in range(max_dim + 1) for n in range(max_dim + 1 - m)]


def reduced_square(m: int, n: int, trunc: int) -> GeneratorSquare:
    """``g_r`` for the Reedy generator g, presented through the reduction units."""
    g = reedy_generator(m, n, trunc)
    source, target = reduction(g.source), reduction(g.target)  # type: ignore[arg-type]
    reduced = source.extend(target.unit.compose(g))
    return GeneratorSquare(g, source.unit, target.unit, reduced)


def pq_square(m: int, n: int, trunc: int) -> GeneratorSquare:
    """``i_{m,n}: P -> Q`` presented through the projective generator."""
    pq = build_pq(m, n, trunc)
    return GeneratorSquare(pq.projective, pq.p_leg, pq.q_leg, pq.i_mn)


def generating_cofibrations(model: str, max_dim: int, trunc: int) -> list[Generator]:
    """
    The generator catalog of a model structure up to ``max_dim``.

    Args:
        model: One of qcat, css, sc, secat_c, secat_f
        max_dim: Largest simplex dimension (``m + n`` for bisimplicial generators)
        trunc: Truncation level of the generators

    Raises:
        SplurgeEquivariantConfigurationError: If the model is unknown
    """
    InputValidator.non_negative(max_dim, "max_dim")
    if model not in MODELS:
        raise SplurgeEquivariantConfigurationError(f"Unknown model structure: {model}")
    if model == MODEL_QCAT:
        return [
            Generator(model, f"d{n}", (n,), morphism=boundary_inclusion(n, trunc))
            for n in range(min(max_dim, trunc) + 1)
        ]
    if model == MODEL_CSS:
        return [
            Generator(model, f"reedy{m},{n}", (m, n), morphism=reedy_generator(m, n, trunc))
            for m, n in _pairs(min(max_dim, trunc))
        ]
    if model == MODEL_SC:
        cells = [Generator(model, f"cell{n}", (n,), cell_dim=n) for n in range(min(max_dim, trunc) + 1)]
        return [Generator(model, "object", ()), *cells]
    if model == MODEL_SECAT_C:
        result = []
        for m, n in _pairs(min(max_dim, trunc)):
            square = reduced_square(m, n, trunc)
            result.append(Generator(model, f"reedy{m},{n}_r", (m, n), morphism=square.a2_to_b2, square=square))
        return result
    result = []
    for m, n in _pairs(min(max_dim, trunc)):
        square = pq_square(m, n, trunc)
        result.append(Generator(MODEL_SECAT_F, f"i{m},{n}", (m, n), morphism=square.a2_to_b2, square=square))
    return result

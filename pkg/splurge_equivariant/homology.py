"""
Integral simplicial homology through the Smith normal form.

The normalized chain complex has the nondegenerate n-simplices as basis and
drops degenerate faces from boundaries. The unnormalized complex (all
simplices) is available for comparison; both agree in reliable degrees.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_form

from .simpset import SSetMap, TruncSSet, pi0, pi0_map

DOMAINS = ["homology"]

_LOGGER = logging.getLogger(__name__)


def chain_basis(X: TruncSSet, n: int, *, normalized: bool = True) -> tuple[int, ...]:
    """Basis simplices of ``C_n``; empty outside ``0..trunc``."""
    if n < 0 or n > X.trunc:
        return ()
    return X.nondegenerate_simplices(n) if normalized else tuple(X.simplices(n))


def boundary_matrix(X: TruncSSet, n: int, *, normalized: bool = True) -> list[list[int]]:
    """
    Matrix of ``∂_n: C_n -> C_{n-1}`` (rows index ``C_{n-1}``, columns ``C_n``).

    ``∂x = Σ (-1)^i d_i x``; in the normalized complex degenerate faces vanish.
    """
    cols = chain_basis(X, n, normalized=normalized)
    rows = chain_basis(X, n - 1, normalized=normalized)
    row_of = {y: r for r, y in enumerate(rows)}
    matrix = [[0] * len(cols) for _ in rows]
    if n < 1:
        return matrix
    for c, x in enumerate(cols):
        for i in range(n + 1):
            r = row_of.get(X.face(i, n, x))
            if r is not None:
                matrix[r][c] += -1 if i % 2 else 1
    return matrix


def chain_map_matrix(f: SSetMap, n: int, *, normalized: bool = True) -> list[list[int]]:
    """Matrix of the chain map ``f_n: C_n(X) -> C_n(Y)`` induced by a simplicial map."""
    X, Y = f.source, f.target
    cols = chain_basis(X, n, normalized=normalized)  # type: ignore[arg-type]
    rows = chain_basis(Y, n, normalized=normalized)  # type: ignore[arg-type]
    row_of = {y: r for r, y in enumerate(rows)}
    matrix = [[0] * len(cols) for _ in rows]
    for c, x in enumerate(cols):
        r = row_of.get(f((n,), x))
        if r is not None:
            matrix[r][c] = 1
    return matrix


def matmul(a: list[list[int]], b: list[list[int]], shape: tuple[int, int, int]) -> list[list[int]]:
    """Product of an ``rows x inner`` and an ``inner x cols`` matrix given as nested lists."""
    rows, inner, cols = shape
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(rows)]


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Absolute values of the Smith normal form diagonal (zeros included)."""
    if not matrix or not matrix[0]:
        return []
    snf = smith_normal_form(Matrix(matrix), domain=ZZ)
    return [abs(int(snf[i, i])) for i in range(min(snf.shape))]


@dataclass(frozen=True)
class DegreeHomology:
    """``H_n ≅ Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_r``."""

    degree: int
    betti: int
    torsion: tuple[int, ...]
    reliable: bool

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def describe(self) -> str:
        parts = (["Z"] if self.betti == 1 else [f"Z^{self.betti}"] if self.betti else []) + [
            f"Z/{t}" for t in self.torsion
        ]
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict[str, Any]:
        return {"degree": self.degree, "betti": self.betti, "torsion": list(self.torsion), "reliable": self.reliable}


@dataclass(frozen=True)
class HomologyResult:
    """Homology groups by degree; degrees at or above the truncation level are flagged unreliable."""

    trunc: int
    normalized: bool
    degrees: tuple[DegreeHomology, ...] = field(default_factory=tuple)

    def __getitem__(self, n: int) -> DegreeHomology:
        return self.degrees[n]

    def betti(self) -> tuple[int, ...]:
        return tuple(d.betti for d in self.degrees)

    def agrees_with(self, other: HomologyResult) -> bool:
        """Agreement on every degree reliable in both results."""
        pairs = zip(self.degrees, other.degrees, strict=False)
        return all(
            (a.betti, a.torsion) == (b.betti, b.torsion) for a, b in pairs if a.reliable and b.reliable
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "trunc": self.trunc,
            "normalized": self.normalized,
            "degrees": [d.to_dict() for d in self.degrees],
        }


def homology(X: TruncSSet, up_to: int | None = None, *, normalized: bool = True) -> HomologyResult:
    """
    Integral homology of X in degrees ``0..up_to``.

    ``H_n`` needs ``∂_{n+1}``, so only degrees ``n <= trunc - 1`` are reliable;
    a requested degree ``trunc`` is computed with ``∂_{N+1} = 0`` and flagged.

    Args:
        X: Simplicial set
        up_to: Highest degree (default ``trunc - 1``, at least 0)
        normalized: Use the normalized (nondegenerate) chain complex

    Examples:
        >>> from splurge_equivariant.simpset import boundary
        >>> homology(boundary(2, 3)).betti()
        (1, 1, 0)
    """
    top = max(X.trunc - 1, 0) if up_to is None else min(up_to, X.trunc)
    diagonals = {n: smith_diagonal(boundary_matrix(X, n, normalized=normalized)) for n in range(1, top + 2)}
    degrees = []
    for n in range(top + 1):
        dim = len(chain_basis(X, n, normalized=normalized))
        rank_out = sum(1 for v in diagonals.get(n, []) if v)
        incoming = diagonals.get(n + 1, []) if n + 1 <= X.trunc else []
        rank_in = sum(1 for v in incoming if v)
        torsion = tuple(sorted(v for v in incoming if v > 1))
        degrees.append(DegreeHomology(n, dim - rank_out - rank_in, torsion, n <= X.trunc - 1))
    result = HomologyResult(X.trunc, normalized, tuple(degrees))
    _LOGGER.debug(f"Homology of {X.describe()}: {[d.describe() for d in degrees]}")
    return result


def chain_map_commutes(f: SSetMap, n: int, *, normalized: bool = True) -> bool:
    """Whether ``∂ f_n = f_{n-1} ∂`` holds as an integer matrix identity."""
    X, Y = f.source, f.target
    d_y = boundary_matrix(Y, n, normalized=normalized)  # type: ignore[arg-type]
    d_x = boundary_matrix(X, n, normalized=normalized)  # type: ignore[arg-type]
    f_n = chain_map_matrix(f, n, normalized=normalized)
    f_prev = chain_map_matrix(f, n - 1, normalized=normalized)
    rows = len(chain_basis(Y, n - 1, normalized=normalized))  # type: ignore[arg-type]
    cols = len(chain_basis(X, n, normalized=normalized))  # type: ignore[arg-type]
    left = matmul(d_y, f_n, (rows, len(chain_basis(Y, n, normalized=normalized)), cols))  # type: ignore[arg-type]
    middle = len(chain_basis(X, n - 1, normalized=normalized))  # type: ignore[arg-type]
    right = matmul(f_prev, d_x, (rows, middle, cols))
    return left == right


def map_evidence(f: SSetMap) -> tuple[bool, list[bool]]:
    """
    Weak-equivalence evidence for a simplicial map.

    Returns:
        Whether f is a bijection on π0, and per reliable degree whether the
        homology groups of source and target agree
    """
    components = pi0_map(f)
    pi0_ok = len(set(components)) == len(components) == len(pi0(f.target))  # type: ignore[arg-type]
    source_h = homology(f.source)  # type: ignore[arg-type]
    target_h = homology(f.target)  # type: ignore[arg-type]
    agreement = [
        (a.betti, a.torsion) == (b.betti, b.torsion)
        for a, b in zip(source_h.degrees, target_h.degrees, strict=True)
        if a.reliable
    ]
    return pi0_ok, agreement

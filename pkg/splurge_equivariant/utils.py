"""
Utility functions shared across the splurge_equivariant package.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

import hashlib
from collections.abc import Hashable
from typing import Any

from .exceptions import SplurgeEquivariantTruncationMismatchError, SplurgeEquivariantValueError

DOMAINS = ["util"]


class InputValidator:
    """Centralized input validation with fail-fast approach."""

    @staticmethod
    def non_negative(value: int, context: str = "value") -> int:
        """
        Validate a non-negative integer parameter.

        Args:
            value: Integer to validate
            context: Context description for error messages

        Returns:
            The validated integer

        Raises:
            SplurgeEquivariantValueError: If value is not an int or is negative
        """
        if isinstance(value, bool) or not isinstance(value, int):
            raise SplurgeEquivariantValueError(f"{context.capitalize()} must be an integer, got: {value!r}")
        if value < 0:
            raise SplurgeEquivariantValueError(f"{context.capitalize()} must be non-negative, got: {value}")
        return value

    @staticmethod
    def in_range(value: int, low: int, high: int, context: str = "value") -> int:
        """
        Validate that ``low <= value <= high``.

        Raises:
            SplurgeEquivariantValueError: If the value lies outside the closed range
        """
        if isinstance(value, bool) or not isinstance(value, int) or not low <= value <= high:
            raise SplurgeEquivariantValueError(f"{context.capitalize()} must lie in [{low}, {high}], got: {value!r}")
        return value

    @staticmethod
    def same_trunc(*truncs: int, context: str = "objects") -> int:
        """
        Validate that all truncation levels agree.

        Args:
            truncs: Truncation levels to compare
            context: Context description for error messages

        Returns:
            The common truncation level

        Raises:
            SplurgeEquivariantTruncationMismatchError: If the levels differ
        """
        distinct = sorted(set(truncs))
        if len(distinct) > 1:
            raise SplurgeEquivariantTruncationMismatchError(
                f"Truncation mismatch between {context}: {distinct}", details={"truncs": list(truncs)}
            )
        return distinct[0]


def derive_seed(base: int, *key: Hashable) -> int:
    """
    Derive a reproducible 32-bit seed from a base seed and a cell key.

    Python's ``hash`` is salted per process, so a digest is used instead.

    Args:
        base: Base seed
        key: Components identifying the cell

    Returns:
        Seed in ``range(2**32)``

    Examples:
        >>> derive_seed(0, "adjunction", 3) == derive_seed(0, "adjunction", 3)
        True
    """
    digest = hashlib.sha256(repr((base, key)).encode("utf-8")).digest()
    return int.from_bytes(digest[:4], "big")


def freeze(value: Any) -> Any:
    """
    Convert nested lists into nested tuples so parsed JSON labels become hashable.

    Args:
        value: Parsed JSON value

    Returns:
        The same value with every list replaced by a tuple
    """
    if isinstance(value, list | tuple):
        return tuple(freeze(item) for item in value)
    return value


def thaw(value: Any) -> Any:
    """Inverse of :func:`freeze` for JSON output."""
    if isinstance(value, tuple | list):
        return [thaw(item) for item in value]
    return value


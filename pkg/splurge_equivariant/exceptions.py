"""
Custom exceptions for the splurge_equivariant package.

These exceptions provide clear error signaling for malformed inputs, violated
structure laws, and exhausted search budgets encountered while building and
checking finite models.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

from __future__ import annotations

from splurge_exceptions import SplurgeFrameworkError

DOMAINS = ["exceptions"]


class SplurgeEquivariantError(SplurgeFrameworkError):
    """Base exception for all errors in the splurge_equivariant package."""

    _domain = "splurge-equivariant"


class SplurgeEquivariantValueError(SplurgeEquivariantError):
    """Raised when a value-related error occurs."""

    _domain = "splurge-equivariant.value"


class SplurgeEquivariantTypeError(SplurgeEquivariantError):
    """Raised when a type-related error occurs."""

    _domain = "splurge-equivariant.type"


class SplurgeEquivariantFileError(SplurgeEquivariantError):
    """Raised when an error occurs while accessing or reading a file."""

    _domain = "splurge-equivariant.file"


class SplurgeEquivariantFileNotFoundError(SplurgeEquivariantFileError):
    """Raised when a file is not found."""

    _domain = "splurge-equivariant.file-not-found"


class SplurgeEquivariantConfigurationError(SplurgeEquivariantError):
    """Raised when configuration is invalid or missing."""

    _domain = "splurge-equivariant.configuration"


class SplurgeEquivariantParsingError(SplurgeEquivariantError):
    """Raised when a JSON payload does not describe a valid object."""

    _domain = "splurge-equivariant.parsing"


class SplurgeEquivariantStructureError(SplurgeEquivariantError):
    """Raised when stored data violates the laws of its structure.

    Examples are a failed simplicial identity, a non-natural map, a
    non-associative composition table or an action that is not a homomorphism.
    """

    _domain = "splurge-equivariant.structure"


class SplurgeEquivariantInvalidSubgroupError(SplurgeEquivariantStructureError):
    """Raised when a member list is not a subgroup of the given group."""

    _domain = "splurge-equivariant.invalid-subgroup"


class SplurgeEquivariantTruncationMismatchError(SplurgeEquivariantValueError):
    """Raised when objects of different truncation levels are combined."""

    _domain = "splurge-equivariant.truncation-mismatch"


class SplurgeEquivariantSearchBudgetExceededError(SplurgeEquivariantError):
    """Raised when an exhaustive search or word enumeration exceeds its budget."""

    _domain = "splurge-equivariant.budget"


class SplurgeEquivariantSegalFailureError(SplurgeEquivariantError):
    """Raised when Segal maps are not bijective on components where required."""

    _domain = "splurge-equivariant.segal-failure"


class SplurgeEquivariantUnsupportedCarrierError(SplurgeEquivariantTypeError):
    """Raised when an operation is not available for a carrier category."""

    _domain = "splurge-equivariant.unsupported-carrier"

"""
File I/O utilities and abstractions for splurge_equivariant.

This module provides testable abstractions for reading object payloads,
writing canonical JSON output and loading check-suite configuration files.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

import json
import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

import yaml  # type: ignore[import-untyped]
from splurge_safe_io.exceptions import (
    SplurgeSafeIoError,
    SplurgeSafeIoFileNotFoundError,
    SplurgeSafeIoLookupError,
    SplurgeSafeIoPathValidationError,
    SplurgeSafeIoPermissionError,
    SplurgeSafeIoUnicodeError,
)
from splurge_safe_io.safe_text_file_reader import SafeTextFileReader
from splurge_safe_io.safe_text_file_writer import open_safe_text_writer

from .exceptions import (
    SplurgeEquivariantConfigurationError,
    SplurgeEquivariantFileError,
    SplurgeEquivariantFileNotFoundError,
    SplurgeEquivariantParsingError,
)

DOMAINS = ["file", "utilities"]

# Most specific safe-io error first; the catch-all base comes last.
_READ_ERRORS: tuple[tuple[type[SplurgeSafeIoError], str], ...] = (
    (SplurgeSafeIoPathValidationError, "Invalid file path"),
    (SplurgeSafeIoPermissionError, "Permission denied reading"),
    (SplurgeSafeIoLookupError, "Lookup error reading"),
    (SplurgeSafeIoUnicodeError, "Encoding error reading"),
    (SplurgeSafeIoError, "I/O error reading"),
)

_WRITE_ERRORS: tuple[tuple[type[SplurgeSafeIoError], str], ...] = (
    (SplurgeSafeIoPathValidationError, "Invalid file path"),
    (SplurgeSafeIoPermissionError, "Permission denied writing to"),
    (SplurgeSafeIoUnicodeError, "Encoding error writing to"),
    (SplurgeSafeIoError, "I/O error writing to"),
)


def _translate(error: SplurgeSafeIoError, path: str | Path, table: tuple[tuple[type, str], ...]) -> Exception:
    for error_type, prefix in table:
        if isinstance(error, error_type):
            return SplurgeEquivariantFileError(f"{prefix}: {path}", details={"details": str(error.message)})
    return SplurgeEquivariantFileError(f"I/O error: {path}", details={"details": str(error)})


class FileIoAdapter(ABC):
    """Abstract interface for file I/O operations."""

    @abstractmethod
    def read_text(self, path: str | Path, *, encoding: str = "utf-8") -> str:
        """
        Read file as text.

        Args:
            path: File path to read
            encoding: Text encoding (default: utf-8)

        Returns:
            File contents as string

        Raises:
            SplurgeEquivariantFileError: If file cannot be read
        """

    @abstractmethod
    def write_text(self, path: str | Path, content: str, *, encoding: str = "utf-8") -> None:
        """
        Write text to file.

        Args:
            path: File path to write to
            content: Text content to write
            encoding: Text encoding (default: utf-8)

        Raises:
            SplurgeEquivariantFileError: If file cannot be written
        """

    @abstractmethod
    def exists(self, path: str | Path) -> bool:
        """Check if file exists."""


class SafeTextFileIoAdapter(FileIoAdapter):
    """Adapter wrapping SafeTextFileReader/Writer with error translation."""

    def __init__(self) -> None:
        """Initialize the adapter."""
        self._logger = logging.getLogger(__name__)

    def read_text(self, path: str | Path, *, encoding: str = "utf-8") -> str:
        """
        Read file as text using SafeTextFileReader.

        Args:
            path: File path to read
            encoding: Text encoding (default: utf-8)

        Returns:
            File contents as string

        Raises:
            SplurgeEquivariantFileNotFoundError: If the file does not exist
            SplurgeEquivariantFileError: If the file cannot be read
        """
        try:
            return SafeTextFileReader(path, encoding=encoding).read()
        except SplurgeSafeIoFileNotFoundError as e:
            raise SplurgeEquivariantFileNotFoundError(
                f"File not found: {path}", details={"details": str(e.message)}
            ) from e
        except SplurgeSafeIoError as e:
            raise _translate(e, path, _READ_ERRORS) from e

    def write_text(self, path: str | Path, content: str, *, encoding: str = "utf-8") -> None:
        """
        Write text to file using SafeTextFileWriter, creating parent directories.

        Args:
            path: File path to write to
            content: Text content to write
            encoding: Text encoding (default: utf-8)

        Raises:
            SplurgeEquivariantFileError: If file cannot be written
        """
        try:
            with open_safe_text_writer(path, encoding=encoding, create_parents=True) as writer:
                writer.write(content)
        except SplurgeSafeIoError as e:
            raise _translate(e, path, _WRITE_ERRORS) from e
        self._logger.debug(f"Wrote {len(content)} characters to {path}")

    def exists(self, path: str | Path) -> bool:
        """
        Check if file exists.

        Args:
            path: File path to check

        Returns:
            True if file exists, False otherwise
        """
        return Path(path).exists()


class YamlConfigReader:
    """Read and parse YAML configuration files (JSON files parse as YAML too)."""

    def __init__(self, file_io: FileIoAdapter | None = None) -> None:
        """
        Initialize the YAML config reader.

        Args:
            file_io: Optional FileIoAdapter. If None, uses SafeTextFileIoAdapter.
        """
        self._file_io = file_io or SafeTextFileIoAdapter()
        self._logger = logging.getLogger(__name__)

    def read(self, path: str | Path) -> dict[str, Any]:
        """
        Read and parse a YAML file that must contain a mapping.

        Args:
            path: Path to YAML file

        Returns:
            Parsed YAML content as dictionary

        Raises:
            SplurgeEquivariantFileError: If file cannot be read
            SplurgeEquivariantConfigurationError: If YAML is invalid or not a mapping
        """
        content = self._file_io.read_text(path)
        try:
            parsed = yaml.safe_load(content)
        except yaml.YAMLError as e:
            raise SplurgeEquivariantConfigurationError(
                f"Invalid YAML syntax in {path}", details={"details": str(e)}
            ) from e

        if not isinstance(parsed, dict):
            raise SplurgeEquivariantConfigurationError(
                f"Configuration file {path} must contain a mapping, got {type(parsed).__name__}"
            )
        self._logger.debug(f"Loaded {len(parsed)} configuration keys from {path}")
        return parsed


class JsonDocumentReader:
    """Read JSON object payloads and write them back canonically."""

    def __init__(self, file_io: FileIoAdapter | None = None) -> None:
        """
        Initialize the JSON reader.

        Args:
            file_io: Optional FileIoAdapter. If None, uses SafeTextFileIoAdapter.
        """
        self._file_io = file_io or SafeTextFileIoAdapter()
        self._logger = logging.getLogger(__name__)

    @property
    def file_io(self) -> FileIoAdapter:
        """Public read-only access to the underlying adapter."""
        return self._file_io

    def read(self, path: str | Path) -> dict[str, Any]:
        """
        Read a JSON document whose top level is an object.

        Args:
            path: Path to the JSON file

        Returns:
            Parsed JSON object

        Raises:
            SplurgeEquivariantFileError: If the file cannot be read
            SplurgeEquivariantParsingError: If the content is not a JSON object
        """
        content = self._file_io.read_text(path)
        try:
            parsed = json.loads(content)
        except json.JSONDecodeError as e:
            raise SplurgeEquivariantParsingError(
                f"Invalid JSON in {path} at line {e.lineno}, column {e.colno}",
                details={"details": e.msg, "line": e.lineno, "column": e.colno},
            ) from e
        if not isinstance(parsed, dict):
            raise SplurgeEquivariantParsingError(
                f"JSON document {path} must be an object, got {type(parsed).__name__}",
                details={"field": "$"},
            )
        return parsed

    def write(self, path: str | Path, payload: dict[str, Any]) -> None:
        """
        Write a payload as canonical JSON (sorted keys, two-space indent, trailing newline).

        Args:
            path: Destination path
            payload: JSON-compatible mapping
        """
        self._file_io.write_text(path, dumps_canonical(payload))


def dumps_canonical(payload: dict[str, Any]) -> str:
    """
    Serialize a payload canonically so repeated dumps are byte-identical.

    Args:
        payload: JSON-compatible mapping

    Returns:
        JSON text with sorted keys and a trailing newline
    """
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

"""
Configuration management for splurge_equivariant.

This module provides structured configuration with environment variable support
and the check-suite configuration read from YAML or JSON files.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .exceptions import SplurgeEquivariantConfigurationError

DOMAINS = ["config"]

# Environment variable prefix
_ENV_PREFIX = "SPLURGE_EQ_"

MODEL_QCAT = "qcat"
MODEL_CSS = "css"
MODEL_SC = "sc"
MODEL_SECAT_C = "secat_c"
MODEL_SECAT_F = "secat_f"

MODELS = (MODEL_QCAT, MODEL_CSS, MODEL_SC, MODEL_SECAT_C, MODEL_SECAT_F)

# Models whose suites run Segal-map checks and therefore need level 2.
_SEGAL_MODELS = frozenset({MODEL_CSS, MODEL_SECAT_C, MODEL_SECAT_F})


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(f"{_ENV_PREFIX}{name}")
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise SplurgeEquivariantConfigurationError(
            f"Environment variable {_ENV_PREFIX}{name} must be an integer, got: {raw!r}",
            details={"details": str(e)},
        ) from e


@dataclass
class EquivariantConfig:
    """Library-wide defaults for truncation and search limits."""

    default_encoding: str = "utf-8"
    """Default text encoding for file operations"""

    default_trunc: int = 3
    """Truncation level used when a command does not pass --trunc"""

    search_budget: int = 200_000
    """Maximum number of search nodes visited by one hom enumeration"""

    attach_budget: int = 6
    """Maximum number of attached cells in one composite word"""

    hom_warning_threshold: int = 1_000_000
    """Candidate-space size above which hom enumeration logs a warning"""

    seed_count: int = 5
    """Number of random seeds per check-suite cell"""

    workers: int = 1
    """Worker threads used by the check suite"""

    @classmethod
    def from_env(cls) -> "EquivariantConfig":
        """
        Load configuration from environment variables.

        Environment variables (prefixed with SPLURGE_EQ_):
        - SPLURGE_EQ_DEFAULT_ENCODING: Default text encoding
        - SPLURGE_EQ_DEFAULT_TRUNC: Default truncation level
        - SPLURGE_EQ_SEARCH_BUDGET: Search-node budget for hom enumeration
        - SPLURGE_EQ_ATTACH_BUDGET: Word-length budget for cell attachment
        - SPLURGE_EQ_HOM_WARNING_THRESHOLD: Size warning threshold
        - SPLURGE_EQ_SEED_COUNT: Seeds per check cell
        - SPLURGE_EQ_WORKERS: Worker threads for the check suite

        Returns:
            EquivariantConfig instance with environment overrides applied

        Raises:
            SplurgeEquivariantConfigurationError: If a numeric variable is malformed
        """
        defaults = cls()
        return cls(
            default_encoding=os.getenv(f"{_ENV_PREFIX}DEFAULT_ENCODING", defaults.default_encoding),
            default_trunc=_env_int("DEFAULT_TRUNC", defaults.default_trunc),
            search_budget=_env_int("SEARCH_BUDGET", defaults.search_budget),
            attach_budget=_env_int("ATTACH_BUDGET", defaults.attach_budget),
            hom_warning_threshold=_env_int("HOM_WARNING_THRESHOLD", defaults.hom_warning_threshold),
            seed_count=_env_int("SEED_COUNT", defaults.seed_count),
            workers=_env_int("WORKERS", defaults.workers),
        )

    def to_dict(self) -> dict[str, object]:
        """
        Convert configuration to dictionary.

        Returns:
            Dictionary representation of configuration
        """
        return {
            "default_encoding": self.default_encoding,
            "default_trunc": self.default_trunc,
            "search_budget": self.search_budget,
            "attach_budget": self.attach_budget,
            "hom_warning_threshold": self.hom_warning_threshold,
            "seed_count": self.seed_count,
            "workers": self.workers,
        }


# Global default configuration instance
DEFAULT_CONFIG = EquivariantConfig()


@dataclass
class CheckSuiteConfig:
    """Selection of the check matrix run by ``splurge-equivariant check``."""

    model: str
    """Model structure selector: qcat, css, sc, secat_c or secat_f"""

    group: str
    """Built-in group name (trivial, Z<n>, D<n>, S3, S4) or path to a JSON group file"""

    family: str | list[list[str]] = "all"
    """"all" or explicit subgroups given by member lists of element names"""

    trunc: int = 3
    """Truncation level N"""

    budget: int = DEFAULT_CONFIG.search_budget
    """Enumeration budget per search"""

    seeds: int = DEFAULT_CONFIG.seed_count
    """Number of random seeds per randomized cell"""

    seed: int = 0
    """Base seed; cell seeds derive from it and the cell key"""

    orbit_comparison: bool = False
    """Whether to run the orbit-diagram (Elmendorf) adjunction cells"""

    attach_budget: int = DEFAULT_CONFIG.attach_budget
    """Word-length budget for simplicial-category attachments"""

    max_dim: int = 2
    """Largest generator dimension in the cellularity matrix"""

    extra: dict[str, Any] = field(default_factory=dict)
    """Unrecognized keys, kept for diagnostics"""

    @classmethod
    def from_dict(cls, data: dict[str, Any], *, base_dir: Path | None = None) -> "CheckSuiteConfig":
        """
        Build a configuration from a parsed YAML/JSON mapping.

        Args:
            data: Parsed configuration mapping
            base_dir: Directory against which a relative group path is resolved

        Returns:
            Validated CheckSuiteConfig

        Raises:
            SplurgeEquivariantConfigurationError: If required keys are missing or invalid
        """
        if not isinstance(data, dict):
            raise SplurgeEquivariantConfigurationError("Check configuration must be a mapping")
        for key in ("model", "group"):
            if key not in data:
                raise SplurgeEquivariantConfigurationError(f"Check configuration is missing required key: {key}")

        known = {
            "model",
            "group",
            "family",
            "trunc",
            "budget",
            "seeds",
            "seed",
            "orbit_comparison",
            "attach_budget",
            "max_dim",
        }
        group = str(data["group"])
        if base_dir is not None and group.endswith(".json") and not Path(group).is_absolute():
            group = str(base_dir / group)

        try:
            config = cls(
                model=str(data["model"]).lower(),
                group=group,
                family=data.get("family", "all"),
                trunc=int(data.get("trunc", DEFAULT_CONFIG.default_trunc)),
                budget=int(data.get("budget", DEFAULT_CONFIG.search_budget)),
                seeds=int(data.get("seeds", DEFAULT_CONFIG.seed_count)),
                seed=int(data.get("seed", 0)),
                orbit_comparison=bool(data.get("orbit_comparison", False)),
                attach_budget=int(data.get("attach_budget", DEFAULT_CONFIG.attach_budget)),
                max_dim=int(data.get("max_dim", 2)),
                extra={k: v for k, v in data.items() if k not in known},
            )
        except (TypeError, ValueError) as e:
            raise SplurgeEquivariantConfigurationError(
                "Check configuration has a malformed numeric field", details={"details": str(e)}
            ) from e
        config.validate()
        return config

    @property
    def needs_segal(self) -> bool:
        """Whether the selected model runs Segal-map checks."""
        return self.model in _SEGAL_MODELS

    def validate(self) -> None:
        """
        Check the configuration invariants that do not need the group loaded.

        Raises:
            SplurgeEquivariantConfigurationError: If any invariant fails
        """
        if self.model not in MODELS:
            raise SplurgeEquivariantConfigurationError(
                f"Unknown model structure: {self.model}", details={"known": ", ".join(MODELS)}
            )
        if self.trunc < 0:
            raise SplurgeEquivariantConfigurationError(f"Truncation level must be non-negative, got {self.trunc}")
        if self.needs_segal and self.trunc < 2:
            raise SplurgeEquivariantConfigurationError(
                f"Model {self.model} runs Segal checks and needs trunc >= 2, got {self.trunc}"
            )
        if self.budget < 1 or self.seeds < 1 or self.attach_budget < 1:
            raise SplurgeEquivariantConfigurationError("budget, seeds and attach_budget must be positive")
        if self.max_dim < 0:
            raise SplurgeEquivariantConfigurationError(f"max_dim must be non-negative, got {self.max_dim}")
        if isinstance(self.family, str):
            if self.family != "all":
                raise SplurgeEquivariantConfigurationError(
                    f"Subgroup family must be 'all' or a list of member lists, got {self.family!r}"
                )
        elif not all(isinstance(members, list) for members in self.family):
            raise SplurgeEquivariantConfigurationError("Subgroup family entries must be member lists")

    def to_dict(self) -> dict[str, object]:
        """
        Convert configuration to dictionary.

        Returns:
            Dictionary representation of configuration
        """
        return {
            "model": self.model,
            "group": self.group,
            "family": self.family,
            "trunc": self.trunc,
            "budget": self.budget,
            "seeds": self.seeds,
            "seed": self.seed,
            "orbit_comparison": self.orbit_comparison,
            "attach_budget": self.attach_budget,
            "max_dim": self.max_dim,
        }

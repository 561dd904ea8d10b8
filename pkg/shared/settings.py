"""
Settings loader - reads data/rsdp.toml.

Sections:
- [logging]   level of messages printed to stderr
- [solver]    iteration cap multiplier, list guard, threads, audit
- [optimizer] grid, restarts and simplex schedule for the cost models
- [oracle]    work limit of the exhaustive search

Missing keys fall back to the defaults below.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import tomli

from shared.errors import ConfigError

PROJECT_ROOT = Path(__file__).parent.parent
DATA_DIR = PROJECT_ROOT / "data"
DEFAULT_SETTINGS_FILE = DATA_DIR / "rsdp.toml"


@dataclass(frozen=True)
class LoggingSettings:
    level: str = "INFO"


@dataclass(frozen=True)
class SolverSettings:
    # Multiplier on the expected number of iterations
    cap_multiplier: int = 50
    # Largest list any level may hold before the run is refused
    guard_limit: int = 2_000_000
    # 0 = one worker per CPU
    threads: int = 1
    # Iterations handed to the pool at once
    batch_size: int = 16
    audit: bool = False


@dataclass(frozen=True)
class OptimizerDefaults:
    grid_density: int = 9
    restarts: int = 48
    restart_seed: int = 2023
    top_seeds: int = 6
    initial_step: float = 0.15
    shrink: float = 0.3
    step_floor: float = 1e-3
    penalty_weight: float = 50.0
    tolerance: float = 1e-4


@dataclass(frozen=True)
class OracleSettings:
    work_limit: int = 100_000_000


@dataclass(frozen=True)
class Settings:
    logging: LoggingSettings = field(default_factory=LoggingSettings)
    solver: SolverSettings = field(default_factory=SolverSettings)
    optimizer: OptimizerDefaults = field(default_factory=OptimizerDefaults)
    oracle: OracleSettings = field(default_factory=OracleSettings)


def _section(cls, raw: dict, name: str):
    """Build one settings section, keeping defaults for absent keys."""
    table = raw.get(name, {})
    if not isinstance(table, dict):
        raise ConfigError(f"[{name}] must be a table")
    defaults = cls()
    values = {}
    for key in cls.__dataclass_fields__:
        default = getattr(defaults, key)
        value = table.get(key, default)
        if isinstance(default, bool) and not isinstance(value, bool):
            raise ConfigError(f"{name}.{key} must be true or false")
        if isinstance(default, (int, float)) and not isinstance(default, bool):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError(f"{name}.{key} must be a number")
            value = type(default)(value)
        values[key] = value
    unknown = set(table) - set(values)
    if unknown:
        raise ConfigError(f"Unknown keys in [{name}]: {', '.join(sorted(unknown))}")
    return cls(**values)


def load_settings(path: Optional[Path] = None) -> Settings:
    """
    Load settings from a TOML file.

    Args:
        path: TOML file to read; data/rsdp.toml when None

    Returns:
        Settings with defaults filled in. A missing default file yields
        pure defaults; a missing explicit file is an error.
    """
    explicit = path is not None
    path = Path(path) if explicit else DEFAULT_SETTINGS_FILE
    if not path.exists():
        if explicit:
            raise ConfigError(f"Settings file not found: {path}")
        return Settings()

    try:
        with open(path, "rb") as f:
            raw = tomli.load(f)
    except tomli.TOMLDecodeError as e:
        raise ConfigError(f"Cannot parse {path}: {e}") from e

    return Settings(
        logging=_section(LoggingSettings, raw, "logging"),
        solver=_section(SolverSettings, raw, "solver"),
        optimizer=_section(OptimizerDefaults, raw, "optimizer"),
        oracle=_section(OracleSettings, raw, "oracle"),
    )


_active: Optional[Settings] = None


def get_settings() -> Settings:
    """Active settings; the default file is read on first use."""
    global _active
    if _active is None:
        _active = load_settings()
    return _active


def use_settings(settings: Optional[Settings]) -> None:
    """Replace the active settings (None re-reads the default file on next use)."""
    global _active
    _active = settings

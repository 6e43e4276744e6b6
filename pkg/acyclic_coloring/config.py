"""YAML configuration: discovery, loading and validation into ``AppConfig``."""

import os
import sys
from typing import Any, Dict, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from acyclic_coloring.data.structures import PaletteMode
from acyclic_coloring.params.arith import parse_kappa
from acyclic_coloring.utils.get_log import LEVEL

SEED_ENV_VAR = "ACRC_SEED"


class LogConfig(BaseModel):
    level: str = "info"
    save_locally: bool = False

    @field_validator("level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        if value not in LEVEL:
            raise ValueError(f"unknown log level {value!r}, expected one of {sorted(LEVEL)}")
        return value


class AlgorithmConfig(BaseModel):
    kappa: str = "1.0583"
    mode: PaletteMode = PaletteMode.SAFE
    step_cap_factor: int = Field(default=50, ge=1)

    @field_validator("kappa", mode="before")
    @classmethod
    def _valid_kappa(cls, value: Any) -> str:
        value = str(value)
        parse_kappa(value)
        return value


class GeneratorConfig(BaseModel):
    random_regular_max_retries: int = Field(default=1000, ge=1)


class OracleConfig(BaseModel):
    brute_force_max_n: int = Field(default=9, ge=0)


class BenchConfig(BaseModel):
    max_concurrent_trials: int = Field(default=4, ge=1)
    report_dir: Optional[str] = None


class AppConfig(BaseModel):
    log: LogConfig = Field(default_factory=LogConfig)
    algorithm: AlgorithmConfig = Field(default_factory=AlgorithmConfig)
    generator: GeneratorConfig = Field(default_factory=GeneratorConfig)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    bench: BenchConfig = Field(default_factory=BenchConfig)


def find_config_file(args_config: Optional[str] = None) -> Optional[str]:
    """Locate the configuration file; None means run on built-in defaults.

    Raises:
        FileNotFoundError: ``args_config`` was given but does not exist
    """
    # 1. Command line argument has highest priority
    if args_config:
        if os.path.isfile(args_config):
            print(f"✅ Using specified config file: {args_config}", file=sys.stderr)
            return args_config
        raise FileNotFoundError(f"❌ Specified config file not found: {args_config}")

    # 2. Search default locations by priority
    current_dir = os.getcwd()
    package_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    default_paths = [
        os.path.join(current_dir, "config", "config.yaml"),
        os.path.join(package_root, "config", "config.yaml"),
        os.path.join(current_dir, "config.yaml"),
    ]
    for path in default_paths:
        if os.path.isfile(path):
            return path
    return None


def load_yaml(path: str) -> Dict[str, Any]:
    """Read a YAML mapping.

    Raises:
        ValueError: unreadable file, invalid YAML or a non-mapping document
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        raise ValueError(f"Failed to read YAML {path}: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ValueError(f"Config file {path} must contain a mapping, got {type(data).__name__}")
    return data


def load_config(args_config: Optional[str] = None) -> AppConfig:
    """Find, read and validate the configuration.

    Raises:
        FileNotFoundError: explicit path missing
        ValueError: unreadable or invalid configuration
    """
    path = find_config_file(args_config)
    if path is None:
        return AppConfig()
    try:
        return AppConfig.model_validate(load_yaml(path))
    except ValidationError as e:
        raise ValueError(f"Invalid config {path}: {e}") from e


def seed_from_env(default: int = 0) -> int:
    """Seed fallback from ACRC_SEED.

    Raises:
        ValueError: the variable is set but is not an integer
    """
    raw = os.getenv(SEED_ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.strip())
    except ValueError:
        raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None

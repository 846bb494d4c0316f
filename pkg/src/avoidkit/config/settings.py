from __future__ import annotations

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import yaml
from cachetools import LRUCache, cached
from dotenv import find_dotenv, load_dotenv
from prettyfmt import fmt_path
from pydantic import BaseModel, ConfigDict, Field, ValidationError
from strif import AtomicVar

from avoidkit.config.env_enum import AvoidkitEnv
from avoidkit.errors import ConfigError

log = logging.getLogger(__name__)

SETTINGS_FILENAME = "avoidkit.yml"

DOTENV_NAMES = (".env", ".env.local")


class Settings(BaseModel):
    """
    Tunable limits for the searches and verifiers. Every operation that reads one
    of these also takes an explicit keyword argument that wins over the settings.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    avoid_cap: int = Field(default=14, ge=1)
    """Largest point set `max_avoiding_bruteforce` accepts."""

    crossing_cap: int = Field(default=12, ge=1)
    """Largest point set `max_crossing_family_bruteforce` accepts."""

    rd_avoid_cap: int = Field(default=12, ge=1)
    """Largest point set `max_avoiding_bruteforce_rd` accepts."""

    exhaustive_cap: int = Field(default=200_000, ge=0)
    """Work limit (transversals or orientation evaluations) for exhaustive checks."""

    trials: int = Field(default=1000, ge=1)
    """Sampled transversals when a check is not exhaustive."""

    max_directions: int = Field(default=256, ge=1)
    """Directions the avoiding-pair heuristic sweeps, longest point pairs first."""

    greedy_window: int = Field(default=4, ge=1)
    """Greedy extension scans `greedy_window * target` candidates per side."""

    partition_levels: int = Field(default=8, ge=1)
    """Halving steps the same-type partition tries before the singleton fallback."""

    threads: int = Field(default=1, ge=1)
    """Worker threads for bench rows and sampled verification."""

    seed: int = Field(default=0, ge=0, lt=2**64)
    """Default seed for generators and sampling."""


_override: AtomicVar[Settings | None] = AtomicVar(None)


def load_dotenv_files() -> list[Path]:
    """
    Load `.env` and `.env.local` from the working directory upward, so `AVOIDKIT_*`
    variables can live there.
    """
    loaded: list[Path] = []
    for name in DOTENV_NAMES:
        found = find_dotenv(filename=name, usecwd=True)
        if found:
            load_dotenv(found, override=False)
            loaded.append(Path(found))
    return loaded


@cached(LRUCache(maxsize=16))
def read_settings_file(path: Path) -> dict[str, Any]:
    try:
        with open(path) as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in {fmt_path(path)}: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"Expected a mapping at the top of {fmt_path(path)}")
    return data  # pyright: ignore[reportUnknownVariableType]


def settings_path() -> Path | None:
    path = AvoidkitEnv.AVOIDKIT_CONFIG.read_path(default=None)
    if path is not None:
        if not path.exists():
            raise ConfigError(f"Settings file not found: {fmt_path(path)}")
        return path
    local = Path.cwd() / SETTINGS_FILENAME
    return local if local.exists() else None


def load_settings() -> Settings:
    """
    Defaults, then the YAML settings file, then environment variables.
    """
    values: dict[str, Any] = {}
    path = settings_path()
    if path is not None:
        values.update(read_settings_file(path))
        log.debug("Loaded settings from %s", fmt_path(path))

    threads = AvoidkitEnv.AVOIDKIT_THREADS.read_int(default=None)
    if threads is not None:
        values["threads"] = threads
    seed = AvoidkitEnv.AVOIDKIT_SEED.read_int(default=None)
    if seed is not None:
        values["seed"] = seed

    try:
        return Settings.model_validate(values)
    except ValidationError as e:
        raise ConfigError(f"Invalid settings: {e}") from e


def get_settings() -> Settings:
    """
    The active settings: an override if one is in effect, else freshly loaded ones.
    """
    current = _override.value
    return current if current is not None else load_settings()


@contextmanager
def settings_override(**changes: Any) -> Iterator[Settings]:
    """
    Temporarily replace settings fields, e.g. `with settings_override(avoid_cap=10):`.
    `None` values are ignored so CLI flags can be passed straight through.
    """
    changes = {k: v for k, v in changes.items() if v is not None}
    base = get_settings()
    try:
        updated = Settings.model_validate({**base.model_dump(), **changes})
    except ValidationError as e:
        raise ConfigError(f"Invalid settings: {e}") from e
    previous = _override.swap(updated)
    try:
        yield updated
    finally:
        _override.set(previous)

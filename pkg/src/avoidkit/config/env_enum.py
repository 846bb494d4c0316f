import os
from enum import Enum
from pathlib import Path
from typing import overload

from typing_extensions import override

from avoidkit.errors import ConfigError


class _RequiredType:
    @override
    def __repr__(self) -> str:
        return "REQUIRED"


REQUIRED = _RequiredType()
"""Sentinel value for an environment variable that must be set."""


class MissingEnvVar(ConfigError):
    """Raised when a required environment variable is not set."""

    def __init__(self, env_var: str):
        super().__init__(f"Required environment variable is not set: {env_var}")


class AvoidkitEnv(str, Enum):
    """
    Environment variables read by avoidkit. Each member reads its own value in the
    format needed, e.g. `AvoidkitEnv.AVOIDKIT_THREADS.read_int(default=1)`.
    """

    AVOIDKIT_THREADS = "AVOIDKIT_THREADS"
    """Upper bound on worker threads for bench rows and verification sampling."""

    AVOIDKIT_CONFIG = "AVOIDKIT_CONFIG"
    """Path to a YAML settings file (defaults to `avoidkit.yml` in the working directory)."""

    AVOIDKIT_SEED = "AVOIDKIT_SEED"
    """Default seed when `--seed` is not given."""

    def _raw(self) -> str | None:
        value = os.environ.get(self.value)
        return value if value is None else value.strip()

    @overload
    def read_str(self) -> str: ...

    @overload
    def read_str(self, *, default: str) -> str: ...

    @overload
    def read_str(self, *, default: None) -> str | None: ...

    def read_str(self, *, default: str | None | _RequiredType = REQUIRED) -> str | None:
        value = self._raw()
        if value is not None:
            return value
        if isinstance(default, _RequiredType):
            raise MissingEnvVar(self.value)
        return default

    @overload
    def read_int(self) -> int: ...

    @overload
    def read_int(self, *, default: int) -> int: ...

    @overload
    def read_int(self, *, default: None) -> int | None: ...

    def read_int(self, *, default: int | None | _RequiredType = REQUIRED) -> int | None:
        """
        Integer value of the variable. A value that is set but not an integer is a
        `ConfigError`, not a silent fallback to the default.
        """
        value = self._raw()
        if value:
            try:
                return int(value)
            except ValueError:
                raise ConfigError(f"{self.value} must be an integer, got {value!r}") from None
        if isinstance(default, _RequiredType):
            raise MissingEnvVar(self.value)
        return default

    @overload
    def read_path(self) -> Path: ...

    @overload
    def read_path(self, *, default: Path) -> Path: ...

    @overload
    def read_path(self, *, default: None) -> Path | None: ...

    def read_path(self, *, default: Path | None | _RequiredType = REQUIRED) -> Path | None:
        value = self._raw()
        if value:
            return Path(value).expanduser().resolve()
        if isinstance(default, _RequiredType):
            raise MissingEnvVar(self.value)
        return default.expanduser().resolve() if default is not None else None


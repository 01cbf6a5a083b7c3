"""
Run configuration: defaults < ``polyak-lab.toml`` < ``VKFT_*`` environment < command-line flags.
"""
import logging
import os
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .definitions.constants import (
    CONFIG_FILENAME,
    DEFAULT_ARROW_CEILING,
    DEFAULT_CACHE_DIR,
    DEFAULT_CHORD_CEILING,
    DEFAULT_ENUMERATION_CEILING,
    DEFAULT_WITNESS_BOUND,
    ENV_PREFIX,
)
from .definitions.exceptions import ConfigurationException

_logger = logging.getLogger(__name__)

FORMATS = ("json", "table")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
_TRUE = ("1", "true", "yes", "on")
_FALSE = ("0", "false", "no", "off")


@dataclass(frozen=True)
class RunConfig:
    cache_dir: str = DEFAULT_CACHE_DIR
    enumeration_ceiling: int = DEFAULT_ENUMERATION_CEILING
    arrow_ceiling: int = DEFAULT_ARROW_CEILING
    chord_ceiling: int = DEFAULT_CHORD_CEILING
    witness_bound: int = DEFAULT_WITNESS_BOUND
    output: Optional[str] = None
    format: str = "json"
    workers: int = 1
    seed: int = 0
    log_level: str = "WARNING"
    use_cache: bool = True

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise ConfigurationException(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")
        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigurationException(f"unknown log level {self.log_level!r}")
        object.__setattr__(self, "log_level", self.log_level.upper())
        for name in ("enumeration_ceiling", "arrow_ceiling", "chord_ceiling", "witness_bound", "workers"):
            if getattr(self, name) < (1 if name == "workers" else 0):
                raise ConfigurationException(f"{name} out of range: {getattr(self, name)}")

    def merged(self, values: Mapping[str, Any], source: str) -> "RunConfig":
        """Overlay ``values`` (raw strings or TOML scalars) read from ``source``."""
        known = {f.name: f for f in fields(self)}
        updates: Dict[str, Any] = {}
        for key, raw in values.items():
            if key not in known:
                _logger.warning(f"{source}: ignoring unknown setting {key!r}")
                continue
            updates[key] = _coerce(key, raw, getattr(self, key), source)
        return replace(self, **updates)


def _coerce(key: str, raw: Any, current: Any, source: str) -> Any:
    if key == "output":
        return None if raw in (None, "", "-") else str(raw)
    try:
        if isinstance(current, bool):
            if isinstance(raw, bool):
                return raw
            text = str(raw).strip().lower()
            if text in _TRUE:
                return True
            if text in _FALSE:
                return False
            raise ValueError(text)
        if isinstance(current, int):
            if isinstance(raw, bool):
                raise ValueError(raw)
            return int(raw)
        return str(raw)
    except ValueError:
        raise ConfigurationException(f"{source}: cannot parse {key} = {raw!r}") from None


def read_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a flat ``key = value`` TOML file.

    Raises:
        ConfigurationException: If the file is not valid TOML.
    """
    try:
        with open(path, "rb") as handle:
            return tomllib.load(handle)
    except tomllib.TOMLDecodeError as e:
        raise ConfigurationException(f"{path}: {e}") from None


def environment_values(environ: Mapping[str, str]) -> Dict[str, str]:
    return {
        key[len(ENV_PREFIX):].lower(): value
        for key, value in environ.items()
        if key.startswith(ENV_PREFIX)
    }


def resolve_config(
    flags: Optional[Mapping[str, Any]] = None,
    config_path: Optional[Union[str, Path]] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """
    Resolve the effective configuration.

    Args:
        flags (Mapping | None): Command-line values; None entries are ignored.
        config_path (str | Path | None): Explicit config file; otherwise ``polyak-lab.toml``
            in the working directory is read when present.
        environ (Mapping | None): Environment, ``os.environ`` when omitted.

    Returns:
        RunConfig: The merged configuration.

    Raises:
        ConfigurationException: On an unreadable file or unparsable value.
    """
    config = RunConfig()
    path = Path(config_path) if config_path is not None else Path(CONFIG_FILENAME)
    if path.is_file():
        config = config.merged(read_config_file(path), str(path))
    elif config_path is not None:
        raise ConfigurationException(f"config file {path} not found")
    config = config.merged(environment_values(os.environ if environ is None else environ), "environment")
    if flags:
        config = config.merged({k: v for k, v in flags.items() if v is not None}, "command line")
    return config

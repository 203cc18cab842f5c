"""Content-addressed result cache and static configuration.

Cache keys are digests of (command, parameters, library version), so stale
results from older library versions are never served.  Writes are atomic
(write to a temp file, then rename).
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from . import __version__
from .vey import WO_CONDITION_EXISTS, WO_CONDITION_FORALL


class ConfigError(ValueError):
    """Raised for malformed configuration files or values."""


def default_cache_dir() -> str:
    env = os.environ.get("VEYCALC_CACHE_DIR")
    if env:
        return env
    return str(Path.home() / ".cache" / "veycalc")


@dataclass(frozen=True)
class Config:
    q_cap: int = 6
    model_degree_cap: int = 12
    vey_wo_condition: str = WO_CONDITION_FORALL
    cache_dir: str = field(default_factory=default_cache_dir)
    output_format: str = "table"

    def __post_init__(self) -> None:
        if self.q_cap < 1 or self.model_degree_cap < 1:
            raise ConfigError("caps must be positive")
        if self.vey_wo_condition not in (WO_CONDITION_FORALL, WO_CONDITION_EXISTS):
            raise ConfigError(f"unknown vey_wo_condition {self.vey_wo_condition!r}")
        if self.output_format not in ("table", "json"):
            raise ConfigError(f"unknown output_format {self.output_format!r}")

    def to_json_obj(self) -> dict:
        return {
            "q_cap": self.q_cap,
            "model_degree_cap": self.model_degree_cap,
            "vey_wo_condition": self.vey_wo_condition,
            "cache_dir": self.cache_dir,
            "output_format": self.output_format,
        }

    def digest(self) -> str:
        return hashlib.sha256(canonical_json(self.to_json_obj()).encode()).hexdigest()[:12]


def load_config(path: str | None) -> Config:
    if path is None:
        return Config()
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config file must contain a JSON object")
    known = {f.name for f in fields(Config)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return Config(**data)


def canonical_json(obj) -> str:
    """Byte-deterministic JSON text (sorted keys, minimal separators)."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def cache_key(command: str, params: dict) -> str:
    payload = canonical_json(
        {"command": command, "params": params, "version": __version__}
    )
    return hashlib.sha256(payload.encode()).hexdigest()


class ResultCache:
    def __init__(self, cache_dir: str):
        self.dir = Path(cache_dir)

    def _path(self, key: str) -> Path:
        return self.dir / f"{key}.json"

    def get(self, command: str, params: dict):
        """Cached payload for (command, params, version), or None."""
        path = self._path(cache_key(command, params))
        try:
            with open(path, encoding="utf-8") as fh:
                entry = json.load(fh)
        except (OSError, json.JSONDecodeError):
            return None
        if entry.get("version") != __version__:
            return None
        return entry.get("payload")

    def put(self, command: str, params: dict, payload) -> None:
        key = cache_key(command, params)
        entry = {
            "key": key,
            "version": __version__,
            "created_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
            "payload": payload,
        }
        self.dir.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(canonical_json(entry))
            os.replace(tmp, self._path(key))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

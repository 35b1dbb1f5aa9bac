"""On-disk cache of query results keyed by a content hash of inputs, engine version and config."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .config import ENGINE_VERSION

ENV_VAR = "CISUPPORT_CACHE_DIR"


def content_hash(*parts) -> str:
    blob = json.dumps([ENGINE_VERSION, *parts], sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode()).hexdigest()


def default_cache_dir() -> Path:
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "cisupport"


def resolve_cache_dir(flag: str | None) -> Path:
    """The environment variable overrides the flag, which overrides the default."""
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(flag) if flag else default_cache_dir()


class ResultCache:
    """One JSON file per entry, written by atomic rename; entries with a stale version stamp are ignored."""

    def __init__(self, directory: str | os.PathLike):
        self.dir = Path(directory)
        self.hits = 0
        self.misses = 0

    def _path(self, key: str) -> Path:
        return self.dir / f"{key}.json"

    def get(self, key: str):
        try:
            with open(self._path(key), encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, ValueError):
            self.misses += 1
            return None
        if data.get("engine_version") != ENGINE_VERSION:
            self.misses += 1
            return None
        self.hits += 1
        return data["value"]

    def put(self, key: str, value) -> None:
        self.dir.mkdir(parents=True, exist_ok=True)
        payload = json.dumps({"engine_version": ENGINE_VERSION, "value": value}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.dir, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp, self._path(key))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


class NullCache:
    hits = misses = 0

    def get(self, key):
        return None

    def put(self, key, value):
        pass

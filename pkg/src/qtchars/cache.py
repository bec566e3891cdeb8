"""Content-addressed on-disk cache of serialized characters.

One JSON file per key, named by the sha256 of the canonical key text.  Writes
go to a temporary file in the same directory followed by ``os.replace``, so
concurrent writers of the same key leave one complete entry behind.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

ENGINE_VERSION = "qtchars-1"
ENV_DIR = "QTCHARS_CACHE_DIR"

log = logging.getLogger(__name__)


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_DIR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "qtchars"


@dataclass(frozen=True)
class CacheKey:
    family: str
    rank: int
    kind: str  # chiq | chiqt | ft | et | twisted (optionally with a suffix)
    monomial: str  # canonical text form
    version: str = ENGINE_VERSION

    def canonical(self) -> str:
        return f"{self.family}|{self.rank}|{self.kind}|{self.monomial}|{self.version}"

    def digest(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()


class ResultCache:
    def __init__(self, directory=None, version: str = ENGINE_VERSION):
        self.dir = Path(directory) if directory is not None else default_cache_dir()
        self.version = version

    def path(self, key: CacheKey) -> Path:
        return self.dir / f"{key.digest()}.json"

    def load(self, key: CacheKey):
        """Stored value, or ``None`` on a miss (absent, stale or unreadable entry)."""
        p = self.path(key)
        try:
            raw = p.read_text()
        except FileNotFoundError:
            return None
        try:
            entry = json.loads(raw)
            if entry["key"] != key.canonical():
                return None
            return entry["value"]
        except (ValueError, KeyError, TypeError):
            log.warning("corrupt cache entry %s, recomputing", p)
            return None

    def store(self, key: CacheKey, value) -> Path:
        self.dir.mkdir(parents=True, exist_ok=True)
        text = json.dumps({"key": key.canonical(), "value": value}, sort_keys=True,
                          separators=(",", ":"))
        fd, tmp = tempfile.mkstemp(dir=self.dir, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, self.path(key))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return self.path(key)

    def get_or_compute(self, key: CacheKey, compute):
        key = CacheKey(key.family, key.rank, key.kind, key.monomial, self.version)
        hit = self.load(key)
        if hit is not None:
            return hit
        value = compute()
        self.store(key, value)
        return value

"""On-disk cache of rendered reports.

One JSON file per (tool version, command, canonical parameters). Each file
stores the rendered document, the exit code and a SHA-256 checksum of both.
Entries from another version or with a bad checksum are discarded.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path

from . import __version__

log = logging.getLogger(__name__)

ENV_VAR = "NUMSG_CACHE_DIR"


def default_cache_dir() -> Path:
    if os.environ.get(ENV_VAR):
        return Path(os.environ[ENV_VAR])
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(Path.home(), ".cache")
    return Path(base) / "numsg"


def canonical(params: dict) -> str:
    return json.dumps(params, sort_keys=True, separators=(",", ":"))


def _checksum(value: str, exit_code: int) -> str:
    return hashlib.sha256(f"{exit_code}\n{value}".encode()).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    version: str
    command: str
    params: dict
    value: str
    exit_code: int
    checksum: str

    def valid(self) -> bool:
        return self.checksum == _checksum(self.value, self.exit_code)


class ResultCache:
    def __init__(self, directory: Path | str | None = None, enabled: bool = True, version: str = __version__):
        self.directory = Path(directory) if directory else default_cache_dir()
        self.enabled = enabled
        self.version = version

    def path_for(self, command: str, params: dict) -> Path:
        digest = hashlib.sha256(f"{self.version}\n{command}\n{canonical(params)}".encode()).hexdigest()
        return self.directory / f"{digest[:32]}.json"

    def get(self, command: str, params: dict) -> CacheEntry | None:
        if not self.enabled:
            return None
        path = self.path_for(command, params)
        if not path.exists():
            return None
        try:
            entry = CacheEntry(**json.loads(path.read_text()))
        except (OSError, ValueError, TypeError) as exc:
            log.warning("discarding unreadable cache entry %s: %s", path.name, exc)
            path.unlink(missing_ok=True)
            return None
        if not entry.valid():
            log.warning("discarding cache entry %s: checksum mismatch", path.name)
            path.unlink(missing_ok=True)
            return None
        if entry.version != self.version or entry.command != command or entry.params != params:
            return None
        return entry

    def put(self, command: str, params: dict, value: str, exit_code: int) -> CacheEntry | None:
        if not self.enabled:
            return None
        entry = CacheEntry(
            version=self.version,
            command=command,
            params=params,
            value=value,
            exit_code=exit_code,
            checksum=_checksum(value, exit_code),
        )
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            path = self.path_for(command, params)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps(entry.__dict__, sort_keys=True))
            tmp.replace(path)
        except OSError as exc:
            log.warning("could not write cache entry: %s", exc)
            return None
        return entry

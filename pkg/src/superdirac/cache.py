"""Read-through JSON cache for computed records.

Each entry is a file ``<sha256 of key>.json`` holding
``{"schema_version", "key", "payload", "hash"}`` where ``hash`` is the
sha256 of the canonical payload text.  Entries with another schema version
or a wrong hash are ignored and overwritten by the next put.  IO failures
never abort a computation; they are reported as warnings.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
DEFAULT_DIR = ".superdirac-cache"


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("ascii")).hexdigest()


class Cache:
    def __init__(self, directory=DEFAULT_DIR, enabled: bool = True, version: int = SCHEMA_VERSION):
        self.directory = Path(directory)
        self.enabled = enabled
        self.version = version

    def path(self, key: dict) -> Path:
        return self.directory / f"{digest(canonical(key))}.json"

    def get(self, key: dict):
        """The cached payload for key, or None on a miss, stale version or corruption."""
        if not self.enabled:
            return None
        p = self.path(key)
        try:
            text = p.read_text(encoding="ascii")
        except FileNotFoundError:
            return None
        except OSError as exc:
            log.warning("cache read failed for %s: %s", p, exc)
            return None
        try:
            entry = json.loads(text)
            if entry.get("schema_version") != self.version or entry.get("key") != key:
                return None
            if digest(canonical(entry["payload"])) != entry.get("hash"):
                log.warning("cache entry %s is corrupted; recomputing", p.name)
                return None
            return entry["payload"]
        except (ValueError, KeyError, TypeError, AttributeError):
            log.warning("cache entry %s is unreadable; recomputing", p.name)
            return None

    def put(self, key: dict, payload) -> None:
        if not self.enabled:
            return
        entry = {
            "schema_version": self.version,
            "key": key,
            "payload": payload,
            "hash": digest(canonical(payload)),
        }
        p = self.path(key)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="ascii") as fh:
                fh.write(canonical(entry))
            os.replace(tmp, p)
        except OSError as exc:
            log.warning("cache write failed for %s: %s", p, exc)

    def fetch(self, key: dict, compute):
        """Payload for key, computing and storing it on a miss."""
        hit = self.get(key)
        if hit is not None:
            return hit
        payload = compute()
        # round-trip so hits and fresh results are the same JSON values
        payload = json.loads(canonical(payload))
        self.put(key, payload)
        return payload

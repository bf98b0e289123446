"""Content-addressed on-disk cache for expensive expansions.

Each entry is a small text file named by the SHA-256 of its request key::

    key: pleth:e2:F3:6
    tool_version: 0.1.0
    created_at: 2026-01-01T00:00:00+00:00
    ---
    <payload>

Writes go to a temporary file in the same directory and are moved into
place with ``os.replace``, so readers never see a partial entry.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from datetime import datetime, timezone
from pathlib import Path

from . import __version__

ENV_VAR = "REIDPLETH_CACHE"
SEPARATOR = "---\n"


def default_root() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "reidpleth"


class ExpansionCache:
    def __init__(self, root: str | os.PathLike | None = None):
        self.root = Path(root) if root is not None else default_root()

    def path_for(self, key: str) -> Path:
        digest = hashlib.sha256(key.encode()).hexdigest()
        return self.root / digest[:2] / f"{digest}.txt"

    def get(self, key: str) -> str | None:
        path = self.path_for(key)
        try:
            text = path.read_text()
        except FileNotFoundError:
            return None
        header, sep, payload = text.partition(SEPARATOR)
        if not sep or f"key: {key}\n" not in header:
            # hash collision or a damaged file: treat as a miss
            return None
        return payload

    def put(self, key: str, payload: str) -> Path:
        path = self.path_for(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        text = f"key: {key}\ntool_version: {__version__}\ncreated_at: {stamp}\n{SEPARATOR}{payload}"
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path

    def get_or_compute(self, key: str, compute) -> str:
        hit = self.get(key)
        if hit is not None:
            return hit
        payload = compute()
        self.put(key, payload)
        return payload

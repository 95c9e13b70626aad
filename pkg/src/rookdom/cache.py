"""JSON results cache for solved boards.

One file, rewritten whole on every save (write to a temporary sibling, then
``os.replace``). Certificates are re-verified whenever the file is read.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .bounds import proven_lower_bound
from .core import BoardDims, RookConfig, is_total_dominating

ENV_VAR = "ROOKDOM_CACHE"


class CacheError(ValueError):
    pass


def default_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "rookdom" / "results.json"


@dataclass
class CacheEntry:
    n: int
    m: int
    lower: int
    upper: int
    method: str
    certificate: RookConfig | None
    version: str = __version__
    timestamp: str = ""

    @property
    def dims(self) -> BoardDims:
        return BoardDims(self.n, self.m)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    @classmethod
    def from_result(cls, res) -> "CacheEntry":
        return cls(
            n=res.dims.n,
            m=res.dims.m,
            lower=res.lower,
            upper=res.upper,
            method=res.method.value,
            certificate=res.certificate,
            timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "value": self.lower if self.exact else [self.lower, self.upper],
            "method": self.method,
            "certificate": None if self.certificate is None else [list(c) for c in self.certificate.sorted_cells()],
            "version": self.version,
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CacheEntry":
        try:
            n, m = int(d["n"]), int(d["m"])
            v = d["value"]
            lower, upper = (int(v), int(v)) if isinstance(v, int) else (int(v[0]), int(v[1]))
            cert = None
            if d.get("certificate") is not None:
                cert = RookConfig(BoardDims(n, m), (tuple(c) for c in d["certificate"]))
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise CacheError(f"malformed cache entry {d!r}: {exc}") from exc
        entry = cls(n, m, lower, upper, str(d.get("method", "")), cert,
                    str(d.get("version", "")), str(d.get("timestamp", "")))
        if lower == upper and cert is None:
            raise CacheError(f"exact entry for {n}x{m} has no certificate")
        if cert is not None:
            if not is_total_dominating(cert):
                raise CacheError(f"cached certificate for {n}x{m} does not verify")
            if len(cert) < upper or (entry.exact and len(cert) != lower):
                raise CacheError(f"cached certificate for {n}x{m} has {len(cert)} rooks, value says {v}")
        if lower > upper or (entry.exact and lower < proven_lower_bound(n, m)):
            raise CacheError(f"entry for {n}x{m} claims {v}, below the proven lower bound or empty")
        return entry


class ResultsCache:
    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else default_path()
        self.entries: dict[tuple[int, int], CacheEntry] = {}
        if self.path.exists():
            self.load()

    def load(self) -> None:
        try:
            data = json.loads(self.path.read_text())
        except json.JSONDecodeError as exc:
            raise CacheError(f"{self.path}: not valid JSON ({exc})") from exc
        self.entries = {}
        for d in data.get("entries", []):
            e = CacheEntry.from_dict(d)
            self.entries[(e.n, e.m)] = e

    def get(self, n: int, m: int) -> CacheEntry | None:
        return self.entries.get((min(n, m), max(n, m)))

    def put(self, res) -> CacheEntry:
        """Store a solver result; never replaces an exact entry with an interval."""
        e = CacheEntry.from_result(res)
        old = self.entries.get((e.n, e.m))
        if old is not None and old.exact and not e.exact:
            return old
        self.entries[(e.n, e.m)] = e
        return e

    def exact_results(self) -> list[CacheEntry]:
        return [e for _, e in sorted(self.entries.items()) if e.exact]

    def dumps(self) -> str:
        body = [e.to_dict() for _, e in sorted(self.entries.items())]
        return json.dumps({"version": __version__, "entries": body}, indent=1) + "\n"

    def save(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(prefix=".rookdom-", suffix=".json", dir=self.path.parent)
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(self.dumps())
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

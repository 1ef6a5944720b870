"""On-disk store for Littlewood-Richardson coefficients.

The file holds one ``mu|nu|theta=value`` line per canonical key, in the
order the entries were first written, followed by a ``# sha256 <hex>``
footer over everything above it.  New entries are appended and the footer
is rewritten; existing lines are never touched.  A file that fails to parse
or whose checksum does not match is ignored with a warning.
"""

from __future__ import annotations

import hashlib
import os
import warnings
from pathlib import Path
from typing import Mapping

from schurstar.partition import format_partition, parse_partition
from schurstar.schur import lr_key

ENV = "SCHURSTAR_CACHE"
DEFAULT_NAME = ".schurstar-lr-cache"
FOOTER = "# sha256 "

Key = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


class CorruptCache(ValueError):
    pass


class CacheWarning(UserWarning):
    pass


def default_path() -> Path:
    return Path(os.environ.get(ENV) or Path.cwd() / DEFAULT_NAME)


def format_entry(key: Key, value: int) -> str:
    return "|".join(format_partition(p) for p in key) + f"={value}"


def parse_entry(line: str) -> tuple[Key, int]:
    try:
        triple, value = line.split("=")
        mu, nu, theta = (parse_partition(x) for x in triple.split("|"))
        value = int(value)
    except ValueError:
        raise CorruptCache(f"bad cache line {line!r}") from None
    key = (mu, nu, theta)
    if lr_key(*key) != key:
        raise CorruptCache(f"non-canonical cache key {line!r}")
    if value < 0 or sum(theta) != sum(mu) + sum(nu):
        raise CorruptCache(f"impossible cache value {line!r}")
    return key, value


def _digest(body: str) -> str:
    return hashlib.sha256(body.encode()).hexdigest()


def _read(path: Path) -> tuple[dict[Key, int], int]:
    """Entries and the byte offset of the footer; raises CorruptCache."""
    data = path.read_bytes().decode("ascii", errors="strict") if path.exists() else ""
    if not data:
        return {}, 0
    body, sep, footer = data.rpartition(FOOTER)
    if not sep or footer.strip() != _digest(body) or (body and not body.endswith("\n")):
        raise CorruptCache(f"checksum mismatch in {path}")
    entries: dict[Key, int] = {}
    for line in body.splitlines():
        key, value = parse_entry(line)
        if entries.setdefault(key, value) != value:
            raise CorruptCache(f"conflicting values for {line!r}")
    return entries, len(body.encode())


def load(path: Path | str | None = None) -> dict[Key, int]:
    """Read the cache; a missing file is empty, a corrupt one is discarded with a warning."""
    path = Path(path) if path is not None else default_path()
    try:
        return _read(path)[0]
    except (CorruptCache, UnicodeDecodeError) as exc:
        warnings.warn(f"ignoring corrupt LR cache {path}: {exc}", CacheWarning, stacklevel=2)
        return {}


def append(entries: Mapping[Key, int], path: Path | str | None = None) -> int:
    """Add entries not yet on disk and rewrite the footer; returns how many were written.

    A corrupt file is replaced rather than extended.
    """
    path = Path(path) if path is not None else default_path()
    try:
        old, offset = _read(path)
        body = path.read_bytes()[:offset].decode() if offset else ""
    except (CorruptCache, UnicodeDecodeError) as exc:
        warnings.warn(f"replacing corrupt LR cache {path}: {exc}", CacheWarning, stacklevel=2)
        old, offset, body = {}, 0, ""
    new: dict[Key, int] = {}
    for key, value in entries.items():
        key = lr_key(*key)
        if key not in old:
            new.setdefault(key, value)
    if not new:
        return 0
    lines = "".join(format_entry(k, v) + "\n" for k, v in sorted(new.items()))
    body += lines
    with open(path, "r+b" if offset else "wb") as fh:
        fh.seek(offset)
        fh.write(lines.encode())
        fh.write(f"{FOOTER}{_digest(body)}\n".encode())
        fh.truncate()
    return len(new)

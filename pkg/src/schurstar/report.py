"""JSON-lines serialization of verification reports.

A record is one JSON object per line with a fixed field order.  Partitions
are written in the text grammar (``"3,1"``), skew shapes as ``"outer/inner"``.
Wall-clock fields are left out unless a timestamp is supplied, so that
sweep output is byte-stable.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from schurstar import __version__
from schurstar.partition import (
    SkewShape,
    format_partition,
    format_skew,
    parse_partition,
    parse_skew,
    show,
)
from schurstar.schur import SchurExpansion, Witness
from schurstar.verify import VerificationReport

FIELDS = ("subject", "star_image", "difference", "degree", "verdict", "witness", "checks", "version", "config_hash")


def config_hash(config: dict) -> str:
    """Short digest of a configuration, stable under key order."""
    text = json.dumps(config, sort_keys=True, separators=(",", ":"), default=list)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _shape_text(s) -> str:
    return format_skew(s) if isinstance(s, SkewShape) else format_partition(s)


def _shape_parse(text: str, skew: bool):
    return parse_skew(text) if skew else parse_partition(text)


@dataclass(frozen=True)
class ReportRecord:
    subject: tuple
    star_image: tuple
    difference: SchurExpansion
    verdict: str
    witness: Witness | None
    checks: dict = field(hash=False)
    version: str = __version__
    config_hash: str = ""
    timestamp: str | None = None

    @property
    def skew(self) -> bool:
        return isinstance(self.subject[0], SkewShape)

    def to_dict(self) -> dict:
        out = {
            "subject": [_shape_text(s) for s in self.subject],
            "star_image": [_shape_text(s) for s in self.star_image],
            "difference": {format_partition(k): c for k, c in self.difference.items()},
            "degree": self.difference.degree,
            "verdict": self.verdict,
            "witness": None if self.witness is None else {
                "shape": format_partition(self.witness.shape),
                "left": self.witness.left,
                "right": self.witness.right,
            },
            "checks": dict(self.checks),
            "version": self.version,
            "config_hash": self.config_hash,
        }
        if self.timestamp is not None:
            out["timestamp"] = self.timestamp
        return out

    @classmethod
    def from_dict(cls, d: dict) -> ReportRecord:
        skew = "/" in d["subject"][0]
        w = d["witness"]
        return cls(
            subject=tuple(_shape_parse(s, skew) for s in d["subject"]),
            star_image=tuple(_shape_parse(s, skew) for s in d["star_image"]),
            difference=SchurExpansion({parse_partition(k): c for k, c in d["difference"].items()}, d["degree"]),
            verdict=d["verdict"],
            witness=None if w is None else Witness(parse_partition(w["shape"]), w["left"], w["right"]),
            checks=dict(d["checks"]),
            version=d["version"],
            config_hash=d["config_hash"],
            timestamp=d.get("timestamp"),
        )


def from_report(r: VerificationReport, config: str = "", timestamp: str | None = None) -> ReportRecord:
    return ReportRecord(r.subject, r.star_image, r.difference, r.verdict, r.witness, dict(r.checks),
                        __version__, config, timestamp)


def render(record: ReportRecord) -> str:
    """One JSON line, without the trailing newline."""
    return json.dumps(record.to_dict(), separators=(",", ":"))


def parse(line: str) -> ReportRecord:
    return ReportRecord.from_dict(json.loads(line))


def render_expansion(e: SchurExpansion) -> list[str]:
    """Lines ``s(2,2): 1``, largest partition first; the zero function renders as ``0``."""
    if not e:
        return ["0"]
    return [f"s({format_partition(k)}): {c}" for k, c in e.items()]


def show_pair(pair) -> str:
    return ",".join(show(x) for x in pair)


def read_records(path) -> list[ReportRecord]:
    with open(path) as fh:
        return [parse(line) for line in fh if line.strip()]


"""Verification certificates and their text/JSON serializations.

Every leaf value is stored as a string, so integers of any size survive a
JSON round trip and two certificates compare equal field by field.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

from .errors import IoError

SCHEMA_VERSION = "1"
PASS, FAIL = "PASS", "FAIL"


@dataclass(frozen=True)
class Verdict:
    name: str
    status: str
    reason: str
    # "cite:<claim>" for a computed check of a stated claim, "assumption:<what>" otherwise
    basis: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class Certificate:
    tool_version: str
    inputs: dict
    checks: list = field(default_factory=list)
    sw_tables: dict = field(default_factory=dict)
    sw_pairs: list = field(default_factory=list)
    invariants: dict = field(default_factory=dict)
    assumptions: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    @property
    def overall(self) -> str:
        return PASS if all(v.passed for v in self.checks) else FAIL

    @property
    def passed(self) -> bool:
        return self.overall == PASS

    def failures(self) -> list:
        return [v for v in self.checks if not v.passed]

    def to_json_obj(self) -> dict:
        obj = asdict(self)
        obj["overall"] = self.overall
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Certificate":
        if obj.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {obj.get('schema_version')!r}")
        cert = cls(
            tool_version=obj["tool_version"],
            inputs=dict(obj["inputs"]),
            checks=[Verdict(**v) for v in obj["checks"]],
            sw_tables={k: [list(row) for row in rows] for k, rows in obj["sw_tables"].items()},
            sw_pairs=[dict(p) for p in obj["sw_pairs"]],
            invariants={k: dict(v) for k, v in obj["invariants"].items()},
            assumptions=list(obj["assumptions"]),
            notes=list(obj["notes"]),
            schema_version=obj["schema_version"],
        )
        if obj.get("overall") not in (None, cert.overall):
            raise ValueError("stored overall verdict disagrees with the checks")
        return cert

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_json_obj(json.loads(text))

    def to_text(self) -> str:
        lines = [f"exotica certificate schema={self.schema_version} version={self.tool_version}"]
        for k in sorted(self.inputs):
            lines.append(f"input {k}={self.inputs[k]}")
        width = max((len(v.name) for v in self.checks), default=0)
        for v in self.checks:
            lines.append(f"{v.status}  {v.name.ljust(width)}  [{v.reason}] ({v.basis}) {v.detail}".rstrip())
        for label in sorted(self.invariants):
            row = self.invariants[label]
            cells = " ".join(f"{k}={row[k]}" for k in sorted(row))
            lines.append(f"invariants {label}: {cells}")
        for m in sorted(self.sw_tables, key=int):
            table = " ".join(f"{g}:{c}" for g, c in self.sw_tables[m])
            lines.append(f"sw m={m}: {table}")
        for a in self.assumptions:
            lines.append(f"assumption {a}")
        for n in self.notes:
            lines.append(f"note {n}")
        lines.append(f"overall {self.overall}")
        return "\n".join(lines) + "\n"


def emit(cert: Certificate, fmt: str = "text", path: Optional[str] = None, stream=None) -> int:
    """Serialize ``cert``; write to ``path`` if given, else to ``stream``. Returns bytes written."""
    if fmt == "json":
        payload = cert.to_json()
    elif fmt == "text":
        payload = cert.to_text()
    else:
        raise ValueError(f"unknown format {fmt!r}")
    data = payload.encode("utf-8")
    if path is not None:
        try:
            with open(path, "wb") as fh:
                fh.write(data)
        except OSError as exc:
            raise IoError(f"cannot write certificate to {path}: {exc}") from exc
    elif stream is not None:
        stream.write(payload)
    return len(data)

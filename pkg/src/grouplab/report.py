"""Check results and their JSON/CSV serialisation."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

STATUSES = ("pass", "fail", "marginal", "skipped", "info")
SLACK = 1e-9
REPORT_VERSION = "1"


@dataclass
class CheckReport:
    group: str
    check: str
    status: str
    witness: object = None
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing check must carry a witness")
        self.witness = jsonable(self.witness)

    @property
    def failed(self) -> bool:
        return self.status == "fail"


def jsonable(obj):
    """Convert numpy scalars/arrays and tuples into plain JSON types."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        seq = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in seq]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    return obj


def compare_le(lhs: float, rhs: float, slack: float = SLACK) -> str:
    """``pass`` if ``lhs <= rhs``, ``marginal`` within the slack, else ``fail``."""
    if lhs <= rhs:
        return "pass"
    if lhs <= rhs + slack * max(1.0, abs(rhs)):
        return "marginal"
    return "fail"


def worst(statuses) -> str:
    """Most severe status in ``statuses`` (``pass`` for an empty list)."""
    present = set(statuses)
    for s in ("fail", "marginal", "pass", "info", "skipped"):
        if s in present:
            return s
    return "pass"


def to_json(reports, meta: dict) -> str:
    doc = {"meta": jsonable(meta), "results": [asdict(r) for r in reports]}
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["group", "check", "status", "elapsed_ms", "witness"])
    for r in reports:
        w.writerow([r.group, r.check, r.status, f"{1000 * r.elapsed:.3f}",
                    "" if r.witness is None else json.dumps(r.witness, sort_keys=True)])
    return buf.getvalue()


def emit_report(reports, fmt: str = "json", path=None, meta: dict | None = None) -> str:
    """Serialise reports; write to ``path`` when given and return the text."""
    if fmt == "json":
        text = to_json(reports, meta or {})
    elif fmt == "csv":
        text = to_csv(reports)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        Path(path).write_text(text)
    return text


def load_json(text: str) -> tuple[dict, list[CheckReport]]:
    doc = json.loads(text)
    return doc["meta"], [CheckReport(**r) for r in doc["results"]]


@dataclass
class Summary:
    counts: dict = field(default_factory=dict)

    @classmethod
    def of(cls, reports) -> "Summary":
        counts = {s: 0 for s in STATUSES}
        for r in reports:
            counts[r.status] += 1
        return cls(counts)

"""JSON results table keyed by (pattern, n, p)."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path

from . import __version__
from .search import SearchResult

CSV_COLUMNS = ("pattern", "n", "p", "value", "exhaustive", "witness_count", "first_witness_g6")


def record_from_result(r: SearchResult) -> dict:
    return {
        "pattern": r.pattern,
        "n": r.n,
        "p": r.p,
        "value": str(r.value),
        "witnesses": [w.graph6 for w in r.witnesses],
        "exhaustive": bool(r.exhaustive),
        "enumerated": int(r.enumerated_count),
        "tool_version": __version__,
    }


def validate_record(rec: dict) -> dict:
    required = {
        "pattern": str,
        "n": int,
        "p": int,
        "value": str,
        "witnesses": list,
        "exhaustive": bool,
        "enumerated": int,
        "tool_version": str,
    }
    for key, typ in required.items():
        if key not in rec:
            raise ValueError(f"record missing field {key!r}")
        if not isinstance(rec[key], typ) or (typ is int and isinstance(rec[key], bool)):
            raise ValueError(f"record field {key!r} should be {typ.__name__}")
    int(rec["value"])
    if not all(isinstance(w, str) for w in rec["witnesses"]):
        raise ValueError("witnesses must be graph6 strings")
    return rec


def _info_rank(rec: dict):
    return (rec["exhaustive"], int(rec["value"]), len(rec["witnesses"]), rec["enumerated"])


def merge_records(old: dict | None, new: dict) -> dict:
    """Keep whichever record carries more information; exhaustive wins outright."""
    if old is None:
        return new
    return new if _info_rank(new) > _info_rank(old) else old


class ResultsStore:
    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else None
        self.records: dict[tuple[str, int, int], dict] = {}
        if self.path is not None and self.path.exists():
            self._absorb(self._read(self.path))

    @staticmethod
    def _read(path: Path) -> list[dict]:
        text = path.read_text()
        data = json.loads(text) if text.strip() else []
        if not isinstance(data, list):
            raise ValueError(f"{path}: results store must be a JSON list")
        return [validate_record(r) for r in data]

    def _absorb(self, recs):
        for rec in recs:
            key = (rec["pattern"], rec["n"], rec["p"])
            self.records[key] = merge_records(self.records.get(key), rec)

    def add(self, result: SearchResult | dict) -> dict:
        rec = result if isinstance(result, dict) else record_from_result(result)
        validate_record(rec)
        self._absorb([rec])
        return self.records[(rec["pattern"], rec["n"], rec["p"])]

    def get(self, pattern: str, n: int, p: int) -> dict | None:
        return self.records.get((pattern, n, p))

    def sorted_records(self) -> list[dict]:
        return [self.records[k] for k in sorted(self.records)]

    def save(self, path: str | os.PathLike | None = None):
        target = Path(path) if path is not None else self.path
        if target is None:
            raise ValueError("no path to save to")
        if target.exists():
            self._absorb(self._read(target))
        target.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=target.name, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(self.sorted_records(), fh, indent=1, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, target)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for rec in self.sorted_records():
            w.writerow(
                [
                    rec["pattern"],
                    rec["n"],
                    rec["p"],
                    rec["value"],
                    "true" if rec["exhaustive"] else "false",
                    len(rec["witnesses"]),
                    rec["witnesses"][0] if rec["witnesses"] else "",
                ]
            )
        return buf.getvalue()

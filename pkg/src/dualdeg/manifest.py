"""Property ledgers and JSON run manifests."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .rational import fmt

CERTIFIED = "CERTIFIED_EXACT"
REPORTED = "REPORTED"
FAILED = "FAILED"

_RELATIONS = {
    "==": lambda a, b: a == b,
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "<": lambda a, b: a < b,
    ">": lambda a, b: a > b,
}


@dataclass
class PropertyRecord:
    name: str
    status: str
    holds: bool
    lhs: Optional[Fraction] = None
    relation: Optional[str] = None
    rhs: Optional[Fraction] = None
    note: str = ""

    def to_json(self) -> dict:
        out: Dict[str, Any] = {"name": self.name, "status": self.status, "holds": self.holds}
        if self.relation is not None:
            out["lhs"] = fmt(self.lhs)
            out["relation"] = self.relation
            out["rhs"] = fmt(self.rhs)
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class PropertyLedger:
    """Every property a run asserts or reports, each recorded exactly once.

    ``assert_*`` records are CERTIFIED_EXACT or FAILED. ``report`` records
    inequalities that are only expected asymptotically: they are
    CERTIFIED_EXACT when they hold and REPORTED (a gap, not a failure) when
    they do not.
    """

    records: List[PropertyRecord] = field(default_factory=list)

    def _add(self, rec: PropertyRecord) -> PropertyRecord:
        if any(r.name == rec.name for r in self.records):
            raise ValueError(f"property {rec.name!r} recorded twice")
        self.records.append(rec)
        return rec

    def assert_true(self, name: str, ok: bool, note: str = "") -> bool:
        self._add(PropertyRecord(name, CERTIFIED if ok else FAILED, bool(ok), note=note))
        return bool(ok)

    def assert_rel(self, name: str, lhs, relation: str, rhs, note: str = "") -> bool:
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        ok = _RELATIONS[relation](lhs, rhs)
        self._add(PropertyRecord(name, CERTIFIED if ok else FAILED, ok, lhs, relation, rhs, note))
        return ok

    def report(self, name: str, lhs, relation: str, rhs, note: str = "") -> bool:
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        ok = _RELATIONS[relation](lhs, rhs)
        self._add(PropertyRecord(name, CERTIFIED if ok else REPORTED, ok, lhs, relation, rhs, note))
        return ok

    def __getitem__(self, name: str) -> PropertyRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(r.name == name for r in self.records)

    def extend(self, other: "PropertyLedger", prefix: str = "") -> None:
        for r in other.records:
            self._add(PropertyRecord(prefix + r.name, r.status, r.holds, r.lhs, r.relation, r.rhs, r.note))

    @property
    def all_certified(self) -> bool:
        return all(r.status == CERTIFIED for r in self.records)

    @property
    def any_failed(self) -> bool:
        return any(r.status == FAILED for r in self.records)

    def exit_code(self) -> int:
        if self.any_failed:
            return 1
        return 0 if self.all_certified else 2

    def to_json(self) -> list:
        return [r.to_json() for r in self.records]


def file_digest(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def write_json_atomic(path: str, payload: Any) -> None:
    """Write JSON through a temp file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", suffix=".json", dir=directory)
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def build_manifest(command: str, params: Dict[str, Any], ledger: PropertyLedger, inputs: Dict[str, str], wall_time: float, results: Optional[dict] = None) -> dict:
    return {
        "command": command,
        "parameters": params,
        "inputs": inputs,
        "properties": ledger.to_json(),
        "results": results or {},
        "exit_code": ledger.exit_code(),
        "wall_time_s": round(wall_time, 3),
    }

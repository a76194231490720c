"""Versioned report envelope and its canonical JSON / CSV encodings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

SCHEMA_VERSION = 1


class FormatError(ValueError):
    pass


def canonical_json(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n").encode()


@dataclass
class Report:
    command: str
    field: dict
    payload: dict
    exit_status: int
    timing: dict | None = None
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "field": self.field,
            "payload": self.payload,
            "timing": self.timing,
            "exit_status": self.exit_status,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise FormatError(f"unsupported schema_version {d.get('schema_version')!r}")
        return cls(d["command"], d["field"], d["payload"], d["exit_status"], d["timing"],
                   d["schema_version"])

    @classmethod
    def parse(cls, data: bytes | str) -> "Report":
        return cls.from_dict(json.loads(data))


CSV_COLUMNS = ("r", "t", "i", "j", "a_enc", "planar")


def search_rows(payload: dict):
    r = payload["r"]
    for f in payload["findings"]:
        coeffs = f["planar_coefficients"]
        if coeffs is None:
            raise FormatError("coefficients were not expanded for this field size")
        i = "" if f["i"] is None else f["i"]
        j = "" if f["j"] is None else f["j"]
        for a in coeffs:
            yield (r, f["t"], i, j, a, 1)


def serialize(report: Report, fmt: str = "json") -> bytes:
    if fmt == "json":
        return canonical_json(report.to_dict())
    if fmt == "csv":
        payload = report.payload
        if report.command != "search" or "findings" not in payload:
            raise FormatError("csv output is only available for search results")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerows(search_rows(payload))
        return buf.getvalue().encode()
    raise FormatError(f"unknown format {fmt!r}")

"""Exhaustive searches for planar monomials over GF(2^r).

``search_quadratic`` covers every exponent 2^i + 2^j; ``search_all_degrees``
covers every exponent in [2, q-1].  Both split the work into independent
units (exponent pairs or exponents), can fan out over worker processes, and
can checkpoint completed units to a sidecar file so an interrupted run picks
up where it stopped.  Output never depends on the worker count.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .gf2r import UsageError, build_field
from .planarity import (QuadraticImage, coset_degree, coset_members, difference_table,
                        first_failing_map, linearized_bijective, two_bit_split)
from .report import Report, canonical_json, serialize

QUADRATIC_CAP = 16
QUADRATIC_LARGE_CAP = 24
ALL_DEGREES_CAP = 12
ALL_DEGREES_LONG_CAP = 14
EXPAND_LIMIT = 1 << 16


class ProgressError(OSError):
    """Unreadable, corrupt or mismatched progress file."""


@dataclass
class SearchResult:
    r: int
    mode: str
    field: dict
    findings: list[dict]
    complete: bool = True
    elapsed: float = field(default=0.0, compare=False)
    computed: int = field(default=0, compare=False)  # units evaluated in this run, not serialized

    @property
    def totals(self) -> dict:
        return {
            "planar_exponents": len({f["t"] for f in self.findings}),
            "planar_pairs": sum(f["count"] for f in self.findings),
        }

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "mode": self.mode,
            "field": self.field,
            "findings": self.findings,
            "totals": self.totals,
            "complete": self.complete,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SearchResult":
        return cls(d["r"], d["mode"], d["field"], d["findings"], d["complete"])

    def planar_set(self) -> set[tuple[int, int]]:
        return {(f["t"], a) for f in self.findings for a in f["planar_coefficients"]}


def _finding(ctx, t: int, g: int, planar_cosets: list[int]) -> dict:
    """Record for exponent t whose planar coefficients are the cosets dlog(a) = k mod g."""
    pair = two_bit_split(t)
    if t & (t - 1) == 0:
        i, j = t.bit_length() - 1, None
    elif pair:
        i, j = pair
    else:
        i = j = None
    count = len(planar_cosets) * (ctx.order // g)
    coeffs = None
    if ctx.order <= EXPAND_LIMIT:
        mask = np.isin(ctx.vlog(ctx.nonzero()) % g, planar_cosets)
        coeffs = (np.flatnonzero(mask) + 1).tolist()
    return {
        "t": t,
        "i": i,
        "j": j,
        "count": count,
        "planar_coefficients": coeffs,
        "coset": {"g": g, "indices": sorted(planar_cosets)},
    }


# --- per-unit workers (top level so they pickle) ----------------------------

def quadratic_unit(r: int, i: int, j: int) -> dict | None:
    ctx = build_field(r)
    img = QuadraticImage(ctx, i, j)
    cosets = img.planar_cosets()
    return _finding(ctx, img.t, img.g, cosets) if cosets else None


def exponent_unit(r: int, t: int) -> dict | None:
    """Planar cosets for a*c^t, deciding one representative a = gen^k per coset."""
    ctx = build_field(r)
    g = coset_degree(t, r)
    nbits = bin(t).count("1")
    planar = []
    if nbits == 1:
        planar = list(range(g))
    elif nbits == 2:
        i, j = two_bit_split(t)
        for k in range(g):
            S = coset_members(ctx, ctx.pow(ctx.gen, -k), g)
            if all(linearized_bijective(i, j, s, ctx)[0] for s in S.tolist()):
                planar.append(k)
    else:
        D = difference_table(ctx, t)
        for k in range(g):
            S = coset_members(ctx, ctx.pow(ctx.gen, -k), g)
            if first_failing_map(ctx, D, S) is None:
                planar.append(k)
    return _finding(ctx, t, g, planar) if planar else None


def _run(args):
    mode, r, unit = args
    if mode == "quadratic":
        return unit, quadratic_unit(r, *unit)
    return unit, exponent_unit(r, unit)


# --- progress sidecar -------------------------------------------------------

def progress_path(out: str | os.PathLike) -> Path:
    return Path(str(out) + ".progress.json")


def _checksum(body: dict) -> str:
    return hashlib.sha256(canonical_json(body)).hexdigest()


def write_progress(path: Path, r: int, mode: str, modulus: int, done: dict) -> None:
    keys = sorted(done)
    body = {
        "r": r,
        "mode": mode,
        "modulus": modulus,
        "completed": [list(k) if isinstance(k, tuple) else k for k in keys],
        "findings": [done[k] for k in keys if done[k] is not None],
    }
    body["checksum"] = _checksum(body)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(canonical_json(body))
    os.replace(tmp, path)


def resume(path: str | os.PathLike, r: int | None = None, mode: str | None = None,
           modulus: int | None = None) -> dict:
    """Load completed units from a progress file as {unit: finding or None}.

    Raises :class:`ProgressError` if the file is corrupt or was written for a
    different (r, mode, modulus).
    """
    path = Path(path)
    try:
        body = json.loads(path.read_bytes())
    except (OSError, ValueError) as exc:
        raise ProgressError(f"cannot read progress file {path}: {exc}") from exc
    if not isinstance(body, dict) or "checksum" not in body:
        raise ProgressError(f"progress file {path} has no checksum")
    check = body.pop("checksum")
    if _checksum(body) != check:
        raise ProgressError(f"progress file {path} fails its checksum")
    for key, want in (("r", r), ("mode", mode), ("modulus", modulus)):
        if want is not None and body.get(key) != want:
            raise ProgressError(
                f"progress file {path} is for {key}={body.get(key)!r}, this run has {key}={want!r}")
    done: dict = {}
    by_t = {}
    for f in body["findings"]:
        by_t[(f["i"], f["j"]) if body["mode"] == "quadratic" else f["t"]] = f
    for u in body["completed"]:
        u = tuple(u) if isinstance(u, list) else u
        done[u] = by_t.get(u)
    return done


# --- driver -----------------------------------------------------------------

def _search(mode: str, r: int, units: list, *, jobs: int = 1, progress=None,
            resume_from: bool = False, on_unit=None) -> SearchResult:
    start = time.perf_counter()
    ctx = build_field(r)
    done: dict = {}
    ppath = Path(progress) if progress is not None else None
    if resume_from and ppath is not None and ppath.exists():
        done = resume(ppath, r, mode, ctx.modulus)
    todo = [u for u in units if u not in done]
    computed = 0

    def record(unit, finding):
        nonlocal computed
        done[unit] = finding
        computed += 1
        if ppath is not None:
            write_progress(ppath, r, mode, ctx.modulus, done)
        if on_unit is not None:
            on_unit(unit, finding)

    if jobs <= 1 or len(todo) <= 1:
        for u in todo:
            record(*_run((mode, r, u)))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for unit, finding in pool.map(_run, [(mode, r, u) for u in todo], chunksize=1):
                record(unit, finding)

    findings = [done[u] for u in units if done.get(u) is not None]
    findings.sort(key=lambda f: (f["t"], f["i"] if f["i"] is not None else -1))
    complete = all(u in done for u in units)
    return SearchResult(r, mode, ctx.descriptor(), findings, complete,
                        time.perf_counter() - start, computed)


def search_quadratic(r: int, *, jobs: int = 1, progress=None, resume: bool = False,
                     large_memory: bool = False, on_unit=None) -> SearchResult:
    """All planar a*c^(2^i+2^j), 0 <= i < j < r."""
    cap = QUADRATIC_LARGE_CAP if large_memory else QUADRATIC_CAP
    if not 2 <= r <= cap:
        raise UsageError(f"quadratic search needs 2 <= r <= {cap}, got {r}")
    units = [(i, j) for j in range(r) for i in range(j)]
    units.sort()
    return _search("quadratic", r, units, jobs=jobs, progress=progress,
                   resume_from=resume, on_unit=on_unit)


def search_all_degrees(r: int, *, jobs: int = 1, progress=None, resume: bool = False,
                       long_running: bool = False, on_unit=None) -> SearchResult:
    """All planar a*c^t with 2 <= t <= q-1."""
    cap = ALL_DEGREES_LONG_CAP if long_running else ALL_DEGREES_CAP
    if not 2 <= r <= cap:
        raise UsageError(f"all-degree search needs 2 <= r <= {cap}, got {r}")
    units = list(range(2, 1 << r))
    return _search("all", r, units, jobs=jobs, progress=progress,
                   resume_from=resume, on_unit=on_unit)


def result_report(result: SearchResult, timing: bool = False) -> Report:
    return Report("search", result.field, result.to_dict(), 0 if result.complete else 1,
                  {"elapsed": round(result.elapsed, 6)} if timing else None)


def emit_result(result: SearchResult, path, fmt: str = "json", timing: bool = False) -> None:
    path = Path(path)
    try:
        path.write_bytes(serialize(result_report(result, timing), fmt))
    except OSError as exc:
        raise ProgressError(f"cannot write {path}: {exc}") from exc

"""JSON file formats and report rendering (text, JSON, DOT)."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .chain_complex import ChainComplex, CwComplex
from .conley_index import BettiVector
from .gf2 import Gf2Matrix
from .morse import Interval, IntervalConstraint, MorseComponent, MorseDecomposition, MorseSet
from .solver import GUARANTEED, SolverReport
from .zigzag import ChainMap, ShortExactSequence

__all__ = [
    "FormatError",
    "load_json",
    "complex_to_json",
    "complex_from_json",
    "chain_complex_to_json",
    "chain_complex_from_json",
    "ses_to_json",
    "ses_from_json",
    "scenario_to_json",
    "scenario_from_json",
    "report_to_json",
    "report_to_text",
    "report_to_dot",
]


class FormatError(ValueError):
    """Input document does not follow the expected schema."""


def load_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"{path}: cannot read file ({exc.strerror})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _field(doc: Mapping, key: str, where: str):
    if not isinstance(doc, Mapping):
        raise FormatError(f"{where}: expected an object")
    if key not in doc:
        raise FormatError(f"{where}: missing field {key!r}")
    return doc[key]


def _matrix(rows, nrows: int, ncols: int, where: str) -> Gf2Matrix:
    if not isinstance(rows, list) or len(rows) != nrows:
        raise FormatError(f"{where}: expected {nrows} rows")
    try:
        return Gf2Matrix.from_rows(rows, ncols=ncols)
    except (ValueError, TypeError) as exc:
        raise FormatError(f"{where}: {exc}") from None


def _degree(key, where: str) -> int:
    try:
        return int(key)
    except (TypeError, ValueError):
        raise FormatError(f"{where}: degree key {key!r} is not an integer") from None


def _betti(doc, where: str) -> BettiVector:
    if not isinstance(doc, Mapping):
        raise FormatError(f"{where}: betti must be an object of degree -> dimension")
    try:
        return BettiVector.from_json(doc)
    except (ValueError, TypeError) as exc:
        raise FormatError(f"{where}: {exc}") from None


# CW complexes ---------------------------------------------------------------

def complex_to_json(cw: CwComplex) -> dict:
    return {
        "cells": [list(cells) for cells in cw.cells],
        "incidence": [list(e) for e in cw.incidence],
    }


def complex_from_json(doc) -> CwComplex:
    cells = _field(doc, "cells", "complex")
    incidence = doc.get("incidence", [])
    if not isinstance(cells, list) or not all(isinstance(c, list) for c in cells):
        raise FormatError("complex.cells: expected an array of id arrays, one per dimension")
    known = [set(c) for c in cells]
    entries = []
    for n, entry in enumerate(incidence):
        where = f"complex.incidence[{n}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise FormatError(f"{where}: expected [k, k_cell, k_minus_1_cell, parity]")
        k, hi, lo, parity = entry
        if not isinstance(k, int) or not 1 <= k < len(cells):
            raise FormatError(f"{where}: degree {k!r} out of range")
        if hi not in known[k]:
            raise FormatError(f"{where}: unknown {k}-cell {hi!r}")
        if lo not in known[k - 1]:
            raise FormatError(f"{where}: unknown {k - 1}-cell {lo!r}")
        if parity not in (0, 1):
            raise FormatError(f"{where}: parity must be 0 or 1")
        entries.append((k, hi, lo, parity))
    try:
        return CwComplex(cells=tuple(tuple(c) for c in cells), incidence=tuple(entries))
    except ValueError as exc:
        raise FormatError(f"complex: {exc}") from None


# chain complexes and short exact sequences ---------------------------------

def chain_complex_to_json(c: ChainComplex) -> dict:
    return {
        "dims": list(c.dims),
        "boundaries": {str(k): m.to_rows() for k, m in c.boundaries.items()},
    }


def chain_complex_from_json(doc, where: str = "complex") -> ChainComplex:
    dims = _field(doc, "dims", where)
    if not isinstance(dims, list) or not all(isinstance(d, int) and d >= 0 for d in dims):
        raise FormatError(f"{where}.dims: expected an array of non-negative integers")
    bd = {}
    for key, rows in doc.get("boundaries", {}).items():
        k = _degree(key, f"{where}.boundaries")
        if not 1 <= k < len(dims):
            raise FormatError(f"{where}.boundaries[{key}]: degree out of range")
        bd[k] = _matrix(rows, dims[k - 1], dims[k], f"{where}.boundaries[{key}]")
    cc = ChainComplex(tuple(dims), bd)
    bad = cc.check()
    if bad is not None:
        raise FormatError(f"{where}: boundary of boundary is nonzero in degree {bad[0]}")
    return cc


def _chain_map_to_json(f: ChainMap) -> dict:
    return {str(k): m.to_rows() for k, m in f.maps.items()}


def _chain_map_from_json(doc, source: ChainComplex, target: ChainComplex, where: str) -> ChainMap:
    if not isinstance(doc, Mapping):
        raise FormatError(f"{where}: expected an object of degree -> rows")
    maps = {}
    for key, rows in doc.items():
        k = _degree(key, where)
        maps[k] = _matrix(rows, target.dim(k), source.dim(k), f"{where}[{key}]")
    try:
        return ChainMap(source, target, maps)
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None


def ses_to_json(s: ShortExactSequence) -> dict:
    return {
        "a": chain_complex_to_json(s.a),
        "b": chain_complex_to_json(s.b),
        "c": chain_complex_to_json(s.c),
        "inc": _chain_map_to_json(s.inc),
        "proj": _chain_map_to_json(s.proj),
    }


def ses_from_json(doc) -> ShortExactSequence:
    a = chain_complex_from_json(_field(doc, "a", "ses"), "ses.a")
    b = chain_complex_from_json(_field(doc, "b", "ses"), "ses.b")
    c = chain_complex_from_json(_field(doc, "c", "ses"), "ses.c")
    inc = _chain_map_from_json(_field(doc, "inc", "ses"), a, b, "ses.inc")
    proj = _chain_map_from_json(_field(doc, "proj", "ses"), b, c, "ses.proj")
    return ShortExactSequence(a, b, c, inc, proj)


# scenarios -------------------------------------------------------------------

def scenario_to_json(d: MorseDecomposition, constraints=()) -> dict:
    return {
        "morse_sets": [
            {
                "id": s.id,
                "level": s.level,
                "components": [{"id": c.id, "betti": c.betti.to_json()} for c in s.components],
            }
            for s in d.sets
        ],
        "symmetry_pairs": [[list(p), list(q)] for p, q in d.symmetry_pairs],
        "interval_constraints": [
            {
                "interval": [d.sets[c.interval.lo].id, d.sets[c.interval.hi].id],
                "betti": c.betti.to_json(),
            }
            for c in constraints
        ],
    }


def scenario_from_json(doc) -> tuple[MorseDecomposition, list[IntervalConstraint]]:
    raw_sets = _field(doc, "morse_sets", "scenario")
    if not isinstance(raw_sets, list):
        raise FormatError("scenario.morse_sets: expected an array")
    sets = []
    for i, raw in enumerate(raw_sets):
        where = f"scenario.morse_sets[{i}]"
        sid = _field(raw, "id", where)
        level = _field(raw, "level", where)
        if not isinstance(level, int):
            raise FormatError(f"{where}.level: expected an integer")
        comps = []
        for j, rc in enumerate(_field(raw, "components", where)):
            cw = f"{where}.components[{j}]"
            comps.append(MorseComponent(str(_field(rc, "id", cw)), _betti(_field(rc, "betti", cw), cw)))
        sets.append(MorseSet(str(sid), level, comps))
    pairs = []
    for i, pair in enumerate(doc.get("symmetry_pairs", [])):
        if not (isinstance(pair, list) and len(pair) == 2
                and all(isinstance(r, list) and len(r) == 2 for r in pair)):
            raise FormatError(f"scenario.symmetry_pairs[{i}]: expected [[set, comp], [set, comp]]")
        pairs.append((tuple(pair[0]), tuple(pair[1])))
    d = MorseDecomposition(sets, pairs)
    index = {s.id: i for i, s in enumerate(sets)}
    constraints = []
    for i, raw in enumerate(doc.get("interval_constraints", [])):
        where = f"scenario.interval_constraints[{i}]"
        ends = _field(raw, "interval", where)
        if not isinstance(ends, list) or len(ends) != 2:
            raise FormatError(f"{where}.interval: expected [lo_set_id, hi_set_id]")
        for end in ends:
            if end not in index:
                raise FormatError(f"{where}.interval: unknown Morse set {end!r}")
        lo, hi = index[ends[0]], index[ends[1]]
        if lo > hi:
            raise FormatError(f"{where}.interval: {ends[0]!r} lies above {ends[1]!r}")
        constraints.append(IntervalConstraint(Interval(lo, hi), _betti(_field(raw, "betti", where), where)))
    return d, constraints


# reports ---------------------------------------------------------------------

_STATUS_TEXT = {
    "forced_nonzero": "FORCED≠0",
    "forced_zero": "FORCED=0",
    "undetermined": "UNDETERMINED",
}


def report_to_json(report: SolverReport) -> dict:
    return {
        "admissible_count": report.admissible_count,
        "inconsistent": report.inconsistent,
        "symmetric": report.symmetric,
        "free_unknowns": report.n_free,
        "variables": [
            {
                "name": v.name,
                "source": v.source_label,
                "target": v.target_label,
                "degree": v.degree,
                "shape": list(v.shape),
                "status": report.status(v),
            }
            for v in report.variables
        ],
        "heteroclinic_edges": [
            {"source": e.source_label, "target": e.target_label, "status": e.status}
            for e in report.heteroclinic_edges
        ],
        "admissible": [m.assembled.to_rows() for m in report.admissible],
    }


def report_to_text(report: SolverReport, list_admissible: bool = False) -> str:
    lines = [f"admissible: {report.admissible_count}"]
    if report.inconsistent:
        lines[0] += " (no connection matrix satisfies the constraints)"
    lines.append(f"free unknowns: {report.n_free} (symmetry {'on' if report.symmetric else 'off'})")
    lines.append("variables:")
    width = max((len(v.name) for v in report.variables), default=0)
    for v in report.variables:
        lines.append(f"  {v.name:<{width}}  {v.describe():<24}  {_STATUS_TEXT[report.status(v)]}")
    lines.append("edges:")
    if not report.heteroclinic_edges:
        lines.append("  (none)")
    for e in report.heteroclinic_edges:
        lines.append(f"  {e.source_label} → {e.target_label}  {e.status}")
    if list_admissible:
        shown = len(report.admissible)
        lines.append(f"admissible matrices ({shown} of {report.admissible_count}):")
        for n, m in enumerate(report.admissible):
            lines.append(f"  #{n}")
            for row in m.assembled.to_rows():
                lines.append("    " + " ".join(map(str, row)))
    return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def report_to_dot(report: SolverReport) -> str:
    d = report.decomposition
    lines = ["digraph connections {", "  rankdir=TB;"]
    for si in range(len(d.sets) - 1, -1, -1):
        for ci in range(len(d.sets[si].components)):
            lines.append(f"  {_dot_id(d.component_label(si, ci))};")
    for e in report.heteroclinic_edges:
        style = "solid" if e.status == GUARANTEED else "dashed"
        lines.append(f"  {_dot_id(e.source_label)} -> {_dot_id(e.target_label)} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"

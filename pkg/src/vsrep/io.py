"""JSON formats for groups, representations and diagnosis reports."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

from .field import field_from_spec
from .perm import PermGroup
from .rep import Representation

__all__ = [
    "ParseError",
    "load_json",
    "parse_perm_group",
    "parse_representation",
    "read_input",
    "rep_to_json",
    "group_to_json",
    "diagnosis_report",
    "dumps",
    "file_digest",
]


class ParseError(ValueError):
    """Input that does not follow the documented file formats."""


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def file_digest(path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


def parse_perm_group(data: dict) -> PermGroup:
    try:
        return PermGroup.from_images(int(data["degree"]), data["generators"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed permutation group: {exc}") from exc


def parse_representation(data: dict) -> Representation:
    try:
        F = field_from_spec(data["field"])
        n = int(data["dim"])
        if n < 1:
            raise ValueError("dimension must be >= 1")
        gens = []
        for g in data["generators"]:
            m = np.array(g, dtype=np.int64)
            if m.shape != (n, n):
                raise ValueError(f"generator of shape {m.shape}, expected ({n}, {n})")
            if m.min(initial=0) < 0 or m.max(initial=0) >= F.q:
                raise ValueError("matrix entries must be field codes in [0, q)")
            gens.append(m.astype(np.uint8))
        labels = data.get("labels")
        return Representation(F, n, tuple(gens), tuple(labels) if labels else None)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed representation: {exc}") from exc


def read_input(path) -> PermGroup | Representation:
    """A permutation group (has ``degree``) or a representation (has ``field``)."""
    data = load_json(path)
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    if "field" in data:
        return parse_representation(data)
    if "degree" in data:
        return parse_perm_group(data)
    raise ParseError("expected a representation ('field') or a permutation group ('degree')")


def rep_to_json(rep: Representation) -> dict:
    return rep.to_json()


def group_to_json(g: PermGroup) -> dict:
    return g.to_json()


def _verdict_json(v) -> dict:
    from .normalg import CLAUSE_LABELS

    return {"verdict": v.tag, "clause": CLAUSE_LABELS[v.tag], "witness": v.payload()}


def diagnosis_report(diagnosis, rep: Representation, source: str) -> dict:
    F = rep.field
    out = {
        "input": source,
        "field": {"p": F.p, "e": F.e, "modulus": list(F.modulus)},
        "dim": rep.dim,
        "mode": diagnosis.mode,
        "seed": diagnosis.seed,
        "closures_checked": diagnosis.closures_checked,
        "wall_time": round(diagnosis.wall_time, 6),
    }
    out.update(_verdict_json(diagnosis.verdict))
    if diagnosis.mode == "randomized" and diagnosis.very_simple:
        out["probabilistic"] = True
    if diagnosis.alternatives:
        out["alternatives"] = [_verdict_json(a) for a in diagnosis.alternatives]
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"

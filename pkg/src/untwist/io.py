"""JSON reading and writing, and the bundled knot catalog."""

import json
from dataclasses import dataclass
from importlib import resources
from typing import List, Tuple

from .errors import MalformedJson, SchemaViolation, UntwistError
from .kirby import KirbyMove, SurgeryPresentation, move_from_json
from .seifert import SeifertMatrix, validate_seifert


def dumps(obj) -> str:
    """Deterministic JSON: insertion key order, fixed indentation."""
    return json.dumps(obj, indent=2, ensure_ascii=False)


def load_json(data) -> object:
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedJson(f"not UTF-8: {exc}") from exc
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedJson(f"line {exc.lineno} column {exc.colno}: {exc.msg}", exc.lineno, exc.colno) from exc


def _int_matrix(obj, where: str):
    if not isinstance(obj, list):
        raise SchemaViolation(f"{where} must be an array of arrays", where)
    for i, row in enumerate(obj):
        if not isinstance(row, list):
            raise SchemaViolation(f"{where}[{i}] must be an array", f"{where}[{i}]")
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int):
                raise SchemaViolation(f"{where}[{i}][{j}] must be an integer, got {x!r}", f"{where}[{i}][{j}]")
    return obj


def seifert_from_obj(obj) -> SeifertMatrix:
    if not isinstance(obj, dict):
        raise SchemaViolation("top level must be an object", "")
    if "matrix" not in obj:
        raise SchemaViolation("missing field 'matrix'", "matrix")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise SchemaViolation("'name' must be a string", "name")
    rows = _int_matrix(obj["matrix"], "matrix")
    try:
        return validate_seifert(rows, name)
    except UntwistError as exc:
        raise SchemaViolation(f"matrix: {exc}", "matrix") from exc


def parse_seifert_file(data) -> SeifertMatrix:
    """Parse ``{"name": ..., "matrix": [[...], ...]}`` from bytes or text.

    Validation failures (odd dimension, det(V - V^T) != 1) are raised as
    SchemaViolation with the original error as ``__cause__``.
    """
    return seifert_from_obj(load_json(data))


def seifert_to_obj(v: SeifertMatrix) -> dict:
    out = {}
    if v.name is not None:
        out["name"] = v.name
    out["matrix"] = v.to_lists()
    return out


def parse_move_script(data) -> Tuple[SurgeryPresentation, List[KirbyMove]]:
    """``{"initial": {"matrix", "n", "k"}, "moves": [{"op": ...}, ...]}``; indices are 0-based."""
    obj = load_json(data)
    if not isinstance(obj, dict) or "initial" not in obj:
        raise SchemaViolation("missing field 'initial'", "initial")
    init = obj["initial"]
    if not isinstance(init, dict):
        raise SchemaViolation("'initial' must be an object", "initial")
    rows = _int_matrix(init.get("matrix"), "initial.matrix")
    n = init.get("n")
    if isinstance(n, bool) or not isinstance(n, int):
        raise SchemaViolation("'initial.n' must be an integer", "initial.n")
    k = init.get("k", len(rows) - n)
    try:
        p = SurgeryPresentation.from_rows(rows, n, k, init.get("labels", ()))
    except (UntwistError, TypeError) as exc:
        raise SchemaViolation(f"initial: {exc}", "initial") from exc
    moves = []
    raw = obj.get("moves", [])
    if not isinstance(raw, list):
        raise SchemaViolation("'moves' must be an array", "moves")
    for idx, m in enumerate(raw):
        try:
            moves.append(move_from_json(m))
        except (KeyError, ValueError, TypeError, AttributeError) as exc:
            raise SchemaViolation(f"moves[{idx}]: {exc}", f"moves[{idx}]") from exc
    return p, moves


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matrix: SeifertMatrix
    notes: str = ""


def load_catalog() -> List[CatalogEntry]:
    text = resources.files("untwist").joinpath("data/catalog.json").read_text("utf-8")
    out = []
    for e in load_json(text)["entries"]:
        v = seifert_from_obj({"name": e["name"], "matrix": e["matrix"]})
        out.append(CatalogEntry(e["name"], v, e.get("notes", "")))
    return out


def catalog_entry(name: str) -> CatalogEntry:
    for e in load_catalog():
        if e.name == name:
            return e
    raise KeyError(name)

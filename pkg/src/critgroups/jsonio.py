"""JSON file formats: graphs, structures, and fuzz witnesses.

Files use 1-based vertex indices (edges ``[i, j, multiplicity]``); the
in-memory model is 0-based, converted exactly once here.  Integers whose
magnitude exceeds 2**53 are serialized as decimal strings, so values
survive any JSON reader that parses numbers as IEEE doubles; both plain
numbers and decimal strings are accepted on input.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .graphs import ArithmeticalStructure, Multigraph
from .linalg import IntegerMatrix

SAFE_INT_LIMIT = 1 << 53

_DECIMAL = re.compile(r"-?[0-9]+$")


class FileFormatError(ValueError):
    """The file parsed as JSON but does not match the expected schema."""


def encode_int(x: int):
    """An int as itself, or as a decimal string beyond the 2**53 safe range."""
    return x if -SAFE_INT_LIMIT <= x <= SAFE_INT_LIMIT else str(x)


def decode_int(value) -> int:
    if isinstance(value, bool):
        raise FileFormatError(f"expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _DECIMAL.match(value):
        return int(value)
    raise FileFormatError(f"expected an integer or decimal string, got {value!r}")


def encode_value(value):
    """Recursively apply :func:`encode_int` inside dicts, lists and tuples."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return encode_int(value)
    if isinstance(value, (list, tuple)):
        return [encode_value(x) for x in value]
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if hasattr(value, "value"):  # enums
        return value.value
    raise TypeError(f"cannot serialize {type(value).__name__}")


# ---------------------------------------------------------------------------
# graph files


def graph_to_obj(g: Multigraph) -> dict:
    edges = [[i + 1, j + 1, encode_int(m)] for i, j, m in g.edge_list()]
    return {"n": g.n, "edges": edges}


def graph_from_obj(obj) -> Multigraph:
    if not isinstance(obj, dict):
        raise FileFormatError("graph file must be a JSON object")
    unknown = set(obj) - {"n", "edges"}
    if unknown:
        raise FileFormatError(f"unknown graph file keys: {sorted(unknown)}")
    try:
        n = decode_int(obj["n"])
        raw_edges = obj["edges"]
    except KeyError as exc:
        raise FileFormatError(f"graph file missing key {exc}") from None
    if n < 1:
        raise FileFormatError(f"vertex count must be positive, got {n}")
    if not isinstance(raw_edges, list):
        raise FileFormatError("edges must be a list")
    edges = []
    for entry in raw_edges:
        if not isinstance(entry, list) or len(entry) != 3:
            raise FileFormatError(f"each edge must be [i, j, multiplicity], got {entry!r}")
        i, j, m = (decode_int(x) for x in entry)
        if not (1 <= i <= n and 1 <= j <= n):
            raise FileFormatError(f"edge endpoints out of range 1..{n}: {entry!r}")
        if i == j:
            raise FileFormatError(f"loops are not allowed: {entry!r}")
        if m < 1:
            raise FileFormatError(f"multiplicity must be positive: {entry!r}")
        edges.append((i - 1, j - 1, m))
    return Multigraph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# structure files


def structure_to_obj(s: ArithmeticalStructure) -> dict:
    return {"d": [encode_int(x) for x in s.d], "r": [encode_int(x) for x in s.r]}


def structure_from_obj(obj) -> ArithmeticalStructure:
    if not isinstance(obj, dict):
        raise FileFormatError("structure file must be a JSON object")
    unknown = set(obj) - {"d", "r"}
    if unknown:
        raise FileFormatError(f"unknown structure file keys: {sorted(unknown)}")
    try:
        d_raw, r_raw = obj["d"], obj["r"]
    except KeyError as exc:
        raise FileFormatError(f"structure file missing key {exc}") from None
    if not isinstance(d_raw, list) or not isinstance(r_raw, list):
        raise FileFormatError("d and r must be lists")
    d = tuple(decode_int(x) for x in d_raw)
    r = tuple(decode_int(x) for x in r_raw)
    return ArithmeticalStructure(d, r)


# ---------------------------------------------------------------------------
# matrices (used in command output and witnesses)


def matrix_to_obj(m: IntegerMatrix) -> list[list]:
    return [[encode_int(x) for x in row] for row in m.entries]


def matrix_from_obj(obj) -> IntegerMatrix:
    if (
        not isinstance(obj, list)
        or not obj
        or not all(isinstance(row, list) and row for row in obj)
    ):
        raise FileFormatError("matrix must be a nonempty list of nonempty rows")
    return IntegerMatrix.from_rows([[decode_int(x) for x in row] for row in obj])


# ---------------------------------------------------------------------------
# file helpers


def _load_json(path) -> object:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: not valid JSON ({exc})") from exc


def load_graph(path) -> Multigraph:
    return graph_from_obj(_load_json(path))


def save_graph(path, g: Multigraph) -> None:
    Path(path).write_text(json.dumps(graph_to_obj(g), indent=2) + "\n")


def load_structure(path) -> ArithmeticalStructure:
    return structure_from_obj(_load_json(path))


def save_structure(path, s: ArithmeticalStructure) -> None:
    Path(path).write_text(json.dumps(structure_to_obj(s), indent=2) + "\n")


def write_witness(directory, report, seed: int, case_index: int, ordinal: int) -> Path:
    """Archive one failing report; the filename is deterministic.

    The payload carries the property id, the replay coordinates (seed and
    case index) and the full witness, so the failure can be reproduced
    without rerunning the campaign.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    name = f"witness-{seed}-{case_index:06d}-{ordinal:03d}-{report.property_id.value}.json"
    payload = {
        "property_id": report.property_id.value,
        "status": report.status,
        "degenerate": report.degenerate,
        "seed": seed,
        "case_index": case_index,
        "witness": report.witness,
    }
    path = directory / name
    path.write_text(json.dumps(encode_value(payload), indent=2, sort_keys=True) + "\n")
    return path


def fixture_path(name: str) -> Path:
    """Path of a bundled example file (see the package ``fixtures/`` directory)."""
    from importlib.resources import files

    return Path(str(files("critgroups") / "fixtures" / name))

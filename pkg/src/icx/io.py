"""JSON schemas for graphs, families, complexes and shelling orders.

Serialisation is canonical (vertex order preserved, edges and facets sorted
by ambient order), so parse/serialize round-trips are bit-exact on canonical
files.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complexes import ShellingOrder, SimplicialComplex, make_complex
from .errors import GraphError, SchemaError
from .graph import Graph, build_graph
from .ops import GraphFamily, make_family


def serialize_graph(g: Graph) -> dict:
    idx = g.index
    edges = sorted(([u, v] for u, v in g.edges), key=lambda e: (idx[e[0]], idx[e[1]]))
    return {"vertices": list(g.vertices), "edges": edges}


def parse_graph(data) -> Graph:
    if not isinstance(data, dict):
        raise SchemaError("graph: expected an object with 'vertices' and 'edges'")
    for key in ("vertices", "edges"):
        if key not in data:
            raise SchemaError(f"graph: missing field {key!r}")
    vertices = data["vertices"]
    edges = data["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise SchemaError("graph: 'vertices' must be a list of strings")
    if not isinstance(edges, list):
        raise SchemaError("graph: 'edges' must be a list of pairs")
    pairs = []
    for k, e in enumerate(edges):
        if not isinstance(e, list) or len(e) != 2 or not all(isinstance(x, str) for x in e):
            raise SchemaError(f"graph: 'edges'[{k}] must be a pair of labels")
        pairs.append((e[0], e[1]))
    try:
        return build_graph(vertices, pairs)
    except GraphError as exc:
        raise SchemaError(f"graph: {exc}") from exc


def serialize_family(f: GraphFamily) -> dict:
    assign = {}
    for x, h, root in f.assign:
        entry: dict = {"graph": serialize_graph(h)}
        if root is not None:
            entry["root"] = root
        assign[x] = entry
    return {"base": serialize_graph(f.base), "assign": assign}


def parse_family(data) -> GraphFamily:
    if not isinstance(data, dict) or "base" not in data or "assign" not in data:
        raise SchemaError("family: expected an object with 'base' and 'assign'")
    base = parse_graph(data["base"])
    raw = data["assign"]
    if not isinstance(raw, dict):
        raise SchemaError("family: 'assign' must map base vertices to entries")
    assign: dict[str, tuple[Graph, str | None]] = {}
    for x, entry in raw.items():
        if not isinstance(entry, dict) or "graph" not in entry:
            raise SchemaError(f"family: 'assign'[{x!r}] must be an object with 'graph'")
        root = entry.get("root")
        if root is not None and not isinstance(root, str):
            raise SchemaError(f"family: 'assign'[{x!r}].root must be a label")
        assign[x] = (parse_graph(entry["graph"]), root)
    try:
        return make_family(base, assign)
    except GraphError as exc:
        raise SchemaError(f"family: {exc}") from exc


def serialize_complex(c: SimplicialComplex) -> dict:
    return {
        "ground": list(c.ground),
        "facets": [list(c.sort_face(f)) for f in c.facets],
    }


def parse_complex(data) -> SimplicialComplex:
    if not isinstance(data, dict) or "ground" not in data or "facets" not in data:
        raise SchemaError("complex: expected an object with 'ground' and 'facets'")
    try:
        return make_complex(data["ground"], [tuple(f) for f in data["facets"]])
    except GraphError as exc:
        raise SchemaError(f"complex: {exc}") from exc


def serialize_order(order: ShellingOrder) -> list[int]:
    return list(order.indices)


def parse_order(data) -> ShellingOrder:
    if not isinstance(data, list) or not all(isinstance(k, int) for k in data):
        raise SchemaError("shelling order: expected a list of facet indices")
    return ShellingOrder(tuple(data))


def load_graph(path: str | Path) -> Graph:
    return parse_graph(_load(path))


def save_graph(g: Graph, path: str | Path) -> None:
    _save(serialize_graph(g), path)


def load_family(path: str | Path) -> GraphFamily:
    return parse_family(_load(path))


def save_family(f: GraphFamily, path: str | Path) -> None:
    _save(serialize_family(f), path)


def _load(path: str | Path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from exc


def _save(data, path: str | Path) -> None:
    Path(path).write_text(json.dumps(data, indent=2) + "\n")

"""The six graph operations, producing provenance-bearing vertex labels.

Vertices created by a product are labelled "(x|y)" where x is the originating
base vertex and y the inner vertex; the serialisation is validated to parse
back uniquely, so labels stay injective even when operations are iterated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .graph import Graph, build_graph, disjoint_relabel


def pair_label(x: str, y: str) -> str:
    label = f"({x}|{y})"
    if split_pair(label) != (x, y):
        raise GraphError(f"labels {x!r}, {y!r} do not form an unambiguous pair label")
    return label


def split_pair(label: str) -> tuple[str, str]:
    """Inverse of :func:`pair_label`: split at the separator of depth one."""
    if not (label.startswith("(") and label.endswith(")")):
        raise GraphError(f"not a pair label: {label!r}")
    body = label[1:-1]
    depth = 0
    for k, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "|" and depth == 0:
            return body[:k], body[k + 1:]
    raise GraphError(f"not a pair label: {label!r}")


@dataclass(frozen=True)
class GraphFamily:
    """A base graph plus one (graph, optional root) per base vertex."""

    base: Graph
    assign: tuple[tuple[str, Graph, str | None], ...]

    def member(self, x: str) -> Graph:
        for label, h, _ in self.assign:
            if label == x:
                return h
        raise GraphError(f"no assignment for base vertex {x!r}")

    def root(self, x: str) -> str | None:
        for label, _, r in self.assign:
            if label == x:
                return r
        raise GraphError(f"no assignment for base vertex {x!r}")


def make_family(base: Graph, assign: dict[str, tuple[Graph, str | None]] | dict[str, Graph]) -> GraphFamily:
    """Validate a family: total assignment, non-empty members, roots inside."""
    rows: list[tuple[str, Graph, str | None]] = []
    for x in base.vertices:
        if x not in assign:
            raise GraphError(f"base vertex {x!r} has no assigned graph")
        entry = assign[x]
        h, root = entry if isinstance(entry, tuple) else (entry, None)
        if len(h.vertices) == 0:
            raise GraphError(f"assigned graph for {x!r} is empty")
        if root is not None and not h.has_vertex(root):
            raise GraphError(f"root {root!r} is not a vertex of the graph assigned to {x!r}")
        rows.append((x, h, root))
    extra = set(assign) - set(base.vertices)
    if extra:
        raise GraphError(f"assignment for unknown base vertex {sorted(extra)[0]!r}")
    return GraphFamily(base, tuple(rows))


def uniform_family(base: Graph, h: Graph, root: str | None = None) -> GraphFamily:
    return make_family(base, {x: (h, root) for x in base.vertices})


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union on disjoint vertex sets; colliding labels are tagged L./R. first."""
    if set(g.vertices) & set(h.vertices):
        g = disjoint_relabel(g, "L")
        h = disjoint_relabel(h, "R")
    return build_graph(g.vertices + h.vertices, tuple(g.edges) + tuple(h.edges))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    if set(g.vertices) & set(h.vertices):
        g = disjoint_relabel(g, "L")
        h = disjoint_relabel(h, "R")
    cross = tuple((u, v) for u in g.vertices for v in h.vertices)
    return build_graph(g.vertices + h.vertices, tuple(g.edges) + tuple(h.edges) + cross)


def rooted_product(family: GraphFamily) -> Graph:
    """Glue each assigned graph onto its base vertex at the assigned root."""
    base = family.base
    vertices: list[str] = list(base.vertices)
    edges: list[tuple[str, str]] = list(base.edges)
    for x, h, root in family.assign:
        if root is None:
            raise GraphError(f"rooted product needs a root for base vertex {x!r}")
        rename = {y: x if y == root else pair_label(x, y) for y in h.vertices}
        vertices.extend(rename[y] for y in h.vertices if y != root)
        edges.extend((rename[u], rename[v]) for u, v in h.edges)
    return build_graph(vertices, edges)


def corona(family: GraphFamily) -> Graph:
    """Disjoint union of base and members plus all edges x to V(H_x)."""
    base = family.base
    vertices: list[str] = list(base.vertices)
    edges: list[tuple[str, str]] = list(base.edges)
    for x, h, _ in family.assign:
        rename = {y: pair_label(x, y) for y in h.vertices}
        vertices.extend(rename[y] for y in h.vertices)
        edges.extend((rename[u], rename[v]) for u, v in h.edges)
        edges.extend((x, rename[y]) for y in h.vertices)
    return build_graph(vertices, edges)


def corona_as_rooted(family: GraphFamily) -> Graph:
    """The corona built as a rooted product of apex cones; used as a cross-check."""
    base = family.base
    assign: dict[str, tuple[Graph, str | None]] = {}
    for x, h, _ in family.assign:
        apex = x
        while apex in h.index:
            apex += "'"
        cone = build_graph(
            (apex,) + h.vertices,
            tuple(h.edges) + tuple((apex, y) for y in h.vertices),
        )
        assign[x] = (cone, apex)
    glued = rooted_product(make_family(base, assign))
    # inner vertices came out as (x|y); the apices merged into the base labels,
    # so the result is label-for-label the corona already.
    return glued


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Pairs adjacent when equal in one coordinate and adjacent in the other."""
    vertices = tuple(pair_label(x, y) for x in g.vertices for y in h.vertices)
    edges = []
    for x in g.vertices:
        for u, v in h.edges:
            edges.append((pair_label(x, u), pair_label(x, v)))
    for u, v in g.edges:
        for y in h.vertices:
            edges.append((pair_label(u, y), pair_label(v, y)))
    return build_graph(vertices, edges)


def lexicographic_product(family: GraphFamily) -> Graph:
    """(x,y) ~ (x',y') iff x = x' and y ~ y' inside H_x, or x ~ x' in the base."""
    base = family.base
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for x, h, _ in family.assign:
        vertices.extend(pair_label(x, y) for y in h.vertices)
        edges.extend((pair_label(x, u), pair_label(x, v)) for u, v in h.edges)
    for u, v in base.edges:
        for y in family.member(u).vertices:
            for z in family.member(v).vertices:
                edges.append((pair_label(u, y), pair_label(v, z)))
    return build_graph(vertices, edges)

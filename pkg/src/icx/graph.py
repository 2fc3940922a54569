"""Labeled simple graphs and their independence primitives.

The vertex tuple fixes the ambient order: every derived listing (neighbourhoods,
maximal independent sets, witnesses) is reported in that order, which makes all
downstream tie-breaking deterministic.  Adjacency is mirrored into bitmasks so
the exponential searches stay fast at desk scale.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from .errors import GraphError

Edge = tuple[str, str]


@dataclass(frozen=True)
class Graph:
    """Simple graph on ordered string labels; immutable and hashable.

    Invariants (enforced by :func:`build_graph`): no loops, no duplicate
    edges, every endpoint is a vertex, edge tuples are stored with the
    earlier-ordered endpoint first.
    """

    vertices: tuple[str, ...]
    edges: frozenset[Edge]

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adj(self) -> dict[str, frozenset[str]]:
        nbrs: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        idx = self.index
        bits = [0] * len(self.vertices)
        for u, v in self.edges:
            bits[idx[u]] |= 1 << idx[v]
            bits[idx[v]] |= 1 << idx[u]
        return tuple(bits)

    def __len__(self) -> int:
        return len(self.vertices)

    def has_vertex(self, x: str) -> bool:
        return x in self.index

    def has_edge(self, u: str, v: str) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges

    def sort_labels(self, labels: Iterable[str]) -> tuple[str, ...]:
        """Ambient-order sorted tuple of the given vertex labels."""
        idx = self.index
        return tuple(sorted(labels, key=idx.__getitem__))

    def mask_of(self, labels: Iterable[str]) -> int:
        idx = self.index
        m = 0
        for x in labels:
            m |= 1 << idx[x]
        return m

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in _bits(mask))


def _bits(mask: int):
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_graph(vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()) -> Graph:
    """Construct a validated :class:`Graph`, preserving vertex order."""
    vs = tuple(vertices)
    seen: set[str] = set()
    for v in vs:
        if v in seen:
            raise GraphError(f"duplicate vertex label: {v!r}")
        seen.add(v)
    idx = {v: i for i, v in enumerate(vs)}
    canon: set[Edge] = set()
    for e in edges:
        u, v = e
        if u == v:
            raise GraphError(f"loop edge at {u!r}")
        for end in (u, v):
            if end not in idx:
                raise GraphError(f"edge endpoint {end!r} is not a vertex")
        canon.add((u, v) if idx[u] < idx[v] else (v, u))
    return Graph(vs, frozenset(canon))


def neighborhood(g: Graph, x: str, closed: bool = False) -> frozenset[str]:
    """Open neighbourhood of ``x``, or closed (including ``x``) if requested."""
    if not g.has_vertex(x):
        raise GraphError(f"unknown vertex: {x!r}")
    nb = g.adj[x]
    return nb | {x} if closed else nb


def delete_vertices(g: Graph, drop: Iterable[str]) -> Graph:
    """Induced subgraph on the complement of ``drop``; vertex order inherited."""
    dropped = set(drop)
    for x in dropped:
        if not g.has_vertex(x):
            raise GraphError(f"unknown vertex: {x!r}")
    keep = tuple(v for v in g.vertices if v not in dropped)
    kept = frozenset(e for e in g.edges if e[0] not in dropped and e[1] not in dropped)
    return Graph(keep, kept)


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    keep_set = set(keep)
    return delete_vertices(g, (v for v in g.vertices if v not in keep_set))


def is_independent(g: Graph, s: Iterable[str]) -> bool:
    """True iff the induced subgraph on ``s`` has no edges."""
    labels = list(s)
    for x in labels:
        if not g.has_vertex(x):
            raise GraphError(f"unknown vertex: {x!r}")
    sset = set(labels)
    return not any(u in sset and v in sset for u, v in g.edges)


def maximal_independent_sets(g: Graph) -> list[frozenset[str]]:
    """All inclusion-maximal independent sets, lexicographic in ambient order.

    The 0-vertex graph yields ``[frozenset()]``.  Enumeration is Bron-Kerbosch
    with pivoting on the complement adjacency; the result is sorted, so the
    output order does not depend on the branching.
    """
    n = len(g.vertices)
    if n == 0:
        return [frozenset()]
    full = (1 << n) - 1
    cadj = [full & ~g.adj_bits[i] & ~(1 << i) for i in range(n)]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            found.append(r)
            return
        pivot = max(_bits(p | x), key=lambda u: (p & cadj[u]).bit_count())
        cand = p & ~cadj[pivot]
        for v in _bits(cand):
            bit = 1 << v
            expand(r | bit, p & cadj[v], x & cadj[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    keys = sorted(tuple(_bits(m)) for m in found)
    return [frozenset(g.vertices[i] for i in t) for t in keys]


def independence_number(g: Graph) -> int:
    """Maximum size of an independent set (0 for the 0-vertex graph).

    Branch-and-reduce: a vertex with at most one neighbour inside the current
    subproblem always belongs to some optimum, so it is taken greedily;
    otherwise branch on a maximum-degree vertex.
    """
    n = len(g.vertices)
    if n == 0:
        return 0
    adj = g.adj_bits
    memo: dict[int, int] = {}

    def alpha(mask: int) -> int:
        if mask == 0:
            return 0
        cached = memo.get(mask)
        if cached is not None:
            return cached
        take = -1
        branch = -1
        branch_deg = -1
        for v in _bits(mask):
            deg = (adj[v] & mask).bit_count()
            if deg <= 1:
                take = v
                break
            if deg > branch_deg:
                branch_deg = deg
                branch = v
        if take >= 0:
            res = 1 + alpha(mask & ~adj[take] & ~(1 << take))
        else:
            v = branch
            res = max(alpha(mask & ~(1 << v)), 1 + alpha(mask & ~adj[v] & ~(1 << v)))
        memo[mask] = res
        return res

    return alpha((1 << n) - 1)


def is_vertex_cover(g: Graph, s: Iterable[str]) -> bool:
    """True iff every edge has at least one endpoint in ``s``."""
    sset = set(s)
    for x in sset:
        if not g.has_vertex(x):
            raise GraphError(f"unknown vertex: {x!r}")
    return all(u in sset or v in sset for u, v in g.edges)


def vertex_cover_number(g: Graph) -> int:
    """Minimum size of a vertex cover, via the complement identity."""
    return len(g.vertices) - independence_number(g)


def is_complete(g: Graph) -> bool:
    n = len(g.vertices)
    return len(g.edges) == n * (n - 1) // 2


def is_totally_disconnected(g: Graph) -> bool:
    return not g.edges


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    BFS from every root; each non-tree edge closes a walk of length
    dist(u)+dist(v)+1 that contains a cycle, and a root on a shortest cycle
    realises its exact length, so the minimum over roots is the girth.
    """
    n = len(g.vertices)
    adjb = g.adj_bits
    best: int | None = None
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best is not None and dist[u] * 2 >= best:
                break
            for w in _bits(adjb[u]):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def has_cycle_subgraph(g: Graph, n: int) -> bool:
    """True iff some n distinct vertices form a (not necessarily induced) cycle."""
    if n < 3:
        raise GraphError(f"cycle length must be at least 3, got {n}")
    count = len(g.vertices)
    if count < n:
        return False
    adjb = g.adj_bits

    def extend(start: int, last: int, used: int, depth: int) -> bool:
        if depth == n:
            return bool(adjb[last] & (1 << start))
        for w in _bits(adjb[last] & ~used):
            if w <= start:
                continue
            if extend(start, w, used | (1 << w), depth + 1):
                return True
        return False

    return any(extend(s, s, 1 << s, 1) for s in range(count))


def is_chordal(g: Graph) -> bool:
    """Chordality via lexicographic BFS followed by elimination-order verification."""
    n = len(g.vertices)
    if n == 0:
        return True
    adjb = g.adj_bits
    order: list[int] = []
    pos = [-1] * n
    labels: list[list[int]] = [[] for _ in range(n)]
    for step in range(n):
        v = max(
            (u for u in range(n) if pos[u] == -1),
            key=lambda u: (labels[u], -u),
        )
        pos[v] = step
        order.append(v)
        for w in _bits(adjb[v]):
            if pos[w] == -1:
                labels[w].append(n - step)
    # order[i] visited at time i; check each vertex against its latest-visited
    # earlier neighbour.
    for v in order:
        earlier = [u for u in _bits(adjb[v]) if pos[u] < pos[v]]
        if not earlier:
            continue
        p = max(earlier, key=lambda u: pos[u])
        rest = [u for u in earlier if u != p]
        if any(not adjb[p] & (1 << u) for u in rest):
            return False
    return True


def disjoint_relabel(g: Graph, tag: str) -> Graph:
    """Isomorphic copy with every label prefixed by ``tag`` and a dot."""
    rename = {v: f"{tag}.{v}" for v in g.vertices}
    return Graph(
        tuple(rename[v] for v in g.vertices),
        frozenset((rename[u], rename[v]) for u, v in g.edges),
    )

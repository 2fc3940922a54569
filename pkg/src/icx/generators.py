"""Deterministic graph generators for tests and the verification suite.

Seeded kinds are reproducible bit-exactly: the stream is a pure function of
the spec.  ``all-graphs`` enumerates every labelled graph on n vertices by
walking the 2^C(n,2) edge subsets in a fixed order.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

from .errors import GraphError
from .graph import Graph, build_graph, maximal_independent_sets

KINDS = (
    "cycle",
    "path",
    "complete",
    "star",
    "discrete",
    "all-graphs",
    "gnp",
    "chordal-random",
)

ALL_GRAPHS_DEFAULT_MAX = 6


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int = 1
    p: float = 0.5
    seed: int = 0
    cap: int | None = None


def _labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(1, n + 1))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    vs = _labels(n)
    return build_graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path_graph(n: int) -> Graph:
    vs = _labels(n)
    return build_graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    vs = _labels(n)
    return build_graph(vs, list(combinations(vs, 2)))


def star_graph(n: int) -> Graph:
    """One centre joined to n-1 leaves."""
    vs = _labels(n)
    return build_graph(vs, [(vs[0], v) for v in vs[1:]])


def discrete_graph(n: int) -> Graph:
    return build_graph(_labels(n), [])


def all_graphs(n: int, max_n: int = ALL_GRAPHS_DEFAULT_MAX) -> Iterator[Graph]:
    """Every labelled graph on n vertices, one per edge subset."""
    if n > max_n:
        raise GraphError(f"all-graphs is capped at n <= {max_n}, got {n}")
    vs = _labels(n)
    pairs = list(combinations(vs, 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(vs, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def gnp_stream(n: int, p: float, seed: int) -> Iterator[Graph]:
    """Endless stream of seeded G(n, p) samples."""
    rng = random.Random(seed)
    vs = _labels(n)
    pairs = list(combinations(vs, 2))
    while True:
        yield build_graph(vs, [e for e in pairs if rng.random() < p])


def random_chordal(n: int, rng: random.Random) -> Graph:
    """Grow a chordal graph by attaching each vertex to a clique of the rest.

    The new vertex's neighbourhood is a subset of a maximal clique of the
    current graph, so insertion order reversed is a perfect elimination
    ordering by construction.
    """
    g = build_graph(["1"], [])
    for k in range(2, n + 1):
        label = str(k)
        cliques = _maximal_cliques(g)
        base = list(rng.choice(cliques))
        chosen = [v for v in base if rng.random() < 0.7]
        g = build_graph(
            g.vertices + (label,),
            list(g.edges) + [(v, label) for v in chosen],
        )
    return g


def chordal_stream(n: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    while True:
        yield random_chordal(n, rng)


def _maximal_cliques(g: Graph) -> list[tuple[str, ...]]:
    """Maximal cliques, via maximal independent sets of the complement."""
    comp = build_graph(
        g.vertices,
        [
            (u, v)
            for u, v in combinations(g.vertices, 2)
            if not g.has_edge(u, v)
        ],
    )
    return [g.sort_labels(s) for s in maximal_independent_sets(comp)]


def generate(spec: GeneratorSpec) -> Iterator[Graph]:
    """Deterministic stream for the given spec; finite kinds are finite."""
    kind = spec.kind
    if kind == "cycle":
        return iter([cycle_graph(spec.n)])
    if kind == "path":
        return iter([path_graph(spec.n)])
    if kind == "complete":
        return iter([complete_graph(spec.n)])
    if kind == "star":
        return iter([star_graph(spec.n)])
    if kind == "discrete":
        return iter([discrete_graph(spec.n)])
    if kind == "all-graphs":
        return all_graphs(spec.n, spec.cap if spec.cap is not None else ALL_GRAPHS_DEFAULT_MAX)
    if kind == "gnp":
        return gnp_stream(spec.n, spec.p, spec.seed)
    if kind == "chordal-random":
        return chordal_stream(spec.n, spec.seed)
    raise GraphError(f"unknown generator kind: {kind!r}")

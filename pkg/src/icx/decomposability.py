"""Shedding vertices and the vertex-decomposability recursion with witnesses.

A vertex x is shedding when no independent set of G \\ N[x] is a maximal
independent set of G \\ x; operationally, every maximal independent set of
G \\ N[x] must extend by some neighbour of x.  A graph is vertex decomposable
when it is totally disconnected or some shedding vertex x leaves both G \\ x
and G \\ N[x] vertex decomposable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .graph import (
    Graph,
    delete_vertices,
    is_totally_disconnected,
    maximal_independent_sets,
    neighborhood,
)


@dataclass(frozen=True)
class VDWitness:
    """Witness tree: a leaf marks a totally disconnected graph, otherwise the
    shedding vertex used plus witnesses for the two derived graphs."""

    vertex: str | None = None
    minus: "VDWitness | None" = None
    minus_closed: "VDWitness | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.vertex is None

    def to_json(self):
        if self.is_leaf:
            return "discrete"
        return {
            "vertex": self.vertex,
            "minus": self.minus.to_json(),
            "minusN": self.minus_closed.to_json(),
        }


DISCRETE = VDWitness()


@dataclass(frozen=True)
class VDResult:
    decomposable: bool
    witness: VDWitness | None = None


def is_shedding_vertex(g: Graph, x: str) -> bool:
    if not g.has_vertex(x):
        raise GraphError(f"unknown vertex: {x!r}")
    open_nb = neighborhood(g, x)
    rest = delete_vertices(g, open_nb | {x})
    adj = g.adj
    for s in maximal_independent_sets(rest):
        if not any(not (adj[y] & s) for y in open_nb):
            return False
    return True


def shedding_vertices(g: Graph) -> tuple[str, ...]:
    """All shedding vertices, in ambient order."""
    return tuple(x for x in g.vertices if is_shedding_vertex(g, x))


def is_vertex_decomposable(g: Graph) -> VDResult:
    """Decide vertex decomposability; the witness tree replays the recursion.

    Candidate shedding vertices are tried in ambient order and results are
    memoised by the vertex subset of the ambient graph (induced subgraphs
    only ever shrink), so the witness is deterministic.
    """
    memo: dict[frozenset[str], VDResult] = {}

    def decide(h: Graph) -> VDResult:
        key = frozenset(h.vertices)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if is_totally_disconnected(h):
            result = VDResult(True, DISCRETE)
        else:
            result = VDResult(False, None)
            for x in h.vertices:
                if not is_shedding_vertex(h, x):
                    continue
                left = decide(delete_vertices(h, {x}))
                if not left.decomposable:
                    continue
                right = decide(delete_vertices(h, neighborhood(h, x, closed=True)))
                if not right.decomposable:
                    continue
                result = VDResult(True, VDWitness(x, left.witness, right.witness))
                break
        memo[key] = result
        return result

    return decide(g)


def replay_witness(g: Graph, witness: VDWitness) -> bool:
    """Re-run the recursion encoded by a witness, checking every claim."""
    if witness.is_leaf:
        return is_totally_disconnected(g)
    x = witness.vertex
    if not g.has_vertex(x) or not is_shedding_vertex(g, x):
        return False
    return replay_witness(delete_vertices(g, {x}), witness.minus) and replay_witness(
        delete_vertices(g, neighborhood(g, x, closed=True)), witness.minus_closed
    )


def witness_from_json(data) -> VDWitness:
    if data == "discrete":
        return DISCRETE
    return VDWitness(
        data["vertex"],
        witness_from_json(data["minus"]),
        witness_from_json(data["minusN"]),
    )

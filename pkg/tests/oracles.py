"""Independent brute-force oracles used to cross-check the library.

Everything here works straight from definitions (subset filters, permutation
scans, definition-level recursion) and deliberately shares no code with the
implementation paths it checks.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from icx.graph import Graph


def all_subsets(items):
    out = [()]
    for k in range(1, len(items) + 1):
        out.extend(combinations(items, k))
    return out


def independent_brute(g: Graph, subset) -> bool:
    s = set(subset)
    return not any(u in s and v in s for u, v in g.edges)


def mis_brute(g: Graph) -> list[frozenset[str]]:
    """Maximal independent sets by filtering all 2^n subsets."""
    if not g.vertices:
        return [frozenset()]
    independents = [set(s) for s in all_subsets(g.vertices) if independent_brute(g, s)]
    out = []
    for s in independents:
        if not any(s < t for t in independents):
            out.append(frozenset(s))
    idx = g.index
    return sorted(set(out), key=lambda f: tuple(sorted(idx[x] for x in f)))


def alpha_brute(g: Graph) -> int:
    return max((len(f) for f in mis_brute(g)), default=0)


def cycles_brute(g: Graph):
    """All vertex sets that carry a cycle, as (cyclic order tuple) lists."""
    found = []
    n = len(g.vertices)
    for k in range(3, n + 1):
        for subset in combinations(g.vertices, k):
            first = subset[0]
            for rest in permutations(subset[1:]):
                cyc = (first,) + rest
                if all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                    found.append(cyc)
                    break
            # keep scanning permutations only until one cycle per subset
    return found


def has_cycle_brute(g: Graph, n: int) -> bool:
    return any(len(c) == n for c in cycles_brute(g))


def girth_brute(g: Graph) -> int | None:
    lengths = sorted({len(c) for c in cycles_brute(g)})
    return lengths[0] if lengths else None


def chordal_brute(g: Graph) -> bool:
    """Every cycle on 4 or more vertices has a chord between its vertices."""
    n = len(g.vertices)
    for k in range(4, n + 1):
        for subset in combinations(g.vertices, k):
            first = subset[0]
            for rest in permutations(subset[1:]):
                cyc = (first,) + rest
                if not all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                    continue
                chord = any(
                    g.has_edge(cyc[i], cyc[j])
                    for i in range(k)
                    for j in range(i + 2, k)
                    if not (i == 0 and j == k - 1)
                )
                if not chord:
                    return False
    return True


def shedding_brute(g: Graph, x: str) -> bool:
    """Literal reading: no independent set of G-N[x] is maximal in G-x."""
    closed = set(g.adj[x]) | {x}
    outside = [v for v in g.vertices if v not in closed]
    others = [v for v in g.vertices if v != x]
    for s in all_subsets(outside):
        if not independent_brute(g, s):
            continue
        sset = set(s)
        maximal = all(
            not independent_brute(g, sset | {w}) for w in others if w not in sset
        )
        if maximal:
            return False
    return True


def vd_brute(g: Graph, rng: random.Random | None = None) -> bool:
    """Memo-free vertex-decomposability recursion; candidate order shuffled
    when an rng is supplied."""
    if not g.edges:
        return True
    candidates = list(g.vertices)
    if rng is not None:
        rng.shuffle(candidates)
    for x in candidates:
        if not shedding_brute(g, x):
            continue
        minus = _drop(g, {x})
        minus_closed = _drop(g, set(g.adj[x]) | {x})
        if vd_brute(minus, rng) and vd_brute(minus_closed, rng):
            return True
    return False


def _drop(g: Graph, drop: set[str]) -> Graph:
    keep = tuple(v for v in g.vertices if v not in drop)
    return Graph(keep, frozenset(e for e in g.edges if e[0] in keep and e[1] in keep))


def shelling_ok_brute(facets: list[frozenset[str]], order) -> bool:
    seq = [facets[k] for k in order]
    for j in range(1, len(seq)):
        for i in range(j):
            ok = False
            for v in seq[j] - seq[i]:
                if any(seq[j] - seq[l] == {v} for l in range(j)):
                    ok = True
                    break
            if not ok:
                return False
    return True


def shellable_by_permutations(facets: list[frozenset[str]]) -> bool:
    """Existence of a shelling by scanning every facet permutation."""
    m = len(facets)
    for perm in permutations(range(m)):
        if shelling_ok_brute(facets, perm):
            return True
    return False


def rank_fraction_brute(dense: list[list[int]]) -> int:
    """Gaussian elimination over exact fractions, dense and unoptimised."""
    from fractions import Fraction

    m = [[Fraction(x) for x in row] for row in dense]
    rank = 0
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c] / inv
                for j in range(cols):
                    m[i][j] -= f * m[r][j]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def reduced_euler(facets: list[frozenset[str]]) -> int:
    """Alternating face-count sum including the empty face, from facets alone."""
    faces = set()
    for f in facets:
        items = sorted(f)
        for k in range(len(items) + 1):
            faces.update(combinations(items, k))
    return sum((-1) ** (len(f) - 1) for f in faces)

"""Exact reduced rational homology and the Cohen-Macaulay criterion.

Boundary ranks are computed by sparse Gaussian elimination over the integers
(row combinations p*r2 - v*r1 followed by a gcd division), so every rank is
exact; no floating point is involved anywhere.  The Cohen-Macaulay test walks
every face of the independence complex and requires the reduced homology of
its link to vanish below the link's dimension.

Per-link homology is accelerated by vertex folding: when N(u) is contained in
N(v) for distinct u, v, deleting v preserves the homotopy type of the
independence complex (the link of v in it is coned by u).  Folding changes
only speed, never answers; the unfolded path is kept as ``reduced_betti``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .complexes import SimplicialComplex, make_complex
from .errors import GraphError, ResourceCapExceeded
from .graph import Graph, _bits, induced_subgraph, maximal_independent_sets

DEFAULT_FACE_CAP = 20000

_NORMALIZE_ABOVE = 1 << 48


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers, entries[k] holding the rank in degree k-1."""

    entries: tuple[int, ...]

    def get(self, i: int) -> int:
        k = i + 1
        if 0 <= k < len(self.entries):
            return self.entries[k]
        return 0


@dataclass(frozen=True)
class CMVerdict:
    cm: bool
    # (face as ambient-sorted label tuple, degree i) for the lex-least face
    # whose link has nonvanishing reduced homology below its dimension.
    witness: tuple[tuple[str, ...], int] | None = None


def exact_rank(rows: list[dict[int, int]]) -> int:
    """Rank over the rationals of a sparse integer matrix given as row dicts.

    Destroys its argument.  Pivots prefer unit entries, then short rows, so
    boundary matrices mostly eliminate without coefficient growth.
    """
    col_rows: dict[int, set[int]] = {}
    for r, row in enumerate(rows):
        for c in row:
            col_rows.setdefault(c, set()).add(r)
    rank = 0
    for c in sorted(col_rows):
        holders = col_rows.get(c)
        if not holders:
            continue
        pivot_row = min(
            holders, key=lambda r: (abs(rows[r][c]) != 1, len(rows[r]), r)
        )
        prow = rows[pivot_row]
        p = prow[c]
        rank += 1
        for r2 in list(holders):
            if r2 == pivot_row:
                continue
            row2 = rows[r2]
            v = row2[c]
            if p == 1 or p == -1:
                factor = v * p  # v / p for a unit pivot
                for cc, pv in prow.items():
                    nv = row2.get(cc, 0) - factor * pv
                    if nv:
                        row2[cc] = nv
                        col_rows.setdefault(cc, set()).add(r2)
                    elif cc in row2:
                        del row2[cc]
                        col_rows[cc].discard(r2)
            else:
                merged: dict[int, int] = {cc: p * ov for cc, ov in row2.items()}
                for cc, pv in prow.items():
                    merged[cc] = merged.get(cc, 0) - v * pv
                g = 0
                for val in merged.values():
                    g = gcd(g, val)
                for cc in row2:
                    col_rows[cc].discard(r2)
                row2.clear()
                if g:
                    for cc, val in merged.items():
                        if val:
                            row2[cc] = val // g
                            col_rows.setdefault(cc, set()).add(r2)
            if row2 and max(map(abs, row2.values())) > _NORMALIZE_ABOVE:
                g = 0
                for val in row2.values():
                    g = gcd(g, val)
                if g > 1:
                    for cc in row2:
                        row2[cc] //= g
        for cc in prow:
            col_rows[cc].discard(pivot_row)
        prow.clear()
    return rank


class _ChainRanks:
    """Lazy boundary ranks of an augmented chain complex.

    ``levels[k]`` lists the faces with k vertices as sorted index tuples;
    ``levels[0]`` is the single empty face.  ``rank(i)`` is the rank of the
    boundary map from (i)-dimensional chains down to (i-1)-dimensional ones.
    """

    def __init__(self, levels: list[list[tuple[int, ...]]]):
        self.levels = levels
        self.top_dim = len(levels) - 2  # dimension of the complex
        self._ranks: dict[int, int] = {}

    def count(self, i: int) -> int:
        k = i + 1
        if 0 <= k < len(self.levels):
            return len(self.levels[k])
        return 0

    def rank(self, i: int) -> int:
        if i < 0 or i > self.top_dim:
            return 0
        cached = self._ranks.get(i)
        if cached is not None:
            return cached
        lower = self.levels[i]
        upper = self.levels[i + 1]
        pos = {f: k for k, f in enumerate(lower)}
        rows: list[dict[int, int]] = [{} for _ in lower]
        for j, f in enumerate(upper):
            for k in range(len(f)):
                rows[pos[f[:k] + f[k + 1:]]][j] = 1 if k % 2 == 0 else -1
        result = exact_rank(rows)
        self._ranks[i] = result
        return result

    def betti(self, i: int) -> int:
        if i == -1:
            return 1 - self.rank(0) if self.count(-1) else 0
        if i < -1 or i > self.top_dim:
            return 0
        return self.count(i) - self.rank(i) - self.rank(i + 1)


def _levels_from_facets(ground_index: dict[str, int], facets) -> list[list[tuple[int, ...]]]:
    top = max(len(f) for f in facets)
    seen: list[set[tuple[int, ...]]] = [set() for _ in range(top + 1)]
    for f in facets:
        idxs = sorted(ground_index[x] for x in f)
        for k in range(len(idxs) + 1):
            for sub in combinations(idxs, k):
                seen[k].add(sub)
    return [sorted(level) for level in seen]


def reduced_betti(c: SimplicialComplex) -> BettiVector:
    """Reduced rational Betti numbers from augmented boundary-matrix ranks."""
    ranks = _ChainRanks(_levels_from_facets(c.index, c.facets))
    dim = c.dim
    return BettiVector(tuple(ranks.betti(i) for i in range(-1, dim + 1)))


def link(c: SimplicialComplex, sigma) -> SimplicialComplex:
    """Link of a face: faces disjoint from sigma whose union with it is a face."""
    sig = frozenset(sigma)
    for x in sig:
        if x not in c.index:
            raise GraphError(f"unknown vertex: {x!r}")
    if not any(sig <= f for f in c.facets):
        raise GraphError(f"{sorted(sig)} is not a face of the complex")
    candidates = {f - sig for f in c.facets if sig <= f}
    maximal = [f for f in candidates if not any(f < other for other in candidates)]
    used = set().union(*maximal) if maximal else set()
    ground = tuple(v for v in c.ground if v in used)
    return make_complex(ground, maximal)


def fold_graph(g: Graph) -> Graph:
    """Delete dominated-neighbourhood vertices until none remain.

    Whenever N(u) is a subset of N(v) for u != v, vertex v is removed (ties on
    equal neighbourhoods drop the later vertex).  The independence complex of
    the result is homotopy equivalent to the original one.
    """
    current = g
    changed = True
    while changed and len(current.vertices) > 1:
        changed = False
        adjb = current.adj_bits
        n = len(current.vertices)
        for v in range(n):
            nv = adjb[v]
            for u in range(n):
                if u == v:
                    continue
                nu = adjb[u]
                if nu & ~nv:
                    continue
                if nu == nv and u > v:
                    continue
                current = induced_subgraph(
                    current, (current.vertices[i] for i in range(n) if i != v)
                )
                changed = True
                break
            if changed:
                break
    return current


def _independent_levels(g: Graph, cap: int | None = None) -> list[list[tuple[int, ...]]]:
    """Independent sets of g as index tuples grouped by size, lex within size."""
    adj = g.adj_bits
    n = len(g.vertices)
    levels: list[list[tuple[int, ...]]] = [[()]]
    count = 1

    def rec(prefix: tuple[int, ...], candidates: int) -> None:
        nonlocal count
        for v in _bits(candidates):
            face = prefix + (v,)
            count += 1
            if cap is not None and count > cap:
                raise ResourceCapExceeded(
                    f"more than {cap} faces in the independence complex"
                )
            if len(face) >= len(levels):
                levels.append([])
            levels[len(face)].append(face)
            above = candidates & ~((1 << (v + 1)) - 1)
            rec(face, above & ~adj[v])

    rec((), (1 << n) - 1)
    return levels


def graph_betti(g: Graph) -> BettiVector:
    """Reduced Betti numbers of the independence complex of g, folded first."""
    folded = fold_graph(g)
    ranks = _ChainRanks(_independent_levels(folded))
    return BettiVector(tuple(ranks.betti(i) for i in range(-1, ranks.top_dim + 1)))


def _lex_faces(g: Graph, cap: int | None):
    """All independent sets of g as index masks, in lex order of index tuples."""
    adj = g.adj_bits
    n = len(g.vertices)
    out = [0]

    def rec(mask: int, candidates: int) -> None:
        for v in _bits(candidates):
            m = mask | (1 << v)
            out.append(m)
            if cap is not None and len(out) > cap:
                raise ResourceCapExceeded(
                    f"more than {cap} faces in the independence complex"
                )
            above = candidates & ~((1 << (v + 1)) - 1)
            rec(m, above & ~adj[v])

    rec(0, (1 << n) - 1)
    return out


def is_cohen_macaulay(g: Graph, face_cap: int = DEFAULT_FACE_CAP) -> CMVerdict:
    """Reisner test over the rationals, walking every face of the complex.

    A face fails when its link has nonzero reduced homology in some degree
    below the link's dimension; the first failure in the lex order of faces
    is returned as the witness.
    """
    n = len(g.vertices)
    faces = _lex_faces(g, face_cap)
    facet_masks = [g.mask_of(f) for f in maximal_independent_sets(g)]
    adj = g.adj_bits
    full = (1 << n) - 1
    lazies: dict[int, _ChainRanks | None] = {}

    for face in faces:
        dim_link = max(
            (fm & ~face).bit_count() for fm in facet_masks if fm & face == face
        ) - 1
        if dim_link <= 0:
            continue
        closed = face
        for v in _bits(face):
            closed |= adj[v]
        remaining = full & ~closed
        ranks = lazies.get(remaining)
        if ranks is None:
            sub = fold_graph(induced_subgraph(g, g.labels_of(remaining)))
            ranks = _ChainRanks(_independent_levels(sub))
            lazies[remaining] = ranks
        for i in range(dim_link):
            if ranks.betti(i):
                return CMVerdict(False, (g.labels_of(face), i))
    return CMVerdict(True, None)

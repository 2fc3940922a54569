"""Facet-list simplicial complexes, purity, and non-pure shellings.

A shelling here is an order F_1..F_m of the facets such that for all i < j
there are v in F_j \\ F_i and l < j with F_j \\ F_l = {v}.  Purity is a
separate predicate; nothing below assumes equal facet sizes.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import GraphError, ResourceCapExceeded
from .graph import Graph, _bits, maximal_independent_sets

DEFAULT_FACET_CAP = 5000


@dataclass(frozen=True)
class SimplicialComplex:
    """Ground set plus a facet antichain, facets in lexicographic order.

    The complex {""} with the single empty facet is allowed; a complex with no
    facets at all is rejected at construction.
    """

    ground: tuple[str, ...]
    facets: tuple[frozenset[str], ...]

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.ground)}

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        idx = self.index
        out = []
        for f in self.facets:
            m = 0
            for x in f:
                m |= 1 << idx[x]
            out.append(m)
        return tuple(out)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def sort_face(self, face: frozenset[str]) -> tuple[str, ...]:
        idx = self.index
        return tuple(sorted(face, key=idx.__getitem__))

    def labels_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.ground[i] for i in _bits(mask))


@dataclass(frozen=True)
class ShellingOrder:
    """A permutation of a complex's facet list, stored as facet indices."""

    indices: tuple[int, ...]


@dataclass(frozen=True)
class ShellingVerdict:
    ok: bool
    # 1-based positions (i, j) of the first violating facet pair, scanning
    # j ascending then i ascending; None when the order is accepted.
    witness: tuple[int, int] | None = None


def make_complex(ground: Sequence[str], facets: Sequence[frozenset[str] | Sequence[str]]) -> SimplicialComplex:
    """Validate and canonicalise a complex (antichain check, lex facet order)."""
    gr = tuple(ground)
    idx = {v: i for i, v in enumerate(gr)}
    if len(idx) != len(gr):
        raise GraphError("duplicate label in ground set")
    if not facets:
        raise GraphError("a complex needs at least one facet (use [()] for the empty-face complex)")
    sets = []
    for f in facets:
        fs = frozenset(f)
        for x in fs:
            if x not in idx:
                raise GraphError(f"facet vertex {x!r} is not in the ground set")
        sets.append(fs)
    for a in sets:
        for b in sets:
            if a is not b and a <= b:
                raise GraphError(f"facets are not an antichain: {sorted(a)} inside {sorted(b)}")
    ordered = sorted(sets, key=lambda f: tuple(sorted(idx[x] for x in f)))
    return SimplicialComplex(gr, tuple(ordered))


def independence_complex(g: Graph) -> SimplicialComplex:
    """The complex on V(G) whose facets are the maximal independent sets."""
    return SimplicialComplex(g.vertices, tuple(maximal_independent_sets(g)))


def is_pure(c: SimplicialComplex) -> bool:
    sizes = {len(f) for f in c.facets}
    return len(sizes) == 1


def is_unmixed(g: Graph) -> bool:
    """All maximal independent sets of the graph share one cardinality."""
    return is_pure(independence_complex(g))


def _check_permutation(c: SimplicialComplex, order: ShellingOrder | Sequence[int]) -> tuple[int, ...]:
    seq = tuple(order.indices if isinstance(order, ShellingOrder) else order)
    if sorted(seq) != list(range(len(c.facets))):
        raise GraphError("order is not a permutation of the facet list")
    return seq


def verify_shelling(c: SimplicialComplex, order: ShellingOrder | Sequence[int]) -> ShellingVerdict:
    """Check the shelling condition for every pair i < j.

    For each j the set S_j = {v : some earlier facet F_l has F_j \\ F_l = {v}}
    is precomputed; the pair (i, j) passes iff (F_j \\ F_i) meets S_j.
    """
    seq = _check_permutation(c, order)
    masks = [c.facet_masks[k] for k in seq]
    for j in range(1, len(masks)):
        fj = masks[j]
        s_j = 0
        for l in range(j):
            d = fj & ~masks[l]
            if d and d & (d - 1) == 0:
                s_j |= d
        for i in range(j):
            if not (fj & ~masks[i]) & s_j:
                return ShellingVerdict(False, (i + 1, j + 1))
    return ShellingVerdict(True, None)


def _search_shelling(
    masks: Sequence[int],
    admissible: int | None = None,
) -> tuple[int, ...] | None:
    """First facet order passing the append condition, under a fixed priority.

    A facet F may follow the placed set P iff for every F_i in P the
    difference F \\ F_i meets S = {v : some F_l in P has F \\ F_l = {v}},
    where v is additionally restricted to the ``admissible`` vertex mask when
    one is given.  Whether a placed set can be completed depends only on the
    set, so failed states are memoised and the search is complete.

    Candidates are tried largest facet first (ties by facet-list position):
    shellable complexes admit dimension-decreasing shellings, so this priority
    reaches a completion quickly while keeping the output a pure function of
    the complex.
    """
    m = len(masks)
    if m == 1:
        return (0,)
    priority = sorted(range(m), key=lambda k: (-masks[k].bit_count(), k))
    dead: set[frozenset[int]] = set()
    placed: list[int] = []
    placed_set: set[int] = set()

    def appendable(cand: int) -> bool:
        fc = masks[cand]
        s = 0
        for l in placed:
            d = fc & ~masks[l]
            if d and d & (d - 1) == 0:
                s |= d
        if admissible is not None:
            s &= admissible
        if not s:
            return False
        return all((fc & ~masks[i]) & s for i in placed)

    def extend() -> bool:
        if len(placed) == m:
            return True
        key = frozenset(placed_set)
        if key in dead:
            return False
        for cand in priority:
            if cand in placed_set:
                continue
            if placed and not appendable(cand):
                continue
            placed.append(cand)
            placed_set.add(cand)
            if extend():
                return True
            placed.pop()
            placed_set.remove(cand)
        dead.add(key)
        return False

    return tuple(placed) if extend() else None


def find_shelling(c: SimplicialComplex, facet_cap: int = DEFAULT_FACET_CAP) -> ShellingOrder | None:
    """Complete backtracking search for a shelling; None when none exists.

    The returned order is deterministic (a pure function of the complex): the
    first valid order under the search priority documented in
    :func:`_search_shelling`.  Raises :class:`ResourceCapExceeded` above
    ``facet_cap`` facets.
    """
    if len(c.facets) > facet_cap:
        raise ResourceCapExceeded(
            f"complex has {len(c.facets)} facets, above the cap of {facet_cap}"
        )
    seq = _search_shelling(c.facet_masks)
    return None if seq is None else ShellingOrder(seq)


def is_shellable(g: Graph, facet_cap: int = DEFAULT_FACET_CAP) -> bool:
    return find_shelling(independence_complex(g), facet_cap) is not None

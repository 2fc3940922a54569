"""Constructive shellings for corona and lexicographic products.

Both constructions take verified shellings of the assigned graphs and emit a
total order on the product's facets; each output is re-checked by
``verify_shelling`` before it is returned, so a wrong reading of the orders
cannot ship silently.
"""

from __future__ import annotations

from .complexes import (
    DEFAULT_FACET_CAP,
    ShellingOrder,
    ShellingVerdict,
    SimplicialComplex,
    _search_shelling,
    independence_complex,
    verify_shelling,
)
from .errors import GraphError, ResourceCapExceeded
from .graph import Graph, is_complete
from .ops import GraphFamily, corona, lexicographic_product, split_pair

_SENTINEL = (1 << 30, 1 << 30)


def _verified_component(
    x: str, h: Graph, order: ShellingOrder
) -> tuple[SimplicialComplex, dict[frozenset[str], int]]:
    """Facet complex of an assigned graph plus facet -> shelling rank map."""
    comp = independence_complex(h)
    verdict = verify_shelling(comp, order)
    if not verdict.ok:
        raise GraphError(
            f"component shelling for base vertex {x!r} fails at pair {verdict.witness}"
        )
    ranks = {comp.facets[idx]: pos for pos, idx in enumerate(order.indices)}
    return comp, ranks


def corona_shelling(
    family: GraphFamily, component_shellings: dict[str, ShellingOrder]
) -> ShellingOrder:
    """Shelling of the corona from shellings of the assigned graphs.

    Each facet is keyed by the sequence of (base index, component rank) pairs
    along the base vertices outside its base face; keys compare elementwise,
    and a key that ends while agreeing with a longer one comes after it (the
    larger complement, i.e. the smaller base face, goes first).
    """
    base = family.base
    ranks: dict[str, dict[frozenset[str], int]] = {}
    for x, h, _ in family.assign:
        if x not in component_shellings:
            raise GraphError(f"no component shelling for base vertex {x!r}")
        _, ranks[x] = _verified_component(x, h, component_shellings[x])

    product = corona(family)
    complex_ = independence_complex(product)
    base_set = set(base.vertices)
    keys: list[tuple[tuple[int, int], ...]] = []
    seen: dict[tuple, int] = {}
    for fidx, facet in enumerate(complex_.facets):
        face = {v for v in facet if v in base_set}
        per_member: dict[str, set[str]] = {}
        for v in facet:
            if v in base_set:
                continue
            x, y = split_pair(v)
            per_member.setdefault(x, set()).add(y)
        key = []
        for bidx, x in enumerate(base.vertices):
            if x in face:
                continue
            chosen = frozenset(per_member.get(x, ()))
            if chosen not in ranks[x]:
                raise GraphError(
                    f"facet does not restrict to a facet of the graph at {x!r}"
                )
            key.append((bidx, ranks[x][chosen]))
        key_t = tuple(key)
        if key_t in seen:
            raise GraphError("facet keys collide; corona decomposition is broken")
        seen[key_t] = fidx
        keys.append(key_t)

    order = ShellingOrder(
        tuple(
            fidx
            for _, fidx in sorted(
                zip(keys, range(len(keys))), key=lambda kv: kv[0] + (_SENTINEL,)
            )
        )
    )
    verdict = verify_shelling(complex_, order)
    if not verdict.ok:
        raise AssertionError(f"constructed corona order fails at pair {verdict.witness}")
    return order


def verify_shell2_hypothesis(
    g: Graph, order: ShellingOrder, complete_at: set[str] | frozenset[str]
) -> ShellingVerdict:
    """Check the strengthened pair condition on a shelling of the base.

    For every pair F_i < F_j there must be u in F_j \\ F_i with u in
    ``complete_at`` and an earlier facet F_l with F_j \\ F_l = {u}.
    """
    comp = independence_complex(g)
    verdict = verify_shelling(comp, order)
    if not verdict.ok:
        raise GraphError(f"order is not a shelling (fails at pair {verdict.witness})")
    masks = [comp.facet_masks[k] for k in order.indices]
    admissible = 0
    for x in complete_at:
        if x in comp.index:
            admissible |= 1 << comp.index[x]
    for j in range(1, len(masks)):
        fj = masks[j]
        s_j = 0
        for l in range(j):
            d = fj & ~masks[l]
            if d and d & (d - 1) == 0:
                s_j |= d
        s_j &= admissible
        for i in range(j):
            if not (fj & ~masks[i]) & s_j:
                return ShellingVerdict(False, (i + 1, j + 1))
    return ShellingVerdict(True, None)


def find_shell2_shelling(
    g: Graph,
    complete_at: set[str] | frozenset[str],
    facet_cap: int = DEFAULT_FACET_CAP,
) -> ShellingOrder | None:
    """Backtracking search for a shelling satisfying the pair condition above."""
    comp = independence_complex(g)
    if len(comp.facets) > facet_cap:
        raise ResourceCapExceeded(
            f"complex has {len(comp.facets)} facets, above the cap of {facet_cap}"
        )
    admissible = 0
    for x in complete_at:
        if x in comp.index:
            admissible |= 1 << comp.index[x]
    seq = _search_shelling(comp.facet_masks, admissible=admissible)
    return None if seq is None else ShellingOrder(seq)


def lexicographic_shelling(
    family: GraphFamily,
    base_order: ShellingOrder,
    component_shellings: dict[str, ShellingOrder],
) -> ShellingOrder:
    """Shelling of the lexicographic product from a hypothesis-satisfying base
    shelling and shellings of the assigned graphs.

    Facets are ordered first by the position of their base facet in
    ``base_order``, then lexicographically by component ranks along the base
    facet's vertices in increasing ambient index.
    """
    base = family.base
    complete_at = {x for x, h, _ in family.assign if is_complete(h)}
    hyp = verify_shell2_hypothesis(base, base_order, complete_at)
    if not hyp.ok:
        raise GraphError(
            f"base order fails the hypothesis check at pair {hyp.witness}"
        )
    ranks: dict[str, dict[frozenset[str], int]] = {}
    for x, h, _ in family.assign:
        if x not in component_shellings:
            raise GraphError(f"no component shelling for base vertex {x!r}")
        _, ranks[x] = _verified_component(x, h, component_shellings[x])

    base_complex = independence_complex(base)
    base_pos = {base_complex.facets[idx]: pos for pos, idx in enumerate(base_order.indices)}

    product = lexicographic_product(family)
    complex_ = independence_complex(product)
    keys: list[tuple] = []
    for facet in complex_.facets:
        per_member: dict[str, set[str]] = {}
        for v in facet:
            x, y = split_pair(v)
            per_member.setdefault(x, set()).add(y)
        bface = frozenset(per_member)
        if bface not in base_pos:
            raise GraphError("facet does not project to a facet of the base")
        along = base.sort_labels(bface)
        key_ranks = []
        for x in along:
            chosen = frozenset(per_member[x])
            if chosen not in ranks[x]:
                raise GraphError(
                    f"facet does not restrict to a facet of the graph at {x!r}"
                )
            key_ranks.append(ranks[x][chosen])
        keys.append((base_pos[bface], tuple(key_ranks)))

    order = ShellingOrder(
        tuple(fidx for _, fidx in sorted(zip(keys, range(len(keys)))))
    )
    verdict = verify_shelling(complex_, order)
    if not verdict.ok:
        raise AssertionError(
            f"constructed lexicographic order fails at pair {verdict.witness}"
        )
    return order

import pytest

from icx import (
    GraphError,
    ShellingOrder,
    build_graph,
    corona,
    corona_shelling,
    find_shell2_shelling,
    find_shelling,
    independence_complex,
    is_complete,
    lexicographic_product,
    lexicographic_shelling,
    make_family,
    uniform_family,
    verify_shell2_hypothesis,
    verify_shelling,
)
from icx.generators import complete_graph, cycle_graph, discrete_graph, path_graph


def _component_orders(family):
    out = {}
    for x, h, _ in family.assign:
        order = find_shelling(independence_complex(h))
        assert order is not None
        out[x] = order
    return out


def example_c_base():
    return build_graph(list("abcde"), [("a", "b"), ("b", "c"), ("c", "d")])


def example_c_order(g):
    c = independence_complex(g)
    wanted = [{"a", "c", "e"}, {"a", "d", "e"}, {"b", "d", "e"}]
    return ShellingOrder(tuple(c.facets.index(frozenset(f)) for f in wanted))


def test_corona_shelling_single_base_vertex():
    base = discrete_graph(1)
    fam = uniform_family(base, complete_graph(2))
    order = corona_shelling(fam, _component_orders(fam))
    prod = corona(fam)
    c = independence_complex(prod)
    assert [c.facets[i] for i in order.indices] == [
        frozenset({"(1|1)"}),
        frozenset({"(1|2)"}),
        frozenset({"1"}),
    ]
    assert verify_shelling(c, order).ok


def test_corona_shelling_whiskered_cycle():
    fam = uniform_family(cycle_graph(4), discrete_graph(1))
    order = corona_shelling(fam, _component_orders(fam))
    assert verify_shelling(independence_complex(corona(fam)), order).ok


def test_corona_shelling_disjoint_base():
    fam = uniform_family(discrete_graph(2), complete_graph(2))
    order = corona_shelling(fam, _component_orders(fam))
    assert verify_shelling(independence_complex(corona(fam)), order).ok


def test_corona_shelling_mixed_family():
    base = path_graph(3)
    fam = make_family(
        base,
        {
            "1": (path_graph(3), None),
            "2": (complete_graph(2), None),
            "3": (discrete_graph(2), None),
        },
    )
    order = corona_shelling(fam, _component_orders(fam))
    assert verify_shelling(independence_complex(corona(fam)), order).ok


def test_corona_shelling_case_one_is_rank_lexicographic():
    fam = uniform_family(discrete_graph(2), complete_graph(2))
    orders = _component_orders(fam)
    order = corona_shelling(fam, orders)
    prod = corona(fam)
    c = independence_complex(prod)
    base_set = set(fam.base.vertices)
    ranked = {}
    for x, h, _ in fam.assign:
        comp = independence_complex(h)
        ranked[x] = {comp.facets[idx]: pos for pos, idx in enumerate(orders[x].indices)}

    def key(facet):
        out = []
        for bidx, x in enumerate(fam.base.vertices):
            if x in facet:
                continue
            chosen = frozenset(y for v in facet if v not in base_set for xx, y in [tuple(v[1:-1].split("|"))] if xx == x)
            out.append((bidx, ranked[x][chosen]))
        return tuple(out)

    seq = [c.facets[i] for i in order.indices]
    groups = {}
    for pos, facet in enumerate(seq):
        k = tuple(b for b, _ in key(facet))
        groups.setdefault(k, []).append(key(facet))
    for ks in groups.values():
        assert ks == sorted(ks)


def test_corona_shelling_rejects_bad_component_order():
    fam = uniform_family(discrete_graph(1), cycle_graph(4))
    bad = {"1": ShellingOrder((0, 1))}
    with pytest.raises(GraphError, match="component shelling"):
        corona_shelling(fam, bad)


def test_shell2_hypothesis_example():
    g = example_c_base()
    order = example_c_order(g)
    assert verify_shell2_hypothesis(g, order, {"b", "d"}).ok
    rejected = verify_shell2_hypothesis(g, order, set())
    assert not rejected.ok and rejected.witness == (1, 2)


def test_shell2_hypothesis_complete_base():
    g = complete_graph(3)
    order = ShellingOrder((0, 1, 2))
    assert verify_shell2_hypothesis(g, order, set(g.vertices)).ok


def test_shell2_hypothesis_requires_shelling():
    c4 = cycle_graph(4)
    with pytest.raises(GraphError, match="not a shelling"):
        verify_shell2_hypothesis(c4, ShellingOrder((0, 1)), set(c4.vertices))


def test_find_shell2_shelling():
    g = example_c_base()
    order = find_shell2_shelling(g, {"b", "d"})
    assert order is not None
    assert verify_shell2_hypothesis(g, order, {"b", "d"}).ok
    assert find_shelling(independence_complex(cycle_graph(4))) is None
    assert find_shell2_shelling(cycle_graph(4), {"1", "2", "3", "4"}) is None
    kn = complete_graph(4)
    assert find_shell2_shelling(kn, set(kn.vertices)) == ShellingOrder((0, 1, 2, 3))
    # without admissible vertices no multi-facet complex passes
    assert find_shell2_shelling(path_graph(3), set()) is None


def test_lexicographic_shelling_all_complete():
    base = cycle_graph(5)
    fam = uniform_family(base, complete_graph(2))
    base_order = find_shell2_shelling(base, {x for x, h, _ in fam.assign if is_complete(h)})
    assert base_order is not None
    order = lexicographic_shelling(fam, base_order, _component_orders(fam))
    assert verify_shelling(independence_complex(lexicographic_product(fam)), order).ok


def test_lexicographic_shelling_complete_base_one_free_slot():
    n = 3
    base = complete_graph(n)
    fam = make_family(
        base,
        {
            "1": (path_graph(3), None),
            "2": (complete_graph(2), None),
            "3": (complete_graph(1), None),
        },
    )
    complete_at = {x for x, h, _ in fam.assign if is_complete(h)}
    base_order = find_shell2_shelling(base, complete_at)
    assert base_order is not None
    order = lexicographic_shelling(fam, base_order, _component_orders(fam))
    assert verify_shelling(independence_complex(lexicographic_product(fam)), order).ok


def test_lexicographic_shelling_example_c():
    g = example_c_base()
    fam = make_family(
        g,
        {
            "a": (path_graph(3), None),
            "b": (complete_graph(2), None),
            "c": (path_graph(3), None),
            "d": (complete_graph(2), None),
            "e": (path_graph(3), None),
        },
    )
    order = lexicographic_shelling(fam, example_c_order(g), _component_orders(fam))
    prod = lexicographic_product(fam)
    assert verify_shelling(independence_complex(prod), order).ok


def test_lexicographic_shelling_rejects_bad_hypothesis():
    g = example_c_base()
    fam = uniform_family(g, path_graph(3))  # nothing complete
    with pytest.raises(GraphError, match="hypothesis"):
        lexicographic_shelling(fam, example_c_order(g), _component_orders(fam))

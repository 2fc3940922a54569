import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from icx import (
    GraphError,
    ResourceCapExceeded,
    ShellingOrder,
    build_graph,
    find_shelling,
    independence_complex,
    is_pure,
    is_shellable,
    is_unmixed,
    make_complex,
    verify_shelling,
)
from icx.generators import all_graphs, complete_graph, cycle_graph, path_graph

from oracles import shellable_by_permutations, shelling_ok_brute


def test_make_complex_validations():
    c = make_complex(["a", "b", "c"], [("a", "b"), ("c",)])
    assert c.facets == (frozenset({"a", "b"}), frozenset({"c"}))
    with pytest.raises(GraphError, match="antichain"):
        make_complex(["a", "b"], [("a",), ("a", "b")])
    with pytest.raises(GraphError, match="ground"):
        make_complex(["a"], [("b",)])
    with pytest.raises(GraphError, match="at least one facet"):
        make_complex(["a"], [])
    empty_face = make_complex([], [()])
    assert empty_face.facets == (frozenset(),)
    assert empty_face.dim == -1


def test_facet_order_is_lexicographic():
    c = make_complex(["1", "2", "3", "4"], [("2", "4"), ("1", "3")])
    assert c.facets == (frozenset({"1", "3"}), frozenset({"2", "4"}))


def test_independence_complex_pinned():
    c4 = independence_complex(cycle_graph(4))
    assert c4.facets == (frozenset({"1", "3"}), frozenset({"2", "4"}))
    k3 = independence_complex(complete_graph(3))
    assert k3.facets == tuple(frozenset({v}) for v in "123")
    zero = independence_complex(build_graph([], []))
    assert zero.facets == (frozenset(),)


def test_purity_and_unmixedness():
    assert not is_pure(independence_complex(path_graph(3)))
    assert is_pure(independence_complex(cycle_graph(4)))
    assert is_unmixed(cycle_graph(4))
    assert not is_unmixed(path_graph(3))


def test_verify_shelling_pinned():
    c4 = independence_complex(cycle_graph(4))
    verdict = verify_shelling(c4, [0, 1])
    assert not verdict.ok and verdict.witness == (1, 2)
    single = make_complex(["a"], [("a",)])
    assert verify_shelling(single, [0]).ok
    g = build_graph(list("abcde"), [("a", "b"), ("b", "c"), ("c", "d")])
    c = independence_complex(g)
    order = [c.facets.index(frozenset(f)) for f in ({"a", "c", "e"}, {"a", "d", "e"}, {"b", "d", "e"})]
    assert verify_shelling(c, order).ok


def test_verify_shelling_rejects_non_permutation():
    c4 = independence_complex(cycle_graph(4))
    with pytest.raises(GraphError, match="permutation"):
        verify_shelling(c4, [0, 0])
    with pytest.raises(GraphError, match="permutation"):
        verify_shelling(c4, [0])


def test_find_shelling_pinned():
    assert find_shelling(independence_complex(cycle_graph(4))) is None
    c5 = independence_complex(cycle_graph(5))
    order = find_shelling(c5)
    assert order is not None and verify_shelling(c5, order).ok
    kn = independence_complex(complete_graph(4))
    assert find_shelling(kn) == ShellingOrder((0, 1, 2, 3))


def test_find_shelling_deterministic_and_lex_first_on_pure():
    c5 = independence_complex(cycle_graph(5))
    found = find_shelling(c5).indices
    assert found == find_shelling(c5).indices
    # equal-size facets keep the facet-list priority, so the result is the
    # lexicographically least shelling there
    m = len(c5.facets)
    from itertools import permutations

    best = next(
        perm
        for perm in permutations(range(m))
        if shelling_ok_brute(list(c5.facets), perm)
    )
    assert found == best


def test_find_shelling_facet_cap():
    c5 = independence_complex(cycle_graph(5))
    with pytest.raises(ResourceCapExceeded):
        find_shelling(c5, facet_cap=3)


def test_cycle_shellability_law():
    for n in range(3, 10):
        assert is_shellable(cycle_graph(n)) == (n in (3, 5))


def test_empty_face_complex_is_shellable():
    assert find_shelling(make_complex([], [()])) == ShellingOrder((0,))


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=5), st.data())
def test_find_shelling_agrees_with_permutation_oracle(n, data):
    vs = [str(i) for i in range(1, n + 1)]
    pairs = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)]
    picked = [e for e in pairs if data.draw(st.booleans())]
    g = build_graph(vs, picked)
    c = independence_complex(g)
    if len(c.facets) > 7:
        return
    found = find_shelling(c)
    assert (found is not None) == shellable_by_permutations(list(c.facets))
    if found is not None:
        assert verify_shelling(c, found).ok


def test_union_shellability_multiplies():
    from icx import disjoint_union

    for g in all_graphs(3):
        for h in all_graphs(3):
            u = disjoint_union(g, h)
            assert is_shellable(u) == (is_shellable(g) and is_shellable(h))

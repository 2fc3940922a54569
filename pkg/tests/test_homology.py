import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from icx import (
    GraphError,
    ResourceCapExceeded,
    build_graph,
    graph_betti,
    independence_complex,
    is_cohen_macaulay,
    is_shellable,
    is_unmixed,
    link,
    make_complex,
    reduced_betti,
)
from icx.generators import all_graphs, complete_graph, cycle_graph, discrete_graph
from icx.homology import exact_rank, fold_graph

from oracles import rank_fraction_brute, reduced_euler


def _rows_from_dense(dense):
    return [
        {j: v for j, v in enumerate(row) if v}
        for row in dense
    ]


@pytest.mark.parametrize(
    "dense",
    [
        [[1, 0], [0, 1]],
        [[0, 0], [0, 0]],
        [[1, 2], [2, 4]],
        [[2, 4, 6], [3, 6, 9], [1, 0, 1]],
        [[5]],
        [[0]],
    ],
)
def test_exact_rank_small(dense):
    assert exact_rank(_rows_from_dense(dense)) == rank_fraction_brute(dense)


@settings(max_examples=200)
@given(
    st.lists(
        st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=6),
        min_size=1,
        max_size=6,
    ).filter(lambda rows: len({len(r) for r in rows}) == 1)
)
def test_exact_rank_matches_fraction_oracle(dense):
    assert exact_rank(_rows_from_dense(dense)) == rank_fraction_brute(dense)


def test_reduced_betti_pinned():
    c5 = reduced_betti(independence_complex(cycle_graph(5)))
    assert c5.entries == (0, 0, 1)  # a circle
    c4 = reduced_betti(independence_complex(cycle_graph(4)))
    assert c4.entries == (0, 1, 0)  # two disjoint edges
    point = reduced_betti(independence_complex(discrete_graph(1)))
    assert point.entries == (0, 0)
    empty_face = reduced_betti(make_complex([], [()]))
    assert empty_face.entries == (1,)


def test_reduced_betti_of_cone_vanishes():
    cone = make_complex(["a", "b", "c", "d"], [("a", "b", "c"), ("a", "d")])
    assert all(b == 0 for b in reduced_betti(cone).entries)


def test_link_pinned():
    c5 = independence_complex(cycle_graph(5))
    lk = link(c5, {"1"})
    assert lk.ground == ("3", "4")
    assert lk.facets == (frozenset({"3"}), frozenset({"4"}))
    assert link(c5, set()) == c5
    facet_link = link(c5, {"1", "3"})
    assert facet_link.facets == (frozenset(),)
    with pytest.raises(GraphError, match="not a face"):
        link(c5, {"1", "2"})


def test_link_matches_deleted_neighbourhood():
    from icx import delete_vertices, neighborhood

    for g in all_graphs(4):
        c = independence_complex(g)
        for x in g.vertices:
            lk = link(c, {x})
            sub = delete_vertices(g, neighborhood(g, x, closed=True))
            assert lk.facets == independence_complex(sub).facets


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=6), st.data())
def test_fold_preserves_betti(n, data):
    vs = [str(i) for i in range(1, n + 1)]
    pairs = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)]
    picked = [e for e in pairs if data.draw(st.booleans())]
    g = build_graph(vs, picked)
    raw = reduced_betti(independence_complex(g))
    folded = graph_betti(g)
    top = max(len(raw.entries), len(folded.entries)) - 1
    for i in range(-1, top):
        assert raw.get(i) == folded.get(i)


def test_fold_graph_examples():
    # leaves fold a path down to a single vertex or edge
    from icx.generators import path_graph

    folded = fold_graph(path_graph(4))
    assert len(folded.vertices) <= 2
    # a 5-cycle has no dominated neighbourhoods
    assert fold_graph(cycle_graph(5)) == cycle_graph(5)


def test_euler_identity_exhaustive_small():
    for g in all_graphs(4):
        c = independence_complex(g)
        betti = reduced_betti(c)
        alternating = sum((-1) ** i * betti.get(i) for i in range(-1, c.dim + 1))
        assert alternating == reduced_euler(list(c.facets))


def test_cohen_macaulay_pinned():
    assert is_cohen_macaulay(cycle_graph(5)).cm
    verdict = is_cohen_macaulay(cycle_graph(4))
    assert not verdict.cm
    assert verdict.witness == ((), 0)
    assert is_cohen_macaulay(complete_graph(4)).cm


def test_cohen_macaulay_face_cap():
    with pytest.raises(ResourceCapExceeded):
        is_cohen_macaulay(discrete_graph(5), face_cap=10)


def test_cm_implies_unmixed_and_pure_shellable_implies_cm():
    for n in range(1, 5):
        for g in all_graphs(n):
            cm = is_cohen_macaulay(g).cm
            if cm:
                assert is_unmixed(g)
            if is_unmixed(g) and is_shellable(g):
                assert cm

import json
from itertools import islice

import pytest

from icx import GraphError, SchemaError, build_graph, is_chordal
from icx.generators import (
    GeneratorSpec,
    all_graphs,
    cycle_graph,
    generate,
    star_graph,
)
from icx.io import (
    load_graph,
    parse_complex,
    parse_family,
    parse_graph,
    parse_order,
    save_graph,
    serialize_complex,
    serialize_family,
    serialize_graph,
    serialize_order,
)
from icx import independence_complex, make_family, ShellingOrder
from icx.generators import complete_graph, discrete_graph, path_graph


def test_named_generators():
    assert generate(GeneratorSpec("cycle", n=5)) is not None
    assert next(generate(GeneratorSpec("cycle", n=5))) == cycle_graph(5)
    assert len(list(generate(GeneratorSpec("all-graphs", n=3)))) == 8
    assert star_graph(4).edges == {("1", "2"), ("1", "3"), ("1", "4")}
    with pytest.raises(GraphError):
        list(generate(GeneratorSpec("all-graphs", n=7)))
    with pytest.raises(GraphError):
        generate(GeneratorSpec("möbius", n=3))


def test_all_graphs_stream_length():
    for n in range(5):
        expected = 1 << (n * (n - 1) // 2)
        assert sum(1 for _ in all_graphs(n)) == expected


def test_gnp_is_reproducible():
    a = list(islice(generate(GeneratorSpec("gnp", n=6, p=0.4, seed=11)), 5))
    b = list(islice(generate(GeneratorSpec("gnp", n=6, p=0.4, seed=11)), 5))
    assert a == b
    c = list(islice(generate(GeneratorSpec("gnp", n=6, p=0.4, seed=12)), 5))
    assert a != c


def test_chordal_random_is_chordal():
    stream = generate(GeneratorSpec("chordal-random", n=8, seed=7))
    for g in islice(stream, 10):
        assert is_chordal(g)
        assert len(g.vertices) == 8
    again = generate(GeneratorSpec("chordal-random", n=8, seed=7))
    assert next(again) == next(generate(GeneratorSpec("chordal-random", n=8, seed=7)))


def test_graph_round_trip(tmp_path):
    c4 = cycle_graph(4)
    data = serialize_graph(c4)
    assert parse_graph(data) == c4
    assert serialize_graph(parse_graph(data)) == data
    path = tmp_path / "c4.json"
    save_graph(c4, path)
    assert load_graph(path) == c4
    assert json.loads(path.read_text()) == data


def test_graph_schema_errors():
    with pytest.raises(SchemaError, match="missing field 'edges'"):
        parse_graph({"vertices": []})
    with pytest.raises(SchemaError, match="'edges'\\[0\\]"):
        parse_graph({"vertices": ["a"], "edges": [["a"]]})
    with pytest.raises(SchemaError, match="loop"):
        parse_graph({"vertices": ["a"], "edges": [["a", "a"]]})
    with pytest.raises(SchemaError, match="list of strings"):
        parse_graph({"vertices": [1], "edges": []})


def test_family_round_trip():
    base = path_graph(2)
    fam = make_family(base, {"1": (complete_graph(2), "1"), "2": (discrete_graph(1), None)})
    data = serialize_family(fam)
    back = parse_family(data)
    assert back == fam
    assert serialize_family(back) == data


def test_family_schema_errors():
    base = serialize_graph(path_graph(2))
    k1 = serialize_graph(discrete_graph(1))
    with pytest.raises(SchemaError, match="no assigned graph"):
        parse_family({"base": base, "assign": {"1": {"graph": k1}}})
    with pytest.raises(SchemaError, match="root"):
        parse_family(
            {"base": base, "assign": {"1": {"graph": k1, "root": "9"}, "2": {"graph": k1}}}
        )
    with pytest.raises(SchemaError, match="'graph'"):
        parse_family({"base": base, "assign": {"1": {}, "2": {"graph": k1}}})


def test_complex_and_order_round_trip():
    c = independence_complex(cycle_graph(5))
    data = serialize_complex(c)
    assert parse_complex(data) == c
    order = ShellingOrder((2, 0, 1, 3, 4))
    assert parse_order(serialize_order(order)) == order
    with pytest.raises(SchemaError):
        parse_order(["0"])
    with pytest.raises(SchemaError, match="antichain"):
        parse_complex({"ground": ["a", "b"], "facets": [["a"], ["a", "b"]]})

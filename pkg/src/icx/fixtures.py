"""Pinned instances that witness the one-way implications.

Each construction is mirrored by a JSON file under ``icx/fixtures/`` so the
instances used in reports stay stable; a test asserts file and constructor
agree.
"""

from __future__ import annotations

from importlib import resources

from .generators import complete_graph, cycle_graph, discrete_graph, path_graph
from .graph import Graph, delete_vertices
from .io import parse_graph
from .ops import lexicographic_product, make_family, rooted_product, uniform_family, corona


def c4_rooted_k2() -> Graph:
    """The 4-cycle with a pendant edge glued at every vertex."""
    return rooted_product(uniform_family(cycle_graph(4), complete_graph(2), root="1"))


def c3_cartesian_c3() -> Graph:
    from .ops import cartesian_product

    return cartesian_product(cycle_graph(3), cycle_graph(3))


def c4_corona_k1() -> Graph:
    return corona(uniform_family(cycle_graph(4), discrete_graph(1)))


def p3_lex_p3_minus_centre() -> Graph:
    """P3[P3] with the (middle, middle) vertex removed; the removed vertex is
    the shedding pair of both factors."""
    prod = lexicographic_product(uniform_family(path_graph(3), path_graph(3)))
    return delete_vertices(prod, {"(2|2)"})


def k2_lex_k1_p3() -> Graph:
    fam = make_family(
        complete_graph(2), {"1": (discrete_graph(1), None), "2": (path_graph(3), None)}
    )
    return lexicographic_product(fam)


def c4_lex_k2_k1_k1_k1() -> Graph:
    fam = make_family(
        cycle_graph(4),
        {
            "1": (complete_graph(2), None),
            "2": (discrete_graph(1), None),
            "3": (discrete_graph(1), None),
            "4": (discrete_graph(1), None),
        },
    )
    return lexicographic_product(fam)


def k2_lex_p3_k2() -> Graph:
    fam = make_family(
        complete_graph(2), {"1": (path_graph(3), None), "2": (complete_graph(2), None)}
    )
    return lexicographic_product(fam)


FIXTURES = {
    "c4_rooted_k2": c4_rooted_k2,
    "c3_cartesian_c3": c3_cartesian_c3,
    "c4_corona_k1": c4_corona_k1,
    "p3_lex_p3_minus_centre": p3_lex_p3_minus_centre,
    "k2_lex_k1_p3": k2_lex_k1_p3,
    "c4_lex_k2_k1_k1_k1": c4_lex_k2_k1_k1_k1,
    "k2_lex_p3_k2": k2_lex_p3_k2,
}


def fixture_graph(name: str) -> Graph:
    """Load a pinned fixture from its packaged JSON file."""
    import json

    text = resources.files("icx").joinpath(f"fixtures/{name}.json").read_text()
    return parse_graph(json.loads(text))

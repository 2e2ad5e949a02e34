import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_graphs
from oracles import all_colorings, is_hamiltonian_by_nx, quartets_brute

from dualham.coloring import (
    BLUE,
    RED,
    Quartet,
    TwoColoring,
    bichromatic_edges,
    color_class,
    flip,
    hamiltonian_bond_size,
    is_hamiltonian_bond,
    is_hamiltonian_coloring,
    is_quartet,
    jaeger_check,
)
from dualham.errors import ColoringError, GraphError, QuartetError
from dualham.generators import complete_graph, cycle_graph, hypercube, seed_basic
from dualham.graph import new_graph

# the cube-ladder seed at n = 1, on hypercube(3)
Q3_COLORS = "rrbrbbbr"
Q3_QUARTET = Quartet(7, 5, 3, 2)


def test_two_coloring_basics():
    c = TwoColoring.from_red(4, [0, 2])
    assert c.colors == "rbrb"
    assert c.swapped().colors == "brbr"
    assert c.vertices_of(RED) == {0, 2}
    assert color_class(cycle_graph(4), c, BLUE) == {1, 3}
    with pytest.raises(ColoringError):
        TwoColoring("rgb")
    with pytest.raises(ColoringError):
        color_class(cycle_graph(5), c, RED)


def test_flip():
    c = TwoColoring("rrbb")
    assert flip(c, [0, 3]).colors == "brbr"
    assert flip(flip(c, [1, 2]), [2, 1]) == c
    with pytest.raises(ColoringError):
        flip(c, [4])


def test_hamiltonian_on_c4():
    c4 = cycle_graph(4)
    assert is_hamiltonian_coloring(c4, TwoColoring("rrbb"))
    assert not is_hamiltonian_coloring(c4, TwoColoring("rbrb"))
    assert not is_hamiltonian_coloring(c4, TwoColoring("rrrr"))
    assert bichromatic_edges(c4, TwoColoring("rrbb")) == {(1, 2), (0, 3)}
    assert hamiltonian_bond_size(c4) == 2


def test_hamiltonian_requires_connected():
    with pytest.raises(GraphError):
        is_hamiltonian_coloring(new_graph(2), TwoColoring("rb"))


def test_bond_side_on_k4():
    k4 = complete_graph(4)
    assert hamiltonian_bond_size(k4) == 4
    assert is_hamiltonian_bond(k4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    # a bond, but only of size 3
    assert not is_hamiltonian_bond(k4, [(0, 1), (0, 2), (0, 3)])
    # the far side is a triangle, not a tree
    assert not jaeger_check(k4, [(0, 1), (0, 2), (0, 3)])
    assert jaeger_check(k4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert not jaeger_check(k4, [(0, 1)])


def test_q3_seed_quartet():
    g = hypercube(3)
    c = TwoColoring(Q3_COLORS)
    assert is_hamiltonian_coloring(g, c)
    report = is_quartet(g, c, Q3_QUARTET)
    assert report.ok and report.readings_agree
    assert Q3_QUARTET in [Quartet(*q) for q in quartets_brute(g, Q3_COLORS)]


def test_basic_seed_quartet():
    s = seed_basic()
    assert is_quartet(s.graph, s.coloring, s.quartet).ok
    # I and J swapped is not a quartet here
    q = s.quartet
    swapped = Quartet(q.j_red, q.j_blue, q.i_red, q.i_blue)
    assert not is_quartet(s.graph, s.coloring, swapped).ok


def test_quartet_failures_reported_per_condition():
    g, c = hypercube(3), TwoColoring(Q3_COLORS)
    wrong_colors = Quartet(5, 7, 3, 2)
    report = is_quartet(g, c, wrong_colors)
    assert not report.q1_holds
    with pytest.raises(QuartetError):
        is_quartet(g, c, Quartet(7, 5, 7, 2))
    with pytest.raises(QuartetError):
        is_quartet(g, c, Quartet(7, 5, 3, 8))
    with pytest.raises(ColoringError):
        is_quartet(g, TwoColoring("rbrbrbrb"), Q3_QUARTET)


def test_q3_witness_shape():
    g, c = hypercube(3), TwoColoring(Q3_COLORS)
    report = is_quartet(g, c, Q3_QUARTET)
    for k in (RED, BLUE):
        comps = report.q3_witness[k]
        assert len(comps) == 2
        assert sorted((w.meets_i > 0, w.meets_j > 0) for w in comps) == [(False, True), (True, False)]


def test_quartets_match_brute_force_on_small_graphs():
    for g in (cycle_graph(6), hypercube(3), seed_basic().graph):
        for colors in all_colorings(g.n):
            if not is_hamiltonian_by_nx(g, colors):
                continue
            c = TwoColoring(colors)
            expected = set(quartets_brute(g, colors))
            got = {q for q in itertools.permutations(range(g.n), 4) if is_quartet(g, c, Quartet(*q)).ok}
            assert got == expected, colors


@settings(max_examples=120, deadline=None)
@given(connected_graphs(min_n=2, max_n=7), st.data())
def test_coloring_and_bond_views_agree(g, data):
    colors = data.draw(st.text(alphabet="rb", min_size=g.n, max_size=g.n))
    c = TwoColoring(colors)
    ham = is_hamiltonian_coloring(g, c)
    assert ham == is_hamiltonian_by_nx(g, colors)
    b = bichromatic_edges(g, c)
    if 0 < colors.count("r") < g.n:
        assert ham == is_hamiltonian_bond(g, b) == jaeger_check(g, b)

import pytest

from oracles import hamiltonian_colorings_brute

from dualham.coloring import TwoColoring, is_quartet
from dualham.errors import GraphError
from dualham.generators import (
    complete_graph,
    counterexample_graph,
    cycle_graph,
    grid,
    hypercube,
    nonisomorphic_trees,
    seed_cube_ladder,
)
from dualham.graph import Graph, new_graph
from dualham.lift import lift
from dualham.solver import (
    ABORTED,
    FOUND,
    NONE_EXHAUSTIVE,
    Budget,
    census,
    density_bound_ok,
    density_check,
    enumerate_hamiltonian_colorings,
    find_quartet,
    find_quartet_coloring,
    is_dual_hamiltonian,
    iter_hamiltonian_colorings,
)


def _strings(cs):
    return [c.colors for c in cs]


def test_c4_colorings():
    # single vertices count as trees, so besides the two 2|2 splits the four
    # 1|3 splits are hamiltonian too
    got = _strings(enumerate_hamiltonian_colorings(cycle_graph(4)))
    assert got == ["rbbb", "rbbr", "rbrr", "rrbb", "rrbr", "rrrb"]
    brute = hamiltonian_colorings_brute(cycle_graph(4))
    assert len(brute) == 2 * len(got)
    assert sorted(got) == sorted(c for c in brute if c[0] == "r")


def test_k4_colorings():
    got = _strings(enumerate_hamiltonian_colorings(complete_graph(4)))
    assert got == ["rbbr", "rbrb", "rrbb"]


@pytest.mark.parametrize(
    "g",
    [cycle_graph(5), cycle_graph(6), complete_graph(5), hypercube(2), grid([1, 2])]
    + [t for n in range(2, 7) for t in nonisomorphic_trees(n)],
)
def test_symmetry_breaking_is_lossless(g):
    got = _strings(enumerate_hamiltonian_colorings(g))
    brute = hamiltonian_colorings_brute(g)
    assert len(brute) == 2 * len(got)
    assert got == sorted(c for c in brute if c[0] == "r")


def test_workers_match_sequential():
    g = grid([2, 3])
    assert enumerate_hamiltonian_colorings(g, workers=3) == enumerate_hamiltonian_colorings(g)


def test_iterator_is_lazy():
    it = iter_hamiltonian_colorings(hypercube(4))
    assert isinstance(next(it), TwoColoring)


def test_input_checks():
    with pytest.raises(GraphError):
        enumerate_hamiltonian_colorings(new_graph(3))
    with pytest.raises(GraphError):
        enumerate_hamiltonian_colorings(cycle_graph(10), cap=8)
    # a budget lifts the cap
    assert is_dual_hamiltonian(cycle_graph(10), Budget(max_nodes=10_000), cap=8).status == FOUND


def test_budget_abort():
    res = is_dual_hamiltonian(complete_graph(12), Budget(max_nodes=5))
    assert res.status == ABORTED and res.witness is None


def test_decisions():
    assert is_dual_hamiltonian(hypercube(2)).status == FOUND
    assert is_dual_hamiltonian(complete_graph(5)).status == NONE_EXHAUSTIVE
    res = is_dual_hamiltonian(hypercube(3))
    assert res.found


def test_find_quartet_examples():
    s = seed_cube_ladder(1)
    q = find_quartet(s.graph, s.coloring)
    assert q is not None and is_quartet(s.graph, s.coloring, q).ok
    assert find_quartet(cycle_graph(4), TwoColoring("rrbb")) is None
    g = counterexample_graph()
    assert find_quartet(g, TwoColoring("rrrrbbbb")) is None


def test_find_quartet_coloring():
    res = find_quartet_coloring(hypercube(3))
    assert res.status == FOUND
    assert is_quartet(res.witness.graph, res.witness.coloring, res.witness.quartet).ok
    assert find_quartet_coloring(counterexample_graph()).status == NONE_EXHAUSTIVE


def test_density():
    assert density_bound_ok(4, 6) and not density_bound_ok(5, 10)
    assert density_check(complete_graph(5)) == frozenset(range(5))
    assert density_check(complete_graph(4)) is None
    assert density_check(hypercube(3)) is None
    # K5 plus a pendant vertex: the violation is the K5 inside
    g = Graph(6, complete_graph(5).edges + ((4, 5),))
    assert density_check(g) == frozenset(range(5))
    # whole-graph only above the subset cap
    assert density_check(g, subset_cap=4) is None


def test_census_small():
    rows = census([("K5", complete_graph(5)), ("Q2", hypercube(2)), ("Q3", hypercube(3))])
    k5, q2, q3 = rows
    assert (k5.dual_hamiltonian, k5.quartet_coloring) == ("no", "no")
    assert k5.density_violation == (0, 1, 2, 3, 4)
    assert q2.dual_hamiltonian == "yes" and q2.quartet_coloring == "no"
    assert q3.dual_hamiltonian == "yes" and q3.quartet_coloring == "yes"
    assert q3.quartet_witness is not None


def test_census_grids():
    rows = census([(f"grid{m}x{n}", grid([m, n])) for m in (2, 3) for n in (3, 4)])
    assert all(r.dual_hamiltonian == "yes" and r.quartet_coloring == "yes" for r in rows)


def test_lift_vs_search():
    seed = seed_cube_ladder(1)
    for n in range(1, 6):
        for t in nonisomorphic_trees(n):
            out = lift(seed, t)
            assert is_dual_hamiltonian(out.graph, cap=40).found
            assert find_quartet(out.graph, out.coloring) is not None

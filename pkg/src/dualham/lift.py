"""Lifting a hamiltonian coloring with a quartet from ``G`` to ``G x T``.

Root the tree ``T`` at a leaf ``r``.  Fibers at even depth copy the seed
coloring ``C``; fibers at odd depth take ``C`` with every vertex flipped
except the two members of ``I``.  The copies of ``i_red`` therefore stay
red along the whole tree (likewise ``i_blue``), and those two tree-shaped
rails are the only monochromatic links between neighbouring fibers.  The
result is hamiltonian with quartet ``(J_r, I_l)`` for any leaf ``l != r``.

Nothing built here is trusted: the output goes through
:class:`SeedInstance` verification before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .coloring import (
    BLUE,
    RED,
    Quartet,
    QuartetReport,
    TwoColoring,
    is_hamiltonian_coloring,
    is_quartet,
    opposite,
)
from .errors import ColoringError, DualHamError, LiftError, QuartetError, VerificationError
from .graph import Graph, Tree, bfs_tree, bridges, edge, induced_subgraph, is_connected, leaves
from .product import ProductGraph, cartesian_product


class InvalidSeed(ColoringError):
    """Graph, coloring and quartet do not form a hamiltonian coloring with a quartet."""

    def __init__(self, message: str, report: QuartetReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class SeedInstance:
    """A connected graph with a verified hamiltonian coloring and quartet."""

    graph: Graph
    coloring: TwoColoring
    quartet: Quartet

    def __post_init__(self) -> None:
        if not is_connected(self.graph):
            raise InvalidSeed("seed graph is not connected")
        if len(self.coloring) != self.graph.n:
            raise InvalidSeed("coloring does not cover the graph")
        if not is_hamiltonian_coloring(self.graph, self.coloring):
            raise InvalidSeed("coloring is not hamiltonian")
        try:
            self.quartet.check_structure(self.graph.n)
        except QuartetError as exc:
            raise InvalidSeed(str(exc)) from exc
        report = is_quartet(self.graph, self.coloring, self.quartet)
        if not report.ok:
            failed = [
                name
                for name, ok in (("Q1", report.q1_holds), ("Q2", report.q2_holds), ("Q3", report.q3_holds))
                if not ok
            ]
            raise InvalidSeed(f"quartet fails {', '.join(failed)}", report)


@dataclass(frozen=True)
class Lift:
    """A lift result together with what it was built from."""

    seed: SeedInstance
    tree: Tree  # rooted at r
    r: int
    l: int
    product: ProductGraph
    instance: SeedInstance

    def tree_edges(self) -> tuple[tuple[int, int], ...]:
        return self.tree.graph.edges


def _as_graph(t: Tree | Graph) -> Graph:
    return t.graph if isinstance(t, Tree) else t


def default_leaves(t: Tree | Graph, order: str = "min-max") -> tuple[int, int]:
    """Default ``(r, l)``: smallest and largest leaf id, or reversed for ``"max-min"``."""
    lv = leaves(_as_graph(t))
    if order == "min-max":
        return lv[0], lv[-1]
    if order == "max-min":
        return lv[-1], lv[0]
    raise LiftError(f"unknown leaf order {order!r}")


def lifted_coloring(seed: SeedInstance, product: ProductGraph, depth: Sequence[int]) -> TwoColoring:
    c = seed.coloring
    keep = set(seed.quartet.I)
    chars = []
    for x in range(product.index.h_size):
        odd = depth[x] % 2 == 1
        for v in range(product.index.g_size):
            chars.append(opposite(c[v]) if odd and v not in keep else c[v])
    return TwoColoring("".join(chars))


def lift_trace(seed: SeedInstance, t: Tree | Graph, r: int | None = None, l: int | None = None) -> Lift:
    tg = _as_graph(t)
    if tg.n == 0:
        raise LiftError("cannot lift over an empty tree")
    rooted = bfs_tree(tg, 0)  # also rejects non-trees
    product = cartesian_product(seed.graph, tg)
    if tg.n == 1:
        return Lift(seed, rooted, 0, 0, product, seed)

    lv = leaves(tg)
    d_r, d_l = default_leaves(tg)
    r = d_r if r is None else r
    l = d_l if l is None else l
    if r not in lv:
        raise LiftError(f"root {r} is not a leaf of the tree")
    if l not in lv:
        raise LiftError(f"target {l} is not a leaf of the tree")
    if l == r:
        raise LiftError("root and target leaf must differ")
    rooted = bfs_tree(tg, r)

    coloring = lifted_coloring(seed, product, rooted.depth)
    q = seed.quartet
    flat = product.index.flat
    quartet = Quartet(
        i_red=flat(q.j_red, r),
        i_blue=flat(q.j_blue, r),
        j_red=flat(q.i_red, l),
        j_blue=flat(q.i_blue, l),
    )
    try:
        instance = SeedInstance(product.graph, coloring, quartet)
    except DualHamError as exc:
        raise VerificationError(f"lifted instance failed verification: {exc}") from exc
    return Lift(seed, rooted, r, l, product, instance)


def lift(seed: SeedInstance, t: Tree | Graph, r: int | None = None, l: int | None = None) -> SeedInstance:
    """Hamiltonian coloring with quartet on ``G x T``; a one-vertex ``T`` returns ``seed``."""
    return lift_trace(seed, t, r, l).instance


TreeStep = Union[Tree, Graph, tuple]


def lift_chain(seed: SeedInstance, trees: Iterable[TreeStep]) -> SeedInstance:
    """Fold :func:`lift` over ``trees``; items are a tree or ``(tree, r, l)``."""
    for step in trees:
        if isinstance(step, tuple):
            t, r, l = step
            seed = lift(seed, t, r, l)
        else:
            seed = lift(seed, step)
    return seed


# --- post-construction checks -------------------------------------------------


def cross_fiber_monochromatic(result: Lift, x: int, y: int, k: str) -> list[tuple[int, int]]:
    d = result.instance.coloring
    g_size = result.product.index.g_size
    out = []
    for v in range(g_size):
        a, b = x * g_size + v, y * g_size + v
        if d[a] == k and d[b] == k:
            out.append(edge(a, b))
    return out


def check_claim1(result: Lift) -> bool:
    """Per tree edge ``xy`` and color ``k``: the only ``k``-edge between ``G_x`` and
    ``G_y`` is the one joining the copies of ``i_k``."""
    if result.tree.n == 1:
        return True
    q = result.seed.quartet
    flat = result.product.index.flat
    for x, y in result.tree_edges():
        for k, i_k in ((RED, q.i_red), (BLUE, q.i_blue)):
            if cross_fiber_monochromatic(result, x, y, k) != [edge(flat(i_k, x), flat(i_k, y))]:
                return False
    return True


def check_claim2(result: Lift) -> bool:
    """The rail edge ``(i_k, x)(i_k, y)`` is a bridge of the subgraph induced by class ``k``."""
    if result.tree.n == 1:
        return True
    q = result.seed.quartet
    flat = result.product.index.flat
    d = result.instance.coloring
    for k, i_k in ((RED, q.i_red), (BLUE, q.i_blue)):
        sub, ids = induced_subgraph(result.product.graph, d.vertices_of(k))
        local = {v: n for n, v in enumerate(ids)}
        cut = bridges(sub)
        for x, y in result.tree_edges():
            if edge(local[flat(i_k, x)], local[flat(i_k, y)]) not in cut:
                return False
    return True


def check_fiber_restrictions(result: Lift) -> bool:
    """The lifted coloring restricted to every fiber is hamiltonian on ``G``."""
    d = result.instance.coloring.colors
    g_size = result.product.index.g_size
    for x in range(result.product.index.h_size):
        part = TwoColoring(d[x * g_size:(x + 1) * g_size])
        if not is_hamiltonian_coloring(result.seed.graph, part):
            return False
    return True


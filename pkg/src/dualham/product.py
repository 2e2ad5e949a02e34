"""Cartesian products of graphs.

Pair ``(v, x)`` with ``v`` in the first factor and ``x`` in the second gets
the flat id ``x * |G| + v``, so each fiber ``G_x`` is a contiguous id range.
n-ary products are left folds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .errors import GraphError
from .graph import Graph


@dataclass(frozen=True)
class ProductIndex:
    g_size: int
    h_size: int

    @property
    def size(self) -> int:
        return self.g_size * self.h_size

    def flat(self, v: int, x: int) -> int:
        if not (0 <= v < self.g_size and 0 <= x < self.h_size):
            raise GraphError(f"pair ({v}, {x}) outside {self.g_size} x {self.h_size}")
        return x * self.g_size + v

    def pair(self, flat_id: int) -> tuple[int, int]:
        if not 0 <= flat_id < self.size:
            raise GraphError(f"flat id {flat_id} outside [0, {self.size})")
        x, v = divmod(flat_id, self.g_size)
        return v, x

    def label(self, flat_id: int) -> str:
        v, x = self.pair(flat_id)
        return f"{v}@{x}"


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    index: ProductIndex

    def fiber(self, x: int) -> range:
        """Flat ids of ``V(G) x {x}``."""
        if not 0 <= x < self.index.h_size:
            raise GraphError(f"fiber {x} outside [0, {self.index.h_size})")
        start = x * self.index.g_size
        return range(start, start + self.index.g_size)


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    if g.n == 0 or h.n == 0:
        raise GraphError("cartesian product needs nonempty factors")
    index = ProductIndex(g.n, h.n)
    edges = [(x * g.n + u, x * g.n + v) for x in range(h.n) for u, v in g.edges]
    edges += [(x * g.n + u, y * g.n + u) for x, y in h.edges for u in range(g.n)]
    return ProductGraph(Graph(g.n * h.n, tuple(edges)), index)


def fiber_vertices(p: ProductGraph, x: int) -> frozenset[int]:
    return frozenset(p.fiber(x))


def product_of(graphs: Iterable[Graph]) -> Graph:
    """Left-associated product of one or more graphs."""
    graphs = list(graphs)
    if not graphs:
        raise GraphError("product_of needs at least one factor")
    return reduce(lambda acc, h: cartesian_product(acc, h).graph, graphs[1:], graphs[0])

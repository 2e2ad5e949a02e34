"""Simple undirected graphs on dense integer vertex ids.

Vertices are ``0..n-1``; edges are stored canonically as ``(min, max)``
pairs in lexicographic order so that iteration, serialization and DOT
output are deterministic.  Graphs are immutable once built.

Bonds
-----
A bond of a connected graph is a minimal edge set whose deletion
disconnects it.  For connected ``g`` this is equivalent to: deleting ``b``
leaves exactly two components and every edge of ``b`` runs between them.
If a third component appeared, or some edge of ``b`` stayed inside one
side, putting that edge back (or the edges towards the third part) would
still leave ``g`` disconnected, so ``b`` was not minimal.  Conversely, with
two sides and every edge crossing, restoring any single edge of ``b``
reconnects the two sides.  :func:`is_bond` uses this characterization;
the test-suite cross-checks it against subset minimality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import GraphError

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical form of the unordered pair ``{u, v}``."""
    return (u, v) if u < v else (v, u)


def _canonical_edges(n: int, pairs: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
    seen = set()
    for pair in pairs:
        u, v = pair
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) references a vertex outside [0, {n})")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        seen.add(edge(u, v))
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph.

    ``Graph(4, [(0, 1), (1, 2)])`` validates and canonicalizes its input;
    duplicate edges collapse.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        object.__setattr__(self, "edges", _canonical_edges(self.n, self.edges))

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitsets."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edge_set

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range [0, {self.n})")
        return v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def new_graph(vertex_count: int, edges: Iterable[Iterable[int]] = ()) -> Graph:
    return Graph(vertex_count, tuple(tuple(e) for e in edges))


def edge_set(pairs: Iterable[Iterable[int]]) -> frozenset[Edge]:
    """Canonicalize an iterable of vertex pairs into an edge set."""
    return frozenset(edge(int(u), int(v)) for u, v in pairs)


# --- connectivity -----------------------------------------------------------


def _bfs(adj: tuple[tuple[int, ...], ...], start: int, allowed: set[int] | None) -> list[int]:
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen and (allowed is None or w in allowed):
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest member."""
    return induced_components(g, range(g.n))


def induced_components(g: Graph, s: Iterable[int]) -> list[frozenset[int]]:
    """Components of ``g[s]`` in original ids, ordered by smallest member."""
    allowed = set(s)
    out = []
    done: set[int] = set()
    for v in sorted(allowed):
        if v in done:
            continue
        comp = _bfs(g.adj, v, allowed)
        done.update(comp)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has exactly one component.  The empty graph is not connected."""
    if g.n == 0:
        return False
    return len(_bfs(g.adj, 0, None)) == g.n


def induced_edge_count(g: Graph, s: Iterable[int]) -> int:
    members = set(s)
    return sum(1 for u, v in g.edges if u in members and v in members)


def induces_tree(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``s`` is nonempty and ``g[s]`` is a tree."""
    members = set(s)
    if not members:
        return False
    if induced_edge_count(g, members) != len(members) - 1:
        return False
    return len(_bfs(g.adj, next(iter(members)), members)) == len(members)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(g[s], ids)`` where ``ids[k]`` is the original id of new vertex ``k``.

    New ids follow ascending original ids.
    """
    ids = tuple(sorted(set(s)))
    for v in ids:
        g.check_vertex(v)
    relabel = {v: k for k, v in enumerate(ids)}
    sub = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u in relabel and v in relabel
    ]
    return Graph(len(ids), tuple(sub)), ids


def is_tree(g: Graph) -> bool:
    """Connected with ``m == n - 1``; the empty graph is not a tree."""
    return g.n > 0 and g.m == g.n - 1 and is_connected(g)


def is_forest(g: Graph) -> bool:
    # a graph is acyclic iff m == n - (number of components)
    return g.m == g.n - len(components(g))


# --- edge deletion, bonds, bridges -------------------------------------------


def _require_edges(g: Graph, b: Iterable[Iterable[int]]) -> frozenset[Edge]:
    es = edge_set(b)
    missing = es - g.edge_set
    if missing:
        raise GraphError(f"not edges of the graph: {sorted(missing)}")
    return es


def delete_edges(g: Graph, b: Iterable[Iterable[int]]) -> Graph:
    es = _require_edges(g, b)
    return Graph(g.n, tuple(e for e in g.edges if e not in es))


def is_bond(g: Graph, b: Iterable[Iterable[int]]) -> bool:
    """Whether ``b`` is a bond (minimal disconnecting edge set) of connected ``g``."""
    if not is_connected(g):
        raise GraphError("is_bond requires a connected graph")
    es = _require_edges(g, b)
    comps = components(delete_edges(g, es))
    if len(comps) != 2:
        return False
    side = comps[0]
    return all((u in side) != (v in side) for u, v in es)


def bridges(g: Graph) -> frozenset[Edge]:
    """Edges whose removal increases the number of components (iterative Tarjan)."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: set[Edge] = set()
    clock = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frames: (vertex, parent, neighbour iterator)
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, u, iter(g.adj[w])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if low[u] > disc[parent]:
                    out.add(edge(parent, u))
    return frozenset(out)


# --- rooted trees ------------------------------------------------------------


@dataclass(frozen=True)
class Tree:
    """A tree together with a root and BFS depths from that root."""

    graph: Graph
    root: int
    depth: tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.graph.n

    def rerooted(self, root: int) -> Tree:
        return bfs_tree(self.graph, root)


def bfs_tree(g: Graph, root: int = 0) -> Tree:
    if not is_tree(g):
        raise GraphError("bfs_tree requires a tree")
    g.check_vertex(root)
    depth = [-1] * g.n
    depth[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if depth[w] == -1:
                depth[w] = depth[u] + 1
                queue.append(w)
    return Tree(g, root, tuple(depth))


def leaves(t: Tree | Graph) -> list[int]:
    """Degree-one vertices in ascending order; ``[root]`` for a single-vertex tree."""
    g = t.graph if isinstance(t, Tree) else t
    if g.n == 1:
        return [t.root if isinstance(t, Tree) else 0]
    return [v for v in range(g.n) if g.degree(v) == 1]

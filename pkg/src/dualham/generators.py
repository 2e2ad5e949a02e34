"""Graph families and explicit seed instances.

``P_n`` is the path with ``n`` edges throughout.  Every function returning
a :class:`~dualham.lift.SeedInstance` returns a verified one; if a pattern
fails verification a :class:`~dualham.errors.VerificationError` is raised
rather than anything being patched up.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import figures
from .coloring import Quartet, TwoColoring
from .errors import DualHamError, GraphError, VerificationError
from .graph import Graph, Tree, bfs_tree, induced_components
from .lift import SeedInstance
from .product import product_of

HYPERCUBE_MAX_DIM = 20


def path(n: int) -> Tree:
    """``P_n``: vertices ``0..n`` in a line, rooted at 0."""
    if n < 0:
        raise GraphError(f"path length must be nonnegative, got {n}")
    return bfs_tree(Graph(n + 1, tuple((k, k + 1) for k in range(n))), 0)


def hypercube(n: int, max_dim: int = HYPERCUBE_MAX_DIM) -> Graph:
    """``Q_n`` on ``{0,1}^n``; vertex id is the binary encoding, bit ``i`` the ``i``-th coordinate."""
    if n < 1:
        raise GraphError(f"hypercube dimension must be >= 1, got {n}")
    if n > max_dim:
        raise GraphError(f"hypercube dimension {n} exceeds cap {max_dim}")
    edges = [(v, v | (1 << i)) for v in range(1 << n) for i in range(n) if not v >> i & 1]
    return Graph(1 << n, tuple(edges))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((k, (k + 1) % n) for k in range(n)))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, k) for k in range(1, leaves + 1)))


@dataclass(frozen=True)
class GridSpec:
    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(self.dims))
        if not self.dims:
            raise GraphError("grid needs at least one dimension")
        if any(d < 1 for d in self.dims):
            raise GraphError(f"grid dimensions are path edge counts and must be >= 1: {self.dims}")


def grid(spec: GridSpec | Sequence[int]) -> Graph:
    """Left-fold product of ``path(d)`` over the dimensions."""
    if not isinstance(spec, GridSpec):
        spec = GridSpec(tuple(spec))
    return product_of(path(d).graph for d in spec.dims)


# --- tree enumeration ---------------------------------------------------------


def _prufer_decode(seq: Sequence[int], n: int) -> Graph:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (k for k in range(n) if degree[k] == 1)
    edges.append((u, w))
    return Graph(n, tuple(edges))


def _rooted_code(g: Graph, v: int, parent: int) -> str:
    return "(" + "".join(sorted(_rooted_code(g, w, v) for w in g.adj[v] if w != parent)) + ")"


def tree_code(g: Graph) -> str:
    """Canonical string of a free tree (AHU encoding rooted at a centre)."""
    remaining = set(range(g.n))
    degree = {v: g.degree(v) for v in remaining}
    layer = [v for v in remaining if degree[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for v in layer:
            remaining.discard(v)
            for w in g.adj[v]:
                if w in remaining:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return min(_rooted_code(g, c, -1) for c in remaining)


def nonisomorphic_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on ``n`` vertices.

    Brute force over Prüfer sequences; meant for ``n <= 9``.
    """
    if n < 1:
        raise GraphError("trees need at least one vertex")
    if n == 1:
        return [Graph(1)]
    if n == 2:
        return [Graph(2, ((0, 1),))]
    found: dict[str, Graph] = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        g = _prufer_decode(seq, n)
        found.setdefault(tree_code(g), g)
    return [found[k] for k in sorted(found)]


# --- seeds ----------------------------------------------------------------------


def _verified(graph: Graph, coloring: TwoColoring, quartet: Quartet, what: str) -> SeedInstance:
    try:
        return SeedInstance(graph, coloring, quartet)
    except DualHamError as exc:
        raise VerificationError(f"{what}: {exc}") from exc


def cube_ladder_column(k: int) -> dict[str, str]:
    """Colors of column ``k``: the drawn columns, continued with period two after column 0."""
    cols = figures.CUBE_LADDER_COLUMNS
    if k < len(cols):
        return cols[k]
    return cols[1] if k % 2 else cols[2]


def seed_cube_ladder(n: int) -> SeedInstance:
    """``P1 x P1 x Pn`` with the cube-ladder coloring; ``n = 1`` gives ``Q3``."""
    if n < 1:
        raise GraphError(f"cube ladder needs n >= 1, got {n}")
    g = grid([1, 1, n])
    chars = [""] * g.n
    for k in range(n + 1):
        for pos, color in cube_ladder_column(k).items():
            chars[4 * k + figures.SQUARE_IDS[pos]] = color
    vid = {
        role: 4 * col + figures.SQUARE_IDS[pos]
        for role, (col, pos) in figures.CUBE_LADDER_QUARTET.items()
    }
    return _verified(g, TwoColoring("".join(chars)), Quartet(**vid), f"cube ladder n={n}")


def grid_pattern(m: int, n: int) -> tuple[list[str], dict[str, tuple[int, int]]]:
    """Row strings and quartet cells for the ``Pm x Pn`` seed.

    Rows run along the first factor (``m + 1`` cells), there are ``n + 1``
    of them.  The rightmost column is blue, the leftmost red, and interior
    cells are red on odd rows and blue on even rows.  For even ``n`` the top
    left corner is blue as well.  ``n = 3`` is too short for that comb to
    carry a quartet, so it uses a staircase instead.
    """
    if m < 2 or n < 3:
        raise GraphError(f"grid seeds need m >= 2 and n >= 3, got ({m}, {n})")
    width, last = m + 1, n
    if n == 3:
        rows = ["r" * width, "r" + "b" * m, "r" * m + "b", "b" * width]
        cells = {"i_red": (0, m), "i_blue": (3, 0), "j_red": (1, 0), "j_blue": (2, m)}
        return rows, cells
    rows = []
    for r in range(n + 1):
        left = "b" if (r == 0 and n % 2 == 0) else "r"
        interior = ("r" if r % 2 else "b") * (width - 2)
        rows.append(left + interior + "b")
    if n % 2:
        cells = {"i_red": (0, 0), "i_blue": (last, m), "j_red": (2, 0), "j_blue": (3, m)}
    else:
        cells = {"i_red": (last, 0), "i_blue": (0, 0), "j_red": (2, 0), "j_blue": (1, m)}
    return rows, cells


def seed_grid(m: int, n: int) -> SeedInstance:
    rows, cells = grid_pattern(m, n)
    g = grid([m, n])
    coloring = TwoColoring("".join(rows))
    quartet = Quartet(**{role: r * (m + 1) + c for role, (r, c) in cells.items()})
    return _verified(g, coloring, quartet, f"grid seed ({m}, {n})")


def seed_basic() -> SeedInstance:
    """The six-vertex example graph with its drawn coloring and quartet."""
    ids = {name: k for k, name in enumerate(figures.BASIC_VERTICES)}
    g = Graph(len(ids), tuple((ids[u], ids[v]) for u, v in figures.BASIC_EDGES))
    coloring = TwoColoring("".join(figures.BASIC_COLORS[name] for name in figures.BASIC_VERTICES))
    quartet = Quartet(**{role: ids[name] for role, name in figures.BASIC_QUARTET.items()})
    return _verified(g, coloring, quartet, "basic example")


def example_tree() -> tuple[Tree, int, int]:
    """The 11-vertex example tree, rooted at its marked leaf, with its target leaf."""
    ids = {name: k for k, name in enumerate(figures.EXAMPLE_TREE_VERTICES)}
    g = Graph(len(ids), tuple((ids[u], ids[v]) for u, v in figures.EXAMPLE_TREE_EDGES))
    r, l = ids[figures.EXAMPLE_TREE_ROOT], ids[figures.EXAMPLE_TREE_TARGET]
    return bfs_tree(g, r), r, l


def counterexample_graph() -> Graph:
    """Two 4-vertex paths (0-1-2-3 and 4-5-6-7) joined by all 16 cross edges."""
    edges = [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]
    edges += [(u, v) for u in range(4) for v in range(4, 8)]
    return Graph(8, tuple(edges))


def forest_partitions(g: Graph) -> Iterator[frozenset[int]]:
    """Unordered 2-partitions ``{S, V - S}`` (``0 in S``) where both sides induce forests.

    Plain enumeration over all ``2^(n-1)`` partitions; an oracle, not a solver.
    """
    rest = range(1, g.n)
    for bits in range(1 << (g.n - 1)):
        s = frozenset([0] + [v for k, v in enumerate(rest) if bits >> k & 1])
        ok = True
        for side in (s, frozenset(g.vertices()) - s):
            comps = induced_components(g, side)
            m = sum(1 for u, v in g.edges if u in side and v in side)
            if m != len(side) - len(comps):
                ok = False
                break
        if ok:
            yield s

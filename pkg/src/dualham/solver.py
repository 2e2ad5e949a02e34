"""Exhaustive search for hamiltonian colorings and quartets.

Deciding dual-hamiltonicity is NP-complete, so everything here is exact
search meant for small graphs.  The search assigns colors vertex by vertex
(vertex 0 first and always red, then by descending degree) and prunes a
partial assignment as soon as

* a color class contains a cycle (union-find with rollback), or
* some color class can no longer be connected through uncolored vertices
  (flood fill over integer bitsets).

Vertex sets are Python ints used as bitsets, so the 64/128 word limits of
a fixed-width representation do not apply; :data:`DEFAULT_CAP` bounds the
input size instead.

Budgets count search nodes and wall-clock milliseconds.  Running out gives
an ``aborted-budget`` result, never a guess.
"""

from __future__ import annotations

import itertools
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .coloring import BLUE, RED, Quartet, TwoColoring, is_hamiltonian_coloring, is_quartet
from .errors import BudgetExceeded, ColoringError, GraphError
from .graph import Graph, is_connected
from .lift import SeedInstance

log = logging.getLogger(__name__)

FOUND = "found"
NONE_EXHAUSTIVE = "none-exhaustive"
ABORTED = "aborted-budget"

CAP_ENV = "DUALHAM_SOLVER_CAP"
DEFAULT_CAP = 28


def solver_cap() -> int:
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


@dataclass(frozen=True)
class Budget:
    max_nodes: int | None = None
    max_ms: int | None = None


@dataclass
class SolveResult:
    status: str
    witness: TwoColoring | SeedInstance | None = None
    colorings_enumerated: int = 0
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def found(self) -> bool:
        return self.status == FOUND


# --- bitset helpers -----------------------------------------------------------


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from bitset ``start`` inside ``allowed``."""
    seen = frontier = start
    while frontier:
        nb = 0
        for v in _bits(frontier):
            nb |= adj[v]
        frontier = nb & allowed & ~seen
        seen |= frontier
    return seen


def _edge_count(adj: Sequence[int], s: int) -> int:
    return sum((adj[v] & s).bit_count() for v in _bits(s)) // 2


def _mask_components(adj: Sequence[int], s: int) -> list[int]:
    out = []
    while s:
        comp = _reach(adj, s & -s, s)
        out.append(comp)
        s &= ~comp
    return out


def _mask_is_tree(adj: Sequence[int], s: int) -> bool:
    if not s:
        return False
    return _edge_count(adj, s) == s.bit_count() - 1 and _reach(adj, s & -s, s) == s


# --- backtracking ---------------------------------------------------------------


class _Search:
    def __init__(self, g: Graph, budget: Budget | None):
        self.g = g
        self.adj = g.adj_mask
        rest = sorted(range(1, g.n), key=lambda v: (-g.degree(v), v))
        self.order = [0] + rest
        self.budget = budget or Budget()
        self.nodes = 0
        self.start = time.monotonic()
        self.parent = list(range(g.n))
        self.rank = [0] * g.n

    def _find(self, v: int) -> int:
        while self.parent[v] != v:
            v = self.parent[v]
        return v

    def _tick(self) -> None:
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise BudgetExceeded(f"node budget {b.max_nodes} exhausted")
        if b.max_ms is not None and self.nodes % 256 == 0:
            if (time.monotonic() - self.start) * 1000 > b.max_ms:
                raise BudgetExceeded(f"time budget {b.max_ms} ms exhausted")

    def _place(self, v: int, same: int, undo: list) -> bool:
        """Union ``v`` into its same-colored neighbours; False on a cycle."""
        roots = []
        for w in _bits(same):
            rw = self._find(w)
            if rw in roots:
                return False
            roots.append(rw)
        for rw in roots:
            a, b = self._find(v), rw
            if self.rank[a] < self.rank[b]:
                a, b = b, a
            self.parent[b] = a
            bumped = self.rank[a] == self.rank[b]
            if bumped:
                self.rank[a] += 1
            undo.append((b, a, bumped))
        return True

    def _rollback(self, undo: list) -> None:
        for b, a, bumped in reversed(undo):
            self.parent[b] = b
            if bumped:
                self.rank[a] -= 1

    def _feasible(self, red: int, blue: int, free: int) -> bool:
        for cls in (red, blue):
            if cls and _reach(self.adj, cls & -cls, cls | free) & cls != cls:
                return False
        return True

    def run(self, prefix: Sequence[str] = ()) -> Iterator[str]:
        """Yield complete color strings (vertex 0 red) extending ``prefix`` along ``order``."""
        n = self.g.n
        if n == 0:
            return
        colors = [""] * n
        full = (1 << n) - 1
        # explicit stack of (depth, red, blue, choices_left, undo)
        red = blue = 0
        depth = 0
        choices: list[list[str]] = []
        undos: list[list] = []
        stack_masks: list[tuple[int, int]] = []

        def options(d: int) -> list[str]:
            if d < len(prefix):
                return [prefix[d]]
            if d == 0:
                return [RED]
            return [RED, BLUE]

        choices.append(options(0))
        while choices:
            depth = len(choices) - 1
            if not choices[-1]:
                choices.pop()
                if undos:
                    self._rollback(undos.pop())
                    red, blue = stack_masks.pop()
                continue
            k = choices[-1].pop(0)
            v = self.order[depth]
            self._tick()
            bit = 1 << v
            same = self.adj[v] & (red if k == RED else blue)
            undo: list = []
            if not self._place(v, same, undo):
                self._rollback(undo)
                continue
            nred, nblue = (red | bit, blue) if k == RED else (red, blue | bit)
            free = full & ~(nred | nblue)
            if not self._feasible(nred, nblue, free):
                self._rollback(undo)
                continue
            colors[v] = k
            if depth + 1 == n:
                if nblue:
                    yield "".join(colors)
                self._rollback(undo)
                continue
            stack_masks.append((red, blue))
            undos.append(undo)
            red, blue = nred, nblue
            choices.append(options(depth + 1))


def _check_input(g: Graph, budget: Budget | None, cap: int | None) -> None:
    if not is_connected(g):
        raise GraphError("hamiltonian coloring search requires a connected graph")
    cap = solver_cap() if cap is None else cap
    if g.n > cap and budget is None:
        raise GraphError(f"graph has {g.n} vertices, above the solver cap {cap}; pass a budget")


def iter_hamiltonian_colorings(
    g: Graph, budget: Budget | None = None, cap: int | None = None
) -> Iterator[TwoColoring]:
    """Lazily yield hamiltonian colorings with vertex 0 red, in search order.

    Raises :class:`BudgetExceeded` if the budget runs out mid-search.
    """
    _check_input(g, budget, cap)
    for colors in _Search(g, budget).run():
        yield TwoColoring(colors)


def _run_prefix(args: tuple[Graph, tuple[str, ...], Budget | None]) -> tuple[list[str], int]:
    g, prefix, budget = args
    search = _Search(g, budget)
    return list(search.run(prefix)), search.nodes


def enumerate_hamiltonian_colorings(
    g: Graph,
    budget: Budget | None = None,
    cap: int | None = None,
    workers: int = 1,
) -> list[TwoColoring]:
    """All hamiltonian colorings with vertex 0 red, sorted by color string.

    The full count of ordered colorings is twice the length of the result.
    With ``workers > 1`` the first few assignment choices are split across
    processes; the merged result is identical to the sequential one.
    """
    _check_input(g, budget, cap)
    if workers <= 1 or g.n < 8:
        found = list(_Search(g, budget).run())
    else:
        depth = min(g.n - 1, max(1, (workers - 1).bit_length() + 2))
        prefixes = [(RED,) + p for p in itertools.product((RED, BLUE), repeat=depth)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_run_prefix, [(g, p, budget) for p in prefixes])
            found = [c for colors, _ in parts for c in colors]
    return [TwoColoring(c) for c in sorted(found)]


def is_dual_hamiltonian(g: Graph, budget: Budget | None = None, cap: int | None = None) -> SolveResult:
    _check_input(g, budget, cap)
    search = _Search(g, budget)
    start = time.monotonic()
    try:
        for colors in search.run():
            witness = TwoColoring(colors)
            if not is_hamiltonian_coloring(g, witness):
                raise AssertionError(f"solver produced a non-hamiltonian witness {colors}")
            return SolveResult(FOUND, witness, 1, search.nodes, time.monotonic() - start)
    except BudgetExceeded:
        return SolveResult(ABORTED, None, 0, search.nodes, time.monotonic() - start)
    return SolveResult(NONE_EXHAUSTIVE, None, 0, search.nodes, time.monotonic() - start)


# --- quartets ---------------------------------------------------------------------


def find_quartet(g: Graph, c: TwoColoring) -> Quartet | None:
    """First quartet of ``c`` in lexicographic ``(i_red, i_blue, j_red, j_blue)`` order."""
    if not is_hamiltonian_coloring(g, c):
        raise ColoringError("find_quartet requires a hamiltonian coloring")
    adj = g.adj_mask
    red_set = _mask(c.vertices_of(RED))
    blue_set = _mask(c.vertices_of(BLUE))
    reds, blues = sorted(c.vertices_of(RED)), sorted(c.vertices_of(BLUE))

    q2_cache: dict[tuple[int, int], bool] = {}
    q3_cache: dict[tuple[int, int], tuple[tuple[int, int], tuple[int, int]] | None] = {}

    def q2(ir: int, ib: int) -> bool:
        key = (ir, ib)
        if key not in q2_cache:
            swap = (1 << ir) | (1 << ib)
            q2_cache[key] = _mask_is_tree(adj, red_set ^ swap) and _mask_is_tree(adj, blue_set ^ swap)
        return q2_cache[key]

    def q3_split(jr: int, jb: int):
        key = (jr, jb)
        if key not in q3_cache:
            swap = (1 << jr) | (1 << jb)
            parts = []
            for cls in (red_set ^ swap, blue_set ^ swap):
                comps = _mask_components(adj, cls)
                if len(comps) != 2 or _edge_count(adj, cls) != cls.bit_count() - 2:
                    parts = None
                    break
                parts.append(tuple(comps))
            q3_cache[key] = tuple(parts) if parts else None
        return q3_cache[key]

    def splits(comps: tuple[int, int], i_mask: int, j_mask: int) -> bool:
        a, b = comps
        return (
            (a & i_mask and not a & j_mask and b & j_mask and not b & i_mask)
            or (b & i_mask and not b & j_mask and a & j_mask and not a & i_mask)
        )

    for ir in reds:
        for ib in blues:
            if not q2(ir, ib):
                continue
            i_mask = (1 << ir) | (1 << ib)
            for jr in reds:
                if jr == ir:
                    continue
                for jb in blues:
                    if jb == ib:
                        continue
                    split = q3_split(jr, jb)
                    if split is None:
                        continue
                    j_mask = (1 << jr) | (1 << jb)
                    if all(splits(comps, i_mask, j_mask) for comps in split):
                        q = Quartet(ir, ib, jr, jb)
                        if not is_quartet(g, c, q).ok:
                            raise AssertionError(f"quartet search disagrees with the verifier on {q}")
                        return q
    return None


def find_quartet_coloring(g: Graph, budget: Budget | None = None, cap: int | None = None) -> SolveResult:
    """Search hamiltonian colorings until one carries a quartet."""
    _check_input(g, budget, cap)
    search = _Search(g, budget)
    start = time.monotonic()
    seen = 0
    try:
        for colors in search.run():
            seen += 1
            c = TwoColoring(colors)
            q = find_quartet(g, c)
            if q is not None:
                return SolveResult(FOUND, SeedInstance(g, c, q), seen, search.nodes, time.monotonic() - start)
    except BudgetExceeded:
        return SolveResult(ABORTED, None, seen, search.nodes, time.monotonic() - start)
    return SolveResult(NONE_EXHAUSTIVE, None, seen, search.nodes, time.monotonic() - start)


# --- density filter ------------------------------------------------------------


def density_bound_ok(h: int, m: int) -> bool:
    """``m <= h - 2 + h^2/4`` in integers; only meaningful for ``h >= 2``."""
    return 4 * m <= 4 * h - 8 + h * h


def density_check(g: Graph, subset_cap: int = 16) -> frozenset[int] | None:
    """A smallest vertex set whose induced subgraph breaks the density bound, or None.

    Any violation certifies that ``g`` is not dual-hamiltonian.  The bound
    only applies to sets of two or more vertices.  Subsets are scanned
    exhaustively, smallest first, when ``g.n <= subset_cap``; otherwise only
    the whole graph is checked.
    """
    whole = None
    if g.n >= 2 and not density_bound_ok(g.n, g.m):
        whole = frozenset(g.vertices())
    if g.n > subset_cap:
        return whole
    adj = g.adj_mask
    for h in range(2, g.n + 1):
        # h in [2, 4] can never violate, and neither can sizes whose
        # maximum possible edge count fits under the bound
        if density_bound_ok(h, min(h * (h - 1) // 2, g.m)):
            continue
        for combo in itertools.combinations(range(g.n), h):
            s = _mask(combo)
            if not density_bound_ok(h, _edge_count(adj, s)):
                return frozenset(combo)
    return whole


# --- census --------------------------------------------------------------------------


@dataclass
class CensusRow:
    graph_id: str
    n: int
    m: int
    dual_hamiltonian: str
    quartet_coloring: str
    density_violation: tuple[int, ...] | None = None
    hamiltonian_witness: TwoColoring | None = None
    quartet_witness: SeedInstance | None = None
    elapsed: float = field(default=0.0, compare=False)


def _yes_no(result: SolveResult) -> str:
    return {FOUND: "yes", NONE_EXHAUSTIVE: "no", ABORTED: "aborted-budget"}[result.status]


def census(graphs: Iterable[tuple[str, Graph]], budget: Budget | None = None, cap: int | None = None) -> list[CensusRow]:
    """One row per graph: dual-hamiltonian?, has a coloring with a quartet?, witnesses."""
    rows = []
    for graph_id, g in graphs:
        start = time.monotonic()
        violation = density_check(g)
        ham = is_dual_hamiltonian(g, budget, cap)
        if violation is not None and ham.found:
            raise AssertionError(f"{graph_id}: density violation alongside a hamiltonian coloring")
        if ham.found:
            quartet = find_quartet_coloring(g, budget, cap)
            q_status = _yes_no(quartet)
        else:
            quartet = None
            q_status = "no" if ham.status == NONE_EXHAUSTIVE else "aborted-budget"
        rows.append(
            CensusRow(
                graph_id,
                g.n,
                g.m,
                _yes_no(ham),
                q_status,
                tuple(sorted(violation)) if violation is not None else None,
                ham.witness if ham.found else None,
                quartet.witness if quartet is not None and quartet.found else None,
                time.monotonic() - start,
            )
        )
        log.info("census %s: dual-hamiltonian=%s quartet=%s", graph_id, rows[-1].dual_hamiltonian, q_status)
    return rows

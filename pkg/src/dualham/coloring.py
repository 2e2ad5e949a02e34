"""Two-colorings, hamiltonian colorings and bonds, and quartets.

A 2-coloring is hamiltonian when both color classes are nonempty and each
induces a tree.  Its bichromatic edges then form a hamiltonian bond, i.e. a
bond with ``m - n + 2`` edges; :func:`is_hamiltonian_bond` and
:func:`jaeger_check` decide the bond side independently so the two views
can be tested against each other.

A quartet ``(I, J)`` of a hamiltonian coloring ``C`` is a pair of disjoint
2-sets with

* Q1: ``I`` and ``J`` each hold one red and one blue vertex,
* Q2: ``C`` with ``I`` flipped is still hamiltonian,
* Q3: with ``J`` flipped, each color class induces a forest of exactly two
  trees, one meeting ``I`` (and not ``J``) and the other meeting ``J``
  (and not ``I``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ColoringError, GraphError, QuartetError
from .graph import (
    Edge,
    Graph,
    components,
    delete_edges,
    edge_set,
    induced_components,
    induced_edge_count,
    induces_tree,
    is_bond,
    is_connected,
)

RED = "r"
BLUE = "b"
COLORS = (RED, BLUE)


def opposite(k: str) -> str:
    return BLUE if k == RED else RED


@dataclass(frozen=True)
class TwoColoring:
    """Per-vertex colors as a string over ``"r"``/``"b"``, indexed by vertex id."""

    colors: str

    def __post_init__(self) -> None:
        bad = set(self.colors) - set(COLORS)
        if bad:
            raise ColoringError(f"colors must use only 'r' and 'b', found {sorted(bad)}")

    @classmethod
    def from_red(cls, n: int, red: Iterable[int]) -> TwoColoring:
        chars = [BLUE] * n
        for v in red:
            chars[v] = RED
        return cls("".join(chars))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> str:
        return self.colors[v]

    def vertices_of(self, k: str) -> frozenset[int]:
        return frozenset(v for v, ch in enumerate(self.colors) if ch == k)

    def swapped(self) -> TwoColoring:
        return TwoColoring(self.colors.translate(str.maketrans("rb", "br")))


def _check_total(g: Graph, c: TwoColoring) -> None:
    if len(c) != g.n:
        raise ColoringError(f"coloring has {len(c)} entries for a graph on {g.n} vertices")


def _require_connected(g: Graph, what: str) -> None:
    if not is_connected(g):
        raise GraphError(f"{what} requires a connected graph")


def color_class(g: Graph, c: TwoColoring, k: str) -> frozenset[int]:
    _check_total(g, c)
    return c.vertices_of(k)


def flip(c: TwoColoring, x: Iterable[int]) -> TwoColoring:
    """``C Δ X``: swap the colors on exactly the vertices of ``x``."""
    chars = list(c.colors)
    for v in set(x):
        if not 0 <= v < len(chars):
            raise ColoringError(f"vertex {v} out of range for a coloring of size {len(chars)}")
        chars[v] = opposite(chars[v])
    return TwoColoring("".join(chars))


def bichromatic_edges(g: Graph, c: TwoColoring) -> frozenset[Edge]:
    _check_total(g, c)
    return frozenset(e for e in g.edges if c[e[0]] != c[e[1]])


def is_hamiltonian_coloring(g: Graph, c: TwoColoring) -> bool:
    _require_connected(g, "is_hamiltonian_coloring")
    _check_total(g, c)
    return all(induces_tree(g, c.vertices_of(k)) for k in COLORS)


def hamiltonian_bond_size(g: Graph) -> int:
    return g.m - g.n + 2


def is_hamiltonian_bond(g: Graph, b: Iterable[Iterable[int]]) -> bool:
    _require_connected(g, "is_hamiltonian_bond")
    es = edge_set(b)
    return len(es) == hamiltonian_bond_size(g) and is_bond(g, es)


def jaeger_check(g: Graph, b: Iterable[Iterable[int]]) -> bool:
    """``g - b`` has exactly two components and each induces a tree of ``g``."""
    _require_connected(g, "jaeger_check")
    comps = components(delete_edges(g, b))
    return len(comps) == 2 and all(induces_tree(g, comp) for comp in comps)


# --- quartets ----------------------------------------------------------------


@dataclass(frozen=True)
class Quartet:
    """``I = {i_red, i_blue}`` and ``J = {j_red, j_blue}``."""

    i_red: int
    i_blue: int
    j_red: int
    j_blue: int

    @property
    def I(self) -> tuple[int, int]:  # noqa: E743
        return (self.i_red, self.i_blue)

    @property
    def J(self) -> tuple[int, int]:
        return (self.j_red, self.j_blue)

    def members(self) -> tuple[int, int, int, int]:
        return (self.i_red, self.i_blue, self.j_red, self.j_blue)

    def check_structure(self, n: int) -> None:
        for v in self.members():
            if not isinstance(v, int) or not 0 <= v < n:
                raise QuartetError(f"quartet vertex {v!r} out of range [0, {n})")
        if len(set(self.members())) != 4:
            raise QuartetError(f"quartet vertices are not pairwise distinct: {self.members()}")

    def has_q1(self, c: TwoColoring) -> bool:
        """The per-color labelling agrees with ``c``."""
        return (
            c[self.i_red] == RED
            and c[self.i_blue] == BLUE
            and c[self.j_red] == RED
            and c[self.j_blue] == BLUE
        )


@dataclass(frozen=True)
class ComponentWitness:
    vertices: tuple[int, ...]
    meets_i: int
    meets_j: int


@dataclass(frozen=True)
class QuartetReport:
    q1_holds: bool
    q2_holds: bool
    q3_holds: bool
    # color -> components of that class under C Δ J
    q3_witness: dict[str, tuple[ComponentWitness, ...]] | None = None
    # Q3 read with "meets" meaning exactly one vertex instead of at least one
    q3_strict_holds: bool | None = None

    @property
    def ok(self) -> bool:
        return self.q1_holds and self.q2_holds and self.q3_holds

    @property
    def readings_agree(self) -> bool:
        return self.q3_strict_holds is None or self.q3_strict_holds == self.q3_holds


def _split_ok(comps: list[ComponentWitness], strict: bool) -> bool:
    if len(comps) != 2:
        return False

    def meets(count: int) -> bool:
        return count == 1 if strict else count >= 1

    a, b = comps
    return (
        meets(a.meets_i) and a.meets_j == 0 and meets(b.meets_j) and b.meets_i == 0
    ) or (
        meets(b.meets_i) and b.meets_j == 0 and meets(a.meets_j) and a.meets_i == 0
    )


def q3_components(
    g: Graph, c: TwoColoring, q: Quartet
) -> tuple[bool, bool, dict[str, tuple[ComponentWitness, ...]]]:
    """Evaluate Q3; returns ``(holds, strict_holds, witness)``."""
    flipped = flip(c, q.J)
    i_set, j_set = set(q.I), set(q.J)
    holds = strict = True
    witness = {}
    for k in COLORS:
        members = flipped.vertices_of(k)
        comps = induced_components(g, members)
        forest = induced_edge_count(g, members) == len(members) - len(comps)
        infos = [
            ComponentWitness(tuple(sorted(comp)), len(comp & i_set), len(comp & j_set))
            for comp in comps
        ]
        witness[k] = tuple(infos)
        holds = holds and forest and _split_ok(infos, strict=False)
        strict = strict and forest and _split_ok(infos, strict=True)
    return holds, strict, witness


def is_quartet(g: Graph, c: TwoColoring, q: Quartet) -> QuartetReport:
    """Check Q1-Q3 for ``q`` against the hamiltonian coloring ``c`` of ``g``."""
    q.check_structure(g.n)
    if not is_hamiltonian_coloring(g, c):
        raise ColoringError("is_quartet requires a hamiltonian coloring")
    q1 = q.has_q1(c)
    q2 = is_hamiltonian_coloring(g, flip(c, q.I))
    q3, q3_strict, witness = q3_components(g, c, q)
    return QuartetReport(q1, q2, q3, witness, q3_strict)

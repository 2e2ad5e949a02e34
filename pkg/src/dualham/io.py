"""Canonical JSON and edge-list serialization.

All JSON written here uses sorted keys, compact separators, integers only
and a trailing newline, so loading and re-saving a file is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .coloring import Quartet, TwoColoring
from .errors import DualHamError
from .graph import Graph
from .lift import SeedInstance
from .product import ProductIndex

INSTANCE_SCHEMA = "dualham.instance/1"
CENSUS_SCHEMA = "dualham.census/1"
SOLVE_SCHEMA = "dualham.solve/1"


class ParseError(DualHamError, ValueError):
    """A file or document that does not match the expected format."""


def _reject_floats(obj: Any) -> None:
    if isinstance(obj, float):
        raise ValueError("canonical JSON carries integers only")
    if isinstance(obj, dict):
        for v in obj.values():
            _reject_floats(v)
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            _reject_floats(v)


def canonical_json(obj: Any) -> str:
    _reject_floats(obj)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


# --- graphs ----------------------------------------------------------------------


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_dict(doc: Any) -> Graph:
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError('graph JSON needs keys "n" and "edges"')
    n = _int(doc["n"], "n")
    edges = doc["edges"]
    if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
        raise ParseError('"edges" must be a list of [u, v] pairs')
    try:
        return Graph(n, tuple((_int(u, "vertex"), _int(v, "vertex")) for u, v in edges))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def graph_to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def graph_from_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    try:
        if not rows or len(rows[0]) != 2:
            raise ValueError('first line must be "n m"')
        n, m = int(rows[0][0]), int(rows[0][1])
        body = rows[1:]
        if len(body) != m or any(len(r) != 2 for r in body):
            raise ValueError(f"expected {m} lines of 'u v'")
        return Graph(n, tuple((int(u), int(v)) for u, v in body))
    except ValueError as exc:
        raise ParseError(f"bad edge list: {exc}") from exc


def load_graph_text(text: str) -> Graph:
    """Graph from JSON (``{"n": .., "edges": ..}``) or edge-list text."""
    if text.lstrip().startswith("{"):
        return graph_from_dict(parse_json(text))
    return graph_from_edge_list(text)


# --- colorings and quartets --------------------------------------------------------


def coloring_to_dict(c: TwoColoring) -> dict:
    return {"colors": c.colors}


def coloring_from_dict(doc: Any) -> TwoColoring:
    if not isinstance(doc, dict) or not isinstance(doc.get("colors"), str):
        raise ParseError('coloring JSON needs a "colors" string')
    try:
        return TwoColoring(doc["colors"])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


QUARTET_KEYS = ("i_red", "i_blue", "j_red", "j_blue")


def quartet_to_dict(q: Quartet) -> dict:
    return {k: getattr(q, k) for k in QUARTET_KEYS}


def quartet_from_dict(doc: Any) -> Quartet:
    if not isinstance(doc, dict) or any(k not in doc for k in QUARTET_KEYS):
        raise ParseError(f"quartet JSON needs keys {', '.join(QUARTET_KEYS)}")
    return Quartet(*(_int(doc[k], k) for k in QUARTET_KEYS))


# --- instance documents ------------------------------------------------------------


@dataclass(frozen=True)
class InstanceDocument:
    """A graph, coloring and quartet as stored on disk, plus how they were made.

    Loading does not verify anything; :meth:`to_seed` does.
    """

    graph: Graph
    coloring: TwoColoring
    quartet: Quartet
    provenance: tuple = field(default=())
    product: ProductIndex | None = None

    @classmethod
    def from_seed(cls, seed: SeedInstance, provenance=(), product: ProductIndex | None = None):
        return cls(seed.graph, seed.coloring, seed.quartet, tuple(provenance), product)

    def to_seed(self) -> SeedInstance:
        return SeedInstance(self.graph, self.coloring, self.quartet)

    def to_dict(self) -> dict:
        doc = {
            "schema": INSTANCE_SCHEMA,
            "graph": graph_to_dict(self.graph),
            "coloring": coloring_to_dict(self.coloring),
            "quartet": quartet_to_dict(self.quartet),
            "provenance": [dict(p) for p in self.provenance],
        }
        if self.product is not None:
            doc["product"] = {"g_size": self.product.g_size, "h_size": self.product.h_size}
        return doc

    @classmethod
    def from_dict(cls, doc: Any) -> InstanceDocument:
        if not isinstance(doc, dict):
            raise ParseError("instance document must be a JSON object")
        if doc.get("schema") != INSTANCE_SCHEMA:
            raise ParseError(f"unsupported schema {doc.get('schema')!r}, expected {INSTANCE_SCHEMA}")
        for key in ("graph", "coloring", "quartet"):
            if key not in doc:
                raise ParseError(f"instance document lacks {key!r}")
        provenance = doc.get("provenance", [])
        if not isinstance(provenance, list) or not all(isinstance(p, dict) for p in provenance):
            raise ParseError('"provenance" must be a list of objects')
        product = None
        if "product" in doc:
            p = doc["product"]
            if not isinstance(p, dict):
                raise ParseError('"product" must be an object')
            product = ProductIndex(_int(p.get("g_size"), "g_size"), _int(p.get("h_size"), "h_size"))
        inst = cls(
            graph_from_dict(doc["graph"]),
            coloring_from_dict(doc["coloring"]),
            quartet_from_dict(doc["quartet"]),
            tuple(provenance),
            product,
        )
        if product is not None and product.size != inst.graph.n:
            raise ParseError("product sizes do not match the graph")
        return inst

    def dumps(self) -> str:
        return canonical_json(self.to_dict())

    @classmethod
    def loads(cls, text: str) -> InstanceDocument:
        return cls.from_dict(parse_json(text))


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc

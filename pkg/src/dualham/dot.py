"""Graphviz DOT export for colored instances.

Red vertices are drawn gray and blue vertices black.  Monochromatic edges
are thick in their class color, bichromatic edges dotted, so the two trees
stand out and the dotted edges are exactly the hamiltonian bond.
"""

from __future__ import annotations

from .coloring import RED, Quartet, TwoColoring
from .graph import Graph
from .product import ProductIndex

FILL = {RED: "gray", "b": "black"}
FONT = {RED: "black", "b": "white"}


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def to_dot(
    g: Graph,
    c: TwoColoring,
    quartet: Quartet | None = None,
    product: ProductIndex | None = None,
    clusters: bool = True,
    labels: bool = True,
    name: str = "instance",
) -> str:
    def node(v: int) -> str:
        return product.label(v) if product is not None else str(v)

    roles = {}
    if quartet is not None and labels:
        roles = {getattr(quartet, k): k for k in ("i_red", "i_blue", "j_red", "j_blue")}

    def node_line(v: int) -> str:
        label = roles.get(v, node(v))
        return (
            f"{_quote(node(v))} [fillcolor={FILL[c[v]]}, fontcolor={FONT[c[v]]}, "
            f"label={_quote(label)}];"
        )

    out = [f"graph {name} {{", "  node [shape=circle, style=filled, fontsize=10];"]
    if product is not None and clusters:
        for x in range(product.h_size):
            out.append(f"  subgraph cluster_{x} {{")
            out.append(f'    label="x={x}";')
            for v in range(x * product.g_size, (x + 1) * product.g_size):
                out.append("    " + node_line(v))
            out.append("  }")
    else:
        out.extend("  " + node_line(v) for v in range(g.n))
    for u, v in g.edges:
        if c[u] == c[v]:
            style = f"color={FILL[c[u]]}, penwidth=3"
        else:
            style = "style=dotted"
        out.append(f"  {_quote(node(u))} -- {_quote(node(v))} [{style}];")
    out.append("}")
    return "\n".join(out) + "\n"

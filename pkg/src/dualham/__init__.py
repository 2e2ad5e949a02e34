"""Construct and verify dual-hamiltonian graphs.

A connected graph is dual-hamiltonian when its vertices can be 2-colored so
that each color class induces a tree (a *hamiltonian coloring*).  This
package verifies such colorings from both the coloring and the bond side,
lifts colorings that carry a *quartet* from ``G`` to ``G x T`` for any tree
``T``, ships the classical seed instances, and includes an exhaustive
solver used as an independent oracle.
"""

from .coloring import (
    BLUE,
    RED,
    Quartet,
    QuartetReport,
    TwoColoring,
    bichromatic_edges,
    color_class,
    flip,
    is_hamiltonian_bond,
    is_hamiltonian_coloring,
    is_quartet,
    jaeger_check,
)
from .errors import (
    ColoringError,
    DualHamError,
    GraphError,
    LiftError,
    QuartetError,
    VerificationError,
)
from .graph import (
    Graph,
    Tree,
    bfs_tree,
    bridges,
    components,
    delete_edges,
    induced_subgraph,
    is_bond,
    is_connected,
    is_forest,
    is_tree,
    leaves,
    new_graph,
)
from .lift import InvalidSeed, SeedInstance, check_claim1, check_claim2, lift, lift_chain, lift_trace
from .product import ProductGraph, ProductIndex, cartesian_product, fiber_vertices

__version__ = "0.1.0"

__all__ = [
    "bfs_tree",
    "bichromatic_edges",
    "BLUE",
    "bridges",
    "cartesian_product",
    "check_claim1",
    "check_claim2",
    "color_class",
    "ColoringError",
    "components",
    "delete_edges",
    "DualHamError",
    "fiber_vertices",
    "flip",
    "Graph",
    "GraphError",
    "induced_subgraph",
    "InvalidSeed",
    "is_bond",
    "is_connected",
    "is_forest",
    "is_hamiltonian_bond",
    "is_hamiltonian_coloring",
    "is_quartet",
    "is_tree",
    "jaeger_check",
    "leaves",
    "lift",
    "lift_chain",
    "lift_trace",
    "LiftError",
    "new_graph",
    "ProductGraph",
    "ProductIndex",
    "Quartet",
    "QuartetError",
    "QuartetReport",
    "RED",
    "SeedInstance",
    "Tree",
    "TwoColoring",
    "VerificationError",
]
